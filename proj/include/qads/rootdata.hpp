#pragma once

// Lie-theoretic data for so(N), N = D+1 (type B for N odd, type D for N even),
// together with the model parameters derived from the root order M: the
// effective order M_S = M/d_S, the window bound k_S = M_S - (D-2)/2, and the
// two unitarity windows.  Simple roots follow the epsilon-ordered convention
// alpha_1 = eps_1 - eps_2, chain continuing in epsilon order, with the last
// root eps_r (type B) or eps_{r-1} + eps_r (type D).
//
// The bilinear form on the weight lattice is normalized so that every
// symmetrizer d_i is an integer: (eps_i, eps_j) = 2 delta_ij for type B
// (short roots get d = 1, long roots d = 2) and (eps_i, eps_j) = delta_ij
// for type D (all d = 1).  With this normalization all representation
// matrices live in the conductor-2M cyclotomic field.

#include <string>
#include <vector>

#include "qads/errors.hpp"
#include "qads/rational.hpp"

namespace qads {

/// Weight in epsilon-coordinates (length = rank).
using Weight = std::vector<long>;

struct ModelParams {
    long D = 0;      // spacetime dimension
    long N = 0;      // D + 1
    long M = 0;      // root order, q = exp(i*pi/M)
    int d_S = 0;     // 2 if D even, 1 if D odd
    long M_S = 0;    // M / d_S
    Rational k_S;    // M_S - (D-2)/2
    Rational R_sq;   // sphere radius squared
    std::vector<long> compact_window; // { n : 0 <= n < k_S }
    std::vector<long> ads_window;     // { n : M_S <= n < M_S + k_S }
};

inline ModelParams build_params(long D, long M, const Rational& R_sq = Rational(1)) {
    if (D < 2) throw ParameterError("D must be >= 2");
    if (M < 2) throw ParameterError("M must be >= 2");
    if (D % 2 == 0 && M % 2 != 0)
        throw ParameterError("D even requires M even (M_S = M/2 must be an integer)");
    const long N = D + 1;
    if (M < N)
        throw ParameterError("M must be >= N = D+1; smaller M risks a collision of the three "
                             "braid eigenvalues and a degenerate projector triple");
    if (R_sq <= 0) throw ParameterError("R_sq must be positive");

    ModelParams p;
    p.D = D;
    p.N = N;
    p.M = M;
    p.d_S = (D % 2 == 0) ? 2 : 1;
    p.M_S = M / p.d_S;
    p.k_S = Rational(p.M_S) - Rational(D - 2, 2);
    p.R_sq = R_sq;
    for (long n = 0; Rational(n) < p.k_S; ++n) p.compact_window.push_back(n);
    for (long n = p.M_S; Rational(n) < Rational(p.M_S) + p.k_S; ++n) p.ads_window.push_back(n);
    return p;
}

struct RootSystem {
    long D = 0;
    long N = 0;
    long rank = 0;
    char type_tag = '?';                    // 'B' (N odd) or 'D' (N even)
    long eps_norm = 1;                      // (eps_i, eps_i)
    std::vector<Weight> simple_roots;       // epsilon-coordinates
    std::vector<std::vector<long>> cartan;  // a_ij
    std::vector<long> d;                    // symmetrizers, d_i a_ij symmetric
    std::vector<Rational> rho;              // half-sum of positive roots, epsilon-coordinates
    std::vector<int> signs;                 // s_i = (-1)^(energy of alpha_i)

    /// Bilinear form on epsilon-coordinates.
    long ip(const Weight& a, const Weight& b) const {
        long s = 0;
        for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
        return eps_norm * s;
    }

    /// The energy functional: epsilon_1-coefficient of a weight.
    static long energy(const Weight& w) { return w.empty() ? 0 : w[0]; }
};

inline RootSystem build_root_system(long D) {
    if (D < 2) throw ParameterError("D must be >= 2");
    RootSystem rs;
    rs.D = D;
    rs.N = D + 1;
    const long N = rs.N;
    if (N % 2 == 1) {
        rs.type_tag = 'B';
        rs.rank = (N - 1) / 2;
        rs.eps_norm = 2;
    } else {
        rs.type_tag = 'D';
        rs.rank = N / 2;
        rs.eps_norm = 1;
    }
    const long r = rs.rank;
    auto eps = [r](long k) { Weight w(static_cast<size_t>(r), 0); w[static_cast<size_t>(k - 1)] = 1; return w; };
    auto sub = [](Weight a, const Weight& b) { for (size_t k = 0; k < a.size(); ++k) a[k] -= b[k]; return a; };
    auto add = [](Weight a, const Weight& b) { for (size_t k = 0; k < a.size(); ++k) a[k] += b[k]; return a; };

    for (long i = 1; i < r; ++i) rs.simple_roots.push_back(sub(eps(i), eps(i + 1)));
    if (rs.type_tag == 'B') {
        rs.simple_roots.push_back(eps(r));
    } else {
        rs.simple_roots.push_back(r >= 2 ? add(eps(r - 1), eps(r)) : eps(1));
    }

    rs.cartan.assign(static_cast<size_t>(r), std::vector<long>(static_cast<size_t>(r), 0));
    rs.d.resize(static_cast<size_t>(r));
    for (long i = 0; i < r; ++i) {
        long norm_i = rs.ip(rs.simple_roots[static_cast<size_t>(i)], rs.simple_roots[static_cast<size_t>(i)]);
        rs.d[static_cast<size_t>(i)] = norm_i / 2;
        for (long j = 0; j < r; ++j) {
            long num = 2 * rs.ip(rs.simple_roots[static_cast<size_t>(i)], rs.simple_roots[static_cast<size_t>(j)]);
            if (num % norm_i != 0) throw ConstructionError("non-integral Cartan entry");
            rs.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)] = num / norm_i;
        }
    }

    for (long k = 1; k <= r; ++k) rs.rho.push_back(Rational(N - 2 * k, 2));

    for (long i = 0; i < r; ++i) {
        long e = RootSystem::energy(rs.simple_roots[static_cast<size_t>(i)]);
        rs.signs.push_back((e % 2 == 0) ? 1 : -1);
    }
    return rs;
}

/// The reality-condition signs s_i of the noncompact form: s_i = -1 exactly
/// for simple roots with odd epsilon_1-coefficient.
inline std::vector<int> compute_signs(const RootSystem& rs) { return rs.signs; }

/// Weights of the N-dimensional vector representation in the basis order
/// eps_1, ..., eps_r, [0 if N odd], -eps_r, ..., -eps_1.
inline std::vector<Weight> vector_rep_weights(const RootSystem& rs) {
    std::vector<Weight> w;
    const long r = rs.rank;
    for (long k = 1; k <= r; ++k) {
        Weight v(static_cast<size_t>(r), 0);
        v[static_cast<size_t>(k - 1)] = 1;
        w.push_back(v);
    }
    if (rs.N % 2 == 1) w.push_back(Weight(static_cast<size_t>(r), 0));
    for (long k = r; k >= 1; --k) {
        Weight v(static_cast<size_t>(r), 0);
        v[static_cast<size_t>(k - 1)] = -1;
        w.push_back(v);
    }
    return w;
}

} // namespace qads
