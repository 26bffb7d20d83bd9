#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta) for zeta a primitive
// root of unity of even order 2M, with the distinguished embedding
// zeta -> exp(i*pi/M).  The deformation parameter q is zeta itself, so
// q = exp(i*pi/M) and q^M = -1.  Scalars are rational coefficient vectors
// in the power basis of zeta, always reduced to canonical form modulo the
// cyclotomic polynomial, so equality is coefficient-vector equality and
// zero tests are exact.

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qads/errors.hpp"
#include "qads/rational.hpp"

namespace qads {

namespace detail {

// Minimal RAII wrapper around one mpfr value.
class MpfrReal {
public:
    explicit MpfrReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    ~MpfrReal() { mpfr_clear(v_); }
    MpfrReal(const MpfrReal&) = delete;
    MpfrReal& operator=(const MpfrReal&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

// Exact division of integer polynomials, requiring a monic divisor and a
// zero remainder.  Coefficient order: c[k] multiplies x^k.
inline std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const long dn = static_cast<long>(num.size()) - 1;
    const long dd = static_cast<long>(den.size()) - 1;
    std::vector<BigInt> quot(static_cast<size_t>(dn - dd + 1), BigInt(0));
    for (long k = dn; k >= dd; --k) {
        BigInt c = num[static_cast<size_t>(k)];
        if (c == 0) continue;
        quot[static_cast<size_t>(k - dd)] = c;
        for (long j = 0; j <= dd; ++j) {
            num[static_cast<size_t>(k - dd + j)] -= c * den[static_cast<size_t>(j)];
        }
    }
    for (const BigInt& c : num) {
        if (c != 0) throw ConstructionError("cyclotomic polynomial division left a remainder");
    }
    return quot;
}

// n-th cyclotomic polynomial via Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
inline std::vector<BigInt> cyclotomic_poly(long n, std::map<long, std::vector<BigInt>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> result(static_cast<size_t>(n) + 1, BigInt(0));
    result[0] = -1;
    result[static_cast<size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        result = poly_div_exact(std::move(result), cyclotomic_poly(d, cache));
    }
    cache.emplace(n, result);
    return result;
}

} // namespace detail

class CycloScalar;

/// The cyclotomic field containing q = exp(i*pi/M); immutable and freely
/// shareable between threads once constructed.
class CycloField : public std::enable_shared_from_this<CycloField> {
public:
    static std::shared_ptr<const CycloField> make(long M) {
        if (M < 2) throw ParameterError("root order parameter M must be >= 2");
        return std::shared_ptr<const CycloField>(new CycloField(M));
    }

    long M() const { return M_; }
    long conductor() const { return conductor_; }
    long degree() const { return degree_; }

    /// Minimal polynomial of the generator (monic, integer coefficients).
    const std::vector<BigInt>& minimal_polynomial() const { return phi_; }

    /// zeta^k in canonical form, for any integer k (reduced mod 2M).
    const std::vector<Rational>& zeta_power(long k) const {
        long r = k % conductor_;
        if (r < 0) r += conductor_;
        return zeta_pow_[static_cast<size_t>(r)];
    }

    /// Canonical form of an arbitrary polynomial in zeta.
    std::vector<Rational> reduce(const std::vector<Rational>& raw) const {
        std::vector<Rational> folded(static_cast<size_t>(conductor_), Rational(0));
        for (long k = 0; k < static_cast<long>(raw.size()); ++k) {
            if (raw[static_cast<size_t>(k)] == 0) continue;
            folded[static_cast<size_t>(k % conductor_)] += raw[static_cast<size_t>(k)];
        }
        std::vector<Rational> out(static_cast<size_t>(degree_), Rational(0));
        for (long k = 0; k < conductor_; ++k) {
            const Rational& c = folded[static_cast<size_t>(k)];
            if (c == 0) continue;
            if (k < degree_) {
                out[static_cast<size_t>(k)] += c;
            } else {
                const std::vector<Rational>& row = zeta_pow_[static_cast<size_t>(k)];
                for (long j = 0; j < degree_; ++j) out[static_cast<size_t>(j)] += c * row[static_cast<size_t>(j)];
            }
        }
        return out;
    }

    CycloScalar zero() const;
    CycloScalar one() const;
    CycloScalar from_rational(const Rational& r) const;
    CycloScalar from_int(long v) const;
    /// q = zeta = exp(i*pi/M).
    CycloScalar q() const;
    /// q^k for any integer k.
    CycloScalar q_pow(long k) const;
    /// The q-number [n]_q = (q^n - q^-n)/(q - q^-1), exact.
    CycloScalar qnum(long n) const;
    /// [n] in the base q^d (the q_i-numbers of a symmetrized Cartan datum).
    CycloScalar qnum_base(long n, long d) const;

private:
    explicit CycloField(long M) : M_(M), conductor_(2 * M) {
        std::map<long, std::vector<BigInt>> cache;
        phi_ = detail::cyclotomic_poly(conductor_, cache);
        degree_ = static_cast<long>(phi_.size()) - 1;

        // zeta^k canonical for all k < 2M, built iteratively: each next power
        // is a shift, with the overflow term rewritten via the minimal polynomial.
        std::vector<Rational> top(static_cast<size_t>(degree_));
        for (long j = 0; j < degree_; ++j) top[static_cast<size_t>(j)] = Rational(-phi_[static_cast<size_t>(j)]);

        zeta_pow_.resize(static_cast<size_t>(conductor_));
        std::vector<Rational> cur(static_cast<size_t>(degree_), Rational(0));
        cur[0] = 1;
        zeta_pow_[0] = cur;
        for (long k = 1; k < conductor_; ++k) {
            std::vector<Rational> next(static_cast<size_t>(degree_), Rational(0));
            Rational overflow = cur[static_cast<size_t>(degree_ - 1)];
            for (long j = degree_ - 1; j >= 1; --j) next[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
            if (overflow != 0)
                for (long j = 0; j < degree_; ++j) next[static_cast<size_t>(j)] += overflow * top[static_cast<size_t>(j)];
            zeta_pow_[static_cast<size_t>(k)] = next;
            cur = std::move(next);
        }
    }

    long M_;
    long conductor_;
    long degree_;
    std::vector<BigInt> phi_;
    std::vector<std::vector<Rational>> zeta_pow_; // zeta^k canonical, k = 0..2M-1
};

using FieldPtr = std::shared_ptr<const CycloField>;

/// One exact element of the cyclotomic field.  Value semantics, canonical
/// form maintained by every operation.
class CycloScalar {
public:
    CycloScalar() = default; // null placeholder; any arithmetic use throws

    CycloScalar(FieldPtr f, std::vector<Rational> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
        if (static_cast<long>(c_.size()) != field_->degree())
            throw ConstructionError("coefficient vector has wrong length");
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_null() const { return field_ == nullptr; }

    bool is_zero() const {
        require();
        for (const Rational& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_rational() const {
        require();
        for (size_t j = 1; j < c_.size(); ++j)
            if (c_[j] != 0) return false;
        return true;
    }

    Rational rational_value() const {
        if (!is_rational()) throw DomainError("scalar is not rational");
        return c_.empty() ? Rational(0) : c_[0];
    }

    friend bool operator==(const CycloScalar& a, const CycloScalar& b) {
        a.require(); b.require();
        a.check_same_field(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

    CycloScalar operator-() const {
        require();
        std::vector<Rational> r(c_.size());
        for (size_t j = 0; j < c_.size(); ++j) r[j] = -c_[j];
        return CycloScalar(field_, std::move(r));
    }

    friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
        a.require(); b.require();
        a.check_same_field(b);
        std::vector<Rational> r(a.c_.size());
        for (size_t j = 0; j < r.size(); ++j) r[j] = a.c_[j] + b.c_[j];
        return CycloScalar(a.field_, std::move(r));
    }

    friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) {
        a.require(); b.require();
        a.check_same_field(b);
        std::vector<Rational> r(a.c_.size());
        for (size_t j = 0; j < r.size(); ++j) r[j] = a.c_[j] - b.c_[j];
        return CycloScalar(a.field_, std::move(r));
    }

    CycloScalar& operator+=(const CycloScalar& b) {
        require(); b.require();
        check_same_field(b);
        for (size_t j = 0; j < c_.size(); ++j) c_[j] += b.c_[j];
        return *this;
    }

    CycloScalar& operator-=(const CycloScalar& b) {
        require(); b.require();
        check_same_field(b);
        for (size_t j = 0; j < c_.size(); ++j) c_[j] -= b.c_[j];
        return *this;
    }

    friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
        a.require(); b.require();
        a.check_same_field(b);
        const long deg = a.field_->degree();
        std::vector<Rational> conv(static_cast<size_t>(2 * deg - 1), Rational(0));
        for (long i = 0; i < deg; ++i) {
            if (a.c_[static_cast<size_t>(i)] == 0) continue;
            for (long j = 0; j < deg; ++j) {
                if (b.c_[static_cast<size_t>(j)] == 0) continue;
                conv[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
            }
        }
        return CycloScalar(a.field_, a.field_->reduce(conv));
    }

    CycloScalar& operator*=(const CycloScalar& b) { *this = *this * b; return *this; }

    friend CycloScalar operator*(const Rational& r, const CycloScalar& a) {
        a.require();
        std::vector<Rational> v(a.c_.size());
        for (size_t j = 0; j < v.size(); ++j) v[j] = r * a.c_[j];
        return CycloScalar(a.field_, std::move(v));
    }

    /// Complex conjugation: zeta -> zeta^{-1}, extended antilinearly over Q.
    CycloScalar conj() const {
        require();
        const long n = field_->conductor();
        std::vector<Rational> r(c_.size(), Rational(0));
        for (long k = 0; k < static_cast<long>(c_.size()); ++k) {
            if (c_[static_cast<size_t>(k)] == 0) continue;
            const std::vector<Rational>& p = field_->zeta_power((n - k) % n);
            for (size_t j = 0; j < r.size(); ++j) r[j] += c_[static_cast<size_t>(k)] * p[j];
        }
        return CycloScalar(field_, std::move(r));
    }

    bool is_real() const { return *this == conj(); }

    /// Multiplicative inverse (extended Euclid modulo the cyclotomic polynomial).
    CycloScalar inverse() const {
        require();
        if (is_zero()) throw DomainError("division by zero in cyclotomic field");
        if (is_rational()) {
            std::vector<Rational> r(c_.size(), Rational(0));
            r[0] = Rational(1) / c_[0];
            return CycloScalar(field_, std::move(r));
        }
        using Poly = std::vector<Rational>;
        auto deg_of = [](const Poly& p) -> long {
            for (long k = static_cast<long>(p.size()) - 1; k >= 0; --k)
                if (p[static_cast<size_t>(k)] != 0) return k;
            return -1;
        };
        Poly a(field_->minimal_polynomial().size());
        for (size_t j = 0; j < a.size(); ++j) a[j] = Rational(field_->minimal_polynomial()[j]);
        Poly b = c_;
        Poly sa(1, Rational(0)), sb(1, Rational(1)); // Bezout coefficients w.r.t. this
        while (true) {
            long db = deg_of(b);
            if (db < 0) throw ConstructionError("gcd degenerated during inversion");
            if (db == 0) break;
            long da = deg_of(a);
            if (da < db) { std::swap(a, b); std::swap(sa, sb); continue; }
            Rational f = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
            long shift = da - db;
            for (long j = 0; j <= db; ++j)
                a[static_cast<size_t>(j + shift)] -= f * b[static_cast<size_t>(j)];
            if (sa.size() < sb.size() + static_cast<size_t>(shift))
                sa.resize(sb.size() + static_cast<size_t>(shift), Rational(0));
            for (size_t j = 0; j < sb.size(); ++j)
                sa[j + static_cast<size_t>(shift)] -= f * sb[j];
        }
        Rational lead = b[0];
        std::vector<Rational> full(sb.size(), Rational(0));
        for (size_t j = 0; j < sb.size(); ++j) full[j] = sb[j] / lead;
        CycloScalar result(field_, field_->reduce(full));
        if (!((*this * result) == field_->one()))
            throw ConstructionError("inverse verification failed");
        return result;
    }

    friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inverse(); }

    /// Certified sign of a real element under the distinguished embedding.
    /// Exact zero test first, then interval evaluation with doubling
    /// precision (64 bits up to the cap).
    int sign_of_real(long precision_cap = 4096) const {
        require();
        if (!is_real()) throw DomainError("sign_of_real: element is not in the real subfield");
        if (is_zero()) return 0;
        for (long prec = 64; prec <= precision_cap; prec *= 2) {
            int s = interval_sign(prec);
            if (s != 0) return s;
        }
        throw PrecisionError("sign certification failed at precision cap " + std::to_string(precision_cap) + " bits");
    }

    /// Plain high-precision evaluation of the embedding (not certified).
    std::pair<double, double> to_complex_double() const {
        require();
        detail::MpfrReal re(128), im(128);
        eval_embedding(re.get(), im.get());
        return {mpfr_get_d(re.get(), MPFR_RNDN), mpfr_get_d(im.get(), MPFR_RNDN)};
    }

    /// Sign of the real part of a floating evaluation at the requested
    /// number of decimal digits (used to cross-check certified signs).
    int float_sign(long decimal_digits) const {
        require();
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(static_cast<double>(decimal_digits) * 3.33) + 32;
        detail::MpfrReal re(prec), im(prec);
        eval_embedding(re.get(), im.get());
        return mpfr_sgn(re.get());
    }

    /// Decimal approximation with the given number of significant digits,
    /// rendered as "re" for real values and "re+im i" otherwise.
    std::string approx_string(int digits = 20) const {
        require();
        detail::MpfrReal re(256), im(256);
        eval_embedding(re.get(), im.get());
        char buf[160];
        mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, re.get());
        std::string s(buf);
        if (!is_real()) {
            mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, im.get());
            std::string t(buf);
            if (!t.empty() && t[0] != '-') s += "+";
            s += t + "i";
        }
        return s;
    }

private:
    void require() const {
        if (!field_) throw ConstructionError("use of an uninitialized scalar");
    }

    void check_same_field(const CycloScalar& other) const {
        if (field_.get() != other.field_.get() && field_->conductor() != other.field_->conductor())
            throw DomainError("scalars belong to different cyclotomic fields");
    }

    // Evaluates sum_k c_k * exp(2*pi*i*k/n) with round-to-nearest arithmetic.
    void eval_embedding(mpfr_ptr re, mpfr_ptr im) const {
        const long n = field_->conductor();
        mpfr_prec_t prec = mpfr_get_prec(re);
        detail::MpfrReal pi(prec), theta(prec), t(prec), coeff(prec);
        mpfr_const_pi(pi.get(), MPFR_RNDN);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
        for (long k = 0; k < static_cast<long>(c_.size()); ++k) {
            const Rational& ck = c_[static_cast<size_t>(k)];
            if (ck == 0) continue;
            mpfr_mul_si(theta.get(), pi.get(), 2 * k, MPFR_RNDN);
            mpfr_div_si(theta.get(), theta.get(), n, MPFR_RNDN);
            mpfr_set_q(coeff.get(), ck.backend().data(), MPFR_RNDN);
            mpfr_cos(t.get(), theta.get(), MPFR_RNDN);
            mpfr_mul(t.get(), t.get(), coeff.get(), MPFR_RNDN);
            mpfr_add(re, re, t.get(), MPFR_RNDN);
            mpfr_sin(t.get(), theta.get(), MPFR_RNDN);
            mpfr_mul(t.get(), t.get(), coeff.get(), MPFR_RNDN);
            mpfr_add(im, im, t.get(), MPFR_RNDN);
        }
    }

    // Rigorous interval evaluation of the real part at the given precision.
    // Returns +1/-1 when the interval excludes zero, 0 when undecided.
    int interval_sign(mpfr_prec_t prec) const {
        const long n = field_->conductor();
        detail::MpfrReal pi_lo(prec), pi_hi(prec);
        mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
        mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
        detail::MpfrReal lo(prec), hi(prec);
        detail::MpfrReal th_lo(prec), th_hi(prec), width(prec), c_lo(prec), c_hi(prec), t(prec);
        for (long k = 0; k < static_cast<long>(c_.size()); ++k) {
            const Rational& ck = c_[static_cast<size_t>(k)];
            if (ck == 0) continue;
            // theta = 2*pi*k/n with k >= 0, bracketed from both sides
            mpfr_mul_si(th_lo.get(), pi_lo.get(), 2 * k, MPFR_RNDD);
            mpfr_div_si(th_lo.get(), th_lo.get(), n, MPFR_RNDD);
            mpfr_mul_si(th_hi.get(), pi_hi.get(), 2 * k, MPFR_RNDU);
            mpfr_div_si(th_hi.get(), th_hi.get(), n, MPFR_RNDU);
            mpfr_sub(width.get(), th_hi.get(), th_lo.get(), MPFR_RNDU);
            // |cos t - cos th_lo| <= |t - th_lo| <= width on the bracket
            mpfr_cos(c_lo.get(), th_lo.get(), MPFR_RNDD);
            mpfr_sub(c_lo.get(), c_lo.get(), width.get(), MPFR_RNDD);
            mpfr_cos(c_hi.get(), th_lo.get(), MPFR_RNDU);
            mpfr_add(c_hi.get(), c_hi.get(), width.get(), MPFR_RNDU);
            if (ck > 0) {
                mpfr_mul_q(t.get(), c_lo.get(), ck.backend().data(), MPFR_RNDD);
                mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
                mpfr_mul_q(t.get(), c_hi.get(), ck.backend().data(), MPFR_RNDU);
                mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
            } else {
                mpfr_mul_q(t.get(), c_hi.get(), ck.backend().data(), MPFR_RNDD);
                mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
                mpfr_mul_q(t.get(), c_lo.get(), ck.backend().data(), MPFR_RNDU);
                mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
            }
        }
        if (mpfr_sgn(lo.get()) > 0) return 1;
        if (mpfr_sgn(hi.get()) < 0) return -1;
        return 0;
    }

    FieldPtr field_;
    std::vector<Rational> c_;
};

inline CycloScalar CycloField::zero() const {
    return CycloScalar(shared_from_this(), std::vector<Rational>(static_cast<size_t>(degree_), Rational(0)));
}

inline CycloScalar CycloField::one() const { return from_rational(Rational(1)); }

inline CycloScalar CycloField::from_rational(const Rational& r) const {
    std::vector<Rational> v(static_cast<size_t>(degree_), Rational(0));
    v[0] = r;
    return CycloScalar(shared_from_this(), std::move(v));
}

inline CycloScalar CycloField::from_int(long x) const { return from_rational(Rational(x)); }

inline CycloScalar CycloField::q() const { return q_pow(1); }

inline CycloScalar CycloField::q_pow(long k) const {
    return CycloScalar(shared_from_this(), zeta_power(k));
}

inline CycloScalar CycloField::qnum(long n) const { return qnum_base(n, 1); }

inline CycloScalar CycloField::qnum_base(long n, long d) const {
    if (n == 0) return zero();
    if (n < 0) return -qnum_base(-n, d);
    CycloScalar s = zero();
    for (long j = 0; j < n; ++j) s += q_pow(d * (n - 1 - 2 * j));
    return s;
}

/// Free-function spellings used throughout the library.
inline CycloScalar conj(const CycloScalar& x) { return x.conj(); }
inline int sign_of_real(const CycloScalar& x, long precision_cap = 4096) { return x.sign_of_real(precision_cap); }

} // namespace qads
