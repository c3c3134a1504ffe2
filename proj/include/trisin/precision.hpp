#ifndef TRISIN_PRECISION_HPP
#define TRISIN_PRECISION_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "trisin/errors.hpp"

namespace trisin {

// Requested precision plus working guard digits. All arithmetic runs at
// decimal_digits + guard_digits; results are meaningful to decimal_digits.
struct PrecisionContext {
    int decimal_digits = 30;
    int guard_digits = 10;

    static constexpr int kMinDigits = 15;
    static constexpr long kMaxDigits = 100000;

    PrecisionContext() = default;
    explicit PrecisionContext(int digits, int guard = 10)
        : decimal_digits(digits), guard_digits(guard) {
        if (digits < kMinDigits)
            throw DomainError("PrecisionContext: decimal_digits must be >= 15");
        if (guard < 0)
            throw DomainError("PrecisionContext: guard_digits must be >= 0");
        if (digits + guard > kMaxDigits)
            throw PrecisionOverflow("PrecisionContext", digits + guard, kMaxDigits);
    }

    int effective() const { return decimal_digits + guard_digits; }
};

namespace detail {
// log2(10) rounded up a hair; +8 bits of slack beyond the guard digits.
inline mpfr_prec_t bits_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 8.0) + 1;
}
} // namespace detail

// Arbitrary-precision real. The precision tag is the requested decimal digit
// count; the underlying mpfr value carries 10 extra guard digits. Mixed-tag
// arithmetic produces the lower tag.
class BigReal {
public:
    static constexpr int kGuardDigits = 10;

    BigReal() : BigReal(30) {}
    explicit BigReal(int digits) : digits_(check(digits)) {
        mpfr_init2(v_, prec_bits());
        mpfr_set_zero(v_, 1);
    }
    BigReal(double x, int digits) : digits_(check(digits)) {
        mpfr_init2(v_, prec_bits());
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    BigReal(long x, int digits) : digits_(check(digits)) {
        mpfr_init2(v_, prec_bits());
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    BigReal(const std::string& s, int digits) : digits_(check(digits)) {
        mpfr_init2(v_, prec_bits());
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw DomainError("BigReal: cannot parse \"" + s + "\"");
    }

    BigReal(const BigReal& o) : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept : digits_(o.digits_) {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            digits_ = o.digits_;
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) {
            digits_ = o.digits_;
            mpfr_swap(v_, o.v_);
        }
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    int digits() const { return digits_; }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    // Re-round a value to a (usually lower) precision tag.
    BigReal round_to(int digits) const {
        BigReal r(digits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    std::string to_string(int significant = 0) const {
        if (significant <= 0) significant = digits_;
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", significant, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }

    // ---- in-place ops (keep own precision tag) ----
    BigReal& operator+=(const BigReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator/=(const BigReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
    BigReal& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }
    BigReal& negate() { mpfr_neg(v_, v_, MPFR_RNDN); return *this; }

    // ---- binary ops: result tag = min of tags ----
    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(std::min(a.digits_, b.digits_));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(std::min(a.digits_, b.digits_));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(std::min(a.digits_, b.digits_));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        BigReal r(std::min(a.digits_, b.digits_));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a) {
        BigReal r(a);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, long k) {
        BigReal r(a);
        mpfr_mul_si(r.v_, r.v_, k, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(long k, const BigReal& a) { return a * k; }
    friend BigReal operator/(const BigReal& a, long k) {
        BigReal r(a);
        mpfr_div_si(r.v_, r.v_, k, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(long k, const BigReal& a) {
        BigReal r(a.digits_);
        mpfr_si_div(r.v_, k, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator+(const BigReal& a, long k) {
        BigReal r(a);
        mpfr_add_si(r.v_, r.v_, k, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, long k) {
        BigReal r(a);
        mpfr_sub_si(r.v_, r.v_, k, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(long k, const BigReal& a) {
        BigReal r(a.digits_);
        mpfr_si_sub(r.v_, k, a.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const BigReal& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const BigReal& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator<=(const BigReal& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>=(const BigReal& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

private:
    static int check(int digits) {
        if (digits < 1) throw DomainError("BigReal: digits must be positive");
        if (digits > PrecisionContext::kMaxDigits)
            throw PrecisionOverflow("BigReal", digits, PrecisionContext::kMaxDigits);
        return digits;
    }
    mpfr_prec_t prec_bits() const { return detail::bits_for_digits(digits_ + kGuardDigits); }

    int digits_;
    mpfr_t v_;
};

// ---- elementary functions ----
#define TRISIN_UNARY(name, mpfr_fn)                    \
    inline BigReal name(const BigReal& a) {            \
        BigReal r(a.digits());                         \
        mpfr_fn(r.raw(), a.raw(), MPFR_RNDN);          \
        return r;                                      \
    }
TRISIN_UNARY(sqrt, mpfr_sqrt)
TRISIN_UNARY(exp, mpfr_exp)
TRISIN_UNARY(log, mpfr_log)
TRISIN_UNARY(log1p, mpfr_log1p)
TRISIN_UNARY(sin, mpfr_sin)
TRISIN_UNARY(cos, mpfr_cos)
TRISIN_UNARY(tan, mpfr_tan)
TRISIN_UNARY(atan, mpfr_atan)
TRISIN_UNARY(sinh, mpfr_sinh)
TRISIN_UNARY(cosh, mpfr_cosh)
TRISIN_UNARY(asinh, mpfr_asinh)
TRISIN_UNARY(fabs, mpfr_abs)
#undef TRISIN_UNARY

inline BigReal floor_r(const BigReal& a) {
    BigReal r(a.digits());
    mpfr_rint(r.raw(), a.raw(), MPFR_RNDD);
    return r;
}
inline BigReal ceil_r(const BigReal& a) {
    BigReal r(a.digits());
    mpfr_rint(r.raw(), a.raw(), MPFR_RNDU);
    return r;
}

inline BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r(std::min(y.digits(), x.digits()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline BigReal hypot(const BigReal& a, const BigReal& b) {
    BigReal r(std::min(a.digits(), b.digits()));
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline BigReal pow_si(const BigReal& a, long n) {
    BigReal r(a.digits());
    mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
    return r;
}
inline BigReal pow(const BigReal& a, const BigReal& b) {
    BigReal r(std::min(a.digits(), b.digits()));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline const BigReal& min(const BigReal& a, const BigReal& b) { return a < b ? a : b; }
inline const BigReal& max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

// 2^k and 10^k at a given tag, exact while in range.
inline BigReal pow2(long k, int digits) {
    BigReal r(digits);
    mpfr_set_ui_2exp(r.raw(), 1, k, MPFR_RNDN);
    return r;
}
inline BigReal pow10(long k, int digits) {
    BigReal r(digits);
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(k < 0 ? -k : k), MPFR_RNDN);
    if (k < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

// Cached constants (own cache; does not rely on mpfr's internal one being
// thread-safe).
BigReal pi(int digits);
BigReal euler_gamma(int digits);
BigReal pi_squared_over_6(int digits);

// Complex value over two BigReals; principal-branch log.
class BigComplex {
public:
    BigComplex() = default;
    explicit BigComplex(int digits) : re_(digits), im_(digits) {}
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(BigReal re) : re_(std::move(re)), im_(re_.digits()) {}
    BigComplex(double re, double im, int digits) : re_(re, digits), im_(im, digits) {}

    const BigReal& real() const { return re_; }
    const BigReal& imag() const { return im_; }
    BigReal& real() { return re_; }
    BigReal& imag() { return im_; }
    int digits() const { return std::min(re_.digits(), im_.digits()); }

    BigComplex conj() const { return {re_, -im_}; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re_, -a.im_}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend BigComplex operator*(const BigComplex& a, const BigReal& s) {
        return {a.re_ * s, a.im_ * s};
    }
    friend BigComplex operator*(const BigReal& s, const BigComplex& a) { return a * s; }
    friend BigComplex operator/(const BigComplex& a, const BigReal& s) {
        return {a.re_ / s, a.im_ / s};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal d = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
    }
    BigComplex& operator+=(const BigComplex& o) { re_ += o.re_; im_ += o.im_; return *this; }
    BigComplex& operator-=(const BigComplex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }
    BigComplex& operator*=(const BigReal& s) { re_ *= s; im_ *= s; return *this; }
    BigComplex& operator/=(long k) { re_ /= k; im_ /= k; return *this; }

private:
    BigReal re_, im_;
};

inline BigReal abs(const BigComplex& z) { return hypot(z.real(), z.imag()); }
inline BigReal norm(const BigComplex& z) {
    return z.real() * z.real() + z.imag() * z.imag();
}
inline BigComplex log(const BigComplex& z) {
    BigReal h = hypot(z.real(), z.imag());
    return {log(h), atan2(z.imag(), z.real())};
}
inline BigComplex exp(const BigComplex& z) {
    BigReal m = exp(z.real());
    return {m * cos(z.imag()), m * sin(z.imag())};
}
// e^{i t} for real t
inline BigComplex cis(const BigReal& t) { return {cos(t), sin(t)}; }
inline BigComplex inv(const BigComplex& z) {
    BigReal d = norm(z);
    return {z.real() / d, -z.imag() / d};
}

// Region of the two-cut plane Omega = C minus (-inf,0] minus [1,+inf).
enum class CutPlaneRegion { unit_interval, upper_strip, general };

// Point validated to lie in Omega; required by the kernel g(z), whose logs
// need both cuts open.
struct CutPlanePoint {
    BigComplex z;
    CutPlaneRegion region;

    explicit CutPlanePoint(BigComplex value) : z(std::move(value)), region(classify(z)) {}

    static CutPlaneRegion classify(const BigComplex& z) {
        if (z.imag().is_zero()) {
            if (z.real().sign() <= 0)
                throw DomainError("CutPlanePoint: on the cut (-inf, 0]");
            if (z.real() >= 1.0)
                throw DomainError("CutPlanePoint: on the cut [1, +inf)");
            return CutPlaneRegion::unit_interval;
        }
        return z.imag().sign() > 0 ? CutPlaneRegion::upper_strip : CutPlaneRegion::general;
    }
};

} // namespace trisin

#endif
