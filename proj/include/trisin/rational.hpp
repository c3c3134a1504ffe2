#ifndef TRISIN_RATIONAL_HPP
#define TRISIN_RATIONAL_HPP

#include <gmp.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "trisin/precision.hpp"

namespace trisin {

// Exact rational over GMP. Always canonical: denominator > 0, gcd = 1.
class ExactRational {
public:
    ExactRational() { mpq_init(q_); }
    ExactRational(long num, long den = 1) {
        mpq_init(q_);
        if (den == 0) throw DomainError("ExactRational: zero denominator");
        mpq_set_si(q_, num, 1);
        if (den != 1) {
            mpq_t d;
            mpq_init(d);
            mpq_set_si(d, den, 1);
            mpq_div(q_, q_, d);
            mpq_clear(d);
        }
    }
    explicit ExactRational(const std::string& s) {
        mpq_init(q_);
        if (mpq_set_str(q_, s.c_str(), 10) != 0)
            throw DomainError("ExactRational: cannot parse \"" + s + "\"");
        mpq_canonicalize(q_);
    }

    ExactRational(const ExactRational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    ExactRational(ExactRational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    ExactRational& operator=(const ExactRational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    ExactRational& operator=(ExactRational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~ExactRational() { mpq_clear(q_); }

    mpq_ptr raw() { return q_; }
    mpq_srcptr raw() const { return q_; }

    // n-choose-k, exact.
    static ExactRational binomial(unsigned long n, unsigned long k) {
        ExactRational r;
        mpz_bin_uiui(mpq_numref(r.q_), n, k);
        return r;
    }

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
        ExactRational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
        ExactRational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
        ExactRational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b) {
        if (mpq_sgn(b.q_) == 0) throw DomainError("ExactRational: division by zero");
        ExactRational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    friend ExactRational operator-(const ExactRational& a) {
        ExactRational r;
        mpq_neg(r.q_, a.q_);
        return r;
    }
    ExactRational& operator+=(const ExactRational& o) { mpq_add(q_, q_, o.q_); return *this; }
    ExactRational& operator-=(const ExactRational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    ExactRational& operator*=(const ExactRational& o) { mpq_mul(q_, q_, o.q_); return *this; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const ExactRational& a, const ExactRational& b) {
        return mpq_equal(a.q_, b.q_) == 0;
    }
    friend bool operator<(const ExactRational& a, const ExactRational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator>(const ExactRational& a, const ExactRational& b) {
        return mpq_cmp(a.q_, b.q_) > 0;
    }

    int sign() const { return mpq_sgn(q_); }

    std::string to_string() const {
        char* s = mpq_get_str(nullptr, 10, q_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    // Rounded image at the given precision tag.
    BigReal to_real(int digits) const {
        BigReal r(digits);
        mpfr_set_q(r.raw(), q_, MPFR_RNDN);
        return r;
    }

private:
    mpq_t q_;
};

} // namespace trisin

#endif
