#include "trisin/functions.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace trisin {

// ---------------------------------------------------------------------------
// Harmonic numbers
// ---------------------------------------------------------------------------

namespace {

std::shared_mutex g_harmonic_mu;
std::vector<ExactRational> g_harmonic{ExactRational(0)};  // H_0 = 0

} // namespace

ExactRational harmonic(long n) {
    if (n < 0) throw DomainError("harmonic: n must be >= 0");
    if (n > kHarmonicCap)
        throw DomainError("harmonic: n exceeds the exact cap, use harmonic_real");
    {
        std::shared_lock lock(g_harmonic_mu);
        if (n < static_cast<long>(g_harmonic.size())) return g_harmonic[n];
    }
    std::unique_lock lock(g_harmonic_mu);
    while (static_cast<long>(g_harmonic.size()) <= n) {
        long k = static_cast<long>(g_harmonic.size());
        g_harmonic.push_back(g_harmonic.back() + ExactRational(1, k));
    }
    return g_harmonic[n];
}

BigReal harmonic_real(long n, int digits) {
    if (n < 0) throw DomainError("harmonic_real: n must be >= 0");
    BigReal h(digits);
    for (long k = 1; k <= n; ++k) h += BigReal(1L, digits) / k;
    return h;
}

// ---------------------------------------------------------------------------
// Exact identities
// ---------------------------------------------------------------------------

std::pair<ExactRational, ExactRational> lemma_identity(long n) {
    if (n < 1) throw DomainError("lemma_identity: n must be >= 1");
    ExactRational lhs, rhs;
    for (long k = 1; k <= n; ++k) {
        ExactRational term = ExactRational::binomial(n, k) / ExactRational(k * k);
        if (k % 2 != 0) term = -term;
        lhs += term;
        rhs -= harmonic(k) / ExactRational(k);
    }
    return {lhs, rhs};
}

std::pair<ExactRational, ExactRational> gr_identity(long n) {
    if (n < 1) throw DomainError("gr_identity: n must be >= 1");
    ExactRational lhs;
    for (long k = 1; k <= n; ++k) {
        ExactRational term = ExactRational::binomial(n, k) / ExactRational(k);
        if (k % 2 == 0) term = -term;
        lhs += term;
    }
    return {lhs, harmonic(n)};
}

// ---------------------------------------------------------------------------
// Digamma / trigamma at positive integers
// ---------------------------------------------------------------------------

BigReal digamma_int(long n, const PrecisionContext& ctx) {
    if (n < 0) throw DomainError("digamma_int: n must be >= 0");
    int d = ctx.effective();
    BigReal h = n <= kHarmonicCap ? harmonic(n).to_real(d) : harmonic_real(n, d);
    return (h - euler_gamma(d)).round_to(ctx.decimal_digits);
}

BigReal trigamma_int(long n, const PrecisionContext& ctx) {
    if (n < 0) throw DomainError("trigamma_int: n must be >= 0");
    int d = ctx.effective();
    BigReal v = pi_squared_over_6(d);
    if (n <= kHarmonicCap) {
        ExactRational s;
        for (long k = 1; k <= n; ++k) s += ExactRational(1, k * k);
        v -= s.to_real(d);
    } else {
        for (long k = 1; k <= n; ++k) v -= ExactRational(1, k * k).to_real(d);
    }
    return v.round_to(ctx.decimal_digits);
}

// ---------------------------------------------------------------------------
// Bernoulli numbers
// ---------------------------------------------------------------------------

namespace {

std::shared_mutex g_bernoulli_mu;
std::vector<ExactRational> g_bernoulli{ExactRational(1)};  // B_0 = 1

// B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1,j) B_j
void extend_bernoulli(long n) {
    while (static_cast<long>(g_bernoulli.size()) <= n) {
        long m = static_cast<long>(g_bernoulli.size());
        if (m > 1 && m % 2 != 0) {
            g_bernoulli.emplace_back(0);
            continue;
        }
        ExactRational s;
        for (long j = 0; j < m; ++j)
            s += ExactRational::binomial(m + 1, j) * g_bernoulli[j];
        g_bernoulli.push_back(-s / ExactRational(m + 1));
    }
}

} // namespace

ExactRational bernoulli(long n) {
    if (n < 0) throw DomainError("bernoulli: n must be >= 0");
    {
        std::shared_lock lock(g_bernoulli_mu);
        if (n < static_cast<long>(g_bernoulli.size())) return g_bernoulli[n];
    }
    std::unique_lock lock(g_bernoulli_mu);
    extend_bernoulli(n);
    return g_bernoulli[n];
}

// ---------------------------------------------------------------------------
// Dilogarithm
// ---------------------------------------------------------------------------

namespace {

// |z| as a double, rounded up.
double abs_upper(const BigComplex& z) {
    double r = abs(z).to_double();
    return r * (1 + 1e-14);
}

// sum_{n>=1} z^n / n^2 for |z| <= ~0.6
BigComplex dilog_taylor(const BigComplex& z, int digits) {
    BigReal thr = pow10(-(digits + BigReal::kGuardDigits), 15);
    BigComplex sum(digits);
    BigComplex p(digits);
    p += z;
    long n = 1;
    while (true) {
        sum += p / BigReal(static_cast<long>(n) * n, digits);
        if (abs(p) < thr) break;
        p *= z;
        ++n;
        if (n > 400000)
            throw ConvergenceFailure("dilog_taylor", static_cast<int>(n), abs(p).to_double());
    }
    return sum;
}

// Li2(z) = sum_{n>=0} B_n w^{n+1}/(n+1)!  with w = -log(1-z); |w| < 2*pi.
BigComplex dilog_log_series(const BigComplex& z, int digits) {
    BigComplex one(BigReal(1L, digits), BigReal(0L, digits));
    BigComplex w = -log(one - z);
    BigReal thr = pow10(-(digits + BigReal::kGuardDigits), 15);
    BigComplex sum(digits);
    BigComplex p = w;  // w^{n+1}/(n+1)!
    long n = 0;
    int small_run = 0;
    while (true) {
        const ExactRational& b = bernoulli(n);
        if (b.sign() != 0) sum += p * b.to_real(digits);
        p = p * w / BigReal(n + 2, digits);
        BigReal mag = abs(p);
        small_run = (mag < thr) ? small_run + 1 : 0;
        if (small_run >= 2) break;
        ++n;
        if (n > 10000)
            throw ConvergenceFailure("dilog_log_series", static_cast<int>(n), mag.to_double());
    }
    return sum;
}

BigComplex dilog_impl(const BigComplex& z, int digits) {
    const int d = digits;
    if (z.is_zero()) return BigComplex(d);

    if (z.imag().is_zero()) {
        if (z.real() == BigReal(1L, d)) {
            BigComplex r(d);
            r.real() = pi_squared_over_6(d);
            return r;
        }
        if (z.real() > 1.0)
            throw DomainError("dilog: argument on the cut (1, +inf)");
    }

    BigComplex one(BigReal(1L, d), BigReal(0L, d));
    double r = abs_upper(z);

    if (r <= 0.5) return dilog_taylor(z, d);

    BigComplex omz = one - z;
    double r1 = abs_upper(omz);
    if (r1 <= 0.5) {
        // Euler reflection: Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z)
        BigComplex v = -dilog_taylor(omz, d) - log(z) * log(omz);
        v.real() += pi_squared_over_6(d);
        return v;
    }
    if (r >= 2.0) {
        // Inversion: Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2
        BigComplex lm = log(-z);
        BigComplex v = -dilog_taylor(inv(z), d) - lm * lm / BigReal(2L, d);
        v.real() -= pi_squared_over_6(d);
        return v;
    }
    // Landen: Li2(z) = -Li2(z/(z-1)) - log^2(1-z)/2, when the mapped point
    // lands in the Taylor disc.
    BigComplex zm = z / (z - one);
    if (abs_upper(zm) <= 0.5) {
        BigComplex l1 = log(omz);
        return -dilog_taylor(zm, d) - l1 * l1 / BigReal(2L, d);
    }
    // Remaining annulus (|z|, |1-z| both > 1/2, |z| < 2): the series in
    // w = -log(1-z) converges at ratio |w|/(2 pi) <= ~0.54 everywhere here.
    return dilog_log_series(z, d);
}

} // namespace

BigComplex dilog(const BigComplex& z, int digits) { return dilog_impl(z, digits); }

BigReal dilog_real(const BigReal& x, int digits) {
    if (x > 1.0) throw DomainError("dilog_real: argument on the cut (1, +inf)");
    BigComplex z(x, BigReal(0L, digits));
    return dilog_impl(z, digits).real();
}

} // namespace trisin
