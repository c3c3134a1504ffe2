#include "trisin/series.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace trisin {

// ---------------------------------------------------------------------------
// Coefficients
// ---------------------------------------------------------------------------

namespace {

constexpr double kLn10 = 2.302585092994046;
constexpr double kLn2 = 0.6931471805599453;

// Exact coefficient table with its own incremental inner-sum state:
//   inner(m) = sum_{k=1..m} H_{k-1}/k,   c_n = inner(2n+1)/(2n+1).
class CoefficientTable {
public:
    ExactRational get(long n) {
        {
            std::shared_lock lock(mu_);
            if (n < static_cast<long>(c_.size())) return c_[n];
        }
        std::unique_lock lock(mu_);
        extend(n);
        return c_[n];
    }

    // Coefficients 0..n converted once to `digits` working digits. Snapshot
    // semantics: extensions build a fresh vector, readers keep theirs.
    std::shared_ptr<const std::vector<BigReal>> converted(long n, int digits) {
        {
            std::shared_lock lock(mu_);
            auto it = conv_.find(digits);
            if (it != conv_.end() && n < static_cast<long>(it->second->size()))
                return it->second;
        }
        std::unique_lock lock(mu_);
        extend(n);
        auto& slot = conv_[digits];
        if (!slot || n >= static_cast<long>(slot->size())) {
            auto vec = slot ? std::make_shared<std::vector<BigReal>>(*slot)
                            : std::make_shared<std::vector<BigReal>>();
            for (long i = static_cast<long>(vec->size()); i <= n; ++i)
                vec->push_back(c_[i].to_real(digits));
            slot = std::move(vec);
        }
        return slot;
    }

private:
    void extend(long n) {
        if (n > kCoefficientCap)
            throw PrecisionOverflow("series_coefficient: exact coefficient cap",
                                    n, kCoefficientCap);
        while (static_cast<long>(c_.size()) <= n) {
            long idx = static_cast<long>(c_.size());
            long target_m = 2 * idx + 1;
            while (m_ < target_m) {
                ++m_;
                h_ += ExactRational(1, m_);            // now H_m
                inner_ += h_prev_ / ExactRational(m_); // H_{m-1}/m
                h_prev_ = h_;
            }
            c_.push_back(inner_ / ExactRational(target_m));
        }
    }

    std::shared_mutex mu_;
    std::vector<ExactRational> c_;
    long m_ = 0;
    ExactRational h_;       // H_m
    ExactRational h_prev_;  // H_{m-1} before the last step
    ExactRational inner_;   // sum_{k<=m} H_{k-1}/k
    std::map<int, std::shared_ptr<std::vector<BigReal>>> conv_;
};

CoefficientTable& coefficients() {
    static CoefficientTable t;
    return t;
}

} // namespace

ExactRational series_coefficient(long n) {
    if (n < 0) throw DomainError("series_coefficient: n must be >= 0");
    return coefficients().get(n);
}

// ---------------------------------------------------------------------------
// Truncation plan
// ---------------------------------------------------------------------------

TruncationPlan truncation_plan_log(double t_abs, double log10_inv_eps) {
    if (t_abs < 0) throw DomainError("truncation_plan: |t| must be >= 0");
    if (log10_inv_eps <= 0) throw DomainError("truncation_plan: eps must be in (0, 1)");

    // N >= log(1/eps)/(2 log 2); slop keeps exact-integer cases (eps = 2^-2N)
    // from spilling to N+1.
    double n1 = log10_inv_eps * kLn10 / (2.0 * kLn2);
    long N = static_cast<long>(std::ceil(n1 - 1e-9 * std::max(1.0, n1)));
    long n2 = static_cast<long>(std::floor(3.0 * t_abs)) + 1;  // N > 3|t|
    if (n2 > N) N = n2;
    if (N < 1) N = 1;

    // Terms are bounded by e^{|t|}; each must carry its share of eps.
    double p = (t_abs + std::log(static_cast<double>(N)) - 1.0) / kLn10 + log10_inv_eps;
    long digits = static_cast<long>(std::ceil(p));
    if (digits < PrecisionContext::kMinDigits) digits = PrecisionContext::kMinDigits;
    digits += 10;  // guard
    // Quantize upward so repeated sweeps share converted-coefficient caches.
    digits = 20 * ((digits + 19) / 20);
    if (digits > PrecisionContext::kMaxDigits)
        throw PrecisionOverflow("truncation_plan: working digits", digits,
                                PrecisionContext::kMaxDigits);

    return {N, static_cast<int>(digits), log10_inv_eps};
}

TruncationPlan truncation_plan(double t_abs, double eps) {
    if (eps <= 0 || eps >= 1) throw DomainError("truncation_plan: eps must be in (0, 1)");
    return truncation_plan_log(t_abs, -std::log10(eps));
}

// ---------------------------------------------------------------------------
// Series evaluation
// ---------------------------------------------------------------------------

namespace {

BigReal plan_error_bound(const TruncationPlan& plan) {
    // certified: truncation 2^{-2N} plus summed rounding below eps
    BigReal eps_b = pow(BigReal(10L, 15), BigReal(-plan.log10_inv_eps, 15));
    BigReal trunc = pow2(-2 * plan.terms, 15);
    return min(trunc, eps_b) + eps_b;
}

Evaluation eval_series_complex(const BigComplex& z, const TruncationPlan& plan, bool derivative) {
    const int d = plan.working_digits;
    const long N = plan.terms;
    auto cptr = coefficients().converted(N, d);
    const auto& c = *cptr;

    BigComplex zw(z.real().round_to(d), z.imag().round_to(d));
    BigComplex zz = zw * zw;
    BigComplex sum(d);
    // running term: z^{2n+1}/(2n+1)! or z^{2n}/(2n)!
    BigComplex p = derivative ? BigComplex(BigReal(1L, d), BigReal(0L, d)) : zw;
    for (long n = 1; n <= N; ++n) {
        p *= zz;
        p /= derivative ? (2 * n - 1) * (2 * n) : (2 * n) * (2 * n + 1);
        if (n % 2 != 0) {
            sum.real() -= c[n] * p.real();
            sum.imag() -= c[n] * p.imag();
        } else {
            sum.real() += c[n] * p.real();
            sum.imag() += c[n] * p.imag();
        }
    }
    return {sum, plan_error_bound(plan), Method::series, N};
}

Evaluation eval_series_real(const BigReal& t, const TruncationPlan& plan, bool derivative) {
    const int d = plan.working_digits;
    const long N = plan.terms;
    auto cptr = coefficients().converted(N, d);
    const auto& c = *cptr;

    BigReal tw = t.round_to(d);
    BigReal tt = tw * tw;
    BigReal sum(d);
    BigReal p = derivative ? BigReal(1L, d) : tw;
    for (long n = 1; n <= N; ++n) {
        p *= tt;
        p /= derivative ? (2 * n - 1) * (2 * n) : (2 * n) * (2 * n + 1);
        if (n % 2 != 0)
            sum -= c[n] * p;
        else
            sum += c[n] * p;
    }
    return {BigComplex(sum, BigReal(0L, d)), plan_error_bound(plan), Method::series, N};
}

double abs_upper_double(const BigComplex& z) {
    return abs(z).to_double() * (1 + 1e-14) + 1e-300;
}

} // namespace

Evaluation eval_f_series(const BigComplex& z, double eps) {
    if (z.imag().is_zero()) return eval_f_series(z.real(), eps);
    TruncationPlan plan = truncation_plan(abs_upper_double(z), eps);
    return eval_series_complex(z, plan, false);
}

Evaluation eval_f_series(const BigReal& t, double eps) {
    TruncationPlan plan = truncation_plan(std::abs(t.to_double()) * (1 + 1e-14), eps);
    return eval_series_real(t, plan, false);
}

Evaluation eval_f_series(double t, double eps) {
    return eval_f_series(BigReal(t, 20), eps);
}

Evaluation eval_f_series_planned(const BigComplex& z, const TruncationPlan& plan) {
    if (z.imag().is_zero()) return eval_series_real(z.real(), plan, false);
    return eval_series_complex(z, plan, false);
}

Evaluation eval_f_prime(const BigComplex& z, double eps) {
    if (z.imag().is_zero()) return eval_f_prime(z.real(), eps);
    TruncationPlan plan = truncation_plan(abs_upper_double(z), eps);
    Evaluation e = eval_series_complex(z, plan, true);
    e.method = Method::series;
    return e;
}

Evaluation eval_f_prime(const BigReal& t, double eps) {
    TruncationPlan plan = truncation_plan(std::abs(t.to_double()) * (1 + 1e-14), eps);
    return eval_series_real(t, plan, true);
}

} // namespace trisin
