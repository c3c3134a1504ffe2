#include "trisin/precision.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace trisin {

namespace {

// One cache per constant, keyed by digit tag, largest first. A precision
// level is computed at most once; lower requests round down from a larger
// cached value.
class ConstantCache {
public:
    explicit ConstantCache(int (*compute)(mpfr_ptr, mpfr_rnd_t)) : compute_(compute) {}

    BigReal get(int digits) {
        {
            std::shared_lock lock(mu_);
            auto it = cache_.lower_bound(digits);
            if (it != cache_.end()) return it->second.round_to(digits);
        }
        std::unique_lock lock(mu_);
        auto it = cache_.lower_bound(digits);
        if (it == cache_.end()) {
            int want = digits + 20;
            BigReal v(want);
            compute_(v.raw(), MPFR_RNDN);
            it = cache_.emplace(want, std::move(v)).first;
        }
        return it->second.round_to(digits);
    }

private:
    int (*compute_)(mpfr_ptr, mpfr_rnd_t);
    std::shared_mutex mu_;
    std::map<int, BigReal, std::greater<int>> cache_;
};

ConstantCache& pi_cache() {
    static ConstantCache c(+[](mpfr_ptr out, mpfr_rnd_t rnd) { return mpfr_const_pi(out, rnd); });
    return c;
}
ConstantCache& euler_cache() {
    static ConstantCache c(+[](mpfr_ptr out, mpfr_rnd_t rnd) { return mpfr_const_euler(out, rnd); });
    return c;
}

} // namespace

BigReal pi(int digits) { return pi_cache().get(digits); }

BigReal euler_gamma(int digits) { return euler_cache().get(digits); }

BigReal pi_squared_over_6(int digits) {
    BigReal p = pi(digits);
    return p * p / 6L;
}

} // namespace trisin
