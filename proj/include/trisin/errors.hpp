#ifndef TRISIN_ERRORS_HPP
#define TRISIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trisin {

// Argument outside the operation's domain (cut points, t out of range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A precision plan exceeded the configured hard cap.
class PrecisionOverflow : public std::runtime_error {
public:
    PrecisionOverflow(const std::string& what, long requested_digits, long cap)
        : std::runtime_error(what + " (requested " + std::to_string(requested_digits) +
                             " digits, cap " + std::to_string(cap) + ")"),
          requested(requested_digits), cap(cap) {}
    long requested;
    long cap;
};

// An adaptive scheme exhausted its refinement budget.
class ConvergenceFailure : public std::runtime_error {
public:
    ConvergenceFailure(const std::string& what, int level_reached, double last_correction)
        : std::runtime_error(what + " (level " + std::to_string(level_reached) +
                             ", last correction " + std::to_string(last_correction) + ")"),
          level(level_reached), last_correction(last_correction) {}
    int level;
    double last_correction;
};

// A Moebius-sum evaluation needs more sieve than was built.
class SieveTooSmall : public std::runtime_error {
public:
    SieveTooSmall(long long required, long long available)
        : std::runtime_error("sieve too small: need " + std::to_string(required) +
                             ", have " + std::to_string(available)),
          required(required), available(available) {}
    long long required;
    long long available;
};

// Root refinement left its bracket and bisection fallback was exhausted.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace trisin

#endif
