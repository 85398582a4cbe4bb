#ifndef QCERT_ERROR_HPP
#define QCERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qcert {

struct qcert_error : std::runtime_error {
    explicit qcert_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by a zero polynomial / zero rational.
struct division_by_zero_error : qcert_error {
    explicit division_by_zero_error(const std::string& msg) : qcert_error(msg) {}
};

// Evaluation of a rational function at a root of its reduced denominator.
struct pole_error : qcert_error {
    explicit pole_error(const std::string& msg) : qcert_error(msg) {}
};

// A q-shifted-factorial factor in a denominator is identically zero for the
// given parameter values; the sum is not well defined.
struct zero_factor_error : qcert_error {
    explicit zero_factor_error(const std::string& msg) : qcert_error(msg) {}
};

// The reduced denominator shares a factor with the modulus: the congruence
// statement is ill-posed for this input (distinct from a mere failure).
struct ill_posed_error : qcert_error {
    explicit ill_posed_error(const std::string& msg) : qcert_error(msg) {}
};

// A rational that should be a p-adic integer has p in its denominator.
struct negative_valuation_error : qcert_error {
    explicit negative_valuation_error(const std::string& msg) : qcert_error(msg) {}
};

// Bad suite configuration (unknown check id, non-prime p, ...).
struct config_error : qcert_error {
    explicit config_error(const std::string& msg) : qcert_error(msg) {}
};

} // namespace qcert

#endif
