#ifndef PRODPOW_MONOMIAL_HPP
#define PRODPOW_MONOMIAL_HPP

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prodpow/exact_arith.hpp"

namespace prodpow {

using Exponent = std::int64_t;
using Assignment = std::map<std::string, Nat>;
// Signed per-parameter exponent difference, lhs minus rhs.
using ExponentDiff = std::map<std::string, Exponent>;

/// Product of named parameters raised to non-negative exponents. Zero
/// exponents are never stored, so equal monomials compare equal.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::map<std::string, Exponent> exponents);

    static Monomial var(const std::string& name, Exponent exponent = 1);

    const std::map<std::string, Exponent>& exponents() const noexcept { return exponents_; }
    Exponent exponent(const std::string& name) const;
    bool is_one() const noexcept { return exponents_.empty(); }

    Monomial& operator*=(const Monomial& other);
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Replaces each parameter found in `rules` by its monomial.
    Monomial substitute(const std::map<std::string, Monomial>& rules) const;

    /// Throws InvalidArgument on a missing parameter.
    Nat evaluate(const Assignment& assignment) const;

    std::string to_string() const;

private:
    std::map<std::string, Exponent> exponents_;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& a, Exponent k);

/// lhs_1 * ... * lhs_k = coefficient_1 * ... * rhs^n
struct Equation {
    std::vector<std::string> lhs;
    std::string rhs;
    unsigned n = 1;
    std::vector<std::string> coefficient;

    std::string to_string() const;
};

struct ParametricFamily {
    std::string id;
    std::map<std::string, Monomial> variables;
    std::vector<std::pair<std::string, std::string>> constraints;  // coprime pairs
    std::vector<Equation> equations;
    std::string notes;
};

struct IdentityVerdict {
    bool pass = false;
    ExponentDiff residual;  // empty when pass
};

IdentityVerdict verify_identity(const ParametricFamily& family, std::span<const std::string> lhs_vars,
                                const std::string& rhs_var, unsigned n,
                                std::span<const std::string> coefficient = {});
IdentityVerdict verify_identity(const ParametricFamily& family, const Equation& equation);

struct Instantiation {
    std::map<std::string, Nat> values;
    std::vector<std::pair<std::string, std::string>> constraint_violations;
};

Instantiation instantiate(const ParametricFamily& family, const Assignment& assignment);

/// Numeric check of one equation against already-evaluated variables.
bool holds(const Equation& equation, const std::map<std::string, Nat>& values);

std::set<std::string> parameters(const ParametricFamily& family);

std::string to_string(const ExponentDiff& diff);

} // namespace prodpow

#endif
