#ifndef PRODPOW_SYSTEM_SOLVER_HPP
#define PRODPOW_SYSTEM_SOLVER_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "prodpow/monomial.hpp"

namespace prodpow {

/// One product-power equation. `vars` lists x_1 .. x_{m-1} and then z.
struct SystemEquation {
    std::vector<std::string> vars;
    unsigned n = 2;
};

struct SystemSpec {
    std::vector<SystemEquation> equations;
};

struct SystemFamily {
    ParametricFamily family;
    std::map<std::string, std::vector<std::string>> provenance;
    std::size_t variable_count = 0;  // t
    std::size_t repeated = 0;        // r
};

inline constexpr std::size_t kDefaultUnificationGuard = 2'000'000;

/// Minimal non-zero solutions (alpha, beta) of lhs . alpha = rhs . beta over
/// the naturals, each as one vector of length lhs.size() + rhs.size(), in a
/// deterministic order. Every solution is a non-negative combination of them.
std::vector<std::vector<Exponent>> hilbert_basis(std::span<const Exponent> lhs, std::span<const Exponent> rhs,
                                                 std::size_t guard = kDefaultUnificationGuard);

/// Per-equation families from the stage recursion, then for each shared
/// variable the equation between its two formulas is solved exactly: every
/// parameter on either side becomes a product of fresh parameters, one per
/// Hilbert basis element. Variables shared by three or more equations and
/// cyclic sharing are rejected with UnsupportedScope.
SystemFamily solve_system(const SystemSpec& spec);

} // namespace prodpow

#endif
