#ifndef PRODPOW_GENERAL_PARAM_HPP
#define PRODPOW_GENERAL_PARAM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "prodpow/errors.hpp"
#include "prodpow/monomial.hpp"
#include "prodpow/power_reduction.hpp"
#include "prodpow/solution.hpp"

namespace prodpow {

// One pass of the recursion over x_i. With P_i = gamma*eta and
// alpha*beta = a_{i-1}:
//   x_i = alpha * gamma^n * eta,  a_i = beta * eta^{n-1}
struct Stage {
    Nat alpha = 1;
    Nat beta = 1;
    Nat gamma = 1;
    Nat eta = 1;

    friend bool operator==(const Stage&, const Stage&) = default;
};

// X_{m-2} = alpha_last * s1^n, X_{m-1} = beta_last * s2^n,
// alpha_last * beta_last = a_{m-3}, s1 * s2 = Z_{m-3}.
struct Terminal {
    Nat alpha_last = 1;
    Nat beta_last = 1;
    Nat s1 = 1;
    Nat s2 = 1;

    friend bool operator==(const Terminal&, const Terminal&) = default;
};

struct ParamTree {
    std::vector<Stage> stages;  // one per x_1 .. x_{m-3}
    Terminal terminal;
    Theorem5Params base;

    unsigned m() const noexcept { return static_cast<unsigned>(stages.size()) + 3; }
    unsigned n() const noexcept { return base.n; }

    friend bool operator==(const ParamTree&, const ParamTree&) = default;
};

struct ParamCount {
    unsigned m = 0;
    unsigned n = 0;
    std::uint64_t count = 0;
};

/// Reduce, recover the base from (w, d, v), then peel x_1, x_2, ... with
/// P_i = gcd(x_i, Z_{i-1}). Returns a gap when the split of some stage or
/// the regeneration check fails.
std::variant<ParamTree, CoverageGap> theorem6_decompose(const Solution& solution);

/// Throws InvalidArgument on a shape mismatch or when the tree's chain
/// alpha_i*beta_i = a_{i-1} does not hold.
Solution theorem6_generate(const ParamTree& tree, unsigned m, unsigned n);

/// Human-readable list of violated coprimality conditions; empty for
/// canonical trees.
std::vector<std::string> coprimality_violations(const ParamTree& tree);

ParamTree all_ones_tree(unsigned m, unsigned n);

/// Consistent random tree with parameters in [1, max_value].
ParamTree random_param_tree(unsigned m, unsigned n, std::mt19937_64& rng, unsigned max_value);

/// Symbolic family of the recursion: every parameter feeding a_{i-1} is
/// split into an alpha-side and a beta-side copy (suffix "a" / "b").
/// Variables x1 .. x{m-1}, z.
ParametricFamily theorem6_family(unsigned m, unsigned n);

struct PrintedFamilyAudit {
    ParametricFamily family;
    IdentityVerdict verdict;
};

/// Transcription of the closed forms in their printed notation, audit
/// only. Superscripts are labels: k^{t}_{2i+1} becomes "k{t}_{2i+1}".
PrintedFamilyAudit theorem6_printed_family(unsigned m, unsigned n);

ParamCount parameter_count(unsigned m, unsigned n);

} // namespace prodpow

#endif
