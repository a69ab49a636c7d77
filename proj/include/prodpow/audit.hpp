#ifndef PRODPOW_AUDIT_HPP
#define PRODPOW_AUDIT_HPP

// Brute-force ground truth and the audits that compare parametric families
// against it. Enumeration only uses exact_arith (divisors); it never goes
// through the generate/decompose code it is used to check.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "prodpow/general_param.hpp"
#include "prodpow/monomial.hpp"
#include "prodpow/solution.hpp"

namespace prodpow {

using Record = std::vector<std::pair<std::string, Nat>>;

struct SoundFailure {
    Record assignment;
    std::string equation;
};

struct AuditReport {
    std::string family_id;
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::vector<SoundFailure> sound_failures;
    std::vector<Record> coverage_gaps;
    double elapsed_seconds = 0.0;

    bool has_findings() const noexcept { return !sound_failures.empty() || !coverage_gaps.empty(); }
};

/// Concatenates b after a; counts add.
AuditReport merge_reports(AuditReport a, const AuditReport& b);

struct SamplerOptions {
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
    unsigned max_value = 16;  // parameters drawn from [1, max_value]
};

/// Throws GuardExceeded unless z_bound^n fits the divisor guard.
void require_enumerable(unsigned m, unsigned n, std::uint64_t z_bound);

/// All (x_1..x_{m-1}, z) with z in [z_first, z_last] and prod x = z^n, z
/// ascending, tuples lexicographic within a z.
void for_each_solution(unsigned m, unsigned n, std::uint64_t z_first, std::uint64_t z_last,
                       const std::function<void(const Solution&)>& sink);

/// z in [1, z_bound]; `jobs` > 1 splits the z range across threads and
/// concatenates in order.
std::vector<Solution> enumerate_solutions(unsigned m, unsigned n, std::uint64_t z_bound, unsigned jobs = 1);

AuditReport audit_soundness(const ParametricFamily& family, const SamplerOptions& options);

/// Random consistent trees through theorem6_generate, checked by multiplying out.
AuditReport audit_soundness_theorem6(unsigned m, unsigned n, const SamplerOptions& options);

/// decompose-then-generate on every enumerated solution.
AuditReport audit_completeness(unsigned m, unsigned n, std::uint64_t z_bound, unsigned jobs = 1);

/// Reduction witness relations on every enumerated solution.
AuditReport audit_theorem4(unsigned m, unsigned n, std::uint64_t z_bound);

/// Every (w, d, v) with w <= w_bound, d^2 | w^{n-2}, v = w^{n-2}/d^2 must
/// round-trip through theorem5_recover.
AuditReport audit_theorem5_completeness(unsigned n, std::uint64_t w_bound);

/// theta_compute(p) = w*d over random parameter sets.
AuditReport audit_theta(unsigned n, const SamplerOptions& options);

/// x, y <= xy_bound, k <= k_bound with x*y = k*z^n: recovered or gap.
AuditReport audit_theorem3_coverage(std::uint64_t xy_bound, std::uint64_t k_bound, unsigned n);

Record flatten(const ParamTree& tree);

} // namespace prodpow

#endif
