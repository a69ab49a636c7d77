#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "prodpow/audit.hpp"
#include "prodpow/fixtures.hpp"
#include "prodpow/serialization.hpp"
#include "test_util.hpp"

using namespace prodpow;
using oracle::u64;
using testutil::error_kind;
using testutil::nat;

TEST_CASE("enumeration matches the nested-loop search exactly, in order")
{
    for (unsigned m : {3u, 4u, 5u})
        for (unsigned n : {2u, 3u}) {
            const u64 bound = m == 5 ? 6 : 12;
            std::vector<Solution> want;
            oracle::brute_solutions(m, n, bound, [&](const std::vector<u64>& xs, u64 z) {
                Solution s{{}, nat(z), n};
                for (u64 x : xs)
                    s.xs.push_back(nat(x));
                want.push_back(s);
            });
            CHECK(enumerate_solutions(m, n, bound) == want);
            CHECK(want.size() == oracle::count_solutions(m, n, bound));
        }
}

TEST_CASE("parallel enumeration returns the same sequence")
{
    const auto serial = enumerate_solutions(3, 2, 90, 1);
    CHECK(enumerate_solutions(3, 2, 90, 4) == serial);
    CHECK(enumerate_solutions(3, 2, 90, 200) == serial);
    CHECK(serial.size() == oracle::count_solutions(3, 2, 90));
}

TEST_CASE("enumeration guard")
{
    CHECK(error_kind([] { require_enumerable(3, 3, 1000); }) == ErrorKind::GuardExceeded);
    CHECK_NOTHROW(require_enumerable(3, 2, 10000));
    CHECK(error_kind([] { enumerate_solutions(3, 9, 100000); }) == ErrorKind::GuardExceeded);
}

TEST_CASE("completeness audit counts every solution")
{
    const AuditReport r = audit_completeness(3, 2, 40, 2);
    CHECK(r.checked == oracle::count_solutions(3, 2, 40));
    CHECK(r.passed == r.checked);
    CHECK(!r.has_findings());
}

TEST_CASE("completeness audit records the m = 4, n = 3 gap")
{
    const AuditReport r = audit_completeness(4, 3, 2);
    const Record gap{{"x1", nat(4)}, {"x2", nat(2)}, {"x3", nat(1)}, {"z", nat(2)}};
    CHECK(std::find(r.coverage_gaps.begin(), r.coverage_gaps.end(), gap) != r.coverage_gaps.end());
    CHECK(r.checked == r.passed + r.coverage_gaps.size());
}

TEST_CASE("soundness audit flags the published Example 2 and clears the corrected one")
{
    const SamplerOptions opts{200, 3, 9};
    const AuditReport bad = audit_soundness(example2_printed(), opts);
    CHECK(bad.checked == 200);
    CHECK(!bad.sound_failures.empty());
    const AuditReport good = audit_soundness(example2_corrected(), opts);
    CHECK(good.passed == 200);
    CHECK(!good.has_findings());
}

TEST_CASE("theorem4, theorem5 and theta audits are clean at small bounds")
{
    CHECK(!audit_theorem4(4, 2, 20).has_findings());
    const AuditReport t5 = audit_theorem5_completeness(6, 100);
    CHECK(t5.checked > 100);
    CHECK(!t5.has_findings());
    CHECK(!audit_theta(7, {500, 9, 20}).has_findings());
}

TEST_CASE("theorem3 coverage partitions the solutions")
{
    const AuditReport r = audit_theorem3_coverage(12, 4, 2);
    u64 count = 0;
    for (u64 x = 1; x <= 12; ++x)
        for (u64 y = 1; y <= 12; ++y)
            for (u64 k = 1; k <= 4; ++k) {
                if ((x * y) % k)
                    continue;
                const u64 q = x * y / k;
                for (u64 z = 1; z * z <= q; ++z)
                    count += z * z == q;
            }
    CHECK(r.checked == count);
    CHECK(r.sound_failures.empty());
    CHECK(r.passed + r.coverage_gaps.size() == r.checked);
}

TEST_CASE("audits are reproducible for a fixed seed")
{
    const SamplerOptions opts{300, 77, 12};
    CHECK(dump(to_json(audit_soundness_theorem6(5, 4, opts))) == dump(to_json(audit_soundness_theorem6(5, 4, opts))));
    CHECK(dump(to_json(audit_theta(5, opts))) == dump(to_json(audit_theta(5, opts))));
    std::mt19937_64 r1(77), r2(78);
    CHECK(flatten(random_param_tree(5, 4, r1, 12)) != flatten(random_param_tree(5, 4, r2, 12)));
}

TEST_CASE("merge_reports concatenates")
{
    AuditReport a;
    a.checked = 2;
    a.passed = 1;
    a.coverage_gaps.push_back({{"z", nat(2)}});
    AuditReport b;
    b.checked = 3;
    b.passed = 3;
    const AuditReport c = merge_reports(a, b);
    CHECK(c.checked == 5);
    CHECK(c.passed == 4);
    CHECK(c.coverage_gaps.size() == 1);
}
