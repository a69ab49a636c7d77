// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (0 when all pass).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "prodpow/audit.hpp"
#include "prodpow/fixtures.hpp"
#include "prodpow/serialization.hpp"
#include "test_util.hpp"

using namespace prodpow;
using oracle::u64;
using testutil::nat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Outcome&)>& body)
{
    Outcome out;
    const auto start = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail << " [exception: " << e.what() << "]";
    }
    std::printf("%s criterion %d: %s;%s (%.2f s)\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.str().c_str(),
                seconds_since(start));
    std::fflush(stdout);
    failures += !out.pass;
}

void c1(Outcome& o)
{
    const auto start = Clock::now();
    for (unsigned n = 2; n <= 12; ++n) {
        const ParametricFamily f = theorem5_family(n);
        // The first equation is w^(n-2) = v*d^2.
        const Equation& eq = f.equations.at(0);
        o.require(eq.rhs == "d" && eq.n == 2 && eq.lhs.size() == n - 2, "equation shape n=" + std::to_string(n));
        o.require(verify_identity(f, eq).pass, "identity n=" + std::to_string(n));
    }
    const double t = seconds_since(start);
    o.detail << " n=2..12 odd and even forms";
    o.require(t < 1.0, "runtime < 1 s");
}

void c2(Outcome& o)
{
    const auto start = Clock::now();
    for (unsigned n = 2; n <= 7; ++n) {
        const AuditReport r = audit_theorem5_completeness(n, 2000);
        // Independent count of (w, d) pairs: prod over p^a || w of (floor((n-2)a/2) + 1).
        u64 expected = 0;
        for (u64 w = 1; w <= 2000; ++w) {
            u64 c = 1;
            for (auto [p, a] : oracle::factor(w))
                c *= (n - 2) * a / 2 + 1;
            expected += c;
        }
        o.detail << " n=" << n << ":" << r.checked;
        o.require(r.checked == expected, "triple count n=" + std::to_string(n));
        o.require(r.passed == r.checked && r.coverage_gaps.empty(), "gaps n=" + std::to_string(n));
    }
    o.require(seconds_since(start) < 60.0, "runtime < 60 s");
}

void c3(Outcome& o)
{
    const auto start = Clock::now();
    for (unsigned n : {2u, 3u}) {
        const AuditReport r = audit_theorem4(3, n, 100);
        o.detail << " n=" << n << ":" << r.checked;
        o.require(r.checked == oracle::count_solutions(3, n, 100), "solution count n=" + std::to_string(n));
        o.require(r.passed == r.checked && !r.has_findings(), "witness n=" + std::to_string(n));
    }
    o.require(seconds_since(start) < 30.0, "runtime < 30 s");
}

void c4(Outcome& o)
{
    std::uint64_t total = 0;
    for (unsigned m = 3; m <= 5; ++m)
        for (unsigned n = 2; n <= 6; ++n) {
            const AuditReport r = audit_soundness_theorem6(m, n, {1000, 1000 * m + n, 16});
            total += r.checked;
            o.require(r.checked == 1000 && r.passed == 1000 && r.sound_failures.empty(),
                      "m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    o.detail << " " << total << " trees, 0 allowed failures";
}

void c5(Outcome& o)
{
    struct Case {
        unsigned m, n;
        u64 z;
    };
    for (const Case c : {Case{3, 2, 200}, Case{3, 3, 60}, Case{4, 2, 50}}) {
        const auto start = Clock::now();
        const AuditReport r = audit_completeness(c.m, c.n, c.z, 1);
        const double t = seconds_since(start);
        const std::string tag = "(" + std::to_string(c.m) + "," + std::to_string(c.n) + ",z<=" + std::to_string(c.z) + ")";
        o.detail << " " << tag << ":" << r.checked << " solutions " << r.coverage_gaps.size() << " gaps";
        o.require(r.checked == oracle::count_solutions(c.m, c.n, c.z), "solution count " + tag);
        o.require(r.coverage_gaps.empty() && r.passed == r.checked, "gaps " + tag);
        o.require(t < 120.0, "runtime < 2 min " + tag);
    }
}

void c6(Outcome& o)
{
    std::uint64_t total = 0;
    for (unsigned n = 2; n <= 9; ++n) {
        const AuditReport r = audit_theta(n, {1250, 600 + n, 50});
        total += r.checked;
        o.require(r.sound_failures.empty() && r.passed == r.checked, "n=" + std::to_string(n));
    }
    o.detail << " " << total << " parameter sets";
    o.require(total == 10000, "10^4 samples");
}

void c7(Outcome& o)
{
    const ExampleAudit one = audit_printed_example(1);
    o.require(parameters(one.family).size() == 11, "example1-printed has 11 parameters");
    o.require(one.verdicts.size() == 2 && one.verdicts[0].pass && one.verdicts[1].pass,
              "example1-printed passes both identities");

    const ExampleAudit two = audit_printed_example(2);
    o.require(two.verdicts.size() == 2, "example2-printed has two equations");
    const ExponentDiff expected{{"r1", 1}, {"r2", 1}};
    o.require(!two.verdicts[0].pass && two.verdicts[0].residual == expected,
              "example2-printed first equation residual {r1:+1, r2:+1}, got " + to_string(two.verdicts[0].residual));
    o.require(two.verdicts[1].pass, "example2-printed second equation passes");

    const ParametricFamily fixed = example2_corrected();
    for (const Equation& eq : fixed.equations)
        o.require(verify_identity(fixed, eq).pass, "corrected " + eq.to_string());
    const AuditReport r = audit_soundness(fixed, {500, 7, 20});
    o.require(r.checked == 500 && r.passed == 500 && r.sound_failures.empty(), "corrected numeric instantiations");
    o.detail << " example1-printed pass/pass; example2-printed " << to_string(two.verdicts[0].residual)
             << "; corrected 500/500";
}

void c8(Outcome& o)
{
    const AuditReport r = audit_theorem3_coverage(20, 5, 2);
    u64 expected = 0;
    for (u64 x = 1; x <= 20; ++x)
        for (u64 y = 1; y <= 20; ++y)
            for (u64 k = 1; k <= 5; ++k) {
                if ((x * y) % k)
                    continue;
                const u64 q = x * y / k;
                for (u64 z = 1; z * z <= q; ++z)
                    expected += z * z == q;
            }
    o.require(r.checked == expected, "solution count");
    o.require(r.sound_failures.empty() && r.passed + r.coverage_gaps.size() == r.checked, "two-way partition");
    const Record needle{{"x", nat(2)}, {"y", nat(2)}, {"z", nat(2)}, {"k", nat(1)}};
    o.require(std::find(r.coverage_gaps.begin(), r.coverage_gaps.end(), needle) != r.coverage_gaps.end(),
              "gap (2,2,2,1) listed");
    for (const Record& g : r.coverage_gaps) {
        const u64 x = testutil::u64(g[0].second), y = testutil::u64(g[1].second);
        const u64 z = testutil::u64(g[2].second), k = testutil::u64(g[3].second);
        o.require(!oracle::theorem3_reachable(x, y, z, k, 2), "gap reachable by exhaustive search");
    }
    o.detail << " " << r.checked << " solutions = " << r.passed << " recovered + " << r.coverage_gaps.size()
             << " gaps";
}

void c9(Outcome& o)
{
    o.require(parameter_count(3, 2).count == 3, "(3,2) -> 3");
    o.require(parameter_count(3, 3).count == 5, "(3,3) -> 5");
    o.require(parameter_count(4, 2).count == 6, "(4,2) -> 6");
    for (unsigned m = 3; m <= 50; ++m)
        for (unsigned n = 2; n <= 50; ++n) {
            const u64 num = n % 2 ? u64(m - 1) * (m + n - 1) : u64(m - 1) * (m + n - 2);
            if (num % 2 != 0 || parameter_count(m, n).count != num / 2)
                o.require(false, "integer count m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    o.detail << " 3, 5, 6; integral for m, n <= 50";
}

void c10(Outcome& o)
{
    auto twice = [&](const std::string& what, const std::function<AuditReport()>& f) {
        o.require(dump(to_json(f())) == dump(to_json(f())), what);
    };
    twice("theorem6 soundness", [] { return audit_soundness_theorem6(5, 5, {500, 42, 16}); });
    twice("family soundness", [] { return audit_soundness(example2_printed(), {500, 42, 16}); });
    twice("theta", [] { return audit_theta(8, {500, 42, 16}); });
    twice("completeness", [] { return audit_completeness(4, 3, 6, 1); });
    twice("completeness, parallel", [] { return audit_completeness(4, 3, 6, 3); });
    o.require(dump(to_json(audit_completeness(4, 3, 6, 1))) == dump(to_json(audit_completeness(4, 3, 6, 3))),
              "job count does not change the report");
    twice("theorem3 coverage", [] { return audit_theorem3_coverage(20, 5, 2); });
    o.detail << " byte-identical JSON reports for repeated runs";
}

} // namespace

int main()
{
    criterion(1, "symbolic identity w^(n-2) = v*d^2 for n = 2..12", c1);
    criterion(2, "w^(n-2) = v*d^2 recovery round-trips for w <= 2000, n = 2..7", c2);
    criterion(3, "reduction witness on m = 3, n in {2,3}, z <= 100", c3);
    criterion(4, "1000 random trees per (m,n) in {3,4,5}x{2..6} are solutions", c4);
    criterion(5, "no coverage gaps at desk scale", c5);
    criterion(6, "theta = w*d over 10^4 parameter sets, n = 2..9", c6);
    criterion(7, "published example families", c7);
    criterion(8, "two-parameter-pair family coverage over x,y <= 20, k <= 5, n = 2", c8);
    criterion(9, "parameter count", c9);
    criterion(10, "audit determinism", c10);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures;
}
