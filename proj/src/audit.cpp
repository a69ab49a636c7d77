#include "prodpow/audit.hpp"

#include <chrono>
#include <exception>
#include <random>
#include <thread>
#include <variant>

#include "prodpow/coprime_decomp.hpp"
#include "prodpow/errors.hpp"
#include "prodpow/power_reduction.hpp"

namespace prodpow {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void split_ordered(const std::vector<Nat>& divs, const Nat& rem, std::size_t slots, std::vector<Nat>& prefix,
                   const Nat& z, unsigned n, const std::function<void(const Solution&)>& sink)
{
    if (slots == 1) {
        prefix.push_back(rem);
        sink(Solution{prefix, z, n});
        prefix.pop_back();
        return;
    }
    for (const Nat& d : divs) {
        if (d > rem)
            break;
        if (!divides(d, rem))
            continue;
        prefix.push_back(d);
        split_ordered(divs, rem / d, slots - 1, prefix, z, n, sink);
        prefix.pop_back();
    }
}

// Trial-division factorization for the oracle side; w stays small.
std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t v)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        unsigned e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    }
    if (v > 1)
        out.emplace_back(v, 1);
    return out;
}

unsigned effective_jobs(std::uint64_t z_bound, unsigned jobs)
{
    return std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::uint64_t>(1, z_bound))));
}

// Contiguous z ranges, one per job; work(job, lo, hi).
template <typename F>
void run_partitioned(std::uint64_t z_bound, unsigned jobs, F&& work)
{
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (z_bound + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
        const std::uint64_t lo = j * chunk + 1;
        const std::uint64_t hi = std::min(z_bound, (j + 1) * chunk);
        auto task = [&, j, lo, hi] {
            try {
                if (lo <= hi)
                    work(j, lo, hi);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        };
        if (jobs == 1)
            task();
        else
            threads.emplace_back(task);
    }
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

Record solution_record(const Solution& s)
{
    Record r;
    for (std::size_t i = 0; i < s.xs.size(); ++i)
        r.emplace_back("x" + std::to_string(i + 1), s.xs[i]);
    r.emplace_back("z", s.z);
    return r;
}

} // namespace

AuditReport merge_reports(AuditReport a, const AuditReport& b)
{
    if (a.family_id.empty())
        a.family_id = b.family_id;
    a.checked += b.checked;
    a.passed += b.passed;
    a.sound_failures.insert(a.sound_failures.end(), b.sound_failures.begin(), b.sound_failures.end());
    a.coverage_gaps.insert(a.coverage_gaps.end(), b.coverage_gaps.begin(), b.coverage_gaps.end());
    a.elapsed_seconds += b.elapsed_seconds;
    return a;
}

void require_enumerable(unsigned m, unsigned n, std::uint64_t z_bound)
{
    if (m < 3 || n < 2)
        throw Error(ErrorKind::InvalidArgument, "enumeration needs m >= 3 and n >= 2");
    if (pow(Nat(std::to_string(z_bound)), n) > Nat(std::to_string(kDefaultDivisorGuard)))
        throw Error(ErrorKind::GuardExceeded, "z_bound^n = " + std::to_string(z_bound) + "^" + std::to_string(n) +
                                                  " exceeds the enumeration guard " +
                                                  std::to_string(kDefaultDivisorGuard));
}

void for_each_solution(unsigned m, unsigned n, std::uint64_t z_first, std::uint64_t z_last,
                       const std::function<void(const Solution&)>& sink)
{
    require_enumerable(m, n, z_last);
    std::vector<Nat> prefix;
    for (std::uint64_t zz = std::max<std::uint64_t>(1, z_first); zz <= z_last; ++zz) {
        const Nat z(std::to_string(zz));
        const Nat target = pow(z, n);
        split_ordered(divisors(target), target, m - 1, prefix, z, n, sink);
    }
}

std::vector<Solution> enumerate_solutions(unsigned m, unsigned n, std::uint64_t z_bound, unsigned jobs)
{
    require_enumerable(m, n, z_bound);
    jobs = effective_jobs(z_bound, jobs);
    std::vector<std::vector<Solution>> chunks(jobs);
    run_partitioned(z_bound, jobs, [&](unsigned job, std::uint64_t lo, std::uint64_t hi) {
        for_each_solution(m, n, lo, hi, [&](const Solution& s) { chunks[job].push_back(s); });
    });
    std::vector<Solution> out;
    for (auto& c : chunks)
        out.insert(out.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
    return out;
}

AuditReport audit_soundness(const ParametricFamily& family, const SamplerOptions& options)
{
    const auto start = Clock::now();
    AuditReport report;
    report.family_id = family.id;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<unsigned> dist(1, std::max(1u, options.max_value));
    const auto names = parameters(family);
    for (std::uint64_t i = 0; i < options.samples; ++i) {
        Assignment assignment;
        for (const auto& name : names)
            assignment.emplace(name, Nat(dist(rng)));
        const Instantiation inst = instantiate(family, assignment);
        ++report.checked;
        bool ok = true;
        for (const auto& eq : family.equations) {
            if (holds(eq, inst.values))
                continue;
            ok = false;
            report.sound_failures.push_back({Record(assignment.begin(), assignment.end()), eq.to_string()});
        }
        report.passed += ok;
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

Record flatten(const ParamTree& tree)
{
    Record r;
    for (std::size_t i = 0; i < tree.base.rs.size(); ++i)
        r.emplace_back("r" + std::to_string(2 * i + 1), tree.base.rs[i]);
    r.emplace_back(tree.base.n % 2 ? "g" : "h", tree.base.tail);
    for (std::size_t i = 0; i < tree.stages.size(); ++i) {
        const std::string p = "stage" + std::to_string(i + 1) + ".";
        r.emplace_back(p + "alpha", tree.stages[i].alpha);
        r.emplace_back(p + "beta", tree.stages[i].beta);
        r.emplace_back(p + "gamma", tree.stages[i].gamma);
        r.emplace_back(p + "eta", tree.stages[i].eta);
    }
    r.emplace_back("alpha_last", tree.terminal.alpha_last);
    r.emplace_back("beta_last", tree.terminal.beta_last);
    r.emplace_back("s1", tree.terminal.s1);
    r.emplace_back("s2", tree.terminal.s2);
    return r;
}

AuditReport audit_soundness_theorem6(unsigned m, unsigned n, const SamplerOptions& options)
{
    const auto start = Clock::now();
    AuditReport report;
    report.family_id = "theorem6-generate-m" + std::to_string(m) + "-n" + std::to_string(n);
    std::mt19937_64 rng(options.seed);
    const std::string equation = "x1*...*x" + std::to_string(m - 1) + " = z^" + std::to_string(n);
    for (std::uint64_t i = 0; i < options.samples; ++i) {
        const ParamTree tree = random_param_tree(m, n, rng, options.max_value);
        const Solution s = theorem6_generate(tree, m, n);
        ++report.checked;
        if (s.satisfied())
            ++report.passed;
        else
            report.sound_failures.push_back({flatten(tree), equation});
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

AuditReport audit_completeness(unsigned m, unsigned n, std::uint64_t z_bound, unsigned jobs)
{
    require_enumerable(m, n, z_bound);
    const auto start = Clock::now();
    jobs = effective_jobs(z_bound, jobs);
    std::vector<AuditReport> parts(jobs);
    run_partitioned(z_bound, jobs, [&](unsigned job, std::uint64_t lo, std::uint64_t hi) {
        AuditReport& part = parts[job];
        for_each_solution(m, n, lo, hi, [&](const Solution& s) {
            ++part.checked;
            auto tree = theorem6_decompose(s);
            if (std::holds_alternative<ParamTree>(tree) &&
                theorem6_generate(std::get<ParamTree>(tree), m, n) == s)
                ++part.passed;
            else
                part.coverage_gaps.push_back(solution_record(s));
        });
    });
    AuditReport report;
    for (const auto& p : parts)
        report = merge_reports(std::move(report), p);
    report.family_id = "theorem6-completeness-m" + std::to_string(m) + "-n" + std::to_string(n) + "-z" +
                       std::to_string(z_bound);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

AuditReport audit_theorem4(unsigned m, unsigned n, std::uint64_t z_bound)
{
    const auto start = Clock::now();
    AuditReport report;
    report.family_id = "theorem4-m" + std::to_string(m) + "-n" + std::to_string(n) + "-z" + std::to_string(z_bound);
    for_each_solution(m, n, 1, z_bound, [&](const Solution& s) {
        ++report.checked;
        if (witness_holds(s, theorem4_reduce(s)))
            ++report.passed;
        else
            report.coverage_gaps.push_back(solution_record(s));
    });
    report.elapsed_seconds = seconds_since(start);
    return report;
}

AuditReport audit_theorem5_completeness(unsigned n, std::uint64_t w_bound)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "n must be >= 2");
    const auto start = Clock::now();
    AuditReport report;
    report.family_id = "theorem5-completeness-n" + std::to_string(n) + "-w" + std::to_string(w_bound);
    for (std::uint64_t wv = 1; wv <= w_bound; ++wv) {
        const Nat w(std::to_string(wv));
        const Nat wn2 = pow(w, n - 2);
        // d ranges over products of p^e with 2e <= (n-2)*v_p(w).
        std::vector<Nat> ds{Nat(1)};
        for (auto [p, e] : factor_small(wv)) {
            const unsigned cap = (n - 2) * e / 2;
            std::vector<Nat> next;
            for (const Nat& d : ds) {
                Nat q = d;
                for (unsigned k = 0; k <= cap; ++k, q *= static_cast<unsigned long>(p))
                    next.push_back(q);
            }
            ds = std::move(next);
        }
        for (const Nat& d : ds) {
            const Nat v = wn2 / (d * d);
            ++report.checked;
            auto rec = theorem5_recover(w, d, v, n);
            if (std::holds_alternative<Theorem5Recovery>(rec) &&
                theorem5_generate(std::get<Theorem5Recovery>(rec).params) == Theorem5Triple{w, d, v})
                ++report.passed;
            else
                report.coverage_gaps.push_back({{"w", w}, {"d", d}, {"v", v}});
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

AuditReport audit_theta(unsigned n, const SamplerOptions& options)
{
    const auto start = Clock::now();
    AuditReport report;
    report.family_id = "theta-n" + std::to_string(n);
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<unsigned> dist(1, std::max(1u, options.max_value));
    for (std::uint64_t i = 0; i < options.samples; ++i) {
        Theorem5Params p{n, {}, Nat(dist(rng))};
        for (std::size_t k = 0; k < theorem5_rs_length(n); ++k)
            p.rs.push_back(Nat(dist(rng)));
        const Theorem5Triple t = theorem5_generate(p);
        ++report.checked;
        if (theta_compute(p) == t.w * t.d) {
            ++report.passed;
        } else {
            Record r;
            for (std::size_t k = 0; k < p.rs.size(); ++k)
                r.emplace_back("r" + std::to_string(2 * k + 1), p.rs[k]);
            r.emplace_back(n % 2 ? "g" : "h", p.tail);
            report.sound_failures.push_back({r, "theta = w*d"});
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

AuditReport audit_theorem3_coverage(std::uint64_t xy_bound, std::uint64_t k_bound, unsigned n)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "n must be >= 2");
    const auto start = Clock::now();
    AuditReport report;
    report.family_id = "theorem3-coverage-n" + std::to_string(n);
    for (std::uint64_t xv = 1; xv <= xy_bound; ++xv)
        for (std::uint64_t yv = 1; yv <= xy_bound; ++yv)
            for (std::uint64_t kv = 1; kv <= k_bound; ++kv) {
                const Nat x(std::to_string(xv)), y(std::to_string(yv)), k(std::to_string(kv));
                const Nat xy = x * y;
                if (!divides(k, xy))
                    continue;
                auto z = nth_root_exact(xy / k, n);
                if (!z)
                    continue;
                ++report.checked;
                Record record{{"x", x}, {"y", y}, {"z", *z}, {"k", k}};
                const auto rec = theorem3_recover(x, y, *z, k, n);
                if (!std::holds_alternative<Theorem3Params>(rec))
                    report.coverage_gaps.push_back(std::move(record));
                else if (theorem3_generate(std::get<Theorem3Params>(rec), n) == Theorem3Solution{x, y, *z, k})
                    ++report.passed;
                else
                    report.sound_failures.push_back({std::move(record), "x*y = k*z^n"});
            }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

} // namespace prodpow
