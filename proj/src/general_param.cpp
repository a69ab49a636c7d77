#include "prodpow/general_param.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "prodpow/coprime_decomp.hpp"

namespace prodpow {

namespace {

void require_shape(unsigned m, unsigned n)
{
    if (m < 3)
        throw Error(ErrorKind::InvalidArgument, "m must be >= 3");
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "n must be >= 2");
}

// Solves X*a_next = a_prev*P^{n-1} for alpha | a_prev, gamma | P with
// X = alpha*gamma^{n-1}. Coprime X, a_next is exactly the two-way split;
// otherwise gamma takes as much of P as X allows, block by block.
std::optional<Stage> split_stage(const Nat& X, const Nat& a_next, const Nat& a_prev, const Nat& P, unsigned n)
{
    if (gcd(X, a_next) == 1) {
        const Theorem2Split t = theorem2_split(X, a_next, a_prev, P, n - 1);
        return Stage{t.sigma, t.varsigma, t.a1, t.b1};
    }
    const std::array<Nat, 3> values{X, a_prev, P};
    Stage s;
    const unsigned long step = n - 1;
    for (const Nat& b : coprime_base(values)) {
        const unsigned long x = valuation(X, b);
        const unsigned long g = std::min(valuation(P, b), x / step);
        const unsigned long al = x - step * g;
        if (al > valuation(a_prev, b))
            return std::nullopt;
        s.alpha *= pow(b, al);
        s.gamma *= pow(b, g);
    }
    s.beta = a_prev / s.alpha;
    s.eta = P / s.gamma;
    if (s.beta * pow(s.eta, step) != a_next)
        return std::nullopt;
    return s;
}

Nat uniform(std::mt19937_64& rng, unsigned max_value)
{
    std::uniform_int_distribution<unsigned> dist(1, std::max(1u, max_value));
    return Nat(dist(rng));
}

int floor_half(int v)
{
    return v >= 0 ? v / 2 : -((-v + 1) / 2);
}

} // namespace

std::variant<ParamTree, CoverageGap> theorem6_decompose(const Solution& solution)
{
    require_valid(solution);
    const unsigned m = solution.m();
    const unsigned n = solution.n;
    const ReductionWitness red = theorem4_reduce(solution);

    auto base = theorem5_recover(red.w, red.d, red.v, n);
    if (auto* gap = std::get_if<CoverageGap>(&base))
        return CoverageGap{"base: " + gap->reason};

    ParamTree tree;
    tree.base = std::get<Theorem5Recovery>(base).params;
    Nat a = red.v;
    Nat Z = red.Z0;
    for (unsigned i = 0; i + 3 < m; ++i) {
        const Nat& x = solution.xs[i];
        const Nat P = gcd(x, Z);
        const Nat X = x / P;
        Z /= P;
        const Nat num = a * pow(P, n - 1);
        if (!divides(X, num))
            throw Error(ErrorKind::Defect, "theorem6_decompose: X_i does not divide a_{i-1} P_i^(n-1)");
        const Nat a_next = num / X;
        auto stage = split_stage(X, a_next, a, P, n);
        if (!stage)
            return CoverageGap{"stage " + std::to_string(i + 1) + ": x_" + std::to_string(i + 1) + "/P = " +
                               X.get_str() + " has no split alpha*gamma^(n-1) with alpha | " + a.get_str() +
                               ", gamma | " + P.get_str()};
        tree.stages.push_back(*stage);
        a = a_next;
    }
    if (red.X_second * red.X_top != a * pow(Z, n))
        throw Error(ErrorKind::Defect, "theorem6_decompose: terminal equation does not hold");
    const Theorem2Split t = theorem2_split(red.X_second, red.X_top, a, Z, n);
    tree.terminal = Terminal{t.sigma, t.varsigma, t.a1, t.b1};

    if (theorem6_generate(tree, m, n) != solution)
        return CoverageGap{"tree does not regenerate " + solution.to_string()};
    return tree;
}

Solution theorem6_generate(const ParamTree& tree, unsigned m, unsigned n)
{
    require_shape(m, n);
    if (tree.stages.size() + 3 != m)
        throw Error(ErrorKind::InvalidArgument, "tree has " + std::to_string(tree.stages.size()) +
                                                    " stages, m=" + std::to_string(m) + " needs " +
                                                    std::to_string(m - 3));
    if (tree.base.n != n)
        throw Error(ErrorKind::InvalidArgument, "tree base is for n=" + std::to_string(tree.base.n) +
                                                    ", requested n=" + std::to_string(n));
    const Theorem5Triple base = theorem5_generate(tree.base);
    const Nat theta = base.w * base.d;

    Solution s;
    s.n = n;
    Nat a = base.v;
    Nat z = base.w;
    for (std::size_t i = 0; i < tree.stages.size(); ++i) {
        const Stage& st = tree.stages[i];
        for (const Nat* v : {&st.alpha, &st.beta, &st.gamma, &st.eta})
            require_positive(*v, "stage parameter");
        if (st.alpha * st.beta != a)
            throw Error(ErrorKind::InvalidArgument, "inconsistent tree: stage " + std::to_string(i + 1) +
                                                        " alpha*beta != a_" + std::to_string(i) + " = " +
                                                        a.get_str());
        s.xs.push_back(st.alpha * pow(st.gamma, n) * st.eta);
        a = st.beta * pow(st.eta, n - 1);
        z *= st.gamma * st.eta;
    }
    const Terminal& t = tree.terminal;
    for (const Nat* v : {&t.alpha_last, &t.beta_last, &t.s1, &t.s2})
        require_positive(*v, "terminal parameter");
    if (t.alpha_last * t.beta_last != a)
        throw Error(ErrorKind::InvalidArgument, "inconsistent tree: alpha_last*beta_last != a_" +
                                                    std::to_string(m - 3) + " = " + a.get_str());
    s.xs.push_back(theta * t.alpha_last * pow(t.s1, n));
    s.xs.push_back(theta * t.beta_last * pow(t.s2, n));
    s.z = z * t.s1 * t.s2;
    if (!s.satisfied())
        throw Error(ErrorKind::Defect, "theorem6_generate produced a non-solution " + s.to_string());
    return s;
}

std::vector<std::string> coprimality_violations(const ParamTree& tree)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < tree.stages.size(); ++i) {
        const Stage& st = tree.stages[i];
        const std::string idx = std::to_string(i + 1);
        if (gcd(st.alpha, st.beta) != 1)
            out.push_back("gcd(alpha_" + idx + ", beta_" + idx + ") = " + gcd(st.alpha, st.beta).get_str());
        if (gcd(st.gamma, st.eta) != 1)
            out.push_back("gcd(gamma_" + idx + ", eta_" + idx + ") = " + gcd(st.gamma, st.eta).get_str());
    }
    const Terminal& t = tree.terminal;
    if (gcd(t.alpha_last, t.beta_last) != 1)
        out.push_back("gcd(alpha_last, beta_last) = " + gcd(t.alpha_last, t.beta_last).get_str());
    if (gcd(t.s1, t.s2) != 1)
        out.push_back("gcd(s1, s2) = " + gcd(t.s1, t.s2).get_str());
    return out;
}

ParamTree all_ones_tree(unsigned m, unsigned n)
{
    require_shape(m, n);
    ParamTree tree;
    tree.stages.resize(m - 3);
    tree.base = theorem5_all_ones(n);
    return tree;
}

ParamTree random_param_tree(unsigned m, unsigned n, std::mt19937_64& rng, unsigned max_value)
{
    require_shape(m, n);
    ParamTree tree;
    tree.base.n = n;
    for (std::size_t i = 0; i < theorem5_rs_length(n); ++i)
        tree.base.rs.push_back(uniform(rng, max_value));
    tree.base.tail = uniform(rng, max_value);

    Nat a = theorem5_generate(tree.base).v;
    for (unsigned i = 0; i + 3 < m; ++i) {
        Stage st;
        st.gamma = uniform(rng, max_value);
        st.eta = uniform(rng, max_value);
        st.eta /= gcd(st.gamma, st.eta);
        st.alpha = support_part(a, uniform(rng, max_value)).in_part;
        st.beta = a / st.alpha;
        a = st.beta * pow(st.eta, n - 1);
        tree.stages.push_back(st);
    }
    Terminal& t = tree.terminal;
    t.alpha_last = support_part(a, uniform(rng, max_value)).in_part;
    t.beta_last = a / t.alpha_last;
    t.s1 = uniform(rng, max_value);
    t.s2 = uniform(rng, max_value);
    t.s2 /= gcd(t.s1, t.s2);
    return tree;
}

namespace {

// Mutable state of the symbolic recursion.
struct FamilyBuilder {
    Monomial w, d, zprod;
    std::vector<Monomial> xs;
    std::vector<std::pair<std::string, std::string>> constraints;

    // Splits every parameter of `a` into alpha/beta copies; returns both sides.
    std::pair<Monomial, Monomial> split(const Monomial& a)
    {
        std::map<std::string, Monomial> rules;
        Monomial alpha, beta;
        for (const auto& [p, e] : a.exponents()) {
            rules[p] = Monomial::var(p + "a") * Monomial::var(p + "b");
            alpha *= Monomial::var(p + "a", e);
            beta *= Monomial::var(p + "b", e);
        }
        w = w.substitute(rules);
        d = d.substitute(rules);
        zprod = zprod.substitute(rules);
        for (auto& x : xs)
            x = x.substitute(rules);
        std::vector<std::pair<std::string, std::string>> expanded;
        auto atoms = [&](const std::string& p) {
            std::vector<std::string> out;
            auto it = rules.find(p);
            if (it == rules.end())
                out.push_back(p);
            else
                for (const auto& [q, e] : it->second.exponents())
                    out.push_back(q);
            return out;
        };
        for (const auto& [p, q] : constraints)
            for (const auto& pp : atoms(p))
                for (const auto& qq : atoms(q))
                    expanded.emplace_back(pp, qq);
        for (const auto& [p, e] : a.exponents())
            expanded.emplace_back(p + "a", p + "b");
        constraints = std::move(expanded);
        return {alpha, beta};
    }
};

} // namespace

ParametricFamily theorem6_family(unsigned m, unsigned n)
{
    require_shape(m, n);
    const auto N = static_cast<Exponent>(n);
    const ParametricFamily base = theorem5_family(n);

    FamilyBuilder b;
    b.w = base.variables.at("w");
    b.d = base.variables.at("d");
    Monomial a = base.variables.at("v");
    for (unsigned i = 1; i + 2 < m; ++i) {
        const std::string gamma = "gamma" + std::to_string(i);
        const std::string eta = "eta" + std::to_string(i);
        auto [alpha, beta] = b.split(a);
        b.xs.push_back(alpha * Monomial::var(gamma, N) * Monomial::var(eta));
        b.zprod *= Monomial::var(gamma) * Monomial::var(eta);
        b.constraints.emplace_back(gamma, eta);
        a = beta * Monomial::var(eta, N - 1);
    }
    auto [alpha, beta] = b.split(a);
    const Monomial theta = b.w * b.d;
    b.xs.push_back(theta * alpha * Monomial::var("s1", N));
    b.xs.push_back(theta * beta * Monomial::var("s2", N));
    b.constraints.emplace_back("s1", "s2");

    ParametricFamily f;
    f.id = "theorem6-m" + std::to_string(m) + "-n" + std::to_string(n);
    Equation eq{{}, "z", n, {}};
    for (std::size_t j = 0; j < b.xs.size(); ++j) {
        const std::string name = "x" + std::to_string(j + 1);
        f.variables[name] = b.xs[j];
        eq.lhs.push_back(name);
    }
    f.variables["z"] = b.w * b.zprod * Monomial::var("s1") * Monomial::var("s2");
    f.constraints = std::move(b.constraints);
    f.equations.push_back(std::move(eq));
    return f;
}

PrintedFamilyAudit theorem6_printed_family(unsigned m, unsigned n)
{
    require_shape(m, n);
    const int M = static_cast<int>(m);
    const int Nn = static_cast<int>(n);
    const bool odd = n % 2;
    const auto k = [](int t, int idx) { return "k" + std::to_string(t) + "_" + std::to_string(idx); };
    const auto l = [](int t, int idx) { return "l" + std::to_string(t) + "_" + std::to_string(idx); };
    const auto gamma = [](int sup, int sub) { return "gamma" + std::to_string(sup) + "_" + std::to_string(sub); };
    const auto eta = [](int sup, int sub) { return "eta" + std::to_string(sup) + "_" + std::to_string(sub); };
    const auto var = [](const std::string& name, int e) { return Monomial::var(name, e); };

    // Upper limits as printed: x_j and x_{m-1} use (n-3)/2 or (n-4)/2 by
    // parity, x_{m-2} and z always (n-3)/2.
    const int upper_main = odd ? (Nn - 3) / 2 : floor_half(Nn - 4);
    const int upper_n3 = floor_half(Nn - 3);
    const std::string tail = odd ? "g" : "h";
    const int tail_exp = odd ? Nn : Nn / 2;

    ParametricFamily f;
    f.id = "theorem6-printed-m" + std::to_string(m) + "-n" + std::to_string(n);
    Equation eq{{}, "z", n, {}};

    for (int j = 1; j <= M - 3; ++j) {
        Monomial x;
        for (int i = 0; i <= upper_main; ++i)
            x *= var(k(j - 1, 2 * i + 1), Nn - 2 * i - 2);
        Monomial inner;
        for (int t = 1; t <= j - 1; ++t)
            inner *= var(gamma(j - t, t), 1);
        for (int t = 1; t <= j; ++t)
            inner *= var(gamma(j - t, j), 1);
        x *= mono_pow(inner, Nn - 1);
        x *= var(gamma(0, j), 1);  // trailing gamma^{j-t}_j with t bound to j
        x *= var(eta(M - 2 - j, j), 1);
        f.variables["x" + std::to_string(j)] = x;
        eq.lhs.push_back("x" + std::to_string(j));
    }

    Monomial second, top;
    for (int t = 1; t <= M - 3; ++t) {
        for (int i = 0; i <= upper_n3; ++i)
            second *= mono_pow(var(k(t - 1, 2 * i + 1), 1) * var(l(M - 3, 2 * i + 1), 1), i + 1) *
                      var(k(M - 3, 2 * i + 1), Nn - 2 * i - 2);
        second *= var(gamma(M - 2 - t, t), Nn - 1);
        for (int i = 0; i <= upper_main; ++i)
            top *= mono_pow(var(k(t - 1, 2 * i + 1), 1) * var(l(M - 3, 2 * i + 1), 1), i + 1) *
                   var(l(M - 3, 2 * i + 1), Nn - 2 * i - 2);
        top *= var(eta(M - 2 - t, t), Nn - 1);
    }
    second *= var("s2", Nn) * var(tail, tail_exp);
    top *= var("s1", Nn) * var(tail, tail_exp);
    f.variables["x" + std::to_string(M - 2)] = second;
    f.variables["x" + std::to_string(M - 1)] = top;
    eq.lhs.push_back("x" + std::to_string(M - 2));
    eq.lhs.push_back("x" + std::to_string(M - 1));

    Monomial z;
    for (int lam = 1; lam <= M - 3; ++lam)
        for (int i = 0; i <= upper_n3; ++i)
            z *= var(k(lam - 1, 2 * i + 1), 1) *
                 var(odd ? "l_" + std::to_string(2 * i + 1) : l(M - 3, 2 * i + 1), 1);
    for (int i = 1; i <= M - 3; ++i)
        for (int lam = 0; lam <= M - 2 - i; ++lam)
            z *= var(odd ? "eta_" + std::to_string(i) : eta(lam, i), 1) * var(gamma(lam, i), 1);
    z *= var("s1", 1) * var("s2", 1) * var("g", 2);
    f.variables["z"] = z;

    f.constraints.emplace_back("s1", "s2");
    f.equations.push_back(eq);
    f.notes = "printed closed forms, superscripts read as labels; trailing gamma^{j-t}_j bound at t=j";

    PrintedFamilyAudit out;
    out.verdict = verify_identity(f, f.equations.front());
    out.family = std::move(f);
    return out;
}

ParamCount parameter_count(unsigned m, unsigned n)
{
    require_shape(m, n);
    const std::uint64_t mm = m, nn = n;
    const std::uint64_t num = n % 2 ? (mm - 1) * (mm + nn - 1) : (mm - 1) * (mm + nn - 2);
    return ParamCount{m, n, num / 2};
}

} // namespace prodpow
