#include "prodpow/system_solver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "prodpow/errors.hpp"
#include "prodpow/general_param.hpp"

namespace prodpow {

namespace {

using Vec = std::vector<Exponent>;

// All vectors v >= 0 with sum(v) <= budget, passed to `emit`.
template <typename F>
void for_each_bounded(std::size_t len, Exponent budget, Vec& v, std::size_t pos, F&& emit)
{
    if (pos == len) {
        emit(v);
        return;
    }
    for (Exponent k = 0; k <= budget; ++k) {
        v[pos] = k;
        for_each_bounded(len, budget - k, v, pos + 1, emit);
    }
    v[pos] = 0;
}

// Vectors v >= 0 with sum(v) <= budget and coeff . v = target.
template <typename F>
void for_each_weighted(std::span<const Exponent> coeff, Exponent target, Exponent budget, Vec& v, std::size_t pos,
                       F&& emit)
{
    if (pos == coeff.size()) {
        if (target == 0)
            emit(v);
        return;
    }
    for (Exponent k = 0; k <= budget && k * coeff[pos] <= target; ++k) {
        v[pos] = k;
        for_each_weighted(coeff, target - k * coeff[pos], budget - k, v, pos + 1, emit);
    }
    v[pos] = 0;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

std::vector<Vec> hilbert_basis(std::span<const Exponent> lhs, std::span<const Exponent> rhs, std::size_t guard)
{
    for (Exponent c : lhs)
        if (c <= 0)
            throw Error(ErrorKind::InvalidArgument, "hilbert_basis: coefficients must be positive");
    for (Exponent c : rhs)
        if (c <= 0)
            throw Error(ErrorKind::InvalidArgument, "hilbert_basis: coefficients must be positive");
    if (lhs.empty() || rhs.empty())
        return {};

    // Minimal solutions satisfy sum(alpha) <= max(rhs), sum(beta) <= max(lhs).
    const Exponent max_l = *std::max_element(lhs.begin(), lhs.end());
    const Exponent max_r = *std::max_element(rhs.begin(), rhs.end());
    std::vector<Vec> candidates;
    std::size_t visited = 0;
    Vec alpha(lhs.size(), 0), beta(rhs.size(), 0);
    for_each_bounded(lhs.size(), max_r, alpha, 0, [&](const Vec& a) {
        if (++visited > guard)
            throw Error(ErrorKind::UnsupportedScope, "hilbert_basis: enumeration guard exceeded");
        Exponent target = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            target += a[i] * lhs[i];
        if (target == 0)
            return;
        for_each_weighted(rhs, target, max_l, beta, 0, [&](const Vec& b) {
            Vec s = a;
            s.insert(s.end(), b.begin(), b.end());
            candidates.push_back(std::move(s));
        });
    });

    auto total = [](const Vec& v) { return std::accumulate(v.begin(), v.end(), Exponent{0}); };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const Vec& a, const Vec& b) { return total(a) < total(b); });
    std::vector<Vec> basis;
    for (const Vec& c : candidates) {
        const bool reducible = std::any_of(basis.begin(), basis.end(), [&](const Vec& h) {
            for (std::size_t i = 0; i < h.size(); ++i)
                if (h[i] > c[i])
                    return false;
            return true;
        });
        if (!reducible)
            basis.push_back(c);
    }
    std::sort(basis.begin(), basis.end(), std::greater<>());
    return basis;
}

SystemFamily solve_system(const SystemSpec& spec)
{
    if (spec.equations.empty())
        throw Error(ErrorKind::InvalidArgument, "system has no equations");
    const std::size_t s = spec.equations.size();

    std::map<std::string, std::vector<std::size_t>> occurrences;
    std::vector<std::string> order;  // shared variables by first appearance
    std::size_t total_slots = 0;
    for (std::size_t e = 0; e < s; ++e) {
        const SystemEquation& eq = spec.equations[e];
        if (eq.vars.size() < 3)
            throw Error(ErrorKind::InvalidArgument, "equation " + std::to_string(e + 1) + " needs at least 3 variables");
        if (eq.n < 2)
            throw Error(ErrorKind::InvalidArgument, "equation " + std::to_string(e + 1) + " needs n >= 2");
        std::set<std::string> seen;
        for (const auto& v : eq.vars) {
            if (v.empty())
                throw Error(ErrorKind::InvalidArgument, "empty variable name");
            if (!seen.insert(v).second)
                throw Error(ErrorKind::UnsupportedScope, "variable '" + v + "' repeated within equation " +
                                                             std::to_string(e + 1));
            occurrences[v].push_back(e);
        }
        total_slots += eq.vars.size();
    }
    for (std::size_t e = 0; e < s; ++e)
        for (const auto& v : spec.equations[e].vars) {
            const auto& occ = occurrences[v];
            if (occ.size() > 2)
                throw Error(ErrorKind::UnsupportedScope, "variable '" + v + "' appears in " +
                                                             std::to_string(occ.size()) + " equations");
            if (occ.size() == 2 && occ.front() == e)
                order.push_back(v);
        }
    UnionFind components(s);
    for (const auto& v : order) {
        const auto& occ = occurrences[v];
        if (!components.unite(occ[0], occ[1]))
            throw Error(ErrorKind::UnsupportedScope, "sharing through '" + v + "' closes a cycle between equations");
    }

    SystemFamily out;
    out.repeated = order.size();
    out.variable_count = total_slots - out.repeated;

    std::vector<std::map<std::string, Monomial>> forms(s);
    std::vector<std::pair<std::string, std::string>> constraints;
    for (std::size_t e = 0; e < s; ++e) {
        const SystemEquation& eq = spec.equations[e];
        const unsigned m = static_cast<unsigned>(eq.vars.size());
        const ParametricFamily base = theorem6_family(m, eq.n);
        const std::string prefix = "e" + std::to_string(e + 1) + ".";
        std::map<std::string, Monomial> rename;
        for (const auto& p : parameters(base))
            rename[p] = Monomial::var(prefix + p);
        for (unsigned j = 0; j + 1 < m; ++j) {
            const std::string slot = "x" + std::to_string(j + 1);
            forms[e][eq.vars[j]] = base.variables.at(slot).substitute(rename);
            out.provenance[eq.vars[j]].push_back("equation " + std::to_string(e + 1) + ": slot " + slot +
                                                 " of the m=" + std::to_string(m) + ", n=" + std::to_string(eq.n) +
                                                 " family");
        }
        forms[e][eq.vars.back()] = base.variables.at("z").substitute(rename);
        out.provenance[eq.vars.back()].push_back("equation " + std::to_string(e + 1) + ": slot z of the m=" +
                                                 std::to_string(m) + ", n=" + std::to_string(eq.n) + " family");
        for (const auto& [a, b] : base.constraints)
            constraints.emplace_back(prefix + a, prefix + b);
    }

    for (const auto& var : order) {
        const std::size_t A = occurrences[var][0];
        const std::size_t B = occurrences[var][1];
        const Monomial left = forms[A].at(var);
        const Monomial right = forms[B].at(var);
        std::vector<std::string> lnames, rnames;
        Vec lexp, rexp;
        for (const auto& [p, e] : left.exponents()) {
            lnames.push_back(p);
            lexp.push_back(e);
        }
        for (const auto& [p, e] : right.exponents()) {
            if (left.exponent(p) != 0)
                throw Error(ErrorKind::Defect, "unification of '" + var + "': parameter '" + p + "' on both sides");
            rnames.push_back(p);
            rexp.push_back(e);
        }
        const auto basis = hilbert_basis(lexp, rexp);

        std::map<std::string, Monomial> rules;
        for (const auto& p : lnames)
            rules[p] = Monomial{};
        for (const auto& p : rnames)
            rules[p] = Monomial{};
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const std::string fresh = var + ".u" + std::to_string(k + 1);
            for (std::size_t i = 0; i < lnames.size(); ++i)
                rules[lnames[i]] *= Monomial::var(fresh, basis[k][i]);
            for (std::size_t j = 0; j < rnames.size(); ++j)
                rules[rnames[j]] *= Monomial::var(fresh, basis[k][lnames.size() + j]);
        }
        for (std::size_t e = 0; e < s; ++e)
            for (auto& [name, formula] : forms[e]) {
                Monomial next = formula.substitute(rules);
                if (next != formula && name != var)
                    out.provenance[name].push_back("rewritten by unification of '" + var + "'");
                formula = std::move(next);
            }
        const auto dropped = std::erase_if(constraints, [&](const auto& c) {
            return rules.count(c.first) != 0 || rules.count(c.second) != 0;
        });
        out.provenance[var].push_back("unified " + left.to_string() + " = " + right.to_string() + " with " +
                                      std::to_string(basis.size()) + " fresh parameters" +
                                      (dropped ? ", " + std::to_string(dropped) + " coprimality constraints dropped"
                                               : std::string()));
        if (forms[A].at(var) != forms[B].at(var))
            throw Error(ErrorKind::Defect, "unification of '" + var + "' left the two formulas different");
    }

    ParametricFamily& f = out.family;
    f.id = "system";
    for (std::size_t e = 0; e < s; ++e) {
        const SystemEquation& eq = spec.equations[e];
        for (const auto& [name, formula] : forms[e]) {
            auto [it, inserted] = f.variables.emplace(name, formula);
            if (!inserted && it->second != formula)
                throw Error(ErrorKind::Defect, "shared variable '" + name + "' has diverging formulas");
        }
        Equation equation;
        equation.lhs.assign(eq.vars.begin(), eq.vars.end() - 1);
        equation.rhs = eq.vars.back();
        equation.n = eq.n;
        f.equations.push_back(std::move(equation));
    }
    f.constraints = std::move(constraints);
    for (const auto& eq : f.equations)
        if (!verify_identity(f, eq).pass)
            throw Error(ErrorKind::Defect, "system family fails " + eq.to_string());
    return out;
}

} // namespace prodpow
