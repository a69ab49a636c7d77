#include "prodpow/serialization.hpp"

#include "prodpow/errors.hpp"

namespace prodpow {

namespace {

template <typename F>
auto guarded(const char* what, F&& f)
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string(what) + ": " + e.what());
    }
}

unsigned unsigned_from_json(const Json& j, const char* key)
{
    const auto v = j.at(key).get<std::int64_t>();
    if (v < 0)
        throw Error(ErrorKind::Parse, std::string(key) + " must be non-negative");
    return static_cast<unsigned>(v);
}

} // namespace

std::string dump(const Json& doc)
{
    return doc.dump(2) + "\n";
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
}

Json to_json(const Nat& value)
{
    return value.get_str();
}

Nat nat_from_json(const Json& j)
{
    if (!j.is_string())
        throw Error(ErrorKind::Parse, "integers are encoded as decimal strings, got " + j.dump());
    return parse_nat(j.get<std::string>());
}

Json to_json(const Monomial& m)
{
    Json arr = Json::array();
    for (const auto& [name, e] : m.exponents())
        arr.push_back(Json::array({name, e}));
    return arr;
}

Monomial monomial_from_json(const Json& j)
{
    return guarded("monomial", [&] {
        std::map<std::string, Exponent> exps;
        for (const auto& pair : j) {
            if (!pair.is_array() || pair.size() != 2)
                throw Error(ErrorKind::Parse, "monomial entries are [parameter, exponent] pairs");
            exps[pair[0].get<std::string>()] += pair[1].get<Exponent>();
        }
        return Monomial(std::move(exps));
    });
}

Json to_json(const Equation& eq)
{
    return Json{{"lhs", eq.lhs}, {"rhs", eq.rhs}, {"n", eq.n}, {"coefficient", eq.coefficient}};
}

Equation equation_from_json(const Json& j)
{
    return guarded("equation", [&] {
        Equation eq;
        eq.lhs = j.at("lhs").get<std::vector<std::string>>();
        eq.rhs = j.at("rhs").get<std::string>();
        eq.n = unsigned_from_json(j, "n");
        if (j.contains("coefficient"))
            eq.coefficient = j.at("coefficient").get<std::vector<std::string>>();
        return eq;
    });
}

Json to_json(const ParametricFamily& f)
{
    Json vars = Json::object();
    for (const auto& [name, m] : f.variables)
        vars[name] = to_json(m);
    Json constraints = Json::array();
    for (const auto& [a, b] : f.constraints)
        constraints.push_back(Json::array({a, b}));
    Json equations = Json::array();
    for (const auto& eq : f.equations)
        equations.push_back(to_json(eq));
    return Json{{"id", f.id},
                {"variables", vars},
                {"constraints", constraints},
                {"equations", equations},
                {"notes", f.notes}};
}

ParametricFamily family_from_json(const Json& j)
{
    return guarded("family", [&] {
        ParametricFamily f;
        f.id = j.value("id", std::string{});
        for (const auto& [name, m] : j.at("variables").items())
            f.variables[name] = monomial_from_json(m);
        if (j.contains("constraints"))
            for (const auto& c : j.at("constraints"))
                f.constraints.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
        if (j.contains("equations"))
            for (const auto& e : j.at("equations"))
                f.equations.push_back(equation_from_json(e));
        f.notes = j.value("notes", std::string{});
        return f;
    });
}

Json to_json(const IdentityVerdict& v)
{
    Json residual = Json::object();
    for (const auto& [name, e] : v.residual)
        residual[name] = e;
    return Json{{"pass", v.pass}, {"residual", residual}};
}

Json to_json(const Solution& s)
{
    Json xs = Json::array();
    for (const Nat& x : s.xs)
        xs.push_back(to_json(x));
    return Json{{"xs", xs}, {"z", to_json(s.z)}, {"n", s.n}};
}

Solution solution_from_json(const Json& j)
{
    return guarded("solution", [&] {
        Solution s;
        for (const auto& x : j.at("xs"))
            s.xs.push_back(nat_from_json(x));
        s.z = nat_from_json(j.at("z"));
        s.n = unsigned_from_json(j, "n");
        return s;
    });
}

Json to_json(const Theorem5Params& p)
{
    Json rs = Json::array();
    for (const Nat& r : p.rs)
        rs.push_back(to_json(r));
    return Json{{"n", p.n}, {"rs", rs}, {"tail", to_json(p.tail)}};
}

Theorem5Params theorem5_params_from_json(const Json& j)
{
    return guarded("theorem5 params", [&] {
        Theorem5Params p;
        p.n = unsigned_from_json(j, "n");
        for (const auto& r : j.at("rs"))
            p.rs.push_back(nat_from_json(r));
        p.tail = nat_from_json(j.at("tail"));
        return p;
    });
}

Json to_json(const ParamTree& t)
{
    Json stages = Json::array();
    for (const Stage& s : t.stages)
        stages.push_back(Json{{"alpha", to_json(s.alpha)},
                              {"beta", to_json(s.beta)},
                              {"gamma", to_json(s.gamma)},
                              {"eta", to_json(s.eta)}});
    const Terminal& term = t.terminal;
    return Json{{"m", t.m()},
                {"n", t.n()},
                {"base", to_json(t.base)},
                {"stages", stages},
                {"terminal", Json{{"alpha_last", to_json(term.alpha_last)},
                                  {"beta_last", to_json(term.beta_last)},
                                  {"s1", to_json(term.s1)},
                                  {"s2", to_json(term.s2)}}}};
}

ParamTree param_tree_from_json(const Json& j)
{
    return guarded("param tree", [&] {
        ParamTree t;
        t.base = theorem5_params_from_json(j.at("base"));
        for (const auto& s : j.at("stages"))
            t.stages.push_back(Stage{nat_from_json(s.at("alpha")), nat_from_json(s.at("beta")),
                                     nat_from_json(s.at("gamma")), nat_from_json(s.at("eta"))});
        const Json& term = j.at("terminal");
        t.terminal = Terminal{nat_from_json(term.at("alpha_last")), nat_from_json(term.at("beta_last")),
                              nat_from_json(term.at("s1")), nat_from_json(term.at("s2"))};
        if (j.contains("m") && unsigned_from_json(j, "m") != t.m())
            throw Error(ErrorKind::InvalidArgument, "tree 'm' does not match its stage count");
        if (j.contains("n") && unsigned_from_json(j, "n") != t.n())
            throw Error(ErrorKind::InvalidArgument, "tree 'n' does not match its base");
        return t;
    });
}

Json to_json(const ReductionWitness& r)
{
    return Json{{"theta", to_json(r.theta)}, {"w", to_json(r.w)},         {"d", to_json(r.d)},
                {"v", to_json(r.v)},         {"Z0", to_json(r.Z0)},       {"X_top", to_json(r.X_top)},
                {"X_second", to_json(r.X_second)}};
}

Json to_json(const Record& r)
{
    Json arr = Json::array();
    for (const auto& [name, value] : r)
        arr.push_back(Json::array({name, to_json(value)}));
    return arr;
}

Record record_from_json(const Json& j)
{
    return guarded("record", [&] {
        Record r;
        for (const auto& pair : j)
            r.emplace_back(pair.at(0).get<std::string>(), nat_from_json(pair.at(1)));
        return r;
    });
}

Json to_json(const AuditReport& r, bool include_timing)
{
    Json failures = Json::array();
    for (const auto& f : r.sound_failures)
        failures.push_back(Json{{"assignment", to_json(f.assignment)}, {"equation", f.equation}});
    Json gaps = Json::array();
    for (const auto& g : r.coverage_gaps)
        gaps.push_back(to_json(g));
    Json doc{{"family_id", r.family_id},
             {"checked", r.checked},
             {"passed", r.passed},
             {"sound_failures", failures},
             {"coverage_gaps", gaps},
             {"findings", r.has_findings()}};
    if (include_timing)
        doc["elapsed_seconds"] = r.elapsed_seconds;
    return doc;
}

AuditReport audit_report_from_json(const Json& j)
{
    return guarded("audit report", [&] {
        AuditReport r;
        r.family_id = j.at("family_id").get<std::string>();
        r.checked = j.at("checked").get<std::uint64_t>();
        r.passed = j.at("passed").get<std::uint64_t>();
        for (const auto& f : j.at("sound_failures"))
            r.sound_failures.push_back({record_from_json(f.at("assignment")), f.at("equation").get<std::string>()});
        for (const auto& g : j.at("coverage_gaps"))
            r.coverage_gaps.push_back(record_from_json(g));
        r.elapsed_seconds = j.value("elapsed_seconds", 0.0);
        return r;
    });
}

SystemSpec system_spec_from_json(const Json& j)
{
    return guarded("system spec", [&] {
        const Json& list = j.is_object() ? j.at("equations") : j;
        if (!list.is_array())
            throw Error(ErrorKind::Parse, "system spec must be a list of equations");
        SystemSpec spec;
        for (const auto& e : list)
            spec.equations.push_back(
                SystemEquation{e.at("vars").get<std::vector<std::string>>(), unsigned_from_json(e, "n")});
        return spec;
    });
}

Json to_json(const SystemSpec& s)
{
    Json list = Json::array();
    for (const auto& e : s.equations)
        list.push_back(Json{{"vars", e.vars}, {"n", e.n}});
    return Json{{"equations", list}};
}

Json to_json(const SystemFamily& f)
{
    Json doc = to_json(f.family);
    Json prov = Json::object();
    for (const auto& [var, steps] : f.provenance)
        prov[var] = steps;
    doc["provenance"] = prov;
    doc["variable_count"] = f.variable_count;
    doc["repeated"] = f.repeated;
    doc["parameter_count"] = parameters(f.family).size();
    return doc;
}

} // namespace prodpow
