#include "prodpow/prodpow.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <random>
#include <string>

#include "prodpow/audit.hpp"
#include "prodpow/errors.hpp"
#include "prodpow/fixtures.hpp"
#include "prodpow/general_param.hpp"
#include "prodpow/serialization.hpp"
#include "prodpow/system_solver.hpp"

struct pp_solution {
    prodpow::Solution value;
};
struct pp_param_tree {
    prodpow::ParamTree value;
};
struct pp_family {
    prodpow::ParametricFamily value;
};
struct pp_report {
    prodpow::AuditReport value;
};

namespace {

using namespace prodpow;

thread_local std::string g_last_error;

pp_status status_of(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return PP_INVALID_ARGUMENT;
    case ErrorKind::Precondition: return PP_PRECONDITION;
    case ErrorKind::GuardExceeded: return PP_GUARD_EXCEEDED;
    case ErrorKind::UnsupportedScope: return PP_UNSUPPORTED_SCOPE;
    case ErrorKind::Defect: return PP_DEFECT;
    case ErrorKind::Parse: return PP_PARSE;
    }
    return PP_INTERNAL;
}

pp_status fail(pp_status status, std::string message)
{
    g_last_error = std::move(message);
    return status;
}

// Runs f, translating exceptions into status codes.
template <typename F>
pp_status guarded(F&& f)
{
    try {
        g_last_error.clear();
        return f();
    } catch (const Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(PP_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(PP_INTERNAL, e.what());
    }
}

pp_status null_argument(const char* name)
{
    return fail(PP_INVALID_ARGUMENT, std::string(name) + " must not be NULL");
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pp_status emit(const Json& doc, char** out)
{
    *out = copy_string(dump(doc));
    return PP_OK;
}

Json verdicts_json(const ParametricFamily& f)
{
    Json list = Json::array();
    for (const Equation& eq : f.equations) {
        Json v = to_json(verify_identity(f, eq));
        v["equation"] = eq.to_string();
        list.push_back(std::move(v));
    }
    return list;
}

const char* const kAuditNames[] = {
    "theorem6-soundness", "theorem6-completeness", "theorem4",        "theorem5-completeness",
    "theta",              "theorem3-coverage",     "family-soundness",
};

AuditReport run_audit(const std::string& name, const pp_audit_options& o)
{
    const SamplerOptions sampler{o.samples, o.seed, o.max_value};
    if (name == "theorem6-soundness")
        return audit_soundness_theorem6(o.m, o.n, sampler);
    if (name == "theorem6-completeness")
        return audit_completeness(o.m, o.n, o.z_bound, o.jobs);
    if (name == "theorem4")
        return audit_theorem4(o.m, o.n, o.z_bound);
    if (name == "theorem5-completeness")
        return audit_theorem5_completeness(o.n, o.z_bound);
    if (name == "theta")
        return audit_theta(o.n, sampler);
    if (name == "theorem3-coverage")
        return audit_theorem3_coverage(o.z_bound, o.k_bound, o.n);
    if (name == "family-soundness") {
        if (!o.family)
            throw Error(ErrorKind::InvalidArgument, "family-soundness needs a fixture name");
        return audit_soundness(fixture(o.family), sampler);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown audit '" + name + "'");
}

struct StopEnumeration {};

} // namespace

extern "C" {

const char* pp_last_error(void)
{
    return g_last_error.c_str();
}

const char* pp_status_name(pp_status status)
{
    switch (status) {
    case PP_OK: return "ok";
    case PP_INVALID_ARGUMENT: return "invalid argument";
    case PP_PRECONDITION: return "precondition violated";
    case PP_GUARD_EXCEEDED: return "guard exceeded";
    case PP_UNSUPPORTED_SCOPE: return "unsupported scope";
    case PP_DEFECT: return "defect";
    case PP_PARSE: return "parse error";
    case PP_COVERAGE_GAP: return "coverage gap";
    case PP_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void pp_string_free(char* s)
{
    std::free(s);
}

pp_status pp_solution_create(const char* const* xs, size_t count, const char* z, unsigned n, pp_solution** out)
{
    if (!out || !z || (count > 0 && !xs))
        return null_argument("xs, z and out");
    return guarded([&] {
        Solution s;
        for (size_t i = 0; i < count; ++i) {
            if (!xs[i])
                return null_argument("xs[i]");
            s.xs.push_back(parse_nat(xs[i]));
        }
        s.z = parse_nat(z);
        s.n = n;
        require_valid(s);
        *out = new pp_solution{std::move(s)};
        return PP_OK;
    });
}

pp_status pp_solution_from_json(const char* json, pp_solution** out)
{
    if (!json || !out)
        return null_argument("json and out");
    return guarded([&] {
        *out = new pp_solution{solution_from_json(parse_json(json))};
        return PP_OK;
    });
}

pp_status pp_solution_to_json(const pp_solution* s, char** out)
{
    if (!s || !out)
        return null_argument("solution and out");
    return guarded([&] { return emit(to_json(s->value), out); });
}

int pp_solution_satisfied(const pp_solution* s)
{
    return s && s->value.satisfied() ? 1 : 0;
}

void pp_solution_free(pp_solution* s)
{
    delete s;
}

pp_status pp_param_tree_from_json(const char* json, pp_param_tree** out)
{
    if (!json || !out)
        return null_argument("json and out");
    return guarded([&] {
        *out = new pp_param_tree{param_tree_from_json(parse_json(json))};
        return PP_OK;
    });
}

pp_status pp_param_tree_to_json(const pp_param_tree* t, char** out)
{
    if (!t || !out)
        return null_argument("tree and out");
    return guarded([&] { return emit(to_json(t->value), out); });
}

pp_status pp_param_tree_violations(const pp_param_tree* t, char** out)
{
    if (!t || !out)
        return null_argument("tree and out");
    return guarded([&] { return emit(Json(coprimality_violations(t->value)), out); });
}

void pp_param_tree_free(pp_param_tree* t)
{
    delete t;
}

pp_status pp_all_ones_tree(unsigned m, unsigned n, pp_param_tree** out)
{
    if (!out)
        return null_argument("out");
    return guarded([&] {
        *out = new pp_param_tree{all_ones_tree(m, n)};
        return PP_OK;
    });
}

pp_status pp_random_tree(unsigned m, unsigned n, uint64_t seed, unsigned max_value, pp_param_tree** out)
{
    if (!out)
        return null_argument("out");
    return guarded([&] {
        std::mt19937_64 rng(seed);
        *out = new pp_param_tree{random_param_tree(m, n, rng, max_value)};
        return PP_OK;
    });
}

pp_status pp_generate(const pp_param_tree* t, pp_solution** out)
{
    if (!t || !out)
        return null_argument("tree and out");
    return guarded([&] {
        *out = new pp_solution{theorem6_generate(t->value, t->value.m(), t->value.n())};
        return PP_OK;
    });
}

pp_status pp_decompose(const pp_solution* s, pp_param_tree** out)
{
    if (!s || !out)
        return null_argument("solution and out");
    return guarded([&] {
        auto result = theorem6_decompose(s->value);
        if (auto* gap = std::get_if<CoverageGap>(&result))
            return fail(PP_COVERAGE_GAP, gap->reason);
        *out = new pp_param_tree{std::get<ParamTree>(std::move(result))};
        return PP_OK;
    });
}

pp_status pp_reduce(const pp_solution* s, char** out)
{
    if (!s || !out)
        return null_argument("solution and out");
    return guarded([&] { return emit(to_json(theorem4_reduce(s->value)), out); });
}

pp_status pp_parameter_count(unsigned m, unsigned n, uint64_t* out)
{
    if (!out)
        return null_argument("out");
    return guarded([&] {
        *out = parameter_count(m, n).count;
        return PP_OK;
    });
}

pp_status pp_family_from_json(const char* json, pp_family** out)
{
    if (!json || !out)
        return null_argument("json and out");
    return guarded([&] {
        *out = new pp_family{family_from_json(parse_json(json))};
        return PP_OK;
    });
}

pp_status pp_family_to_json(const pp_family* f, char** out)
{
    if (!f || !out)
        return null_argument("family and out");
    return guarded([&] { return emit(to_json(f->value), out); });
}

pp_status pp_family_verify(const pp_family* f, char** out)
{
    if (!f || !out)
        return null_argument("family and out");
    return guarded([&] { return emit(verdicts_json(f->value), out); });
}

void pp_family_free(pp_family* f)
{
    delete f;
}

pp_status pp_fixture_names(char** out)
{
    if (!out)
        return null_argument("out");
    return guarded([&] { return emit(Json(fixture_names()), out); });
}

pp_status pp_fixture(const char* name, pp_family** out)
{
    if (!name || !out)
        return null_argument("name and out");
    return guarded([&] {
        *out = new pp_family{fixture(name)};
        return PP_OK;
    });
}

pp_status pp_fixtures_report(char** out)
{
    if (!out)
        return null_argument("out");
    return guarded([&] {
        Json list = Json::array();
        for (const auto& name : fixture_names()) {
            const ParametricFamily f = fixture(name);
            list.push_back(Json{{"fixture", name}, {"verdicts", verdicts_json(f)}});
        }
        return emit(list, out);
    });
}

pp_status pp_solve_system(const char* spec_json, char** out)
{
    if (!spec_json || !out)
        return null_argument("spec and out");
    return guarded([&] {
        const SystemFamily result = solve_system(system_spec_from_json(parse_json(spec_json)));
        Json doc = to_json(result);
        doc["verdicts"] = verdicts_json(result.family);
        return emit(doc, out);
    });
}

pp_status pp_enumerate(unsigned m, unsigned n, uint64_t z_bound, unsigned jobs, pp_solution_callback cb, void* user)
{
    if (!cb)
        return null_argument("callback");
    return guarded([&] {
        require_enumerable(m, n, z_bound);
        pp_solution handle;
        auto deliver = [&](const Solution& s) {
            handle.value = s;
            if (cb(&handle, user) != 0)
                throw StopEnumeration{};
        };
        try {
            if (jobs > 1) {
                for (const Solution& s : enumerate_solutions(m, n, z_bound, jobs))
                    deliver(s);
            } else {
                for_each_solution(m, n, 1, z_bound, deliver);
            }
        } catch (const StopEnumeration&) {
        }
        return PP_OK;
    });
}

void pp_audit_options_default(pp_audit_options* options)
{
    if (!options)
        return;
    *options = pp_audit_options{};
    options->m = 3;
    options->n = 2;
    options->z_bound = 50;
    options->k_bound = 5;
    options->samples = 1000;
    options->seed = 1;
    options->max_value = 16;
    options->jobs = 1;
    options->family = nullptr;
}

pp_status pp_audit_names(char** out)
{
    if (!out)
        return null_argument("out");
    return guarded([&] {
        Json list = Json::array();
        for (const char* name : kAuditNames)
            list.push_back(name);
        return emit(list, out);
    });
}

pp_status pp_audit_run(const char* name, const pp_audit_options* options, pp_report** out)
{
    if (!name || !out)
        return null_argument("name and out");
    return guarded([&] {
        pp_audit_options o;
        pp_audit_options_default(&o);
        if (options)
            o = *options;
        *out = new pp_report{run_audit(name, o)};
        return PP_OK;
    });
}

pp_status pp_report_to_json(const pp_report* r, int include_timing, char** out)
{
    if (!r || !out)
        return null_argument("report and out");
    return guarded([&] { return emit(to_json(r->value, include_timing != 0), out); });
}

pp_status pp_report_from_json(const char* json, pp_report** out)
{
    if (!json || !out)
        return null_argument("json and out");
    return guarded([&] {
        *out = new pp_report{audit_report_from_json(parse_json(json))};
        return PP_OK;
    });
}

int pp_report_has_findings(const pp_report* r)
{
    return r && r->value.has_findings() ? 1 : 0;
}

void pp_report_free(pp_report* r)
{
    delete r;
}

} // extern "C"
