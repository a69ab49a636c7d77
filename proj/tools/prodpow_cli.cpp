// prodpow command-line tool. Talks to the library only through prodpow.h.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prodpow/prodpow.h"

namespace {

using Json = nlohmann::json;

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kGuard = 3, kScope = 4 };

struct ToolError {
    pp_status status;
    std::string message;
};

void check(pp_status status)
{
    if (status != PP_OK)
        throw ToolError{status, pp_last_error()};
}

int exit_code(pp_status status)
{
    switch (status) {
    case PP_INVALID_ARGUMENT: return kUsage;
    case PP_GUARD_EXCEEDED: return kGuard;
    case PP_UNSUPPORTED_SCOPE: return kScope;
    default: return kFailure;
    }
}

// Owning wrappers for C handles and strings.
struct StringFree {
    void operator()(char* s) const { pp_string_free(s); }
};
struct SolutionFree {
    void operator()(pp_solution* s) const { pp_solution_free(s); }
};
struct TreeFree {
    void operator()(pp_param_tree* t) const { pp_param_tree_free(t); }
};
struct FamilyFree {
    void operator()(pp_family* f) const { pp_family_free(f); }
};
struct ReportFree {
    void operator()(pp_report* r) const { pp_report_free(r); }
};
using SolutionPtr = std::unique_ptr<pp_solution, SolutionFree>;
using TreePtr = std::unique_ptr<pp_param_tree, TreeFree>;
using FamilyPtr = std::unique_ptr<pp_family, FamilyFree>;
using ReportPtr = std::unique_ptr<pp_report, ReportFree>;

template <typename F>
std::string take_string(F&& call)
{
    char* raw = nullptr;
    check(call(&raw));
    std::unique_ptr<char, StringFree> owned(raw);
    return owned.get();
}

std::string read_input(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ToolError{PP_INVALID_ARGUMENT, "cannot read " + path};
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out)
        throw ToolError{PP_INTERNAL, "cannot write " + path.string()};
}

std::string solution_text(const Json& s)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < s["xs"].size(); ++i)
        os << (i ? " * " : "") << s["xs"][i].get<std::string>();
    os << " = " << s["z"].get<std::string>() << "^" << s["n"].get<unsigned>();
    return os.str();
}

std::string tree_text(const Json& t)
{
    std::ostringstream os;
    os << "m=" << t["m"] << " n=" << t["n"] << "\n";
    os << "base: rs=[";
    for (std::size_t i = 0; i < t["base"]["rs"].size(); ++i)
        os << (i ? ", " : "") << t["base"]["rs"][i].get<std::string>();
    os << "] tail=" << t["base"]["tail"].get<std::string>() << "\n";
    for (std::size_t i = 0; i < t["stages"].size(); ++i) {
        const Json& s = t["stages"][i];
        os << "stage " << i + 1 << ": alpha=" << s["alpha"].get<std::string>()
           << " beta=" << s["beta"].get<std::string>() << " gamma=" << s["gamma"].get<std::string>()
           << " eta=" << s["eta"].get<std::string>() << "\n";
    }
    const Json& term = t["terminal"];
    os << "terminal: alpha_last=" << term["alpha_last"].get<std::string>()
       << " beta_last=" << term["beta_last"].get<std::string>() << " s1=" << term["s1"].get<std::string>()
       << " s2=" << term["s2"].get<std::string>() << "\n";
    return os.str();
}

std::string verdicts_text(const Json& verdicts)
{
    std::ostringstream os;
    for (const Json& v : verdicts) {
        os << (v["pass"].get<bool>() ? "PASS " : "FAIL ") << v["equation"].get<std::string>();
        if (!v["residual"].empty()) {
            os << "  residual {";
            bool first = true;
            for (const auto& [name, e] : v["residual"].items()) {
                os << (first ? "" : ", ") << name << ":" << (e.get<long long>() > 0 ? "+" : "") << e.get<long long>();
                first = false;
            }
            os << "}";
        }
        os << "\n";
    }
    return os.str();
}

std::string report_text(const Json& r)
{
    std::ostringstream os;
    os << "audit " << r["family_id"].get<std::string>() << ": checked " << r["checked"] << ", passed "
       << r["passed"] << ", sound failures " << r["sound_failures"].size() << ", coverage gaps "
       << r["coverage_gaps"].size();
    if (r.contains("elapsed_seconds"))
        os << ", " << r["elapsed_seconds"].get<double>() << " s";
    os << "\n";
    for (const Json& f : r["sound_failures"])
        os << "  unsound: " << f["equation"].get<std::string>() << " at " << f["assignment"].dump() << "\n";
    for (const Json& g : r["coverage_gaps"])
        os << "  gap: " << g.dump() << "\n";
    return os.str();
}

struct Options {
    std::string format = "text";
    std::string output;

    unsigned m = 3;
    unsigned n = 2;
    std::uint64_t seed = 1;
    unsigned max_param = 16;
    bool all_ones = false;
    std::string tree_path;

    std::string input;
    std::vector<std::string> xs;
    std::string z;

    std::uint64_t z_bound = 50;
    std::uint64_t k_bound = 5;
    std::uint64_t samples = 1000;
    unsigned jobs = 1;
    std::string audit_name;
    std::string family;
    bool timing = false;

    std::string write_dir;
};

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw ToolError{PP_INVALID_ARGUMENT, "cannot write " + path};
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

bool json_format(const Options& o)
{
    return o.format == "json";
}

int cmd_gen(const Options& o, std::ostream& out)
{
    pp_param_tree* raw = nullptr;
    if (!o.tree_path.empty())
        check(pp_param_tree_from_json(read_input(o.tree_path).c_str(), &raw));
    else if (o.all_ones)
        check(pp_all_ones_tree(o.m, o.n, &raw));
    else
        check(pp_random_tree(o.m, o.n, o.seed, o.max_param, &raw));
    TreePtr tree(raw);

    pp_solution* sol_raw = nullptr;
    check(pp_generate(tree.get(), &sol_raw));
    SolutionPtr sol(sol_raw);

    const Json tree_json = Json::parse(take_string([&](char** s) { return pp_param_tree_to_json(tree.get(), s); }));
    const Json sol_json = Json::parse(take_string([&](char** s) { return pp_solution_to_json(sol.get(), s); }));
    const Json violations =
        Json::parse(take_string([&](char** s) { return pp_param_tree_violations(tree.get(), s); }));
    const bool ok = pp_solution_satisfied(sol.get()) == 1;

    if (json_format(o)) {
        out << Json{{"tree", tree_json}, {"solution", sol_json}, {"verified", ok}, {"coprimality_violations", violations}}
                   .dump(2)
            << "\n";
    } else {
        out << tree_text(tree_json) << "solution: " << solution_text(sol_json) << "\n"
            << "verified: " << (ok ? "yes" : "no") << "\n";
        for (const Json& v : violations)
            out << "coprimality violation: " << v.get<std::string>() << "\n";
    }
    return ok ? kOk : kFailure;
}

int cmd_decompose(const Options& o, std::ostream& out)
{
    pp_solution* raw = nullptr;
    if (!o.input.empty()) {
        check(pp_solution_from_json(read_input(o.input).c_str(), &raw));
    } else {
        if (o.xs.empty() || o.z.empty())
            throw ToolError{PP_INVALID_ARGUMENT, "decompose needs --input or both --xs and --z"};
        std::vector<const char*> xs;
        for (const auto& x : o.xs)
            xs.push_back(x.c_str());
        check(pp_solution_create(xs.data(), xs.size(), o.z.c_str(), o.n, &raw));
    }
    SolutionPtr sol(raw);
    if (!pp_solution_satisfied(sol.get()))
        throw ToolError{PP_INVALID_ARGUMENT, "input is not a solution: product of xs differs from z^n"};

    pp_param_tree* tree_raw = nullptr;
    const pp_status status = pp_decompose(sol.get(), &tree_raw);
    if (status == PP_COVERAGE_GAP) {
        const std::string reason = pp_last_error();
        if (json_format(o))
            out << Json{{"coverage_gap", reason}}.dump(2) << "\n";
        else
            out << "coverage gap: " << reason << "\n";
        return kOk;
    }
    check(status);
    TreePtr tree(tree_raw);
    const Json tree_json = Json::parse(take_string([&](char** s) { return pp_param_tree_to_json(tree.get(), s); }));
    const Json violations =
        Json::parse(take_string([&](char** s) { return pp_param_tree_violations(tree.get(), s); }));
    if (json_format(o)) {
        out << Json{{"tree", tree_json}, {"coprimality_violations", violations}}.dump(2) << "\n";
    } else {
        out << tree_text(tree_json);
        for (const Json& v : violations)
            out << "coprimality violation: " << v.get<std::string>() << "\n";
    }
    return kOk;
}

int cmd_solve_system(const Options& o, std::ostream& out)
{
    const std::string spec = read_input(o.input);
    const std::string result = take_string([&](char** s) { return pp_solve_system(spec.c_str(), s); });
    if (json_format(o)) {
        out << result;
        return kOk;
    }
    const Json doc = Json::parse(result);
    out << "family " << doc["id"].get<std::string>() << " (" << doc["parameter_count"] << " parameters)\n";
    for (const auto& [name, mono] : doc["variables"].items()) {
        out << "  " << name << " = ";
        if (mono.empty())
            out << "1";
        for (std::size_t i = 0; i < mono.size(); ++i) {
            out << (i ? "*" : "") << mono[i][0].get<std::string>();
            if (mono[i][1].get<long long>() != 1)
                out << "^" << mono[i][1];
        }
        out << "\n";
    }
    for (const Json& c : doc["constraints"])
        out << "  gcd(" << c[0].get<std::string>() << ", " << c[1].get<std::string>() << ") = 1\n";
    out << verdicts_text(doc["verdicts"]);
    return kOk;
}

struct EnumerateSink {
    std::ostream* out;
    bool json;
    std::string error;
};

int enumerate_callback(const pp_solution* s, void* user)
{
    auto* sink = static_cast<EnumerateSink*>(user);
    char* raw = nullptr;
    if (pp_solution_to_json(s, &raw) != PP_OK) {
        sink->error = pp_last_error();
        return 1;
    }
    std::unique_ptr<char, StringFree> owned(raw);
    const Json doc = Json::parse(owned.get());
    if (sink->json)
        *sink->out << doc.dump() << "\n";
    else
        *sink->out << solution_text(doc) << "\n";
    return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    EnumerateSink sink{&out, json_format(o), {}};
    check(pp_enumerate(o.m, o.n, o.z_bound, o.jobs, enumerate_callback, &sink));
    if (!sink.error.empty())
        throw ToolError{PP_INTERNAL, sink.error};
    return kOk;
}

int cmd_audit(const Options& o, std::ostream& out)
{
    pp_audit_options opts;
    pp_audit_options_default(&opts);
    opts.m = o.m;
    opts.n = o.n;
    opts.z_bound = o.z_bound;
    opts.k_bound = o.k_bound;
    opts.samples = o.samples;
    opts.seed = o.seed;
    opts.max_value = o.max_param;
    opts.jobs = o.jobs;
    opts.family = o.family.empty() ? nullptr : o.family.c_str();

    pp_report* raw = nullptr;
    check(pp_audit_run(o.audit_name.c_str(), &opts, &raw));
    ReportPtr report(raw);
    const std::string text =
        take_string([&](char** s) { return pp_report_to_json(report.get(), o.timing ? 1 : 0, s); });
    if (json_format(o))
        out << text;
    else
        out << report_text(Json::parse(text));
    return kOk;
}

int cmd_params_count(const Options& o, std::ostream& out)
{
    std::uint64_t count = 0;
    check(pp_parameter_count(o.m, o.n, &count));
    if (json_format(o))
        out << Json{{"m", o.m}, {"n", o.n}, {"count", count}}.dump(2) << "\n";
    else
        out << count << "\n";
    return kOk;
}

int cmd_fixtures(const Options& o, std::ostream& out)
{
    const std::string report = take_string([](char** s) { return pp_fixtures_report(s); });
    if (!o.write_dir.empty()) {
        const std::filesystem::path dir(o.write_dir);
        std::filesystem::create_directories(dir);
        const Json names = Json::parse(take_string([](char** s) { return pp_fixture_names(s); }));
        for (const Json& name : names) {
            pp_family* raw = nullptr;
            check(pp_fixture(name.get<std::string>().c_str(), &raw));
            FamilyPtr family(raw);
            write_file(dir / (name.get<std::string>() + ".json"),
                       take_string([&](char** s) { return pp_family_to_json(family.get(), s); }));
        }
        write_file(dir / "verdicts.json", report);
    }
    if (json_format(o)) {
        out << report;
        return kOk;
    }
    for (const Json& entry : Json::parse(report)) {
        out << entry["fixture"].get<std::string>() << "\n";
        std::istringstream lines(verdicts_text(entry["verdicts"]));
        for (std::string line; std::getline(lines, line);)
            out << "  " << line << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Parametrize, decompose and audit solutions of x1*x2*...*x(m-1) = z^n"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("-o,--output", o.output, "Write output to a file instead of stdout");

    auto add_mn = [&](CLI::App* sub) {
        sub->add_option("-m,--m", o.m, "Number of unknowns plus one (equation has m-1 factors)")->capture_default_str();
        sub->add_option("-n,--n", o.n, "Exponent of z")->capture_default_str();
    };

    auto* gen = app.add_subcommand("gen", "Generate a solution from a random, all-ones or given parameter tree");
    add_mn(gen);
    gen->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    gen->add_option("--max-param", o.max_param, "Largest random parameter value")->capture_default_str();
    gen->add_flag("--all-ones", o.all_ones, "Use the all-ones tree");
    gen->add_option("--tree", o.tree_path, "Parameter tree JSON file ('-' for stdin)");

    auto* decompose = app.add_subcommand("decompose", "Recover the parameter tree of a solution");
    decompose->add_option("-i,--input", o.input, "Solution JSON file ('-' for stdin)");
    decompose->add_option("--xs", o.xs, "Factors x1 .. x(m-1)");
    decompose->add_option("--z", o.z, "Right-hand base z");
    decompose->add_option("-n,--n", o.n, "Exponent of z")->capture_default_str();

    auto* solve = app.add_subcommand("solve-system", "Unify the families of a system of equations");
    solve->add_option("-i,--input", o.input, "System JSON file ('-' for stdin)")->required();

    auto* enumerate = app.add_subcommand("enumerate", "List every solution with z up to a bound");
    add_mn(enumerate);
    enumerate->add_option("--z-bound", o.z_bound, "Largest z")->capture_default_str();
    enumerate->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();

    auto* audit = app.add_subcommand("audit", "Run a named audit and print its report");
    audit->add_option("name", o.audit_name,
                      "theorem6-soundness, theorem6-completeness, theorem4, theorem5-completeness, theta, "
                      "theorem3-coverage or family-soundness")
        ->required();
    add_mn(audit);
    audit->add_option("--z-bound", o.z_bound, "Enumeration bound (w bound for theorem5, x,y bound for theorem3)")
        ->capture_default_str();
    audit->add_option("--k-bound", o.k_bound, "k bound for theorem3-coverage")->capture_default_str();
    audit->add_option("--samples", o.samples, "Random samples")->capture_default_str();
    audit->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    audit->add_option("--max-param", o.max_param, "Largest random parameter value")->capture_default_str();
    audit->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
    audit->add_option("--family", o.family, "Fixture name for family-soundness");
    audit->add_flag("--timing", o.timing, "Include elapsed time in the report");

    auto* count = app.add_subcommand("params-count", "Number of free parameters of the general family");
    add_mn(count);

    auto* fixtures = app.add_subcommand("fixtures", "Check the printed and derived families symbolically");
    fixtures->add_option("--write-dir", o.write_dir, "Also write every fixture as JSON into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Output output(o.output);
        std::ostream& out = output.stream();
        if (*gen)
            return cmd_gen(o, out);
        if (*decompose)
            return cmd_decompose(o, out);
        if (*solve)
            return cmd_solve_system(o, out);
        if (*enumerate)
            return cmd_enumerate(o, out);
        if (*audit)
            return cmd_audit(o, out);
        if (*count)
            return cmd_params_count(o, out);
        if (*fixtures)
            return cmd_fixtures(o, out);
    } catch (const ToolError& e) {
        std::cerr << "prodpow: " << pp_status_name(e.status) << ": " << e.message << "\n";
        return exit_code(e.status);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "prodpow: malformed library output: " << e.what() << "\n";
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "prodpow: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
