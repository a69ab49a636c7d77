#ifndef PRODPOW_SERIALIZATION_HPP
#define PRODPOW_SERIALIZATION_HPP

// JSON documents for every type that crosses a file or the C API. Nat values
// are decimal strings; exponents and counts are JSON numbers. Object keys
// are sorted and monomials list (parameter, exponent) pairs by name, so
// dump(parse(text)) == text for any document this module wrote.

#include <string>

#include <json.hpp>

#include "prodpow/audit.hpp"
#include "prodpow/general_param.hpp"
#include "prodpow/monomial.hpp"
#include "prodpow/power_reduction.hpp"
#include "prodpow/solution.hpp"
#include "prodpow/system_solver.hpp"

namespace prodpow {

using Json = nlohmann::json;

/// Two-space indent and a trailing newline.
std::string dump(const Json& doc);
/// Throws Error(Parse).
Json parse_json(const std::string& text);

Json to_json(const Nat& value);
Nat nat_from_json(const Json& j);

Json to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);

Json to_json(const Equation& eq);
Equation equation_from_json(const Json& j);

Json to_json(const ParametricFamily& f);
ParametricFamily family_from_json(const Json& j);

Json to_json(const IdentityVerdict& v);

Json to_json(const Solution& s);
Solution solution_from_json(const Json& j);

Json to_json(const Theorem5Params& p);
Theorem5Params theorem5_params_from_json(const Json& j);

Json to_json(const ParamTree& t);
ParamTree param_tree_from_json(const Json& j);

Json to_json(const ReductionWitness& r);

Json to_json(const Record& r);
Record record_from_json(const Json& j);

Json to_json(const AuditReport& r, bool include_timing = false);
AuditReport audit_report_from_json(const Json& j);

/// Accepts a bare list of {vars, n} or {"equations": [...]}.
SystemSpec system_spec_from_json(const Json& j);
Json to_json(const SystemSpec& s);

Json to_json(const SystemFamily& f);

} // namespace prodpow

#endif
