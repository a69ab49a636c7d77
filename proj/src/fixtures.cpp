#include "prodpow/fixtures.hpp"

#include <cstdio>

#include "prodpow/coprime_decomp.hpp"
#include "prodpow/errors.hpp"
#include "prodpow/general_param.hpp"
#include "prodpow/power_reduction.hpp"

namespace prodpow {

namespace {

std::vector<Equation> two_equation_system(unsigned n1, unsigned n2)
{
    return {Equation{{"x1", "x2", "x3"}, "z1", n1, {}}, Equation{{"x3", "x4"}, "z2", n2, {}}};
}

} // namespace

ParametricFamily example1_printed()
{
    ParametricFamily f;
    f.id = "example1-printed";
    f.variables["x1"] = Monomial({{"a", 1}, {"k1p", 2}, {"l1p", 1}, {"gamma1p", 2}, {"R1", 3}, {"g", 3}});
    f.variables["x2"] = Monomial({{"a", 1}, {"k1p", 1}, {"l1p", 2}, {"eta1p", 2}, {"R2", 3}, {"g", 3}});
    f.variables["x3"] = Monomial({{"a", 1}, {"gamma1p", 1}, {"eta1p", 1}, {"b1", 3}, {"f", 6}});
    f.variables["x4"] = Monomial({{"a", 1}, {"gamma1p", 1}, {"eta1p", 1}, {"b1", 3}, {"r1", 2}});
    f.variables["z1"] = Monomial(
        {{"a", 1}, {"l1p", 1}, {"k1p", 1}, {"gamma1p", 1}, {"eta1p", 1}, {"b1", 1}, {"f", 2}, {"R1", 1}, {"R2", 1},
         {"g", 2}});
    f.variables["z2"] = Monomial({{"a", 1}, {"gamma1p", 1}, {"eta1p", 1}, {"b1", 3}, {"f", 3}, {"r1", 1}});
    f.equations = two_equation_system(3, 2);
    f.notes = "as printed";
    return f;
}

ParametricFamily example2_printed()
{
    ParametricFamily f;
    f.id = "example2-printed";
    f.variables["x1"] = Monomial({{"s1", 2}, {"a", 1}, {"d", 1}, {"r1", 1}, {"h", 1}});
    f.variables["x2"] = Monomial({{"s2", 2}, {"b", 1}, {"d", 1}, {"r2", 1}, {"h", 1}});
    f.variables["x3"] = Monomial({{"a", 1}, {"b", 1}, {"c1", 2}, {"r1", 2}, {"r2", 2}, {"d", 2}, {"c", 2}});
    f.variables["x4"] = Monomial({{"a", 1}, {"b", 1}, {"c", 2}, {"S1", 2}});
    f.variables["z1"] = Monomial(
        {{"a", 1}, {"b", 1}, {"h", 1}, {"s1", 1}, {"s2", 1}, {"c", 1}, {"c1", 1}, {"r1", 1}, {"r2", 1}, {"d", 2}});
    f.variables["z2"] = Monomial({{"a", 1}, {"b", 1}, {"S1", 1}, {"r1", 1}, {"r2", 1}, {"d", 1}, {"c1", 1}, {"c", 2}});
    f.equations = two_equation_system(2, 2);
    f.notes = "as printed";
    return f;
}

ParametricFamily example2_corrected()
{
    // g = a b c^2, k1 = a d r1^2, l1 = b d r2^2, gamma = c c1, S2 = c1 d r1 r2
    // substituted into x1 = s1^2 k1 h, x2 = s2^2 l1 h, x3 = gamma^2 k1 l1,
    // x4 = g S1^2, z1 = s1 s2 gamma k1 l1 h, z2 = g S2 S1.
    ParametricFamily f;
    f.id = "example2-corrected";
    f.variables["x1"] = Monomial({{"s1", 2}, {"a", 1}, {"d", 1}, {"r1", 2}, {"h", 1}});
    f.variables["x2"] = Monomial({{"s2", 2}, {"b", 1}, {"d", 1}, {"r2", 2}, {"h", 1}});
    f.variables["x3"] = Monomial({{"a", 1}, {"b", 1}, {"c1", 2}, {"r1", 2}, {"r2", 2}, {"d", 2}, {"c", 2}});
    f.variables["x4"] = Monomial({{"a", 1}, {"b", 1}, {"c", 2}, {"S1", 2}});
    f.variables["z1"] = Monomial(
        {{"a", 1}, {"b", 1}, {"h", 1}, {"s1", 1}, {"s2", 1}, {"c", 1}, {"c1", 1}, {"r1", 2}, {"r2", 2}, {"d", 2}});
    f.variables["z2"] = Monomial({{"a", 1}, {"b", 1}, {"S1", 1}, {"r1", 1}, {"r2", 1}, {"d", 1}, {"c1", 1}, {"c", 2}});
    f.equations = two_equation_system(2, 2);
    f.notes = "x1, x2, z1 carry r1^2, r2^2 as forced by f^2 = beta*b1";
    return f;
}

ExampleAudit audit_printed_example(int which)
{
    ExampleAudit out;
    if (which == 1)
        out.family = example1_printed();
    else if (which == 2)
        out.family = example2_printed();
    else
        throw Error(ErrorKind::InvalidArgument, "printed example must be 1 or 2");
    for (const auto& eq : out.family.equations)
        out.verdicts.push_back(verify_identity(out.family, eq));
    return out;
}

std::vector<std::string> fixture_names()
{
    std::vector<std::string> names = {"example1-printed", "example2-printed", "example2-corrected", "theorem3-n2"};
    for (unsigned n = 2; n <= 6; ++n)
        names.push_back("theorem5-n" + std::to_string(n));
    for (auto [m, n] : {std::pair{3u, 2u}, {3u, 3u}, {4u, 2u}, {4u, 3u}})
        names.push_back("theorem6-printed-m" + std::to_string(m) + "-n" + std::to_string(n));
    for (auto [m, n] : {std::pair{3u, 3u}, {4u, 2u}, {4u, 3u}})
        names.push_back("theorem6-m" + std::to_string(m) + "-n" + std::to_string(n));
    return names;
}

ParametricFamily fixture(const std::string& name)
{
    if (name == "example1-printed")
        return example1_printed();
    if (name == "example2-printed")
        return example2_printed();
    if (name == "example2-corrected")
        return example2_corrected();
    unsigned m = 0, n = 0;
    if (std::sscanf(name.c_str(), "theorem3-n%u", &n) == 1 && name == "theorem3-n" + std::to_string(n))
        return theorem3_family(n);
    if (std::sscanf(name.c_str(), "theorem5-n%u", &n) == 1 && name == "theorem5-n" + std::to_string(n))
        return theorem5_family(n);
    if (std::sscanf(name.c_str(), "theorem6-printed-m%u-n%u", &m, &n) == 2 &&
        name == "theorem6-printed-m" + std::to_string(m) + "-n" + std::to_string(n))
        return theorem6_printed_family(m, n).family;
    if (std::sscanf(name.c_str(), "theorem6-m%u-n%u", &m, &n) == 2 &&
        name == "theorem6-m" + std::to_string(m) + "-n" + std::to_string(n))
        return theorem6_family(m, n);
    throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + name + "'");
}

} // namespace prodpow
