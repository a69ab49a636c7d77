#include <doctest.h>

#include <random>

#include "prodpow/monomial.hpp"
#include "test_util.hpp"

using namespace prodpow;
using testutil::error_kind;
using testutil::nat;

namespace {

Monomial random_monomial(std::mt19937_64& rng, const std::vector<std::string>& names)
{
    std::uniform_int_distribution<int> e(0, 3);
    std::map<std::string, Exponent> exps;
    for (const auto& n : names)
        exps[n] = e(rng);
    return Monomial(exps);
}

} // namespace

TEST_CASE("monomials are canonical")
{
    const Monomial a = Monomial::var("a", 2) * Monomial::var("b");
    const Monomial b = Monomial(std::map<std::string, Exponent>{{"b", 1}, {"a", 2}, {"c", 0}});
    CHECK(a == b);
    CHECK(a.exponent("c") == 0);
    CHECK(Monomial().is_one());
    CHECK(Monomial::var("q", 0).is_one());
    CHECK(a.to_string() == "a^2*b");
    CHECK(Monomial().to_string() == "1");
    CHECK(mono_pow(a, 3) == Monomial::var("a", 6) * Monomial::var("b", 3));
    CHECK(mono_pow(a, 0).is_one());
    CHECK(mono_mul(a, Monomial::var("c")).to_string() == "a^2*b*c");
}

TEST_CASE("substitute and evaluate")
{
    const Monomial m = Monomial::var("a", 2) * Monomial::var("b");
    const Monomial s = m.substitute({{"a", Monomial::var("u") * Monomial::var("v", 2)}});
    CHECK(s == Monomial::var("u", 2) * Monomial::var("v", 4) * Monomial::var("b"));
    CHECK(s.evaluate({{"u", nat(2)}, {"v", nat(3)}, {"b", nat(5)}}) == 4 * 81 * 5);
    CHECK(error_kind([&] { s.evaluate({{"u", nat(2)}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("verify_identity reports the signed exponent residual")
{
    ParametricFamily f;
    f.variables["x"] = Monomial::var("p", 2) * Monomial::var("q");
    f.variables["y"] = Monomial::var("q");
    f.variables["z"] = Monomial::var("p") * Monomial::var("q");
    const std::vector<std::string> lhs{"x", "y"};
    const IdentityVerdict ok = verify_identity(f, lhs, "z", 2);
    CHECK(ok.pass);
    CHECK(ok.residual.empty());

    f.variables["y"] = Monomial::var("q", 2);
    const IdentityVerdict bad = verify_identity(f, lhs, "z", 2);
    CHECK(!bad.pass);
    CHECK(bad.residual == ExponentDiff{{"q", 1}});
    CHECK(to_string(bad.residual) == "{q:+1}");

    const std::vector<std::string> coeff{"y"};
    f.variables["y"] = Monomial::var("q");
    CHECK(verify_identity(f, std::vector<std::string>{"x"}, "z", 2, coeff).pass == false);
    CHECK(error_kind([&] { verify_identity(f, std::vector<std::string>{"w"}, "z", 2); }) ==
          ErrorKind::InvalidArgument);
}

TEST_CASE("exponent accounting agrees with evaluation at distinct primes")
{
    // With every parameter set to its own prime, a monomial identity holds
    // numerically exactly when the exponent vectors agree.
    const std::vector<std::string> names{"a", "b", "c", "d"};
    const Assignment primes{{"a", nat(2)}, {"b", nat(3)}, {"c", nat(5)}, {"d", nat(7)}};
    std::mt19937_64 rng(19);
    int passes = 0;
    for (int round = 0; round < 2000; ++round) {
        ParametricFamily f;
        f.variables["x1"] = random_monomial(rng, names);
        f.variables["x2"] = random_monomial(rng, names);
        f.variables["z"] = random_monomial(rng, names);
        // Bias towards true identities: set x2 to balance x1 half the time.
        if (round % 2 == 0) {
            std::map<std::string, Exponent> e;
            for (const auto& n : names)
                e[n] = 2 * f.variables["z"].exponent(n) - f.variables["x1"].exponent(n);
            bool ok = true;
            for (auto& [n, v] : e)
                ok &= v >= 0;
            if (ok)
                f.variables["x2"] = Monomial(e);
        }
        const Equation eq{{"x1", "x2"}, "z", 2, {}};
        const bool symbolic = verify_identity(f, eq).pass;
        passes += symbolic;
        CHECK(holds(eq, instantiate(f, primes).values) == symbolic);
    }
    CHECK(passes > 100);
}

TEST_CASE("instantiate reports coprimality violations")
{
    ParametricFamily f;
    f.variables["x"] = Monomial::var("a") * Monomial::var("b");
    f.constraints = {{"a", "b"}};
    auto inst = instantiate(f, {{"a", nat(4)}, {"b", nat(6)}});
    CHECK(inst.values.at("x") == 24);
    CHECK(inst.constraint_violations.size() == 1);
    inst = instantiate(f, {{"a", nat(4)}, {"b", nat(9)}});
    CHECK(inst.constraint_violations.empty());
    CHECK(error_kind([&] { instantiate(f, {{"a", nat(0)}, {"b", nat(1)}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("parameters and equation text")
{
    ParametricFamily f;
    f.variables["x"] = Monomial::var("a") * Monomial::var("b");
    f.variables["z"] = Monomial::var("c");
    CHECK(parameters(f) == std::set<std::string>{"a", "b", "c"});
    CHECK(Equation{{"x", "y"}, "z", 3, {}}.to_string() == "x*y = z^3");
    CHECK(Equation{{"x", "y"}, "z", 2, {"k"}}.to_string() == "x*y = k*z^2");
}
