#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "prodpow/coprime_decomp.hpp"
#include "test_util.hpp"

using namespace prodpow;
using testutil::error_kind;
using testutil::nat;

TEST_CASE("theorem2_split on a worked instance")
{
    // alpha = 3*2^2, beta = 5*7^2, eta = 15, gamma = 14
    const Theorem2Split s = theorem2_split(nat(12), nat(245), nat(15), nat(14), 2);
    CHECK(s == Theorem2Split{nat(3), nat(5), nat(2), nat(7)});
}

TEST_CASE("theorem2_split inverts its construction")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<unsigned long long> small(1, 30);
    std::uniform_int_distribution<unsigned> expo(1, 5);
    int checked = 0;
    while (checked < 1500) {
        const auto sigma = small(rng), varsigma = small(rng), a1 = small(rng), b1 = small(rng);
        const unsigned n = expo(rng);
        const Nat alpha = nat(sigma) * pow(nat(a1), n);
        const Nat beta = nat(varsigma) * pow(nat(b1), n);
        if (gcd(alpha, beta) != 1)
            continue;
        ++checked;
        const Theorem2Split s = theorem2_split(alpha, beta, nat(sigma * varsigma), nat(a1 * b1), n);
        CHECK(s == Theorem2Split{nat(sigma), nat(varsigma), nat(a1), nat(b1)});
    }
}

TEST_CASE("theorem2_split preconditions")
{
    CHECK(error_kind([] { theorem2_split(nat(4), nat(6), nat(6), nat(2), 2); }) == ErrorKind::Precondition);
    CHECK(error_kind([] { theorem2_split(nat(3), nat(5), nat(1), nat(2), 2); }) == ErrorKind::Precondition);
    CHECK(error_kind([] { theorem2_split(nat(0), nat(5), nat(1), nat(2), 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("theorem3_generate satisfies x*y = k*z^n and enforces coprimality")
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<unsigned long long> d(1, 40);
    for (int i = 0; i < 1000; ++i) {
        const auto k1 = d(rng), k2 = d(rng), t1 = d(rng), t2 = d(rng);
        const unsigned n = 2 + i % 4;
        const Theorem3Params p{nat(k1), nat(k2), nat(t1), nat(t2)};
        if (oracle::gcd(k1, k2) != 1 || oracle::gcd(t1, t2) != 1) {
            CHECK(error_kind([&] { theorem3_generate(p, n); }) == ErrorKind::InvalidArgument);
            continue;
        }
        const Theorem3Solution s = theorem3_generate(p, n);
        CHECK(s.x * s.y == s.k * pow(s.z, n));
        auto back = theorem3_recover(s.x, s.y, s.z, s.k, n);
        REQUIRE(std::holds_alternative<Theorem3Params>(back));
        CHECK(theorem3_generate(std::get<Theorem3Params>(back), n) == s);
    }
}

TEST_CASE("theorem3_recover succeeds exactly on the reachable solutions")
{
    for (unsigned n : {2u, 3u})
        for (unsigned long long x = 1; x <= 30; ++x)
            for (unsigned long long y = 1; y <= 30; ++y)
                for (unsigned long long k = 1; k <= 6; ++k) {
                    if ((x * y) % k)
                        continue;
                    auto z = nth_root_exact(nat(x * y / k), n);
                    if (!z)
                        continue;
                    const auto zz = testutil::u64(*z);
                    const bool reachable = oracle::theorem3_reachable(x, y, zz, k, n);
                    const auto rec = theorem3_recover(nat(x), nat(y), *z, nat(k), n);
                    CHECK_MESSAGE(std::holds_alternative<Theorem3Params>(rec) == reachable,
                                  "x=" << x << " y=" << y << " z=" << zz << " k=" << k << " n=" << n);
                }
}

TEST_CASE("theorem3_recover: (2, 2, 2, 1) is a gap")
{
    const auto rec = theorem3_recover(nat(2), nat(2), nat(2), nat(1), 2);
    CHECK(std::holds_alternative<CoverageGap>(rec));
    CHECK(error_kind([] { theorem3_recover(nat(2), nat(3), nat(2), nat(1), 2); }) == ErrorKind::Precondition);
}

TEST_CASE("theorem3_family passes exponent accounting")
{
    for (unsigned n = 2; n <= 8; ++n) {
        const ParametricFamily f = theorem3_family(n);
        REQUIRE(f.equations.size() == 1);
        CHECK(verify_identity(f, f.equations[0]).pass);
    }
}
