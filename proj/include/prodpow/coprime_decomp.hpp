#ifndef PRODPOW_COPRIME_DECOMP_HPP
#define PRODPOW_COPRIME_DECOMP_HPP

#include <variant>

#include "prodpow/errors.hpp"
#include "prodpow/exact_arith.hpp"
#include "prodpow/monomial.hpp"

namespace prodpow {

// alpha = sigma*a1^n, beta = varsigma*b1^n, eta = sigma*varsigma, gamma = a1*b1
struct Theorem2Split {
    Nat sigma;
    Nat varsigma;
    Nat a1;
    Nat b1;

    friend bool operator==(const Theorem2Split&, const Theorem2Split&) = default;
};

/// Splits alpha*beta = eta*gamma^n with gcd(alpha, beta) = 1. a1 collects the
/// primes of gamma that divide alpha.
Theorem2Split theorem2_split(const Nat& alpha, const Nat& beta, const Nat& eta, const Nat& gamma, unsigned n);

struct Theorem3Params {
    Nat k1 = 1;
    Nat k2 = 1;
    Nat t1 = 1;
    Nat t2 = 1;

    friend bool operator==(const Theorem3Params&, const Theorem3Params&) = default;
};

// x*y = k*z^n
struct Theorem3Solution {
    Nat x = 1;
    Nat y = 1;
    Nat z = 1;
    Nat k = 1;

    friend bool operator==(const Theorem3Solution&, const Theorem3Solution&) = default;
};

/// x = k1 t1^n, y = k2 t2^n, z = t1 t2, k = k1 k2.
Theorem3Solution theorem3_generate(const Theorem3Params& p, unsigned n);

/// Inverse of theorem3_generate. Each coprime-base block of z goes whole to
/// the x side when that leaves k1, k2 coprime, otherwise to the y side;
/// when neither works the solution is outside the family.
std::variant<Theorem3Params, CoverageGap> theorem3_recover(const Nat& x, const Nat& y, const Nat& z, const Nat& k,
                                                           unsigned n);

/// Symbolic form of the two-parameter-pair family, with equation x*y = k*z^n.
ParametricFamily theorem3_family(unsigned n);

} // namespace prodpow

#endif
