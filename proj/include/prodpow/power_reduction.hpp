#ifndef PRODPOW_POWER_REDUCTION_HPP
#define PRODPOW_POWER_REDUCTION_HPP

// Reduction of x_1...x_{m-1} = z^n to the pair
//
//   X_top * X_second * x_1 ... x_{m-3} = v * Z0^n      (E2)
//   w^{n-2} = v * d^2                                  (E3)
//
// and the closed-form parametrization of (E3).
//
// Recovering parameters for (E3) follows an iterated gcd chain. With
// D_{-1} = w and r_{-2} = d, step i sets
//
//   D_i = gcd(D_{i-1}, r_{2i-2}),  D_{i-1} = D_i r_{2i+1},  r_{2i-2} = D_i r_{2i}
//
// so that gcd(r_{2i+1}, r_{2i}) = 1. Unrolled, after step j
//
//   w = D_j * r_1 r_3 ... r_{2j+1}
//   d = r_{2j} * D_j^{j+1} * prod_{l=1..j} r_{2l+1}^l
//
// For odd n the chain stops at j = (n-5)/2 with g = r_{n-5} and
// D_j = r_{n-2} g^2; for even n at j = (n-6)/2 with h = r_{n-6} and
// D_j = r_{n-3} h. The exponent bookkeeping of intermediate steps is only
// consistent in this unrolled form (the r_{2i-1} exponent is n-2i-6 when
// derived step by step, not n-4i-6); the closed forms are checked
// symbolically in the tests.

#include <variant>
#include <vector>

#include "prodpow/errors.hpp"
#include "prodpow/exact_arith.hpp"
#include "prodpow/monomial.hpp"
#include "prodpow/solution.hpp"

namespace prodpow {

struct ReductionWitness {
    Nat theta;
    Nat w;
    Nat d;
    Nat v;
    Nat Z0;
    Nat X_top;     // x_{m-1} / theta
    Nat X_second;  // x_{m-2} / theta

    friend bool operator==(const ReductionWitness&, const ReductionWitness&) = default;
};

ReductionWitness theorem4_reduce(const Solution& solution);

/// Checks every defining relation of the witness against the solution.
bool witness_holds(const Solution& solution, const ReductionWitness& witness);

struct Theorem5Params {
    unsigned n = 2;
    std::vector<Nat> rs;  // r_1, r_3, ..., r_{2i+1}
    Nat tail = 1;         // g for odd n, h for even n

    friend bool operator==(const Theorem5Params&, const Theorem5Params&) = default;
};

struct Theorem5Triple {
    Nat w;
    Nat d;
    Nat v;

    friend bool operator==(const Theorem5Triple&, const Theorem5Triple&) = default;
};

struct Theorem5Step {
    Nat D;
    Nat r_odd;
    Nat r_even;
};

struct Theorem5Trace {
    std::vector<Theorem5Step> chain;
};

struct Theorem5Recovery {
    Theorem5Params params;
    Theorem5Trace trace;
};

/// (n-1)/2 for odd n, (n-2)/2 for even n.
std::size_t theorem5_rs_length(unsigned n);

Theorem5Params theorem5_all_ones(unsigned n);

Theorem5Triple theorem5_generate(const Theorem5Params& p);

std::variant<Theorem5Recovery, CoverageGap> theorem5_recover(const Nat& w, const Nat& d, const Nat& v, unsigned n);

/// theta = w*d in closed form.
Nat theta_compute(const Theorem5Params& p);

/// Closed forms as a symbolic family over r1, r3, ..., and g or h, with the
/// equation w^{n-2} = v*d^2 and theta = w*d.
ParametricFamily theorem5_family(unsigned n);

} // namespace prodpow

#endif
