#ifndef PRODPOW_FIXTURES_HPP
#define PRODPOW_FIXTURES_HPP

// Printed parametric families, transcribed as data with their typos kept,
// plus the repaired families derived next to them. Parameter primes are
// spelled with a trailing "p" (k'_1 -> "k1p").

#include <string>
#include <vector>

#include "prodpow/monomial.hpp"

namespace prodpow {

/// x1 x2 x3 = z1^3, x3 x4 = z2^2: 11 parameters.
ParametricFamily example1_printed();

/// x1 x2 x3 = z1^2, x3 x4 = z2^2 exactly as printed; the first equation
/// is off by r1*r2 on the product side.
ParametricFamily example2_printed();

/// The same system with the squares restored: f^2 = beta*b1 solved as
/// beta = d r1^2, b1 = d r2^2, f = d r1 r2.
ParametricFamily example2_corrected();

struct ExampleAudit {
    ParametricFamily family;
    std::vector<IdentityVerdict> verdicts;  // one per equation
};

/// which: 1 or 2.
ExampleAudit audit_printed_example(int which);

/// Names accepted by fixture(), in a fixed order.
std::vector<std::string> fixture_names();

/// Throws InvalidArgument for unknown names.
ParametricFamily fixture(const std::string& name);

} // namespace prodpow

#endif
