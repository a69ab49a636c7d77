#ifndef PRODPOW_SOLUTION_HPP
#define PRODPOW_SOLUTION_HPP

#include <string>
#include <vector>

#include "prodpow/exact_arith.hpp"

namespace prodpow {

/// (x_1, ..., x_{m-1}, z) with x_1 * ... * x_{m-1} = z^n.
struct Solution {
    std::vector<Nat> xs;
    Nat z = 1;
    unsigned n = 2;

    unsigned m() const noexcept { return static_cast<unsigned>(xs.size()) + 1; }
    bool satisfied() const;
    std::string to_string() const;

    friend bool operator==(const Solution&, const Solution&) = default;
};

Solution all_ones_solution(unsigned m, unsigned n);

/// Throws InvalidArgument for m < 3, n < 2 or non-positive entries and
/// Precondition when the product is not z^n.
void require_valid(const Solution& s);

} // namespace prodpow

#endif
