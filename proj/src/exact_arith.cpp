#include "prodpow/exact_arith.hpp"

#include <algorithm>

#include "prodpow/errors.hpp"

namespace prodpow {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Precondition: return "precondition violation";
    case ErrorKind::GuardExceeded: return "guard exceeded";
    case ErrorKind::UnsupportedScope: return "unsupported scope";
    case ErrorKind::Defect: return "internal defect";
    case ErrorKind::Parse: return "parse error";
    }
    return "error";
}

Nat gcd(const Nat& a, const Nat& b)
{
    Nat g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool divides(const Nat& a, const Nat& b)
{
    if (a == 0)
        return b == 0;
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

Nat pow(const Nat& base, unsigned long exponent)
{
    Nat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

SupportSplit support_part(const Nat& gamma, const Nat& alpha)
{
    require_positive(gamma, "gamma");
    require_positive(alpha, "alpha");
    // Every prime of alpha still present in rem also divides g.
    Nat in = 1;
    Nat rem = gamma;
    Nat g = gcd(rem, alpha);
    while (g != 1) {
        rem /= g;
        in *= g;
        g = gcd(rem, g);
    }
    return {in, rem};
}

std::optional<Nat> nth_root_exact(const Nat& z, unsigned long n)
{
    require_positive(z, "z");
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "nth_root_exact: n must be >= 1");
    Nat r;
    int exact = mpz_root(r.get_mpz_t(), z.get_mpz_t(), n);
    if (!exact)
        return std::nullopt;
    return r;
}

std::vector<Nat> divisors(const Nat& z, std::uint64_t guard)
{
    require_positive(z, "z");
    if (z > Nat(std::to_string(guard)))
        throw Error(ErrorKind::GuardExceeded,
                    "divisors: " + z.get_str() + " exceeds enumeration guard " + std::to_string(guard));
    const std::uint64_t v = std::stoull(z.get_str());
    std::vector<Nat> low, high;
    for (std::uint64_t d = 1; d * d <= v; ++d) {
        if (v % d != 0)
            continue;
        low.emplace_back(std::to_string(d));
        if (d * d != v)
            high.emplace_back(std::to_string(v / d));
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::vector<Nat> coprime_base(std::span<const Nat> values)
{
    std::vector<Nat> base;
    for (const Nat& v : values) {
        require_positive(v, "coprime_base value");
        if (v > 1)
            base.push_back(v);
    }
    // Each refinement replaces (a, b) by (a/g, g, b/g), which divides the
    // product of the list by g, so the loop terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < base.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
                Nat g = gcd(base[i], base[j]);
                if (g == 1)
                    continue;
                Nat a = base[i] / g;
                Nat b = base[j] / g;
                base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
                base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
                for (Nat* part : {&a, &g, &b})
                    if (*part > 1)
                        base.push_back(*part);
                changed = true;
            }
        }
    }
    std::sort(base.begin(), base.end());
    return base;
}

unsigned long valuation(const Nat& value, const Nat& base)
{
    if (base <= 1)
        throw Error(ErrorKind::InvalidArgument, "valuation: base must be > 1");
    require_positive(value, "value");
    unsigned long e = 0;
    Nat rem = value;
    while (divides(base, rem)) {
        rem /= base;
        ++e;
    }
    return e;
}

Nat parse_nat(std::string_view text)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw Error(ErrorKind::Parse, "not a decimal integer: '" + std::string(text) + "'");
    return Nat(std::string(text), 10);
}

std::string to_string(const Nat& value)
{
    return value.get_str();
}

void require_positive(const Nat& value, const char* what)
{
    if (value < 1)
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be a positive integer");
}

} // namespace prodpow
