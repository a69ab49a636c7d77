#ifndef PRODPOW_TESTS_TEST_UTIL_HPP
#define PRODPOW_TESTS_TEST_UTIL_HPP

#include <optional>
#include <string>

#include "prodpow/errors.hpp"
#include "prodpow/exact_arith.hpp"

namespace testutil {

/// Kind of the prodpow::Error thrown by f, or nullopt if none is thrown.
template <typename F>
std::optional<prodpow::ErrorKind> error_kind(F&& f)
{
    try {
        f();
    } catch (const prodpow::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline prodpow::Nat nat(unsigned long long v)
{
    return prodpow::Nat(std::to_string(v));
}

inline unsigned long long u64(const prodpow::Nat& v)
{
    return std::stoull(v.get_str());
}

} // namespace testutil

#endif
