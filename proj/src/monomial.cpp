#include "prodpow/monomial.hpp"

#include <sstream>

#include "prodpow/errors.hpp"

namespace prodpow {

Monomial::Monomial(std::map<std::string, Exponent> exponents)
{
    for (auto& [name, e] : exponents) {
        if (e < 0)
            throw Error(ErrorKind::InvalidArgument, "negative exponent for parameter '" + name + "'");
        if (e != 0)
            exponents_.emplace(name, e);
    }
}

Monomial Monomial::var(const std::string& name, Exponent exponent)
{
    return Monomial({{name, exponent}});
}

Exponent Monomial::exponent(const std::string& name) const
{
    auto it = exponents_.find(name);
    return it == exponents_.end() ? 0 : it->second;
}

Monomial& Monomial::operator*=(const Monomial& other)
{
    for (const auto& [name, e] : other.exponents_)
        exponents_[name] += e;
    return *this;
}

Monomial Monomial::substitute(const std::map<std::string, Monomial>& rules) const
{
    Monomial out;
    for (const auto& [name, e] : exponents_) {
        auto it = rules.find(name);
        if (it == rules.end())
            out *= var(name, e);
        else
            out *= mono_pow(it->second, e);
    }
    return out;
}

Nat Monomial::evaluate(const Assignment& assignment) const
{
    Nat value = 1;
    for (const auto& [name, e] : exponents_) {
        auto it = assignment.find(name);
        if (it == assignment.end())
            throw Error(ErrorKind::InvalidArgument, "missing parameter '" + name + "'");
        value *= pow(it->second, static_cast<unsigned long>(e));
    }
    return value;
}

std::string Monomial::to_string() const
{
    if (exponents_.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, e] : exponents_) {
        if (!first)
            os << '*';
        first = false;
        os << name;
        if (e != 1)
            os << '^' << e;
    }
    return os.str();
}

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    return a * b;
}

Monomial mono_pow(const Monomial& a, Exponent k)
{
    if (k < 0)
        throw Error(ErrorKind::InvalidArgument, "mono_pow: negative power");
    std::map<std::string, Exponent> scaled;
    for (const auto& [name, e] : a.exponents())
        scaled.emplace(name, e * k);
    return Monomial(std::move(scaled));
}

std::string Equation::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        os << (i ? "*" : "") << lhs[i];
    if (lhs.empty())
        os << '1';
    os << " = ";
    for (const auto& c : coefficient)
        os << c << '*';
    os << rhs;
    if (n != 1)
        os << '^' << n;
    return os.str();
}

namespace {

const Monomial& formula_of(const ParametricFamily& family, const std::string& var)
{
    auto it = family.variables.find(var);
    if (it == family.variables.end())
        throw Error(ErrorKind::InvalidArgument, "unknown variable '" + var + "' in family '" + family.id + "'");
    return it->second;
}

} // namespace

IdentityVerdict verify_identity(const ParametricFamily& family, std::span<const std::string> lhs_vars,
                                const std::string& rhs_var, unsigned n, std::span<const std::string> coefficient)
{
    ExponentDiff diff;
    for (const auto& v : lhs_vars)
        for (const auto& [name, e] : formula_of(family, v).exponents())
            diff[name] += e;
    for (const auto& [name, e] : formula_of(family, rhs_var).exponents())
        diff[name] -= e * static_cast<Exponent>(n);
    for (const auto& c : coefficient)
        for (const auto& [name, e] : formula_of(family, c).exponents())
            diff[name] -= e;
    std::erase_if(diff, [](const auto& kv) { return kv.second == 0; });
    IdentityVerdict verdict;
    verdict.pass = diff.empty();
    verdict.residual = std::move(diff);
    return verdict;
}

IdentityVerdict verify_identity(const ParametricFamily& family, const Equation& equation)
{
    return verify_identity(family, equation.lhs, equation.rhs, equation.n, equation.coefficient);
}

Instantiation instantiate(const ParametricFamily& family, const Assignment& assignment)
{
    for (const auto& [name, value] : assignment)
        if (value < 1)
            throw Error(ErrorKind::InvalidArgument, "parameter '" + name + "' must be >= 1");
    Instantiation out;
    for (const auto& [var, formula] : family.variables)
        out.values.emplace(var, formula.evaluate(assignment));
    for (const auto& [a, b] : family.constraints) {
        auto ia = assignment.find(a);
        auto ib = assignment.find(b);
        if (ia == assignment.end() || ib == assignment.end())
            continue;
        if (gcd(ia->second, ib->second) != 1)
            out.constraint_violations.emplace_back(a, b);
    }
    return out;
}

bool holds(const Equation& equation, const std::map<std::string, Nat>& values)
{
    auto value_of = [&](const std::string& v) -> const Nat& {
        auto it = values.find(v);
        if (it == values.end())
            throw Error(ErrorKind::InvalidArgument, "no value for variable '" + v + "'");
        return it->second;
    };
    Nat lhs = 1;
    for (const auto& v : equation.lhs)
        lhs *= value_of(v);
    Nat rhs = pow(value_of(equation.rhs), equation.n);
    for (const auto& c : equation.coefficient)
        rhs *= value_of(c);
    return lhs == rhs;
}

std::set<std::string> parameters(const ParametricFamily& family)
{
    std::set<std::string> names;
    for (const auto& [var, formula] : family.variables)
        for (const auto& [name, e] : formula.exponents())
            names.insert(name);
    return names;
}

std::string to_string(const ExponentDiff& diff)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [name, e] : diff) {
        os << (first ? "" : ", ") << name << ':' << (e > 0 ? "+" : "") << e;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace prodpow
