#include "prodpow/power_reduction.hpp"

#include <sstream>

namespace prodpow {

bool Solution::satisfied() const
{
    Nat product = 1;
    for (const Nat& x : xs)
        product *= x;
    return product == pow(z, n);
}

std::string Solution::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (const Nat& x : xs)
        os << x.get_str() << ", ";
    os << "z=" << z.get_str() << ')';
    return os.str();
}

Solution all_ones_solution(unsigned m, unsigned n)
{
    return Solution{std::vector<Nat>(m - 1, Nat(1)), Nat(1), n};
}

void require_valid(const Solution& s)
{
    if (s.m() < 3)
        throw Error(ErrorKind::InvalidArgument, "solution needs m >= 3 (at least two x values)");
    if (s.n < 2)
        throw Error(ErrorKind::InvalidArgument, "solution needs n >= 2");
    for (const Nat& x : s.xs)
        require_positive(x, "x");
    require_positive(s.z, "z");
    if (!s.satisfied())
        throw Error(ErrorKind::Precondition, "product of x values is not z^n for " + s.to_string());
}

ReductionWitness theorem4_reduce(const Solution& solution)
{
    require_valid(solution);
    const unsigned n = solution.n;
    const Nat& top = solution.xs[solution.xs.size() - 1];
    const Nat& second = solution.xs[solution.xs.size() - 2];

    ReductionWitness r;
    r.theta = gcd(top, second);
    r.X_top = top / r.theta;
    r.X_second = second / r.theta;
    r.w = gcd(solution.z, r.theta);
    r.Z0 = solution.z / r.w;
    r.d = r.theta / r.w;
    const Nat wn2 = pow(r.w, n - 2);
    const Nat d2 = r.d * r.d;
    if (!divides(d2, wn2))
        throw Error(ErrorKind::Defect, "theorem4_reduce: d^2 does not divide w^(n-2)");
    r.v = wn2 / d2;
    return r;
}

bool witness_holds(const Solution& s, const ReductionWitness& r)
{
    const unsigned n = s.n;
    const std::size_t k = s.xs.size();
    if (k < 2)
        return false;
    Nat lower = 1;
    for (std::size_t i = 0; i + 2 < k; ++i)
        lower *= s.xs[i];
    return r.theta == gcd(s.xs[k - 1], s.xs[k - 2]) && s.xs[k - 1] == r.theta * r.X_top &&
           s.xs[k - 2] == r.theta * r.X_second && gcd(r.X_top, r.X_second) == 1 && r.w == gcd(s.z, r.theta) &&
           s.z == r.w * r.Z0 && r.theta == r.w * r.d && gcd(r.Z0, r.d) == 1 &&
           r.X_top * r.X_second * lower == r.v * pow(r.Z0, n) && pow(r.w, n - 2) == r.v * r.d * r.d;
}

std::size_t theorem5_rs_length(unsigned n)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "n must be >= 2");
    return n % 2 ? (n - 1) / 2 : (n - 2) / 2;
}

Theorem5Params theorem5_all_ones(unsigned n)
{
    return Theorem5Params{n, std::vector<Nat>(theorem5_rs_length(n), Nat(1)), Nat(1)};
}

namespace {

void require_params(const Theorem5Params& p)
{
    if (p.rs.size() != theorem5_rs_length(p.n))
        throw Error(ErrorKind::InvalidArgument, "theorem5: expected " + std::to_string(theorem5_rs_length(p.n)) +
                                                    " r parameters for n=" + std::to_string(p.n) + ", got " +
                                                    std::to_string(p.rs.size()));
    for (const Nat& r : p.rs)
        require_positive(r, "r");
    require_positive(p.tail, "tail");
}

} // namespace

Theorem5Triple theorem5_generate(const Theorem5Params& p)
{
    require_params(p);
    const unsigned n = p.n;
    Theorem5Triple t{1, 1, 1};
    for (std::size_t i = 0; i < p.rs.size(); ++i) {
        t.w *= p.rs[i];
        t.d *= pow(p.rs[i], i);
        t.v *= pow(p.rs[i], n - 2 * i - 2);
    }
    if (n % 2) {
        t.w *= p.tail * p.tail;
        t.d *= pow(p.tail, n - 2);
    } else {
        t.w *= p.tail;
        t.d *= pow(p.tail, (n - 2) / 2);
    }
    return t;
}

std::variant<Theorem5Recovery, CoverageGap> theorem5_recover(const Nat& w, const Nat& d, const Nat& v, unsigned n)
{
    require_positive(w, "w");
    require_positive(d, "d");
    require_positive(v, "v");
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "theorem5_recover: n must be >= 2");
    if (pow(w, n - 2) != v * d * d)
        throw Error(ErrorKind::Precondition, "theorem5_recover: w^(n-2) != v*d^2");

    Theorem5Recovery out;
    out.params.n = n;
    if (n == 2) {
        // w^0 = v d^2 forces v = d = 1, so w is free.
        out.params.tail = w;
        return out;
    }

    const int last_step = n % 2 ? (static_cast<int>(n) - 5) / 2 : (static_cast<int>(n) - 6) / 2;
    Nat D = w;
    Nat r_even = d;
    for (int i = 0; i <= last_step; ++i) {
        Nat next = gcd(D, r_even);
        Nat r_odd = D / next;
        r_even /= next;
        out.trace.chain.push_back({next, r_odd, r_even});
        out.params.rs.push_back(r_odd);
        D = next;
    }
    out.params.tail = r_even;
    const Nat tail_part = n % 2 ? r_even * r_even : r_even;
    if (!divides(tail_part, D))
        return CoverageGap{"chain ended with D = " + D.get_str() + " not divisible by the tail part " +
                           tail_part.get_str()};
    out.params.rs.push_back(D / tail_part);

    if (theorem5_generate(out.params) != Theorem5Triple{w, d, v})
        return CoverageGap{"recovered parameters do not regenerate (w, d, v)"};
    return out;
}

Nat theta_compute(const Theorem5Params& p)
{
    require_params(p);
    Nat theta = 1;
    for (std::size_t i = 0; i < p.rs.size(); ++i)
        theta *= pow(p.rs[i], i + 1);
    theta *= p.n % 2 ? pow(p.tail, p.n) : pow(p.tail, p.n / 2);
    return theta;
}

ParametricFamily theorem5_family(unsigned n)
{
    const std::size_t len = theorem5_rs_length(n);
    const bool odd = n % 2;
    const std::string tail = odd ? "g" : "h";
    const auto N = static_cast<Exponent>(n);

    Monomial w, d, v, theta;
    for (std::size_t i = 0; i < len; ++i) {
        const std::string r = "r" + std::to_string(2 * i + 1);
        const auto I = static_cast<Exponent>(i);
        w *= Monomial::var(r);
        d *= Monomial::var(r, I);
        v *= Monomial::var(r, N - 2 * I - 2);
        theta *= Monomial::var(r, I + 1);
    }
    w *= Monomial::var(tail, odd ? 2 : 1);
    d *= Monomial::var(tail, odd ? N - 2 : (N - 2) / 2);
    theta *= Monomial::var(tail, odd ? N : N / 2);

    ParametricFamily f;
    f.id = "theorem5-n" + std::to_string(n);
    f.variables = {{"w", w}, {"d", d}, {"v", v}, {"theta", theta}};
    f.equations.push_back(Equation{std::vector<std::string>(n - 2, "w"), "d", 2, {"v"}});
    f.equations.push_back(Equation{{"w", "d"}, "theta", 1, {}});
    return f;
}

} // namespace prodpow
