#include "prodpow/coprime_decomp.hpp"

#include <array>

namespace prodpow {

Theorem2Split theorem2_split(const Nat& alpha, const Nat& beta, const Nat& eta, const Nat& gamma, unsigned n)
{
    require_positive(alpha, "alpha");
    require_positive(beta, "beta");
    require_positive(eta, "eta");
    require_positive(gamma, "gamma");
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "theorem2_split: n must be >= 1");
    if (alpha * beta != eta * pow(gamma, n))
        throw Error(ErrorKind::Precondition, "theorem2_split: alpha*beta != eta*gamma^n");
    if (gcd(alpha, beta) != 1)
        throw Error(ErrorKind::Precondition, "theorem2_split: gcd(alpha, beta) != 1");

    Theorem2Split out;
    out.a1 = support_part(gamma, alpha).in_part;
    out.b1 = gamma / out.a1;
    const Nat a1n = pow(out.a1, n);
    const Nat b1n = pow(out.b1, n);
    if (!divides(a1n, alpha) || !divides(b1n, beta))
        throw Error(ErrorKind::Defect, "theorem2_split: n-th power part does not divide its side");
    out.sigma = alpha / a1n;
    out.varsigma = beta / b1n;
    if (out.sigma * out.varsigma != eta)
        throw Error(ErrorKind::Defect, "theorem2_split: eta != sigma*varsigma");
    return out;
}

Theorem3Solution theorem3_generate(const Theorem3Params& p, unsigned n)
{
    for (const Nat* v : {&p.k1, &p.k2, &p.t1, &p.t2})
        require_positive(*v, "theorem3 parameter");
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "theorem3_generate: n must be >= 2");
    if (gcd(p.k1, p.k2) != 1)
        throw Error(ErrorKind::InvalidArgument, "theorem3_generate: gcd(k1, k2) != 1");
    if (gcd(p.t1, p.t2) != 1)
        throw Error(ErrorKind::InvalidArgument, "theorem3_generate: gcd(t1, t2) != 1");
    return {p.k1 * pow(p.t1, n), p.k2 * pow(p.t2, n), p.t1 * p.t2, p.k1 * p.k2};
}

std::variant<Theorem3Params, CoverageGap> theorem3_recover(const Nat& x, const Nat& y, const Nat& z, const Nat& k,
                                                           unsigned n)
{
    for (const Nat* v : {&x, &y, &z, &k})
        require_positive(*v, "theorem3 value");
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "theorem3_recover: n must be >= 2");
    if (x * y != k * pow(z, n))
        throw Error(ErrorKind::Precondition, "theorem3_recover: x*y != k*z^n");

    const std::array<Nat, 4> values{x, y, z, k};
    Theorem3Params p;
    for (const Nat& b : coprime_base(values)) {
        const long ex = static_cast<long>(valuation(x, b));
        const long ey = static_cast<long>(valuation(y, b));
        const long ez = static_cast<long>(valuation(z, b));
        const long nz = static_cast<long>(n) * ez;
        long k1 = 0, k2 = 0, t1 = 0, t2 = 0;
        if (ez == 0) {
            k1 = ex;
            k2 = ey;
        } else if (ex >= nz && (ex == nz || ey == 0)) {
            t1 = ez;
            k1 = ex - nz;
            k2 = ey;
        } else if (ey >= nz && (ey == nz || ex == 0)) {
            t2 = ez;
            k1 = ex;
            k2 = ey - nz;
        } else {
            return CoverageGap{"block " + b.get_str() + " of z fits neither side with gcd(k1, k2) = 1"};
        }
        if (k1 > 0 && k2 > 0)
            return CoverageGap{"block " + b.get_str() + " divides both k1 and k2"};
        p.k1 *= pow(b, static_cast<unsigned long>(k1));
        p.k2 *= pow(b, static_cast<unsigned long>(k2));
        p.t1 *= pow(b, static_cast<unsigned long>(t1));
        p.t2 *= pow(b, static_cast<unsigned long>(t2));
    }
    if (theorem3_generate(p, n) != Theorem3Solution{x, y, z, k})
        return CoverageGap{"recovered parameters do not regenerate the input"};
    return p;
}

ParametricFamily theorem3_family(unsigned n)
{
    const auto N = static_cast<Exponent>(n);
    ParametricFamily f;
    f.id = "theorem3-n" + std::to_string(n);
    f.variables["x"] = Monomial({{"k1", 1}, {"t1", N}});
    f.variables["y"] = Monomial({{"k2", 1}, {"t2", N}});
    f.variables["z"] = Monomial({{"t1", 1}, {"t2", 1}});
    f.variables["k"] = Monomial({{"k1", 1}, {"k2", 1}});
    f.constraints = {{"k1", "k2"}, {"t1", "t2"}};
    f.equations = {Equation{{"x", "y"}, "z", n, {"k"}}};
    return f;
}

} // namespace prodpow
