#!/usr/bin/env python3
"""Independent oracle for frozen test values.

Uses sympy (exact) and mpmath (numeric); shares no code with the C++ library.
Cyclotomic results are printed as power-basis coefficient lists modulo the
n-th cyclotomic polynomial, lowest degree first.
"""
import itertools
from fractions import Fraction

import mpmath as mp
import sympy as sp

x = sp.symbols("x")
t, t1, t2, y = sp.symbols("t t1 t2 y")


def reduce_mod(expr_num, expr_den, n):
    """Reduce num/den (polys in x) modulo Phi_n over QQ."""
    phi = sp.Poly(sp.cyclotomic_poly(n, x), x, domain="QQ")
    num = sp.Poly(expr_num, x, domain="QQ").rem(phi)
    den = sp.Poly(expr_den, x, domain="QQ").rem(phi)
    inv = sp.invert(den.as_expr(), phi.as_expr(), x)
    res = (num * sp.Poly(inv, x, domain="QQ")).rem(phi)
    deg = phi.degree()
    coeffs = list(reversed(res.all_coeffs()))
    coeffs += [0] * (deg - len(coeffs))
    return [sp.Rational(c) for c in coeffs]


def as_cyc(expr, xs, n):
    """Rational function expr in symbol xs evaluated at zeta_n^power given by xs->x^power."""
    num, den = sp.fraction(sp.together(expr))
    return reduce_mod(sp.expand(num), sp.expand(den), n)


def series_coeff_1var(f, var, k):
    return sp.simplify(sp.diff(f, var, k).subs(var, 0))


def main():
    print("# bernoulli")
    by = sp.series(y / (sp.exp(y) - 1), y, 0, 14).removeO()
    for n in (1, 12):
        print(f"B_{n} =", by.coeff(y, n) * sp.factorial(n))

    print("# lerch_neg_coeff: coefficient of t^k/k! in 1/(1 - xi e^t)")
    X = sp.symbols("X")
    ser = sp.series(1 / (1 - X * sp.exp(t)), t, 0, 8).removeO()
    for n, power in ((4, 1), (3, 1), (6, 1), (5, 2)):
        for k in range(0, 7):
            c = sp.together(ser.coeff(t, k) * sp.factorial(k))
            val = as_cyc(c.subs(X, x**power), x, n)
            print(f"phi(-{k}, zeta_{n}^{power}) =", val)

    print("# frobenius_euler(1,-1) = (1-xi)*phi(-1,xi) at xi=-1")
    c1 = sp.together(ser.coeff(t, 1))
    print("H =", sp.simplify((1 - X) * c1).subs(X, -1))

    print("# f_delta n=1 xi=-1: coefficient of y/1! in 1/(e^y - xi)")
    print("F =", series_coeff_1var(1 / (sp.exp(y) + 1), y, 1))

    print("# twisted multiple Bernoulli r=2, n=(1,1), xi=(zeta3, zeta3^2)")
    X1, X2 = sp.symbols("X1 X2")
    gen = X1 * sp.exp(t1 + t2) / (1 - X1 * sp.exp(t1 + t2)) / (1 - X2 * sp.exp(t2))

    def tmb(n1, n2):
        e = sp.diff(gen, t1, n1, t2, n2).subs({t1: 0, t2: 0})
        return sp.together(e)

    b11 = tmb(1, 1)
    print("Bt(1,1;z3,z3^2) =", as_cyc(b11.subs({X1: x, X2: x**2}), x, 3))

    print("# padic r=2 full enumeration")
    for (n1, n2), c, p in (((1, 1), 2, 3), ((2, 1), 2, 3), ((1, 2), 3, 5), ((0, 1), 2, 5)):
        expr = tmb(n1, n2)
        num, den = sp.fraction(expr)
        N = c * p
        phi = sp.Poly(sp.cyclotomic_poly(N, x), x, domain="QQ")

        def ev(a1, a2):
            sub = {X1: x**a1, X2: x**a2}
            nn = sp.Poly(sp.expand(num.subs(sub)), x, domain="QQ").rem(phi)
            dd = sp.Poly(sp.expand(den.subs(sub)), x, domain="QQ").rem(phi)
            inv = sp.Poly(sp.invert(dd.as_expr(), phi.as_expr(), x), x, domain="QQ")
            return (nn * inv).rem(phi)

        total = sp.Poly(0, x, domain="QQ")
        xis = [p * a for a in range(1, c)]
        rhos = [c * b for b in range(p)]
        for a1 in xis:
            for a2 in xis:
                total += ev(a1, a2)
                # d = 1: subset {1}: only j<=1 gets rho; subset {2}: j=1,2 both
                for r_ in rhos:
                    total += Fraction(-1, p) * ev(a1 + r_, a2)
                    total += Fraction(-1, p) * ev(a1 + r_, a2 + r_)
                # d = 2: subset {1,2}: j=1 gets rho1*rho2, j=2 gets rho2
                for r1 in rhos:
                    for r2 in rhos:
                        total += Fraction(1, p * p) * ev(a1 + r1 + r2, a2 + r2)
        total = total.rem(phi)
        print(f"L_p(n={n1},{n2}; c={c}, p={p}) =", total.as_expr())

    print("# numeric")
    mp.mp.dps = 30
    ez = lambda s1, s2: mp.nsum(lambda m: m ** (-s1) * mp.zeta(s2, m + 1), [1, mp.inf])
    print("zeta2(3,2) =", ez(3, 2))
    print("zeta2(2,3) =", ez(2, 3))
    print("zeta2(2.5+1j, 3-0.5j) =", ez(mp.mpc(2.5, 1), mp.mpc(3, -0.5)))
    mt = mp.nsum(lambda m, n: 1 / (m**2 * n**2 * (m + n) ** 2), [1, mp.inf], [1, mp.inf])
    print("MT(2,2,2) =", mt, " pi^6/2835 =", mp.pi**6 / 2835)
    print("hurwitz(2,1/2) =", mp.zeta(2, 0.5))
    print("hurwitz(-1,1/3) =", mp.zeta(-1, mp.mpf(1) / 3))
    print("hurwitz(0.3+2j, 0.25) =", mp.zeta(mp.mpc(0.3, 2), 0.25))
    print("zeta(0.5+14j) =", mp.zeta(mp.mpc(0.5, 14)))
    print("zeta(-2.5+3j) =", mp.zeta(mp.mpc(-2.5, 3)))
    print("lerch(-1.5+1j, i) =", mp.polylog(mp.mpc(-1.5, 1), 1j))
    print("lerch(0.7, e(1/3)) =", mp.polylog(0.7, mp.exp(2j * mp.pi / 3)))
    print("lerch(2, -1) =", mp.polylog(2, -1))
    z2, z3, z4, z5 = mp.zeta(2), mp.zeta(3), mp.zeta(4), mp.zeta(5)
    print("2z3-z2 =", 2 * z3 - z2)
    print("2z3-5/4z4 =", 2 * z3 - mp.mpf(5) / 4 * z4)
    print("3z4+2z5-2z2z3 =", 3 * z4 + 2 * z5 - 2 * z2 * z3)
    print("loggamma(3+4j) =", mp.loggamma(mp.mpc(3, 4)))
    print("loggamma(-2.5+0.1j) =", mp.loggamma(mp.mpc(-2.5, 0.1)))


if __name__ == "__main__":
    main()
