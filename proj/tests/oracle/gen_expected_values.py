#!/usr/bin/env python3
"""Offline high-precision oracle for the frozen constants in the C++ tests.

Everything here is computed with mpmath at 50 significant digits, using
methods independent of the C++ implementation:

  * Gamma/Beta values come from mpmath's arbitrary-precision gamma.
  * The improper integrals int_R |f(x)|^(-2/n) dx are computed by composite
    Gauss-Legendre quadrature on smooth pieces only: near each real root r
    the substitution u = (x - r)^(1/n) removes the singularity analytically
    (the pulled-back integrand is n u^(n-3) |f(r +- u^n) / (x-r)|^(-2/n),
    analytic in u for a simple root; for n = 3 this is the classical
    cube-root substitution), and the tails use x = 1/t, under which the
    tail integrand becomes |rev(f)(t)|^(-2/n) on [0, 1/Z].
  * Discriminants come from sympy.

Run from anywhere:  python3 gen_expected_values.py
The printed values are frozen into tests/unit/*.cpp and
tests/acceptance/acceptance_main.cpp; rerun this script if you need to
re-derive or extend them.
"""

import mpmath as mp
import sympy as sp

mp.mp.dps = 50


def gl(f, a, b):
    return mp.quad(f, [a, b], method="gauss-legendre")


def integral_power(coeffs, n):
    """int_R |f(x)|^(-2/n) dx for f given highest-degree-first, degree n.

    Assumes all real roots simple (enough for the oracle cases).
    """
    x = sp.symbols("x")
    fs = sum(sp.Integer(c) * x ** (n - i) for i, c in enumerate(coeffs))
    roots = sorted(
        r for r in sp.nroots(sp.Poly(fs, x), n=50, maxsteps=200) if sp.im(r) == 0
    )
    roots = [mp.mpf(str(r)) for r in roots]

    def f(t):
        acc = mp.mpf(coeffs[0])
        for c in coeffs[1:]:
            acc = acc * t + c
        return acc

    def g(t):
        return mp.power(abs(f(t)), mp.mpf(-2) / n)

    p = mp.mpf(-2) / n
    Z = (max(abs(r) for r in roots) if roots else mp.mpf(0)) + 1
    total = mp.mpf(0)

    # Tails: int_Z^inf |f|^(-2/n) dx = int_0^(1/Z) |rev(f)(t)|^(-2/n) dt,
    # and the same on the left after x -> -x.
    rev = list(reversed(coeffs))
    neg_rev = [c if (n - i) % 2 == 0 else -c for i, c in enumerate(coeffs)][::-1]

    def tail(cs):
        def h(t):
            acc = mp.mpf(cs[0])
            for c in cs[1:]:
                acc = acc * t + c
            return mp.power(abs(acc), p)

        return gl(h, 0, 1 / Z)

    total += tail(rev) + tail(neg_rev)

    # Bounded part [-Z, Z], split at the roots; degree-matched root
    # substitution on a +-delta collar around each root, Gauss-Legendre on
    # what remains.
    points = [-Z] + roots + [Z]
    for i, r in enumerate(roots):
        gap_l = r - points[i]
        gap_r = points[i + 2] - r
        delta = min(mp.mpf(1), gap_l / 2, gap_r / 2)

        def left(u, r=r):
            return n * u ** (n - 1) * mp.power(abs(f(r - u**n)), p)

        def right(u, r=r):
            return n * u ** (n - 1) * mp.power(abs(f(r + u**n)), p)

        lim = mp.power(delta, mp.mpf(1) / n)
        total += gl(left, 0, lim) + gl(right, 0, lim)

    collars = []
    for i, r in enumerate(roots):
        gap_l = r - points[i]
        gap_r = points[i + 2] - r
        delta = min(mp.mpf(1), gap_l / 2, gap_r / 2)
        collars.append((r - delta, r + delta))
    segs = []
    lo = -Z
    for a, b in collars:
        if a > lo:
            segs.append((lo, a))
        lo = b
    if lo < Z:
        segs.append((lo, Z))
    for a, b in segs:
        total += gl(g, a, b)
    return total


def show(name, value, digits=22):
    print(f"{name:34s} = {mp.nstr(value, digits)}")


def main():
    third = mp.mpf(1) / 3
    sixth = mp.mpf(1) / 6

    print("# special function values")
    show("gamma(1/3)", mp.gamma(third))
    show("gamma(1/6)", mp.gamma(sixth))
    show("gamma(2/3)", mp.gamma(2 * third))
    show("beta(1/2, 1/6)", mp.beta(mp.mpf("0.5"), sixth))
    show("beta(1/3, 1/3)", mp.beta(third, third))
    show("beta(1/2, 1/2)  (= pi)", mp.beta(mp.mpf("0.5"), mp.mpf("0.5")))
    c_minus = mp.cbrt(2) * mp.beta(mp.mpf("0.5"), sixth)
    c_plus = 3 * mp.beta(third, third)
    show("C_minus = cbrt(2) B(1/2,1/6)", c_minus)
    show("C_plus  = 3 B(1/3,1/3)", c_plus)
    show("C_plus / C_minus (= sqrt 3)", c_plus / c_minus)
    resid = mp.sqrt(3) * mp.beta(third, third) - mp.cbrt(2) * mp.beta(
        mp.mpf("0.5"), sixth
    )
    show("sqrt3 B(1/3,1/3)-cbrt2 B(1/2,1/6)", resid)
    show("cbrt(2)", mp.cbrt(2))

    print("\n# cubic integrals, engine-independent quadrature vs closed form")
    cases3 = [
        ((1, 0, 1, 0), "x^3+x"),
        ((1, 0, -1, 0), "x^3-x"),
        ((1, 2, -1, -2), "(x-1)(x+1)(x+2)"),
        ((1, 0, 1, 1), "x^3+x+1"),
        ((2, -1, 0, 3), "2x^3-x^2+3"),
    ]
    x = sp.symbols("x")
    for coeffs, label in cases3:
        val = integral_power(coeffs, 3)
        fs = sum(sp.Integer(c) * x ** (3 - i) for i, c in enumerate(coeffs))
        D = sp.Integer(sp.discriminant(sp.Poly(fs, x)))
        pred = (c_plus if D > 0 else c_minus) / mp.power(abs(int(D)), sixth)
        show(f"I({label})", val)
        show(f"  D, |I-pred|/pred", mp.mpf(int(D)))
        show(f"  check", abs(val - pred) / pred, 6)

    print("\n# higher-degree integrals")
    show("I((x^2+1)^2, n=4)  (= pi)", integral_power((1, 0, 2, 0, 1), 4))
    q5 = integral_power((1, 0, 0, 0, 1, 0), 5)
    show("I(x^5+x, n=5)", q5)
    D5 = sp.Integer(
        sp.discriminant(sp.Poly(x**5 + x, x))
    )
    show("D(x^5+x)", mp.mpf(int(D5)))
    show("P = I*|D|^(1/20)", q5 * mp.power(abs(int(D5)), mp.mpf(1) / 20))
    q4 = integral_power((1, 0, 0, 1, 3), 4)
    D4 = sp.Integer(sp.discriminant(sp.Poly(x**4 + x + 3, x)))
    show("I(x^4+x+3, n=4)", q4)
    show("D(x^4+x+3)", mp.mpf(int(D4)))
    show("P = I*|D|^(1/12)", q4 * mp.power(abs(int(D4)), mp.mpf(1) / 12))

    print("\n# misc sympy discriminants for exact_poly fixtures")
    for poly, label in [
        (3 * x**4 - 2 * x**3 + x**2 - 7 * x + 5, "3x^4-2x^3+x^2-7x+5"),
        (x**5 - 4 * x**3 + 2 * x + 11, "x^5-4x^3+2x+11"),
        (2 * x**6 + x**5 - 3 * x**4 + x - 9, "2x^6+x^5-3x^4+x-9"),
    ]:
        print(f"D({label:24s}) = {sp.discriminant(sp.Poly(poly, x))}")

    print("\n# root refinement")
    show("2^(1/3)", mp.cbrt(2))
    show("real root of x^3+x+1", mp.findroot(lambda t: t**3 + t + 1, -0.7))

    print("\n# gaussian baseline")
    show("2*pi/sqrt(23)", 2 * mp.pi / mp.sqrt(23))
    show("pi", mp.pi)


if __name__ == "__main__":
    main()
