"""Regenerates the frozen reference values used by the unit tests.

Independent of the C++ code: mpmath for special functions and quadrature,
scipy's DOP853 for the radial equation, exact rationals for discrepancy.
"""
from fractions import Fraction
import math
import random

import mpmath as mp
import numpy as np
from scipy.integrate import solve_ivp
from scipy.special import jv, yv, jvp, yvp

mp.mp.dps = 30


def bump(c, s=1.0, R=1.0):
    def V(r):
        r = mp.mpf(r)
        return c * mp.e ** (s / (r * r - R * R)) if r < R else mp.mpf(0)
    return V


def turning_radius(V, eta, R=1.0):
    F = lambda r: 1 - eta ** 2 / r ** 2 - V(r)
    grid = [R - (R - 1e-3 * eta) * i / 4000 for i in range(4001)]
    prev = grid[0]
    for r in grid[1:]:
        if F(r) <= 0:
            return mp.findroot(F, (r, prev), solver="anderson")
        prev = r


def sigma(V, eta, R=1.0):
    rm = turning_radius(V, eta, R)
    f = lambda r: eta / (r ** 2 * mp.sqrt(1 - eta ** 2 / r ** 2 - V(r)))
    inner = mp.quad(f, [rm, rm + (R - rm) / 8, R])
    # rounding can leave a tiny imaginary part at the turning point
    return mp.re(2 * (inner + mp.asin(eta / R)) - mp.pi)


def section(title):
    print("\n#", title)


section("scattering angle, bump c=5 s=1, G and T")
V = bump(5)
for eta in (0.3, 0.5, 0.8):
    print(f"sigma({eta}) = {mp.nstr(sigma(V, eta), 17)}")
G06 = -mp.quad(lambda a: sigma(V, a), [0.6, 0.8, 0.95, 1.0])
print("G(0.6) =", mp.nstr(G06, 15), " T(0.6) =", mp.nstr(G06 - 0.6 * sigma(V, 0.6), 15))

section("interaction region")
print("r0 bump c=10:", mp.nstr(mp.sqrt(1 - 1 / mp.log(10)), 20))
print("r0 bump c=37 s=3:", mp.nstr(mp.sqrt(1 - 3 / mp.log(37)), 20))

section("half-integer Hankel closed forms")
for nu, z in ((0.5, 7.3), (1.5, 2.0), (2.5, 40.0)):
    h = mp.hankel1(nu, z)
    print(nu, z, mp.nstr(h.real, 18), mp.nstr(h.imag, 18))

section("disk exact argument d=2 k=100 l=0, d=3 k=50 l=7")
for nu, z in ((0, 100), (7.5, 50)):
    x = (2 * mp.arg(mp.hankel1(nu, z)) + mp.pi) % (2 * mp.pi)
    print(nu, z, mp.nstr(x, 18))


def exact_eigenvalue(c, s, d, l, h, R=1.0):
    nu = l + (d - 2) / 2
    V = lambda r: c * math.exp(s / (r * r - R * R)) if r < R else 0.0
    r0 = 1e-3
    # Frobenius start good to ~1e-12 at this radius for the cases below
    q0 = (V(0) - 1) / h ** 2
    a2 = q0 / (4 * (nu + 1))
    y0 = [r0 ** nu * (1 + a2 * r0 ** 2), nu * r0 ** (nu - 1) * (1 + a2 * r0 ** 2) + 2 * a2 * r0 ** (nu + 1)]
    rhs = lambda r, y: [y[1], -y[1] / r + (nu ** 2 / r ** 2 + (V(r) - 1) / h ** 2) * y[0]]
    sol = solve_ivp(rhs, (r0, 2 * R), y0, method="DOP853", rtol=1e-13, atol=1e-30)
    f, fp = sol.y[0, -1], sol.y[1, -1]
    z = 2 * R / h
    num = f * jvp(nu, z) - h * fp * jv(nu, z)
    den = f * yvp(nu, z) - h * fp * yv(nu, z)
    return np.exp(-2j * math.atan2(num, den))


section("exact eigenvalues, bump c=37 s=3, r_match = 2")
for d, l, h in ((2, 0, 0.1), (2, 3, 0.1), (3, 5, 0.05), (2, 12, 0.1)):
    ev = exact_eigenvalue(37, 3, d, l, h)
    print(d, l, h, repr(float(ev.real)), repr(float(ev.imag)))


def disc_exact(points):
    """points: list of (Fraction u in [0,1), weight). Direct sup over arcs."""
    K = sum(w for _, w in points)
    us = sorted(set(u for u, _ in points))
    best = Fraction(0)
    for a in us:
        for b in us:
            length = (b - a) % 1
            closed = sum(w for u, w in points if (u - a) % 1 <= length)
            best = max(best, Fraction(closed, K) - length)
            olen = length if a != b else Fraction(1)
            inside = sum(w for u, w in points if 0 < (u - a) % 1 < olen)
            best = max(best, olen - Fraction(inside, K))
    return best


section("discrepancy of rational ensembles (u = arg / 2 pi)")
rng = random.Random(7)
for case in range(4):
    n = rng.randint(3, 9)
    pts = [(Fraction(rng.randint(0, 23), 24), rng.randint(1, 4)) for _ in range(n)]
    print([(p.numerator, p.denominator, w) for p, w in pts], disc_exact(pts))
print("equal spacing 8:", disc_exact([(Fraction(i, 8), 1) for i in range(8)]))
print("antipodal:", disc_exact([(Fraction(0), 1), (Fraction(1, 2), 1)]))
