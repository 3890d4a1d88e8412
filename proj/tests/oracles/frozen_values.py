"""Regenerates the high-precision constants frozen in the C++ tests.

Run with `python3 tests/oracles/frozen_values.py`; needs mpmath.
Everything here is evaluated from first principles (matrix eigenvalues,
direct integration), not from the library's closed forms.
"""
from mpmath import mp, mpf, matrix, eig, sqrt, log, cosh, sinh, exp, findroot, im

mp.dps = 40


def f(x):
    x = mpf(x)
    if x == mpf(1) / 2:
        return mpf(0)
    return (x + mpf(1) / 2) * log(x + mpf(1) / 2) - (x - mpf(1) / 2) * log(x - mpf(1) / 2)


def sf(a, b, c1, c2):
    return matrix([[a, 0, c1, 0], [0, a, 0, c2], [c1, 0, b, 0], [0, c2, 0, b]])


OMEGA = matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
FLIP = matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]])


def symplectic(m):
    vals = sorted(abs(im(v)) for v in eig(OMEGA * m)[0])
    return vals[0], vals[2]


def ppt(m):
    return symplectic(FLIP * m * FLIP)


def show(name, value):
    print(f"{name:40s} {mp.nstr(value, 16)}")


m = sf(2, 1, 1, -1)
nm, np_ = symplectic(m)
ntm, ntp = ppt(m)
show("f(1)", f(1))
show("f(2)", f(2))
show("f(1.5)", f(mpf(3) / 2))
show("n- (2,1,1,-1)", nm)
show("n+ (2,1,1,-1)", np_)
show("f(n-)", f(nm))
show("f(n+)", f(np_))
show("S_V (2,1,1,-1)", f(nm) + f(np_))
show("I (2,1,1,-1)", f(2) + f(1) - f(nm) - f(np_))
show("nt- (2,1,1,-1)", ntm)
show("nt+ (2,1,1,-1)", ntp)
show("E_N (2,1,1,-1)", -log(2 * ntm))
show("nt- (1.5,1.5,1.2,-1.4)", ppt(sf(1.5, 1.5, 1.2, -1.4))[0])
show("E_N (1.5,1.5,1.2,-1.4)", -log(2 * ppt(sf(1.5, 1.5, 1.2, -1.4))[0]))
show("TMSV r=1 a", cosh(2) / 2)
show("TMSV r=1 c", sinh(2) / 2)
show("TMSV r=1 I", 2 * f(cosh(2) / 2))


def crossing(mu, r, nb):
    # Squeezed thermal state in two equal thermal baths, found by root search on
    # the PPT eigenvalue of the explicitly evolved matrix.
    a = cosh(2 * r) / (2 * sqrt(mu))
    c = sinh(2 * r) / (2 * sqrt(mu))
    s0 = sf(a, a, c, -c)
    sinf = (nb + mpf(1) / 2) * matrix(FLIP * FLIP)

    def g(t):
        k = exp(-t)
        return ppt(k * s0 + (1 - k) * sinf)[0] - mpf(1) / 2

    return findroot(g, (mpf("0.01"), mpf(3)), solver="bisect")


show("t_ent mu=1 r=1 NB=1/2", crossing(1, 1, mpf(1) / 2))
show("t_ent mu=1/9 r=1 NB=1/2", crossing(mpf(1) / 9, 1, mpf(1) / 2))
show("bound lo fig2", log(mpf("1.4")))
show("bound hi fig2", log(mpf("1.8")))
