"""Independent oracle for the group law, inverse and coadjoint action.

The algebra is realized faithfully by 8x8 matrices (a direct sum of two 4x4
nilpotent blocks, one killing Y and one killing Lambda). Group elements are
products of matrix exponentials, so nothing here uses BCH. Output is frozen
into frozen.json and compared against the C++ library by test_oracle.

    python3 matrix_oracle.py > frozen.json
"""

import json
import random
import sys

import sympy as sp


def unit(n, i, j):
    m = sp.zeros(n, n)
    m[i, j] = 1
    return m


def block(a, b):
    return sp.diag(a, b)


e = lambda i, j: unit(4, i - 1, j - 1)
z4 = sp.zeros(4, 4)

# Block 1: [P,E]=F, [P,F]=Lambda, Y -> 0.
P1, E1 = e(1, 2) + e(2, 3), e(3, 4)
# Block 2: [P,E]=F, [F,E]=Y, Lambda -> 0.
P2, E2 = e(3, 4), e(1, 2) + e(2, 3)

P = block(P1, P2)
E = block(E1, E2)
br = lambda a, b: a * b - b * a
F = br(P, E)
LAM = br(P, F)
Y = br(F, E)
BASIS = [P, E, F, LAM, Y]

assert br(F, E) == Y and br(P, F) == LAM
for c in (LAM, Y):
    assert all(br(c, b) == sp.zeros(8, 8) for b in BASIS)
assert br(E, F) == -Y and br(P, Y) == sp.zeros(8, 8)


def expm(m):
    out, term = sp.eye(8), sp.eye(8)
    for n in range(1, 9):
        term = term * m / n
        out += term
    return sp.expand(out)


def group(x, t, z, a, b):
    return expm(a * LAM + b * Y) * expm(t * E + z * F) * expm(x * P)


def decode_algebra(m):
    cs = sp.symbols("c0:5")
    sol = sp.solve(list(m - sum((c * b for c, b in zip(cs, BASIS)), sp.zeros(8, 8))), cs,
                   dict=True)
    assert len(sol) == 1
    return [sp.expand(sol[0][c]) for c in cs]


def logm(g):
    n = g - sp.eye(8)
    out, term = sp.zeros(8, 8), sp.eye(8)
    for k in range(1, 9):
        term = term * n
        out += sp.Rational((-1) ** (k + 1), k) * term
    return sp.expand(out)


def decode_group(g):
    # The P coefficient of log g is x; peeling exp(xP) off the right leaves
    # exp(tE + zF) times a central factor, whose log is linear in all four.
    x = decode_algebra(logm(g))[0]
    rest = decode_algebra(logm(g * expm(-x * P)))
    return [sp.expand(x), sp.expand(rest[1]), sp.expand(rest[2]), sp.expand(rest[3]),
            sp.expand(rest[4])]


def law():
    a = sp.symbols("x t zeta a b")
    b = sp.symbols("x2 t2 zeta2 a2 b2")
    prod = group(*a) * group(*b)
    out = decode_group(prod)
    return [sp.expand(v) for v in out], a, b


def rat(v):
    return str(sp.Rational(v))


def main():
    rng = random.Random(20240617)
    draw = lambda: sp.Rational(rng.randint(-24, 24), rng.randint(1, 8))

    components, a, b = law()
    names = {**{s: n for s, n in zip(a, ["x", "t", "zeta", "a", "b"])},
             **{s: n + "'" for s, n in zip(b, ["x", "t", "zeta", "a", "b"])}}
    symbolic = []
    for comp in components:
        poly = sp.Poly(comp, *a, *b)
        terms = []
        for monom, coeff in poly.terms():
            powers = {names[s]: int(k) for s, k in zip((*a, *b), monom) if k}
            terms.append({"powers": powers, "coefficient": rat(coeff)})
        symbolic.append(terms)

    cases = []
    for _ in range(12):
        g = [draw() for _ in range(5)]
        h = [draw() for _ in range(5)]
        mu = [draw() for _ in range(5)]
        G, H = group(*g), group(*h)
        gh = decode_group(G * H)
        ginv = decode_group(G.inv())
        # (Ad*_g mu)(X_j) = mu(Ad_{g^-1} X_j) = mu(g^-1 X_j g).
        gi = G.inv()
        co = []
        for bj in BASIS:
            coords = decode_algebra(gi * bj * G)
            co.append(sum(m * c for m, c in zip(mu, coords)))
        cases.append({
            "g": [rat(v) for v in g],
            "h": [rat(v) for v in h],
            "mu": [rat(v) for v in mu],
            "compose": [rat(v) for v in gh],
            "inverse": [rat(v) for v in ginv],
            "coadjoint": [rat(v) for v in co],
        })

    json.dump({"law": symbolic, "cases": cases}, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
