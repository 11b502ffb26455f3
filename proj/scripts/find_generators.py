#!/usr/bin/env python3
"""Search for generator matrices of G5 and G25 with entries in Q(zeta_12).

Produces the checked-in generator data files under data/.  G4's generators
are transcribed directly; G5's are found inside the order-72 subgroup of
U(2) spanned by cube roots of unity times the binary tetrahedral group;
G25's come from the rank-3 Hessian root system.  Every candidate set is
validated against group order, reflection count and the defining relations
before being written out.
"""

from fractions import Fraction
from itertools import product

# Elements of Q(zeta_12) as 4-tuples (c0..c3) over the basis 1, z, z^2, z^3
# with z a primitive 12th root of unity, reduced mod z^4 = z^2 - 1.

ZERO = (Fraction(0),) * 4
ONE = (Fraction(1), Fraction(0), Fraction(0), Fraction(0))


def cadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def cneg(a):
    return tuple(-x for x in a)


def cmul(a, b):
    raw = [Fraction(0)] * 7
    for i in range(4):
        if a[i] == 0:
            continue
        for j in range(4):
            raw[i + j] += a[i] * b[j]
    # z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
    c = list(raw[:4])
    c[2] += raw[4]
    c[0] -= raw[4]
    c[3] += raw[5]
    c[1] -= raw[5]
    c[0] -= raw[6]
    return tuple(c)


def zeta_pow(k):
    k %= 12
    r = ONE
    z = (Fraction(0), Fraction(1), Fraction(0), Fraction(0))
    for _ in range(k):
        r = cmul(r, z)
    return r


OMEGA = zeta_pow(4)
OMEGA2 = zeta_pow(8)
IUNIT = zeta_pow(3)


def conj(a):
    # zeta -> zeta^-1 = zeta^11
    r = ZERO
    for i, ci in enumerate(a):
        if ci:
            t = tuple(ci * x for x in zeta_pow((12 - i) % 12))
            r = cadd(r, t)
    return r


def scal(q, a):
    return tuple(q * x for x in a)


# --- matrices ------------------------------------------------------------

def mmul(A, B):
    n = len(A)
    return tuple(
        tuple(
            _dot(A, B, i, j, n)
            for j in range(n))
        for i in range(n))


def _dot(A, B, i, j, n):
    s = ZERO
    for k in range(n):
        s = cadd(s, cmul(A[i][k], B[k][j]))
    return s


def ident(n):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def mscal(q, A):
    return tuple(tuple(cmul(q, x) for x in row) for row in A)


def order_of(M, cap=40):
    n = len(M)
    P = M
    for k in range(1, cap + 1):
        if P == ident(n):
            return k
        P = mmul(P, M)
    return None


def fixed_rank(M):
    # rank of M - I by Gaussian elimination over the field
    n = len(M)
    rows = [[cadd(M[i][j], cneg(ONE if i == j else ZERO)) for j in range(n)] for i in range(n)]
    rank = 0
    col = 0
    while rank < n and col < n:
        piv = next((r for r in range(rank, n) if rows[r][col] != ZERO), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = cinv(rows[rank][col])
        rows[rank] = [cmul(inv, x) for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][col] != ZERO:
                f = rows[r][col]
                rows[r] = [cadd(rows[r][j], cneg(cmul(f, rows[rank][j]))) for j in range(n)]
        rank += 1
        col += 1
    return rank


def cinv(a):
    # invert via 4x4 linear solve over Q
    mat = []
    for j in range(4):
        colv = cmul(a, zeta_pow(j))
        mat.append(list(colv))
    # solve sum_j x_j * (a*z^j) = 1
    A = [[mat[j][i] for j in range(4)] for i in range(4)]
    b = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
    n = 4
    for c in range(n):
        piv = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        b[c], b[piv] = b[piv], b[c]
        d = A[c][c]
        A[c] = [x / d for x in A[c]]
        b[c] /= d
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [A[r][j] - f * A[c][j] for j in range(n)]
                b[r] -= f * b[c]
    return tuple(b)


def closure(gens, cap=1500):
    n = len(gens[0])
    seen = {ident(n)}
    frontier = [ident(n)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mmul(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return seen


def is_reflection(M):
    return M != ident(len(M)) and fixed_rank(M) == 1 and order_of(M, 6) == 3


# --- G5 via the binary tetrahedral group ---------------------------------

def quat(a, b, c, d):
    # a + bi + cj + dk as a 2x2 matrix over Q(zeta12), i = zeta^3
    def e(x, y):  # x + y*i
        return cadd(scal(x, ONE), scal(y, IUNIT))
    return (
        (e(a, b), e(c, d)),
        (cadd(cneg(e(c, Fraction(0))), e(Fraction(0), d)), e(a, -b)),
    )


def find_g5():
    h = Fraction(1, 2)
    order3 = []
    for sb, sc, sd in product([h, -h], repeat=3):
        u = quat(-h, sb, sc, sd)
        assert order_of(u, 4) == 3
        order3.append(u)
    refl = [mscal(w, u) for u in order3 for w in (OMEGA, OMEGA2)]
    refl = [r for r in refl if is_reflection(r)]
    assert len(refl) == 16
    for a in refl:
        for b in refl:
            ab = mmul(a, b)
            if mmul(ab, ab) != mmul(mmul(b, a), mmul(b, a)):
                continue
            if mmul(a, b) == mmul(b, a):
                continue
            grp = closure([a, b], cap=100)
            if grp is not None and len(grp) == 72:
                return a, b
    raise RuntimeError("no G5 generating pair found")


# --- G25 via the Hessian root system -------------------------------------

def reflection_from_root(root):
    n = 3
    norm = ZERO
    for x in root:
        norm = cadd(norm, cmul(x, conj(x)))
    coef = cmul(cadd(OMEGA, cneg(ONE)), cinv(norm))  # (omega - 1)/<a,a>
    M = []
    for i in range(n):
        row = []
        for j in range(n):
            base = ONE if i == j else ZERO
            row.append(cadd(base, cmul(coef, cmul(root[i], conj(root[j])))))
        M.append(tuple(row))
    return tuple(M)


def find_g25():
    roots = []
    for i in range(3):
        roots.append(tuple(ONE if j == i else ZERO for j in range(3)))
    for p in range(3):
        for q in range(3):
            roots.append((ONE, zeta_pow(4 * p), zeta_pow(4 * q)))
    refl = []
    for r in roots:
        M = reflection_from_root(r)
        assert is_reflection(M)
        refl.append(M)
        refl.append(mmul(M, M))
    # search triples satisfying ABA=BAB, CBC=BCB, AC=CA
    for a in refl:
        for b in refl:
            if mmul(mmul(a, b), a) != mmul(mmul(b, a), b):
                continue
            for c in refl:
                if c == a or mmul(a, c) != mmul(c, a):
                    continue
                if mmul(mmul(c, b), c) != mmul(mmul(b, c), b):
                    continue
                grp = closure([a, b, c], cap=700)
                if grp is not None and len(grp) == 648:
                    return a, b, c
    raise RuntimeError("no G25 generating triple found")


# --- output --------------------------------------------------------------

def fmt_rat(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fmt_cyc(a):
    terms = []
    names = ["", "*z", "*z^2", "*z^3"]
    for c, suf in zip(a, names):
        terms.append(fmt_rat(c) + suf)
    return " + ".join(terms)


def write_gens(path, name, rank, relations, mats):
    with open(path, "w") as f:
        f.write(f"group {name}\nrank {rank}\n")
        for rel in relations:
            f.write(f"relation {rel}\n")
        for M in mats:
            f.write("matrix\n")
            for row in M:
                f.write("; ".join(fmt_cyc(x) for x in row) + "\n")


def g4_matrices():
    A = ((ONE, ZERO), (ZERO, OMEGA))
    third = Fraction(1, 3)
    B = (
        (scal(third, cadd(OMEGA, cneg(OMEGA2))), OMEGA2),
        (scal(-2 * third, OMEGA2), scal(third, cadd(cneg(OMEGA), scal(Fraction(-2), OMEGA2)))),
    )
    assert is_reflection(A) and is_reflection(B)
    assert mmul(mmul(A, B), A) == mmul(mmul(B, A), B)
    assert len(closure([A, B], cap=30)) == 24
    return A, B


def main():
    import os
    os.makedirs("data", exist_ok=True)
    A, B = g4_matrices()
    write_gens("data/g4.gens", "g4", 2, ["ABA=BAB"], [A, B])
    print("g4 ok")
    a, b = find_g5()
    write_gens("data/g5.gens", "g5", 2, ["ABAB=BABA"], [a, b])
    print("g5 ok")
    a, b, c = find_g25()
    write_gens("data/g25.gens", "g25", 3, ["ABA=BAB", "CBC=BCB", "AC=CA"], [a, b, c])
    print("g25 ok")


if __name__ == "__main__":
    main()
