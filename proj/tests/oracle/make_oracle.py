"""Reference values for the unit tests, computed with sympy and numpy
directly from the defining formulas (no code shared with the library).

    python3 tests/oracle/make_oracle.py > tests/oracle/oracle_values.json
"""

import json
from fractions import Fraction
from math import gcd

import numpy as np
import sympy as sp

x = sp.symbols("x")


def phi(r):
    return sp.Poly(sp.cyclotomic_poly(4 * r, x), x)


def reduce(expr_poly, r):
    return sp.Poly(expr_poly, x).rem(phi(r))


def mono(e, r):
    return sp.Poly(x ** (e % (4 * r)), x)


def qint(n, r):
    # [n] = (t^{2n} - t^{-2n}) / (t^2 - t^{-2}), via the field inverse.
    num = mono(2 * n, r) - mono(-2 * n, r)
    den = mono(2, r) - mono(-2, r)
    inv = sp.invert(den.as_expr(), phi(r).as_expr(), x)
    return reduce(num * sp.Poly(inv, x), r)


def encode(poly, r):
    deg = phi(r).degree()
    coeffs = [sp.Rational(0)] * deg
    for (k,), c in poly.terms():
        coeffs[k] = sp.Rational(c)
    return {"order": 4 * r, "coeffs": [[int(c.p), int(c.q)] for c in coeffs]}


def color(k, r):
    """V^k as (sign, index) by running the fusion recursion, no closed form."""
    dim = r - 1
    m = np.zeros((dim, dim), dtype=object)
    for i in range(dim):
        if i > 0:
            m[i - 1, i] = 1
        if i + 1 < dim:
            m[i + 1, i] = 1
    vecs = {j: np.array([1 if i == j - 1 else 0 for i in range(dim)], dtype=object) for j in range(1, r)}
    vecs[r] = np.zeros(dim, dtype=object)
    vecs[0] = m.dot(vecs[1]) - vecs[2]
    lo, hi = 0, r
    while k > hi:
        vecs[hi + 1] = m.dot(vecs[hi]) - vecs[hi - 1]
        hi += 1
    while k < lo:
        vecs[lo - 1] = m.dot(vecs[lo]) - vecs[lo + 1]
        lo -= 1
    v = vecs[k]
    nz = [i for i in range(dim) if v[i] != 0]
    if not nz:
        return 0, 0
    assert len(nz) == 1
    return int(v[nz[0]]), nz[0] + 1


def c_matrix(p, q, r):
    dim = r - 1
    rows = [[sp.Poly(0, x) for _ in range(dim)] for _ in range(dim)]
    for k in range(1, r):
        for shift, e in ((-p, -p * q + 2 * q * k), (p, -p * q - 2 * q * k)):
            s, idx = color(k + shift, r)
            if s:
                rows[idx - 1][k - 1] = reduce(rows[idx - 1][k - 1] + s * mono(e, r), r)
    return rows


def four_term(p, q, k, m, r):
    num = (mono(2 * (q * k - p * m + k * m), r) - mono(2 * (q * k + p * m - k * m), r)
           + mono(2 * (-q * k + p * m + k * m), r) - mono(2 * (-q * k - p * m - k * m), r))
    den = mono(2, r) - mono(-2, r)
    inv = sp.Poly(sp.invert(den.as_expr(), phi(r).as_expr(), x), x)
    return reduce(num * inv * mono(-p * q, r), r)


def lemma_sides(a, b, c, d, e, r):
    lhs = sp.Poly(0, x)
    for xx in range(1, r):
        for yy in range(1, r):
            term = qint(a * xx, r) * mono(b * xx * xx, r) * qint(c * yy, r)
            inner = qint(xx * (yy + d), r) * mono(2 * e * yy, r) + qint(xx * (yy - d), r) * mono(-2 * e * yy, r)
            lhs = reduce(lhs + term * inner, r)
    x2 = sp.Poly(0, x)
    for j in range(1, r):
        x2 = reduce(x2 + qint(j, r) ** 2, r)
    rhs = x2 * mono(b * c * c + b * e * e - 2 * d * e, r) * (
        qint(a * (c + e), r) * mono(2 * (b * e - d) * c, r) + qint(a * (c - e), r) * mono(-2 * (b * e - d) * c, r))
    return lhs, reduce(rhs, r)


def hj_cfrac(pp, qq):
    """p'/q' = a_1 - 1/(a_2 - ...), a_1 = ceil, by Fractions."""
    val = Fraction(pp, qq)
    out = []
    while True:
        a = -((-val.numerator) // val.denominator)
        out.append(a)
        if val == a:
            return out
        val = 1 / (a - val)


def kernel_dims(r, n):
    t = np.exp(1j * np.pi / (2 * r))
    syms = [(p, q) for p in range(0, n + 1) for q in range(-n if p else 0, n + 1)]
    op_cols, clock_cols = [], []
    size = 2 * r
    for p, q in syms:
        cm = c_matrix(p, q, r)
        op_cols.append([complex(sp.N(e.as_expr().subs(x, sp.exp(sp.I * sp.pi / (2 * r))))) for row in cm for e in row])
        mat = np.zeros((size, size), dtype=complex)
        for sgn in (1, -1):
            pp, qq = sgn * p, sgn * q
            for j in range(size):
                mat[(j + qq) % size, j] += t ** (-pp * qq + 2 * pp * (j + qq))
        clock_cols.append(mat.flatten())
    a = np.array(op_cols).T
    b = np.array(clock_cols).T
    return {"level": r, "N": n, "symbols": len(syms),
            "dim_ker_op": len(syms) - int(np.linalg.matrix_rank(a, tol=1e-8)),
            "dim_ker_clock": len(syms) - int(np.linalg.matrix_rank(b, tol=1e-8))}


def main():
    out = {}
    out["cyclotomic_polynomial"] = {
        str(n): [int(c) for c in reversed(sp.Poly(sp.cyclotomic_poly(n, x), x).all_coeffs())] for n in range(1, 33)}
    out["qint"] = [{"r": r, "n": n, "value": encode(qint(n, r), r)} for r in (3, 4, 5, 6) for n in range(-2 * r, 2 * r + 1)]
    out["x_squared"] = []
    for r in range(3, 9):
        x2 = sp.Poly(0, x)
        for j in range(1, r):
            x2 = reduce(x2 + qint(j, r) ** 2, r)
        out["x_squared"].append({"r": r, "value": encode(x2, r), "numeric": float((r / 2) / np.sin(np.pi / r) ** 2)})
    out["reduce_color"] = [{"r": r, "k": k, "sign": color(k, r)[0], "index": color(k, r)[1]}
                           for r in (3, 5, 8) for k in range(-3 * r, 3 * r + 1)]
    out["c_matrix"] = []
    for r, p, q in ((3, 1, 0), (3, 0, 1), (3, 1, 1), (4, 2, 1), (5, -3, 2), (6, 4, -3)):
        out["c_matrix"].append({"r": r, "p": p, "q": q,
                                "entries": [[encode(e, r) for e in row] for row in c_matrix(p, q, r)]})
    out["pairing_form"] = [{"r": r, "p": p, "q": q, "k": k, "m": m, "value": encode(four_term(p, q, k, m, r), r)}
                           for (r, p, q, k, m) in ((3, 1, 0, 1, 2), (3, 1, 1, 1, 2), (4, 3, 2, 1, 3), (5, 2, -3, 2, 3),
                                                   (6, -5, 4, 5, 2), (7, 6, 6, 3, 4))]
    out["lemma"] = []
    for (r, a, b, c, d, e) in ((3, 1, 0, 1, 0, 0), (4, 2, -1, 3, 1, 2), (5, -3, 2, 1, -2, 3), (4, 0, 3, 2, 1, 1)):
        lhs, rhs = lemma_sides(a, b, c, d, e, r)
        out["lemma"].append({"r": r, "tuple": [a, b, c, d, e], "lhs": encode(lhs, r), "rhs": encode(rhs, r)})
    out["cfrac"] = [{"p": pp, "q": qq, "a": hj_cfrac(pp, qq)}
                    for pp in range(-7, 8) for qq in range(-7, 8) if pp and qq and gcd(pp, qq) == 1]
    out["kernel"] = [kernel_dims(3, 2), kernel_dims(3, 6), kernel_dims(4, 3)]
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
