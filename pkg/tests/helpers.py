"""Shared test utilities: random matrix generators and independent oracles."""

from __future__ import annotations

from casson4 import (
    LaurentPolynomial,
    SeifertMatrix,
    connected_sum,
    laurent_normalize_symmetric,
    preset_knot,
    torus_knot_seifert,
)


def random_unimodular(rng, n, ops=None):
    """Product of random elementary row operations: det = +-1."""
    P = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n < 2:
        return P
    for _ in range(ops if ops is not None else 3 * n):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2)
        if kind == 0:
            c = rng.choice([-2, -1, 1, 2])
            for k in range(n):
                P[i][k] += c * P[j][k]
        elif kind == 1:
            P[i], P[j] = P[j], P[i]
        else:
            for k in range(n):
                P[i][k] = -P[i][k]
    return P


BASE_KNOTS = [
    "unknot",
    "left_trefoil",
    "right_trefoil",
    "figure_eight",
    "untwisted_double",
]


def random_seifert(rng, max_stabilizations=2) -> SeifertMatrix:
    """Random Seifert matrix: preset or torus base, stabilized and twisted."""
    choice = rng.randrange(len(BASE_KNOTS) + 2)
    if choice < len(BASE_KNOTS):
        s = preset_knot(BASE_KNOTS[choice])
    elif choice == len(BASE_KNOTS):
        s = torus_knot_seifert(2, rng.choice([3, 5, 7]))
    else:
        s = torus_knot_seifert(3, rng.choice([4, 5]))
    for _ in range(rng.randrange(max_stabilizations + 1)):
        column = [rng.randrange(-1, 2) for _ in range(s.size)]
        s = s.stabilized(column)
    if s.size:
        s = s.congruent(random_unimodular(rng, s.size))
    return s


def brute_force_arf(s: SeifertMatrix) -> int:
    """Democratic-count oracle: arf = 0 iff q has more zeros than ones."""
    d = s.size
    if d == 0:
        return 0
    zeros = 0
    for x in range(1 << d):
        support = [i for i in range(d) if (x >> i) & 1]
        value = sum(s.entries[i][j] for i in support for j in support) & 1
        zeros += 1 - value
    majority = 1 << (d - 1)
    assert zeros != majority, "degenerate form has no Arf invariant"
    return 0 if zeros > majority else 1


def sympy_alexander(s: SeifertMatrix):
    """Cofactor-expansion oracle for the normalized Alexander polynomial."""
    import sympy

    t = sympy.symbols("t")
    n = s.size
    if n == 0:
        return LaurentPolynomial.one()
    m = sympy.Matrix(
        [[t * s.entries[i][j] - s.entries[j][i] for j in range(n)] for i in range(n)]
    )
    det = sympy.expand(m.det())
    poly = sympy.Poly(det, t)
    coeffs = {exp: int(c) for (exp,), c in poly.terms()}
    raw = LaurentPolynomial({e - n // 2: c for e, c in coeffs.items()})
    return laurent_normalize_symmetric(raw)


def torus_alexander_closed_form(p: int, q: int) -> LaurentPolynomial:
    """(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), normalized symmetric."""

    def poly_mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def poly_div(a, b):
        a = a[:]
        out = [0] * (len(a) - len(b) + 1)
        for k in range(len(out) - 1, -1, -1):
            c = a[k + len(b) - 1] // b[-1]
            out[k] = c
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
        assert all(x == 0 for x in a[: len(b) - 1])
        return out

    num = poly_mul([-1] + [0] * (p * q - 1) + [1], [-1, 1])
    den = poly_mul([-1] + [0] * (p - 1) + [1], [-1] + [0] * (q - 1) + [1])
    quotient = poly_div(num, den)
    return laurent_normalize_symmetric(LaurentPolynomial(dict(enumerate(quotient))))


def numpy_inertia(rows, tol=1e-8):
    """Floating-point eigenvalue oracle for inertia of small exact matrices."""
    import numpy as np

    if len(rows) == 0:
        return (0, 0, 0)
    a = np.array([[complex(x) for x in row] for row in rows], dtype=complex)
    assert np.allclose(a, a.conj().T)
    eigs = np.linalg.eigvalsh(a)
    n_plus = int((eigs > tol).sum())
    n_minus = int((eigs < -tol).sum())
    return (n_plus, n_minus, len(eigs) - n_plus - n_minus)


def corpus_knots() -> list[tuple[str, SeifertMatrix]]:
    """The built-in family battery used by the property tests."""
    knots = [(name, preset_knot(name)) for name in BASE_KNOTS]
    for p, q in [(2, 5), (2, 7), (3, 4), (3, 5), (5, 6)]:
        knots.append((f"torus({p},{q})", torus_knot_seifert(p, q)))
    tre = preset_knot("right_trefoil")
    fig8 = preset_knot("figure_eight")
    knots.append(("trefoil # fig8", connected_sum(tre, fig8)))
    knots.append(("granny", connected_sum(tre, tre)))
    knots.append(("square", connected_sum(tre, tre.mirror())))
    return knots
