"""Knot invariants from Seifert matrices.

Everything is computed exactly from an integer Seifert matrix: the
symmetric Alexander polynomial, Tristram-Levine signatures at rational
points on the circle, the full signature spectrum at a given order, and
the Arf invariant of the mod-2 quadratic refinement.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cyclotomic import CyclotomicField, evaluate_laurent
from .errors import DegeneratePolarization, InvalidSeifertMatrix, NotCoprime
from .gf2 import symplectic_basis
from .inertia import certified_signature
from .laurent import LaurentPolynomial, laurent_normalize_symmetric


def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    M = [list(map(int, row)) for row in rows]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


class SeifertMatrix:
    """Integer Seifert matrix of even size 2g (size 0 is the unknot).

    Validity demands |det(S - S^T)| = 1, i.e. the skew pairing is
    unimodular.  All derived invariants are unchanged under congruence
    S -> P^T S P with |det P| = 1.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise InvalidSeifertMatrix("matrix must be square")
        if n % 2:
            raise InvalidSeifertMatrix(f"size {n} is odd; Seifert matrices have size 2g")
        skew = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
        if abs(integer_determinant(skew)) != 1:
            raise InvalidSeifertMatrix("S - S^T is not unimodular")
        self.entries = rows

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return len(self.entries) // 2

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def mirror(self) -> "SeifertMatrix":
        n = self.size
        return SeifertMatrix(
            [[-self.entries[j][i] for j in range(n)] for i in range(n)]
        )

    def congruent(self, p_rows: Sequence[Sequence[int]]) -> "SeifertMatrix":
        """P^T S P for a unimodular integer matrix P."""
        n = self.size
        P = [list(map(int, row)) for row in p_rows]
        if len(P) != n or any(len(r) != n for r in P):
            raise ValueError("P must match the matrix size")
        if abs(integer_determinant(P)) != 1:
            raise ValueError("P must be unimodular")
        SP = [[sum(self.entries[i][k] * P[k][j] for k in range(n)) for j in range(n)]
              for i in range(n)]
        PtSP = [[sum(P[k][i] * SP[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)]
        return SeifertMatrix(PtSP)

    def stabilized(self, column: Sequence[int] | None = None) -> "SeifertMatrix":
        """Add a trivial hyperbolic pair (with optional linking column).

        The result presents the same knot; all invariants computed here
        are unchanged.
        """
        n = self.size
        col = list(column) if column is not None else [0] * n
        if len(col) != n:
            raise ValueError("column length must match matrix size")
        out = [list(row) + [col[i], 0] for i, row in enumerate(self.entries)]
        out.append([0] * n + [0, 1])
        out.append([0] * n + [0, 0])
        return SeifertMatrix(out)

    def __eq__(self, other):
        if not isinstance(other, SeifertMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"SeifertMatrix({self.to_lists()!r})"


def mirror(s: SeifertMatrix) -> SeifertMatrix:
    """Seifert matrix -S^T of the mirror knot."""
    return s.mirror()


def connected_sum(s1: SeifertMatrix, s2: SeifertMatrix) -> SeifertMatrix:
    """Block-diagonal sum, presenting the connected sum of the knots."""
    n1, n2 = s1.size, s2.size
    out = [list(row) + [0] * n2 for row in s1.entries]
    out += [[0] * n1 + list(row) for row in s2.entries]
    return SeifertMatrix(out)


# --- Alexander polynomial ---

@lru_cache(maxsize=None)
def _alexander_cached(entries: tuple[tuple[int, ...], ...]) -> LaurentPolynomial:
    n = len(entries)
    g = n // 2
    if n == 0:
        return LaurentPolynomial.one()
    # det(t S - S^T) is a degree <= n integer polynomial; recover it by
    # interpolation at n+1 integer points, then shift by t^-g
    points = range(n + 1)
    values = [
        integer_determinant(
            [[t * entries[i][j] - entries[j][i] for j in range(n)] for i in range(n)]
        )
        for t in points
    ]
    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if i == j:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k + 1] += c
                new[k] -= c * xj
            basis = new
            denom *= xi - xj
        scale = Fraction(values[i], 1) / denom
        for k, c in enumerate(basis):
            coeffs[k] += c * scale
    assert all(c.denominator == 1 for c in coeffs)
    poly = LaurentPolynomial({e - g: int(c) for e, c in enumerate(coeffs)})
    return laurent_normalize_symmetric(poly)


def alexander_polynomial(s: SeifertMatrix) -> LaurentPolynomial:
    """Symmetric Alexander polynomial det(t^(1/2) S - t^(-1/2) S^T).

    Normalized so that Delta(1) = 1 and Delta(t) = Delta(1/t).
    """
    return _alexander_cached(s.entries)


def alexander_at_root_of_unity(s: SeifertMatrix, n: int, m: int = 1):
    """Exact value Delta(zeta_n^m) in the cyclotomic field of order n."""
    return evaluate_laurent(alexander_polynomial(s), CyclotomicField(n), m)


# --- Tristram-Levine signatures ---

@lru_cache(maxsize=None)
def _tl_cached(entries: tuple[tuple[int, ...], ...], m: int, n: int) -> int:
    if m == 0:
        return 0
    d = len(entries)
    if d == 0:
        return 0
    field = CyclotomicField(n)
    z = field.zeta(m)
    zbar = z.conjugate()
    one = field.one()
    u = one - z
    ubar = one - zbar
    H = [
        [u * entries[i][j] + ubar * entries[j][i] for j in range(d)]
        for i in range(d)
    ]
    n_plus, n_minus, _ = certified_signature(H, field)
    return n_plus - n_minus


def tl_signature(s: SeifertMatrix, a) -> int:
    """Tristram-Levine signature at e^(2*pi*i*a) for rational a in [0, 1).

    Signature of the Hermitian form (1 - w) S + (1 - conj(w)) S^T at
    w = e^(2*pi*i*a), computed with certified exact arithmetic.
    """
    a = Fraction(a)
    if not 0 <= a < 1:
        raise ValueError(f"a must lie in [0, 1), got {a}")
    return _tl_cached(s.entries, a.numerator, a.denominator)


def tl_nullity(s: SeifertMatrix, a) -> int:
    """Dimension of the kernel of the Tristram-Levine form at a."""
    a = Fraction(a)
    if not 0 <= a < 1:
        raise ValueError(f"a must lie in [0, 1), got {a}")
    if a == 0 or s.size == 0:
        return s.size
    field = CyclotomicField(a.denominator)
    z = field.zeta(a.numerator)
    u = field.one() - z
    ubar = field.one() - z.conjugate()
    d = s.size
    H = [
        [u * s.entries[i][j] + ubar * s.entries[j][i] for j in range(d)]
        for i in range(d)
    ]
    _, _, n_zero = certified_signature(H, field)
    return n_zero


class SignatureSpectrum:
    """Tristram-Levine signatures at all n-th roots of unity.

    values[m] is the signature at e^(2*pi*i*m/n).  Entry 0 is always 0 and
    the list is symmetric under m -> n - m (conjugation).
    """

    __slots__ = ("order", "values")

    def __init__(self, order: int, values: Sequence[int]):
        if order < 1:
            raise ValueError("order must be a positive integer")
        values = tuple(int(v) for v in values)
        if len(values) != order:
            raise ValueError(f"expected {order} values, got {len(values)}")
        if values and values[0] != 0:
            raise ValueError("entry 0 of a signature spectrum must be 0")
        for m in range(1, order):
            if values[m] != values[order - m]:
                raise ValueError(
                    f"spectrum breaks conjugation symmetry at m = {m}"
                )
        self.order = order
        self.values = values

    def total(self) -> int:
        return sum(self.values)

    def negated(self) -> "SignatureSpectrum":
        return SignatureSpectrum(self.order, tuple(-v for v in self.values))

    def __eq__(self, other):
        if not isinstance(other, SignatureSpectrum):
            return NotImplemented
        return self.order == other.order and self.values == other.values

    def __hash__(self):
        return hash((self.order, self.values))

    def __repr__(self):
        return f"SignatureSpectrum({self.order}, {list(self.values)})"


def signature_spectrum(s: SeifertMatrix, n: int) -> SignatureSpectrum:
    """Spectrum (sign^(m/n))_{m=0..n-1} of the knot."""
    if n < 1:
        raise ValueError("order must be a positive integer")
    return SignatureSpectrum(n, [tl_signature(s, Fraction(m, n)) for m in range(n)])


# --- Arf invariant ---

@lru_cache(maxsize=None)
def _arf_cached(entries: tuple[tuple[int, ...], ...]) -> int:
    d = len(entries)
    if d == 0:
        return 0
    rows = [
        sum(((entries[i][j] + entries[j][i]) & 1) << j for j in range(d))
        for i in range(d)
    ]
    try:
        pairs = symplectic_basis(rows, d)
    except DegeneratePolarization:
        raise DegeneratePolarization(
            "S + S^T is singular mod 2; not a valid Seifert matrix"
        ) from None

    def q(x: int) -> int:
        total = 0
        support = [i for i in range(d) if (x >> i) & 1]
        for i in support:
            for j in support:
                total += entries[i][j]
        return total & 1

    return sum(q(a) * q(b) for a, b in pairs) & 1


def arf_invariant(s: SeifertMatrix) -> int:
    """Arf invariant of the quadratic form q(x) = x^T S x mod 2.

    Computed from a symplectic basis of the polarization S + S^T mod 2 as
    the sum of products q(a_i) q(b_i).
    """
    return _arf_cached(s.entries)


# --- standard families ---

def torus_knot_seifert(p: int, q: int) -> SeifertMatrix:
    """Seifert matrix of the (p, q) torus knot on the fiber-surface basis.

    Uses the standard brick/fence basis: generators h(i, k) for columns
    i = 1..p-1 and rows k = 1..q-1, with self-linking -1 and single
    off-diagonal links between bricks sharing a band.  The convention is
    right-handed: tl_signature at 1/2 is negative.
    """
    if p < 2 or q < 2:
        raise ValueError("torus knot parameters must be at least 2")
    from math import gcd

    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    size = (p - 1) * (q - 1)

    def idx(i: int, k: int) -> int:
        return (i - 1) * (q - 1) + (k - 1)

    V = [[0] * size for _ in range(size)]
    for i in range(1, p):
        for k in range(1, q):
            V[idx(i, k)][idx(i, k)] = -1
            if k + 1 < q:
                V[idx(i, k)][idx(i, k + 1)] = 1
            if i + 1 < p:
                V[idx(i + 1, k)][idx(i, k)] = 1
                if k - 1 >= 1:
                    V[idx(i + 1, k - 1)][idx(i, k)] = -1
    return SeifertMatrix(V)


# Named presets.  Chirality is never guessed from a name: each preset is
# an explicit matrix, and the stored orientation is part of the contract.
PRESET_KNOTS: dict[str, SeifertMatrix] = {
    "unknot": SeifertMatrix([]),
    # left-handed trefoil: tl_signature at 1/2 is +2
    "left_trefoil": SeifertMatrix([[1, 0], [1, 1]]),
    # right-handed trefoil: tl_signature at 1/2 is -2
    "right_trefoil": SeifertMatrix([[-1, 1], [0, -1]]),
    "figure_eight": SeifertMatrix([[1, 1], [0, -1]]),
    # trivial Alexander polynomial, untwisted-double type
    "untwisted_double": SeifertMatrix([[-1, 1], [0, 0]]),
}


def preset_knot(name: str) -> SeifertMatrix:
    try:
        return PRESET_KNOTS[name]
    except KeyError:
        raise KeyError(
            f"unknown preset knot {name!r}; available: {sorted(PRESET_KNOTS)}"
        ) from None
