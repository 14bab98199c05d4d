"""Homology spheres built by chains of 1/q surgeries on knots.

Each step adds a knot (given by a Seifert matrix, interpreted in the
sphere built so far) with framing 1/q.  The Casson invariant accumulates
(q/2) * Delta''(1) per step and the Rohlin invariant accumulates
q * arf mod 2; the two reduce to each other mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NonIntegral
from .laurent import second_derivative_at_one
from .seifert import SeifertMatrix, alexander_polynomial, arf_invariant, tl_signature


@dataclass(frozen=True)
class SurgeryStep:
    knot: SeifertMatrix
    q: int

    def __post_init__(self):
        if self.q == 0:
            raise ValueError("surgery coefficient 1/q requires q != 0")


class SurgeryPresentation:
    """Ordered chain of (knot, 1/q) surgeries starting from S^3."""

    __slots__ = ("steps",)

    def __init__(self, steps: Sequence[tuple[SeifertMatrix, int] | SurgeryStep] = ()):
        out = []
        for step in steps:
            if not isinstance(step, SurgeryStep):
                knot, q = step
                step = SurgeryStep(knot, int(q))
            out.append(step)
        self.steps = tuple(out)

    def reversed_orientation(self) -> "SurgeryPresentation":
        """Negate every framing; models reversing the chain's orientation."""
        return SurgeryPresentation([(s.knot, -s.q) for s in self.steps])

    def concatenated(self, other: "SurgeryPresentation") -> "SurgeryPresentation":
        return SurgeryPresentation(self.steps + other.steps)

    def __len__(self):
        return len(self.steps)

    def __eq__(self, other):
        if not isinstance(other, SurgeryPresentation):
            return NotImplemented
        return self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        return f"SurgeryPresentation({list(self.steps)!r})"


@dataclass(frozen=True)
class SphereInvariants:
    casson: int
    rohlin: int
    congruent: int


def casson(p: SurgeryPresentation) -> int:
    """Casson invariant: sum of (q/2) * Delta''(1) over the chain.

    Delta''(1) of a symmetric normalized Alexander polynomial is always
    even, so the result is an exact integer.
    """
    total = 0
    for step in p.steps:
        d2 = second_derivative_at_one(alexander_polynomial(step.knot))
        if d2 % 2:
            raise NonIntegral(
                f"Delta''(1) = {d2} is odd; the symmetric normalization failed"
            )
        total += step.q * (d2 // 2)
    return total


def rohlin(p: SurgeryPresentation) -> int:
    """Rohlin invariant: sum of q * arf(knot) mod 2."""
    return sum(step.q * arf_invariant(step.knot) for step in p.steps) % 2


def check_casson_rohlin(p: SurgeryPresentation) -> SphereInvariants:
    """Compute lambda and rho and report whether lambda = rho (mod 2)."""
    lam = casson(p)
    rho = rohlin(p)
    return SphereInvariants(lam, rho, 1 if lam % 2 == rho else 0)


def mubar_double_branched(branch: SeifertMatrix) -> Fraction:
    """One eighth of the knot signature: the mu-bar invariant of the
    double branched cover (a Seifert fibered homology sphere for the
    intended Montesinos branch sets; that hypothesis is the caller's).

    Raises NonIntegral when the signature is not divisible by 8, which
    signals an invalid branch-set claim.
    """
    sig = tl_signature(branch, Fraction(1, 2))
    if sig % 8:
        raise NonIntegral(f"signature {sig} is not divisible by 8")
    return Fraction(sig, 8)
