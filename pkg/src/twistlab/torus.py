"""Classification of irrational rotation parameters.

Two parameters give isomorphic tori exactly when they are equal; they
give Morita-equivalent tori exactly when some integer Mobius map of
determinant +-1 carries one to the other, which for quadratic
irrationals means their continued-fraction expansions share an infinite
tail.  Equivalences come with explicit verified matrix witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .contfrac import canonical_rotation, convergent_matrix, expand_surd
from .surd import QuadraticSurd


class TorusError(ValueError):
    """Domain error in torus classification."""


@dataclass(frozen=True)
class TorusParameter:
    theta: QuadraticSurd

    def __post_init__(self):
        if self.theta.is_rational:
            raise TorusError("rotation parameter must be irrational")


@dataclass(frozen=True)
class UnimodularWitness:
    """Integer 2x2 matrix [[a, b], [c, d]] with det = +-1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise TorusError(f"matrix {self.rows()} is not unimodular")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def inverse(self) -> "UnimodularWitness":
        s = self.det  # adjugate over det; det^2 = 1 keeps entries integral
        return UnimodularWitness(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def __matmul__(self, other: "UnimodularWitness") -> "UnimodularWitness":
        return UnimodularWitness(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @staticmethod
    def identity() -> "UnimodularWitness":
        return UnimodularWitness(1, 0, 0, 1)


def apply_mobius(m: UnimodularWitness, t: TorusParameter) -> TorusParameter:
    """(a*theta + b) / (c*theta + d), exact."""
    theta = t.theta
    num = theta * m.a + m.b
    den = theta * m.c + m.d
    return TorusParameter(num / den)


def isomorphic(t1: TorusParameter, t2: TorusParameter) -> bool:
    return t1.theta == t2.theta


def morita_invariant(t: TorusParameter) -> tuple[int, ...]:
    """Canonical rotation of the minimal period: the normal form of the
    infinite tail class."""
    return canonical_rotation(expand_surd(t.theta).period)


def _complete_quotients(theta: QuadraticSurd, count: int) -> list[QuadraticSurd]:
    """x_0 = theta, x_{k+1} = 1/(x_k - floor(x_k)); all irrational."""
    out = [theta]
    x = theta
    for _ in range(count):
        x = (x - x.floor()).invert()
        out.append(x)
    return out


def _alignments(t1: TorusParameter, t2: TorusParameter, extra: int = 0):
    """Yield (i, j, witness) for tail matches within the search window.

    Tails x_i of t1 and y_j of t2 are equal complete quotients; the
    witness C_j(t2) * C_i(t1)^-1 then maps theta1 to theta2.  Offsets
    run to preperiod + 2 * period on each side (plus `extra` to allow a
    determinant-parity flip).
    """
    cf1 = expand_surd(t1.theta)
    cf2 = expand_surd(t2.theta)
    if canonical_rotation(cf1.period) != canonical_rotation(cf2.period):
        return
    lim1 = len(cf1.preperiod) + 2 * len(cf1.period) + extra
    lim2 = len(cf2.preperiod) + 2 * len(cf2.period) + extra
    tails1 = _complete_quotients(t1.theta, lim1)
    tails2 = _complete_quotients(t2.theta, lim2)
    for i, x in enumerate(tails1):
        c1 = UnimodularWitness(*convergent_matrix(cf1, i))
        for j, y in enumerate(tails2):
            if x == y:
                c2 = UnimodularWitness(*convergent_matrix(cf2, j))
                yield i, j, c2 @ c1.inverse()


def _verified(m: UnimodularWitness, t1: TorusParameter, t2: TorusParameter) -> UnimodularWitness:
    if apply_mobius(m, t1).theta != t2.theta:
        raise TorusError("internal: witness failed re-application check")
    return m


def morita_equivalent(t1: TorusParameter, t2: TorusParameter) -> Optional[UnimodularWitness]:
    """A verified witness of determinant +-1, or None when the tail
    classes differ."""
    for _i, _j, m in _alignments(t1, t2):
        return _verified(m, t1, t2)
    return None


def sl2_witness(t1: TorusParameter, t2: TorusParameter) -> Optional[UnimodularWitness]:
    """A verified witness of determinant exactly +1, or None.

    Shifting the alignment offset by one period flips the witness parity
    when the period length is odd; for even period lengths the parity is
    fixed, so a +1 witness may genuinely not exist.
    """
    period_len = len(expand_surd(t1.theta).period)
    for _i, _j, m in _alignments(t1, t2, extra=period_len + 1):
        if m.det == 1:
            return _verified(m, t1, t2)
    return None
