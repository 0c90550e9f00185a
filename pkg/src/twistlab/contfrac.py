"""Continued fractions: exact expansion, minimal periods, evaluation.

Rationals get finite expansions via the Euclidean algorithm.  Quadratic
irrationals get eventually periodic expansions via the exact (P, Q)
state recursion for (P + sqrt(D))/Q, with the period detected on the
first repeated state, which makes it minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator, Union

from .surd import QuadraticSurd


class CFError(ValueError):
    """Domain error in continued-fraction operations."""


class NotPrimitiveError(CFError):
    """A period word that is a power of a shorter word."""


def is_primitive(word: tuple[int, ...]) -> bool:
    n = len(word)
    for ell in range(1, n):
        if n % ell == 0 and word == word[:ell] * (n // ell):
            return False
    return True


def canonical_rotation(period) -> tuple[int, ...]:
    """Lexicographically least rotation of a primitive word."""
    word = tuple(period)
    if not word:
        raise CFError("empty period")
    if not is_primitive(word):
        raise NotPrimitiveError(f"not primitive: {word}")
    return min(word[i:] + word[:i] for i in range(len(word)))


@dataclass(frozen=True)
class FiniteCF:
    """[a0; a1, ..., am], canonical: a_i >= 1 for i >= 1, last term >= 2
    unless the expansion is a single integer."""

    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise CFError("empty continued fraction")
        if any(a < 1 for a in self.terms[1:]):
            raise CFError("terms after a0 must be >= 1")
        if len(self.terms) > 1 and self.terms[-1] < 2:
            raise CFError("canonical finite form forbids a trailing 1")

    def __str__(self):
        if len(self.terms) == 1:
            return f"[{self.terms[0]}]"
        rest = ", ".join(map(str, self.terms[1:]))
        return f"[{self.terms[0]}; {rest}]"


@dataclass(frozen=True)
class EventuallyPeriodicCF:
    """[a0, ..., ak; (b1, ..., bn)] with primitive period and minimal
    preperiod; the preperiod may be empty (purely periodic)."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise CFError("period must be nonempty")
        if not is_primitive(self.period):
            raise NotPrimitiveError(f"period not primitive: {self.period}")
        if any(b < 1 for b in self.period):
            raise CFError("period terms must be >= 1")
        if any(a < 1 for a in self.preperiod[1:]):
            raise CFError("terms after a0 must be >= 1")
        if self.preperiod and self.preperiod[-1] == self.period[-1]:
            raise CFError("preperiod not minimal: last term absorbs into period")

    def term_stream(self) -> Iterator[int]:
        yield from self.preperiod
        while True:
            yield from self.period

    def __str__(self):
        pre = ", ".join(map(str, self.preperiod))
        per = ", ".join(map(str, self.period))
        return f"[{pre}; ({per})]" if pre else f"[; ({per})]"


AnyCF = Union[FiniteCF, EventuallyPeriodicCF]


@dataclass(frozen=True)
class Convergent:
    p: int
    q: int
    index: int


def expand_rational(x) -> FiniteCF:
    """Euclidean-algorithm expansion; naturally canonical."""
    f = Fraction(x)
    num, den = f.numerator, f.denominator
    terms = []
    while True:
        a, rem = divmod(num, den)
        terms.append(a)
        if rem == 0:
            break
        num, den = den, rem
    return FiniteCF(tuple(terms))


def _floor_pq(P: int, D: int, Q: int) -> int:
    """floor((P + sqrt(D))/Q) for irrational sqrt(D), any sign of Q."""
    root = isqrt(D)
    if Q > 0:
        return (P + root) // Q
    # Q < 0: the value lies strictly between P+root and P+root+1, and no
    # integer multiple of |Q| sits in that open interval, so the floor is
    # the floor at the right endpoint.
    return (P + root + 1) // Q


def expand_surd(x: QuadraticSurd) -> EventuallyPeriodicCF:
    """Minimal-preperiod, minimal-period expansion of an irrational surd.

    State recursion on (P + sqrt(D))/Q with Q | D - P^2:
        a = floor((P + sqrt(D))/Q)
        P' = a*Q - P
        Q' = (D - P'^2)/Q
    With D fixed, the state (P, Q) determines the remainder value, so
    the first repeated state marks the minimal period.
    """
    if x.is_rational:
        raise CFError("rational input: use expand_rational")
    # rewrite (p + q*sqrt(d))/r as (P + sqrt(D))/Q with positive radical
    if x.q > 0:
        P, Q, D = x.p, x.r, x.q * x.q * x.d
    else:
        P, Q, D = -x.p, -x.r, x.q * x.q * x.d
    if (D - P * P) % Q != 0:
        scale = abs(Q)
        P, Q, D = P * scale, Q * scale, D * scale * scale
    terms: list[int] = []
    seen: dict[tuple[int, int], int] = {}
    while (P, Q) not in seen:
        seen[(P, Q)] = len(terms)
        a = _floor_pq(P, D, Q)
        terms.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    start = seen[(P, Q)]
    preperiod = terms[:start]
    period = terms[start:]
    # safety pass; with fixed D the recursion already lands minimal
    while preperiod and preperiod[-1] == period[-1]:
        period = [period[-1]] + period[:-1]
        preperiod = preperiod[:-1]
    return EventuallyPeriodicCF(tuple(preperiod), tuple(period))


def _mobius_matrix(terms) -> tuple[int, int, int, int]:
    """Product of [[a,1],[1,0]] over the terms, row-major."""
    m11, m12, m21, m22 = 1, 0, 0, 1
    for a in terms:
        m11, m12, m21, m22 = m11 * a + m12, m11, m21 * a + m22, m21
    return m11, m12, m21, m22


def value_of(cf: AnyCF) -> QuadraticSurd:
    """Exact value; inverse of the expansion maps."""
    if isinstance(cf, FiniteCF):
        m11, m12, m21, m22 = _mobius_matrix(cf.terms)
        # value = (m11*1 + ... ) applied to the empty tail: p_m/q_m = m11/m21
        return QuadraticSurd.normalize(m11, 0, m21, 1)
    # purely periodic part: positive fixed point y > 1 of the period matrix
    m11, m12, m21, m22 = _mobius_matrix(cf.period)
    # m21 y^2 + (m22 - m11) y - m12 = 0
    disc = (m11 - m22) ** 2 + 4 * m12 * m21
    y = QuadraticSurd.normalize(m11 - m22, 1, 2 * m21, disc)
    if not y > 1:
        y = QuadraticSurd.normalize(m11 - m22, -1, 2 * m21, disc)
    n11, n12, n21, n22 = _mobius_matrix(cf.preperiod)
    return (y * n11 + n12) / (y * n21 + n22)


def _terms_prefix(cf: AnyCF, count: int) -> list[int]:
    if isinstance(cf, FiniteCF):
        if count > len(cf.terms):
            raise CFError(
                f"requested {count} terms, finite expansion has {len(cf.terms)}"
            )
        return list(cf.terms[:count])
    stream = cf.term_stream()
    return [next(stream) for _ in range(count)]


def convergents(cf: AnyCF, count: int) -> list[Convergent]:
    """First `count` convergents p_k/q_k by the three-term recurrence."""
    if count < 1:
        raise CFError("count must be positive")
    terms = _terms_prefix(cf, count)
    out = []
    p_prev, q_prev = 1, 0
    p, q = terms[0], 1
    out.append(Convergent(p, q, 0))
    for k, a in enumerate(terms[1:], start=1):
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        out.append(Convergent(p, q, k))
    return out


def convergent_matrix(cf: AnyCF, k: int) -> tuple[int, int, int, int]:
    """Prefix matrix C_k = [[p_{k-1}, p_{k-2}], [q_{k-1}, q_{k-2}]];
    C_0 is the identity.  det C_k = (-1)^k."""
    return _mobius_matrix(_terms_prefix(cf, k))
