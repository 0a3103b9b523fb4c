"""Exact rational arithmetic with a total, zero-totalized inverse.

The inverse of 0 is 0 by definition rather than an error; that is the whole
point.  Evaluation threads an "unsafe division" flag alongside the value,
set exactly when some inverse of zero fires during the recursion, so a
formal calculation can be classified as safe or unsafe after the fact.

Python integers are arbitrary precision, so every operation is exact and
equality checks carry no tolerance at all.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Mapping

from .errors import ParseError, UnboundVariable
from .logic import ConditionalEquation, Equation
from .terms import Add, Inv, Mul, Neg, One, Term, Var, Zero

__all__ = [
    "RationalZT", "EvalTrace", "SampleVerdict",
    "rational", "parse_rational",
    "q_add", "q_neg", "q_mul", "q_inv",
    "eval_rational", "sample_assignments", "sample_check",
    "sample_check_conditional",
]


@dataclass(frozen=True)
class RationalZT:
    """A rational in lowest terms with positive denominator; 0 is 0/1."""

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if den == 0:
            raise ValueError("denominator must be nonzero")
        if den < 0:
            num, den = -num, -den
        g = gcd(abs(num), den)
        if g > 1:
            num //= g
            den //= g
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def is_zero(self) -> bool:
        return self.numerator == 0

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def __add__(self, other: "RationalZT") -> "RationalZT":
        return q_add(self, other)

    def __mul__(self, other: "RationalZT") -> "RationalZT":
        return q_mul(self, other)

    def __neg__(self) -> "RationalZT":
        return q_neg(self)

    def __sub__(self, other: "RationalZT") -> "RationalZT":
        return q_add(self, q_neg(other))

    def inverse(self) -> "RationalZT":
        return q_inv(self)


Q_ZERO = RationalZT(0)
Q_ONE = RationalZT(1)


def rational(numerator: int, denominator: int = 1) -> RationalZT:
    return RationalZT(numerator, denominator)


_RATIONAL_RE = re.compile(r"\A(-?\d+)(?:/(-?\d+))?\Z")


def parse_rational(text: str) -> RationalZT:
    """Parse "p/q" or a plain integer; canonicalized on read."""
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ParseError(f"not a rational literal: {text!r}", 0)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError("zero denominator in rational literal", 0)
    return RationalZT(num, den)


def q_add(a: RationalZT, b: RationalZT) -> RationalZT:
    return RationalZT(
        a.numerator * b.denominator + b.numerator * a.denominator,
        a.denominator * b.denominator,
    )


def q_neg(a: RationalZT) -> RationalZT:
    return RationalZT(-a.numerator, a.denominator)


def q_mul(a: RationalZT, b: RationalZT) -> RationalZT:
    return RationalZT(a.numerator * b.numerator, a.denominator * b.denominator)


def q_inv(a: RationalZT) -> RationalZT:
    """Swap numerator and denominator; 0 maps to 0."""
    if a.numerator == 0:
        return Q_ZERO
    return RationalZT(a.denominator, a.numerator)


@dataclass(frozen=True)
class EvalTrace:
    value: RationalZT
    unsafe_division_used: bool


def eval_rational(
    t: Term, binding: Mapping[str, RationalZT] | None = None
) -> EvalTrace:
    """Evaluate exactly; the flag records whether 0^-1 was ever taken."""
    b = binding or {}

    def rec(node: Term) -> tuple[RationalZT, bool]:
        match node:
            case Zero():
                return Q_ZERO, False
            case One():
                return Q_ONE, False
            case Var(name):
                try:
                    return b[name], False
                except KeyError:
                    raise UnboundVariable(name) from None
            case Neg(arg):
                v, u = rec(arg)
                return q_neg(v), u
            case Inv(arg):
                v, u = rec(arg)
                return q_inv(v), u or v.is_zero()
            case Add(l, r):
                v1, u1 = rec(l)
                v2, u2 = rec(r)
                return q_add(v1, v2), u1 or u2
            case Mul(l, r):
                v1, u1 = rec(l)
                v2, u2 = rec(r)
                return q_mul(v1, v2), u1 or u2
            case _:  # pragma: no cover
                raise TypeError(f"not a term: {node!r}")

    return EvalTrace(*rec(t))


# --- seeded sampling ---------------------------------------------------------

def sample_assignments(
    variables: Iterable[str], count: int, seed: int = 0, bound: int = 10**6
) -> Iterator[dict[str, RationalZT]]:
    """Deterministic stream of assignments for the given variables.

    The distribution deliberately over-weights the singular points: each
    variable is 0 with probability 1/8, and 1 or -1 with probability 1/8
    each; otherwise numerator and denominator are uniform up to the bound.
    """
    ordered = sorted(set(variables))
    rng = random.Random(seed)
    for _ in range(count):
        a = {}
        for v in ordered:
            r = rng.random()
            if r < 0.125:
                a[v] = Q_ZERO
            elif r < 0.25:
                a[v] = Q_ONE
            elif r < 0.375:
                a[v] = RationalZT(-1)
            else:
                a[v] = RationalZT(
                    rng.randint(-bound, bound), rng.randint(1, bound)
                )
        yield a


@dataclass(frozen=True)
class SampleVerdict:
    holds: bool
    counterexample: dict[str, RationalZT] | None
    samples: int

    def __bool__(self) -> bool:
        return self.holds


def sample_check(eq: Equation, samples: int = 500, seed: int = 0) -> SampleVerdict:
    """Evaluate both sides at sampled points; any mismatch is reported exactly.

    Validity over the rationals cannot be decided by exhaustion, so this is
    evidence, not proof; the seed makes the evidence reproducible.
    """
    for a in sample_assignments(eq.variables(), samples, seed):
        if eval_rational(eq.lhs, a).value != eval_rational(eq.rhs, a).value:
            return SampleVerdict(False, a, samples)
    return SampleVerdict(True, None, samples)


def _atom_holds(atom, a) -> bool:
    same = eval_rational(atom.lhs, a).value == eval_rational(atom.rhs, a).value
    return same if isinstance(atom, Equation) else not same


def sample_check_conditional(
    ce: ConditionalEquation, samples: int = 500, seed: int = 0
) -> SampleVerdict:
    """Sampled check of a conditional.

    Equational premises are satisfied on a measure-zero set, so random
    points rarely exercise them; disequation premises (the guarded laws)
    are hit constantly.  Callers with purely equational premises should
    prefer checking the encoded equation instead.
    """
    for a in sample_assignments(ce.variables(), samples, seed):
        if all(_atom_holds(p, a) for p in ce.premises):
            if not _atom_holds(ce.conclusion, a):
                return SampleVerdict(False, a, samples)
    return SampleVerdict(True, None, samples)
