"""Monomial ideals in two variables and their staircase normal form.

Two kinds of ambient ring are supported:

* the truncated ring k[x,y]/(x^a, y^m), where every monomial with
  x-exponent >= a or y-exponent >= m is zero, and
* the curve ring k[x,y]/(x^a ± y^b).  Here the monomials x^p y^q with p < a
  form a basis; a monomial with p >= a is rewritten as x^(p-a) y^(q+b)
  (the sign is irrelevant for monomial ideals).  x^p y^q lies in the ideal
  generated by x^u y^v iff (p >= u and q >= v) or q >= v + b.

A staircase lists the minimal monomial generators as (x_exp, y_exp) pairs
with x_exp strictly decreasing and y_exp strictly increasing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (
    InfiniteRing,
    NotCoprime,
    RepresentationFailure,
    RingMismatch,
    StaircaseKitError,
    ZeroIdeal,
)
from .numsgp import from_generators
from .valideal import conductor_ideal

__all__ = [
    "Pair",
    "TruncatedRingParams",
    "StaircaseIdeal",
    "truncated_ring",
    "curve_ring",
    "normalize",
    "contains_monomial",
    "contains_ideal",
    "annihilator_of_x",
    "annihilator_of_y",
    "annihilator_of_axis",
    "multiply_by_x",
    "multiply_by_y",
    "multiply_by_axis",
    "join",
    "image_in",
    "staircase_violations",
    "primary_form_problems",
    "staircase_of_conductor",
    "pair_value",
    "maximal_staircase",
    "parse_pairs",
    "format_pairs",
    "parse_ring",
    "format_ring",
]

Pair = tuple[int, int]


@dataclass(frozen=True)
class TruncatedRingParams:
    """Ambient ring of a staircase.

    ``y_trunc is None`` means the curve ring k[x,y]/(x^x_trunc ± y^relation_exp);
    otherwise the ring is k[x,y]/(x^x_trunc, y^y_trunc) and ``relation_exp``
    and ``relation_sign`` are None.
    """

    x_trunc: int
    y_trunc: Optional[int] = None
    relation_exp: Optional[int] = None
    relation_sign: Optional[str] = None

    def __post_init__(self):
        if self.y_trunc is None:
            if self.x_trunc < 2:
                raise StaircaseKitError(f"curve ring needs a >= 2, got {self.x_trunc}")
            if self.relation_exp is None or self.relation_exp < 1:
                raise StaircaseKitError("curve ring needs a relation exponent b >= 1")
            if self.relation_sign not in ("+", "-"):
                raise StaircaseKitError(f"relation sign must be '+' or '-', got {self.relation_sign!r}")
        else:
            if self.x_trunc < 1 or self.y_trunc < 1:
                raise StaircaseKitError(
                    f"truncation exponents must be positive, got ({self.x_trunc}, {self.y_trunc})"
                )
            if self.relation_exp is not None or self.relation_sign is not None:
                raise StaircaseKitError("a truncated ring carries no relation")

    @property
    def is_finite(self) -> bool:
        return self.y_trunc is not None

    def __str__(self) -> str:
        return format_ring(self)


def truncated_ring(a: int, m: int) -> TruncatedRingParams:
    return TruncatedRingParams(a, m)


def curve_ring(a: int, b: int, sign: str = "-") -> TruncatedRingParams:
    return TruncatedRingParams(a, None, b, sign)


@dataclass(frozen=True)
class StaircaseIdeal:
    """A monomial ideal given by its minimal generators.

    Use :func:`normalize` to build one; direct construction skips all checks
    so that a verifier can inspect arbitrary (possibly malformed) data.
    """

    ring: TruncatedRingParams
    pairs: tuple[Pair, ...]

    def __str__(self) -> str:
        return "(" + ", ".join(_monomial(p, q) for p, q in self.pairs) + ")"

    def __len__(self) -> int:
        return len(self.pairs)


def _monomial(p: int, q: int) -> str:
    if p == q == 0:
        return "1"
    parts = []
    if p:
        parts.append("x" if p == 1 else f"x^{p}")
    if q:
        parts.append("y" if q == 1 else f"y^{q}")
    return "".join(parts)


def _standardize(ring: TruncatedRingParams, p: int, q: int) -> Optional[Pair]:
    """Canonical representative of x^p y^q in ``ring``; None if it is zero."""
    if ring.is_finite:
        if p >= ring.x_trunc or q >= ring.y_trunc:
            return None
        return p, q
    k, p = divmod(p, ring.x_trunc)
    return p, q + k * ring.relation_exp


def _divides(ring: TruncatedRingParams, g: Pair, m: Pair) -> bool:
    """Whether the standard monomial g divides the standard monomial m."""
    if g[0] <= m[0] and g[1] <= m[1]:
        return True
    return not ring.is_finite and m[1] >= g[1] + ring.relation_exp


def _check_pair(pair) -> Pair:
    p, q = pair
    p, q = int(p), int(q)
    if p < 0 or q < 0:
        raise StaircaseKitError(f"exponents must be nonnegative, got ({p}, {q})")
    return p, q


def normalize(ring: TruncatedRingParams, raw_pairs: Iterable[Pair]) -> StaircaseIdeal:
    """Minimal generators of the ideal generated by ``raw_pairs``, in staircase order."""
    raw = [_check_pair(pair) for pair in raw_pairs]
    if not raw:
        raise StaircaseKitError("at least one monomial is required")
    live = sorted({s for s in (_standardize(ring, p, q) for p, q in raw) if s is not None})
    if not live:
        raise ZeroIdeal(f"every monomial vanishes in {ring}")
    kept = [m for m in live if not any(g != m and _divides(ring, g, m) for g in live)]
    kept.sort(key=lambda pq: (-pq[0], pq[1]))
    return StaircaseIdeal(ring, tuple(kept))


def maximal_staircase(ring: TruncatedRingParams) -> StaircaseIdeal:
    return normalize(ring, [(1, 0), (0, 1)])


def contains_monomial(I: StaircaseIdeal, p: int, q: int) -> bool:
    m = _standardize(I.ring, p, q)
    if m is None:
        return True
    return any(_divides(I.ring, g, m) for g in I.pairs)


def contains_ideal(I: StaircaseIdeal, J: StaircaseIdeal) -> bool:
    """Whether J ⊆ I."""
    if I.ring != J.ring:
        raise RingMismatch(f"{I.ring} vs {J.ring}")
    return all(contains_monomial(I, p, q) for p, q in J.pairs)


def annihilator_of_x(ring: TruncatedRingParams) -> StaircaseIdeal:
    """0 : x in k[x,y]/(x^a, y^m), which is (x^(a-1))."""
    if not ring.is_finite:
        raise InfiniteRing(f"0 : x is not monomially principal in {ring}")
    return StaircaseIdeal(ring, ((ring.x_trunc - 1, 0),))


def annihilator_of_y(ring: TruncatedRingParams) -> StaircaseIdeal:
    if not ring.is_finite:
        raise InfiniteRing(f"0 : y is not monomially principal in {ring}")
    return StaircaseIdeal(ring, ((0, ring.y_trunc - 1),))


def annihilator_of_axis(ring: TruncatedRingParams, axis: str) -> StaircaseIdeal:
    return annihilator_of_x(ring) if _axis(axis) == "x" else annihilator_of_y(ring)


def _axis(axis: str) -> str:
    if axis not in ("x", "y"):
        raise StaircaseKitError(f"axis must be 'x' or 'y', got {axis!r}")
    return axis


def multiply_by_x(I: StaircaseIdeal) -> StaircaseIdeal:
    return normalize(I.ring, [(p + 1, q) for p, q in I.pairs])


def multiply_by_y(I: StaircaseIdeal) -> StaircaseIdeal:
    return normalize(I.ring, [(p, q + 1) for p, q in I.pairs])


def multiply_by_axis(I: StaircaseIdeal, axis: str) -> StaircaseIdeal:
    return multiply_by_x(I) if _axis(axis) == "x" else multiply_by_y(I)


def join(I: StaircaseIdeal, J: StaircaseIdeal) -> StaircaseIdeal:
    """The sum I + J."""
    if I.ring != J.ring:
        raise RingMismatch(f"{I.ring} vs {J.ring}")
    return normalize(I.ring, I.pairs + J.pairs)


def image_in(I: StaircaseIdeal, ring: TruncatedRingParams) -> Optional[StaircaseIdeal]:
    """Image of I in a truncated quotient ring; None for the zero ideal.

    Valid when ``ring`` is a quotient of I's ring by a pure power of one
    variable below the relation exponents, which is how the reduction steps
    use it.
    """
    try:
        return normalize(ring, I.pairs)
    except ZeroIdeal:
        return None


def staircase_violations(I: StaircaseIdeal) -> list[str]:
    """Reasons I is not in staircase normal form (empty when it is)."""
    problems = []
    pairs = I.pairs
    if not pairs:
        return ["no generators"]
    for pair in pairs:
        if (
            not isinstance(pair, tuple)
            or len(pair) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in pair)
        ):
            return [f"bad exponent pair {pair!r}"]
    for p, q in pairs:
        if _standardize(I.ring, p, q) != (p, q):
            problems.append(f"{_monomial(p, q)} is not a nonzero standard monomial of {I.ring}")
    for (p1, q1), (p2, q2) in zip(pairs, pairs[1:]):
        if not (p1 > p2 and q1 < q2):
            problems.append(f"pairs ({p1},{q1}), ({p2},{q2}) break the staircase order")
    for i, g in enumerate(pairs):
        for j, m in enumerate(pairs):
            if i != j and _divides(I.ring, g, m):
                problems.append(f"{_monomial(*m)} is divisible by {_monomial(*g)}")
    return problems


def primary_form_problems(I: StaircaseIdeal) -> list[str]:
    """Reasons I is not a valid reduction input: a curve-ring staircase with
    a > a_1 > ... > a_n = 0, 0 = b_1 < ... < b_n < b and n >= 2.
    """
    problems = staircase_violations(I)
    if problems:
        return problems
    ring = I.ring
    if ring.is_finite:
        return [f"{ring} is not a curve ring x^a ± y^b"]
    if len(I.pairs) < 2:
        problems.append("fewer than two generators")
    if I.pairs[-1][0] != 0:
        problems.append("no pure power of y among the generators")
    if I.pairs[0][1] != 0:
        problems.append("no pure power of x among the generators")
    if I.pairs[0][0] >= ring.x_trunc:
        problems.append(f"x-exponent {I.pairs[0][0]} is not below a={ring.x_trunc}")
    if I.pairs[-1][1] >= ring.relation_exp:
        problems.append(f"y-exponent {I.pairs[-1][1]} is not below b={ring.relation_exp}")
    return problems


def pair_value(a: int, b: int, pair: Pair) -> int:
    """t-degree of x^q y^p under x = t^b, y = t^a."""
    q, p = pair
    return b * q + a * p


def staircase_of_conductor(a: int, b: int) -> StaircaseIdeal:
    """Staircase of the conductor ideal of k[[t^b, t^a]] = k[[x,y]]/(x^a - y^b).

    Each minimal generator value n of the conductor ideal is written as
    n = a*p + b*q with 0 <= p <= b-1, giving the monomial x^q y^p.
    """
    if not (a > b >= 2):
        raise StaircaseKitError(f"need a > b >= 2, got a={a}, b={b}")
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {math.gcd(a, b)}")
    S = from_generators([a, b])
    a_inv = pow(a, -1, b)
    pairs = []
    for n in conductor_ideal(S).minimal_generators:
        p = (n * a_inv) % b
        q, rem = divmod(n - a * p, b)
        if rem or not 0 <= q <= a - 1:
            raise RepresentationFailure(f"{n} = {a}*{p} + {b}*q has no q in [0, {a - 1}]")
        pairs.append((q, p))
    ring = curve_ring(a, b, "-")
    I = normalize(ring, pairs)
    if len(I.pairs) != len(pairs):
        raise RepresentationFailure(f"monomials {pairs} are not minimal in {ring}")
    return I


def parse_pairs(text: str) -> list[Pair]:
    """Parse ``"3,0;1,1;0,2"``."""
    pairs = []
    for chunk in text.replace(" ", "").split(";"):
        if not chunk:
            continue
        try:
            p, q = (int(tok) for tok in chunk.split(","))
        except ValueError as exc:
            raise StaircaseKitError(f"cannot parse exponent pair {chunk!r}") from exc
        pairs.append((p, q))
    if not pairs:
        raise StaircaseKitError(f"no exponent pairs in {text!r}")
    return pairs


def format_pairs(pairs: Iterable[Pair]) -> str:
    return ";".join(f"{p},{q}" for p, q in pairs)


def parse_ring(text: str) -> TruncatedRingParams:
    """Parse ``"a=5,b=3,sign=-"`` (curve ring) or ``"a=5,m=2"`` (truncated ring)."""
    fields = {}
    for chunk in text.replace(" ", "").split(","):
        key, sep, value = chunk.partition("=")
        if not sep or key in fields:
            raise StaircaseKitError(f"cannot parse ring {text!r}")
        fields[key] = value
    try:
        if set(fields) == {"a", "m"}:
            return truncated_ring(int(fields["a"]), int(fields["m"]))
        if set(fields) in ({"a", "b"}, {"a", "b", "sign"}):
            return curve_ring(int(fields["a"]), int(fields["b"]), fields.get("sign", "-"))
    except ValueError as exc:
        raise StaircaseKitError(f"cannot parse ring {text!r}") from exc
    raise StaircaseKitError(f"ring {text!r} needs keys a,m or a,b[,sign]")


def format_ring(ring: TruncatedRingParams) -> str:
    if ring.is_finite:
        return f"a={ring.x_trunc},m={ring.y_trunc}"
    return f"a={ring.x_trunc},b={ring.relation_exp},sign={ring.relation_sign}"
