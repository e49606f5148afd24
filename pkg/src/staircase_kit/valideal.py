"""Monomial ideals of a numerical semigroup ring, represented by value sets.

A monomial ideal of k[[H]] is determined by the set E of t-valuations of its
elements, which satisfies E + H ⊆ E.  Such a set is finite below some
threshold T and contains every integer >= T, so the normal form is the pair
(T, sporadic values below T).  Two ideals are equal iff their normal forms are.

Internally value sets are handled as Python-int bitsets over a window
[0, W) with the understanding that everything >= W is a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import AmbientMismatch, NoReductionFound, NotArithmeticFamily, StaircaseKitError
from .numsgp import NumericalSemigroup, contains, from_generators, parse_semigroup

__all__ = [
    "SemigroupIdeal",
    "ideal_from_values",
    "principal",
    "unit_ideal",
    "maximal_ideal",
    "multiply",
    "max_ideal_power",
    "colon",
    "is_stable_under_normalization",
    "stable_power_threshold",
    "conductor_ideal",
    "reduction_exponent",
    "reduction_holds",
    "arithmetic_parameters",
    "parse_ideal",
    "format_ideal",
]


def _ones(lo: int, hi: int) -> int:
    """Bitset with bits lo..hi-1 set."""
    return ((1 << hi) - 1) ^ ((1 << lo) - 1) if hi > lo else 0


def _from_mask(S: NumericalSemigroup, mask: int, window: int) -> "SemigroupIdeal":
    """Normal form of the value set ``mask`` on [0, window) plus [window, inf)."""
    missing = ~mask & ((1 << window) - 1)
    threshold = missing.bit_length()
    sporadic = tuple(n for n in range(threshold) if (mask >> n) & 1)
    return SemigroupIdeal(S, threshold, sporadic)


@dataclass(frozen=True)
class SemigroupIdeal:
    """Value set ``sporadic ∪ [threshold, ∞)`` of a monomial ideal of k[[H]]."""

    ambient: NumericalSemigroup
    threshold: int
    sporadic: tuple[int, ...]

    def mask(self, nbits: int) -> int:
        """Bitset of the value set on [0, nbits)."""
        low = sum(1 << v for v in self.sporadic if v < nbits)
        return low | _ones(self.threshold, nbits)

    def __contains__(self, n: int) -> bool:
        return n >= self.threshold or n in self._sporadic_set

    @cached_property
    def _sporadic_set(self) -> frozenset[int]:
        return frozenset(self.sporadic)

    @property
    def order(self) -> int:
        """Least value in the set."""
        return self.sporadic[0] if self.sporadic else self.threshold

    @cached_property
    def minimal_generators(self) -> tuple[int, ...]:
        gens = self.ambient.generators
        window = self.threshold + gens[-1] + 1
        E = self.mask(window)
        reachable = 0
        for g in gens:
            reachable |= E << g
        return tuple(n for n in range(window) if ((E & ~reachable) >> n) & 1)

    @property
    def is_integral(self) -> bool:
        """Whether the value set lies inside the semigroup (an ideal of R, not just of S)."""
        return all(contains(self.ambient, v) for v in self.minimal_generators)

    def values_below(self, bound: int) -> list[int]:
        return [n for n in range(bound) if n in self]

    def __str__(self) -> str:
        return format_ideal(self)


def _check_ambient(I: SemigroupIdeal, J: SemigroupIdeal) -> None:
    if I.ambient != J.ambient:
        raise AmbientMismatch(f"ideals live over {I.ambient} and {J.ambient}")


def ideal_from_values(S: NumericalSemigroup, vals) -> SemigroupIdeal:
    """The ideal with value set ``vals + S``."""
    vals = sorted(set(int(v) for v in vals))
    if not vals:
        raise StaircaseKitError("an ideal needs at least one generator value")
    if vals[0] < 0:
        raise StaircaseKitError(f"values must be nonnegative, got {vals[0]}")
    window = vals[0] + S.conductor + 1
    H = S.mask(window)
    mask = 0
    for v in vals:
        if v >= window:
            break
        mask |= H << v
    return _from_mask(S, mask & ((1 << window) - 1), window)


def principal(S: NumericalSemigroup, value: int) -> SemigroupIdeal:
    return ideal_from_values(S, [value])


def unit_ideal(S: NumericalSemigroup) -> SemigroupIdeal:
    return ideal_from_values(S, [0])


def maximal_ideal(S: NumericalSemigroup) -> SemigroupIdeal:
    return ideal_from_values(S, S.generators)


def multiply(I: SemigroupIdeal, J: SemigroupIdeal) -> SemigroupIdeal:
    _check_ambient(I, J)
    sums = {i + j for i in I.minimal_generators for j in J.minimal_generators}
    return ideal_from_values(I.ambient, sums)


def max_ideal_power(S: NumericalSemigroup, n: int) -> SemigroupIdeal:
    if n < 0:
        raise StaircaseKitError(f"power must be nonnegative, got {n}")
    result = unit_ideal(S)
    m = maximal_ideal(S)
    for _ in range(n):
        result = multiply(result, m)
    return result


def colon(I: SemigroupIdeal, J: SemigroupIdeal) -> SemigroupIdeal:
    """Integral colon I : J, the members h of H with h + J ⊆ I."""
    _check_ambient(I, J)
    S = I.ambient
    window = max(I.threshold, S.conductor) + 1
    gens = J.minimal_generators
    E = I.mask(window + gens[-1])
    result = S.mask(window)
    for g in gens:
        result &= E >> g
    return _from_mask(S, result, window)


def is_stable_under_normalization(I: SemigroupIdeal) -> tuple[bool, int | None]:
    """Whether IS = I, i.e. the value set is a full tail; returns the tail start."""
    if I.sporadic:
        return False, None
    return True, I.threshold


def arithmetic_parameters(S: NumericalSemigroup) -> tuple[int, int]:
    """Return (a, r) with S = <a, a+1, ..., a+r>, r >= 1 and r <= a - 1."""
    gens = S.generators
    a = gens[0]
    if a < 2 or list(gens) != list(range(a, a + len(gens))):
        raise NotArithmeticFamily(f"{S} is not generated by consecutive integers")
    return a, len(gens) - 1


def stable_power_threshold(S: NumericalSemigroup) -> int:
    """Least n for which m^n is stable under normalization, found by iteration."""
    arithmetic_parameters(S)
    power = unit_ideal(S)
    m = maximal_ideal(S)
    n = 0
    while not is_stable_under_normalization(power)[0]:
        power = multiply(power, m)
        n += 1
    return n


def conductor_ideal(S: NumericalSemigroup) -> SemigroupIdeal:
    return SemigroupIdeal(S, S.conductor, ())


def reduction_holds(S: NumericalSemigroup, x_value: int, n: int) -> bool:
    """Whether m^(n+1) = t^x * m^n."""
    mn = max_ideal_power(S, n)
    return multiply(mn, maximal_ideal(S)) == multiply(principal(S, x_value), mn)


def reduction_exponent(S: NumericalSemigroup, x_value: int) -> int:
    """Least n >= 1 with m^(n+1) = t^x m^n, searching n up to max(1, conductor)."""
    if x_value <= 0 or not contains(S, x_value):
        raise StaircaseKitError(f"{x_value} is not a nonzero member of {S}")
    m = maximal_ideal(S)
    x = principal(S, x_value)
    mn = m
    for n in range(1, max(1, S.conductor) + 1):
        mn_next = multiply(mn, m)
        if mn_next == multiply(x, mn):
            return n
        mn = mn_next
    raise NoReductionFound(f"t^{x_value} does not generate a reduction of the maximal ideal of {S}")


def parse_ideal(text: str) -> SemigroupIdeal:
    """Parse ``"gens=e1,e2,... @ sgp=g1,g2,..."``."""
    try:
        left, right = (part.strip() for part in text.split("@"))
        key_l, gens_text = (s.strip() for s in left.split("=", 1))
        key_r, sgp_text = (s.strip() for s in right.split("=", 1))
    except ValueError as exc:
        raise StaircaseKitError(f"cannot parse ideal {text!r}") from exc
    if key_l != "gens" or key_r != "sgp":
        raise StaircaseKitError(f"expected 'gens=... @ sgp=...', got {text!r}")
    try:
        vals = [int(tok) for tok in gens_text.split(",") if tok.strip()]
    except ValueError as exc:
        raise StaircaseKitError(f"cannot parse generator values {gens_text!r}") from exc
    return ideal_from_values(parse_semigroup(sgp_text), vals)


def format_ideal(I: SemigroupIdeal) -> str:
    """Normal form as ``{sporadic...} ∪ [T,∞)``."""
    return "{" + ",".join(map(str, I.sporadic)) + "} ∪ [" + str(I.threshold) + ",∞)"
