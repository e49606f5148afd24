"""Numerical semigroups: membership, conductor, Frobenius number, gaps, Apéry sets.

Membership is computed once, at construction, as a bitset stored in a Python
int (bit ``n`` set iff ``n`` is a member).  Everything else is read off it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from .errors import NotAMember, NotCofinite, StaircaseKitError, TableTooLarge

__all__ = [
    "NumericalSemigroup",
    "from_generators",
    "contains",
    "conductor_arithmetic",
    "arithmetic_semigroup",
    "apery_set",
    "gaps",
    "parse_semigroup",
    "format_semigroup",
    "MAX_TABLE_BITS",
]

# Desk-scale guard: refuse to build tables longer than this many entries.
MAX_TABLE_BITS = 1 << 24


def _close_under(mask: int, step: int, nbits: int) -> int:
    """Close ``mask`` under adding ``step``, keeping the low ``nbits`` bits."""
    window = (1 << nbits) - 1
    shift = step
    while shift < nbits:
        mask = (mask | (mask << shift)) & window
        shift <<= 1
    return mask


def _span_mask(gens, nbits: int) -> int:
    """Bitset of all nonnegative combinations of ``gens`` below ``nbits``."""
    mask = 1
    for g in gens:
        mask = _close_under(mask, g, nbits)
    return mask


@dataclass(frozen=True)
class NumericalSemigroup:
    """A cofinite submonoid of the nonnegative integers.

    Build instances with :func:`from_generators`; the constructor does not
    validate its arguments.
    """

    generators: tuple[int, ...]
    conductor: int
    membership_table: tuple[bool, ...] = field(repr=False, compare=False)

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @cached_property
    def _mask(self) -> int:
        return sum(1 << n for n, member in enumerate(self.membership_table) if member)

    def mask(self, nbits: int) -> int:
        """Membership bitset truncated (or extended with ones) to ``nbits`` bits."""
        table_len = len(self.membership_table)
        if nbits <= table_len:
            return self._mask & ((1 << nbits) - 1)
        return self._mask | (((1 << nbits) - 1) ^ ((1 << table_len) - 1))

    def __contains__(self, n: int) -> bool:
        return contains(self, n)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def from_generators(gens) -> NumericalSemigroup:
    """Return the numerical semigroup generated by ``gens``, in minimal form.

    >>> S = from_generators([3, 5, 8])
    >>> S.generators, S.conductor
    ((3, 5), 8)
    """
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise StaircaseKitError("at least one generator is required")
    if gens[0] <= 0:
        raise StaircaseKitError(f"generators must be positive, got {gens[0]}")
    if math.gcd(*gens) != 1:
        raise NotCofinite(f"gcd of {gens} is {math.gcd(*gens)}, complement is infinite")

    minimal: list[int] = []
    for g in gens:
        if not (_span_mask(minimal, g + 1) >> g) & 1:
            minimal.append(g)

    # Schur: the Frobenius number is below (min - 1) * (max - 1).
    lo, hi = minimal[0], minimal[-1]
    bound = (lo - 1) * (hi - 1) + 1
    nbits = bound + hi + 1
    if nbits > MAX_TABLE_BITS:
        raise TableTooLarge(f"membership table of {nbits} entries exceeds {MAX_TABLE_BITS}")
    mask = _span_mask(minimal, nbits)
    missing = ~mask & ((1 << bound) - 1)
    conductor = missing.bit_length()

    table_len = conductor + hi + 1
    table = tuple(bool((mask >> n) & 1) for n in range(table_len))
    return NumericalSemigroup(tuple(minimal), conductor, table)


def arithmetic_semigroup(a: int, r: int) -> NumericalSemigroup:
    """The semigroup generated by the consecutive integers a, a+1, ..., a+r."""
    if a < 1 or r < 1:
        raise StaircaseKitError(f"need a >= 1 and r >= 1, got a={a}, r={r}")
    return from_generators(range(a, a + r + 1))


def contains(S: NumericalSemigroup, n: int) -> bool:
    if n < 0:
        return False
    if n >= S.conductor:
        return True
    return S.membership_table[n]


def conductor_arithmetic(a: int, r: int) -> int:
    """Closed-form conductor of ``<a, a+1, ..., a+r>``: ceil((a-1)/r) * a."""
    if a < 2 or r < 1:
        raise StaircaseKitError(f"need a >= 2 and r >= 1, got a={a}, r={r}")
    return -(-(a - 1) // r) * a


def apery_set(S: NumericalSemigroup, m: int) -> list[int]:
    """Least member of each residue class modulo the nonzero member ``m``."""
    if m <= 0 or not contains(S, m):
        raise NotAMember(f"{m} is not a nonzero member of {S}")
    least: list[int | None] = [None] * m
    found = 0
    n = 0
    while found < m:
        if contains(S, n) and least[n % m] is None:
            least[n % m] = n
            found += 1
        n += 1
    return least  # type: ignore[return-value]


def gaps(S: NumericalSemigroup) -> list[int]:
    return [n for n in range(S.conductor) if not S.membership_table[n]]


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Parse a comma-separated generator list such as ``"5,6"``."""
    try:
        gens = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError as exc:
        raise StaircaseKitError(f"cannot parse generator list {text!r}") from exc
    return from_generators(gens)


def format_semigroup(S: NumericalSemigroup) -> str:
    return ",".join(map(str, S.generators))
