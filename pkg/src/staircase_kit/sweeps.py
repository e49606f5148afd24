"""Parameter sweeps comparing closed forms with brute-force computation.

Each check maps one family instance to a :class:`Row` carrying both the
closed-form (``expected``) and the computed (``observed``) value, so that a
discrepancy is visible and not just counted.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .certify import verify
from .extcalc import reduce_to_maximal, step_bound
from .numsgp import arithmetic_semigroup, conductor_arithmetic, from_generators
from .truncmono import primary_form_problems, staircase_of_conductor
from .valideal import (
    colon,
    conductor_ideal,
    is_stable_under_normalization,
    max_ideal_power,
    stable_power_threshold,
)

__all__ = [
    "ARITHMETIC_CHECKS",
    "TWO_GENERATOR_CHECKS",
    "SweepSpec",
    "Row",
    "run_sweep",
    "instances",
    "THREADS_ENV",
]

THREADS_ENV = "STAIRCASE_KIT_THREADS"

ARITHMETIC_CHECKS = ("num1", "num2", "cond", "colon")
TWO_GENERATOR_CHECKS = ("frobenius", "staircase", "reduce")


@dataclass(frozen=True)
class SweepSpec:
    """``family`` is 'arithmetic' (a in [2, a_max], r in [1, min(a-1, r_max)])
    or 'two-generator' (coprime a > b >= 2 with a <= a_max).
    """

    family: str
    a_max: int
    checks: tuple[str, ...]
    r_max: int | None = None

    def __post_init__(self):
        allowed = {"arithmetic": ARITHMETIC_CHECKS, "two-generator": TWO_GENERATOR_CHECKS}
        if self.family not in allowed:
            raise ValueError(f"unknown family {self.family!r}")
        if self.a_max < 2:
            raise ValueError(f"a_max must be at least 2, got {self.a_max}")
        if self.r_max is not None and self.r_max < 1:
            raise ValueError(f"r_max must be positive, got {self.r_max}")
        if not self.checks:
            raise ValueError("select at least one check")
        bad = [c for c in self.checks if c not in allowed[self.family]]
        if bad:
            raise ValueError(
                f"checks {bad} do not apply to the {self.family} family "
                f"(choose from {', '.join(allowed[self.family])})"
            )


@dataclass(frozen=True)
class Row:
    family: str
    a: int
    param: int
    check: str
    expected: str
    observed: str
    passed: bool

    def as_dict(self) -> dict:
        return asdict(self)


def _ceil_div(p: int, q: int) -> int:
    return -(-p // q)


def _num1(a, r):
    expected = conductor_arithmetic(a, r)
    observed = arithmetic_semigroup(a, r).conductor
    return str(expected), str(observed), expected == observed


def _num2(a, r):
    S = arithmetic_semigroup(a, r)
    u = _ceil_div(a - 1, r)
    flags = [is_stable_under_normalization(max_ideal_power(S, n))[0] for n in range(1, u + 4)]
    iff_ok = flags == [n >= u for n in range(1, u + 4)]
    observed = stable_power_threshold(S)
    return str(u), str(observed), iff_ok and observed == u


def _cond(a, r):
    S = arithmetic_semigroup(a, r)
    u = _ceil_div(a - 1, r)
    power = max_ideal_power(S, u)
    expected = conductor_arithmetic(a, r)
    stable, start = is_stable_under_normalization(power)
    observed = str(start) if stable else "unstable"
    return str(expected), observed, conductor_ideal(S) == power and start == u * a


def _colon_powers(a, r):
    S = arithmetic_semigroup(a, r)
    u = _ceil_div(a - 1, r)
    top = 2 * u + 3
    powers = [max_ideal_power(S, n) for n in range(top + 1)]
    total = held = 0
    for p in range(top + 1):
        for q in range(p + 1):
            total += 1
            held += colon(powers[p], powers[q]) == powers[p - q]
    return str(total), str(held), held == total


def _frobenius(a, b):
    expected = (a - 1) * (b - 1) - 1
    observed = from_generators([a, b]).frobenius
    return str(expected), str(observed), expected == observed


def _staircase(a, b):
    I = staircase_of_conductor(a, b)
    ok = not primary_form_problems(I) and len(I.pairs) == b
    ok = ok and all(p <= b - 1 and q <= a - 1 for q, p in I.pairs)
    return str(b), str(len(I.pairs)), ok


def _reduce(a, b):
    I = staircase_of_conductor(a, b)
    bound = step_bound(I)
    cert = reduce_to_maximal(I)
    ok = len(cert.steps) <= bound and verify(cert).ok
    return f"<={bound}", str(len(cert.steps)), ok


_CHECKS = {
    "num1": _num1,
    "num2": _num2,
    "cond": _cond,
    "colon": _colon_powers,
    "frobenius": _frobenius,
    "staircase": _staircase,
    "reduce": _reduce,
}


def instances(spec: SweepSpec) -> list[tuple[int, int]]:
    if spec.family == "arithmetic":
        return [
            (a, r)
            for a in range(2, spec.a_max + 1)
            for r in range(1, min(a - 1, spec.r_max or a) + 1)
        ]
    return [(a, b) for a in range(3, spec.a_max + 1) for b in range(2, a) if math.gcd(a, b) == 1]


def _run_one(job) -> Row:
    family, check, a, param = job
    try:
        expected, observed, passed = _CHECKS[check](a, param)
    except Exception as exc:  # a crash is a failed row, not an aborted sweep
        expected, observed, passed = "-", f"error: {exc}", False
    return Row(family, a, param, check, expected, observed, passed)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def run_sweep(spec: SweepSpec, workers: int | None = None) -> list[Row]:
    """Evaluate every (instance, check); rows come back sorted by (a, param, check order)."""
    jobs = [(spec.family, check, a, p) for a, p in instances(spec) for check in spec.checks]
    workers = _workers() if workers is None else workers
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_one, jobs, chunksize=16))
    return [_run_one(job) for job in jobs]
