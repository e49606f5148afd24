"""Reduction engine: walk a primary staircase ideal of k[x,y]/(x^a ± y^b) down to (x, y).

Write I = (x^a1, x^a2 y^b2, ..., y^bn).  Peeling one factor of x off the
mixed generators gives I = xJ + (y^bn); in R/(y^bn) = k[x,y]/(x^a, y^bn) the
annihilator of x is (x^(a-1)) ⊆ xJ because a1 <= a-1, so R/(J + (y^bn)) lies
in the extension closure of R/I.  Repeating along x until only (x^c, y^d)
remains with c = 1, then along y, ends at the maximal ideal.
"""

from __future__ import annotations

import random

from .certify import AnnihilatorCheck, LemmaFourStep, ReductionCertificate
from .errors import (
    HypothesisViolated,
    NonTermination,
    NotPrimaryForm,
    TooFewGenerators,
)
from .truncmono import (
    StaircaseIdeal,
    annihilator_of_axis,
    contains_ideal,
    curve_ring,
    image_in,
    primary_form_problems,
    join,
    maximal_staircase,
    multiply_by_axis,
    normalize,
    truncated_ring,
)

__all__ = [
    "LemmaFourStep",
    "AnnihilatorCheck",
    "lemma4_step",
    "reduce_to_maximal",
    "step_bound",
    "next_axis",
    "random_staircase",
]


def _require_primary(I: StaircaseIdeal) -> None:
    if len(I.pairs) < 2:
        raise TooFewGenerators(f"{I} has fewer than two generators")
    problems = primary_form_problems(I)
    if problems:
        raise NotPrimaryForm(f"{I}: " + "; ".join(problems))


def lemma4_step(I: StaircaseIdeal, axis: str) -> LemmaFourStep:
    """Apply one annihilator-lemma step to ``I`` along ``axis`` ('x' or 'y')."""
    _require_primary(I)
    R = I.ring
    if axis == "x":
        e = I.pairs[-1][1]
        pure = (0, e)
        divided = [(p - 1, q) for p, q in I.pairs[:-1]]
        quotient = truncated_ring(R.x_trunc, e)
    elif axis == "y":
        e = I.pairs[0][0]
        pure = (e, 0)
        divided = [(p, q - 1) for p, q in I.pairs[1:]]
        quotient = truncated_ring(e, R.relation_exp)
    else:
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
    if (0, 0) in divided:
        raise TooFewGenerators(f"dividing {I} by {axis} gives the unit ideal")

    J = normalize(R, divided)
    shifted = multiply_by_axis(J, axis)
    pure_ideal = normalize(R, [pure])
    if join(shifted, pure_ideal) != I:
        raise HypothesisViolated(f"{I} != {axis}*{J} + {pure_ideal}")
    ann = annihilator_of_axis(quotient, axis)
    image = image_in(shifted, quotient)
    if image is None or not contains_ideal(image, ann):
        raise HypothesisViolated(f"0:{axis} = {ann} is not inside {axis}*{J} in {quotient}")
    return LemmaFourStep(
        axis=axis,
        quotient_exponent=e,
        ring=quotient,
        ideal_before=I,
        divided_ideal=J,
        ideal_after=join(J, pure_ideal),
        annihilator_check=AnnihilatorCheck(ann.pairs[0], True),
    )


def next_axis(I: StaircaseIdeal) -> str:
    """x until the staircase is (x, y^d), then y."""
    if len(I.pairs) == 2 and I.pairs[0][0] == 1:
        return "y"
    return "x"


def step_bound(I: StaircaseIdeal) -> int:
    """a1 + bn + n, an upper bound on the number of steps."""
    return I.pairs[0][0] + I.pairs[-1][1] + len(I.pairs)


def reduce_to_maximal(I: StaircaseIdeal) -> ReductionCertificate:
    """Certificate that R/(x,y) lies in the extension closure of R/I."""
    R = I.ring
    maximal = maximal_staircase(R) if not R.is_finite else None
    if I == maximal:
        return ReductionCertificate(R, I, (), I)
    _require_primary(I)
    bound = step_bound(I)
    steps = []
    current = I
    while current != maximal:
        if len(steps) >= bound:
            raise NonTermination(f"no reduction of {I} within {bound} steps")
        step = lemma4_step(current, next_axis(current))
        steps.append(step)
        current = step.ideal_after
    return ReductionCertificate(R, I, tuple(steps), current)


def random_staircase(rng: random.Random, max_exp: int = 12, max_gens: int = 6) -> StaircaseIdeal:
    """A random valid reduction input with a, b <= max_exp and n <= max_gens generators."""
    while True:
        a, b = rng.randint(2, max_exp), rng.randint(2, max_exp)
        n = rng.randint(2, max_gens)
        if n <= min(a, b):
            break
    xs = sorted(rng.sample(range(1, a), n - 1), reverse=True) + [0]
    ys = [0] + sorted(rng.sample(range(1, b), n - 1))
    return normalize(curve_ring(a, b, rng.choice("+-")), list(zip(xs, ys)))
