"""Reduction certificates: data model, JSON serialization and an independent verifier.

A certificate records a chain of steps, each an instance of the exact sequence

    0 -> R/xJ -> R/J ⊕ R/x²J -> R/xJ -> 0

over a truncated quotient R' of the curve ring, valid whenever 0 :_R' x ⊆ xJ.
The verifier re-derives every step using only the monomial primitives of
:mod:`staircase_kit.truncmono`; it never calls the reduction engine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import MalformedCertificate, StaircaseKitError
from .truncmono import (
    Pair,
    StaircaseIdeal,
    TruncatedRingParams,
    annihilator_of_axis,
    contains_ideal,
    curve_ring,
    image_in,
    primary_form_problems,
    join,
    maximal_staircase,
    multiply_by_axis,
    normalize,
    staircase_violations,
    truncated_ring,
)

__all__ = [
    "AnnihilatorCheck",
    "LemmaFourStep",
    "ReductionCertificate",
    "CheckResult",
    "VerificationReport",
    "verify",
    "serialize",
    "deserialize",
    "save",
    "load",
    "CERT_SUFFIX",
]

CERT_SUFFIX = ".redcert.json"


@dataclass(frozen=True)
class AnnihilatorCheck:
    ann_generator: Pair
    containment_verified: bool


@dataclass(frozen=True)
class LemmaFourStep:
    """One application of the annihilator lemma.

    ``ring`` is the truncated quotient R' = R/(pure power of the other
    variable), ``quotient_exponent`` that power's exponent.  In R the ideal
    factors as ``ideal_before = axis * divided_ideal + (pure power)``, and the
    step concludes R/ideal_after ∈ ext R/ideal_before with
    ``ideal_after = divided_ideal + (pure power)``.
    """

    axis: str
    quotient_exponent: int
    ring: TruncatedRingParams
    ideal_before: StaircaseIdeal
    divided_ideal: StaircaseIdeal
    ideal_after: StaircaseIdeal
    annihilator_check: AnnihilatorCheck


@dataclass(frozen=True)
class ReductionCertificate:
    ring: TruncatedRingParams
    initial_ideal: StaircaseIdeal
    steps: tuple[LemmaFourStep, ...]
    final_ideal: StaircaseIdeal

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class CheckResult:
    step: int | None  # None for certificate-level checks
    check: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        where = "cert" if self.step is None else f"step {self.step}"
        mark = "ok  " if self.passed else "FAIL"
        return f"[{mark}] {where:>8}  {self.check}" + (f": {self.detail}" if self.detail else "")


@dataclass
class VerificationReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def failed_checks(self) -> set[str]:
        return {r.check for r in self.failures()}

    def add(self, step, check, passed, detail=""):
        self.results.append(CheckResult(step, check, bool(passed), detail))

    def __str__(self) -> str:
        lines = [str(r) for r in self.results]
        n = len(self.failures())
        lines.append("VALID" if self.ok else f"INVALID ({n} failed check{'s' if n != 1 else ''})")
        return "\n".join(lines)


# Check names, one per verified property.
INVARIANTS = "staircase-invariants"
DECOMPOSITION = "decomposition"
ANNIHILATOR = "annihilator-containment"
AFTER = "ideal-after"
CHAIN = "chain-consistency"
FINAL = "final-ideal"


def _verify_step(k: int, step: LemmaFourStep, R: TruncatedRingParams, report: VerificationReport) -> None:
    ideals = {
        "ideal_before": step.ideal_before,
        "divided_ideal": step.divided_ideal,
        "ideal_after": step.ideal_after,
    }
    problems = []
    for name, ideal in ideals.items():
        if ideal.ring != R:
            problems.append(f"{name} lives in {ideal.ring}, not {R}")
        else:
            problems.extend(f"{name}: {msg}" for msg in staircase_violations(ideal))
    if problems:
        report.add(k, INVARIANTS, False, "; ".join(problems))
        return
    # A non-primary ideal_before is reported but the remaining checks still run.
    problems = [f"ideal_before: {msg}" for msg in primary_form_problems(step.ideal_before)]
    report.add(k, INVARIANTS, not problems, "; ".join(problems))

    if step.axis not in ("x", "y"):
        report.add(k, DECOMPOSITION, False, f"unknown axis {step.axis!r}")
        return
    a, b = R.x_trunc, R.relation_exp
    e = step.quotient_exponent
    if step.axis == "x":
        pure = (0, e)
        expected_ring = (a, e) if 1 <= e < b else None
    else:
        pure = (e, 0)
        expected_ring = (e, b) if 1 <= e < a else None
    if expected_ring is None or step.ring != truncated_ring(*expected_ring):
        report.add(k, DECOMPOSITION, False,
                   f"ring {step.ring} does not match quotient exponent {e} along {step.axis}")
        return
    pure_ideal = normalize(R, [pure])
    shifted = multiply_by_axis(step.divided_ideal, step.axis)
    rebuilt = join(shifted, pure_ideal)
    report.add(k, DECOMPOSITION, rebuilt == step.ideal_before,
               f"{step.axis}*{step.divided_ideal} + {pure_ideal} = {rebuilt}, recorded {step.ideal_before}")

    ann = annihilator_of_axis(step.ring, step.axis)
    shifted_image = image_in(shifted, step.ring)
    ann_ok = (
        step.annihilator_check.containment_verified is True
        and tuple(step.annihilator_check.ann_generator) == ann.pairs[0]
        and shifted_image is not None
        and contains_ideal(shifted_image, ann)
    )
    report.add(k, ANNIHILATOR, ann_ok,
               f"0:{step.axis} = {ann} in {step.ring}, recorded generator "
               f"{step.annihilator_check.ann_generator}, image {shifted_image}")

    after = join(step.divided_ideal, pure_ideal)
    report.add(k, AFTER, after == step.ideal_after, f"recomputed {after}, recorded {step.ideal_after}")


def verify(cert: ReductionCertificate) -> VerificationReport:
    """Re-check a certificate from scratch; every failure becomes a report entry."""
    report = VerificationReport()
    R = cert.ring
    try:
        if not isinstance(R, TruncatedRingParams) or R.is_finite:
            report.add(None, INVARIANTS, False, f"{R} is not a curve ring")
            return report
        maximal = maximal_staircase(R)
        if cert.initial_ideal == maximal:
            start_problems = []
        elif cert.initial_ideal.ring != R:
            start_problems = [f"initial ideal lives in {cert.initial_ideal.ring}"]
        else:
            start_problems = primary_form_problems(cert.initial_ideal)
        report.add(None, INVARIANTS, not start_problems, "; ".join(start_problems))

        previous = cert.initial_ideal
        for k, step in enumerate(cert.steps):
            report.add(k, CHAIN, step.ideal_before == previous,
                       f"step input {step.ideal_before}, previous {previous}")
            try:
                _verify_step(k, step, R, report)
            except (StaircaseKitError, TypeError, ValueError, AttributeError, IndexError) as exc:
                report.add(k, INVARIANTS, False, f"step could not be checked: {exc}")
            previous = step.ideal_after
        report.add(None, CHAIN, previous == cert.final_ideal,
                   f"last ideal {previous}, recorded final {cert.final_ideal}")
        report.add(None, FINAL, cert.final_ideal == maximal, f"final ideal {cert.final_ideal}")
    except (StaircaseKitError, TypeError, ValueError, AttributeError, IndexError) as exc:
        report.add(None, INVARIANTS, False, f"certificate could not be checked: {exc}")
    return report


# --- serialization -------------------------------------------------------

_TOP_KEYS = {"ring", "initial_ideal", "steps", "final_ideal"}
_STEP_KEYS = {"axis", "quotient_exponent", "ring", "ideal_before", "divided_ideal",
              "ideal_after", "ann_generator"}


def _pairs_json(ideal: StaircaseIdeal) -> list[list[int]]:
    return [[p, q] for p, q in ideal.pairs]


def _to_json(cert: ReductionCertificate) -> dict:
    R = cert.ring
    return {
        "ring": {"a": R.x_trunc, "b": R.relation_exp, "sign": R.relation_sign},
        "initial_ideal": _pairs_json(cert.initial_ideal),
        "steps": [
            {
                "axis": s.axis,
                "quotient_exponent": s.quotient_exponent,
                "ring": {"a": s.ring.x_trunc, "m": s.ring.y_trunc},
                "ideal_before": _pairs_json(s.ideal_before),
                "divided_ideal": _pairs_json(s.divided_ideal),
                "ideal_after": _pairs_json(s.ideal_after),
                "ann_generator": list(s.annihilator_check.ann_generator),
            }
            for s in cert.steps
        ],
        "final_ideal": _pairs_json(cert.final_ideal),
    }


def _emit(value, indent: int = 0) -> str:
    """Sorted-key JSON with two-space indent; flat integer lists stay on one line."""
    pad = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_emit(value[k], indent + 1)}" for k in sorted(value)]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        if all(isinstance(v, int) for v in value):
            return "[" + ", ".join(map(str, value)) + "]"
        items = [pad + _emit(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(value)


def serialize(cert: ReductionCertificate) -> bytes:
    """Canonical JSON bytes: sorted keys, fixed layout, trailing newline."""
    return (_emit(_to_json(cert)) + "\n").encode("utf-8")


def _expect_keys(obj, keys, where):
    if not isinstance(obj, dict):
        raise MalformedCertificate(f"expected an object, got {type(obj).__name__}", where)
    missing = keys - obj.keys()
    extra = obj.keys() - keys
    if missing or extra:
        raise MalformedCertificate(
            f"missing keys {sorted(missing)}, unexpected keys {sorted(extra)}", where
        )


def _expect_int(value, where, minimum=0) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise MalformedCertificate(f"expected an integer >= {minimum}, got {value!r}", where)
    return value


def _read_pair(value, where) -> Pair:
    if not isinstance(value, list) or len(value) != 2:
        raise MalformedCertificate(f"expected an exponent pair, got {value!r}", where)
    return _expect_int(value[0], f"{where}[0]"), _expect_int(value[1], f"{where}[1]")


def _read_ideal(value, ring, where) -> StaircaseIdeal:
    if not isinstance(value, list) or not value:
        raise MalformedCertificate(f"expected a nonempty list of pairs, got {value!r}", where)
    return StaircaseIdeal(ring, tuple(_read_pair(v, f"{where}[{i}]") for i, v in enumerate(value)))


def _read_ring(value, where, keys) -> TruncatedRingParams:
    _expect_keys(value, keys, where)
    try:
        if "m" in keys:
            return truncated_ring(_expect_int(value["a"], f"{where}.a", 1),
                                  _expect_int(value["m"], f"{where}.m", 1))
        if value["sign"] not in ("+", "-"):
            raise MalformedCertificate(f"sign must be '+' or '-', got {value['sign']!r}", f"{where}.sign")
        return curve_ring(_expect_int(value["a"], f"{where}.a", 2),
                          _expect_int(value["b"], f"{where}.b", 1), value["sign"])
    except MalformedCertificate:
        raise
    except StaircaseKitError as exc:
        raise MalformedCertificate(str(exc), where) from exc


def deserialize(data: bytes | str) -> ReductionCertificate:
    """Parse and structurally validate a certificate; semantic checks are left to :func:`verify`."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedCertificate(f"not UTF-8: {exc.reason}", f"byte {exc.start}") from exc
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedCertificate(exc.msg, f"line {exc.lineno} column {exc.colno}") from exc

    _expect_keys(obj, _TOP_KEYS, "$")
    R = _read_ring(obj["ring"], "$.ring", {"a", "b", "sign"})
    initial = _read_ideal(obj["initial_ideal"], R, "$.initial_ideal")
    final = _read_ideal(obj["final_ideal"], R, "$.final_ideal")
    if not isinstance(obj["steps"], list):
        raise MalformedCertificate("expected a list of steps", "$.steps")
    steps = []
    for i, raw in enumerate(obj["steps"]):
        where = f"$.steps[{i}]"
        _expect_keys(raw, _STEP_KEYS, where)
        if raw["axis"] not in ("x", "y"):
            raise MalformedCertificate(f"axis must be 'x' or 'y', got {raw['axis']!r}", f"{where}.axis")
        steps.append(LemmaFourStep(
            axis=raw["axis"],
            quotient_exponent=_expect_int(raw["quotient_exponent"], f"{where}.quotient_exponent", 1),
            ring=_read_ring(raw["ring"], f"{where}.ring", {"a", "m"}),
            ideal_before=_read_ideal(raw["ideal_before"], R, f"{where}.ideal_before"),
            divided_ideal=_read_ideal(raw["divided_ideal"], R, f"{where}.divided_ideal"),
            ideal_after=_read_ideal(raw["ideal_after"], R, f"{where}.ideal_after"),
            annihilator_check=AnnihilatorCheck(_read_pair(raw["ann_generator"], f"{where}.ann_generator"), True),
        ))
    return ReductionCertificate(R, initial, tuple(steps), final)


def save(cert: ReductionCertificate, path) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize(cert))


def load(path) -> ReductionCertificate:
    with open(path, "rb") as fh:
        return deserialize(fh.read())
