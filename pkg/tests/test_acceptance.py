"""Acceptance suite.

Every criterion prints one ``[PASS]``/``[FAIL] criterion N`` line; the lines are
repeated in the pytest terminal summary.  Run the suite on its own with

    pytest tests/test_acceptance.py -s

or ``python tests/test_acceptance.py``.  Expected values come from the brute-force
routines in ``oracles.py``, never from the package under test.
"""

import dataclasses
import math
import random
import sys
from pathlib import Path

import pytest

import oracles
from acceptance_report import criterion
from mutations import is_genuine, single_field_mutations
from staircase_kit.certify import ANNIHILATOR, DECOMPOSITION, AnnihilatorCheck, LemmaFourStep, ReductionCertificate
from staircase_kit.certify import deserialize, serialize, verify
from staircase_kit.errors import MalformedCertificate
from staircase_kit.extcalc import random_staircase, reduce_to_maximal
from staircase_kit.numsgp import arithmetic_semigroup, conductor_arithmetic, from_generators
from staircase_kit.truncmono import curve_ring, normalize, staircase_of_conductor, truncated_ring
from staircase_kit.valideal import (
    colon,
    conductor_ideal,
    ideal_from_values,
    is_stable_under_normalization,
    max_ideal_power,
    reduction_exponent,
    reduction_holds,
)

DATA = Path(__file__).parent / "data"


def ceil_div(p, q):
    return -(-p // q)


def arithmetic_family(a_max):
    return [(a, r) for a in range(2, a_max + 1) for r in range(1, a)]


def coprime_pairs():
    return [(a, b) for b in range(2, 40) for a in range(b + 1, 41) if math.gcd(a, b) == 1]


def power_values(a, r, n, bound):
    """Values of m^n in H_{a,r} below bound: sums of n generators fill [na, n(a+r)], then add H."""
    H = oracles.members_sieve(range(a, a + r + 1), bound)
    if n == 0:
        return H
    return {s + h for s in range(n * a, n * (a + r) + 1) for h in H if s + h < bound}


def colon_values(E_p, E_q_min_gens, H, bound):
    return {h for h in H if h < bound and all(h + g in E_p for g in E_q_min_gens)}


# ---------------------------------------------------------------------------


def test_criterion_1_conductor_closed_form():
    family = arithmetic_family(60)
    with criterion(1, "conductor of <a..a+r> matches closed form, a <= 60", limit=10) as notes:
        mismatches = [
            (a, r) for a, r in family if conductor_arithmetic(a, r) != oracles.conductor_apery(range(a, a + r + 1))
        ]
        # the library's own table-based conductor must agree as well
        mismatches += [(a, r) for a, r in family if arithmetic_semigroup(a, r).conductor != conductor_arithmetic(a, r)]
        assert mismatches == []
        notes.append(f"{len(family)} instances")


def test_criterion_2_two_generator_conductor():
    pairs = coprime_pairs()
    with criterion(2, "conductor of <a,b> is (a-1)(b-1)", limit=5) as notes:
        for a, b in pairs:
            expected = (a - 1) * (b - 1)
            assert oracles.conductor_apery([a, b]) == expected, (a, b)
            assert from_generators([a, b]).conductor == expected, (a, b)
        notes.append(f"{len(pairs)} coprime pairs")


def test_criterion_3_stable_powers_and_conductor_ideal():
    family = arithmetic_family(30)
    with criterion(3, "m^n stable iff n >= u, conductor ideal = m^u, a <= 30", limit=20) as notes:
        checked = 0
        for a, r in family:
            S = arithmetic_semigroup(a, r)
            u = ceil_div(a - 1, r)
            for n in range(1, u + 4):
                stable, start = is_stable_under_normalization(max_ideal_power(S, n))
                assert stable == (n >= u), (a, r, n)
                if stable:
                    assert start == n * a
                checked += 1
            assert conductor_ideal(S) == max_ideal_power(S, u), (a, r)
            assert conductor_ideal(S).threshold == u * a
        notes.append(f"{checked} powers")
    # the stability pattern against explicit value sets, for the smaller half
    for a, r in arithmetic_family(12):
        u = ceil_div(a - 1, r)
        bound = (u + 4) * (a + r) + a
        for n in range(1, u + 4):
            E = power_values(a, r, n, bound)
            full_tail = E == set(range(n * a, bound))
            assert full_tail == (n >= u), (a, r, n)


def test_criterion_4_stability_is_full_tail():
    rng = random.Random(20)
    semigroups = []
    while len(semigroups) < 20:
        gens = sorted(rng.sample(range(3, 19), rng.randint(2, 4)))
        if math.gcd(*gens) == 1:
            semigroups.append(gens)
    with criterion(4, "stable under normalization iff the value set is a full tail") as notes:
        stable_seen = 0
        for gens in semigroups:
            S = from_generators(gens)
            c = oracles.conductor_apery(gens)
            H_members = sorted(oracles.members_sieve(gens, 4 * c + 60))
            m = min(gens)
            for _ in range(500):
                if rng.random() < 0.3:
                    start = rng.choice(H_members[: len(H_members) // 2])
                    vals = list(range(start, start + m))
                    vals = [v for v in vals if rng.random() < 0.9] or [start]
                else:
                    vals = rng.sample(H_members[1 : len(H_members) // 2], rng.randint(1, 4))
                I = ideal_from_values(S, vals)
                bound = max(vals) + c + m + 1
                E = {v + h for v in vals for h in H_members if v + h < bound}
                lo = min(E)
                full_tail = E == set(range(lo, bound))
                stable, start = is_stable_under_normalization(I)
                assert stable == full_tail, (gens, vals)
                if stable:
                    assert start == lo
                    stable_seen += 1
        assert stable_seen > 100
        notes.append(f"10000 ideals, {stable_seen} stable")


def test_criterion_5_colons_of_powers():
    family = arithmetic_family(20)
    with criterion(5, "m^p : m^q = m^(p-q), a <= 20, p <= 2u+3", limit=20) as notes:
        count = 0
        for a, r in family:
            S = arithmetic_semigroup(a, r)
            u = ceil_div(a - 1, r)
            powers = [max_ideal_power(S, n) for n in range(2 * u + 4)]
            for p in range(2 * u + 4):
                for q in range(p + 1):
                    assert colon(powers[p], powers[q]) == powers[p - q], (a, r, p, q)
                    count += 1
        notes.append(f"{count} colons")
    for a, r in arithmetic_family(6):
        u = ceil_div(a - 1, r)
        top = 2 * u + 3
        bound = (top + 2) * (a + r) + a
        H = oracles.members_sieve(range(a, a + r + 1), bound)
        E = [power_values(a, r, n, bound) for n in range(top + 1)]
        for p in range(top + 1):
            for q in range(p + 1):
                gens_q = range(q * a, q * (a + r) + 1)
                window = bound - q * (a + r)
                assert colon_values(E[p], gens_q, H, window) == {v for v in E[p - q] if v < window}


def test_criterion_6_reduction_exponent():
    family = arithmetic_family(20)
    with criterion(6, "t^a generates a reduction of m from a least exponent on") as notes:
        agree = 0
        for a, r in family:
            S = arithmetic_semigroup(a, r)
            n0 = reduction_exponent(S, a)
            for n in range(1, n0):
                assert not reduction_holds(S, a, n), (a, r, n)
            for n in range(n0, n0 + 4):
                assert reduction_holds(S, a, n), (a, r, n)
            agree += n0 == ceil_div(a - 1, r)
        notes.append(f"exponent equals ceil((a-1)/r) in {agree}/{len(family)} cases, not asserted")
    # explicit value sets for the smaller members
    for a, r in arithmetic_family(8):
        n0 = reduction_exponent(arithmetic_semigroup(a, r), a)
        for n in range(1, n0 + 3):
            bound = (n + 3) * (a + r) + 2 * a
            lhs = power_values(a, r, n + 1, bound)
            rhs = {a + v for v in power_values(a, r, n, bound) if a + v < bound}
            assert (lhs == rhs) == (n >= n0), (a, r, n)


def test_criterion_7_conductor_staircases():
    pairs = coprime_pairs()
    with criterion(7, "conductor staircases of x^a - y^b have the claimed shape") as notes:
        for a, b in pairs:
            I = staircase_of_conductor(a, b)
            assert I.ring == curve_ring(a, b, "-")
            xs = [p for p, _ in I.pairs]
            ys = [q for _, q in I.pairs]
            assert a > xs[0] and xs[-1] == 0 and all(u > v for u, v in zip(xs, xs[1:])), (a, b, I.pairs)
            assert ys[0] == 0 and ys[-1] < b and all(u < v for u, v in zip(ys, ys[1:])), (a, b, I.pairs)
            assert all(q <= b - 1 and p <= a - 1 for p, q in I.pairs)
            # x = t^b, y = t^a: the monomial values generate exactly the tail from c
            c = (a - 1) * (b - 1)
            bound = c + a * b
            H = oracles.members_sieve([a, b], bound)
            E = {b * p + a * q + h for p, q in I.pairs for h in H if b * p + a * q + h < bound}
            assert E == set(range(c, bound)), (a, b)
        notes.append(f"{len(pairs)} staircases")


def _random_inputs(count, seed):
    rng = random.Random(seed)
    return [random_staircase(rng, max_exp=12, max_gens=6) for _ in range(count)]


def test_criterion_8_reduction_engine():
    inputs = [staircase_of_conductor(a, b) for a, b in coprime_pairs()] + _random_inputs(1000, 8)
    for I in inputs[-1000:]:
        assert I.ring.x_trunc <= 12 and I.ring.relation_exp <= 12 and len(I.pairs) <= 6
    with criterion(8, "engine reaches (x, y) within a1 + bn + n steps and verifies", limit=30) as notes:
        longest = 0
        for I in inputs:
            cert = reduce_to_maximal(I)
            bound = I.pairs[0][0] + I.pairs[-1][1] + len(I.pairs)
            assert len(cert.steps) <= bound, I
            assert cert.final_ideal.pairs == ((1, 0), (0, 1)), I
            assert verify(cert).ok, I
            longest = max(longest, len(cert.steps))
        notes.append(f"{len(inputs)} inputs, longest chain {longest}")


def _forged_steps(cert):
    """Each step with its annihilator entry replaced by something that does not hold."""
    for i, step in enumerate(cert.steps):
        a = step.ring.x_trunc
        b = step.ring.y_trunc
        true = step.annihilator_check.ann_generator
        wrong = [(a - 2, 0), (0, 0), (a - 1, 1), (0, b - 1)] if step.axis == "x" else [(0, b - 2), (1, 0), (0, 0)]
        for gen in wrong:
            if gen != true and min(gen) >= 0:
                yield i, AnnihilatorCheck(gen, True)
        yield i, AnnihilatorCheck(true, False)


def _containment_forgeries():
    """Steps whose decomposition is right but whose annihilator is not inside x*J.

    I = (x y^k, y^e) = x (y^k) + (y^e), and x^(a-1) is not in (x y^k) modulo y^e.
    """
    for a, b in [(5, 3), (6, 5), (9, 7), (12, 11)]:
        R = curve_ring(a, b)
        for k in range(1, b - 1):
            for e in range(k + 1, b):
                before = normalize(R, [(1, k), (0, e)])
                J = normalize(R, [(0, k)])
                step = LemmaFourStep("x", e, truncated_ring(a, e), before, J, J, AnnihilatorCheck((a - 1, 0), True))
                yield ReductionCertificate(R, before, (step,), J)


def test_criterion_9_adversarial_verifier():
    rng = random.Random(9)
    certs = []
    while len(certs) < 100:
        cert = reduce_to_maximal(random_staircase(rng, max_exp=8, max_gens=4))
        if cert.steps:
            certs.append(cert)
    with criterion(9, "verifier rejects every semantic single-field mutation") as notes:
        assert all(verify(c).ok for c in certs)
        semantic = rejected = malformed = 0
        for cert in certs:
            for desc, mutated in single_field_mutations(serialize(cert)):
                if is_genuine(mutated):
                    continue
                semantic += 1
                try:
                    candidate = deserialize(mutated)
                except MalformedCertificate:
                    malformed += 1
                    rejected += 1
                    continue
                rejected += not verify(candidate).ok
        assert rejected == semantic
        forged = caught = 0
        for cert in certs:
            for i, check in _forged_steps(cert):
                step = dataclasses.replace(cert.steps[i], annihilator_check=check)
                steps = cert.steps[:i] + (step,) + cert.steps[i + 1 :]
                forged += 1
                caught += ANNIHILATOR in verify(dataclasses.replace(cert, steps=steps)).failed_checks()
        for cert in _containment_forgeries():
            failed = verify(cert).failed_checks()
            assert DECOMPOSITION not in failed
            forged += 1
            caught += ANNIHILATOR in failed
        assert caught == forged
        notes.append(f"{rejected}/{semantic} mutations rejected ({malformed} at parse), "
                     f"{caught}/{forged} annihilator forgeries caught")


def test_criterion_10_worked_certificate():
    frozen = (DATA / "x5_minus_y3_conductor.redcert.json").read_bytes()
    with criterion(10, "x^5 - y^3 conductor certificate is byte-identical") as notes:
        I = staircase_of_conductor(5, 3)
        assert I.ring == curve_ring(5, 3, "-")
        assert I.pairs == ((3, 0), (1, 1), (0, 2))
        cert = reduce_to_maximal(I)
        assert len(cert.steps) == 2
        assert verify(cert).ok
        assert serialize(cert) == frozen
        assert verify(deserialize(frozen)).ok
        notes.append(f"{len(frozen)} bytes")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
