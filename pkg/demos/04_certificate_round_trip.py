"""
Certificates on disk
====================

Reduction certificates serialize to canonical JSON.  The verifier re-checks
every step from scratch and says which check failed.
"""

import dataclasses
import tempfile
from pathlib import Path

from staircase_kit import deserialize, load, reduce_to_maximal, save, serialize, staircase_of_conductor, verify
from staircase_kit.certify import AnnihilatorCheck

cert = reduce_to_maximal(staircase_of_conductor(7, 4))
data = serialize(cert)
print(data.decode()[:400], "...")

# same bytes every time, and a lossless round trip
print(serialize(reduce_to_maximal(staircase_of_conductor(7, 4))) == data)
print(deserialize(data) == cert)

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "x7_minus_y4.redcert.json"
    save(cert, path)
    print(path.name, path.stat().st_size, "bytes", load(path) == cert)

###############################################################################
# Tampering
# ---------
# Claim a different annihilator generator in the first step.

step = cert.steps[0]
forged = dataclasses.replace(step, annihilator_check=AnnihilatorCheck((0, 0), True))
bad = dataclasses.replace(cert, steps=(forged,) + cert.steps[1:])
report = verify(bad)
print(report)
for failure in report.failures():
    print("  ", failure)

# Drop a step: the chain no longer links up.
print(verify(dataclasses.replace(cert, steps=cert.steps[1:])))
