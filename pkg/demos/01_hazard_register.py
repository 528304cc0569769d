"""
Scoring a UAV hazard register
=============================

Walk through the qualitative track: load the packaged hazard register,
score each record on the probability and severity matrix, and check the
performance levels required of the safeguards.
"""

# The packaged register ships with the library, so no paths are needed.
from aerorisk import fixtures
from aerorisk.hazards import (
    MeasureCategory,
    plr_lookup,
    risk_matrix_lookup,
    validate_registry,
)

registry = fixtures.default_registry()
print(f"loaded {len(registry)} hazard records")

# Score every record on the 5 x 4 matrix. The recorded level in the
# register must agree with the lookup; validate_registry checks the same
# thing (and more) in bulk.
print("\nID  probability   severity      scored level")
for record in registry:
    level = risk_matrix_lookup(record.probability, record.severity)
    print(
        f"{record.id:>2}  {record.probability.value:<12} "
        f"{record.severity.value:<12}  {level.value}"
    )

# Safeguarding measures carry an S/F/P triple. The risk graph turns the
# triple into a required performance level for the safety function.
print("\nrequired performance levels")
for record in registry:
    for measure in record.measures:
        if measure.category is MeasureCategory.SAFEGUARDING and measure.sfp:
            triple = measure.sfp
            plr = plr_lookup(triple)
            print(
                f"hazard {record.id}: ({triple.severity.value}, "
                f"{triple.frequency.value}, {triple.avoidance.value}) "
                f"-> PLr {plr.value}  [{measure.description}]"
            )

# A clean register produces no violations. Corrupt a field to see the
# validator name the exact problem.
violations = validate_registry(registry)
print(f"\nviolations in the packaged register: {len(violations)}")

import dataclasses

broken = [dataclasses.replace(registry[0], risk_level=registry[6].risk_level)]
for violation in validate_registry(broken):
    print(f"found: [{violation.code}] {violation.message}")
