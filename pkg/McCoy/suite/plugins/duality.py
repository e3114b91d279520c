# McCoy/suite/plugins/duality.py

from typing import Optional

from McCoy.core.constructions import make_opposite
from McCoy.core.mccoy import Family, PropertyKind, Side, check_property
from McCoy.core.ring import Ring
from McCoy.suite import SuiteContext, Validation, guarded, suite_job

DUALITY_INSTANCES = [
    ("Z2", Family.MCCOY, 2), ("Z4", Family.MCCOY, 2), ("Z6", Family.MCCOY, 2), ("TruncSeries(Z2,3)", Family.MCCOY, 2),
    ("Z8", Family.J, 2), ("Tri(Z2,2)", Family.J, 1), ("S(Z2,2)", Family.J, 1), ("T(Z2,3)", Family.J, 1),
    ("SkewTri(Prod(Z2,Z2),2,swap)", Family.J, 1), ("Mat(Z2,2)", Family.MCCOY, 1),
]


def validate_duality(R: Ring, family: Family, dmax: int, budget: Optional[int] = None) -> Validation:
    """Left verdicts on R against right verdicts on a freshly built opposite ring."""
    validation = Validation("duality", "Left properties of R are right properties of its opposite", [R.label])

    def body() -> None:
        left = check_property(R, PropertyKind(family, Side.LEFT), dmax, workers=1, budget=budget)
        right = check_property(make_opposite(R), PropertyKind(family, Side.RIGHT), dmax, workers=1, budget=budget)
        validation.evidence.update({"left": left.outcome, "right_on_opposite": right.outcome, "pairs": left.pairs_examined})
        validation.expect(left.outcome == right.outcome, "outcomes differ", R.label)
        validation.expect(left.pairs_examined == right.pairs_examined, "examined pair counts differ", R.label)
        mirrored = {(p.g.coeffs, p.f.coeffs): r for p, r in left.witness_log.items()}
        direct = {(p.f.coeffs, p.g.coeffs): r for p, r in right.witness_log.items()}
        validation.expect(mirrored == direct, "witness logs differ pair-for-pair", R.label)
        if not left.holds:
            swapped = (left.counterexample.g.coeffs, left.counterexample.f.coeffs)
            validation.expect(swapped == (right.counterexample.f.coeffs, right.counterexample.g.coeffs),
                              "counterexamples differ", R.label)

    return guarded(validation, body)


@suite_job(120)
def validate_dualities(context: SuiteContext) -> Validation:
    validation = Validation("dualities", "Left/right duality through the opposite ring")

    def body() -> None:
        for expr, family, dmax in DUALITY_INSTANCES:
            validation.merge(validate_duality(context.ring(expr), family, dmax, context.budget), f"{expr}:{family.value}")

    return guarded(validation, body)
