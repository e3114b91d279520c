# McCoy/suite/plugins/baseline.py

from McCoy.core.mccoy import Family
from McCoy.core.ring import is_commutative
from McCoy.suite import SuiteContext, Validation, guarded, suite_job, summary, verdict

COMMUTATIVE_RINGS = ["Z2", "Z4", "Z6", "TruncSeries(Z2,3)"]


@suite_job(20)
def validate_commutative_baseline(context: SuiteContext, dmax: int = 2) -> Validation:
    validation = Validation("commutative_baseline", "Every commutative ring is right McCoy")

    def body() -> None:
        for expr in COMMUTATIVE_RINGS:
            R = context.ring(expr)
            validation.instances.append(expr)
            validation.expect(is_commutative(R), "instance is not commutative", expr)
            v = verdict(R, Family.MCCOY, dmax, budget=context.budget)
            validation.evidence[expr] = summary(v)
            validation.expect(v.holds, f"McCoy counterexample {v.counterexample and v.counterexample.to_dict()}", expr)

    return guarded(validation, body)
