# McCoy/suite/plugins/local.py

from typing import Optional

from McCoy.core.mccoy import Family, Side
from McCoy.core.ring import Ring, is_local
from McCoy.suite import SuiteContext, Validation, guarded, suite_job, summary, verdict
from McCoy.utils.messages import MSG_SKIP_NOT_LOCAL

LOCAL_RINGS = ["Z4", "Z8", "TruncSeries(Z2,3)"]


def validate_local(R: Ring, dmax: int, budget: Optional[int] = None) -> Validation:
    validation = Validation("local", "Every local ring is J-McCoy", [R.label])
    if not is_local(R):
        return validation.skip(MSG_SKIP_NOT_LOCAL)

    def body() -> None:
        for side in Side:
            v = verdict(R, Family.J, dmax, side, budget)
            validation.evidence[side.value] = summary(v)
            validation.expect(v.holds, f"{side.value} J-McCoy counterexample {v.counterexample and v.counterexample.to_dict()}", R.label)

    return guarded(validation, body)


@suite_job(40)
def validate_local_rings(context: SuiteContext, dmax: int = 2) -> Validation:
    validation = Validation("local_rings", "Local rings hold J-McCoy on both sides")

    def body() -> None:
        for expr in LOCAL_RINGS:
            validation.merge(validate_local(context.ring(expr), dmax, context.budget), expr)

    return guarded(validation, body)
