# McCoy/suite/plugins/quotient.py

from typing import Optional

import numpy as np

from McCoy.core.constructions import make_quotient
from McCoy.core.mccoy import Family, Side
from McCoy.core.radical import jacobson_radical
from McCoy.core.ring import Ideal, Ring
from McCoy.suite import SuiteContext, Validation, guarded, suite_job, summary, verdict
from McCoy.utils.messages import MSG_SKIP_NOT_IN_J


def validate_quotient(R: Ring, I: Ideal, dmax: int, budget: Optional[int] = None) -> Validation:
    """A quotient by an ideal inside the radical carries J-McCoy back up to the ring."""
    instance = f"{R.label} / {{{','.join(R.format_set(I.members))}}}"
    validation = Validation("quotient", "If I ⊆ J(R) and R/I is J-McCoy, then R is J-McCoy", [instance])
    if not I.members <= jacobson_radical(R):
        return validation.skip(MSG_SKIP_NOT_IN_J)

    def body() -> None:
        Q = make_quotient(R, I)
        projection = Q.projection()
        projection.verify()
        image = projection.cached_array()
        validation.expect(len(np.unique(image)) == Q.order, "projection is not surjective", instance)
        kernel = frozenset(np.nonzero(image == Q.zero)[0].tolist())
        validation.expect(kernel == I.members, "projection kernel differs from the ideal", instance)
        for side in Side:
            top, bottom = verdict(Q, Family.J, dmax, side, budget), verdict(R, Family.J, dmax, side, budget)
            validation.evidence[f"{side.value}_quotient"] = summary(top)
            validation.evidence[f"{side.value}_ring"] = summary(bottom)
            validation.expect(
                not (top.holds and not bottom.holds),
                f"{side.value}: R/I holds up to degree {dmax} but R has counterexample {bottom.counterexample and bottom.counterexample.to_dict()}",
                instance,
            )

    return guarded(validation, body)


@suite_job(30)
def validate_quotients(context: SuiteContext) -> Validation:
    validation = Validation("quotients", "Quotients by ideals inside the radical")

    def body() -> None:
        for expr, gens, dmax in (("Z4", ["2"], 2), ("Tri(Z2,2)", [], 2), ("Tri(Z2,2)", None, 2)):
            R = context.ring(expr)
            if gens is None:
                ideal = Ideal(R, jacobson_radical(R))
            else:
                ideal = Ideal.generated(R, [R.index_of(g) for g in gens])
            validation.merge(validate_quotient(R, ideal, dmax, context.budget), f"{expr}/{sorted(ideal.members)}")

    return guarded(validation, body)
