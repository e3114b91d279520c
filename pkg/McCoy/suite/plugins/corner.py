# McCoy/suite/plugins/corner.py

from typing import Dict, Optional

import numpy as np

from McCoy.core.constructions import SubRing, make_corner
from McCoy.core.mccoy import Family, chooser
from McCoy.core.poly import embed_poly, enumerate_zero_pairs, poly_mul, poly_scale_right
from McCoy.core.radical import jacobson_radical
from McCoy.core.ring import INDEX, Elem, Ring, is_abelian
from McCoy.suite import SuiteContext, Validation, guarded, suite_job, summary, verdict
from McCoy.utils.messages import MSG_SKIP_FULL_CORNER, MSG_SKIP_NOT_ABELIAN

CORNER_INSTANCES = [("Z4", "1", 2), ("Prod(Z2,Z4)", "(1,0)", 2), ("Tri(Z2,2)", "[[1,0],[0,0]]", 2)]


def validate_corner(R: Ring, e: Elem, dmax: int, budget: Optional[int] = None) -> Validation:
    instance = f"{R.label}, e = {R.element_label(e)}"
    validation = Validation("corner", "eRe inherits J-McCoy; the converse holds for abelian R", [instance])

    def body() -> None:
        corner = make_corner(R, e)
        # J(eRe) = e·J(R)·e
        radical = as_sorted(R.mul_v(R.mul_v(e, as_sorted(jacobson_radical(R))), e))
        lifted = np.sort(corner.lift(as_sorted(jacobson_radical(corner))))
        validation.expect(np.array_equal(np.unique(radical), lifted), "J(eRe) differs from eJ(R)e", instance)

        lifted_pairs = lift_corner_pairs(R, corner, dmax, budget)
        validation.evidence["lifted_pairs"] = lifted_pairs
        validation.expect(lifted_pairs["lost_zero"] == 0, "a zero pair of eRe is not a zero pair in R", instance)
        validation.expect(lifted_pairs["lost_witness"] == 0, "a witness in eRe stops being a J-witness in R", instance)

        whole = verdict(R, Family.J, dmax, budget=budget)
        part = verdict(corner, Family.J, dmax, budget=budget)
        validation.evidence["ring"] = summary(whole)
        validation.evidence["corner"] = summary(part)
        if whole.holds:
            validation.expect(part.holds, "R holds but eRe has a counterexample", instance)

        if not is_abelian(R):
            validation.evidence["converse"] = MSG_SKIP_NOT_ABELIAN
            return
        if e == R.one:
            validation.evidence["converse"] = MSG_SKIP_FULL_CORNER
            return
        complement = make_corner(R, R.sub(R.one, e))
        other = verdict(complement, Family.J, dmax, budget=budget)
        validation.evidence["complement"] = summary(other)
        if part.holds and other.holds:
            validation.expect(whole.holds, "both corners hold but R has a counterexample", instance)

    return guarded(validation, body)


def lift_corner_pairs(R: Ring, corner: SubRing, dmax: int, budget: Optional[int] = None) -> Dict[str, int]:
    """Push zero pairs of eRe and their witnesses into R.

    J(eRe) = eJ(R)e sits inside J(R), so a corner witness stays admissible.
    """
    radical = jacobson_radical(R)
    pick = chooser(corner, Family.J)
    counts = {"pairs": 0, "lost_zero": 0, "lost_witness": 0}
    for pair in enumerate_zero_pairs(corner, dmax, budget):
        f, g = (embed_poly(p, R, corner.lift_one) for p in (pair.f, pair.g))
        counts["pairs"] += 1
        counts["lost_zero"] += not poly_mul(f, g).is_zero
        r = pick.least(pair.f.coeffs)
        if r is not None:
            scaled = poly_scale_right(f, corner.lift_one(r))
            counts["lost_witness"] += any(a not in radical for a in scaled.coeffs)
    return counts


def as_sorted(members) -> np.ndarray:
    """Sorted index array from a set, list, scalar or array of elements."""
    if isinstance(members, np.ndarray):
        members = members.ravel().tolist()
    elif isinstance(members, (int, np.integer)):
        members = [members]
    return np.fromiter(sorted(int(x) for x in members), dtype=INDEX)


@suite_job(60)
def validate_corners(context: SuiteContext) -> Validation:
    validation = Validation("corners", "Corner rings eRe against their ambient ring")

    def body() -> None:
        for expr, label, dmax in CORNER_INSTANCES:
            R = context.ring(expr)
            validation.merge(validate_corner(R, R.index_of(label), dmax, context.budget), f"{expr}:{label}")

    return guarded(validation, body)
