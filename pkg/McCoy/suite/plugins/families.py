# McCoy/suite/plugins/families.py

from typing import Dict, Optional

from McCoy.core.constructions import (
    corner_unit,
    make_A,
    make_B,
    make_S,
    make_skew_tri,
    make_T,
    make_trunc_series,
)
from McCoy.core.mccoy import Family, chooser
from McCoy.core.poly import PairSearch, check_search_budget, poly_count
from McCoy.core.ring import Ring, RingMap, check_isomorphism
from McCoy.suite import SuiteContext, Validation, guarded, suite_job, summary, verdict
from McCoy.utils.exceptions import BudgetExceeded, ConstructionError
from McCoy.utils.messages import MSG_SKIP_BUDGET
from McCoy.vars import Var

# suite instances above this many partial products are reported as refused
FAMILY_SEARCH_BUDGET = 5 * 10**7

FAMILY_INSTANCES = [("Z2", 2, None, 1), ("Z2", 3, None, 1), ("Prod(Z2,Z2)", 2, "swap", 1), ("Z2", 4, None, 1)]


def corner_witness_everywhere(R: Ring, dmax: int, budget: Optional[int] = None) -> Dict[str, int]:
    """Counts zero pairs for which E_1n is not an admissible J-witness."""
    e1n = corner_unit(R)
    check_search_budget(R, dmax, budget)
    search = R.cached(("pair_search", dmax), lambda: PairSearch(R, dmax))
    pick = chooser(R, Family.J)
    pairs = misses = 0
    for f, gs in search.block(0, poly_count(R.order, dmax)):
        pairs += len(gs)
        if e1n is None or not pick.admissible(f)[e1n]:
            misses += len(gs)
    return {"pairs": pairs, "misses": misses}


def _builders(base: Ring, n: int, sigma: Optional[RingMap]):
    yield "Tri", lambda: make_skew_tri(base, n, sigma)
    yield "S", lambda: make_S(base, n, sigma)
    yield "T", lambda: make_T(base, n, sigma)
    yield "A", lambda: make_A(base, n, sigma)
    if n >= 4 and n % 2 == 0:
        yield "B", lambda: make_B(base, n, sigma)


def check_polynomial_model(base: Ring, n: int, T: Ring) -> RingMap:
    """T(R, n) ≅ R[x]/(x^n) through the first row of each matrix."""
    model = make_trunc_series(base, n)
    return check_isomorphism(T, model, [model.index_of(T.element_label(x)) for x in range(T.order)], name="first-row")


def validate_families(base: Ring, n: int, sigma: Optional[RingMap], dmax: int, budget: Optional[int] = None) -> Validation:
    tag = f"({base.label},{n}{',' + sigma.name if sigma is not None and not sigma.is_identity else ''})"
    validation = Validation(
        "families",
        "Skew triangular rings and their S, T, A, B subrings are right J-McCoy with witness E_1n",
    )
    budget = min(budget or Var.SEARCH_BUDGET, FAMILY_SEARCH_BUDGET)
    refused, checked = [], 0
    for family, build in _builders(base, n, sigma):
        instance = f"{family}{tag}"
        try:
            R = build()
            validation.instances.append(R.label)
            v = verdict(R, Family.J, dmax, budget=budget)
            coverage = corner_witness_everywhere(R, dmax, budget)
        except (BudgetExceeded, ConstructionError) as e:
            refused.append(instance)
            validation.evidence[instance] = {"refused": MSG_SKIP_BUDGET.format(reason=e)}
            continue
        checked += 1
        validation.evidence[instance] = {**summary(v), "corner_witness": coverage}
        validation.expect(v.holds, f"J-McCoy counterexample {v.counterexample and v.counterexample.to_dict()}", R.label)
        validation.expect(coverage["misses"] == 0, f"E_1n fails as a witness for {coverage['misses']} pairs", R.label)
        if family == "T" and (sigma is None or sigma.is_identity) and base.order ** n <= Var.MATERIALIZE_CAP:
            try:
                check_polynomial_model(base, n, R)
                validation.evidence[instance]["polynomial_model"] = f"TruncSeries({base.label},{n})"
            except ConstructionError as e:
                validation.fail(f"T(R,n) is not R[x]/(x^n): {e}", R.label)
    if refused:
        validation.evidence["refused"] = refused
        if not checked:
            validation.skip(f"every family refused for {tag}")
        elif validation.ok:
            validation.reason = f"refused by budget: {', '.join(refused)}"
    return validation


@suite_job(70)
def validate_triangular_families(context: SuiteContext) -> Validation:
    validation = Validation("triangular_families", "Skew triangular families over desk base rings")

    def body() -> None:
        for base_expr, n, sigma_name, dmax in FAMILY_INSTANCES:
            base = context.ring(base_expr)
            sigma = context.evaluator.registry.sigma(sigma_name, base) if sigma_name else None
            validation.merge(validate_families(base, n, sigma, dmax, context.budget), f"{base_expr},{n},{sigma_name or 'id'}")

    return guarded(validation, body)
