# McCoy/suite/plugins/observations.py

from typing import Optional

from McCoy.core.mccoy import Family, implication_audit
from McCoy.core.radical import is_reduced
from McCoy.core.ring import Ring
from McCoy.suite import SuiteContext, Validation, guarded, suite_job, summary, verdict
from McCoy.utils.messages import MSG_SKIP_INCONCLUSIVE

TRIANGULAR_NC = [("Tri(Z2,2)", 2), ("Tri(Z3,2)", 1)]
MATRIX_NC = [("Mat(Z2,2)", 2)]
AUDIT_RINGS = ["Z2", "Z4", "Z6", "TruncSeries(Z2,3)", "Tri(Z2,2)", "Mat(Z2,2)", "S(Z2,2)"]


def validate_triangular_nc(R: Ring, dmax: int, budget: Optional[int] = None) -> Validation:
    validation = Validation("triangular_nc", "Upper triangular matrices over a reduced ring are NC-McCoy", [R.label])

    def body() -> None:
        v = verdict(R, Family.NC, dmax, budget=budget)
        validation.evidence["verdict"] = summary(v)
        validation.expect(v.holds, "upper triangular ring has an NC counterexample", R.label)

    return guarded(validation, body)


def validate_matrix_not_nc(R: Ring, dmax: int, budget: Optional[int] = None) -> Validation:
    validation = Validation("matrix_not_nc", "Full matrix rings over a reduced ring are not NC-McCoy", [R.label])

    def body() -> None:
        v = verdict(R, Family.NC, dmax, budget=budget)
        validation.evidence["verdict"] = summary(v)
        if v.holds:
            validation.skip(MSG_SKIP_INCONCLUSIVE.format(dmax=dmax))

    return guarded(validation, body)


def validate_audit(R: Ring, dmax: int, budget: Optional[int] = None) -> Validation:
    """McCoy ⊆ NC ⊆ J per pair; on J-semisimple rings J-McCoy collapses to McCoy."""
    validation = Validation("implication_audit", "McCoy implies NC-McCoy implies J-McCoy", [R.label])

    def body() -> None:
        audit = implication_audit(R, dmax, budget=budget)
        validation.evidence["audit"] = audit.to_dict()
        outcomes = {family: audit.outcome(family) for family in Family}
        if outcomes[Family.MCCOY] != "Counterexample":
            validation.expect(outcomes[Family.J] != "Counterexample", "McCoy holds but J-McCoy fails", R.label)
        if audit.j_semisimple:
            validation.expect(outcomes[Family.MCCOY] == outcomes[Family.J], "J-semisimple ring separates McCoy from J-McCoy", R.label)
        if audit.nilpotents_in_radical and outcomes[Family.NC] != "Counterexample":
            validation.expect(outcomes[Family.J] != "Counterexample", "NC-McCoy holds but J-McCoy fails", R.label)
        validation.evidence["reduced"] = is_reduced(R)

    return guarded(validation, body)


@suite_job(140)
def validate_nc_observations(context: SuiteContext) -> Validation:
    validation = Validation("nc_observations", "NC-McCoy on triangular and full matrix rings")

    def body() -> None:
        for expr, dmax in TRIANGULAR_NC:
            validation.merge(validate_triangular_nc(context.ring(expr), dmax, context.budget), expr)
        for expr, dmax in MATRIX_NC:
            validation.merge(validate_matrix_not_nc(context.ring(expr), dmax, context.budget), expr)

    return guarded(validation, body)


@suite_job(141)
def validate_implication_audits(context: SuiteContext, dmax: int = 1) -> Validation:
    validation = Validation("implication_audits", "Witness-set containments across the property families")

    def body() -> None:
        for expr in AUDIT_RINGS:
            validation.merge(validate_audit(context.ring(expr), dmax, context.budget), expr)

    return guarded(validation, body)
