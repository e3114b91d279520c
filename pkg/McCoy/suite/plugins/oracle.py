# McCoy/suite/plugins/oracle.py

from typing import Optional

from McCoy.core.poly import enumerate_zero_pairs, naive_zero_pairs
from McCoy.core.ring import Ring
from McCoy.suite import SuiteContext, Validation, guarded, suite_job

SMALL_RINGS = [
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8",
    "Prod(Z2,Z2)", "Prod(Z2,Z4)", "TruncSeries(Z2,2)", "TruncSeries(Z2,3)",
    "Tri(Z2,2)", "S(Z2,2)", "T(Z2,3)", "Opp(Tri(Z2,2))", "Quot(Tri(Z2,2),{[[0,1],[0,0]]})",
]


def validate_oracle(R: Ring, dmax: int, budget: Optional[int] = None) -> Validation:
    validation = Validation("oracle", "Pruned zero-pair search equals the unpruned double loop", [f"{R.label}@{dmax}"])

    def body() -> None:
        pruned = [(p.f.coeffs, p.g.coeffs) for p in enumerate_zero_pairs(R, dmax, budget)]
        naive = [(p.f.coeffs, p.g.coeffs) for p in naive_zero_pairs(R, dmax)]
        validation.evidence["pairs"] = len(pruned)
        validation.expect(pruned == naive, f"pruned {len(pruned)} pairs vs naive {len(naive)}", f"{R.label}@{dmax}")
        validation.expect(len(set(pruned)) == len(pruned), "pruned search repeats a pair", f"{R.label}@{dmax}")

    return guarded(validation, body)


@suite_job(130)
def validate_oracles(context: SuiteContext, dmax: int = 2) -> Validation:
    validation = Validation("oracle_equivalence", "Pruned and naive enumeration agree on every ring of order ≤ 8")

    def body() -> None:
        for expr in SMALL_RINGS:
            R = context.ring(expr)
            for degree in range(dmax + 1):
                validation.merge(validate_oracle(R, degree, context.budget), f"{expr}@{degree}")

    return guarded(validation, body)
