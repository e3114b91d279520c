# McCoy/suite/plugins/radical_oracle.py

from McCoy.core.constructions import opposite
from McCoy.core.radical import block_radical, jacobson_radical, nilpotents, units
from McCoy.core.ring import idempotents, is_commutative
from McCoy.suite import SuiteContext, Validation, guarded, suite_job

# expression -> expected radical labels
KNOWN_RADICALS = {
    "Z4": ["0", "2"],
    "Z6": ["0"],
    "Mat(Z2,2)": ["[[0,0],[0,0]]"],
    "Tri(Z2,2)": ["[[0,0],[0,0]]", "[[0,1],[0,0]]"],
}

BLOCK_INSTANCES = ["Triangular(Z2,Z2,regular)", "Triangular(Z4,Z2,canonical)"]


def radical_invariants(R, validation: Validation) -> None:
    J = jacobson_radical(R)
    validation.expect(not (J & units(R)), "radical meets the units", R.label)
    validation.expect(not (J & (idempotents(R) - {R.zero})), "radical holds a nonzero idempotent", R.label)
    validation.expect(jacobson_radical(opposite(R)) == J, "radical differs from that of the opposite ring", R.label)
    if is_commutative(R):
        validation.expect(nilpotents(R) <= J, "commutative ring with a nilpotent outside the radical", R.label)


@suite_job(10)
def validate_radical_oracle(context: SuiteContext) -> Validation:
    validation = Validation(
        "radical_oracle",
        "Quasi-regularity scan reproduces the known radicals and the triangular block formula",
    )

    def body() -> None:
        for expr, expected in KNOWN_RADICALS.items():
            R = context.ring(expr)
            validation.instances.append(expr)
            found = R.format_set(jacobson_radical(R))
            validation.evidence[expr] = found
            validation.expect(found == expected, f"J({expr}) = {found}, expected {expected}", expr)
            radical_invariants(R, validation)
        for expr in BLOCK_INSTANCES:
            T = context.ring(expr)
            validation.instances.append(expr)
            validation.expect(jacobson_radical(T) == block_radical(T), "radical differs from the block formula", expr)
            radical_invariants(T, validation)
        # the regular triangular ring over Z2 is T_2(Z2)
        T, tri = context.ring("Triangular(Z2,Z2,regular)"), context.ring("Tri(Z2,2)")
        validation.expect(len(jacobson_radical(T)) == len(jacobson_radical(tri)) == 2,
                          "block radical and triangular radical sizes disagree", "Tri(Z2,2)")

    return guarded(validation, body)
