# McCoy/suite/plugins/localization.py

from McCoy.core.radical import units
from McCoy.core.ring import Ring, center, regular_elements
from McCoy.suite import SuiteContext, Validation, guarded, suite_job

LOCALIZATION_RINGS = {"Z6": ["1", "5"], "Z2": ["1"], "Mat(Z2,2)": ["[[1,0],[0,1]]"]}


def validate_localization(R: Ring) -> Validation:
    """Central regular elements of a finite ring are units, so RS^-1 ≅ R."""
    validation = Validation("localization", "Localizing at central regular elements preserves J-McCoy", [R.label])
    central_regular = center(R) & regular_elements(R)
    validation.evidence["central_regular"] = R.format_set(central_regular)
    validation.expect(central_regular <= units(R), "a central regular element is not a unit", R.label)
    validation.expect(central_regular == center(R) & units(R), "central units and central regular elements differ", R.label)
    validation.evidence["localization"] = "isomorphic to the ring itself"
    return validation


@suite_job(110)
def validate_localizations(context: SuiteContext) -> Validation:
    validation = Validation("localizations", "Localization is trivial on finite rings")

    def body() -> None:
        for expr, expected in LOCALIZATION_RINGS.items():
            R = context.ring(expr)
            sub = validate_localization(R)
            sub.expect(sub.evidence["central_regular"] == expected,
                       f"central regular elements {sub.evidence['central_regular']}, expected {expected}", expr)
            validation.merge(sub, expr)

    return guarded(validation, body)
