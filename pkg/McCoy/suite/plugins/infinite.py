# McCoy/suite/plugins/infinite.py

from McCoy.suite import SuiteContext, Validation, suite_job
from McCoy.utils.messages import MSG_SKIP_INFINITE


def _out_of_scope(name: str, claim: str) -> Validation:
    return Validation(name, claim).skip(MSG_SKIP_INFINITE)


@suite_job(160)
def validate_sequence_rings(context: SuiteContext) -> Validation:
    return _out_of_scope("sequence_rings", "Eventually constant sequence rings R(D, C) are J-McCoy exactly when D and C are")


@suite_job(161)
def validate_polynomial_extension(context: SuiteContext) -> Validation:
    return _out_of_scope("polynomial_extension", "R[x] is J-McCoy exactly when R is")


@suite_job(162)
def validate_laurent_extension(context: SuiteContext) -> Validation:
    return _out_of_scope("laurent_extension", "R[x, x^-1] is J-McCoy exactly when R is")
