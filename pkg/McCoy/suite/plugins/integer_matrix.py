# McCoy/suite/plugins/integer_matrix.py

from typing import List, Optional, Tuple

import numpy as np

from McCoy.core.mccoy import Family
from McCoy.core.radical import is_j_semisimple
from McCoy.core.ring import Ring
from McCoy.suite import SuiteContext, Validation, guarded, suite_job, summary, verdict
from McCoy.utils.messages import MSG_SKIP_INCONCLUSIVE

MatrixPoly = List[np.ndarray]


def unit(i: int, j: int, n: int = 3) -> np.ndarray:
    m = np.zeros((n, n), dtype=object)
    m[i, j] = 1
    return m


def matrix_poly_mul(f: MatrixPoly, g: MatrixPoly) -> MatrixPoly:
    """Exact product over Z with Python integers."""
    n = f[0].shape[0]
    out = [np.zeros((n, n), dtype=object) for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a.dot(b)
    return out


def ones_row(i: int) -> np.ndarray:
    return sum((unit(i, j) for j in range(3)), np.zeros((3, 3), dtype=object))


def integer_pair() -> Tuple[MatrixPoly, MatrixPoly]:
    """f has x^(3i+j) in entry (i, j); g = (x x x; -1 -1 -1; 0 0 0)."""
    f = [unit(k // 3, k % 3) for k in range(9)]
    g = [-ones_row(1), ones_row(0)]
    return f, g


def _nonzero_terms(poly: MatrixPoly) -> List[int]:
    return [k for k, c in enumerate(poly) if any(int(v) != 0 for v in c.flat)]


def search_matrix_surrogate(R: Ring, dmax: int = 3, budget: Optional[int] = None) -> Validation:
    """M_2(Z2) stands in for M_3(Z): J = 0 there, so J-McCoy is McCoy."""
    validation = Validation("matrix_surrogate", "A matrix ring over a J-McCoy ring need not be right J-McCoy", [R.label])

    def body() -> None:
        validation.expect(is_j_semisimple(R), "surrogate has a nonzero radical", R.label)
        for degree in (dmax, dmax + 1):
            v = verdict(R, Family.J, degree, budget=budget)
            validation.evidence[f"degree_{degree}"] = summary(v)
            if not v.holds:
                plain = verdict(R, Family.MCCOY, degree, budget=budget)
                validation.expect(not plain.holds, "J-semisimple ring with differing McCoy and J-McCoy verdicts", R.label)
                return
        validation.skip(MSG_SKIP_INCONCLUSIVE.format(dmax=dmax + 1))

    return guarded(validation, body)


def validate_integer_matrix_identity(surrogate: Optional[Ring] = None, budget: Optional[int] = None) -> Validation:
    validation = Validation("integer_matrix_identity", "The 3x3 integer matrix pair multiplies to zero", ["M_3(Z)"])
    f, g = integer_pair()
    fg, gf = matrix_poly_mul(f, g), matrix_poly_mul(g, f)
    validation.evidence["fg_nonzero_terms"] = _nonzero_terms(fg)
    validation.evidence["gf_nonzero_terms"] = _nonzero_terms(gf)
    validation.expect(not _nonzero_terms(fg), "f·g is not zero over Z", "M_3(Z)")
    validation.evidence["unbounded_claim"] = "not machine-checkable over Z; delegated to the finite surrogate"
    if surrogate is not None:
        validation.merge(search_matrix_surrogate(surrogate, budget=budget), "surrogate")
    return validation


@suite_job(100)
def validate_integer_matrix(context: SuiteContext) -> Validation:
    validation = Validation("integer_matrix", "Integer matrix identity and its finite surrogate")
    return guarded(validation, lambda: validation.merge(
        validate_integer_matrix_identity(context.ring("Mat(Z2,2)"), context.budget), "M_3(Z)"))
