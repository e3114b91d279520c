# McCoy/suite/plugins/series_matrix.py

from typing import Optional, Tuple

import numpy as np

from McCoy.core.constructions import MatrixRing, SubRing, make_matrix, make_subring, make_trunc_series, make_zmod
from McCoy.core.mccoy import Family, admissible_witnesses
from McCoy.core.poly import Poly, poly_mul
from McCoy.core.radical import in_jacobson
from McCoy.core.ring import INDEX
from McCoy.suite import SuiteContext, Status, Validation, guarded, suite_job, summary, verdict
from McCoy.utils.messages import MSG_SIZE_ARG, MSG_SKIP_BUDGET, MSG_SKIP_TRUNCATION
from McCoy.utils.exceptions import BudgetExceeded


def series_matrix_ring(m: int) -> Tuple[SubRing, MatrixRing]:
    """Subring of M_3(Z2[t]/(t^m)) generated by the t-multiples of the top-left 2x2
    block and the scalar matrices."""
    series = make_trunc_series(make_zmod(2), m)
    ambient = make_matrix(series, 3)
    t = series.element([0, 1] + [0] * (m - 2))
    gens = [ambient.unit_matrix(i, j, t) for i in range(2) for j in range(2)]
    ring = make_subring(ambient, gens, label=f"SeriesMatrix(Z2,{m})")
    return ring, ambient


def normal_form_count(ring: SubRing, ambient: MatrixRing) -> int:
    """Members of the form (a+f1)e11 + f2e12 + f3e21 + (a+f4)e22 + a·e33, f_i ∈ tF[t]."""
    series = ambient.base
    entries = ambient.unpack(ring.members)
    constant = [series.unpack(entry)[0] for entry in entries]
    a = constant[ambient.entry(2, 2)]
    ok = entries[ambient.entry(2, 2)] == series.pack([a] + [np.zeros_like(a)] * (series.length - 1))
    ok &= constant[ambient.entry(0, 0)] == a
    ok &= constant[ambient.entry(1, 1)] == a
    ok &= constant[ambient.entry(0, 1)] == 0
    ok &= constant[ambient.entry(1, 0)] == 0
    for i, j in ((0, 2), (1, 2), (2, 0), (2, 1)):
        ok &= entries[ambient.entry(i, j)] == 0
    return int(ok.sum())


def example_pair(ring: SubRing, ambient: MatrixRing) -> Tuple[Poly, Poly, int]:
    """f = tE11 + tE12·x + tE21·x² + tE22·x³, g = -t(E21+E22) + t(E11+E12)·x, c = tE11."""
    series = ambient.base
    t = series.element([0, 1] + [0] * (series.length - 2))

    def tE(i: int, j: int) -> int:
        return ambient.unit_matrix(i, j, t)

    f = [tE(0, 0), tE(0, 1), tE(1, 0), tE(1, 1)]
    g = [ambient.neg(ambient.add(tE(1, 0), tE(1, 1))), ambient.add(tE(0, 0), tE(0, 1))]
    inside = [ring.index_in(x) for x in f + g + [tE(0, 0)]]
    return Poly(ring, tuple(inside[:4])), Poly(ring, tuple(inside[4:6])), inside[6]


def validate_series_matrix_example(m: int, dmax: int, budget: Optional[int] = None) -> Validation:
    validation = Validation(
        "series_matrix_example",
        "The subring of M_3(F[[t]]) generated by tF-blocks and scalars is right J-McCoy with witness tE11",
        [f"M_3(Z2[t]/(t^{m}))"],
    )
    if m < 2:
        return validation.skip(MSG_SIZE_ARG.format(construction="series matrix example", name="m", minimum=2, value=m))

    def body() -> None:
        ring, ambient = series_matrix_ring(m)
        expected = 2 * 2 ** (4 * (m - 1))
        count = normal_form_count(ring, ambient)
        validation.evidence["order"] = ring.order
        validation.evidence["normal_form"] = count
        validation.expect(count == ring.order == expected, f"normal form covers {count} of {ring.order}, expected {expected}", ring.label)

        f, g, c = example_pair(ring, ambient)
        validation.evidence["f"], validation.evidence["g"] = f.labels(), g.labels()
        validation.expect(poly_mul(f, g).is_zero, "f·g is not zero", ring.label)

        validation.evidence["c"] = ring.element_label(c)
        validation.expect(all(in_jacobson(ring, ring.mul(a, c)) for a in f.coeffs), "some M_i·c is outside J(R)", ring.label)
        products = np.unique(ring.mul_v(np.arange(ring.order, dtype=INDEX), c))
        validation.evidence["right_multiples_of_c"] = int(products.size)
        validation.expect(all(in_jacobson(ring, int(p)) for p in products), "R·c is not inside J(R)", ring.label)
        if ring.materialized:
            validation.expect(c in admissible_witnesses(f, Family.J), "c is not an admissible J-witness", ring.label)

        try:
            v = verdict(ring, Family.J, dmax, budget=budget)
        except BudgetExceeded as e:
            validation.evidence["j_mccoy"] = MSG_SKIP_BUDGET.format(reason=e)
            validation.reason = f"J-McCoy search skipped: {MSG_SKIP_BUDGET.format(reason=e)}"
            return
        validation.evidence["j_mccoy"] = summary(v)
        validation.expect(v.holds, f"J-McCoy counterexample {v.counterexample and v.counterexample.to_dict()}", ring.label)

    return guarded(validation, body)


@suite_job(90)
def validate_series_matrix(context: SuiteContext, dmax: int = 1) -> Validation:
    validation = Validation("series_matrix", "Series-matrix example at the configured and the smallest truncation")

    def body() -> None:
        for m in sorted({context.truncation, 2}, reverse=True):
            validation.merge(validate_series_matrix_example(m, dmax, context.budget), f"m={m}")

    return guarded(validation, body)


@suite_job(91)
def validate_series_matrix_not_nc(context: SuiteContext) -> Validation:
    return Validation(
        "series_matrix_not_nc_mccoy",
        "The series-matrix ring is not right NC-McCoy",
        [f"M_3(Z2[t]/(t^{context.truncation}))"],
        status=Status.SKIPPED,
        reason=MSG_SKIP_TRUNCATION,
    )
