# McCoy/suite/plugins/packing.py

from collections import Counter
from itertools import islice
from typing import List, Optional

from McCoy.core.poly import Poly, enumerate_zero_pairs, iter_polys, pack_coefficients, poly_add, poly_mul
from McCoy.core.ring import Ring
from McCoy.suite import SuiteContext, Validation, guarded, suite_job

PACKING_RINGS = ["Z4", "Tri(Z2,2)", "TruncSeries(Z2,2)"]


def _nonzero(R: Ring, polys: List[Poly]) -> Counter:
    return Counter(a for f in polys for a in f.coeffs if a != R.zero)


def _product_in_y(F: List[Poly], G: List[Poly]) -> List[Poly]:
    """(Σ f_i y^i)(Σ g_j y^j) with x and y commuting."""
    R = F[0].ring
    out = [Poly(R, ())] * (len(F) + len(G) - 1)
    for i, f in enumerate(F):
        for j, g in enumerate(G):
            out[i + j] = poly_add(out[i + j], poly_mul(f, g))
    return out


def validate_packing(R: Ring, samples: int = 6, budget: Optional[int] = None) -> Validation:
    validation = Validation("packing", "Substituting y = x^k packs R[x][y] into R[x] without losing coefficients", [R.label])

    def body() -> None:
        polys = [Poly(R, c) for c in islice(iter_polys(R.order, 1), samples)]
        for start in range(len(polys) - 2):
            fs = polys[start:start + 3]
            k = max(f.degree for f in fs) + 1
            packed = pack_coefficients(fs, k)
            validation.expect(_nonzero(R, [packed]) == _nonzero(R, fs), f"coefficients lost packing with k = {k}", R.label)

        for F in (polys[0:2], polys[2:4]):
            for G in (polys[1:3], polys[3:5]):
                FG = _product_in_y(F, G)
                k = max(f.degree for f in FG + F + G) + 1
                lhs = poly_mul(pack_coefficients(F, k), pack_coefficients(G, k))
                validation.expect(lhs.coeffs == pack_coefficients(FG, k).coeffs,
                                  "packing is not multiplicative", R.label)

        pairs = list(islice(enumerate_zero_pairs(R, 1, budget), samples))
        validation.evidence["zero_pairs"] = len(pairs)
        for pair in pairs:
            F, G = [pair.f, pair.f], [pair.g, Poly(R, ())]
            k = 2 * max(pair.f.degree, pair.g.degree) + 1
            packed = poly_mul(pack_coefficients(F, k), pack_coefficients(G, k))
            validation.expect(packed.is_zero, f"packed zero pair {pair.to_dict()} stopped annihilating", R.label)

    return guarded(validation, body)


@suite_job(150)
def validate_coefficient_packing(context: SuiteContext) -> Validation:
    validation = Validation("coefficient_packing", "Coefficient packing between R[x][y] and R[x]")

    def body() -> None:
        for expr in PACKING_RINGS:
            validation.merge(validate_packing(context.ring(expr), budget=context.budget), expr)

    return guarded(validation, body)
