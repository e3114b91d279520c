# McCoy/suite/plugins/triangular.py

from typing import Callable, Optional

from McCoy.core.constructions import Bimodule, TriangularRing, make_triangular
from McCoy.core.mccoy import Family, chooser
from McCoy.core.poly import embed_poly, enumerate_zero_pairs, poly_mul
from McCoy.core.radical import block_radical, jacobson_radical
from McCoy.core.ring import Elem, Ring
from McCoy.suite import SuiteContext, Validation, guarded, suite_job, summary, verdict

TRIANGULAR_INSTANCES = [("Z2", "Z2", "regular", 1), ("Z4", "Z2", "canonical", 1)]


def diagonal_witness(T: TriangularRing, f_coeffs) -> Elem:
    """diag(c, d) assembled from witnesses of the corner projections of f.

    Falls back to a nonzero (0, m, 0) when both corners are unconstrained
    by a zero pair, since the bimodule part lies in J(T).
    """
    R, S = T.R, T.S
    rs = [T.coords(a) for a in f_coeffs]
    f_R = [r for r, _, _ in rs]
    f_S = [s for _, _, s in rs]
    picks = {}
    for name, ring, coeffs in (("c", R, f_R), ("d", S, f_S)):
        if all(a == ring.zero for a in coeffs):
            picks[name] = ring.one
        else:
            least = chooser(ring, Family.J).least(coeffs)
            picks[name] = ring.zero if least is None else least
    if picks["c"] == R.zero and picks["d"] == S.zero:
        return T.element((R.zero, 1 if T.M.carrier.order > 1 else 0, S.zero))
    return T.element((picks["c"], 0, picks["d"]))


def corner_injection(T: TriangularRing, slot: int) -> Callable[[Elem], Elem]:
    """R or S placed in its diagonal slot of T, everything else zero."""
    def inject(a: Elem) -> Elem:
        coords = [T.R.zero, 0, T.S.zero]
        coords[slot] = a
        return T.element(tuple(coords))
    return inject


def validate_triangular(R: Ring, S: Ring, M: Bimodule, dmax: int, budget: Optional[int] = None) -> Validation:
    T = make_triangular(R, S, M)
    validation = Validation("triangular", "T = (R M; 0 S) is J-McCoy if and only if R and S are", [T.label])

    def body() -> None:
        validation.expect(jacobson_radical(T) == block_radical(T), "J(T) is not (J(R) M; 0 J(S))", T.label)
        vR, vS, vT = (verdict(X, Family.J, dmax, budget=budget) for X in (R, S, T))
        validation.evidence.update({"R": summary(vR), "S": summary(vS), "T": summary(vT)})

        if vR.holds and vS.holds:
            validation.expect(vT.holds, "R and S hold but T has a counterexample", T.label)
            pick = chooser(T, Family.J)
            misses = 0
            for pair in enumerate_zero_pairs(T, dmax, budget):
                w = diagonal_witness(T, pair.f.coeffs)
                if w == T.zero or not pick.admissible(pair.f.coeffs)[w]:
                    misses += 1
            validation.evidence["diagonal_witness_misses"] = misses
            validation.expect(misses == 0, f"diag(c, d) fails for {misses} zero pairs", T.label)

        # converse: a corner pair embeds into T; a T-witness with nonzero corner part projects back
        for name, ring, v, slot in (("R", R, vR, 0), ("S", S, vS, 2)):
            if not vT.holds:
                break
            validation.expect(v.holds, f"T holds up to degree {dmax} but {name} = {ring.label} has a counterexample", T.label)
            projected = 0
            pick = chooser(T, Family.J)
            inject = corner_injection(T, slot)
            for pair in enumerate_zero_pairs(ring, dmax, budget):
                f, g = embed_poly(pair.f, T, inject), embed_poly(pair.g, T, inject)
                validation.expect(poly_mul(f, g).is_zero, f"embedding a zero pair of {name} into T loses f·g = 0", T.label)
                admissible = pick.admissible(f.coeffs)
                corner_parts = {T.coords(w)[slot] for w in range(T.order) if admissible[w]} - {ring.zero}
                good = chooser(ring, Family.J).admissible(pair.f.coeffs)
                validation.expect(all(good[c] for c in corner_parts), f"projection of a T-witness fails in {name}", T.label)
                projected += 1
            validation.evidence[f"projected_{name}"] = projected

    return guarded(validation, body)


@suite_job(80)
def validate_triangular_rings(context: SuiteContext) -> Validation:
    validation = Validation("triangular_rings", "Formal triangular rings over bimodules")

    def body() -> None:
        for left, right, bimodule, dmax in TRIANGULAR_INSTANCES:
            R, S = context.ring(left), context.ring(right)
            M = context.evaluator.registry.bimodule(bimodule, R, S, context.evaluator)
            validation.merge(validate_triangular(R, S, M, dmax, context.budget), f"Triangular({left},{right},{bimodule})")

    return guarded(validation, body)
