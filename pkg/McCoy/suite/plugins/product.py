# McCoy/suite/plugins/product.py

from typing import Optional

from McCoy.core.constructions import ProductRing, make_product
from McCoy.core.mccoy import Family, Verdict, admissible_witnesses
from McCoy.core.poly import Poly, ZeroPair, embed_poly, poly_add, poly_mul
from McCoy.core.radical import jacobson_radical, units
from McCoy.core.ring import Elem, Ring, idempotents
from McCoy.suite import SuiteContext, Validation, guarded, suite_job, summary, verdict

PRODUCT_INSTANCES = [("Z2", "Z4", 2), ("Z2", "Mat(Z2,2)", 1), ("Z4", "Z4", 2)]


def _componentwise(P: ProductRing, parts, whole) -> bool:
    expected = {P.element(coords) for coords in _grid(parts)}
    return expected == set(whole)


def _grid(parts):
    if not parts:
        yield ()
        return
    for head in sorted(parts[0]):
        for rest in _grid(parts[1:]):
            yield (head,) + rest


def lift_pair(P: ProductRing, t: int, pair: ZeroPair) -> ZeroPair:
    """Place a factor pair in slot ``t``; other slots get f = 1, g = 0.

    A unit constant in the padding pins every witness to zero there when
    the other factors are J-semisimple.
    """
    def inject(a: Elem) -> Elem:
        coords = [factor.zero for factor in P.factors]
        coords[t] = a
        return P.element(coords)

    padding = P.element([factor.zero if k == t else factor.one for k, factor in enumerate(P.factors)])
    f = poly_add(embed_poly(pair.f, P, inject), Poly(P, (padding,)))
    return ZeroPair(f, embed_poly(pair.g, P, inject))


def validate_product(R1: Ring, R2: Ring, dmax: int, budget: Optional[int] = None) -> Validation:
    P = make_product([R1, R2])
    validation = Validation("product", "A direct product is J-McCoy if and only if every factor is", [P.label])

    def body() -> None:
        for name, getter in (("units", units), ("idempotents", idempotents), ("jacobson", jacobson_radical)):
            validation.expect(_componentwise(P, [getter(R1), getter(R2)], getter(P)), f"{name} do not factor componentwise", P.label)
        factors = [verdict(R, Family.J, dmax, budget=budget) for R in (R1, R2)]
        whole: Verdict = verdict(P, Family.J, dmax, budget=budget)
        validation.evidence["factors"] = [summary(v) for v in factors]
        validation.evidence["product"] = summary(whole)
        if all(v.holds for v in factors):
            validation.expect(whole.holds, "factors hold but the product has a counterexample", P.label)
        for t, v in enumerate(factors):
            if v.holds:
                continue
            lifted = lift_pair(P, t, v.counterexample)
            validation.expect(poly_mul(lifted.f, lifted.g).is_zero, "lifted pair is not a zero pair", P.label)
            absorbed = admissible_witnesses(lifted.f, Family.J)
            validation.evidence[f"lifted_from_factor_{t}"] = {
                **lifted.to_dict(),
                "witnesses": P.format_set(absorbed),
            }
            if all(jacobson_radical(R) == {R.zero} for k, R in enumerate(P.factors) if k != t):
                validation.expect(not absorbed, "lifted counterexample gained a witness in the product", P.label)
            validation.expect(
                not whole.holds,
                f"factor {v.ring} has a counterexample but the product holds up to degree {dmax}",
                P.label,
            )

    return guarded(validation, body)


@suite_job(50)
def validate_products(context: SuiteContext) -> Validation:
    validation = Validation("products", "Direct products against their factors")

    def body() -> None:
        for left, right, dmax in PRODUCT_INSTANCES:
            validation.merge(validate_product(context.ring(left), context.ring(right), dmax, context.budget), f"{left}x{right}")

    return guarded(validation, body)
