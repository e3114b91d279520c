# McCoy/core/radical.py

import math
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List

import numpy as np

from McCoy.core.constructions import TriangularRing
from McCoy.core.ring import INDEX, Elem, Ideal, Ring, is_local
from McCoy.utils.exceptions import BudgetExceeded, ConsistencyFault, ConstructionError
from McCoy.utils.logger import logger
from McCoy.utils.messages import MSG_BUDGET_PAIRWISE, MSG_RADICAL_NOT_IDEAL
from McCoy.vars import Var


def _refuse(R: Ring, estimate: int) -> None:
    raise BudgetExceeded(
        MSG_BUDGET_PAIRWISE.format(label=R.label, order=R.order, budget=Var.RADICAL_BUDGET),
        estimate=estimate, budget=Var.RADICAL_BUDGET,
    )


def units(R: Ring) -> FrozenSet[Elem]:
    return R.cached("units", lambda: frozenset(np.nonzero(R.unit_mask())[0].tolist()))


def jacobson_radical(R: Ring) -> FrozenSet[Elem]:
    """All x with 1 - r·x a unit for every r, checked to be a two-sided ideal."""
    def compute() -> FrozenSet[Elem]:
        n = R.order
        if not R.materialized and n * n > Var.RADICAL_BUDGET:
            _refuse(R, n * n)
        add, mul = R.table("add"), R.table("mul")
        neg = R.neg_v(np.arange(n, dtype=INDEX))
        one_minus = add[R.one][neg[mul]]
        quasi_regular = R.unit_mask()[one_minus].all(axis=0)
        members = frozenset(np.nonzero(quasi_regular)[0].tolist())
        try:
            Ideal(R, members).verify()
        except ConstructionError as e:
            logger.error(f"Radical of {R.label} failed the ideal check: {e}", exc_info=True)
            raise ConsistencyFault(MSG_RADICAL_NOT_IDEAL.format(label=R.label, reason=e)) from e
        logger.debug(f"{R.label}: |J| = {len(members)}")
        return members
    return R.cached("jacobson", compute)


def in_jacobson(R: Ring, x: Elem) -> bool:
    """Single-element quasi-regularity test, linear in the ring order."""
    known = R.peek("jacobson")
    if known is not None:
        return x in known
    if R.order > Var.RADICAL_BUDGET:
        _refuse(R, R.order)
    everything = np.arange(R.order, dtype=INDEX)
    one_minus = R.sub_v(R.one, R.mul_v(everything, x))
    return bool(R.units_of(one_minus).all())


def nilpotents(R: Ring) -> FrozenSet[Elem]:
    """Elements with x^k = 0 for some k ≤ order, by repeated squaring."""
    def compute() -> FrozenSet[Elem]:
        n = R.order
        if not R.materialized and n > Var.RADICAL_BUDGET:
            _refuse(R, n)
        current = np.arange(n, dtype=INDEX)
        steps = math.ceil(math.log2(n)) if n > 1 else 1
        for _ in range(steps):
            current = R.mul_v(current, current)
        return frozenset(np.nonzero(current == R.zero)[0].tolist())
    return R.cached("nilpotents", compute)


def is_j_semisimple(R: Ring) -> bool:
    return jacobson_radical(R) == frozenset({R.zero})


def is_reduced(R: Ring) -> bool:
    return nilpotents(R) == frozenset({R.zero})


def block_radical(T: TriangularRing) -> FrozenSet[Elem]:
    """{(r, m, s) : r ∈ J(R), s ∈ J(S)} inside a triangular ring."""
    J_R, J_S = jacobson_radical(T.R), jacobson_radical(T.S)
    return frozenset(
        T.element((r, m, s))
        for r in sorted(J_R)
        for m in range(T.M.carrier.order)
        for s in sorted(J_S)
    )


@dataclass
class RadicalReport:
    label: str
    order: int
    units: List[str] = field(default_factory=list)
    jacobson: List[str] = field(default_factory=list)
    nilpotents: List[str] = field(default_factory=list)
    is_j_semisimple: bool = False
    is_local: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ring": self.label,
            "order": self.order,
            "units": list(self.units),
            "jacobson": list(self.jacobson),
            "nilpotents": list(self.nilpotents),
            "is_j_semisimple": self.is_j_semisimple,
            "is_local": self.is_local,
        }


def radical_report(R: Ring) -> RadicalReport:
    J = jacobson_radical(R)
    logger.info(f"Radical of {R.label}: |U| = {len(units(R))}, |J| = {len(J)}, |N| = {len(nilpotents(R))}")
    return RadicalReport(
        label=R.label,
        order=R.order,
        units=R.format_set(units(R)),
        jacobson=R.format_set(J),
        nilpotents=R.format_set(nilpotents(R)),
        is_j_semisimple=J == frozenset({R.zero}),
        is_local=is_local(R),
    )
