# McCoy/utils/evaluator.py

import threading
from typing import Dict, Optional

from McCoy.core.constructions import (
    make_A,
    make_B,
    make_corner,
    make_matrix,
    make_opposite,
    make_product,
    make_quotient,
    make_S,
    make_skew_tri,
    make_T,
    make_tri,
    make_trunc_series,
    make_triangular,
    make_subring,
    make_zmod,
)
from McCoy.core.ring import Ideal, Ring
from McCoy.utils.expr import (
    Corner,
    ExprLike,
    FamilyExpr,
    Mat,
    Opp,
    Prod,
    Quot,
    RingExpr,
    SkewTri,
    Sub,
    Tri,
    Triangular,
    TruncSeries,
    Zmod,
    parse_ring_expr,
)
from McCoy.utils.logger import logger
from McCoy.utils.registry import Registry

_FAMILIES = {"S": make_S, "T": make_T, "A": make_A, "B": make_B}


class Evaluator:
    """Turns ring expressions into rings, one ring per canonical expression."""

    def __init__(self, registry: Optional[Registry] = None):
        self.registry = registry or Registry()
        self._rings: Dict[str, Ring] = {}
        self._lock = threading.RLock()

    def parse(self, text: str) -> RingExpr:
        return parse_ring_expr(text, self.registry.has_sigma, self.registry.has_bimodule)

    def __call__(self, expr: ExprLike) -> Ring:
        node = self.parse(expr) if isinstance(expr, str) else expr
        key = str(node)
        with self._lock:
            if key not in self._rings:
                ring = self._build(node)
                logger.debug(f"Evaluated {key} to a ring of order {ring.order}")
                self._rings[key] = ring
            return self._rings[key]

    evaluate = __call__

    def _build(self, node: RingExpr) -> Ring:
        if isinstance(node, Zmod):
            return make_zmod(node.n)
        if isinstance(node, TruncSeries):
            return make_trunc_series(self(node.base), node.m)
        if isinstance(node, Prod):
            return make_product([self(f) for f in node.factors])
        if isinstance(node, Mat):
            return make_matrix(self(node.base), node.n)
        if isinstance(node, Tri):
            return make_tri(self(node.base), node.n)
        if isinstance(node, SkewTri):
            base = self(node.base)
            return make_skew_tri(base, node.n, self.registry.sigma(node.sigma, base))
        if isinstance(node, FamilyExpr):
            base = self(node.base)
            sigma = self.registry.sigma(node.sigma, base) if node.sigma else None
            return _FAMILIES[node.family](base, node.n, sigma)
        if isinstance(node, Triangular):
            R, S = self(node.left), self(node.right)
            return make_triangular(R, S, self.registry.bimodule(node.bimodule, R, S, self))
        if isinstance(node, Corner):
            base = self(node.base)
            return make_corner(base, base.index_of(node.idempotent), label=str(node))
        if isinstance(node, Quot):
            base = self(node.base)
            ideal = Ideal.generated(base, [base.index_of(g) for g in node.gens])
            return make_quotient(base, ideal, label=str(node))
        if isinstance(node, Opp):
            return make_opposite(self(node.base))
        if isinstance(node, Sub):
            base = self(node.base)
            return make_subring(base, [base.index_of(g) for g in node.gens], label=str(node))
        raise TypeError(f"not a ring expression: {node!r}")
