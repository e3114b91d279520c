# McCoy/core/ring.py

import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from McCoy.utils.exceptions import BudgetExceeded, ConsistencyFault, ConstructionError, UnknownName
from McCoy.utils.logger import logger
from McCoy.utils.messages import (
    MSG_AXIOM_FAILED,
    MSG_BUDGET_PAIRWISE,
    MSG_LABEL_LIMIT,
    MSG_MAP_NOT_HOM,
    MSG_NOT_IDEAL,
    MSG_ORDER_CAP,
    MSG_RING_EMPTY,
    MSG_UNKNOWN_LABEL,
    MSG_ZERO_IS_ONE,
)
from McCoy.vars import Var

Elem = int
INDEX = np.int64
LABEL_LIMIT = 1_000_000
EXHAUSTIVE_AXIOM_ORDER = 256


def as_index(values: Any) -> np.ndarray:
    return np.asarray(values, dtype=INDEX)


def decode(idx: Any, radices: Sequence[int]) -> List[np.ndarray]:
    """Split indices into mixed-radix digits, most significant first."""
    rest = as_index(idx)
    digits = []
    for radix in reversed(radices):
        rest, digit = np.divmod(rest, radix)
        digits.append(digit)
    digits.reverse()
    return digits


def encode(digits: Sequence[Any], radices: Sequence[int]) -> np.ndarray:
    out: Any = 0
    for digit, radix in zip(digits, radices):
        out = out * radix + as_index(digit)
    return as_index(out)


def ensure_order(label: str, order: int) -> None:
    if order > Var.ORDER_CAP:
        raise ConstructionError(MSG_ORDER_CAP.format(label=label, order=order, cap=Var.ORDER_CAP))


class Ring:
    """A finite ring on the element indices ``0..order-1``.

    Constructions implement the vectorized evaluators ``_add_v``, ``_mul_v``
    and ``_neg_v`` over numpy index arrays. Rings no larger than the
    materialization cap get full Cayley tables and every operation is a
    table lookup; larger rings evaluate on demand. Derived sets (units,
    radical, nilpotents, ...) are cached per ring and filled at most once.
    """

    def __init__(self, order: int, label: str, *, one: Elem, zero: Elem = 0):
        if order < 1:
            raise ConstructionError(MSG_RING_EMPTY.format(label=label))
        ensure_order(label, order)
        if order > 1 and one == zero:
            raise ConstructionError(MSG_ZERO_IS_ONE.format(label=label))
        self.order = int(order)
        self.label = label
        self.one = int(one)
        self.zero = int(zero)
        self.add_table: Optional[np.ndarray] = None
        self.mul_table: Optional[np.ndarray] = None
        self.neg_table: Optional[np.ndarray] = None
        self._cache: Dict[Any, Any] = {}
        self._lock = threading.RLock()

    def __repr__(self) -> str:
        return f"<Ring {self.label} order={self.order}>"

    # structural evaluators

    def _add_v(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _mul_v(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _neg_v(self, a: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _unit_v(self, a: np.ndarray) -> Optional[np.ndarray]:
        return None

    def _label(self, x: Elem) -> str:
        return str(x)

    # tables

    @property
    def materialized(self) -> bool:
        return self.mul_table is not None

    def materialize(self, cap: Optional[int] = None) -> "Ring":
        cap = Var.MATERIALIZE_CAP if cap is None else cap
        if self.materialized:
            return self
        if self.order > cap:
            logger.debug(f"{self.label}: order {self.order} above cap {cap}, evaluating on demand")
            return self
        n = self.order
        a, b = np.divmod(np.arange(n * n, dtype=INDEX), n)
        self.add_table = self._add_v(a, b).reshape(n, n).astype(np.int32)
        self.mul_table = self._mul_v(a, b).reshape(n, n).astype(np.int32)
        self.neg_table = self._neg_v(np.arange(n, dtype=INDEX)).astype(np.int32)
        logger.debug(f"{self.label}: materialized Cayley tables of order {n}")
        return self

    def table(self, op: str) -> np.ndarray:
        """Full operation table; built transiently for on-demand rings within budget."""
        if self.materialized:
            return {"add": self.add_table, "mul": self.mul_table}[op]
        n = self.order
        if n * n > Var.RADICAL_BUDGET:
            raise BudgetExceeded(
                MSG_BUDGET_PAIRWISE.format(label=self.label, order=n, budget=Var.RADICAL_BUDGET),
                estimate=n * n, budget=Var.RADICAL_BUDGET,
            )
        a, b = np.divmod(np.arange(n * n, dtype=INDEX), n)
        fn = self._add_v if op == "add" else self._mul_v
        return self.cached(("table", op), lambda: fn(a, b).reshape(n, n))

    def rows(self) -> Tuple[List[Any], List[Any], List[Any]]:
        """Python-level add/mul rows and negation list for tight search loops."""
        def build():
            self.materialize()
            if not self.materialized:
                raise BudgetExceeded(
                    MSG_BUDGET_PAIRWISE.format(label=self.label, order=self.order, budget=Var.MATERIALIZE_CAP),
                    estimate=self.order, budget=Var.MATERIALIZE_CAP,
                )
            if self.order <= 1024:
                return self.add_table.tolist(), self.mul_table.tolist(), self.neg_table.tolist()
            return list(self.add_table), list(self.mul_table), self.neg_table.tolist()
        return self.cached("rows", build)

    def cached(self, key: Any, factory: Callable[[], Any]) -> Any:
        with self._lock:
            if key not in self._cache:
                self._cache[key] = factory()
            return self._cache[key]

    def peek(self, key: Any) -> Any:
        with self._lock:
            return self._cache.get(key)

    # arithmetic

    def elements(self) -> range:
        return range(self.order)

    def add(self, a: Elem, b: Elem) -> Elem:
        if self.add_table is not None:
            return int(self.add_table[a, b])
        return int(self._add_v(as_index([a]), as_index([b]))[0])

    def mul(self, a: Elem, b: Elem) -> Elem:
        if self.mul_table is not None:
            return int(self.mul_table[a, b])
        return int(self._mul_v(as_index([a]), as_index([b]))[0])

    def neg(self, a: Elem) -> Elem:
        if self.neg_table is not None:
            return int(self.neg_table[a])
        return int(self._neg_v(as_index([a]))[0])

    def sub(self, a: Elem, b: Elem) -> Elem:
        return self.add(a, self.neg(b))

    def add_v(self, a: Any, b: Any) -> np.ndarray:
        a, b = as_index(a), as_index(b)
        if self.add_table is not None:
            return self.add_table[a, b].astype(INDEX)
        return as_index(self._add_v(a, b) + np.zeros(np.broadcast(a, b).shape, dtype=INDEX))

    def mul_v(self, a: Any, b: Any) -> np.ndarray:
        a, b = as_index(a), as_index(b)
        if self.mul_table is not None:
            return self.mul_table[a, b].astype(INDEX)
        return as_index(self._mul_v(a, b) + np.zeros(np.broadcast(a, b).shape, dtype=INDEX))

    def neg_v(self, a: Any) -> np.ndarray:
        a = as_index(a)
        if self.neg_table is not None:
            return self.neg_table[a].astype(INDEX)
        return as_index(self._neg_v(a))

    def sub_v(self, a: Any, b: Any) -> np.ndarray:
        return self.add_v(a, self.neg_v(b))

    def power(self, x: Elem, k: int) -> Elem:
        result, base = self.one, x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    # units

    def unit_mask(self) -> np.ndarray:
        """Boolean mask of units over the whole ring."""
        def compute():
            if self.materialized:
                hits = self.mul_table == self.one
                return (hits & hits.T).any(axis=1)
            if self.order > Var.RADICAL_BUDGET:
                raise BudgetExceeded(
                    MSG_BUDGET_PAIRWISE.format(label=self.label, order=self.order, budget=Var.RADICAL_BUDGET),
                    estimate=self.order, budget=Var.RADICAL_BUDGET,
                )
            return self.units_of(np.arange(self.order, dtype=INDEX))
        return self.cached("unit_mask", compute)

    def units_of(self, xs: Any) -> np.ndarray:
        xs = as_index(xs)
        if self.materialized:
            return self.unit_mask()[xs]
        structural = self._unit_v(xs)
        if structural is not None:
            return np.asarray(structural, dtype=bool)
        flat = [self._search_inverse(int(x)) for x in xs.ravel()]
        return np.array(flat, dtype=bool).reshape(xs.shape)

    def _search_inverse(self, x: Elem) -> bool:
        if self.order > Var.RADICAL_BUDGET:
            raise BudgetExceeded(
                MSG_BUDGET_PAIRWISE.format(label=self.label, order=self.order, budget=Var.RADICAL_BUDGET),
                estimate=self.order, budget=Var.RADICAL_BUDGET,
            )
        everything = np.arange(self.order, dtype=INDEX)
        right = self.mul_v(x, everything) == self.one
        left = self.mul_v(everything, x) == self.one
        return bool((right & left).any())

    def is_unit(self, x: Elem) -> bool:
        return bool(self.units_of([x])[0])

    # labels

    def element_label(self, x: Elem) -> str:
        if self.order <= LABEL_LIMIT:
            return self.labels()[int(x)]
        return self._label(int(x))

    def labels(self) -> List[str]:
        if self.order > LABEL_LIMIT:
            raise UnknownName(MSG_LABEL_LIMIT.format(label=self.label, limit=LABEL_LIMIT))
        return self.cached("labels", lambda: [self._label(x) for x in range(self.order)])

    def index_of(self, label: str) -> Elem:
        lookup = self.cached("label_index", lambda: {name: i for i, name in enumerate(self.labels())})
        key = "".join(label.split())
        if key not in lookup:
            raise UnknownName(MSG_UNKNOWN_LABEL.format(element=label, label=self.label))
        return lookup[key]

    def format_set(self, members: Iterable[Elem]) -> List[str]:
        return [self.element_label(x) for x in sorted(members)]


# ---------------- MAPS, IDEALS ----------------

@dataclass(frozen=True)
class RingMap:
    source: Ring
    target: Ring
    table: Tuple[int, ...]
    name: str = "map"

    def __call__(self, x: Elem) -> Elem:
        return self.table[x]

    def apply_v(self, xs: Any) -> np.ndarray:
        return self.cached_array()[as_index(xs)]

    def cached_array(self) -> np.ndarray:
        return as_index(self.table)

    @classmethod
    def identity(cls, ring: Ring) -> "RingMap":
        return cls(ring, ring, tuple(range(ring.order)), name="id")

    @property
    def is_identity(self) -> bool:
        return self.source is self.target and all(i == y for i, y in enumerate(self.table))

    def compose(self, other: "RingMap") -> "RingMap":
        """``self ∘ other``."""
        return RingMap(other.source, self.target, tuple(self.table[y] for y in other.table),
                       name=f"{self.name}*{other.name}")

    def power(self, k: int) -> "RingMap":
        result = RingMap.identity(self.source)
        for _ in range(k):
            result = self.compose(result)
        return RingMap(self.source, self.target, result.table, name=self.name if k == 1 else f"{self.name}^{k}")

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(set(self.table)) == self.target.order

    def verify(self) -> None:
        """Raise ``ConstructionError`` unless the map is a unital ring homomorphism."""
        src, dst = self.source, self.target
        if len(self.table) != src.order:
            raise ConstructionError(MSG_MAP_NOT_HOM.format(name=self.name, reason="table size differs from source order"))
        if self.table[src.one] != dst.one:
            raise ConstructionError(MSG_MAP_NOT_HOM.format(name=self.name, reason="1 is not sent to 1"))
        image = self.cached_array()
        everything = np.arange(src.order, dtype=INDEX)
        for a in range(src.order):
            for op, src_op, dst_op in (("+", src.add_v, dst.add_v), ("*", src.mul_v, dst.mul_v)):
                left = image[src_op(a, everything)]
                right = dst_op(image[a], image)
                bad = np.nonzero(left != right)[0]
                if bad.size:
                    b = int(bad[0])
                    raise ConstructionError(MSG_MAP_NOT_HOM.format(
                        name=self.name,
                        reason=f"σ({src.element_label(a)}{op}{src.element_label(b)}) differs from σ(a){op}σ(b)",
                    ))


def check_isomorphism(source: Ring, target: Ring, table: Sequence[int], name: str = "iso") -> RingMap:
    """Verify an explicit bijection is a ring isomorphism and return it."""
    iso = RingMap(source, target, tuple(int(x) for x in table), name=name)
    if not iso.is_bijective():
        raise ConstructionError(MSG_MAP_NOT_HOM.format(name=name, reason="not a bijection"))
    iso.verify()
    return iso


def _extend_span(ring: Ring, span: Set[Elem], g: Elem) -> Set[Elem]:
    # subgroup generated by span and g is the union of the cosets span + k·g
    members = as_index(sorted(span))
    grown = set(span)
    step = g
    while step not in span:
        grown.update(ring.add_v(members, step).tolist())
        step = ring.add(step, g)
    return grown


def additive_span(ring: Ring, generators: Iterable[Elem], base: Optional[Iterable[Elem]] = None) -> Set[Elem]:
    span = set(base) if base is not None else {ring.zero}
    for g in generators:
        if g not in span:
            span = _extend_span(ring, span, int(g))
    return span


@dataclass(frozen=True)
class Ideal:
    ring: Ring
    members: FrozenSet[Elem] = field(default_factory=frozenset)

    def __contains__(self, x: Elem) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> List[Elem]:
        return sorted(self.members)

    @classmethod
    def zero(cls, ring: Ring) -> "Ideal":
        return cls(ring, frozenset({ring.zero}))

    @classmethod
    def generated(cls, ring: Ring, gens: Iterable[Elem]) -> "Ideal":
        """Two-sided ideal generated by ``gens``: additive span of every r·g·s."""
        everything = np.arange(ring.order, dtype=INDEX)
        products: Set[Elem] = set()
        for g in gens:
            left = ring.mul_v(everything, g)
            products.update(np.unique(ring.mul_v(left[:, None], everything[None, :])).tolist())
        return cls(ring, frozenset(additive_span(ring, sorted(products))))

    def verify(self) -> None:
        ring = self.ring
        members = as_index(self.sorted())
        mask = np.zeros(ring.order, dtype=bool)
        mask[members] = True
        everything = np.arange(ring.order, dtype=INDEX)
        checks = (
            ("contains zero", np.array([mask[ring.zero]])),
            ("closed under +", mask[ring.add_v(members[:, None], members[None, :])]),
            ("closed under negation", mask[ring.neg_v(members)]),
            ("closed under left multiplication", mask[ring.mul_v(everything[:, None], members[None, :])]),
            ("closed under right multiplication", mask[ring.mul_v(members[:, None], everything[None, :])]),
        )
        for reason, ok in checks:
            if not ok.all():
                raise ConstructionError(MSG_NOT_IDEAL.format(label=ring.label, reason=reason))


# ---------------- PREDICATES ----------------

def idempotents(ring: Ring) -> FrozenSet[Elem]:
    def compute():
        everything = np.arange(ring.order, dtype=INDEX)
        return frozenset(np.nonzero(ring.mul_v(everything, everything) == everything)[0].tolist())
    return ring.cached("idempotents", compute)


def is_commutative(ring: Ring) -> bool:
    def compute():
        mul = ring.table("mul")
        return bool((mul == mul.T).all())
    return ring.cached("commutative", compute)


def center(ring: Ring) -> FrozenSet[Elem]:
    def compute():
        mul = ring.table("mul")
        return frozenset(np.nonzero((mul == mul.T).all(axis=1))[0].tolist())
    return ring.cached("center", compute)


def is_abelian(ring: Ring) -> bool:
    """Every idempotent is central."""
    def compute():
        mul = ring.table("mul")
        return all(bool((mul[e, :] == mul[:, e]).all()) for e in idempotents(ring))
    return ring.cached("abelian", compute)


def is_local(ring: Ring) -> bool:
    """Non-units form a two-sided ideal (the zero ring is not local)."""
    def compute():
        if ring.order == 1:
            return False
        nonunit = ~ring.unit_mask()
        members = frozenset(np.nonzero(nonunit)[0].tolist())
        try:
            Ideal(ring, members).verify()
        except ConstructionError:
            return False
        return True
    return ring.cached("local", compute)


def regular_elements(ring: Ring) -> FrozenSet[Elem]:
    """Elements that are neither left nor right zero-divisors."""
    def compute():
        zero_hits = ring.table("mul") == ring.zero
        regular = (zero_hits.sum(axis=1) == 1) & (zero_hits.sum(axis=0) == 1)
        return frozenset(np.nonzero(regular)[0].tolist())
    return ring.cached("regular", compute)


# ---------------- AXIOMS ----------------

@dataclass
class AxiomReport:
    label: str
    exhaustive: bool
    checked: int
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ring": self.label,
            "exhaustive": self.exhaustive,
            "checked": self.checked,
            "ok": self.ok,
            "failures": list(self.failures),
        }


def check_axioms(ring: Ring, samples: Optional[int] = None, strict: bool = False) -> AxiomReport:
    """Ring axioms, exhaustively for order ≤ 256 and on seeded samples above."""
    n = ring.order
    if n <= EXHAUSTIVE_AXIOM_ORDER:
        report = _check_axioms_exhaustive(ring)
    else:
        report = _check_axioms_sampled(ring, Var.AXIOM_SAMPLES if samples is None else samples)
    if strict and not report.ok:
        raise ConsistencyFault(MSG_AXIOM_FAILED.format(label=ring.label, failure=report.failures[0]))
    return report


def _first_triple(ring: Ring, a: int, bad: np.ndarray) -> str:
    b, c = (int(v) for v in np.argwhere(bad)[0])
    return f"({ring.element_label(a)}, {ring.element_label(b)}, {ring.element_label(c)})"


def _check_axioms_exhaustive(ring: Ring) -> AxiomReport:
    n = ring.order
    A, M = ring.table("add"), ring.table("mul")
    N = ring.neg_v(np.arange(n, dtype=INDEX))
    idx = np.arange(n)
    report = AxiomReport(ring.label, exhaustive=True, checked=n ** 3)

    if not (A == A.T).all():
        report.failures.append("addition is not commutative")
    if not (A[ring.zero] == idx).all():
        report.failures.append("zero is not an additive identity")
    if not (A[idx, N] == ring.zero).all():
        report.failures.append("negation is not an additive inverse")
    if not ((M[ring.one] == idx).all() and (M[:, ring.one] == idx).all()):
        report.failures.append("one is not a multiplicative identity")

    for a in range(n):
        laws = (
            ("additive associativity", A[A[a], :], A[a][A]),
            ("multiplicative associativity", M[M[a], :], M[a][M]),
            ("left distributivity", M[a][A], A[M[a][:, None], M[a][None, :]]),
            ("right distributivity", M[A[a], :], A[M[a][None, :], M]),
        )
        for name, left, right in laws:
            bad = left != right
            if bad.any():
                report.failures.append(f"{name} fails at {_first_triple(ring, a, bad)}")
        if len(report.failures) > 8:
            break
    return report


def _check_axioms_sampled(ring: Ring, samples: int) -> AxiomReport:
    rng = np.random.default_rng(0)
    a, b, c = (rng.integers(0, ring.order, size=samples, dtype=INDEX) for _ in range(3))
    add, mul = ring.add_v, ring.mul_v
    report = AxiomReport(ring.label, exhaustive=False, checked=samples)
    laws = (
        ("additive commutativity", add(a, b), add(b, a)),
        ("additive associativity", add(add(a, b), c), add(a, add(b, c))),
        ("multiplicative associativity", mul(mul(a, b), c), mul(a, mul(b, c))),
        ("left distributivity", mul(a, add(b, c)), add(mul(a, b), mul(a, c))),
        ("right distributivity", mul(add(a, b), c), add(mul(a, c), mul(b, c))),
        ("additive identity", add(a, ring.zero), a),
        ("additive inverse", add(a, ring.neg_v(a)), np.full_like(a, ring.zero)),
        ("multiplicative identity", mul(a, ring.one), mul(ring.one, a)),
        ("multiplicative identity", mul(a, ring.one), a),
    )
    for name, left, right in laws:
        bad = np.nonzero(left != right)[0]
        if bad.size:
            i = int(bad[0])
            report.failures.append(
                f"{name} fails at ({ring.element_label(int(a[i]))}, "
                f"{ring.element_label(int(b[i]))}, {ring.element_label(int(c[i]))})"
            )
    return report
