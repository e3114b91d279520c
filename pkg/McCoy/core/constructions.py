# McCoy/core/constructions.py

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from McCoy.core.ring import (
    INDEX,
    Elem,
    Ideal,
    Ring,
    RingMap,
    as_index,
    decode,
    encode,
    ensure_order,
    is_commutative,
    _extend_span,
)
from McCoy.utils.exceptions import BudgetExceeded, ConstructionError
from McCoy.utils.logger import logger
from McCoy.utils.messages import (
    MSG_BIMODULE_AXIOM,
    MSG_BIMODULE_MISMATCH,
    MSG_BIMODULE_SHAPE,
    MSG_BUDGET_PAIRWISE,
    MSG_EMPTY_PRODUCT,
    MSG_FAMILY_EVEN,
    MSG_FAMILY_TOO_LARGE,
    MSG_NONCOMMUTATIVE_BASE,
    MSG_NOT_CLOSED,
    MSG_NOT_CYCLIC,
    MSG_NOT_IDEMPOTENT,
    MSG_SIGMA_FOREIGN,
    MSG_SIZE_ARG,
    MSG_ZMOD_MODULUS,
)
from McCoy.vars import Var


def _require(condition: bool, construction: str, name: str, minimum: int, value: int) -> None:
    if not condition:
        raise ConstructionError(MSG_SIZE_ARG.format(construction=construction, name=name, minimum=minimum, value=value))


# ---------------- BASE RINGS ----------------

class ZmodRing(Ring):
    def __init__(self, n: int):
        if n < 1:
            raise ConstructionError(MSG_ZMOD_MODULUS.format(n=n))
        self.modulus = n
        super().__init__(n, f"Z{n}", one=1 % n)

    def _add_v(self, a, b):
        return (a + b) % self.modulus

    def _mul_v(self, a, b):
        return (a * b) % self.modulus

    def _neg_v(self, a):
        return (-a) % self.modulus

    def _unit_v(self, a):
        return np.gcd(a, self.modulus) == 1


class CoordinateRing(Ring):
    """Elements are tuples over component rings, encoded mixed-radix in order.

    Addition and negation are componentwise; subclasses define the product.
    """

    def __init__(self, components: Sequence[Ring], label: str, one_coords: Sequence[Elem]):
        self.components: Tuple[Ring, ...] = tuple(components)
        self.radices = tuple(c.order for c in self.components)
        order = math.prod(self.radices)
        ensure_order(label, order)
        super().__init__(order, label, one=int(encode(one_coords, self.radices)))

    def unpack(self, x) -> List[np.ndarray]:
        return decode(x, self.radices)

    def pack(self, digits) -> np.ndarray:
        return encode(digits, self.radices)

    def coords(self, x: Elem) -> Tuple[int, ...]:
        return tuple(int(d) for d in decode(int(x), self.radices))

    def element(self, coords: Sequence[Elem]) -> Elem:
        return int(encode(list(coords), self.radices))

    def _add_v(self, a, b):
        A, B = self.unpack(a), self.unpack(b)
        return self.pack([c.add_v(x, y) for c, x, y in zip(self.components, A, B)])

    def _neg_v(self, a):
        return self.pack([c.neg_v(x) for c, x in zip(self.components, self.unpack(a))])

    def _label(self, x):
        parts = (c.element_label(d) for c, d in zip(self.components, self.coords(x)))
        return "(" + ",".join(parts) + ")"


class ProductRing(CoordinateRing):
    def __init__(self, factors: Sequence[Ring]):
        if not factors:
            raise ConstructionError(MSG_EMPTY_PRODUCT)
        label = "Prod(" + ",".join(f.label for f in factors) + ")"
        super().__init__(factors, label, [f.one for f in factors])

    @property
    def factors(self) -> Tuple[Ring, ...]:
        return self.components

    def _mul_v(self, a, b):
        A, B = self.unpack(a), self.unpack(b)
        return self.pack([c.mul_v(x, y) for c, x, y in zip(self.components, A, B)])

    def _unit_v(self, a):
        masks = [c.units_of(x) for c, x in zip(self.components, self.unpack(a))]
        return np.logical_and.reduce(masks)

    def injection(self, k: int, x: Elem) -> Elem:
        """x placed in factor k, zeros elsewhere."""
        coords = [0] * len(self.components)
        coords[k] = x
        return self.element(coords)


class TruncSeriesRing(CoordinateRing):
    """base[t]/(t^m); coordinates are the coefficients of 1, t, ..., t^(m-1)."""

    def __init__(self, base: Ring, m: int):
        _require(m >= 1, "TruncSeries", "m", 1, m)
        if not is_commutative(base):
            raise ConstructionError(MSG_NONCOMMUTATIVE_BASE.format(construction="TruncSeries", label=base.label))
        self.base = base
        self.length = m
        super().__init__([base] * m, f"TruncSeries({base.label},{m})", [base.one] + [0] * (m - 1))

    def _mul_v(self, a, b):
        base = self.base
        A, B = self.unpack(a), self.unpack(b)
        out = []
        for k in range(self.length):
            acc = base.mul_v(A[0], B[k])
            for i in range(1, k + 1):
                acc = base.add_v(acc, base.mul_v(A[i], B[k - i]))
            out.append(acc)
        return self.pack(out)

    def _unit_v(self, a):
        return self.base.units_of(self.unpack(a)[0])


class MatrixRing(CoordinateRing):
    def __init__(self, base: Ring, n: int):
        _require(n >= 1, "Mat", "n", 1, n)
        self.base = base
        self.size = n
        label = f"Mat({base.label},{n})"
        one = [base.one if i == j else 0 for i in range(n) for j in range(n)]
        self._det_units = is_commutative(base)
        super().__init__([base] * (n * n), label, one)

    def entry(self, i: int, j: int) -> int:
        return i * self.size + j

    def unit_matrix(self, i: int, j: int, value: Optional[Elem] = None) -> Elem:
        """value·E_ij (0-based), value defaulting to 1."""
        coords = [0] * (self.size * self.size)
        coords[self.entry(i, j)] = self.base.one if value is None else value
        return self.element(coords)

    def from_rows(self, rows: Sequence[Sequence[Elem]]) -> Elem:
        return self.element([x for row in rows for x in row])

    def _mul_v(self, a, b):
        base, n = self.base, self.size
        A, B = self.unpack(a), self.unpack(b)
        out = []
        for i in range(n):
            for j in range(n):
                acc = base.mul_v(A[i * n], B[j])
                for k in range(1, n):
                    acc = base.add_v(acc, base.mul_v(A[i * n + k], B[k * n + j]))
                out.append(acc)
        return self.pack(out)

    def determinant_v(self, a) -> np.ndarray:
        # Leibniz expansion; base is commutative
        base, n = self.base, self.size
        A = self.unpack(a)
        det = None
        for perm in permutations(range(n)):
            term = A[perm[0]]
            for i in range(1, n):
                term = base.mul_v(term, A[i * n + perm[i]])
            inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
            if inversions % 2:
                term = base.neg_v(term)
            det = term if det is None else base.add_v(det, term)
        return det

    def _unit_v(self, a):
        if not self._det_units:
            return None
        return self.base.units_of(self.determinant_v(a))

    def _label(self, x):
        coords = self.coords(x)
        n = self.size
        rows = ("[" + ",".join(self.base.element_label(coords[i * n + j]) for j in range(n)) + "]" for i in range(n))
        return "[" + ",".join(rows) + "]"


class SkewTriRing(CoordinateRing):
    """Upper triangular matrices; entry (i,j) of a product is Σ_k a_ik·σ^(k-i)(b_kj)."""

    def __init__(self, base: Ring, n: int, sigma: RingMap):
        _require(n >= 1, "SkewTri", "n", 1, n)
        if sigma.source is not base or sigma.target is not base:
            raise ConstructionError(MSG_SIGMA_FOREIGN.format(name=sigma.name, label=base.label))
        sigma.verify()
        self.base = base
        self.size = n
        self.sigma = sigma
        self.positions = [(i, j) for i in range(n) for j in range(i, n)]
        self.position = {p: k for k, p in enumerate(self.positions)}
        self.sigma_powers = [sigma.power(d).cached_array() for d in range(n)]
        if sigma.is_identity:
            label = f"Tri({base.label},{n})"
        else:
            label = f"SkewTri({base.label},{n},{sigma.name})"
        one = [base.one if i == j else 0 for i, j in self.positions]
        super().__init__([base] * len(self.positions), label, one)

    def unit_matrix(self, i: int, j: int, value: Optional[Elem] = None) -> Elem:
        coords = [0] * len(self.positions)
        coords[self.position[(i, j)]] = self.base.one if value is None else value
        return self.element(coords)

    def entries(self, x: Elem) -> List[List[int]]:
        coords = self.coords(x)
        return [[coords[self.position[(i, j)]] if i <= j else 0 for j in range(self.size)] for i in range(self.size)]

    def _mul_v(self, a, b):
        base, pos = self.base, self.position
        A, B = self.unpack(a), self.unpack(b)
        out = []
        for i, j in self.positions:
            acc = None
            for k in range(i, j + 1):
                twisted = self.sigma_powers[k - i][B[pos[(k, j)]]]
                term = base.mul_v(A[pos[(i, k)]], twisted)
                acc = term if acc is None else base.add_v(acc, term)
            out.append(acc)
        return self.pack(out)

    def _unit_v(self, a):
        A = self.unpack(a)
        return np.logical_and.reduce([self.base.units_of(A[self.position[(i, i)]]) for i in range(self.size)])

    def _label(self, x):
        rows = ("[" + ",".join(self.base.element_label(v) for v in row) + "]" for row in self.entries(x))
        return "[" + ",".join(rows) + "]"


class SubRing(Ring):
    """A member subset of an ambient ring, indexed by ascending ambient index.

    Closure is verified lazily: any operation leaving the member set raises.
    """

    def __init__(
        self,
        ambient: Ring,
        members: Iterable[Elem],
        label: str,
        *,
        one: Optional[Elem] = None,
        inherit_units: bool = True,
        labeler: Optional[Callable[[Elem], str]] = None,
    ):
        self.ambient = ambient
        self.members = np.unique(as_index(list(members)))
        self._inherit_units = inherit_units
        self._labeler = labeler
        self.label = label
        one_index = self._lower(as_index([ambient.one if one is None else one]), "identity")[0]
        zero_index = self._lower(as_index([ambient.zero]), "zero")[0]
        super().__init__(len(self.members), label, one=int(one_index), zero=int(zero_index))

    def lift(self, x) -> np.ndarray:
        return self.members[as_index(x)]

    def lift_one(self, x: Elem) -> Elem:
        return int(self.members[int(x)])

    def _lower(self, values: np.ndarray, op: str) -> np.ndarray:
        pos = np.clip(np.searchsorted(self.members, values), 0, len(self.members) - 1)
        if not (self.members[pos] == values).all():
            raise ConstructionError(MSG_NOT_CLOSED.format(label=self.label, op=op))
        return pos.astype(INDEX)

    def index_in(self, ambient_element: Elem) -> Elem:
        return int(self._lower(as_index([ambient_element]), "lookup")[0])

    def _add_v(self, a, b):
        return self._lower(self.ambient.add_v(self.lift(a), self.lift(b)), "+")

    def _mul_v(self, a, b):
        return self._lower(self.ambient.mul_v(self.lift(a), self.lift(b)), "*")

    def _neg_v(self, a):
        return self._lower(self.ambient.neg_v(self.lift(a)), "negation")

    def _unit_v(self, a):
        if not self._inherit_units:
            return None
        # a finite subring containing 1 keeps the inverses of its ambient units
        return self.ambient.units_of(self.lift(a))

    def _label(self, x):
        if self._labeler is not None:
            return self._labeler(x)
        return self.ambient.element_label(int(self.members[x]))


class QuotientRing(Ring):
    """Cosets of an ideal, each represented and ordered by its least member."""

    def __init__(self, ring: Ring, ideal: Ideal, label: str):
        n, members = ring.order, as_index(ideal.sorted())
        if n * len(members) > Var.RADICAL_BUDGET:
            raise BudgetExceeded(
                MSG_BUDGET_PAIRWISE.format(label=label, order=n, budget=Var.RADICAL_BUDGET),
                estimate=n * len(members), budget=Var.RADICAL_BUDGET,
            )
        self.base = ring
        self.ideal = ideal
        everything = np.arange(n, dtype=INDEX)
        least = ring.add_v(everything[:, None], members[None, :]).min(axis=1)
        self.representatives = np.unique(least)
        position = np.full(n, -1, dtype=INDEX)
        position[self.representatives] = np.arange(len(self.representatives), dtype=INDEX)
        self.coset_of = position[least]
        super().__init__(len(self.representatives), label, one=int(self.coset_of[ring.one]), zero=0)

    def _add_v(self, a, b):
        reps = self.representatives
        return self.coset_of[self.base.add_v(reps[a], reps[b])]

    def _mul_v(self, a, b):
        reps = self.representatives
        return self.coset_of[self.base.mul_v(reps[a], reps[b])]

    def _neg_v(self, a):
        return self.coset_of[self.base.neg_v(self.representatives[a])]

    def _label(self, x):
        return self.base.element_label(int(self.representatives[x]))

    def projection(self) -> RingMap:
        return RingMap(self.base, self, tuple(int(c) for c in self.coset_of), name="projection")


class OppositeRing(Ring):
    def __init__(self, ring: Ring):
        self.base = ring
        super().__init__(ring.order, f"Opp({ring.label})", one=ring.one, zero=ring.zero)

    def materialize(self, cap: Optional[int] = None) -> "Ring":
        if not self.materialized and self.base.materialized:
            self.add_table = self.base.add_table
            self.mul_table = np.ascontiguousarray(self.base.mul_table.T)
            self.neg_table = self.base.neg_table
            return self
        return super().materialize(cap)

    def _add_v(self, a, b):
        return self.base.add_v(a, b)

    def _mul_v(self, a, b):
        return self.base.mul_v(b, a)

    def _neg_v(self, a):
        return self.base.neg_v(a)

    def _unit_v(self, a):
        return self.base.units_of(a)

    def _label(self, x):
        return self.base.element_label(x)


# ---------------- BIMODULES, TRIANGULAR RINGS ----------------

@dataclass
class Bimodule:
    """An (R, S)-bimodule on the additive group of ``carrier``.

    ``left_action[r, m]`` is r·m and ``right_action[m, s]`` is m·s.
    """

    name: str
    left: Ring
    right: Ring
    carrier: Ring
    left_action: np.ndarray
    right_action: np.ndarray

    def act_left(self, r: Elem, m: Elem) -> Elem:
        return int(self.left_action[r, m])

    def act_right(self, m: Elem, s: Elem) -> Elem:
        return int(self.right_action[m, s])

    def _fail(self, law: str, bad: np.ndarray, first: Tuple[Ring, int], rest: Tuple[Ring, Ring]) -> None:
        if bad.any():
            i, j = (int(v) for v in np.argwhere(bad)[0])
            ring0, x = first
            triple = f"({ring0.element_label(x)}, {rest[0].element_label(i)}, {rest[1].element_label(j)})"
            raise ConstructionError(MSG_BIMODULE_AXIOM.format(name=self.name, law=law, triple=triple))

    def verify(self) -> "Bimodule":
        R, S, M = self.left, self.right, self.carrier
        L, Q = as_index(self.left_action), as_index(self.right_action)
        for table, expected in ((L, (R.order, M.order)), (Q, (M.order, S.order))):
            if table.shape != expected:
                raise ConstructionError(MSG_BIMODULE_SHAPE.format(name=self.name, shape=table.shape, expected=expected))
        if ((L < 0) | (L >= M.order)).any() or ((Q < 0) | (Q >= M.order)).any():
            raise ConstructionError(MSG_BIMODULE_SHAPE.format(name=self.name, shape="out-of-range entries", expected="carrier elements"))
        Radd, Rmul = R.table("add"), R.table("mul")
        Sadd, Smul = S.table("add"), S.table("mul")
        Madd = M.table("add")
        m_idx = np.arange(M.order)

        if not (L[R.one] == m_idx).all():
            self._fail("1·m = m", (L[R.one] != m_idx)[None, :], (R, R.one), (R, M))
        if not (Q[:, S.one] == m_idx).all():
            self._fail("m·1 = m", (Q[:, S.one] != m_idx)[None, :], (S, S.one), (S, M))
        for r in range(R.order):
            self._fail("r(m+m') = rm+rm'", L[r][Madd] != Madd[L[r][:, None], L[r][None, :]], (R, r), (M, M))
            self._fail("(r+r')m = rm+r'm", L[Radd[r]] != Madd[L[r][None, :], L], (R, r), (R, M))
            self._fail("(rr')m = r(r'm)", L[Rmul[r]] != L[r][L], (R, r), (R, M))
            self._fail("(rm)s = r(ms)", Q[L[r], :] != L[r][Q], (R, r), (M, S))
        for m in range(M.order):
            self._fail("m(s+s') = ms+ms'", Q[m][Sadd] != Madd[Q[m][:, None], Q[m][None, :]], (M, m), (S, S))
            self._fail("m(ss') = (ms)s'", Q[m][Smul] != Q[Q[m], :], (M, m), (S, S))
            self._fail("(m+m')s = ms+m's", Q[Madd[m], :] != Madd[Q[m][None, :], Q], (M, m), (M, S))
        return self


def regular_bimodule(R: Ring, S: Optional[Ring] = None) -> Bimodule:
    """R acting on itself from both sides."""
    if S is not None and S is not R and S.label != R.label:
        raise ConstructionError(MSG_BIMODULE_MISMATCH.format(name="regular", found=S.label, expected=R.label))
    mul = as_index(R.table("mul"))
    return Bimodule("regular", R, S or R, R, mul, mul).verify()


def canonical_map(R: Ring, S: Ring) -> RingMap:
    """The map k·1_R ↦ k·1_S, for R additively generated by 1."""
    table = [-1] * R.order
    x, y = R.zero, S.zero
    for _ in range(R.order):
        if table[x] != -1:
            break
        table[x] = y
        x, y = R.add(x, R.one), S.add(y, S.one)
    if -1 in table:
        raise ConstructionError(MSG_NOT_CYCLIC.format(label=R.label))
    hom = RingMap(R, S, tuple(table), name="canonical")
    hom.verify()
    return hom


def canonical_bimodule(R: Ring, S: Ring) -> Bimodule:
    """S as an (R, S)-bimodule, R acting through the canonical map."""
    pi = canonical_map(R, S).cached_array()
    smul = as_index(S.table("mul"))
    return Bimodule("canonical", R, S, S, smul[pi, :], smul).verify()


class TriangularRing(CoordinateRing):
    """Formal triangular matrices (r, m; 0, s) over an (R, S)-bimodule M."""

    def __init__(self, R: Ring, S: Ring, M: Bimodule):
        if M.left is not R or M.right is not S:
            raise ConstructionError(MSG_BIMODULE_MISMATCH.format(
                name=M.name, found=f"({M.left.label},{M.right.label})", expected=f"({R.label},{S.label})"))
        self.R, self.S, self.M = R, S, M
        self._L = as_index(M.left_action)
        self._Q = as_index(M.right_action)
        super().__init__([R, M.carrier, S], f"Triangular({R.label},{S.label},{M.name})", [R.one, 0, S.one])

    def _mul_v(self, a, b):
        r1, m1, s1 = self.unpack(a)
        r2, m2, s2 = self.unpack(b)
        middle = self.M.carrier.add_v(self._L[r1, m2], self._Q[m1, s2])
        return self.pack([self.R.mul_v(r1, r2), middle, self.S.mul_v(s1, s2)])

    def _unit_v(self, a):
        r, _, s = self.unpack(a)
        return self.R.units_of(r) & self.S.units_of(s)


# ---------------- FACTORIES ----------------

def make_zmod(n: int) -> Ring:
    return ZmodRing(n).materialize()


def make_trunc_series(base: Ring, m: int) -> Ring:
    return TruncSeriesRing(base, m).materialize()


def make_product(factors: Sequence[Ring]) -> Ring:
    return ProductRing(list(factors)).materialize()


def make_matrix(base: Ring, n: int) -> Ring:
    return MatrixRing(base, n).materialize()


def make_skew_tri(base: Ring, n: int, sigma: Optional[RingMap] = None) -> Ring:
    return SkewTriRing(base, n, sigma or RingMap.identity(base)).materialize()


def make_tri(base: Ring, n: int) -> Ring:
    return make_skew_tri(base, n, None)


def make_triangular(R: Ring, S: Ring, M: Bimodule) -> Ring:
    M.verify()
    return TriangularRing(R, S, M).materialize()


def make_opposite(R: Ring) -> Ring:
    return OppositeRing(R).materialize()


def opposite(R: Ring) -> Ring:
    """The opposite ring, built once per ring."""
    return R.cached("opposite", lambda: make_opposite(R))


def make_quotient(R: Ring, I: Ideal, label: Optional[str] = None) -> Ring:
    if I.ring is not R:
        raise ConstructionError(MSG_BIMODULE_MISMATCH.format(name="ideal", found=I.ring.label, expected=R.label))
    I.verify()
    if label is None:
        label = f"Quot({R.label},{{" + ",".join(R.format_set(I.members)) + "})"
    return QuotientRing(R, I, label).materialize()


def make_corner(R: Ring, e: Elem, label: Optional[str] = None) -> Ring:
    if R.mul(e, e) != e:
        raise ConstructionError(MSG_NOT_IDEMPOTENT.format(element=R.element_label(e), label=R.label))
    if R.order > Var.RADICAL_BUDGET:
        raise BudgetExceeded(
            MSG_BUDGET_PAIRWISE.format(label=R.label, order=R.order, budget=Var.RADICAL_BUDGET),
            estimate=R.order, budget=Var.RADICAL_BUDGET,
        )
    everything = np.arange(R.order, dtype=INDEX)
    members = np.unique(R.mul_v(R.mul_v(e, everything), e))
    label = label or f"Corner({R.label},e={R.element_label(e)})"
    return SubRing(R, members, label, one=e, inherit_units=(e == R.one)).materialize()


def subring_closure(R: Ring, gens: Iterable[Elem]) -> FrozenSet[Elem]:
    """Least subring containing ``gens`` and 1.

    The additive span is grown coset by coset; each element that extends it
    is queued and multiplied on the right by every generator.
    """
    letters = [int(g) for g in gens]
    span: Set[Elem] = {R.zero}
    queue: List[Elem] = []

    def absorb(x: Elem) -> None:
        nonlocal span
        if x not in span:
            span = _extend_span(R, span, x)
            queue.append(x)

    for g in [R.one] + letters:
        absorb(g)
    while queue:
        word = queue.pop(0)
        for g in letters:
            absorb(R.mul(word, g))
    logger.debug(f"{R.label}: subring closure of {len(letters)} generators has {len(span)} elements")
    return frozenset(span)


def prime_subring(R: Ring) -> FrozenSet[Elem]:
    return subring_closure(R, [])


def make_subring(R: Ring, gens: Iterable[Elem], label: Optional[str] = None) -> Ring:
    gens = list(gens)
    members = subring_closure(R, gens)
    if label is None:
        label = f"Sub({R.label},{{" + ",".join(R.element_label(g) for g in gens) + "})"
    return SubRing(R, members, label).materialize()


# ---------------- S / T / A / B FAMILIES ----------------

FAMILY_LIMIT = 1 << 22


def _family_label(family: str, base: Ring, n: int, sigma: RingMap) -> str:
    if sigma.is_identity:
        return f"{family}({base.label},{n})"
    return f"{family}({base.label},{n},{sigma.name})"


def _constant_runs(family: str, n: int) -> List[List[Tuple[int, int]]]:
    """Groups of (0-based) positions forced equal in a family member."""
    def diagonal(d: int, start: int = 0) -> List[Tuple[int, int]]:
        return [(i, i + d) for i in range(start, n - d)]

    if family == "S":
        return [diagonal(0)]
    if family == "T":
        return [diagonal(d) for d in range(n)]
    half = n // 2
    runs = [diagonal(d) for d in range(half)]
    if family == "B":
        # (1,k) entry is free; the rest of that diagonal stays constant
        runs[half - 1] = diagonal(half - 1, start=1)
    return runs


def _make_family(family: str, base: Ring, n: int, sigma: Optional[RingMap]) -> Ring:
    _require(n >= 1, family, "n", 1, n)
    if family == "B" and (n < 4 or n % 2):
        raise ConstructionError(MSG_FAMILY_EVEN.format(label=base.label, n=n))
    sigma = sigma or RingMap.identity(base)
    ambient = SkewTriRing(base, n, sigma)
    if ambient.order > FAMILY_LIMIT:
        raise ConstructionError(MSG_FAMILY_TOO_LARGE.format(family=family, order=ambient.order, limit=FAMILY_LIMIT))
    ambient.materialize()
    digits = ambient.unpack(np.arange(ambient.order, dtype=INDEX))
    keep = np.ones(ambient.order, dtype=bool)
    for run in _constant_runs(family, n):
        first = digits[ambient.position[run[0]]]
        for p in run[1:]:
            keep &= digits[ambient.position[p]] == first
    members = np.nonzero(keep)[0]
    labeler = None
    if family == "T":
        def labeler(x: Elem) -> str:
            row = ambient.entries(int(members[x]))[0]
            return "(" + ",".join(base.element_label(v) for v in row) + ")"
    ring = SubRing(ambient, members, _family_label(family, base, n, sigma), labeler=labeler)
    logger.debug(f"{ring.label}: {len(members)} of {ambient.order} skew triangular matrices")
    return ring.materialize()


def make_S(base: Ring, n: int, sigma: Optional[RingMap] = None) -> Ring:
    return _make_family("S", base, n, sigma)


def make_T(base: Ring, n: int, sigma: Optional[RingMap] = None) -> Ring:
    return _make_family("T", base, n, sigma)


def make_A(base: Ring, n: int, sigma: Optional[RingMap] = None) -> Ring:
    return _make_family("A", base, n, sigma)


def make_B(base: Ring, n: int, sigma: Optional[RingMap] = None) -> Ring:
    return _make_family("B", base, n, sigma)


def corner_unit(ring: Ring) -> Optional[Elem]:
    """E_1n of a (skew) triangular ring or one of its family subrings."""
    ambient = ring.ambient if isinstance(ring, SubRing) else ring
    if not isinstance(ambient, SkewTriRing):
        return None
    e1n = ambient.unit_matrix(0, ambient.size - 1)
    if ambient is ring:
        return e1n
    try:
        return ring.index_in(e1n)
    except ConstructionError:
        return None
