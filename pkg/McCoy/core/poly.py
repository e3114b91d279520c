# McCoy/core/poly.py

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from McCoy.core.ring import Elem, Ring
from McCoy.utils.exceptions import BudgetExceeded, ConstructionError, RingMismatch
from McCoy.utils.logger import logger
from McCoy.utils.messages import MSG_BUDGET_SEARCH, MSG_BUDGET_TABLES, MSG_PACK_DEGREE, MSG_RING_MISMATCH
from McCoy.vars import Var

Coeffs = Tuple[int, ...]


def normalize(coeffs: Sequence[int], zero: int = 0) -> Coeffs:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == zero:
        coeffs.pop()
    return tuple(int(c) for c in coeffs)


@dataclass(frozen=True)
class Poly:
    """Polynomial over ``ring`` with coefficient of x^i at ``coeffs[i]``.

    Always normalized: no trailing zeros, the zero polynomial is ``()``.
    """

    ring: Ring = field(compare=False, hash=False)
    coeffs: Coeffs = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", normalize(self.coeffs, self.ring.zero))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def key(self) -> Tuple[int, Coeffs]:
        """Graded order: degree first, then coefficients from a_0 upward."""
        return len(self.coeffs), self.coeffs

    def labels(self) -> List[str]:
        return [self.ring.element_label(c) for c in self.coeffs]

    def __str__(self) -> str:
        return format_poly(self)


@dataclass(frozen=True)
class ZeroPair:
    f: Poly
    g: Poly

    def key(self) -> Tuple:
        return self.f.key(), self.g.key()

    def to_dict(self) -> Dict[str, List[str]]:
        return {"f": self.f.labels(), "g": self.g.labels()}


def _same_ring(f: Poly, g: Poly) -> Ring:
    if f.ring is not g.ring:
        raise RingMismatch(MSG_RING_MISMATCH.format(left=f.ring.label, right=g.ring.label))
    return f.ring


def degree(f: Poly) -> int:
    return f.degree


def coefficients(f: Poly) -> Coeffs:
    return f.coeffs


def poly_add(f: Poly, g: Poly) -> Poly:
    R = _same_ring(f, g)
    size = max(len(f.coeffs), len(g.coeffs))
    a = f.coeffs + (R.zero,) * (size - len(f.coeffs))
    b = g.coeffs + (R.zero,) * (size - len(g.coeffs))
    return Poly(R, tuple(R.add(x, y) for x, y in zip(a, b)))


def poly_neg(f: Poly) -> Poly:
    return Poly(f.ring, tuple(f.ring.neg(c) for c in f.coeffs))


def poly_mul(f: Poly, g: Poly) -> Poly:
    R = _same_ring(f, g)
    if f.is_zero or g.is_zero:
        return Poly(R, ())
    out = [R.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == R.zero:
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] = R.add(out[i + j], R.mul(a, b))
    return Poly(R, tuple(out))


def poly_scale_right(f: Poly, r: Elem) -> Poly:
    """f(x)·r, i.e. every coefficient a_i replaced by a_i·r."""
    return Poly(f.ring, tuple(f.ring.mul(a, r) for a in f.coeffs))


def embed_poly(f: Poly, target: Ring, image: Callable[[Elem], Elem]) -> Poly:
    """Push coefficients through an element map into ``target``."""
    return Poly(target, tuple(image(a) for a in f.coeffs))


def pack_coefficients(fs: Sequence[Poly], k: int) -> Poly:
    """Σ f_i(x)·x^(i·k): the substitution y ↦ x^k applied to Σ f_i y^i.

    With k above every degree the blocks do not overlap, so the nonzero
    coefficients of the result are exactly those of the f_i.
    """
    if not fs:
        raise ConstructionError(MSG_PACK_DEGREE.format(k=k, degree="none"))
    R = fs[0].ring
    for f in fs[1:]:
        _same_ring(fs[0], f)
    top = max(f.degree for f in fs)
    if k < 1 or k <= top:
        raise ConstructionError(MSG_PACK_DEGREE.format(k=k, degree=top))
    out = [R.zero] * (k * len(fs))
    for i, f in enumerate(fs):
        for j, a in enumerate(f.coeffs):
            out[i * k + j] = a
    return Poly(R, tuple(out))


def format_poly(f: Poly) -> str:
    if f.is_zero:
        return "0"
    terms = []
    for i, label in enumerate(f.labels()):
        if f.coeffs[i] == f.ring.zero:
            continue
        terms.append(label if i == 0 else f"{label}*x" if i == 1 else f"{label}*x^{i}")
    return " + ".join(terms)


# ---------------- ENUMERATION ----------------

def poly_count(n: int, dmax: int) -> int:
    """Nonzero polynomials of degree ≤ dmax over a ring of order n."""
    return n ** (dmax + 1) - 1


def poly_from_rank(rank: int, n: int) -> Coeffs:
    """Inverse of the graded order: degree blocks of size (n-1)·n^d, then a_0 most significant."""
    d, offset = 0, rank
    while offset >= (n - 1) * n ** d:
        offset -= (n - 1) * n ** d
        d += 1
    offset, lead = divmod(offset, n - 1)
    digits = []
    for _ in range(d):
        offset, digit = divmod(offset, n)
        digits.append(digit)
    return tuple(reversed(digits)) + (lead + 1,)


def poly_rank(coeffs: Coeffs, n: int) -> int:
    d = len(coeffs) - 1
    rank = sum((n - 1) * n ** e for e in range(d))
    offset = 0
    for a in coeffs[:-1]:
        offset = offset * n + a
    return rank + offset * (n - 1) + coeffs[-1] - 1


def iter_polys(n: int, dmax: int) -> Iterator[Coeffs]:
    for d in range(dmax + 1):
        yield from product(*([range(n)] * d + [range(1, n)]))


def max_right_annihilator(R: Ring) -> int:
    def compute() -> int:
        if R.order == 1:
            return 1
        zero_hits = R.table("mul") == R.zero
        return int(zero_hits[1:].sum(axis=1).max())
    return R.cached("max_right_annihilator", compute)


def search_cost(R: Ring, dmax: int) -> int:
    """Upper estimate of partial products for a pruned search up to ``dmax``."""
    n = R.order
    A = max_right_annihilator(R)
    return n ** (dmax + 1) * (n + A ** (dmax + 1) * (dmax + 1))


def check_search_budget(R: Ring, dmax: int, budget: Optional[int] = None) -> int:
    budget = Var.SEARCH_BUDGET if budget is None else budget
    R.materialize()
    if not R.materialized:
        raise BudgetExceeded(
            MSG_BUDGET_TABLES.format(label=R.label, order=R.order, cap=Var.MATERIALIZE_CAP),
            estimate=R.order, budget=Var.MATERIALIZE_CAP,
        )
    estimate = search_cost(R, dmax)
    if estimate > budget:
        logger.warning(f"Refusing zero-pair search over {R.label} at degree {dmax}: ~{estimate} > {budget}")
        raise BudgetExceeded(
            MSG_BUDGET_SEARCH.format(label=R.label, dmax=dmax, estimate=estimate, budget=budget),
            estimate=estimate, budget=budget,
        )
    return estimate


class PairSearch:
    """Pruned zero-partner search over a materialized ring.

    For f with first nonzero coefficient a_s, coefficient s+k of f·g reads
    a_s·b_k + Σ_{i≥1} a_{s+i}·b_{k-i}, so b_k ranges over the fiber
    {b : a_s·b = -Σ_{i≥1} a_{s+i}·b_{k-i}}.
    """

    def __init__(self, R: Ring, dmax: int):
        self.ring = R
        self.dmax = dmax
        self.add, self.mul, self.neg = R.rows()
        self.zero = R.zero
        self._fibers: Dict[int, List[List[int]]] = {}

    def fiber(self, pivot: int) -> List[List[int]]:
        if pivot not in self._fibers:
            row = np.asarray(self.mul[pivot])
            buckets: List[List[int]] = [[] for _ in range(self.ring.order)]
            for b in np.argsort(row, kind="stable").tolist():
                buckets[int(row[b])].append(b)
            self._fibers[pivot] = buckets
        return self._fibers[pivot]

    def partners(self, f: Coeffs) -> List[Coeffs]:
        """Every nonzero g of degree ≤ dmax with f·g = 0, in graded order."""
        add, mul, neg, zero, dmax = self.add, self.mul, self.neg, self.zero, self.dmax
        s = next(i for i, a in enumerate(f) if a != zero)
        tail = f[s + 1:]
        fiber = self.fiber(f[s])
        b = [zero] * (dmax + 1)
        found: List[Coeffs] = []

        def convolve(k: int, low: int) -> int:
            acc = zero
            for i in range(max(1, low), min(len(tail), k) + 1):
                acc = add[acc][mul[tail[i - 1]][b[k - i]]]
            return acc

        def descend(k: int) -> None:
            if k > dmax:
                for top in range(dmax + 1, dmax + len(tail) + 1):
                    if convolve(top, top - dmax) != zero:
                        return
                g = normalize(b, zero)
                if g:
                    found.append(g)
                return
            for choice in fiber[neg[convolve(k, 1)]]:
                b[k] = choice
                descend(k + 1)
            b[k] = zero

        descend(0)
        found.sort(key=lambda g: (len(g), g))
        return found

    def block(self, start: int, stop: int) -> Iterator[Tuple[Coeffs, List[Coeffs]]]:
        n = self.ring.order
        for rank in range(start, stop):
            f = poly_from_rank(rank, n)
            gs = self.partners(f)
            if gs:
                yield f, gs


def enumerate_zero_pairs(R: Ring, dmax: int, budget: Optional[int] = None) -> Iterator[ZeroPair]:
    """Every zero pair with both degrees ≤ dmax, ordered by (f, g) in graded order."""
    check_search_budget(R, dmax, budget)
    search = PairSearch(R, dmax)
    for f, gs in search.block(0, poly_count(R.order, dmax)):
        F = Poly(R, f)
        for g in gs:
            yield ZeroPair(F, Poly(R, g))


def naive_zero_pairs(R: Ring, dmax: int) -> Iterator[ZeroPair]:
    """Unpruned double loop; the reference the pruned search is tested against.

    The inner loop over g runs as one table lookup per coefficient pair,
    over every candidate g at once.
    """
    polys = list(iter_polys(R.order, dmax))
    if not polys:
        return
    add, mul = R.table("add"), R.table("mul")
    width = dmax + 1
    G = np.array([g + (R.zero,) * (width - len(g)) for g in polys], dtype=np.int64)
    for f in polys:
        out = np.full((len(polys), len(f) + width - 1), R.zero, dtype=np.int64)
        for i, a in enumerate(f):
            if a == R.zero:
                continue
            for j in range(width):
                out[:, i + j] = add[out[:, i + j], mul[a][G[:, j]]]
        F = Poly(R, f)
        for k in np.nonzero((out == R.zero).all(axis=1))[0].tolist():
            yield ZeroPair(F, Poly(R, polys[k]))
