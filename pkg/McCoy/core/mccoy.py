# McCoy/core/mccoy.py

import multiprocessing
import threading
import time
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from McCoy.core.constructions import opposite
from McCoy.core.poly import (
    Coeffs,
    PairSearch,
    Poly,
    ZeroPair,
    check_search_budget,
    poly_count,
    poly_mul,
)
from McCoy.core.radical import jacobson_radical, nilpotents
from McCoy.core.ring import Elem, Ring
from McCoy.utils.exceptions import ConsistencyFault, ConstructionError
from McCoy.utils.logger import logger
from McCoy.utils.messages import (
    MSG_AUDIT_CONTAINMENT,
    MSG_AUDIT_SEMISIMPLE,
    MSG_COUNTEREXAMPLE_INVALID,
    MSG_PROPERTY_UNKNOWN,
    MSG_WITNESS_INVALID,
    MSG_ZERO_POLY,
)
from McCoy.utils.time_format import get_readable_time
from McCoy.vars import Var

PARALLEL_MIN_RANKS = 2048


class Family(str, Enum):
    MCCOY = "mccoy"
    NC = "nc-mccoy"
    J = "j-mccoy"


class Side(str, Enum):
    RIGHT = "right"
    LEFT = "left"


@dataclass(frozen=True)
class PropertyKind:
    family: Family
    side: Side = Side.RIGHT

    @classmethod
    def parse(cls, family: str, side: str = "right") -> "PropertyKind":
        try:
            return cls(Family(family.lower()), Side(side.lower()))
        except ValueError:
            raise ConstructionError(MSG_PROPERTY_UNKNOWN.format(name=f"{side} {family}"))

    def __str__(self) -> str:
        return f"{self.side.value} {self.family.value}"

    def to_dict(self) -> Dict[str, str]:
        return {"family": self.family.value, "side": self.side.value}


# ---------------- WITNESSES ----------------

def target_mask(R: Ring, family: Family) -> np.ndarray:
    """Where a_i·r has to land: {0}, N(R) or J(R)."""
    def compute() -> np.ndarray:
        mask = np.zeros(R.order, dtype=bool)
        if family is Family.MCCOY:
            members = [R.zero]
        elif family is Family.NC:
            members = sorted(nilpotents(R))
        else:
            members = sorted(jacobson_radical(R))
        mask[members] = True
        return mask
    return R.cached(("target", family), compute)


class WitnessChooser:
    """Admissible witness sets per coefficient set, cached."""

    def __init__(self, R: Ring, family: Family, side: Side = Side.RIGHT):
        self.ring = R
        self.family = family
        self.side = side
        mul = R.table("mul")
        self._products = mul if side is Side.RIGHT else np.ascontiguousarray(mul.T)
        self._target = target_mask(R, family)
        self._memo: Dict[FrozenSet[int], np.ndarray] = {}

    def admissible(self, coeffs: Iterable[int]) -> np.ndarray:
        key = frozenset(int(a) for a in coeffs) - {self.ring.zero}
        mask = self._memo.get(key)
        if mask is None:
            rows = self._products[sorted(key)] if key else np.zeros((0, self.ring.order), dtype=np.int32)
            mask = self._target[rows].all(axis=0)
            mask[self.ring.zero] = False
            self._memo[key] = mask
        return mask

    def least(self, coeffs: Iterable[int]) -> Optional[Elem]:
        mask = self.admissible(coeffs)
        return int(mask.argmax()) if mask.any() else None


def chooser(R: Ring, family: Family, side: Side = Side.RIGHT) -> WitnessChooser:
    return R.cached(("chooser", family, side), lambda: WitnessChooser(R, family, side))


def admissible_witnesses(f: Poly, family: Family, side: Side = Side.RIGHT) -> FrozenSet[Elem]:
    if f.is_zero:
        raise ConstructionError(MSG_ZERO_POLY)
    mask = chooser(f.ring, family, side).admissible(f.coeffs)
    return frozenset(np.nonzero(mask)[0].tolist())


def witness_right(f: Poly, kind: PropertyKind) -> Optional[Elem]:
    """Least nonzero r with a_i·r in the family's target set for every coefficient a_i."""
    if f.is_zero:
        raise ConstructionError(MSG_ZERO_POLY)
    return chooser(f.ring, kind.family, kind.side).least(f.coeffs)


def _satisfies(R: Ring, coeffs: Sequence[int], r: Elem, targets: FrozenSet[Elem], side: Side) -> bool:
    for a in coeffs:
        product = R.mul(a, r) if side is Side.RIGHT else R.mul(r, a)
        if product not in targets:
            return False
    return True


def _target_set(R: Ring, family: Family) -> FrozenSet[Elem]:
    return frozenset(np.nonzero(target_mask(R, family))[0].tolist())


# ---------------- VERDICTS ----------------

@dataclass
class Verdict:
    ring: str
    kind: PropertyKind
    dmax: int
    counterexample: Optional[ZeroPair] = None
    pairs_examined: int = 0
    witness_log: Dict[ZeroPair, Elem] = field(default_factory=dict)
    log_truncated: bool = False
    search_estimate: int = 0

    @property
    def holds(self) -> bool:
        return self.counterexample is None

    @property
    def outcome(self) -> str:
        return f"HoldsUpToDegree({self.dmax})" if self.holds else "Counterexample"

    def witness_of(self, f: Poly, g: Poly) -> Optional[Elem]:
        return self.witness_log.get(ZeroPair(f, g))

    def to_dict(self, include_witnesses: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "ring": self.ring,
            "property": self.kind.to_dict(),
            "dmax": self.dmax,
            "outcome": self.outcome,
            "pairs_examined": self.pairs_examined,
            "search_estimate": self.search_estimate,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "witness_log_size": len(self.witness_log),
            "witness_log_truncated": self.log_truncated,
        }
        if include_witnesses:
            data["witnesses"] = [
                {**pair.to_dict(), "r": pair.f.ring.element_label(r)}
                for pair, r in self.witness_log.items()
            ]
        return data


Raw = Tuple[Coeffs, Coeffs, Elem]
BlockResult = Tuple[int, Optional[Tuple[Coeffs, Coeffs]], List[Raw]]

# rings handed to forked workers; populated before the pool starts
_SEARCH_RINGS: Dict[int, Ring] = {}


def _scan(R: Ring, family: Family, dmax: int, start: int, stop: int, log_limit: int) -> BlockResult:
    search = R.cached(("pair_search", dmax), lambda: PairSearch(R, dmax))
    pick = chooser(R, family)
    examined = 0
    log: List[Raw] = []
    for f, gs in search.block(start, stop):
        r = pick.least(f)
        for g in gs:
            examined += 1
            if r is None:
                return examined, (f, g), log
            if len(log) < log_limit:
                log.append((f, g, r))
    return examined, None, log


def _scan_block(token: int, family: str, dmax: int, start: int, stop: int, log_limit: int) -> BlockResult:
    return _scan(_SEARCH_RINGS[token], Family(family), dmax, start, stop, log_limit)


def _make_executor(max_workers: int) -> Executor:
    # forking from a non-main thread can copy locks held by other threads
    if threading.current_thread() is not threading.main_thread():
        logger.debug("Zero-pair search called off the main thread; using a thread pool.")
        return ThreadPoolExecutor(max_workers=max_workers)
    try:
        ctx = multiprocessing.get_context("fork")
        return ProcessPoolExecutor(max_workers=max_workers, mp_context=ctx)
    except Exception as e:
        logger.warning(f"Process pool with fork unavailable ({e}); falling back to threads.")
        return ThreadPoolExecutor(max_workers=max_workers)


def _scan_parallel(R: Ring, family: Family, dmax: int, total: int, workers: int, log_limit: int) -> List[BlockResult]:
    blocks = workers * 4
    size = -(-total // blocks)
    bounds = [(start, min(start + size, total)) for start in range(0, total, size)]
    token = id(R)
    _SEARCH_RINGS[token] = R
    results: List[BlockResult] = []
    try:
        executor = _make_executor(workers)
        try:
            futures = [
                executor.submit(_scan_block, token, family.value, dmax, start, stop, log_limit)
                for start, stop in bounds
            ]
            for future in futures:
                result = future.result()
                results.append(result)
                if result[1] is not None:
                    break
        finally:
            executor.shutdown(wait=True, cancel_futures=True)
    finally:
        _SEARCH_RINGS.pop(token, None)
    return results


def _merge(blocks: List[BlockResult], log_limit: int) -> BlockResult:
    examined, log = 0, []
    for count, counterexample, block_log in blocks:
        examined += count
        log.extend(block_log[: max(0, log_limit - len(log))])
        if counterexample is not None:
            return examined, counterexample, log
    return examined, None, log


def check_property(
    R: Ring,
    kind: PropertyKind,
    dmax: int,
    *,
    workers: Optional[int] = None,
    budget: Optional[int] = None,
    log_limit: Optional[int] = None,
) -> Verdict:
    """Search every zero pair up to ``dmax`` for one without an admissible witness.

    Left-handed properties are the right-handed ones of the opposite ring;
    pairs found there are reported back in the orientation of ``R``.
    """
    workers = Var.WORKERS if workers is None else max(1, workers)
    log_limit = Var.WITNESS_LOG_LIMIT if log_limit is None else log_limit
    search_ring = R if kind.side is Side.RIGHT else opposite(R)
    estimate = check_search_budget(search_ring, dmax, budget)
    total = poly_count(search_ring.order, dmax)

    started = time.time()
    # everything a forked worker reads is built here first
    search_ring.rows()
    search_ring.cached(("pair_search", dmax), lambda: PairSearch(search_ring, dmax))
    chooser(search_ring, kind.family)
    if workers > 1 and total >= PARALLEL_MIN_RANKS:
        blocks = _scan_parallel(search_ring, kind.family, dmax, total, workers, log_limit + 1)
    else:
        blocks = [_scan(search_ring, kind.family, dmax, 0, total, log_limit + 1)]
    examined, counterexample, raw_log = _merge(blocks, log_limit + 1)

    truncated = len(raw_log) > log_limit
    raw_log = raw_log[:log_limit]

    def orient(f: Coeffs, g: Coeffs) -> ZeroPair:
        if kind.side is Side.RIGHT:
            return ZeroPair(Poly(R, f), Poly(R, g))
        return ZeroPair(Poly(R, g), Poly(R, f))

    verdict = Verdict(
        ring=R.label,
        kind=kind,
        dmax=dmax,
        counterexample=orient(*counterexample) if counterexample else None,
        pairs_examined=examined,
        witness_log={orient(f, g): r for f, g, r in raw_log},
        log_truncated=truncated,
        search_estimate=estimate,
    )
    _reverify(R, verdict)
    logger.info(
        f"{kind} on {R.label} up to degree {dmax}: {verdict.outcome} after {examined} pairs "
        f"({get_readable_time(time.time() - started)})"
    )
    return verdict


def _reverify(R: Ring, verdict: Verdict) -> None:
    """Re-check witnesses and counterexamples by scalar arithmetic, off the search path."""
    side = verdict.kind.side
    targets = _target_set(R, verdict.kind.family)
    seen = set()
    for pair, r in verdict.witness_log.items():
        name, checked = ("f", pair.f) if side is Side.RIGHT else ("g", pair.g)
        if (checked.coeffs, r) in seen:
            continue
        seen.add((checked.coeffs, r))
        if r == R.zero or not _satisfies(R, checked.coeffs, r, targets, side):
            raise ConsistencyFault(MSG_WITNESS_INVALID.format(
                witness=R.element_label(r), name=name, poly=checked, family=verdict.kind.family.value))
    pair = verdict.counterexample
    if pair is None:
        return
    if pair.f.is_zero or pair.g.is_zero or not poly_mul(pair.f, pair.g).is_zero:
        raise ConsistencyFault(MSG_COUNTEREXAMPLE_INVALID.format(label=R.label, reason="not a zero pair"))
    coeffs = pair.f.coeffs if side is Side.RIGHT else pair.g.coeffs
    for r in range(R.order):
        if r != R.zero and _satisfies(R, coeffs, r, targets, side):
            raise ConsistencyFault(MSG_COUNTEREXAMPLE_INVALID.format(
                label=R.label, reason=f"{R.element_label(r)} is a witness"))


def hunt(rings: Iterable[Ring], kind: PropertyKind, dmax: int, **options: Any) -> Iterator[Verdict]:
    """Stream verdicts across a list of rings."""
    for R in rings:
        yield check_property(R, kind, dmax, **options)


# ---------------- AUDIT ----------------

@dataclass
class AuditReport:
    ring: str
    dmax: int
    pairs: int = 0
    nilpotents_in_radical: bool = True
    j_semisimple: bool = False
    nc_outside_j: int = 0
    verdicts: Dict[str, Optional[ZeroPair]] = field(default_factory=dict)

    def outcome(self, family: Family) -> str:
        return f"HoldsUpToDegree({self.dmax})" if self.verdicts.get(family.value) is None else "Counterexample"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ring": self.ring,
            "dmax": self.dmax,
            "pairs": self.pairs,
            "nilpotents_in_radical": self.nilpotents_in_radical,
            "j_semisimple": self.j_semisimple,
            "nc_outside_j": self.nc_outside_j,
            "verdicts": {
                name: {
                    "outcome": self.outcome(Family(name)),
                    "counterexample": pair.to_dict() if pair else None,
                }
                for name, pair in sorted(self.verdicts.items())
            },
        }


def implication_audit(R: Ring, dmax: int, *, budget: Optional[int] = None) -> AuditReport:
    """Witness-set containments McCoy ⊆ NC ⊆ J per zero pair, over one pair stream."""
    check_search_budget(R, dmax, budget)
    J, N = jacobson_radical(R), nilpotents(R)
    report = AuditReport(
        ring=R.label,
        dmax=dmax,
        nilpotents_in_radical=N <= J,
        j_semisimple=J == frozenset({R.zero}),
        verdicts={family.value: None for family in Family},
    )
    picks = {family: chooser(R, family) for family in Family}
    search = R.cached(("pair_search", dmax), lambda: PairSearch(R, dmax))

    for f, gs in search.block(0, poly_count(R.order, dmax)):
        plain, nc, jac = (picks[family].admissible(f) for family in Family)
        poly = Poly(R, f)
        if (plain & ~nc).any():
            raise ConsistencyFault(MSG_AUDIT_CONTAINMENT.format(smaller="McCoy", larger="NC", poly=poly, label=R.label))
        if (plain & ~jac).any():
            raise ConsistencyFault(MSG_AUDIT_CONTAINMENT.format(smaller="McCoy", larger="J", poly=poly, label=R.label))
        if (nc & ~jac).any():
            if report.nilpotents_in_radical:
                raise ConsistencyFault(MSG_AUDIT_CONTAINMENT.format(smaller="NC", larger="J", poly=poly, label=R.label))
            report.nc_outside_j += len(gs)
        if report.j_semisimple and not np.array_equal(plain, jac):
            raise ConsistencyFault(MSG_AUDIT_SEMISIMPLE.format(label=R.label, poly=poly))
        for family, mask in zip(Family, (plain, nc, jac)):
            if report.verdicts[family.value] is None and not mask.any():
                report.verdicts[family.value] = ZeroPair(poly, Poly(R, gs[0]))
        report.pairs += len(gs)

    logger.info(
        f"Audit of {R.label} up to degree {dmax}: {report.pairs} pairs, "
        + ", ".join(f"{family.value} {report.outcome(family)}" for family in Family)
    )
    return report
