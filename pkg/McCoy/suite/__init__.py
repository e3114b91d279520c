# McCoy/suite/__init__.py

import asyncio
import glob
import importlib.util
import os
import sys
import threading
import time
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from McCoy.core.mccoy import Family, PropertyKind, Side, Verdict, check_property
from McCoy.core.ring import Ring
from McCoy.utils.evaluator import Evaluator
from McCoy.utils.exceptions import BudgetExceeded, ConstructionError, McCoyError
from McCoy.utils.logger import logger
from McCoy.utils.messages import MSG_SKIP_BUDGET, MSG_SUITE_DONE, MSG_VALIDATION_DONE
from McCoy.utils.report import resources
from McCoy.utils.time_format import get_readable_time
from McCoy.vars import Var

PLUGIN_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "plugins", "*.py")


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


@dataclass
class Validation:
    """Outcome of one claim checked on concrete instances.

    Failures keep the first offending instance; skips carry their reason.
    """

    name: str
    claim: str
    instances: List[str] = field(default_factory=list)
    status: Status = Status.PASS
    reason: str = ""
    evidence: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status is not Status.FAIL

    def fail(self, reason: str, instance: Optional[str] = None) -> "Validation":
        if self.status is not Status.FAIL:
            self.status = Status.FAIL
            self.reason = reason
            if instance is not None:
                self.evidence["failing_instance"] = instance
        return self

    def skip(self, reason: str) -> "Validation":
        if self.status is Status.PASS:
            self.status = Status.SKIPPED
            self.reason = reason
        return self

    def expect(self, condition: bool, reason: str, instance: Optional[str] = None) -> bool:
        if not condition:
            self.fail(reason, instance)
        return bool(condition)

    def merge(self, other: "Validation", key: str) -> None:
        """Fold a sub-validation in: failures win, then skips."""
        self.instances.extend(i for i in other.instances if i not in self.instances)
        self.evidence[key] = other.to_dict()
        if other.status is Status.FAIL:
            self.fail(f"{key}: {other.reason}", other.evidence.get("failing_instance"))
        elif other.status is Status.SKIPPED and self.status is Status.PASS and not self.reason:
            self.reason = f"{key} skipped: {other.reason}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "claim": self.claim,
            "instances": list(self.instances),
            "status": self.status.value,
            "reason": self.reason or None,
            "evidence": self.evidence,
        }


# ---------------- HELPERS FOR VALIDATIONS ----------------

def verdict(R: Ring, family: Family, dmax: int, side: Side = Side.RIGHT, budget: Optional[int] = None) -> Verdict:
    """Single-worker property check; suite jobs already run concurrently."""
    return check_property(R, PropertyKind(family, side), dmax, workers=1, budget=budget, log_limit=0)


def summary(v: Verdict) -> Dict[str, Any]:
    return v.to_dict(include_witnesses=False)


def guarded(validation: Validation, body: Callable[[], None]) -> Validation:
    """Run ``body``; budget refusals and refused constructions become skips."""
    try:
        body()
    except BudgetExceeded as e:
        validation.skip(MSG_SKIP_BUDGET.format(reason=e))
    except ConstructionError as e:
        validation.skip(str(e))
    return validation


# ---------------- REGISTRY ----------------

@dataclass
class SuiteContext:
    evaluator: Evaluator
    truncation: int = field(default_factory=lambda: Var.EXAMPLE_TRUNCATION)
    budget: Optional[int] = None

    def ring(self, expr: str) -> Ring:
        return self.evaluator(expr)


@dataclass(frozen=True)
class SuiteJob:
    index: int
    name: str
    run: Callable[[SuiteContext], Validation]


SUITES: Dict[str, Dict[str, SuiteJob]] = {}
_import_lock = threading.Lock()


def suite_job(index: int, suite: str = "paper") -> Callable:
    def decorator(func: Callable[[SuiteContext], Validation]) -> Callable[[SuiteContext], Validation]:
        SUITES.setdefault(suite, {})[func.__name__] = SuiteJob(index, func.__name__, func)
        return func
    return decorator


def import_plugins() -> int:
    with _import_lock:
        plugins = sorted(glob.glob(PLUGIN_PATH))
        success_count = 0
        failed_plugins = []

        for file_path in plugins:
            plugin_path = Path(file_path)
            plugin_name = plugin_path.stem
            if plugin_name.startswith("_"):
                continue
            import_path = f"McCoy.suite.plugins.{plugin_name}"
            if import_path in sys.modules:
                success_count += 1
                continue
            try:
                spec = importlib.util.spec_from_file_location(import_path, plugin_path)
                if spec is None or spec.loader is None:
                    logger.error(f"Invalid plugin specification for {plugin_name}")
                    failed_plugins.append(plugin_name)
                    continue
                module = importlib.util.module_from_spec(spec)
                sys.modules[import_path] = module
                spec.loader.exec_module(module)
                success_count += 1
            except Exception as e:
                sys.modules.pop(import_path, None)
                logger.error(f"Failed to import suite plugin {plugin_name}: {e}", exc_info=True)
                failed_plugins.append(plugin_name)

        if failed_plugins:
            logger.warning(f"Suite plugins failed to import: {', '.join(failed_plugins)}")
        logger.debug(f"Imported {success_count} of {len(plugins)} suite plugins")
        return success_count


def jobs(suite: str = "paper") -> List[SuiteJob]:
    import_plugins()
    return sorted(SUITES.get(suite, {}).values(), key=lambda job: job.index)


# ---------------- RUNNER ----------------

@dataclass
class SuiteReport:
    suite: str
    truncation: int
    validations: List[Validation]
    resources: Dict[str, Any]

    @property
    def counts(self) -> Dict[str, int]:
        return {
            "passed": sum(v.status is Status.PASS for v in self.validations),
            "failed": sum(v.status is Status.FAIL for v in self.validations),
            "skipped": sum(v.status is Status.SKIPPED for v in self.validations),
        }

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.validations)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "truncation": self.truncation,
            "summary": self.counts,
            "validations": [v.to_dict() for v in self.validations],
            "resources": self.resources,
        }


def _run_job(job: SuiteJob, context: SuiteContext) -> Validation:
    try:
        return job.run(context)
    except McCoyError as e:
        # a consistency fault inside a claim is a finding, not a crash
        logger.error(f"Validation {job.name} raised: {e}", exc_info=True)
        return Validation(job.name, "", status=Status.FAIL, reason=f"{type(e).__name__}: {e}")
    except Exception as e:
        logger.error(f"Validation {job.name} crashed: {e}", exc_info=True)
        return Validation(job.name, "", status=Status.FAIL, reason=f"unexpected {type(e).__name__}: {e}")


async def run_suite(
    suite: str = "paper",
    *,
    context: Optional[SuiteContext] = None,
    workers: Optional[int] = None,
    only: Optional[List[str]] = None,
) -> SuiteReport:
    started = time.time()
    context = context or SuiteContext(Evaluator())
    workers = Var.WORKERS if workers is None else max(1, workers)
    selected = [job for job in jobs(suite) if not only or job.name in only]
    semaphore = asyncio.Semaphore(workers)

    async def run_one(job: SuiteJob) -> Validation:
        async with semaphore:
            job_started = time.time()
            result = await asyncio.to_thread(_run_job, job, context)
            logger.info(MSG_VALIDATION_DONE.format(
                status=result.status.value, name=job.name, elapsed=get_readable_time(time.time() - job_started)))
            return result

    results = await asyncio.gather(*(run_one(job) for job in selected))
    report = SuiteReport(suite, context.truncation, list(results), resources(started))
    counts = report.counts
    logger.info(MSG_SUITE_DONE.format(**counts, elapsed=get_readable_time(time.time() - started)))
    return report
