# McCoy/utils/report.py

import json
import time
from typing import Any, Dict

import psutil

from McCoy.utils.human_readable import humanbytes
from McCoy.utils.time_format import get_readable_time

SCHEMA_VERSION = 1


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def envelope(command: str, body: Dict[str, Any]) -> Dict[str, Any]:
    return {"schema": SCHEMA_VERSION, "command": command, **body}


def resources(started: float) -> Dict[str, Any]:
    """Peak memory and CPU time of this process, for the suite report."""
    proc = psutil.Process()
    cpu = proc.cpu_times()
    memory = proc.memory_info()
    peak = getattr(memory, "peak_wset", None) or memory.rss
    elapsed = time.time() - started
    return {
        "peak_rss": humanbytes(peak),
        "cpu_time": get_readable_time(cpu.user + cpu.system),
        "elapsed": get_readable_time(elapsed),
    }
