# McCoy/vars.py

import os

from dotenv import load_dotenv
from McCoy.utils.logger import logger

load_dotenv("config.env")

def str_to_bool(val: str) -> bool:
    return val.lower() in ("true", "1", "t", "y", "yes")

def str_to_int(val: str, default: int) -> int:
    try:
        # accepts 1e9-style literals as well as plain integers
        return int(float(val)) if val.strip() else default
    except (TypeError, ValueError):
        logger.warning(f"Invalid integer setting '{val}', using {default}.")
        return default


class Var:
    MATERIALIZE_CAP: int = str_to_int(os.getenv("MATERIALIZE_CAP", ""), 4096)
    ORDER_CAP: int = str_to_int(os.getenv("ORDER_CAP", ""), 10**12)

    if MATERIALIZE_CAP <= 0 or ORDER_CAP < MATERIALIZE_CAP:
        logger.critical("MATERIALIZE_CAP must be > 0 and not exceed ORDER_CAP")
        raise ValueError("MATERIALIZE_CAP must be > 0 and not exceed ORDER_CAP")

    SEARCH_BUDGET: int = str_to_int(os.getenv("SEARCH_BUDGET", ""), 10**9)
    RADICAL_BUDGET: int = str_to_int(os.getenv("RADICAL_BUDGET", ""), 2 * 10**7)

    if SEARCH_BUDGET <= 0 or RADICAL_BUDGET <= 0:
        logger.critical("SEARCH_BUDGET and RADICAL_BUDGET must be > 0")
        raise ValueError("SEARCH_BUDGET and RADICAL_BUDGET must be > 0")

    AXIOM_SAMPLES: int = str_to_int(os.getenv("AXIOM_SAMPLES", ""), 2000)
    WITNESS_LOG_LIMIT: int = str_to_int(os.getenv("WITNESS_LOG_LIMIT", ""), 100_000)

    WORKERS: int = max(1, str_to_int(os.getenv("WORKERS", ""), 1))

    EXAMPLE_TRUNCATION: int = str_to_int(os.getenv("EXAMPLE_TRUNCATION", ""), 4)

    if EXAMPLE_TRUNCATION < 2:
        logger.warning("EXAMPLE_TRUNCATION below 2 is degenerate; using 4.")
        EXAMPLE_TRUNCATION = 4

    REGISTRY_FILE: str = os.getenv("REGISTRY_FILE", "").strip()

    REPORT_FORMAT: str = os.getenv("REPORT_FORMAT", "json").strip().lower()
    SHOW_BANNER: bool = str_to_bool(os.getenv("SHOW_BANNER", "False"))
