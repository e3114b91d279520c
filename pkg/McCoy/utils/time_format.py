# McCoy/utils/time_format.py

from McCoy.utils.logger import logger

_TIME_PERIODS = (('d', 86400), ('h', 3600), ('m', 60))

def get_readable_time(seconds: float) -> str:
    """Wall/CPU durations for reports: 0.042 -> '42ms', 75.31 -> '1m 15.3s'."""
    try:
        if seconds < 1:
            return f"{int(seconds * 1000)}ms"
        parts = []
        for suffix, period in _TIME_PERIODS:
            if seconds >= period:
                value, seconds = divmod(seconds, period)
                parts.append(f"{int(value)}{suffix}")
        if seconds >= 0.05 or not parts:
            parts.append(f"{seconds:.1f}s")
        return ' '.join(parts)
    except Exception as e:
        logger.error(f"Error formatting duration {seconds!r}: {e}", exc_info=True)
        return "N/A"
