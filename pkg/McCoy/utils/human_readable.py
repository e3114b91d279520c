# McCoy/utils/human_readable.py

from McCoy.utils.logger import logger

_UNITS = ('', 'K', 'M', 'G', 'T', 'P', 'E', 'Z', 'Y')
_COUNT_UNITS = ('', 'k', 'M', 'G', 'T', 'P')

def humanbytes(size: int, decimal_places: int = 2) -> str:
    try:
        if not size:
            return "0 B"
        n = 0
        while size >= 1024 and n < len(_UNITS) - 1:
            size /= 1024
            n += 1
        return f"{round(size, decimal_places)} {_UNITS[n]}B"
    except Exception as e:
        logger.error(f"Error in humanbytes for size {size}: {e}", exc_info=True)
        return "N/A"

def humancount(count: int, decimal_places: int = 1) -> str:
    """Search-space sizes: 67108864 -> '67.1M'."""
    try:
        value = float(count)
        n = 0
        while abs(value) >= 1000 and n < len(_COUNT_UNITS) - 1:
            value /= 1000
            n += 1
        if n == 0:
            return str(int(count))
        return f"{round(value, decimal_places)}{_COUNT_UNITS[n]}"
    except Exception as e:
        logger.error(f"Error in humancount for {count}: {e}", exc_info=True)
        return "N/A"
