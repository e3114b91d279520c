# McCoy/utils/render_template.py

import os

from jinja2 import Environment, FileSystemLoader

from McCoy.utils.human_readable import humancount
from McCoy.utils.logger import logger

TEMPLATE_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'template')

template_env = Environment(
    loader=FileSystemLoader(TEMPLATE_DIR),
    enable_async=True,
    cache_size=50,
    auto_reload=False,
    optimized=True,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)
template_env.filters['humancount'] = humancount


async def render_report(kind: str, **context) -> str:
    try:
        template = template_env.get_template(f'{kind}.txt.j2')
        return await template.render_async(**context)
    except Exception as e:
        logger.error(f"Error rendering {kind} report: {e}", exc_info=True)
        raise
