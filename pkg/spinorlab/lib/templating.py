# lib/templating.py
import os
from jinja2 import Environment, FileSystemLoader

TEMPLATE_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'templates')
TABLE_TEMPLATE = 'report.table.j2'


def format_cell(value, precision=4):
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, float):
        return f"{value:.{precision}e}" if value != 0 and (abs(value) < 1e-3 or abs(value) >= 1e5) \
            else f"{value:.{precision}f}"
    if isinstance(value, (list, tuple)):
        return '(' + ', '.join(format_cell(item, precision) for item in value) + ')'
    return str(value)


def setup_environment(logger):
    logger.debug(f"(templating.setup_environment) loading templates from {TEMPLATE_DIR}")
    env = Environment(loader=FileSystemLoader(TEMPLATE_DIR), autoescape=False, trim_blocks=True,
                      lstrip_blocks=True, keep_trailing_newline=False)
    return env


def render_table(title, columns, rows, logger, footer=None):
    """Render rows (dicts) as a fixed-width text table, one column per key in `columns`."""
    cells = [[format_cell(row.get(column)) for column in columns] for row in rows]
    widths = [max([len(column)] + [len(line[i]) for line in cells]) for i, column in enumerate(columns)]
    template = setup_environment(logger).get_template(TABLE_TEMPLATE)
    return template.render(title=title, columns=columns, rows=cells, widths=widths, footer=footer)
