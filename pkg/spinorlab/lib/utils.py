# lib/utils.py
import click
from enum import Enum
import json
import sys
import numpy as np

from .errors import EXIT_INCONSISTENT


class BorderColor(Enum):
    YELLOW = '\033[93m'  # Bright yellow
    BLUE = '\033[94m'    # Bright blue
    RED = '\033[91m'     # Bright red


def print_unicode_box(message: str, color: BorderColor = BorderColor.YELLOW, err: bool = False):
    border_color = color.value
    reset_color = '\033[0m'

    lines = message.split('\n')
    width = max(len(line) for line in lines)
    click.echo(border_color + '┌' + '─' * (width + 2) + '┐' + reset_color, err=err)
    for line in lines:
        click.echo(border_color + '│ ' + line.ljust(width) + ' │' + reset_color, err=err)
    click.echo(border_color + '└' + '─' * (width + 2) + '┘' + reset_color, err=err)


def catch_error_and_exit(errmsg, logger, exit_code=EXIT_INCONSISTENT):
    logger.error(errmsg)
    sys.exit(exit_code)


def parse_vector(value, size=3, name='vector'):
    """'0.7,0,0.7' -> array; accepts sequences as well."""
    if isinstance(value, str):
        try:
            parts = [float(item) for item in value.replace(' ', '').split(',') if item != '']
        except ValueError:
            raise click.BadParameter(f"{name} must be {size} comma separated numbers, got '{value}'")
    else:
        parts = [float(item) for item in value]
    if len(parts) != size:
        raise click.BadParameter(f"{name} must have {size} components, got {len(parts)}")
    return np.array(parts)


def to_builtin(value):
    """Convert numpy scalars and arrays to plain JSON-serializable values."""
    if isinstance(value, dict):
        return {key: to_builtin(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_builtin(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_builtin(value.tolist())
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


def to_json_line(record):
    """One report per line; keys keep insertion order."""
    return json.dumps(to_builtin(record), sort_keys=False)
