"""Utility functions shared by the computation modules and the CLI."""

import os
from fractions import Fraction
from typing import FrozenSet, Iterable, Union


def prepare_cache_dir(directory: str) -> str:
    """
    Expand ``~`` in an invariant cache directory and create it if needed.

    Args:
        directory: Path from --cache-dir, the config file or $FLAGCOH_CACHE

    Returns:
        The absolute directory path
    """
    path = os.path.abspath(os.path.expanduser(directory))
    os.makedirs(path, exist_ok=True)
    return path


def format_rational(value: Union[int, Fraction]) -> str:
    """
    Format an exact rational as ``p/q`` (or ``p`` when integral).

    Args:
        value: Integer or Fraction

    Returns:
        Text form used by the polynomial format and JSON output
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Parse the ``p/q`` text form back into a Fraction.

    Args:
        text: Rational in ``p`` or ``p/q`` form

    Returns:
        The exact value
    """
    return Fraction(text.strip())


def parse_node_list(text: str) -> FrozenSet[int]:
    """
    Parse a comma separated list of node indices; the empty string is the empty set.

    Args:
        text: Text such as ``"1,3"`` or ``""``

    Returns:
        Frozen set of integers
    """
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(part) for part in text.split(',') if part.strip())
    except ValueError:
        raise ValueError(f"invalid node list: {text!r}")


def format_nodes(nodes: Iterable[int]) -> str:
    """Render a node set as ``{1,3}`` (``{}`` when empty)."""
    return '{' + ','.join(str(i) for i in sorted(nodes)) + '}'


def format_duration(seconds: float) -> str:
    """Wall time of a run for the log: ``850ms``, ``12.3s`` or ``4m07s``."""
    if seconds < 1:
        return f"{seconds * 1000:.0f}ms"
    if seconds < 60:
        return f"{seconds:.1f}s"
    minutes, secs = divmod(int(round(seconds)), 60)
    return f"{minutes}m{secs:02d}s"
