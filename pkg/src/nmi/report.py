"""Structured run reports.

A :class:`Report` is an ordered list of ``key = value`` entries.  Values are
rendered exactly: integers as integers, rationals as ``p/q``, vectors as
parenthesized lists and booleans as ``true``/``false``.  Nothing
time-dependent is recorded unless timing is requested explicitly, so two
runs on the same input produce byte-identical output.
"""

from fractions import Fraction
from typing import Any, List, Tuple


def render_value(v: Any) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else str(v.numerator)
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(render_value(x) for x in v) + ")"
    if isinstance(v, float):
        return f"{v:.3f}"
    return str(v)


class Report:
    """Ordered key/value document produced by one command."""

    def __init__(self, command: str):
        self.command = command
        self.entries: List[Tuple[str, Any]] = []

    def add(self, key: str, value: Any) -> "Report":
        self.entries.append((key, value))
        return self

    def extend(self, prefix: str, items) -> "Report":
        for key, value in items:
            self.add(f"{prefix}.{key}" if prefix else key, value)
        return self

    def get(self, key: str, default=None):
        for k, v in self.entries:
            if k == key:
                return v
        return default

    def keys(self):
        return [k for k, _ in self.entries]

    def to_kv(self) -> str:
        lines = [f"command = {self.command}"]
        lines += [f"{k} = {render_value(v)}" for k, v in self.entries]
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        width = max((len(k) for k, _ in self.entries), default=0)
        lines = [f"nmi {self.command}"]
        lines += [f"  {k.ljust(width)}  {render_value(v)}" for k, v in self.entries]
        return "\n".join(lines) + "\n"

    def render(self, fmt: str = "text") -> str:
        if fmt == "kv":
            return self.to_kv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown report format {fmt!r}")


def parse_kv(text: str):
    """Read a ``kv`` document back into an ordered list of (key, raw string) pairs."""
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        key, sep, value = line.partition(" = ")
        if not sep:
            raise ValueError(f"not a key/value line: {line!r}")
        out.append((key, value))
    return out
