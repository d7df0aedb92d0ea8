"""Plain-text interchange for tables of marks.

::

    TOM S3 4
    CLASS 1 order=1 length=1 label=1
    ...
    ROW 1: 6
    ROW 2: 3 1
    ...
    PROPS 1: 1 1 1 1 1        (optional block: abelian cyclic nilpotent solvable supersolvable)

Export is canonical, so export -> import -> export reproduces the bytes.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Union

import numpy as np

from .marks import MarksTable
from .properties import PropertyFlags

_CLASS = re.compile(r"^CLASS (\d+) order=(\d+) length=(\d+) label=(\S+)$")
_ROW = re.compile(r"^ROW (\d+):((?: \d+)+)$")
_PROPS = re.compile(r"^PROPS (\d+):((?: [01]){5})$")


class TomFormatError(ValueError):
    """The text is not well-formed tom-text (before any invariant is checked)."""


def dumps(mt: MarksTable, props: bool = True) -> str:
    r = len(mt)
    if any(" " in lbl for lbl in mt.labels) or " " in mt.name:
        raise ValueError("names and labels must not contain spaces")
    lines = [f"TOM {mt.name} {r}"]
    for i in range(r):
        lines.append(f"CLASS {i + 1} order={mt.orders[i]} length={mt.lengths[i]} label={mt.labels[i]}")
    for i in range(r):
        lines.append(f"ROW {i + 1}: " + " ".join(str(v) for v in mt.row(i)))
    flags = None
    if props:
        try:
            flags = mt.property_flags()
        except ValueError:
            flags = None
    if flags is not None:
        for i, f in enumerate(flags):
            lines.append(f"PROPS {i + 1}: " + " ".join("1" if b else "0" for b in f.as_tuple()))
    return "\n".join(lines) + "\n"


def _expect(pattern: re.Pattern, line: str, lineno: int, what: str) -> re.Match:
    m = pattern.match(line)
    if not m:
        raise TomFormatError(f"line {lineno}: expected {what}, got {line!r}")
    return m


def loads(text: str, validate: bool = True) -> MarksTable:
    lines = [l.rstrip("\r") for l in text.split("\n")]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise TomFormatError("empty input")
    head = lines[0].split(" ")
    if len(head) != 3 or head[0] != "TOM" or not head[2].isdigit():
        raise TomFormatError(f"line 1: expected 'TOM <name> <r>', got {lines[0]!r}")
    name, r = head[1], int(head[2])
    if r < 1:
        raise TomFormatError("a table of marks has at least one class")
    if len(lines) not in (1 + 2 * r, 1 + 3 * r):
        raise TomFormatError(f"expected {1 + 2 * r} or {1 + 3 * r} lines for {r} classes, got {len(lines)}")

    orders, lengths, labels = [], [], []
    for i in range(r):
        m = _expect(_CLASS, lines[1 + i], 2 + i, "a CLASS line")
        if int(m.group(1)) != i + 1:
            raise TomFormatError(f"line {2 + i}: CLASS lines must be numbered consecutively from 1")
        orders.append(int(m.group(2)))
        lengths.append(int(m.group(3)))
        labels.append(m.group(4))

    beta = np.zeros((r, r), dtype=np.int64)
    for i in range(r):
        lineno = 2 + r + i
        m = _expect(_ROW, lines[1 + r + i], lineno, "a ROW line")
        if int(m.group(1)) != i + 1:
            raise TomFormatError(f"line {lineno}: ROW lines must be numbered consecutively from 1")
        vals = [int(v) for v in m.group(2).split()]
        if len(vals) != i + 1:
            raise TomFormatError(f"line {lineno}: row {i + 1} must hold {i + 1} entries, got {len(vals)}")
        beta[i, : i + 1] = vals

    flags = None
    if len(lines) == 1 + 3 * r:
        flags = []
        for i in range(r):
            lineno = 2 + 2 * r + i
            m = _expect(_PROPS, lines[1 + 2 * r + i], lineno, "a PROPS line")
            if int(m.group(1)) != i + 1:
                raise TomFormatError(f"line {lineno}: PROPS lines must be numbered consecutively from 1")
            bits = [v == "1" for v in m.group(2).split()]
            try:
                flags.append(PropertyFlags(*bits))
            except ValueError as exc:
                raise TomFormatError(f"line {lineno}: {exc}") from None

    mt = MarksTable(beta, orders, lengths, labels, flags=flags, name=name)
    if validate:
        mt.validate()
    return mt


def dump(mt: MarksTable, path: Union[str, Path], props: bool = True) -> None:
    Path(path).write_text(dumps(mt, props), encoding="utf-8")


def load(path: Union[str, Path], validate: bool = True) -> MarksTable:
    return loads(Path(path).read_text(encoding="utf-8"), validate)
