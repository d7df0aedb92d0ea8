"""Euler transform and its inverse, with the number theory they need.

Sequences are 1-indexed at the API: ``IntSeq([c1, c2, ...])[1] == c1``.
Internally ``values[k - 1]`` holds term ``k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence


class NotAnEulerTransform(ValueError):
    """The input has no integer inverse Euler transform."""

    def __init__(self, index: int, numerator: int):
        super().__init__(f"inverse Euler transform is not integral at index {index} ({numerator}/{index})")
        self.index = index


@dataclass
class IntSeq:
    values: list[int] = field(default_factory=list)
    name: Optional[str] = None

    def __post_init__(self):
        self.values = [int(v) for v in self.values]

    def __getitem__(self, k: int) -> int:
        if k < 1:
            raise IndexError("IntSeq is 1-indexed")
        return self.values[k - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntSeq):
            return self.values == other.values
        if isinstance(other, (list, tuple)):
            return self.values == list(other)
        return NotImplemented

    def term(self, k: int) -> int:
        """Term ``k``, or 0 past the end."""
        return self.values[k - 1] if k <= len(self.values) else 0

    # -- OEIS b-file and CSV ------------------------------------------------

    def to_bfile(self, offset: int = 1) -> str:
        return "".join(f"{i} {v}\n" for i, v in enumerate(self.values, start=offset))

    @classmethod
    def from_bfile(cls, text: str, name: Optional[str] = None) -> "IntSeq":
        rows = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"b-file line {lineno}: expected '<index> <value>', got {line!r}")
            rows.append((int(parts[0]), int(parts[1])))
        idx = [i for i, _ in rows]
        if idx and idx != list(range(idx[0], idx[0] + len(idx))):
            raise ValueError("b-file indices must be consecutive")
        return cls([v for _, v in rows], name)

    def to_csv(self) -> str:
        return ",".join(str(v) for v in self.values) + "\n"

    @classmethod
    def from_csv(cls, text: str, name: Optional[str] = None) -> "IntSeq":
        cells = [c.strip() for c in text.replace("\n", ",").split(",")]
        return cls([int(c) for c in cells if c], name)

    @classmethod
    def parse(cls, text: str, name: Optional[str] = None) -> "IntSeq":
        """Read either format: b-file if any line holds two fields."""
        lines = [l for l in text.splitlines() if l.strip() and not l.lstrip().startswith("#")]
        if lines and all(len(l.split()) == 2 and "," not in l for l in lines):
            return cls.from_bfile(text, name)
        return cls.from_csv(text, name)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def multiset_coefficient(c: int, a: int) -> int:
    """Number of ``a``-element multisets drawn from ``c`` kinds."""
    if c < 0 or a < 0:
        raise ValueError("multiset_coefficient needs non-negative arguments")
    if a == 0:
        return 1
    return math.comb(c + a - 1, a)


def _as_list(seq) -> list[int]:
    return list(seq.values) if isinstance(seq, IntSeq) else [int(v) for v in seq]


def euler_transform(c, upto: Optional[int] = None) -> IntSeq:
    """``1 + sum m_n x^n = prod_k (1 - x^k)^(-c_k)``; missing ``c_k`` count as 0."""
    cv = _as_list(c)
    n_max = len(cv) if upto is None else upto
    term = lambda k: cv[k - 1] if k <= len(cv) else 0
    b = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        b[n] = sum(d * term(d) for d in range(1, n + 1) if n % d == 0)
    m = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total = b[n] + sum(b[k] * m[n - k] for k in range(1, n))
        q, r = divmod(total, n)
        assert r == 0
        m[n] = q
    return IntSeq(m[1:], getattr(c, "name", None) and f"euler({c.name})")


def inverse_euler_transform(m, upto: Optional[int] = None) -> IntSeq:
    """Recover ``c`` from ``m``; raises :class:`NotAnEulerTransform` at the first non-integral term."""
    mv = _as_list(m)
    n_max = len(mv) if upto is None else upto
    if n_max > len(mv):
        raise ValueError(f"need {n_max} terms, got {len(mv)}")
    mm = [1] + mv[:n_max]
    b = [0] * (n_max + 1)
    c = []
    for n in range(1, n_max + 1):
        b[n] = n * mm[n] - sum(b[k] * mm[n - k] for k in range(1, n))
        num = sum(mobius(n // d) * b[d] for d in range(1, n + 1) if n % d == 0)
        if num % n:
            raise NotAnEulerTransform(n, num)
        c.append(num // n)
    return IntSeq(c, getattr(m, "name", None) and f"inverse_euler({m.name})")


def b_from_c(c, upto: int) -> list[int]:
    cv = _as_list(c)
    return [sum(d * (cv[d - 1] if d <= len(cv) else 0) for d in range(1, n + 1) if n % d == 0)
            for n in range(1, upto + 1)]


def b_from_m(m, upto: int) -> list[int]:
    mm = [1] + _as_list(m)[:upto]
    b = [0] * (upto + 1)
    for n in range(1, upto + 1):
        b[n] = n * mm[n] - sum(b[k] * mm[n - k] for k in range(1, n))
    return b[1:]


def partitions_by_multiplicity(n: int) -> Iterator[dict[int, int]]:
    """Partitions of ``n`` as ``{part: multiplicity}``, largest parts first."""
    def rec(remaining: int, max_part: int):
        if remaining == 0:
            yield {}
            return
        for part in range(min(remaining, max_part), 0, -1):
            for a in range(remaining // part, 0, -1):
                for rest in rec(remaining - a * part, part - 1):
                    yield {part: a, **rest}
    yield from rec(n, n)


def euler_by_multisets(c, n: int) -> int:
    """Coefficient of ``x^n`` summed over partitions ``1^a1 2^a2 ...`` of ``n``
    as the product of multiset coefficients ``((c_i, a_i))``."""
    cv = _as_list(c)
    term = lambda k: cv[k - 1] if k <= len(cv) else 0
    return sum(math.prod(multiset_coefficient(term(i), a) for i, a in lam.items())
               for lam in partitions_by_multiplicity(n))
