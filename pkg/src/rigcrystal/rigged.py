"""Rigged configurations and their crystal structure.

A rigged configuration stores, for every index ``a``, a multiset of strings
``(length, rigging)``.  The crystal operators act on the string with the
smallest rigging and shift every other rigging so that its colabel
``vacancy - rigging`` is unchanged.

``highest_weight=None`` selects the crystal ``B(infinity)``; a dominant
:class:`~rigcrystal.cartan.Weight` selects the cut ``B(lambda)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple

from .cartan import CartanMatrix, Label, Weight, pairing
from .errors import NotDominant, StringNotFound


_OWN = object()


class RiggedString(NamedTuple):
    length: int
    rigging: int


@dataclass(frozen=True)
class RiggedPartition:
    """A multiset of strings kept in weakly decreasing lexicographic order."""

    strings: tuple[RiggedString, ...] = ()

    def __post_init__(self):
        strings = tuple(sorted((RiggedString(int(i), int(x)) for i, x in self.strings), reverse=True))
        for s in strings:
            if s.length < 1:
                raise ValueError(f"string length must be positive, got {s}")
        object.__setattr__(self, "strings", strings)

    def __iter__(self):
        return iter(self.strings)

    def __len__(self):
        return len(self.strings)

    def __bool__(self):
        return bool(self.strings)

    @property
    def size(self) -> int:
        return sum(s.length for s in self.strings)

    @property
    def partition(self) -> tuple[int, ...]:
        return tuple(s.length for s in self.strings)

    def multiplicity(self, i: int) -> int:
        return sum(1 for s in self.strings if s.length == i)

    def riggings(self, i: int) -> tuple[int, ...]:
        return tuple(s.rigging for s in self.strings if s.length == i)

    @property
    def min_rigging(self) -> int | None:
        """Smallest rigging, or ``None`` for the empty partition (read as +infinity)."""
        if not self.strings:
            return None
        return min(s.rigging for s in self.strings)


def _vacancy(M, c, sizes_by_part, k: int, i) -> int:
    # sizes_by_part[j] is the tuple of string lengths of part j
    total = c[k]
    row = M[k]
    for j, lengths in enumerate(sizes_by_part):
        if row[j] == 0 or not lengths:
            continue
        if i == math.inf:
            total -= row[j] * sum(lengths)
        else:
            total -= row[j] * sum(min(i, ell) for ell in lengths)
    return total


@dataclass(frozen=True)
class RiggedConfiguration:
    """An element of ``RC(infinity)`` or ``RC(lambda)``."""

    cartan: CartanMatrix
    parts: tuple[RiggedPartition, ...]
    highest_weight: Weight | None = None

    def __post_init__(self):
        parts = tuple(p if isinstance(p, RiggedPartition) else RiggedPartition(tuple(p)) for p in self.parts)
        if len(parts) != self.cartan.rank:
            raise ValueError(f"{len(parts)} parts for rank {self.cartan.rank}")
        object.__setattr__(self, "parts", parts)
        hw = self.highest_weight
        if hw is not None:
            if hw.labels != self.cartan.labels:
                raise ValueError("highest weight over a different index set")
            if not hw.is_dominant():
                raise NotDominant(f"highest weight {hw} is not dominant")

    # -- construction ---------------------------------------------------

    @classmethod
    def empty(cls, cartan: CartanMatrix, highest_weight: Weight | None = None) -> "RiggedConfiguration":
        return cls(cartan, tuple(RiggedPartition() for _ in cartan.labels), highest_weight)

    @classmethod
    def from_strings(cls, cartan: CartanMatrix, strings: Mapping[Label, Iterable],
                     highest_weight: Weight | None = None) -> "RiggedConfiguration":
        """Build from ``{label: [(length, rigging), ...]}``; missing labels are empty."""
        for a in strings:
            cartan.index(a)
        parts = tuple(RiggedPartition(tuple(strings.get(a, ()))) for a in cartan.labels)
        return cls(cartan, parts, highest_weight)

    def part(self, a: Label) -> RiggedPartition:
        return self.parts[self.cartan.index(a)]

    @property
    def is_infinity(self) -> bool:
        return self.highest_weight is None

    # -- vacancy numbers ------------------------------------------------

    @cached_property
    def _c(self) -> tuple[int, ...]:
        if self.highest_weight is None:
            return (0,) * self.cartan.rank
        return self.highest_weight.lambda_part

    @cached_property
    def _lengths(self) -> tuple[tuple[int, ...], ...]:
        return tuple(p.partition for p in self.parts)

    def vacancy(self, a: Label, i) -> int:
        """``p_i^(a)``; pass ``math.inf`` for the limiting value ``p_inf^(a)``."""
        return _vacancy(self.cartan.entries, self._c, self._lengths, self.cartan.index(a), i)

    def _vac(self, k: int, i) -> int:
        return _vacancy(self.cartan.entries, self._c, self._lengths, k, i)

    def colabel(self, a: Label, string) -> int:
        string = RiggedString(*string)
        if string not in self.part(a).strings:
            raise StringNotFound(f"{tuple(string)} not in part {a!r}")
        return self.vacancy(a, string.length) - string.rigging

    def is_lambda_valid(self, lam: Weight | None | object = _OWN) -> bool:
        """Every rigging is bounded by its vacancy number for ``lam``.

        ``lam`` defaults to this element's own highest weight (``None`` checks
        against the ``B(infinity)`` vacancy numbers).
        """
        other = self if lam is _OWN or lam == self.highest_weight else replace(self, highest_weight=lam)
        for k, part in enumerate(other.parts):
            for s in part:
                if s.rigging > other._vac(k, s.length):
                    return False
        return True

    # -- crystal operators -------------------------------------------------

    def _moved(self, k: int, old: RiggedString | None, new: RiggedString | None, column: int, sign: int):
        # A box enters (sign=+1) or leaves (sign=-1) column ``column`` of part k.
        # Strings of part j with length >= column see p change by -sign*A[j][k].
        M = self.cartan.entries
        parts = []
        for j, part in enumerate(self.parts):
            delta = -sign * M[j][k]
            strings = list(part.strings)
            if j == k and old is not None:
                strings.remove(old)
            if delta:
                strings = [RiggedString(s.length, s.rigging + delta) if s.length >= column else s
                           for s in strings]
            if j == k and new is not None:
                strings.append(new)
            parts.append(RiggedPartition(tuple(strings)))
        return replace(self, parts=tuple(parts))

    def f(self, a: Label) -> "RiggedConfiguration | None":
        k = self.cartan.index(a)
        part = self.parts[k]
        x = part.min_rigging
        if x is None or x > 0:
            result = self._moved(k, None, RiggedString(1, -1), 1, +1)
        else:
            ell = max(s.length for s in part if s.rigging == x)
            result = self._moved(k, RiggedString(ell, x), RiggedString(ell + 1, x - 1), ell + 1, +1)
        if self.highest_weight is not None and not result.is_lambda_valid():
            return None
        return result

    def e(self, a: Label) -> "RiggedConfiguration | None":
        k = self.cartan.index(a)
        part = self.parts[k]
        x = part.min_rigging
        if x is None or x >= 0:
            return None
        ell = min(s.length for s in part if s.rigging == x)
        new = RiggedString(ell - 1, x + 1) if ell > 1 else None
        return self._moved(k, RiggedString(ell, x), new, ell, -1)

    def epsilon(self, a: Label) -> int:
        x = self.part(a).min_rigging
        return 0 if x is None else -min(0, x)

    def phi(self, a: Label) -> int:
        x = self.part(a).min_rigging
        shift = 0 if x is None else -min(0, x)
        return self.vacancy(a, math.inf) + shift

    def weight(self) -> Weight:
        labels = self.cartan.labels
        base = Weight.zero(labels) if self.highest_weight is None else self.highest_weight
        return base + Weight(labels, (0,) * len(labels), tuple(-p.size for p in self.parts))

    def inner(self, a: Label) -> int:
        """``<h_a, wt>``."""
        return pairing(self.cartan, a, self.weight())

    # -- presentation -------------------------------------------------------

    @property
    def depth(self) -> int:
        return sum(p.size for p in self.parts)

    def canonical_key(self) -> tuple:
        return tuple(tuple(tuple(s) for s in p) for p in self.parts)

    def rows(self, a: Label) -> list[str]:
        k = self.cartan.index(a)
        return [f"{s.length} : {s.rigging} ({self._vac(k, s.length)})" for s in self.parts[k]]

    def to_text(self) -> str:
        lines = []
        for a in self.cartan.labels:
            rows = self.rows(a)
            lines.append(f"{a}:" + ("" if rows else " (empty)"))
            lines.extend("  " + r for r in rows)
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()

    def to_json(self) -> dict:
        return {str(a) if not isinstance(a, tuple) else ",".join(map(str, a)):
                [[s.length, s.rigging] for s in p]
                for a, p in zip(self.cartan.labels, self.parts)}

    @classmethod
    def from_json(cls, cartan: CartanMatrix, data: Mapping, highest_weight: Weight | None = None):
        keys = {str(a) if not isinstance(a, tuple) else ",".join(map(str, a)): a for a in cartan.labels}
        strings = {}
        for key, rows in data.items():
            if key not in keys:
                raise StringNotFound(f"unknown part {key!r}")
            strings[keys[key]] = [tuple(r) for r in rows]
        return cls.from_strings(cartan, strings, highest_weight)

