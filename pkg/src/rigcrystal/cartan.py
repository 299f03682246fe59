"""Generalized Cartan matrices, symmetrizers and weight-lattice arithmetic.

Convention: ``A[a, b] = <h_a, alpha_b>``, i.e. row ``a`` lists the pairings of
the coroot ``h_a`` with every simple root.  For the named non-simply-laced
types this puts the entry ``-2`` (or ``-3``) in the row of the *short* root:

    B2 = [[2, -1], [-2, 2]]   (alpha_2 short)
    C2 = [[2, -2], [-1, 2]]   (alpha_2 long)
    G2 = [[2, -3], [-1, 2]]   (alpha_1 short)

Weights are stored in mixed coordinates: a coefficient vector over the
fundamental weights plus a coefficient vector over the simple roots.  This
avoids inverting ``A`` (singular in affine type) while keeping every pairing
``<h_b, w>`` exact.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import (
    AsymmetricZeroPattern,
    BadDiagonal,
    CartanError,
    NotDominant,
    NotFiniteType,
    NotSymmetrizable,
    PositiveOffDiagonal,
    UnknownIndex,
)

Label = Hashable

DEFAULT_ROOT_CAP = 10_000


@dataclass(frozen=True)
class CartanMatrix:
    """A validated generalized Cartan matrix with ordered index labels."""

    labels: tuple
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(
            self, "entries", tuple(tuple(int(x) for x in row) for row in self.entries)
        )

    @property
    def rank(self) -> int:
        return len(self.labels)

    @cached_property
    def _position(self) -> dict:
        return {a: k for k, a in enumerate(self.labels)}

    def index(self, a: Label) -> int:
        try:
            return self._position[a]
        except KeyError:
            raise UnknownIndex(f"unknown index {a!r}; labels are {list(self.labels)}") from None

    def __getitem__(self, key) -> int:
        a, b = key
        return self.entries[self.index(a)][self.index(b)]

    def __repr__(self):
        return f"CartanMatrix(labels={list(self.labels)}, entries={[list(r) for r in self.entries]})"

    def neighbors(self, a: Label) -> list:
        i = self.index(a)
        return [b for j, b in enumerate(self.labels) if j != i and self.entries[i][j] != 0]

    @property
    def is_symmetric(self) -> bool:
        n = self.rank
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(n))

    @property
    def is_simply_laced(self) -> bool:
        n = self.rank
        return self.is_symmetric and all(
            self.entries[i][j] in (0, -1) for i in range(n) for j in range(n) if i != j
        )

    def pairing(self, b: Label, w: "Weight") -> int:
        return pairing(self, b, w)

    def to_json(self) -> dict:
        return {"labels": [_label_to_json(a) for a in self.labels],
                "matrix": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, data: Mapping) -> "CartanMatrix":
        matrix = data["matrix"]
        labels = data.get("labels")
        if labels is not None:
            labels = [_label_from_json(a) for a in labels]
        return validate(matrix, labels)


def _label_to_json(a):
    if isinstance(a, tuple):
        return [_label_to_json(x) for x in a]
    return a


def _label_from_json(a):
    if isinstance(a, list):
        return tuple(_label_from_json(x) for x in a)
    return a


def validate(entries: Sequence[Sequence[int]], labels: Iterable[Label] | None = None) -> CartanMatrix:
    """Check the generalized Cartan matrix axioms and wrap ``entries``.

    Labels default to ``"1", "2", ...``.
    """
    rows = [list(r) for r in entries]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise CartanError("Cartan matrix must be square")
    for r in rows:
        for x in r:
            if int(x) != x:
                raise CartanError(f"non-integer entry {x!r}")
    labels = tuple(str(k + 1) for k in range(n)) if labels is None else tuple(labels)
    if len(labels) != n:
        raise CartanError(f"{len(labels)} labels for a rank {n} matrix")
    if len(set(labels)) != n:
        raise CartanError("labels must be distinct")
    for i in range(n):
        if rows[i][i] != 2:
            raise BadDiagonal(f"A[{labels[i]},{labels[i]}] = {rows[i][i]}, expected 2")
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise PositiveOffDiagonal(f"A[{labels[i]},{labels[j]}] = {rows[i][j]} > 0")
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise AsymmetricZeroPattern(
                    f"A[{labels[i]},{labels[j]}] = {rows[i][j]} but A[{labels[j]},{labels[i]}] = {rows[j][i]}"
                )
    return CartanMatrix(labels, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class Symmetrizer:
    """Positive integers ``d`` with ``d_a A_ab = d_b A_ba`` and global gcd 1."""

    labels: tuple
    d: tuple[int, ...]

    def __getitem__(self, a: Label) -> int:
        try:
            return self.d[self.labels.index(a)]
        except ValueError:
            raise UnknownIndex(a) from None

    def as_dict(self) -> dict:
        return dict(zip(self.labels, self.d))


def symmetrize(A: CartanMatrix) -> Symmetrizer:
    """Canonical symmetrizer of ``A``.

    Rational values are propagated along a BFS spanning forest using
    ``d_b = d_a A_ab / A_ba``, checked on every remaining edge, and each
    connected component is scaled to coprime positive integers.
    """
    n = A.rank
    M = A.entries
    d: list[Fraction | None] = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        component = [root]
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j == i or M[i][j] == 0:
                    continue
                want = d[i] * Fraction(M[i][j], M[j][i])
                if d[j] is None:
                    d[j] = want
                    component.append(j)
                    queue.append(j)
                elif d[j] != want:
                    raise NotSymmetrizable(
                        f"inconsistent ratio d_{A.labels[i]}/d_{A.labels[j]} around a cycle"
                    )
        denom = lcm(*(d[k].denominator for k in component))
        ints = [int(d[k] * denom) for k in component]
        g = gcd(*ints)
        for k, v in zip(component, ints):
            d[k] = Fraction(v // g)
    out = tuple(int(x) for x in d)
    g = gcd(*out)
    return Symmetrizer(A.labels, tuple(x // g for x in out))


@dataclass(frozen=True)
class Weight:
    """A weight ``sum c_a Lambda_a + sum k_a alpha_a`` in mixed coordinates."""

    labels: tuple
    lambda_part: tuple[int, ...]
    alpha_part: tuple[int, ...]

    @classmethod
    def zero(cls, labels: Sequence[Label]) -> "Weight":
        n = len(labels)
        return cls(tuple(labels), (0,) * n, (0,) * n)

    @classmethod
    def from_dicts(cls, labels, lam: Mapping | None = None, alpha: Mapping | None = None) -> "Weight":
        labels = tuple(labels)
        lam = lam or {}
        alpha = alpha or {}
        for key in list(lam) + list(alpha):
            if key not in labels:
                raise UnknownIndex(key)
        return cls(labels,
                   tuple(int(lam.get(a, 0)) for a in labels),
                   tuple(int(alpha.get(a, 0)) for a in labels))

    @classmethod
    def fundamental(cls, labels, coefficients: Sequence[int]) -> "Weight":
        """``sum_a coefficients[a] Lambda_a``, coefficients listed in label order."""
        labels = tuple(labels)
        if len(coefficients) != len(labels):
            raise CartanError(f"expected {len(labels)} coefficients, got {len(coefficients)}")
        return cls(labels, tuple(int(c) for c in coefficients), (0,) * len(labels))

    def _check(self, other: "Weight"):
        if self.labels != other.labels:
            raise CartanError("weights over different index sets")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.labels,
                      tuple(x + y for x, y in zip(self.lambda_part, other.lambda_part)),
                      tuple(x + y for x, y in zip(self.alpha_part, other.alpha_part)))

    def __neg__(self) -> "Weight":
        return Weight(self.labels, tuple(-x for x in self.lambda_part), tuple(-x for x in self.alpha_part))

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def lam(self, a: Label) -> int:
        return self.lambda_part[self.labels.index(a)]

    def alpha(self, a: Label) -> int:
        return self.alpha_part[self.labels.index(a)]

    def is_dominant(self) -> bool:
        """Dominant in the narrow sense used for highest weights."""
        return all(c >= 0 for c in self.lambda_part) and not any(self.alpha_part)

    def to_json(self) -> dict:
        return {"lambda": list(self.lambda_part), "alpha": list(self.alpha_part)}

    def __str__(self):
        terms = []
        for sym, coeffs in (("L", self.lambda_part), ("a", self.alpha_part)):
            for a, c in zip(self.labels, coeffs):
                if c:
                    terms.append(f"{c}*{sym}{a}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def simple_root(labels, a: Label) -> Weight:
    return Weight.from_dicts(labels, alpha={a: 1})


def pairing(A: CartanMatrix, b: Label, w: Weight) -> int:
    """``<h_b, w>``."""
    j = A.index(b)
    row = A.entries[j]
    return w.lambda_part[j] + sum(k * row[i] for i, k in enumerate(w.alpha_part))


def fundamental_coordinates(A: CartanMatrix, w: Weight) -> tuple[int, ...]:
    """All pairings ``(<h_a, w>)_a``; the Lambda-coordinates modulo null roots."""
    return tuple(pairing(A, b, w) for b in A.labels)


# ---------------------------------------------------------------------------
# finite-type oracles


def positive_roots(A: CartanMatrix, cap: int = DEFAULT_ROOT_CAP) -> list[tuple[int, ...]]:
    """Positive roots as simple-root coefficient vectors, generated by root strings.

    Raises NotFiniteType when more than ``cap`` roots appear.
    """
    n = A.rank
    M = A.entries
    simple = [tuple(int(i == k) for i in range(n)) for k in range(n)]
    roots = set(simple)
    order = list(simple)
    level = list(simple)
    while level:
        nxt = []
        for beta in level:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                q = p - sum(beta[j] * M[i][j] for j in range(n))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        order.append(up)
                        nxt.append(up)
                        if len(roots) > cap:
                            raise NotFiniteType(f"more than {cap} positive roots")
        level = nxt
    return order


def _coroot_pairings(A: CartanMatrix, d: Sequence[int], beta: Sequence[int], lam: Sequence[int]) -> Fraction:
    # <lam, beta^vee> = 2 (lam | beta) / (beta | beta) with (alpha_a | alpha_b) = d_a A_ab
    n = A.rank
    norm = sum(beta[a] * beta[b] * d[a] * A.entries[a][b] for a in range(n) for b in range(n))
    return Fraction(2 * sum(beta[a] * d[a] * lam[a] for a in range(n)), norm)


def weyl_dimension(A: CartanMatrix, lam: Weight) -> int:
    """Dimension of the irreducible module of dominant highest weight ``lam``.

    Any representative works: ``lam`` is read through its pairings
    ``<h_a, lam>``, so ``2 Lambda_1 + Lambda_2 - alpha_1`` counts as ``2 Lambda_2`` in A2.
    """
    coords = fundamental_coordinates(A, lam)
    if any(c < 0 for c in coords):
        raise NotDominant(f"{lam} is not dominant")
    d = symmetrize(A).d
    roots = positive_roots(A)
    rho = [1] * A.rank
    shifted = [c + 1 for c in coords]
    num = Fraction(1)
    for beta in roots:
        num *= _coroot_pairings(A, d, beta, shifted) / _coroot_pairings(A, d, beta, rho)
    assert num.denominator == 1
    return int(num)


# ---------------------------------------------------------------------------
# named types

_NAMED = re.compile(r"^([A-Ga-g])(\d+)(~?)$")


def _chain(n: int) -> list[list[int]]:
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = 2
        if i + 1 < n:
            M[i][i + 1] = M[i + 1][i] = -1
    return M


def _finite_matrix(letter: str, n: int) -> list[list[int]]:
    if letter == "A" and n >= 1:
        return _chain(n)
    if letter == "B" and n >= 2:
        M = _chain(n)
        M[n - 1][n - 2] = -2
        return M
    if letter == "C" and n >= 2:
        M = _chain(n)
        M[n - 2][n - 1] = -2
        return M
    if letter == "D" and n >= 3:
        M = _chain(n)
        M[n - 2][n - 1] = M[n - 1][n - 2] = 0
        M[n - 3][n - 1] = M[n - 1][n - 3] = -1
        return M
    if letter == "E" and n in (6, 7, 8):
        # Bourbaki: 1-3-4-5-...-n with 2 attached to 4
        M = [[0] * n for _ in range(n)]
        for i in range(n):
            M[i][i] = 2
        edges = [(1, 3), (2, 4), (3, 4)] + [(k, k + 1) for k in range(4, n)]
        for i, j in edges:
            M[i - 1][j - 1] = M[j - 1][i - 1] = -1
        return M
    if letter == "F" and n == 4:
        M = _chain(4)
        M[2][1] = -2
        return M
    if letter == "G" and n == 2:
        return [[2, -3], [-1, 2]]
    raise CartanError(f"unsupported Cartan type {letter}{n}")


def _affine_extension(A: CartanMatrix) -> list[list[int]]:
    roots = positive_roots(A)
    theta = max(roots, key=sum)
    d = symmetrize(A).d
    n = A.rank
    M = [[0] * (n + 1) for _ in range(n + 1)]
    M[0][0] = 2
    for i in range(n):
        for j in range(n):
            M[i + 1][j + 1] = A.entries[i][j]
    for j in range(n):
        # a_0j = -<theta^vee, alpha_j>, a_j0 = -<h_j, theta>
        M[0][j + 1] = -int(_coroot_pairings(A, d, theta, [A.entries[k][j] for k in range(n)]))
        M[j + 1][0] = -sum(theta[k] * A.entries[j][k] for k in range(n))
    return M


def named(name: str) -> CartanMatrix:
    """Cartan matrix from a shorthand such as ``"A2"``, ``"G2"`` or ``"A2~"``.

    A trailing ``~`` gives the untwisted affine extension with the extra
    node labelled ``"0"``.
    """
    m = _NAMED.match(name.strip())
    if not m:
        raise CartanError(f"cannot parse Cartan type {name!r}")
    letter, n, affine = m.group(1).upper(), int(m.group(2)), bool(m.group(3))
    finite = validate(_finite_matrix(letter, n))
    if not affine:
        return finite
    labels = [str(k) for k in range(n + 1)]
    return validate(_affine_extension(finite), labels)


def parse_cartan(source: str) -> CartanMatrix:
    """Accept a named type, an inline JSON matrix, or a path to a JSON file."""
    text = source.strip()
    if _NAMED.match(text):
        return named(text)
    if text.startswith("[") or text.startswith("{"):
        data = json.loads(text)
    else:
        with open(source) as fh:
            data = json.load(fh)
    if isinstance(data, list):
        return validate(data)
    return CartanMatrix.from_json(data)
