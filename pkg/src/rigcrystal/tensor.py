"""Tensor products of rigged-configuration crystals and the LR decomposition.

Factors are written left to right as ``b_n (x) ... (x) b_1``.  With the
convention used here, ``f_a`` acts on the right factor of ``b_2 (x) b_1``
exactly when ``epsilon_a(b_2) < phi_a(b_1)``; longer products are read as
``b_n (x) (b_{n-1} (x) ( ... (x) b_1))``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .cartan import CartanMatrix, Label, Weight, fundamental_coordinates, pairing
from .errors import CrystalError, EnumerationTruncated
from .explorer import DEFAULT_MAX_NODES, generate
from .rigged import RiggedConfiguration


@dataclass(frozen=True)
class TensorElement:
    factors: tuple[RiggedConfiguration, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise CrystalError("a tensor element needs at least one factor")
        if any(b.cartan != factors[0].cartan for b in factors):
            raise CrystalError("tensor factors over different Cartan matrices")
        object.__setattr__(self, "factors", factors)

    @property
    def cartan(self) -> CartanMatrix:
        return self.factors[0].cartan

    def _split(self):
        left = self.factors[0]
        rest = self.factors[1:]
        right = rest[0] if len(rest) == 1 else TensorElement(rest)
        return left, right

    def _join(self, left, right) -> "TensorElement":
        tail = right.factors if isinstance(right, TensorElement) else (right,)
        return TensorElement((left,) + tail)

    def weight(self) -> Weight:
        total = self.factors[0].weight()
        for b in self.factors[1:]:
            total = total + b.weight()
        return total

    def epsilon(self, a: Label) -> int:
        if len(self.factors) == 1:
            return self.factors[0].epsilon(a)
        left, right = self._split()
        return max(right.epsilon(a), left.epsilon(a) - pairing(self.cartan, a, right.weight()))

    def phi(self, a: Label) -> int:
        if len(self.factors) == 1:
            return self.factors[0].phi(a)
        left, right = self._split()
        return max(left.phi(a), right.phi(a) + pairing(self.cartan, a, left.weight()))

    def f(self, a: Label) -> "TensorElement | None":
        if len(self.factors) == 1:
            b = self.factors[0].f(a)
            return None if b is None else TensorElement((b,))
        left, right = self._split()
        if left.epsilon(a) >= right.phi(a):
            new = left.f(a)
            return None if new is None else self._join(new, right)
        new = right.f(a)
        return None if new is None else self._join(left, new)

    def e(self, a: Label) -> "TensorElement | None":
        if len(self.factors) == 1:
            b = self.factors[0].e(a)
            return None if b is None else TensorElement((b,))
        left, right = self._split()
        if left.epsilon(a) > right.phi(a):
            new = left.e(a)
            return None if new is None else self._join(new, right)
        new = right.e(a)
        return None if new is None else self._join(left, new)

    def is_highest_weight(self) -> bool:
        return all(self.e(a) is None for a in self.cartan.labels)


def tensor_f(t: TensorElement, a: Label):
    return t.f(a)


def tensor_e(t: TensorElement, a: Label):
    return t.e(a)


# ---------------------------------------------------------------------------


def highest_weight_scan(A: CartanMatrix, mu: Weight, lam: Weight,
                        max_nodes: int = DEFAULT_MAX_NODES) -> list[TensorElement]:
    """Brute force: every element of ``RC(mu) (x) RC(lam)`` killed by all ``e_a``."""
    left = generate(A, mu, max_nodes=max_nodes)
    right = generate(A, lam, max_nodes=max_nodes)
    if not (left.complete and right.complete):
        raise EnumerationTruncated("highest_weight_scan needs both crystals finite")
    return [t for x in left.nodes for y in right.nodes
            if (t := TensorElement((x, y))).is_highest_weight()]


def satisfies_lr_bound(rc: RiggedConfiguration, lam: Weight) -> bool:
    """Every rigging in part ``a`` is at least ``-<h_a, lam>``."""
    for a, part, c in zip(rc.cartan.labels, rc.parts, lam.lambda_part):
        x = part.min_rigging
        if x is not None and x < -c:
            return False
    return True


@dataclass
class Component:
    weight: Weight
    multiplicity: int
    witnesses: list[RiggedConfiguration] = field(default_factory=list)


@dataclass
class Decomposition:
    cartan: CartanMatrix
    mu: Weight
    lam: Weight
    components: list[Component]
    partial: bool = False

    def multiset(self) -> Counter:
        return Counter({c.weight: c.multiplicity for c in self.components})

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu.lambda_part),
            "lambda": list(self.lam.lambda_part),
            "partial": self.partial,
            "components": [
                {"weight": list(fundamental_coordinates(self.cartan, c.weight)),
                 "mixed": c.weight.to_json(),
                 "multiplicity": c.multiplicity,
                 "witnesses": [w.to_json() for w in c.witnesses]}
                for c in self.components
            ],
        }

    def to_table(self) -> str:
        rows = [f"{'weight':<28}mult  witness"]
        for c in self.components:
            coords = "(" + ", ".join(map(str, fundamental_coordinates(self.cartan, c.weight))) + ")"
            wit = json.dumps(c.witnesses[0].to_json(), sort_keys=True)
            rows.append(f"{coords:<28}{c.multiplicity:<6}{wit}")
        if self.partial:
            rows.append("(partial: enumeration truncated at depth bound)")
        return "\n".join(rows)


def lr_decompose(A: CartanMatrix, mu: Weight, lam: Weight, depth: int | None = None,
                 max_nodes: int = DEFAULT_MAX_NODES) -> Decomposition:
    """Components of ``B(mu) (x) B(lam)`` read off ``RC(mu)``.

    Without ``depth`` the crystal must be finite; hitting ``max_nodes`` then
    raises :class:`EnumerationTruncated`.  With ``depth`` an incomplete
    enumeration is returned with ``partial=True``.
    """
    for w in (mu, lam):
        if not w.is_dominant():
            raise CrystalError(f"{w} is not dominant")
    g = generate(A, mu, depth=depth, max_nodes=max_nodes)
    if not g.complete and depth is None:
        raise EnumerationTruncated(f"RC(mu) exceeded {max_nodes} nodes; pass a depth bound")
    found: dict[Weight, list[RiggedConfiguration]] = {}
    for rc in g.nodes:
        if satisfies_lr_bound(rc, lam):
            found.setdefault(lam + rc.weight(), []).append(rc)

    def order(item):
        w, _ = item
        return (-sum(w.alpha_part), tuple(-x for x in fundamental_coordinates(A, w)), w.alpha_part)

    components = [Component(w, len(wit), sorted(wit, key=RiggedConfiguration.canonical_key))
                  for w, wit in sorted(found.items(), key=order)]
    return Decomposition(A, mu, lam, components, partial=not g.complete)


def components_from_scan(scan: Sequence[TensorElement], lam: Weight) -> Counter:
    """Multiset ``{lam + wt(left factor)}`` over highest-weight tensor elements."""
    return Counter(lam + t.factors[0].weight() for t in scan)
