"""Folding a symmetrizable Cartan matrix out of a simple graph, and virtualization.

:func:`build_folding` constructs a simple graph whose vertices ``(a, s)``,
``s`` modulo ``N d_a``, form one orbit per index ``a`` under the rotation
``(a, s) -> (a, s + 1)``.  Every vertex of orbit ``a`` has exactly ``-A_ab``
neighbours in orbit ``b``, so the simply-laced Cartan matrix of the graph
folds back onto ``A``.  Rigged configurations of ``A`` embed into those of
the graph by copying every part onto all vertices of its orbit (with lengths
and riggings scaled by ``gamma``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Iterable, Mapping

from .cartan import CartanMatrix, Label, Symmetrizer, Weight, symmetrize, validate
from .errors import FoldingError, MultiEdgeDetected, NonIntegralC, NotInVirtualImage
from .explorer import CrystalGraph, explore
from .rigged import RiggedConfiguration


@dataclass(frozen=True)
class FoldedDiagram:
    base: CartanMatrix
    virtual_cartan: CartanMatrix
    orbit: Mapping  # virtual label -> base label
    gamma: Mapping  # base label -> positive int
    N: int = 1
    symmetrizer: Symmetrizer | None = None
    c: Mapping = field(default_factory=dict)  # (a, b) -> c_ab
    orientation_symmetric: bool = True

    @property
    def virtual_labels(self) -> tuple:
        return self.virtual_cartan.labels

    def preimage(self, a: Label) -> list:
        return [v for v in self.virtual_cartan.labels if self.orbit[v] == a]

    def automorphism(self, v):
        """Rotate within the orbit; only defined for ``(a, s)`` labels."""
        a, s = v
        return (a, (s + 1) % len(self.preimage(a)))

    @property
    def edges(self) -> list:
        labels = self.virtual_cartan.labels
        M = self.virtual_cartan.entries
        return [(labels[i], labels[j]) for i in range(len(labels))
                for j in range(i + 1, len(labels)) if M[i][j] != 0]

    @classmethod
    def identity(cls, A: CartanMatrix, gamma: Mapping | None = None) -> "FoldedDiagram":
        gamma = {a: 1 for a in A.labels} if gamma is None else dict(gamma)
        return cls(A, A, {a: a for a in A.labels}, gamma)

    @classmethod
    def custom(cls, base: CartanMatrix, virtual: CartanMatrix, orbit: Mapping,
               gamma: Mapping | None = None) -> "FoldedDiagram":
        """A hand-specified folding, e.g. with scaling factors other than 1."""
        gamma = {a: 1 for a in base.labels} if gamma is None else dict(gamma)
        if set(orbit) != set(virtual.labels) or set(orbit.values()) != set(base.labels):
            raise FoldingError("orbit map must be a surjection from the virtual labels")
        return cls(base, virtual, dict(orbit), gamma)

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "d": list(self.symmetrizer.d) if self.symmetrizer else None,
            "c": [[a, b, v] for (a, b), v in sorted(self.c.items(), key=lambda kv: (
                self.base.index(kv[0][0]), self.base.index(kv[0][1])))],
            "vertices": [list(v) if isinstance(v, tuple) else v for v in self.virtual_labels],
            "edges": [[list(u) if isinstance(u, tuple) else u, list(v) if isinstance(v, tuple) else v]
                      for u, v in self.edges],
            "virtual_cartan": [list(r) for r in self.virtual_cartan.entries],
            "orbit": {_key(v): a for v, a in self.orbit.items()},
            "gamma": {str(a): g for a, g in self.gamma.items()},
        }


def _key(v) -> str:
    return ",".join(map(str, v)) if isinstance(v, tuple) else str(v)


def build_folding(A: CartanMatrix, D: Symmetrizer | None = None) -> FoldedDiagram:
    """Simple graph with an orbit automorphism that folds onto ``A`` (gamma = 1)."""
    D = symmetrize(A) if D is None else D
    d = D.d
    n = A.rank
    M = A.entries
    for i in range(n):
        for j in range(n):
            if d[i] * M[i][j] != d[j] * M[j][i]:
                raise FoldingError("D A is not symmetric")
    ratios = [(-M[i][j] * d[i]) // lcm(d[i], d[j]) for i in range(n) for j in range(n) if i != j]
    N = max(ratios, default=0) or 1

    vertices = [(a, s) for k, a in enumerate(A.labels) for s in range(N * d[k])]
    c = {}
    passes = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            dt_i = d[i] // gcd(d[i], d[j])
            if M[j][i] % dt_i:
                raise NonIntegralC(f"-A[{A.labels[j]},{A.labels[i]}] not divisible by {dt_i}")
            c[(A.labels[i], A.labels[j])] = c_ij = -M[j][i] // dt_i
            found = {}
            for s in range(N * d[i] * d[j]):
                for k in range(c_ij):
                    e = frozenset(((A.labels[i], s % (N * d[i])), (A.labels[j], (s + k) % (N * d[j]))))
                    if found.setdefault(e, k) != k:
                        raise MultiEdgeDetected(f"edge {sorted(e)} produced by two shifts")
            passes[(i, j)] = set(found)

    # one orientation per unordered pair; the reverse pass can add extra
    # edges when N exceeds c_ab
    edge_set = set()
    symmetric = True
    for i in range(n):
        for j in range(i + 1, n):
            edge_set |= passes[(i, j)]
            symmetric &= passes[(i, j)] == passes[(j, i)]

    pos = {v: k for k, v in enumerate(vertices)}
    V = [[2 if p == q else 0 for q in range(len(vertices))] for p in range(len(vertices))]
    for e in edge_set:
        u, v = tuple(e)
        V[pos[u]][pos[v]] = V[pos[v]][pos[u]] = -1
    virtual = validate(V, vertices)
    return FoldedDiagram(A, virtual, {v: v[0] for v in vertices}, {a: 1 for a in A.labels},
                         N, D, c, symmetric)


@dataclass
class FoldingReport:
    checks: dict = field(default_factory=dict)  # name -> list of failure messages

    def record(self, name: str, failures: list):
        self.checks[name] = failures

    @property
    def passed(self) -> bool:
        return not any(self.checks.values())

    def to_json(self) -> dict:
        return {"passed": self.passed,
                "checks": {k: {"passed": not v, "failures": v} for k, v in self.checks.items()}}

    def __str__(self):
        lines = [f"{'PASS' if not v else 'FAIL'}  {k}" + ("" if not v else f": {v[0]}")
                 for k, v in self.checks.items()]
        return "\n".join(lines)


def verify_folding(fd: FoldedDiagram, A: CartanMatrix | None = None) -> FoldingReport:
    """Structural checks on a folding; failures are collected, never raised."""
    A = fd.base if A is None else A
    V = fd.virtual_cartan
    labels = V.labels
    adj = {v: set(V.neighbors(v)) for v in labels}
    report = FoldingReport()

    bad = []
    n = len(labels)
    for p in range(n):
        for q in range(n):
            x = V.entries[p][q]
            if (p == q and x != 2) or (p != q and (x not in (0, -1) or x != V.entries[q][p])):
                bad.append(f"entry at {labels[p]},{labels[q]} is {x}")
    report.record("simple_graph", bad)

    bad = [f"{u} ~ {v} in orbit {fd.orbit[u]}" for u, v in fd.edges if fd.orbit[u] == fd.orbit[v]]
    report.record("orbit_non_adjacent", bad)

    bad = []
    if all(isinstance(v, tuple) and len(v) == 2 for v in labels):
        for u, v in fd.edges:
            su, sv = fd.automorphism(u), fd.automorphism(v)
            if sv not in adj.get(su, ()):
                bad.append(f"{u}-{v} maps to non-edge {su}-{sv}")
        for v in labels:
            if fd.orbit[fd.automorphism(v)] != fd.orbit[v]:
                bad.append(f"{v} leaves its orbit")
    report.record("automorphism", bad)

    bad = []
    for a in A.labels:
        for b in A.labels:
            if a == b:
                continue
            for v in fd.preimage(a):
                count = sum(1 for w in adj[v] if fd.orbit[w] == b)
                if count != -A[a, b]:
                    bad.append(f"vertex {v}: {count} neighbours in orbit {b}, expected {-A[a, b]}")
    report.record("neighbour_counts", bad)

    bad = [f"c[{a},{b}] = {v} > N = {fd.N}" for (a, b), v in fd.c.items() if v > fd.N]
    report.record("c_bound", bad)
    return report


# ---------------------------------------------------------------------------
# lattice and rigged-configuration maps


def weight_embed(fd: FoldedDiagram, w: Weight) -> Weight:
    """``Lambda_a -> gamma_a sum Lambda_b`` and ``alpha_a -> gamma_a sum alpha_b``
    over ``b`` in the orbit of ``a``."""
    lam = {}
    alpha = {}
    for v in fd.virtual_labels:
        a = fd.orbit[v]
        lam[v] = fd.gamma[a] * w.lam(a)
        alpha[v] = fd.gamma[a] * w.alpha(a)
    return Weight.from_dicts(fd.virtual_labels, lam, alpha)


def root_embed(fd: FoldedDiagram, a: Label) -> Weight:
    return weight_embed(fd, Weight.from_dicts(fd.base.labels, alpha={a: 1}))


def virtualize(rc: RiggedConfiguration, fd: FoldedDiagram) -> RiggedConfiguration:
    strings = {}
    for v in fd.virtual_labels:
        a = fd.orbit[v]
        g = fd.gamma[a]
        strings[v] = [(g * s.length, g * s.rigging) for s in rc.part(a)]
    hw = None if rc.highest_weight is None else weight_embed(fd, rc.highest_weight)
    return RiggedConfiguration.from_strings(fd.virtual_cartan, strings, hw)


def image_violation(vrc: RiggedConfiguration, fd: FoldedDiagram) -> str | None:
    """Reason ``vrc`` lies outside the virtual image, or ``None``."""
    for a in fd.base.labels:
        g = fd.gamma[a]
        orbit = fd.preimage(a)
        first = vrc.part(orbit[0])
        for v in orbit[1:]:
            if vrc.part(v) != first:
                return f"condition 1: parts {orbit[0]} and {v} differ"
        for s in first:
            if s.length % g:
                return f"condition 3: length {s.length} in orbit {a} not divisible by {g}"
            if s.rigging % g:
                return f"condition 2: rigging {s.rigging} in orbit {a} not divisible by {g}"
    return None


def is_in_virtual_image(vrc: RiggedConfiguration, fd: FoldedDiagram) -> bool:
    return image_violation(vrc, fd) is None


def _devirtualize_weight(fd: FoldedDiagram, w: Weight) -> Weight:
    lam = {}
    alpha = {}
    for a in fd.base.labels:
        v = fd.preimage(a)[0]
        g = fd.gamma[a]
        lam[a], alpha[a] = w.lam(v) // g, w.alpha(v) // g
    out = Weight.from_dicts(fd.base.labels, lam, alpha)
    if weight_embed(fd, out) != w:
        raise NotInVirtualImage(f"weight {w} is not in the image of the lattice map")
    return out


def devirtualize(vrc: RiggedConfiguration, fd: FoldedDiagram) -> RiggedConfiguration:
    reason = image_violation(vrc, fd)
    if reason:
        raise NotInVirtualImage(reason)
    strings = {}
    for a in fd.base.labels:
        g = fd.gamma[a]
        strings[a] = [(s.length // g, s.rigging // g) for s in vrc.part(fd.preimage(a)[0])]
    hw = None if vrc.highest_weight is None else _devirtualize_weight(fd, vrc.highest_weight)
    return RiggedConfiguration.from_strings(fd.base, strings, hw)


def _apply(vrc, fd: FoldedDiagram, a: Label, op: str):
    for v in fd.preimage(a):
        for _ in range(fd.gamma[a]):
            vrc = getattr(vrc, op)(v)
            if vrc is None:
                return None
    return vrc


def virtual_f(vrc: RiggedConfiguration, fd: FoldedDiagram, a: Label):
    """Product over the orbit of ``a`` of ``f_v ** gamma_a``."""
    return _apply(vrc, fd, a, "f")


def virtual_e(vrc: RiggedConfiguration, fd: FoldedDiagram, a: Label):
    return _apply(vrc, fd, a, "e")


def virtual_epsilon(vrc: RiggedConfiguration, fd: FoldedDiagram, a: Label) -> int:
    """``epsilon_v / gamma_a``; raises if it depends on the orbit representative."""
    values = {vrc.epsilon(v) for v in fd.preimage(a)}
    if len(values) != 1:
        raise NotInVirtualImage(f"epsilon differs across orbit {a}: {sorted(values)}")
    (x,) = values
    if x % fd.gamma[a]:
        raise NotInVirtualImage(f"{x} not divisible by gamma_{a} = {fd.gamma[a]}")
    return x // fd.gamma[a]


def virtual_phi(vrc: RiggedConfiguration, fd: FoldedDiagram, a: Label) -> int:
    values = {vrc.phi(v) for v in fd.preimage(a)}
    if len(values) != 1:
        raise NotInVirtualImage(f"phi differs across orbit {a}: {sorted(values)}")
    (x,) = values
    if x % fd.gamma[a]:
        raise NotInVirtualImage(f"{x} not divisible by gamma_{a} = {fd.gamma[a]}")
    return x // fd.gamma[a]


# ---------------------------------------------------------------------------
# checks of the virtualization square


@dataclass(frozen=True)
class Violation:
    element: RiggedConfiguration
    index: Label
    check: str
    detail: str = ""


def check_element(rc: RiggedConfiguration, fd: FoldedDiagram) -> list[Violation]:
    """Compare every crystal statistic of ``rc`` with its virtual image."""
    out = []
    v = virtualize(rc, fd)
    if not is_in_virtual_image(v, fd) or devirtualize(v, fd) != rc:
        out.append(Violation(rc, None, "round_trip"))
    if v.weight() != weight_embed(fd, rc.weight()):
        out.append(Violation(rc, None, "weight", f"{v.weight()} vs {weight_embed(fd, rc.weight())}"))
    for a in fd.base.labels:
        for name, op, vop in (("f", "f", virtual_f), ("e", "e", virtual_e)):
            lhs = getattr(rc, op)(a)
            rhs = vop(v, fd, a)
            lhs = None if lhs is None else virtualize(lhs, fd)
            if lhs != rhs:
                out.append(Violation(rc, a, name, f"{lhs} vs {rhs}"))
        g = fd.gamma[a]
        eps = {v.epsilon(b) for b in fd.preimage(a)}
        phis = {v.phi(b) for b in fd.preimage(a)}
        if eps != {g * rc.epsilon(a)}:
            out.append(Violation(rc, a, "epsilon", f"{sorted(eps)} vs {g}*{rc.epsilon(a)}"))
        if phis != {g * rc.phi(a)}:
            out.append(Violation(rc, a, "phi", f"{sorted(phis)} vs {g}*{rc.phi(a)}"))
    return out


def check_virtualization(fd: FoldedDiagram, elements: Iterable[RiggedConfiguration]) -> list[Violation]:
    out = []
    for rc in elements:
        out.extend(check_element(rc, fd))
    return out


def image_graph(fd: FoldedDiagram, highest_weight: Weight | None = None,
                depth: int | None = None) -> CrystalGraph:
    """Explore the virtual crystal with the virtual operators, then fold the
    nodes back to the base type."""
    if highest_weight is None and depth is None:
        raise FoldingError("exploring the image of B(infinity) needs a depth bound")
    base_root = RiggedConfiguration.empty(fd.base, highest_weight)
    root = virtualize(base_root, fd)
    nodes, edges, complete = explore(root, fd.base.labels, lambda x, a: virtual_f(x, fd, a), depth)
    base_nodes = tuple(devirtualize(x, fd) for x in nodes)
    return CrystalGraph(fd.base, highest_weight, base_nodes, tuple(edges), 0, depth, complete)
