"""Breadth-first generation of crystal graphs, isomorphism and serialization."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .cartan import CartanMatrix, Weight, _label_from_json, _label_to_json
from .errors import CrystalError, IncomparableDepths
from .rigged import RiggedConfiguration

DEFAULT_MAX_NODES = 200_000


@dataclass(frozen=True)
class CrystalGraph:
    """An explored piece of a crystal.

    ``edges`` holds triples ``(src, dst, label)`` meaning ``f_label(nodes[src]) ==
    nodes[dst]``.  Node ids follow BFS discovery order, children of a node being
    visited in label order, so the numbering is canonical.
    """

    cartan: CartanMatrix
    highest_weight: Weight | None
    nodes: tuple[RiggedConfiguration, ...]
    edges: tuple[tuple[int, int, object], ...]
    root: int = 0
    depth: int | None = None
    complete: bool = False
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {n: k for k, n in enumerate(self.nodes)})

    def __len__(self):
        return len(self.nodes)

    def id_of(self, rc: RiggedConfiguration) -> int | None:
        return self._index.get(rc)

    def successors(self, node: int) -> dict:
        return {a: dst for src, dst, a in self.edges if src == node}


def explore(root, labels: Sequence, step: Callable, depth: int | None,
            max_nodes: int = DEFAULT_MAX_NODES, workers: int = 1):
    """Generic BFS from ``root`` along ``step(node, label)``.

    Returns ``(nodes, edges, complete)``.  ``complete`` is true when the last
    explored level has no children.  Exceeding ``max_nodes`` stops the search
    and reports an incomplete graph.
    """
    nodes = [root]
    index = {root: 0}
    edges = []
    frontier = [0]
    level = 0
    complete = False
    pool = ThreadPoolExecutor(workers) if workers > 1 else None

    def children(k):
        node = nodes[k]
        return [(a, step(node, a)) for a in labels]

    try:
        while True:
            if not frontier:
                complete = True
                break
            if depth is not None and level >= depth:
                complete = not any(c is not None for k in frontier for _, c in children(k))
                break
            results = list(pool.map(children, frontier)) if pool else [children(k) for k in frontier]
            nxt = []
            for k, kids in zip(frontier, results):
                for a, child in kids:
                    if child is None:
                        continue
                    j = index.get(child)
                    if j is None:
                        j = len(nodes)
                        index[child] = j
                        nodes.append(child)
                        nxt.append(j)
                    edges.append((k, j, a))
            if len(nodes) > max_nodes:
                break
            frontier = nxt
            level += 1
    finally:
        if pool:
            pool.shutdown()
    return nodes, edges, complete


def generate(cartan: CartanMatrix, highest_weight: Weight | None = None, depth: int | None = None,
             max_nodes: int = DEFAULT_MAX_NODES, workers: int = 1) -> CrystalGraph:
    """Explore ``RC(infinity)`` (``highest_weight=None``) or ``RC(lambda)``.

    ``depth`` bounds the number of f-applications from the root.  It is
    required for ``B(infinity)``.  Output is independent of ``workers``.
    """
    if highest_weight is None and depth is None:
        raise CrystalError("generating B(infinity) needs a depth bound")
    if depth is not None and depth < 0:
        raise CrystalError("depth must be non-negative")
    root = RiggedConfiguration.empty(cartan, highest_weight)
    nodes, edges, complete = explore(root, cartan.labels, lambda rc, a: rc.f(a), depth,
                                     max_nodes=max_nodes, workers=workers)
    return CrystalGraph(cartan, highest_weight, tuple(nodes), tuple(edges), 0, depth, complete)


def isomorphic(g1: CrystalGraph, g2: CrystalGraph) -> bool:
    """Colored rooted isomorphism of two crystal graphs.

    Each node has at most one outgoing and one incoming edge of each color, so
    the root-to-root match extends to at most one candidate bijection.
    """
    if not (g1.complete and g2.complete) and g1.depth != g2.depth:
        raise IncomparableDepths(f"depths {g1.depth} and {g2.depth} with an incomplete graph")
    if len(g1.nodes) != len(g2.nodes) or len(g1.edges) != len(g2.edges):
        return False
    def tables(g):
        out, inc = {}, {}
        for s, d, a in g.edges:
            if (a, +1) in out.setdefault(s, {}) or (a, -1) in inc.setdefault(d, {}):
                raise CrystalError("not a crystal graph: repeated colored edge at a node")
            out[s][(a, +1)] = d
            inc[d][(a, -1)] = s
        return {k: {**out.get(k, {}), **inc.get(k, {})} for k in range(len(g.nodes))}

    adj1, adj2 = tables(g1), tables(g2)
    mapping = {g1.root: g2.root}
    stack = [g1.root]
    while stack:
        u = stack.pop()
        v = mapping[u]
        if adj1[u].keys() != adj2[v].keys():
            return False
        for move, t in adj1[u].items():
            w = adj2[v][move]
            if t in mapping:
                if mapping[t] != w:
                    return False
            else:
                mapping[t] = w
                stack.append(t)
    if len(mapping) != len(g1.nodes) or len(set(mapping.values())) != len(mapping):
        return False
    return {(mapping[s], mapping[d], a) for s, d, a in g1.edges} == set(g2.edges)


# ---------------------------------------------------------------------------
# serialization


def _hw_json(hw):
    return "inf" if hw is None else hw.to_json()


def export_json(g: CrystalGraph) -> str:
    doc = {
        "cartan": g.cartan.to_json(),
        "highest_weight": _hw_json(g.highest_weight),
        "depth": g.depth,
        "nodes": [{"id": k, "parts": rc.to_json(), "weight": rc.weight().to_json()}
                  for k, rc in enumerate(g.nodes)],
        "edges": [{"src": s, "dst": d, "index": _label_to_json(a)} for s, d, a in g.edges],
        "root": g.root,
        "complete": g.complete,
    }
    return json.dumps(doc, indent=1, sort_keys=True)


def parse_json(text: str) -> CrystalGraph:
    doc = json.loads(text)
    cartan = CartanMatrix.from_json(doc["cartan"])
    hw = doc["highest_weight"]
    hw = None if hw == "inf" else Weight(cartan.labels, tuple(hw["lambda"]), tuple(hw["alpha"]))
    nodes = sorted(doc["nodes"], key=lambda n: n["id"])
    rcs = tuple(RiggedConfiguration.from_json(cartan, n["parts"], hw) for n in nodes)
    edges = tuple((e["src"], e["dst"], _label_from_json(e["index"])) for e in doc["edges"])
    return CrystalGraph(cartan, hw, rcs, edges, doc["root"], doc["depth"], doc["complete"])


_PALETTE = ["darkred", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "teal"]


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(g: CrystalGraph) -> str:
    colors = {a: _PALETTE[k % len(_PALETTE)] for k, a in enumerate(g.cartan.labels)}
    out = ["digraph crystal {", '  node [shape=box, fontname="monospace"];']
    for k, rc in enumerate(g.nodes):
        label = _dot_escape(rc.to_text()).replace("\n", "\\l") + "\\l"
        out.append(f'  n{k} [label="{label}"];')
    for s, d, a in g.edges:
        name = _dot_escape(",".join(map(str, a)) if isinstance(a, tuple) else str(a))
        out.append(f'  n{s} -> n{d} [label="{name}", color="{colors[a]}"];')
    out.append("}")
    return "\n".join(out) + "\n"
