"""The directed graph attached to an operator and a form on a fixed basis.

Vertices are basis indices ``0..n-1``.  There is an edge ``(i, j)`` when the
form pairs ``e_i`` and ``e_j`` nontrivially in either order, or when the
``e_j``-coefficient of ``f(e_i)`` is nonzero.  Self-loops are kept; they
never influence connectivity.
"""

from __future__ import annotations

import enum
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .structure import StructureSpec


class Provenance(enum.Enum):
    FORM = "FORM"
    OPERATOR = "OPERATOR"
    BOTH = "BOTH"


Edge = tuple[int, int]


@dataclass(frozen=True, eq=False)
class AssocGraph:
    labels: tuple[str, ...]
    provenance: Mapping[Edge, Provenance]
    edges: tuple[Edge, ...] = field(init=False)
    succ: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    pred: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self):
        n = len(self.labels)
        object.__setattr__(self, "labels", tuple(self.labels))
        prov = dict(sorted(self.provenance.items()))
        for i, j in prov:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) outside vertex range 0..{n - 1}")
        object.__setattr__(self, "provenance", prov)
        object.__setattr__(self, "edges", tuple(prov))
        succ = [[] for _ in range(n)]
        pred = [[] for _ in range(n)]
        for i, j in prov:
            succ[i].append(j)
            pred[j].append(i)
        object.__setattr__(self, "succ", tuple(tuple(s) for s in succ))
        object.__setattr__(self, "pred", tuple(tuple(p) for p in pred))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], labels: Sequence[str] | None = None,
                   provenance: Provenance = Provenance.OPERATOR) -> "AssocGraph":
        """A plain digraph; every edge gets the same provenance tag."""
        if labels is None:
            labels = [f"v{i + 1}" for i in range(n)]
        if len(labels) != n:
            raise ValueError(f"{len(labels)} labels for {n} vertices")
        return cls(tuple(labels), {tuple(e): provenance for e in edges})

    @property
    def n(self) -> int:
        return len(self.labels)

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.provenance

    def __eq__(self, other):
        if not isinstance(other, AssocGraph):
            return NotImplemented
        return self.labels == other.labels and self.provenance == other.provenance

    __hash__ = None


@dataclass(frozen=True)
class Partition:
    """Disjoint cover of ``0..n-1``; blocks sorted, ordered by least element."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else -1)
        object.__setattr__(self, "blocks", tuple(blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, k: int) -> tuple[int, ...]:
        return self.blocks[k]

    def block_of(self) -> dict[int, int]:
        return {v: k for k, b in enumerate(self.blocks) for v in b}

    def labelled(self, labels: Sequence[str]) -> list[list[str]]:
        return [[labels[v] for v in b] for b in self.blocks]


class DisjointSet:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller root wins, keeps representatives deterministic
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def groups(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v in range(len(self.parent)):
            out.setdefault(self.find(v), []).append(v)
        return list(out.values())


def build_graph(spec: StructureSpec) -> AssocGraph:
    g, f = spec.gram, spec.op
    prov = {}
    for i in range(spec.n):
        for j in range(spec.n):
            form = bool(g[i, j]) or bool(g[j, i])
            oper = bool(f[j, i])
            if form and oper:
                prov[(i, j)] = Provenance.BOTH
            elif form:
                prov[(i, j)] = Provenance.FORM
            elif oper:
                prov[(i, j)] = Provenance.OPERATOR
    return AssocGraph(spec.labels, prov)


def induced_subgraph(g: AssocGraph, vertices: Sequence[int]) -> AssocGraph:
    """Subgraph on ``vertices``, renumbered in the given order."""
    pos = {v: k for k, v in enumerate(vertices)}
    prov = {(pos[i], pos[j]): p for (i, j), p in g.provenance.items() if i in pos and j in pos}
    return AssocGraph(tuple(g.labels[v] for v in vertices), prov)


def weak_components(g: AssocGraph) -> Partition:
    ds = DisjointSet(g.n)
    for i, j in g.edges:
        ds.union(i, j)
    return Partition(tuple(tuple(b) for b in ds.groups()))


def is_connected(g: AssocGraph) -> bool:
    return len(weak_components(g)) == 1


def strong_components(g: AssocGraph) -> Partition:
    """Tarjan's algorithm, iterative so deep graphs do not hit the recursion limit."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[tuple[int, ...]] = []
    counter = 0
    for root in range(g.n):
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, k = work.pop()
            if k == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            succ = g.succ[v]
            descended = False
            while k < len(succ):
                w = succ[k]
                k += 1
                if w not in index:
                    work.append((v, k))
                    work.append((w, 0))
                    descended = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(tuple(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return Partition(tuple(comps))


def find_asymmetric_edge(g: AssocGraph) -> Edge | None:
    """Least edge ``(u, v)`` with no directed path back from ``v`` to ``u``."""
    comp = strong_components(g).block_of()
    for u, v in g.edges:
        if comp[u] != comp[v]:
            return (u, v)
    return None


def is_weakly_symmetric(g: AssocGraph) -> bool:
    return find_asymmetric_edge(g) is None


def reachable_from(g: AssocGraph, start: int) -> set[int]:
    """Vertices reachable from ``start`` by a directed path (``start`` included)."""
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.succ[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def weakly_symmetric_oracle(g: AssocGraph) -> bool:
    """Direct reading of the definition: every edge can be walked back."""
    return all(u in reachable_from(g, v) for u, v in g.edges)


def find_isomorphism(g1: AssocGraph, g2: AssocGraph) -> tuple[int, ...] | None:
    """Lexicographically least vertex bijection preserving edges both ways.

    ``result[u]`` is the image of vertex ``u``.  Vertices are assigned in
    index order and candidates tried in increasing order, so the first
    complete assignment is the least one.  Candidates must agree on
    out-degree, in-degree and loop flag.
    """
    n = g1.n
    if n != g2.n or len(g1.edges) != len(g2.edges):
        return None

    def sig(g: AssocGraph, v: int) -> tuple[int, int, bool]:
        return len(g.succ[v]), len(g.pred[v]), g.has_edge(v, v)

    sig1 = [sig(g1, v) for v in range(n)]
    sig2 = [sig(g2, v) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    candidates = [[w for w in range(n) if sig2[w] == sig1[v]] for v in range(n)]
    image = [-1] * n
    used = [False] * n

    def consistent(u: int, w: int) -> bool:
        for u2 in range(u):
            w2 = image[u2]
            if g1.has_edge(u, u2) != g2.has_edge(w, w2):
                return False
            if g1.has_edge(u2, u) != g2.has_edge(w2, w):
                return False
        return True

    def extend(u: int) -> bool:
        if u == n:
            return True
        for w in candidates[u]:
            if not used[w] and consistent(u, w):
                image[u] = w
                used[w] = True
                if extend(u + 1):
                    return True
                used[w] = False
        image[u] = -1
        return False

    return tuple(image) if extend(0) else None


def preserves_edges(g1: AssocGraph, g2: AssocGraph, mapping: Sequence[int]) -> bool:
    """Check that ``mapping`` is a bijection with (u,v) in E1 iff (m(u),m(v)) in E2."""
    n = g1.n
    if g2.n != n or sorted(mapping) != list(range(n)):
        return False
    return all(g1.has_edge(u, v) == g2.has_edge(mapping[u], mapping[v])
               for u in range(n) for v in range(n))


_DOT_ID = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_DOT_KEYWORDS = {"node", "edge", "graph", "digraph", "subgraph", "strict"}


def _dot_id(label: str) -> str:
    if _DOT_ID.match(label) and label.lower() not in _DOT_KEYWORDS:
        return label
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: AssocGraph, name: str = "G") -> str:
    """Render as a DOT digraph with a fixed line order.

    Nodes appear by index, edges by ``(source, target)``.  A pair of opposite
    non-loop edges with the same provenance is written once with
    ``dir=both`` at the position of its smaller endpoint pair.
    """
    lines = [f"digraph {_dot_id(name)} {{"]
    for v in range(g.n):
        lines.append(f"  {_dot_id(g.labels[v])};")
    for (i, j), prov in g.provenance.items():
        back = g.provenance.get((j, i))
        if i != j and back is prov:
            if i > j:
                continue
            attrs = f'dir=both, provenance="{prov.value}"'
        else:
            attrs = f'provenance="{prov.value}"'
        lines.append(f"  {_dot_id(g.labels[i])} -> {_dot_id(g.labels[j])} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
