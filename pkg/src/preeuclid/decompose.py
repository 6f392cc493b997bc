"""Orthogonal decomposition of the space and the operator along graph components.

Each weak component of the associated graph spans a subspace; these
subspaces are pairwise orthogonal (both argument orders), each is invariant
under the operator, and the operator splits as a sum of summands that act
as the operator on one component and vanish on the others.

The brute-force oracles below enumerate subsets of the basis directly and
share no code with the graph-based routines they check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Sequence

from .errors import InvariantViolation
from .graph import (AssocGraph, Partition, Provenance, build_graph, induced_subgraph,
                    is_connected, reachable_from, weak_components)
from .matrix import Matrix
from .scalar import zero
from .structure import StructureSpec


@dataclass(frozen=True)
class Component:
    index_set: tuple[int, ...]
    labels: tuple[str, ...]
    block_gram: Matrix
    block_op: Matrix
    summand: Matrix

    @property
    def dim(self) -> int:
        return len(self.index_set)


@dataclass(frozen=True)
class Decomposition:
    components: tuple[Component, ...]
    source: StructureSpec

    @classmethod
    def from_blocks(cls, spec: StructureSpec, blocks: Sequence[Sequence[int]]) -> "Decomposition":
        """Assemble components for arbitrary index sets, without checking them."""
        comps = []
        z = zero(spec.field)
        for block in blocks:
            idx = tuple(sorted(block))
            members = set(idx)
            summand = Matrix(spec.n, spec.n,
                             [spec.op[r, c] if c in members else z
                              for r in range(spec.n) for c in range(spec.n)], spec.field)
            comps.append(Component(idx, tuple(spec.labels[i] for i in idx),
                                   spec.gram.submatrix(idx, idx),
                                   spec.op.submatrix(idx, idx), summand))
        return cls(tuple(comps), spec)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    @property
    def partition(self) -> Partition:
        return Partition(tuple(c.index_set for c in self.components))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Any = None


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def decompose(spec: StructureSpec) -> Decomposition:
    d = Decomposition.from_blocks(spec, weak_components(build_graph(spec)).blocks)
    report = verify_decomposition(spec, d)
    if not report.passed:
        names = ", ".join(c.name for c in report.failures())
        raise InvariantViolation(f"decomposition failed its own checks: {names}")
    return d


def verify_decomposition(spec: StructureSpec, d: Decomposition) -> VerificationReport:
    """Re-check every property the decomposition is supposed to have.

    Witnesses are the first offending item in index order: an uncovered or
    doubly covered index, a nonzero cross Gram entry ``(i, j)``, a nonzero
    operator entry ``(row, col)`` leaving a component, or a disconnected
    component number.
    """
    n = spec.n
    checks = []

    seen: dict[int, int] = {}
    bad_cover = None
    for k, comp in enumerate(d.components):
        for i in comp.index_set:
            if i in seen or not 0 <= i < n:
                bad_cover = bad_cover if bad_cover is not None else i
            seen[i] = k
    missing = [i for i in range(n) if i not in seen]
    if bad_cover is None and missing:
        bad_cover = missing[0]
    empty = next((k for k, c in enumerate(d.components) if not c.index_set), None)
    partition_ok = bad_cover is None and empty is None
    checks.append(Check("partition", partition_ok,
                        None if partition_ok else {"index": bad_cover, "empty_component": empty}))

    def owner(i: int) -> int:
        return seen.get(i, -1)

    cross = next(((i, j) for i in range(n) for j in range(n)
                  if owner(i) != owner(j) and spec.gram[i, j]), None)
    checks.append(Check("orthogonality", cross is None,
                        None if cross is None else {"row": cross[0], "col": cross[1]}))

    leak = next(((r, c) for r in range(n) for c in range(n)
                 if owner(r) != owner(c) and spec.op[r, c]), None)
    checks.append(Check("invariance", leak is None,
                        None if leak is None else {"row": leak[0], "col": leak[1]}))

    bad_block = next((k for k, c in enumerate(d.components)
                      if c.block_gram != spec.gram.submatrix(c.index_set, c.index_set)
                      or c.block_op != spec.op.submatrix(c.index_set, c.index_set)), None)
    checks.append(Check("blocks", bad_block is None,
                        None if bad_block is None else {"component": bad_block}))

    # summand k equals f on its own columns and vanishes on every other column
    bad_summand = None
    for k, c in enumerate(d.components):
        members = set(c.index_set)
        for col in range(n):
            for row in range(n):
                expected = spec.op[row, col] if col in members else zero(spec.field)
                if c.summand.shape != (n, n) or c.summand[row, col] != expected:
                    bad_summand = {"component": k, "row": row, "col": col}
                    break
            if bad_summand:
                break
        if bad_summand:
            break
    checks.append(Check("summand_restriction", bad_summand is None, bad_summand))

    total = Matrix.zeros(n, n, spec.field)
    for c in d.components:
        if c.summand.shape == (n, n):
            total = total + c.summand
    diff = next((total - spec.op).nonzero(), None)
    checks.append(Check("summand_sum", diff is None,
                        None if diff is None else {"row": diff[0], "col": diff[1]}))

    g = build_graph(spec)
    disconnected = next((k for k, c in enumerate(d.components)
                         if c.index_set and all(0 <= i < n for i in c.index_set)
                         and not is_connected(induced_subgraph(g, c.index_set))), None)
    checks.append(Check("component_connected", disconnected is None,
                        None if disconnected is None else {"component": disconnected}))
    return VerificationReport(tuple(checks))


def is_f_indecomposable(spec: StructureSpec) -> bool:
    return is_connected(build_graph(spec))


def decomposing_split(spec: StructureSpec) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Orthogonal invariant split, or None when the space is indecomposable.

    The first side is the component of vertex 0, i.e. the smallest admissible
    side containing index 0.
    """
    parts = weak_components(build_graph(spec))
    if len(parts) == 1:
        return None
    first = parts[0]
    rest = tuple(i for i in range(spec.n) if i not in set(first))
    return first, rest


def _splits(n: int):
    """Nontrivial bipartitions as (side with index 0, other side), least first."""
    others = range(1, n)
    for size in range(0, n - 1):
        for extra in itertools.combinations(others, size):
            side = (0,) + extra
            members = set(side)
            yield side, tuple(i for i in range(n) if i not in members)


def brute_force_split(spec: StructureSpec) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Enumerate every bipartition of the basis and test the definition directly."""
    g, f = spec.gram, spec.op
    for side, other in _splits(spec.n):
        orthogonal = all(not g[a, b] and not g[b, a] for a in side for b in other)
        if not orthogonal:
            continue
        invariant = (all(not f[b, a] for a in side for b in other)
                     and all(not f[a, b] for a in side for b in other))
        if invariant:
            return side, other
    return None


def indecomposable_oracle(spec: StructureSpec) -> bool:
    return brute_force_split(spec) is None


def f_support_digraph(spec: StructureSpec) -> AssocGraph:
    """Edge ``(i, j)`` iff ``f(e_i)`` has a nonzero ``e_j``-coefficient."""
    return AssocGraph(spec.labels, {(c, r): Provenance.OPERATOR for r, c in spec.op.nonzero()})


def invariant_subset(spec: StructureSpec) -> tuple[int, ...] | None:
    """Smallest nonempty proper basis subset whose span is f-invariant.

    Any such subset contains the forward closure of each of its members, so
    the smallest ones are closures of single vertices in the support
    digraph.  Ties are broken lexicographically.  None means minimal.
    """
    g = f_support_digraph(spec)
    best = None
    for v in range(spec.n):
        closure = tuple(sorted(reachable_from(g, v)))
        if len(closure) < spec.n and (best is None or (len(closure), closure) < (len(best), best)):
            best = closure
    return best


def is_minimal(spec: StructureSpec) -> bool:
    return invariant_subset(spec) is None


def brute_force_invariant_subset(spec: StructureSpec) -> tuple[int, ...] | None:
    """Enumerate nonempty proper subsets by (size, lexicographic) order."""
    n = spec.n
    # column c of F as a bitmask of rows with nonzero entries
    image = [sum(1 << r for r in range(n) if spec.op[r, c]) for c in range(n)]
    for size in range(1, n):
        for subset in itertools.combinations(range(n), size):
            mask = sum(1 << c for c in subset)
            if all(image[c] & ~mask == 0 for c in subset):
                return subset
    return None


def minimality_oracle(spec: StructureSpec) -> bool:
    return brute_force_invariant_subset(spec) is None
