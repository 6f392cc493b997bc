"""Comparing the graphs and decompositions obtained from two bases.

Two bases are f-equivalent when some form-preserving automorphism commuting
with ``f`` carries one onto the other.  Such an automorphism is determined
by the bijection between the bases, so a finite search over bijections
decides f-equivalence exactly.  Equivalence of the induced decompositions
under *arbitrary* automorphisms is not decided; a report either exhibits a
witness, refutes it through the component dimensions, or says it cannot tell.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .decompose import Decomposition, decompose
from .errors import InvariantViolation, SearchLimitError, ShapeError
from .graph import build_graph, find_isomorphism, preserves_edges
from .matrix import Matrix, mat_mul
from .structure import StructureSpec, change_basis

MAX_SEARCH_DIM = 10


class Verdict(enum.Enum):
    EQUIVALENT_WITNESSED = "EQUIVALENT_WITNESSED"
    NOT_EQUIVALENT_BY_SIGNATURE = "NOT_EQUIVALENT_BY_SIGNATURE"
    INCONCLUSIVE = "INCONCLUSIVE"


def witness_matrix(transition: Matrix, sigma: Sequence[int]) -> Matrix:
    """Matrix of the map sending ``v_i`` to ``w_sigma[i]``, in old coordinates."""
    return Matrix.from_columns([transition.column(sigma[i]) for i in range(len(sigma))],
                               transition.field)


def is_f_equivalence(spec: StructureSpec, transition: Matrix, sigma: Sequence[int]) -> bool:
    """Exact check of ``P^T G P == G`` and ``F P == P F``."""
    p = witness_matrix(transition, sigma)
    return (mat_mul(mat_mul(p.T, spec.gram), p) == spec.gram
            and mat_mul(spec.op, p) == mat_mul(p, spec.op))


def find_f_equivalence(spec: StructureSpec, transition: Matrix) -> tuple[int, ...] | None:
    """Least bijection ``sigma`` (``v_i -> w_sigma[i]``) realising an f-equivalence.

    In the new basis the conditions read ``G'[s(a), s(b)] == G[a, b]`` and
    ``F'[s(r), s(c)] == F[r, c]``; they prune a depth-first search over
    bijections taken in lexicographic order.  A candidate is accepted only
    after the matrix identities are rechecked on the original basis.
    """
    n = spec.n
    if n > MAX_SEARCH_DIM:
        raise SearchLimitError(f"bijection search is capped at dimension {MAX_SEARCH_DIM}, got {n}")
    if transition.shape != (n, n):
        raise ShapeError(f"transition is {transition.rows}x{transition.cols}, expected {n}x{n}")
    new = change_basis(spec, transition)
    transition = transition.in_field(spec.field)
    g0, f0, g1, f1 = spec.gram, spec.op, new.gram, new.op
    image = [-1] * n
    used = [False] * n

    def fits(a: int, s: int) -> bool:
        if g1[s, s] != g0[a, a] or f1[s, s] != f0[a, a]:
            return False
        for b in range(a):
            t = image[b]
            if (g1[s, t] != g0[a, b] or g1[t, s] != g0[b, a]
                    or f1[s, t] != f0[a, b] or f1[t, s] != f0[b, a]):
                return False
        return True

    def extend(a: int) -> tuple[int, ...] | None:
        if a == n:
            sigma = tuple(image)
            return sigma if is_f_equivalence(spec, transition, sigma) else None
        for s in range(n):
            if not used[s] and fits(a, s):
                image[a] = s
                used[s] = True
                found = extend(a + 1)
                if found is not None:
                    return found
                used[s] = False
        image[a] = -1
        return None

    return extend(0)


def decomposition_signature(d: Decomposition) -> tuple[int, ...]:
    """Component dimensions as a multiset, largest first."""
    return tuple(sorted((c.dim for c in d.components), reverse=True))


def component_map(sigma: Sequence[int], d_old: Decomposition,
                  d_new: Decomposition) -> tuple[int, ...] | None:
    """Component bijection induced by ``sigma``, or None if it splits a component."""
    owner = {v: k for k, c in enumerate(d_new.components) for v in c.index_set}
    out = []
    for c in d_old.components:
        targets = {sigma[v] for v in c.index_set}
        k = owner[next(iter(targets))]
        if targets != set(d_new.components[k].index_set):
            return None
        out.append(k)
    return tuple(out) if len(set(out)) == len(out) == len(d_new.components) else None


@dataclass(frozen=True)
class ComparisonReport:
    old: StructureSpec
    new: StructureSpec
    graphs_isomorphic: bool
    isomorphism: tuple[int, ...] | None
    f_equivalence: tuple[int, ...] | None
    witness_matrix: Matrix | None
    component_map: tuple[int, ...] | None
    signature_old: tuple[int, ...]
    signature_new: tuple[int, ...]
    verdict: Verdict


def compare_bases(spec: StructureSpec, transition: Matrix,
                  new_labels: Sequence[str] | None = None) -> ComparisonReport:
    new = change_basis(spec, transition, new_labels)
    g_old, g_new = build_graph(spec), build_graph(new)
    iso = find_isomorphism(g_old, g_new)
    sigma = find_f_equivalence(spec, transition)
    d_old, d_new = decompose(spec), decompose(new)
    sig_old, sig_new = decomposition_signature(d_old), decomposition_signature(d_new)

    comp_map = None
    p = None
    if sigma is not None:
        p = witness_matrix(transition.in_field(spec.field), sigma)
        comp_map = component_map(sigma, d_old, d_new)
        if (iso is None or not preserves_edges(g_old, g_new, sigma)
                or sig_old != sig_new or comp_map is None):
            raise InvariantViolation("f-equivalence witness does not induce a graph isomorphism "
                                     "mapping components onto components")
        verdict = Verdict.EQUIVALENT_WITNESSED
    elif sig_old != sig_new:
        verdict = Verdict.NOT_EQUIVALENT_BY_SIGNATURE
    else:
        verdict = Verdict.INCONCLUSIVE
    return ComparisonReport(spec, new, iso is not None, iso, sigma, p, comp_map,
                            sig_old, sig_new, verdict)
