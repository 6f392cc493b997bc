"""Shared test helpers: fixture loading, random instances, independent oracles."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from pathlib import Path

from preeuclid import AssocGraph, Matrix, StructureSpec, mat_inverse, parse_problem
from preeuclid.scalar import Field, Scalar

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture(name: str):
    return parse_problem(FIXTURES / f"{name}.json")


def spec_of(name: str) -> StructureSpec:
    return fixture(name)[0]


def all_fixture_paths() -> list[Path]:
    return sorted(FIXTURES.glob("*.json"))


def q(x) -> Scalar:
    return Scalar(Fraction(x))


def rows(*rs) -> Matrix:
    return Matrix.from_rows([[Fraction(v) if isinstance(v, str) else v for v in r] for r in rs])


def random_scalar(rng: random.Random, field: Field = Field.RATIONAL) -> Scalar:
    def part():
        return Fraction(rng.choice([-3, -2, -1, 1, 2, 3, 5]), rng.choice([1, 1, 2, 3]))
    if field is Field.RATIONAL:
        return Scalar(part())
    return Scalar(part(), part() if rng.random() < 0.5 else 0, field)


def random_matrix(rng: random.Random, n: int, density: float,
                  field: Field = Field.RATIONAL) -> Matrix:
    z = Scalar(0, 0, field)
    return Matrix(n, n, [random_scalar(rng, field) if rng.random() < density else z
                         for _ in range(n * n)], field)


def random_spec(rng: random.Random, n: int, gram_density: float | None = None,
                op_density: float | None = None, field: Field = Field.RATIONAL) -> StructureSpec:
    gd = rng.uniform(0.0, 0.35) if gram_density is None else gram_density
    od = rng.uniform(0.0, 0.45) if op_density is None else op_density
    return StructureSpec(tuple(f"e{i + 1}" for i in range(n)),
                         random_matrix(rng, n, gd, field), random_matrix(rng, n, od, field))


def random_digraph(rng: random.Random, n: int, density: float | None = None) -> AssocGraph:
    p = rng.uniform(0.05, 0.5) if density is None else density
    edges = [(i, j) for i in range(n) for j in range(n) if rng.random() < p]
    return AssocGraph.from_edges(n, edges)


def permutation_matrix(perm, field: Field = Field.RATIONAL, signs=None) -> Matrix:
    """Column c is (sign_c) * e_{perm[c]}."""
    n = len(perm)
    signs = signs or [1] * n
    entries = [0] * (n * n)
    for c, r in enumerate(perm):
        entries[r * n + c] = signs[c]
    return Matrix(n, n, entries, field)


def random_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        m = Matrix(n, n, [rng.randint(-2, 2) for _ in range(n * n)])
        try:
            mat_inverse(m)
            return m
        except ArithmeticError:
            continue


# ---- oracles that share no code with the library ----

def transitive_closure(g: AssocGraph) -> list[list[bool]]:
    """Warshall's algorithm on the adjacency matrix, reflexive."""
    n = g.n
    reach = [[i == j or g.has_edge(i, j) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    return reach


def scc_by_reachability(g: AssocGraph) -> list[list[int]]:
    reach = transitive_closure(g)
    blocks = []
    seen = set()
    for i in range(g.n):
        if i in seen:
            continue
        block = [j for j in range(g.n) if reach[i][j] and reach[j][i]]
        seen.update(block)
        blocks.append(block)
    return blocks


def all_isomorphisms(g1: AssocGraph, g2: AssocGraph):
    """Every edge-preserving bijection, in lexicographic order (n! enumeration)."""
    n = g1.n
    if g2.n != n:
        return
    e1 = set(g1.edges)
    e2 = set(g2.edges)
    for perm in itertools.permutations(range(n)):
        if {(perm[i], perm[j]) for i, j in e1} == e2:
            yield perm
