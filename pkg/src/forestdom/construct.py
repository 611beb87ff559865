"""Builders for forest realizations of a degree sequence.

``realize_any`` produces some realization, the remaining builders
produce realizations that attain the closed-form extremes: one leaf per
support vertex when leaves are scarce, an all-support tree when leaves
dominate, and a peeling recursion gluing 2-vertex components on top.
All labellings are canonical, so every builder is deterministic.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Iterable

from .degseq import (
    Branch,
    DegreeSequence,
    as_degree_sequence,
    peel_k2,
    validate,
)
from .forest import Forest
from .formulas import extremal_values


class PreconditionError(ValueError):
    """The input sequence does not satisfy the builder's contract."""


class InfeasibleSplitError(ValueError):
    """The requested component count cannot be met at this order."""


@dataclass(frozen=True)
class ExtremalCertificate:
    """A built forest together with its checked extremal values.

    ``gamma``/``alpha`` come from the exact solvers on the built forest,
    the expected values from the closed forms; a correct build has both
    pairs equal.
    """

    forest: Forest
    gamma: int
    alpha: int
    expected_gamma_max: int
    expected_alpha_min: int
    branch: Branch


def _tree_edges(degrees: tuple[int, ...]) -> list[tuple[int, int]]:
    """Caterpillar tree for positive degrees sorted non-increasing.

    Requires sum(degrees) == 2 * len(degrees) - 2.  Vertices with degree
    >= 2 form the spine 0, 1, ..., s-1 in order; leaves are labelled
    s .. n-1 and attached spine-first.  Vertex i ends with degree
    degrees[i] exactly.
    """
    n = len(degrees)
    if n == 1:
        return []
    spine = sum(1 for d in degrees if d >= 2)
    if spine == 0:
        # all ones: only the single edge satisfies the degree total
        return [(0, 1)]
    edges = [(i, i + 1) for i in range(spine - 1)]
    capacity = []
    for i in range(spine):
        used = (1 if i in (0, spine - 1) else 2) if spine > 1 else 0
        capacity.append(degrees[i] - used)
    leaf = spine
    for i in range(spine):
        for _ in range(capacity[i]):
            edges.append((i, leaf))
            leaf += 1
    assert leaf == n, "leaf attachment must consume every degree-1 vertex"
    return edges


def realize_any(degrees: "DegreeSequence | Iterable[int]") -> Forest:
    """Build one forest realization of a zero-free sequence.

    Splits off c - 1 two-vertex components, then lays the rest out as a
    caterpillar.  Labels are canonical: spine first, then leaves in
    attachment order, then the 2-vertex components; vertex i always
    receives the i-th largest degree.
    """
    seq = as_degree_sequence(degrees)
    stats = validate(seq)
    if stats.n0 != 0:
        raise PreconditionError("realize_any requires a zero-free sequence")
    pairs = stats.c - 1
    core = seq.degrees[: stats.n - 2 * pairs]
    edges = _tree_edges(core)
    base = len(core)
    for _ in range(pairs):
        edges.append((base, base + 1))
        base += 2
    return Forest(stats.n, edges)


def matched_support_forest(degrees: "DegreeSequence | Iterable[int]") -> Forest:
    """Extremal realization when leaves are scarce (n1 <= n_ge2).

    Realizes the top n1 entries lowered by one, attaches one new leaf to
    every vertex of that base forest, and subdivides its smallest edge
    n - 2*n1 times.  The result has exactly n1 support vertices, each
    with one leaf, and its other degree->=2 vertices form a path.
    """
    seq = as_degree_sequence(degrees)
    stats = validate(seq)
    if stats.n0 != 0 or stats.n_ge2 == 0:
        raise PreconditionError("need a zero-free sequence with an entry >= 2")
    if stats.n1 > stats.n_ge2:
        raise PreconditionError(
            f"needs n1 <= n_ge2, have n1={stats.n1}, n_ge2={stats.n_ge2}"
        )
    n1 = stats.n1
    base = realize_any(DegreeSequence(tuple(d - 1 for d in seq.degrees[:n1])))
    edges = list(base.edges)
    for v in range(n1):
        edges.append((v, n1 + v))
    extra = stats.n - 2 * n1
    if extra > 0:
        # subdivide the lexicographically smallest base edge
        a, b = base.edges[0]
        edges.remove((a, b))
        chain = [a] + [2 * n1 + i for i in range(extra)] + [b]
        edges.extend(zip(chain, chain[1:]))
    return Forest(stats.n, edges)


def all_support_tree(degrees: "DegreeSequence | Iterable[int]") -> Forest:
    """Extremal tree for c == 1 and n1 > n_ge2: every inner vertex supports.

    The degree->=2 entries become an inner tree whose vertex i keeps
    degree e_i there, with 1 <= e_i <= d_i - 1 chosen greedily (largest
    capacity first); the d_i - e_i leftover slots take leaves, so every
    inner vertex is adjacent to at least one leaf.
    """
    seq = as_degree_sequence(degrees)
    stats = validate(seq)
    if stats.n0 != 0 or stats.n_ge2 == 0:
        raise PreconditionError("need a zero-free sequence with an entry >= 2")
    if stats.c != 1:
        raise PreconditionError(f"needs c == 1, have c={stats.c}")
    if stats.n1 <= stats.n_ge2:
        raise PreconditionError(
            f"needs n1 > n_ge2, have n1={stats.n1}, n_ge2={stats.n_ge2}"
        )
    m = stats.n_ge2
    inner = seq.degrees[:m]
    if m == 1:
        e = [0]
        edges: list[tuple[int, int]] = []
    else:
        e = [1] * m
        need = m - 2
        for i in range(m):
            take = min(need, inner[i] - 1 - e[i])
            e[i] += take
            need -= take
            if need == 0:
                break
        assert need == 0, "n1 > n_ge2 guarantees enough inner capacity"
        edges = _tree_edges(tuple(e))
    leaf = m
    for i in range(m):
        for _ in range(inner[i] - e[i]):
            edges.append((i, leaf))
            leaf += 1
    return Forest(stats.n, edges)


def extremal_build(degrees: "DegreeSequence | Iterable[int]") -> ExtremalCertificate:
    """Build a realization attaining gamma_max and alpha_min at once.

    Peels 2-vertex components while the sequence stays leaf-heavy with
    c >= 2, finishes with the matching base construction, and re-adds
    the peeled components.  The certificate carries solver values next
    to the closed-form ones so callers can check they agree.
    """
    seq = as_degree_sequence(degrees)
    stats = validate(seq)
    if stats.n0 != 0 or stats.n_ge2 == 0:
        raise PreconditionError("need a zero-free sequence with an entry >= 2")
    values = extremal_values(seq)
    core = seq
    core_stats = stats
    peeled = 0
    while core_stats.n1 > core_stats.n_ge2 and core_stats.c > 1:
        core = peel_k2(core)
        core_stats = validate(core)
        peeled += 1
    if core_stats.n1 <= core_stats.n_ge2:
        base = matched_support_forest(core)
    else:
        base = all_support_tree(core)
    edges = list(base.edges)
    offset = base.n
    for _ in range(peeled):
        edges.append((offset, offset + 1))
        offset += 2
    forest = Forest(stats.n, edges)
    gamma, _ = forest.domination_number()
    alpha, _ = forest.independence_number()
    return ExtremalCertificate(
        forest=forest,
        gamma=gamma,
        alpha=alpha,
        expected_gamma_max=values.gamma_max,
        expected_alpha_min=values.alpha_min,
        branch=values.branch,
    )


def _decode_prufer(code: list[int]) -> list[tuple[int, int]]:
    """Labelled tree on len(code) + 2 vertices from its Prufer code."""
    size = len(code) + 2
    degree = [1] * size
    for x in code:
        degree[x] += 1
    leaves = [v for v in range(size) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v) if u < v else (v, u))
    return edges


def random_forest(n: int, component_target: int, seed: int) -> Forest:
    """Seed-deterministic random forest with the requested component count.

    Splits n vertices into component_target consecutive blocks via a
    random composition, then draws each block's tree uniformly from its
    labelled trees.
    """
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    if not 1 <= component_target <= n:
        raise InfeasibleSplitError(
            f"cannot split {n} vertices into {component_target} components"
        )
    rng = random.Random(seed)
    cuts = sorted(rng.sample(range(1, n), component_target - 1))
    bounds = [0] + cuts + [n]
    edges: list[tuple[int, int]] = []
    for lo, hi in zip(bounds, bounds[1:]):
        size = hi - lo
        if size == 1:
            continue
        if size == 2:
            edges.append((lo, lo + 1))
            continue
        code = [rng.randrange(size) for _ in range(size - 2)]
        edges.extend((lo + u, lo + v) for u, v in _decode_prufer(code))
    return Forest(n, edges)
