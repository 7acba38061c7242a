"""Exact maximum rainbow-free packing by branch and bound.

The search enumerates every copy of the pattern in the host (complete
graph by default), then walks include/exclude decisions in a fixed copy
order.  Branches that would create a rainbow copy of the forbidden graph
are rejected incrementally, and value pruning uses the free-edge budget.
The tree is split into independent subproblems keyed by the first
included copy; subproblems are solved in order and merged with a fixed
tie-break, so the result is bitwise identical for every thread count.

oracle_max_packing is the deliberately naive cross-check: full subset
enumeration with a from-scratch rainbow scan, no shared code with the
branch-and-bound path.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import GuardError
from .graphs import ColoredPacking, SimpleGraph, _norm_edge
from .verifier import find_rainbow

_SOLVER_N_LIMIT = 12
_ORACLE_COPY_LIMIT = 24


def enumerate_copies(n: int, pattern: SimpleGraph,
                     host: SimpleGraph | None = None,
                     limit: int = _SOLVER_N_LIMIT) -> list[tuple[int, ...]]:
    """All copies of the pattern in the host (K_n when host is None).

    One embedding per copy (per distinct edge set): the lexicographically
    smallest vertex tuple realizing it.  Copies are sorted by their sorted
    edge tuple, so the order is canonical.
    """
    if n > limit:
        raise GuardError(f"enumerate_copies guard: n={n} exceeds {limit}")
    if pattern.edge_count() == 0:
        raise ValueError("pattern needs at least one edge")
    if host is None:
        host = SimpleGraph.complete(n)
    if host.n != n:
        raise ValueError(f"host has {host.n} vertices, expected n={n}")
    hadj = host.adjacency()
    p_adj = pattern.adjacency()
    k = pattern.n
    found: dict[tuple[tuple[int, int], ...], tuple[int, ...]] = {}
    image = [-1] * k
    used = [False] * n

    def place(idx: int) -> None:
        if idx == k:
            emb = tuple(image)
            key = tuple(sorted(_norm_edge(emb[u], emb[v]) for (u, v) in pattern.edges))
            old = found.get(key)
            if old is None or emb < old:
                found[key] = emb
            return
        anchors = [u for u in p_adj[idx] if u < idx]
        if anchors:
            cands = set(hadj[image[anchors[0]]])
            for u in anchors[1:]:
                cands &= hadj[image[u]]
        else:
            cands = range(n)
        for h in cands:
            if used[h]:
                continue
            image[idx] = h
            used[h] = True
            place(idx + 1)
            used[h] = False
            image[idx] = -1

    place(0)
    return [found[key] for key in sorted(found)]


@dataclass(frozen=True)
class SearchConfig:
    """Inputs for max_rainbow_free_packing.

    forbidden=None disables the rainbow constraint (pure packing mode).
    host=None means the complete graph on n vertices; an explicit host
    also disables first-copy symmetry breaking, which is only sound when
    the ground is vertex-transitive under relabeling.
    """

    n: int
    pattern: SimpleGraph
    forbidden: SimpleGraph | None
    host: SimpleGraph | None = None
    node_budget: int = 10_000_000
    symmetry_breaking: bool = True
    threads: int = 1

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.node_budget < 1:
            raise ValueError("node_budget must be positive")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


@dataclass
class SearchResult:
    value: int
    packing: ColoredPacking
    optimal: bool
    nodes: int


class _BudgetUp(Exception):
    pass


class _SubSolver:
    """One subproblem: packings whose first included copy is fixed."""

    def __init__(self, n: int, pattern: SimpleGraph, forbidden: SimpleGraph | None,
                 embeddings: list[tuple[int, ...]],
                 copy_edges: list[list[tuple[int, int]]],
                 masks: list[int], total_edges: int, budget: int):
        self.n = n
        self.pattern = pattern
        self.forbidden = forbidden
        self.embeddings = embeddings
        self.copy_edges = copy_edges
        self.masks = masks
        self.total_edges = total_edges
        self.budget = budget
        self.e_f = pattern.edge_count()
        self.fast_triangle = (forbidden is not None and forbidden.n == 3
                              and forbidden.edge_count() == 3)

    def run(self, first: int):
        """Returns (value, chosen index tuple or None, optimal, nodes)."""
        self.nodes = 0
        self.best_value = 0
        self.best_chosen: tuple[int, ...] | None = None
        self.chosen: list[int] = []
        self.used = 0
        self.adj: list[set[int]] = [set() for _ in range(self.n)]
        self.col: dict[tuple[int, int], int] = {}
        optimal = True
        try:
            self.nodes += 1
            if self._include(first):
                self._dfs(first + 1)
                self._undo(first)
        except _BudgetUp:
            optimal = False
        return (self.best_value, self.best_chosen, optimal, self.nodes)

    def _dfs(self, idx: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetUp
        if len(self.chosen) > self.best_value:
            self.best_value = len(self.chosen)
            self.best_chosen = tuple(self.chosen)
        if idx == len(self.embeddings):
            return
        free = self.total_edges - self.used.bit_count()
        bound = len(self.chosen) + min(len(self.embeddings) - idx, free // self.e_f)
        if bound <= self.best_value:
            return
        if not (self.masks[idx] & self.used) and self._include(idx):
            self._dfs(idx + 1)
            self._undo(idx)
        self._dfs(idx + 1)

    def _include(self, idx: int) -> bool:
        color = len(self.chosen)
        edges = self.copy_edges[idx]
        for (u, v) in edges:
            self.col[(u, v)] = color
            self.adj[u].add(v)
            self.adj[v].add(u)
        self.used |= self.masks[idx]
        self.chosen.append(idx)
        if self.forbidden is None:
            return True
        if self.fast_triangle:
            ok = not self._new_rainbow_triangle(edges, color)
        else:
            packing = ColoredPacking(
                self.n, self.pattern, [self.embeddings[i] for i in self.chosen])
            ok = find_rainbow(packing, self.forbidden) is None
        if not ok:
            self._undo(idx)
        return ok

    def _new_rainbow_triangle(self, new_edges, color: int) -> bool:
        # any rainbow triangle in the extended union must use a new edge
        for (u, v) in new_edges:
            for z in self.adj[u] & self.adj[v]:
                cu = self.col[_norm_edge(u, z)]
                cv = self.col[_norm_edge(v, z)]
                if cu != cv and cu != color and cv != color:
                    return True
        return False

    def _undo(self, idx: int) -> None:
        self.chosen.pop()
        self.used &= ~self.masks[idx]
        for (u, v) in self.copy_edges[idx]:
            del self.col[(u, v)]
            self.adj[u].discard(v)
            self.adj[v].discard(u)


def max_rainbow_free_packing(cfg: SearchConfig) -> SearchResult:
    """Maximum number of edge-disjoint pattern copies with no rainbow
    forbidden copy, plus a witness packing.

    Deterministic: the witness is the lexicographically smallest optimal
    set of copy indices, independent of cfg.threads.  optimal=False means
    the node budget ran out and value is only a certified lower bound.
    """
    if cfg.n > _SOLVER_N_LIMIT:
        raise GuardError(f"solver guard: n={cfg.n} exceeds {_SOLVER_N_LIMIT}")
    host = cfg.host if cfg.host is not None else SimpleGraph.complete(cfg.n)
    embeddings = enumerate_copies(cfg.n, cfg.pattern, host)
    host_edges = host.sorted_edges()
    edge_index = {e: i for i, e in enumerate(host_edges)}
    copy_edges = []
    masks = []
    for emb in embeddings:
        edges = sorted(_norm_edge(emb[u], emb[v]) for (u, v) in cfg.pattern.edges)
        copy_edges.append(edges)
        m = 0
        for e in edges:
            m |= 1 << edge_index[e]
        masks.append(m)

    symmetric_ground = cfg.host is None and cfg.symmetry_breaking
    firsts = ([0] if embeddings else []) if symmetric_ground else list(range(len(embeddings)))
    budget_per = max(1, cfg.node_budget // max(1, len(firsts) + 1))

    def solve_one(first: int):
        sub = _SubSolver(cfg.n, cfg.pattern, cfg.forbidden, embeddings,
                         copy_edges, masks, len(host_edges), budget_per)
        return sub.run(first)

    if cfg.threads > 1 and len(firsts) > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            results = list(pool.map(solve_one, firsts))
    else:
        results = [solve_one(first) for first in firsts]

    best_value = 0
    best_chosen: tuple[int, ...] = ()
    optimal = True
    nodes = 0
    for (value, chosen, sub_optimal, sub_nodes) in results:
        nodes += sub_nodes
        optimal = optimal and sub_optimal
        if chosen is not None and value > best_value:
            best_value = value
            best_chosen = chosen
    packing = ColoredPacking(cfg.n, cfg.pattern,
                             [embeddings[i] for i in best_chosen])
    return SearchResult(best_value, packing, optimal, nodes)


def _naive_rainbow_scan(n: int, col: dict, forbidden: SimpleGraph) -> bool:
    """Unoptimized rainbow check used only by the oracle."""
    f_edges = forbidden.sorted_edges()
    for perm in itertools.permutations(range(n), forbidden.n):
        colors = []
        ok = True
        for (u, v) in f_edges:
            e = _norm_edge(perm[u], perm[v])
            if e not in col:
                ok = False
                break
            colors.append(col[e])
        if ok and len(set(colors)) == len(colors):
            return True
    return False


def oracle_max_packing(n: int, pattern: SimpleGraph,
                       forbidden: SimpleGraph | None) -> tuple[int, ColoredPacking]:
    """Reference answer by full subset enumeration, guarded to 24 copies.

    Scans subset sizes from largest to smallest in lexicographic order and
    returns the first feasible subset, which is also the lexicographically
    smallest optimal witness.
    """
    embeddings = enumerate_copies(n, pattern)
    if len(embeddings) > _ORACLE_COPY_LIMIT:
        raise GuardError(
            f"oracle guard: {len(embeddings)} copies exceed {_ORACLE_COPY_LIMIT}")
    copy_edges = [
        sorted(_norm_edge(emb[u], emb[v]) for (u, v) in pattern.edges)
        for emb in embeddings
    ]
    for r in range(len(embeddings), 0, -1):
        for combo in itertools.combinations(range(len(embeddings)), r):
            col: dict[tuple[int, int], int] = {}
            clash = False
            for ci in combo:
                for e in copy_edges[ci]:
                    if e in col:
                        clash = True
                        break
                    col[e] = ci
                if clash:
                    break
            if clash:
                continue
            if forbidden is not None and _naive_rainbow_scan(n, col, forbidden):
                continue
            return (r, ColoredPacking(n, pattern, [embeddings[i] for i in combo]))
    return (0, ColoredPacking(n, pattern, []))
