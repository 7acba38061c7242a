"""Exact fractional relaxation of the pattern packing problem.

Variables are weights in [0, 1] on every copy of the pattern in the host;
each host edge may carry total weight at most 1.  The optimum nu* sits
between the integral packing number and e(host)/e(pattern).  The solver is
a dense tableau simplex over Fraction with Bland's rule, so it terminates
and the optimum is exact.  The x <= 1 bounds are implied by the edge rows
(every copy covers at least one edge) and are not added as rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GuardError
from .graphs import SimpleGraph, _norm_edge
from .solver import enumerate_copies

_LP_COPY_LIMIT = 2000
_LP_EDGE_LIMIT = 2000


@dataclass(frozen=True)
class FractionalPackingProblem:
    """A host, a pattern, the enumerated copy list, and per-copy weights."""

    host: SimpleGraph
    pattern: SimpleGraph
    copy_list: tuple[tuple[int, ...], ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.copy_list) != len(self.weights):
            raise ValueError("one weight per copy required")

    def value(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def edge_loads(self) -> dict[tuple[int, int], Fraction]:
        loads: dict[tuple[int, int], Fraction] = {}
        for emb, wt in zip(self.copy_list, self.weights):
            for (u, v) in self.pattern.edges:
                e = _norm_edge(emb[u], emb[v])
                loads[e] = loads.get(e, Fraction(0)) + wt
        return loads

    def validate(self) -> None:
        for wt in self.weights:
            if not 0 <= wt <= 1:
                raise ValueError(f"weight {wt} outside [0, 1]")
        for e, load in self.edge_loads().items():
            if load > 1:
                raise ValueError(f"edge {e} overloaded: {load}")

    def to_json_dict(self) -> dict:
        return {
            "host": self.host.to_json_dict(),
            "pattern": self.pattern.to_json_dict(),
            "copies": [list(c) for c in self.copy_list],
            "weights": [f"{w.numerator}/{w.denominator}" for w in self.weights],
        }


def _simplex_max(a: list[list[Fraction]], c: list[Fraction]):
    """Maximize c.x subject to a.x <= 1, x >= 0; returns (value, x).

    The all-slack basis is feasible because the right side is all ones.
    Entering and leaving variables follow Bland's rule, which cannot cycle.
    """
    m = len(a)
    nvars = len(c)
    width = nvars + m + 1
    rows = []
    for i in range(m):
        row = list(a[i]) + [Fraction(0)] * m + [Fraction(1)]
        row[nvars + i] = Fraction(1)
        rows.append(row)
    obj = [-x for x in c] + [Fraction(0)] * (m + 1)
    basis = list(range(nvars, nvars + m))

    while True:
        enter = next((j for j in range(width - 1) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best_ratio = None
        for r in range(m):
            coef = rows[r][enter]
            if coef > 0:
                ratio = rows[r][-1] / coef
                if (best_ratio is None or ratio < best_ratio
                        or (ratio == best_ratio and basis[r] < basis[leave])):
                    best_ratio = ratio
                    leave = r
        if leave is None:
            raise ArithmeticError("LP claims unbounded, model must be wrong")
        piv = rows[leave][enter]
        rows[leave] = [x / piv for x in rows[leave]]
        for r in range(m):
            if r != leave and rows[r][enter] != 0:
                f = rows[r][enter]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, rows[leave])]
        basis[leave] = enter

    x = [Fraction(0)] * nvars
    for r in range(m):
        if basis[r] < nvars:
            x[basis[r]] = rows[r][-1]
    return (obj[-1], x)


def lp_fractional_packing(host: SimpleGraph, pattern: SimpleGraph
                          ) -> tuple[Fraction, FractionalPackingProblem]:
    """Exact nu*: maximum total copy weight under unit edge capacities."""
    if pattern.edge_count() == 0:
        raise ValueError("pattern needs at least one edge")
    if host.edge_count() > _LP_EDGE_LIMIT:
        raise GuardError(f"lp guard: {host.edge_count()} edges exceed {_LP_EDGE_LIMIT}")
    copies = enumerate_copies(host.n, pattern, host, limit=host.n)
    if len(copies) > _LP_COPY_LIMIT:
        raise GuardError(f"lp guard: {len(copies)} copies exceed {_LP_COPY_LIMIT}")
    if not copies:
        problem = FractionalPackingProblem(host, pattern, (), ())
        return (Fraction(0), problem)

    host_edges = host.sorted_edges()
    edge_row = {e: i for i, e in enumerate(host_edges)}
    a = [[Fraction(0)] * len(copies) for _ in host_edges]
    for ci, emb in enumerate(copies):
        for (u, v) in pattern.edges:
            a[edge_row[_norm_edge(emb[u], emb[v])]][ci] = Fraction(1)
    value, x = _simplex_max(a, [Fraction(1)] * len(copies))
    problem = FractionalPackingProblem(host, pattern, tuple(copies), tuple(x))
    problem.validate()
    return (value, problem)
