"""Ratio-limited triples, linear gadgets, and progression-free set machinery.

A triple (a, b, c) of pairwise distinct integers is q-limited when
lam*a + mu*b = (lam+mu)*c for some integers 1 <= lam, mu <= q.  With q = 1
this is exactly the 3-term arithmetic progression condition a + b = 2c.
A gadget generalizes this to a system of k-2 independent equations in k
unknowns; sets admitting no solution in distinct elements are gadget-free.

The constructive side produces large q-limited-free subsets of [1, n] by
the digit-sphere method: write candidates in base d with digits below s
where 2q(s-1) < d, so the defining equation has no carries and forces a
convex combination of digit vectors, impossible on a sphere unless the
endpoints coincide.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .certificates import FAIL, PASS, Certificate
from .errors import BudgetError, GuardError

_NUMPY_SAFE = 1 << 60


def is_q_limited_triple(a: int, b: int, c: int, q: int) -> bool:
    """True when a, b, c are pairwise distinct and lam*a+mu*b=(lam+mu)*c
    for some 1 <= lam, mu <= q."""
    if q < 1:
        raise ValueError("q must be >= 1")
    if a == b or a == c or b == c:
        return False
    for lam in range(1, q + 1):
        for mu in range(1, q + 1):
            if lam * a + mu * b == (lam + mu) * c:
                return True
    return False


@dataclass(frozen=True)
class Gadget:
    """System of k-2 equations p*x_i + q*x_j = (p+q)*x_l over k unknowns.

    Equations are (p, q, i, j, l) tuples with 1-based variable indices.
    Validation requires coefficients in (0, h], distinct indices per
    equation, every unknown mentioned somewhere, and full row rank over
    the rationals (checked by exact Gaussian elimination).
    """

    k: int
    h: int
    equations: tuple[tuple[int, int, int, int, int], ...]

    def __post_init__(self) -> None:
        if self.k < 3:
            raise ValueError("gadget needs k >= 3 unknowns")
        if self.h < 1:
            raise ValueError("coefficient bound h must be >= 1")
        if len(self.equations) != self.k - 2:
            raise ValueError(
                f"gadget on k={self.k} unknowns needs exactly {self.k - 2} equations")
        seen_vars: set[int] = set()
        for (p, q, i, j, l) in self.equations:
            if not (0 < p <= self.h and 0 < q <= self.h):
                raise ValueError(f"coefficients ({p},{q}) outside (0,{self.h}]")
            if len({i, j, l}) != 3 or not all(1 <= t <= self.k for t in (i, j, l)):
                raise ValueError(f"indices ({i},{j},{l}) invalid for k={self.k}")
            seen_vars.update((i, j, l))
        if seen_vars != set(range(1, self.k + 1)):
            missing = sorted(set(range(1, self.k + 1)) - seen_vars)
            raise ValueError(f"unknowns {missing} appear in no equation")
        if _rank(self._rows()) != self.k - 2:
            raise ValueError("equations are linearly dependent")

    def _rows(self) -> list[list[int]]:
        rows = []
        for (p, q, i, j, l) in self.equations:
            row = [0] * self.k
            row[i - 1] += p
            row[j - 1] += q
            row[l - 1] -= p + q
            rows.append(row)
        return rows


def _rank(rows: list[list[int]]) -> int:
    """Row rank over the rationals, exact."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def gadget_satisfied(gadget: Gadget, z: tuple[int, ...]) -> bool:
    """Evaluate every equation of the gadget on the assignment z."""
    if len(z) != gadget.k:
        raise ValueError(f"assignment has {len(z)} values, gadget expects {gadget.k}")
    return all(
        p * z[i - 1] + q * z[j - 1] == (p + q) * z[l - 1]
        for (p, q, i, j, l) in gadget.equations)


def _check_distinct(elements) -> list[int]:
    elems = list(elements)
    if len(set(elems)) != len(elems):
        raise ValueError("elements must be distinct")
    return sorted(elems)


def verify_q_free(elements, q: int) -> Certificate:
    """Scan all ordered pairs and coefficient choices for a q-limited triple.

    Returns a PASS certificate, or a FAIL certificate carrying the
    lexicographically smallest witness (a, b, c, lam, mu).  Cost is
    O(|Z|^2 q^2) membership tests, vectorized when elements fit in int64.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    elems = _check_distinct(elements)
    pairs_scanned = len(elems) * max(0, len(elems) - 1) * q * q
    base_payload = {"q": q, "size": len(elems), "pairsScanned": pairs_scanned}
    if len(elems) < 3:
        return Certificate(PASS, dict(base_payload))

    if all(abs(x) < _NUMPY_SAFE // (2 * q) for x in elems):
        witness = _scan_numpy(elems, q)
    else:
        witness = _scan_python(elems, q)
    if witness is None:
        return Certificate(PASS, dict(base_payload))
    a, b, c, lam, mu = witness
    return Certificate(FAIL, {
        "q": q,
        "witness": {"a": a, "b": b, "c": c, "lam": lam, "mu": mu},
    })


def _scan_numpy(elems: list[int], q: int):
    arr = np.asarray(elems, dtype=np.int64)
    for a in elems:
        hits = []
        for lam in range(1, q + 1):
            for mu in range(1, q + 1):
                num = lam * a + mu * arr
                div = lam + mu
                cand = num // div
                mask = (num == cand * div) & (arr != a)
                idx = np.searchsorted(arr, cand)
                idx_ok = idx < len(arr)
                safe = np.where(idx_ok, idx, 0)
                mask &= idx_ok & (arr[safe] == cand) & (cand != a) & (cand != arr)
                for pos in np.nonzero(mask)[0]:
                    hits.append((int(arr[pos]), int(cand[pos]), lam, mu))
        if hits:
            b, c, lam, mu = min(hits)
            return (a, b, c, lam, mu)
    return None


def _scan_python(elems: list[int], q: int):
    in_set = set(elems)
    for a in elems:
        hits = []
        for b in elems:
            if b == a:
                continue
            for lam in range(1, q + 1):
                for mu in range(1, q + 1):
                    num = lam * a + mu * b
                    div = lam + mu
                    if num % div:
                        continue
                    c = num // div
                    if c in in_set and c != a and c != b:
                        hits.append((b, c, lam, mu))
        if hits:
            b, c, lam, mu = min(hits)
            return (a, b, c, lam, mu)
    return None


def _canonical_equations(k: int, h: int):
    """All structurally distinct single equations with i < j."""
    eqs = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            for l in range(1, k + 1):
                if l in (i, j):
                    continue
                for p in range(1, h + 1):
                    for q in range(1, h + 1):
                        eqs.append((p, q, i, j, l))
    return sorted(eqs)


def enumerate_gadgets(k: int, h: int) -> list[Gadget]:
    """Every valid gadget on k unknowns with coefficients <= h, up to
    reordering of equations."""
    out = []
    for combo in itertools.combinations(_canonical_equations(k, h), k - 2):
        try:
            out.append(Gadget(k, h, combo))
        except ValueError:
            continue
    return out


def verify_gadget_free(elements, k: int, h: int,
                       budget: int = 10_000_000) -> Certificate:
    """Search every (gadget, assignment) pair for a solution in distinct
    elements.  FAIL carries the first hit in lexicographic scan order,
    which is the smallest witness."""
    if k < 3:
        raise ValueError("k must be >= 3")
    if h < 1:
        raise ValueError("h must be >= 1")
    elems = _check_distinct(elements)
    gadgets = enumerate_gadgets(k, h)
    checked = 0
    if len(elems) >= k:
        for gadget in gadgets:
            for z in itertools.permutations(elems, k):
                checked += 1
                if checked > budget:
                    raise BudgetError(
                        f"verify_gadget_free exceeded budget={budget} checks")
                if gadget_satisfied(gadget, z):
                    return Certificate(FAIL, {
                        "k": k, "h": h,
                        "witness": {
                            "equations": [list(e) for e in gadget.equations],
                            "assignment": list(z),
                        },
                    })
    return Certificate(PASS, {
        "k": k, "h": h, "size": len(elems),
        "gadgetsChecked": len(gadgets), "assignmentsChecked": checked,
    })


@dataclass(frozen=True)
class QFreeSet:
    """Subset of [1, n] with no q-limited triple, elements sorted ascending."""

    q: int
    n: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError("q must be >= 1")
        if list(self.elements) != sorted(set(self.elements)):
            raise ValueError("elements must be sorted and distinct")
        if self.elements and not (1 <= self.elements[0] and self.elements[-1] <= self.n):
            raise ValueError(f"elements must lie in [1, {self.n}]")

    @classmethod
    def certified(cls, q: int, n: int, elements) -> "QFreeSet":
        """Construct after an oracle scan; raises on any q-limited triple."""
        cert = verify_q_free(elements, q)
        if not cert.ok():
            raise ValueError(f"set is not {q}-limited-free: {cert.payload['witness']}")
        return cls(q, n, tuple(sorted(elements)))

    def __len__(self) -> int:
        return len(self.elements)

    def to_json_dict(self) -> dict:
        return {"q": self.q, "n": self.n, "elements": list(self.elements)}


def _digit_sphere_candidates(n: int, q: int):
    """Yield (size, elements) for each (dimension, base) grid point."""
    max_dim = max(2, int(math.log2(n)) + 1) if n >= 4 else 2
    for dim in range(2, max_dim + 1):
        root = math.ceil(n ** (1.0 / dim))
        for d in (root, root + 1):
            if d < 2 * q + 1:
                continue  # digit bound needs room: 2q(s-1) < d with s >= 2
            s = max(2, (d - 1) // (2 * q) + 1)
            assert 2 * q * (s - 1) < d
            by_norm: dict[int, list[int]] = {}
            for digits in itertools.product(range(s), repeat=dim):
                val = 0
                for t in digits:
                    val = val * d + t
                if not 1 <= val <= n:
                    continue
                r = sum(t * t for t in digits)
                by_norm.setdefault(r, []).append(val)
            if not by_norm:
                continue
            best_r = max(sorted(by_norm), key=lambda r: len(by_norm[r]))
            yield sorted(by_norm[best_r])


def behrend_q_free(n: int, q: int) -> QFreeSet:
    """Large q-limited-free subset of [1, n] by the digit-sphere method.

    Sweeps a small grid of dimensions and bases, keeps the digit vectors
    on the best squared-norm sphere, and certifies the winner with
    verify_q_free before returning.  Falls back to the exact brute-force
    optimum at tiny n, and degenerate n yields {1}.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if n < 2:
        return QFreeSet.certified(q, max(n, 1), (1,))
    best = [1]
    for cand in _digit_sphere_candidates(n, q):
        if len(cand) > len(best):
            best = cand
    if n <= 30:
        _, exact = max_q_free_bruteforce(n, q)
        if len(exact) > len(best):
            best = list(exact)
    return QFreeSet.certified(q, n, best)


def _bad_triples(n: int, q: int) -> dict[tuple[int, int], set[int]]:
    """Map each unordered pair to the elements completing a q-limited triple."""
    comp: dict[tuple[int, int], set[int]] = {}
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            for lam in range(1, q + 1):
                for mu in range(1, q + 1):
                    for (x, y) in ((a, b), (b, a)):
                        num = lam * x + mu * y
                        div = lam + mu
                        if num % div:
                            continue
                        c = num // div
                        if 1 <= c <= n and c != x and c != y:
                            for (u, v, w) in ((a, b, c), (min(a, c), max(a, c), b),
                                              (min(b, c), max(b, c), a)):
                                comp.setdefault((u, v), set()).add(w)
    return comp


def max_q_free_bruteforce(n: int, q: int, limit: int = 60,
                          node_budget: int = 20_000_000) -> tuple[int, tuple[int, ...]]:
    """Exact maximum q-limited-free subset of [1, n] by branch and bound.

    Scans elements in ascending order, include branch first, so the first
    optimum found is the lexicographically smallest one.  Guarded to
    n <= limit; raises BudgetError if the tree outgrows node_budget.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if n > limit:
        raise GuardError(f"max_q_free_bruteforce guard: n={n} exceeds limit={limit}")
    if n < 1:
        return (0, ())
    comp = _bad_triples(n, q)
    best_size = 0
    best_set: tuple[int, ...] = ()
    nodes = 0

    def search(idx: int, chosen: list[int], banned: frozenset[int],
               candidates: list[int]) -> None:
        nonlocal best_size, best_set, nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetError(f"max_q_free_bruteforce exceeded {node_budget} nodes")
        if len(chosen) > best_size:
            best_size = len(chosen)
            best_set = tuple(chosen)
        if idx == len(candidates):
            return
        remaining = [x for x in candidates[idx:] if x not in banned]
        if len(chosen) + len(remaining) <= best_size:
            return
        x = candidates[idx]
        if x not in banned:
            extra: set[int] = set()
            for c in chosen:
                pair = (c, x) if c < x else (x, c)
                extra |= comp.get(pair, set())
            chosen.append(x)
            search(idx + 1, chosen, banned | frozenset(extra), candidates)
            chosen.pop()
        search(idx + 1, chosen, banned, candidates)

    search(0, [], frozenset(), list(range(1, n + 1)))
    return (best_size, best_set)
