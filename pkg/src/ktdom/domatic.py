"""Exact k-tuple domatic numbers: partition V into k-tuple dominating sets.

The closed-mode value is the largest number of classes in a partition of V
where every class is a k-tuple dominating set; open mode uses the total
variant.  Merging two classes of a valid partition keeps it valid (supersets
of valid sets stay valid), so feasibility is monotone downward in the class
count and a descending search can stop at the first feasible count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domination import (
    GammaResult,
    OracleCapError,
    check_degree_gate,
    covers_for,
    gamma_oracle,
    gamma_xk,
    is_ktuple_dominating,
    is_ktuple_total_dominating,
    vertex_mask,
)
from .graphs import Graph, bit_list

ORACLE_PARTITION_CAP = 10


@dataclass(frozen=True)
class DomaticPartition:
    """Partition certificate: classes as sorted tuples, ordered by minimum."""

    classes: tuple[tuple[int, ...], ...]
    k: int
    mode: str

    def to_dict(self) -> dict:
        return {"k": self.k, "mode": self.mode, "classes": [list(c) for c in self.classes]}


@dataclass(frozen=True)
class SearchBounds:
    """Bounds that framed a domatic search.

    zelinka_floor is the constructive lower bound floor(n / (k(n-delta)))
    in closed mode and the trivial 1 in open mode; degree_ceiling is
    floor((delta+1)/k) (closed) or floor(delta/k) (open); gamma_ceiling is
    floor(n / minimum set size).
    """

    zelinka_floor: int
    degree_ceiling: int
    gamma_ceiling: int

    def to_dict(self) -> dict:
        return {
            "zelinka_floor": self.zelinka_floor,
            "degree_ceiling": self.degree_ceiling,
            "gamma_ceiling": self.gamma_ceiling,
        }


@dataclass(frozen=True)
class DomaticResult:
    value: int
    witness: DomaticPartition
    bounds_used: SearchBounds

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "witness": self.witness.to_dict(),
            "bounds_used": self.bounds_used.to_dict(),
        }


def _whole_vertex_partition(g: Graph, k: int, mode: str) -> DomaticPartition:
    return DomaticPartition((tuple(range(g.n)),), k, mode)


def is_domatic_partition(g: Graph, p: DomaticPartition) -> bool:
    """True iff p's classes partition V(g) and each passes the mode's test.

    Structural defects that cannot be meant (a vertex outside the graph, two
    classes sharing a vertex) raise ValueError; an incomplete cover or an
    empty class merely returns False.
    """
    if p.mode not in ("closed", "open"):
        raise ValueError(f"mode must be 'closed' or 'open', got {p.mode!r}")
    union = 0
    for cls in p.classes:
        mask = vertex_mask(g, cls)
        if union & mask:
            raise ValueError("classes overlap")
        union |= mask
    full = (1 << g.n) - 1
    if union != full or any(not cls for cls in p.classes):
        return False
    test = is_ktuple_dominating if p.mode == "closed" else is_ktuple_total_dominating
    return all(test(g, cls, p.k) for cls in p.classes)


# ---------------------------------------------------------------------------
# exact maximum


def _find_partition(g: Graph, k: int, mode: str, num_classes: int) -> list[int] | None:
    """Backtracking colouring into num_classes k-tuple dominating classes.

    Vertices are coloured in id order; vertex 0 is pinned to class 0 and a
    new class may only be opened in ascending order, which kills class
    permutation symmetry.  Per vertex we track, against its coverage mask
    (N[v] or N(v)), the per-class hit counts, the undecided coverage, and
    the total deficit sum(max(0, k - hits)); each undecided cover vertex can
    repair at most one unit of one class, so deficit > undecided prunes.
    """
    covers = covers_for(g, mode)
    n = g.n
    cover_bits = [bit_list(c) for c in covers]
    cover_sizes = [c.bit_count() for c in covers]
    if any(size < k * num_classes for size in cover_sizes):
        return None
    color = [-1] * n
    counts = [[0] * num_classes for _ in range(n)]
    undecided = cover_sizes[:]
    deficit = [k * num_classes] * n

    def assign(v: int, c: int) -> bool:
        ok = True
        for u in cover_bits[v]:
            undecided[u] -= 1
            cu = counts[u]
            if cu[c] < k:
                deficit[u] -= 1
            cu[c] += 1
            if deficit[u] > undecided[u]:
                ok = False
        return ok

    def unassign(v: int, c: int) -> None:
        for u in cover_bits[v]:
            cu = counts[u]
            cu[c] -= 1
            if cu[c] < k:
                deficit[u] += 1
            undecided[u] += 1

    def dfs(v: int, opened: int) -> bool:
        if v == n:
            return True
        for c in range(min(opened + 1, num_classes)):
            color[v] = c
            if assign(v, c) and dfs(v + 1, max(opened, c + 1)):
                return True
            unassign(v, c)
        color[v] = -1
        return False

    return color if dfs(0, 0) else None


def _classes_from_coloring(color: list[int], num_classes: int) -> tuple[tuple[int, ...], ...]:
    classes: list[list[int]] = [[] for _ in range(num_classes)]
    for v, c in enumerate(color):
        classes[c].append(v)
    return tuple(tuple(cls) for cls in classes)


def d_xk(g: Graph, k: int, mode: str = "closed", *, gamma: GammaResult | None = None) -> DomaticResult:
    """Exact k-tuple (total) domatic number with a witness partition.

    The search descends from the ceiling min(floor((delta+1)/k), floor(n /
    minimum set size)) (open mode: floor(delta/k)); the first feasible class
    count wins.  In closed mode, when floor(n / (k(n-delta))) >= 2 the
    balanced id-order partition is already a valid witness, so the descent
    stops above that floor and falls back to it.  Otherwise the fallback is
    the single class V.

    ``gamma`` may pass a precomputed gamma_xk(g, k, mode) result to avoid a
    second minimum solve; it must belong to exactly that triple.
    """
    check_degree_gate(g, k, mode)
    if gamma is None:
        gamma = gamma_xk(g, k, mode)
    n = g.n
    delta = g.min_degree
    degree_ceiling = (delta + 1) // k if mode == "closed" else delta // k
    gamma_ceiling = n // gamma.value
    zelinka_floor = max(1, n // (k * (n - delta))) if mode == "closed" else 1
    bounds = SearchBounds(zelinka_floor, degree_ceiling, gamma_ceiling)
    upper = min(degree_ceiling, gamma_ceiling)

    floor = 1
    fallback = _whole_vertex_partition(g, k, mode)
    if mode == "closed" and zelinka_floor >= 2:
        floor = zelinka_floor
        fallback = zelinka_partition(g, k)
    for count in range(upper, floor, -1):
        color = _find_partition(g, k, mode, count)
        if color is not None:
            witness = DomaticPartition(_classes_from_coloring(color, count), k, mode)
            return DomaticResult(count, witness, bounds)
    return DomaticResult(floor, fallback, bounds)


def d_oracle(g: Graph, k: int, mode: str = "closed", cap: int = ORACLE_PARTITION_CAP) -> DomaticResult:
    """Brute-force reference: enumerate set partitions of V restricted to
    class counts 2..degree ceiling, keep the best valid one, else 1.

    Independent of d_xk: restricted-growth enumeration plus the literal
    case-split membership test on plain sets.  Hard error above the cap.
    """
    check_degree_gate(g, k, mode)
    if g.n > cap:
        raise OracleCapError(f"oracle refuses n={g.n} > cap={cap}")
    n = g.n
    delta = g.min_degree
    gamma = gamma_oracle(g, k, mode)
    degree_ceiling = (delta + 1) // k if mode == "closed" else delta // k
    zelinka_floor = max(1, n // (k * (n - delta))) if mode == "closed" else 1
    bounds = SearchBounds(zelinka_floor, degree_ceiling, n // gamma.value)

    neighbor_sets = [set(g.neighbors(v)) for v in range(n)]

    def block_ok(block: list[int]) -> bool:
        members = set(block)
        for v in range(n):
            inside = len(neighbor_sets[v] & members)
            if mode == "open":
                if inside < k:
                    return False
            elif v in members:
                if inside < k - 1:
                    return False
            elif inside < k:
                return False
        return True

    best_count = 1
    best_blocks = [list(range(n))]
    max_blocks = degree_ceiling
    if max_blocks >= 2:
        blocks: list[list[int]] = []

        def rec(v: int) -> None:
            nonlocal best_count, best_blocks
            if min(max_blocks, len(blocks) + (n - v)) <= best_count:
                return
            if v == n:
                if len(blocks) > best_count and all(block_ok(b) for b in blocks):
                    best_count = len(blocks)
                    best_blocks = [list(b) for b in blocks]
                return
            for b in blocks:
                b.append(v)
                rec(v + 1)
                b.pop()
            if len(blocks) < max_blocks:
                blocks.append([v])
                rec(v + 1)
                blocks.pop()

        rec(0)
    witness = DomaticPartition(tuple(tuple(b) for b in best_blocks), k, mode)
    return DomaticResult(best_count, witness, bounds)


def zelinka_partition(g: Graph, k: int) -> DomaticPartition | None:
    """Constructive partition showing d >= floor(n / (k(n-delta))).

    Any vertex set with at least k(n-delta) members is a k-tuple dominating
    set (n - |S| <= delta - k + 1 leaves every vertex enough in-set
    coverage), so chopping 0..n-1 in id order into floor(n / (k(n-delta)))
    consecutive blocks, the last absorbing the remainder, is a valid
    partition.  Returns None when k(n-delta) > n, where the floor is 0 and
    the bound says nothing; every block is re-verified before returning.
    """
    check_degree_gate(g, k, "closed")
    n = g.n
    base = k * (n - g.min_degree)
    if base > n:
        return None
    count = n // base
    sizes = [base] * (count - 1) + [base + n - count * base]
    classes: list[tuple[int, ...]] = []
    start = 0
    for size in sizes:
        classes.append(tuple(range(start, start + size)))
        start += size
    for cls in classes:
        if not is_ktuple_dominating(g, cls, k):
            raise AssertionError("internal error: constructed block fails the membership test")
    return DomaticPartition(tuple(classes), k, "closed")
