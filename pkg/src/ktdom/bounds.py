"""Verification of the known bounds tying the k-tuple invariants together.

verify_all computes the invariants of one (graph, k) pair and evaluates a
fixed catalogue of checks (C1..C11).  Each check reports one of four
statuses: "holds" (strict), "sharp" (holds with equality), "violated"
(the solver output contradicts a proven bound, so a solver bug), or
"not-applicable" (a hypothesis such as a degree gate fails).  Real-valued
bounds are compared in exact rational arithmetic, never floats.

Two catalogue entries enforce slightly tightened forms because the naive
statements fail on boundary instances:

* C7 equality analysis: when d + d(complement) = (n+1)/k exactly, the graph
  must be regular and the larger side's optimal partition satisfies the
  class-size identity d*r = n with k-1 <= r <= 2k-1 (r the smallest class).
  The looser estimate n/(r+1) + 1/k <= d is false for C5 at k=3 and for K1
  at k=1, so it is recorded in the notes but never enforced.
* C9 sandwich: d_t <= d always, and pairing the classes of an optimal
  closed-mode partition gives d_t >= floor(d/2); the unconditional upper
  bound d <= 2*d_t fails for odd d (K3 at k=1 has d=3, d_t=1), so the
  enforced form is d <= 2*d_t + 1 with d <= 2*d_t whenever d is even.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .domatic import d_xk
from .domination import gamma_xk, kjoin_minimum_size
from .graphs import Graph, complement

HOLDS = "holds"
SHARP = "sharp"
VIOLATED = "violated"
NOT_APPLICABLE = "not-applicable"

CHECK_IDS = ("C1", "C2", "C3", "C4", "C5", "C5b", "C6", "C7", "C8", "C9", "C10", "C11")

_STATEMENTS = {
    "C1": "gamma * d <= n",
    "C2": "d <= floor((delta + 1) / k)",
    "C3": "d <= n / (k - 1) for k >= 2",
    "C4": "d <= n / (2k - 2) for bipartite graphs, k >= 2",
    "C5": "gamma + d <= n + 1 for k >= 3",
    "C5b": "gamma + d <= n/2 + 2 for k >= 3 when d >= 2",
    "C6": "d = 1 when k - 1 <= delta <= 2k - 2",
    "C7": "d + d(complement) <= (n + 1) / k",
    "C8": "d >= floor(n / (k (n - delta)))",
    "C9": "d_t <= d <= 2 d_t + 1, and d <= 2 d_t for even d",
    "C10": "gamma >= 2k - 2 for bipartite graphs, k >= 2",
    "C11": "min { t : an exact-size-t dominating block exists } = gamma",
}

DEFAULT_SCAN_CAP = 16


def _render(value: object) -> object:
    if isinstance(value, Fraction):
        return str(value)
    return value


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    statement: str
    lhs: object | None
    rhs: object | None
    status: str
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "statement": self.statement,
            "lhs": _render(self.lhs),
            "rhs": _render(self.rhs),
            "status": self.status,
            "notes": self.notes,
        }


@dataclass
class BoundsReport:
    """Instance metadata, computed invariants and the check catalogue."""

    n: int
    edge_count: int
    delta: int
    Delta: int
    k: int
    regular: bool
    bipartite: bool
    gamma: int | None
    d: int | None
    gamma_total: int | None
    d_total: int | None
    d_complement: int | None
    r_used: int | None
    checks: tuple[CheckResult, ...]

    @property
    def violations(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if c.status == VIOLATED)

    def status_counts(self) -> dict[str, int]:
        counts = {HOLDS: 0, SHARP: 0, VIOLATED: 0, NOT_APPLICABLE: 0}
        for c in self.checks:
            counts[c.status] += 1
        return counts

    def check(self, check_id: str) -> CheckResult:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def to_dict(self) -> dict:
        return {
            "instance": {
                "n": self.n,
                "edge_count": self.edge_count,
                "delta": self.delta,
                "Delta": self.Delta,
                "k": self.k,
                "regular": self.regular,
                "bipartite": self.bipartite,
            },
            "values": {
                "gamma": self.gamma,
                "d": self.d,
                "gamma_total": self.gamma_total,
                "d_total": self.d_total,
                "d_complement": self.d_complement,
                "r_used": self.r_used,
            },
            "checks": [c.to_dict() for c in self.checks],
            "status_counts": self.status_counts(),
        }


def _na(check_id: str, reason: str) -> CheckResult:
    return CheckResult(check_id, _STATEMENTS[check_id], None, None, NOT_APPLICABLE, reason)


def _mask(cls: tuple[int, ...]) -> int:
    mask = 0
    for v in cls:
        mask |= 1 << v
    return mask


def verify_all(g: Graph, k: int, *, scan_cap: int = DEFAULT_SCAN_CAP) -> BoundsReport:
    """Evaluate every catalogue check for one (graph, k) pair.

    Degree-gate failures mark the affected checks not-applicable instead of
    aborting, so batch callers always get a full report.  ``scan_cap`` caps
    the exhaustive exact-size scan behind C11.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    n = g.n
    delta = g.min_degree
    Delta = g.max_degree
    regular = delta == Delta
    bipartite = g.is_bipartite()

    if delta < k - 1:
        reason = f"no k-tuple dominating set: minimum degree {delta} < {k - 1}"
        return BoundsReport(
            n, g.edge_count, delta, Delta, k, regular, bipartite,
            None, None, None, None, None, None,
            tuple(_na(cid, reason) for cid in CHECK_IDS),
        )

    gamma_res = gamma_xk(g, k)
    d_res = d_xk(g, k, gamma=gamma_res)
    gamma = gamma_res.value
    d = d_res.value

    open_ok = delta >= k
    gamma_t_res = gamma_xk(g, k, "open") if open_ok else None
    d_t_res = d_xk(g, k, "open", gamma=gamma_t_res) if open_ok else None

    gbar = complement(g)
    comp_ok = gbar.min_degree >= k - 1
    dbar_res = d_xk(gbar, k) if comp_ok else None

    r_used: int | None = None
    checks: list[CheckResult] = []

    # C1: the class sizes of any valid partition sum to n and each is >= gamma.
    prod = gamma * d
    if prod > n:
        checks.append(CheckResult("C1", _STATEMENTS["C1"], prod, n, VIOLATED))
    elif prod == n:
        if all(len(cls) == gamma for cls in d_res.witness.classes):
            checks.append(CheckResult("C1", _STATEMENTS["C1"], prod, n, SHARP,
                                      "every witness class is a minimum set"))
        else:
            checks.append(CheckResult("C1", _STATEMENTS["C1"], prod, n, VIOLATED,
                                      "equality requires every witness class to have minimum size"))
    else:
        checks.append(CheckResult("C1", _STATEMENTS["C1"], prod, n, HOLDS))

    # C2: a minimum-degree vertex has delta+1 closed neighbours split among
    # the classes, each taking at least k.
    ceiling = (delta + 1) // k
    if d > ceiling:
        checks.append(CheckResult("C2", _STATEMENTS["C2"], d, ceiling, VIOLATED))
    elif d == ceiling:
        notes = "class count attains the degree ceiling"
        status = SHARP
        if d * k == delta + 1:
            witness_masks = [_mask(cls) for cls in d_res.witness.classes]
            exact = all(
                (g.closed[v] & mask).bit_count() == k
                for v in range(n) if g.deg[v] == delta
                for mask in witness_masks
            )
            if exact:
                notes += "; every class meets each minimum-degree closed neighbourhood exactly k times"
            else:
                status = VIOLATED
                notes = "exact equality d = (delta+1)/k forces |N[v] & class| = k for minimum-degree v"
        checks.append(CheckResult("C2", _STATEMENTS["C2"], d, ceiling, status, notes))
    else:
        checks.append(CheckResult("C2", _STATEMENTS["C2"], d, ceiling, HOLDS))

    # C3
    if k < 2:
        checks.append(_na("C3", "needs k >= 2"))
    else:
        bound = Fraction(n, k - 1)
        if d > bound:
            checks.append(CheckResult("C3", _STATEMENTS["C3"], d, bound, VIOLATED))
        elif d == bound:
            if gamma == k - 1:
                checks.append(CheckResult("C3", _STATEMENTS["C3"], d, bound, SHARP, "gamma = k - 1"))
            else:
                checks.append(CheckResult("C3", _STATEMENTS["C3"], d, bound, VIOLATED,
                                          "equality requires gamma = k - 1, impossible since every set has >= k members"))
        else:
            checks.append(CheckResult("C3", _STATEMENTS["C3"], d, bound, HOLDS))

    # C4
    if not bipartite:
        checks.append(_na("C4", "graph is not bipartite"))
    elif k < 2:
        checks.append(_na("C4", "needs k >= 2"))
    else:
        bound = Fraction(n, 2 * k - 2)
        if d > bound:
            checks.append(CheckResult("C4", _STATEMENTS["C4"], d, bound, VIOLATED))
        elif d == bound:
            if _balanced_complete_bipartite_signature(g, k):
                checks.append(CheckResult("C4", _STATEMENTS["C4"], d, bound, SHARP,
                                          "equality instance matches the K_{k-1,k-1} signature"))
            else:
                checks.append(CheckResult("C4", _STATEMENTS["C4"], d, bound, VIOLATED,
                                          "equality occurs only on K_{k-1,k-1}"))
        else:
            checks.append(CheckResult("C4", _STATEMENTS["C4"], d, bound, HOLDS))

    # C5 / C5b
    if k < 3:
        checks.append(_na("C5", "needs k >= 3"))
        checks.append(_na("C5b", "needs k >= 3"))
    else:
        total = gamma + d
        if total > n + 1:
            checks.append(CheckResult("C5", _STATEMENTS["C5"], total, n + 1, VIOLATED))
        else:
            status = SHARP if total == n + 1 else HOLDS
            checks.append(CheckResult("C5", _STATEMENTS["C5"], total, n + 1, status))
        if d < 2:
            checks.append(_na("C5b", "needs d >= 2"))
        else:
            bound = Fraction(n, 2) + 2
            if total > bound:
                checks.append(CheckResult("C5b", _STATEMENTS["C5b"], total, bound, VIOLATED))
            else:
                status = SHARP if total == bound else HOLDS
                checks.append(CheckResult("C5b", _STATEMENTS["C5b"], total, bound, status))

    # C6: two disjoint classes would need 2k closed neighbours at a
    # minimum-degree vertex.
    if delta > 2 * k - 2:
        checks.append(_na("C6", f"needs delta <= 2k-2 = {2 * k - 2}, have delta = {delta}"))
    elif d == 1:
        checks.append(CheckResult("C6", _STATEMENTS["C6"], d, 1, HOLDS))
    else:
        checks.append(CheckResult("C6", _STATEMENTS["C6"], d, 1, VIOLATED))

    # C7
    if not comp_ok:
        checks.append(_na("C7", f"complement minimum degree {gbar.min_degree} < {k - 1}"))
    else:
        dbar = dbar_res.value
        total = d + dbar
        bound = Fraction(n + 1, k)
        if total > bound:
            checks.append(CheckResult("C7", _STATEMENTS["C7"], total, bound, VIOLATED))
        elif total < bound:
            notes = f"d(complement) = {dbar}"
            if total == (n + 1) // k:
                notes += "; integer part of the bound attained"
            checks.append(CheckResult("C7", _STATEMENTS["C7"], total, bound, HOLDS, notes))
        else:
            problems: list[str] = []
            notes_parts = [f"d(complement) = {dbar}", "sum attains (n+1)/k exactly"]
            if n == 1:
                notes_parts.append("single-vertex instance, class-size analysis skipped")
            else:
                if not regular:
                    problems.append("equality requires a regular graph")
                else:
                    if d >= dbar:
                        big, side = d_res, "graph"
                    else:
                        big, side = dbar_res, "complement"
                    r = min(len(cls) for cls in big.witness.classes)
                    r_used = r
                    notes_parts.append(f"r = {r}, smallest class on the {side} side")
                    if not (k - 1 <= r <= 2 * k - 1):
                        problems.append(f"r = {r} outside [k-1, 2k-1]")
                    if big.value * r != n:
                        problems.append(f"class-size identity d*r = n fails: {big.value}*{r} != {n}")
                    else:
                        notes_parts.append("class-size identity d*r = n holds")
                    if k >= 2 and big.value * (k - 1) > n:
                        problems.append("d exceeds n/(k-1)")
                    estimate = Fraction(n, r + 1) + Fraction(1, k)
                    if estimate > big.value:
                        notes_parts.append(
                            f"looser estimate n/(r+1) + 1/k = {estimate} exceeds d = {big.value}; "
                            "recorded only, the estimate fails on boundary instances"
                        )
            if problems:
                checks.append(CheckResult("C7", _STATEMENTS["C7"], total, bound, VIOLATED, "; ".join(problems)))
            else:
                checks.append(CheckResult("C7", _STATEMENTS["C7"], total, bound, SHARP, "; ".join(notes_parts)))

    # C8
    floor_bound = n // (k * (n - delta))
    if d < floor_bound:
        checks.append(CheckResult("C8", _STATEMENTS["C8"], d, floor_bound, VIOLATED))
    else:
        status = SHARP if d == floor_bound else HOLDS
        checks.append(CheckResult("C8", _STATEMENTS["C8"], d, floor_bound, status))

    # C9
    if not open_ok:
        checks.append(_na("C9", f"needs delta >= k, have delta = {delta}"))
    else:
        d_t = d_t_res.value
        upper = 2 * d_t + (1 if d % 2 else 0)
        if d_t > d or d > upper:
            checks.append(CheckResult("C9", _STATEMENTS["C9"], d, upper, VIOLATED, f"d_t = {d_t}"))
        else:
            notes_parts = [f"d_t = {d_t}"]
            status = HOLDS
            if d_t == d:
                status = SHARP
                notes_parts.append("lower end tight: d = d_t")
            if d == 2 * d_t:
                status = SHARP
                notes_parts.append("upper end tight: d = 2 d_t")
            if d == 2 * d_t + 1:
                notes_parts.append("odd-count boundary d = 2 d_t + 1 attained")
            checks.append(CheckResult("C9", _STATEMENTS["C9"], d, upper, status, "; ".join(notes_parts)))

    # C10
    if not bipartite:
        checks.append(_na("C10", "graph is not bipartite"))
    elif k < 2:
        checks.append(_na("C10", "needs k >= 2"))
    else:
        floor_gamma = 2 * k - 2
        signature = _balanced_complete_bipartite_signature(g, k)
        if gamma < floor_gamma:
            checks.append(CheckResult("C10", _STATEMENTS["C10"], gamma, floor_gamma, VIOLATED))
        elif gamma == floor_gamma:
            if signature:
                checks.append(CheckResult("C10", _STATEMENTS["C10"], gamma, floor_gamma, SHARP,
                                          "equality instance matches the K_{k-1,k-1} signature"))
            else:
                checks.append(CheckResult("C10", _STATEMENTS["C10"], gamma, floor_gamma, VIOLATED,
                                          "equality occurs only on K_{k-1,k-1}"))
        elif signature:
            checks.append(CheckResult("C10", _STATEMENTS["C10"], gamma, floor_gamma, VIOLATED,
                                      "K_{k-1,k-1} must attain equality"))
        else:
            checks.append(CheckResult("C10", _STATEMENTS["C10"], gamma, floor_gamma, HOLDS))

    # C11
    if n > scan_cap:
        checks.append(_na("C11", f"exact-size scan skipped for n = {n} > cap = {scan_cap}"))
    else:
        smallest = kjoin_minimum_size(g, k)
        status = HOLDS if smallest == gamma else VIOLATED
        checks.append(CheckResult("C11", _STATEMENTS["C11"], smallest, gamma, status))

    return BoundsReport(
        n, g.edge_count, delta, Delta, k, regular, bipartite,
        gamma, d,
        gamma_t_res.value if gamma_t_res else None,
        d_t_res.value if d_t_res else None,
        dbar_res.value if dbar_res else None,
        r_used,
        tuple(checks),
    )


def _balanced_complete_bipartite_signature(g: Graph, k: int) -> bool:
    """Structural recognition of K_{k-1,k-1}: 2k-2 vertices, (k-1)-regular,
    bipartite, with (k-1)^2 edges.  Those four facts force the isomorphism."""
    m = k - 1
    return (
        g.n == 2 * m
        and g.is_regular()
        and g.min_degree == m
        and g.edge_count == m * m
        and g.is_bipartite()
    )
