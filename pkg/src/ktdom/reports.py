"""Invariant reports: all four computed values plus certificates for one
(graph, k) pair, with optional brute-force cross-checking."""

from __future__ import annotations

from dataclasses import dataclass

from .domatic import ORACLE_PARTITION_CAP, DomaticResult, d_oracle, d_xk
from .domination import ORACLE_VERTEX_CAP, GammaResult, gamma_oracle, gamma_xk
from .graphs import Graph


@dataclass
class InvariantReport:
    """Computed invariants with witnesses; None where the degree gate fails."""

    n: int
    edge_count: int
    delta: int
    Delta: int
    k: int
    gamma: GammaResult | None
    domatic: DomaticResult | None
    gamma_total: GammaResult | None
    domatic_total: DomaticResult | None
    notes: tuple[str, ...] = ()
    oracle_checked: bool = False
    oracle_mismatches: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "instance": {
                "n": self.n,
                "edge_count": self.edge_count,
                "delta": self.delta,
                "Delta": self.Delta,
                "k": self.k,
            },
            "gamma": self.gamma.to_dict() if self.gamma else None,
            "domatic": self.domatic.to_dict() if self.domatic else None,
            "gamma_total": self.gamma_total.to_dict() if self.gamma_total else None,
            "domatic_total": self.domatic_total.to_dict() if self.domatic_total else None,
            "notes": list(self.notes),
            "oracle": {
                "checked": self.oracle_checked,
                "mismatches": list(self.oracle_mismatches),
            },
        }


def compute_invariants(
    g: Graph,
    k: int,
    mode: str = "both",
    *,
    with_oracle: bool = False,
) -> InvariantReport:
    """Solve the requested modes for (g, k); never raises on a degree gate.

    ``mode`` selects "closed", "open" or "both".  With ``with_oracle`` the
    brute-force references recompute each value (within their caps, a hard
    error above); disagreements land in ``oracle_mismatches``.
    """
    if mode not in ("closed", "open", "both"):
        raise ValueError(f"mode must be 'closed', 'open' or 'both', got {mode!r}")
    notes: list[str] = []
    mismatches: list[str] = []

    gamma = domatic = gamma_total = domatic_total = None
    want_closed = mode in ("closed", "both")
    want_open = mode in ("open", "both")

    if want_closed:
        if g.min_degree >= k - 1:
            gamma = gamma_xk(g, k, "closed")
            domatic = d_xk(g, k, "closed", gamma=gamma)
        else:
            notes.append(f"closed mode skipped: minimum degree {g.min_degree} < k-1 = {k - 1}")
    if want_open:
        if g.min_degree >= k:
            gamma_total = gamma_xk(g, k, "open")
            domatic_total = d_xk(g, k, "open", gamma=gamma_total)
        else:
            notes.append(f"open mode skipped: minimum degree {g.min_degree} < k = {k}")

    if with_oracle:
        if g.n > min(ORACLE_VERTEX_CAP, ORACLE_PARTITION_CAP):
            raise ValueError(
                f"oracle cross-check needs n <= {min(ORACLE_VERTEX_CAP, ORACLE_PARTITION_CAP)}, got n = {g.n}"
            )
        for label, fast, slow_fn, slow_mode in (
            ("gamma", gamma, gamma_oracle, "closed"),
            ("gamma_total", gamma_total, gamma_oracle, "open"),
            ("d", domatic, d_oracle, "closed"),
            ("d_total", domatic_total, d_oracle, "open"),
        ):
            if fast is None:
                continue
            reference = slow_fn(g, k, slow_mode)
            if reference.value != fast.value:
                mismatches.append(f"{label}: solver = {fast.value}, oracle = {reference.value}")

    return InvariantReport(
        g.n, g.edge_count, g.min_degree, g.max_degree, k,
        gamma, domatic, gamma_total, domatic_total,
        tuple(notes), with_oracle, tuple(mismatches),
    )
