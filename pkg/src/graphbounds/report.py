"""Per-graph reports: invariants, key eigenvalues and every bound record."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from . import bounds as B
from .graph import Graph
from .graph6 import encode_graph6
from .invariants import InvariantProfile, profile


@dataclass(frozen=True)
class Report:
    source: str
    graph6: str
    profile: InvariantProfile
    mu: float
    lambda2: Optional[float]
    lambda_max: float
    bounds: tuple[B.BoundCheck, ...]

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "graph6": self.graph6,
            "profile": self.profile.to_dict(),
            "mu": self.mu,
            "lambda2": self.lambda2,
            "lambda_max": self.lambda_max,
            "bounds": [b.to_dict() for b in self.bounds],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def check(self, bound_id: str) -> B.BoundCheck:
        for b in self.bounds:
            if b.bound_id == bound_id:
                return b
        raise KeyError(bound_id)


def build_report(g: Graph, source: str, bounds: Sequence[str] = B.ALL_BOUNDS) -> Report:
    f = B.facts(g)
    return Report(
        source=source,
        graph6=encode_graph6(g).decode(),
        profile=profile(g),
        mu=f.mu,
        lambda2=f.lambda2,
        lambda_max=f.lambda_max,
        bounds=tuple(B.evaluate(g, bounds)),
    )


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def format_report_table(report: Report) -> str:
    p = report.profile
    lines = [
        f"{report.source}  {report.graph6}",
        f"  n={p.n} m={p.m} delta={p.delta_min} Delta={p.delta_max} girth={p.girth} "
        f"diameter={p.diameter} gamma={p.gamma} components={list(p.component_orders)}",
        f"  mu={_fmt(report.mu)} lambda2={_fmt(report.lambda2)} lambda_max={_fmt(report.lambda_max)}",
        f"  {'bound':<14}{'lhs':>14}{'rhs':>14}  status",
    ]
    for b in report.bounds:
        if not b.applicable:
            status = "n/a"
        elif not b.holds:
            status = "VIOLATED"
        elif b.tight:
            status = "tight" + (f" ({b.classification.variant})" if b.classification else "")
        else:
            status = "strict"
        lines.append(f"  {b.bound_id:<14}{_fmt(b.lhs):>14}{_fmt(b.rhs):>14}  {status}")
    return "\n".join(lines)
