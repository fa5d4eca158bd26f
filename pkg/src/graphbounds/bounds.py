"""Eigenvalue bounds with tightness detection and equality classification.

Each ``check_*`` returns a :class:`BoundCheck` record and never raises on a
failed inequality; deciding that a failure is fatal is the caller's job (see
:mod:`graphbounds.verify`).  Upper bounds hold when ``lhs <= rhs + TOL``,
lower bounds when ``lhs >= rhs - TOL``; a check is tight when it holds and
``|lhs - rhs| <= TOL``.
"""

from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import Graph, VertexSet, complement, components, cut_size, is_connected
from .invariants import (
    INFINITE,
    Extended,
    degree_extremes,
    domination_number,
    girth_and_diameter,
    is_moore_d2,
    is_regular,
    minimum_dominating_set,
    neighbor_degree_sum,
)
from .spectra import Spectrum, adjacency_spectrum, laplacian_spectrum

TOL = 1e-8

THEOREM1 = "theorem1"
LLT_GIRTH = "llt_girth"
THEOREM2 = "theorem2"
LLT_LAMBDA2 = "llt_lambda2"
THEOREM3 = "theorem3"
MOHAR = "mohar"
GRONE_MERRIS = "grone_merris"
FMS = "fms"
HONG = "hong"
HSF = "hsf"
CAO = "cao"
DELTA_GAMMA = "delta_gamma"

ALL_BOUNDS = (
    THEOREM1, LLT_GIRTH, THEOREM2, LLT_LAMBDA2, THEOREM3, MOHAR,
    GRONE_MERRIS, FMS, HONG, HSF, CAO, DELTA_GAMMA,
)
CLASSIFIED_BOUNDS = (THEOREM1, THEOREM2, THEOREM3)


@dataclass(frozen=True)
class EqualityClass:
    variant: str
    witness: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {"variant": self.variant, "witness": self.witness}


@dataclass(frozen=True)
class BoundCheck:
    bound_id: str
    lhs: Optional[float]
    rhs: Optional[float]
    applicable: bool
    holds: bool
    tight: bool
    classification: Optional[EqualityClass] = None
    detail: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "applicable": self.applicable,
            "holds": self.holds,
            "tight": self.tight,
            "classification": None if self.classification is None else self.classification.to_dict(),
            "detail": self.detail,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _inapplicable(bound_id: str, reason: str, lhs=None, rhs=None) -> BoundCheck:
    return BoundCheck(bound_id, lhs, rhs, False, True, False, None, {"reason": reason})


def _upper(bound_id, lhs, rhs, extra_ok=True, classification=None, detail=None) -> BoundCheck:
    holds = lhs <= rhs + TOL and extra_ok
    tight = holds and abs(lhs - rhs) <= TOL
    return BoundCheck(bound_id, float(lhs), float(rhs), True, holds, tight,
                      classification if tight else None, detail or {})


def _lower(bound_id, lhs, rhs, extra_ok=True, classification=None, detail=None) -> BoundCheck:
    holds = lhs >= rhs - TOL and extra_ok
    tight = holds and abs(lhs - rhs) <= TOL
    return BoundCheck(bound_id, float(lhs), float(rhs), True, holds, tight,
                      classification if tight else None, detail or {})


# ---------------------------------------------------------------------------
# shared per-graph quantities


@dataclass(frozen=True)
class GraphFacts:
    n: int
    m: int
    delta_min: int
    delta_max: int
    girth: Extended
    diameter: Extended
    gamma: int
    dominating_set: VertexSet
    component_sets: tuple[VertexSet, ...]
    adjacency: Spectrum
    laplacian: Spectrum

    @property
    def connected(self) -> bool:
        return len(self.component_sets) == 1

    @property
    def mu(self) -> float:
        return self.adjacency[0]

    @property
    def lambda2(self) -> Optional[float]:
        return self.laplacian[1] if self.n >= 2 else None

    @property
    def lambda_max(self) -> float:
        return self.laplacian[-1]


@functools.lru_cache(maxsize=512)
def facts(g: Graph) -> GraphFacts:
    delta_min, delta_max = degree_extremes(g)
    g_girth, g_diameter = girth_and_diameter(g)
    dom = minimum_dominating_set(g)
    return GraphFacts(
        n=g.n,
        m=g.m,
        delta_min=delta_min,
        delta_max=delta_max,
        girth=g_girth,
        diameter=g_diameter,
        gamma=len(dom),
        dominating_set=dom,
        component_sets=tuple(vs for vs, _ in components(g)),
        adjacency=adjacency_spectrum(g),
        laplacian=laplacian_spectrum(g),
    )


def _per_component(g: Graph, check) -> list[BoundCheck]:
    return [check(comp) for _, comp in components(g)]


def _connected_source_scope(g: Graph, result: BoundCheck, check) -> BoundCheck:
    """Re-scope a failed whole-graph check of a bound proved only for connected graphs.

    If every component satisfies the bound on its own, the whole-graph
    failure is outside the source's hypotheses and the record is marked
    inapplicable; otherwise the failure stands.
    """
    if result.holds or is_connected(g):
        return result
    parts = _per_component(g, check)
    if all(p.holds for p in parts):
        detail = dict(result.detail, scope="per-component", components_hold=True,
                      whole_graph_lhs=result.lhs, whole_graph_rhs=result.rhs)
        return BoundCheck(result.bound_id, result.lhs, result.rhs, False, True, False, None, detail)
    return result


# ---------------------------------------------------------------------------
# theorem1: mu <= min(Delta, sqrt(n - 1)) for girth >= 5


def _is_star(g: Graph) -> Optional[int]:
    if g.n < 3 or g.m != g.n - 1:
        return None
    for v in range(g.n):
        if g.degree(v) == g.n - 1:
            return v
    return None


def classify_theorem1(g: Graph) -> Optional[EqualityClass]:
    """Structural equality case: star, Moore graph, or regular component plus rest.

    K2 is reported as a union (G1 = K2, G2 empty) rather than as a star.
    """
    g_girth, _ = girth_and_diameter(g)
    if g_girth < 5:
        raise ValueError("theorem1 classification needs girth at least 5")
    center = _is_star(g)
    if center is not None:
        return EqualityClass("star", {"center": center})
    if is_moore_d2(g):
        return EqualityClass("moore", {"degree": g.degree(0)})
    _, delta = degree_extremes(g)
    for vs, comp in components(g):
        if is_regular(comp, delta):
            return EqualityClass("union", {"g1": list(vs), "g2": list(vs.complement())})
    return None


def revalidate_theorem1(g: Graph, cls: EqualityClass) -> bool:
    """Recheck a theorem1 witness without using cached facts."""
    _, delta = degree_extremes(g)
    if cls.variant == "star":
        c = cls.witness["center"]
        return g.n >= 3 and g.m == g.n - 1 and g.degree(c) == g.n - 1
    if cls.variant == "moore":
        d = cls.witness["degree"]
        g_girth, g_diam = girth_and_diameter(g)
        return is_regular(g, d) and d >= 2 and g.n == d * d + 1 and g_girth == 5 and g_diam == 2
    if cls.variant == "union":
        g1 = VertexSet.of(cls.witness["g1"], g.n)
        if cut_size(g, g1) != 0 or g1.complement().members != VertexSet.of(cls.witness["g2"], g.n).members:
            return False
        part1 = g.induced(g1)
        if not is_regular(part1, delta) or girth_and_diameter(part1)[0] < 5:
            return False
        if cls.witness["g2"]:
            part2 = g.induced(cls.witness["g2"])
            if degree_extremes(part2)[1] > delta or girth_and_diameter(part2)[0] < 5:
                return False
        return True
    return False


def check_theorem1(g: Graph) -> BoundCheck:
    f = facts(g)
    if g.n < 2:
        return _inapplicable(THEOREM1, "n < 2")
    rhs = min(float(f.delta_max), math.sqrt(g.n - 1))
    if f.girth < 5:
        return _inapplicable(THEOREM1, "girth below 5", f.mu, rhs)
    result = _upper(THEOREM1, f.mu, rhs)
    if result.tight:
        return _upper(THEOREM1, f.mu, rhs, classification=classify_theorem1(g))
    return result


def check_llt_girth(g: Graph) -> BoundCheck:
    """mu <= (-1 + sqrt(4n + 4 Delta - 3)) / 2 for girth >= 5."""
    f = facts(g)
    rhs = (-1.0 + math.sqrt(4 * g.n + 4 * f.delta_max - 3)) / 2.0
    if f.girth < 5:
        return _inapplicable(LLT_GIRTH, "girth below 5", f.mu, rhs)
    return _connected_source_scope(g, _upper(LLT_GIRTH, f.mu, rhs), check_llt_girth)


def rhs_dominance_th1_vs_main1(n: int, delta: int) -> bool:
    """min(Delta, sqrt(n-1)) never exceeds (-1 + sqrt(4n + 4 Delta - 3)) / 2."""
    if n < 2 or not 0 <= delta <= n - 1:
        raise ValueError(f"need n >= 2 and 0 <= Delta <= n-1, got ({n}, {delta})")
    return min(delta, math.sqrt(n - 1)) <= (-1.0 + math.sqrt(4 * n + 4 * delta - 3)) / 2.0 + 1e-12


# ---------------------------------------------------------------------------
# theorem2: lambda_2 <= n (gamma = 1), n - gamma (gamma >= 2)


def _matching_complement_pairs(g: Graph) -> Optional[list[tuple[int, int]]]:
    if g.n % 2:
        return None
    h = complement(g)
    if any(h.degree(v) != 1 for v in range(h.n)):
        return None
    return list(h.edges())


def classify_theorem2(g: Graph) -> Optional[EqualityClass]:
    if g.n < 2:
        return None
    if g.m == g.n * (g.n - 1) // 2:
        return EqualityClass("complete")
    pairs = _matching_complement_pairs(g)
    if pairs is not None:
        return EqualityClass("matching_complement", {"matching": pairs})
    return None


def revalidate_theorem2(g: Graph, cls: EqualityClass) -> bool:
    if cls.variant == "complete":
        return complement(g).m == 0 and domination_number(g) == 1
    if cls.variant == "matching_complement":
        pairs = [tuple(p) for p in cls.witness["matching"]]
        covered = sorted(v for p in pairs for v in p)
        h = complement(g)
        return (covered == list(range(g.n)) and h.m == len(pairs)
                and all(h.has_edge(u, v) for u, v in pairs) and domination_number(g) == 2)
    return False


def theorem2_rhs(n: int, gamma: int) -> int:
    return n if gamma == 1 else n - gamma


def check_theorem2(g: Graph) -> BoundCheck:
    """The record's classification is the structural class when tight.

    A tight instance with gamma > 2 comes back unclassified; the sweep
    treats that as a theorem counterexample.
    """
    f = facts(g)
    if g.n < 2:
        return _inapplicable(THEOREM2, "n < 2")
    rhs = theorem2_rhs(g.n, f.gamma)
    result = _upper(THEOREM2, f.lambda2, rhs, detail={"gamma": f.gamma})
    if result.tight:
        return _upper(THEOREM2, f.lambda2, rhs, classification=classify_theorem2(g),
                      detail={"gamma": f.gamma})
    return result


def check_llt_lambda2(g: Graph) -> BoundCheck:
    """lambda_2 <= n - gamma + (n - gamma^2) / (n - gamma).

    Also records whether this rhs is at least the theorem2 rhs when
    ``n >= gamma^2``; a failure of that dominance makes ``holds`` false.
    """
    f = facts(g)
    if g.n < 2:
        return _inapplicable(LLT_LAMBDA2, "n < 2")
    if f.gamma == g.n:
        return _inapplicable(LLT_LAMBDA2, "gamma = n (edgeless graph)")
    n, gamma = g.n, f.gamma
    rhs = n - gamma + (n - gamma * gamma) / (n - gamma)
    detail = {"gamma": gamma}
    dominance_ok = True
    if n >= gamma * gamma:
        dominance_ok = rhs >= theorem2_rhs(n, gamma) - 1e-12
        detail["dominates_theorem2_rhs"] = dominance_ok
    result = _upper(LLT_LAMBDA2, f.lambda2, rhs, extra_ok=dominance_ok, detail=detail)
    return _connected_source_scope(g, result, check_llt_lambda2)


# ---------------------------------------------------------------------------
# theorem3: lambda_max >= ceil(n / gamma)


def _dominating_vertex(g: Graph) -> Optional[int]:
    for v in range(g.n):
        if g.degree(v) == g.n - 1:
            return v
    return None


def classify_theorem3(g: Graph) -> Optional[EqualityClass]:
    """Find G = G1 ∪ G2 with |G1| = ceil(n/gamma), gamma(G1) = 1,
    gamma(G2) = gamma - 1 and lambda_max(G2) <= ceil(n/gamma).

    For gamma = 1 the whole (connected) graph is G1 and G2 is empty.
    """
    f = facts(g)
    if g.n < 2:
        return None
    k = -(-g.n // f.gamma)
    if f.gamma == 1:
        center = _dominating_vertex(g)
        return EqualityClass("star_decomposition", {"g1": list(range(g.n)), "g2": [], "center": center})
    for vs, comp in components(g):
        if len(vs) != k:
            continue
        center = _dominating_vertex(comp)
        if center is None:
            continue
        rest = vs.complement()
        part2 = g.induced(rest)
        f2 = facts(part2)
        if f2.gamma == f.gamma - 1 and f2.lambda_max <= k + TOL:
            return EqualityClass("star_decomposition",
                                 {"g1": list(vs), "g2": list(rest), "center": list(vs)[center]})
    return None


def revalidate_theorem3(g: Graph, cls: EqualityClass) -> bool:
    gamma = domination_number(g)
    k = -(-g.n // gamma)
    g1 = VertexSet.of(cls.witness["g1"], g.n)
    if len(g1) != k or cut_size(g, g1) != 0:
        return False
    part1 = g.induced(g1)
    center = cls.witness["center"]
    if center not in g1 or g.degree(center) != k - 1 or domination_number(part1) != 1:
        return False
    g2 = cls.witness["g2"]
    if sorted(g2) != list(g1.complement()):
        return False
    if not g2:
        return gamma == 1
    part2 = g.induced(g2)
    return domination_number(part2) == gamma - 1 and laplacian_spectrum(part2)[-1] <= k + TOL


def check_theorem3(g: Graph) -> BoundCheck:
    f = facts(g)
    if g.n < 2:
        return _inapplicable(THEOREM3, "n < 2")
    rhs = -(-g.n // f.gamma)
    result = _lower(THEOREM3, f.lambda_max, rhs, detail={"gamma": f.gamma})
    if result.tight:
        return _lower(THEOREM3, f.lambda_max, rhs, classification=classify_theorem3(g),
                      detail={"gamma": f.gamma})
    return result


# ---------------------------------------------------------------------------
# auxiliary bounds


def check_mohar(g: Graph, x: VertexSet) -> BoundCheck:
    """lambda_max |X| |V - X| >= n e(X, V - X) for a proper non-empty X."""
    if x.universe != g.n:
        raise ValueError("vertex set universe does not match graph order")
    size = len(x)
    if size == 0 or size == g.n:
        return _inapplicable(MOHAR, "X empty or all of V")
    f = facts(g)
    lhs = f.lambda_max * size * (g.n - size)
    rhs = g.n * cut_size(g, x)
    return _lower(MOHAR, lhs, rhs, detail={"x": list(x)})


def check_grone_merris(g: Graph) -> BoundCheck:
    """lambda_max >= Delta + 1 when m > 0; for connected graphs tight iff Delta = n - 1."""
    f = facts(g)
    if f.m == 0:
        return _inapplicable(GRONE_MERRIS, "no edges")
    lhs, rhs = f.lambda_max, f.delta_max + 1
    equality_predicted = f.delta_max == g.n - 1
    consistent = True
    if f.connected:
        consistent = (abs(lhs - rhs) <= TOL) == equality_predicted
    return _lower(GRONE_MERRIS, lhs, rhs, extra_ok=consistent,
                  detail={"connected": f.connected, "delta_is_n_minus_1": equality_predicted})


def check_fms(g: Graph) -> BoundCheck:
    """mu^2 <= max_u w(u); with girth >= 5 also max_u w(u) <= n - 1."""
    f = facts(g)
    w_max = max(neighbor_degree_sum(g, u) for u in range(g.n))
    detail = {}
    extra = True
    if f.girth >= 5:
        extra = w_max <= g.n - 1
        detail["w_max_at_most_n_minus_1"] = extra
    return _upper(FMS, f.mu * f.mu, w_max, extra_ok=extra, detail=detail)


def check_hong(g: Graph) -> BoundCheck:
    f = facts(g)
    if f.delta_min < 1:
        return _inapplicable(HONG, "minimum degree 0")
    return _upper(HONG, f.mu, math.sqrt(2 * f.m - g.n + 1))


def hsf_rhs(n: int, m: int, delta: int) -> float:
    return (delta - 1 + math.sqrt(8 * m - 4 * delta * n + (delta + 1) ** 2)) / 2.0


def cao_rhs(n: int, m: int, delta_min: int, delta_max: int) -> float:
    return math.sqrt(2 * m - (n - 1) * delta_min + (delta_min - 1) * delta_max)


def check_hsf(g: Graph) -> BoundCheck:
    """mu <= (delta - 1 + sqrt(8m - 4 delta n + (delta + 1)^2)) / 2 for delta >= 1.

    Connected graphs whose degrees are all delta or n - 1 carry the
    ``degree_condition`` class; disconnected graphs are never classified.
    """
    f = facts(g)
    if f.delta_min < 1:
        return _inapplicable(HSF, "minimum degree 0")
    rhs = hsf_rhs(g.n, f.m, f.delta_min)
    cls = None
    if f.connected and all(d in (f.delta_min, g.n - 1) for d in g.degrees()):
        cls = EqualityClass("degree_condition")
    return _upper(HSF, f.mu, rhs, classification=cls, detail={"connected": f.connected})


def check_cao(g: Graph) -> BoundCheck:
    """mu <= sqrt(2m - (n-1) delta + (delta - 1) Delta), plus the intermediate
    step mu^2 <= 2m - (n-1) delta + (delta - 1) mu."""
    f = facts(g)
    if f.delta_min < 1:
        return _inapplicable(CAO, "minimum degree 0")
    n, m, d, big = g.n, f.m, f.delta_min, f.delta_max
    mu = f.mu
    chain = mu * mu <= 2 * m - (n - 1) * d + (d - 1) * mu + TOL
    return _upper(CAO, mu, cao_rhs(n, m, d, big), extra_ok=chain, detail={"quadratic_step_holds": chain})


def check_delta_gamma(g: Graph) -> BoundCheck:
    f = facts(g)
    if g.n < 2:
        return _inapplicable(DELTA_GAMMA, "n < 2")
    lhs, rhs = f.delta_min, g.n - f.gamma
    holds = lhs <= rhs
    return BoundCheck(DELTA_GAMMA, float(lhs), float(rhs), True, holds, holds and lhs == rhs, None, {})


SINGLE_GRAPH_CHECKS = {
    THEOREM1: check_theorem1,
    LLT_GIRTH: check_llt_girth,
    THEOREM2: check_theorem2,
    LLT_LAMBDA2: check_llt_lambda2,
    THEOREM3: check_theorem3,
    GRONE_MERRIS: check_grone_merris,
    FMS: check_fms,
    HONG: check_hong,
    HSF: check_hsf,
    CAO: check_cao,
    DELTA_GAMMA: check_delta_gamma,
}

CLASSIFIERS = {
    THEOREM1: classify_theorem1,
    THEOREM2: classify_theorem2,
    THEOREM3: classify_theorem3,
}

REVALIDATORS = {
    THEOREM1: revalidate_theorem1,
    THEOREM2: revalidate_theorem2,
    THEOREM3: revalidate_theorem3,
}


def parse_bound_list(text: str) -> tuple[str, ...]:
    if text.strip() == "all":
        return ALL_BOUNDS
    chosen = tuple(part.strip() for part in text.split(",") if part.strip())
    unknown = [b for b in chosen if b not in ALL_BOUNDS]
    if unknown:
        raise ValueError(f"unknown bound id(s): {', '.join(unknown)}; choose from {', '.join(ALL_BOUNDS)}")
    return chosen


def evaluate(g: Graph, bounds: Iterable[str] = ALL_BOUNDS) -> list[BoundCheck]:
    """One record per requested bound; Mohar uses a minimum dominating set as X."""
    out = []
    for bound_id in bounds:
        if bound_id == MOHAR:
            out.append(check_mohar(g, facts(g).dominating_set))
        else:
            out.append(SINGLE_GRAPH_CHECKS[bound_id](g))
    return out
