"""Girth-5 regular graphs amalgamated into elliptic semiplane Levi graphs."""

import json

from ._cageforge import (
    AmalgamPlan,
    Graph,
    LeviGraph,
    ParseError,
    PlanError,
    ReducedGraph,
    ReductionSpec,
    UnsupportedQError,
    amalgamate,
    build_levi,
    certify_json,
    enumerate_short_cycles,
    from_graph6,
    girth,
    is_prime,
    moore_bound,
    plan_for,
    read_edge_list,
    reduce,
    to_graph6,
    translation_check,
    weights,
    write_edge_list,
)


def build(q, u=0, verify_girth=True):
    """Return (graph, plan) for the construction at prime q with u deleted block pairs."""
    plan = plan_for(q, u)
    base = build_levi(q, check_girth=False)
    return amalgamate(reduce(base, plan.spec), plan, verify_girth), plan


def certify(graph, degree=None, girth=None, order=None):
    """Certificate as a dict (same keys and order as the JSON document)."""
    return json.loads(certify_json(graph, degree, girth, order))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
