"""Exponential domination in subcubic graphs: Python front end to the C++ core."""

import json
from fractions import Fraction

from ._core import (
    DomainError,
    Graph,
    build_degree5_instance,
    build_figure2,
    build_gadget,
    build_t_tree,
    build_theorem7_extremal,
    cycle_graph,
    emit_edge,
    emit_graph6,
    gadget_cover_roundtrip,
    generate_extremal_candidates,
    is_exponential_dominating,
    named_graph,
    parse_edge,
    parse_graph6,
    path_graph,
    star_graph,
    theorem6_params,
)
from . import _core


def dyadic(text):
    """Turns an "m/2^e" weight string into a Fraction."""
    num, _, exp = text.partition("/2^")
    return Fraction(int(num), 2 ** int(exp or 0))


def weights(g, s, porous=False):
    profile = json.loads(_core._weights(g, list(s), porous))
    return {int(k): dyadic(v) for k, v in profile["weights"].items()}


def gamma_e_exact(g, porous=False, max_k=None, force=False):
    return json.loads(_core._gamma_e_exact(g, porous, max_k, force))


def gamma_e_tree(g):
    return json.loads(_core._gamma_e_tree(g))


def min_triple_weight_set(g):
    return json.loads(_core._min_triple_weight_set(g))


def reduce_fully(g, rules=("i", "ii", "iii")):
    return json.loads(_core._reduce(g, list(rules)))


def randomized_expdom(g, p, seed=0, trials=100, threads=1):
    return json.loads(_core._heuristic(g, p, seed, trials, threads))


def bounds_report(g, gamma, triple_size=None):
    lo, hi = (gamma, gamma) if isinstance(gamma, int) else gamma
    return json.loads(_core._bounds_report(g, lo, hi, triple_size))
