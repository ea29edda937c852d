"""Weyl-group, Steinberg-variety and companion-point computations.

Permutations are 1-based one-line lists, weights and block compositions are
integer lists. A plain list means a single embedding labelled "t"; pass a
dict keyed by embedding label for several.
"""

import json

from . import _weylcomp
from ._weylcomp import ScenarioError, ShapeError

__all__ = [
    "ScenarioError",
    "ShapeError",
    "certify_walk",
    "companion_set",
    "component_in_zqp",
    "coset_info",
    "cosets",
    "dot_act",
    "ff_verify",
    "find_induction_step",
    "flag_count",
    "good_form",
]


def _labelled(x):
    return json.dumps(x if isinstance(x, dict) else {"t": list(x)})


def _scenario(s):
    return s if isinstance(s, str) else json.dumps(s)


def coset_info(w, blocks):
    return json.loads(_weylcomp.coset_info(_labelled(w), _labelled(blocks)))


def cosets(blocks):
    return json.loads(_weylcomp.cosets(_labelled(blocks)))


def dot_act(w, weight):
    return json.loads(_weylcomp.dot_act(_labelled(w), _labelled(weight)))


def component_in_zqp(w, blocks, q_blocks, h):
    return _weylcomp.component_in_zqp(_labelled(w), _labelled(blocks), _labelled(q_blocks), _labelled(h))


def find_induction_step(w, blocks, h):
    return json.loads(_weylcomp.find_induction_step(_labelled(w), _labelled(blocks), _labelled(h)))


def companion_set(scenario):
    """Companion characters for a scenario given as a dict or JSON text."""
    return json.loads(_weylcomp.companion_set(_scenario(scenario)))


def certify_walk(scenario):
    return json.loads(_weylcomp.certify_walk(_scenario(scenario)))


def ff_verify(suite="all", n=2, p=3, threads=1):
    return json.loads(_weylcomp.ff_verify(suite, n, p, threads))


def good_form(matrix):
    """Entries may be ints or "a/b" strings; results come back as strings."""
    return json.loads(_weylcomp.good_form(json.dumps(matrix)))


def flag_count(n, p):
    return _weylcomp.flag_count(n, p)
