import dataclasses
import random

import pytest
from hypothesis import given, settings, strategies as st

from vcdim import refs
from vcdim.jsj import InvalidJsj, jsj_gdvc, validate_jsj
from vcdim.model import JsjGraph

from generators import random_jsj
from graphs import HAND_BUILT


@pytest.mark.parametrize("name, graph, valid, codes, redirect", HAND_BUILT, ids=[h[0] for h in HAND_BUILT])
def test_hand_built(name, graph, valid, codes, redirect):
    v = validate_jsj(graph)
    assert v.valid is valid
    assert {d.code for d in v.diagnostics} == codes
    assert v.redirect == redirect
    assert v.acylindricity_constant == (5 if valid else None)
    for d in v.diagnostics:
        assert d.code in refs.JSJ_RULES


@pytest.mark.parametrize("name, graph, valid, codes, redirect", HAND_BUILT, ids=[h[0] for h in HAND_BUILT])
def test_gdvc(name, graph, valid, codes, redirect):
    if valid:
        result = jsj_gdvc(graph)
        assert result.value == 3
        refs_seen = [j.ref for j in result.trace]
        assert refs_seen[0] == refs.ACYLINDRICITY
        assert refs_seen[-1] == refs.NON_GEOMETRIC_PRIME
        window = next(j for j in result.trace if j.ref == refs.JSJ_REDUCTION)
        assert window.clause == "window [3, 4]"
        assert refs_seen.count(refs.PIECE_TABLE) == len(graph.vertices)
    else:
        with pytest.raises(InvalidJsj) as info:
            jsj_gdvc(graph)
        assert not info.value.verdict.valid


def reverse_edges(graph, rng):
    return JsjGraph(graph.vertices, tuple(e.reversed() if rng.random() < 0.5 else e for e in graph.edges))


def relabel(graph, rng):
    """Shuffle vertex order and rename ids."""
    names = {v.id: f"v{i}" for i, v in enumerate(rng.sample(graph.vertices, len(graph.vertices)))}
    vertices = tuple(dataclasses.replace(v, id=names[v.id]) for v in graph.vertices)
    vertices = tuple(rng.sample(vertices, len(vertices)))
    edges = tuple(dataclasses.replace(e, a=(names[e.a[0]], e.a[1]), b=(names[e.b[0]], e.b[1]))
                  for e in graph.edges)
    return JsjGraph(vertices, tuple(rng.sample(edges, len(edges))))


def signature(v):
    return v.valid, sorted(d.code for d in v.diagnostics), v.redirect


@given(st.integers(0, 10**6))
@settings(max_examples=60)
def test_reversal_and_relabel_invariance(seed):
    rng = random.Random(seed)
    for _, graph, *_ in HAND_BUILT:
        base = signature(validate_jsj(graph))
        assert signature(validate_jsj(reverse_edges(graph, rng))) == base
        assert signature(validate_jsj(relabel(graph, rng))) == base


@given(st.integers(0, 10**6))
@settings(max_examples=60)
def test_random_valid_graphs(seed):
    graph = random_jsj(random.Random(seed))
    assert jsj_gdvc(graph).value == 3
