import random

import pytest
from hypothesis import given, settings, strategies as st

from vcdim import refs
from vcdim.classify import (
    MissingOrder,
    OrderClass,
    clause_of,
    cross_check,
    gdvc_corollary_geometric,
    gdvc_manifold,
    gdvc_prime,
    semantic_diagnostics,
)
from vcdim.jsj import InvalidJsj
from vcdim.model import (
    IDENTITY,
    DeclaredGeometric,
    Geometry,
    HyperbolicClosed,
    IntMatrix2,
    Jsj,
    ManifoldDescription,
    OrbifoldBase,
    SeifertClosed,
    SeifertInvariants,
    TorusBundle,
)

from generators import random_description, random_summand
from graphs import HAND_BUILT

RP3 = DeclaredGeometric(Geometry.S3, 2)
S3 = DeclaredGeometric(Geometry.S3, 1)
S2S1 = SeifertClosed(SeifertInvariants(OrbifoldBase(0), 0))
T3 = SeifertClosed(SeifertInvariants(OrbifoldBase(1), 0))
PSL = SeifertClosed(SeifertInvariants(OrbifoldBase(0, True, ((2, 1), (3, 1), (7, 1))), -1))
SOL = TorusBundle(IntMatrix2(2, 1, 1, 1))


def M(*summands):
    return ManifoldDescription(tuple(summands))


def test_prime_examples():
    p = gdvc_prime(TorusBundle(IDENTITY))
    assert (p.gdvc, p.geometry) == (4, Geometry.E3) and p.has_flat_summand_geometry
    assert gdvc_prime(HyperbolicClosed()).gdvc == 3
    p = gdvc_prime(PSL)
    assert (p.gdvc, p.geometry) == (3, Geometry.PSLtilde)
    p = gdvc_prime(RP3)
    assert (p.gdvc, p.vc, p.pi1_order_class) == (0, True, OrderClass.TWO)
    assert gdvc_prime(S3).pi1_order_class is OrderClass.TRIVIAL
    assert gdvc_prime(S2S1).pi1_order_class is OrderClass.INFINITE


def test_missing_order():
    hopf = SeifertClosed(SeifertInvariants(OrbifoldBase(0), -1))
    with pytest.raises(MissingOrder):
        gdvc_prime(hopf)
    assert semantic_diagnostics(M(hopf))
    assert gdvc_prime(SeifertClosed(hopf.inv, 7)).pi1_order_class is OrderClass.MORE_THAN_TWO


def test_invalid_jsj_propagates():
    bad = next(g for name, g, valid, *_ in HAND_BUILT if not valid)
    with pytest.raises(InvalidJsj):
        gdvc_prime(Jsj(bad))
    assert semantic_diagnostics(M(Jsj(bad)))


@pytest.mark.parametrize("summands, value, clause", [
    ((RP3, RP3), 0, "1"),
    ((RP3, RP3, RP3), 2, "2"),
    ((S2S1, RP3), 2, "2"),
    ((T3,), 4, "3"),
    ((HyperbolicClosed(), RP3), 3, "4"),
    ((S3,), 0, "1"),
    ((T3, RP3), 4, "3"),
    ((DeclaredGeometric(Geometry.S3, 3), RP3), 2, "2"),
])
def test_manifold_examples(summands, value, clause):
    result = gdvc_manifold(M(*summands))
    assert result.value == value
    assert clause_of(result) == clause
    assert result.trace[-1].ref == f"{refs.MAIN_THEOREM}({clause})"
    assert any(j.ref == refs.PRIME_SUM_BOUNDS for j in result.trace)


@pytest.mark.parametrize("summands, value", [
    ((SOL,), 3), ((S2S1,), 0), ((T3, RP3), 4), ((RP3, RP3), 0), ((T3,), 4),
])
def test_corollary_examples(summands, value):
    m = M(*summands)
    assert gdvc_corollary_geometric(m) == value
    assert cross_check(m)


def test_trace_is_deterministic():
    m = M(PSL, RP3, Jsj(HAND_BUILT[0][1]))
    assert gdvc_manifold(m) == gdvc_manifold(m)


seeds = st.integers(0, 2**32 - 1)


@given(seeds)
@settings(max_examples=200)
def test_permutation_invariance(seed):
    rng = random.Random(seed)
    m = random_description(rng)
    shuffled = M(*rng.sample(m.summands, len(m.summands)))
    assert gdvc_manifold(shuffled).value == gdvc_manifold(m).value
    assert gdvc_corollary_geometric(shuffled) == gdvc_corollary_geometric(m)


@given(seeds)
@settings(max_examples=200)
def test_appending_respects_lower_bound(seed):
    rng = random.Random(seed)
    m = random_description(rng)
    extra = random_summand(rng, alone=False)
    if isinstance(extra, DeclaredGeometric) and extra.pi1_order == 1:
        return
    if isinstance(extra, SeifertClosed) and extra.pi1_order == 1:
        return
    if any(getattr(s, "pi1_order", None) == 1 for s in m.summands):
        return  # S3 cannot take part in a sum
    bigger = M(*m.summands, extra)
    old_max = max(gdvc_prime(s).gdvc for s in m.summands)
    assert gdvc_manifold(bigger).value >= old_max


@given(seeds)
@settings(max_examples=300)
def test_profile_and_value_invariants(seed):
    m = random_description(random.Random(seed))
    profiles = [gdvc_prime(s) for s in m.summands]
    for p in profiles:
        assert p.vc == (p.geometry is not None and p.geometry in (Geometry.S3, Geometry.S2xE))
        assert (p.gdvc == 0) == p.vc
    value = gdvc_manifold(m).value
    assert value in (0, 2, 3, 4)
    assert (value == 4) == any(p.geometry is Geometry.E3 for p in profiles)
    k = len(profiles)
    vc = (k == 1 and profiles[0].vc) or (k == 2 and all(p.pi1_order_class is OrderClass.TWO for p in profiles))
    assert (value == 0) == vc
    assert cross_check(m)
