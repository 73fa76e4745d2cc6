import random

import pytest
from hypothesis import given, settings, strategies as st

from sphereforge.derived import (
    ChainMapError,
    DObject,
    GradedMap,
    cone,
    euler_form_objects,
    euler_pairing,
    hom_dims,
    hom_graded,
    homology,
    is_iso,
    les_check,
    serre,
    serre_inverse,
    to_proj,
)
from sphereforge.quiver import direct_sum
from sphereforge.verify import random_chain_map

NAMES = ["P1", "P2", "I1", "I2", "S1", "S2", "R0", "R1", "R2", "Rinf"]


def iso(x, y):
    return is_iso(x, y).status == "yes"


def test_normal_form_merges_per_shift(kobj):
    x = kobj["P1"] + kobj["S2"] + kobj["S1"].shift(2)
    assert x.shifts() == (0, 2)
    assert x.rep_at(0).dim_vector() == {"1": 1, "2": 3}
    assert x.shift(-2).shifts() == (-2, 0)
    assert (x + DObject.zero(x.quiver)) == x


def test_signed_dim_vector(kobj):
    x = kobj["P1"] + kobj["S1"].shift(1)
    assert x.signed_dim_vector() == {"1": 0, "2": 2}


def test_projective_resolution_has_original_homology(kobj):
    for n in NAMES:
        x = kobj[n] + kobj["S2"].shift(-1)
        assert iso(homology(to_proj(x)), x)


def test_self_hom_of_regular(kobj):
    for lam in ("0", "1", "2", "inf"):
        assert hom_dims(kobj["R" + lam], kobj["R" + lam]) == {0: 1, 1: 1}


def test_hom_of_projectives(kobj):
    assert hom_dims(kobj["P2"], kobj["P1"]) == {0: 2}
    assert hom_dims(kobj["P1"], kobj["P2"]) == {}
    assert hom_dims(kobj["S1"], kobj["S2"]) == {1: 2}
    assert hom_dims(kobj["S2"], kobj["S1"]) == {}


def test_serre_on_projectives_and_regulars(kobj):
    assert iso(serre(kobj["P1"]), kobj["I1"])
    assert iso(serre(kobj["P2"]), kobj["I2"])
    for lam in ("0", "2", "inf"):
        r = kobj["R" + lam]
        assert iso(serre(r), r.shift(1))


@pytest.mark.parametrize("n", NAMES)
def test_serre_inverse_round_trip(kobj, n):
    x = kobj[n]
    assert iso(serre_inverse(serre(x)), x)
    assert iso(serre(serre_inverse(x)), x)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(NAMES), st.sampled_from(NAMES), st.integers(-2, 2), st.integers(-2, 2))
def test_hom_shift_rule(kobj, a, b, m, n):
    x, y = kobj[a], kobj[b]
    base = hom_dims(x, y)
    moved = hom_dims(x.shift(m), y.shift(n))
    assert moved == {k + m - n: d for k, d in base.items()}


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(NAMES), st.sampled_from(NAMES))
def test_serre_duality_property(kobj, a, b):
    x, y = kobj[a], kobj[b]
    assert hom_dims(x, y) == {-k: d for k, d in hom_dims(y, serre(x)).items()}


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(NAMES), st.sampled_from(NAMES), st.integers(-1, 1))
def test_euler_pairing_is_bilinear_form(kobj, a, b, s):
    x, y = kobj[a], kobj[b].shift(s)
    assert euler_pairing(x, y) == euler_form_objects(x, y)


def test_euler_of_simples(kobj):
    assert euler_pairing(kobj["S1"], kobj["S2"]) == -2


def test_cone_of_identity_vanishes(kobj):
    c = to_proj(kobj["R2"] + kobj["P1"].shift(1))
    tri = cone(GradedMap.identity(c))
    assert tri.z.is_zero()


def test_cone_of_zero_is_sum(kobj):
    x, y = to_proj(kobj["S1"]), to_proj(kobj["R0"])
    tri = cone(GradedMap.zero(x, y))
    assert iso(tri.z, kobj["R0"] + kobj["S1"].shift(1))


def test_cone_rejects_non_chain_maps(kobj):
    x = to_proj(kobj["S1"])
    r = hom_graded(x, to_proj(kobj["S2"])).representatives(1)[0]
    assert r.degree == 1
    with pytest.raises(ChainMapError):
        cone(r)


def test_graded_hom_representatives_are_cocycles(kobj):
    h = hom_graded(to_proj(kobj["S1"]), to_proj(kobj["S2"]))
    reps = h.representatives(1)
    assert len(reps) == 2
    for r in reps:
        assert r.is_cocycle()


def test_cone_of_nonzero_map_between_projectives(kobj):
    # P2 -> P1 along one arrow has cone the regular module with that kernel
    f = hom_graded(to_proj(kobj["P2"]), to_proj(kobj["P1"])).representatives(0)[0]
    z = cone(f).z
    assert z.shifts() == (0,)
    assert z.rep_at(0).dim_vector() == {"1": 1, "2": 1}
    assert hom_dims(z, z) == {0: 1, 1: 1}


def test_rotation_is_shifted_source(kobj):
    f = hom_graded(to_proj(kobj["P2"]), to_proj(kobj["P1"])).representatives(0)[0]
    tri = cone(f)
    assert iso(tri.rotate().z, tri.x.shift(1))


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(NAMES), st.sampled_from(NAMES), st.integers(0, 10_000))
def test_les_on_random_cones(kobj, a, b, seed):
    x, y = kobj[a], kobj[b]
    dims = hom_dims(x, y)
    if not dims:
        return
    rng = random.Random(seed)
    n = rng.choice(sorted(dims))
    f = random_chain_map(x, y.shift(n), rng)
    tri = cone(f)
    for w in ("P1", "S2", "R0"):
        assert les_check(tri, kobj[w]).ok


def test_les_reports_probe_dims(kobj):
    f = hom_graded(to_proj(kobj["P2"]), to_proj(kobj["P1"])).representatives(0)[0]
    rep = les_check(cone(f), kobj["P2"])
    assert rep.ok and rep.euler_ok
    assert rep.dims["Y"] == {0: 2}


def test_is_iso_distinguishes(kobj):
    r = kobj["R0"].rep_at(0)
    assert iso(DObject.module(direct_sum([r, r])), kobj["R0"] + kobj["R0"])
    assert not iso(kobj["R0"], kobj["R1"])
    assert not iso(kobj["R0"], kobj["R0"].shift(1))
