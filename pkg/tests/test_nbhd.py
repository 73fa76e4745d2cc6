import pytest

from sphereforge.derived import hom_dims, is_iso
from sphereforge.nbhd import (
    NbhdOracle,
    NotFrobeniusMemberError,
    NotSpherelikeError,
    asphericity,
    detect,
    detect_in_subcategory,
    frb_codomain_member,
    frb_decompose,
    frbO_member,
    frbO_member_by_decomposition,
    frbOd_member,
    poset_build,
    sphO_member,
    sph_subcat_member,
    thickness_violations,
)
from sphereforge.sodtwist import NotInImageError, in_image, p_operator


def iso(x, y):
    return is_iso(x, y).status == "yes"


def test_detect_on_kronecker(kobj):
    for n in ("P1", "P2", "S1", "I2"):
        assert detect(kobj[n]).kind == "exceptional"
    for lam in ("0", "1", "2", "inf"):
        prof = detect(kobj["R" + lam])
        assert (prof.kind, prof.degree, prof.cy_degree) == ("spherelike", 1, 1)
        assert prof.spherical
    assert detect(kobj["R0"] + kobj["R1"]).kind == "neither"


def test_profile_json(kobj):
    js = detect(kobj["R0"]).to_json()
    assert js == {"kind": "spherelike", "degree": 1, "cy_degree": 1, "spherical": True, "hom": {"0": 1, "1": 1}}


def test_spherical_object_has_zero_q(kobj):
    asp = asphericity(kobj["R2"], 1)
    assert asp.q_a.is_zero()
    assert asp.to_json()["q_zero"]


def test_asphericity_rejects_exceptional(kobj):
    with pytest.raises(NotSpherelikeError):
        asphericity(kobj["P1"], 1)
    with pytest.raises(NotSpherelikeError):
        asphericity(kobj["R0"], 2)


def test_tacked_regular_is_properly_spherelike(tacked_ws):
    a = tacked_ws.obj("iR0")
    prof = detect(a)
    assert prof.kind == "spherelike" and prof.degree == 1
    assert not prof.spherical
    emb = tacked_ws.embedding("iota")
    assert detect_in_subcategory(emb, a).spherical


def test_tacked_q_is_shifted_removed_simple(tacked_ws):
    # Q = S3[1]: the Serre image of iR0 is (1,1,0)[1] and iR0 -> (1,1,0) has kernel S3
    asp = asphericity(tacked_ws.obj("iR0"), 1)
    assert asp.q_a.dims_by_shift() == {1: {"1": 0, "2": 0, "3": 1}}


def test_three_oracles_agree(tacked_ws):
    emb = tacked_ws.embedding("iota")
    a = tacked_ws.obj("iR0")
    asp = asphericity(a, 1)
    for n in tacked_ws.verify["probes"]:
        b = tacked_ws.obj(n)
        assert sphO_member(emb, a, b) == frbO_member(emb, a, b) == sph_subcat_member(b, asp), n


def test_removed_simple_is_excluded(tacked_ws):
    emb = tacked_ws.embedding("iota")
    s3 = tacked_ws.obj("S3")
    for n in ("iR0", "iR1", "iRinf"):
        a = tacked_ws.obj(n)
        assert hom_dims(s3, a) != {}
        assert not frbO_member(emb, a, s3)


def test_routes_agree(tacked_ws):
    emb = tacked_ws.embedding("iota")
    for an in tacked_ws.verify["embeddings"]["iota"]["roster"]:
        a = tacked_ws.obj(an)
        for bn in tacked_ws.verify["probes"]:
            b = tacked_ws.obj(bn)
            adj = frbO_member(emb, a, b, "adjunction")
            assert adj == frbO_member(emb, a, b, "serre") == frbO_member_by_decomposition(emb, a, b)


def test_membership_needs_image(tacked_ws):
    emb = tacked_ws.embedding("iota")
    with pytest.raises(NotInImageError):
        frbO_member(emb, tacked_ws.obj("S3"), tacked_ws.obj("S1"))


def test_zero_source_gives_everything(tacked_ws):
    emb = tacked_ws.embedding("iota")
    zero = tacked_ws.obj("ZERO")
    for bn in tacked_ws.verify["probes"]:
        b = tacked_ws.obj(bn)
        assert frbO_member(emb, zero, b)
        assert frbOd_member(emb, zero, b)


def test_codomain_matches_p_operator(tacked_ws):
    emb = tacked_ws.embedding("iota")
    for bn in tacked_ws.verify["probes"]:
        b = tacked_ws.obj(bn)
        assert frb_codomain_member(emb, b) == p_operator(emb, b).is_zero()


def test_decomposition(tacked_ws):
    emb = tacked_ws.embedding("iota")
    b = tacked_ws.obj("iR0")
    d = frb_decompose(emb, b)
    assert iso(d.image_part, b)
    assert d.orthogonal_part.is_zero()
    with pytest.raises(NotFrobeniusMemberError):
        frb_decompose(emb, tacked_ws.obj("S3"))


def test_decomposition_with_orthogonal_part(a3_ws):
    emb = a3_ws.embedding("s1")
    b = a3_ws.obj("S1+S3")
    d = frb_decompose(emb, b)
    assert iso(d.image_part, a3_ws.obj("S1"))
    assert iso(d.orthogonal_part, a3_ws.obj("S3"))
    assert in_image(emb, d.image_part)


def test_poset_laws_on_kronecker_line(kron_ws):
    emb = kron_ws.embedding("line")
    roster = [(n, kron_ws.obj(n)) for n in kron_ws.verify["embeddings"]["line"]["roster"]]
    probes = [(n, kron_ws.obj(n)) for n in kron_ws.verify["probes"]]
    pos = poset_build(emb, roster, probes, "frbO")
    assert pos.maximum_ok()
    assert pos.meet_law_ok()
    assert pos.antisymmetric()
    dot = pos.to_dot()
    assert dot.startswith("digraph nbhd {")
    assert f"// probes: {pos.fingerprint}" in dot
    assert "rankdir=BT;" in dot
    js = pos.to_json()
    assert js["roster"] == [n for n, _ in roster]


def test_poset_fingerprint_tracks_probes(kron_ws):
    emb = kron_ws.embedding("line")
    roster = [("ZERO", kron_ws.obj("ZERO")), ("P2", kron_ws.obj("P2"))]
    a = poset_build(emb, roster, [("P1", kron_ws.obj("P1"))], "frbO")
    b = poset_build(emb, roster, [("S1", kron_ws.obj("S1"))], "frbO")
    assert a.fingerprint != b.fingerprint


def test_neighbourhoods_are_thick(tacked_ws):
    emb = tacked_ws.embedding("iota")
    probes = [tacked_ws.obj(n) for n in tacked_ws.verify["probes"]]
    for an in ("iR0", "E1"):
        oracle = NbhdOracle("frbO", emb, tacked_ws.obj(an))
        assert thickness_violations(oracle, probes, seed=1) == []


def test_unknown_flavor():
    with pytest.raises(ValueError):
        NbhdOracle("nope")
