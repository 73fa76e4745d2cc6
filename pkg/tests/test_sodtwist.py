import pytest

from sphereforge.derived import DObject, hom_dims, is_iso, serre
from sphereforge.quiver import Quiver, projective, simple
from sphereforge.sodtwist import (
    CertificationError,
    ExceptionalSequenceError,
    NotInImageError,
    in_image,
    is_exceptional,
    left_adjoint_image,
    left_mutation,
    p_operator,
    right_adjoint_image,
    right_mutation,
    serre_sub,
    serre_sub_inverse,
    sod_project,
    twist_object,
    validate_exc_sequence,
)


def iso(x, y):
    return is_iso(x, y).status == "yes"


@pytest.fixture(scope="module")
def full(kobj):
    return validate_exc_sequence([kobj["P2"], kobj["P1"]], ["P2", "P1"])


@pytest.fixture(scope="module")
def line(kobj):
    return validate_exc_sequence([kobj["P2"]], ["P2"])


def test_exceptional_objects(kobj):
    for n in ("P1", "P2", "S1", "S2", "I1", "I2"):
        assert is_exceptional(kobj[n])
    assert not is_exceptional(kobj["R0"])
    assert not is_exceptional(kobj["P1"] + kobj["P1"])


def test_reversed_pair_is_rejected(kobj):
    with pytest.raises(ExceptionalSequenceError, match=r"Hom\^\*\(E2, E1\) = \{0: 2\}"):
        validate_exc_sequence([kobj["P1"], kobj["P2"]])


def test_repeated_object_is_rejected(kobj):
    with pytest.raises(ExceptionalSequenceError):
        validate_exc_sequence([kobj["S1"], kobj["S1"]])


def test_non_exceptional_is_rejected(kobj):
    with pytest.raises(ExceptionalSequenceError, match="not exceptional"):
        validate_exc_sequence([kobj["R0"]])


def test_empty_sequence_needs_quiver(kq):
    with pytest.raises(ExceptionalSequenceError):
        validate_exc_sequence([])
    emb = validate_exc_sequence([], quiver=kq)
    assert emb.length == 0


def test_mutations_of_the_projective_pair(kobj):
    assert iso(left_mutation(kobj["P2"], kobj["P1"]), kobj["S1"])
    r = right_mutation(kobj["P1"], kobj["P2"])
    assert r.shifts() == (-1,)
    assert r.rep_at(-1).dim_vector() == {"1": 2, "2": 3}


def test_mutation_needs_exceptional_object(kobj):
    with pytest.raises(ExceptionalSequenceError):
        left_mutation(kobj["R0"], kobj["P1"])


@pytest.mark.parametrize("x", ["P1", "S1", "R0", "I2"])
def test_mutations_land_in_orthogonals(kobj, x):
    e = kobj["P2"]
    assert not hom_dims(e, left_mutation(e, kobj[x]))
    assert not hom_dims(right_mutation(e, kobj[x]), e)


@pytest.mark.parametrize("e, x, s", [("P2", "P1", 0), ("P2", "P1", 1), ("S1", "S2", 0), ("S1", "S2", -2)])
def test_right_undoes_left_on_left_orthogonal(kobj, e, x, s):
    e, x = kobj[e], kobj[x].shift(s)
    assert not hom_dims(x, e)
    assert iso(right_mutation(e, left_mutation(e, x)), x)


@pytest.mark.parametrize("x", ["P1", "S1", "R0", "R2", "I2"])
def test_mutation_idempotence(kobj, x):
    e, x = kobj["S2"], kobj[x]
    lx, rx = left_mutation(e, x), right_mutation(e, x)
    assert iso(left_mutation(e, right_mutation(e, lx)), lx)
    assert iso(right_mutation(e, left_mutation(e, rx)), rx)


def test_mutation_of_e_itself_vanishes(kobj):
    e = kobj["P2"]
    assert left_mutation(e, e).is_zero()
    assert right_mutation(e, e).is_zero()


@pytest.mark.parametrize("lam", ["0", "1", "2", "inf"])
def test_twist_of_regular_by_itself(kobj, lam):
    r = kobj["R" + lam]
    assert iso(twist_object(r, r), r)


def test_twist_fixes_orthogonal_objects(kobj):
    assert iso(twist_object(kobj["R0"], kobj["R1"]), kobj["R1"])


def test_full_sequence_annihilates(kobj, full):
    for n, x in kobj.items():
        assert sod_project(full, x).t_obj.is_zero(), n
        assert in_image(full, x)
        assert iso(right_adjoint_image(full, x), x)
        assert iso(left_adjoint_image(full, x), x)


def test_projection_triangles_for_a_line(kobj, line):
    tri = sod_project(line, kobj["P1"])
    # T P1 = L_{P2} P1 = S1, and F R P1 = P2^2
    assert iso(tri.t_obj, kobj["S1"])
    assert iso(tri.fr_obj, kobj["P2"] + kobj["P2"])
    assert not hom_dims(kobj["P2"], tri.t_obj)
    assert not hom_dims(tri.tp_obj, kobj["P2"])


def test_serre_sub_of_singleton_is_identity(kobj, line):
    assert iso(serre_sub(line, kobj["P2"]), kobj["P2"])
    assert iso(serre_sub_inverse(line, kobj["P2"]), kobj["P2"])


def test_serre_sub_of_full_sequence_is_serre(kobj, full):
    for n in ("P1", "S1", "R0"):
        assert iso(serre_sub(full, kobj[n]), serre(kobj[n]))


def test_serre_sub_needs_image(kobj, line):
    with pytest.raises(NotInImageError):
        serre_sub(line, kobj["P1"])


def test_p_operator_on_image_and_orthogonal(kobj, line):
    assert p_operator(line, kobj["P2"]).is_zero()
    assert not p_operator(line, kobj["P1"]).is_zero()


def test_three_vertex_line(a3_ws):
    emb = a3_ws.embedding("s1")
    s1 = a3_ws.obj("S1")
    assert in_image(emb, s1)
    assert not in_image(emb, a3_ws.obj("S2"))


def test_certification_error_is_runtime_error():
    assert issubclass(CertificationError, RuntimeError)


def test_one_vertex_quiver():
    q = Quiver.build(["v"], [])
    k = DObject.module(projective(q, "v"))
    emb = validate_exc_sequence([k])
    assert in_image(emb, k.shift(3))
    assert iso(twist_object(k, k), DObject.zero(q)) or twist_object(k, k).is_zero()
    assert simple(q, "v") == projective(q, "v")
