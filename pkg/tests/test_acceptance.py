"""Acceptance checks, one per criterion.

Each check prints a single ``PASS``/``FAIL`` line (also under pytest capture)
and asserts.  Run directly with ``python tests/test_acceptance.py`` for the
summary alone.
"""

import random
import sys

import pytest

from sphereforge.derived import (
    cone,
    euler_form_objects,
    euler_pairing,
    hom_dims,
    is_iso,
    les_check,
    serre,
)
from sphereforge.nbhd import (
    NotFrobeniusMemberError,
    asphericity,
    detect,
    detect_in_subcategory,
    frb_codomain_member,
    frb_decompose,
    frbO_member,
    poset_build,
    sphO_member,
    sph_subcat_member,
)
from sphereforge.sodtwist import in_image, left_mutation, p_operator, right_mutation, sod_project, twist_object
from sphereforge.verify import random_chain_map
from sphereforge.workspace import load_fixture

FROZEN_Q = {1: {"1": 0, "2": 0, "3": 1}}
REGULARS = ("R0", "R1", "Rinf", "R2")


def iso(x, y, seed=0):
    return is_iso(x, y, seed=seed).status == "yes"


def named(ws, names):
    return [(n, ws.obj(n)) for n in names]


# -- checks: each returns (ok, detail) ------------------------------------

def check_serre_duality(kron):
    probes = named(kron, kron.verify["probes"])
    bad, n = [], 0
    for xn, x in probes:
        sx = serre(x)
        for yn, y in probes:
            n += 1
            if hom_dims(x, y) != {-k: d for k, d in hom_dims(y, sx).items()}:
                bad.append((xn, yn))
    return len(probes) >= 12 and not bad, f"{len(probes)} probes, {n} ordered pairs, {len(bad)} mismatches"


def check_p1_mirror(kron):
    bad = [n for n in ("P1", "P2") if detect(kron.obj(n)).kind != "exceptional"]
    for n in REGULARS:
        p = detect(kron.obj(n))
        if (p.kind, p.degree, p.cy_degree) != ("spherelike", 1, 1):
            bad.append(n)
    pairs = 0
    for a in REGULARS:
        for b in REGULARS:
            if a != b:
                pairs += 1
                if hom_dims(kron.obj(a), kron.obj(b)):
                    bad.append(f"{a},{b}")
    return not bad, f"2 exceptional, {len(REGULARS)} spherelike(1)+CY(1), {pairs} orthogonal pairs, bad={bad}"


def check_twist_law(kron):
    bad = [n for n in REGULARS if not iso(twist_object(kron.obj(n), kron.obj(n)), kron.obj(n))]
    pairs = 0
    for cfg in kron.verify["twists"]:
        a = kron.obj(cfg["by"])
        for xn, yn in cfg["pairs"]:
            pairs += 1
            x, y = kron.obj(xn), kron.obj(yn)
            if hom_dims(twist_object(a, x), twist_object(a, y)) != hom_dims(x, y):
                bad.append(f"{cfg['by']}:{xn},{yn}")
    return pairs >= 8 and not bad, f"T_R R = R for {len(REGULARS)} regulars, {pairs} Hom-preservation pairs, bad={bad}"


def check_mutation_round_trip(kron):
    """R L x = x on the left orthogonal of e, L R x = x on its right orthogonal.

    Outside those orthogonals the round trip only holds up to the E-part, so
    there the idempotent forms L R L = L and R L R = R are certified instead.
    """
    probes = named(kron, kron.verify["probes"])[:10]
    bad, direct = [], 0
    for en in kron.verify["exceptional"]:
        e = kron.obj(en)
        for xn, x in probes:
            lx, rx = left_mutation(e, x), right_mutation(e, x)
            if not hom_dims(x, e):
                direct += 1
                if not iso(right_mutation(e, lx), x):
                    bad.append(f"RL {en},{xn}")
            if not hom_dims(e, x):
                direct += 1
                if not iso(left_mutation(e, rx), x):
                    bad.append(f"LR {en},{xn}")
            if not iso(left_mutation(e, right_mutation(e, lx)), lx):
                bad.append(f"LRL {en},{xn}")
            if not iso(right_mutation(e, left_mutation(e, rx)), rx):
                bad.append(f"RLR {en},{xn}")
    ok = len(probes) == 10 and direct >= 10 and not bad
    return ok, f"{len(kron.verify['exceptional'])} exceptional x 10 probes, {direct} direct round trips, bad={bad}"


def check_full_annihilation(kron):
    emb = kron.embedding("full")
    probes = named(kron, kron.verify["probes"])
    bad = [n for n, b in probes if not sod_project(emb, b).t_obj.is_zero()]
    return not bad, f"T b = 0 on {len(probes)} probes, bad={bad}"


def check_frobenius_decomposition(tacked):
    emb = tacked.embedding("iota")
    probes = named(tacked, tacked.verify["probes"])
    bad, members = [], 0
    for n, b in probes:
        member = frb_codomain_member(emb, b)
        if member != p_operator(emb, b).is_zero():
            bad.append(f"p-op {n}")
        if member:
            members += 1
            d = frb_decompose(emb, b, seed=tacked.seed)
            orth = d.orthogonal_part
            if any(hom_dims(e, orth) or hom_dims(orth, e) for e in emb.sequence) or not in_image(emb, d.image_part):
                bad.append(f"decompose {n}")
        else:
            try:
                frb_decompose(emb, b)
                bad.append(f"accepted {n}")
            except NotFrobeniusMemberError:
                pass
    ok = len(probes) >= 10 and emb.length == 2 and not bad
    return ok, f"{len(probes)} probes, {members} members decomposed, bad={bad}"


def check_route_equivalence(kron, tacked):
    bad, pairs = [], 0
    for ws in (kron, tacked):
        for en, cfg in ws.verify["embeddings"].items():
            emb = ws.embedding(en)
            for an, a in named(ws, cfg.get("roster", [])):
                for bn, b in named(ws, ws.verify["probes"]):
                    pairs += 1
                    if frbO_member(emb, a, b, "adjunction") != frbO_member(emb, a, b, "serre"):
                        bad.append(f"{en}:{an},{bn}")
    return pairs >= 40 and not bad, f"{pairs} (roster x probe) pairs over both fixtures, bad={bad}"


def check_composition(tacked):
    emb = tacked.embedding("iota")
    cfg = tacked.verify["embeddings"]["iota"]
    s = tacked.obj(cfg["removed_simple"])
    probes = named(tacked, tacked.verify["probes"])
    bad = []
    for n in ("iR0", "iR1", "iRinf"):
        a = tacked.obj(n)
        prof = detect(a)
        if prof.kind != "spherelike" or prof.spherical or not detect_in_subcategory(emb, a).spherical:
            bad.append(f"profile {n}")
        asp = asphericity(a, 1)
        if asp.q_a.is_zero() or asp.q_a.dims_by_shift() != FROZEN_Q:
            bad.append(f"Q {n}")
        for bn, b in probes:
            if not (sphO_member(emb, a, b) == frbO_member(emb, a, b) == sph_subcat_member(b, asp)):
                bad.append(f"oracles {n},{bn}")
        excluded = not frbO_member(emb, a, s)
        if excluded != bool(hom_dims(s, a)):
            bad.append(f"removed simple {n}")
    return not bad, f"3 regulars properly spherelike, Q frozen, 3 oracles on {len(probes)} probes, bad={bad}"


def check_poset_laws(kron, tacked):
    bad, built = [], 0
    for ws in (kron, tacked):
        probes = named(ws, ws.verify["probes"])
        for en, cfg in ws.verify["embeddings"].items():
            emb = ws.embedding(en)
            roster = named(ws, cfg.get("roster", []))
            if not roster:
                continue
            pos = poset_build(emb, roster, probes, "frbO")
            built += 1
            if not roster[0][1].is_zero() or not pos.maximum_ok():
                bad.append(f"maximum {en}")
            if not pos.meets or not pos.meet_law_ok():
                bad.append(f"meet {en}")
            wg = cfg.get("weak_generator")
            if wg:
                a = ws.obj(wg)
                if [frbO_member(emb, a, b) for _, b in probes] != [frb_codomain_member(emb, b) for _, b in probes]:
                    bad.append(f"weak generator {en}")
    return built >= 2 and not bad, f"{built} posets, bad={bad}"


def check_triangle_les(kron):
    rng = random.Random(kron.seed)
    probes = [(n, x) for n, x in named(kron, kron.verify["probes"]) if not x.is_zero()]
    witnesses = probes[:8]
    cones, bad, attempts = 0, [], 0
    while cones < 20 and attempts < 1000:
        attempts += 1
        (xn, x), (yn, y) = rng.choice(probes), rng.choice(probes)
        dims = hom_dims(x, y)
        if not dims:
            continue
        n = rng.choice(sorted(dims))
        f = random_chain_map(x, y.shift(n), rng)
        tri = cone(f)
        cones += 1
        for wn, w in witnesses:
            if not les_check(tri, w).ok:
                bad.append(f"LES {xn}->{yn}[{n}] at {wn}")
            for obj in (tri.x, tri.y, tri.z):
                if euler_pairing(w, obj) != euler_form_objects(w, obj):
                    bad.append(f"euler {xn}->{yn}[{n}] at {wn}")
    return cones == 20 and not bad, f"{cones} seeded cones x {len(witnesses)} probes, bad={bad}"


CRITERIA = [
    (1, "Serre duality", check_serre_duality, ("kron",)),
    (2, "projective line mirror", check_p1_mirror, ("kron",)),
    (3, "spherical twist law", check_twist_law, ("kron",)),
    (4, "mutation round trip", check_mutation_round_trip, ("kron",)),
    (5, "full-sequence annihilation", check_full_annihilation, ("kron",)),
    (6, "Frobenius decomposition", check_frobenius_decomposition, ("tacked",)),
    (7, "route equivalence", check_route_equivalence, ("kron", "tacked")),
    (8, "composition theorem", check_composition, ("tacked",)),
    (9, "poset laws", check_poset_laws, ("kron", "tacked")),
    (10, "triangle LES and Euler form", check_triangle_les, ("kron",)),
]


def _run(number, title, fn, fixtures, loaded):
    ok, detail = fn(*(loaded[f] for f in fixtures))
    return ok, f"{'PASS' if ok else 'FAIL'} criterion {number:2d} {title}: {detail}"


@pytest.fixture(scope="module")
def loaded():
    return {"kron": load_fixture("kronecker"), "tacked": load_fixture("tacked-kronecker")}


@pytest.mark.parametrize("number, title, fn, fixtures", CRITERIA, ids=[f"c{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, fn, fixtures, loaded, capsys):
    ok, line = _run(number, title, fn, fixtures, loaded)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    data = {"kron": load_fixture("kronecker"), "tacked": load_fixture("tacked-kronecker")}
    results = [_run(*c, data) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
