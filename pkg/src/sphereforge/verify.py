"""Named verification suites run against a workspace's ``verify`` section.

Each suite returns a report ``{"suite", "passed", "checked", "checks", "failures"}``
where every entry of ``checks`` names the objects involved and the outcome.
"""

from __future__ import annotations

import logging
import random
from typing import Callable

from .derived import (
    DObject,
    GradedMap,
    cone,
    euler_form_objects,
    euler_pairing,
    hom_dims,
    hom_graded,
    is_iso,
    les_check,
    serre,
    serre_inverse,
    to_proj,
)
from .nbhd import (
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
    NbhdOracle,
    NotFrobeniusMemberError,
)
from .sodtwist import (
    in_image,
    left_mutation,
    p_operator,
    right_mutation,
    serre_sub,
    sod_project,
    twist_object,
)
from .workspace import Workspace, WorkspaceError, dims_to_json, summary

log = logging.getLogger(__name__)


class Report:
    def __init__(self, suite: str):
        self.suite = suite
        self.checks: list[dict] = []
        self.failures: list[dict] = []

    def check(self, ok: bool, **info) -> bool:
        entry = dict(info, ok=bool(ok))
        self.checks.append(entry)
        if not ok:
            self.failures.append(entry)
            log.warning("%s: failed check %s", self.suite, info)
        return ok

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": not self.failures,
            "checked": len(self.checks),
            "checks": self.checks,
            "failures": self.failures,
        }


def _probes(ws: Workspace, override: list[str] | None) -> list[tuple[str, DObject]]:
    names = override or ws.verify.get("probes") or list(ws.objects)
    return [(n, ws.obj(n)) for n in names]


def _emb_configs(ws: Workspace) -> dict[str, dict]:
    return ws.verify.get("embeddings", {})


def _iso(x: DObject, y: DObject, seed: int) -> bool:
    return is_iso(x, y, seed=seed).status == "yes"


def _mirror(dims: dict[int, int]) -> dict[int, int]:
    return {-n: d for n, d in dims.items()}


# -- suites --------------------------------------------------------------

def suite_serre_duality(ws: Workspace, probes, seed: int) -> Report:
    rep = Report("serre-duality")
    for xn, x in probes:
        sx = serre(x)
        rep.check(_iso(serre_inverse(sx), x, seed), kind="round-trip", x=xn)
        for yn, y in probes:
            lhs, rhs = hom_dims(x, y), _mirror(hom_dims(y, sx))
            rep.check(lhs == rhs, kind="duality", x=xn, y=yn, hom=dims_to_json(lhs))
    for en, cfg in _emb_configs(ws).items():
        emb = ws.embedding(en)
        image = [(n, ws.obj(n)) for n in cfg.get("image_probes", [])]
        for xn, x in image:
            sx = serre_sub(emb, x)
            for yn, y in image:
                rep.check(hom_dims(x, y) == _mirror(hom_dims(y, sx)), kind="subcategory-duality",
                          embedding=en, x=xn, y=yn)
    return rep


def random_chain_map(x: DObject, y: DObject, rng: random.Random) -> GradedMap | None:
    """A random degree-0 chain map to_proj(x) -> to_proj(y), or None if Hom^0 = 0."""
    h = hom_graded(to_proj(x), to_proj(y))
    reps = h.representatives(0)
    if not reps:
        return None
    f = None
    for r in reps:
        c = rng.randint(-16, 16)
        if not c:
            continue
        term = GradedMap(r.source, r.target, 0, {k: m.scale(c) for k, m in r.comps.items()})
        if f is None:
            f = term
        else:
            keys = set(f.comps) | set(term.comps)
            f = GradedMap(r.source, r.target, 0, {k: f.comp(k) + term.comp(k) for k in keys})
    return f if f is not None else reps[0]


def random_cones(probes, count: int, seed: int) -> list[tuple[str, str, object]]:
    """``count`` seeded cones of random maps between probes (shifted to make Hom^0 nonzero)."""
    rng = random.Random(seed)
    out = []
    objs = [(n, x) for n, x in probes if not x.is_zero()]
    attempts = 0
    while len(out) < count and attempts < 50 * count:
        attempts += 1
        (xn, x), (yn, y) = rng.choice(objs), rng.choice(objs)
        dims = hom_dims(x, y)
        if not dims:
            continue
        n = rng.choice(sorted(dims))
        f = random_chain_map(x, y.shift(n), rng)
        if f is None:
            continue
        out.append((xn, f"{yn}[{n}]", cone(f)))
    return out


def suite_triangle_les(ws: Workspace, probes, seed: int) -> Report:
    rep = Report("triangle-les")
    count = ws.verify.get("random_cones", {}).get("count", 20)
    test_probes = probes[: ws.verify.get("random_cones", {}).get("probe_limit", len(probes))]
    for xn, yn, tri in random_cones(probes, count, seed):
        for wn, w in test_probes:
            r = les_check(tri, w)
            rep.check(r.ok, kind="les", x=xn, y=yn, w=wn, failures=r.failures)
        # Euler form is bilinear on signed dimension vectors
        for wn, w in test_probes:
            ok = euler_pairing(w, tri.y) == euler_form_objects(w, tri.y)
            rep.check(ok, kind="euler-form", x=xn, y=yn, w=wn)
    return rep


def suite_mutation_roundtrip(ws: Workspace, probes, seed: int) -> Report:
    rep = Report("mutation-roundtrip")
    for en in ws.verify.get("exceptional", []):
        e = ws.obj(en)
        for xn, x in probes:
            lx, rx = left_mutation(e, x), right_mutation(e, x)
            rep.check(_iso(right_mutation(e, lx), x, seed) if not hom_dims(x, e) else True,
                      kind="R L x = x on left orthogonal", e=en, x=xn, applies=not hom_dims(x, e))
            rep.check(_iso(left_mutation(e, rx), x, seed) if not hom_dims(e, x) else True,
                      kind="L R x = x on right orthogonal", e=en, x=xn, applies=not hom_dims(e, x))
            rep.check(_iso(left_mutation(e, right_mutation(e, lx)), lx, seed), kind="L R L = L", e=en, x=xn)
            rep.check(_iso(right_mutation(e, left_mutation(e, rx)), rx, seed), kind="R L R = R", e=en, x=xn)
            rep.check(not hom_dims(e, lx) and not hom_dims(rx, e), kind="orthogonality", e=en, x=xn)
    return rep


def suite_sod_orthogonality(ws: Workspace, probes, seed: int) -> Report:
    rep = Report("sod-orthogonality")
    for en, cfg in _emb_configs(ws).items():
        emb = ws.embedding(en)
        for bn, b in probes:
            tri = sod_project(emb, b)  # certifies Hom^*(E_i, TB) = 0 = Hom^*(T'B, E_i)
            rep.check(True, kind="certified", embedding=en, b=bn)
            fr, t = tri.fr_obj, tri.t_obj
            rep.check(_iso(sod_project(emb, fr).fr_obj, fr, seed), kind="FR idempotent", embedding=en, b=bn)
            rep.check(_iso(sod_project(emb, t).t_obj, t, seed), kind="T idempotent", embedding=en, b=bn)
            if cfg.get("full"):
                rep.check(t.is_zero(), kind="full sequence annihilates", embedding=en, b=bn)
            # the triangle P -> FR B -> FL B, tested on Hom^*(E_i, -)
            p = p_operator(emb, b)
            for i, e in enumerate(emb.sequence):
                dp, dr, dl = hom_dims(e, p), hom_dims(e, fr), hom_dims(e, tri.fl_obj)
                chi = lambda d: sum((-1) ** (n % 2) * m for n, m in d.items())
                bound = all(dr.get(n, 0) <= dp.get(n, 0) + dl.get(n, 0) for n in set(dr) | set(dp) | set(dl))
                rep.check(chi(dr) == chi(dp) + chi(dl) and bound, kind="P-triangle", embedding=en, b=bn,
                          e=emb.label(i))
    return rep


def _roster(ws: Workspace, cfg: dict, override: list[str] | None):
    names = override or cfg.get("roster", [])
    return [(n, ws.obj(n)) for n in names]


def suite_route_equivalence(ws: Workspace, probes, seed: int, roster_override=None) -> Report:
    rep = Report("route-equivalence")
    for en, cfg in _emb_configs(ws).items():
        emb = ws.embedding(en)
        for an, a in _roster(ws, cfg, roster_override):
            for bn, b in probes:
                adj = frbO_member(emb, a, b, "adjunction")
                ser = frbO_member(emb, a, b, "serre")
                dec = frbO_member_by_decomposition(emb, a, b)
                rep.check(adj == ser == dec, kind="routes", embedding=en, a=an, b=bn, member=adj)
                if adj:
                    tri = sod_project(emb, b)
                    rep.check(hom_dims(a, tri.fr_obj) == hom_dims(a, tri.fl_obj), kind="adjoints agree",
                              embedding=en, a=an, b=bn)
    return rep


def suite_frobenius_decomposition(ws: Workspace, probes, seed: int) -> Report:
    rep = Report("frobenius-decomposition")
    for en, cfg in _emb_configs(ws).items():
        emb = ws.embedding(en)
        for bn, b in probes:
            member = frb_codomain_member(emb, b)
            rep.check(member == p_operator(emb, b).is_zero(), kind="p-operator", embedding=en, b=bn)
            if member:
                d = frb_decompose(emb, b, seed=seed)
                ok = True
                if cfg.get("full"):
                    ok = d.orthogonal_part.is_zero()
                rep.check(ok, kind="decomposition", embedding=en, b=bn,
                          image=summary(d.image_part), orthogonal=summary(d.orthogonal_part))
            else:
                try:
                    frb_decompose(emb, b, seed=seed)
                    rep.check(False, kind="non-member rejected", embedding=en, b=bn)
                except NotFrobeniusMemberError:
                    rep.check(True, kind="non-member rejected", embedding=en, b=bn)
        for bn, expected in cfg.get("frb_expected", {}).items():
            rep.check(frb_codomain_member(emb, ws.obj(bn)) == expected, kind="expected", embedding=en, b=bn)
    return rep


def suite_spherelike_detection(ws: Workspace, probes, seed: int) -> Report:
    rep = Report("spherelike-detection")
    for xn, exp in ws.verify.get("spherelike", {}).items():
        prof = detect(ws.obj(xn))
        ok = prof.kind == exp["kind"]
        if "degree" in exp:
            ok = ok and prof.degree == exp["degree"]
        if "cy_degree" in exp:
            ok = ok and prof.cy_degree == exp["cy_degree"]
        rep.check(ok, kind="profile", x=xn, got=prof.to_json())
    for xn, yn in ws.verify.get("orthogonal_pairs", []):
        rep.check(not hom_dims(ws.obj(xn), ws.obj(yn)), kind="orthogonal", x=xn, y=yn)
    for cfg in ws.verify.get("twists", []):
        a = ws.obj(cfg["by"])
        prof = detect(a)
        if prof.spherical:
            rep.check(_iso(twist_object(a, a), a.shift(1 - prof.degree), seed), kind="twist of itself", a=cfg["by"])
        for xn, yn in cfg.get("pairs", []):
            x, y = ws.obj(xn), ws.obj(yn)
            ok = hom_dims(twist_object(a, x), twist_object(a, y)) == hom_dims(x, y)
            rep.check(ok, kind="twist preserves Hom", a=cfg["by"], x=xn, y=yn)
    return rep


def _spherical_cfgs(ws: Workspace):
    for en, cfg in _emb_configs(ws).items():
        sph = cfg.get("spherical")
        if sph:
            yield en, cfg, sph


def suite_asphericity_consistency(ws: Workspace, probes, seed: int) -> Report:
    rep = Report("asphericity-consistency")
    objs = [n for n, e in ws.verify.get("spherelike", {}).items() if e["kind"] == "spherelike"]
    objs += [sph["object"] for _, _, sph in _spherical_cfgs(ws)]
    for an in dict.fromkeys(objs):
        a = ws.obj(an)
        prof = detect(a)
        asp = asphericity(a, prof.degree)
        rep.check(asp.q_a.is_zero() == (prof.cy_degree == prof.degree), kind="Q zero iff CY", a=an,
                  q=summary(asp.q_a))
        for wn, w in probes:
            rep.check(les_check(asp.triangle, w).ok, kind="asphericity triangle LES", a=an, w=wn)
        if not asp.q_a.is_zero():
            # A lies in its own spherical subcategory
            rep.check(sph_subcat_member(a, asp), kind="a in its subcategory", a=an)
    for en, cfg, sph in _spherical_cfgs(ws):
        a = ws.obj(sph["object"])
        asp = asphericity(a, sph["degree"])
        if "q_expected" in sph:
            got = {str(s): r.dim_vector() for r, s in asp.q_a.terms}
            rep.check(got == sph["q_expected"], kind="frozen Q", a=sph["object"], got=got)
        d = sph["degree"]
        for bn, b in probes:
            if sph_subcat_member(b, asp):
                ok = hom_dims(b, a.shift(d)) == _mirror(hom_dims(a, b))
                rep.check(ok, kind="Serre dual on neighbourhood", a=sph["object"], b=bn)
    return rep


def suite_composition_theorem(ws: Workspace, probes, seed: int) -> Report:
    rep = Report("composition-theorem")
    for en, cfg, sph in _spherical_cfgs(ws):
        emb = ws.embedding(en)
        a = ws.obj(sph["object"])
        prof_sub = detect_in_subcategory(emb, a)
        rep.check(prof_sub.spherical, kind="spherical in subcategory", a=sph["object"])
        prof = detect(a)
        rep.check(prof.kind == "spherelike" and not prof.spherical, kind="properly spherelike", a=sph["object"])
        if "source_hom" in sph:
            got = dims_to_json(hom_dims(a, a))
            rep.check(got == sph["source_hom"], kind="cotwist profile", a=sph["object"], got=got)
        asp = asphericity(a, sph["degree"])
        for bn, b in probes:
            s, f, h = sphO_member(emb, a, b), frbO_member(emb, a, b), sph_subcat_member(b, asp)
            rep.check(s == f == h, kind="sphO = frbO = sph-subcat", b=bn, member=f)
            rep.check(sphO_member(emb, a, b, v_nonzero=False), kind="zero source", b=bn)
        sn = cfg.get("removed_simple")
        for an in [sph["object"]] + sph.get("also", []):
            if sn:
                s, x = ws.obj(sn), ws.obj(an)
                excluded = not frbO_member(emb, x, s)
                rep.check(excluded == bool(hom_dims(s, x)), kind="removed simple case split", a=an, s=sn,
                          excluded=excluded)
        kn = cfg.get("ker_l_generator")
        if kn:
            k = ws.obj(kn)
            for an, x in _roster(ws, cfg, None):
                if x.is_zero():
                    continue
                col = [frbO_member(emb, x, b) for _, b in probes]
                if hom_dims(x, k):
                    ok = col == [in_image(emb, b) for _, b in probes]
                else:
                    ok = all(col)
                rep.check(ok, kind="neighbourhood dichotomy", a=an, k=kn)
    return rep


def suite_poset_laws(ws: Workspace, probes, seed: int, roster_override=None) -> Report:
    rep = Report("poset-laws")
    for en, cfg in _emb_configs(ws).items():
        roster = _roster(ws, cfg, roster_override)
        if not roster:
            continue
        emb = ws.embedding(en)
        for flavor in ("frbO", "frbOd"):
            pos = poset_build(emb, roster, probes, flavor)
            rep.check(roster[0][1].is_zero() and pos.maximum_ok(), kind="maximum", embedding=en, flavor=flavor)
            rep.check(pos.meet_law_ok(), kind="meet law", embedding=en, flavor=flavor,
                      pairs=[m["pair"] for m in pos.meets])
            rep.check(pos.antisymmetric(), kind="antisymmetry", embedding=en, flavor=flavor)
        wg = cfg.get("weak_generator")
        if wg:
            a = ws.obj(wg)
            col = [frbO_member(emb, a, b) for _, b in probes]
            codomain = [frb_codomain_member(emb, b) for _, b in probes]
            rep.check(col == codomain, kind="weak generator column", embedding=en, a=wg)
        for an, a in roster[1:]:
            bad = thickness_violations(NbhdOracle("frbO", emb, a), [b for _, b in probes], seed)
            rep.check(not bad, kind="thickness", embedding=en, a=an, violations=bad)
        for an, a in roster:
            prof = detect_in_subcategory(emb, a) if not a.is_zero() else None
            if prof is not None and prof.kind == "spherelike" and prof.spherical:
                col_d = [frbOd_member(emb, a, b) for _, b in probes]
                col = [frbO_member(emb, a, b) for _, b in probes]
                rep.check(col == col_d, kind="CY object: FrbO = FrbOd", embedding=en, a=an)
    return rep


SUITES: dict[str, Callable] = {
    "serre-duality": suite_serre_duality,
    "triangle-les": suite_triangle_les,
    "mutation-roundtrip": suite_mutation_roundtrip,
    "sod-orthogonality": suite_sod_orthogonality,
    "route-equivalence": suite_route_equivalence,
    "frobenius-decomposition": suite_frobenius_decomposition,
    "spherelike-detection": suite_spherelike_detection,
    "asphericity-consistency": suite_asphericity_consistency,
    "composition-theorem": suite_composition_theorem,
    "poset-laws": suite_poset_laws,
}


def run_suite(ws: Workspace, name: str, seed: int | None = None, probes: list[str] | None = None,
              roster: list[str] | None = None) -> dict:
    if name not in SUITES:
        raise WorkspaceError("", f"unknown suite {name!r}")
    seed = ws.seed if seed is None else seed
    fn = SUITES[name]
    kwargs = {"roster_override": roster} if name in ("route-equivalence", "poset-laws") and roster else {}
    return fn(ws, _probes(ws, probes), seed, **kwargs).to_json()
