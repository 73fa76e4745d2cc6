"""Spherelike detection, asphericity triangles and neighbourhood membership.

Neighbourhoods are infinite subcategories; here they are represented by
membership oracles, and posets are computed relative to a finite probe set.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .derived import (
    DObject,
    Triangle,
    cone,
    hom_dims,
    hom_graded,
    is_iso,
    serre,
    to_proj,
)
from .sodtwist import (
    CertificationError,
    ExcEmbedding,
    dual_twist,
    NotInImageError,
    in_image,
    p_operator,
    serre_sub,
    serre_sub_inverse,
    sod_project,
)

log = logging.getLogger(__name__)

FLAVORS = ("frbO", "frbOd", "sphO", "sph-subcat", "frb-codomain")


class NotSpherelikeError(ValueError):
    pass


class NotFrobeniusMemberError(ValueError):
    pass


# -- detection -----------------------------------------------------------

@dataclass(frozen=True)
class SpherelikeProfile:
    object: DObject
    kind: str                      # "exceptional" | "spherelike" | "neither"
    degree: int | None = None      # d for spherelike objects
    cy_degree: int | None = None
    hom_dims: tuple = ()

    @property
    def spherical(self) -> bool:
        return self.kind == "spherelike" and self.cy_degree == self.degree

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "degree": self.degree,
            "cy_degree": self.cy_degree,
            "spherical": self.spherical,
            "hom": {str(n): d for n, d in self.hom_dims},
        }


def _classify(dims: dict[int, int]) -> tuple[str, int | None]:
    if dims == {0: 1}:
        return "exceptional", None
    if len(dims) == 2 and dims.get(0) == 1:
        (d, m), = [(n, m) for n, m in dims.items() if n != 0]
        if m == 1:
            return "spherelike", d
    return "neither", None


def detect(a: DObject, serre_functor: Callable[[DObject], DObject] = serre) -> SpherelikeProfile:
    """Classify ``a`` by its graded endomorphisms; the CY degree is tested with ``serre_functor``."""
    dims = hom_dims(a, a)
    kind, d = _classify(dims)
    cy = None
    if kind == "spherelike" and is_iso(serre_functor(a), a.shift(d)).status == "yes":
        cy = d
    elif kind == "exceptional" and is_iso(serre_functor(a), a).status == "yes":
        cy = 0
    return SpherelikeProfile(a, kind, d, cy, tuple(sorted(dims.items())))


def detect_in_subcategory(emb: ExcEmbedding, a: DObject) -> SpherelikeProfile:
    """As :func:`detect`, with the Serre functor of the subcategory (F is fully faithful)."""
    return detect(a, lambda x: serre_sub(emb, x))


# -- asphericity ---------------------------------------------------------

@dataclass
class AsphericityData:
    object: DObject
    degree: int
    w: object          # chain map a -> serre(a)[-d]
    q_a: DObject
    triangle: Triangle

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "q_zero": self.q_a.is_zero(),
            "q": {str(s): r.dim_vector() for r, s in self.q_a.terms},
        }


@lru_cache(maxsize=256)
def asphericity(a: DObject, d: int) -> AsphericityData:
    """The triangle a -> S a[-d] -> Q_a, with w spanning Hom^0(a, S a[-d])."""
    if a.is_zero():
        raise NotSpherelikeError("the zero object is not spherelike")
    kind, deg = _classify(hom_dims(a, a))
    if kind != "spherelike" or deg != d:
        raise NotSpherelikeError(f"object is not {d}-spherelike (Hom^* = {hom_dims(a, a)})")
    target = to_proj(serre(a).shift(-d))
    h = hom_graded(to_proj(a), target)
    reps = h.representatives(0)
    if len(reps) != 1:
        raise NotSpherelikeError(f"Hom^0(a, S a[-{d}]) has dimension {len(reps)}, expected 1")
    tri = cone(reps[0])
    return AsphericityData(a, d, reps[0], tri.z, tri)


def sph_subcat_member(b: DObject, asp: AsphericityData) -> bool:
    """b lies in the left orthogonal of Q_a."""
    return asp.q_a.is_zero() or not hom_dims(b, asp.q_a)


# -- Frobenius neighbourhoods ---------------------------------------------

def _require_image(emb: ExcEmbedding, a: DObject) -> None:
    if not a.is_zero() and not in_image(emb, a):
        raise NotInImageError("source object is not in the image of the embedding")


def _modules(b: DObject) -> list[DObject]:
    """The module terms of b, unshifted; every membership test here is additive and shift-invariant."""
    return [DObject.module(r) for r, _ in b.terms]


@lru_cache(maxsize=65536)
def _frbO_module(emb: ExcEmbedding, a: DObject, m: DObject, route: str) -> bool:
    if route == "adjunction":
        return not hom_dims(a, dual_twist(emb, m))
    if route == "serre":
        return not hom_dims(m, sod_project(emb, serre(a)).t)
    raise ValueError(f"unknown route {route!r}")


def frbO_member(emb: ExcEmbedding, a: DObject, b: DObject, route: str = "adjunction") -> bool:
    """Hom^*(a, T' b) = 0 (adjunction route) or Hom^*(b, T S a) = 0 (Serre route)."""
    _require_image(emb, a)
    if a.is_zero():
        return True
    return all(_frbO_module(emb, a, m, route) for m in _modules(b))


def frbOd_member(emb: ExcEmbedding, a: DObject, b: DObject) -> bool:
    _require_image(emb, a)
    if a.is_zero():
        return True
    return frbO_member(emb, serre_sub_inverse(emb, a), b)


def frbO_member_by_decomposition(emb: ExcEmbedding, a: DObject, b: DObject) -> bool:
    """Membership read off the SOD shape <im F, ker L cap (F a)^perp>: T' b must be orthogonal to a."""
    tp = sod_project(emb, b).tp
    for e in emb.sequence:
        if hom_dims(tp, e):
            raise CertificationError("T' b is not in ker L")
    return a.is_zero() or not hom_dims(a, tp)


def frb_codomain_member(emb: ExcEmbedding, b: DObject) -> bool:
    return all(p_operator(emb, m).is_zero() for m in _modules(b))


@dataclass(frozen=True)
class FrbDecomposition:
    image_part: DObject
    orthogonal_part: DObject


def frb_decompose(emb: ExcEmbedding, b: DObject, seed: int = 0) -> FrbDecomposition:
    """b = F L b (+) T' b with T' b in ker R cap ker L; certified."""
    if not frb_codomain_member(emb, b):
        raise NotFrobeniusMemberError("object is not in the Frobenius codomain")
    tri = sod_project(emb, b)
    img, orth = tri.fl_obj, tri.tp_obj
    for i, e in enumerate(emb.sequence):
        if hom_dims(e, orth) or hom_dims(orth, e):
            raise CertificationError(f"orthogonal part is not orthogonal to {emb.label(i)}")
    if not in_image(emb, img):
        raise CertificationError("image part is not in the image")
    if is_iso(img + orth, b, seed=seed).status != "yes":
        raise CertificationError("b is not the direct sum of its two parts")
    return FrbDecomposition(img, orth)


def is_spherical_in_subcategory(emb: ExcEmbedding, a: DObject) -> SpherelikeProfile:
    prof = detect_in_subcategory(emb, a)
    if not prof.spherical:
        raise NotSpherelikeError("object is not spherical in the subcategory")
    return prof


def sphO_member(emb: ExcEmbedding, a: DObject, b: DObject, v_nonzero: bool = True) -> bool:
    """Spherical neighbourhood of V under F = emb o F_a; equal to FrbO of a for V != 0."""
    _require_image(emb, a)
    is_spherical_in_subcategory(emb, a)
    if not v_nonzero:
        return True
    return frbO_member(emb, a, b)


# -- oracles -------------------------------------------------------------

class NbhdOracle:
    """A membership oracle for one neighbourhood, with an evaluation cache."""

    def __init__(self, flavor: str, embedding: ExcEmbedding | None = None, obj: DObject | None = None):
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        self.flavor = flavor
        self.embedding = embedding
        self.obj = obj
        self._cache: dict[DObject, bool] = {}
        self._asp = None
        if flavor == "sph-subcat":
            prof = detect(obj)
            if prof.kind != "spherelike":
                raise NotSpherelikeError("sph-subcat needs a spherelike object")
            self._asp = asphericity(obj, prof.degree)
        elif embedding is None:
            raise ValueError(f"flavor {flavor} needs an embedding")
        elif flavor == "sphO":
            is_spherical_in_subcategory(embedding, obj)

    def _eval(self, b: DObject) -> bool:
        f, emb, a = self.flavor, self.embedding, self.obj
        if f == "frbO":
            return frbO_member(emb, a, b)
        if f == "frbOd":
            return frbOd_member(emb, a, b)
        if f == "sphO":
            return frbO_member(emb, a, b)
        if f == "sph-subcat":
            return sph_subcat_member(b, self._asp)
        return frb_codomain_member(emb, b)

    def __call__(self, b: DObject) -> bool:
        hit = self._cache.get(b)
        if hit is None:
            hit = self._cache[b] = self._eval(b)
        return hit


def thickness_violations(oracle: Callable[[DObject], bool], probes: Sequence[DObject], seed: int = 0) -> list[str]:
    """Spot-check closure under shifts, sums, summands and cones of random degree-0 maps."""
    rng = random.Random(seed)
    out = []
    members = [b for b in probes if oracle(b)]
    for i, b in enumerate(probes):
        for s in (1, -1):
            if oracle(b.shift(s)) != oracle(b):
                out.append(f"shift {s} of probe {i}")
    for i, j in itertools.combinations(range(len(probes)), 2):
        s = oracle(probes[i] + probes[j])
        if s != (oracle(probes[i]) and oracle(probes[j])):
            out.append(f"sum of probes {i},{j}")
    for x, y in itertools.combinations(members, 2):
        h = hom_graded(to_proj(x), to_proj(y))
        reps = h.representatives(0)
        if not reps:
            continue
        f = reps[0]
        for r in reps[1:]:
            c = rng.randint(-16, 16)
            if c:
                f = _add_maps(f, r, c)
        if not oracle(cone(f).z):
            out.append("cone of members")
    return out


def _add_maps(f, g, c):
    from .derived import GradedMap
    comps = dict(f.comps)
    for k, m in g.comps.items():
        comps[k] = comps[k] + m.scale(c) if k in comps else m.scale(c)
    return GradedMap(f.source, f.target, f.degree, comps)


# -- posets --------------------------------------------------------------

@dataclass
class NbhdPoset:
    flavor: str
    roster: list[str]
    probes: list[str]
    membership: list[list[bool]]            # membership[probe][roster]
    classes: list[list[int]]                # roster indices with equal columns
    hasse: list[tuple[int, int]]            # class i covered by class j (column i < column j)
    lattice: list[frozenset]
    meets: list[dict] = field(default_factory=list)
    fingerprint: str = ""

    def column(self, j: int) -> frozenset:
        return frozenset(i for i, row in enumerate(self.membership) if row[j])

    def leq(self, i: int, j: int) -> bool:
        return self.column(i) <= self.column(j)

    def class_of(self, j: int) -> int:
        for c, members in enumerate(self.classes):
            if j in members:
                return c
        raise IndexError(j)

    def maximum_ok(self) -> bool:
        return all(row[0] for row in self.membership) if self.roster else True

    def meet_law_ok(self) -> bool:
        return all(m["ok"] for m in self.meets)

    def antisymmetric(self) -> bool:
        n = len(self.roster)
        return all(self.class_of(i) == self.class_of(j)
                   for i in range(n) for j in range(n) if self.leq(i, j) and self.leq(j, i))

    def to_json(self) -> dict:
        return {
            "flavor": self.flavor,
            "roster": self.roster,
            "probes": self.probes,
            "membership": {r: {p: self.membership[i][j] for i, p in enumerate(self.probes)}
                           for j, r in enumerate(self.roster)},
            "classes": [[self.roster[j] for j in c] for c in self.classes],
            "hasse": [[self.roster[self.classes[a][0]], self.roster[self.classes[b][0]]] for a, b in self.hasse],
            "lattice": [sorted(self.probes[i] for i in s) for s in self.lattice],
            "meets": self.meets,
            "probe_fingerprint": self.fingerprint,
        }

    def to_dot(self) -> str:
        lines = ["digraph nbhd {", f"  // probes: {self.fingerprint}", "  rankdir=BT;"]
        for j, name in enumerate(self.roster):
            lines.append(f"  n{j} [label={json.dumps(name)}];")
        for a, b in self.hasse:
            for i in self.classes[a]:
                for j in self.classes[b]:
                    lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def probe_fingerprint(names: Sequence[str], objects: Sequence[DObject]) -> str:
    from .workspace import dobject_to_json
    payload = json.dumps([[n, dobject_to_json(x)] for n, x in zip(names, objects)], sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _lattice(columns: Sequence[frozenset]) -> list[frozenset]:
    items = set(columns)
    while True:
        new = {a & b for a in items for b in items} | {a | b for a in items for b in items}
        if new <= items:
            break
        items |= new
    return sorted(items, key=lambda s: (len(s), sorted(s)))


def poset_build(emb: ExcEmbedding | None, roster: Sequence[tuple[str, DObject]],
                probes: Sequence[tuple[str, DObject]], flavor: str = "frbO") -> NbhdPoset:
    if not probes:
        raise ValueError("the probe set is empty")
    if flavor == "frb-codomain":
        raise ValueError("frb-codomain does not depend on a source object")
    oracles = [NbhdOracle(flavor, emb, a) for _, a in roster]
    pobjs = [b for _, b in probes]
    matrix = [[o(b) for o in oracles] for b in pobjs]
    cols = [frozenset(i for i, row in enumerate(matrix) if row[j]) for j in range(len(roster))]

    classes: list[list[int]] = []
    for j, c in enumerate(cols):
        for cl in classes:
            if cols[cl[0]] == c:
                cl.append(j)
                break
        else:
            classes.append([j])
    ccols = [cols[cl[0]] for cl in classes]
    hasse = []
    for a, b in itertools.permutations(range(len(classes)), 2):
        if ccols[a] < ccols[b] and not any(ccols[a] < ccols[c] < ccols[b] for c in range(len(classes))):
            hasse.append((a, b))
    hasse.sort()

    meets = []
    if flavor in ("frbO", "frbOd"):
        for i, j in itertools.combinations(range(len(roster)), 2):
            s = roster[i][1] + roster[j][1]
            o = NbhdOracle(flavor, emb, s)
            col = frozenset(k for k, b in enumerate(pobjs) if o(b))
            meets.append({"pair": [roster[i][0], roster[j][0]], "ok": col == cols[i] & cols[j],
                          "column": sorted(probes[k][0] for k in col)})

    return NbhdPoset(flavor, [n for n, _ in roster], [n for n, _ in probes], matrix, classes, hasse,
                     _lattice(ccols), meets, probe_fingerprint([n for n, _ in probes], pobjs))
