"""Workspace files: a quiver, named objects, embeddings and verification data.

Schema (JSON)::

    {
      "quiver": {"vertices": ["1", "2"],
                 "arrows": [{"name": "a", "source": "1", "target": "2"}, ...]},
      "objects": {"NAME": <object>, ...},
      "embeddings": {"NAME": ["OBJ", ...], ...},
      "seed": 0,
      "verify": {...}
    }

An ``<object>`` is one of::

    {"zero": true}
    {"projective": "v"}  {"injective": "v"}  {"simple": "v"}
    {"kronecker_regular": "p/q" | "inf"}
    {"rep": {"dims": {"v": n}, "mats": {"a": [["p/q", ...], ...]}}}
    {"terms": [{"shift": s, "rep": <object or name>}, ...]}
    {"sum": ["NAME", <object>, ...]}
    {"shift": <object or name>, "by": n}
    {"left_mutation": [E, X]}  {"right_mutation": [E, X]}  {"twist": [A, X]}
    {"serre": X}  {"serre_inverse": X}

Any constructor may carry an extra ``"shift": n`` (an integer) applied last.
Wherever an object is expected, a string names another object of the workspace.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .derived import DObject, serre, serre_inverse
from .exactlin import Matrix, format_scalar, scalar
from .quiver import (
    Quiver,
    QuiverError,
    Rep,
    injective,
    kronecker_regular,
    projective,
    simple,
)
from .sodtwist import (
    ExcEmbedding,
    ExceptionalSequenceError,
    left_mutation,
    right_mutation,
    twist_object,
    validate_exc_sequence,
)

SCHEMA = "sphere-forge/1"


class WorkspaceError(ValueError):
    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer


@dataclass
class Workspace:
    quiver: Quiver
    objects: dict[str, DObject]
    embedding_names: dict[str, list[str]]
    seed: int = 0
    verify: dict = field(default_factory=dict)
    source: str = ""
    _embeddings: dict = field(default_factory=dict, repr=False)

    def obj(self, name: str) -> DObject:
        try:
            return self.objects[name]
        except KeyError:
            raise WorkspaceError("/objects", f"unknown object {name!r}") from None

    def embedding(self, name: str) -> ExcEmbedding:
        if name not in self.embedding_names:
            raise WorkspaceError("/embeddings", f"unknown embedding {name!r}")
        emb = self._embeddings.get(name)
        if emb is None:
            names = self.embedding_names[name]
            try:
                emb = validate_exc_sequence([self.obj(n) for n in names], names, self.quiver)
            except ExceptionalSequenceError as e:
                raise WorkspaceError(f"/embeddings/{name}", str(e)) from None
            self._embeddings[name] = emb
        return emb


def _esc(key) -> str:
    return str(key).replace("~", "~0").replace("/", "~1")


def _parse_quiver(data, ptr: str) -> Quiver:
    if not isinstance(data, dict):
        raise WorkspaceError(ptr, "expected an object")
    verts = data.get("vertices")
    if not isinstance(verts, list) or not verts:
        raise WorkspaceError(ptr + "/vertices", "expected a non-empty list")
    arrows = []
    for i, a in enumerate(data.get("arrows", [])):
        p = f"{ptr}/arrows/{i}"
        if not isinstance(a, dict) or not {"name", "source", "target"} <= set(a):
            raise WorkspaceError(p, "arrow needs name, source and target")
        arrows.append((str(a["name"]), str(a["source"]), str(a["target"])))
    try:
        return Quiver.build([str(v) for v in verts], arrows)
    except QuiverError as e:
        raise WorkspaceError(ptr, str(e)) from None


def _parse_matrix(rows, ptr: str) -> list[list]:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise WorkspaceError(ptr, "matrix must be a list of rows")
    try:
        return [[scalar(x) for x in r] for r in rows]
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise WorkspaceError(ptr, f"bad matrix entry: {e}") from None


def _parse_rep(q: Quiver, data, ptr: str) -> Rep:
    if not isinstance(data, dict) or "dims" not in data:
        raise WorkspaceError(ptr, "rep needs dims")
    dims = data["dims"]
    if not isinstance(dims, dict) or set(dims) - set(q.vertices):
        raise WorkspaceError(ptr + "/dims", "dims must map vertices to integers")
    dims = {v: int(dims.get(v, 0)) for v in q.vertices}
    mats = {}
    for name, rows in data.get("mats", {}).items():
        rows = _parse_matrix(rows, f"{ptr}/mats/{_esc(name)}")
        try:
            a = q.arrow(name)
        except QuiverError as e:
            raise WorkspaceError(f"{ptr}/mats/{_esc(name)}", str(e)) from None
        mats[a.name] = rows
    try:
        return Rep.from_maps(q, dims, mats)
    except QuiverError as e:
        raise WorkspaceError(ptr + "/mats", str(e)) from None


class _Resolver:
    def __init__(self, q: Quiver, raw: dict):
        self.q = q
        self.raw = raw
        self.done: dict[str, DObject] = {}
        self.active: list[str] = []

    def named(self, name: str, ptr: str) -> DObject:
        if name in self.done:
            return self.done[name]
        if name not in self.raw:
            raise WorkspaceError(ptr, f"unknown object {name!r}")
        if name in self.active:
            raise WorkspaceError(ptr, f"cyclic object definition through {name!r}")
        self.active.append(name)
        obj = self.build(self.raw[name], f"/objects/{_esc(name)}")
        self.active.pop()
        self.done[name] = obj
        return obj

    def build(self, spec, ptr: str) -> DObject:
        if isinstance(spec, str):
            return self.named(spec, ptr)
        if not isinstance(spec, dict):
            raise WorkspaceError(ptr, "object must be a name or a constructor")
        extra = spec.get("shift") if "by" not in spec else None
        obj = self._construct(spec, ptr)
        if isinstance(extra, int) and "terms" not in spec:
            obj = obj.shift(extra)
        return obj

    def _vertex(self, v, ptr: str) -> str:
        v = str(v)
        if v not in self.q.vertices:
            raise WorkspaceError(ptr, f"unknown vertex {v!r}")
        return v

    def _construct(self, spec: dict, ptr: str) -> DObject:
        q = self.q
        if spec.get("zero"):
            return DObject.zero(q)
        for key, fn in (("projective", projective), ("injective", injective), ("simple", simple)):
            if key in spec:
                return DObject.module(fn(q, self._vertex(spec[key], f"{ptr}/{key}")))
        if "kronecker_regular" in spec:
            try:
                return DObject.module(kronecker_regular(q, spec["kronecker_regular"]))
            except (QuiverError, ValueError, ZeroDivisionError) as e:
                raise WorkspaceError(f"{ptr}/kronecker_regular", str(e)) from None
        if "rep" in spec:
            return DObject.module(_parse_rep(q, spec["rep"], f"{ptr}/rep"))
        if "terms" in spec:
            terms = []
            for i, t in enumerate(spec["terms"]):
                p = f"{ptr}/terms/{i}"
                if not isinstance(t, dict) or "rep" not in t:
                    raise WorkspaceError(p, "term needs rep and shift")
                inner = t["rep"]
                if isinstance(inner, dict) and "dims" in inner:
                    x = DObject.module(_parse_rep(q, inner, p + "/rep"))
                else:
                    x = self.build(inner, p + "/rep")
                terms.append(x.shift(int(t.get("shift", 0))))
            return _sum(q, terms)
        if "sum" in spec:
            if not isinstance(spec["sum"], list):
                raise WorkspaceError(f"{ptr}/sum", "expected a list")
            return _sum(q, [self.build(x, f"{ptr}/sum/{i}") for i, x in enumerate(spec["sum"])])
        if "by" in spec and "shift" in spec:
            return self.build(spec["shift"], f"{ptr}/shift").shift(int(spec["by"]))
        for key, fn in (("left_mutation", left_mutation), ("right_mutation", right_mutation), ("twist", twist_object)):
            if key in spec:
                pair = spec[key]
                if not isinstance(pair, list) or len(pair) != 2:
                    raise WorkspaceError(f"{ptr}/{key}", "expected [through, object]")
                e = self.build(pair[0], f"{ptr}/{key}/0")
                x = self.build(pair[1], f"{ptr}/{key}/1")
                try:
                    return fn(e, x)
                except ExceptionalSequenceError as err:
                    raise WorkspaceError(f"{ptr}/{key}", str(err)) from None
        if "serre" in spec:
            return serre(self.build(spec["serre"], f"{ptr}/serre"))
        if "serre_inverse" in spec:
            return serre_inverse(self.build(spec["serre_inverse"], f"{ptr}/serre_inverse"))
        raise WorkspaceError(ptr, f"unknown constructor (keys: {sorted(spec)})")


def _sum(q: Quiver, xs: list[DObject]) -> DObject:
    return DObject(q, [t for x in xs for t in x.terms])


def parse_workspace(data, source: str = "") -> Workspace:
    if not isinstance(data, dict):
        raise WorkspaceError("", "workspace must be a JSON object")
    if "quiver" not in data:
        raise WorkspaceError("/quiver", "missing")
    q = _parse_quiver(data["quiver"], "/quiver")
    raw = data.get("objects", {})
    if not isinstance(raw, dict):
        raise WorkspaceError("/objects", "expected an object")
    res = _Resolver(q, raw)
    objects = {name: res.named(name, f"/objects/{_esc(name)}") for name in raw}
    embs = data.get("embeddings", {})
    if not isinstance(embs, dict):
        raise WorkspaceError("/embeddings", "expected an object")
    for name, seq in embs.items():
        if not isinstance(seq, list) or not all(isinstance(s, str) for s in seq):
            raise WorkspaceError(f"/embeddings/{_esc(name)}", "expected a list of object names")
        for i, s in enumerate(seq):
            if s not in objects:
                raise WorkspaceError(f"/embeddings/{_esc(name)}/{i}", f"unknown object {s!r}")
    seed = data.get("seed", 0)
    if not isinstance(seed, int):
        raise WorkspaceError("/seed", "expected an integer")
    ws = Workspace(q, objects, {k: list(v) for k, v in embs.items()}, seed, data.get("verify", {}), source)
    for name in ws.embedding_names:
        ws.embedding(name)
    return ws


def load(path) -> Workspace:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise WorkspaceError("", f"cannot read {path}: {e.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise WorkspaceError("", f"invalid JSON: {e}") from None
    return parse_workspace(data, str(path))


def fixture_path(name: str) -> Path:
    """Path of a shipped fixture workspace (``kronecker``, ``tacked-kronecker``, ``a3-linear``)."""
    from importlib.resources import files
    return Path(str(files("sphereforge") / "fixtures" / f"{name}.json"))


def load_fixture(name: str) -> Workspace:
    return load(fixture_path(name))


# -- serialization -------------------------------------------------------

def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[format_scalar(x) for x in row] for row in m.to_lists()]


def rep_to_json(r: Rep) -> dict:
    q = r.quiver
    return {
        "dims": r.dim_vector(),
        "mats": {a.name: matrix_to_json(m) for a, m in zip(q.arrows, r.mats)},
    }


def dobject_to_json(x: DObject) -> dict:
    return {"terms": [{"shift": s, "rep": rep_to_json(r)} for r, s in x.terms]}


def dims_to_json(dims: dict[int, int]) -> dict[str, int]:
    return {str(n): d for n, d in sorted(dims.items())}


def summary(x: DObject) -> dict:
    """Compact description: dimension vector per shift."""
    return {str(s): r.dim_vector() for r, s in x.terms}
