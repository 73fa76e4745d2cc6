"""Acyclic quivers, their representations and module-level homological algebra.

Conventions
-----------
* A path is stored as the tuple of arrows in traversal order.  Printed, the
  leftmost arrow acts last: the path "a then c" is written ``c*a``.
* The indecomposable projective ``P(v)`` has at vertex ``w`` the basis of
  paths ``v -> w``; an arrow acts by post-composition.
* ``I(v)`` has at vertex ``w`` the dual basis of paths ``w -> v``.
* A map out of a sum of projectives ``P(v_1) + ... + P(v_r)`` is determined by
  the images of the generators ``e_{v_j}`` (Yoneda); such image vectors are
  called Yoneda coordinates below.
"""

from __future__ import annotations

import graphlib
import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .exactlin import (
    ONE,
    ZERO,
    Matrix,
    Vector,
    block_diag,
    complement_basis,
    coordinates,
    hstack,
    image_basis,
    is_invertible,
    kernel_basis,
    rank,
    vstack,
)

log = logging.getLogger(__name__)


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    source: str
    target: str
    arrows: tuple[str, ...] = ()

    def __str__(self) -> str:
        if not self.arrows:
            return f"e_{self.source}"
        return "*".join(reversed(self.arrows))

    def then(self, other: "Path") -> "Path":
        """Concatenate: first ``self``, then ``other``."""
        if self.target != other.source:
            raise QuiverError(f"paths {self} and {other} are not composable")
        return Path(self.source, other.target, self.arrows + other.arrows)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("vertex labels must be unique")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverError("arrow names must be unique")
        for a in self.arrows:
            if a.source not in self.vertices or a.target not in self.vertices:
                raise QuiverError(f"arrow {a.name} has an unknown endpoint")
        ts = graphlib.TopologicalSorter({v: [] for v in self.vertices})
        for a in self.arrows:
            ts.add(a.target, a.source)
        try:
            tuple(ts.static_order())
        except graphlib.CycleError as exc:
            raise QuiverError(f"quiver has an oriented cycle through {exc.args[1]}") from None

    @classmethod
    def build(cls, vertices: Iterable, arrows: Iterable[tuple[str, str, str]]) -> "Quiver":
        return cls(tuple(str(v) for v in vertices),
                   tuple(Arrow(str(n), str(s), str(t)) for n, s, t in arrows))

    def index(self, v: str) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise QuiverError(f"unknown vertex {v!r}") from None

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise QuiverError(f"unknown arrow {name!r}")

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise QuiverError(f"unknown arrow {name!r}")

    def paths(self, v: str, w: str) -> tuple[Path, ...]:
        return _paths(self, v, w)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))


@lru_cache(maxsize=None)
def _all_paths_from(q: Quiver, v: str) -> tuple[Path, ...]:
    out = [Path(v, v)]
    frontier = [Path(v, v)]
    while frontier:
        nxt = []
        for p in frontier:
            for a in q.arrows:
                if a.source == p.target:
                    nxt.append(Path(v, a.target, p.arrows + (a.name,)))
        out.extend(nxt)
        frontier = nxt
    return tuple(out)


@lru_cache(maxsize=None)
def _paths(q: Quiver, v: str, w: str) -> tuple[Path, ...]:
    q.index(v), q.index(w)
    return tuple(p for p in _all_paths_from(q, v) if p.target == w)


def path_basis(q: Quiver) -> list[Path]:
    """All paths of ``q`` (trivial ones included): a basis of the path algebra."""
    return [p for v in q.vertices for p in _all_paths_from(q, v)]


# -- representations -----------------------------------------------------

class Rep:
    """A representation: a vector space per vertex and a matrix per arrow.

    The matrix of an arrow ``a: s -> t`` has shape ``dims[t] x dims[s]``.
    """

    __slots__ = ("quiver", "dims", "mats", "_hash", "_paths")

    def __init__(self, quiver: Quiver, dims: Sequence[int], mats: Sequence[Matrix]):
        dims = tuple(int(d) for d in dims)
        mats = tuple(mats)
        if len(dims) != len(quiver.vertices) or len(mats) != len(quiver.arrows):
            raise QuiverError("representation data does not match the quiver")
        if any(d < 0 for d in dims):
            raise QuiverError("dimensions must be non-negative")
        for a, m in zip(quiver.arrows, mats):
            want = (dims[quiver.index(a.target)], dims[quiver.index(a.source)])
            if m.shape != want:
                raise QuiverError(f"arrow {a.name}: matrix has shape {m.shape}, expected {want}")
        self.quiver = quiver
        self.dims = dims
        self.mats = mats
        self._hash = None
        self._paths = {}

    @classmethod
    def from_maps(cls, quiver: Quiver, dims: dict, mats: dict | None = None) -> "Rep":
        d = tuple(int(dims.get(v, 0)) for v in quiver.vertices)
        mats = mats or {}
        ms = []
        for a in quiver.arrows:
            shape = (d[quiver.index(a.target)], d[quiver.index(a.source)])
            m = mats.get(a.name)
            if m is None:
                m = Matrix.zeros(*shape)
            elif not isinstance(m, Matrix):
                rows = [list(r) for r in m]
                if shape[1] == 0 and not rows:
                    rows = [[] for _ in range(shape[0])]
                try:
                    m = Matrix(shape[0], shape[1], rows)
                except ValueError:
                    raise QuiverError(f"arrow {a.name}: matrix is not of shape {shape}") from None
            ms.append(m)
        return cls(quiver, d, ms)

    def dim(self, v: str) -> int:
        return self.dims[self.quiver.index(v)]

    def mat(self, arrow: str) -> Matrix:
        return self.mats[self.quiver.arrow_index(arrow)]

    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return not any(self.dims)

    def dim_vector(self) -> dict[str, int]:
        return dict(zip(self.quiver.vertices, self.dims))

    def path_matrix(self, p: Path) -> Matrix:
        m = self._paths.get(p)
        if m is None:
            m = Matrix.identity(self.dim(p.source))
            for name in p.arrows:
                m = self.mat(name) @ m
            self._paths[p] = m
        return m

    def __eq__(self, other) -> bool:
        if not isinstance(other, Rep):
            return NotImplemented
        return self.quiver == other.quiver and self.dims == other.dims and self.mats == other.mats

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.quiver, self.dims, self.mats))
        return self._hash

    def __repr__(self) -> str:
        return f"Rep(dims={self.dim_vector()})"


class RepMap:
    """A morphism of representations, one matrix per vertex."""

    __slots__ = ("source", "target", "comps")

    def __init__(self, source: Rep, target: Rep, comps: Sequence[Matrix], check: bool = True):
        if source.quiver != target.quiver:
            raise QuiverError("quiver mismatch")
        comps = tuple(comps)
        q = source.quiver
        if len(comps) != len(q.vertices):
            raise QuiverError("one component per vertex is required")
        for v, c, ds, dt in zip(q.vertices, comps, source.dims, target.dims):
            if c.shape != (dt, ds):
                raise QuiverError(f"component at {v} has shape {c.shape}, expected {(dt, ds)}")
        self.source = source
        self.target = target
        self.comps = comps
        if check and not self.intertwines():
            raise QuiverError("components do not intertwine the arrow matrices")

    def comp(self, v: str) -> Matrix:
        return self.comps[self.source.quiver.index(v)]

    def intertwines(self) -> bool:
        q = self.source.quiver
        for i, a in enumerate(q.arrows):
            s, t = q.index(a.source), q.index(a.target)
            if self.comps[t] @ self.source.mats[i] != self.target.mats[i] @ self.comps[s]:
                return False
        return True

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def __matmul__(self, other: "RepMap") -> "RepMap":
        """Composition ``self o other``."""
        return RepMap(other.source, self.target, [a @ b for a, b in zip(self.comps, other.comps)], check=False)

    def __add__(self, other: "RepMap") -> "RepMap":
        return RepMap(self.source, self.target, [a + b for a, b in zip(self.comps, other.comps)], check=False)

    def __neg__(self) -> "RepMap":
        return RepMap(self.source, self.target, [-a for a in self.comps], check=False)

    def scale(self, c) -> "RepMap":
        return RepMap(self.source, self.target, [a.scale(c) for a in self.comps], check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.comps == other.comps

    __hash__ = None

    @classmethod
    def zero(cls, source: Rep, target: Rep) -> "RepMap":
        return cls(source, target, [Matrix.zeros(dt, ds) for ds, dt in zip(source.dims, target.dims)], check=False)

    @classmethod
    def identity(cls, m: Rep) -> "RepMap":
        return cls(m, m, [Matrix.identity(d) for d in m.dims], check=False)


@lru_cache(maxsize=None)
def zero_rep(q: Quiver) -> Rep:
    return Rep.from_maps(q, {})


def _check_vertex(q: Quiver, v: str) -> None:
    q.index(v)


@lru_cache(maxsize=None)
def projective(q: Quiver, v: str) -> Rep:
    _check_vertex(q, v)
    dims = [len(q.paths(v, w)) for w in q.vertices]
    mats = []
    for a in q.arrows:
        src = q.paths(v, a.source)
        tgt = q.paths(v, a.target)
        pos = {p: i for i, p in enumerate(tgt)}
        grid = [[ZERO] * len(src) for _ in tgt]
        for j, p in enumerate(src):
            grid[pos[p.then(Path(a.source, a.target, (a.name,)))]][j] = ONE
        mats.append(Matrix(len(tgt), len(src), grid))
    return Rep(q, dims, mats)


@lru_cache(maxsize=None)
def injective(q: Quiver, v: str) -> Rep:
    _check_vertex(q, v)
    dims = [len(q.paths(w, v)) for w in q.vertices]
    mats = []
    for a in q.arrows:
        src = q.paths(a.source, v)
        tgt = q.paths(a.target, v)
        pos = {p: i for i, p in enumerate(src)}
        grid = [[ZERO] * len(src) for _ in tgt]
        for i, p in enumerate(tgt):
            grid[i][pos[Path(a.source, a.target, (a.name,)).then(p)]] = ONE
        mats.append(Matrix(len(tgt), len(src), grid))
    return Rep(q, dims, mats)


@lru_cache(maxsize=None)
def simple(q: Quiver, v: str) -> Rep:
    _check_vertex(q, v)
    return Rep.from_maps(q, {v: 1})


def direct_sum(ms: Sequence[Rep], quiver: Quiver | None = None) -> Rep:
    ms = list(ms)
    if not ms:
        if quiver is None:
            raise QuiverError("direct_sum of nothing needs an explicit quiver")
        return zero_rep(quiver)
    q = ms[0].quiver
    if any(m.quiver != q for m in ms):
        raise QuiverError("quiver mismatch")
    if len(ms) == 1:
        return ms[0]
    dims = [sum(m.dims[i] for m in ms) for i in range(len(q.vertices))]
    mats = [block_diag([m.mats[i] for m in ms]) for i in range(len(q.arrows))]
    return Rep(q, dims, mats)


def direct_sum_maps(fs: Sequence[RepMap]) -> RepMap:
    src = direct_sum([f.source for f in fs])
    tgt = direct_sum([f.target for f in fs])
    return RepMap(src, tgt, [block_diag([f.comps[i] for f in fs]) for i in range(len(src.dims))], check=False)


# -- sums of projectives and injectives ----------------------------------

@lru_cache(maxsize=None)
def projective_sum(q: Quiver, summands: tuple[str, ...]) -> Rep:
    return direct_sum([projective(q, v) for v in summands], quiver=q)


@lru_cache(maxsize=None)
def injective_sum(q: Quiver, summands: tuple[str, ...]) -> Rep:
    return direct_sum([injective(q, v) for v in summands], quiver=q)


@lru_cache(maxsize=None)
def summand_offsets(q: Quiver, summands: tuple[str, ...], kind: str = "P") -> dict[str, tuple[int, ...]]:
    """Per vertex w, the start index of each summand's block inside the sum at w."""
    build = projective if kind == "P" else injective
    out = {}
    for w in q.vertices:
        offs, acc = [], 0
        for v in summands:
            offs.append(acc)
            acc += build(q, v).dim(w)
        out[w] = tuple(offs)
    return out


def generator_index(q: Quiver, summands: tuple[str, ...], j: int) -> tuple[str, int]:
    """Vertex and coordinate of the generator e_v of summand ``j``."""
    v = summands[j]
    return v, summand_offsets(q, summands)[v][j]


def yoneda_map(q: Quiver, summands: tuple[str, ...], target: Rep, images: Sequence[Vector]) -> RepMap:
    """The map from the projective sum sending generator j to ``images[j]``."""
    src = projective_sum(q, summands)
    comps = []
    for w in q.vertices:
        cols = []
        for v, y in zip(summands, images):
            for p in q.paths(v, w):
                cols.append(target.path_matrix(p) @ y)
        comps.append(Matrix.from_columns(cols, target.dim(w)))
    return RepMap(src, target, comps, check=False)


def yoneda_coords(q: Quiver, summands: tuple[str, ...], f: RepMap) -> list[Vector]:
    out = []
    for j in range(len(summands)):
        v, g = generator_index(q, summands, j)
        out.append(f.comp(v).column(g))
    return out


def precompose_block(q: Quiver, summands: tuple[str, ...], target: Rep, x: Vector, at: str) -> list[Matrix]:
    """Linear dependence of f(x) on the Yoneda coordinates of f.

    ``x`` is a vector of the projective sum at vertex ``at``; returns one
    matrix per summand j with f(x) = sum_j M_j @ y_j.
    """
    offs = summand_offsets(q, summands)[at]
    blocks = []
    for j, v in enumerate(summands):
        acc = Matrix.zeros(target.dim(at), target.dim(v))
        for k, p in enumerate(q.paths(v, at)):
            c = x[offs[j] + k]
            if c:
                acc = acc + target.path_matrix(p).scale(c)
        blocks.append(acc)
    return blocks


# -- Hom and Ext ---------------------------------------------------------

def _same_quiver(m: Rep, n: Rep) -> Quiver:
    if m.quiver != n.quiver:
        raise QuiverError("quiver mismatch")
    return m.quiver


def _hom_system(m: Rep, n: Rep) -> tuple[Matrix, list[tuple[int, int]]]:
    """Constraint matrix for intertwiners; unknowns are the entries of each component."""
    q = _same_quiver(m, n)
    layout, off = [], 0
    for i in range(len(q.vertices)):
        layout.append(off)
        off += n.dims[i] * m.dims[i]
    rows = []
    for ai, a in enumerate(q.arrows):
        s, t = q.index(a.source), q.index(a.target)
        ma, na = m.mats[ai], n.mats[ai]
        # (phi_t @ M_a - N_a @ phi_s)[r, c] = 0
        for r in range(n.dims[t]):
            for c in range(m.dims[s]):
                row = [ZERO] * off
                for k in range(m.dims[t]):
                    x = ma[k, c]
                    if x:
                        row[layout[t] + r * m.dims[t] + k] += x
                for k in range(n.dims[s]):
                    x = na[r, k]
                    if x:
                        row[layout[s] + k * m.dims[s] + c] -= x
                rows.append(row)
    return Matrix(len(rows), off, rows), layout


def _unpack_hom(m: Rep, n: Rep, vec: Vector, layout) -> RepMap:
    comps = []
    for i in range(len(m.dims)):
        dn, dm = n.dims[i], m.dims[i]
        base = layout[i]
        comps.append(Matrix(dn, dm, [[vec[base + r * dm + c] for c in range(dm)] for r in range(dn)]))
    return RepMap(m, n, comps)


def hom_module(m: Rep, n: Rep) -> list[RepMap]:
    """A basis of Hom(m, n)."""
    system, layout = _hom_system(m, n)
    return [_unpack_hom(m, n, v, layout) for v in kernel_basis(system)]


def hom_dim(m: Rep, n: Rep) -> int:
    system, _ = _hom_system(m, n)
    return system.cols - rank(system)


def _top_generators(m: Rep) -> list[tuple[str, Vector]]:
    """Vectors spanning a complement of the radical, vertex by vertex."""
    q = m.quiver
    gens = []
    for i, v in enumerate(q.vertices):
        incoming = [m.mats[ai] for ai, a in enumerate(q.arrows) if a.target == v]
        rad = image_basis(hstack(incoming)) if incoming else []
        for e in complement_basis(rad, m.dims[i]):
            gens.append((v, e))
    return gens


@dataclass(frozen=True)
class Presentation:
    """0 -> P1 -> P0 -> M -> 0 with P0, P1 sums of indecomposable projectives."""
    p1: tuple[str, ...]
    p0: tuple[str, ...]
    inclusion: RepMap
    surjection: RepMap


def projective_cover(m: Rep) -> tuple[tuple[str, ...], RepMap]:
    q = m.quiver
    gens = _top_generators(m)
    summands = tuple(v for v, _ in gens)
    return summands, yoneda_map(q, summands, m, [g for _, g in gens])


def _kernel_subrep(f: RepMap) -> tuple[Rep, RepMap]:
    q = f.source.quiver
    bases = [kernel_basis(c) for c in f.comps]
    mats = []
    for ai, a in enumerate(q.arrows):
        s, t = q.index(a.source), q.index(a.target)
        cols = []
        for b in bases[s]:
            img = f.source.mats[ai] @ b
            cols.append(coordinates(bases[t], img, f.source.dims[t]))
        mats.append(Matrix.from_columns(cols, len(bases[t])))
    k = Rep(q, [len(b) for b in bases], mats)
    inc = RepMap(k, f.source, [Matrix.from_columns(b, d) for b, d in zip(bases, f.source.dims)], check=False)
    return k, inc


def projective_presentation(m: Rep) -> Presentation:
    """Minimal projective presentation; exists because the path algebra is hereditary."""
    p0, surj = projective_cover(m)
    k, inc = _kernel_subrep(surj)
    p1, cover = projective_cover(k)
    return Presentation(p1, p0, inc @ cover, surj)


def ext1(m: Rep, n: Rep) -> tuple[int, list[Vector]]:
    """dim Ext^1(m, n) and a basis of classes in Hom(P1, n) (Yoneda coordinates)
    complementing the image of Hom(P0, n)."""
    q = _same_quiver(m, n)
    pres = projective_presentation(m)
    rows_dim = sum(n.dim(u) for u in pres.p1)
    cols_dim = sum(n.dim(v) for v in pres.p0)
    blocks = []
    for i in range(len(pres.p1)):
        u, g = generator_index(q, pres.p1, i)
        x = pres.inclusion.comp(u).column(g)
        blocks.append(precompose_block(q, pres.p0, n, x, u))
    if not pres.p1 or not pres.p0:
        restrict = Matrix.zeros(rows_dim, cols_dim)
    else:
        restrict = vstack([hstack(row) for row in blocks])
    img = image_basis(restrict)
    comp = complement_basis(img, rows_dim)
    return len(comp), comp


def euler_form(q: Quiver, x: dict[str, int], y: dict[str, int]) -> int:
    """Euler form of the path algebra on (signed) dimension vectors."""
    val = sum(x.get(v, 0) * y.get(v, 0) for v in q.vertices)
    val -= sum(x.get(a.source, 0) * y.get(a.target, 0) for a in q.arrows)
    return val


# -- Nakayama functor ----------------------------------------------------

def nakayama(summands: tuple[str, ...], q: Quiver) -> Rep:
    """nu(P(v_1) + ... + P(v_r)) = I(v_1) + ... + I(v_r)."""
    return injective_sum(q, tuple(summands))


def nakayama_map(f: RepMap, src: tuple[str, ...], tgt: tuple[str, ...]) -> RepMap:
    """Apply the Nakayama functor to a map between projective sums.

    The component P(v_j) -> P(w_i) is a combination of paths p: w_i -> v_j;
    each path induces I(v_j) -> I(w_i), phi |-> (r |-> phi(r then p)).
    """
    q = f.source.quiver
    if f.source != projective_sum(q, src) or f.target != projective_sum(q, tgt):
        raise QuiverError("nakayama_map needs maps between recorded projective sums")
    gens = yoneda_coords(q, src, f)
    tgt_offs = summand_offsets(q, tgt)
    isrc, itgt = injective_sum(q, src), injective_sum(q, tgt)
    in_src = summand_offsets(q, src, "I")
    in_tgt = summand_offsets(q, tgt, "I")
    comps = []
    for x in q.vertices:
        grid = [[ZERO] * isrc.dim(x) for _ in range(itgt.dim(x))]
        for j, v in enumerate(src):
            y = gens[j]
            qpos = {p: k for k, p in enumerate(q.paths(x, v))}
            for i, w in enumerate(tgt):
                for k, p in enumerate(q.paths(w, v)):
                    c = y[tgt_offs[v][i] + k]
                    if not c:
                        continue
                    for ri, r in enumerate(q.paths(x, w)):
                        qi = qpos[r.then(p)]
                        grid[in_tgt[x][i] + ri][in_src[x][j] + qi] += c
        comps.append(Matrix(itgt.dim(x), isrc.dim(x), grid))
    return RepMap(isrc, itgt, comps)


# -- duality -------------------------------------------------------------

def dual_rep(m: Rep) -> Rep:
    """k-linear dual, a representation of the opposite quiver."""
    return Rep(m.quiver.opposite(), m.dims, [a.T for a in m.mats])


def dual_map(f: RepMap) -> RepMap:
    return RepMap(dual_rep(f.target), dual_rep(f.source), [c.T for c in f.comps], check=False)


# -- isomorphism testing -------------------------------------------------

@dataclass(frozen=True)
class IsoResult:
    status: str  # "yes" | "no" | "inconclusive"
    certificate: tuple = ()
    reason: str = ""

    def __bool__(self) -> bool:
        return self.status == "yes"


ISO_TRIALS = 32


def random_combination(basis: Sequence[RepMap], rng: random.Random, bound: int = 16) -> RepMap:
    coeffs = [rng.randint(-bound, bound) for _ in basis]
    f = basis[0].scale(coeffs[0])
    for c, g in zip(coeffs[1:], basis[1:]):
        if c:
            f = f + g.scale(c)
    return f


def is_iso_module(m: Rep, n: Rep, seed: int = 0, trials: int = ISO_TRIALS) -> IsoResult:
    """Randomized isomorphism test with an exactly verified certificate."""
    _same_quiver(m, n)
    if m.dims != n.dims:
        return IsoResult("no", reason="dimension vectors differ")
    if m == n:
        return IsoResult("yes", certificate=RepMap.identity(m).comps)
    if m.is_zero():
        return IsoResult("yes", certificate=RepMap.identity(m).comps)
    basis = hom_module(m, n)
    if not basis:
        return IsoResult("no", reason="Hom(m, n) = 0")
    rng = random.Random(seed)
    for _ in range(trials):
        f = random_combination(basis, rng)
        if all(is_invertible(c) for c in f.comps):
            return IsoResult("yes", certificate=f.comps)
    log.info("isomorphism test inconclusive after %d trials (seed %d)", trials, seed)
    return IsoResult("inconclusive", reason=f"no invertible map in {trials} trials (seed {seed})")


# -- named constructors --------------------------------------------------

def kronecker_regular(q: Quiver, lam) -> Rep:
    """The regular module R_lambda on a Kronecker quiver: dims (1,1), a -> 1, b -> lambda.

    ``lam == "inf"`` gives a -> 0, b -> 1.
    """
    from .exactlin import scalar

    if len(q.vertices) != 2 or len(q.arrows) != 2 or len({(a.source, a.target) for a in q.arrows}) != 1:
        raise QuiverError("kronecker_regular needs a Kronecker quiver (two parallel arrows)")
    a, b = q.arrows
    if isinstance(lam, str) and lam.strip() == "inf":
        va, vb = ZERO, ONE
    else:
        va, vb = ONE, scalar(lam)
    return Rep.from_maps(q, {v: 1 for v in q.vertices}, {a.name: Matrix(1, 1, [[va]]), b.name: Matrix(1, 1, [[vb]])})
