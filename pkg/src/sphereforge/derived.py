"""The bounded derived category of a hereditary path algebra.

Objects are kept in normal form as finite sums of shifted modules
(:class:`DObject`); every computation happens on bounded complexes of
representations (:class:`Complex`), usually complexes of projectives, where
graded Homs are the cohomology of the Hom complex.

Sign conventions: ``d^n : C^n -> C^{n+1}``; ``(C[m])^n = C^{n+m}`` with
differential ``(-1)^m d``; a degree-n map ``f`` is a cocycle when
``d f = (-1)^n f d``; ``Cone(f)^n = X^{n+1} + Y^n`` with differential
``[[-d_X, 0], [f, d_Y]]``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .exactlin import (
    Matrix,
    Vector,
    ZERO,
    block_diag,
    extend_basis,
    hstack,
    image_basis,
    kernel_basis,
    rank,
    solve,
    vstack,
)
from .quiver import (
    IsoResult,
    Quiver,
    QuiverError,
    Rep,
    RepMap,
    direct_sum,
    dual_rep,
    euler_form,
    generator_index,
    injective_sum,
    is_iso_module,
    nakayama_map,
    precompose_block,
    projective_presentation,
    projective_sum,
    yoneda_coords,
    yoneda_map,
    zero_rep,
)

log = logging.getLogger(__name__)


class ChainMapError(ValueError):
    pass


# -- objects in normal form ----------------------------------------------

class DObject:
    """A finite direct sum of shifted modules, ``(+)_i rep_i[shift_i]``.

    Terms are sorted by shift, one (possibly decomposable) module per shift,
    zero modules dropped.
    """

    __slots__ = ("quiver", "terms", "_hash")

    def __init__(self, quiver: Quiver, terms: Iterable[tuple[Rep, int]] = ()):
        by_shift: dict[int, list[Rep]] = {}
        for rep, s in terms:
            if rep.quiver != quiver:
                raise QuiverError("quiver mismatch")
            if not rep.is_zero():
                by_shift.setdefault(int(s), []).append(rep)
        self.quiver = quiver
        self.terms = tuple((direct_sum(by_shift[s]), s) for s in sorted(by_shift))
        self._hash = None

    @classmethod
    def module(cls, rep: Rep, shift: int = 0) -> "DObject":
        return cls(rep.quiver, [(rep, shift)])

    @classmethod
    def zero(cls, quiver: Quiver) -> "DObject":
        return cls(quiver, [])

    def shifts(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.terms)

    def rep_at(self, shift: int) -> Rep:
        for r, s in self.terms:
            if s == shift:
                return r
        return zero_rep(self.quiver)

    def is_zero(self) -> bool:
        return not self.terms

    def shift(self, n: int) -> "DObject":
        return DObject(self.quiver, [(r, s + n) for r, s in self.terms])

    def __add__(self, other: "DObject") -> "DObject":
        return DObject(self.quiver, list(self.terms) + list(other.terms))

    def signed_dim_vector(self) -> dict[str, int]:
        out = {v: 0 for v in self.quiver.vertices}
        for r, s in self.terms:
            for v, d in zip(self.quiver.vertices, r.dims):
                out[v] += (-1) ** (s % 2) * d
        return out

    def dims_by_shift(self) -> dict[int, dict[str, int]]:
        return {s: r.dim_vector() for r, s in self.terms}

    def __eq__(self, other) -> bool:
        if not isinstance(other, DObject):
            return NotImplemented
        return self.quiver == other.quiver and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.quiver, self.terms))
        return self._hash

    def __repr__(self) -> str:
        inner = " + ".join(f"{r.dim_vector()}[{s}]" for r, s in self.terms) or "0"
        return f"DObject({inner})"


def direct_sum_objects(xs: Sequence[DObject], quiver: Quiver) -> DObject:
    terms = [t for x in xs for t in x.terms]
    return DObject(quiver, terms)


def shift(x: DObject, n: int) -> DObject:
    return x.shift(n)


def is_zero(x) -> bool:
    if isinstance(x, Complex):
        return homology(x).is_zero()
    return x.is_zero()


# -- complexes -----------------------------------------------------------

class Complex:
    """A bounded complex of representations with differentials ``d^n: C^n -> C^{n+1}``.

    When ``summands`` is given, every term is the recorded sum of
    indecomposable projectives (a projective complex).
    """

    def __init__(self, quiver: Quiver, terms: dict[int, Rep], diffs: dict[int, RepMap] | None = None,
                 summands: dict[int, tuple[str, ...]] | None = None, check: bool = True):
        self.quiver = quiver
        self.terms = {n: r for n, r in terms.items() if not r.is_zero()}
        self.summands = None
        if summands is not None:
            self.summands = {n: tuple(s) for n, s in summands.items() if s}
            if set(self.summands) != set(self.terms):
                raise ChainMapError("projective decomposition does not match the terms")
        self.diffs = {}
        for n, d in (diffs or {}).items():
            if n in self.terms and n + 1 in self.terms and not d.is_zero():
                if d.source != self.terms[n] or d.target != self.terms[n + 1]:
                    raise ChainMapError(f"differential {n} has the wrong source or target")
                self.diffs[n] = d
        if check:
            self.check()

    @classmethod
    def projective(cls, quiver: Quiver, summands: dict[int, tuple[str, ...]],
                   diffs: dict[int, RepMap] | None = None, check: bool = True) -> "Complex":
        terms = {n: projective_sum(quiver, tuple(s)) for n, s in summands.items() if s}
        return cls(quiver, terms, diffs, summands, check)

    @classmethod
    def zero(cls, quiver: Quiver) -> "Complex":
        return cls(quiver, {}, {}, {})

    @property
    def is_projective(self) -> bool:
        return self.summands is not None

    def term(self, n: int) -> Rep:
        r = self.terms.get(n)
        return r if r is not None else zero_rep(self.quiver)

    def summands_at(self, n: int) -> tuple[str, ...]:
        return self.summands.get(n, ()) if self.summands is not None else ()

    def diff(self, n: int) -> RepMap:
        d = self.diffs.get(n)
        return d if d is not None else RepMap.zero(self.term(n), self.term(n + 1))

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def support(self) -> tuple[int, int] | None:
        if not self.terms:
            return None
        return min(self.terms), max(self.terms)

    def check(self) -> None:
        for n in self.degrees():
            if n + 1 in self.terms and n + 2 in self.terms:
                if not (self.diff(n + 1) @ self.diff(n)).is_zero():
                    raise ChainMapError(f"d^{n + 1} d^{n} != 0")
        for d in self.diffs.values():
            if not d.intertwines():
                raise ChainMapError("differential is not a module map")

    def shift(self, m: int) -> "Complex":
        sign = -1 if m % 2 else 1
        terms = {n - m: r for n, r in self.terms.items()}
        diffs = {n - m: (d if sign == 1 else -d) for n, d in self.diffs.items()}
        summ = None if self.summands is None else {n - m: s for n, s in self.summands.items()}
        return Complex(self.quiver, terms, diffs, summ, check=False)

    def __repr__(self) -> str:
        parts = []
        for n in self.degrees():
            label = "+".join(f"P{v}" for v in self.summands[n]) if self.is_projective else str(self.terms[n].dim_vector())
            parts.append(f"{n}:{label}")
        return f"Complex({', '.join(parts)})"


def direct_sum_complexes(cs: Sequence[Complex], quiver: Quiver) -> Complex:
    if not cs:
        return Complex.zero(quiver)
    if len(cs) == 1:
        return cs[0]
    degs = sorted({n for c in cs for n in c.terms})
    projective = all(c.is_projective for c in cs)
    terms = {n: direct_sum([c.term(n) for c in cs], quiver) for n in degs}
    diffs = {}
    for n in degs:
        if n + 1 in terms:
            blocks = [c.diff(n) for c in cs]
            diffs[n] = RepMap(terms[n], terms[n + 1],
                              [block_diag([b.comps[i] for b in blocks]) for i in range(len(quiver.vertices))],
                              check=False)
    summ = {n: sum((c.summands_at(n) for c in cs), ()) for n in degs} if projective else None
    return Complex(quiver, terms, diffs, summ, check=False)


def module_complex(x: DObject) -> Complex:
    """``x`` as a complex with zero differentials: rep[s] sits in degree -s."""
    return Complex(x.quiver, {-s: r for r, s in x.terms}, {}, None, check=False)


# -- graded maps ---------------------------------------------------------

class GradedMap:
    """A degree-``degree`` map of graded objects, ``comps[k]: source^k -> target^{k+degree}``."""

    def __init__(self, source: Complex, target: Complex, degree: int, comps: dict[int, RepMap]):
        self.source = source
        self.target = target
        self.degree = degree
        self.comps = {k: f for k, f in comps.items() if k in source.terms and k + degree in target.terms}

    def comp(self, k: int) -> RepMap:
        f = self.comps.get(k)
        if f is not None:
            return f
        return RepMap.zero(self.source.term(k), self.target.term(k + self.degree))

    def is_cocycle(self) -> bool:
        sign = -1 if self.degree % 2 else 1
        degs = set(self.source.terms) | {k - self.degree for k in self.target.terms}
        for k in sorted(degs):
            lhs = self.target.diff(k + self.degree) @ self.comp(k)
            rhs = self.comp(k + 1) @ self.source.diff(k)
            if sign == -1:
                rhs = -rhs
            if lhs.comps != rhs.comps:
                return False
        return True

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        """Composition ``self o other``."""
        deg = self.degree + other.degree
        comps = {}
        for k in other.comps:
            g = self.comps.get(k + other.degree)
            if g is not None:
                comps[k] = g @ other.comps[k]
        return GradedMap(other.source, self.target, deg, comps)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.comps.values())

    def shift(self, m: int) -> "GradedMap":
        """Shift source and target by ``m`` (components unchanged)."""
        return GradedMap(self.source.shift(m), self.target.shift(m), self.degree,
                         {k - m: f for k, f in self.comps.items()})

    @classmethod
    def identity(cls, c: Complex) -> "GradedMap":
        return cls(c, c, 0, {n: RepMap.identity(r) for n, r in c.terms.items()})

    @classmethod
    def zero(cls, source: Complex, target: Complex, degree: int = 0) -> "GradedMap":
        return cls(source, target, degree, {})


ChainMap = GradedMap


def check_chain_map(f: GradedMap) -> None:
    if not f.is_cocycle():
        raise ChainMapError("map does not commute with the differentials")


def hstack_maps(source: Complex, maps: Sequence[GradedMap], target: Complex) -> GradedMap:
    """The chain map out of ``source = (+) maps[i].source`` restricting to ``maps[i]``."""
    q = target.quiver
    comps = {}
    for k in source.terms:
        tgt = target.term(k)
        if tgt.is_zero():
            continue
        blocks = [f.comp(k) for f in maps]
        comps[k] = RepMap(source.term(k), tgt,
                          [hstack([b.comps[i] for b in blocks], rows=tgt.dims[i]) for i in range(len(q.vertices))],
                          check=False)
    return GradedMap(source, target, 0, comps)


def vstack_maps(source: Complex, maps: Sequence[GradedMap], target: Complex) -> GradedMap:
    """The chain map into ``target = (+) maps[i].target`` with components ``maps[i]``."""
    q = source.quiver
    comps = {}
    for k in source.terms:
        tgt = target.term(k)
        if tgt.is_zero():
            continue
        blocks = [f.comp(k) for f in maps]
        comps[k] = RepMap(source.term(k), tgt,
                          [vstack([b.comps[i] for b in blocks], cols=source.term(k).dims[i]) for i in range(len(q.vertices))],
                          check=False)
    return GradedMap(source, target, 0, comps)


def as_chain_map_from_shift(r: GradedMap) -> GradedMap:
    """A degree-n cocycle ``X -> Y`` viewed as a chain map ``X[-n] -> Y``."""
    n = r.degree
    return GradedMap(r.source.shift(-n), r.target, 0, {k + n: f for k, f in r.comps.items()})


def as_chain_map_to_shift(r: GradedMap) -> GradedMap:
    """A degree-n cocycle ``X -> Y`` viewed as a chain map ``X -> Y[n]``."""
    return GradedMap(r.source, r.target.shift(r.degree), 0, dict(r.comps))


# -- homology ------------------------------------------------------------

def _homology_data(c: Complex, n: int) -> tuple[Rep, list[list[Vector]]]:
    """H^n as a representation, with cycle representatives per vertex."""
    q = c.quiver
    cn = c.term(n)
    dout, din = c.diff(n), c.diff(n - 1)
    reps, bases = [], []
    for i, v in enumerate(q.vertices):
        z = kernel_basis(dout.comps[i])
        b = image_basis(din.comps[i])
        pick = extend_basis(b, z, cn.dims[i])
        r = [z[j] for j in pick]
        reps.append(r)
        bases.append(b + r)
    mats = []
    for ai, a in enumerate(q.arrows):
        s, t = q.index(a.source), q.index(a.target)
        nb = len(bases[t]) - len(reps[t])
        cols = []
        for vec in reps[s]:
            img = cn.mats[ai] @ vec
            x = solve(Matrix.from_columns(bases[t], cn.dims[t]), img)
            if x is None:
                raise ChainMapError("arrow does not preserve cycles")
            cols.append(x[nb:])
        mats.append(Matrix.from_columns(cols, len(reps[t])))
    return Rep(q, [len(r) for r in reps], mats), reps


def homology_rep(c: Complex, n: int) -> Rep:
    return _homology_data(c, n)[0]


def homology(c: Complex) -> DObject:
    """Cohomology of ``c`` in normal form: H^n(c) placed at shift -n."""
    terms = []
    for n in c.degrees():
        h = homology_rep(c, n)
        if not h.is_zero():
            terms.append((h, -n))
    return DObject(c.quiver, terms)


# -- projective realization ----------------------------------------------

@lru_cache(maxsize=4096)
def to_proj(x: DObject) -> Complex:
    """Replace each module term by its minimal projective presentation.

    ``rep[s]`` becomes ``P1 -> P0`` in degrees ``(-s-1, -s)``.
    """
    q = x.quiver
    pieces = []
    for rep, s in x.terms:
        pres = projective_presentation(rep)
        summ = {-s: pres.p0}
        diffs = {}
        if pres.p1:
            summ[-s - 1] = pres.p1
            diffs[-s - 1] = pres.inclusion
        pieces.append(Complex.projective(q, summ, diffs, check=False))
    c = direct_sum_complexes(pieces, q)
    c.check()
    return c


def as_projective(x) -> Complex:
    if isinstance(x, DObject):
        return to_proj(x)
    if not x.is_projective:
        return to_proj(homology(x))
    return x


def as_target(y) -> Complex:
    return module_complex(y) if isinstance(y, DObject) else y


# -- Hom complexes -------------------------------------------------------

class HomComplex:
    """Hom^n(X, Y) = prod_k Hom(X^k, Y^{k+n}) for a projective complex X.

    Coordinates are Yoneda coordinates: for each degree k and each summand
    P(v_j) of X^k, the image of the generator in Y^{k+n} at v_j.
    """

    def __init__(self, x: Complex, y: Complex):
        if not x.is_projective:
            raise ChainMapError("the source of a Hom complex must be a projective complex")
        if x.quiver != y.quiver:
            raise QuiverError("quiver mismatch")
        self.x, self.y = x, y
        self.quiver = x.quiver
        sx, sy = x.support(), y.support()
        if sx is None or sy is None:
            self.degrees = []
        else:
            self.degrees = list(range(sy[0] - sx[1], sy[1] - sx[0] + 1))
        self._layout: dict[int, list[tuple[int, int, str, int, int]]] = {}
        self._dmat: dict[int, Matrix] = {}

    def layout(self, n: int):
        lay = self._layout.get(n)
        if lay is None:
            lay, off = [], 0
            for k in self.x.degrees():
                tgt = self.y.term(k + n)
                for j, v in enumerate(self.x.summands[k]):
                    size = tgt.dim(v)
                    lay.append((k, j, v, off, size))
                    off += size
            self._layout[n] = lay
        return lay

    def dim(self, n: int) -> int:
        lay = self.layout(n)
        return lay[-1][3] + lay[-1][4] if lay else 0

    def diff_matrix(self, n: int) -> Matrix:
        """Matrix of D(f) = d_Y f - (-1)^n f d_X from Hom^n to Hom^{n+1}."""
        m = self._dmat.get(n)
        if m is not None:
            return m
        q, x, y = self.quiver, self.x, self.y
        src, dst = self.layout(n), self.layout(n + 1)
        ncols, nrows = self.dim(n), self.dim(n + 1)
        grid = [[ZERO] * ncols for _ in range(nrows)]
        pos = {(k, j): (off, size) for k, j, _, off, size in src}
        sign = 1 if n % 2 else -1  # coefficient of f d_X is -(-1)^n
        for k, j, v, roff, rsize in dst:
            if rsize == 0:
                continue
            # d_Y o f on the (k, j) block
            if (k, j) in pos:
                coff, csize = pos[(k, j)]
                dy = y.diff(k + n).comp(v)
                for r in range(rsize):
                    row = grid[roff + r]
                    for c in range(csize):
                        e = dy[r, c]
                        if e:
                            row[coff + c] += e
            # f o d_X: depends on the blocks (k+1, i)
            if k + 1 in x.terms:
                vv, g = generator_index(q, x.summands[k], j)
                col = x.diff(k).comp(v).column(g)
                if any(col):
                    blocks = precompose_block(q, x.summands[k + 1], y.term(k + n + 1), col, v)
                    for i, blk in enumerate(blocks):
                        coff, csize = pos[(k + 1, i)]
                        for r in range(rsize):
                            row = grid[roff + r]
                            for c in range(csize):
                                e = blk[r, c]
                                if e:
                                    row[coff + c] += sign * e
        m = Matrix(nrows, ncols, grid)
        self._dmat[n] = m
        return m

    def to_map(self, n: int, vec: Sequence) -> GradedMap:
        comps = {}
        lay = self.layout(n)
        for k in self.x.degrees():
            blocks = [(off, size) for kk, _, _, off, size in lay if kk == k]
            images = [tuple(vec[off:off + size]) for off, size in blocks]
            tgt = self.y.term(k + n)
            if tgt.is_zero():
                continue
            comps[k] = yoneda_map(self.quiver, self.x.summands[k], tgt, images)
        return GradedMap(self.x, self.y, n, comps)

    def coords(self, f: GradedMap) -> tuple:
        out = []
        for k in self.x.degrees():
            if self.y.term(k + f.degree).is_zero():
                continue
            for y in yoneda_coords(self.quiver, self.x.summands[k], f.comp(k)):
                out.extend(y)
        return tuple(out)


class GradedHom:
    """Hom^*(X, Y): dimensions per degree and cocycle representatives."""

    def __init__(self, hc: HomComplex):
        self.complex = hc
        self.source, self.target = hc.x, hc.y
        self.dims: dict[int, int] = {}
        self._boundaries: dict[int, list[Vector]] = {}
        self._rep_vectors: dict[int, list[Vector]] = {}
        for n in hc.degrees:
            dn = hc.dim(n)
            if dn == 0:
                continue
            z = kernel_basis(hc.diff_matrix(n)) if hc.dim(n + 1) else _std_basis(dn)
            b = image_basis(hc.diff_matrix(n - 1)) if hc.dim(n - 1) else []
            pick = extend_basis(b, z, dn)
            self._boundaries[n] = b
            self._rep_vectors[n] = [z[i] for i in pick]
            if pick:
                self.dims[n] = len(pick)

    @cached_property
    def reps(self) -> dict[int, list[GradedMap]]:
        return {n: [self.complex.to_map(n, v) for v in vs] for n, vs in self._rep_vectors.items() if vs}

    def representatives(self, n: int) -> list[GradedMap]:
        return self.reps.get(n, [])

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return not self.dims

    def homology_coords(self, f: GradedMap) -> tuple:
        """Coordinates of the class of the cocycle ``f`` in the representative basis."""
        n = f.degree
        reps = self._rep_vectors.get(n, [])
        if not reps:
            return ()
        vec = self.complex.coords(f)
        basis = self._boundaries[n] + reps
        x = solve(Matrix.from_columns(basis, len(vec)), vec)
        if x is None:
            raise ChainMapError("map is not a cocycle of the Hom complex")
        return tuple(x[len(self._boundaries[n]):])


def _std_basis(n: int) -> list[Vector]:
    from .exactlin import ONE
    return [tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)]


def hom_graded(x, y) -> GradedHom:
    """Graded Hom between objects or complexes (the source is realized projectively)."""
    return GradedHom(HomComplex(as_projective(x), as_target(y)))


@lru_cache(maxsize=65536)
def _hom_dims_cached(x: DObject, y: DObject) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(_hom_dims(to_proj(x), module_complex(y)).items()))


def _hom_dims(x: Complex, y: Complex) -> dict[int, int]:
    hc = HomComplex(x, y)
    ranks = {}

    def rk(n):
        if n not in ranks:
            ranks[n] = rank(hc.diff_matrix(n)) if hc.dim(n) and hc.dim(n + 1) else 0
        return ranks[n]

    out = {}
    for n in hc.degrees:
        d = hc.dim(n)
        if d:
            h = d - rk(n) - rk(n - 1)
            if h:
                out[n] = h
    return out


def hom_dims(x, y) -> dict[int, int]:
    """Nonzero dimensions of Hom^n(x, y); cheaper than :func:`hom_graded`."""
    if isinstance(x, DObject) and isinstance(y, DObject):
        return dict(_hom_dims_cached(x, y))
    return _hom_dims(as_projective(x), as_target(y))


def hom_vanishes(x, y) -> bool:
    return not hom_dims(x, y)


# -- cones and triangles -------------------------------------------------

@dataclass
class Triangle:
    """``X -f-> Y -g-> Cone(f) -h-> X[1]`` realized on complexes."""

    source: Complex
    target: Complex
    cone: Complex
    f: GradedMap
    g: GradedMap
    h: GradedMap

    @cached_property
    def x(self) -> DObject:
        return homology(self.source)

    @cached_property
    def y(self) -> DObject:
        return homology(self.target)

    @cached_property
    def z(self) -> DObject:
        return homology(self.cone)

    def rotate(self) -> "Triangle":
        """``Y -> Cone(f) -> Cone(g) -> Y[1]``; Cone(g) is homotopy equivalent to X[1]."""
        return cone(self.g)


def cone(f: GradedMap, check: bool = True) -> Triangle:
    if f.degree != 0:
        raise ChainMapError("cone needs a degree-0 chain map")
    if check:
        check_chain_map(f)
    x, y = f.source, f.target
    q = x.quiver
    degs = sorted({n - 1 for n in x.terms} | set(y.terms))
    terms = {n: direct_sum([x.term(n + 1), y.term(n)], q) for n in degs}
    projective = x.is_projective and y.is_projective
    summ = {n: x.summands_at(n + 1) + y.summands_at(n) for n in degs} if projective else None
    diffs = {}
    for n in degs:
        if n + 1 not in terms:
            continue
        dx, dy, fn = x.diff(n + 1), y.diff(n), f.comp(n + 1)
        comps = []
        for i in range(len(q.vertices)):
            zero = Matrix.zeros(x.term(n + 2).dims[i], y.term(n).dims[i])
            comps.append(vstack([hstack([-dx.comps[i], zero]), hstack([fn.comps[i], dy.comps[i]])]))
        diffs[n] = RepMap(terms[n], terms[n + 1], comps, check=False)
    c = Complex(q, terms, diffs, summ, check=check)
    g_comps, h_comps = {}, {}
    xs = x.shift(1)
    for n in degs:
        cn = c.term(n)
        if cn.is_zero():
            continue
        if not y.term(n).is_zero():
            g_comps[n] = RepMap(y.term(n), cn,
                                [vstack([Matrix.zeros(x.term(n + 1).dims[i], y.term(n).dims[i]), Matrix.identity(y.term(n).dims[i])])
                                 for i in range(len(q.vertices))], check=False)
        if not x.term(n + 1).is_zero():
            h_comps[n] = RepMap(cn, x.term(n + 1),
                                [hstack([Matrix.identity(x.term(n + 1).dims[i]), Matrix.zeros(x.term(n + 1).dims[i], y.term(n).dims[i])])
                                 for i in range(len(q.vertices))], check=False)
    return Triangle(x, y, c, f, GradedMap(y, c, 0, g_comps), GradedMap(c, xs, 0, h_comps))


def cocone(f: GradedMap) -> tuple[Complex, GradedMap]:
    """The cocone of ``f: X -> Y`` with its canonical map to ``X``."""
    tri = cone(f)
    return tri.cone.shift(-1), tri.h.shift(-1)


# -- Serre functor -------------------------------------------------------

def apply_nakayama(c: Complex) -> Complex:
    """Termwise Nakayama functor on a projective complex (a complex of injectives)."""
    if not c.is_projective:
        raise ChainMapError("Nakayama functor needs a projective complex")
    q = c.quiver
    terms = {n: injective_sum(q, s) for n, s in c.summands.items()}
    diffs = {n: nakayama_map(d, c.summands[n], c.summands[n + 1]) for n, d in c.diffs.items()}
    return Complex(q, terms, diffs, None)


@lru_cache(maxsize=4096)
def serre(x: DObject) -> DObject:
    """Derived Nakayama functor: the Serre functor of the bounded derived category."""
    return homology(apply_nakayama(to_proj(x)))


def dual_object(x: DObject) -> DObject:
    """k-dual, an object over the opposite quiver (shifts negate)."""
    return DObject(x.quiver.opposite(), [(dual_rep(r), -s) for r, s in x.terms])


@lru_cache(maxsize=4096)
def serre_inverse(y: DObject) -> DObject:
    """Inverse Serre functor, computed as D o S_op o D with D the k-dual."""
    return dual_object(serre(dual_object(y)))


# -- isomorphism, Euler pairing -------------------------------------------

def is_iso(x: DObject, y: DObject, seed: int = 0) -> IsoResult:
    if x.quiver != y.quiver:
        raise QuiverError("quiver mismatch")
    if x.shifts() != y.shifts():
        return IsoResult("no", reason=f"shifts differ: {x.shifts()} vs {y.shifts()}")
    certs = []
    for (a, s), (b, _) in zip(x.terms, y.terms):
        res = is_iso_module(a, b, seed=seed)
        if res.status != "yes":
            return IsoResult(res.status, reason=f"shift {s}: {res.reason}")
        certs.append((s, res.certificate))
    return IsoResult("yes", certificate=tuple(certs))


def euler_pairing(x, y) -> int:
    return sum((-1) ** (n % 2) * d for n, d in hom_dims(x, y).items())


def euler_form_objects(x: DObject, y: DObject) -> int:
    return euler_form(x.quiver, x.signed_dim_vector(), y.signed_dim_vector())


# -- long exact sequences ------------------------------------------------

def induced_matrix(hs: GradedHom, ht: GradedHom, phi: GradedMap, n: int) -> Matrix:
    """Matrix of r |-> phi o r from Hom^n(W, source) to Hom^{n + deg phi}(W, target)."""
    reps = hs.representatives(n)
    rows = ht.dims.get(n + phi.degree, 0)
    cols = [ht.homology_coords(phi @ r) if rows else () for r in reps]
    return Matrix.from_columns(cols, rows)


@dataclass
class LesReport:
    probe: DObject
    ok: bool
    euler_ok: bool
    failures: list = field(default_factory=list)
    dims: dict = field(default_factory=dict)


def les_check(tri: Triangle, w: DObject) -> LesReport:
    """Exactness of ... -> Hom^i(W,X) -> Hom^i(W,Y) -> Hom^i(W,Z) -> Hom^{i+1}(W,X) -> ...

    Each connecting map is realized by composing cocycle representatives
    with the chain maps of the triangle.
    """
    wp = to_proj(w)
    hx = hom_graded(wp, tri.source)
    hy = hom_graded(wp, tri.target)
    hz = hom_graded(wp, tri.cone)
    hx1 = hom_graded(wp, tri.h.target)
    degs = set(hx.dims) | set(hy.dims) | set(hz.dims)
    if not degs:
        return LesReport(w, True, True)
    lo, hi = min(degs) - 1, max(degs) + 1
    rf = {i: rank(induced_matrix(hx, hy, tri.f, i)) for i in range(lo, hi + 1)}
    rg = {i: rank(induced_matrix(hy, hz, tri.g, i)) for i in range(lo, hi + 1)}
    rh = {i: rank(induced_matrix(hz, hx1, tri.h, i)) for i in range(lo - 1, hi + 1)}
    failures = []
    for i in range(lo, hi + 1):
        spots = (("X", hx.dims.get(i, 0), rh[i - 1], rf[i]),
                 ("Y", hy.dims.get(i, 0), rf[i], rg[i]),
                 ("Z", hz.dims.get(i, 0), rg[i], rh[i]))
        for name, d, r_in, r_out in spots:
            if d != r_in + r_out:
                failures.append({"degree": i, "spot": name, "dim": d, "rank_in": r_in, "rank_out": r_out})
    chi = lambda dims: sum((-1) ** (n % 2) * d for n, d in dims.items())
    euler_ok = chi(hy.dims) == chi(hx.dims) + chi(hz.dims)
    return LesReport(w, not failures and euler_ok, euler_ok, failures,
                     {"X": hx.dims, "Y": hy.dims, "Z": hz.dims})
