"""Exceptional sequences, mutations, twist functors and the semiorthogonal projections.

For an embedding F whose image is generated by an exceptional sequence
``E_1, ..., E_r`` (Hom^*(E_j, E_i) = 0 for j > i) the right adjoint R and
left adjoint L of F are computed through

* ``T  = L_{E_1} o ... o L_{E_r}``, the projection onto the left orthogonal
  ``ker R`` (E_r is mutated first),
* ``T' = R_{E_r} o ... o R_{E_1}``, the projection onto ``ker L``,

and the triangles ``F R B -> B -> T B`` and ``T' B -> B -> F L B``.
Everything is done on chain complexes; the cones are never minimized until
homology is taken, so the canonical maps stay available.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

from .derived import (
    Complex,
    DObject,
    GradedMap,
    Triangle,
    as_chain_map_from_shift,
    as_chain_map_to_shift,
    as_projective,
    cone,
    direct_sum_complexes,
    hom_dims,
    hom_graded,
    homology,
    is_iso,
    serre,
    serre_inverse,
    to_proj,
    hstack_maps,
    vstack_maps,
)
from .quiver import Quiver

log = logging.getLogger(__name__)


class ExceptionalSequenceError(ValueError):
    pass


class CertificationError(RuntimeError):
    """An internal consistency check on a computed projection failed."""


class NotInImageError(ValueError):
    pass


# -- exceptional sequences -----------------------------------------------

def is_exceptional(e: DObject) -> bool:
    return hom_dims(e, e) == {0: 1}


@dataclass(frozen=True)
class ExcEmbedding:
    """The embedding of the subcategory generated by an exceptional sequence."""

    quiver: Quiver
    sequence: tuple[DObject, ...]
    names: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.sequence)

    def complexes(self) -> list[Complex]:
        return [to_proj(e) for e in self.sequence]

    def label(self, i: int) -> str:
        return self.names[i] if i < len(self.names) else f"E{i + 1}"


def validate_exc_sequence(seq: Sequence[DObject], names: Sequence[str] = (), quiver: Quiver | None = None) -> ExcEmbedding:
    """Check exceptionality and the vanishing Hom^*(E_j, E_i) = 0 for j > i."""
    seq = tuple(seq)
    if quiver is None:
        if not seq:
            raise ExceptionalSequenceError("an empty sequence needs an explicit quiver")
        quiver = seq[0].quiver
    names = tuple(names) or tuple(f"E{i + 1}" for i in range(len(seq)))
    for i, e in enumerate(seq):
        if e.quiver != quiver:
            raise ExceptionalSequenceError(f"{names[i]} lives on a different quiver")
        dims = hom_dims(e, e)
        if dims != {0: 1}:
            raise ExceptionalSequenceError(f"{names[i]} is not exceptional: Hom^*({names[i]}, {names[i]}) = {dims}")
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            dims = hom_dims(seq[j], seq[i])
            if dims:
                raise ExceptionalSequenceError(
                    f"Hom^*({names[j]}, {names[i]}) = {dims} is nonzero ({names[j]} comes after {names[i]})")
    return ExcEmbedding(quiver, seq, names)


# -- evaluation and coevaluation -----------------------------------------

def evaluation(a: Complex, x: Complex) -> GradedMap:
    """ev: (+)_i A[-n_i] -> X over a basis of Hom^*(A, X), as a chain map."""
    h = hom_graded(a, x)
    maps = [as_chain_map_from_shift(r) for n in sorted(h.reps) for r in h.reps[n]]
    src = direct_sum_complexes([m.source for m in maps], x.quiver)
    return hstack_maps(src, maps, x)


def coevaluation(x: Complex, e: Complex) -> GradedMap:
    """coev: X -> (+)_i E[n_i] over a basis of Hom^*(X, E), as a chain map."""
    h = hom_graded(x, e)
    maps = [as_chain_map_to_shift(r) for n in sorted(h.reps) for r in h.reps[n]]
    tgt = direct_sum_complexes([m.target for m in maps], x.quiver)
    return vstack_maps(x, maps, tgt)


def left_mutation_complex(e: Complex, x: Complex) -> tuple[Complex, GradedMap]:
    """Cone of ev: (+) E[-n] -> X, with the canonical map X -> L_E X."""
    tri = cone(evaluation(e, x), check=False)
    return tri.cone, tri.g


def right_mutation_complex(e: Complex, x: Complex) -> tuple[Complex, GradedMap]:
    """Cocone of coev: X -> (+) E[n], with the canonical map R_E X -> X."""
    tri = cone(coevaluation(x, e), check=False)
    return tri.cone.shift(-1), tri.h.shift(-1)


def _require_exceptional(e: DObject) -> None:
    dims = hom_dims(e, e)
    if dims != {0: 1}:
        raise ExceptionalSequenceError(f"mutation needs an exceptional object; Hom^*(E, E) = {dims}")


@lru_cache(maxsize=4096)
def left_mutation(e: DObject, x: DObject) -> DObject:
    _require_exceptional(e)
    return homology(left_mutation_complex(to_proj(e), to_proj(x))[0])


@lru_cache(maxsize=4096)
def right_mutation(e: DObject, x: DObject) -> DObject:
    _require_exceptional(e)
    return homology(right_mutation_complex(to_proj(e), to_proj(x))[0])


@lru_cache(maxsize=4096)
def twist_object(a: DObject, x: DObject) -> DObject:
    """The twist T_A X = Cone(Hom^*(A, X) (x) A -> X); A need not be exceptional."""
    return homology(left_mutation_complex(to_proj(a), to_proj(x))[0])


def twist_triangle(a: DObject, x: DObject) -> Triangle:
    return cone(evaluation(to_proj(a), to_proj(x)))


# -- semiorthogonal projections ------------------------------------------

@dataclass
class SodTriangles:
    """Both projection triangles for one object B."""

    embedding: ExcEmbedding
    b: Complex
    t: Complex            # T B, in ker R
    tp: Complex           # T' B, in ker L
    to_t: GradedMap       # B -> T B
    from_tp: GradedMap    # T' B -> B
    fr: Complex           # F R B = cocone(B -> T B)
    fl: Complex           # F L B = cone(T' B -> B)
    pieces: list = field(default_factory=list)

    @cached_property
    def t_obj(self) -> DObject:
        return homology(self.t)

    @cached_property
    def tp_obj(self) -> DObject:
        return homology(self.tp)

    @cached_property
    def fr_obj(self) -> DObject:
        return homology(self.fr)

    @cached_property
    def fl_obj(self) -> DObject:
        return homology(self.fl)


def twist_chain(emb: ExcEmbedding, b: Complex) -> tuple[Complex, GradedMap, list]:
    """T B = L_{E_1} ... L_{E_r} B with the composite map B -> T B.

    Also returns the pieces (E_i, Hom^* dims) that the cone successively
    absorbed; they certify that F R B lies in the image.
    """
    c, m = b, GradedMap.identity(b)
    pieces = []
    for i in reversed(range(emb.length)):
        e = to_proj(emb.sequence[i])
        dims = hom_dims(e, c)
        pieces.append((emb.label(i), dims))
        if not dims:
            continue
        c2, inc = left_mutation_complex(e, c)
        m = inc @ m
        c = c2
    return c, m, pieces


def dual_twist_chain(emb: ExcEmbedding, b: Complex) -> tuple[Complex, GradedMap]:
    """T' B = R_{E_r} ... R_{E_1} B with the composite map T' B -> B."""
    c, m = b, GradedMap.identity(b)
    for i in range(emb.length):
        e = to_proj(emb.sequence[i])
        if not hom_dims(c, e):
            continue
        c2, proj = right_mutation_complex(e, c)
        m = m @ proj
        c = c2
    return c, m


@lru_cache(maxsize=4096)
def dual_twist(emb: ExcEmbedding, b: DObject) -> Complex:
    """T' b alone, minimized after every mutation."""
    for e in emb.sequence:
        b = right_mutation(e, b)
    return to_proj(b)


def _sod_project(emb: ExcEmbedding, b: Complex, certify: bool) -> SodTriangles:
    t, to_t, pieces = twist_chain(emb, b)
    tp, from_tp = dual_twist_chain(emb, b)
    fr = cone(to_t, check=False).cone.shift(-1)
    fl = cone(from_tp, check=False).cone
    res = SodTriangles(emb, b, t, tp, to_t, from_tp, fr, fl, pieces)
    if certify:
        for i, e in enumerate(emb.sequence):
            d1 = hom_dims(e, t)
            if d1:
                raise CertificationError(f"Hom^*({emb.label(i)}, T B) = {d1} should vanish")
            d2 = hom_dims(tp, e)
            if d2:
                raise CertificationError(f"Hom^*(T' B, {emb.label(i)}) = {d2} should vanish")
    return res


@lru_cache(maxsize=4096)
def _sod_project_obj(emb: ExcEmbedding, b: DObject, certify: bool) -> SodTriangles:
    return _sod_project(emb, to_proj(b), certify)


def sod_project(emb: ExcEmbedding, b, certify: bool = True) -> SodTriangles:
    """Projection triangles ``FRB -> B -> TB`` and ``T'B -> B -> FLB``."""
    if isinstance(b, DObject):
        return _sod_project_obj(emb, b, certify)
    return _sod_project(emb, as_projective(b), certify)


def in_image(emb: ExcEmbedding, x: DObject) -> bool:
    """x lies in the image of F exactly when T x = 0."""
    return sod_project(emb, x).t_obj.is_zero()


def right_adjoint_image(emb: ExcEmbedding, b: DObject) -> DObject:
    return sod_project(emb, b).fr_obj


def left_adjoint_image(emb: ExcEmbedding, b: DObject) -> DObject:
    return sod_project(emb, b).fl_obj


@lru_cache(maxsize=4096)
def p_operator(emb: ExcEmbedding, b: DObject) -> DObject:
    """P(B) = F R T' B."""
    tri = sod_project(emb, b)
    return sod_project(emb, tri.tp, certify=False).fr_obj


def _require_image(emb: ExcEmbedding, a: DObject, what: str) -> None:
    t = sod_project(emb, a).t_obj
    if not t.is_zero():
        raise NotInImageError(f"{what} is not in the image of the embedding (T = {t!r})")


@lru_cache(maxsize=4096)
def serre_sub(emb: ExcEmbedding, a: DObject) -> DObject:
    """Serre functor of the subcategory, F R S F, on an object in the image."""
    _require_image(emb, a, "argument")
    return sod_project(emb, serre(a)).fr_obj


@lru_cache(maxsize=4096)
def serre_sub_inverse(emb: ExcEmbedding, a: DObject, check: bool = True) -> DObject:
    """Inverse Serre functor of the subcategory, F L S^{-1} F."""
    _require_image(emb, a, "argument")
    res = sod_project(emb, serre_inverse(a)).fl_obj
    if check:
        back = serre_sub(emb, res)
        if is_iso(back, a).status != "yes":
            raise CertificationError("inverse Serre functor of the subcategory failed its round trip")
    return res
