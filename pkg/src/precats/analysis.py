"""Comparison-map analysis, truncation towers and connectivity.

The comparison (Segal) map at a level whose ``d``-th entry is ``p`` sends a
cell to its ``p`` spine restrictions; strictness means every such map is a
bijection on the window.  Truncation and connectivity are implemented for
strict inputs only: a weak input raises a typed error instead of silently
approximating, since resolving it would need a categorical completion
operation that is out of scope here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from . import theta
from .constructions import FiniteCategory
from .presheaf import Precat, PrecatMap, Window, hom_precat, slice_precat
from .theta import (ThetaMorphism, ThetaObject, normalize_morphism,
                    object_of, vertex, zero_object)


class AnalysisError(ValueError):
    pass


class NotStrictError(AnalysisError):
    """Comparison maps are not bijections where the operation needs them."""


class TruncationUndefinedError(AnalysisError):
    """Truncation recursion hit a non-strict stage; would need completion."""


# ---------------------------------------------------------------------------
# comparison maps
# ---------------------------------------------------------------------------

def _direction_faces(M: ThetaObject, d: int) -> list[ThetaMorphism]:
    """The p spine maps (entry 1 at position d) -> M, identity elsewhere."""
    p = M.entries[d]
    src = object_of(M.n, M.entries[:d] + (1,) + M.entries[d + 1:])
    faces = []
    for i in range(p):
        lift = []
        for j in range(M.n):
            if j == d:
                lift.append((i, i + 1))
            else:
                lift.append(tuple(range(src.padded(j) + 1)))
        lift = [tuple(min(v, M.padded(j)) for v in comp)
                for j, comp in enumerate(lift)]
        faces.append(normalize_morphism(src, M, lift))
    return faces


def _direction_vertices(M: ThetaObject, d: int) -> list[ThetaMorphism]:
    """The two endpoint maps prefix -> (prefix, 1, ...) in direction d."""
    src = object_of(M.n, M.entries[:d])
    tgt = object_of(M.n, M.entries[:d] + (1,) + M.entries[d + 1:])
    out = []
    for v in (0, 1):
        lift = [tuple(range(src.padded(j) + 1)) for j in range(d)]
        lift.append((v,))
        lift += [(0,) * (src.padded(j) + 1) for j in range(d + 1, M.n)]
        out.append(normalize_morphism(src, tgt, lift))
    return out


@dataclass
class SegalEntry:
    level: ThetaObject
    direction: int
    source_size: int
    target_size: int
    injective: bool
    surjective: bool
    mapping: dict            # cell -> tuple of spine restrictions

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective


@dataclass
class SegalReport:
    entries: list[SegalEntry] = field(default_factory=list)

    @property
    def strict(self) -> bool:
        return all(e.bijective for e in self.entries)

    def failures(self) -> list[SegalEntry]:
        return [e for e in self.entries if not e.bijective]


def segal_map(A: Precat, M: ThetaObject, d: int):
    """The comparison map at level M in direction d, with its target.

    Returns (mapping dict cell -> tuple, target set of compatible tuples).
    """
    p = M.entries[d]
    faces = _direction_faces(M, d)
    v0, v1 = _direction_vertices(M, d)
    one_level = faces[0].source
    ones = A.cells(one_level)
    mapping = {c: tuple(A.act(f, c) for f in faces) for c in A.cells(M)}
    target = []
    for tup in itertools.product(ones, repeat=p):
        if all(A.act(v1, tup[i]) == A.act(v0, tup[i + 1]) for i in range(p - 1)):
            target.append(tup)
    return mapping, target


def segal_check(A: Precat, window: Window) -> SegalReport:
    """Comparison-map verdicts at every window level with an entry >= 2."""
    report = SegalReport()
    for M in window.objects(A.n):
        for d, p in enumerate(M.entries):
            if p < 2:
                continue
            mapping, target = segal_map(A, M, d)
            images = list(mapping.values())
            entry = SegalEntry(
                level=M, direction=d + 1,
                source_size=len(mapping), target_size=len(target),
                injective=len(set(images)) == len(images),
                surjective=set(target) <= set(images),
                mapping=mapping,
            )
            report.entries.append(entry)
    return report


# ---------------------------------------------------------------------------
# categories from strict one-directional data
# ---------------------------------------------------------------------------

def _strict_at(A: Precat, entries: tuple[int, ...], d: int = 0) -> None:
    M = object_of(A.n, entries)
    mapping, target = segal_map(A, M, d)
    images = list(mapping.values())
    if len(set(images)) != len(images) or set(images) != set(target):
        raise NotStrictError(
            f"{A.name} is not strict at {M}: {len(mapping)} cells vs "
            f"{len(target)} compatible tuples")


def category_from_nerve(A: Precat, window: Window, name="C(A)") -> FiniteCategory:
    """Recover objects, arrows and the composition table from levels <= 3.

    Requires the comparison maps at the pure levels (2) and (3) to be
    bijections; composition is the long face of the unique filler.
    """
    for p in (2, 3):
        _strict_at(A, (p,))
    zero = zero_object(A.n)
    one, two = object_of(A.n, (1,)), object_of(A.n, (2,))
    objects = sorted(A.cells(zero), key=repr)
    arrows = sorted(A.cells(one), key=repr)
    vsrc, vtgt = vertex(one, 0), vertex(one, 1)
    src = {a: A.act(vsrc, a) for a in arrows}
    tgt = {a: A.act(vtgt, a) for a in arrows}
    degen = theta.collapse_to_zero(one)
    ident = {x: A.act(degen, x) for x in objects}
    f01, f12 = _direction_faces(two, 0)
    long_face = normalize_morphism(one, two, [(0, 2)] + [
        (0,) * (one.padded(j) + 1) for j in range(1, A.n)])
    fillers = {}
    for c in A.cells(two):
        fillers[(A.act(f01, c), A.act(f12, c))] = c
    table = {}
    for a in arrows:
        for b in arrows:
            if tgt[a] != src[b]:
                continue
            filler = fillers.get((a, b))
            if filler is None:
                raise NotStrictError(f"no filler for {a!r};{b!r}")
            table[(a, b)] = A.act(long_face, filler)
    try:
        return FiniteCategory(objects, arrows, src, tgt, ident, table, name=name)
    except Exception as exc:
        raise NotStrictError(f"level data is not a category: {exc}") from exc


# ---------------------------------------------------------------------------
# truncation
# ---------------------------------------------------------------------------

def _tau_zero_classes(A: Precat, window: Window) -> dict:
    """Map each object cell to its equivalence class (a frozenset)."""
    if A.n == 0:
        return {c: frozenset([c]) for c in A.cells(zero_object(0))}
    objects = sorted(A.cells(zero_object(A.n)), key=repr)
    one = object_of(A.n, (1,))
    arrow_class: dict = {}
    for x in objects:
        for y in objects:
            hom = hom_precat(A, 1, (x, y))
            sub = tau_zero(hom, window)
            for cls in sub:
                for raw in cls:
                    arrow_class[raw] = (x, y, cls)
    for p in (2, 3):
        _strict_at_or_undefined(A, (p,))
    two = object_of(A.n, (2,))
    f01, f12 = _direction_faces(two, 0)
    long_face = normalize_morphism(one, two, [(0, 2)] + [
        (0,) * (one.padded(j) + 1) for j in range(1, A.n)])
    comp: dict = {}
    for c in A.cells(two):
        a, b = A.act(f01, c), A.act(f12, c)
        ka, kb = arrow_class[a][2], arrow_class[b][2]
        kc = arrow_class[A.act(long_face, c)][2]
        prev = comp.get((ka, kb))
        if prev is not None and prev != kc:
            raise TruncationUndefinedError(
                "composition is not constant on equivalence classes")
        comp[(ka, kb)] = kc
    degen = theta.collapse_to_zero(one)
    id_class = {x: arrow_class[A.act(degen, x)][2] for x in objects}
    # two-sided inverse search over the finite arrow classes
    iso_pairs = set()
    for a_raw, (x, y, ka) in arrow_class.items():
        for b_raw, (x2, y2, kb) in arrow_class.items():
            if x2 != y or y2 != x:
                continue
            if comp.get((ka, kb)) == id_class[x] and comp.get((kb, ka)) == id_class[y]:
                iso_pairs.add((x, y))
    classes: dict = {x: {x} for x in objects}
    changed = True
    while changed:
        changed = False
        for x, y in iso_pairs:
            if classes[x] is not classes[y]:
                merged = classes[x] | classes[y]
                for z in merged:
                    classes[z] = merged
                changed = True
    return {x: frozenset(classes[x]) for x in objects}


def _strict_at_or_undefined(A: Precat, entries) -> None:
    try:
        _strict_at(A, entries)
    except NotStrictError as exc:
        raise TruncationUndefinedError(str(exc)) from exc


def tau_zero(A: Precat, window: Window) -> frozenset:
    """The set of objects up to equivalence, as a partition of the objects.

    For dimension 0 this is the underlying set (singleton classes); higher
    dimensions quotient by two-sided invertibility of arrow classes computed
    recursively.
    """
    table = _tau_zero_classes(A, window)
    return frozenset(table.values())


def truncate(A: Precat, k: int, window: Window, name=None) -> Precat:
    """The k-dimensional truncation of a strict input.

    Levels of length < k are untouched; levels of length k collapse to
    equivalence classes of the sliced lower-dimensional presheaves.
    """
    if not 0 <= k <= A.n:
        raise AnalysisError(f"truncation level {k} out of range")
    partitions: dict[ThetaObject, dict] = {}

    def partition(M: ThetaObject) -> dict:
        got = partitions.get(M)
        if got is None:
            got = _tau_zero_classes(slice_precat(A, M.entries), window)
            partitions[M] = got
        return got

    def eval_fn(M: ThetaObject):
        full = object_of(A.n, M.entries)
        if M.length < k:
            return A.cells(full)
        return set(partition(full).values())

    def act_fn(f: ThetaMorphism, cl):
        full_src = object_of(A.n, f.source.entries)
        full_tgt = object_of(A.n, f.target.entries)
        lifted = normalize_morphism(full_src, full_tgt, list(f.lift()) + [
            (0,) * (full_src.padded(i) + 1) for i in range(k, A.n)])
        raw = cl if f.target.length < k else min(cl, key=repr)
        image = A.act(lifted, raw)
        if f.source.length < k:
            return image
        return partition(full_src)[image]

    return Precat(k, eval_fn, act_fn, name=name or f"tau<={k}({A.name})")


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------

def equivalent_to_point(A: Precat, window: Window) -> bool:
    """Contractibility for strict inputs: one object class at every stage."""
    if A.n == 0:
        return len(A.cells(zero_object(0))) == 1
    if len(tau_zero(A, window)) != 1:
        return False
    objects = A.cells(zero_object(A.n))
    return all(equivalent_to_point(hom_precat(A, 1, (x, y)), window)
               for x in objects for y in objects)


def is_k_connected(A: Precat, k: int, window: Window) -> bool:
    return equivalent_to_point(truncate(A, k, window), window)


# ---------------------------------------------------------------------------
# minimal dimension for maps of sets (dimension 0)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MinDim0:
    """Minimal dimension of a map of sets: 0, 1 or infinity."""

    value: float

    def __post_init__(self):
        if self.value not in (0, 1, math.inf):
            raise AnalysisError(f"no such minimal dimension for sets: {self.value}")


def min_dim_sets(mapping: dict, domain, codomain) -> MinDim0:
    """Infinity for a bijection, 1 for a surjective non-bijection, else 0."""
    domain = set(domain)
    codomain = set(codomain)
    image = {mapping[x] for x in domain}
    if not image <= codomain:
        raise AnalysisError("mapping leaves the codomain")
    surjective = image == codomain
    injective = len(image) == len(domain)
    if surjective and injective:
        return MinDim0(math.inf)
    if surjective:
        return MinDim0(1)
    return MinDim0(0)


def min_dim_map0(u: PrecatMap) -> MinDim0:
    """Minimal dimension of a map of 0-dimensional presheaves."""
    if u.domain.n != 0:
        raise AnalysisError("only defined in dimension 0")
    z = zero_object(0)
    dom = u.domain.cells(z)
    return min_dim_sets({c: u.apply(z, c) for c in dom}, dom, u.codomain.cells(z))
