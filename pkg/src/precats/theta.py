"""The index site of iterated simplicial directions.

Objects are tuples of positive integers of length at most the ambient
dimension ``n`` (the empty tuple is the unique length-0 object).  They arise
as equivalence classes of objects of the n-fold product of the simplex
category: a tuple is padded with zeros up to length ``n``, and everything
past the first zero is quotiented away.

Morphisms are equivalence classes of componentwise monotone maps between
padded objects.  The stored normal form keeps components up to and including
the *first constant* component (its constant value matters) and discards
everything after it.  This is the unique reading of the quotient under which
presheaves for ``n = 1`` are exactly simplicial sets: the two constant
self-maps of ``{0,1}`` stay distinct.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class ThetaError(ValueError):
    """Base class for site-level errors."""


class InvalidObjectError(ThetaError):
    pass


class InvalidMorphismError(ThetaError):
    pass


class CompositionError(ThetaError):
    pass


# ---------------------------------------------------------------------------
# objects
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class ThetaObject:
    """A site object: ambient dimension ``n`` plus positive entries."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidObjectError("ambient dimension must be >= 0")
        if len(self.entries) > self.n:
            raise InvalidObjectError(
                f"length {len(self.entries)} exceeds ambient dimension {self.n}")
        if any(e < 1 for e in self.entries):
            raise InvalidObjectError(f"entries must be positive: {self.entries}")

    @property
    def length(self) -> int:
        return len(self.entries)

    def padded(self, i: int) -> int:
        """Entry at 0-based position ``i`` of the zero-padded representative."""
        return self.entries[i] if i < len(self.entries) else 0

    def sort_key(self):
        return (len(self.entries), sum(self.entries), self.entries)

    def __repr__(self):
        return f"Obj{self.entries}@{self.n}"


def object_of(n: int, entries: Iterable[int]) -> ThetaObject:
    """Class representative of ``entries``: truncate at the first zero.

    A zero entry collapses everything after it; negative entries and
    too-long results are rejected.
    """
    entries = tuple(entries)
    if any(e < 0 for e in entries):
        raise InvalidObjectError(f"negative entry in {entries}")
    kept = []
    for e in entries:
        if e == 0:
            break
        kept.append(e)
    return ThetaObject(n, tuple(kept))


def zero_object(n: int) -> ThetaObject:
    return ThetaObject(n, ())


def window_objects(n: int, max_entry: int, max_length: int | None = None) -> list[ThetaObject]:
    """All objects with entries <= max_entry and length <= max_length, sorted."""
    if max_entry < 1:
        raise InvalidObjectError("entry bound must be >= 1")
    top = n if max_length is None else min(max_length, n)
    out = []
    for k in range(top + 1):
        for entries in itertools.product(range(1, max_entry + 1), repeat=k):
            out.append(ThetaObject(n, entries))
    out.sort(key=ThetaObject.sort_key)
    return out


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------

def _is_constant(comp: tuple[int, ...]) -> bool:
    return len(set(comp)) == 1


@dataclass(frozen=True)
class ThetaMorphism:
    """Normal form of a morphism ``source -> target``.

    ``components[i]`` is the image tuple of a monotone map
    ``[source.padded(i)] -> [target.padded(i)]``.  All stored components are
    non-constant except possibly the last one; a trailing constant component
    is stored exactly when one exists among the padded positions.
    """

    source: ThetaObject
    target: ThetaObject
    components: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.source.n != self.target.n:
            raise InvalidMorphismError("source and target live in different ambient dimensions")
        n = self.source.n
        if len(self.components) > n:
            raise InvalidMorphismError("more components than ambient positions")
        for i, comp in enumerate(self.components):
            a, b = self.source.padded(i), self.target.padded(i)
            if len(comp) != a + 1:
                raise InvalidMorphismError(f"component {i} has wrong arity for [{a}]")
            if any(v < 0 or v > b for v in comp):
                raise InvalidMorphismError(f"component {i} leaves [{b}]")
            if any(comp[j] > comp[j + 1] for j in range(len(comp) - 1)):
                raise InvalidMorphismError(f"component {i} is not order-preserving")
        for i, comp in enumerate(self.components[:-1]):
            if _is_constant(comp):
                raise InvalidMorphismError("constant component before the last stored one")
        if len(self.components) < n and (
                not self.components or not _is_constant(self.components[-1])):
            raise InvalidMorphismError("normal form must end with the first constant component")

    @property
    def n(self) -> int:
        return self.source.n

    def lift(self) -> tuple[tuple[int, ...], ...]:
        """Canonical full lift: stored components, then constant-0 maps."""
        comps = list(self.components)
        for i in range(len(comps), self.n):
            comps.append((0,) * (self.source.padded(i) + 1))
        return tuple(comps)

    def is_identity(self) -> bool:
        return self.source == self.target and self == identity(self.source)

    def to_dict(self) -> dict:
        return {
            "source": list(self.source.entries),
            "target": list(self.target.entries),
            "components": [list(c) for c in self.components],
        }

    def sort_key(self):
        return (self.source.sort_key(), self.target.sort_key(), self.components)

    def __repr__(self):
        comps = ",".join("".join(map(str, c)) for c in self.components)
        return f"Mor{self.source.entries}->{self.target.entries}[{comps}]"


def normalize_morphism(source: ThetaObject, target: ThetaObject,
                       lift: Sequence[Sequence[int]]) -> ThetaMorphism:
    """Normal form of a componentwise monotone lift between padded objects.

    Components are scanned left to right; the first constant one is kept
    (its value matters) and everything after it is discarded.  Components out
    of a zero-padded source position are constant by arity.
    """
    if source.n != target.n:
        raise InvalidMorphismError("source and target live in different ambient dimensions")
    n = source.n
    lift = [tuple(c) for c in lift]
    if len(lift) != n:
        raise InvalidMorphismError(f"expected {n} components, got {len(lift)}")
    stored = []
    for i, comp in enumerate(lift):
        a, b = source.padded(i), target.padded(i)
        if len(comp) != a + 1:
            raise InvalidMorphismError(f"component {i} has wrong arity for [{a}]")
        if any(v < 0 or v > b for v in comp):
            raise InvalidMorphismError(f"component {i} leaves [{b}]")
        if any(comp[j] > comp[j + 1] for j in range(len(comp) - 1)):
            raise InvalidMorphismError(f"component {i} is not order-preserving")
        stored.append(comp)
        if _is_constant(comp):
            break
    return ThetaMorphism(source, target, tuple(stored))


@lru_cache(maxsize=None)
def identity(obj: ThetaObject) -> ThetaMorphism:
    return normalize_morphism(obj, obj, [tuple(range(obj.padded(i) + 1))
                                         for i in range(obj.n)])


def compose(f: ThetaMorphism, g: ThetaMorphism) -> ThetaMorphism:
    """Composite ``f after g`` (``g`` maps into ``f``'s source).

    Computed on canonical lifts and renormalized; the result does not depend
    on the choice of lifts.
    """
    if g.target != f.source:
        raise CompositionError(f"cannot compose {f} after {g}: endpoint mismatch")
    gl, fl = g.lift(), f.lift()
    comps = [tuple(fl[i][v] for v in gl[i]) for i in range(g.n)]
    return normalize_morphism(g.source, f.target, comps)


def collapse_to_zero(obj: ThetaObject) -> ThetaMorphism:
    """The unique morphism ``obj -> 0``."""
    return normalize_morphism(obj, zero_object(obj.n),
                              [(0,) * (obj.padded(i) + 1) for i in range(obj.n)])


def vertex(obj: ThetaObject, v: int) -> ThetaMorphism:
    """The morphism ``0 -> obj`` hitting vertex ``v`` of the first direction."""
    if obj.length == 0:
        if v != 0:
            raise InvalidMorphismError("the length-0 object has a single vertex")
        return identity(obj)
    if not 0 <= v <= obj.entries[0]:
        raise InvalidMorphismError(f"vertex {v} outside [{obj.entries[0]}]")
    lift = [(v,)] + [(0,) for _ in range(obj.n - 1)]
    return normalize_morphism(zero_object(obj.n), obj, lift)


@lru_cache(maxsize=None)
def monotone_maps(a: int, b: int) -> tuple[tuple[int, ...], ...]:
    """All monotone maps [a] -> [b] as image tuples."""
    return tuple(itertools.combinations_with_replacement(range(b + 1), a + 1))


@lru_cache(maxsize=None)
def _nonconstant_maps(a: int, b: int) -> tuple[tuple[int, ...], ...]:
    return tuple(m for m in monotone_maps(a, b) if not _is_constant(m))


@lru_cache(maxsize=None)
def enumerate_morphisms(source: ThetaObject, target: ThetaObject) -> tuple[ThetaMorphism, ...]:
    """The complete finite set of normal forms ``source -> target``."""
    if source.n != target.n:
        raise InvalidMorphismError("objects live in different ambient dimensions")
    n = source.n
    if n == 0:
        return (ThetaMorphism(source, target, ()),)
    out = []
    # non-constant prefix of length j-1, then the first constant at position j
    for j in range(1, n + 1):
        prefix_pools = [_nonconstant_maps(source.padded(i), target.padded(i))
                        for i in range(j - 1)]
        if any(not pool for pool in prefix_pools):
            continue
        arity = source.padded(j - 1) + 1
        consts = [(v,) * arity for v in range(target.padded(j - 1) + 1)]
        for prefix in itertools.product(*prefix_pools):
            for comp in consts:
                out.append(ThetaMorphism(source, target, prefix + (comp,)))
    # no constant component at all: only possible with all n positions live
    pools = [_nonconstant_maps(source.padded(i), target.padded(i)) for i in range(n)]
    if all(pools):
        for comps in itertools.product(*pools):
            out.append(ThetaMorphism(source, target, comps))
    out.sort(key=ThetaMorphism.sort_key)
    return tuple(out)


def segal_face_family(p: int, tail: ThetaObject) -> list[ThetaMorphism]:
    """The ``p`` comparison maps ``(1,tail) -> (p,tail)``.

    The i-th map sends 0 to i and 1 to i+1 in the first direction and is the
    identity on the tail directions.
    """
    if p < 1:
        raise InvalidMorphismError("need p >= 1")
    n = tail.n + 1
    source = object_of(n, (1,) + tail.entries)
    target = object_of(n, (p,) + tail.entries)
    faces = []
    for i in range(p):
        lift = [(i, i + 1)] + [tuple(range(tail.padded(j) + 1)) for j in range(n - 1)]
        faces.append(normalize_morphism(source, target, lift))
    return faces


# ---------------------------------------------------------------------------
# morphism surgery used by presheaf constructions
# ---------------------------------------------------------------------------

def tail_morphism(f: ThetaMorphism) -> ThetaMorphism:
    """Strip the first direction: the induced morphism between tail objects."""
    if f.n == 0:
        raise InvalidMorphismError("no tail in ambient dimension 0")
    src = object_of(f.n - 1, f.source.entries[1:])
    tgt = object_of(f.n - 1, f.target.entries[1:])
    return normalize_morphism(src, tgt, f.lift()[1:])


def prepend_prefix(prefix: tuple[int, ...], g: ThetaMorphism, n: int) -> ThetaMorphism:
    """Extend ``g`` by identities on ``prefix`` directions, as a morphism in
    ambient dimension ``n`` from ``prefix + g.source`` to ``prefix + g.target``."""
    if len(prefix) + g.n != n:
        raise InvalidMorphismError("prefix length and ambient dimension disagree")
    src = object_of(n, prefix + g.source.entries)
    tgt = object_of(n, prefix + g.target.entries)
    lift = [tuple(range(e + 1)) for e in prefix] + list(g.lift())
    return normalize_morphism(src, tgt, lift)


# ---------------------------------------------------------------------------
# elementary morphisms: the face/degeneracy generators of a window
# ---------------------------------------------------------------------------

def _elementary_from(obj: ThetaObject, max_entry: int,
                     max_length: int | None) -> Iterator[ThetaMorphism]:
    n = obj.n
    top_len = n if max_length is None else min(max_length, n)
    pad = [obj.padded(i) for i in range(n)]
    for pos in range(min(obj.length + 1, n)):
        m = pad[pos]
        # cofaces obj -> (entry grown by one at pos)
        if m + 1 <= max_entry:
            t_entries = tuple(pad[:pos]) + (m + 1,) + tuple(pad[pos + 1:])
            tgt = object_of(n, t_entries)
            if tgt.length <= top_len:
                for skip in range(m + 2):
                    comp = tuple(v if v < skip else v + 1 for v in range(m + 1))
                    lift = [tuple(range(pad[i] + 1)) for i in range(n)]
                    lift[pos] = comp
                    # positions past the target's truncation keep arity via padding
                    lift = [tuple(min(v, tgt.padded(i)) for v in c)
                            for i, c in enumerate(lift)]
                    yield normalize_morphism(obj, tgt, lift)
        # degeneracies obj -> (entry shrunk by one at pos)
        if m >= 1:
            t_entries = tuple(pad[:pos]) + (m - 1,) + tuple(pad[pos + 1:])
            tgt = object_of(n, t_entries)
            for rep in range(m):
                comp = tuple(v if v <= rep else v - 1 for v in range(m + 1))
                lift = [tuple(range(pad[i] + 1)) for i in range(n)]
                lift[pos] = comp
                lift = [tuple(min(v, tgt.padded(i)) for v in c)
                        for i, c in enumerate(lift)]
                yield normalize_morphism(obj, tgt, lift)


@lru_cache(maxsize=None)
def elementary_morphisms(n: int, max_entry: int,
                         max_length: int | None = None) -> tuple[ThetaMorphism, ...]:
    """Single-position face/degeneracy generators between window objects.

    Every window morphism factors inside the window as a composite of these,
    so naturality checks may be restricted to them.
    """
    seen = set()
    for obj in window_objects(n, max_entry, max_length):
        for mor in _elementary_from(obj, max_entry, max_length):
            if not mor.is_identity():
                seen.add(mor)
    return tuple(sorted(seen, key=ThetaMorphism.sort_key))
