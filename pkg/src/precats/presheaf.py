"""Finite presheaves of sets on the site, evaluated lazily.

A presheaf is a pair of functions: ``eval`` sending a site object to a
finite set of cells, and ``act`` sending a morphism ``f: M -> M'`` and a
cell over ``M'`` to its restriction over ``M``.  Both are memoized, so any
level is computed at most once; all values are immutable and the caches are
read-through, so concurrent readers are safe.

Extensional checks (naturality, isomorphism, functoriality) run on a finite
window of levels.  Naturality is verified against the face/degeneracy
generators of the window; every window morphism factors through these inside
the window, so nothing is lost.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import theta
from .theta import (ThetaMorphism, ThetaObject, collapse_to_zero, compose,
                    elementary_morphisms, enumerate_morphisms, identity,
                    object_of, vertex, window_objects, zero_object)


class PresheafError(ValueError):
    pass


class ActionDomainError(PresheafError):
    """Cell handed to ``act`` is not at the morphism's target level."""


# ---------------------------------------------------------------------------
# canonical cell labels (used for deterministic dumps and pushout reps)
# ---------------------------------------------------------------------------

def cell_label(cell) -> str:
    """Deterministic compact string form of a (possibly nested) cell.

    Idempotent on strings, so re-dumping an imported dump is stable.
    """
    if isinstance(cell, tuple):
        return "(" + ",".join(cell_label(c) for c in cell) + ")"
    if isinstance(cell, frozenset):
        return "{" + ",".join(sorted(cell_label(c) for c in cell)) + "}"
    if isinstance(cell, str):
        return cell
    return repr(cell)


@dataclass(frozen=True)
class Window:
    """Levels with entries <= B (and length <= L, default the full length)."""

    B: int
    L: Optional[int] = None

    def __post_init__(self):
        if self.B < 1:
            raise PresheafError("window entry bound must be >= 1")

    def objects(self, n: int) -> list[ThetaObject]:
        return window_objects(n, self.B, self.L)

    def elementary(self, n: int) -> tuple[ThetaMorphism, ...]:
        return elementary_morphisms(n, self.B, self.L)

    def morphisms(self, n: int):
        """All (source, target, morphisms) triples of the window."""
        objs = self.objects(n)
        for s in objs:
            for t in objs:
                yield s, t, enumerate_morphisms(s, t)


def _act_cache_limit() -> int:
    """Restriction-cache bound; 0 means unbounded.  The environment variable
    is the only runtime knob."""
    try:
        return max(0, int(os.environ.get("PRECATS_CACHE_SIZE", "0")))
    except ValueError:
        return 0


class Precat:
    """A lazily evaluated, memoized finite presheaf on the site."""

    def __init__(self, n: int, eval_fn: Callable[[ThetaObject], Iterable],
                 act_fn: Callable[[ThetaMorphism, object], object],
                 name: str = "precat", validate_actions: bool = True):
        self.n = n
        self.name = name
        self._eval_fn = eval_fn
        self._act_fn = act_fn
        self._levels: dict[ThetaObject, frozenset] = {}
        self._acts: dict[tuple[ThetaMorphism, object], object] = {}
        self._validate = validate_actions
        self._act_limit = _act_cache_limit()

    def cells(self, M: ThetaObject) -> frozenset:
        if M.n != self.n:
            raise PresheafError(f"{M} is not a level of a {self.n}-precat")
        got = self._levels.get(M)
        if got is None:
            got = frozenset(self._eval_fn(M))
            self._levels[M] = got
        return got

    def act(self, f: ThetaMorphism, cell):
        key = (f, cell)
        got = self._acts.get(key)
        if got is not None:
            return got
        if cell not in self.cells(f.target):
            raise ActionDomainError(
                f"cell {cell!r} is not at level {f.target} of {self.name}")
        result = self._act_fn(f, cell)
        if self._validate and result not in self.cells(f.source):
            raise ActionDomainError(
                f"action of {f} on {cell!r} left level {f.source} of {self.name}")
        if self._act_limit and len(self._acts) >= self._act_limit:
            self._acts.clear()
        self._acts[key] = result
        return result

    def degeneracy(self, M: ThetaObject, point):
        """The fully degenerate cell over ``M`` of a level-0 cell."""
        return self.act(collapse_to_zero(M), point)

    def size(self, M: ThetaObject) -> int:
        return len(self.cells(M))

    def __repr__(self):
        return f"<{self.name}: {self.n}-precat>"


class PrecatMap:
    """A levelwise function between two precats of the same dimension."""

    def __init__(self, domain: Precat, codomain: Precat,
                 apply_fn: Callable[[ThetaObject, object], object], name: str = "map"):
        if domain.n != codomain.n:
            raise PresheafError("map endpoints live in different ambient dimensions")
        self.domain = domain
        self.codomain = codomain
        self._apply_fn = apply_fn
        self.name = name

    def apply(self, M: ThetaObject, cell):
        return self._apply_fn(M, cell)

    def then(self, other: "PrecatMap") -> "PrecatMap":
        if other.domain is not self.codomain and other.domain.n != self.codomain.n:
            raise PresheafError("maps do not compose")
        return PrecatMap(self.domain, other.codomain,
                         lambda M, c: other.apply(M, self.apply(M, c)),
                         name=f"{self.name};{other.name}")

    def naturality_violations(self, window: Window, full: bool = False) -> list:
        """Commuting failures against the window's generators (or, with
        ``full``, against every window morphism)."""
        out = []
        if full:
            mors = [m for _, _, ms in window.morphisms(self.domain.n) for m in ms]
        else:
            mors = window.elementary(self.domain.n)
        for f in mors:
            for c in self.domain.cells(f.target):
                lhs = self.codomain.act(f, self.apply(f.target, c))
                rhs = self.apply(f.source, self.domain.act(f, c))
                if lhs != rhs:
                    out.append((f, c, lhs, rhs))
        return out

    def is_natural(self, window: Window) -> bool:
        return not self.naturality_violations(window)

    def __repr__(self):
        return f"<map {self.name}: {self.domain.name} -> {self.codomain.name}>"


def identity_map(P: Precat) -> PrecatMap:
    return PrecatMap(P, P, lambda M, c: c, name="id")


def constant_table_precat(n: int, levels: dict, actions: dict,
                          name: str = "table") -> Precat:
    """Precat backed by explicit tables (used for dumps and adversarial tests)."""
    def eval_fn(M):
        try:
            return levels[M]
        except KeyError:
            raise PresheafError(f"{name} has no level {M} in its table")

    def act_fn(f, c):
        try:
            return actions[(f, c)]
        except KeyError:
            raise PresheafError(f"{name} has no action entry for {f} on {c!r}")

    return Precat(n, eval_fn, act_fn, name=name)


# ---------------------------------------------------------------------------
# basic presheaves
# ---------------------------------------------------------------------------

def discrete(n: int, labels: Iterable) -> Precat:
    """Constant presheaf on a finite set; every cell is fully degenerate."""
    labels = tuple(labels)
    return Precat(n, lambda M: labels, lambda f, c: c,
                  name=f"discrete{labels}")


def point(n: int) -> Precat:
    p = discrete(n, ("pt",))
    p.name = "point"
    return p


def empty(n: int) -> Precat:
    return Precat(n, lambda M: (), lambda f, c: c, name="empty")


def terminal_map(P: Precat) -> PrecatMap:
    return PrecatMap(P, point(P.n), lambda M, c: "pt", name="!")


def empty_map(P: Precat) -> PrecatMap:
    return PrecatMap(empty(P.n), P, lambda M, c: c, name="0->")


def point_map(P: Precat, cell0) -> PrecatMap:
    """The map from the point picking a level-0 cell (and its degeneracies)."""
    if cell0 not in P.cells(zero_object(P.n)):
        raise PresheafError(f"{cell0!r} is not an object of {P.name}")
    return PrecatMap(point(P.n), P, lambda M, c: P.degeneracy(M, cell0),
                     name=f"pt:{cell_label(cell0)}")


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

def product(P: Precat, Q: Precat) -> Precat:
    if P.n != Q.n:
        raise PresheafError("product factors live in different ambient dimensions")

    def eval_fn(M):
        return itertools.product(P.cells(M), Q.cells(M))

    def act_fn(f, c):
        return (P.act(f, c[0]), Q.act(f, c[1]))

    return Precat(P.n, eval_fn, act_fn, name=f"({P.name}x{Q.name})")


def product_map(f: PrecatMap, g: PrecatMap) -> PrecatMap:
    dom = product(f.domain, g.domain)
    cod = product(f.codomain, g.codomain)
    return PrecatMap(dom, cod,
                     lambda M, c: (f.apply(M, c[0]), g.apply(M, c[1])),
                     name=f"({f.name}x{g.name})")


def swap_map(P: Precat, Q: Precat) -> PrecatMap:
    return PrecatMap(product(P, Q), product(Q, P),
                     lambda M, c: (c[1], c[0]), name="swap")


def projection_map(P: Precat, Q: Precat, which: int) -> PrecatMap:
    return PrecatMap(product(P, Q), P if which == 0 else Q,
                     lambda M, c: c[which], name=f"pr{which}")


# ---------------------------------------------------------------------------
# pushouts
# ---------------------------------------------------------------------------

class PushoutData:
    """Objectwise pushout of ``f: R -> P`` and ``g: R -> Q``.

    Cells are canonical representatives of the identification classes of the
    tagged disjoint union; the representative is the label-minimal member, so
    dumps are reproducible.
    """

    def __init__(self, f: PrecatMap, g: PrecatMap, name: str = "po"):
        if f.domain is not g.domain:
            raise PresheafError("pushout legs must share one domain instance")
        self.f, self.g = f, g
        self.R, self.P, self.Q = f.domain, f.codomain, g.codomain
        self._classes: dict[ThetaObject, dict] = {}
        self.precat = Precat(self.P.n, self._eval, self._act, name=name)
        self.inl = PrecatMap(self.P, self.precat,
                             lambda M, c: self.class_of(M, ("L", c)), name="inl")
        self.inr = PrecatMap(self.Q, self.precat,
                             lambda M, c: self.class_of(M, ("R", c)), name="inr")

    def _level_classes(self, M: ThetaObject) -> dict:
        got = self._classes.get(M)
        if got is not None:
            return got
        parent: dict = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry, key=cell_label)] = min(rx, ry, key=cell_label)

        for c in self.P.cells(M):
            parent[("L", c)] = ("L", c)
        for c in self.Q.cells(M):
            parent[("R", c)] = ("R", c)
        for r in self.R.cells(M):
            union(("L", self.f.apply(M, r)), ("R", self.g.apply(M, r)))
        table = {x: find(x) for x in parent}
        self._classes[M] = table
        return table

    def class_of(self, M: ThetaObject, tagged):
        return self._level_classes(M)[tagged]

    def _eval(self, M: ThetaObject):
        return set(self._level_classes(M).values())

    def _act(self, fmor: ThetaMorphism, rep):
        side, c = rep
        inner = self.P if side == "L" else self.Q
        return self.class_of(fmor.source, (side, inner.act(fmor, c)))

    def induced(self, u: PrecatMap, v: PrecatMap, name: str = "fold") -> PrecatMap:
        """The map out of the pushout determined by a commuting cocone."""

        def apply(M, rep):
            side, c = rep
            return u.apply(M, c) if side == "L" else v.apply(M, c)

        return PrecatMap(self.precat, u.codomain, apply, name=name)


def pushout(f: PrecatMap, g: PrecatMap, name: str = "po") -> PushoutData:
    return PushoutData(f, g, name=name)


def pushout_map(src: PushoutData, tgt: PushoutData,
                pmap: PrecatMap, qmap: PrecatMap, name: str = "po-map") -> PrecatMap:
    """Map of pushouts induced by leg maps commuting with the glue."""
    ind = src.induced(pmap.then(tgt.inl), qmap.then(tgt.inr), name=name)
    return PrecatMap(src.precat, tgt.precat, ind.apply, name=name)


def coproduct(P: Precat, Q: Precat) -> PushoutData:
    e = empty(P.n)
    return pushout(PrecatMap(e, P, lambda M, c: c, name="0->"),
                   PrecatMap(e, Q, lambda M, c: c, name="0->"),
                   name=f"({P.name}+{Q.name})")


# ---------------------------------------------------------------------------
# slices, fibers, subpresheaves
# ---------------------------------------------------------------------------

def sub_precat(P: Precat, keep: Callable[[ThetaObject, object], bool],
               name: str = "sub") -> tuple[Precat, PrecatMap]:
    """Sub-presheaf of the cells satisfying ``keep`` (must be action-closed)."""
    S = Precat(P.n, lambda M: (c for c in P.cells(M) if keep(M, c)),
               lambda f, c: P.act(f, c), name=name)
    return S, PrecatMap(S, P, lambda M, c: c, name=f"{name}->")


def slice_precat(A: Precat, prefix: tuple[int, ...], name: str | None = None) -> Precat:
    """The lower-dimensional presheaf ``T -> A at (prefix + T)``."""
    if any(e < 1 for e in prefix):
        raise PresheafError("slice prefix entries must be positive")
    m = A.n - len(prefix)
    if m < 0:
        raise PresheafError("slice prefix longer than ambient dimension")

    def eval_fn(T):
        return A.cells(object_of(A.n, prefix + T.entries))

    def act_fn(g, c):
        return A.act(theta.prepend_prefix(prefix, g, A.n), c)

    return Precat(m, eval_fn, act_fn, name=name or f"{A.name}@{prefix}")


def hom_precat(A: Precat, p: int, points: tuple, name: str | None = None) -> Precat:
    """The fiber of the level-``p`` slice over a ``p+1``-tuple of objects."""
    if len(points) != p + 1:
        raise PresheafError("need one base object per vertex")
    base = slice_precat(A, (p,))

    def vmor(T: ThetaObject, v: int) -> ThetaMorphism:
        full = object_of(A.n, (p,) + T.entries)
        return vertex(full, v)

    def keep(T, c):
        return all(A.act(vmor(T, v), c) == points[v] for v in range(p + 1))

    S, _ = sub_precat(base, keep, name=name or f"{A.name}[{p}]{points}")
    return S


# ---------------------------------------------------------------------------
# extensional checks
# ---------------------------------------------------------------------------

def is_cofibration(u: PrecatMap, window: Window) -> bool:
    """Injectivity at every window level of non-maximal length.

    The top level is exempt: for dimension 0 (sets) nothing is required.
    """
    n = u.domain.n
    for M in window.objects(n):
        if M.length >= n:
            continue
        seen = {}
        for c in u.domain.cells(M):
            img = u.apply(M, c)
            if img in seen and seen[img] != c:
                return False
            seen[img] = c
    return True


@dataclass
class FunctorialityReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_functoriality(P: Precat, window: Window) -> FunctorialityReport:
    """Identity and composition laws over every window morphism."""
    report = FunctorialityReport()
    objs = window.objects(P.n)
    for M in objs:
        idm = identity(M)
        for c in P.cells(M):
            if P.act(idm, c) != c:
                report.violations.append(("identity", M, c))
    homs = {(s, t): enumerate_morphisms(s, t) for s in objs for t in objs}
    for a in objs:
        for b in objs:
            for c_obj in objs:
                for f in homs[(b, c_obj)]:
                    for g in homs[(a, b)]:
                        fg = compose(f, g)
                        for c in P.cells(c_obj):
                            if P.act(fg, c) != P.act(g, P.act(f, c)):
                                report.violations.append(("composition", f, g, c))
    return report


# ---------------------------------------------------------------------------
# windowed isomorphism search
# ---------------------------------------------------------------------------

def _grouped_elementary(n: int, window: Window):
    into: dict[ThetaObject, list] = {}
    outof: dict[ThetaObject, list] = {}
    for e in window.elementary(n):
        into.setdefault(e.target, []).append(e)
        outof.setdefault(e.source, []).append(e)
    return into, outof


def iso_windowed(P: Precat, Q: Precat, window: Window) -> Optional[PrecatMap]:
    """A levelwise bijection commuting with all window morphisms, if any.

    Backtracking over levels ordered by (length, entry sum); candidates are
    pruned by cell counts, forced along degeneracies from already-matched
    levels, and grouped by restriction signatures.
    """
    if P.n != Q.n:
        return None
    objs = window.objects(P.n)
    for M in objs:
        if len(P.cells(M)) != len(Q.cells(M)):
            return None
    into, outof = _grouped_elementary(P.n, window)
    assigned: dict[ThetaObject, dict] = {}

    def level_candidates(M: ThetaObject):
        pcells = sorted(P.cells(M), key=cell_label)
        qcells = set(Q.cells(M))
        cons_in = [e for e in into.get(M, ()) if e.source in assigned]
        cons_out = [e for e in outof.get(M, ()) if e.target in assigned]
        forced: dict = {}
        ok = True
        for e in cons_out:
            phi_t = assigned[e.target]
            for t in P.cells(e.target):
                src_cell = P.act(e, t)
                want = Q.act(e, phi_t[t])
                if forced.get(src_cell, want) != want:
                    ok = False
                    break
                forced[src_cell] = want
            if not ok:
                break
        if not ok:
            return
        if len(set(forced.values())) != len(forced):
            return

        def sig_p(c):
            return tuple(assigned[e.source][P.act(e, c)] for e in cons_in)

        def sig_q(d):
            return tuple(Q.act(e, d) for e in cons_in)

        groups: dict = {}
        for c in pcells:
            if c in forced:
                if sig_q(forced[c]) != sig_p(c):
                    return
                continue
            groups.setdefault(sig_p(c), []).append(c)
        qgroups: dict = {}
        used = set(forced.values())
        for d in qcells:
            if d in used:
                continue
            qgroups.setdefault(sig_q(d), []).append(d)
        if set(groups) != set(qgroups):
            return
        keys = sorted(groups, key=cell_label)
        if any(len(groups[k]) != len(qgroups[k]) for k in keys):
            return
        pools = [list(itertools.permutations(sorted(qgroups[k], key=cell_label)))
                 for k in keys]
        for choice in itertools.product(*pools):
            phi = dict(forced)
            for k, perm in zip(keys, choice):
                phi.update(zip(groups[k], perm))
            yield phi

    def solve(idx: int) -> bool:
        if idx == len(objs):
            return True
        M = objs[idx]
        for phi in level_candidates(M):
            assigned[M] = phi
            if solve(idx + 1):
                return True
            del assigned[M]
        return False

    if not solve(0):
        return None
    components = {M: dict(phi) for M, phi in assigned.items()}
    iso = PrecatMap(P, Q, lambda M, c: components[M][c], name=f"iso[{window.B}]")
    if iso.naturality_violations(window):
        return None
    return iso


def enumerate_natural_maps(P: Precat, Q: Precat, window: Window,
                           limit: int | None = None) -> list[PrecatMap]:
    """All levelwise functions commuting with the window's morphisms.

    Exponential in level sizes; meant for tiny universal-property checks.
    """
    objs = window.objects(P.n)
    into, outof = _grouped_elementary(P.n, window)
    results: list[dict] = []
    assigned: dict[ThetaObject, dict] = {}

    def candidates(M):
        pcells = sorted(P.cells(M), key=cell_label)
        cons_in = [e for e in into.get(M, ()) if e.source in assigned]
        cons_out = [e for e in outof.get(M, ()) if e.target in assigned]
        forced: dict = {}
        for e in cons_out:
            phi_t = assigned[e.target]
            for t in P.cells(e.target):
                src_cell = P.act(e, t)
                want = Q.act(e, phi_t[t])
                if forced.get(src_cell, want) != want:
                    return
                forced[src_cell] = want

        def consistent(c, d):
            return all(assigned[e.source][P.act(e, c)] == Q.act(e, d)
                       for e in cons_in)

        pools = []
        for c in pcells:
            if c in forced:
                pools.append([forced[c]] if consistent(c, forced[c]) else [])
            else:
                pools.append([d for d in sorted(Q.cells(M), key=cell_label)
                              if consistent(c, d)])
        for choice in itertools.product(*pools):
            yield dict(zip(pcells, choice))

    def solve(idx):
        if limit is not None and len(results) >= limit:
            return
        if idx == len(objs):
            results.append({M: dict(phi) for M, phi in assigned.items()})
            return
        M = objs[idx]
        for phi in candidates(M):
            assigned[M] = phi
            solve(idx + 1)
            del assigned[M]
            if limit is not None and len(results) >= limit:
                return

    solve(0)
    out = []
    for comp in results:
        out.append(PrecatMap(P, Q, lambda M, c, comp=comp: comp[M][c], name="nat"))
    return out


# ---------------------------------------------------------------------------
# canonical windowed dumps
# ---------------------------------------------------------------------------

def dump_window(P: Precat, window: Window) -> dict:
    """Complete extensional data of the window, canonically ordered."""
    objs = window.objects(P.n)
    labels = {M: {c: cell_label(c) for c in P.cells(M)} for M in objs}
    levels = [{"object": list(M.entries),
               "cells": sorted(labels[M].values())} for M in objs]
    actions = []
    for s in objs:
        for t in objs:
            for f in enumerate_morphisms(s, t):
                actions.append({
                    "morphism": f.to_dict(),
                    "map": {labels[t][c]: labels[s][P.act(f, c)]
                            for c in sorted(P.cells(t), key=cell_label)},
                })
    return {"n": P.n, "window": {"B": window.B}, "levels": levels,
            "actions": actions}


def dump_json(P: Precat, window: Window) -> str:
    return json.dumps(dump_window(P, window), sort_keys=True,
                      separators=(",", ":")) + "\n"


def precat_from_dump(data: dict, name: str = "dump") -> Precat:
    """Rebuild a window-backed precat from a canonical dump."""
    n = data["n"]
    levels = {object_of(n, lv["object"]): tuple(lv["cells"])
              for lv in data["levels"]}
    actions = {}
    for entry in data["actions"]:
        m = entry["morphism"]
        f = theta.ThetaMorphism(object_of(n, m["source"]), object_of(n, m["target"]),
                                tuple(tuple(c) for c in m["components"]))
        for src_cell, dst_cell in entry["map"].items():
            actions[(f, src_cell)] = dst_cell
    return constant_table_precat(n, levels, actions, name=name)


def windows_equal(P: Precat, Q: Precat, window: Window) -> bool:
    """Byte equality of the eagerly dumped windows."""
    return dump_json(P, window) == dump_json(Q, window)
