"""The named precat constructions: nerves, edge complexes, cells,
suspension, delooping, the Whitehead operation, corner maps and the
monoidal towers.

Everything here is exact combinatorics over the lazy presheaf core.  Each
builder documents its levelwise formula; actions restrict along the first
direction and push the remaining directions into the input presheaves.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import presheaf, theta
from .presheaf import (Precat, PrecatMap, PushoutData, Window, discrete,
                       empty, hom_precat, point, point_map, product, pushout,
                       sub_precat, swap_map, terminal_map)
from .theta import (ThetaMorphism, ThetaObject, object_of, tail_morphism,
                    zero_object)


class ConstructionError(ValueError):
    pass


class InvalidArgumentError(ConstructionError):
    pass


# ---------------------------------------------------------------------------
# finite categories and their nerves
# ---------------------------------------------------------------------------

class FiniteCategory:
    """Objects, arrows with endpoints, identities and a total composition
    table ``table[(a, b)] = a-then-b`` for composable ``a, b``."""

    def __init__(self, objects, arrows, src, tgt, ident, table, name="C"):
        self.objects = tuple(objects)
        self.arrows = tuple(arrows)
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.ident = dict(ident)
        self.table = dict(table)
        self.name = name
        self.validate()

    def validate(self):
        for x in self.objects:
            i = self.ident.get(x)
            if i is None or self.src[i] != x or self.tgt[i] != x:
                raise ConstructionError(f"bad identity at {x!r}")
        for a in self.arrows:
            if self.src[a] not in self.objects or self.tgt[a] not in self.objects:
                raise ConstructionError(f"dangling arrow {a!r}")
        arrow_set = set(self.arrows)
        for a in self.arrows:
            for b in self.arrows:
                if self.tgt[a] == self.src[b]:
                    c = self.table.get((a, b))
                    if c not in arrow_set or self.src[c] != self.src[a] \
                            or self.tgt[c] != self.tgt[b]:
                        raise ConstructionError(f"bad composite for {a!r};{b!r}")
            if self.table[(self.ident[self.src[a]], a)] != a or \
               self.table[(a, self.ident[self.tgt[a]])] != a:
                raise ConstructionError(f"identity law fails at {a!r}")
        for a in self.arrows:
            for b in self.arrows:
                if self.tgt[a] != self.src[b]:
                    continue
                for c in self.arrows:
                    if self.tgt[b] != self.src[c]:
                        continue
                    if self.table[(self.table[(a, b)], c)] != self.table[(a, self.table[(b, c)])]:
                        raise ConstructionError(f"associativity fails at {a!r},{b!r},{c!r}")

    def compose_run(self, arrows, at_object=None):
        """Composite of a list of composable arrows (identity if empty)."""
        if not arrows:
            return self.ident[at_object]
        out = arrows[0]
        for a in arrows[1:]:
            out = self.table[(out, a)]
        return out

    def chains(self, p: int):
        """All composable p-tuples of arrows."""
        if p == 0:
            return [()]
        out = [(a,) for a in self.arrows]
        for _ in range(p - 1):
            out = [ch + (a,) for ch in out for a in self.arrows
                   if self.tgt[ch[-1]] == self.src[a]]
        return out

    # -- stock categories ---------------------------------------------------

    @staticmethod
    def discrete(k: int) -> "FiniteCategory":
        objs = tuple(range(k))
        ident = {x: ("id", x) for x in objs}
        arrows = tuple(ident.values())
        src = {a: a[1] for a in arrows}
        tgt = dict(src)
        table = {(a, a): a for a in arrows}
        return FiniteCategory(objs, arrows, src, tgt, ident, table, name=f"disc{k}")

    @staticmethod
    def chain(k: int) -> "FiniteCategory":
        """The poset 0 < 1 < ... < k as a category."""
        objs = tuple(range(k + 1))
        arrows = tuple((i, j) for i in objs for j in objs if i <= j)
        src = {a: a[0] for a in arrows}
        tgt = {a: a[1] for a in arrows}
        ident = {x: (x, x) for x in objs}
        table = {(a, b): (a[0], b[1]) for a in arrows for b in arrows if a[1] == b[0]}
        return FiniteCategory(objs, arrows, src, tgt, ident, table, name=f"chain{k}")

    @staticmethod
    def interval() -> "FiniteCategory":
        """Two objects and a single non-invertible arrow between them."""
        c = FiniteCategory.chain(1)
        c.name = "I"
        return c

    @staticmethod
    def iso_interval() -> "FiniteCategory":
        """Two objects and a single isomorphism between them."""
        objs = (0, 1)
        arrows = ("id0", "id1", "u", "v")
        src = {"id0": 0, "id1": 1, "u": 0, "v": 1}
        tgt = {"id0": 0, "id1": 1, "u": 1, "v": 0}
        ident = {0: "id0", 1: "id1"}
        table = {}
        for a in arrows:
            for b in arrows:
                if tgt[a] != src[b]:
                    continue
                pair = tuple(x for x in (a, b) if not x.startswith("id"))
                if len(pair) == 0:
                    table[(a, b)] = a
                elif len(pair) == 1:
                    table[(a, b)] = pair[0]
                else:
                    table[(a, b)] = ident[src[a]]
        return FiniteCategory(objs, arrows, src, tgt, ident, table, name="Ibar")

    @staticmethod
    def monoid(elements, op, unit, name="M") -> "FiniteCategory":
        objs = ("*",)
        arrows = tuple(elements)
        src = {a: "*" for a in arrows}
        tgt = dict(src)
        ident = {"*": unit}
        table = {(a, b): op(a, b) for a in arrows for b in arrows}
        return FiniteCategory(objs, arrows, src, tgt, ident, table, name=name)


def _chain_vertex(C: FiniteCategory, chain, v: int):
    return C.src[chain[0]] if v == 0 else C.tgt[chain[v - 1]]


def _chain_restrict(C: FiniteCategory, chain, comp):
    """Simplicial action of a monotone map on a composable chain."""
    out = []
    for i in range(len(comp) - 1):
        a, b = comp[i], comp[i + 1]
        if a == b:
            out.append(C.ident[_chain_vertex(C, chain, a)])
        else:
            out.append(C.compose_run(list(chain[a:b])))
    return tuple(out)


def nerve(C: FiniteCategory, n: int = 1) -> Precat:
    """The nerve of a finite category, padded constantly to dimension ``n``.

    Level 0 holds the objects; a level whose first entry is ``p`` holds the
    composable p-chains, independently of the remaining directions.
    """
    if n < 1:
        raise ConstructionError("nerve needs ambient dimension >= 1")

    def eval_fn(M: ThetaObject):
        if M.length == 0:
            return C.objects
        return C.chains(M.entries[0])

    def act_fn(f: ThetaMorphism, cell):
        src_len = f.source.length
        tgt_len = f.target.length
        comp0 = f.components[0]
        if tgt_len == 0:
            x = cell
        elif len(set(comp0)) == 1:
            x = _chain_vertex(C, cell, comp0[0])
        else:
            return _chain_restrict(C, cell, comp0)
        if src_len == 0:
            return x
        return (C.ident[x],) * f.source.entries[0]

    return Precat(n, eval_fn, act_fn, name=f"N({C.name})@{n}")


def nerve_functor_map(Cs: FiniteCategory, Ct: FiniteCategory, ob_map, ar_map,
                      n: int = 1, name="N(F)") -> PrecatMap:
    """Nerve of a functor given by its object and arrow assignments."""
    dom, cod = nerve(Cs, n), nerve(Ct, n)

    def apply(M, cell):
        if M.length == 0:
            return ob_map[cell]
        return tuple(ar_map[a] for a in cell)

    return PrecatMap(dom, cod, apply, name=name)


# ---------------------------------------------------------------------------
# the edge complex on a simplex of morphism objects
# ---------------------------------------------------------------------------

def _edge_indices(i: int, j: int, legacy: bool) -> range:
    """Indices of the factors labelling the edge from vertex i to vertex j.

    The corrected indexing runs over i+1..j.  The legacy variant (kept only
    as a negative control) starts one index too early, clamped at 1; the
    conventions for a collapsed edge (no factors) are shared.
    """
    if i == j:
        return range(0)
    if legacy:
        return range(max(i, 1), j + 1)
    return range(i + 1, j + 1)


def upsilon(inputs: list[Precat], legacy: bool = False, name: str | None = None) -> Precat:
    """The universal precat on ``k+1`` ordered objects with the ``i``-th input
    as morphism object along edge ``i-1 -> i``.

    Level 0 is ``{0..k}``.  A cell of a level ``(p, tail)`` is a monotone
    vertex path ``y: [p] -> [k]`` together with one cell of each input
    indexed strictly between the endpoints, evaluated at ``tail``; the edge
    from ``i`` to ``j`` carries the product of the inputs ``i+1 .. j``.
    """
    if not inputs:
        raise InvalidArgumentError("need at least one morphism object")
    m = inputs[0].n
    if any(E.n != m for E in inputs):
        raise InvalidArgumentError("all morphism objects must share one dimension")
    k = len(inputs)
    n = m + 1
    ups_name = name or ("U(" + ",".join(E.name for E in inputs) + ")")

    def covered(y):
        return _edge_indices(y[0], y[-1], legacy)

    def higher_cells(M: ThetaObject):
        p = M.entries[0]
        tail = object_of(m, M.entries[1:])
        for y in itertools.combinations_with_replacement(range(k + 1), p + 1):
            pools = [inputs[i - 1].cells(tail) for i in covered(y)]
            for values in itertools.product(*pools):
                yield (y, values)

    def eval_fn(M: ThetaObject):
        return range(k + 1) if M.length == 0 else higher_cells(M)

    def degenerate(M: ThetaObject, o: int):
        if M.length == 0:
            return o
        return ((o,) * (M.entries[0] + 1), ())

    def act_fn(f: ThetaMorphism, cell):
        if f.target.length == 0:
            return degenerate(f.source, cell)
        y, values = cell
        comp0 = f.components[0]
        if len(set(comp0)) == 1:
            return degenerate(f.source, y[comp0[0]])
        new_y = tuple(y[v] for v in comp0)
        g = tail_morphism(f)
        old_index = {i: values[pos] for pos, i in enumerate(covered(y))}
        new_values = tuple(inputs[i - 1].act(g, old_index[i]) for i in covered(new_y))
        return (new_y, new_values)

    return Precat(n, eval_fn, act_fn, name=ups_name)


def upsilon_map(maps: list[PrecatMap], legacy: bool = False,
                name: str | None = None) -> PrecatMap:
    """Functoriality of the edge complex in its morphism objects."""
    dom = upsilon([f.domain for f in maps], legacy=legacy)
    cod = upsilon([f.codomain for f in maps], legacy=legacy)
    m = dom.n - 1

    def apply(M, cell):
        if M.length == 0:
            return cell
        y, values = cell
        tail = object_of(m, M.entries[1:])
        idx = list(_edge_indices(y[0], y[-1], legacy))
        return (y, tuple(maps[i - 1].apply(tail, v) for i, v in zip(idx, values)))

    return PrecatMap(dom, cod, apply, name=name or "U(maps)")


def upsilon_face(inputs: list[Precat], which, legacy: bool = False) -> PrecatMap:
    """A principal face inclusion of the edge complex.

    ``which`` is ``"drop_first"``, ``"drop_last"`` or ``("merge", i)`` with
    ``1 <= i <= k-1``; the merged edge carries the product of inputs i, i+1.
    """
    k = len(inputs)
    if k < 2:
        raise InvalidArgumentError("faces need at least two morphism objects")
    cod = upsilon(inputs, legacy=legacy)
    m = inputs[0].n
    if which == "drop_last":
        reduced = inputs[:-1]
        rho = tuple(range(k))
        reindex = {j: (j,) for j in range(1, k)}
        factors = {j: None for j in range(1, k)}
    elif which == "drop_first":
        reduced = inputs[1:]
        rho = tuple(range(1, k + 1))
        reindex = {j: (j + 1,) for j in range(1, k)}
        factors = {j: None for j in range(1, k)}
    elif isinstance(which, tuple) and which[0] == "merge":
        i = which[1]
        if not 1 <= i <= k - 1:
            raise InvalidArgumentError(f"merge position {i} out of range")
        reduced = inputs[:i - 1] + [product(inputs[i - 1], inputs[i])] + inputs[i + 1:]
        rho = tuple(v if v < i else v + 1 for v in range(k))
        reindex = {j: (j,) if j < i else ((i, i + 1) if j == i else (j + 1,))
                   for j in range(1, k)}
        factors = {j: ("pair" if j == i else None) for j in range(1, k)}
    else:
        raise InvalidArgumentError(f"unknown face descriptor {which!r}")
    dom = upsilon(reduced, legacy=legacy)

    def apply(M, cell):
        if M.length == 0:
            return rho[cell]
        y, values = cell
        new_y = tuple(rho[v] for v in y)
        placed = {}
        for pos, j in enumerate(_edge_indices(y[0], y[-1], legacy)):
            targets = reindex[j]
            if factors[j] == "pair":
                placed[targets[0]], placed[targets[1]] = values[pos]
            else:
                placed[targets[0]] = values[pos]
        new_values = tuple(placed[i] for i in _edge_indices(new_y[0], new_y[-1], legacy))
        return (new_y, new_values)

    return PrecatMap(dom, cod, apply, name=f"face:{which}")


# ---------------------------------------------------------------------------
# cells and their boundaries
# ---------------------------------------------------------------------------

@dataclass
class CellData:
    total: Precat
    boundary: Precat
    inclusion: PrecatMap


def cell(i: int, n: int) -> CellData:
    """The ``i``-cell and its boundary in ambient dimension ``n``.

    The 0-cell is the point with empty boundary; each higher cell is the edge
    complex on its predecessor.  ``i = n+1`` is the limit case: the cell
    stays the top cell and its boundary is two copies glued along the old
    boundary, included by folding.
    """
    if not 0 <= i <= n + 1:
        raise InvalidArgumentError(f"cell index {i} out of range for dimension {n}")
    if i == 0:
        total, boundary = point(n), empty(n)
        return CellData(total, boundary,
                        PrecatMap(boundary, total, lambda M, c: c, name="0->pt"))
    if i <= n:
        prev = cell(i - 1, n - 1)
        incl = upsilon_map([prev.inclusion], name=f"dF{i}->F{i}")
        return CellData(incl.codomain, incl.domain, incl)
    top = cell(n, n)
    po = pushout(top.inclusion, top.inclusion, name=f"dF{n + 1}")
    fold = po.induced(presheaf.identity_map(top.total),
                      presheaf.identity_map(top.total), name=f"dF{n + 1}->F{n + 1}")
    return CellData(top.total, po.precat, fold)


# ---------------------------------------------------------------------------
# pointed precats, suspension, free towers, delooping
# ---------------------------------------------------------------------------

@dataclass
class PointedPrecat:
    space: Precat
    base: object

    def __post_init__(self):
        if self.base not in self.space.cells(zero_object(self.space.n)):
            raise InvalidArgumentError(
                f"{self.base!r} is not an object of {self.space.name}")


@dataclass
class SuspensionData:
    precat: Precat
    pushout: PushoutData
    loops: PrecatMap            # input space -> morphism object of the suspension


def suspension(A: PointedPrecat) -> SuspensionData:
    """One-object precat whose morphism object at the only vertex is ``A``:
    the edge complex on ``A`` with the marked-point edge collapsed."""
    n = A.space.n
    incl = point_map(A.space, A.base)
    ua = upsilon_map([incl], name="U(base)")
    po = pushout(ua, terminal_map(ua.domain), name=f"S({A.space.name})")
    sigma_precat = po.precat
    homs = hom_precat(sigma_precat, 1, (_only_object(sigma_precat),) * 2,
                      name="loops")

    def loops_apply(T: ThetaObject, c):
        M = object_of(n + 1, (1,) + T.entries)
        return po.inl.apply(M, ((0, 1), (c,)))

    loops = PrecatMap(A.space, homs, loops_apply, name="A->hom")
    return SuspensionData(sigma_precat, po, loops)


def suspension_interval(A: PointedPrecat) -> Precat:
    """Variant of the suspension gluing in the contractible interval instead
    of the point (no identification between the two is asserted here)."""
    n = A.space.n
    incl = point_map(A.space, A.base)
    ua = upsilon_map([incl], name="U(base)")
    ibar = nerve(FiniteCategory.iso_interval(), n + 1)
    iota = PrecatMap(ua.domain, ibar, _interval_into_iso_interval(ua.domain, ibar),
                     name="I->Ibar")
    return pushout(ua, iota, name=f"S'({A.space.name})").precat


def _interval_into_iso_interval(ups_pt: Precat, ibar: Precat):
    C = FiniteCategory.iso_interval()

    def apply(M, cell):
        if M.length == 0:
            return cell
        y, _ = cell
        arrows = []
        for a, b in zip(y, y[1:]):
            arrows.append(C.ident[a] if a == b else "u")
        return tuple(arrows)

    return apply


def _only_object(P: Precat):
    objs = P.cells(zero_object(P.n))
    if len(objs) != 1:
        raise ConstructionError(f"{P.name} does not have a single object")
    return next(iter(objs))


def sigma_free(k: int, n: int) -> PointedPrecat:
    """The free k-fold monoidal generator: the k-cell with its boundary
    collapsed to the base point."""
    if not 0 <= k <= n:
        raise InvalidArgumentError(f"k={k} out of range for dimension {n}")
    ck = cell(k, n)
    po = pushout(ck.inclusion, terminal_map(ck.boundary), name=f"sigma{k}")
    base = po.inr.apply(zero_object(n), "pt")
    return PointedPrecat(po.precat, base)


def delooping(A: PointedPrecat) -> Precat:
    """The one-object simplicial gadget whose level ``p`` is the wedge of
    ``p`` copies of the input, glued at the base point.

    A non-degenerate cell is (copy index, cell); restriction along the first
    direction keeps copy ``i`` iff the vertex map crosses from below ``i`` to
    ``i`` or beyond, collapses it otherwise.  Built independently of the
    suspension so the two can be compared.
    """
    X, a = A.space, A.base
    n = X.n

    def deg(T: ThetaObject):
        return X.degeneracy(T, a)

    def eval_fn(M: ThetaObject):
        if M.length == 0:
            return ("pt",)
        p = M.entries[0]
        T = object_of(n, M.entries[1:])
        cells = [("wpt",)]
        for i in range(1, p + 1):
            for c in X.cells(T):
                if c != deg(T):
                    cells.append(("w", i, c))
        return cells

    def collapse(M: ThetaObject):
        return "pt" if M.length == 0 else ("wpt",)

    def act_fn(f: ThetaMorphism, cl):
        if f.target.length == 0 or cl == ("wpt",):
            return collapse(f.source)
        comp0 = f.components[0]
        if len(set(comp0)) == 1 or f.source.length == 0:
            return collapse(f.source)
        _, i, c = cl
        slot = None
        for l in range(1, len(comp0)):
            if comp0[l - 1] < i <= comp0[l]:
                slot = l
                break
        if slot is None:
            return ("wpt",)
        g = tail_morphism(f)
        c2 = X.act(g, c)
        T2 = object_of(n, f.source.entries[1:])
        if c2 == deg(T2):
            return ("wpt",)
        return ("w", slot, c2)

    return Precat(n + 1, eval_fn, act_fn, name=f"X({X.name})")


# ---------------------------------------------------------------------------
# the Whitehead operation
# ---------------------------------------------------------------------------

def whitehead(A: Precat, a, k: int) -> tuple[Precat, PrecatMap]:
    """Sub-presheaf of the cells whose restrictions along every morphism from
    a level of length <= k are degeneracies of the base point.

    Every such morphism factors through one whose source entries are bounded
    by the target's, so the quantifier is finite.
    """
    if a not in A.cells(zero_object(A.n)):
        raise InvalidArgumentError(f"{a!r} is not an object of {A.name}")
    if not 0 <= k <= A.n:
        raise InvalidArgumentError(f"k={k} out of range for dimension {A.n}")

    def keep(M: ThetaObject, alpha):
        bound = max(M.entries, default=1)
        for U in theta.window_objects(A.n, bound, k):
            want = A.degeneracy(U, a)
            for u in theta.enumerate_morphisms(U, M):
                if A.act(u, alpha) != want:
                    return False
        return True

    return sub_precat(A, keep, name=f"Wh>{k}({A.name})")


# ---------------------------------------------------------------------------
# corner maps
# ---------------------------------------------------------------------------

@dataclass
class CornerData:
    source: PushoutData        # A x D glued with B x C over A x C
    map: PrecatMap             # corner map into B x D
    target: Precat


def pushout_product(f: PrecatMap, g: PrecatMap) -> CornerData:
    """The corner map ``AxD u BxC -> BxD`` of two maps f: A->B, g: C->D."""
    A, B = f.domain, f.codomain
    C, D = g.domain, g.codomain
    R = product(A, C)
    to_ad = PrecatMap(R, product(A, D), lambda M, c: (c[0], g.apply(M, c[1])),
                      name="idxg")
    to_bc = PrecatMap(R, product(B, C), lambda M, c: (f.apply(M, c[0]), c[1]),
                      name="fxid")
    po = pushout(to_ad, to_bc, name="corner-src")
    BD = product(B, D)
    u = PrecatMap(to_ad.codomain, BD, lambda M, c: (f.apply(M, c[0]), c[1]), name="fx1")
    v = PrecatMap(to_bc.codomain, BD, lambda M, c: (c[0], g.apply(M, c[1])), name="1xg")
    return CornerData(po, po.induced(u, v, name="corner"), BD)


def q_gluing(f: PrecatMap, g: PrecatMap, legacy: bool = False) -> PushoutData:
    """Two triangles glued along their shared face: the edge complexes on
    (A,D) and (B,C) glued over the one on (A,C)."""
    A, B = f.domain, f.codomain
    C, D = g.domain, g.codomain
    mid_to_ad = upsilon_map([presheaf.identity_map(A), g], legacy=legacy)
    mid_to_bc_raw = upsilon_map([f, presheaf.identity_map(C)], legacy=legacy)
    mid_to_bc = PrecatMap(mid_to_ad.domain, mid_to_bc_raw.codomain,
                          mid_to_bc_raw.apply, name=mid_to_bc_raw.name)
    return pushout(mid_to_ad, mid_to_bc, name="Q")


def square_decomposition(B: Precat, D: Precat, legacy: bool = False) -> tuple[Precat, Precat]:
    """The product of two edge complexes against the two-triangle gluing
    along the diagonal edge complex on the product."""
    lhs = product(upsilon([B], legacy=legacy), upsilon([D], legacy=legacy))
    merge_bd = upsilon_face([B, D], ("merge", 1), legacy=legacy)
    merge_db = upsilon_face([D, B], ("merge", 1), legacy=legacy)
    swap = swap_map(B, D)
    swap_to_db = PrecatMap(merge_bd.domain, merge_db.domain,
                           upsilon_map([swap], legacy=legacy).apply, name="U(swap)")
    diag_to_db = PrecatMap(merge_bd.domain, merge_db.codomain,
                           swap_to_db.then(merge_db).apply, name="diag")
    rhs = pushout(merge_bd, diag_to_db, name="two-triangles").precat
    return lhs, rhs


def wedge01(X: Precat, Y: Precat, name: str = "wedge") -> PushoutData:
    """Glue vertex 1 of ``X`` to vertex 0 of ``Y`` (both one-object levels)."""
    pt = point(X.n)
    at1 = PrecatMap(pt, X, lambda M, c: X.degeneracy(M, _vertex_object(X, 1)),
                    name="at1")
    at0 = PrecatMap(pt, Y, lambda M, c: Y.degeneracy(M, _vertex_object(Y, 0)),
                    name="at0")
    return pushout(at1, at0, name=name)


def _vertex_object(P: Precat, o):
    objs = P.cells(zero_object(P.n))
    if o not in objs:
        raise ConstructionError(f"{P.name} has no object {o!r}")
    return o


# ---------------------------------------------------------------------------
# monoidal towers
# ---------------------------------------------------------------------------

@dataclass
class MonoidObject:
    """A monoid in precats: carrier with multiplication and unit maps."""

    carrier: Precat
    mult: PrecatMap            # carrier x carrier -> carrier
    unit: PrecatMap            # point -> carrier
    commutative: bool = False

    def multiply(self, T: ThetaObject, x, y):
        return self.mult.apply(T, (x, y))

    def unit_cell(self, T: ThetaObject):
        return self.unit.apply(T, "pt")

    def law_violations(self, window: Window) -> list:
        out = []
        for T in window.objects(self.carrier.n):
            cells = self.carrier.cells(T)
            e = self.unit_cell(T)
            for x in cells:
                if self.multiply(T, e, x) != x or self.multiply(T, x, e) != x:
                    out.append(("unit", T, x))
            for x in cells:
                for y in cells:
                    for z in cells:
                        if self.multiply(T, self.multiply(T, x, y), z) != \
                           self.multiply(T, x, self.multiply(T, y, z)):
                            out.append(("assoc", T, x, y, z))
                    if self.commutative and \
                       self.multiply(T, x, y) != self.multiply(T, y, x):
                        out.append(("comm", T, x, y))
        return out


def monoid_from_table(elements, op, unit_element, commutative: bool,
                      n: int = 0, name: str = "M") -> MonoidObject:
    carrier = discrete(n, elements)
    carrier.name = name
    mult = PrecatMap(product(carrier, carrier), carrier,
                     lambda M, c: op(c[0], c[1]), name=f"{name}-mult")
    unit = PrecatMap(point(n), carrier, lambda M, c: unit_element, name=f"{name}-unit")
    return MonoidObject(carrier, mult, unit, commutative)


def z2_monoid() -> MonoidObject:
    return monoid_from_table((0, 1), lambda a, b: (a + b) % 2, 0,
                             commutative=True, name="Z2")


def ck_monoidal(mon: MonoidObject, k: int) -> Precat:
    """The k-fold monoidal delooping of a monoid object.

    Levels of length < k are the point; a level ``(p_1..p_k, tail)`` is the
    full grid power ``carrier(tail)^(p_1*...*p_k)``, which is exactly what
    strict comparison-map bijections force.  Restriction multiplies grid
    blocks; two or more directions need the interchange law, hence the
    commutativity requirement for k >= 2.
    """
    if k < 1:
        raise InvalidArgumentError("need k >= 1")
    if k >= 2 and not mon.commutative:
        raise InvalidArgumentError("k >= 2 needs a commutative monoid object")
    A = mon.carrier
    n = A.n + k

    def grid(entries):
        return list(itertools.product(*[range(1, p + 1) for p in entries[:k]]))

    def eval_fn(M: ThetaObject):
        if M.length < k:
            return ("pt",)
        T = object_of(A.n, M.entries[k:])
        pts = grid(M.entries)
        return (tuple(zip(pts, vals))
                for vals in itertools.product(A.cells(T), repeat=len(pts)))

    def unit_grid(M: ThetaObject):
        if M.length < k:
            return "pt"
        T = object_of(A.n, M.entries[k:])
        e = mon.unit_cell(T)
        return tuple((pt, e) for pt in grid(M.entries))

    def act_fn(f: ThetaMorphism, cl):
        comps = f.lift()
        structural = (f.source.length >= k and f.target.length >= k and
                      all(len(set(comps[d])) > 1 for d in range(k)))
        if not structural:
            return unit_grid(f.source)
        T_src = object_of(A.n, f.source.entries[k:])
        T_tgt = object_of(A.n, f.target.entries[k:])
        g = theta.normalize_morphism(T_src, T_tgt, comps[k:])
        old = {pt: A.act(g, v) for pt, v in cl}
        e = mon.unit_cell(T_src)
        out = []
        for pt in grid(f.source.entries):
            blocks = [range(comps[d][pt[d] - 1] + 1, comps[d][pt[d]] + 1)
                      for d in range(k)]
            val = e
            for old_pt in itertools.product(*blocks):
                val = mon.multiply(T_src, val, old[old_pt])
            out.append((pt, val))
        return tuple(out)

    return Precat(n, eval_fn, act_fn, name=f"c^{k}({A.name})")


# ---------------------------------------------------------------------------
# folding a cofibration: double and cylinder decompositions
# ---------------------------------------------------------------------------

@dataclass
class FoldData:
    double: Precat             # two copies of the codomain glued over the domain
    fold: PrecatMap            # codiagonal onto the codomain
    cylinder_corner: CornerData
    caps: Precat               # two end caps glued over the cylinder middle

    def decomposition_agrees(self, window: Window):
        return presheaf.iso_windowed(self.cylinder_corner.source.precat,
                                     self.caps, window)


def claim_fold(i: PrecatMap) -> FoldData:
    """Everything needed to compare the double of a cofibration with its
    cylinder model.

    The cylinder is the product with the contractible interval; the corner
    source of ``i`` against the endpoint inclusion decomposes as two caps
    (codomain at an endpoint, glued over the domain's cylinder) joined along
    the domain's cylinder.
    """
    E, F = i.domain, i.codomain
    n = E.n
    po = pushout(i, i, name="double")
    fold = po.induced(presheaf.identity_map(F), presheaf.identity_map(F),
                      name="fold")
    ibar = nerve(FiniteCategory.iso_interval(), n)
    ends = discrete(n, (0, 1))
    j = PrecatMap(ends, ibar, lambda M, c: c if M.length == 0
                  else (FiniteCategory.iso_interval().ident[c],) * M.entries[0],
                  name="ends")
    corner = pushout_product(i, j)

    e_cyl = product(E, ibar)

    def cap_leg(v):
        return PrecatMap(E, e_cyl,
                         lambda M, c, v=v: (c, ibar.degeneracy(M, v)),
                         name=f"E@{v}")

    cap0 = pushout(PrecatMap(E, F, i.apply, name="i"), cap_leg(0), name="cap0")
    cap1 = pushout(PrecatMap(E, F, i.apply, name="i"), cap_leg(1), name="cap1")
    caps = pushout(PrecatMap(e_cyl, cap0.precat, cap0.inr.apply, name="mid0"),
                   PrecatMap(e_cyl, cap1.precat, cap1.inr.apply, name="mid1"),
                   name="caps")
    return FoldData(po.precat, fold, corner, caps.precat)
