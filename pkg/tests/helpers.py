"""Independent oracles for the test suite.

Nothing here goes through the package's morphism normal forms: the oracle
presheaves act on *raw* componentwise lifts between zero-padded objects, so
they can adjudicate which lifts the site quotient must identify.  Chains of
posets are stored in vertex form (monotone tuples), making simplicial
actions plain precomposition.
"""

from __future__ import annotations

import itertools

from precats import FiniteCategory


def monotone_tuples(a: int, b: int):
    """All monotone maps [a] -> [b] as image tuples (brute force)."""
    return list(itertools.combinations_with_replacement(range(b + 1), a + 1))


def raw_lifts(src_padded, tgt_padded):
    """All componentwise monotone lifts between two padded objects."""
    pools = [monotone_tuples(a, b) for a, b in zip(src_padded, tgt_padded)]
    return list(itertools.product(*pools))


class OraclePosetNerve:
    """Constancy presheaf sensitive to the first direction only.

    Levels are chains (monotone vertex tuples) of a poset 0 < ... < top with
    the first padded entry as chain length; the action precomposes with the
    first raw component.
    """

    def __init__(self, top: int):
        self.top = top
        self.name = f"nerve<={top}"

    def levels(self, padded):
        return monotone_tuples(padded[0], self.top)

    def act_raw(self, lift, src_padded, tgt_padded, cell):
        comp0 = lift[0]
        return tuple(cell[v] for v in comp0)


class OracleEnrichedNerve:
    """Constancy presheaf sensitive to the first two directions.

    Levels over padded ``(p, q, ...)`` are p-tuples of chains of the
    one-arrow poset at length q.  The second direction acts on each chain;
    the first direction regroups with pointwise-max composition, empty
    blocks filling with the all-zero chain.
    """

    name = "enriched-nerve"

    def levels(self, padded):
        p, q = padded[0], padded[1]
        return [tuple(ch) for ch in
                itertools.product(monotone_tuples(q, 1), repeat=p)]

    def act_raw(self, lift, src_padded, tgt_padded, cell):
        comp0, comp1 = lift[0], lift[1]
        moved = [tuple(w[v] for v in comp1) for w in cell]
        unit = (0,) * (src_padded[1] + 1)
        out = []
        for j in range(len(comp0) - 1):
            block = moved[comp0[j]:comp0[j + 1]]
            acc = unit
            for w in block:
                acc = tuple(max(x, y) for x, y in zip(acc, w))
            out.append(acc)
        return tuple(out)


def oracle_family(n: int):
    if n == 1:
        return [OraclePosetNerve(1), OraclePosetNerve(2)]
    if n == 2:
        return [OraclePosetNerve(1), OraclePosetNerve(2), OracleEnrichedNerve()]
    raise ValueError("oracle family is defined for dimensions 1 and 2")


def lifts_act_equal(n: int, src_padded, tgt_padded, lift1, lift2) -> bool:
    """Oracle verdict: do two raw lifts act identically on every oracle
    presheaf at every cell?"""
    for oracle in oracle_family(n):
        for cell in oracle.levels(tgt_padded):
            if oracle.act_raw(lift1, src_padded, tgt_padded, cell) != \
               oracle.act_raw(lift2, src_padded, tgt_padded, cell):
                return False
    return True


def raw_compose(lift_f, lift_g):
    """Componentwise composite f-after-g of raw lifts."""
    return tuple(tuple(fc[v] for v in gc) for fc, gc in zip(lift_f, lift_g))


# ---------------------------------------------------------------------------
# exhaustive small-category stream
# ---------------------------------------------------------------------------

def _candidate_tables(objects, arrows, src, tgt, ident):
    """Backtrack over composites of non-identity composable pairs."""
    nonid = [a for a in arrows if a not in ident.values()]
    pairs = [(a, b) for a in nonid for b in nonid if tgt[a] == src[b]]
    slots = {}
    for a, b in pairs:
        slots[(a, b)] = [c for c in arrows
                         if src[c] == src[a] and tgt[c] == tgt[b]]
    if any(not v for v in slots.values()):
        return
    keys = sorted(slots, key=repr)
    for choice in itertools.product(*(slots[k] for k in keys)):
        table = dict(zip(keys, choice))
        for a in arrows:
            table[(ident[src[a]], a)] = a
            table[(a, ident[tgt[a]])] = a
        yield table


def enumerate_small_categories(limit: int = 10, max_objects: int = 3,
                               max_nonid: int = 2):
    """First ``limit`` categories of an exhaustive bounded enumeration,
    deduplicated up to isomorphism, in a deterministic order."""
    found = []
    for n_arr in range(0, max_nonid + 1):
        for n_obj in range(1, max_objects + 1):
            objects = tuple(range(n_obj))
            ident = {x: ("id", x) for x in objects}
            gens = tuple(("g", i) for i in range(n_arr))
            for ends in itertools.product(
                    itertools.product(objects, repeat=2), repeat=n_arr):
                arrows = tuple(ident.values()) + gens
                src = {a: a[1] for a in ident.values()}
                tgt = dict(src)
                for g, (s, t) in zip(gens, ends):
                    src[g], tgt[g] = s, t
                for table in _candidate_tables(objects, arrows, src, tgt, ident):
                    try:
                        cat = FiniteCategory(objects, arrows, src, tgt, ident,
                                             table, name=f"enum{len(found)}")
                    except Exception:
                        continue
                    if any(categories_isomorphic(cat, old) for old in found):
                        continue
                    found.append(cat)
                    if len(found) >= limit:
                        return found
    return found


def categories_isomorphic(C: FiniteCategory, D: FiniteCategory) -> bool:
    """Brute-force isomorphism of finite categories."""
    if len(C.objects) != len(D.objects) or len(C.arrows) != len(D.arrows):
        return False

    def hom(cat, x, y):
        return [a for a in cat.arrows if cat.src[a] == x and cat.tgt[a] == y]

    for obj_map in itertools.permutations(D.objects):
        phi = dict(zip(C.objects, obj_map))
        homs = {}
        ok = True
        for x in C.objects:
            for y in C.objects:
                hc, hd = hom(C, x, y), hom(D, phi[x], phi[y])
                if len(hc) != len(hd):
                    ok = False
                    break
                homs[(x, y)] = (hc, hd)
            if not ok:
                break
        if not ok:
            continue
        pools = sorted(homs.values(), key=lambda v: len(v[0]))
        keys = [hc for hc, _ in pools]

        def search(idx, amap):
            if idx == len(pools):
                for a in C.arrows:
                    for b in C.arrows:
                        if C.tgt[a] == C.src[b] and \
                           amap[C.table[(a, b)]] != D.table[(amap[a], amap[b])]:
                            return False
                return all(amap[C.ident[x]] == D.ident[phi[x]] for x in C.objects)
            hc, hd = pools[idx]
            for perm in itertools.permutations(hd):
                amap.update(zip(hc, perm))
                if search(idx + 1, amap):
                    return True
            return False

        if search(0, {}):
            return True
    return False


# ---------------------------------------------------------------------------
# independent grouped edge complex (dual route for the central construction)
# ---------------------------------------------------------------------------

def grouped_upsilon(inputs):
    """Eager second implementation of the edge complex for cross-checks.

    Cells carry one *grouped* value per step of the vertex path (a tuple of
    input cells spanning that step), instead of one flat value per index.
    The action regroups explicitly, so any mismatch with the flat-indexed
    implementation would surface as a failed windowed isomorphism.
    """
    from precats import Precat, object_of
    from precats.theta import tail_morphism
    import itertools as it

    k = len(inputs)
    m = inputs[0].n

    def edge_pool(i, j, tail):
        # the product carried by the edge i -> j, as explicit tuples
        return [tuple(v) for v in
                it.product(*[inputs[t - 1].cells(tail) for t in range(i + 1, j + 1)])]

    def eval_fn(M):
        if M.length == 0:
            return range(k + 1)
        p = M.entries[0]
        tail = object_of(m, M.entries[1:])
        out = []
        for y in it.combinations_with_replacement(range(k + 1), p + 1):
            pools = [edge_pool(y[l], y[l + 1], tail) for l in range(p)]
            for groups in it.product(*pools):
                out.append((y, groups))
        return out

    def degenerate(M, o):
        if M.length == 0:
            return o
        p = M.entries[0]
        return ((o,) * (p + 1), ((),) * p)

    def act_fn(f, cell):
        if f.target.length == 0:
            return degenerate(f.source, cell)
        y, groups = cell
        comp0 = f.components[0]
        if len(set(comp0)) == 1:
            return degenerate(f.source, y[comp0[0]])
        g = tail_morphism(f)
        flat = {}
        for l, group in enumerate(groups):
            for offset, t in enumerate(range(y[l] + 1, y[l + 1] + 1)):
                flat[t] = inputs[t - 1].act(g, group[offset])
        new_y = tuple(y[v] for v in comp0)
        new_groups = tuple(
            tuple(flat[t] for t in range(new_y[l] + 1, new_y[l + 1] + 1))
            for l in range(len(new_y) - 1))
        return (new_y, new_groups)

    return Precat(m + 1, eval_fn, act_fn, name="grouped-edge-complex")
