"""Polytopal decompositions of matroid base systems.

A base system may split along one hyperplane (A,a)= into two base
systems, or more generally into several pieces glued facet to facet.
The one-hyperplane test is generic in the rank; the full search and the
five-type classification of connected simple rank-3 matroids run on top
of the rank-3 inclusion machinery.

A piece facet counts as original when its inequality (A,a)<= is
facet-defining for the whole base system; every other piece facet must
be shared, with the reversed inequality and the identical base family,
by exactly one partner piece.
"""

from collections import deque
from dataclasses import dataclass
import itertools

from .errors import (ConstraintError, ContradictionError, ExchangeAxiomError,
                     GroundMismatchError, InconclusiveError, NotConnectedError,
                     NotSimpleError)
from .setfam import LinearConstraint, bits, ksubsets
from .matroid import matroid_from_bases
from .facets import base_facets, is_facet_defining_base
from .rank3 import (InclusionConstraints, check_rank3_input,
                    facet_graph_components, facet_rank2_flats)
from .order import enumerate_included_rank3, iter_included_rank3


# --------------------------------------------------------------- 2-splits

def _half_matroid(ground, fam):
    """The family as a matroid, or None when exchange fails."""
    try:
        return matroid_from_bases(ground, fam)
    except ExchangeAxiomError:
        return None


def _orient_split(m, amask, a, mlow, mup):
    """Report the cut by its larger-support representative; the two pieces
    come back as (lower side, upper side) of the reported constraint."""
    full = m.ground.full_mask
    comp, compb = full & ~amask, m.rank - a
    if (comp.bit_count(), -comp) > (amask.bit_count(), -amask):
        amask, a = comp, compb
        mlow, mup = mup, mlow
    return LinearConstraint(m.ground, amask, "==", a), mlow, mup


def two_decompose(m, check=False):
    """First hyperplane (A,a)= splitting B(m) into two base systems.

    Scans all candidates with 0 < a < rank in (mask, bound) order and
    returns (hyperplane, lower piece, upper piece) for the first one whose
    closed halves are both base systems and whose strict sides are both
    nonempty, else None.  Each half is validated by running the exchange
    axiom on the sub-family itself.  With check=True every candidate also
    compares that definition against the cross-section criterion, the
    tight family alone being a nonempty base system, and raises
    AssertionError on disagreement.
    """
    if not m.is_connected():
        raise NotConnectedError("2-decomposition needs a connected matroid")
    ground = m.ground
    full = ground.full_mask
    bases = list(m.bases)
    for amask in range(1, full):
        for a in range(1, m.rank):
            sizes = [(b & amask).bit_count() for b in bases]
            if not (any(s < a for s in sizes) and any(s > a for s in sizes)):
                continue
            mlow = _half_matroid(ground, [b for b, s in zip(bases, sizes) if s <= a])
            mup = _half_matroid(ground, [b for b, s in zip(bases, sizes) if s >= a])
            hit = mlow is not None and mup is not None
            if check:
                cross = [b for b, s in zip(bases, sizes) if s == a]
                cross_ok = bool(cross) and _half_matroid(ground, cross) is not None
                if cross_ok != hit:
                    raise AssertionError(
                        "split criteria disagree at (%s,%d): halves %s, "
                        "cross-section %s" % (ground.show(amask), a, hit, cross_ok))
            if hit:
                return _orient_split(m, amask, a, mlow, mup)
    return None


def rank3_two_decomposable_by(m, a):
    """Whether (a,2)= splits the base system of a connected simple rank-3
    matroid: the complement keeps two elements, a has rank 3, and every
    facet rank-2 flat meets a in at most one element, lies inside a, or
    fills the ground together with a."""
    check_rank3_input(m)
    amask = m.ground.mask(a)
    full = m.ground.full_mask
    if (full & ~amask).bit_count() < 2 or m.rank_of(amask) != 3:
        return False
    for f in facet_rank2_flats(m):
        if (f & amask).bit_count() <= 1 or not (f & ~amask) or (amask | f) == full:
            continue
        return False
    return True


@dataclass(frozen=True)
class CorollaryWitness:
    """A quick 2-split certificate.

    kind "twins": a pair with identical facet-flat membership whose
    complement keeps rank 3.  kind "triangle": three elements pairwise
    inside no facet flat.  kind "flat-plus-point": a rank-2 flat together
    with a point outside every facet flat meeting it.  hyperplane is the
    certified cut, always in the form (A,2)=; for twins A is the
    complement of the pair.
    """

    kind: str
    sets: tuple
    hyperplane: LinearConstraint

    def show(self):
        g = self.hyperplane.ground
        body = "+".join(g.show(s) for s in self.sets)
        return "%s %s via %s" % (self.kind, body, self.hyperplane)


def rank3_quick_witnesses(m):
    """All certificates found by the three quick patterns, twins first,
    then triangles, then flat-plus-point pairs."""
    check_rank3_input(m)
    ground = m.ground
    full = ground.full_mask
    n = ground.n
    flats2 = facet_rank2_flats(m)
    out = []
    member = [frozenset(f for f in flats2 if f >> i & 1) for i in range(n)]
    for pair in ksubsets(full, 2):
        i, j = bits(pair)
        if member[i] == member[j] and m.rank_of(full & ~pair) == 3:
            out.append(CorollaryWitness(
                "twins", (pair,),
                LinearConstraint(ground, full & ~pair, "==", 2)))
    if n >= 5:
        covered = set()
        for f in flats2:
            covered.update(ksubsets(f, 2))
        for tri in ksubsets(full, 3):
            if all(p not in covered for p in ksubsets(tri, 2)):
                out.append(CorollaryWitness(
                    "triangle", (tri,), LinearConstraint(ground, tri, "==", 2)))
    for fl in m.flats_of_rank(2):
        if (full & ~fl).bit_count() < 3:
            continue
        blocked = fl
        for f in flats2:
            if f & fl:
                blocked |= f
        for i in bits(full & ~blocked):
            out.append(CorollaryWitness(
                "flat-plus-point", (fl, 1 << i),
                LinearConstraint(ground, fl | 1 << i, "==", 2)))
    return out


# ----------------------------------------------------- graphs, partitions

@dataclass(frozen=True)
class FacetGraph:
    """The graph on a2 joining x,y when some facet rank-2 flat contains
    both and meets a1.  Components cover a2, isolated vertices included;
    edges are pair masks."""

    ground: object
    a1: int
    a2: int
    edges: tuple
    components: tuple

    def is_connected(self):
        return len(self.components) == 1

    def show(self):
        g = self.ground
        return "g(%s,%s) edges {%s} components {%s}" % (
            g.show(self.a1), g.show(self.a2),
            ",".join(g.show(e) for e in self.edges),
            ",".join(g.show(c) for c in self.components))


def facet_graph(m, a1, a2):
    """g(a1, a2) of a connected rank-3 matroid; a1 and a2 must be
    disjoint and nonempty."""
    check_rank3_input(m, require_simple=False)
    a1mask = m.ground.mask(a1)
    a2mask = m.ground.mask(a2)
    if a1mask & a2mask:
        raise ConstraintError("probe and vertex sets must be disjoint")
    if not (a1mask and a2mask):
        raise ConstraintError("probe and vertex sets must be nonempty")
    comps, edges = facet_graph_components(m, a1mask, a2mask)
    return FacetGraph(m.ground, a1mask, a2mask, tuple(edges), tuple(comps))


@dataclass(frozen=True)
class ThreePartition:
    """A partition of the ground into three blocks of size >= 2 with no
    facet rank-2 flat meeting all three and all pairwise unions of
    rank 3."""

    ground: object
    parts: tuple

    def show(self):
        return "|".join(self.ground.show(p) for p in self.parts)


def _clique_edges(k):
    return k * (k - 1) // 2


def _min_two_clique_edges(k):
    """Fewest edges of two cliques jointly covering k vertices:
    t(t-1) at k=2t, t*t at k=2t+1."""
    t, odd = divmod(k, 2)
    return t * t if odd else t * (t - 1)


def three_partitions(m):
    """All 3-partitions, canonically ordered.

    Candidate partitions are first pruned by the edge count, the three
    block cliques must carry at least sum of _min_two_clique_edges(|F|)
    over facet rank-2 flats F, and by edge-disjointness of g(Ai,Ak) and
    g(Aj,Ak); both prunes are implied by being a 3-partition, so the
    survivors checked exactly give the full list.
    """
    check_rank3_input(m)
    ground = m.ground
    full = ground.full_mask
    flats2 = facet_rank2_flats(m)
    need = sum(_min_two_clique_edges(f.bit_count()) for f in flats2)
    out = []
    els = list(bits(full))
    rest0 = [e for e in els[1:]]
    for k1 in range(1, len(els) - 3):
        for extra1 in itertools.combinations(rest0, k1):
            a1 = 1 << els[0]
            for e in extra1:
                a1 |= 1 << e
            rem = full & ~a1
            rels = list(bits(rem))
            if len(rels) < 4:
                continue
            for k2 in range(1, len(rels) - 1):
                for extra2 in itertools.combinations(rels[1:], k2):
                    a2 = 1 << rels[0]
                    for e in extra2:
                        a2 |= 1 << e
                    a3 = rem & ~a2
                    if a3.bit_count() < 2:
                        continue
                    parts = (a1, a2, a3)
                    sizes = [p.bit_count() for p in parts]
                    if sum(_clique_edges(s) for s in sizes) < need:
                        continue
                    if any(f & a1 and f & a2 and f & a3 for f in flats2):
                        continue
                    edge_sets = {}
                    disjoint = True
                    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
                        for probe in (i, j):
                            if (probe, k) not in edge_sets:
                                edge_sets[(probe, k)] = set(facet_graph_components(
                                    m, parts[probe], parts[k], flats2)[1])
                        if edge_sets[(i, k)] & edge_sets[(j, k)]:
                            disjoint = False
                            break
                    if not disjoint:
                        continue
                    if any(m.rank_of(parts[i] | parts[j]) != 3
                           for i, j in ((0, 1), (0, 2), (1, 2))):
                        continue
                    out.append(ThreePartition(ground, tuple(sorted(parts))))
    out.sort(key=lambda tp: tp.parts)
    return out


# ------------------------------------------------------------ propagation

def propagate(m, c):
    """Close inclusion constraints under the rank-forcing rules.

    Facet-certified entries of c.require_facet are flats of every
    candidate, so the graph rules apply to them: a certified rank-1 flat
    A forces rank 2 on A|C for each component C of g(A, E-A); a certified
    or promoted rank-2 flat Z forces rank 1 on each non-singleton
    component of g(E-Z, Z).  Plain forced entries only combine:
    overlapping rank-1 sets unite, a rank-1 set overlapping a rank-2 set
    extends it, and two certified rank-2 flats force rank 1 on their
    intersection.  A derived rank-2 set missing only two elements is a
    flat of every connected candidate and is promoted.  Monotone, and a
    fixpoint: rerunning on the output changes nothing.

    Raises ContradictionError when the closure kills every candidate:
    the full ground forced below rank 3, a coloop forced, or a rank-1
    set escaping a certified flat it meets.
    """
    check_rank3_input(m)
    ground = m.ground
    full = ground.full_mask
    flats2m = facet_rank2_flats(m)
    ones = set(c.forced_rank1)
    twos = set(c.forced_rank2)
    flat1 = {rc.support for rc in c.require_facet if rc.bound == 1}
    flat2 = {rc.support for rc in c.require_facet if rc.bound == 2}
    ones |= flat1
    twos |= flat2

    while True:
        before = (frozenset(ones), frozenset(twos), frozenset(flat2))
        if full in ones or full in twos:
            raise ContradictionError("the full ground is forced below rank 3")
        for t in sorted(twos):
            left = (full & ~t).bit_count()
            if left == 1:
                raise ContradictionError(
                    "rank-2 set %s forces a coloop" % ground.show(t))
            if left == 2:
                flat2.add(t)
        # a rank-1 set meeting a flat lies inside it
        for z in flat2:
            for a in ones:
                if a & z and a & ~z:
                    raise ContradictionError(
                        "rank-1 set %s escapes the rank-2 flat %s"
                        % (ground.show(a), ground.show(z)))
        merged = []
        for a in sorted(ones):
            for i, b in enumerate(merged):
                if a & b:
                    merged[i] = a | b
                    break
            else:
                merged.append(a)
        while True:
            again = []
            for a in merged:
                for i, b in enumerate(again):
                    if a & b:
                        again[i] = a | b
                        break
                else:
                    again.append(a)
            if len(again) == len(merged):
                merged = again
                break
            merged = again
        ones = set(merged)
        for f in flat1:
            cls = next(a for a in ones if a & f)
            if cls != f:
                raise ContradictionError(
                    "rank-1 set %s escapes the rank-1 flat %s"
                    % (ground.show(cls), ground.show(f)))
        for a in sorted(ones):
            for t in sorted(twos):
                if a & t:
                    twos.add(a | t)
        for z1, z2 in itertools.combinations(sorted(flat2), 2):
            if z1 & z2:
                ones.add(z1 & z2)
        for f in sorted(flat1):
            comps, _ = facet_graph_components(m, f, full & ~f, flats2m)
            for comp in comps:
                twos.add(f | comp)
        for z in sorted(flat2):
            comps, _ = facet_graph_components(m, full & ~z, z, flats2m)
            for comp in comps:
                if comp.bit_count() >= 2:
                    ones.add(comp)
        if (frozenset(ones), frozenset(twos), frozenset(flat2)) == before:
            break
    return InclusionConstraints(tuple(sorted(ones)), tuple(sorted(twos)),
                                c.forbidden, c.require_facet)


# --------------------------------------------------- decomposition proper

@dataclass(frozen=True)
class Decomposition:
    """A verified covering of B(whole) by piece base systems.

    gluing holds ((i, j), (A,a)=) per piece pair with piece i on the <=
    side; facet_pairs lists the pairs glued along a common facet.
    """

    whole: object
    pieces: tuple
    gluing: tuple
    facet_pairs: tuple

    def show(self):
        lines = ["%d pieces" % len(self.pieces)]
        for k, p in enumerate(self.pieces):
            lines.append("  piece %d: %d bases" % (k, len(p.bases)))
        lines.append("  facet pairs: %s" % (
            " ".join("%d%d" % pr for pr in self.facet_pairs) or "none"))
        return "\n".join(lines)


@dataclass(frozen=True)
class DecompositionReport:
    """First-failure report over the four decomposition conditions:
    (a) the piece families cover the whole family exactly, (b) every
    piece keeps the component partition, (c) piece pairs intersect in a
    proper face of both and admit a separating hyperplane, (d) every
    piece facet is original or shared, reversed, with exactly one
    partner."""

    ok: bool
    failed: str | None
    detail: str
    separators: tuple = ()
    facet_pairs: tuple = ()

    def __bool__(self):
        return self.ok


def _supporting_face(bases, amask):
    mx = max((b & amask).bit_count() for b in bases)
    return frozenset(b for b in bases if (b & amask).bit_count() == mx)


def _face_by_levels(piece, target):
    """Exact face test: the faces of a base polytope are the greedy
    maximizer families over ordered partitions of the ground."""
    full = piece.ground.full_mask
    seen = set()

    def rec(cands, remaining):
        if cands == target:
            return True
        if not remaining or not (target <= cands) or (cands, remaining) in seen:
            return False
        seen.add((cands, remaining))
        sub = remaining
        while True:
            sub = (sub - 1) & remaining
            level = remaining & ~sub
            mx = max((b & level).bit_count() for b in cands)
            nxt = frozenset(b for b in cands if (b & level).bit_count() == mx)
            if rec(nxt, remaining & ~level):
                return True
            if sub == 0:
                return False

    return rec(frozenset(piece.bases), full)


def _is_proper_face(piece, fam):
    """Whether fam is a proper face of the piece's base polytope; the
    empty family counts as one."""
    bases = frozenset(piece.bases)
    if not fam:
        return True
    if fam == bases:
        return False
    full = piece.ground.full_mask
    for amask in range(1, full + 1):
        if _supporting_face(bases, amask) == fam:
            return True
    return _face_by_levels(piece, frozenset(fam))


def _separating_hyperplane(ground, ileft, iright):
    """First (A,a)= putting ileft on the <= side and iright on the >=
    side, in (mask, bound) order."""
    full = ground.full_mask
    for amask in range(1, full):
        mx = max((b & amask).bit_count() for b in ileft)
        mn = min((b & amask).bit_count() for b in iright)
        if mx <= mn:
            return LinearConstraint(ground, amask, "==", mx)
    return None


def _reversed_facet_face(piece, bases, fmask, bound):
    """The face of the piece at (fmask,bound)>= when that inequality is
    facet-defining for it, else None."""
    full = piece.ground.full_mask
    comp = full & ~fmask
    if piece.rank_of(comp) != piece.rank - bound:
        return None
    if not is_facet_defining_base(piece, comp).facet_of_base:
        return None
    return frozenset(b for b in bases if (b & fmask).bit_count() == bound)


def _is_original_facet(m, fmask, bound):
    return (m.rank_of(fmask) == bound
            and is_facet_defining_base(m, fmask).facet_of_base)


def verify_decomposition(m, pieces):
    """Check the four decomposition conditions, reporting the first
    failure; on success the report carries one separating hyperplane per
    piece pair and the pairs sharing a facet."""
    pieces = list(pieces)
    if len(pieces) < 2:
        raise ConstraintError("a decomposition needs at least two pieces")
    for p in pieces:
        if p.ground != m.ground:
            raise GroundMismatchError("piece ground differs from the whole")
    if not m.is_connected():
        raise NotConnectedError("decomposition checking needs a connected whole")
    fams = [frozenset(p.bases) for p in pieces]
    whole = frozenset(m.bases)
    union = frozenset().union(*fams)
    if union != whole:
        return DecompositionReport(
            False, "(a)", "piece union has %d of %d bases%s" % (
                len(union & whole), len(whole),
                "" if union <= whole else " plus %d foreign" % len(union - whole)))
    mcomps = sorted(m.connected_components())
    for k, p in enumerate(pieces):
        if sorted(p.connected_components()) != mcomps:
            return DecompositionReport(
                False, "(b)", "piece %d changes the component partition" % k)
    seps = []
    for i, j in itertools.combinations(range(len(pieces)), 2):
        shared = fams[i] & fams[j]
        for k in (i, j):
            if not _is_proper_face(pieces[k], shared):
                return DecompositionReport(
                    False, "(c)",
                    "pieces %d and %d meet in a non-face of piece %d" % (i, j, k))
        sep = _separating_hyperplane(m.ground, fams[i], fams[j])
        if sep is None:
            return DecompositionReport(
                False, "(c)", "no hyperplane separates pieces %d and %d" % (i, j))
        seps.append(((i, j), sep))
    pairs = set()
    for i, p in enumerate(pieces):
        for rep in base_facets(p):
            fmask, bound = rep.flat.mask, rep.rank_at_flat
            if _is_original_facet(m, fmask, bound):
                continue
            tight = frozenset(b for b in fams[i]
                              if (b & fmask).bit_count() == bound)
            partners = [j for j in range(len(pieces)) if j != i
                        and _reversed_facet_face(pieces[j], fams[j], fmask,
                                                 bound) == tight]
            if len(partners) != 1:
                return DecompositionReport(
                    False, "(d)",
                    "facet (%s,%d) of piece %d has %d reversed partners"
                    % (m.ground.show(fmask), bound, i, len(partners)))
            pairs.add((min(i, partners[0]), max(i, partners[0])))
    return DecompositionReport(True, None, "all four conditions hold",
                               tuple(seps), tuple(sorted(pairs)))


def _build_decomposition(m, pieces):
    plist = sorted(pieces, key=lambda p: p.bases.masks)
    rep = verify_decomposition(m, plist)
    if not rep.ok:
        return None
    return Decomposition(m, tuple(plist), rep.separators, rep.facet_pairs)


def find_decomposition_rank3(m, max_pieces=16):
    """Search for a decomposition of a connected simple rank-3 base
    system.

    A successful one-hyperplane split is returned directly.  Otherwise
    candidate pieces are the properly included connected base systems;
    any piece of any decomposition carries, for some 3-partition
    {A1,A2,A3} and orientation, both (A1,1)<= and (A1|A2,2)<= as
    non-original facets, so those pieces seed the search.  Piece sets
    grow by adding, for each facet still unmatched, a piece carrying the
    same face reversed.  Among the piece sets with every facet matched
    and every base covered, the one minimizing (piece count, sorted base
    families) that passes verification is returned, so the result does
    not depend on seed order.  Returns None when the search space is
    exhausted; raises InconclusiveError if a branch would exceed
    max_pieces, leaving the verdict open.
    """
    check_rank3_input(m)
    td = two_decompose(m)
    if td is not None:
        dec = _build_decomposition(m, [td[1], td[2]])
        if dec is not None:
            return dec
    pool = enumerate_included_rank3(m)
    if not pool:
        return None
    fams = [frozenset(p.bases) for p in pool]
    nonorig = []
    for p, fam in zip(pool, fams):
        lst = []
        for rep in base_facets(p):
            fmask, bound = rep.flat.mask, rep.rank_at_flat
            if _is_original_facet(m, fmask, bound):
                continue
            tight = frozenset(b for b in fam
                              if (b & fmask).bit_count() == bound)
            lst.append((fmask, bound, tight))
        nonorig.append(tuple(lst))
    partners = {}
    for qi in range(len(pool)):
        for fmask, bound, tight in nonorig[qi]:
            partners[(qi, fmask, bound)] = tuple(
                qj for qj in range(len(pool)) if qj != qi
                and _reversed_facet_face(pool[qj], fams[qj], fmask,
                                         bound) == tight)
    whole = frozenset(m.bases)
    seeds = []
    for tp in three_partitions(m):
        for ai, aj in itertools.permutations(tp.parts, 2):
            for qi in range(len(pool)):
                keys = {(f, b) for f, b, _ in nonorig[qi]}
                if (ai, 1) in keys and (ai | aj, 2) in keys:
                    s = frozenset((qi,))
                    if s not in seeds:
                        seeds.append(s)
    seen = set()
    closed = []
    inconclusive = False
    for seed in seeds:
        queue = deque([seed])
        while queue:
            s = queue.popleft()
            if s in seen:
                continue
            seen.add(s)
            open_facet = None
            for qi in sorted(s):
                for fmask, bound, _ in nonorig[qi]:
                    if not any(qj in s for qj in partners[(qi, fmask, bound)]):
                        open_facet = (qi, fmask, bound)
                        break
                if open_facet:
                    break
            if open_facet is None:
                if frozenset().union(*(fams[qi] for qi in s)) == whole:
                    closed.append(s)
                continue
            if len(s) >= max_pieces:
                inconclusive = True
                continue
            for qj in partners[open_facet]:
                nxt = s | {qj}
                if nxt not in seen:
                    queue.append(nxt)
    closed.sort(key=lambda s: (len(s), sorted(tuple(sorted(fams[qi]))
                                              for qi in s)))
    for s in closed:
        dec = _build_decomposition(m, [pool[qi] for qi in sorted(s)])
        if dec is not None:
            return dec
    if inconclusive:
        raise InconclusiveError(
            "no decomposition within %d pieces; larger ones not excluded"
            % max_pieces)
    return None


# ---------------------------------------------------------- classification

CLASS_LABELS = {
    "a": "binary",
    "b": "minimal non-binary",
    "c": "non-minimal, no decomposition",
    "d": "decomposable, not 2-decomposable",
    "e": "2-decomposable",
}


@dataclass(frozen=True)
class MatroidClass:
    """One of the five mutually exclusive types, with checkable evidence:
    a four-point-line minor is absent for kind a, kind e carries the
    2-piece decomposition, kind d a longer one, kind c an included base
    system, kind b nothing, being weak-map minimal."""

    kind: str
    label: str
    witness: object = None

    def show(self):
        return "(%s) %s" % (self.kind, self.label)


def classify(m, max_pieces=16):
    """Five-type verdict for a connected simple matroid.

    Binary and 2-split tests are rank-independent; separating the
    remaining kinds needs the rank-3 inclusion search, so other ranks
    raise InconclusiveError past those two tests.  Non-simple or
    disconnected input is rejected: simplify, or classify per component.
    """
    if not m.is_connected():
        raise NotConnectedError("classification needs a connected matroid")
    if m.loops() or any(c.bit_count() > 1 for c in m.parallel_classes()):
        raise NotSimpleError("simplify the matroid first")
    if m.find_u24_minor() is None:
        return MatroidClass("a", CLASS_LABELS["a"])
    td = two_decompose(m)
    if td is not None:
        dec = _build_decomposition(m, [td[1], td[2]])
        return MatroidClass("e", CLASS_LABELS["e"], dec)
    if m.rank != 3:
        raise InconclusiveError(
            "non-binary, not 2-decomposable: rank-%d matroids are beyond "
            "the inclusion search" % m.rank)
    dec = find_decomposition_rank3(m, max_pieces)
    if dec is not None:
        return MatroidClass("d", CLASS_LABELS["d"], dec)
    inc = next(iter(iter_included_rank3(m)), None)
    if inc is not None:
        return MatroidClass("c", CLASS_LABELS["c"], inc)
    return MatroidClass("b", CLASS_LABELS["b"])
