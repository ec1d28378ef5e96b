"""Rank-3 normal form and the constrained search for included base systems.

A loopless rank-3 matroid is determined by its parallel classes together
with its long lines, meaning the rank-2 flats that span at least three
classes.  A 3-set is dependent exactly when it meets some class twice or
lies inside a line.  Searching over (classes, lines) states instead of
raw base families is what keeps exhaustive inclusion questions tractable
at |E| = 11.
"""

from dataclasses import dataclass, field

from .errors import (ConstraintError, LoopError, NotConnectedError,
                     NotSimpleError, RankError)
from .setfam import GroundSet, LinearConstraint, bits, ksubsets
from .matroid import Matroid, matroid_from_bases
from .facets import is_facet_defining_base


def check_rank3_input(m, require_simple=True, require_connected=True):
    """Entry gate for the rank-3 machinery: typed errors over silence."""
    if len(m.ground) < 4 or not 1 <= m.rank <= len(m.ground) - 1:
        raise RankError("rank-3 machinery needs |E| >= 4 and a proper rank")
    if m.rank != 3:
        raise RankError("expected rank 3, got %d" % m.rank)
    if require_connected and not m.is_connected():
        raise NotConnectedError("input must be connected")
    if require_simple and (m.loops() or any(
            c.bit_count() > 1 for c in m.parallel_classes())):
        raise NotSimpleError("input must be simple")


def facet_rank2_flats(m):
    """Rank-2 flats of m whose inequality (F,2)<= is facet-defining.

    For a connected simple rank-3 matroid these are exactly the rank-2
    flats with at least 3 elements; computed honestly so that nonsimple
    inputs are handled too.
    """
    out = []
    for f in m.flats_of_rank(2):
        if is_facet_defining_base(m, f).facet_of_base:
            out.append(f)
    return out


def facet_graph_components(m, a1mask, a2mask, flats2=None):
    """Components of the graph on a2 joining x,y when some facet-defining
    rank-2 flat contains both and meets a1.  Returns (components, edges),
    components as masks covering all of a2 (isolated vertices included),
    edges as pair masks."""
    if flats2 is None:
        flats2 = facet_rank2_flats(m)
    edges = set()
    for f in flats2:
        if not (f & a1mask):
            continue
        inside = f & a2mask
        for pair in ksubsets(inside, 2):
            edges.add(pair)
    # union-find over the vertex bits
    parent = {}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in bits(a2mask):
        parent[i] = i
    for pair in edges:
        i, j = bits(pair)
        parent[find(i)] = find(j)
    comps = {}
    for i in bits(a2mask):
        comps.setdefault(find(i), 0)
        comps[find(i)] |= 1 << i
    return sorted(comps.values()), sorted(edges)


@dataclass(frozen=True)
class Rank3Profile:
    """Parallel classes plus long lines of a loopless rank-3 matroid.

    classes partition the support; long_lines are the rank-2 flats
    spanning >= 3 classes, pairwise sharing at most one class.  Every
    unlisted pair of classes spans a line of its own.
    """

    ground: GroundSet
    classes: tuple
    long_lines: tuple

    def key(self):
        return (self.classes, self.long_lines)

    def support(self):
        mask = 0
        for c in self.classes:
            mask |= c
        return mask

    def dependent_triples(self):
        """Masks of the 3-subsets of the support that are dependent."""
        cls_of = _class_lookup(self.classes)
        out = set()
        for t in ksubsets(self.support(), 3):
            if _triple_dependent(t, cls_of, self.long_lines):
                out.add(t)
        return frozenset(out)

    def matroid(self):
        """Reconstruct the matroid; elements outside the support are loops."""
        cls_of = _class_lookup(self.classes)
        bases = [t for t in ksubsets(self.support(), 3)
                 if not _triple_dependent(t, cls_of, self.long_lines)]
        return matroid_from_bases(self.ground, bases)

    def show(self):
        cl = ",".join("{%s}" % ",".join(self.ground.labels_of(c))
                      for c in self.classes)
        ln = ",".join("{%s}" % ",".join(self.ground.labels_of(l))
                      for l in self.long_lines)
        return "classes %s lines %s" % (cl, ln or "-")


def _class_lookup(classes):
    cls_of = {}
    for c in classes:
        for i in bits(c):
            cls_of[i] = c
    return cls_of


def _triple_dependent(t, cls_of, lines):
    i, j, k = bits(t)
    ci, cj, ck = cls_of[i], cls_of[j], cls_of[k]
    if ci == cj or ci == ck or cj == ck:
        return True
    for l in lines:
        if t & ~l == 0:
            return True
    return False


def rank3_profile(m):
    """Normal form of a loopless rank-3 matroid."""
    if m.rank != 3:
        raise RankError("profile requires rank 3, got %d" % m.rank)
    if m.loops():
        raise LoopError("profile requires a loopless matroid")
    classes = tuple(sorted(m.parallel_classes()))
    lines = []
    for f in m.flats_of_rank(2):
        spanned = sum(1 for c in classes if c & f)
        if spanned >= 3:
            lines.append(f)
    return Rank3Profile(m.ground, classes, tuple(sorted(lines)))


@dataclass(frozen=True)
class InclusionConstraints:
    """Side conditions on the included matroid searched for.

    forced_rank1 sets must have rank 1; forced_rank2 sets rank at most 2;
    forbidden constraints must be violated by some base; require_facet
    inequalities (A,1)<= or (A,2)<= must be facet-defining for the result
    and not facet-defining for the original.
    """

    forced_rank1: tuple = ()
    forced_rank2: tuple = ()
    forbidden: tuple = ()
    require_facet: tuple = ()

    @classmethod
    def of(cls, ground, forced_rank1=(), forced_rank2=(), forbidden=(),
           require_facet=()):
        f1 = tuple(ground.mask(a) for a in forced_rank1)
        f2 = tuple(ground.mask(a) for a in forced_rank2)
        fb = tuple(c if isinstance(c, LinearConstraint)
                   else LinearConstraint.parse(ground, c) for c in forbidden)
        rf = []
        for c in require_facet:
            if not isinstance(c, LinearConstraint):
                c = LinearConstraint.parse(ground, c)
            if c.dir != "<=" or c.bound not in (1, 2):
                raise ConstraintError(
                    "require_facet takes (A,1)<= or (A,2)<= entries, got %s" % c)
            rf.append(c)
        for a in f1:
            if a == ground.full_mask:
                raise ConstraintError("cannot force the full ground to rank 1")
        return cls(f1, f2, fb, tuple(rf))


class _Engine:
    """Backtracking over (classes, lines) states.

    Cover phase makes every mandatory triple dependent, branching per
    uncovered triple over its three class merges and its line; grow phase
    then adds further merges and lines.  States normalize by absorbing
    classes into touching lines, dropping lines down to <= 2 classes, and
    merging lines that share >= 2 classes.  Dependencies only grow along
    any move, so upper-bound violations prune permanently.
    """

    def __init__(self, ground, support, mandatory, dep_max=None,
                 cert1=(), cert2=()):
        self.ground = ground
        self.support = support
        self.mandatory = frozenset(mandatory)
        self.dep_max = None if dep_max is None else frozenset(dep_max)
        self.cert1 = tuple(cert1)
        self.cert2 = tuple(cert2)
        self.triples = list(ksubsets(support, 3))
        # pair -> ok to merge into one class under dep_max
        self.pair_ok = {}
        if self.dep_max is not None:
            for pair in ksubsets(support, 2):
                rest = support & ~pair
                self.pair_ok[pair] = all(
                    (pair | (1 << i)) in self.dep_max for i in bits(rest))

    def _merge_allowed(self, c1, c2):
        if self.dep_max is None:
            return True
        for i in bits(c1):
            for j in bits(c2):
                if not self.pair_ok[(1 << i) | (1 << j)]:
                    return False
        return True

    def _line_content_ok(self, lmask):
        if self.dep_max is None:
            return True
        return all(t in self.dep_max for t in ksubsets(lmask, 3))

    def _normalize(self, classes, lines):
        """Cascade to a canonical state, or None when provably dead."""
        classes = list(classes)
        lines = [l for l in lines]
        while True:
            changed = False
            # classes meeting a line are swallowed by it
            for idx, l in enumerate(lines):
                for c in classes:
                    if c & l and c & ~l:
                        lines[idx] = l = l | c
                        changed = True
            # a line spanning <= 2 classes adds nothing beyond the classes
            kept = [l for l in lines
                    if sum(1 for c in classes if c & l) >= 3]
            if len(kept) != len(lines):
                changed = True
            lines = kept
            # two lines sharing >= 2 classes span the same rank-2 flat
            merged = True
            while merged:
                merged = False
                for a in range(len(lines)):
                    for b in range(a + 1, len(lines)):
                        common = lines[a] & lines[b]
                        if sum(1 for c in classes if c & common == c) >= 2:
                            lines[a] |= lines[b]
                            del lines[b]
                            merged = changed = True
                            break
                    if merged:
                        break
            if not changed:
                break
        if len(classes) < 3:
            return None
        for l in lines:
            if l == self.support:
                return None  # all classes collinear, rank <= 2
        if not self._guards_ok(classes, lines):
            return None
        return tuple(sorted(classes)), tuple(sorted(lines))

    def _guards_ok(self, classes, lines):
        # certified rank-1 flats must remain exact classes in the end
        for a in self.cert1:
            for c in classes:
                if c & a and c & ~a:
                    return False
        for a in self.cert2:
            for c in classes:
                if c & a and c & ~a:
                    return False
            for l in lines:
                if l & ~a and sum(1 for c in classes
                                  if c & a and c & l == c) >= 2:
                    return False  # closure of a would leak outside
        return True

    def _scan(self, classes, lines):
        """(alive, uncovered mandatory triples) for a normalized state."""
        cls_of = _class_lookup(classes)
        uncovered = []
        for t in self.triples:
            dep = _triple_dependent(t, cls_of, lines)
            if dep:
                if self.dep_max is not None and t not in self.dep_max:
                    return False, ()
            elif t in self.mandatory:
                uncovered.append(t)
        return True, uncovered

    def _children_of_triple(self, classes, lines, t, cls_of):
        i, j, k = bits(t)
        cs = sorted({cls_of[i], cls_of[j], cls_of[k]})
        out = []
        for a in range(len(cs)):
            for b in range(a + 1, len(cs)):
                if self._merge_allowed(cs[a], cs[b]):
                    nc = [c for c in classes if c not in (cs[a], cs[b])]
                    nc.append(cs[a] | cs[b])
                    out.append((nc, list(lines)))
        lmask = cs[0] | cs[1] | cs[2]
        if len(cs) == 3 and self._line_content_ok(lmask):
            out.append((list(classes), list(lines) + [lmask]))
        return out

    def run(self, seed_classes, seed_lines):
        """Yield every normalized reachable state with mandatory covered."""
        start = self._normalize(seed_classes, seed_lines)
        if start is None:
            return
        seen = {start}
        stack = [start]
        while stack:
            classes, lines = stack.pop()
            alive, uncovered = self._scan(classes, lines)
            if not alive:
                continue
            cls_of = _class_lookup(classes)
            if uncovered:
                # branch on the most constrained uncovered triple
                best = None
                for t in uncovered:
                    kids = self._children_of_triple(classes, lines, t, cls_of)
                    if best is None or len(kids) < len(best):
                        best = kids
                        if not kids:
                            break
                for nc, nl in best:
                    state = self._normalize(nc, nl)
                    if state is not None and state not in seen:
                        seen.add(state)
                        stack.append(state)
                continue
            yield classes, lines
            # grow: any class merge, any new line over three classes
            for a in range(len(classes)):
                for b in range(a + 1, len(classes)):
                    if not self._merge_allowed(classes[a], classes[b]):
                        continue
                    nc = [c for x, c in enumerate(classes) if x not in (a, b)]
                    nc.append(classes[a] | classes[b])
                    state = self._normalize(nc, lines)
                    if state is not None and state not in seen:
                        seen.add(state)
                        stack.append(state)
            for cm in ksubsets((1 << len(classes)) - 1, 3):
                pick = [classes[x] for x in bits(cm)]
                lmask = pick[0] | pick[1] | pick[2]
                if any(lmask & ~l == 0 for l in lines):
                    continue
                if not self._line_content_ok(lmask):
                    continue
                state = self._normalize(list(classes), list(lines) + [lmask])
                if state is not None and state not in seen:
                    seen.add(state)
                    stack.append(state)


def _seeded_state(ground, support, constraints, flats2, m):
    """Initial partition, extra mandatory triples, and cert masks.

    Returns None when the constraints are contradictory on their face.
    Only certified flats feed the forcing lemmas: a merely forced rank-1
    set need not be a flat of the result, and the lemmas are false for
    non-flats.
    """
    classes = {1 << i: 1 << i for i in bits(support)}

    def merge_all(mask):
        hit = [c for c in set(classes.values()) if c & mask]
        new = 0
        for c in hit:
            new |= c
        new |= mask
        for i in bits(new):
            classes[1 << i] = new

    cert1 = []
    cert2 = []
    extra_mandatory = set()
    for a in constraints.forced_rank1:
        merge_all(a)
    for a in constraints.forced_rank2:
        for t in ksubsets(a, 3):
            extra_mandatory.add(t)
    for c in constraints.require_facet:
        a = c.support
        if a & ~support:
            return None
        if c.bound == 1:
            merge_all(a)
            cert1.append(a)
            if m is not None:
                # certified rank-1 flat: each component of the facet graph
                # from a into the rest collapses with a to rank <= 2
                comps, _ = facet_graph_components(m, a, support & ~a, flats2)
                for comp in comps:
                    for t in ksubsets(a | comp, 3):
                        extra_mandatory.add(t)
        else:
            cert2.append(a)
            for t in ksubsets(a, 3):
                extra_mandatory.add(t)
            if m is not None:
                # certified rank-2 flat: components of the graph into a
                # are parallel classes of the result
                comps, _ = facet_graph_components(m, support & ~a, a, flats2)
                for comp in comps:
                    merge_all(comp)
    seed = sorted(set(classes.values()))
    return seed, extra_mandatory, tuple(cert1), tuple(cert2)


def search_profiles(m, constraints=None, *, mandatory, dep_max=None,
                    support=None, connected_only=True, exclude_keys=(),
                    original=None):
    """Yield Rank3Profile states meeting all constraints, search order.

    mandatory: triples that must be dependent; dep_max: triples allowed
    to be dependent (None for no bound); exclude_keys: profile keys to
    suppress; original: the matroid against which require_facet entries
    must be non-original (defaults to m).
    """
    ground = m.ground
    if support is None:
        support = ground.full_mask
    if constraints is None:
        constraints = InclusionConstraints()
    if original is None:
        original = m
    flats2 = facet_rank2_flats(original) if constraints.require_facet else None
    seeded = _seeded_state(ground, support, constraints, flats2, original)
    if seeded is None:
        return
    seed, extra_mandatory, cert1, cert2 = seeded
    mandatory = frozenset(mandatory) | frozenset(extra_mandatory)
    if dep_max is not None:
        dep_max = frozenset(dep_max)
        if any(t not in dep_max for t in mandatory):
            return
    engine = _Engine(ground, support, mandatory, dep_max, cert1, cert2)
    exclude = set(exclude_keys)
    for classes, lines in engine.run(seed, ()):
        if (classes, lines) in exclude:
            continue
        profile = Rank3Profile(ground, classes, lines)
        mat = profile.matroid()
        if connected_only and not mat.is_connected():
            continue
        if not _finalize_ok(mat, profile, constraints, original):
            continue
        yield profile, mat


def _finalize_ok(mat, profile, constraints, original):
    for c in constraints.forbidden:
        if all(c.satisfied(b) for b in mat.bases):
            return False
    for c in constraints.require_facet:
        a = c.support
        if mat.rank_of(a) != c.bound:
            return False
        if not mat.is_flat(a):
            return False
        if not is_facet_defining_base(mat, a).facet_of_base:
            return False
        # non-original: the same inequality must not cut a facet of the
        # original base system
        if (original.rank_of(a) == c.bound
                and is_facet_defining_base(original, a).facet_of_base):
            return False
    return True
