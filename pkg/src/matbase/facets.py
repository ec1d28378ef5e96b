"""Facet-defining inequalities of independence and base systems.

A candidate inequality (A, r(A))<= is facet-defining for the base system of a
connected matroid exactly when the face it cuts out has two connected
components, equivalently when both the restriction to A and the contraction
by A are connected.  Connectivity counts every loop and coloop as its own
component, so the test is pure component counting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotConnectedError, RankError
from .matroid import Matroid
from .setfam import ElementSet, GroundSet, bits


def _as_mask(ground, a):
    return ground.mask(a)


@dataclass(frozen=True)
class FacetReport:
    """Outcome of testing one inequality (flat, rank_at_flat)<= on a base
    system.

    components_on_face lists the ground partition of the face matroid
    restrict+contract; trivial is None when the inequality is not
    facet-defining for the base system.
    """

    flat: ElementSet
    rank_at_flat: int
    facet_of_independence: bool
    facet_of_base: bool
    trivial: bool | None
    components_on_face: tuple


def _face_components(m, amask):
    """Components of B(M) cap (A, r(A))=, i.e. of M|A direct-sum M/A,
    re-expressed as masks over the original ground."""
    comps = []
    for minor in (m.restrict(amask), m.contract(amask)):
        for cmask in minor.connected_components():
            comps.append(m.ground.mask(minor.ground.labels_of(cmask)))
    return tuple(sorted(comps))


def _is_trivial(m, amask):
    """True when one strict side of the cut is empty over the rank
    hyperplane's 01-points."""
    ra = m.rank_of(amask)
    asize = amask.bit_count()
    can_exceed = min(asize, m.rank) > ra
    can_fall_short = m.rank - (m.ground.n - asize) < ra
    return not (can_exceed and can_fall_short)


def is_facet_defining_ind(m, a):
    """Facet test for the independence system: a flat with connected
    restriction."""
    amask = _as_mask(m.ground, a)
    if amask == 0:
        return False
    return m.is_flat(amask) and m.restrict(amask).is_connected()


def is_facet_defining_base(m, a):
    """Full report for one candidate inequality on a connected matroid."""
    if not m.is_connected():
        raise NotConnectedError("facet analysis needs a connected matroid")
    amask = _as_mask(m.ground, a)
    if amask == 0 or amask == m.ground.full_mask:
        raise RankError("candidate set must be nonempty and proper")
    comps = _face_components(m, amask)
    is_facet = len(comps) == len(m.connected_components()) + 1
    return FacetReport(
        flat=ElementSet(m.ground, amask),
        rank_at_flat=m.rank_of(amask),
        facet_of_independence=is_facet_defining_ind(m, amask),
        facet_of_base=is_facet,
        trivial=_is_trivial(m, amask) if is_facet else None,
        components_on_face=comps,
    )


def base_facets(m):
    """All facet-defining inequalities of the base system, in mask order.

    Candidates are the proper nonempty flats together with the sets E - e;
    the latter pick up the trivial facets whose complement closes to E.
    """
    if not m.is_connected():
        raise NotConnectedError("facet analysis needs a connected matroid")
    full = m.ground.full_mask
    cands = {f for f in m.flats() if 0 < f < full}
    cands.update(full & ~(1 << i) for i in range(m.ground.n))
    out = []
    for amask in sorted(cands):
        rep = is_facet_defining_base(m, amask)
        if rep.facet_of_base:
            out.append(rep)
    return out


def face_split(m, a):
    """The face on (A, r(A))= as its two factors (restriction, contraction)."""
    amask = _as_mask(m.ground, a)
    return m.restrict(amask), m.contract(amask)


def base_dimension(m):
    """Dimension of the base polytope: ground size minus component count."""
    return m.ground.n - len(m.connected_components())


def check_intersecting_submodularity(ground, cs):
    """Submodularity audit for an inequality description of an independence
    system.

    cs lists (set, bound) pairs; the audited rank function is
    r'(X) = max |S| over S subseteq X meeting every bound.  Returns True, or
    the first intersecting pair (in mask order) violating
    r'(A1) + r'(A2) >= r'(A1 & A2) + r'(A1 | A2).
    """
    pairs = sorted((ground.mask(s), int(b)) for s, b in cs)
    memo = {}

    def rprime(xmask):
        got = memo.get(xmask)
        if got is not None:
            return got
        # greedy fails under crossing bounds, so take a small exact search:
        # maximize |S| over S subseteq X subject to |S & A| <= a for all (A,a)
        best = 0
        elems = list(bits(xmask))

        def grow(i, cur, counts):
            nonlocal best
            remaining = len(elems) - i
            if cur.bit_count() + remaining <= best:
                return
            if i == len(elems):
                best = max(best, cur.bit_count())
                return
            e = 1 << elems[i]
            ok = True
            new_counts = list(counts)
            for k, (amask, bound) in enumerate(pairs):
                if amask & e:
                    if counts[k] + 1 > bound:
                        ok = False
                        break
                    new_counts[k] = counts[k] + 1
            if ok:
                grow(i + 1, cur | e, new_counts)
            grow(i + 1, cur, counts)

        grow(0, 0, [0] * len(pairs))
        memo[xmask] = best
        return best

    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            a1, _ = pairs[i]
            a2, _ = pairs[j]
            if a1 & a2 == 0:
                continue
            if rprime(a1) + rprime(a2) < rprime(a1 & a2) + rprime(a1 | a2):
                c1 = (ElementSet(ground, a1), pairs[i][1])
                c2 = (ElementSet(ground, a2), pairs[j][1])
                return (c1, c2)
    return True


def minimum_flat_representation(m):
    """The unique minimum inequality description by flats: closures of
    circuits with their ranks, deduplicated."""
    if m.loops():
        raise RankError("minimum representation needs a loopless matroid")
    if m.rank == 0:
        raise RankError("rank-0 matroid has no flat representation")
    seen = {}
    for c in m.circuits():
        cl = m.closure_of(c)
        seen[cl] = m.rank_of(cl)
    return [(ElementSet(m.ground, f), r)
            for f, r in sorted(seen.items(), key=lambda kv: (kv[1], kv[0]))]
