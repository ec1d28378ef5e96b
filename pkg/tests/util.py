"""Brute-force oracles and matroid generators shared by the test suite.

Everything here recomputes answers from definitions, independently of
the library's own algorithms, so tests can compare the two.
"""

import itertools
import random

from matbase.census import census_rank3
from matbase.errors import (EmptyFamilyError, ExchangeAxiomError,
                            MixedCardinalityError)
from matbase.matroid import matroid_from_bases, uniform_matroid
from matbase.setfam import GroundSet, bits, ksubsets, submasks

LETTERS = "abcdefghijkl"


def ground(n):
    return GroundSet(LETTERS[:n])


def exchange_ok_brute(masks):
    """Definition-level basis exchange check on a set of bitmasks."""
    fam = set(masks)
    for b1 in fam:
        for b2 in fam:
            for x in bits(b1 & ~b2):
                ex = 1 << x
                if not any((b1 & ~ex) | (1 << y) in fam
                           for y in bits(b2 & ~b1)):
                    return False
    return True


def try_matroid(g, masks):
    try:
        return matroid_from_bases(g, masks)
    except (ExchangeAxiomError, EmptyFamilyError, MixedCardinalityError):
        return None


def rank_brute(m, xmask):
    """Rank via the independence family spanned by the bases."""
    best = 0
    for b in m.bases:
        best = max(best, (b & xmask).bit_count())
    return best


def independent_sets(m):
    """All subsets of bases, as a frozenset of masks."""
    out = set()
    for b in m.bases:
        for s in submasks(b):
            out.add(s)
    return frozenset(out)


def label_sets(m):
    """Base family as frozenset of frozensets of labels; survives
    any reground."""
    g = m.ground
    return frozenset(frozenset(g.labels_of(b)) for b in m.bases)


def relabel(m, perm):
    """Image of m under a permutation given as a label->label dict."""
    g = m.ground
    bases = [[perm[lab] for lab in g.labels_of(b)] for b in m.bases]
    return matroid_from_bases(g, bases)


def random_matroid(rng, n, r, removals=8):
    """A matroid obtained from U_{r,n} by greedily deleting random
    bases while the exchange axiom survives."""
    g = ground(n)
    masks = set(ksubsets(g.full_mask, r))
    order = sorted(masks)
    rng.shuffle(order)
    dropped = 0
    for cand in order:
        if dropped == removals or len(masks) == 1:
            break
        rest = masks - {cand}
        if exchange_ok_brute(rest):
            masks = rest
            dropped += 1
    return matroid_from_bases(g, sorted(masks))


def pool_small(n_max=6):
    """Deterministic mix of uniform, census, dual, and minor matroids
    with at most n_max elements."""
    out = []
    for n in range(2, n_max + 1):
        for r in range(1, n):
            out.append(uniform_matroid(r, n, LETTERS[:n]))
    for n in range(4, n_max + 1):
        out.extend(census_rank3(n))
    rng = random.Random(20230817)
    for n in range(4, n_max + 1):
        for r in (2, 3):
            if r < n:
                out.append(random_matroid(rng, n, r))
    out.extend(m.dual() for m in list(out) if 0 < m.rank < m.ground.n)
    return out


def pool_rank3(n_max=6, simple_only=False, connected_only=False):
    out = [m for m in pool_small(n_max) if m.rank == 3 and not m.loops()]
    if simple_only:
        out = [m for m in out
               if all(c.bit_count() == 1 for c in m.parallel_classes())]
    if connected_only:
        out = [m for m in out if m.is_connected()]
    return out


def affine_dim(vectors):
    """Dimension of the affine hull of 01-vectors, via numpy rank."""
    import numpy as np
    arr = np.array(vectors, dtype=float)
    return int(np.linalg.matrix_rank(arr - arr[0]))


def indicators(g, masks):
    return [[(mask >> i) & 1 for i in range(g.n)] for mask in masks]


def duplicate_element(m, label, new_label):
    """m with a parallel copy of label appended as new_label."""
    g = m.ground
    gd = GroundSet(g.labels + (new_label,))
    bases = [set(g.labels_of(b)) for b in m.bases]
    extra = [b - {label} | {new_label} for b in bases if label in b]
    return matroid_from_bases(gd, [sorted(b) for b in bases + extra])


def all_families(n, r):
    """Every nonempty family of r-subsets of an n-ground, as mask tuples."""
    g = ground(n)
    subs = sorted(ksubsets(g.full_mask, r))
    for bitsel in range(1, 1 << len(subs)):
        yield g, tuple(subs[i] for i in bits(bitsel))


def set_partitions_3(items):
    """All unordered partitions of items into exactly 3 nonempty blocks."""
    items = list(items)
    first, rest = items[0], items[1:]
    for asel in range(1 << len(rest)):
        block_a = [first] + [rest[i] for i in bits(asel)]
        remaining = [rest[i] for i in range(len(rest)) if not asel >> i & 1]
        if len(remaining) < 2:
            continue
        head, tail = remaining[0], remaining[1:]
        for bsel in range(1 << len(tail)):
            block_b = [head] + [tail[i] for i in bits(bsel)]
            block_c = [tail[i] for i in range(len(tail)) if not bsel >> i & 1]
            if block_c:
                yield block_a, block_b, block_c
