"""Census of connected simple rank-3 matroids on a small ground set.

A simple rank-3 matroid is determined by its long lines, the rank-2
flats with at least three points, and any family of >= 3-point subsets
pairwise meeting in at most one point arises this way.  Connectivity is
exactly the condition that every line keeps two points outside it, so
the census enumerates such line families with line sizes in [3, n-2],
one representative per relabeling class, and builds the matroids.

Classes are deduplicated by a canonical key: the lexicographically
least sorted line-mask tuple over all label permutations, computed with
one vectorized pass per family.
"""

import itertools

import numpy as np

from .errors import ConstraintError
from .matroid import matroid_from_flat_constraints
from .setfam import GroundSet, ksubsets
from .decomp import two_decompose

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class _Canonicalizer:
    def __init__(self, n):
        self.n = n
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
        # column p holds the weights 2^sigma_p(i); a line-row times it is
        # the relabeled mask
        self.weights = (np.int64(1) << perms).T

    def key(self, lines):
        if not lines:
            return ()
        arr = np.array([[(mask >> i) & 1 for i in range(self.n)]
                        for mask in lines], dtype=np.int64)
        masks = np.sort(arr @ self.weights, axis=0)
        cand = np.arange(masks.shape[1])
        for r in range(masks.shape[0]):
            vals = masks[r, cand]
            cand = cand[vals == vals.min()]
            if len(cand) == 1:
                break
        return tuple(int(x) for x in masks[:, cand[0]])


def iter_line_families(n):
    """Yield one line family per isomorphism class, by line count
    ascending, starting with the empty family."""
    if not 4 <= n <= 9:
        raise ConstraintError("census supports ground sizes 4 through 9")
    full = (1 << n) - 1
    canon = _Canonicalizer(n)
    candidates = [mask for size in range(3, n - 1)
                  for mask in ksubsets(full, size)]
    level = [()]
    yield ()
    while level:
        raw = set()
        for fam in level:
            for line in candidates:
                if any((line & old).bit_count() > 1 for old in fam):
                    continue
                if line in fam:
                    continue
                raw.add(tuple(sorted(fam + (line,))))
        nxt = {}
        for fam in sorted(raw):
            key = canon.key(fam)
            if key not in nxt:
                nxt[key] = fam
        level = [nxt[k] for k in sorted(nxt)]
        for fam in level:
            yield fam


def matroid_of_lines(n, lines):
    """The simple rank-3 matroid on the first n letters whose long lines
    are the given masks."""
    ground = GroundSet(_LETTERS[:n])
    return matroid_from_flat_constraints(
        ground, 3, [(mask, 2) for mask in lines])


def neither_binary_nor_two_decomposable(m):
    return not m.is_binary() and two_decompose(m) is None


def census_rank3(n, predicate=None):
    """Canonical representatives of connected simple rank-3 matroids on
    n elements, optionally filtered."""
    out = []
    for fam in iter_line_families(n):
        m = matroid_of_lines(n, fam)
        if predicate is None or predicate(m):
            out.append(m)
    return out
