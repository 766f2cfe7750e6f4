"""Independent counting oracle: labeled series-parallel posets.

Series-parallel posets are built from singletons by disjoint union and
ordinal sum.  Shrubs on a fixed label set are equinumerous with them, so
the count produced here cross-checks the shrub enumerators without sharing
any code with them.  A poset is stored as the frozenset of its strict
relations ``(a, b)`` meaning ``a < b``.
"""

from __future__ import annotations

import itertools


def series_parallel_posets(labels) -> frozenset:
    """All labeled series-parallel posets on ``labels``, as relation sets."""
    labels = tuple(sorted(labels, key=lambda v: (isinstance(v, str), v)))
    memo = {}

    def build(subset: frozenset) -> frozenset:
        if len(subset) == 1:
            return frozenset([frozenset()])
        hit = memo.get(subset)
        if hit is not None:
            return hit
        out = set()
        items = sorted(subset, key=lambda v: (isinstance(v, str), v))
        for r in range(1, len(items)):
            for left in itertools.combinations(items, r):
                left = frozenset(left)
                right = subset - left
                cross = frozenset(itertools.product(left, right))
                for pa in build(left):
                    for pb in build(right):
                        both = pa | pb
                        out.add(both)            # parallel
                        out.add(both | cross)    # series, left below right
        result = frozenset(out)
        memo[subset] = result
        return result

    if not labels:
        return frozenset()
    return build(frozenset(labels))


def count_series_parallel(n: int) -> int:
    """Number of labeled series-parallel posets on ``1..n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return len(series_parallel_posets(range(1, n + 1)))
