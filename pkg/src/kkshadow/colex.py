"""Colexicographic order on fixed-size sets of positive integers.

A set A precedes B in colex order when the largest element on which they
differ belongs to B.  Ranks are 1-based: the r-set {1, ..., r} has rank 1.
Sets are represented as strictly increasing tuples; unsorted input is
rejected rather than silently normalized.
"""

from math import comb

__all__ = [
    "check_rset",
    "colex_compare",
    "colex_rank",
    "colex_unrank",
    "initial_segment",
    "iter_colex",
]


def check_rset(elements):
    """Validate `elements` as an r-set and return it as a tuple."""
    t = tuple(elements)
    for e in t:
        if not isinstance(e, int) or isinstance(e, bool):
            raise ValueError(f"r-set elements must be integers, got {e!r}")
        if e < 1:
            raise ValueError(f"r-set elements must be >= 1, got {e!r}")
    for a, b in zip(t, t[1:]):
        if a >= b:
            raise ValueError(f"r-set must be strictly increasing, got {t!r}")
    return t


def colex_compare(a, b):
    """Return -1, 0, or +1 as `a` precedes, equals, or follows `b`.

    Both sets must have the same cardinality.  Comparing the reversed
    tuples lexicographically is equivalent to locating the largest element
    of the symmetric difference.
    """
    a = check_rset(a)
    b = check_rset(b)
    if len(a) != len(b):
        raise ValueError(f"cardinality mismatch: {len(a)} vs {len(b)}")
    if a == b:
        return 0
    return -1 if a[::-1] < b[::-1] else 1


def colex_rank(s):
    """1-based position of the set `s` in colex order on len(s)-sets."""
    s = check_rset(s)
    if not s:
        raise ValueError("the empty set has no colex rank")
    return 1 + sum(comb(e - 1, i) for i, e in enumerate(s, start=1))


def colex_unrank(rank, r):
    """The r-set at 1-based colex position `rank`; inverse of colex_rank."""
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    if r < 1:
        raise ValueError(f"cardinality must be >= 1, got {r}")
    out = [0] * r
    rem = rank
    for j in range(r, 0, -1):
        # largest a with C(a, j) < rem; the j-th smallest element is a + 1
        a = j - 1
        while comb(a + 1, j) < rem:
            a += 1
        out[j - 1] = a + 1
        rem -= comb(a, j)
    return tuple(out)


def iter_colex(r):
    """Yield every r-set in colex order, starting from {1, ..., r}."""
    if r < 1:
        raise ValueError(f"cardinality must be >= 1, got {r}")
    cur = list(range(1, r + 1))
    while True:
        yield tuple(cur)
        for i in range(r):
            nxt = cur[i] + 1
            if i + 1 == r or nxt < cur[i + 1]:
                cur[i] = nxt
                for j in range(i):
                    cur[j] = j + 1
                break


def initial_segment(m, r):
    """The first m r-sets in colex order, in order."""
    if m < 0:
        raise ValueError(f"segment length must be >= 0, got {m}")
    if m == 0:
        return []
    it = iter_colex(r)
    return [next(it) for _ in range(m)]
