"""Families of d-tuples of r-sets, their shadows, and exact shadow sizes.

The shadow of a d-tuple removes one element from every coordinate set; the
shadow of a family is the union over members and removal choices.  kk(m, r)
is the size of the shadow of the first m r-sets in colex order, evaluated
through the cascade decomposition of m; kk_oracle computes the same number
by brute-force enumeration and exists so the two can be played against
each other in tests.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb

from .colex import check_rset, colex_rank, initial_segment, iter_colex

__all__ = [
    "TupleFamily",
    "family",
    "sorted_members",
    "shadow_1d",
    "shadow_multi",
    "section",
    "kk",
    "kk_oracle",
    "kk_oracle_upto",
    "kk_vec",
]


@dataclass(frozen=True)
class TupleFamily:
    """A set of d-tuples whose coordinates are r-sets."""

    d: int
    r: int
    members: frozenset

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"dimension must be >= 1, got {self.d}")
        if self.r < 0:
            raise ValueError(f"uniformity must be >= 0, got {self.r}")
        object.__setattr__(self, "members", frozenset(self.members))
        for t in self.members:
            if not isinstance(t, tuple) or len(t) != self.d:
                raise ValueError(f"member {t!r} is not a {self.d}-tuple")
            for s in t:
                s = check_rset(s)
                if len(s) != self.r:
                    raise ValueError(
                        f"coordinate {s!r} has cardinality {len(s)}, expected {self.r}"
                    )

    def __len__(self):
        return len(self.members)


def family(d, r, members):
    """Build a TupleFamily from an iterable of d-tuples of r-sets."""
    canon = frozenset(tuple(check_rset(s) for s in t) for t in members)
    return TupleFamily(d, r, canon)


@lru_cache(maxsize=None)
def _rank(s):
    # colex_rank without revalidation; s is a canonical tuple
    return 1 + sum(comb(e - 1, i) for i, e in enumerate(s, start=1))


def member_key(t):
    """Canonical sort key for a member: its tuple of coordinate colex ranks."""
    return tuple(_rank(s) for s in t)


def sorted_members(f):
    """Members in canonical order (lexicographic on coordinate ranks)."""
    return sorted(f.members, key=member_key)


def shadow_1d(sets):
    """All sets reachable by deleting one element from a member of `sets`."""
    out = set()
    size = None
    for s in sets:
        s = check_rset(s)
        if size is None:
            size = len(s)
        elif len(s) != size:
            raise ValueError("members must share one cardinality")
        if not s:
            raise ValueError("cannot take the shadow of the empty set")
        for i in range(len(s)):
            out.add(s[:i] + s[i + 1 :])
    return out


def shadow_multi(f):
    """The coordinatewise shadow: delete one element from every coordinate."""
    if f.r < 1:
        raise ValueError("family uniformity must be >= 1 to take a shadow")
    out = set()
    for t in f.members:
        axes = [[s[:i] + s[i + 1 :] for i in range(len(s))] for s in t]
        out.update(product(*axes))
    return TupleFamily(f.d, f.r - 1, frozenset(out))


def section(f, fixed):
    """Project members agreeing with `fixed` onto the remaining coordinates.

    `fixed` maps 1-based coordinate indices to r-sets.  With an empty
    mapping the family itself is returned.
    """
    if not fixed:
        return f
    pins = {}
    for i, s in fixed.items():
        if not 1 <= i <= f.d:
            raise ValueError(f"coordinate index {i} out of range 1..{f.d}")
        pins[i - 1] = check_rset(s)
    free = [i for i in range(f.d) if i not in pins]
    if not free:
        raise ValueError("at least one coordinate must remain free")
    kept = set()
    for t in f.members:
        if all(t[i] == v for i, v in pins.items()):
            kept.add(tuple(t[i] for i in free))
    return TupleFamily(len(free), f.r, frozenset(kept))


@lru_cache(maxsize=None)
def kk(m, r):
    """Shadow size of the colex initial segment of length m on r-sets.

    Evaluated in closed form: write m = C(a_r, r) + C(a_{r-1}, r-1) + ...
    greedily with strictly decreasing a_j, then sum C(a_j, j-1).
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    total = 0
    rem = m
    j = r
    while rem > 0:
        a = j
        while comb(a + 1, j) <= rem:
            a += 1
        total += comb(a, j - 1)
        rem -= comb(a, j)
        j -= 1
    return total


def kk_oracle(m, r):
    """kk(m, r) by brute force: enumerate the segment and expand its shadow."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if m == 0:
        return 0
    return len(shadow_1d(initial_segment(m, r)))


def kk_oracle_upto(m_max, r):
    """Brute-force kk(m, r) for every m in 0..m_max, in one enumeration pass."""
    if m_max < 0:
        raise ValueError(f"m_max must be >= 0, got {m_max}")
    sizes = [0]
    seen = set()
    it = iter_colex(r)
    for _ in range(m_max):
        s = next(it)
        for i in range(r):
            seen.add(s[:i] + s[i + 1 :])
        sizes.append(len(seen))
    return sizes


def kk_vec(vec, r):
    """Coordinatewise kk over a tuple of counts."""
    return tuple(kk(m, r) for m in vec)
