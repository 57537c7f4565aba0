"""Coordinatewise compression onto colex initial segments.

Compressing a coordinate replaces every 1-dimensional section along it by
the colex initial segment of the same size.  Iterating over coordinates
until nothing moves produces a monotone family of the same size whose
shadow is no larger; termination is guaranteed because each change
strictly lowers the total rank weight.
"""

from .colex import initial_segment
from .families import TupleFamily, _rank

__all__ = ["weight", "is_monotone", "compress_coordinate", "monotonize"]


def weight(f):
    """Sum over members of the coordinatewise colex ranks."""
    return sum(_rank(s) for t in f.members for s in t)


def _sections(f, axis):
    # axis is 0-based; group coordinate values by the rest of the tuple
    groups = {}
    for t in f.members:
        rest = t[:axis] + t[axis + 1 :]
        groups.setdefault(rest, []).append(t[axis])
    return groups


def is_monotone(f):
    """True iff every 1-dimensional section is a colex initial segment."""
    if f.r == 0:
        return True
    for axis in range(f.d):
        for vals in _sections(f, axis).values():
            ranks = sorted(_rank(s) for s in vals)
            if ranks != list(range(1, len(ranks) + 1)):
                return False
    return True


def compress_coordinate(f, i):
    """Replace every section along coordinate i (1-based) by an initial segment."""
    if not 1 <= i <= f.d:
        raise ValueError(f"coordinate index {i} out of range 1..{f.d}")
    axis = i - 1
    segments = {}
    out = set()
    for rest, vals in _sections(f, axis).items():
        k = len(vals)
        if k not in segments:
            segments[k] = initial_segment(k, f.r)
        for s in segments[k]:
            out.add(rest[:axis] + (s,) + rest[axis:])
    return TupleFamily(f.d, f.r, frozenset(out))


def monotonize(f):
    """Apply coordinate compressions cyclically until a full pass is a no-op."""
    cur = f
    while True:
        changed = False
        for i in range(1, cur.d + 1):
            nxt = compress_coordinate(cur, i)
            if nxt.members != cur.members:
                cur = nxt
                changed = True
        if not changed:
            return cur
