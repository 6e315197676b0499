"""Finite posets and lattices over named elements.

The order relation is stored as per-element bitmasks: bit ``j`` of
``down[i]`` means element ``j`` lies weakly below element ``i``.  Elements
are indexed along a linear extension (sorted by height, then name), so the
least element of any down-closed candidate set is always its lowest set
bit and the greatest element of an up-closed set is its highest set bit.
All public entry points speak element *names*; indices stay internal.
"""

from __future__ import annotations

import itertools
from array import array
from collections import deque
from typing import Callable, Iterable, Optional

from .errors import (
    CycleError,
    NoBoundsError,
    NotALattice,
    NotComparable,
    NotTransitiveReduction,
    SizeLimitExceeded,
)


def _lsb(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _msb(mask: int) -> int:
    return mask.bit_length() - 1


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A finite partially ordered set on distinct, non-empty names."""

    def __init__(self, names: tuple[str, ...], down: list[int], covers: tuple[tuple[int, int], ...]):
        self.n = len(names)
        self.names = names
        self.index = {s: i for i, s in enumerate(names)}
        self.down = down
        self.up = self._transpose(down, self.n)
        self.covers = covers
        self._ucov: list[list[int]] = [[] for _ in range(self.n)]
        self._dcov: list[list[int]] = [[] for _ in range(self.n)]
        for lo, hi in covers:
            self._ucov[lo].append(hi)
            self._dcov[hi].append(lo)
        self.heights = [0] * self.n
        for i in range(self.n):
            for lo in self._dcov[i]:
                self.heights[i] = max(self.heights[i], self.heights[lo] + 1)

    @staticmethod
    def _transpose(down: list[int], n: int) -> list[int]:
        up = [0] * n
        for i, mask in enumerate(down):
            for j in _bits(mask):
                up[j] |= 1 << i
        return up

    # -- construction ------------------------------------------------------

    @classmethod
    def from_covers(cls, names: Iterable[str], covers: Iterable[tuple[str, str]]) -> "Poset":
        """Build a poset from an exact transitive reduction given by name pairs.

        Raises CycleError if the cover digraph is cyclic and
        NotTransitiveReduction if any listed cover is implied by others.
        """
        names = list(names)
        if len(set(names)) != len(names):
            raise ValueError("element names must be unique")
        if any((not isinstance(s, str)) or not s for s in names):
            raise ValueError("element names must be non-empty strings")
        raw_index = {s: i for i, s in enumerate(names)}
        raw_covers = []
        for lo, hi in covers:
            if lo not in raw_index or hi not in raw_index:
                raise ValueError(f"cover ({lo!r}, {hi!r}) mentions an unknown element")
            if lo == hi:
                raise CycleError(f"cover ({lo!r}, {hi!r}) is a self-loop")
            raw_covers.append((raw_index[lo], raw_index[hi]))
        if len(set(raw_covers)) != len(raw_covers):
            raise NotTransitiveReduction("duplicate cover listed")

        order = cls._toposort(len(names), raw_covers, names)
        rank = {old: new for new, old in enumerate(order)}
        sorted_names = tuple(names[old] for old in order)
        cover_idx = sorted((rank[a], rank[b]) for a, b in raw_covers)

        n = len(names)
        down = [1 << i for i in range(n)]
        dcov: list[list[int]] = [[] for _ in range(n)]
        for lo, hi in cover_idx:
            dcov[hi].append(lo)
        for i in range(n):
            for lo in dcov[i]:
                down[i] |= down[lo]

        poset = cls(sorted_names, down, tuple(cover_idx))
        poset._check_reduction()
        return poset

    @staticmethod
    def _toposort(n: int, covers: list[tuple[int, int]], names: list[str]) -> list[int]:
        """Kahn's algorithm; ties broken by (height-first, name) for determinism."""
        succ: list[list[int]] = [[] for _ in range(n)]
        indeg = [0] * n
        for a, b in covers:
            succ[a].append(b)
            indeg[b] += 1
        height = [0] * n
        ready = deque(i for i in range(n) if indeg[i] == 0)
        seen = 0
        remaining = indeg[:]
        while ready:
            i = ready.popleft()
            seen += 1
            for j in succ[i]:
                height[j] = max(height[j], height[i] + 1)
                remaining[j] -= 1
                if remaining[j] == 0:
                    ready.append(j)
        if seen != n:
            stuck = [names[i] for i in range(n) if remaining[i] > 0]
            raise CycleError(f"cover digraph has a cycle through {stuck[:6]}")
        return sorted(range(n), key=lambda i: (height[i], names[i]))

    def _check_reduction(self) -> None:
        for lo, hi in self.covers:
            between = self.up[lo] & self.down[hi] & ~(1 << lo) & ~(1 << hi)
            if between:
                w = self.names[_lsb(between)]
                raise NotTransitiveReduction(
                    f"cover ({self.names[lo]!r}, {self.names[hi]!r}) is implied via {w!r}"
                )

    @classmethod
    def from_leq(cls, names: Iterable[str], leq: Callable[[str, str], bool]) -> "Poset":
        """Build a poset from a reflexive/antisymmetric/transitive predicate on names."""
        names = list(names)
        n = len(names)
        down = [0] * n
        for i, a in enumerate(names):
            for j, b in enumerate(names):
                if leq(b, a):
                    down[i] |= 1 << j
        for i in range(n):
            if not down[i] >> i & 1:
                raise ValueError(f"relation is not reflexive at {names[i]!r}")
        up = cls._transpose(down, n)
        covers = []
        for i in range(n):
            strict = down[i] & ~(1 << i)
            for j in _bits(strict):
                if down[j] >> i & 1:
                    raise ValueError(
                        f"relation is not antisymmetric on {names[i]!r}, {names[j]!r}"
                    )
                if not (up[j] & strict & ~(1 << j)):
                    covers.append((names[j], names[i]))
        poset = cls.from_covers(names, covers)
        for i, a in enumerate(names):
            if poset.down[poset.index[a]] != sum(
                1 << poset.index[names[j]] for j in _bits(down[i])
            ):
                raise ValueError("relation is not transitive")
        return poset

    # -- queries -----------------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        if set(self.names) != set(other.names):
            return False
        return self.relation_pairs() == other.relation_pairs()

    __hash__ = None  # mutable-free but identity compare is misleading; use ==

    def relation_pairs(self) -> frozenset[tuple[str, str]]:
        """All strict pairs (a, b) with a < b, as names."""
        out = []
        for i in range(self.n):
            for j in _bits(self.down[i] & ~(1 << i)):
                out.append((self.names[j], self.names[i]))
        return frozenset(out)

    def leq(self, a: str, b: str) -> bool:
        return bool(self.down[self.index[b]] >> self.index[a] & 1)

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)

    def upper_covers(self, a: str) -> tuple[str, ...]:
        return tuple(sorted(self.names[j] for j in self._ucov[self.index[a]]))

    def lower_covers(self, a: str) -> tuple[str, ...]:
        return tuple(sorted(self.names[j] for j in self._dcov[self.index[a]]))

    def covers_named(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted((self.names[a], self.names[b]) for a, b in self.covers))

    def height(self) -> int:
        """Length (number of covers) of a longest chain."""
        return max(self.heights, default=0)

    def minimal_elements(self) -> tuple[str, ...]:
        return tuple(sorted(self.names[i] for i in range(self.n) if not self._dcov[i]))

    def maximal_elements(self) -> tuple[str, ...]:
        return tuple(sorted(self.names[i] for i in range(self.n) if not self._ucov[i]))

    def bottom_name(self) -> str:
        mins = self.minimal_elements()
        if len(mins) != 1:
            raise NoBoundsError(f"no unique minimum: {list(mins)}")
        return mins[0]

    def top_name(self) -> str:
        maxs = self.maximal_elements()
        if len(maxs) != 1:
            raise NoBoundsError(f"no unique maximum: {list(maxs)}")
        return maxs[0]

    def dual_poset(self) -> "Poset":
        return Poset.from_covers(self.names, [(self.names[b], self.names[a]) for a, b in self.covers])

    def is_lattice_poset(self) -> bool:
        return self.lattice_failure() is None

    def lattice_failure(self) -> Optional[tuple[str, str, str]]:
        """Return (kind, a, b) for the first pair without a unique bound, else None."""
        up, down = self.up, self.down
        for i in range(self.n):
            for j in range(i + 1, self.n):
                common = up[i] & up[j]
                if not common:
                    return ("join", self.names[i], self.names[j])
                z = _lsb(common)
                if common & ~up[z]:
                    return ("join", self.names[i], self.names[j])
                common = down[i] & down[j]
                if not common:
                    return ("meet", self.names[i], self.names[j])
                z = _msb(common)
                if common & ~down[z]:
                    return ("meet", self.names[i], self.names[j])
        return None


class Lattice(Poset):
    """A finite lattice with precomputed join and meet tables.

    Construction validates the lattice axioms: every pair of elements must
    have a unique least upper bound and greatest lower bound, and there must
    be a unique bottom and top.
    """

    def __init__(self, names, down, covers):
        super().__init__(names, down, covers)
        mins = [i for i in range(self.n) if not self._dcov[i]]
        maxs = [i for i in range(self.n) if not self._ucov[i]]
        if self.n == 0:
            raise NoBoundsError("empty lattice")
        if len(mins) != 1:
            raise NoBoundsError(f"no unique minimum: {[self.names[i] for i in mins]}")
        if len(maxs) != 1:
            raise NoBoundsError(f"no unique maximum: {[self.names[i] for i in maxs]}")
        self._bot = mins[0]
        self._top = maxs[0]
        self._fill_tables()

    @classmethod
    def build_from_covers(cls, names: Iterable[str], covers: Iterable[tuple[str, str]]) -> "Lattice":
        """Validate Hasse-diagram data and return a lattice.

        The covers must be exactly the transitive reduction of the intended
        order; redundant edges are rejected rather than silently dropped.
        """
        base = Poset.from_covers(names, covers)
        return cls(base.names, base.down, base.covers)

    def _fill_tables(self) -> None:
        n = self.n
        up, down = self.up, self.down
        full = (1 << n) - 1
        not_up = [full ^ m for m in up]
        not_down = [full ^ m for m in down]
        jt = array("i", [0] * (n * n))
        mt = array("i", [0] * (n * n))
        names = self.names
        for x in range(n):
            row = x * n
            upx = up[x]
            downx = down[x]
            for y in range(x, n):
                common = upx & up[y]
                z = _lsb(common)
                if common & not_up[z]:
                    raise NotALattice(
                        f"elements {names[x]!r} and {names[y]!r} have no unique join"
                    )
                jt[row + y] = z
                jt[y * n + x] = z
                common = downx & down[y]
                z = _msb(common)
                if common & not_down[z]:
                    raise NotALattice(
                        f"elements {names[x]!r} and {names[y]!r} have no unique meet"
                    )
                mt[row + y] = z
                mt[y * n + x] = z
        self._join = jt
        self._meet = mt

    # -- index-level operations (internal fast path) ------------------------

    def _join_idx(self, x: int, y: int) -> int:
        return self._join[x * self.n + y]

    def _meet_idx(self, x: int, y: int) -> int:
        return self._meet[x * self.n + y]

    def _leq_idx(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    def _join_set_idx(self, ids: Iterable[int]) -> int:
        acc = self._bot
        for i in ids:
            acc = self._join[acc * self.n + i]
        return acc

    def _meet_set_idx(self, ids: Iterable[int]) -> int:
        acc = self._top
        for i in ids:
            acc = self._meet[acc * self.n + i]
        return acc

    # -- name-level operations ----------------------------------------------

    @property
    def bottom(self) -> str:
        return self.names[self._bot]

    @property
    def top(self) -> str:
        return self.names[self._top]

    def join(self, a: str, b: str) -> str:
        return self.names[self._join[self.index[a] * self.n + self.index[b]]]

    def meet(self, a: str, b: str) -> str:
        return self.names[self._meet[self.index[a] * self.n + self.index[b]]]

    def join_set(self, elems: Iterable[str]) -> str:
        """Join of a possibly empty set; the empty join is the bottom."""
        return self.names[self._join_set_idx(self.index[a] for a in elems)]

    def meet_set(self, elems: Iterable[str]) -> str:
        """Meet of a possibly empty set; the empty meet is the top."""
        return self.names[self._meet_set_idx(self.index[a] for a in elems)]

    def is_cover(self, a: str, b: str) -> bool:
        return self.index[b] in self._ucov[self.index[a]]

    def interval(self, lo: str, hi: str) -> "IntervalView":
        if not self.leq(lo, hi):
            raise NotComparable(f"{lo!r} is not below {hi!r}")
        return IntervalView(self, lo, hi)

    def dual(self) -> "Lattice":
        """The lattice with the order reversed (joins and meets swap)."""
        return Lattice.build_from_covers(
            self.names, [(self.names[b], self.names[a]) for a, b in self.covers]
        )

    def restrict(self, members: Iterable[str]) -> "Lattice":
        """Sublattice on a subset of elements closed under join and meet.

        Covers are recomputed as the transitive reduction of the restricted
        order, so the result is a valid standalone lattice.
        """
        members = sorted(set(members), key=lambda s: self.index[s])
        mask = 0
        for s in members:
            mask |= 1 << self.index[s]
        covers = []
        for s in members:
            i = self.index[s]
            below = self.down[i] & mask & ~(1 << i)
            for j in _bits(below):
                if not (self.up[j] & self.down[i] & mask & ~(1 << i) & ~(1 << j)):
                    covers.append((self.names[j], s))
        return Lattice.build_from_covers(members, covers)

    # -- semidistributivity --------------------------------------------------

    def is_semidistributive(self) -> bool:
        """Check both halves of semidistributivity.

        Join half: whenever x v y = x v z, also x v (y ^ z) = x v y, and the
        dual statement for meets.  Per fixed x, it suffices to fold the meet
        over each fiber {y : x v y = v} and confirm x v (fold) = v; the
        pairwise and full-subset forms follow by monotonicity.
        """
        return self.semidistributivity_witness() is None

    def semidistributivity_witness(self) -> Optional[tuple[str, str, str, str]]:
        """None if semidistributive, else a witness ('join'|'meet', x, y, z)."""
        n = self.n
        for kind, prim, sec in (("join", self._join, self._meet), ("meet", self._meet, self._join)):
            for x in range(n):
                row = x * n
                fold: dict[int, int] = {}
                for y in range(n):
                    v = prim[row + y]
                    m = fold.get(v)
                    fold[v] = y if m is None else sec[m * n + y]
                for v, m in fold.items():
                    if prim[row + m] != v:
                        fiber = [y for y in range(n) if prim[row + y] == v]
                        for y, z in itertools.combinations(fiber, 2):
                            if prim[row + sec[y * n + z]] != v:
                                return (kind, self.names[x], self.names[y], self.names[z])
                        raise AssertionError("fiber fold failed without a pairwise witness")
        return None


class IntervalView:
    """The interval [lo, hi] of a lattice, viewed as a sublattice.

    Intervals of a lattice are closed under join and meet and their cover
    relations agree with the ambient ones, so all queries delegate to the
    parent tables restricted to the member set.
    """

    def __init__(self, parent: Lattice, lo: str, hi: str):
        self.parent = parent
        self.lo = lo
        self.hi = hi
        self._lo = parent.index[lo]
        self._hi = parent.index[hi]
        self.mask = parent.up[self._lo] & parent.down[self._hi]

    @property
    def members(self) -> tuple[str, ...]:
        return tuple(sorted(self.parent.names[i] for i in _bits(self.mask)))

    def __contains__(self, name: str) -> bool:
        i = self.parent.index.get(name)
        return i is not None and bool(self.mask >> i & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def _require(self, *names: str) -> None:
        for s in names:
            if s not in self:
                raise NotComparable(f"{s!r} is not in the interval [{self.lo!r}, {self.hi!r}]")

    def leq(self, a: str, b: str) -> bool:
        self._require(a, b)
        return self.parent.leq(a, b)

    def join(self, a: str, b: str) -> str:
        self._require(a, b)
        return self.parent.join(a, b)

    def meet(self, a: str, b: str) -> str:
        self._require(a, b)
        return self.parent.meet(a, b)

    def join_set(self, elems: Iterable[str]) -> str:
        acc = self.lo
        for a in elems:
            self._require(a)
            acc = self.parent.join(acc, a)
        return acc

    def meet_set(self, elems: Iterable[str]) -> str:
        acc = self.hi
        for a in elems:
            self._require(a)
            acc = self.parent.meet(acc, a)
        return acc

    def upper_covers(self, a: str) -> tuple[str, ...]:
        self._require(a)
        i = self.parent.index[a]
        return tuple(
            sorted(self.parent.names[j] for j in self.parent._ucov[i] if self.mask >> j & 1)
        )

    def lower_covers(self, a: str) -> tuple[str, ...]:
        self._require(a)
        i = self.parent.index[a]
        return tuple(
            sorted(self.parent.names[j] for j in self.parent._dcov[i] if self.mask >> j & 1)
        )

    def as_lattice(self) -> Lattice:
        """Rebuild the interval as a standalone lattice with the same names."""
        return self.parent.restrict(self.members)


def posets_isomorphic(p, q, size_cap: int = 14) -> Optional[dict[str, str]]:
    """Search for an order isomorphism between two small posets.

    Accepts Lattice, Poset, or any object with a ``poset`` attribute (such as
    a derived order).  Returns a name-to-name mapping, or None if the posets
    are not isomorphic.  Exhaustive backtracking with degree/height pruning;
    refuses inputs larger than ``size_cap`` elements.
    """
    p = getattr(p, "poset", p)
    q = getattr(q, "poset", q)
    if len(p) != len(q):
        return None
    if len(p) > size_cap:
        raise SizeLimitExceeded(f"posets_isomorphic is capped at {size_cap} elements")

    def signature(poset: Poset, i: int) -> tuple[int, int, int, int, int]:
        return (
            poset.heights[i],
            len(poset._dcov[i]),
            len(poset._ucov[i]),
            poset.down[i].bit_count(),
            poset.up[i].bit_count(),
        )

    sig_p = [signature(p, i) for i in range(len(p))]
    sig_q = [signature(q, i) for i in range(len(q))]
    if sorted(sig_p) != sorted(sig_q):
        return None

    order = sorted(range(len(p)), key=lambda i: (sig_p[i], p.names[i]))
    candidates = [[j for j in range(len(q)) if sig_q[j] == sig_p[i]] for i in range(len(p))]
    assign: dict[int, int] = {}
    used = [False] * len(q)

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        i = order[k]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for i2, j2 in assign.items():
                same = bool(p.down[i2] >> i & 1) == bool(q.down[j2] >> j & 1) and bool(
                    p.down[i] >> i2 & 1
                ) == bool(q.down[j] >> j2 & 1)
                if not same:
                    ok = False
                    break
            if ok:
                assign[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                del assign[i]
                used[j] = False
        return False

    if extend(0):
        return {p.names[i]: q.names[j] for i, j in assign.items()}
    return None
