"""Completely join/meet-irreducible elements and the rowmotion maps.

An element j is completely join-irreducible (cji) when it covers exactly one
element j_*; dually m is completely meet-irreducible (cmi) with unique upper
cover m^*.  The kappa map sends j to the unique largest y with j ^ y = j_*,
and its inverse kappa_d sends m to the unique smallest y with m v y = m^*.
Both extrema exist precisely because the lattice is semidistributive; the
code scans the full candidate set and verifies uniqueness instead of
trusting that theorem, so corrupted input fails loudly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Lattice, _lsb, _msb
from .errors import (
    NoUniqueMax,
    NotACover,
    NotComparable,
    NotSemidistributive,
)


@dataclass(frozen=True)
class IrreducibleTable:
    """cji/cmi with the j_*, m^* neighbours and the mutually inverse kappa maps."""

    cji: tuple[str, ...]
    cmi: tuple[str, ...]
    jstar: dict[str, str]
    mstar: dict[str, str]
    kappa: dict[str, str]
    kappa_d: dict[str, str]


def irreducible_table(lattice: Lattice) -> IrreducibleTable:
    """Compute (and memoize on the lattice) the irreducible/kappa table."""
    cached = getattr(lattice, "_irreducible_table", None)
    if cached is not None:
        return cached
    witness = lattice.semidistributivity_witness()
    if witness is not None:
        raise NotSemidistributive(f"lattice is not semidistributive, witness {witness}")

    n = lattice.n
    names = lattice.names
    full = (1 << n) - 1
    cji_ids = [i for i in range(n) if len(lattice._dcov[i]) == 1]
    cmi_ids = [i for i in range(n) if len(lattice._ucov[i]) == 1]

    jstar = {names[j]: names[lattice._dcov[j][0]] for j in cji_ids}
    mstar = {names[m]: names[lattice._ucov[m][0]] for m in cmi_ids}

    kappa: dict[str, str] = {}
    for j in cji_ids:
        low = lattice._dcov[j][0]
        cand = 0
        for y in range(n):
            if lattice._meet_idx(j, y) == low:
                cand |= 1 << y
        top = _msb(cand)
        if cand & (full ^ lattice.down[top]):
            raise NoUniqueMax(
                f"candidate set for kappa({names[j]!r}) has no unique maximum"
            )
        kappa[names[j]] = names[top]

    kappa_d: dict[str, str] = {}
    for m in cmi_ids:
        high = lattice._ucov[m][0]
        cand = 0
        for y in range(n):
            if lattice._join_idx(m, y) == high:
                cand |= 1 << y
        bot = _lsb(cand)
        if cand & (full ^ lattice.up[bot]):
            raise NoUniqueMax(
                f"candidate set for kappa_d({names[m]!r}) has no unique minimum"
            )
        kappa_d[names[m]] = names[bot]

    # On a semidistributive lattice the two maps are inverse bijections.
    assert set(kappa.values()) == set(mstar), "kappa does not land in cmi"
    assert set(kappa_d.values()) == set(jstar), "kappa_d does not land in cji"
    for j, m in kappa.items():
        assert kappa_d[m] == j, f"kappa_d(kappa({j})) != {j}"

    table = IrreducibleTable(
        cji=tuple(sorted(jstar)),
        cmi=tuple(sorted(mstar)),
        jstar=jstar,
        mstar=mstar,
        kappa=kappa,
        kappa_d=kappa_d,
    )
    lattice._irreducible_table = table
    return table


@dataclass(frozen=True)
class CoverLabeling:
    """Join- and meet-irreducible labels for every cover, keyed (lower, upper)."""

    jlabel: dict[tuple[str, str], str]
    mlabel: dict[tuple[str, str], str]


def j_label_cover(lattice: Lattice, lower: str, upper: str) -> str:
    """The unique minimum of {y : y v lower = upper}; always lands in cji."""
    if not lattice.is_cover(lower, upper):
        raise NotACover(f"({lower!r}, {upper!r}) is not a cover relation")
    table = irreducible_table(lattice)
    u = lattice.index[lower]
    v = lattice.index[upper]
    cand = 0
    for y in range(lattice.n):
        if lattice._join_idx(u, y) == v:
            cand |= 1 << y
    j = _lsb(cand)
    if cand & (((1 << lattice.n) - 1) ^ lattice.up[j]):
        raise NoUniqueMax(f"cover ({lower!r}, {upper!r}) has no unique minimal join label")
    name = lattice.names[j]
    assert name in table.jstar and lattice.leq(table.jstar[name], lower)
    return name


def m_label_cover(lattice: Lattice, lower: str, upper: str) -> str:
    """The unique maximum of {y : y ^ upper = lower}; always lands in cmi."""
    if not lattice.is_cover(lower, upper):
        raise NotACover(f"({lower!r}, {upper!r}) is not a cover relation")
    table = irreducible_table(lattice)
    u = lattice.index[lower]
    v = lattice.index[upper]
    cand = 0
    for y in range(lattice.n):
        if lattice._meet_idx(v, y) == u:
            cand |= 1 << y
    m = _msb(cand)
    if cand & (((1 << lattice.n) - 1) ^ lattice.down[m]):
        raise NoUniqueMax(f"cover ({lower!r}, {upper!r}) has no unique maximal meet label")
    name = lattice.names[m]
    assert name in table.mstar
    return name


def cover_labeling(lattice: Lattice) -> CoverLabeling:
    """Labels for all covers at once, memoized on the lattice."""
    cached = getattr(lattice, "_cover_labeling", None)
    if cached is not None:
        return cached
    jlabel = {}
    mlabel = {}
    for lo, hi in lattice.covers_named():
        jlabel[(lo, hi)] = j_label_cover(lattice, lo, hi)
        mlabel[(lo, hi)] = m_label_cover(lattice, lo, hi)
    labeling = CoverLabeling(jlabel=jlabel, mlabel=mlabel)
    lattice._cover_labeling = labeling
    return labeling


def j_label_interval(lattice: Lattice, lo: str, hi: str) -> tuple[str, ...]:
    """All join-irreducible labels appearing on covers inside [lo, hi].

    Computed by the closed formula {j in cji : j <= hi and kappa(j) >= lo}
    rather than by enumerating the covers of the interval.
    """
    if not lattice.leq(lo, hi):
        raise NotComparable(f"{lo!r} is not below {hi!r}")
    table = irreducible_table(lattice)
    return tuple(
        sorted(
            j
            for j in table.cji
            if lattice.leq(j, hi) and lattice.leq(lo, table.kappa[j])
        )
    )


def interval_cji_transfer(lattice: Lattice, lo: str, hi: str) -> dict[str, str]:
    """Bijection j -> lo v j from the interval's labels onto cji([lo, hi]).

    The image is verified against the completely join-irreducible elements of
    the interval sublattice recomputed from scratch.
    """
    labels = j_label_interval(lattice, lo, hi)
    mapping = {j: lattice.join(lo, j) for j in labels}
    sub = lattice.interval(lo, hi).as_lattice()
    sub_cji = set(irreducible_table(sub).cji)
    assert len(set(mapping.values())) == len(mapping), "transfer is not injective"
    assert set(mapping.values()) == sub_cji, "transfer does not hit cji of the interval"
    return mapping


def kappa_bar_map(lattice: Lattice) -> dict[str, str]:
    """The extended kappa map on every element, memoized.

    kappa_bar(x) is the meet of kappa over the canonical joinands of x, the
    joinands being the labels of the covers below x.
    """
    cached = getattr(lattice, "_kappa_bar_map", None)
    if cached is not None:
        return cached
    table = irreducible_table(lattice)
    jlabel = cover_labeling(lattice).jlabel
    out: dict[str, str] = {}
    for x in lattice.names:
        joinands = [jlabel[(u, x)] for u in lattice.lower_covers(x)]
        out[x] = lattice.meet_set(table.kappa[j] for j in joinands)
    lattice._kappa_bar_map = out
    return out


def kappa_bar_d_map(lattice: Lattice) -> dict[str, str]:
    """The extended kappa_d map on every element (inverse of kappa_bar), memoized."""
    cached = getattr(lattice, "_kappa_bar_d_map", None)
    if cached is not None:
        return cached
    table = irreducible_table(lattice)
    mlabel = cover_labeling(lattice).mlabel
    out: dict[str, str] = {}
    for x in lattice.names:
        meetands = [mlabel[(x, v)] for v in lattice.upper_covers(x)]
        out[x] = lattice.join_set(table.kappa_d[m] for m in meetands)
    lattice._kappa_bar_d_map = out
    return out


def kappa_bar(lattice: Lattice, x: str) -> str:
    return kappa_bar_map(lattice)[x]


def kappa_bar_d(lattice: Lattice, x: str) -> str:
    return kappa_bar_d_map(lattice)[x]


def kappa_bar_cycles(lattice: Lattice) -> str:
    """Cycle notation for kappa_bar as a permutation of the lattice.

    Each cycle starts at its lexicographically smallest member; cycles are
    sorted by first member; fixed points are omitted.
    """
    mapping = kappa_bar_map(lattice)
    seen: set[str] = set()
    cycles = []
    for start in sorted(mapping):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        cur = mapping[start]
        while cur != start:
            cycle.append(cur)
            seen.add(cur)
            cur = mapping[cur]
        if len(cycle) > 1:
            smallest = min(range(len(cycle)), key=lambda k: cycle[k])
            cycle = cycle[smallest:] + cycle[:smallest]
            cycles.append(cycle)
    cycles.sort(key=lambda c: c[0])
    return "".join("(" + ",".join(c) + ")" for c in cycles)
