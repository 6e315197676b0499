"""Pop-stack operators, core intervals, nuclear intervals, and derived orders.

pop_down(x) is the meet of x with all elements it covers; pop_up is dual.
The lower core of x is [pop_down(x), x]; the upper core is the interval
[kappa_bar(x), pop_up(kappa_bar(x))].  Their join-irreducible label sets
(lab_down, lab_up) intersect in W(x), and comparison of these sets induces
three partial orders on the lattice: the two core label orders and the
kappa order x <= y iff x <= y and kappa_bar(y) <= kappa_bar(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import IntervalView, Lattice, Poset
from .errors import NotComparable
from .irreducibles import (
    cover_labeling,
    irreducible_table,
    j_label_interval,
    kappa_bar_map,
)


def pop_down(lattice: Lattice, x: str) -> str:
    """Meet of x with everything x covers; fixes the bottom element."""
    return lattice.meet(x, lattice.meet_set(lattice.lower_covers(x)))


def pop_up(lattice: Lattice, x: str) -> str:
    """Join of x with everything covering x; fixes the top element."""
    return lattice.join(x, lattice.join_set(lattice.upper_covers(x)))


def atom_labels(lattice: Lattice, lo: str, hi: str) -> tuple[str, ...]:
    """Labels j of the covers lo < z inside [lo, hi] (the interval's atoms)."""
    if not lattice.leq(lo, hi):
        raise NotComparable(f"{lo!r} is not below {hi!r}")
    jlabel = cover_labeling(lattice).jlabel
    view = lattice.interval(lo, hi)
    return tuple(sorted(jlabel[(lo, z)] for z in view.upper_covers(lo)))


def coatom_labels(lattice: Lattice, lo: str, hi: str) -> tuple[str, ...]:
    """Labels kappa(j) of the covers z < hi inside [lo, hi] (the coatoms)."""
    if not lattice.leq(lo, hi):
        raise NotComparable(f"{lo!r} is not below {hi!r}")
    mlabel = cover_labeling(lattice).mlabel
    view = lattice.interval(lo, hi)
    return tuple(sorted(mlabel[(z, hi)] for z in view.lower_covers(hi)))


def is_nuclear(lattice: Lattice, lo: str, hi: str) -> bool:
    """True when lo is recovered as the meet of the coatoms of [lo, hi].

    The empty meet inside the sublattice is hi, so one-element intervals are
    nuclear.  The reachability clause of the definition holds automatically
    in a finite lattice and is not re-checked.
    """
    if not lattice.leq(lo, hi):
        raise NotComparable(f"{lo!r} is not below {hi!r}")
    view = lattice.interval(lo, hi)
    return view.meet_set(view.lower_covers(hi)) == lo


def is_conuclear(lattice: Lattice, lo: str, hi: str) -> bool:
    """True when hi is the join of the atoms of [lo, hi]; dual to is_nuclear."""
    if not lattice.leq(lo, hi):
        raise NotComparable(f"{lo!r} is not below {hi!r}")
    view = lattice.interval(lo, hi)
    return view.join_set(view.upper_covers(lo)) == hi


@dataclass(frozen=True)
class CoreData:
    """Pop images, core intervals, and the three label sets of one element."""

    element: str
    pop_down: str
    pop_up: str
    core_down: IntervalView
    core_up: IntervalView
    lab_down: tuple[str, ...]
    lab_up: tuple[str, ...]
    w_set: tuple[str, ...]


def core_data(lattice: Lattice, x: str) -> CoreData:
    """All core data for x, cross-checked against the closed formulas."""
    table = irreducible_table(lattice)
    kbar = kappa_bar_map(lattice)[x]
    pd = pop_down(lattice, x)
    pu = pop_up(lattice, x)
    core_dn = lattice.interval(pd, x)
    core_up_view = lattice.interval(kbar, pop_up(lattice, kbar))
    lab_down = j_label_interval(lattice, pd, x)
    lab_up = j_label_interval(lattice, kbar, core_up_view.hi)
    w_set = tuple(
        sorted(
            j
            for j in table.cji
            if lattice.leq(j, x) and lattice.leq(kbar, table.kappa[j])
        )
    )
    assert w_set == tuple(sorted(set(lab_down) & set(lab_up))), (
        f"W({x}) disagrees with lab_up & lab_down"
    )
    assert atom_labels(lattice, core_dn.lo, core_dn.hi) == atom_labels(
        lattice, core_up_view.lo, core_up_view.hi
    ), f"cores of {x} have different atom sets"
    return CoreData(
        element=x,
        pop_down=pd,
        pop_up=pu,
        core_down=core_dn,
        core_up=core_up_view,
        lab_down=lab_down,
        lab_up=lab_up,
        w_set=w_set,
    )


def lab_down_map(lattice: Lattice) -> dict[str, frozenset[str]]:
    """Lower core label set of every element, memoized."""
    cached = getattr(lattice, "_lab_down_map", None)
    if cached is None:
        cached = {
            x: frozenset(j_label_interval(lattice, pop_down(lattice, x), x))
            for x in lattice.names
        }
        lattice._lab_down_map = cached
    return cached


def lab_up_map(lattice: Lattice) -> dict[str, frozenset[str]]:
    """Upper core label set of every element, memoized."""
    cached = getattr(lattice, "_lab_up_map", None)
    if cached is None:
        kbar = kappa_bar_map(lattice)
        cached = {
            x: frozenset(j_label_interval(lattice, kbar[x], pop_up(lattice, kbar[x])))
            for x in lattice.names
        }
        lattice._lab_up_map = cached
    return cached


def w_map(lattice: Lattice) -> dict[str, frozenset[str]]:
    """W(x) = lab_up(x) & lab_down(x) for every element."""
    down = lab_down_map(lattice)
    up = lab_up_map(lattice)
    return {x: down[x] & up[x] for x in lattice.names}


class DerivedPoset:
    """A partial order derived from a lattice (kappa order or core label order)."""

    def __init__(self, kind: str, poset: Poset, source: Lattice):
        self.kind = kind
        self.poset = poset
        self.source = source

    @property
    def elements(self) -> tuple[str, ...]:
        return tuple(sorted(self.poset.names))

    def leq(self, a: str, b: str) -> bool:
        return self.poset.leq(a, b)

    def covers_named(self) -> tuple[tuple[str, str], ...]:
        return self.poset.covers_named()

    def relation_pairs(self) -> frozenset[tuple[str, str]]:
        return self.poset.relation_pairs()

    def is_lattice(self) -> bool:
        return self.poset.is_lattice_poset()

    def lattice_failure(self) -> Optional[tuple[str, str, str]]:
        return self.poset.lattice_failure()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DerivedPoset):
            return NotImplemented
        return self.poset == other.poset

    __hash__ = None


def kappa_order(lattice: Lattice) -> DerivedPoset:
    """x below y when x <= y in L and kappa_bar(y) <= kappa_bar(x)."""
    kbar = kappa_bar_map(lattice)

    def rel(a: str, b: str) -> bool:
        return lattice.leq(a, b) and lattice.leq(kbar[b], kbar[a])

    return DerivedPoset("kappaOrder", Poset.from_leq(lattice.names, rel), lattice)


def _label_order(lattice: Lattice, kind: str, labels: dict[str, frozenset[str]]) -> DerivedPoset:
    values = list(labels.values())
    assert len(set(values)) == len(values), f"{kind}: label sets do not separate elements"

    def rel(a: str, b: str) -> bool:
        return labels[a] <= labels[b]

    return DerivedPoset(kind, Poset.from_leq(lattice.names, rel), lattice)


def clo_down(lattice: Lattice) -> DerivedPoset:
    """Lower core label order: compare lab_down sets by inclusion."""
    return _label_order(lattice, "cloDown", lab_down_map(lattice))


def clo_up(lattice: Lattice) -> DerivedPoset:
    """Upper core label order: compare lab_up sets by inclusion."""
    return _label_order(lattice, "cloUp", lab_up_map(lattice))


@dataclass(frozen=True)
class OrdersReport:
    """Which of the three derived orders coincide, with witnesses when they do not.

    Each witness is an element whose relevant label sets differ, together
    with those sets.
    """

    kappa_equals_clo_down: bool
    kappa_equals_clo_up: bool
    clo_up_equals_clo_down: bool
    witness_kappa_clo_down: Optional[tuple[str, tuple[str, ...], tuple[str, ...]]]
    witness_kappa_clo_up: Optional[tuple[str, tuple[str, ...], tuple[str, ...]]]
    witness_clo_up_clo_down: Optional[tuple[str, tuple[str, ...], tuple[str, ...]]]


def orders_coincide_report(lattice: Lattice) -> OrdersReport:
    """Compare the three derived orders as relation sets.

    A flag is false exactly when some element separates the corresponding
    label sets (W vs lab_down, W vs lab_up, lab_up vs lab_down); the first
    such element in name order is reported.
    """
    down = lab_down_map(lattice)
    up = lab_up_map(lattice)
    w = w_map(lattice)
    rel_kappa = kappa_order(lattice).relation_pairs()
    rel_down = clo_down(lattice).relation_pairs()
    rel_up = clo_up(lattice).relation_pairs()

    def first_diff(left, right):
        for x in sorted(lattice.names):
            if left[x] != right[x]:
                return (x, tuple(sorted(left[x])), tuple(sorted(right[x])))
        return None

    wit_kd = first_diff(w, down)
    wit_ku = first_diff(w, up)
    wit_ud = first_diff(up, down)
    report = OrdersReport(
        kappa_equals_clo_down=rel_kappa == rel_down,
        kappa_equals_clo_up=rel_kappa == rel_up,
        clo_up_equals_clo_down=rel_up == rel_down,
        witness_kappa_clo_down=wit_kd,
        witness_kappa_clo_up=wit_ku,
        witness_clo_up_clo_down=wit_ud,
    )
    assert report.kappa_equals_clo_down == (wit_kd is None)
    assert report.kappa_equals_clo_up == (wit_ku is None)
    assert report.clo_up_equals_clo_down == (wit_ud is None)
    return report
