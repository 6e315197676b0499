"""Exceptional sequences of join-irreducibles driven by the kappa_d map.

A tuple (j_k, ..., j_1) of completely join-irreducible elements is
kappa_d-exceptional when every j_i with i > 1 labels a cover inside
[j_1, pop_up(j_1)] and the tuple (j_k v j_1, ..., j_2 v j_1) is again
kappa_d-exceptional inside that interval.  Sequences act from the right;
they are stored rightmost-first internally and displayed leftmost-first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import Lattice
from .cores import DerivedPoset, clo_up, lab_up_map, pop_up
from .errors import NoBoundsError, NotJoinIrreducible, RecursionMismatch
from .irreducibles import (
    irreducible_table,
    j_label_interval,
    kappa_bar_map,
)


@dataclass(frozen=True)
class KdSequence:
    """One verified sequence, displayed in (j_k, ..., j_1) order."""

    entries: tuple[str, ...]
    verified: bool = True
    right_extendable: Optional[bool] = None


@dataclass(frozen=True)
class KdCheck:
    """Outcome of verifying one candidate sequence.

    ``position`` indexes the offending entry in display order; ``depth`` is
    the recursion level (0 checks the rightmost entry's interval).
    """

    ok: bool
    condition: Optional[int] = None
    position: Optional[int] = None
    entry: Optional[str] = None
    depth: int = 0

    def __bool__(self) -> bool:
        return self.ok


def is_kd_exceptional(lattice: Lattice, entries: Sequence[str]) -> KdCheck:
    """Verify the recursive conditions; empty and singleton sequences pass."""
    table = irreducible_table(lattice)
    entries = tuple(entries)
    for e in entries:
        if e not in table.jstar:
            raise NotJoinIrreducible(f"{e!r} is not completely join-irreducible")
    right_first = list(reversed(entries))
    positions = list(range(len(entries) - 1, -1, -1))
    result = _check(lattice, right_first, positions, 0)
    if result.ok:
        return result
    return KdCheck(
        ok=False,
        condition=result.condition,
        position=result.position,
        entry=entries[result.position],
        depth=result.depth,
    )


def _check(lattice: Lattice, seq: list[str], positions: list[int], depth: int) -> KdCheck:
    if len(seq) <= 1:
        return KdCheck(ok=True)
    j1 = seq[0]
    hi = pop_up(lattice, j1)
    allowed = set(j_label_interval(lattice, j1, hi))
    for k in range(1, len(seq)):
        if seq[k] not in allowed:
            return KdCheck(ok=False, condition=1, position=positions[k], depth=depth)
    sub = lattice.interval(j1, hi).as_lattice()
    sub_cji = set(irreducible_table(sub).cji)
    mapped = [lattice.join(j1, e) for e in seq[1:]]
    assert all(m in sub_cji for m in mapped), "transfer left cji of the interval"
    return _check(sub, mapped, positions[1:], depth + 1)


def enumerate_kd_exceptional(
    lattice: Lattice,
    maximal_only: bool = False,
    mark_right_extendable: bool = False,
) -> list[KdSequence]:
    """Enumerate all (or all maximal) sequences, sorted by display entries.

    Maximal means not extendable by another entry on the left.  With
    ``mark_right_extendable`` each result also records whether one more
    entry could be appended on the right instead.
    """
    everything = {tuple(reversed(rf)): is_max for rf, is_max in _enumerate(lattice)}
    everything.pop((), None)
    chosen = sorted(e for e, is_max in everything.items() if is_max or not maximal_only)
    cji = irreducible_table(lattice).cji
    out = []
    for entries in chosen:
        flag = None
        if mark_right_extendable:
            flag = any(
                bool(is_kd_exceptional(lattice, entries + (j0,))) for j0 in cji
            )
        out.append(KdSequence(entries=entries, right_extendable=flag))
    return out


def _enumerate(lattice: Lattice) -> list[tuple[list[str], bool]]:
    """All sequences in rightmost-first order, flagged maximal or not.

    The empty sequence is included and is maximal exactly when the lattice
    has no join-irreducibles (a single point).
    """
    table = irreducible_table(lattice)
    out: list[tuple[list[str], bool]] = [([], not table.cji)]
    for j1 in table.cji:
        hi = pop_up(lattice, j1)
        labels = j_label_interval(lattice, j1, hi)
        sub = lattice.interval(j1, hi).as_lattice()
        back = {lattice.join(j1, j): j for j in labels}
        for inner, inner_max in _enumerate(sub):
            out.append(([j1] + [back[e] for e in inner], inner_max))
    return out


@dataclass(frozen=True)
class CloLabeling:
    """A labeling of the covers of the upper core label order by cji names.

    ``label_leq`` carries the strict order the labels inherit from the
    source lattice, for use as a search constraint by the EL machinery.
    """

    poset: DerivedPoset
    labels: dict[tuple[str, str], str]
    label_leq: frozenset[tuple[str, str]]

    def to_labeled_poset(self):
        from .shelling import LabeledPoset

        alphabet = tuple(sorted(set(self.labels.values())))
        return LabeledPoset(
            poset=self.poset.poset,
            labels=dict(self.labels),
            alphabet=alphabet,
            label_leq=self.label_leq,
        )


def label_clo_up(lattice: Lattice) -> CloLabeling:
    """Label the upper core label order by recursing through upper cores.

    Each cover u below the top of the derived order is labeled kappa_bar(u);
    the ideal below u is identified with the derived order of the interval
    [j, pop_up(j)] for j = kappa_bar(u) and labeled recursively.  Any failure
    of the identification raises RecursionMismatch; the construction is only
    known to succeed example-by-example.
    """
    derived = clo_up(lattice)
    up_sets = lab_up_map(lattice)
    by_set = {v: k for k, v in up_sets.items()}
    keyed = _recursive_labels(lattice)

    covers = set(derived.covers_named())
    labels: dict[tuple[str, str], str] = {}
    for (set_lo, set_hi), lbl in keyed.items():
        lo = by_set.get(set_lo)
        hi = by_set.get(set_hi)
        if lo is None or hi is None:
            raise RecursionMismatch(
                "recursive label set does not match any element of the derived order"
            )
        if (lo, hi) not in covers:
            raise RecursionMismatch(
                f"recursion labeled ({lo!r}, {hi!r}), which is not a cover of the derived order"
            )
        labels[(lo, hi)] = lbl
    if len(labels) != len(covers):
        missing = sorted(covers - set(labels))
        raise RecursionMismatch(f"covers left unlabeled: {missing[:4]}")

    table = irreducible_table(lattice)
    inherited = frozenset(
        (a, b) for a in table.cji for b in table.cji if a != b and lattice.leq(a, b)
    )
    return CloLabeling(poset=derived, labels=labels, label_leq=inherited)


def _recursive_labels(lattice: Lattice) -> dict[tuple[frozenset, frozenset], str]:
    """Cover labels keyed by (lab_up(lower), lab_up(upper)) in cji names."""
    table = irreducible_table(lattice)
    if not table.cji:
        return {}
    derived = clo_up(lattice)
    try:
        top = derived.poset.top_name()
    except NoBoundsError as exc:
        raise RecursionMismatch(
            f"derived order has no unique top element ({exc}); "
            "the lattice is not a nuclear interval"
        ) from None
    up_sets = lab_up_map(lattice)
    kbar = kappa_bar_map(lattice)
    full = up_sets[top]
    out: dict[tuple[frozenset, frozenset], str] = {}
    for u in derived.poset.lower_covers(top):
        j = kbar[u]
        if j not in table.jstar:
            raise RecursionMismatch(
                f"kappa_bar({u!r}) = {j!r} is not completely join-irreducible"
            )
        out[(up_sets[u], full)] = j
        hi = pop_up(lattice, j)
        back = {lattice.join(j, lbl): lbl for lbl in j_label_interval(lattice, j, hi)}
        sub = lattice.interval(j, hi).as_lattice()
        for (set_lo, set_hi), lbl in _recursive_labels(sub).items():
            key = (
                frozenset(back[a] for a in set_lo),
                frozenset(back[a] for a in set_hi),
            )
            mapped = back[lbl]
            if key in out and out[key] != mapped:
                raise RecursionMismatch(
                    f"conflicting labels {out[key]!r} and {mapped!r} for one cover"
                )
            out[key] = mapped
    return out
