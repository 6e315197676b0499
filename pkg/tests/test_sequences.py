import itertools

import pytest

import sdlat as S
from sdlat import NotJoinIrreducible, RecursionMismatch

from conftest import sd_family_lattices

FIG1_MAXIMAL = {
    ("j1", "j2", "j4"),
    ("j1", "j3", "j2"),
    ("j2", "j1", "j4"),
    ("j2", "j3", "j1"),  # the seventh sequence, fixed by enumeration
    ("j3", "j1", "j2"),
    ("j3", "j2", "j1"),
    ("j4", "j3"),
}

FIG4_MAXIMAL = {
    ("j5", "j2", "j1"),
    ("j3", "j5", "j1"),
    ("j2", "j3", "j1"),
    ("j5", "j1", "j2"),
    ("j3", "j5", "j2"),
    ("j1", "j3", "j2"),
    ("j4", "j3"),
    ("j2", "j1", "j4"),
    ("j1", "j2", "j4"),
    ("j3", "j5"),
}


def _brute_force_sequences(lat):
    cji = S.irreducible_table(lat).cji
    found = set()
    for length in range(1, lat.height() + 1):
        for tup in itertools.product(cji, repeat=length):
            if S.is_kd_exceptional(lat, tup):
                found.add(tup)
    return found


def test_verify_golden(fig1):
    assert S.is_kd_exceptional(fig1, ("j4", "j3"))
    for j in S.irreducible_table(fig1).cji:
        assert S.is_kd_exceptional(fig1, (j,))
    assert S.is_kd_exceptional(fig1, ())

    check = S.is_kd_exceptional(fig1, ("j1", "j3"))
    assert not check
    assert check.condition == 1
    assert check.position == 0
    assert check.entry == "j1"

    with pytest.raises(NotJoinIrreducible):
        S.is_kd_exceptional(fig1, ("m1",))


def test_fig1_maximal(fig1):
    seqs = S.enumerate_kd_exceptional(fig1, maximal_only=True, mark_right_extendable=True)
    assert {s.entries for s in seqs} == FIG1_MAXIMAL
    assert len(seqs) == 7
    assert all(s.right_extendable is False for s in seqs)


def test_fig4_maximal(fig4):
    seqs = S.enumerate_kd_exceptional(fig4, maximal_only=True, mark_right_extendable=True)
    assert {s.entries for s in seqs} == FIG4_MAXIMAL
    assert len(seqs) == 10
    by_entries = {s.entries: s for s in seqs}
    assert by_entries[("j3", "j5")].right_extendable is True
    assert sum(bool(s.right_extendable) for s in seqs) == 1


def test_chain_sequences():
    chain = S.generate("chain", 2)
    everything = {s.entries for s in S.enumerate_kd_exceptional(chain)}
    assert everything == {("c1",), ("c2",), ("c2", "c1")}
    maximal = {s.entries for s in S.enumerate_kd_exceptional(chain, maximal_only=True)}
    assert maximal == {("c2", "c1"), ("c2",)}
    assert everything == _brute_force_sequences(chain)


def test_enumerator_matches_brute_force(small_sd_lattices):
    pool = [lat for lat in sd_family_lattices(max_size=10)] + small_sd_lattices[:20]
    for lat in pool:
        expected = _brute_force_sequences(lat)
        got = {s.entries for s in S.enumerate_kd_exceptional(lat)}
        assert got == expected


def test_verifier_accepts_enumerator(fig4, small_sd_lattices):
    for lat in [fig4] + small_sd_lattices[:20]:
        for seq in S.enumerate_kd_exceptional(lat):
            assert S.is_kd_exceptional(lat, seq.entries)


def test_suffixes_remain_exceptional(fig1, fig4):
    for lat in (fig1, fig4):
        for seq in S.enumerate_kd_exceptional(lat):
            for start in range(1, len(seq.entries)):
                assert S.is_kd_exceptional(lat, seq.entries[start:])


def test_entries_distinct_and_short(small_sd_lattices):
    for lat in sd_family_lattices(max_size=10) + small_sd_lattices[:20]:
        height = lat.height()
        for seq in S.enumerate_kd_exceptional(lat):
            assert len(set(seq.entries)) == len(seq.entries)
            assert len(seq.entries) <= height


def test_maximal_means_not_left_extendable(fig1, small_sd_lattices):
    for lat in [fig1] + small_sd_lattices[:15]:
        cji = S.irreducible_table(lat).cji
        everything = {s.entries for s in S.enumerate_kd_exceptional(lat)}
        maximal = {s.entries for s in S.enumerate_kd_exceptional(lat, maximal_only=True)}
        for entries in everything:
            extendable = any((j,) + entries in everything for j in cji)
            assert (entries in maximal) == (not extendable)


FIG1_CLO_LABELS = {
    ("bot", "j1"): "j1",
    ("bot", "j2"): "j2",
    ("bot", "j3"): "j3",
    ("bot", "j4"): "j4",
    ("j1", "m2"): "j3",
    ("j1", "m3"): "j2",
    ("j2", "m1"): "j3",
    ("j2", "m3"): "j1",
    ("j3", "m1"): "j2",
    ("j3", "m2"): "j1",
    ("j4", "top"): "j3",
    ("m1", "top"): "j1",
    ("m2", "top"): "j2",
    ("m3", "top"): "j4",
}


def test_label_clo_up_fig1(fig1):
    labeling = S.label_clo_up(fig1)
    assert labeling.labels == FIG1_CLO_LABELS
    top_covers = {lo: lbl for (lo, hi), lbl in labeling.labels.items() if hi == "top"}
    assert top_covers == {"m1": "j1", "m2": "j2", "m3": "j4", "j4": "j3"}


def test_label_clo_up_top_covers_are_kappa_bar(fig1, fig4):
    for lat in (fig1, fig4):
        labeling = S.label_clo_up(lat)
        top = labeling.poset.poset.top_name()
        for (lo, hi), lbl in labeling.labels.items():
            if hi == top:
                assert lbl == S.kappa_bar(lat, lo)


def test_label_clo_up_fig4_double_label(fig4):
    labeling = S.label_clo_up(fig4)
    assert labeling.labels[("j3", "m1")] == "j5"
    assert labeling.labels[("j3", "m2")] == "j5"


def test_label_clo_up_two_element_chain():
    chain = S.generate("chain", 1)
    labeling = S.label_clo_up(chain)
    assert labeling.labels == {("c0", "c1"): "c1"}


def test_label_clo_up_needs_nuclear_top():
    # The recursive labeling anchors at the top of the derived order, which
    # only exists when the whole lattice is a nuclear interval; longer chains
    # are not, and the failure is reported rather than papered over.
    with pytest.raises(RecursionMismatch):
        S.label_clo_up(S.generate("chain", 2))


def test_maximal_count_matches_clo_up_chains_fig1(fig1):
    # On the running example the maximal sequences biject with the maximal
    # chains of the upper core label order.
    poset = S.clo_up(fig1).poset
    top, bot = poset.top_name(), poset.bottom_name()

    def chains(frm):
        if frm == top:
            return 1
        return sum(chains(nxt) for nxt in poset.upper_covers(frm))

    assert chains(bot) == 7
