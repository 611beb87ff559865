import random

import pytest

from brute import brute_realizations
from forestdom.construct import random_forest
from forestdom.degseq import DegreeSequence, validate
from forestdom.formulas import extremal_values
from forestdom.oracle import (
    DEFAULT_SIZE_CAP,
    SizeCapExceededError,
    _canonical_key,
    empirical_extremes,
    enumerate_realizations,
    sweep_sequences,
    swap_search_gamma,
)

# labeled count, iso count, gamma range, alpha range; all double-checked
# against the subset-search enumerator in brute.py
FROZEN = [
    ((2, 1, 1), 1, 1, (1, 1), (2, 2)),
    ((3, 1, 1, 1), 1, 1, (1, 1), (3, 3)),
    ((1, 1, 1, 1), 3, 1, (2, 2), (2, 2)),
    ((2, 1, 1, 1, 1), 6, 1, (2, 2), (3, 3)),
    ((2, 2, 2, 1, 1), 6, 1, (2, 2), (3, 3)),
    ((2, 2, 2, 2, 1, 1), 24, 1, (2, 2), (3, 3)),
    ((3, 2, 1, 1, 1, 1, 1), 40, 2, (2, 3), (4, 5)),
    ((2, 2, 1, 1, 1, 1, 1, 1), 180, 2, (3, 4), (4, 5)),
]


@pytest.mark.parametrize("seq,labeled,iso,g,a", FROZEN)
def test_empirical_extremes_frozen(seq, labeled, iso, g, a):
    report = empirical_extremes(seq)
    assert report.sequence == DegreeSequence(seq)
    assert report.realization_count_labeled == labeled
    assert report.realization_count_iso == iso
    assert (report.gamma_min, report.gamma_max) == g
    assert (report.alpha_min, report.alpha_max) == a


def test_witnesses_attain_their_extremes():
    for seq, *_ in FROZEN:
        report = empirical_extremes(seq)
        for witness in (report.witness_gamma_max, report.witness_alpha_min):
            assert witness.degree_sequence() == DegreeSequence(seq)
        assert report.witness_gamma_max.domination_number()[0] == report.gamma_max
        assert report.witness_alpha_min.independence_number()[0] == report.alpha_min


def test_labeled_enumeration_is_duplicate_free():
    seen = set()
    for forest in enumerate_realizations((2, 2, 1, 1, 1, 1, 1, 1)):
        assert forest.edges not in seen
        seen.add(forest.edges)
    assert len(seen) == 180


def test_enumeration_matches_independent_enumerator():
    for seq in sweep_sequences(7):
        ours = sorted(f.edges for f in enumerate_realizations(seq))
        theirs = sorted(tuple(sorted(e)) for e in brute_realizations(seq.degrees))
        assert ours == theirs


def test_iso_pass_preserves_extremes():
    # the symmetry pruning may drop labelled variants but never a class,
    # so folding over class representatives gives the same extremes
    for seq in sweep_sequences(7):
        gammas = set()
        alphas = set()
        for forest in enumerate_realizations(seq):
            gammas.add(forest.domination_number()[0])
            alphas.add(forest.independence_number()[0])
        report = empirical_extremes(seq)
        assert report.gamma_min == min(gammas)
        assert report.gamma_max == max(gammas)
        assert report.alpha_min == min(alphas)
        assert report.alpha_max == max(alphas)
        assert report.realization_count_iso <= report.realization_count_labeled


def test_empirical_extremes_match_closed_forms():
    for seq in sweep_sequences(7):
        report = empirical_extremes(seq)
        values = extremal_values(seq)
        assert report.gamma_max == values.gamma_max
        assert report.alpha_min == values.alpha_min


def test_zero_entries_become_isolated_vertices():
    report = empirical_extremes((1, 1, 0))
    assert report.realization_count_labeled == 1
    assert (report.gamma_min, report.gamma_max) == (2, 2)
    assert (report.alpha_min, report.alpha_max) == (2, 2)
    assert report.witness_gamma_max.degree(2) == 0


def test_size_cap():
    too_long = (1,) * (DEFAULT_SIZE_CAP + 2)
    with pytest.raises(SizeCapExceededError):
        next(enumerate_realizations(too_long))
    with pytest.raises(SizeCapExceededError):
        empirical_extremes(too_long)
    with pytest.raises(SizeCapExceededError):
        next(enumerate_realizations((2, 1, 1), cap=2))
    # only positive entries count against the cap
    padded = (1, 1) + (0,) * DEFAULT_SIZE_CAP
    assert sum(1 for _ in enumerate_realizations(padded)) == 1


def test_canonical_key_is_relabelling_invariant():
    rng = random.Random(7)
    for trial in range(25):
        forest = random_forest(9, rng.randint(1, 3), seed=trial)
        perm = list(range(forest.n))
        rng.shuffle(perm)
        mapped = [(perm[u], perm[v]) for u, v in forest.edges]
        assert _canonical_key(forest.n, forest.edges) == _canonical_key(
            forest.n, mapped
        )


def test_canonical_key_separates_shapes():
    path = [(0, 1), (1, 2), (2, 3)]
    star = [(0, 1), (0, 2), (0, 3)]
    assert _canonical_key(4, path) != _canonical_key(4, star)


# ----------------------------------------------------------------------
# sweep_sequences


def test_sweep_starts_with_smallest_sequence():
    assert list(sweep_sequences(3)) == [DegreeSequence((2, 1, 1))]


def test_sweep_order_at_four():
    assert list(sweep_sequences(4)) == [
        DegreeSequence((2, 1, 1)),
        DegreeSequence((3, 1, 1, 1)),
        DegreeSequence((2, 2, 1, 1)),
    ]


def test_sweep_counts_frozen():
    assert sum(1 for _ in sweep_sequences(10)) == 109
    assert sum(1 for _ in sweep_sequences(12)) == 247


def test_sweep_members_are_valid_and_unique():
    seen = set()
    for seq in sweep_sequences(8):
        assert seq.degrees not in seen
        seen.add(seq.degrees)
        stats = validate(seq)
        assert stats.n0 == 0
        assert stats.n_ge2 >= 1
        assert stats.c >= 1


def test_sweep_rejects_tiny_bound():
    with pytest.raises(ValueError):
        next(sweep_sequences(1))
    assert list(sweep_sequences(2)) == []


# ----------------------------------------------------------------------
# swap search


def test_swap_search_returns_a_realization():
    for seq in [(2, 2, 1, 1, 1, 1, 1, 1), (3, 2, 1, 1, 1, 1, 1), (4, 2, 1, 1, 1, 1)]:
        found = swap_search_gamma(seq, restarts=5, seed=3)
        assert found.degree_sequence() == DegreeSequence(seq)
        assert found.domination_number()[0] <= extremal_values(seq).gamma_max


def test_swap_search_attains_known_maxima():
    found = swap_search_gamma((2, 2, 1, 1, 1, 1, 1, 1), restarts=10, seed=1)
    assert found.domination_number()[0] == 4
    found = swap_search_gamma((2, 2, 2, 1, 1), restarts=1, seed=0)
    assert found.domination_number()[0] == 2


def test_swap_search_is_seed_deterministic():
    a = swap_search_gamma((3, 2, 2, 1, 1, 1, 1, 1), restarts=6, seed=42)
    b = swap_search_gamma((3, 2, 2, 1, 1, 1, 1, 1), restarts=6, seed=42)
    assert a == b
