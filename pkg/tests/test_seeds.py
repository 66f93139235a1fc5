"""Seed validation, mutation, quivers, canonical forms, mutation classes."""

from __future__ import annotations

import pytest

from clusterclass import (
    BaseRing,
    build_quiver,
    canonical_form,
    is_acyclic,
    isolated_indices,
    mutate,
    mutation_class,
    normalize_isolated,
    seed_from_dict,
    validate,
)
from clusterclass.errors import (
    ClusterError,
    IndexOutOfRange,
    NotSignSkewSymmetric,
    NotSkewSymmetrizable,
    ShapeMismatch,
    TooLargeForCanonicalization,
)

B3 = [[0, 2, 0], [-1, 0, 1], [0, -1, 0]]
MARKOV = [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]


class TestValidate:
    def test_skew_symmetric_passes(self):
        s = validate([[0, 1], [-1, 0]])
        assert (s.n, s.m) == (2, 0)
        assert s.symmetrizer == (1, 1)

    def test_zero_matrix_valid(self):
        s = validate([[0, 0], [0, 0]])
        assert s.symmetrizer == (1, 1)

    def test_b3_symmetrizer(self):
        s = validate(B3)
        assert s.symmetrizer == (1, 2, 2)
        for i in range(3):
            for j in range(3):
                assert s.symmetrizer[i] * s.b[i][j] == -s.symmetrizer[j] * s.b[j][i]

    def test_frozen_rows_counted(self):
        s = validate([[0, 1], [-1, 0], [5, -7]], n=2, m=1)
        assert (s.n, s.m) == (2, 1)

    def test_sign_violation(self):
        with pytest.raises(NotSignSkewSymmetric) as exc:
            validate([[0, 1], [1, 0]])
        assert exc.value.detail["pair"] == (1, 2)

    def test_nonzero_diagonal_rejected(self):
        with pytest.raises(NotSignSkewSymmetric):
            validate([[1, 0], [0, 0]])

    def test_zero_against_nonzero_rejected(self):
        with pytest.raises(NotSignSkewSymmetric):
            validate([[0, 2], [0, 0]])

    def test_not_symmetrizable(self):
        # 3-cycle with incompatible ratios: d2 = 2*d1, d3 = d2, but edge 3-1 forces d1 = 2*d3.
        b = [[0, 2, -1], [-1, 0, 1], [1, -1, 0]]
        with pytest.raises(NotSkewSymmetrizable) as exc:
            validate(b)
        cycle = exc.value.detail["cycle"]
        assert len(cycle) >= 3

    def test_symmetrizer_minimal(self):
        s = validate([[0, 2], [-1, 0]])
        assert s.symmetrizer == (1, 2)

    def test_ragged_rejected(self):
        with pytest.raises(ShapeMismatch):
            validate([[0, 1], [-1]])

    def test_bool_entry_rejected(self):
        with pytest.raises(ShapeMismatch):
            validate([[0, True], [-1, 0]])

    def test_wrong_declared_shape(self):
        with pytest.raises(ShapeMismatch):
            validate([[0, 1], [-1, 0]], n=3, m=0)


class TestMutate:
    def test_rank_two_flip(self):
        s = validate([[0, 1], [-1, 0]])
        assert mutate(s, 1).b == ((0, -1), (1, 0))

    def test_involution(self):
        s = validate(B3)
        assert mutate(mutate(s, 2), 2).b == s.b

    def test_known_value(self):
        s = validate([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
        t = mutate(s, 2)
        assert t.b == ((0, -1, 1), (1, 0, -1), (-1, 1, 0))

    def test_frozen_rows_updated(self):
        s = validate([[0, 2], [-1, 0], [1, 1]], n=2, m=1)
        t = mutate(s, 1)
        # row 3: b_31 flips; b_32 = 1 + (|1|*2 + 1*|2|)/2 = 3
        assert t.b[2] == (-1, 3)

    def test_mutating_frozen_index_rejected(self):
        s = validate([[0, 1], [-1, 0], [1, 0]], n=2, m=1)
        with pytest.raises(IndexOutOfRange):
            mutate(s, 3)

    def test_symmetrizer_preserved(self):
        s = validate(B3)
        for i in (1, 2, 3):
            t = mutate(s, i)
            assert t.symmetrizer == s.symmetrizer
            for a in range(3):
                for b in range(3):
                    assert t.symmetrizer[a] * t.b[a][b] == -t.symmetrizer[b] * t.b[b][a]

    def test_markov_cycle_preserved(self):
        s = validate(MARKOV)
        t = mutate(s, 1)
        assert t.b == ((0, -2, 2), (2, 0, -2), (-2, 2, 0))


class TestQuiver:
    def test_zero_matrix_no_arcs(self):
        q = build_quiver(validate([[0, 0], [0, 0]]))
        assert q.arcs == ()

    def test_principal_arcs(self):
        q = build_quiver(validate(B3))
        assert q.multiplicity(1, 2) == 2
        assert q.multiplicity(2, 3) == 1
        assert q.multiplicity(2, 1) == 0

    def test_frozen_arcs_both_directions(self):
        s = validate([[0, 1], [-1, 0], [2, -3]], n=2, m=1)
        q = build_quiver(s)
        # b_31 = 2 > 0: two arcs 3 -> 1; b_32 = -3: three arcs 2 -> 3
        assert q.multiplicity(3, 1) == 2
        assert q.multiplicity(2, 3) == 3

    def test_roundtrip_skew_symmetric(self):
        s = validate([[0, 1, 0], [-1, 0, 2], [0, -2, 0], [1, -1, 0]], n=3, m=1)
        assert build_quiver(s).to_seed().b == s.b

    def test_neighbors(self, big_quiver):
        q = build_quiver(big_quiver)
        assert 1 in q.neighbors(2)
        assert q.is_frozen(9) and q.is_frozen(10)
        assert not q.is_frozen(8)


class TestAcyclic:
    def test_path_acyclic(self):
        assert is_acyclic(validate([[0, 1, 0], [-1, 0, 1], [0, -1, 0]]))

    def test_markov_cyclic(self):
        assert not is_acyclic(validate(MARKOV))

    def test_big_quiver_acyclic(self, big_quiver):
        assert is_acyclic(big_quiver)

    def test_frozen_rows_ignored(self):
        # frozen arcs would close a cycle if counted; they must not
        s = validate([[0, 1], [-1, 0], [-1, 1]], n=2, m=1)
        assert is_acyclic(s)


class TestCanonical:
    def test_orientation_orbit(self):
        a = canonical_form(validate([[0, 1], [-1, 0]]))
        b = canonical_form(validate([[0, -1], [1, 0]]))
        assert a == b

    def test_distinguishes_weights(self):
        a = canonical_form(validate([[0, 1], [-1, 0]]))
        b = canonical_form(validate([[0, 2], [-1, 0]]))
        assert a != b

    def test_relabeling_invariant(self):
        s = validate([[0, 2, 0], [-1, 0, 1], [0, -1, 0]])
        t = validate(_permuted(s.b, (2, 0, 1)))
        assert canonical_form(s) == canonical_form(t)

    def test_guard_triggers(self):
        b = [[0] * 5 for _ in range(11)]
        s = validate(b, n=5, m=6)
        with pytest.raises(TooLargeForCanonicalization):
            canonical_form(s)
        assert canonical_form(s, guard=11).n == 5

    def test_guard_env_override(self, monkeypatch):
        b = [[0] * 5 for _ in range(11)]
        s = validate(b, n=5, m=6)
        monkeypatch.setenv("CLUSTERCLASS_CANON_GUARD", "12")
        assert canonical_form(s).m == 6

    def test_frozen_rows_sorted(self):
        a = validate([[0, 1], [-1, 0], [3, 0], [0, 2]], n=2, m=2)
        b = validate([[0, 1], [-1, 0], [0, 2], [3, 0]], n=2, m=2)
        assert canonical_form(a) == canonical_form(b)


def _permuted(b, sigma):
    n = len(sigma)
    return [[b[sigma[i]][sigma[j]] for j in range(n)] for i in range(n)]


class TestMutationClass:
    def test_rank_two_finite(self):
        result = mutation_class(validate([[0, 1], [-1, 0]]))
        assert result.complete and len(result.seeds) == 1

    def test_b3_class_closed_under_mutation(self):
        result = mutation_class(validate(B3))
        assert result.complete
        seeds = result.seeds
        for c in seeds:
            s = validate([list(row) for row in c.b], n=c.n, m=c.m)
            for i in range(1, c.n + 1):
                assert canonical_form(mutate(s, i)) in seeds
        assert len(seeds) == 5

    def test_markov_fixed_point(self):
        result = mutation_class(validate(MARKOV), cap=1)
        assert result.complete
        assert len(result.seeds) == 1

    def test_wild_acyclic_hits_cap(self):
        result = mutation_class(validate([[0, 2, 0], [-2, 0, 2], [0, -2, 0]]), cap=5)
        assert not result.complete
        assert len(result.seeds) >= 5


class TestNormalize:
    def test_isolated_indices(self, isolated_seed):
        assert isolated_indices(isolated_seed) == (1, 3)

    def test_unchanged_over_z(self, isolated_seed):
        result = normalize_isolated(isolated_seed, BaseRing.integers())
        assert result.seed.b == isolated_seed.b
        assert result.removed == ()

    def test_removed_over_field(self, isolated_seed):
        result = normalize_isolated(isolated_seed, BaseRing.rationals())
        assert result.removed == (1, 3)
        assert result.seed.n == 3
        assert result.seed.b == ((0, -1, -1), (1, 0, 0), (1, 0, 0))

    def test_no_isolated_noop(self):
        s = validate([[0, 1], [-1, 0]])
        result = normalize_isolated(s, BaseRing.rationals())
        assert result.seed.b == s.b and result.removed == ()

    def test_all_isolated_empty_seed(self):
        s = validate([[0, 0], [0, 0]])
        result = normalize_isolated(s, BaseRing.algebraically_closed())
        assert result.seed.n == 0


class TestSeedFromDict:
    def test_roundtrip(self, big_quiver):
        assert seed_from_dict(big_quiver.to_dict()).b == big_quiver.b

    def test_missing_keys(self):
        with pytest.raises(ShapeMismatch):
            seed_from_dict({"n": 2, "b": [[0, 1], [-1, 0]]})

    def test_not_an_object(self):
        with pytest.raises(ClusterError):
            seed_from_dict([[0, 1], [-1, 0]])
