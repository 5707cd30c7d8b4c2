import math

import numpy as np
import pytest

from simplexmodes.modes import (
    ModeBasis,
    cyclic_operators,
    cyclic_projector,
    lower_dim_modes,
    periodic_basis,
    sample_points,
    verify_invariance,
    young_operator,
    young_rank,
)
from simplexmodes.permgroup import (
    Partition,
    partitions_of,
    trivial_multiplicity,
)
from simplexmodes.reduction import (
    O2Label,
    O3Label,
    multiplicity_o4_s5,
    periodic_count_o4,
)
from simplexmodes.weylaction import operator_matrix


class TestCyclicProjector:
    def test_group_closure(self):
        ops = cyclic_operators()
        assert len(ops) == 5
        assert not any(op.reflective for op in ops)
        assert ops[0].g_l.isclose(ops[0].g_r) and ops[0].g_l.z1 == 1.0

    def test_degree_zero(self):
        p = cyclic_projector(0)
        assert p.shape == (1, 1)
        assert abs(p[0, 0] - 1.0) < 1e-12

    def test_degree_one_vanishes(self):
        assert np.abs(cyclic_projector(1)).max() < 1e-12

    @pytest.mark.parametrize("two_j", range(11))
    def test_hermitian_idempotent_with_correct_rank(self, two_j):
        p = cyclic_projector(two_j)
        assert np.abs(p - p.conj().T).max() < 1e-10
        assert np.abs(p @ p - p).max() < 1e-9
        rank = int(round(np.trace(p).real))
        assert abs(np.trace(p).real - rank) < 1e-8
        assert rank == periodic_count_o4(two_j)

    def test_range_guard(self):
        with pytest.raises(ValueError):
            cyclic_projector(13)


class TestPeriodicBasis:
    @pytest.mark.parametrize("two_j,count", [(0, 1), (1, 0), (2, 1), (3, 4), (4, 5)])
    def test_counts(self, two_j, count):
        assert periodic_basis(two_j).count == count

    def test_columns_orthonormal_and_fixed(self):
        for two_j in (2, 3, 4, 5):
            basis = periodic_basis(two_j)
            c = basis.coefficients
            assert np.abs(c.conj().T @ c - np.eye(basis.count)).max() < 1e-10
            p = cyclic_projector(two_j)
            assert np.abs(p @ c - c).max() < 1e-9

    def test_partition_tags(self):
        basis = periodic_basis(5)
        counts = {}
        for f in basis.partitions:
            counts[f.parts] = counts.get(f.parts, 0) + 1
        for parts, got in counts.items():
            f = Partition(parts)
            assert got == multiplicity_o4_s5(5, f) * trivial_multiplicity(f)
        assert sum(counts.values()) == periodic_count_o4(5)

    def test_stable_under_deck_operators(self):
        basis = periodic_basis(4)
        c = basis.coefficients
        for op in cyclic_operators():
            moved = operator_matrix(2, op) @ c
            gram = moved.conj().T @ moved
            assert np.abs(gram - np.eye(basis.count)).max() < 1e-9
            # and each column is individually fixed
            assert np.abs(moved - c).max() < 1e-9

    def test_phase_canonicalization(self):
        basis = periodic_basis(3)
        for col in basis.coefficients.T:
            lead = next(v for v in col if abs(v) > 1e-8)
            assert abs(lead.imag) < 1e-10
            assert lead.real > 0

    def test_deterministic(self):
        a = periodic_basis(3).coefficients
        b = periodic_basis(3).coefficients
        assert np.array_equal(a, b)


class TestYoungOperators:
    def test_composition_rule(self):
        f = Partition.of(3, 2)
        g = Partition.of(2, 2, 1)
        two_j = 2
        c_f_01 = young_operator(two_j, f, 0, 1).matrix
        c_f_11 = young_operator(two_j, f, 1, 1).matrix
        c_f_00 = young_operator(two_j, f, 0, 0).matrix
        c_f_10 = young_operator(two_j, f, 1, 0).matrix
        # c^f_{0,1} c^f_{1,1} = c^f_{0,1} and c^f_{0,1} c^f_{0,0} = 0
        assert np.abs(c_f_01 @ c_f_11 - c_f_01).max() < 1e-9
        assert np.abs(c_f_01 @ c_f_00).max() < 1e-9
        # c^f_{1,0} c^f_{0,1} = c^f_{1,1}; mixed partitions annihilate
        assert np.abs(c_f_10 @ c_f_01 - c_f_11).max() < 1e-9
        c_g = young_operator(two_j, g, 0, 1).matrix
        assert np.abs(c_g @ c_f_11).max() < 1e-9

    def test_adjoint_rule(self):
        f = Partition.of(3, 1, 1)
        for two_j in (1, 3):
            a = young_operator(two_j, f, 0, 2).matrix
            b = young_operator(two_j, f, 2, 0).matrix
            assert np.abs(a.conj().T - b).max() < 1e-9

    def test_diagonal_operators_are_projectors(self):
        f = Partition.of(3, 2)
        c = young_operator(4, f, 2, 2).matrix
        assert np.abs(c @ c - c).max() < 1e-9
        assert np.abs(c - c.conj().T).max() < 1e-9

    @pytest.mark.parametrize("two_j", range(7))
    def test_rank_equals_multiplicity(self, two_j):
        for f in partitions_of(5):
            assert young_rank(two_j, f) == multiplicity_o4_s5(two_j, f)

    @pytest.mark.parametrize("two_j", range(7))
    def test_rank_dimension_budget(self, two_j):
        total = sum(young_rank(two_j, f) * f.dimension for f in partitions_of(5))
        assert total == (two_j + 1) ** 2

    def test_spec_examples(self):
        assert young_rank(2, Partition.of(3, 2)) == 1
        assert young_rank(3, Partition.of(3, 1, 1)) == 1
        assert young_rank(0, Partition.of(5)) == 1
        for f in partitions_of(5):
            if f != Partition.of(5):
                assert young_rank(0, f) == 0


class TestInvariance:
    def test_sampling_is_deterministic(self):
        a = sample_points(5, 42)
        b = sample_points(5, 42)
        assert all(x.u.isclose(y.u) for x, y in zip(a, b))
        assert a[0].seed == 42 and a[3].index == 3

    @pytest.mark.parametrize("two_j", [0, 2, 3, 4, 5])
    def test_periodic_modes_are_invariant(self, two_j):
        basis = periodic_basis(two_j)
        assert verify_invariance(basis, 100, 20080514) < 1e-9

    def test_negative_control(self):
        # a degree-1 harmonic cannot be periodic: no invariants exist there
        coeffs = np.zeros((4, 1), dtype=complex)
        coeffs[0, 0] = 1.0
        rogue = ModeBasis(1, coeffs, (None,))
        assert verify_invariance(rogue, 100, 20080514) > 0.1


class TestLowerDimensionalModes:
    def test_circle_allowed(self):
        desc = lower_dim_modes("circle", O2Label(3, 1))
        assert desc.allowed
        assert desc.components[0].partition == Partition.of(3)
        amp = 1 / math.sqrt(2)
        assert np.allclose(desc.components[0].coefficients, (amp, -amp))

    def test_circle_constant(self):
        desc = lower_dim_modes("circle", O2Label(0))
        assert desc.allowed
        assert desc.components[0].coefficients == (1.0,)

    def test_circle_excluded(self):
        desc = lower_dim_modes("circle", O2Label(2, 1))
        assert not desc.allowed
        assert desc.reason == "excluded by selection rule"
        assert desc.components == ()

    def test_sphere_excluded(self):
        desc = lower_dim_modes("sphere2", O3Label(1, -1))
        assert not desc.allowed

    def test_sphere_allowed(self):
        desc = lower_dim_modes("sphere2", O3Label(3, -1))
        assert desc.allowed
        partitions = sorted(str(c.partition) for c in desc.components)
        assert partitions == ["[211]", "[4]"]
        vec = next(
            c.coefficients
            for c in desc.components
            if c.partition == Partition.of(2, 1, 1)
        )
        want = (math.sqrt(1 / 2), math.sqrt(1 / 6), math.sqrt(1 / 3))
        assert np.allclose(vec, want)

    def test_label_type_guard(self):
        with pytest.raises(ValueError):
            lower_dim_modes("circle", O3Label(1, -1))
        with pytest.raises(ValueError):
            lower_dim_modes("torus", O2Label(0))
