import itertools

import pytest

import bondlekit as bk
from bondlekit import BondleError


@pytest.fixture(scope="module")
def b1():
    return bk.affine_bondle(15, 4, 3, 6)


@pytest.fixture(scope="module")
def b2():
    return bk.affine_bondle(15, 2, 4, 10)


class TestConstruction:
    def test_constant_weights_example_values(self, b1):
        W = bk.constant_weights(b1, 6, 4, 5)
        assert W.m == 6
        assert all(v == 0 for row in W.phi for v in row)
        assert all(v == 4 for row in W.phi1 for v in row)
        assert all(v == 5 for row in W.phi2 for v in row)
        assert W.constant == (4, 5)

    def test_out_of_range_rejected(self, b1):
        with pytest.raises(BondleError):
            bk.constant_weights(b1, 6, 6, 0)
        with pytest.raises(BondleError):
            bk.constant_weights(b1, 6, 0, -1)

    def test_entry_range_checked(self, b1):
        zero = [[0] * 15 for _ in range(15)]
        bad = [row[:] for row in zero]
        bad[3][4] = 6
        with pytest.raises(BondleError):
            bk.new_weights(6, zero, bad, zero)

    def test_json_round_trip(self, b1):
        W = bk.constant_weights(b1, 6, 4, 5)
        again = bk.BoltzmannWeights.from_json(W.to_json())
        assert again == W


class TestCheckWeights:
    def test_example_weight_choices_pass(self, b1, b2):
        assert bk.check_weights(b1, bk.constant_weights(b1, 6, 4, 5)).passed
        assert bk.check_weights(b2, bk.constant_weights(b2, 6, 1, 3)).passed

    def test_all_36_constant_pairs_pass_on_both_bondles(self, b1, b2):
        for B in (b1, b2):
            for a, b in itertools.product(range(6), repeat=2):
                W = bk.constant_weights(B, 6, a, b)
                assert bk.check_weights(B, W).passed, (B.affine, a, b)

    def test_all_zero_weights_pass(self, b1):
        assert bk.check_weights(b1, bk.constant_weights(b1, 4, 0, 0)).passed

    def test_m_equal_one_always_passes(self, b1):
        assert bk.check_weights(b1, bk.constant_weights(b1, 1, 0, 0)).passed

    def test_nonconstant_phi1_fails_with_witness(self, b1):
        zero = [[0] * 15 for _ in range(15)]
        phi1 = [[x % 6 for _ in range(15)] for x in range(15)]
        W = bk.new_weights(6, zero, phi1, zero)
        report = bk.check_weights(b1, W)
        assert not report.passed
        axiom, witness = report.violations[0]
        assert axiom.startswith(("sing", "bond", "cocycle"))

    def test_dimension_mismatch_rejected(self, b1):
        zero3 = [[0] * 3 for _ in range(3)]
        W = bk.new_weights(6, zero3, zero3, zero3)
        with pytest.raises(BondleError):
            bk.check_weights(b1, W)

    def test_additive_closure_of_solutions(self, b1):
        Wa = bk.constant_weights(b1, 6, 4, 5)
        Wb = bk.constant_weights(b1, 6, 1, 3)
        summed = bk.new_weights(
            6,
            [[(x + y) % 6 for x, y in zip(r1, r2)] for r1, r2 in zip(Wa.phi, Wb.phi)],
            [[(x + y) % 6 for x, y in zip(r1, r2)] for r1, r2 in zip(Wa.phi1, Wb.phi1)],
            [[(x + y) % 6 for x, y in zip(r1, r2)] for r1, r2 in zip(Wa.phi2, Wb.phi2)],
        )
        assert bk.check_weights(b1, summed).passed


class TestSearchWeights:
    def test_includes_all_constant_solutions(self):
        B = bk.trivial_bondle(2, with_r3=True)
        sols, truncated = bk.search_weights(B, 2, budget=10**6)
        constants = {w.constant for w in sols if w.constant is not None}
        assert constants == {(a, b) for a in range(2) for b in range(2)}
        assert not truncated

    def test_zero_budget_truncates(self, b1):
        sols, truncated = bk.search_weights(b1, 6, budget=0)
        assert sols == []
        assert truncated

    def test_solutions_verified_by_checker(self, b1):
        sols, _ = bk.search_weights(b1, 2, budget=100)
        assert sols
        for W in sols:
            assert bk.check_weights(b1, W).passed
