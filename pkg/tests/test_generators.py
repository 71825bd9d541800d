import math

import pytest

import coneapprox as ca
from coneapprox import generators as gen
from coneapprox.errors import InvalidParams, KTooLarge

PI = math.pi


class TestSingleConeTrap:
    def test_reference_values(self):
        inst = gen.single_cone_trap(2.0, 3 * PI / 4, PI / 4)
        objs = {s.id: s.objectives for s in inst.solutions}
        assert objs["x1"] == pytest.approx((1.0, 1.0), abs=1e-12)
        assert objs["x2"] == pytest.approx((2.0, 1.0 / 3.0), abs=1e-12)

    @pytest.mark.parametrize("alpha", [1.5, 2.0, 4.0])
    @pytest.mark.parametrize("gamma", [2 * PI / 3, 3 * PI / 4, PI])
    def test_claims_hold_across_grid(self, alpha, gamma):
        for phi in (gamma / 2 - PI / 4, gamma - PI / 2):
            if not ca.admissible(gamma, phi) or phi <= 0.0:
                with pytest.raises(InvalidParams):
                    gen.single_cone_trap(alpha, gamma, phi)
                continue
            inst = gen.single_cone_trap(alpha, gamma, phi)
            assert ca.validate(inst) == []
            assert ca.cone_efficient_set(inst, ca.ConeParams(gamma, phi)) == {"x1"}
            assert not ca.verify_approx_set(inst, {"x1"}, alpha).is_valid
            assert ca.verify_approx_set(inst, {"x2"}, alpha).is_valid

    def test_rejects_alpha_one(self):
        with pytest.raises(InvalidParams):
            gen.single_cone_trap(1.0, 3 * PI / 4, PI / 4)

    def test_rejects_halfplane_axis_rotation(self):
        with pytest.raises(InvalidParams):
            gen.single_cone_trap(2.0, PI, PI / 2)


class TestEveryRotationTrap:
    def test_reference_values(self):
        inst = gen.every_rotation_trap(1.0, 3 * PI / 4)
        objs = {s.id: s.objectives for s in inst.solutions}
        assert objs["x1"] == pytest.approx((2.0, 1.0), abs=1e-12)
        assert objs["x2"] == pytest.approx((1.0, 3.0), abs=1e-12)

    @pytest.mark.parametrize("alpha", [1.0, 2.0])
    @pytest.mark.parametrize("gamma", [2 * PI / 3, 3 * PI / 4, 0.9 * PI])
    def test_first_solution_always_optimal_but_no_cover(self, alpha, gamma):
        inst = gen.every_rotation_trap(alpha, gamma)
        assert ca.validate(inst) == []
        assert ca.optimal_phi_set(inst, gamma, "x1").is_full()
        assert not ca.is_alpha_approx_pair(inst, None, "x1", "x2", alpha)

    def test_rejects_halfplane(self):
        with pytest.raises(InvalidParams):
            gen.every_rotation_trap(1.0, PI)


class TestTightnessInstance:
    @pytest.mark.parametrize("alpha", [1.0, 2.0])
    @pytest.mark.parametrize("gamma", [PI / 2 + 0.1, 3 * PI / 4, PI - 0.01, PI])
    @pytest.mark.parametrize("epsilon", [0.05, 0.2])
    def test_claims_hold_across_grid(self, alpha, gamma, epsilon):
        inst = gen.tightness_instance(alpha, gamma, epsilon)
        assert ca.validate(inst) == []
        assert ca.is_alpha_approx_for_all_rotations(inst, {"x1", "x2"}, gamma, alpha)
        level = alpha * ca.guarantee_factor(gamma) - epsilon
        assert ca.min_alpha(inst, {"x1", "x2"}) > level + ca.TAU_VAL

    def test_right_angle_cone_is_fine(self):
        inst = gen.tightness_instance(2.0, PI / 2, 0.5)
        assert ca.validate(inst) == []
        assert ca.is_alpha_approx_for_all_rotations(inst, {"x1", "x2"}, PI / 2, 2.0)

    def test_rejects_bad_params(self):
        with pytest.raises(InvalidParams):
            gen.tightness_instance(0.5, PI, 0.1)
        with pytest.raises(InvalidParams):
            gen.tightness_instance(1.0, PI, 0.0)


class TestMaximizationTrap:
    @pytest.mark.parametrize("alpha", [1.0, 2.0, 10.0])
    @pytest.mark.parametrize("gamma", [2 * PI / 3, 3 * PI / 4, PI])
    def test_claims_hold_across_grid(self, alpha, gamma):
        inst = gen.maximization_trap(alpha, gamma)
        assert inst.sense == "max"
        assert ca.validate(inst) == []
        assert ca.optimal_phi_set(inst, gamma, "x3").is_empty()
        assert "x3" in ca.efficient_set(inst)
        assert not ca.verify_approx_set(inst, {"x1", "x2"}, alpha).is_valid

    def test_rejects_right_angle(self):
        with pytest.raises(InvalidParams):
            gen.maximization_trap(1.0, PI / 2)


class TestRandomFront:
    def test_convex_all_supported(self):
        for n in (1, 2, 8, 30):
            inst = gen.random_front(n, seed=3, shape="convex")
            assert ca.validate(inst) == []
            ids = set(inst.ids())
            assert ca.efficient_set(inst) == ids
            assert ca.supported_set(inst) == ids

    def test_concave_extremes_only(self):
        inst = gen.random_front(9, seed=4, shape="concave")
        assert ca.validate(inst) == []
        assert ca.efficient_set(inst) == set(inst.ids())
        arr = inst.objective_array()
        lo = inst.solutions[int(arr[:, 0].argmin())].id
        hi = inst.solutions[int(arr[:, 0].argmax())].id
        assert ca.supported_set(inst) == {lo, hi}

    def test_mixed_noise_dominated(self):
        inst = gen.random_front(30, seed=5, shape="mixed")
        assert ca.validate(inst) == []
        eff = ca.efficient_set(inst)
        assert all(not sid.startswith("noise") for sid in eff)

    def test_reproducible(self):
        a = gen.random_front(20, seed=9, shape="mixed")
        b = gen.random_front(20, seed=9, shape="mixed")
        assert a == b
        c = gen.random_front(20, seed=10, shape="mixed")
        assert a != c

    def test_single_point(self):
        inst = gen.random_front(1, seed=0, shape="concave")
        assert ca.efficient_set(inst) == set(inst.ids())

    def test_bad_params(self):
        with pytest.raises(InvalidParams):
            gen.random_front(0, seed=1, shape="convex")
        with pytest.raises(InvalidParams):
            gen.random_front(3, seed=1, shape="wavy")


class TestKnapsackEnumeration:
    def test_sizes(self):
        assert len(gen.knapsack_enumeration(1, 0).solutions) == 2
        assert len(gen.knapsack_enumeration(10, 0).solutions) == 1024

    def test_deterministic(self):
        assert gen.knapsack_enumeration(10, 42) == gen.knapsack_enumeration(10, 42)

    def test_valid_and_additive(self):
        inst = gen.knapsack_enumeration(5, 7)
        assert ca.validate(inst) == []
        objs = {s.id: s.objectives for s in inst.solutions}
        base = objs["s" + "0" * 5]
        # Singleton subsets recover item costs; the full subset sums them.
        items = []
        for i in range(5):
            bits = ["0"] * 5
            bits[i] = "1"
            f = objs["s" + "".join(bits)]
            items.append((f[0] - base[0], f[1] - base[1]))
        full = objs["s" + "1" * 5]
        assert full[0] == pytest.approx(base[0] + sum(c[0] for c in items), abs=1e-9)
        assert full[1] == pytest.approx(base[1] + sum(c[1] for c in items), abs=1e-9)

    def test_limits(self):
        with pytest.raises(KTooLarge):
            gen.knapsack_enumeration(21, 0)
        with pytest.raises(InvalidParams):
            gen.knapsack_enumeration(0, 0)


class TestFamilyRegistry:
    def test_gamma_families_require_gamma(self):
        with pytest.raises(InvalidParams):
            gen.make_family_instance("tightness", alpha=1.0, epsilon=0.1)

    def test_shape_injection(self):
        inst = gen.make_family_instance("concave", n=5, seed=1)
        assert len(inst.solutions) == 5

    def test_unknown_family(self):
        with pytest.raises(InvalidParams):
            gen.make_family_instance("nope")
