"""Cost engine tests: every frozen expected value below was first computed
with the loop-count oracles in tests/oracles.py, which never share code
with the engine."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from nncost import (
    ActivationKind,
    Conv2D,
    Dense,
    Flatten,
    NetworkSpec,
    Pool2D,
    ShapeError,
    TensorShape,
    conv_flops,
    conv_flops_per_filter,
    count_weights,
    dense_flops,
    layer_cost,
    network_cost,
    pool_flops,
)
from conftest import worked_example


class TestDenseFlops:
    @pytest.mark.parametrize(
        "inputs,outputs,bias,expected",
        [
            (2500, 4, True, 20_004),
            (1, 1, True, 3),
            (10, 5, False, 100),
        ],
    )
    def test_frozen_values(self, inputs, outputs, bias, expected):
        assert dense_flops(inputs, outputs, bias) == expected
        assert oracles.brute_dense_flops(inputs, outputs, bias) == expected

    @given(
        inputs=st.integers(min_value=1, max_value=200),
        outputs=st.integers(min_value=1, max_value=50),
        bias=st.booleans(),
    )
    def test_matches_oracle(self, inputs, outputs, bias):
        assert dense_flops(inputs, outputs, bias) == oracles.brute_dense_flops(
            inputs, outputs, bias
        )


class TestConvFlops:
    def test_frozen_per_filter_values(self):
        assert conv_flops_per_filter(
            TensorShape(100, 100, 3), Conv2D(3, 3, 1, 1, 1, 1, 1)
        ) == 280_000
        assert conv_flops_per_filter(TensorShape(1, 1, 1), Conv2D(1, 1)) == 2
        assert conv_flops_per_filter(TensorShape(5, 5, 2), Conv2D(3, 3)) == 171
        assert oracles.brute_conv_flops_per_filter(100, 100, 3, 3, 3, 1, 1, 1, 1) == 280_000
        assert oracles.brute_conv_flops_per_filter(5, 5, 2, 3, 3, 1, 1, 0, 0) == 171

    def test_relu_surcharge(self):
        conv = Conv2D(3, 3, 1, 1, 1, 1, 1, activation=ActivationKind.RELU)
        assert conv_flops(TensorShape(100, 100, 3), conv) == 280_028
        plain = Conv2D(3, 3, 1, 1, 1, 1, 1, activation=ActivationKind.NONE)
        assert conv_flops(TensorShape(100, 100, 3), plain) == 280_000
        assert oracles.brute_conv_flops(100, 100, 3, 3, 3, 1, 1, 1, 1, 1, relu=True) == 280_028

    def test_leaky_relu_costed_like_relu(self):
        leaky = Conv2D(3, 3, 1, 1, 1, 1, 1, activation=ActivationKind.LEAKY_RELU)
        assert conv_flops(TensorShape(100, 100, 3), leaky) == 280_028

    def test_linear_in_filters(self):
        shape = TensorShape(12, 9, 2)
        one = Conv2D(3, 2, num_filters=1)
        per_filter = conv_flops(shape, one)
        for n in (2, 3, 7):
            assert conv_flops(shape, Conv2D(3, 2, num_filters=n)) == n * per_filter

    def test_affine_in_channels(self):
        # slope out_rows*out_cols*k_r*k_c, intercept out_rows*out_cols
        layer = Conv2D(3, 3, 1, 1, 1, 1, 1)
        values = [
            conv_flops_per_filter(TensorShape(10, 8, c), layer) for c in (1, 2, 3, 4)
        ]
        out_positions = 10 * 8
        slope = out_positions * 9
        assert values == [out_positions + slope * c for c in (1, 2, 3, 4)]

    @given(
        rows=st.integers(min_value=1, max_value=10),
        cols=st.integers(min_value=1, max_value=10),
        channels=st.integers(min_value=1, max_value=4),
        k_r=st.integers(min_value=1, max_value=5),
        k_c=st.integers(min_value=1, max_value=5),
        s_r=st.integers(min_value=1, max_value=3),
        s_c=st.integers(min_value=1, max_value=3),
        p_r=st.integers(min_value=0, max_value=2),
        p_c=st.integers(min_value=0, max_value=2),
        n_f=st.integers(min_value=1, max_value=4),
        relu=st.booleans(),
    )
    @settings(max_examples=300)
    def test_matches_oracle(self, rows, cols, channels, k_r, k_c, s_r, s_c, p_r, p_c, n_f, relu):
        if k_r > rows + 2 * p_r or k_c > cols + 2 * p_c:
            return  # shape inference rejects these; covered by error tests
        layer = Conv2D(
            kernel_rows=k_r, kernel_cols=k_c,
            stride_rows=s_r, stride_cols=s_c,
            pad_rows=p_r, pad_cols=p_c,
            num_filters=n_f,
            activation=ActivationKind.RELU if relu else ActivationKind.NONE,
        )
        expected = oracles.brute_conv_flops(
            rows, cols, channels, k_r, k_c, s_r, s_c, p_r, p_c, n_f, relu=relu
        )
        assert conv_flops(TensorShape(rows, cols, channels), layer) == expected


class TestPoolFlops:
    @pytest.mark.parametrize(
        "shape,kernel,stride,expected",
        [
            ((100, 100, 1), 2, 2, 12_500),
            ((2, 2, 1), 2, 2, 5),
            ((4, 4, 3), 2, 2, 52),
        ],
    )
    def test_frozen_values(self, shape, kernel, stride, expected):
        layer = Pool2D(kernel, kernel, stride, stride)
        assert pool_flops(TensorShape(*shape), layer) == expected
        assert oracles.brute_pool_flops(*shape, kernel, kernel, stride, stride) == expected

    @given(
        rows=st.integers(min_value=1, max_value=12),
        cols=st.integers(min_value=1, max_value=12),
        channels=st.integers(min_value=1, max_value=4),
        k_r=st.integers(min_value=1, max_value=4),
        k_c=st.integers(min_value=1, max_value=4),
        s_r=st.integers(min_value=1, max_value=3),
        s_c=st.integers(min_value=1, max_value=3),
    )
    @settings(max_examples=300)
    def test_matches_oracle(self, rows, cols, channels, k_r, k_c, s_r, s_c):
        if k_r > rows or k_c > cols:
            return
        layer = Pool2D(k_r, k_c, s_r, s_c)
        expected = oracles.brute_pool_flops(rows, cols, channels, k_r, k_c, s_r, s_c)
        assert pool_flops(TensorShape(rows, cols, channels), layer) == expected


class TestWeights:
    def test_frozen_values(self):
        assert count_weights(TensorShape(1, 1, 2500), Dense(4)) == 10_004
        assert count_weights(TensorShape(9, 9, 4), Pool2D(2, 2)) == 0
        assert count_weights(TensorShape(5, 5, 5), Flatten()) == 0
        assert count_weights(TensorShape(100, 100, 3), Conv2D(3, 3, num_filters=1)) == 28
        assert oracles.brute_dense_weights(2500, 4, True) == 10_004
        assert oracles.brute_conv_weights(3, 3, 3, 1, True) == 28

    def test_bias_flag(self):
        assert count_weights(TensorShape(1, 1, 10), Dense(5, use_bias=False)) == 50
        assert count_weights(
            TensorShape(4, 4, 2), Conv2D(2, 2, num_filters=3, use_bias=False)
        ) == 24

    def test_dense_weights_flatten_incoming_shape(self):
        assert count_weights(TensorShape(50, 50, 1), Dense(4)) == 10_004


class TestLayerCost:
    def test_dense_bias_invariant(self):
        cost = layer_cost(TensorShape(1, 1, 2500), Dense(4))
        assert cost.flops == 2 * cost.macs + 4

    def test_conv_macs_exclude_relu_surcharge(self):
        relu = layer_cost(
            TensorShape(100, 100, 3),
            Conv2D(3, 3, 1, 1, 1, 1, 1, activation=ActivationKind.RELU),
        )
        assert relu.macs == 280_000
        assert relu.flops == 280_028

    def test_pool_and_flatten_have_no_macs(self):
        assert layer_cost(TensorShape(4, 4, 1), Pool2D(2, 2)).macs == 0
        assert layer_cost(TensorShape(4, 4, 1), Flatten()).macs == 0


class TestNetworkCost:
    def test_worked_example_totals(self):
        cost = network_cost(worked_example())
        assert [c.flops for c in cost.per_layer] == [280_028, 12_500, 20_004]
        assert cost.total_flops == 312_532
        assert cost.total_weights == 10_032
        assert cost.total_flops == sum(c.flops for c in cost.per_layer)

    def test_worked_example_without_relu(self):
        cost = network_cost(worked_example(ActivationKind.NONE))
        assert cost.total_flops == 312_504

    def test_zero_cost_network(self):
        spec = NetworkSpec(
            name="flat", input_shape=TensorShape(4, 4, 1), layers=(Flatten(),)
        )
        cost = network_cost(spec)
        assert cost.total_flops == 0
        assert cost.total_weights == 0

    def test_explicit_flatten_costs_nothing(self):
        with_flatten = NetworkSpec(
            name="a",
            input_shape=TensorShape(10, 10, 2),
            layers=(Pool2D(2, 2), Flatten(), Dense(4)),
        )
        without = NetworkSpec(
            name="b",
            input_shape=TensorShape(10, 10, 2),
            layers=(Pool2D(2, 2), Dense(4)),
        )
        assert network_cost(with_flatten).total_flops == network_cost(without).total_flops

    def test_stacked_shape_preserving_layers_add(self):
        conv = Conv2D(3, 3, 1, 1, 1, 1, 2, activation=ActivationKind.NONE)
        one = NetworkSpec("one", TensorShape(8, 8, 2), (conv,))
        two = NetworkSpec("two", TensorShape(8, 8, 2), (conv, conv))
        assert network_cost(two).total_flops == 2 * network_cost(one).total_flops

    def test_additivity_of_concatenated_chains(self):
        rng = random.Random(7)
        import genspecs

        for _ in range(25):
            spec = genspecs.random_network(rng, max_layers=6)
            total = network_cost(spec).total_flops
            # split the chain and re-cost the halves against intermediate shapes
            split = rng.randint(1, len(spec.layers))
            head = NetworkSpec("head", spec.input_shape, spec.layers[:split])
            head_cost = network_cost(head)
            first = head_cost.total_flops
            if split == len(spec.layers):
                assert first == total
                continue
            tail = NetworkSpec(
                "tail", head_cost.per_layer[-1].output_shape, spec.layers[split:]
            )
            assert first + network_cost(tail).total_flops == total

    def test_shape_error_carries_layer_index(self):
        spec = NetworkSpec(
            name="broken",
            input_shape=TensorShape(8, 8, 1),
            layers=(Pool2D(2, 2), Conv2D(9, 9)),
        )
        with pytest.raises(ShapeError) as excinfo:
            network_cost(spec)
        assert excinfo.value.layer_index == 1

    def test_warnings_propagate_from_inference(self):
        spec = NetworkSpec(
            name="floored",
            input_shape=TensorShape(7, 7, 1),
            layers=(Pool2D(2, 2, 2, 2), Dense(2)),
        )
        cost = network_cost(spec)
        assert any("floored" in w for w in cost.per_layer[0].warnings)


class TestMonotonicity:
    def test_more_filters_never_cheaper(self):
        shape = TensorShape(9, 9, 2)
        costs = [conv_flops(shape, Conv2D(3, 3, num_filters=n)) for n in range(1, 6)]
        assert costs == sorted(costs)

    def test_bigger_dense_never_cheaper(self):
        assert dense_flops(10, 5) <= dense_flops(11, 5) <= dense_flops(11, 6)

    def test_bigger_kernel_at_fixed_output_never_cheaper(self):
        # same-padded odd kernels keep the output fixed while the window grows
        shape = TensorShape(9, 9, 2)
        costs = [
            conv_flops(shape, Conv2D(k, k, pad_rows=(k - 1) // 2, pad_cols=(k - 1) // 2))
            for k in (1, 3, 5, 7)
        ]
        assert costs == sorted(costs)
