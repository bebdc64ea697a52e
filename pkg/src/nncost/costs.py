"""Per-layer FLOPs, MACs, and weight counts, and their network totals.

Counting conventions (fixed, documented, the only mode):

* Dense: ``2 * inputs * outputs`` FLOPs (one MAC = two FLOPs) plus one
  FLOP per output neuron when biased.
* Conv2D: per filter, ``out_rows * out_cols * (channels * kernel_rows *
  kernel_cols + 1)`` FLOP-units; each window cell counts one unit and the
  trailing ``+ 1`` is the bias unit, charged regardless of ``use_bias``.
  A relu (or leaky_relu) activation adds ``channels * kernel_rows *
  kernel_cols + 1`` units once per filter.
* Pool2D: same windowed form as conv, without padding, including the
  channel factor and the ``+ 1`` inside the window term.
* Flatten costs nothing.

MACs are the multiply-accumulate counts behind the dense and conv numbers
(``inputs * outputs`` and per-filter window units times filters); pooling
and flatten have none. Weight counts include biases only when the layer
uses them. All counts are exact Python integers, which are arbitrary
precision: results can never silently wrap, no matter the layer size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError
from .shapes import (
    Conv2D,
    Dense,
    Flatten,
    LayerSpec,
    NetworkSpec,
    Pool2D,
    TensorShape,
    ActivationKind,
    dense_input_size,
    layer_kind,
    layer_output,
)

__all__ = [
    "LayerCost",
    "NetworkCost",
    "dense_flops",
    "conv_flops_per_filter",
    "conv_flops",
    "pool_flops",
    "count_weights",
    "layer_cost",
    "network_cost",
]


@dataclass(frozen=True)
class LayerCost:
    kind: str
    flops: int
    macs: int
    weights: int
    output_shape: TensorShape
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class NetworkCost:
    per_layer: tuple[LayerCost, ...]
    total_flops: int
    total_macs: int
    total_weights: int

    @property
    def mflops(self) -> float:
        return self.total_flops / 1e6

    @property
    def warnings(self) -> list[str]:
        return [w for cost in self.per_layer for w in cost.warnings]


def dense_flops(input_size: int, output_size: int, use_bias: bool = True) -> int:
    flops = 2 * input_size * output_size
    if use_bias:
        flops += output_size
    return flops


def _window_term(channels: int, layer: Conv2D | Pool2D) -> int:
    return channels * layer.kernel_rows * layer.kernel_cols + 1


def conv_flops_per_filter(input_shape: TensorShape, layer: Conv2D, *, index: int = 0) -> int:
    out, _ = layer_output(input_shape, layer, index=index)
    return out.rows * out.cols * _window_term(input_shape.channels, layer)


def conv_flops(input_shape: TensorShape, layer: Conv2D, *, index: int = 0) -> int:
    per_filter = conv_flops_per_filter(input_shape, layer, index=index)
    if layer.activation in (ActivationKind.RELU, ActivationKind.LEAKY_RELU):
        per_filter += _window_term(input_shape.channels, layer)
    return per_filter * layer.num_filters


def pool_flops(input_shape: TensorShape, layer: Pool2D, *, index: int = 0) -> int:
    out, _ = layer_output(input_shape, layer, index=index)
    return out.rows * out.cols * _window_term(input_shape.channels, layer)


def count_weights(input_shape: TensorShape, layer: LayerSpec) -> int:
    if isinstance(layer, Dense):
        weights = dense_input_size(input_shape) * layer.output_size
        if layer.use_bias:
            weights += layer.output_size
        return weights
    if isinstance(layer, Conv2D):
        per_filter = input_shape.channels * layer.kernel_rows * layer.kernel_cols
        if layer.use_bias:
            per_filter += 1
        return per_filter * layer.num_filters
    return 0  # pooling and flatten have no learnable parameters


def layer_cost(input_shape: TensorShape, layer: LayerSpec, *, index: int = 0) -> LayerCost:
    output_shape, warnings = layer_output(input_shape, layer, index=index)
    if isinstance(layer, Dense):
        input_size = dense_input_size(input_shape)
        flops = dense_flops(input_size, layer.output_size, layer.use_bias)
        macs = input_size * layer.output_size
    elif isinstance(layer, Conv2D):
        flops = conv_flops(input_shape, layer, index=index)
        macs = conv_flops_per_filter(input_shape, layer, index=index) * layer.num_filters
    elif isinstance(layer, Pool2D):
        flops = pool_flops(input_shape, layer, index=index)
        macs = 0
    elif isinstance(layer, Flatten):
        flops = 0
        macs = 0
    else:
        raise ValueError(f"unsupported layer type {type(layer).__name__}")
    return LayerCost(
        kind=layer_kind(layer),
        flops=flops,
        macs=macs,
        weights=count_weights(input_shape, layer),
        output_shape=output_shape,
        warnings=tuple(warnings),
    )


def network_cost(spec: NetworkSpec) -> NetworkCost:
    """Per-layer costs in layer order plus their sums.

    Raises ShapeError carrying the index of the offending layer when the
    chain cannot be shape-inferred.
    """
    per_layer: list[LayerCost] = []
    current = spec.input_shape
    for index, layer in enumerate(spec.layers):
        try:
            cost = layer_cost(current, layer, index=index)
        except ShapeError as err:
            if err.layer_index is None:
                raise ShapeError(str(err), layer_index=index) from err
            raise
        per_layer.append(cost)
        current = cost.output_shape
    return NetworkCost(
        per_layer=tuple(per_layer),
        total_flops=sum(c.flops for c in per_layer),
        total_macs=sum(c.macs for c in per_layer),
        total_weights=sum(c.weights for c in per_layer),
    )
