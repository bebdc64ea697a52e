"""Architecture data model and deterministic shape inference.

A network is a named, ordered chain of layers applied to an input tensor
of ``rows x cols x channels``. Supported layers: dense (fully connected),
2-D convolution, 2-D pooling, and flatten. Everything is an immutable
value; all functions are pure and safe to call concurrently.

Windowed output extents follow ``(extent - kernel + 2*pad) / stride + 1``
per axis (pooling uses no padding). When the division is not exact the
quotient is floored, matching common framework behavior, and a warning is
attached to the layer so the approximation is visible in reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import prod

from .errors import ShapeError

__all__ = [
    "ActivationKind",
    "TensorShape",
    "Dense",
    "Conv2D",
    "Pool2D",
    "Flatten",
    "LayerSpec",
    "NetworkSpec",
    "layer_kind",
    "layer_output",
    "infer_shapes",
]


class ActivationKind(str, Enum):
    NONE = "none"
    RELU = "relu"
    LEAKY_RELU = "leaky_relu"


@dataclass(frozen=True)
class TensorShape:
    rows: int
    cols: int
    channels: int

    def __post_init__(self):
        for name in ("rows", "cols", "channels"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"TensorShape.{name} must be a positive integer, got {value!r}")

    @property
    def size(self) -> int:
        return self.rows * self.cols * self.channels

    @property
    def is_flat(self) -> bool:
        return self.rows == 1 and self.cols == 1

    def __str__(self) -> str:
        return f"{self.rows}x{self.cols}x{self.channels}"


def _require_positive_int(owner: str, name: str, value) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"{owner}.{name} must be a positive integer, got {value!r}")


def _require_nonnegative_int(owner: str, name: str, value) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"{owner}.{name} must be a non-negative integer, got {value!r}")


@dataclass(frozen=True)
class Dense:
    output_size: int
    use_bias: bool = True
    activation: ActivationKind = ActivationKind.NONE

    def __post_init__(self):
        _require_positive_int("Dense", "output_size", self.output_size)


@dataclass(frozen=True)
class Conv2D:
    kernel_rows: int
    kernel_cols: int
    stride_rows: int = 1
    stride_cols: int = 1
    pad_rows: int = 0
    pad_cols: int = 0
    num_filters: int = 1
    use_bias: bool = True
    activation: ActivationKind = ActivationKind.NONE

    def __post_init__(self):
        for name in ("kernel_rows", "kernel_cols", "stride_rows", "stride_cols", "num_filters"):
            _require_positive_int("Conv2D", name, getattr(self, name))
        for name in ("pad_rows", "pad_cols"):
            _require_nonnegative_int("Conv2D", name, getattr(self, name))


@dataclass(frozen=True)
class Pool2D:
    kernel_rows: int
    kernel_cols: int
    # strides default to the kernel extent (non-overlapping windows)
    stride_rows: int | None = None
    stride_cols: int | None = None

    def __post_init__(self):
        if self.stride_rows is None:
            object.__setattr__(self, "stride_rows", self.kernel_rows)
        if self.stride_cols is None:
            object.__setattr__(self, "stride_cols", self.kernel_cols)
        for name in ("kernel_rows", "kernel_cols", "stride_rows", "stride_cols"):
            _require_positive_int("Pool2D", name, getattr(self, name))


@dataclass(frozen=True)
class Flatten:
    pass


LayerSpec = Dense | Conv2D | Pool2D | Flatten

_LAYER_KINDS = {Dense: "dense", Conv2D: "conv2d", Pool2D: "pool2d", Flatten: "flatten"}


def layer_kind(layer: LayerSpec) -> str:
    """Stable lowercase tag for a layer ("dense", "conv2d", "pool2d", "flatten")."""
    return _LAYER_KINDS[type(layer)]


@dataclass(frozen=True)
class NetworkSpec:
    name: str
    input_shape: TensorShape
    layers: tuple[LayerSpec, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        if not self.layers:
            raise ValueError("NetworkSpec.layers must not be empty")
        for layer in self.layers:
            if type(layer) not in _LAYER_KINDS:
                raise ValueError(f"unsupported layer type {type(layer).__name__}")


def _windowed_extent(
    extent: int,
    kernel: int,
    stride: int,
    pad: int,
    *,
    axis: str,
    index: int,
    kind: str,
) -> tuple[int, str | None]:
    padded = extent + 2 * pad
    if kernel > padded:
        raise ShapeError(
            f"layer {index} ({kind}): {axis} kernel {kernel} exceeds padded input extent {padded}",
            layer_index=index,
        )
    span = padded - kernel
    out = span // stride + 1
    warning = None
    if span % stride != 0:
        warning = (
            f"layer {index} ({kind}): ({extent} - {kernel} + 2*{pad}) not divisible "
            f"by {axis} stride {stride}; output floored to {out}"
        )
    if out < 1:
        raise ShapeError(
            f"layer {index} ({kind}): computed {axis} extent {out} < 1",
            layer_index=index,
        )
    return out, warning


def layer_output(
    input_shape: TensorShape, layer: LayerSpec, *, index: int = 0
) -> tuple[TensorShape, list[str]]:
    """Output shape of one layer plus any flooring warnings.

    Dense accepts any incoming shape by implicitly flattening it; its
    input size is the product of the incoming dimensions.
    """
    warnings: list[str] = []
    if isinstance(layer, Dense):
        return TensorShape(1, 1, layer.output_size), warnings
    if isinstance(layer, Flatten):
        return TensorShape(1, 1, input_shape.size), warnings
    if isinstance(layer, Conv2D):
        rows, warn_r = _windowed_extent(
            input_shape.rows, layer.kernel_rows, layer.stride_rows, layer.pad_rows,
            axis="row", index=index, kind="conv2d",
        )
        cols, warn_c = _windowed_extent(
            input_shape.cols, layer.kernel_cols, layer.stride_cols, layer.pad_cols,
            axis="col", index=index, kind="conv2d",
        )
        warnings.extend(w for w in (warn_r, warn_c) if w)
        return TensorShape(rows, cols, layer.num_filters), warnings
    if isinstance(layer, Pool2D):
        rows, warn_r = _windowed_extent(
            input_shape.rows, layer.kernel_rows, layer.stride_rows, 0,
            axis="row", index=index, kind="pool2d",
        )
        cols, warn_c = _windowed_extent(
            input_shape.cols, layer.kernel_cols, layer.stride_cols, 0,
            axis="col", index=index, kind="pool2d",
        )
        warnings.extend(w for w in (warn_r, warn_c) if w)
        return TensorShape(rows, cols, input_shape.channels), warnings
    raise ValueError(f"unsupported layer type {type(layer).__name__}")


def infer_shapes(spec: NetworkSpec) -> list[TensorShape]:
    """Output shape after each layer, in layer order."""
    shapes: list[TensorShape] = []
    current = spec.input_shape
    for index, layer in enumerate(spec.layers):
        current, _ = layer_output(current, layer, index=index)
        shapes.append(current)
    return shapes


def dense_input_size(input_shape: TensorShape) -> int:
    """Size a dense layer sees: the flattened incoming tensor."""
    return prod((input_shape.rows, input_shape.cols, input_shape.channels))
