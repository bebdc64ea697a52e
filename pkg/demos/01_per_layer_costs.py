#!/usr/bin/env python3
"""Walk through the per-layer cost math on the three-layer example.

Builds the network in code, prints each layer's FLOPs/MACs/weights and
inferred output shape, and shows how the closed forms decompose.
"""

from nncost import (
    ActivationKind,
    Conv2D,
    Dense,
    NetworkSpec,
    Pool2D,
    TensorShape,
    network_cost,
)

net = NetworkSpec(
    name="worked-example-3layer",
    input_shape=TensorShape(100, 100, 3),
    layers=(
        Conv2D(
            kernel_rows=3, kernel_cols=3,
            pad_rows=1, pad_cols=1,           # same-padding: 100x100 stays 100x100
            num_filters=1,
            activation=ActivationKind.RELU,   # adds (3*3*3 + 1) once per filter
        ),
        Pool2D(kernel_rows=2, kernel_cols=2), # stride defaults to the kernel: halves dims
        Dense(output_size=4),                 # implicitly flattens 50*50*1 -> 2500 inputs
    ),
)

cost = network_cost(net)

print(f"{net.name}: input {net.input_shape}")
print(f"{'#':>2}  {'layer':8} {'flops':>10} {'macs':>10} {'weights':>8}  output")
for i, layer in enumerate(cost.per_layer):
    print(
        f"{i:>2}  {layer.kind:8} {layer.flops:>10} {layer.macs:>10} "
        f"{layer.weights:>8}  {layer.output_shape}"
    )
print(f"\ntotals: {cost.total_flops} FLOPs = {cost.mflops:.6f} MFLOPs, "
      f"{cost.total_weights} weights")

# the conv layer decomposes as: 100*100 windows x (3*3*3 + 1) units per
# window = 280000, plus the relu surcharge (3*3*3 + 1) per filter = 28
windows = 100 * 100
per_window = 3 * 3 * 3 + 1
print(f"\nconv check: {windows} windows x {per_window} units + {per_window} relu "
      f"= {windows * per_window + per_window}")
