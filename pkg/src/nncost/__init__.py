"""Static cost analysis for layered neural networks.

Given a declarative architecture description, nncost computes per-layer
and total FLOPs, MACs, and weight counts, theoretical peak performance of
hardware profiles, training and prediction energy, and the resulting
carbon footprint. Exposed as a library, a CLI (``nncost``), and a JSON
HTTP service.
"""

__version__ = "0.1.0"

from .shapes import (  # noqa: E402
    ActivationKind,
    Conv2D,
    Dense,
    Flatten,
    LayerSpec,
    NetworkSpec,
    Pool2D,
    TensorShape,
    infer_shapes,
    layer_output,
)
from .costs import (  # noqa: E402
    LayerCost,
    NetworkCost,
    conv_flops,
    conv_flops_per_filter,
    count_weights,
    dense_flops,
    layer_cost,
    network_cost,
    pool_flops,
)
from .hardware import (  # noqa: E402
    DataType,
    HardwareProfile,
    builtin_profiles,
    get_profile,
    peak_flops,
    resolve_efficiency,
)
from .energy import (  # noqa: E402
    JOULES_PER_KWH,
    CarbonIntensity,
    CarbonReport,
    CurvePoint,
    EnergyReport,
    TrainingConfig,
    carbon_footprint,
    co2_vs_predictions,
    energy_forward,
    energy_prediction,
    energy_training,
)
from .specfile import (  # noqa: E402
    SpecDocument,
    SpecMetadata,
    ModelZooEntry,
    model_zoo,
    parse_hardware,
    parse_spec,
    serialize_hardware,
    serialize_spec,
    zoo_entry,
)
from .errors import (  # noqa: E402
    AnalyzerError,
    DomainError,
    MissingCapability,
    NotFound,
    ShapeError,
    SpecSchemaError,
    SpecSyntaxError,
    SpecValidationError,
)

__all__ = [
    "__version__",
    # shapes
    "ActivationKind", "Conv2D", "Dense", "Flatten", "LayerSpec", "NetworkSpec",
    "Pool2D", "TensorShape", "infer_shapes", "layer_output",
    # costs
    "LayerCost", "NetworkCost", "conv_flops", "conv_flops_per_filter",
    "count_weights", "dense_flops", "layer_cost", "network_cost", "pool_flops",
    # hardware
    "DataType", "HardwareProfile", "builtin_profiles", "get_profile",
    "peak_flops", "resolve_efficiency",
    # energy / carbon
    "JOULES_PER_KWH", "CarbonIntensity", "CarbonReport", "CurvePoint",
    "EnergyReport", "TrainingConfig", "carbon_footprint", "co2_vs_predictions",
    "energy_forward", "energy_prediction", "energy_training",
    # spec files and zoo
    "SpecDocument", "SpecMetadata", "ModelZooEntry", "model_zoo",
    "parse_hardware", "parse_spec", "serialize_hardware", "serialize_spec",
    "zoo_entry",
    # errors
    "AnalyzerError", "DomainError", "MissingCapability", "NotFound",
    "ShapeError", "SpecSchemaError", "SpecSyntaxError", "SpecValidationError",
]
