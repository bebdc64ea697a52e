"""Shared analysis core behind the CLI and the HTTP service.

Builds self-contained report structures (plain dict trees ready for the
canonical renderer): every number in a report is recomputable from the
inputs echoed inside it. Also resolves the user-facing references —
network arguments ("zoo:<id>", file paths, inline JSON), hardware ids or
inline profiles — and applies the documented defaults.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import __version__
from .costs import NetworkCost, network_cost
from .energy import (
    CarbonIntensity,
    TrainingConfig,
    carbon_footprint,
    co2_vs_predictions,
    energy_training,
)
from .errors import AnalyzerError, DomainError, MissingCapability, NotFound, SpecSchemaError
from .hardware import DataType, HardwareProfile, peak_flops, resolve_efficiency
from .specfile import (
    SpecDocument,
    document_from_json_obj,
    document_to_json_obj,
    parse_hardware,
    parse_spec,
    profile_from_json_obj,
    profile_to_json_obj,
    zoo_entry,
)

__all__ = [
    "TOOL_NAME",
    "MOBILE_USERS_2025",
    "DEFAULTS",
    "AnalysisRequest",
    "analyze",
    "compare",
    "curve_report",
    "log_spaced_counts",
    "load_network_arg",
    "load_hardware_arg",
    "network_from_json_ref",
    "hardware_from_json_ref",
]

TOOL_NAME = "nncost"

# estimated number of mobile devices worldwide by the end of 2025; curve
# points at exactly this count are tagged so the scenario is easy to spot
MOBILE_USERS_2025 = 7_400_000_000
_MOBILE_USERS_MARKER = "mobile-users-2025"

DEFAULTS = {
    "hardware": "nvidia-a100",
    "dtype": "fp32",
    "training_samples": 10_000,
    "epochs": 100,
    "backward_multiplier": 2.0,
    "carbon_intensity": 250.0,
    "region": "US West Coast",
}


@dataclass(frozen=True)
class AnalysisRequest:
    document: SpecDocument
    profile: HardwareProfile
    training: TrainingConfig
    intensity: CarbonIntensity
    dtype: DataType = DataType.FP32
    prediction_counts: tuple[int, ...] | None = None


def _tool_obj() -> dict:
    return {"name": TOOL_NAME, "version": __version__}


def _training_obj(cfg: TrainingConfig) -> dict:
    return {
        "training_samples": cfg.training_samples,
        "epochs": cfg.epochs,
        "backward_multiplier": cfg.backward_multiplier,
    }


def _intensity_obj(intensity: CarbonIntensity) -> dict:
    return {
        "grams_co2eq_per_kwh": intensity.grams_co2eq_per_kwh,
        "region_label": intensity.region_label,
    }


def _shape_obj(shape) -> dict:
    return {"rows": shape.rows, "cols": shape.cols, "channels": shape.channels}


def _cost_obj(cost: NetworkCost) -> dict:
    return {
        "per_layer": [
            {
                "index": i,
                "kind": layer.kind,
                "flops": layer.flops,
                "macs": layer.macs,
                "weights": layer.weights,
                "output_shape": _shape_obj(layer.output_shape),
                "warnings": list(layer.warnings),
            }
            for i, layer in enumerate(cost.per_layer)
        ],
        "total_flops": cost.total_flops,
        "total_macs": cost.total_macs,
        "total_weights": cost.total_weights,
        "mflops": cost.mflops,
    }


def _hardware_summary(profile: HardwareProfile, dtype: DataType, efficiency: float) -> dict:
    try:
        peak = peak_flops(profile, dtype)
    except MissingCapability:
        peak = None
    return {"efficiency_flops_per_watt": efficiency, "peak_flops": peak}


def _curve_rows(carbon_report) -> list[dict]:
    rows = []
    for point in carbon_report.curve:
        row = {"predictions": point.predictions, "grams": point.grams}
        if point.predictions == MOBILE_USERS_2025:
            row["marker"] = _MOBILE_USERS_MARKER
        rows.append(row)
    return rows


def analyze(request: AnalysisRequest) -> dict:
    """Full per-layer / energy / carbon report for one network."""
    cost = network_cost(request.document.network)
    efficiency = resolve_efficiency(request.profile, request.dtype)
    energy = energy_training(cost.total_flops, efficiency, request.training)
    carbon = {
        "training_g": carbon_footprint(energy.e_training_j, request.intensity),
        "per_prediction_g": carbon_footprint(energy.e_per_prediction_j, request.intensity),
        "curve": None,
    }
    if request.prediction_counts:
        curve = co2_vs_predictions(
            cost.total_flops,
            efficiency,
            request.intensity,
            request.prediction_counts,
        )
        carbon["curve"] = _curve_rows(curve)
    return {
        "tool": _tool_obj(),
        "inputs": {
            "network": document_to_json_obj(request.document),
            "hardware": profile_to_json_obj(request.profile),
            "dtype": request.dtype.value,
            "training": _training_obj(request.training),
            "intensity": _intensity_obj(request.intensity),
            "prediction_counts": (
                list(request.prediction_counts) if request.prediction_counts else None
            ),
        },
        "cost": _cost_obj(cost),
        "hardware": _hardware_summary(request.profile, request.dtype, efficiency),
        "energy": {
            "e_forward_j": energy.e_forward_j,
            "e_backward_j": energy.e_backward_j,
            "e_training_j": energy.e_training_j,
            "e_per_prediction_j": energy.e_per_prediction_j,
        },
        "carbon": carbon,
        "warnings": list(request.document.warnings) + cost.warnings,
    }


_COMPARE_SORT_KEYS = {
    "name": "name",
    "weights": "weights",
    "flops": "total_flops",
    "energy": "e_training_j",
    "co2": "training_g",
}


def compare(
    documents: list[SpecDocument],
    profile: HardwareProfile,
    training: TrainingConfig,
    intensity: CarbonIntensity,
    dtype: DataType = DataType.FP32,
    *,
    sort_by: str = "name",
    fail_fast: bool = False,
) -> dict:
    """One row per network: weights, FLOPs, training energy and CO2.

    Per-network failures become row-level error objects unless
    ``fail_fast`` is set. Rows sort by ``sort_by`` with name as the
    tiebreaker; error rows sort last.
    """
    if len(documents) < 2:
        raise DomainError("compare needs at least 2 networks")
    if sort_by not in _COMPARE_SORT_KEYS:
        choices = ", ".join(sorted(_COMPARE_SORT_KEYS))
        raise DomainError(f"unknown sort column {sort_by!r} (one of: {choices})")

    efficiency = resolve_efficiency(profile, dtype)
    rows = []
    for document in documents:
        name = document.network.name
        try:
            cost = network_cost(document.network)
            energy = energy_training(cost.total_flops, efficiency, training)
            rows.append(
                {
                    "name": name,
                    "weights": cost.total_weights,
                    "total_flops": cost.total_flops,
                    "mflops": cost.mflops,
                    "e_training_j": energy.e_training_j,
                    "training_g": carbon_footprint(energy.e_training_j, intensity),
                }
            )
        except AnalyzerError as err:
            if fail_fast:
                raise
            rows.append({"name": name, "error": err.to_json_obj()})

    column = _COMPARE_SORT_KEYS[sort_by]

    def sort_key(row: dict):
        if "error" in row:
            return (1, 0, row["name"])
        return (0, row[column], row["name"])

    rows.sort(key=sort_key)
    return {
        "tool": _tool_obj(),
        "inputs": {
            "hardware": profile_to_json_obj(profile),
            "dtype": dtype.value,
            "training": _training_obj(training),
            "intensity": _intensity_obj(intensity),
            "sort_by": sort_by,
        },
        "rows": rows,
    }


def curve_report(
    document: SpecDocument,
    profile: HardwareProfile,
    training: TrainingConfig,
    intensity: CarbonIntensity,
    prediction_counts: list[int],
    dtype: DataType = DataType.FP32,
    *,
    include_training_offset: bool = False,
) -> dict:
    """Carbon-vs-predictions curve for one network."""
    cost = network_cost(document.network)
    efficiency = resolve_efficiency(profile, dtype)
    counts = sorted(set(prediction_counts))
    if MOBILE_USERS_2025 not in counts and counts and counts[0] <= MOBILE_USERS_2025 <= counts[-1]:
        counts = sorted(counts + [MOBILE_USERS_2025])
    carbon = co2_vs_predictions(
        cost.total_flops,
        efficiency,
        intensity,
        counts,
        training=training,
        include_training_offset=include_training_offset,
    )
    return {
        "tool": _tool_obj(),
        "inputs": {
            "network": document_to_json_obj(document),
            "hardware": profile_to_json_obj(profile),
            "dtype": dtype.value,
            "training": _training_obj(training),
            "intensity": _intensity_obj(intensity),
            "prediction_counts": counts,
            "include_training_offset": include_training_offset,
        },
        "total_flops": cost.total_flops,
        "training_g": carbon.training_g,
        "per_prediction_g": carbon.per_prediction_g,
        "curve": _curve_rows(carbon),
    }


def log_spaced_counts(start: int, end: int, points: int) -> list[int]:
    """Strictly increasing integer counts, geometrically spaced, with both
    endpoints included exactly."""
    if start < 1:
        raise DomainError(f"range start must be >= 1, got {start}")
    if end < start:
        raise DomainError(f"range end {end} must be >= start {start}")
    if points < 1:
        raise DomainError(f"points must be >= 1, got {points}")
    if start == end:
        return [start]
    if points == 1:
        return [end]
    ratio = end / start
    counts = {start, end}
    for i in range(1, points - 1):
        counts.add(round(start * ratio ** (i / (points - 1))))
    return sorted(c for c in counts if start <= c <= end)


# ---------------------------------------------------------------------------
# reference resolution (CLI arguments and JSON request bodies)

def load_network_arg(arg: str, *, strict: bool = True) -> SpecDocument:
    """Resolve a CLI network reference: ``zoo:<id>`` or a file path."""
    if arg.startswith("zoo:"):
        return zoo_entry(arg[len("zoo:"):]).spec
    if not os.path.exists(arg):
        raise NotFound(f"network spec file not found: {arg!r} (use zoo:<id> for bundled models)")
    with open(arg, "rb") as handle:
        return parse_spec(handle.read(), strict=strict, filename=arg)


def load_hardware_arg(arg: str) -> HardwareProfile:
    """Resolve a CLI hardware reference: a built-in id, a ``.hwspec`` file
    path, or ``path#profile-id`` for multi-profile files."""
    from .hardware import get_profile

    path, _, selector = arg.partition("#")
    if os.path.exists(path):
        with open(path, "rb") as handle:
            profiles = parse_hardware(handle.read(), filename=path)
        if selector:
            for profile in profiles:
                if profile.id == selector:
                    return profile
            known = ", ".join(p.id for p in profiles)
            raise NotFound(f"no profile {selector!r} in {path!r} (has: {known})")
        if len(profiles) == 1:
            return profiles[0]
        known = ", ".join(p.id for p in profiles)
        raise NotFound(
            f"{path!r} defines {len(profiles)} profiles ({known}); select one with {path}#<id>"
        )
    return get_profile(arg)


def network_from_json_ref(ref: object, *, strict: bool = True) -> SpecDocument:
    """Resolve a JSON network reference: {"zoo": id} | {"text": source} |
    {"document": document-object}."""
    if not isinstance(ref, dict):
        raise SpecSchemaError(
            'network reference must be an object with one of the keys "zoo", "text", "document"'
        )
    keys = set(ref)
    if keys == {"zoo"}:
        if not isinstance(ref["zoo"], str):
            raise SpecSchemaError("network.zoo must be a string id")
        return zoo_entry(ref["zoo"]).spec
    if keys == {"text"}:
        if not isinstance(ref["text"], str):
            raise SpecSchemaError("network.text must be a string")
        return parse_spec(ref["text"], strict=strict)
    if keys == {"document"}:
        return document_from_json_obj(ref["document"], strict=strict)
    raise SpecSchemaError(
        'network reference must contain exactly one of the keys "zoo", "text", "document"'
    )


def hardware_from_json_ref(ref: object) -> HardwareProfile:
    """Resolve a JSON hardware reference: an id string or {"profile": {...}}."""
    from .hardware import get_profile

    if isinstance(ref, str):
        return get_profile(ref)
    if isinstance(ref, dict) and set(ref) == {"profile"}:
        return profile_from_json_obj(ref["profile"])
    raise SpecSchemaError('hardware reference must be an id string or {"profile": {...}}')
