"""Theoretical energy and carbon footprint estimates.

Energy model: a forward pass of one sample costs ``m_flops`` operations;
dividing by an efficiency in FLOPS per watt (equivalently FLOPs per joule)
gives joules. Training runs every sample through forward and backward
passes each epoch, with the backward pass costed as a configurable
multiple of the forward pass (default 2, so training costs exactly three
forward passes). Carbon footprint converts joules to kilowatt-hours at
3.6e6 J/kWh and multiplies by a regional grid intensity in grams of
CO2-equivalent per kWh.

FLOP counts stay exact integers until they enter the energy equations;
all energy and carbon math is double precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError

__all__ = [
    "JOULES_PER_KWH",
    "TrainingConfig",
    "EnergyReport",
    "CarbonIntensity",
    "CurvePoint",
    "CarbonReport",
    "energy_forward",
    "energy_training",
    "energy_prediction",
    "carbon_footprint",
    "co2_vs_predictions",
]

JOULES_PER_KWH = 3.6e6


@dataclass(frozen=True)
class TrainingConfig:
    training_samples: int
    epochs: int
    backward_multiplier: float = 2.0

    def __post_init__(self):
        if self.training_samples < 1:
            raise ValueError(f"training_samples must be >= 1, got {self.training_samples!r}")
        if self.epochs < 1:
            raise ValueError(f"epochs must be >= 1, got {self.epochs!r}")
        # 0 is allowed as a degenerate value that isolates the forward pass
        if self.backward_multiplier < 0:
            raise ValueError(
                f"backward_multiplier must be >= 0, got {self.backward_multiplier!r}"
            )


@dataclass(frozen=True)
class EnergyReport:
    e_forward_j: float
    e_backward_j: float
    e_training_j: float
    e_per_prediction_j: float


@dataclass(frozen=True)
class CarbonIntensity:
    grams_co2eq_per_kwh: float
    region_label: str = ""

    def __post_init__(self):
        if not self.grams_co2eq_per_kwh > 0:
            raise ValueError(
                f"grams_co2eq_per_kwh must be > 0, got {self.grams_co2eq_per_kwh!r}"
            )


@dataclass(frozen=True)
class CurvePoint:
    predictions: int
    grams: float


@dataclass(frozen=True)
class CarbonReport:
    training_g: float
    per_prediction_g: float
    curve: tuple[CurvePoint, ...] | None = None


def _check_efficiency(efficiency_flops_per_watt: float) -> None:
    if not efficiency_flops_per_watt > 0:
        raise DomainError(
            f"efficiency must be > 0 FLOPS/W, got {efficiency_flops_per_watt!r}"
        )


def energy_forward(
    m_flops: int, efficiency_flops_per_watt: float, cfg: TrainingConfig
) -> float:
    """Joules for the forward passes of a whole training run."""
    _check_efficiency(efficiency_flops_per_watt)
    if m_flops < 0:
        raise DomainError(f"m_flops must be >= 0, got {m_flops!r}")
    return (m_flops / efficiency_flops_per_watt) * (cfg.training_samples * cfg.epochs)


def energy_training(
    m_flops: int, efficiency_flops_per_watt: float, cfg: TrainingConfig
) -> EnergyReport:
    """Forward, backward, total training, and single-prediction energy."""
    e_fp = energy_forward(m_flops, efficiency_flops_per_watt, cfg)
    e_bp = cfg.backward_multiplier * e_fp
    return EnergyReport(
        e_forward_j=e_fp,
        e_backward_j=e_bp,
        e_training_j=e_fp + e_bp,
        e_per_prediction_j=m_flops / efficiency_flops_per_watt,
    )


def energy_prediction(
    m_flops: int, efficiency_flops_per_watt: float, input_count: int
) -> float:
    """Joules for ``input_count`` forward passes in production."""
    _check_efficiency(efficiency_flops_per_watt)
    if m_flops < 0:
        raise DomainError(f"m_flops must be >= 0, got {m_flops!r}")
    if input_count < 0:
        raise DomainError(f"input_count must be >= 0, got {input_count!r}")
    return (m_flops / efficiency_flops_per_watt) * input_count


def carbon_footprint(energy_j: float, intensity: CarbonIntensity) -> float:
    """Grams of CO2-equivalent for ``energy_j`` joules under a grid intensity."""
    if energy_j < 0:
        raise DomainError(f"energy_j must be >= 0, got {energy_j!r}")
    return (energy_j / JOULES_PER_KWH) * intensity.grams_co2eq_per_kwh


def co2_vs_predictions(
    m_flops: int,
    efficiency_flops_per_watt: float,
    intensity: CarbonIntensity,
    prediction_counts: Sequence[int],
    *,
    training: TrainingConfig | None = None,
    include_training_offset: bool = False,
) -> CarbonReport:
    """Cumulative prediction carbon at each count, optionally offset by the
    one-time training footprint.

    Counts must be strictly increasing. By default the curve covers
    prediction emissions only; with ``include_training_offset`` (which
    needs ``training``) the constant training footprint is added to every
    point.
    """
    _check_efficiency(efficiency_flops_per_watt)
    counts = list(prediction_counts)
    if not counts:
        raise DomainError("prediction_counts must not be empty")
    previous = 0
    for count in counts:
        if count <= previous:
            raise DomainError(
                f"prediction_counts must be strictly increasing positive integers; "
                f"got {count!r} after {previous!r}"
            )
        previous = count

    training_g = 0.0
    if training is not None:
        report = energy_training(m_flops, efficiency_flops_per_watt, training)
        training_g = carbon_footprint(report.e_training_j, intensity)
    if include_training_offset and training is None:
        raise DomainError("include_training_offset requires a training config")

    offset = training_g if include_training_offset else 0.0
    curve = tuple(
        CurvePoint(
            predictions=count,
            grams=offset
            + carbon_footprint(
                energy_prediction(m_flops, efficiency_flops_per_watt, count), intensity
            ),
        )
        for count in counts
    )
    per_prediction_g = carbon_footprint(
        energy_prediction(m_flops, efficiency_flops_per_watt, 1), intensity
    )
    return CarbonReport(
        training_g=training_g,
        per_prediction_g=per_prediction_g,
        curve=curve,
    )
