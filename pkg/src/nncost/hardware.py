"""Hardware profiles and theoretical peak performance.

Peak FLOPS is the product of per-core FLOPs per cycle (a property of the
architecture and data type), clock rate, and core count. Profiles may also
carry a vendor efficiency figure in FLOPS per watt; since FLOPS/W is
FLOPs/joule, that figure converts operation counts straight into energy.

The built-in database ships in ``data/builtin.hwspec``, a human-editable
file in the same grammar as network spec files. Per-cycle figures there
are architecture data; clock rates and core counts for the CPU rows are
representative defaults (flagged in each profile's notes) and can be
overridden per call.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from importlib import resources

from .errors import MissingCapability, NotFound

__all__ = [
    "DataType",
    "HardwareProfile",
    "peak_flops",
    "resolve_efficiency",
    "builtin_profiles",
    "get_profile",
]


class DataType(str, Enum):
    FP64 = "fp64"
    FP32 = "fp32"
    FP16 = "fp16"
    BF16 = "bf16"
    INT8 = "int8"
    INT1 = "int1"


@dataclass(frozen=True)
class HardwareProfile:
    id: str
    architecture: str
    flops_per_cycle: dict[DataType, float] = field(default_factory=dict)
    clock_hz: float | None = None
    cores: int | None = None
    efficiency_flops_per_watt: float | None = None
    tdp_watts: float | None = None
    notes: str = ""

    def __post_init__(self):
        object.__setattr__(self, "flops_per_cycle", dict(self.flops_per_cycle))
        has_peak_path = bool(self.flops_per_cycle) and self.clock_hz is not None and self.cores is not None
        if not has_peak_path and self.efficiency_flops_per_watt is None:
            raise ValueError(
                f"profile {self.id!r} needs either flops_per_cycle with clock_hz and cores, "
                "or efficiency_flops_per_watt"
            )
        for name in ("clock_hz", "efficiency_flops_per_watt", "tdp_watts"):
            value = getattr(self, name)
            if value is not None and not value > 0:
                raise ValueError(f"profile {self.id!r}: {name} must be > 0, got {value!r}")
        if self.cores is not None and self.cores < 1:
            raise ValueError(f"profile {self.id!r}: cores must be >= 1, got {self.cores!r}")
        for dtype, value in self.flops_per_cycle.items():
            if value < 0:
                raise ValueError(f"profile {self.id!r}: flops_per_cycle[{dtype.value}] must be >= 0")


def peak_flops(
    profile: HardwareProfile,
    dtype: DataType,
    *,
    clock_hz: float | None = None,
    cores: int | None = None,
) -> float:
    """Theoretical peak in FLOPS: per-cycle rate x clock x cores.

    ``clock_hz`` and ``cores`` override the profile's values (the built-in
    CPU rows ship representative defaults).
    """
    if dtype not in profile.flops_per_cycle:
        known = ", ".join(sorted(d.value for d in profile.flops_per_cycle)) or "none"
        raise MissingCapability(
            f"profile {profile.id!r} has no flops-per-cycle figure for {dtype.value} (has: {known})"
        )
    clock = clock_hz if clock_hz is not None else profile.clock_hz
    core_count = cores if cores is not None else profile.cores
    if clock is None or core_count is None:
        raise MissingCapability(
            f"profile {profile.id!r} lacks clock_hz/cores; pass overrides to compute peak FLOPS"
        )
    if clock <= 0 or core_count < 1:
        raise MissingCapability(
            f"profile {profile.id!r}: clock_hz must be > 0 and cores >= 1"
        )
    return profile.flops_per_cycle[dtype] * clock * core_count


def resolve_efficiency(profile: HardwareProfile, dtype: DataType) -> float:
    """FLOPS per watt for energy math.

    Uses the profile's efficiency figure when present, otherwise derives
    peak FLOPS for ``dtype`` divided by TDP. Raises MissingCapability when
    neither path is available.
    """
    if profile.efficiency_flops_per_watt is not None:
        return profile.efficiency_flops_per_watt
    if profile.tdp_watts is not None:
        return peak_flops(profile, dtype) / profile.tdp_watts
    raise MissingCapability(
        f"profile {profile.id!r} has no efficiency_flops_per_watt and no tdp_watts to derive one; "
        "energy estimates need one of them"
    )


_BUILTIN: list[HardwareProfile] | None = None


def builtin_profiles() -> list[HardwareProfile]:
    """Profiles parsed from the bundled database, in file order."""
    global _BUILTIN
    if _BUILTIN is None:
        from .specfile import parse_hardware

        text = resources.files("nncost.data").joinpath("builtin.hwspec").read_text("utf-8")
        _BUILTIN = parse_hardware(text, filename="builtin.hwspec")
    return list(_BUILTIN)


def get_profile(profile_id: str) -> HardwareProfile:
    for profile in builtin_profiles():
        if profile.id == profile_id:
            return profile
    known = ", ".join(p.id for p in builtin_profiles())
    raise NotFound(f"unknown hardware profile {profile_id!r} (known: {known})")
