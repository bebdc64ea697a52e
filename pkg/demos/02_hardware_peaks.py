#!/usr/bin/env python3
"""Peak-performance math over the built-in hardware database.

Peak FLOPS = per-core FLOPs/cycle x clock x cores. The bundled CPU rows
carry representative clock/core defaults; this demo also shows per-call
overrides for a specific part.
"""

from nncost import DataType, builtin_profiles, get_profile, peak_flops

print(f"{'profile':22} {'dtype':6} {'clock':>9} {'cores':>6} {'peak FLOPS':>12}")
for profile in builtin_profiles():
    for dtype in (DataType.FP32, DataType.FP16):
        if dtype not in profile.flops_per_cycle or profile.clock_hz is None:
            continue
        peak = peak_flops(profile, dtype)
        print(
            f"{profile.id:22} {dtype.value:6} {profile.clock_hz / 1e9:>7.2f}GHz "
            f"{profile.cores:>6} {peak / 1e9:>10.1f}G"
        )

# override the representative defaults for a concrete chip: an 8-core
# 3.0 GHz Skylake part peaks at 32 * 3e9 * 8 = 768 GFLOPS in FP32
skylake = get_profile("intel-skylake")
peak = peak_flops(skylake, DataType.FP32, clock_hz=3.0e9, cores=8)
print(f"\n8-core 3.0 GHz Skylake: {peak / 1e9:.0f} GFLOPS fp32")
