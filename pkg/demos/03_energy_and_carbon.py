#!/usr/bin/env python3
"""Energy and carbon estimates for a training run and for predictions.

FLOPS/W is FLOPs per joule, so dividing a FLOP count by an efficiency
yields joules directly; carbon converts joules to kWh at 3.6e6 J/kWh
times a regional grid intensity.
"""

from nncost import (
    CarbonIntensity,
    DataType,
    TrainingConfig,
    carbon_footprint,
    energy_prediction,
    energy_training,
    get_profile,
    network_cost,
    resolve_efficiency,
    zoo_entry,
)

net = zoo_entry("worked-example-3layer").spec.network
total_flops = network_cost(net).total_flops

a100 = get_profile("nvidia-a100")
efficiency = resolve_efficiency(a100, DataType.FP32)
training = TrainingConfig(training_samples=10_000, epochs=100)
intensity = CarbonIntensity(grams_co2eq_per_kwh=250.0, region_label="US West Coast")

report = energy_training(total_flops, efficiency, training)
print(f"{net.name}: {total_flops} FLOPs on {a100.id} ({efficiency / 1e9:.1f} GFLOPS/W)")
print(f"  forward passes ({training.training_samples} samples x {training.epochs} epochs):"
      f" {report.e_forward_j:.4f} J")
print(f"  backward (x{training.backward_multiplier:g}): {report.e_backward_j:.4f} J")
print(f"  training total: {report.e_training_j:.4f} J"
      f" = {report.e_training_j / 3.6e6 * 1e6:.4f} mWh")
print(f"  one prediction: {report.e_per_prediction_j:.3e} J")
print(f"  training carbon @ {intensity.grams_co2eq_per_kwh:g} g/kWh:"
      f" {carbon_footprint(report.e_training_j, intensity):.3e} g CO2eq")

# the published energy -> carbon conversion is exact: published training
# energies map onto their CO2 figures at 250 g/kWh
print("\nenergy -> carbon conversion at 250 g/kWh:")
for kilojoules in (152, 264, 2547):
    grams = carbon_footprint(kilojoules * 1000.0, intensity)
    print(f"  {kilojoules:>5} kJ -> {grams:7.1f} g CO2eq")

# prediction energy at population scale: a 345-MFLOP model serving one
# prediction per 2025 mobile device on a T4-class efficiency
t4 = get_profile("nvidia-t4")
energy = energy_prediction(345_000_000, t4.efficiency_flops_per_watt, 7_400_000_000)
print(f"\n345 MFLOPs x 7.4e9 predictions on {t4.id}: {energy / 1e6:.2f} MJ, "
      f"{carbon_footprint(energy, intensity) / 1000:.2f} kg CO2eq")
