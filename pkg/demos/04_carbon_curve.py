#!/usr/bin/env python3
"""Carbon footprint vs number of predictions, on a log-spaced grid.

Writes the curve as CSV and, when matplotlib is available, renders a
log-log plot with the 7.4e9-predictions marker (one prediction per
estimated 2025 mobile device).
"""

import csv
import sys

from nncost import CarbonIntensity, TrainingConfig, get_profile
from nncost.analysis import MOBILE_USERS_2025, curve_report, log_spaced_counts
from nncost.specfile import zoo_entry

doc = zoo_entry("worked-example-3layer").spec
report = curve_report(
    doc,
    get_profile("nvidia-t4"),
    TrainingConfig(training_samples=10_000, epochs=100),
    CarbonIntensity(grams_co2eq_per_kwh=250.0, region_label="US West Coast"),
    log_spaced_counts(1, MOBILE_USERS_2025, 12),
)

out_path = "carbon_curve.csv"
with open(out_path, "w", newline="") as handle:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(["predictions", "grams_co2eq", "marker"])
    for point in report["curve"]:
        writer.writerow([point["predictions"], point["grams"], point.get("marker", "")])
print(f"wrote {len(report['curve'])} curve points to {out_path}")
print(f"per prediction: {report['per_prediction_g']:.3e} g; "
      f"one-time training: {report['training_g']:.3e} g")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the plot")
    sys.exit(0)

counts = [p["predictions"] for p in report["curve"]]
grams = [p["grams"] for p in report["curve"]]
fig, ax = plt.subplots(figsize=(6, 4))
ax.loglog(counts, grams, marker="o")
marked = [p for p in report["curve"] if p.get("marker")]
if marked:
    ax.axvline(marked[0]["predictions"], linestyle="--", color="gray")
    ax.annotate(
        "7.4e9 mobile devices (2025)",
        (marked[0]["predictions"], marked[0]["grams"]),
        textcoords="offset points", xytext=(-10, 10), ha="right",
    )
ax.set_xlabel("predictions made")
ax.set_ylabel("g CO2eq")
ax.set_title(f"{doc.network.name}: carbon vs predictions")
ax.grid(True, which="both", alpha=0.3)
fig.tight_layout()
fig.savefig("carbon_curve.png", dpi=120)
print("wrote carbon_curve.png")
