"""Command-line interface.

Subcommands: ``analyze``, ``compare``, ``curve``, ``hardware list``,
``zoo list``, ``serve``. Data goes to stdout (or ``--output``),
diagnostics to stderr. Exit codes: 0 success, 2 parse/schema/validation,
3 shape inference, 4 missing capability or unknown id, 5 numeric domain,
1 anything else. JSON output is byte-identical to the HTTP service's
response for the same request.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .analysis import (
    DEFAULTS,
    AnalysisRequest,
    analyze,
    compare,
    curve_report,
    load_hardware_arg,
    load_network_arg,
    log_spaced_counts,
)
from .energy import CarbonIntensity, TrainingConfig
from .errors import AnalyzerError, DomainError
from .hardware import DataType, builtin_profiles
from .reporting import (
    format_float,
    mflops_display,
    render_csv,
    render_payload,
    render_table,
)
from .specfile import document_to_json_obj, model_zoo, profile_to_json_obj


def _add_shared_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--hardware",
        default=DEFAULTS["hardware"],
        metavar="ID|FILE[#ID]",
        help=f"hardware profile id or .hwspec file (default: {DEFAULTS['hardware']})",
    )
    parser.add_argument(
        "--dtype",
        default=DEFAULTS["dtype"],
        choices=[d.value for d in DataType],
        help=f"data type for peak/efficiency math (default: {DEFAULTS['dtype']})",
    )
    parser.add_argument(
        "--samples",
        type=int,
        default=DEFAULTS["training_samples"],
        help=f"training samples per epoch (default: {DEFAULTS['training_samples']})",
    )
    parser.add_argument(
        "--epochs",
        type=int,
        default=DEFAULTS["epochs"],
        help=f"training epochs (default: {DEFAULTS['epochs']})",
    )
    parser.add_argument(
        "--backward-multiplier",
        type=float,
        default=DEFAULTS["backward_multiplier"],
        help="backward-pass cost as a multiple of the forward pass (default: 2)",
    )
    parser.add_argument(
        "--carbon-intensity",
        type=float,
        default=DEFAULTS["carbon_intensity"],
        metavar="G_PER_KWH",
        help=f"grid intensity in g CO2eq per kWh (default: {DEFAULTS['carbon_intensity']:g})",
    )
    parser.add_argument(
        "--region",
        default=DEFAULTS["region"],
        help=f"label for the carbon intensity region (default: {DEFAULTS['region']!r})",
    )
    parser.add_argument(
        "--format",
        default="table",
        choices=["table", "json", "csv"],
        help="output format (default: table)",
    )
    parser.add_argument("--output", metavar="FILE", help="write output to FILE instead of stdout")
    parser.add_argument(
        "--strict",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="reject unknown spec fields (--no-strict warns instead)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nncost",
        description="Static FLOPs, energy, and carbon-footprint analyzer for layered neural networks.",
    )
    parser.add_argument("--version", action="version", version=f"nncost {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="per-layer costs, energy, and carbon for one network")
    p.add_argument("network", metavar="SPEC", help=".nnspec file or zoo:<id>")
    p.add_argument(
        "--predictions",
        metavar="N[,N...]",
        help="also emit carbon curve points at these prediction counts",
    )
    _add_shared_flags(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("compare", help="tabulate weights/FLOPs/energy/CO2 across networks")
    p.add_argument("networks", nargs="+", metavar="SPEC", help=".nnspec files or zoo:<id> (>= 2)")
    p.add_argument(
        "--sort-by",
        default="name",
        choices=["name", "weights", "flops", "energy", "co2"],
        help="sort column (default: name; ties break by name)",
    )
    p.add_argument("--fail-fast", action="store_true", help="abort on the first failing network")
    _add_shared_flags(p)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("curve", help="carbon footprint vs number of predictions")
    p.add_argument("network", metavar="SPEC", help=".nnspec file or zoo:<id>")
    p.add_argument("--counts", metavar="N[,N...]", help="explicit prediction counts")
    p.add_argument("--from", dest="range_from", type=int, metavar="N", help="range start (with --to)")
    p.add_argument("--to", dest="range_to", type=int, metavar="N", help="range end")
    p.add_argument("--points", type=int, default=10, help="log-spaced points in the range (default: 10)")
    p.add_argument(
        "--include-training",
        action="store_true",
        help="add the one-time training footprint to every curve point",
    )
    _add_shared_flags(p)
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("hardware", help="hardware profile database")
    hw_sub = p.add_subparsers(dest="subcommand", required=True)
    hp = hw_sub.add_parser("list", help="list built-in hardware profiles")
    _add_shared_flags(hp)
    hp.set_defaults(func=_cmd_hardware_list)

    p = sub.add_parser("zoo", help="bundled model zoo")
    zoo_sub = p.add_subparsers(dest="subcommand", required=True)
    zp = zoo_sub.add_parser("list", help="list bundled example networks")
    _add_shared_flags(zp)
    zp.set_defaults(func=_cmd_zoo_list)

    p = sub.add_parser("serve", help="run the JSON HTTP service")
    p.add_argument("--port", type=int, default=8033, help="TCP port (default: 8033)")
    p.add_argument("--bind", default="127.0.0.1", help="bind address (default: loopback)")
    p.set_defaults(func=_cmd_serve)

    return parser


def _emit(data: str | bytes, output: str | None) -> None:
    raw = data.encode("utf-8") if isinstance(data, str) else data
    if output:
        with open(output, "wb") as handle:
            handle.write(raw)
    else:
        sys.stdout.buffer.write(raw)
        sys.stdout.buffer.flush()


def _shared_request_parts(args):
    profile = load_hardware_arg(args.hardware)
    training = _build_training(args)
    intensity = CarbonIntensity(
        grams_co2eq_per_kwh=args.carbon_intensity, region_label=args.region
    )
    return profile, training, intensity, DataType(args.dtype)


def _build_training(args) -> TrainingConfig:
    try:
        return TrainingConfig(
            training_samples=args.samples,
            epochs=args.epochs,
            backward_multiplier=args.backward_multiplier,
        )
    except ValueError as err:
        raise DomainError(str(err)) from err


def _parse_counts(text: str) -> list[int]:
    try:
        counts = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as err:
        raise DomainError(f"prediction counts must be integers: {text!r}") from err
    if not counts:
        raise DomainError("no prediction counts given")
    return counts


def _shape_text(obj: dict) -> str:
    return f"{obj['rows']}x{obj['cols']}x{obj['channels']}"


def _analyze_table(report: dict) -> str:
    lines = []
    network = report["inputs"]["network"]["network"]
    hardware = report["inputs"]["hardware"]
    lines.append(f"network: {network['name']} (input {_shape_text(network['input_shape'])})")
    lines.append(
        f"hardware: {hardware['id']} ({hardware['architecture']}), dtype {report['inputs']['dtype']}"
    )
    training = report["inputs"]["training"]
    intensity = report["inputs"]["intensity"]
    lines.append(
        f"training: {training['training_samples']} samples x {training['epochs']} epochs, "
        f"backward multiplier {format_float(float(training['backward_multiplier']))}"
    )
    lines.append(
        f"carbon intensity: {format_float(float(intensity['grams_co2eq_per_kwh']))} g/kWh "
        f"({intensity['region_label']})"
    )
    lines.append("")
    rows = [
        [
            layer["index"],
            layer["kind"],
            layer["flops"],
            layer["macs"],
            layer["weights"],
            _shape_text(layer["output_shape"]),
        ]
        for layer in report["cost"]["per_layer"]
    ]
    lines.append(render_table(["#", "layer", "flops", "macs", "weights", "output"], rows).rstrip())
    cost = report["cost"]
    lines.append("")
    lines.append(
        f"totals: {cost['total_flops']} FLOPs ({mflops_display(cost['total_flops'])} MFLOPs, truncated), "
        f"{cost['total_macs']} MACs, {cost['total_weights']} weights"
    )
    hw = report["hardware"]
    if hw["peak_flops"] is not None:
        lines.append(f"peak: {format_float(hw['peak_flops'])} FLOPS at dtype {report['inputs']['dtype']}")
    lines.append(f"efficiency: {format_float(hw['efficiency_flops_per_watt'])} FLOPS/W")
    energy = report["energy"]
    lines.append(
        "energy: forward "
        f"{format_float(energy['e_forward_j'])} J, backward {format_float(energy['e_backward_j'])} J, "
        f"training {format_float(energy['e_training_j'])} J, per prediction "
        f"{format_float(energy['e_per_prediction_j'])} J"
    )
    carbon = report["carbon"]
    lines.append(
        f"carbon: training {format_float(carbon['training_g'])} g CO2eq, per prediction "
        f"{format_float(carbon['per_prediction_g'])} g CO2eq"
    )
    if carbon["curve"]:
        lines.append("")
        curve_rows = [
            [point["predictions"], point["grams"], point.get("marker", "")]
            for point in carbon["curve"]
        ]
        lines.append(render_table(["predictions", "grams_co2eq", "marker"], curve_rows).rstrip())
    for warning in report["warnings"]:
        lines.append(f"warning: {warning}")
    return "\n".join(lines) + "\n"


def _analyze_csv(report: dict) -> str:
    fieldnames = [
        "index", "kind", "flops", "macs", "weights",
        "out_rows", "out_cols", "out_channels", "warnings",
    ]
    rows = []
    for layer in report["cost"]["per_layer"]:
        shape = layer["output_shape"]
        rows.append(
            {
                "index": layer["index"],
                "kind": layer["kind"],
                "flops": layer["flops"],
                "macs": layer["macs"],
                "weights": layer["weights"],
                "out_rows": shape["rows"],
                "out_cols": shape["cols"],
                "out_channels": shape["channels"],
                "warnings": "; ".join(layer["warnings"]),
            }
        )
    cost = report["cost"]
    rows.append(
        {
            "index": "total",
            "kind": "",
            "flops": cost["total_flops"],
            "macs": cost["total_macs"],
            "weights": cost["total_weights"],
            "warnings": "",
        }
    )
    return render_csv(fieldnames, rows)


def _cmd_analyze(args) -> int:
    document = load_network_arg(args.network, strict=args.strict)
    profile, training, intensity, dtype = _shared_request_parts(args)
    counts = tuple(_parse_counts(args.predictions)) if args.predictions else None
    report = analyze(
        AnalysisRequest(
            document=document,
            profile=profile,
            training=training,
            intensity=intensity,
            dtype=dtype,
            prediction_counts=counts,
        )
    )
    if args.format == "json":
        _emit(render_payload(report), args.output)
    elif args.format == "csv":
        _emit(_analyze_csv(report), args.output)
    else:
        _emit(_analyze_table(report), args.output)
    return 0


_COMPARE_FIELDS = ["name", "weights", "total_flops", "mflops", "e_training_j", "training_g", "error"]


def _compare_rows(report: dict) -> list[dict]:
    rows = []
    for row in report["rows"]:
        if "error" in row:
            rows.append({"name": row["name"], "error": row["error"]["message"]})
        else:
            rows.append({**row, "error": ""})
    return rows


def _cmd_compare(args) -> int:
    documents = [load_network_arg(ref, strict=args.strict) for ref in args.networks]
    profile, training, intensity, dtype = _shared_request_parts(args)
    report = compare(
        documents,
        profile,
        training,
        intensity,
        dtype,
        sort_by=args.sort_by,
        fail_fast=args.fail_fast,
    )
    if args.format == "json":
        _emit(render_payload(report), args.output)
    elif args.format == "csv":
        _emit(render_csv(_COMPARE_FIELDS, _compare_rows(report)), args.output)
    else:
        rows = [
            [
                row["name"],
                row.get("weights"),
                row.get("mflops"),
                row.get("e_training_j"),
                row.get("training_g"),
                row.get("error", ""),
            ]
            for row in _compare_rows(report)
        ]
        _emit(
            render_table(
                ["name", "weights", "mflops", "e_training_j", "training_g", "error"], rows
            ),
            args.output,
        )
    return 0


def _cmd_curve(args) -> int:
    document = load_network_arg(args.network, strict=args.strict)
    profile, training, intensity, dtype = _shared_request_parts(args)
    if args.counts and (args.range_from is not None or args.range_to is not None):
        raise DomainError("give either --counts or --from/--to, not both")
    if args.counts:
        counts = _parse_counts(args.counts)
    elif args.range_from is not None and args.range_to is not None:
        counts = log_spaced_counts(args.range_from, args.range_to, args.points)
    else:
        raise DomainError("curve needs --counts or both --from and --to")
    report = curve_report(
        document,
        profile,
        training,
        intensity,
        counts,
        dtype,
        include_training_offset=args.include_training,
    )
    if args.format == "json":
        _emit(render_payload(report), args.output)
    elif args.format == "csv":
        rows = [
            {
                "predictions": point["predictions"],
                "grams_co2eq": point["grams"],
                "marker": point.get("marker", ""),
            }
            for point in report["curve"]
        ]
        _emit(render_csv(["predictions", "grams_co2eq", "marker"], rows), args.output)
    else:
        rows = [
            [point["predictions"], point["grams"], point.get("marker", "")]
            for point in report["curve"]
        ]
        _emit(render_table(["predictions", "grams_co2eq", "marker"], rows), args.output)
    return 0


def _cmd_hardware_list(args) -> int:
    profiles = builtin_profiles()
    if args.format == "json":
        payload = {"profiles": [profile_to_json_obj(p) for p in profiles]}
        _emit(render_payload(payload), args.output)
        return 0
    fieldnames = ["id", "architecture", "fp32_per_cycle", "fp16_per_cycle",
                  "clock_hz", "cores", "efficiency_flops_per_watt", "tdp_watts"]
    rows = []
    for p in profiles:
        obj = profile_to_json_obj(p)
        rows.append(
            {
                "id": p.id,
                "architecture": p.architecture,
                "fp32_per_cycle": obj["flops_per_cycle"].get("fp32"),
                "fp16_per_cycle": obj["flops_per_cycle"].get("fp16"),
                "clock_hz": p.clock_hz,
                "cores": p.cores,
                "efficiency_flops_per_watt": p.efficiency_flops_per_watt,
                "tdp_watts": p.tdp_watts,
            }
        )
    if args.format == "csv":
        _emit(render_csv(fieldnames, rows), args.output)
    else:
        _emit(render_table(fieldnames, [[row[f] for f in fieldnames] for row in rows]), args.output)
    return 0


def _cmd_zoo_list(args) -> int:
    entries = model_zoo()
    if args.format == "json":
        payload = {
            "entries": [
                {
                    "id": entry.id,
                    "provenance": entry.provenance,
                    "document": document_to_json_obj(entry.spec),
                }
                for entry in entries
            ]
        }
        _emit(render_payload(payload), args.output)
        return 0
    rows = [
        [entry.id, entry.spec.network.name, len(entry.spec.network.layers), entry.provenance]
        for entry in entries
    ]
    if args.format == "csv":
        _emit(
            render_csv(
                ["id", "name", "layers", "provenance"],
                [dict(zip(["id", "name", "layers", "provenance"], row)) for row in rows],
            ),
            args.output,
        )
    else:
        _emit(render_table(["id", "name", "layers", "provenance"], rows), args.output)
    return 0


def _cmd_serve(args) -> int:
    from .service import serve

    serve(bind=args.bind, port=args.port)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AnalyzerError as err:
        print(f"nncost error ({err.code}): {err}", file=sys.stderr)
        return err.exit_code
    except BrokenPipeError:
        return 1


if __name__ == "__main__":
    sys.exit(main())
