"""Stateless JSON-over-HTTP service.

Endpoints (all under ``/api/v1``): ``GET /health``, ``GET /hardware``,
``GET /zoo``, ``POST /analyze``, ``POST /compare``, ``POST /curve``.
Request and response bodies mirror the file schemas; responses are
rendered through the same canonical serializer as the CLI, so a JSON
request and the equivalent CLI invocation produce byte-identical
payloads. Module errors map to 400 with ``{code, message, location?}``;
unknown routes and unresolved ids map to 404. Handlers touch only
immutable shared data, so concurrent requests are independent.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import __version__
from .analysis import (
    DEFAULTS,
    AnalysisRequest,
    analyze,
    compare,
    curve_report,
    hardware_from_json_ref,
    log_spaced_counts,
    network_from_json_ref,
)
from .energy import CarbonIntensity, TrainingConfig
from .errors import AnalyzerError, DomainError, NotFound, SpecSchemaError, SpecSyntaxError
from .hardware import DataType, builtin_profiles
from .reporting import render_payload
from .specfile import document_to_json_obj, model_zoo, profile_to_json_obj

_MAX_BODY_BYTES = 10 * 1024 * 1024


def _dtype_from_obj(value: object) -> DataType:
    if value is None:
        return DataType(DEFAULTS["dtype"])
    if not isinstance(value, str):
        raise SpecSchemaError("dtype must be a string")
    try:
        return DataType(value)
    except ValueError:
        choices = ", ".join(d.value for d in DataType)
        raise SpecSchemaError(f"unknown dtype {value!r} (one of: {choices})") from None


def _training_from_obj(value: object) -> TrainingConfig:
    if value is None:
        value = {}
    if not isinstance(value, dict):
        raise SpecSchemaError("training must be an object")
    allowed = {"training_samples", "epochs", "backward_multiplier"}
    for key in value:
        if key not in allowed:
            raise SpecSchemaError(f"training: unknown key {key!r}")
    samples = value.get("training_samples", DEFAULTS["training_samples"])
    epochs = value.get("epochs", DEFAULTS["epochs"])
    multiplier = value.get("backward_multiplier", DEFAULTS["backward_multiplier"])
    if not isinstance(samples, int) or isinstance(samples, bool):
        raise SpecSchemaError("training.training_samples must be an integer")
    if not isinstance(epochs, int) or isinstance(epochs, bool):
        raise SpecSchemaError("training.epochs must be an integer")
    if not isinstance(multiplier, (int, float)) or isinstance(multiplier, bool):
        raise SpecSchemaError("training.backward_multiplier must be a number")
    try:
        return TrainingConfig(
            training_samples=samples, epochs=epochs, backward_multiplier=float(multiplier)
        )
    except ValueError as err:
        raise DomainError(str(err)) from err


def _intensity_from_obj(value: object) -> CarbonIntensity:
    if value is None:
        value = {}
    if not isinstance(value, dict):
        raise SpecSchemaError("intensity must be an object")
    allowed = {"grams_co2eq_per_kwh", "region_label"}
    for key in value:
        if key not in allowed:
            raise SpecSchemaError(f"intensity: unknown key {key!r}")
    grams = value.get("grams_co2eq_per_kwh", DEFAULTS["carbon_intensity"])
    region = value.get("region_label", DEFAULTS["region"])
    if not isinstance(grams, (int, float)) or isinstance(grams, bool):
        raise SpecSchemaError("intensity.grams_co2eq_per_kwh must be a number")
    if not isinstance(region, str):
        raise SpecSchemaError("intensity.region_label must be a string")
    try:
        return CarbonIntensity(grams_co2eq_per_kwh=float(grams), region_label=region)
    except ValueError as err:
        raise DomainError(str(err)) from err


def _counts_from_obj(value: object, key: str) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(c, int) and not isinstance(c, bool) for c in value
    ):
        raise SpecSchemaError(f"{key} must be an array of integers")
    return list(value)


def _strict_from_obj(body: dict) -> bool:
    strict = body.get("strict", True)
    if not isinstance(strict, bool):
        raise SpecSchemaError("strict must be a boolean")
    return strict


def handle_analyze(body: dict) -> dict:
    allowed = {"network", "hardware", "dtype", "training", "intensity", "prediction_counts", "strict"}
    for key in body:
        if key not in allowed:
            raise SpecSchemaError(f"analyze request: unknown key {key!r}")
    if "network" not in body:
        raise SpecSchemaError('analyze request: missing required key "network"')
    strict = _strict_from_obj(body)
    document = network_from_json_ref(body["network"], strict=strict)
    profile = hardware_from_json_ref(body.get("hardware", DEFAULTS["hardware"]))
    counts = body.get("prediction_counts")
    request = AnalysisRequest(
        document=document,
        profile=profile,
        training=_training_from_obj(body.get("training")),
        intensity=_intensity_from_obj(body.get("intensity")),
        dtype=_dtype_from_obj(body.get("dtype")),
        prediction_counts=(
            tuple(_counts_from_obj(counts, "prediction_counts")) if counts is not None else None
        ),
    )
    return analyze(request)


def handle_compare(body: dict) -> dict:
    allowed = {"networks", "hardware", "dtype", "training", "intensity", "sort_by", "fail_fast", "strict"}
    for key in body:
        if key not in allowed:
            raise SpecSchemaError(f"compare request: unknown key {key!r}")
    refs = body.get("networks")
    if not isinstance(refs, list):
        raise SpecSchemaError('compare request: "networks" must be an array')
    strict = _strict_from_obj(body)
    documents = [network_from_json_ref(ref, strict=strict) for ref in refs]
    sort_by = body.get("sort_by", "name")
    if not isinstance(sort_by, str):
        raise SpecSchemaError("sort_by must be a string")
    fail_fast = body.get("fail_fast", False)
    if not isinstance(fail_fast, bool):
        raise SpecSchemaError("fail_fast must be a boolean")
    return compare(
        documents,
        hardware_from_json_ref(body.get("hardware", DEFAULTS["hardware"])),
        _training_from_obj(body.get("training")),
        _intensity_from_obj(body.get("intensity")),
        _dtype_from_obj(body.get("dtype")),
        sort_by=sort_by,
        fail_fast=fail_fast,
    )


def handle_curve(body: dict) -> dict:
    allowed = {"network", "hardware", "dtype", "training", "intensity", "counts", "range", "include_training", "strict"}
    for key in body:
        if key not in allowed:
            raise SpecSchemaError(f"curve request: unknown key {key!r}")
    if "network" not in body:
        raise SpecSchemaError('curve request: missing required key "network"')
    strict = _strict_from_obj(body)
    document = network_from_json_ref(body["network"], strict=strict)
    if ("counts" in body) == ("range" in body):
        raise SpecSchemaError('curve request: give exactly one of "counts" or "range"')
    if "counts" in body:
        counts = _counts_from_obj(body["counts"], "counts")
    else:
        range_obj = body["range"]
        if not isinstance(range_obj, dict) or not {"start", "end"} <= set(range_obj) or not set(range_obj) <= {"start", "end", "points"}:
            raise SpecSchemaError('curve request: "range" must be {"start", "end", "points"?}')
        values = _counts_from_obj(
            [range_obj["start"], range_obj["end"], range_obj.get("points", 10)], "range"
        )
        counts = log_spaced_counts(values[0], values[1], values[2])
    include_training = body.get("include_training", False)
    if not isinstance(include_training, bool):
        raise SpecSchemaError("include_training must be a boolean")
    return curve_report(
        document,
        hardware_from_json_ref(body.get("hardware", DEFAULTS["hardware"])),
        _training_from_obj(body.get("training")),
        _intensity_from_obj(body.get("intensity")),
        counts,
        _dtype_from_obj(body.get("dtype")),
        include_training_offset=include_training,
    )


def handle_hardware() -> dict:
    return {"profiles": [profile_to_json_obj(p) for p in builtin_profiles()]}


def handle_zoo() -> dict:
    return {
        "entries": [
            {
                "id": entry.id,
                "provenance": entry.provenance,
                "document": document_to_json_obj(entry.spec),
            }
            for entry in model_zoo()
        ]
    }


def handle_health() -> dict:
    return {"status": "ok", "version": __version__}


_GET_ROUTES = {
    "/api/v1/health": handle_health,
    "/api/v1/hardware": handle_hardware,
    "/api/v1/zoo": handle_zoo,
}

_POST_ROUTES = {
    "/api/v1/analyze": handle_analyze,
    "/api/v1/compare": handle_compare,
    "/api/v1/curve": handle_curve,
}


class _Handler(BaseHTTPRequestHandler):
    server_version = f"nncost/{__version__}"
    protocol_version = "HTTP/1.1"
    quiet = True

    def log_message(self, fmt, *log_args):  # noqa: N802 (stdlib name)
        if not self.quiet:
            super().log_message(fmt, *log_args)

    def _send(self, status: int, payload: bytes) -> None:
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(payload)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(payload)

    def _send_obj(self, status: int, obj: dict) -> None:
        self._send(status, render_payload(obj))

    def _send_error_obj(self, status: int, err: AnalyzerError) -> None:
        self._send_obj(status, err.to_json_obj())

    def do_OPTIONS(self):  # noqa: N802 (stdlib name)
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):  # noqa: N802 (stdlib name)
        handler = _GET_ROUTES.get(self.path)
        if handler is None:
            self._send_error_obj(404, NotFound(f"unknown route {self.path!r}"))
            return
        self._send_obj(200, handler())

    def do_POST(self):  # noqa: N802 (stdlib name)
        handler = _POST_ROUTES.get(self.path)
        if handler is None:
            self._send_error_obj(404, NotFound(f"unknown route {self.path!r}"))
            return
        try:
            body = self._read_json_body()
            report = handler(body)
        except NotFound as err:
            self._send_error_obj(404, err)
            return
        except AnalyzerError as err:
            self._send_error_obj(400, err)
            return
        except Exception as err:  # pragma: no cover - defensive
            self._send_obj(500, {"code": "internal_error", "message": str(err)})
            return
        self._send_obj(200, report)

    def _read_json_body(self) -> dict:
        content_type = self.headers.get("Content-Type", "")
        if content_type.split(";")[0].strip().lower() != "application/json":
            raise SpecSyntaxError(
                f"expected Content-Type application/json, got {content_type!r}"
            )
        try:
            length = int(self.headers.get("Content-Length", "0"))
        except ValueError:
            raise SpecSyntaxError("invalid Content-Length header") from None
        if length <= 0:
            raise SpecSyntaxError("request body is empty")
        if length > _MAX_BODY_BYTES:
            raise SpecSyntaxError(f"request body exceeds {_MAX_BODY_BYTES} bytes")
        raw = self.rfile.read(length)
        try:
            body = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as err:
            raise SpecSyntaxError(f"malformed JSON body: {err}") from None
        if not isinstance(body, dict):
            raise SpecSyntaxError("request body must be a JSON object")
        return body


def make_server(bind: str = "127.0.0.1", port: int = 0, *, quiet: bool = True) -> ThreadingHTTPServer:
    """Create (but do not start) the service; ``port=0`` picks a free port."""
    handler = type("Handler", (_Handler,), {"quiet": quiet})
    server = ThreadingHTTPServer((bind, port), handler)
    server.daemon_threads = True
    return server


def serve(bind: str = "127.0.0.1", port: int = 8033) -> None:
    """Run the service until interrupted."""
    server = make_server(bind, port, quiet=False)
    host, actual_port = server.server_address[:2]
    print(f"nncost service listening on http://{host}:{actual_port}/api/v1", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
