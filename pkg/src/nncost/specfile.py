"""Parsing, validation, and serialization of network and profile files.

Both ``.nnspec`` (networks) and ``.hwspec`` (hardware profiles) share one
line-oriented grammar, documented in ``docs/format.md``:

* header keys first (``format_version``, ``kind``), then sections,
* ``[section]`` or ``[section argument]`` headers,
* ``key = value`` entries, one per line,
* full-line ``#`` comments and blank lines anywhere,
* strict UTF-8, LF or CRLF.

Parsing is strict by default: unknown sections or keys are errors. In
lenient mode they are skipped and reported as warnings on the returned
document. Every diagnostic carries the source line and column. The same
document structure also round-trips through JSON objects (used by the
HTTP service), with identical schema and validation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .errors import (
    NotFound,
    SourceLocation,
    SpecSchemaError,
    SpecSyntaxError,
    SpecValidationError,
)
from .hardware import DataType, HardwareProfile
from .shapes import (
    ActivationKind,
    Conv2D,
    Dense,
    Flatten,
    LayerSpec,
    NetworkSpec,
    Pool2D,
    TensorShape,
    infer_shapes,
    layer_kind,
)

__all__ = [
    "FORMAT_VERSION",
    "SpecMetadata",
    "SpecDocument",
    "ModelZooEntry",
    "parse_spec",
    "serialize_spec",
    "parse_hardware",
    "serialize_hardware",
    "document_to_json_obj",
    "document_from_json_obj",
    "profile_to_json_obj",
    "profile_from_json_obj",
    "model_zoo",
    "zoo_entry",
]

FORMAT_VERSION = "1"

_METADATA_KEYS = ("author", "source", "citation", "notes")


@dataclass(frozen=True)
class SpecMetadata:
    author: str | None = None
    source: str | None = None
    citation: str | None = None
    notes: str | None = None


@dataclass(frozen=True)
class SpecDocument:
    format_version: str
    network: NetworkSpec
    metadata: SpecMetadata = SpecMetadata()
    # lenient-mode diagnostics; not part of the document's identity
    warnings: tuple[str, ...] = field(default=(), compare=False)


@dataclass(frozen=True)
class ModelZooEntry:
    id: str
    spec: SpecDocument
    provenance: str


# ---------------------------------------------------------------------------
# low-level line scanner

_SECTION_RE = re.compile(r"^\[([a-z][a-z0-9_]*)(?:[ \t]+([a-z][a-z0-9_]*))?\][ \t]*$")
_KV_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)[ \t]*=[ \t]*(.*)$")

_INT_RE = re.compile(r"^[0-9]+$")


@dataclass(frozen=True)
class _Entry:
    key: str
    value: str
    loc: SourceLocation


@dataclass
class _Section:
    name: str
    arg: str | None
    loc: SourceLocation
    entries: list[_Entry]


@dataclass
class _RawDocument:
    header: list[_Entry]
    sections: list[_Section]


def _scan(text: str | bytes, filename: str | None) -> _RawDocument:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as err:
            line = bytes(text)[: err.start].count(b"\n") + 1
            raise SpecSyntaxError(
                f"invalid UTF-8 byte at offset {err.start}",
                location=SourceLocation(line, 1, filename),
            ) from err
    header: list[_Entry] = []
    sections: list[_Section] = []
    for number, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        col = len(line) - len(line.lstrip()) + 1
        loc = SourceLocation(number, col, filename)
        match = _SECTION_RE.match(stripped)
        if match:
            sections.append(_Section(match.group(1), match.group(2), loc, []))
            continue
        match = _KV_RE.match(stripped)
        if match:
            key, value = match.group(1), match.group(2).strip()
            if not value:
                raise SpecSyntaxError(f"key {key!r} has an empty value", location=loc)
            entry = _Entry(key, value, loc)
            if sections:
                sections[-1].entries.append(entry)
            else:
                header.append(entry)
            continue
        raise SpecSyntaxError(
            f"cannot parse line: expected 'key = value' or '[section]', got {stripped!r}",
            location=loc,
        )
    return _RawDocument(header, sections)


class _EntryReader:
    """Consumes the key/value entries of one section, tracking leftovers."""

    def __init__(self, entries: list[_Entry], ctx: str, strict: bool, warnings: list[str]):
        self._ctx = ctx
        self._strict = strict
        self._warnings = warnings
        self._entries: dict[str, _Entry] = {}
        for entry in entries:
            if entry.key in self._entries:
                raise SpecSchemaError(
                    f"{ctx}: duplicate key {entry.key!r}", location=entry.loc
                )
            self._entries[entry.key] = entry

    def take(self, key: str) -> _Entry | None:
        return self._entries.pop(key, None)

    def require(self, key: str, section_loc: SourceLocation) -> _Entry:
        entry = self.take(key)
        if entry is None:
            raise SpecSchemaError(
                f"{self._ctx}: missing required key {key!r}", location=section_loc
            )
        return entry

    def finish(self) -> None:
        for entry in self._entries.values():
            message = f"{self._ctx}: unknown key {entry.key!r}"
            if self._strict:
                raise SpecSchemaError(message, location=entry.loc)
            self._warnings.append(f"{entry.loc}: ignored {message}")


# typed value converters (text tokens -> python values)

def _as_int(ctx: str, entry: _Entry) -> int:
    if not _INT_RE.match(entry.value):
        raise SpecSyntaxError(
            f"{ctx}: {entry.key} must be an unsigned integer, got {entry.value!r}",
            location=entry.loc,
        )
    return int(entry.value)


def _as_float(ctx: str, entry: _Entry) -> float:
    try:
        value = float(entry.value)
    except ValueError:
        value = float("nan")
    if value != value or value in (float("inf"), float("-inf")):
        raise SpecSyntaxError(
            f"{ctx}: {entry.key} must be a finite number, got {entry.value!r}",
            location=entry.loc,
        )
    return value


def _as_bool(ctx: str, entry: _Entry) -> bool:
    if entry.value == "true":
        return True
    if entry.value == "false":
        return False
    raise SpecSyntaxError(
        f"{ctx}: {entry.key} must be 'true' or 'false', got {entry.value!r}",
        location=entry.loc,
    )


def _as_string(ctx: str, entry: _Entry) -> str:
    return entry.value


def _as_activation(ctx: str, entry: _Entry) -> ActivationKind:
    try:
        return ActivationKind(entry.value)
    except ValueError:
        choices = ", ".join(a.value for a in ActivationKind)
        raise SpecSchemaError(
            f"{ctx}: unknown activation {entry.value!r} (one of: {choices})",
            location=entry.loc,
        ) from None


# semantic checks shared by the text and JSON paths

def _check_min(ctx: str, key: str, value: int, minimum: int, loc: SourceLocation | None) -> int:
    if value < minimum:
        raise SpecValidationError(
            f"{ctx}: {key} must be >= {minimum}, got {value}", location=loc
        )
    return value


def _check_positive(ctx: str, key: str, value: float, loc: SourceLocation | None) -> float:
    if not value > 0:
        raise SpecValidationError(
            f"{ctx}: {key} must be > 0, got {value}", location=loc
        )
    return value


def _check_clean_string(ctx: str, key: str, value: str, loc: SourceLocation | None) -> str:
    if not value or value != value.strip() or any(c in value for c in "\r\n"):
        raise SpecValidationError(
            f"{ctx}: {key} must be a nonempty single-line string without "
            f"leading/trailing whitespace, got {value!r}",
            location=loc,
        )
    return value


# ---------------------------------------------------------------------------
# network documents

def _read_header(
    raw: _RawDocument,
    expected_kind: str,
    strict: bool,
    warnings: list[str],
    filename: str | None,
) -> str:
    reader = _EntryReader(raw.header, "document header", strict, warnings)
    top = SourceLocation(1, 1, filename)
    version_entry = reader.require("format_version", top)
    version = version_entry.value
    if version != FORMAT_VERSION:
        raise SpecSchemaError(
            f"unrecognized format_version {version!r} (this tool reads version {FORMAT_VERSION})",
            location=version_entry.loc,
        )
    kind_entry = reader.require("kind", top)
    if kind_entry.value != expected_kind:
        raise SpecSchemaError(
            f"expected kind = {expected_kind}, got {kind_entry.value!r}",
            location=kind_entry.loc,
        )
    reader.finish()
    return version


def _read_layer(section: _Section, index: int, strict: bool, warnings: list[str]) -> LayerSpec:
    kind = section.arg
    if kind is None:
        raise SpecSchemaError(
            f"layer {index}: [layer] needs a kind, e.g. [layer conv2d]",
            location=section.loc,
        )
    ctx = f"layer {index} ({kind})"
    reader = _EntryReader(section.entries, ctx, strict, warnings)

    def opt_int(key: str, default: int | None, minimum: int) -> int | None:
        entry = reader.take(key)
        if entry is None:
            return default
        return _check_min(ctx, key, _as_int(ctx, entry), minimum, entry.loc)

    def req_int(key: str, minimum: int) -> int:
        entry = reader.require(key, section.loc)
        return _check_min(ctx, key, _as_int(ctx, entry), minimum, entry.loc)

    def opt_bool(key: str, default: bool) -> bool:
        entry = reader.take(key)
        return default if entry is None else _as_bool(ctx, entry)

    def opt_activation(key: str) -> ActivationKind:
        entry = reader.take(key)
        return ActivationKind.NONE if entry is None else _as_activation(ctx, entry)

    layer: LayerSpec
    if kind == "dense":
        layer = Dense(
            output_size=req_int("output_size", 1),
            use_bias=opt_bool("use_bias", True),
            activation=opt_activation("activation"),
        )
    elif kind == "conv2d":
        layer = Conv2D(
            kernel_rows=req_int("kernel_rows", 1),
            kernel_cols=req_int("kernel_cols", 1),
            stride_rows=opt_int("stride_rows", 1, 1),
            stride_cols=opt_int("stride_cols", 1, 1),
            pad_rows=opt_int("pad_rows", 0, 0),
            pad_cols=opt_int("pad_cols", 0, 0),
            num_filters=opt_int("num_filters", 1, 1),
            use_bias=opt_bool("use_bias", True),
            activation=opt_activation("activation"),
        )
    elif kind == "pool2d":
        layer = Pool2D(
            kernel_rows=req_int("kernel_rows", 1),
            kernel_cols=req_int("kernel_cols", 1),
            stride_rows=opt_int("stride_rows", None, 1),
            stride_cols=opt_int("stride_cols", None, 1),
        )
    elif kind == "flatten":
        layer = Flatten()
    else:
        raise SpecSchemaError(
            f"layer {index}: unknown layer kind {kind!r} "
            "(one of: dense, conv2d, pool2d, flatten)",
            location=section.loc,
        )
    reader.finish()
    return layer


def parse_spec(text: str | bytes, *, strict: bool = True, filename: str | None = None) -> SpecDocument:
    """Parse a network document; see the module docstring for the grammar.

    Raises SpecSyntaxError / SpecSchemaError / SpecValidationError with
    line and column diagnostics. In lenient mode unknown sections and keys
    are attached to the document's ``warnings`` instead.
    """
    warnings: list[str] = []
    raw = _scan(text, filename)
    version = _read_header(raw, "network", strict, warnings, filename)
    top = SourceLocation(1, 1, filename)

    metadata = SpecMetadata()
    name: str | None = None
    input_shape: TensorShape | None = None
    layers: list[LayerSpec] = []
    seen: dict[str, SourceLocation] = {}

    for section in raw.sections:
        if section.name in ("metadata", "network", "input_shape"):
            if section.arg is not None:
                raise SpecSchemaError(
                    f"[{section.name}] takes no argument", location=section.loc
                )
            if section.name in seen:
                raise SpecSchemaError(
                    f"duplicate [{section.name}] section (first at {seen[section.name]})",
                    location=section.loc,
                )
            seen[section.name] = section.loc

        if section.name == "metadata":
            reader = _EntryReader(section.entries, "[metadata]", strict, warnings)
            values = {}
            for key in _METADATA_KEYS:
                entry = reader.take(key)
                if entry is not None:
                    values[key] = _check_clean_string(
                        "[metadata]", key, _as_string("[metadata]", entry), entry.loc
                    )
            reader.finish()
            metadata = SpecMetadata(**values)
        elif section.name == "network":
            reader = _EntryReader(section.entries, "[network]", strict, warnings)
            entry = reader.require("name", section.loc)
            name = _check_clean_string("[network]", "name", entry.value, entry.loc)
            reader.finish()
        elif section.name == "input_shape":
            ctx = "[input_shape]"
            reader = _EntryReader(section.entries, ctx, strict, warnings)
            dims = {}
            for key in ("rows", "cols", "channels"):
                entry = reader.require(key, section.loc)
                dims[key] = _check_min(ctx, key, _as_int(ctx, entry), 1, entry.loc)
            reader.finish()
            input_shape = TensorShape(**dims)
        elif section.name == "layer":
            layers.append(_read_layer(section, len(layers), strict, warnings))
        else:
            message = f"unknown section [{section.name}]"
            if strict:
                raise SpecSchemaError(message, location=section.loc)
            warnings.append(f"{section.loc}: ignored {message}")

    if name is None:
        raise SpecSchemaError("missing [network] section with a name", location=top)
    if input_shape is None:
        raise SpecSchemaError("missing [input_shape] section", location=top)
    if not layers:
        raise SpecValidationError(
            "network needs at least one [layer ...] section", location=top
        )

    return SpecDocument(
        format_version=version,
        network=NetworkSpec(name=name, input_shape=input_shape, layers=tuple(layers)),
        metadata=metadata,
        warnings=tuple(warnings),
    )


def _layer_fields(layer: LayerSpec) -> list[tuple[str, object]]:
    if isinstance(layer, Dense):
        return [
            ("output_size", layer.output_size),
            ("use_bias", layer.use_bias),
            ("activation", layer.activation.value),
        ]
    if isinstance(layer, Conv2D):
        return [
            ("kernel_rows", layer.kernel_rows),
            ("kernel_cols", layer.kernel_cols),
            ("stride_rows", layer.stride_rows),
            ("stride_cols", layer.stride_cols),
            ("pad_rows", layer.pad_rows),
            ("pad_cols", layer.pad_cols),
            ("num_filters", layer.num_filters),
            ("use_bias", layer.use_bias),
            ("activation", layer.activation.value),
        ]
    if isinstance(layer, Pool2D):
        return [
            ("kernel_rows", layer.kernel_rows),
            ("kernel_cols", layer.kernel_cols),
            ("stride_rows", layer.stride_rows),
            ("stride_cols", layer.stride_cols),
        ]
    return []


def _format_value(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def serialize_spec(doc: SpecDocument) -> str:
    """Deterministic text form; ``parse_spec(serialize_spec(d)) == d``."""
    lines = [f"format_version = {doc.format_version}", "kind = network", ""]
    meta_items = [
        (key, getattr(doc.metadata, key))
        for key in _METADATA_KEYS
        if getattr(doc.metadata, key) is not None
    ]
    if meta_items:
        lines.append("[metadata]")
        lines.extend(f"{key} = {value}" for key, value in meta_items)
        lines.append("")
    lines += ["[network]", f"name = {doc.network.name}", ""]
    shape = doc.network.input_shape
    lines += [
        "[input_shape]",
        f"rows = {shape.rows}",
        f"cols = {shape.cols}",
        f"channels = {shape.channels}",
    ]
    for layer in doc.network.layers:
        lines += ["", f"[layer {layer_kind(layer)}]"]
        lines.extend(f"{key} = {_format_value(value)}" for key, value in _layer_fields(layer))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# hardware documents

def parse_hardware(
    text: str | bytes, *, strict: bool = True, filename: str | None = None
) -> list[HardwareProfile]:
    """Parse a hardware document into its list of profiles.

    A ``[flops_per_cycle]`` section binds to the ``[profile]`` immediately
    before it. Unknown data type keys are always rejected: silently
    skipping one would misattribute per-cycle figures.
    """
    warnings: list[str] = []
    raw = _scan(text, filename)
    _read_header(raw, "hardware", strict, warnings, filename)

    profiles: list[HardwareProfile] = []
    pending: dict | None = None
    pending_loc: SourceLocation | None = None

    def flush() -> None:
        nonlocal pending
        if pending is not None:
            try:
                profiles.append(HardwareProfile(**pending))
            except ValueError as err:
                raise SpecValidationError(str(err), location=pending_loc) from err
            pending = None

    for section in raw.sections:
        if section.name == "profile":
            flush()
            ctx = "[profile]"
            reader = _EntryReader(section.entries, ctx, strict, warnings)
            entry = reader.require("id", section.loc)
            profile_id = _check_clean_string(ctx, "id", entry.value, entry.loc)
            ctx = f"profile {profile_id!r}"
            entry = reader.require("architecture", section.loc)
            architecture = _check_clean_string(ctx, "architecture", entry.value, entry.loc)
            pending = {
                "id": profile_id,
                "architecture": architecture,
                "flops_per_cycle": {},
            }
            pending_loc = section.loc
            for key in ("clock_hz", "efficiency_flops_per_watt", "tdp_watts"):
                kv = reader.take(key)
                if kv is not None:
                    pending[key] = _check_positive(ctx, key, _as_float(ctx, kv), kv.loc)
            kv = reader.take("cores")
            if kv is not None:
                pending["cores"] = _check_min(ctx, "cores", _as_int(ctx, kv), 1, kv.loc)
            kv = reader.take("notes")
            if kv is not None:
                pending["notes"] = _check_clean_string(ctx, "notes", kv.value, kv.loc)
            reader.finish()
        elif section.name == "flops_per_cycle":
            if pending is None:
                raise SpecSchemaError(
                    "[flops_per_cycle] must follow a [profile] section",
                    location=section.loc,
                )
            if pending["flops_per_cycle"]:
                raise SpecSchemaError(
                    f"profile {pending['id']!r}: duplicate [flops_per_cycle] section",
                    location=section.loc,
                )
            ctx = f"profile {pending['id']!r} [flops_per_cycle]"
            for entry in section.entries:
                try:
                    dtype = DataType(entry.key)
                except ValueError:
                    choices = ", ".join(d.value for d in DataType)
                    raise SpecSchemaError(
                        f"{ctx}: unknown data type {entry.key!r} (one of: {choices})",
                        location=entry.loc,
                    ) from None
                if dtype in pending["flops_per_cycle"]:
                    raise SpecSchemaError(
                        f"{ctx}: duplicate data type {entry.key!r}", location=entry.loc
                    )
                value = _as_float(ctx, entry)
                if value < 0:
                    raise SpecValidationError(
                        f"{ctx}: {entry.key} must be >= 0, got {value}", location=entry.loc
                    )
                pending["flops_per_cycle"][dtype] = value
        else:
            message = f"unknown section [{section.name}]"
            if strict:
                raise SpecSchemaError(message, location=section.loc)
            warnings.append(f"{section.loc}: ignored {message}")

    flush()
    if not profiles:
        raise SpecValidationError(
            "hardware document contains no [profile] sections",
            location=SourceLocation(1, 1, filename),
        )
    return profiles


def serialize_hardware(profiles: list[HardwareProfile]) -> str:
    """Deterministic text form; round-trips losslessly through parse_hardware."""
    lines = [f"format_version = {FORMAT_VERSION}", "kind = hardware"]
    for profile in profiles:
        lines += ["", "[profile]", f"id = {profile.id}", f"architecture = {profile.architecture}"]
        for key in ("clock_hz", "efficiency_flops_per_watt", "tdp_watts"):
            value = getattr(profile, key)
            if value is not None:
                lines.append(f"{key} = {_format_value(value)}")
        if profile.cores is not None:
            lines.append(f"cores = {profile.cores}")
        if profile.notes:
            lines.append(f"notes = {profile.notes}")
        if profile.flops_per_cycle:
            lines += ["", "[flops_per_cycle]"]
            lines.extend(
                f"{dtype.value} = {_format_value(value)}"
                for dtype, value in sorted(profile.flops_per_cycle.items(), key=lambda kv: kv[0].value)
            )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON mirror of the document schema (used by the HTTP service and exports)

def document_to_json_obj(doc: SpecDocument) -> dict:
    obj: dict = {"format_version": doc.format_version, "kind": "network"}
    meta = {
        key: getattr(doc.metadata, key)
        for key in _METADATA_KEYS
        if getattr(doc.metadata, key) is not None
    }
    if meta:
        obj["metadata"] = meta
    shape = doc.network.input_shape
    obj["network"] = {
        "name": doc.network.name,
        "input_shape": {"rows": shape.rows, "cols": shape.cols, "channels": shape.channels},
        "layers": [
            {"kind": layer_kind(layer), **dict(_layer_fields(layer))}
            for layer in doc.network.layers
        ],
    }
    return obj


def document_from_json_obj(obj: object, *, strict: bool = True) -> SpecDocument:
    """Validate a JSON object against the document schema.

    The easiest correct implementation reuses the text parser: the JSON
    schema mirrors the text schema field for field, so the object is
    rendered to text and parsed with full diagnostics.
    """
    text = _json_obj_to_text(obj)
    return parse_spec(text, strict=strict)


def _require_obj(value: object, what: str) -> dict:
    if not isinstance(value, dict):
        raise SpecSchemaError(f"{what} must be a JSON object, got {type(value).__name__}")
    return value


def _json_scalar_to_token(what: str, key: str, value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return _format_value(value)
    if isinstance(value, str):
        if "\n" in value or "\r" in value:
            raise SpecValidationError(f"{what}: {key} must be a single-line string")
        return value
    raise SpecSchemaError(f"{what}: {key} must be a scalar, got {type(value).__name__}")


def _json_obj_to_text(obj: object) -> str:
    doc = _require_obj(obj, "document")
    lines: list[str] = []
    version = doc.get("format_version")
    if version is None:
        raise SpecSchemaError("document: missing required key 'format_version'")
    lines.append(f"format_version = {_json_scalar_to_token('document', 'format_version', version)}")
    kind = doc.get("kind", "network")
    lines.append(f"kind = {_json_scalar_to_token('document', 'kind', kind)}")
    for key in doc:
        if key not in ("format_version", "kind", "metadata", "network"):
            raise SpecSchemaError(f"document: unknown key {key!r}")

    if "metadata" in doc:
        lines.append("[metadata]")
        for key, value in _require_obj(doc["metadata"], "metadata").items():
            lines.append(f"{key} = {_json_scalar_to_token('metadata', key, value)}")

    network = _require_obj(doc.get("network"), "network")
    lines.append("[network]")
    if "name" in network:
        lines.append(f"name = {_json_scalar_to_token('network', 'name', network['name'])}")
    for key in network:
        if key not in ("name", "input_shape", "layers"):
            raise SpecSchemaError(f"network: unknown key {key!r}")

    lines.append("[input_shape]")
    for key, value in _require_obj(network.get("input_shape"), "network.input_shape").items():
        lines.append(f"{key} = {_json_scalar_to_token('input_shape', key, value)}")

    layers = network.get("layers")
    if not isinstance(layers, list):
        raise SpecSchemaError("network.layers must be a JSON array")
    for i, layer in enumerate(layers):
        layer = _require_obj(layer, f"network.layers[{i}]")
        kind = layer.get("kind")
        if not isinstance(kind, str):
            raise SpecSchemaError(f"network.layers[{i}]: missing string key 'kind'")
        lines.append(f"[layer {kind}]")
        for key, value in layer.items():
            if key == "kind":
                continue
            lines.append(f"{key} = {_json_scalar_to_token(f'layer {i}', key, value)}")
    return "\n".join(lines) + "\n"


def profile_to_json_obj(profile: HardwareProfile) -> dict:
    obj: dict = {
        "id": profile.id,
        "architecture": profile.architecture,
        "flops_per_cycle": {
            dtype.value: value for dtype, value in sorted(
                profile.flops_per_cycle.items(), key=lambda kv: kv[0].value
            )
        },
        "clock_hz": profile.clock_hz,
        "cores": profile.cores,
        "efficiency_flops_per_watt": profile.efficiency_flops_per_watt,
        "tdp_watts": profile.tdp_watts,
        "notes": profile.notes,
    }
    return obj


def profile_from_json_obj(obj: object) -> HardwareProfile:
    data = _require_obj(obj, "profile")
    allowed = {
        "id", "architecture", "flops_per_cycle", "clock_hz", "cores",
        "efficiency_flops_per_watt", "tdp_watts", "notes",
    }
    for key in data:
        if key not in allowed:
            raise SpecSchemaError(f"profile: unknown key {key!r}")
    for key in ("id", "architecture"):
        if not isinstance(data.get(key), str) or not data[key]:
            raise SpecSchemaError(f"profile: missing string key {key!r}")
    flops_per_cycle: dict[DataType, float] = {}
    for name, value in _require_obj(data.get("flops_per_cycle", {}), "profile.flops_per_cycle").items():
        try:
            dtype = DataType(name)
        except ValueError:
            choices = ", ".join(d.value for d in DataType)
            raise SpecSchemaError(
                f"profile.flops_per_cycle: unknown data type {name!r} (one of: {choices})"
            ) from None
        if not isinstance(value, (int, float)) or isinstance(value, bool) or value < 0:
            raise SpecValidationError(f"profile.flops_per_cycle.{name} must be a number >= 0")
        flops_per_cycle[dtype] = float(value)
    numeric: dict[str, float | int | None] = {}
    for key in ("clock_hz", "efficiency_flops_per_watt", "tdp_watts"):
        value = data.get(key)
        if value is not None and (not isinstance(value, (int, float)) or isinstance(value, bool) or not value > 0):
            raise SpecValidationError(f"profile.{key} must be a number > 0")
        numeric[key] = None if value is None else float(value)
    cores = data.get("cores")
    if cores is not None and (not isinstance(cores, int) or isinstance(cores, bool) or cores < 1):
        raise SpecValidationError("profile.cores must be an integer >= 1")
    notes = data.get("notes", "")
    if not isinstance(notes, str):
        raise SpecSchemaError("profile.notes must be a string")
    try:
        return HardwareProfile(
            id=data["id"],
            architecture=data["architecture"],
            flops_per_cycle=flops_per_cycle,
            clock_hz=numeric["clock_hz"],
            cores=cores,
            efficiency_flops_per_watt=numeric["efficiency_flops_per_watt"],
            tdp_watts=numeric["tdp_watts"],
            notes=notes,
        )
    except ValueError as err:
        raise SpecValidationError(str(err)) from err


# ---------------------------------------------------------------------------
# bundled model zoo

_ZOO_PROVENANCE = {
    "worked-example-3layer": (
        "Three-layer methodology example: a 100x100x3 input through one 3x3 "
        "convolution (stride 1, padding 1, one filter, relu), one 2x2 pooling "
        "with stride 2, and a dense layer with 4 outputs. Exact encoding; its "
        "totals are 312532 FLOPs and 10032 weights."
    ),
    "pirnateco-stem-besteffort": (
        "Best-effort encoding of the published PirnatEco localization network "
        "(a ResNet18 adaptation) from its textual description only: stem conv "
        "1x7 with stride 1x3, pool 1x4, sixteen 3x3 convolutions whose filter "
        "counts double every four layers from 32 to 256, and a final dense "
        "layer of 1000 with leaky_relu (alpha 1e-3, recorded in metadata; "
        "alpha does not enter the cost math). Batch normalization, residual "
        "additions, downsampling strides, and the exact block layout of the "
        "published figure are not representable in this layer chain and are "
        "omitted from the cost, so its totals are NOT comparable to the "
        "published weight or FLOP counts."
    ),
}

_ZOO: dict[str, ModelZooEntry] | None = None


def model_zoo() -> list[ModelZooEntry]:
    """Bundled, validated example networks."""
    global _ZOO
    if _ZOO is None:
        entries = {}
        zoo_dir = resources.files("nncost.data").joinpath("zoo")
        for entry_id, provenance in _ZOO_PROVENANCE.items():
            filename = f"{entry_id}.nnspec"
            text = zoo_dir.joinpath(filename).read_text("utf-8")
            doc = parse_spec(text, filename=filename)
            infer_shapes(doc.network)  # a broken bundled spec must fail loudly
            entries[entry_id] = ModelZooEntry(id=entry_id, spec=doc, provenance=provenance)
        _ZOO = entries
    return list(_ZOO.values())


def zoo_entry(entry_id: str) -> ModelZooEntry:
    for entry in model_zoo():
        if entry.id == entry_id:
            return entry
    known = ", ".join(e.id for e in model_zoo())
    raise NotFound(f"unknown model zoo entry {entry_id!r} (known: {known})")
