from __future__ import annotations

import random

import pytest

from nncost import (
    ActivationKind,
    Conv2D,
    Dense,
    NotFound,
    Pool2D,
    SpecSchemaError,
    SpecSyntaxError,
    SpecValidationError,
    TensorShape,
    infer_shapes,
    model_zoo,
    network_cost,
    parse_hardware,
    parse_spec,
    serialize_spec,
    zoo_entry,
)
from nncost.specfile import (
    document_from_json_obj,
    document_to_json_obj,
    profile_from_json_obj,
    profile_to_json_obj,
)
from nncost.hardware import builtin_profiles

import genspecs

MINIMAL = """\
format_version = 1
kind = network

[network]
name = tiny

[input_shape]
rows = 4
cols = 4
channels = 1

[layer dense]
output_size = 2
"""


class TestParseBasics:
    def test_minimal_document(self):
        doc = parse_spec(MINIMAL)
        assert doc.network.name == "tiny"
        assert doc.network.input_shape == TensorShape(4, 4, 1)
        assert doc.network.layers == (Dense(output_size=2),)
        assert doc.warnings == ()

    def test_defaults_applied(self):
        text = MINIMAL.replace(
            "[layer dense]\noutput_size = 2",
            "[layer conv2d]\nkernel_rows = 3\nkernel_cols = 3",
        )
        (conv,) = parse_spec(text).network.layers
        assert conv == Conv2D(3, 3, 1, 1, 0, 0, 1, True, ActivationKind.NONE)

    def test_pool_stride_defaults_to_kernel(self):
        text = MINIMAL.replace(
            "[layer dense]\noutput_size = 2",
            "[layer pool2d]\nkernel_rows = 2\nkernel_cols = 2",
        )
        (pool,) = parse_spec(text).network.layers
        assert (pool.stride_rows, pool.stride_cols) == (2, 2)

    def test_accepts_crlf_and_bytes(self):
        doc = parse_spec(MINIMAL.replace("\n", "\r\n").encode("utf-8"))
        assert doc.network.name == "tiny"

    def test_comments_and_blank_lines_ignored(self):
        doc = parse_spec("# leading comment\n\n" + MINIMAL + "\n# trailing\n")
        assert doc.network.name == "tiny"


class TestZoo:
    def test_worked_example_layers(self):
        doc = zoo_entry("worked-example-3layer").spec
        assert doc.network.input_shape == TensorShape(100, 100, 3)
        conv, pool, dense = doc.network.layers
        assert conv == Conv2D(3, 3, 1, 1, 1, 1, 1, True, ActivationKind.RELU)
        assert pool == Pool2D(2, 2, 2, 2)
        assert dense == Dense(4, True, ActivationKind.NONE)

    def test_worked_example_cost(self):
        doc = zoo_entry("worked-example-3layer").spec
        assert network_cost(doc.network).total_flops == 312_532

    def test_stem_entry_validates_and_infers(self):
        entry = zoo_entry("pirnateco-stem-besteffort")
        shapes = infer_shapes(entry.spec.network)
        assert shapes[-1] == TensorShape(1, 1, 1000)
        assert entry.spec.network.layers[-1].activation == ActivationKind.LEAKY_RELU
        assert "1e-3" in entry.spec.metadata.notes
        assert "NOT comparable" in entry.provenance

    def test_all_entries_round_trip(self):
        for entry in model_zoo():
            assert parse_spec(serialize_spec(entry.spec)) == entry.spec

    def test_unknown_entry(self):
        with pytest.raises(NotFound, match="does-not-exist"):
            zoo_entry("does-not-exist")


class TestRoundTrip:
    def test_randomized_documents(self):
        rng = random.Random(31_337)
        for _ in range(100):
            doc = genspecs.random_document(rng)
            assert parse_spec(serialize_spec(doc)) == doc

    def test_serialize_is_deterministic(self):
        rng = random.Random(5)
        doc = genspecs.random_document(rng)
        text = serialize_spec(doc)
        assert serialize_spec(parse_spec(text)) == text

    def test_json_mirror_round_trips(self):
        rng = random.Random(6)
        for _ in range(25):
            doc = genspecs.random_document(rng)
            assert document_from_json_obj(document_to_json_obj(doc)) == doc


class TestDiagnostics:
    def test_stride_zero_names_layer_and_field(self):
        text = MINIMAL.replace(
            "[layer dense]\noutput_size = 2",
            "[layer pool2d]\nkernel_rows = 2\nkernel_cols = 2\nstride_rows = 0",
        )
        with pytest.raises(SpecValidationError) as excinfo:
            parse_spec(text)
        message = str(excinfo.value)
        assert "layer 0 (pool2d)" in message
        assert "stride_rows" in message
        assert excinfo.value.location is not None

    def test_unknown_layer_kind(self):
        text = MINIMAL.replace("[layer dense]", "[layer blorp]")
        with pytest.raises(SpecSchemaError, match="unknown layer kind"):
            parse_spec(text)

    def test_missing_required_field(self):
        text = MINIMAL.replace(
            "[layer dense]\noutput_size = 2", "[layer conv2d]\nkernel_rows = 3"
        )
        with pytest.raises(SpecSchemaError, match="kernel_cols"):
            parse_spec(text)

    def test_unknown_key_strict_vs_lenient(self):
        text = MINIMAL + "wobble = 3\n"
        with pytest.raises(SpecSchemaError, match="wobble"):
            parse_spec(text)
        doc = parse_spec(text, strict=False)
        assert any("wobble" in w for w in doc.warnings)
        assert doc.network.layers == (Dense(output_size=2),)

    def test_unparseable_line_reports_location(self):
        text = MINIMAL.replace("rows = 4", "rows 4")
        with pytest.raises(SpecSyntaxError) as excinfo:
            parse_spec(text)
        assert excinfo.value.location.line == 8

    def test_empty_value(self):
        with pytest.raises(SpecSyntaxError, match="empty value"):
            parse_spec(MINIMAL.replace("name = tiny", "name ="))

    def test_duplicate_key(self):
        with pytest.raises(SpecSchemaError, match="duplicate key"):
            parse_spec(MINIMAL.replace("rows = 4", "rows = 4\nrows = 5"))

    def test_duplicate_section(self):
        with pytest.raises(SpecSchemaError, match="duplicate"):
            parse_spec(MINIMAL + "\n[network]\nname = again\n")

    def test_missing_sections(self):
        with pytest.raises(SpecSchemaError, match="network"):
            parse_spec("format_version = 1\nkind = network\n")

    def test_no_layers(self):
        text = MINIMAL.replace("[layer dense]\noutput_size = 2\n", "")
        with pytest.raises(SpecValidationError, match="at least one"):
            parse_spec(text)

    def test_bad_utf8(self):
        with pytest.raises(SpecSyntaxError, match="UTF-8"):
            parse_spec(MINIMAL.encode("utf-8") + b"\xff\xfe")

    def test_wrong_format_version(self):
        with pytest.raises(SpecSchemaError, match="format_version"):
            parse_spec(MINIMAL.replace("format_version = 1", "format_version = 99"))

    def test_wrong_kind(self):
        with pytest.raises(SpecSchemaError, match="kind"):
            parse_spec(MINIMAL.replace("kind = network", "kind = hardware"))

    def test_non_integer_dimension(self):
        with pytest.raises(SpecSyntaxError, match="unsigned integer"):
            parse_spec(MINIMAL.replace("rows = 4", "rows = four"))

    def test_unknown_activation(self):
        text = MINIMAL.replace("output_size = 2", "output_size = 2\nactivation = swish")
        with pytest.raises(SpecSchemaError, match="swish"):
            parse_spec(text)


HWSPEC = """\
format_version = 1
kind = hardware

[profile]
id = test-chip
architecture = Test Chip
clock_hz = 2e9
cores = 4
notes = fixture

[flops_per_cycle]
fp32 = 16
fp16 = 32
"""


class TestHardwareParsing:
    def test_parse_single_profile(self):
        (profile,) = parse_hardware(HWSPEC)
        assert profile.id == "test-chip"
        assert profile.flops_per_cycle == {
            __import__("nncost").DataType.FP32: 16,
            __import__("nncost").DataType.FP16: 32,
        }

    def test_unknown_dtype_rejected_even_lenient(self):
        text = HWSPEC.replace("fp32 = 16", "fp48 = 16")
        with pytest.raises(SpecSchemaError, match="fp48"):
            parse_hardware(text, strict=False)

    def test_flops_per_cycle_requires_profile(self):
        text = "format_version = 1\nkind = hardware\n\n[flops_per_cycle]\nfp32 = 4\n"
        with pytest.raises(SpecSchemaError, match="must follow"):
            parse_hardware(text)

    def test_incomplete_profile_rejected(self):
        text = HWSPEC.replace("clock_hz = 2e9\ncores = 4\n", "")
        with pytest.raises(SpecValidationError):
            parse_hardware(text)

    def test_nonpositive_clock_rejected(self):
        with pytest.raises(SpecValidationError, match="clock_hz"):
            parse_hardware(HWSPEC.replace("clock_hz = 2e9", "clock_hz = 0"))

    def test_profile_json_mirror_round_trips(self):
        for profile in builtin_profiles():
            assert profile_from_json_obj(profile_to_json_obj(profile)) == profile


class TestJsonDocumentValidation:
    def test_unknown_key_rejected(self):
        obj = document_to_json_obj(zoo_entry("worked-example-3layer").spec)
        obj["network"]["layers"][0]["wheels"] = 4
        with pytest.raises(SpecSchemaError, match="wheels"):
            document_from_json_obj(obj)

    def test_missing_network(self):
        with pytest.raises(SpecSchemaError):
            document_from_json_obj({"format_version": "1"})

    def test_validation_still_applies(self):
        obj = document_to_json_obj(zoo_entry("worked-example-3layer").spec)
        obj["network"]["layers"][1]["stride_rows"] = 0
        with pytest.raises(SpecValidationError, match="stride_rows"):
            document_from_json_obj(obj)
