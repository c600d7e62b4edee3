"""
Contract tests for the TWF1 binary field container.

Other tools read these files directly, so the header keys, the magic and
the payload layout are pinned here.
"""

import json

import numpy as np
import pytest

from twistlab.errors import FieldFormatError
from twistlab.lattice import Field, load_field, save_field
from twistlab.lattice.io import MAGIC, SAMPLE_DTYPE, write_container, write_sidecar
from twistlab.schemas import GridSpec


@pytest.fixture
def grid():
    return GridSpec.self_dual(1, 16)


@pytest.fixture
def saved(tmp_path, grid):
    values = np.arange(grid.size) + 1j * np.arange(grid.size)[::-1]
    path = tmp_path / "ramp.twf"
    save_field(Field(grid, values, "ramp"), path)
    return path


class TestHeader:
    def test_first_line_is_json(self, saved, grid):
        header = json.loads(saved.read_bytes().split(b"\n", 1)[0])
        assert header["magic"] == MAGIC == "TWF1"
        assert header["dim"] == 1
        assert header["points"] == 16
        assert header["half_width"] == grid.half_width
        assert header["label"] == "ramp"

    def test_payload_is_little_endian_complex(self, saved, grid):
        body = saved.read_bytes().split(b"\n", 1)[1]
        assert SAMPLE_DTYPE.str == "<c16"
        assert len(body) == 16 * grid.size
        samples = np.frombuffer(body, dtype="<c16")
        assert samples[1] == pytest.approx(1 + 14j)

    def test_bit_exact_reload(self, saved):
        field = load_field(saved)
        assert field.label == "ramp"
        assert field.values[3] == 3 + 12j


class TestRejectedContainers:
    def test_bad_magic(self, tmp_path):
        path = tmp_path / "bad.twf"
        path.write_bytes(b'{"magic": "TWF0", "dim": 1}\n')
        with pytest.raises(FieldFormatError, match="bad magic"):
            load_field(path)

    def test_missing_header_line(self, tmp_path):
        path = tmp_path / "flat.twf"
        path.write_bytes(b"no newline here")
        with pytest.raises(FieldFormatError, match="missing header"):
            load_field(path)

    def test_malformed_header(self, tmp_path):
        path = tmp_path / "garbled.twf"
        path.write_bytes(b"{not json\n")
        with pytest.raises(FieldFormatError, match="malformed"):
            load_field(path)

    def test_truncated_payload(self, saved):
        raw = saved.read_bytes()
        saved.write_bytes(raw[:-3])
        with pytest.raises(FieldFormatError, match="truncated"):
            load_field(saved)

    def test_short_sample_count(self, saved):
        raw = saved.read_bytes()
        saved.write_bytes(raw[:-16])
        with pytest.raises(FieldFormatError, match="samples for a grid"):
            load_field(saved)

    def test_missing_grid_key(self, tmp_path):
        path = tmp_path / "partial.twf"
        write_container(path, {"dim": 1, "points": 16}, np.zeros(16))
        with pytest.raises(FieldFormatError, match="lacks"):
            load_field(path)

    def test_invalid_grid_in_header(self, tmp_path):
        path = tmp_path / "flat.twf"
        write_container(path, {"dim": 0, "points": 16, "half_width": 4.0}, np.zeros(16))
        with pytest.raises(FieldFormatError, match="invalid grid"):
            load_field(path)

    def test_phase_space_kind_is_not_a_field(self, tmp_path, grid):
        path = tmp_path / "F.twf"
        header = {"kind": "phase-space", "dim": 2, "points": 16, "half_width": grid.half_width}
        write_container(path, header, np.zeros(grid.size**2))
        with pytest.raises(FieldFormatError, match="phase-space"):
            load_field(path)

    def test_unreadable_path(self, tmp_path):
        with pytest.raises(FieldFormatError, match="cannot read"):
            load_field(tmp_path / "absent.twf")


class TestSidecar:
    def test_name_appends_json(self, tmp_path):
        sidecar = write_sidecar(tmp_path / "phi_heat.twf", {"t": 0.5, "routes": ["spectral"]})
        assert sidecar.name == "phi_heat.twf.json"
        assert json.loads(sidecar.read_text()) == {"routes": ["spectral"], "t": 0.5}
