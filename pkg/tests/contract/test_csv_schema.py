"""
Contract tests for the text outputs: norm CSV rows, generic CLI tables,
phase-space containers and TWM1 multiplier files.
"""

import csv
import json

import numpy as np
import pytest

from twistlab.cli.output import format_cell, write_rows
from twistlab.errors import FieldFormatError
from twistlab.lattice import Field, save_field
from twistlab.phasespace import PhaseSpaceField
from twistlab.phasespace.export import (
    NORM_COLUMNS,
    format_number,
    load_phase_space,
    norm_row,
    save_phase_space,
    write_norm_rows,
)
from twistlab.schemas import GridSpec, MixedNormSpec
from twistlab.spectral_ops import MultiplierSpec


class TestNormRows:
    def test_columns(self):
        assert NORM_COLUMNS == ["p", "q", "s", "flavor", "symplectic", "value"]

    def test_number_format(self):
        assert format_number(0.1) == "0.10000000000000001"
        assert format_number(2.0) == "2"
        assert format_number(float("inf")) == "inf"

    def test_row(self):
        row = norm_row(MixedNormSpec(p=2.0, q=float("inf"), symplectic=True), 0.5)
        assert row == {
            "p": "2",
            "q": "inf",
            "s": "0",
            "flavor": "modulation",
            "symplectic": "1",
            "value": "0.5",
        }

    def test_write(self, tmp_path):
        rows = [
            norm_row(MixedNormSpec(), 1.25),
            norm_row(MixedNormSpec(flavor="amalgam", s=1.0), 3.0),
        ]
        path = write_norm_rows(rows, tmp_path / "norms.csv")
        lines = path.read_text().splitlines()
        assert lines[0] == "p,q,s,flavor,symplectic,value"
        assert lines[1] == "1,1,0,modulation,0,1.25"
        assert lines[2] == "1,1,1,amalgam,0,3"


class TestCliTables:
    def test_format_cell(self):
        assert format_cell(True) == "1"
        assert format_cell(False) == "0"
        assert format_cell(1.0 / 3.0) == "0.33333333333333331"
        assert format_cell(7) == "7"
        assert format_cell("heat") == "heat"

    def test_write_rows_to_file(self, tmp_path):
        path = tmp_path / "nested" / "decay.csv"
        rows = [{"t": 0.5, "value": 0.25, "extra": "ignored"}, {"t": 1.0, "value": 0.125}]
        assert write_rows(rows, ["t", "value"], path) == path
        assert path.read_text().splitlines() == ["t,value", "0.5,0.25", "1,0.125"]

    def test_write_rows_to_stdout(self, capsys):
        assert write_rows([{"route": "kernel", "ok": True}], ["route", "ok"]) is None
        parsed = list(csv.reader(capsys.readouterr().out.splitlines()))
        assert parsed == [["route", "ok"], ["kernel", "1"]]


class TestPhaseSpaceContainer:
    @pytest.fixture
    def grids(self):
        return GridSpec.self_dual(1, 8), GridSpec.self_dual(1, 12)

    def test_two_block_header(self, tmp_path, grids):
        position, frequency = grids
        values = np.arange(position.size * frequency.size, dtype=np.complex128)
        path = save_phase_space(
            PhaseSpaceField.from_array(position, frequency, values, "F"), tmp_path / "F.twf"
        )
        header = json.loads(path.read_bytes().split(b"\n", 1)[0])
        assert header["kind"] == "phase-space"
        assert header["dim"] == 2
        assert header["position"]["points"] == 8
        assert header["frequency"]["points"] == 12

        loaded = load_phase_space(path)
        assert loaded.label == "F"
        assert loaded.shape == (8, 12)
        assert np.array_equal(loaded.materialize(), values.reshape(8, 12))

    def test_field_container_rejected(self, tmp_path, grids):
        path = save_field(Field(grids[0], np.ones(8)), tmp_path / "f.twf")
        with pytest.raises(FieldFormatError, match="not a phase-space"):
            load_phase_space(path)


class TestMultiplierFile:
    def test_layout(self, tmp_path):
        spec = MultiplierSpec((1.0, 0.5 - 0.25j), dim=1, description="decay")
        path = spec.save(tmp_path / "m.twm")
        lines = path.read_text().splitlines()
        assert lines[0].startswith("# ")
        assert json.loads(lines[0][2:]) == {"format": "TWM1", "dim": 1, "description": "decay"}
        assert lines[1:] == ["0 1 0", "1 0.5 -0.25"]

    def test_comments_and_blank_lines_skipped(self, tmp_path):
        path = tmp_path / "m.twm"
        path.write_text('# {"format": "TWM1", "dim": 2}\n\n0 1 0\n# note\n1 2 0.5\n')
        spec = MultiplierSpec.load(path)
        assert spec.dim == 2
        assert spec.values == (1 + 0j, 2 + 0.5j)

    def test_malformed_line(self, tmp_path):
        path = tmp_path / "m.twm"
        path.write_text('# {"format": "TWM1"}\n0 1\n')
        with pytest.raises(FieldFormatError, match="expected 'k re im'"):
            MultiplierSpec.load(path)
