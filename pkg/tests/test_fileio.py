import json

import numpy as np
import pytest

import harmosc as H
from harmosc import fileio
from harmosc.errors import ValidationError


class TestSpecParsing:
    def test_design_spec_round_trip(self):
        d = {"order": 4, "omega_k": 1.0, "decays": [5, 9.8], "pinned": {"0": 1}}
        spec = fileio.design_spec_from_dict(d)
        assert spec == H.DesignSpec(4, 1.0, (5.0, 9.8), {0: 1.0})

    def test_design_spec_missing_key(self):
        with pytest.raises(ValidationError):
            fileio.design_spec_from_dict({"order": 4})

    def test_input_spec_kinds(self):
        assert isinstance(fileio.input_spec_from_dict({"type": "zero"}), H.ZeroInput)
        imp = fileio.input_spec_from_dict({"type": "impulses", "events": [[0, 1]]})
        assert imp == H.ImpulseTrain(((0.0, 1.0),))
        stp = fileio.input_spec_from_dict({"type": "steps", "levels": [[0, 0.5]]})
        assert stp == H.StepProfile(((0.0, 0.5),))

    def test_unknown_input_type(self):
        with pytest.raises(ValidationError):
            fileio.input_spec_from_dict({"type": "ramp"})

    def test_coefficients_accepts_list_or_mapping(self):
        assert fileio.coefficients_from_json("[1, 2]") == [1.0, 2.0]
        assert fileio.coefficients_from_json('{"coefficients": [1, 2]}') == [1.0, 2.0]
        with pytest.raises(ValidationError):
            fileio.coefficients_from_json('{"foo": 3}')


class TestSignalCsv:
    def test_round_trip_is_lossless(self, pinned_quartic_impulse):
        text = fileio.signal_to_csv(pinned_quartic_impulse)
        back = fileio.signal_from_csv(text)
        assert back.dt == pinned_quartic_impulse.dt
        assert np.array_equal(back.samples, pinned_quartic_impulse.samples)

    def test_serialization_is_deterministic(self, pinned_quartic_impulse):
        assert fileio.signal_to_csv(pinned_quartic_impulse) == fileio.signal_to_csv(
            pinned_quartic_impulse
        )

    def test_header_required(self):
        with pytest.raises(ValidationError):
            fileio.signal_from_csv("0,1\n1,2\n")

    def test_nonuniform_rejected(self):
        with pytest.raises(ValidationError):
            fileio.signal_from_csv("t,y\n0,0\n1,0\n3,0\n")


class TestReports:
    def test_design_report_payload(self, pinned_quartic, pinned_quartic_spec):
        report = H.verify_design(pinned_quartic, pinned_quartic_spec)
        payload = fileio.design_report_to_dict(report)
        assert payload["verdict"] is True
        assert payload["coefficients"] == [1.0, 0.5, 4.25, 0.125, 1.0]
        classes = sorted(r["class"] for r in payload["roots"])
        assert classes.count("harmonic_boundary") == 2
        json.dumps(payload)  # must be JSON-serializable

    def test_spectrogram_csv_shape(self, pinned_quartic_impulse):
        sp = H.spectrogram(pinned_quartic_impulse, 1024, 512)
        lines = fileio.spectrogram_to_csv(sp).strip().splitlines()
        assert len(lines) == sp.times.size + 1
        assert lines[0].startswith(",")
        assert len(lines[1].split(",")) == sp.freqs.size + 1

    def test_orbit_csv(self, pinned_quartic_impulse):
        orbit = H.analytic(pinned_quartic_impulse)
        lines = fileio.orbit_to_csv(orbit).strip().splitlines()
        assert lines[0] == "re,im"
        re0, im0 = (float(v) for v in lines[1].split(","))
        assert re0 == orbit.values[0].real
        assert im0 == orbit.values[0].imag

    def test_fmt_preserves_doubles(self):
        for v in (1 / 3, 0.1, 2.0 / np.sqrt(226.0)):
            assert float(fileio.fmt(v)) == v
