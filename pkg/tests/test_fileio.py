import json
import os

import pytest

from rupower import (
    AdaptationMode,
    ParseError,
    ValidationError,
    builtin_config,
    builtin_configs,
    emit_config,
    emit_profile,
    parse_config,
    parse_profile,
    typical_daily_profile,
    write_presets,
)

MINIMAL_DOC = {
    "name": "minimal",
    "num_trx_chains": 64,
    "num_layers": 16,
    "trp_watts": 200.0,
    "bandwidth_mhz": 100.0,
    "insertion_loss_db": 1.1,
    "layer_sinr_db": 25.0,
    "dl_ratio": 0.75,
    "pa_lineup_efficiency": 0.45,
    "dsp_efficiency_factor": 1.0,
    "adaptation": "mu_dtx",
}


def doc(**overrides):
    merged = dict(MINIMAL_DOC)
    merged.update(overrides)
    return json.dumps(merged)


class TestParseConfig:
    def test_round_trips_every_preset(self):
        for cfg in builtin_configs():
            assert parse_config(emit_config(cfg)) == cfg

    def test_table_fields_reproduce_the_builtin(self):
        text = doc(name="mMIMO-today", carrier_frequency_ghz=3.5,
                   num_antenna_elements=192)
        assert parse_config(text) == builtin_config("mmimo-today")

    def test_defaults_applied(self):
        cfg = parse_config(doc())
        assert cfg.reference_bandwidth_mhz == 100.0
        assert cfg.pa_psu_efficiency == 0.94
        assert cfg.num_chips == 4
        assert cfg.chip_deactivation is False
        assert cfg.p_rfic_driver == 0.5
        assert cfg.p_rfic_lna == 0.3
        assert cfg.p_dfe_bb_tx == 1.75
        assert cfg.p_dfe_bb_rx == 1.5
        assert cfg.p_dfe_bb_static == 2.0
        assert cfg.carrier_frequency_ghz is None
        assert cfg.num_antenna_elements is None

    def test_missing_required_field_is_named(self):
        partial = dict(MINIMAL_DOC)
        del partial["num_trx_chains"]
        with pytest.raises(ParseError) as exc:
            parse_config(json.dumps(partial))
        assert exc.value.field == "num_trx_chains"

    def test_unknown_field_rejected(self):
        with pytest.raises(ParseError) as exc:
            parse_config(doc(mystery_knob=1))
        assert exc.value.field == "mystery_knob"

    @pytest.mark.parametrize("key,value", [
        ("num_trx_chains", "64"),
        ("num_trx_chains", 64.5),
        ("num_chips", True),
        ("trp_watts", "lots"),
        ("chip_deactivation", "yes"),
        ("adaptation", 3),
    ])
    def test_wrong_types_rejected(self, key, value):
        with pytest.raises(ParseError) as exc:
            parse_config(doc(**{key: value}))
        assert exc.value.field == key

    def test_unknown_adaptation_mode(self):
        with pytest.raises(ParseError) as exc:
            parse_config(doc(adaptation="dtx"))
        assert "mu_dtx" in str(exc.value)

    def test_range_violations_surface_as_validation(self):
        with pytest.raises(ValidationError):
            parse_config(doc(pa_lineup_efficiency=0.0))

    def test_per_chain_override(self):
        cfg = parse_config(doc(per_chain_power_watts={"rfic_driver": 0.7}))
        assert cfg.p_rfic_driver == 0.7
        assert cfg.p_rfic_lna == 0.3

    def test_unknown_per_chain_key(self):
        with pytest.raises(ParseError) as exc:
            parse_config(doc(per_chain_power_watts={"psu": 1.0}))
        assert exc.value.field == "per_chain_power_watts.psu"

    def test_malformed_json_reports_line(self):
        with pytest.raises(ParseError) as exc:
            parse_config('{\n  "name": "x",\n  broken\n}')
        assert exc.value.line == 3

    def test_non_object_document(self):
        with pytest.raises(ParseError):
            parse_config("[1, 2, 3]")

    def test_adaptation_enum_parsed(self):
        assert parse_config(doc()).adaptation_mode is AdaptationMode.MU_DTX
        muting = doc(adaptation="antenna_muting")
        assert parse_config(muting).adaptation_mode is AdaptationMode.ANTENNA_MUTING


class TestProfileIo:
    def test_round_trip(self, daily_profile):
        assert parse_profile(emit_profile(daily_profile)) == daily_profile

    def test_matches_builtin_profile(self):
        text = json.dumps([
            {"hours": 8, "load_fraction": 0.5},
            {"hours": 10, "load_fraction": 0.3},
            {"hours": 6, "load_fraction": 0.05},
        ])
        assert parse_profile(text) == typical_daily_profile()

    def test_empty_list_rejected(self):
        with pytest.raises(ValidationError):
            parse_profile("[]")

    def test_negative_duration_rejected(self):
        with pytest.raises(ValidationError):
            parse_profile(json.dumps([{"hours": -1, "load_fraction": 0.5}]))

    def test_missing_key_located(self):
        with pytest.raises(ParseError) as exc:
            parse_profile(json.dumps([{"hours": 8}]))
        assert exc.value.field == "[0].load_fraction"

    def test_unknown_key_located(self):
        with pytest.raises(ParseError) as exc:
            parse_profile(json.dumps([{"hours": 8, "load_fraction": 0.5,
                                       "label": "busy"}]))
        assert exc.value.field == "[0].label"

    def test_non_array_document(self):
        with pytest.raises(ParseError):
            parse_profile('{"hours": 8}')


class TestWritePresets:
    def test_writes_five_documents(self, tmp_path):
        paths = write_presets(str(tmp_path))
        assert len(paths) == 5
        names = [os.path.basename(p) for p in paths]
        assert names == ["mmimo-today.json", "xmimo-future.json",
                         "mmimo-future.json", "xmimo-today-tech.json",
                         "daily-profile.json"]
        for path in paths:
            assert os.path.exists(path)

    def test_written_configs_parse_back_to_builtins(self, tmp_path):
        paths = write_presets(str(tmp_path))
        for path, cfg in zip(paths[:4], builtin_configs()):
            with open(path, encoding="utf-8") as fh:
                assert parse_config(fh.read()) == cfg

    def test_written_profile_parses_back(self, tmp_path):
        paths = write_presets(str(tmp_path))
        with open(paths[-1], encoding="utf-8") as fh:
            assert parse_profile(fh.read()) == typical_daily_profile()

    def test_creates_directory(self, tmp_path):
        target = tmp_path / "nested" / "dir"
        paths = write_presets(str(target))
        assert all(os.path.exists(p) for p in paths)
