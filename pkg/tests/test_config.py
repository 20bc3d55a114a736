import json

import pytest

from subthzsim.config import ConfigError, ScenarioConfig, config_from_dict, preset
from subthzsim.io import load_config


class TestPresets:
    def test_single_preset_system_table(self):
        cfg = preset("table1-single")
        assert cfg.layout == "single"
        assert cfg.ue_count == 250
        assert cfg.coverage_radius_m == 200.0
        assert cfg.dl_carrier_ghz == 142.0
        assert cfg.ul_carrier_ghz == 140.0
        assert cfg.dl_bandwidth_hz == 1e9
        assert cfg.ul_bandwidth_hz == 1e8
        assert (cfg.bs.tx_power_dbm, cfg.bs.antenna_gain_dbi, cfg.bs.noise_figure_db) == (15.0, 40.0, 5.0)
        assert (cfg.ue.tx_power_dbm, cfg.ue.antenna_gain_dbi, cfg.ue.noise_figure_db) == (0.0, 15.0, 7.0)
        assert (cfg.los_path_loss.ple, cfg.los_path_loss.shadow_sigma_db) == (2.1, 2.8)
        assert (cfg.nlos_path_loss.ple, cfg.nlos_path_loss.shadow_sigma_db) == (3.1, 8.3)
        assert cfg.bs_height_m == 4.0
        assert cfg.ue_height_m == 1.5
        assert cfg.bs.eirp_dbm == 55.0

    def test_seven_preset_geometry(self):
        cfg = preset("table1-seven")
        assert cfg.layout == "seven"
        assert cfg.ue_count == 1000
        assert cfg.ring_radius_m == 200.0
        assert cfg.coverage_radius_m == 400.0

    def test_unknown_preset(self):
        with pytest.raises(ConfigError, match="preset"):
            preset("table1-nineteen")


class TestFromDict:
    def test_preset_key(self):
        cfg = config_from_dict({"preset": "table1-seven"})
        assert cfg == preset("table1-seven")

    def test_redundant_override_is_identity(self):
        cfg = config_from_dict({"preset": "table1-single", "ue_count": 250})
        assert cfg == preset("table1-single")

    def test_override_applies(self):
        cfg = config_from_dict({"preset": "table1-single", "ue_count": 12345, "seed": 9})
        assert cfg.ue_count == 12345
        assert cfg.seed == 9

    def test_nested_override(self):
        cfg = config_from_dict({
            "preset": "table1-single",
            "bs": {"tx_power_dbm": 20.0, "antenna_gain_dbi": 40.0, "noise_figure_db": 5.0},
        })
        assert cfg.bs.tx_power_dbm == 20.0

    def test_negative_bandwidth_names_field(self):
        with pytest.raises(ConfigError, match="dl_bandwidth_hz"):
            config_from_dict({"preset": "table1-single", "dl_bandwidth_hz": -1})

    def test_unknown_key_rejected(self):
        with pytest.raises(ConfigError, match="carrier_thz"):
            config_from_dict({"preset": "table1-single", "carrier_thz": 0.142})

    def test_bad_layout_named(self):
        with pytest.raises(ConfigError, match="layout"):
            config_from_dict({"layout": "three"})

    def test_bad_association_named(self):
        with pytest.raises(ConfigError, match="association"):
            config_from_dict({"association": "strongest"})

    def test_bad_nested_field_named(self):
        with pytest.raises(ConfigError, match="los_path_loss"):
            config_from_dict({"los_path_loss": {"ple": -1.0, "shadow_sigma_db": 2.8}})

    def test_non_integer_count_rejected(self):
        with pytest.raises(ConfigError, match="ue_count"):
            config_from_dict({"ue_count": 10.5})

    def test_negative_seed_rejected(self):
        with pytest.raises(ConfigError, match="seed"):
            config_from_dict({"seed": -1})


class TestLoadConfig:
    def test_load_and_roundtrip(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps({"preset": "table1-seven", "seed": 3}))
        cfg = load_config(path)
        assert cfg.layout == "seven"
        assert cfg.seed == 3
        again = config_from_dict(json.loads(json.dumps(cfg.to_dict())))
        # to_dict -> from_dict is lossless (preset already resolved)
        assert again == cfg

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="not found"):
            load_config(tmp_path / "nope.json")

    def test_unparseable_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ConfigError, match="JSON"):
            load_config(path)


class TestValidate:
    def test_default_config_is_valid(self):
        assert ScenarioConfig().validate() is not None

    def test_se_cap_must_be_positive_or_none(self):
        cfg = ScenarioConfig(se_cap_bps_hz=0.0)
        with pytest.raises(ConfigError, match="se_cap_bps_hz"):
            cfg.validate()
        assert ScenarioConfig(se_cap_bps_hz=None).validate()
