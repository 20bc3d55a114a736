import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from subthzsim.simulation import UeOutcome
from subthzsim.stats import Cdf, build_cdf, spectral_efficiency, summarize


def outcome(se: float, sinr: float, direction: str = "DL") -> UeOutcome:
    return UeOutcome(
        scenario="unit", direction=direction, drop=0, ue_index=0, x_m=0.0, y_m=0.0,
        serving_bs=0, los=False, d2d_m=10.0, d3d_m=10.3, pl_db=100.0, rx_power_dbm=-70.0,
        interference_dbm=None, noise_dbm=-77.0, snr_db=sinr, sinr_db=sinr,
        se_bps_hz=se, covered=sinr >= 0, outage=sinr < -10,
    )


class TestSpectralEfficiency:
    def test_zero_db_is_one(self):
        assert spectral_efficiency(0.0) == pytest.approx(1.0, abs=1e-12)

    def test_minus_10_db(self):
        # log2(1.1)
        assert spectral_efficiency(-10.0) == pytest.approx(0.13750352374993502, abs=1e-12)

    def test_vanishes_at_deep_negative_sinr(self):
        assert spectral_efficiency(-300.0) == pytest.approx(0.0, abs=1e-12)
        assert spectral_efficiency(-300.0) >= 0.0

    def test_cap_applies(self):
        assert spectral_efficiency(40.0, cap_bps_hz=6.0) == 6.0
        assert spectral_efficiency(0.0, cap_bps_hz=6.0) == pytest.approx(1.0, abs=1e-12)

    @given(a=st.floats(min_value=-60, max_value=60), b=st.floats(min_value=-60, max_value=60))
    def test_strictly_increasing(self, a, b):
        lo, hi = sorted((a, b))
        if hi - lo > 1e-9:
            assert spectral_efficiency(lo) < spectral_efficiency(hi)

    def test_array_input(self):
        out = spectral_efficiency(np.array([0.0, -10.0]))
        assert out == pytest.approx([1.0, 0.13750352374993502])


class TestSummarize:
    def test_identical_values_collapse(self):
        outs = [outcome(2.5, 5.0) for _ in range(40)]
        s = summarize(outs, 1e9)
        assert s.mean_se_bps_hz == s.median_se_bps_hz == s.edge_se_bps_hz == 2.5
        assert s.outage_fraction == 0.0
        assert s.n_ue == 40

    def test_against_numpy_oracle(self):
        rng = np.random.default_rng(5)
        se = rng.uniform(0, 10, size=997)
        sinr = rng.uniform(-20, 30, size=997)
        outs = [outcome(float(a), float(b)) for a, b in zip(se, sinr)]
        s = summarize(outs, 2e8)
        assert s.mean_se_bps_hz == pytest.approx(np.mean(se), rel=1e-12)
        assert s.median_se_bps_hz == pytest.approx(np.median(se), rel=1e-12)
        assert s.edge_se_bps_hz == pytest.approx(np.percentile(se, 5), rel=1e-12)
        assert s.outage_fraction == pytest.approx(np.mean(sinr < 0), rel=1e-12)

    def test_rates_scale_with_bandwidth(self):
        outs = [outcome(float(x), 5.0) for x in np.linspace(0.5, 4.0, 21)]
        s1 = summarize(outs, 1e9)
        s2 = summarize(outs, 2e9)
        assert s2.mean_rate_bps == pytest.approx(2 * s1.mean_rate_bps, rel=1e-12)
        assert s2.edge_rate_bps == pytest.approx(2 * s1.edge_rate_bps, rel=1e-12)
        assert s2.mean_se_bps_hz == s1.mean_se_bps_hz

    def test_rate_consistency(self):
        outs = [outcome(float(x), 0.0) for x in (1.0, 2.0, 3.0)]
        s = summarize(outs, 1e9)
        assert s.mean_rate_bps == pytest.approx(s.mean_se_bps_hz * 1e9, rel=1e-12)
        assert s.edge_rate_bps == pytest.approx(s.edge_se_bps_hz * 1e9, rel=1e-12)

    @given(seed=st.integers(min_value=0, max_value=10_000))
    def test_permutation_invariant(self, seed):
        rng = np.random.default_rng(seed)
        se = rng.uniform(0, 8, size=50)
        outs = [outcome(float(x), 1.0) for x in se]
        shuffled = list(outs)
        rng.shuffle(shuffled)
        assert summarize(outs, 1e9) == summarize(shuffled, 1e9)

    def test_empty_input_raises(self):
        with pytest.raises(ValueError):
            summarize([], 1e9)


class TestBuildCdf:
    def test_empirical_definition(self):
        cdf = build_cdf([1.0, 2.0, 3.0])
        assert cdf.evaluate(2.0) == pytest.approx(2.0 / 3.0, abs=1e-12)
        assert cdf.evaluate(0.5) == 0.0
        assert cdf.evaluate(3.0) == 1.0

    def test_probs_nondecreasing_to_one(self):
        cdf = build_cdf(np.random.default_rng(0).normal(size=500))
        assert np.all(np.diff(cdf.probs) >= 0)
        assert cdf.probs[-1] == 1.0
        assert cdf.probs[0] > 0

    def test_cdf_at_5th_percentile(self):
        values = np.random.default_rng(1).uniform(size=2000)
        cdf = build_cdf(values)
        q5 = cdf.quantile(0.05)
        assert cdf.evaluate(q5) == pytest.approx(0.05, abs=0.01)

    @given(seed=st.integers(min_value=0, max_value=10_000))
    def test_stable_under_permutation(self, seed):
        rng = np.random.default_rng(seed)
        values = rng.normal(size=64)
        shuffled = values.copy()
        rng.shuffle(shuffled)
        a, b = build_cdf(values), build_cdf(shuffled)
        assert np.array_equal(a.values, b.values)
        assert np.array_equal(a.probs, b.probs)

    def test_empty_raises(self):
        with pytest.raises(ValueError):
            build_cdf([])

    def test_values_sorted(self):
        cdf = build_cdf([3.0, 1.0, 2.0])
        assert np.array_equal(cdf.values, [1.0, 2.0, 3.0])
