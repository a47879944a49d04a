"""Randomized invariants for the model, solver and scenario layers.

Exact-equality assertions below lean on IEEE-754 facts: multiplying or
dividing by 2 is lossless, and rounding commutes with power-of-two scaling,
so doubling an efficiency or a bandwidth must transform components exactly.

Each invariant is a plain function paired with its strategies in PROPERTIES;
as_hypothesis_test wraps one at a chosen example budget.  test_properties.py
runs a quick per-invariant pass for fast iteration, and the acceptance suite
runs the binding 1000-case pass.  The wrapping happens late because applying
settings to an already-built hypothesis test mutates it in place.
"""

import math
from dataclasses import replace

from hypothesis import assume, given, settings, strategies as st

from rupower import (
    AdaptationMode,
    LoadProfile,
    LoadTarget,
    OperatingPoint,
    ProfileSegment,
    RuConfig,
    daily_energy,
    db_to_linear,
    peak_rate,
    power,
    rate,
    solve_operating_point,
    sweep_curve,
)

# 1% grid spacing keeps strict-inequality checks clear of float rounding
PARAM_GRID = [i / 100 for i in range(1, 101)]
LOAD_GRID = [i / 20 for i in range(21)]

finite = dict(allow_subnormal=False)


def watts(upper):
    # zero stays interesting, but snap the denormal wasteland down to it:
    # products of near-minimal normals underflow and break exact-scaling checks
    return st.floats(0.0, upper, **finite).map(
        lambda w: w if w >= 1e-3 else 0.0)


@st.composite
def ru_configs(draw, mode=None, layers_below_chains=False):
    min_chains = 2 if layers_below_chains else 1
    chains = draw(st.integers(min_chains, 256))
    max_layers = chains - 1 if layers_below_chains else chains
    layers = draw(st.integers(1, max_layers))
    if mode is None:
        mode = draw(st.sampled_from(list(AdaptationMode)))
    deactivate = (draw(st.booleans())
                  if mode is AdaptationMode.ANTENNA_MUTING else False)
    return RuConfig(
        name="generated",
        num_trx_chains=chains,
        num_layers=layers,
        trp_watts=draw(watts(500.0)),
        bandwidth_mhz=draw(st.floats(1.0, 800.0, **finite)),
        insertion_loss_db=1.1,  # a fixed multiplier adds nothing here
        layer_sinr_db=draw(st.floats(-10.0, 35.0, **finite)),
        dl_ratio=draw(st.floats(0.05, 0.95, **finite)),
        # <= 0.5 so a doubled efficiency is still a valid fraction
        pa_lineup_efficiency=draw(st.floats(0.05, 0.5, **finite)),
        dsp_efficiency_factor=draw(st.floats(1.0, 8.0, **finite)),
        adaptation_mode=mode,
        reference_bandwidth_mhz=draw(st.sampled_from([25.0, 100.0, 400.0])),
        pa_psu_efficiency=draw(st.floats(0.5, 1.0, **finite)),
        num_chips=draw(st.integers(1, 8)),
        chip_deactivation=deactivate,
        p_rfic_driver=draw(watts(4.0)),
        p_rfic_lna=draw(watts(4.0)),
        p_dfe_bb_tx=draw(watts(4.0)),
        p_dfe_bb_rx=draw(watts(4.0)),
        p_dfe_bb_static=draw(watts(4.0)),
    )


def op_for(config, x):
    if config.adaptation_mode is AdaptationMode.MU_DTX:
        return OperatingPoint(t=x, m=1.0)
    return OperatingPoint(t=1.0, m=x)


@st.composite
def config_and_param(draw, mode=None):
    cfg = draw(ru_configs(mode=mode))
    return cfg, draw(st.sampled_from(PARAM_GRID))


@st.composite
def config_and_param_pair(draw, mode):
    cfg = draw(ru_configs(mode=mode))
    i = draw(st.integers(0, len(PARAM_GRID) - 2))
    j = draw(st.integers(i + 1, len(PARAM_GRID) - 1))
    return cfg, PARAM_GRID[i], PARAM_GRID[j]


@st.composite
def load_profiles(draw, max_segments=3):
    n = draw(st.integers(1, max_segments))
    return LoadProfile(segments=tuple(
        ProfileSegment(hours=draw(st.floats(0.25, 24.0, **finite)),
                       load_fraction=draw(st.sampled_from(LOAD_GRID)))
        for _ in range(n)))


@st.composite
def feasible_targets(draw):
    cfg = draw(ru_configs())
    load = draw(st.floats(1e-4, 1.0, **finite))
    ref_scale = draw(st.floats(0.1, 1.0, **finite))
    return cfg, load, ref_scale


@st.composite
def profile_cases(draw):
    return draw(ru_configs()), draw(load_profiles())


@st.composite
def dominance_cases(draw):
    cfg = draw(ru_configs())
    n = draw(st.integers(1, 3))
    hours = [draw(st.floats(0.25, 24.0, **finite)) for _ in range(n)]
    loads_a = [draw(st.sampled_from(LOAD_GRID)) for _ in range(n)]
    loads_b = [draw(st.sampled_from(LOAD_GRID)) for _ in range(n)]
    high = LoadProfile(segments=tuple(
        ProfileSegment(h, max(a, b))
        for h, a, b in zip(hours, loads_a, loads_b)))
    low = LoadProfile(segments=tuple(
        ProfileSegment(h, min(a, b))
        for h, a, b in zip(hours, loads_a, loads_b)))
    return cfg, high, low


def power_total_is_exact_component_sum(case):
    cfg, x = case
    pb = power(cfg, op_for(cfg, x))
    assert pb.total == sum(pb.components())
    assert all(c >= 0.0 for c in pb.components())


def monotone_and_linear_in_t(case):
    cfg, t_lo, t_hi = case
    pb_lo = power(cfg, OperatingPoint(t=t_lo))
    pb_hi = power(cfg, OperatingPoint(t=t_hi))
    assert pb_lo.total <= pb_hi.total
    assert (rate(cfg, OperatingPoint(t=t_lo)).model_rate
            <= rate(cfg, OperatingPoint(t=t_hi)).model_rate)
    full = power(cfg, OperatingPoint())
    for attr in ("pa", "rfic_driver", "rfic_lna"):
        lo, hi, ref = (getattr(pb, attr) for pb in (pb_lo, pb_hi, full))
        assert math.isclose(lo, t_lo * ref, rel_tol=1e-12, abs_tol=0.0)
        assert math.isclose(hi, t_hi * ref, rel_tol=1e-12, abs_tol=0.0)
        if ref > 0.0:
            assert lo < hi
    # the digital terms do not follow t down
    assert pb_lo.dfe_bb_tx == pb_hi.dfe_bb_tx
    assert pb_lo.dfe_bb_rx == pb_hi.dfe_bb_rx
    assert pb_lo.static == pb_hi.static


def monotone_in_m(case):
    cfg, m_lo, m_hi = case
    assert (power(cfg, OperatingPoint(m=m_lo)).total
            <= power(cfg, OperatingPoint(m=m_hi)).total)
    assert (rate(cfg, OperatingPoint(m=m_lo)).model_rate
            <= rate(cfg, OperatingPoint(m=m_hi)).model_rate)


def rate_continuous_at_layer_boundary(cfg):
    boundary = cfg.num_layers / cfg.num_trx_chains
    left = rate(cfg, OperatingPoint(m=boundary * (1 - 1e-10))).model_rate
    right = rate(cfg, OperatingPoint(m=boundary * (1 + 1e-10))).model_rate
    assert math.isclose(left, right, rel_tol=1e-9)


def doubling_pa_efficiency_halves_pa_exactly(case):
    cfg, x = case
    op = op_for(cfg, x)
    before = power(cfg, op)
    after = power(
        replace(cfg, pa_lineup_efficiency=2 * cfg.pa_lineup_efficiency), op)
    assert after.pa == 0.5 * before.pa
    assert after.rfic_driver == before.rfic_driver
    assert after.rfic_lna == before.rfic_lna
    assert after.dfe_bb_tx == before.dfe_bb_tx
    assert after.dfe_bb_rx == before.dfe_bb_rx
    assert after.static == before.static


def doubling_dsp_efficiency_halves_digital_exactly(case):
    cfg, x = case
    op = op_for(cfg, x)
    before = power(cfg, op)
    after = power(
        replace(cfg, dsp_efficiency_factor=2 * cfg.dsp_efficiency_factor), op)
    assert after.dfe_bb_tx == 0.5 * before.dfe_bb_tx
    assert after.dfe_bb_rx == 0.5 * before.dfe_bb_rx
    assert after.static == 0.5 * before.static
    assert after.pa == before.pa
    assert after.rfic_driver == before.rfic_driver
    assert after.rfic_lna == before.rfic_lna


def doubling_bandwidth_doubles_rate_and_digital_exactly(case):
    cfg, x = case
    op = op_for(cfg, x)
    wide = replace(cfg, bandwidth_mhz=2 * cfg.bandwidth_mhz)
    assert rate(wide, op).model_rate == 2 * rate(cfg, op).model_rate
    before, after = power(cfg, op), power(wide, op)
    assert after.dfe_bb_tx == 2 * before.dfe_bb_tx
    assert after.dfe_bb_rx == 2 * before.dfe_bb_rx
    assert after.pa == before.pa
    assert after.rfic_driver == before.rfic_driver
    assert after.rfic_lna == before.rfic_lna
    assert after.static == before.static


def chip_deactivation_steps_through_every_chip(cfg, extra_ms):
    cfg = replace(cfg, chip_deactivation=True)
    assume(cfg.p_dfe_bb_static > 0.0)
    chips = cfg.num_chips
    midpoints = [(j - 0.5) / chips for j in range(1, chips + 1)]
    statics = [power(cfg, OperatingPoint(m=m)).static for m in midpoints]
    assert len(set(statics)) == chips
    ms = sorted(midpoints + extra_ms)
    values = [power(cfg, OperatingPoint(m=m)).static for m in ms]
    assert values == sorted(values)


def db_to_linear_turns_sums_into_products(a, b):
    assert math.isclose(db_to_linear(a + b), db_to_linear(a) * db_to_linear(b),
                        rel_tol=1e-12)


def solver_round_trip(case):
    cfg, load, ref_scale = case
    ref = ref_scale * peak_rate(cfg)
    solved = solve_operating_point(cfg, LoadTarget(load, ref))
    achieved = rate(cfg, solved.op).model_rate
    assert abs(achieved - load * ref) <= 1e-9 * ref


def solver_minimality(case):
    cfg, load, ref_scale = case
    ref = ref_scale * peak_rate(cfg)
    solved = solve_operating_point(cfg, LoadTarget(load, ref))
    x = (solved.op.t if cfg.adaptation_mode is AdaptationMode.MU_DTX
         else solved.op.m)
    x_below = x - 2e-12
    if x_below > 0.0:
        assert rate(cfg, op_for(cfg, x_below)).model_rate < load * ref


def sweep_points_solve_back_to_their_parameter(cfg, n_points):
    peak = peak_rate(cfg)
    for point in sweep_curve(cfg, peak, n_points):
        solved = solve_operating_point(
            cfg, LoadTarget(min(point.load_fraction, 1.0), peak))
        x = (solved.op.t if cfg.adaptation_mode is AdaptationMode.MU_DTX
             else solved.op.m)
        assert abs(x - point.param) <= 1e-12


def mu_dtx_solves_are_linear_in_load(cfg, load):
    solved = solve_operating_point(cfg, LoadTarget(load, peak_rate(cfg)))
    assert abs(solved.op.t - load) <= 1e-12


def profile_permutation_invariance(case, rng):
    cfg, profile = case
    shuffled = list(profile.segments)
    rng.shuffle(shuffled)
    a = daily_energy(cfg, profile)
    b = daily_energy(cfg, LoadProfile(segments=tuple(shuffled)))
    assert math.isclose(a.average_power_w, b.average_power_w, rel_tol=1e-12)
    assert math.isclose(a.energy_kwh, b.energy_kwh, rel_tol=1e-12)
    assert math.isclose(a.delivered_bits, b.delivered_bits,
                        rel_tol=1e-12, abs_tol=1e-9)


def profile_splitting_invariance(case, raw_index):
    cfg, profile = case
    index = raw_index % len(profile.segments)
    segments = list(profile.segments)
    seg = segments[index]
    segments[index:index + 1] = [
        ProfileSegment(hours=seg.hours / 2, load_fraction=seg.load_fraction),
        ProfileSegment(hours=seg.hours / 2, load_fraction=seg.load_fraction),
    ]
    a = daily_energy(cfg, profile)
    b = daily_energy(cfg, LoadProfile(segments=tuple(segments)))
    assert math.isclose(a.average_power_w, b.average_power_w, rel_tol=1e-12)
    assert math.isclose(a.energy_kwh, b.energy_kwh, rel_tol=1e-12)
    assert math.isclose(a.delivered_bits, b.delivered_bits,
                        rel_tol=1e-12, abs_tol=1e-9)


def profile_duration_scaling(case):
    cfg, profile = case
    doubled = LoadProfile(segments=tuple(
        ProfileSegment(hours=2 * s.hours, load_fraction=s.load_fraction)
        for s in profile.segments))
    a = daily_energy(cfg, profile)
    b = daily_energy(cfg, doubled)
    assert math.isclose(a.average_power_w, b.average_power_w, rel_tol=1e-12)
    assert math.isclose(2 * a.energy_kwh, b.energy_kwh, rel_tol=1e-12)
    assert math.isclose(2 * a.delivered_bits, b.delivered_bits,
                        rel_tol=1e-12, abs_tol=1e-9)


def heavier_profiles_cost_at_least_as_much(case):
    cfg, high, low = case
    avg_high = daily_energy(cfg, high).average_power_w
    avg_low = daily_energy(cfg, low).average_power_w
    assert avg_high >= avg_low - 1e-12 * (1.0 + avg_low)


PROPERTIES = (
    (power_total_is_exact_component_sum, (config_and_param(),)),
    (monotone_and_linear_in_t,
     (config_and_param_pair(mode=AdaptationMode.MU_DTX),)),
    (monotone_in_m,
     (config_and_param_pair(mode=AdaptationMode.ANTENNA_MUTING),)),
    (rate_continuous_at_layer_boundary,
     (ru_configs(mode=AdaptationMode.ANTENNA_MUTING,
                 layers_below_chains=True),)),
    (doubling_pa_efficiency_halves_pa_exactly, (config_and_param(),)),
    (doubling_dsp_efficiency_halves_digital_exactly, (config_and_param(),)),
    (doubling_bandwidth_doubles_rate_and_digital_exactly,
     (config_and_param(),)),
    (chip_deactivation_steps_through_every_chip,
     (ru_configs(mode=AdaptationMode.ANTENNA_MUTING),
      st.lists(st.sampled_from(PARAM_GRID), min_size=1, max_size=6))),
    (db_to_linear_turns_sums_into_products,
     (st.floats(-200.0, 200.0, **finite),
      st.floats(-200.0, 200.0, **finite))),
    (solver_round_trip, (feasible_targets(),)),
    (solver_minimality, (feasible_targets(),)),
    (sweep_points_solve_back_to_their_parameter,
     (ru_configs(), st.integers(2, 8))),
    (mu_dtx_solves_are_linear_in_load,
     (ru_configs(mode=AdaptationMode.MU_DTX),
      st.floats(1e-4, 1.0, **finite))),
    (profile_permutation_invariance,
     (profile_cases(), st.randoms(use_true_random=False))),
    (profile_splitting_invariance, (profile_cases(), st.integers(0, 3))),
    (profile_duration_scaling, (profile_cases(),)),
    (heavier_profiles_cost_at_least_as_much, (dominance_cases(),)),
)


def as_hypothesis_test(prop, max_examples):
    """Wrap one PROPERTIES entry into a runnable hypothesis test.

    derandomize keeps every run reproducible regardless of budget.
    """
    fn, strategies = prop
    runs = settings(max_examples=max_examples, deadline=None,
                    derandomize=True)
    return runs(given(*strategies)(fn))
