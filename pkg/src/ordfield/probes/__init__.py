"""Cuts, refuters, counterexample functions and per-property probes."""

from .cuts import (Cut, DyadicApproximants, Side, cut_finite, cut_halo, cut_laurent_finite,
                   cut_sqrt2, dyadic_approximants, local_constancy_witness,
                   locally_constant_check, refute_cutpoint, refute_lub, separation_witness)
from .functions import (PiecewiseLinearMap, bump, bump_cutoff, bump_sum, check_no_fixed_point,
                        contraction_check, contraction_map, evp_function, fixedpoint_function,
                        gap_contraction_build, refute_bound, refute_gap_fixed_point, refute_max,
                        step_function, supports_nested)
from .properties import candidates_for, fixed_candidates, main_gap, probe_property, safe_probe
from .sequences import (archimedean_probe, cauchy_probe, decimal_interval_probe, exp_partial,
                        half_power_partial, infinitesimal_certificate, lacunary_partial,
                        lacunary_refuter, laurent_cauchy_battery, laurent_interval_battery,
                        laurent_series_battery, magnitude_certificate, monotone_refuter,
                        nested_refuter, partial_sums_separated, ratio_test_refuter,
                        ratio_test_refuter_rationals, series_probes, shrinking_intersect,
                        shrinking_probe, shrinking_refuter_rationals)
