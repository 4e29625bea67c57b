"""Acceptance suite: one test per contract, exact integer tolerance.

Each test delegates to the corresponding hermetic check in
``npsurf.selftest`` so the command-line ``npsurf selftest`` and this suite
can never drift apart.
"""

import subprocess
import sys
import time

from npsurf import selftest


def test_family_sweeps_and_ampleness_agreement_under_ten_seconds():
    start = time.perf_counter()
    ok, detail = selftest.check_family_sweeps()
    elapsed = time.perf_counter() - start
    assert ok, detail
    assert elapsed < 10.0, f"sweeps took {elapsed:.2f}s (budget 10s)"


def test_min_summand_count_table_matches_independent_reconstruction():
    ok, detail = selftest.check_min_n_table()
    assert ok, detail


def test_degree_bound_chain_holds_on_the_full_grid():
    ok, detail = selftest.check_degree_chain()
    assert ok, detail


def test_sharpness_boundaries_are_exact():
    ok, detail = selftest.check_sharpness()
    assert ok, detail


def test_fano_fixtures_and_surface_induction_base():
    ok, detail = selftest.check_fano()
    assert ok, detail


def test_property_suites_mutation_detection_and_determinism():
    ok, detail = selftest.check_properties()
    assert ok, detail
    ok, detail = selftest.check_mutation_robustness()
    assert ok, detail
    ok, detail = selftest.check_oracle_determinism()
    assert ok, detail


def test_selftest_command_is_hermetic_and_fast():
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "npsurf", "selftest"],
        capture_output=True, text=True, timeout=120,
    )
    elapsed = time.perf_counter() - start
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert elapsed < 60.0, f"selftest took {elapsed:.2f}s (budget 60s)"
    lines = [ln for ln in proc.stdout.splitlines() if ln.startswith("[ok")]
    assert len(lines) == len(selftest.CHECKS)
    assert f"{len(selftest.CHECKS)}/{len(selftest.CHECKS)} checks passed" \
        in proc.stdout
