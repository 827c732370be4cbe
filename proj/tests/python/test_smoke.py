"""Smoke tests for the Python package and the command-line tool."""

import csv
import io
import json
import math
import os
import subprocess
from fractions import Fraction

import numpy as np
import pytest

import clonesim

CLI = os.environ.get("CLONESIM_CLI")


def run_cli(*args, **kwargs):
    assert CLI, "CLONESIM_CLI must point at the built binary"
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


class TestLibrary:
    def test_sector_enumeration(self):
        sector = clonesim.enumerate_sector(2, 1, 1)
        assert sector.size == 7
        assert len(sector) == 7
        states = sector.states()
        assert (["G", "G"], 1, 1) in [(list(s[0]), s[1], s[2]) for s in states]

    def test_hamiltonian_is_hermitian(self):
        sector = clonesim.enumerate_sector(2, 2, 1)
        h = clonesim.build_hamiltonian(sector)
        assert np.allclose(h, h.conj().T)

    def test_evolution_preserves_norm(self):
        sector = clonesim.enumerate_sector(2, 2, 1)
        h = clonesim.build_hamiltonian(sector)
        psi = np.zeros(h.shape[0], dtype=complex)
        psi[0] = 1.0
        out = clonesim.evolve_unitary(h, 0.7, psi)
        assert math.isclose(np.linalg.norm(out), 1.0, abs_tol=1e-10)

    def test_evolve_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            clonesim.evolve_unitary(np.array([[0.0, 1.0], [0.0, 0.0]]), 1.0,
                                    np.array([1.0, 0.0], dtype=complex))

    def test_short_time_fidelity(self):
        rows = clonesim.simulate_time_series(1, 0.01, 1)
        assert len(rows) == 2
        assert rows[0].f_clones is None
        assert abs(rows[1].f_clones - 5.0 / 6.0) < 1e-3

    def test_photon_distribution(self):
        p = clonesim.photon_distribution(2, 0.4)
        assert math.isclose(sum(p.values()), 1.0, abs_tol=1e-10)
        assert p.get((0, 0), 0.0) < 1e-12

    def test_metrics_on_dict(self):
        p = {(2, 0): 0.5, (1, 1): 0.25, (1, 0): 0.25}
        assert math.isclose(clonesim.f_clones(p), 5.0 / 6.0, abs_tol=1e-12)
        with pytest.raises(clonesim.UndefinedMetricError):
            clonesim.f_clones({(1, 0): 1.0})

    def test_exact_fidelities_are_fractions(self):
        assert clonesim.optimal_fidelity(1, 2) == Fraction(5, 6)
        assert clonesim.clone_fidelity(2, 3) == Fraction(11, 12)
        assert clonesim.anticlone_fidelity(1, 2) == Fraction(2, 3)
        assert clonesim.clone_fidelity(3, 3) == 1

    def test_pdc_states(self):
        state = clonesim.pdc_final_state_analytic(1, math.tanh(0.3))
        assert abs(state.norm_deficit) < 1e-12
        numeric = clonesim.pdc_evolve_numeric(1, 0.3, state.cutoff + 20)
        assert abs(clonesim.pdc_overlap(state, numeric)) > 1.0 - 1e-8
        weights = state.fixed_m_weights(5)
        assert sum(weights) <= 1.0 + 1e-12

    def test_universality(self):
        rot = clonesim.seeded_rotations(42, 1)[0]
        report = clonesim.universality_check(rot, 2, gamma_t_max=1.0, steps=5)
        assert report.max_deviation() < 1e-9

    def test_run_checks_subset(self):
        results = clonesim.run_checks(max_atoms=2, only=["pdc-identity"])
        assert len(results) == 1
        assert results[0].passed


class TestCli:
    def test_atoms_csv_schema(self):
        result = run_cli("atoms", "--n-atoms", "1", "--gamma-t-max", "0.5",
                         "--steps", "5")
        assert result.returncode == 0
        rows = list(csv.reader(io.StringIO(result.stdout)))
        assert rows[0] == ["gamma_t", "f_clones", "f_opt", "f_rand", "n_all", "n_right"]
        assert len(rows) == 7
        assert rows[1][1] == ""  # undefined metrics at gamma_t = 0

    def test_atoms_json(self):
        result = run_cli("atoms", "--n-atoms", "1", "--gamma-t-max", "0.01",
                         "--steps", "1", "--format", "json")
        assert result.returncode == 0
        rows = json.loads(result.stdout)
        assert rows[0]["f_clones"] is None
        assert abs(rows[-1]["f_clones"] - 5.0 / 6.0) < 1e-3

    def test_atoms_rejects_bad_args(self):
        assert run_cli("atoms", "--n-atoms", "0").returncode == 2
        assert run_cli("atoms", "--gamma-t-max", "-1").returncode == 2
        assert run_cli("nonsense").returncode == 2

    def test_atoms_deterministic(self):
        args = ("atoms", "--n-atoms", "2", "--gamma-t-max", "1", "--steps", "20")
        assert run_cli(*args).stdout == run_cli(*args).stdout

    def test_pdc_fidelity_values(self):
        result = run_cli("pdc", "--n-in", "1", "--m-out", "2")
        assert result.returncode == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "quantity,exact,decimal"
        assert lines[1].startswith("clone_fidelity,5/6,0.8333333333")
        assert lines[2].startswith("anticlone_fidelity,2/3,0.6666666666")

    def test_pdc_equal_in_out(self):
        result = run_cli("pdc", "--n-in", "3", "--m-out", "3")
        assert result.returncode == 0
        assert "clone_fidelity,1," in result.stdout
        assert "anticlone" not in result.stdout

    def test_pdc_weights(self):
        result = run_cli("pdc", "--n-in", "1", "--gamma-t", "0.3", "--weights",
                         "--m-max", "5")
        assert result.returncode == 0
        rows = list(csv.DictReader(io.StringIO(result.stdout)))
        total = sum(float(r["weight"]) for r in rows)
        assert rows[0]["m"] == "1"
        assert total <= 1.0

    def test_pdc_rejects_bad_args(self):
        assert run_cli("pdc", "--n-in", "2", "--m-out", "1").returncode == 2
        assert run_cli("pdc", "--n-in", "1", "--weights").returncode == 2

    def test_verify_single_check(self):
        result = run_cli("verify", "--only", "pdc-identity")
        assert result.returncode == 0
        assert result.stdout.startswith("PASS pdc-identity")

    def test_verify_unknown_check(self):
        assert run_cli("verify", "--only", "no-such-check").returncode == 2
