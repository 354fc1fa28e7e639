"""Checker behavior: honest passes, forced failures, determinism."""

import json

import pytest

from hgpbarrier.codes import ClassicalCode, open_repetition, ring_repetition
from hgpbarrier.errors import NoLogicals
from hgpbarrier.f2core import BitMatrix
from hgpbarrier.hgp import build_hgp
from hgpbarrier import verify as V


@pytest.fixture(scope="module")
def instances():
    return V.quantum_instances()


def test_registry_names(instances):
    assert set(instances) == {
        "toric_3", "surface_3", "tiny_2", "ring_2", "rect_2_3", "rect_3_2",
    }
    classical = V.classical_instances()
    assert {"ring_3", "ring_6", "chain_3", "chain_6", "hamming_7_4", "ldpc_8_6"} <= set(classical)


def test_classical_registry_deterministic():
    a = V.classical_instances(seed=7)["ldpc_8_6"]
    b = V.classical_instances(seed=7)["ldpc_8_6"]
    assert a.h.row_bits == b.h.row_bits


# -- lemma1 ---------------------------------------------------------------------

def test_lemma1_surface_exhaustive_pairs(instances):
    r = V.check_lemma1(instances["surface_3"], instance="surface_3")
    assert r.passed
    assert r.checked == 4096
    assert r.details["mode"] == "paired"
    assert r.details["bound"] == 16
    assert r.details["worst_barrier"] == 1
    assert r.counterexample is None
    assert len(r.details["constructive_baseline_peaks"]) == 8


def test_lemma1_toric_factored_still_exhaustive(instances):
    r = V.check_lemma1(instances["toric_3"], instance="toric_3")
    assert r.passed
    # one pass over each sector rowspace: 2^8 + 2^8
    assert r.checked == 512
    assert r.details["mode"] == "factored"
    assert r.details["worst_barrier"] == 2


def test_lemma1_forced_failure_has_recheckable_counterexample(instances):
    code = build_hgp(open_repetition(3), open_repetition(3))
    # cached_property stores in the instance dict, so a planted value
    # simulates a wrong sparsity bound without touching the matrices
    object.__setattr__(code, "w_c", 0)
    object.__setattr__(code, "w_q", 0)
    r = V.check_lemma1(code, instance="tampered")
    assert not r.passed
    ce = r.counterexample
    assert ce is not None and ce["bound"] == 0
    # the counterexample re-checks against the honest instance
    from hgpbarrier.barrier import sector_table
    honest = instances["surface_3"]
    tx = sector_table(honest, "x")
    tz = sector_table(honest, "z")
    assert max(tx.value(ce["x_bits"]), tz.value(ce["z_bits"])) == ce["barrier"]
    assert ce["barrier"] > ce["bound"]


# -- thm1 checker ----------------------------------------------------------------

def test_theorem1_surface_and_toric(instances):
    for name, sweep in (("surface_3", "exhaustive"), ("toric_3", "sampled")):
        r = V.check_theorem1(instances[name], samples=100, seed=0, instance=name)
        assert r.passed
        assert r.checked == 100
        assert r.seed == 0
        assert r.details["smallest_slack"] >= 0
        assert r.details["stabilizer_sweep"] == sweep


def test_theorem1_deterministic(instances):
    a = V.check_theorem1(instances["surface_3"], samples=50, seed=3, instance="surface_3")
    b = V.check_theorem1(instances["surface_3"], samples=50, seed=3, instance="surface_3")
    assert a.to_json_dict() == b.to_json_dict()


def test_theorem1_requires_logicals():
    trivial = ClassicalCode(BitMatrix.identity(2))
    with pytest.raises(NoLogicals):
        V.check_theorem1(build_hgp(trivial, ring_repetition(3)))


# -- lemma2 checker -----------------------------------------------------------------

def test_lemma2_all_instances(instances):
    for name in ("surface_3", "toric_3", "ring_2", "rect_2_3"):
        r = V.check_lemma2(instances[name], instance=name)
        assert r.passed, name
        for row in r.details["per_operator"]:
            assert row["unrestricted"] == row["restricted"] == row["witness_max"]


def test_lemma2_toric_values(instances):
    r = V.check_lemma2(instances["toric_3"], instance="toric_3")
    assert r.checked == 2
    assert all(row["restricted"] == 2 for row in r.details["per_operator"])


def test_lemma2_forced_failure(monkeypatch, instances):
    monkeypatch.setattr(V, "_unit_move_value", lambda parent, word, cap: 99)
    r = V.check_lemma2(instances["surface_3"], instance="tampered")
    assert not r.passed
    assert r.counterexample["restricted"] == 99


# -- lemma3 checker -----------------------------------------------------------------

def test_lemma3_instances(instances):
    for name, combos in (("surface_3", 1), ("toric_3", 3), ("ring_2", 3), ("rect_2_3", 1)):
        r = V.check_lemma3(instances[name], instance=name)
        assert r.passed, name
        assert r.checked == combos
        assert r.details["composite_min"] >= r.details["elementary_min"]


def test_lemma3_toric_min(instances):
    r = V.check_lemma3(instances["toric_3"], instance="toric_3")
    assert r.details["elementary_min"] == 2
    assert r.details["composite_min"] == 2


# -- lemma4 checker -----------------------------------------------------------------

def test_lemma4_small_family():
    h = ClassicalCode(BitMatrix.from_rows(["110", "011"]))
    r = V.check_lemma4(family=[(h, h)])
    assert r.passed
    # 2^9 matrices Z1, 2^4 matrices Z2, one nonzero codeword
    assert r.checked == 512 * 16
    assert r.details["pairs"] == 1


def test_lemma4_default_family_shape():
    fam = V.lemma4_default_family()
    assert len(fam) == 25
    for h1, h2 in fam:
        assert (h1.r, h1.n) == (2, 3)
        assert (h2.r, h2.n) == (2, 3)


def test_lemma4_counterexample_fields(monkeypatch):
    # force the comparison to trip so the counterexample payload is exercised
    import hgpbarrier.verify as mod
    monkeypatch.setattr(mod, "weight_reduction_gap", lambda code, z1, z2, w: (5, 1))
    h = ClassicalCode(BitMatrix.from_rows(["110", "011"]))
    r = mod.check_lemma4(family=[(h, h)])
    assert not r.passed
    ce = r.counterexample
    assert ce["lhs"] == 5 and ce["rhs"] == 1
    assert ce["h1"] == ["110", "011"]
    assert len(ce["z1"]) == 3 and len(ce["z2"]) == 2


# -- prop1 checker ---------------------------------------------------------------

def test_prop1_registry(instances):
    for name in ("tiny_2", "rect_2_3", "ring_2", "surface_3", "toric_3"):
        r = V.check_proposition1(instances[name], instance=name)
        assert r.passed, name
        assert r.details["canonical_min"] >= r.details["floor"]


def test_prop1_surface_infinite_transpose_side(instances):
    r = V.check_proposition1(instances["surface_3"], instance="surface_3")
    assert r.details["delta_h1"] == 1
    assert r.details["delta_h2t"] is None
    assert r.details["floor"] == 1


# -- main equality --------------------------------------------------------------

def test_main_toric():
    r = V.check_main_equality(ring_repetition(3), ring_repetition(3), instance="toric_3")
    assert r.passed
    d = r.details
    assert d["quantum"] == 2
    assert d["parents"] == {"h1": 2, "h2": 2, "h1t": 2, "h2t": 2}
    assert d["canonical_z"] == 2 and d["canonical_x"] == 2
    assert d["condition_holds"] is False
    assert d["full_equality_observed"] is True


def test_main_surface_ignores_empty_transpose_codes():
    r = V.check_main_equality(open_repetition(3), open_repetition(3), instance="surface_3")
    assert r.passed
    d = r.details
    assert d["quantum"] == 1
    assert d["parents"]["h1t"] is None and d["parents"]["h2t"] is None
    assert d["canonical_z"] == 1 and d["canonical_x"] == 1


def test_main_requires_logicals():
    trivial = ClassicalCode(BitMatrix.identity(2))
    with pytest.raises(NoLogicals):
        V.check_main_equality(trivial, ring_repetition(3))


# -- css restriction ------------------------------------------------------------

def test_css_restriction_counts(instances):
    for name, count in (("tiny_2", 8), ("ring_2", 48)):
        r = V.check_css_restriction(instances[name], instance=name)
        assert r.passed, name
        assert r.checked == count


# -- report plumbing ------------------------------------------------------------

def test_report_json_excludes_elapsed(instances):
    r = V.check_lemma3(instances["surface_3"], instance="surface_3")
    d = r.to_json_dict()
    assert "elapsed" not in d
    assert r.elapsed >= 0.0
    json.dumps(d, sort_keys=True)


def test_report_seed_key_only_when_set(instances):
    no_seed = V.check_lemma3(instances["surface_3"], instance="surface_3")
    assert "seed" not in no_seed.to_json_dict()
    seeded = V.check_theorem1(instances["surface_3"], samples=5, seed=1, instance="surface_3")
    assert seeded.to_json_dict()["seed"] == 1


def test_run_claim_unknown():
    with pytest.raises(ValueError):
        V.run_claim("lemma99")


def test_run_claim_lemma3_instances():
    reports = V.run_claim("lemma3")
    assert [r.instance for r in reports] == ["surface_3", "toric_3", "ring_2", "rect_2_3"]
    assert all(r.passed for r in reports)


def test_run_all_summary_shape():
    reports, summary = V.run_all(seed=0)
    assert summary["claims"] == len(reports)
    assert summary["passes"] + summary["fails"] == summary["claims"]
    assert summary["fails"] == 0
    assert {r.claim for r in reports} == set(V.CLAIMS)
