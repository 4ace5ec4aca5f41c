"""Smoke tests for the python bindings: a few end-to-end drives of the main
operations, mirroring the bundled catalog."""

import pytest

import gdlab


def novikov_type_2d():
    alg = gdlab.AlgebraStructure(2)
    alg.set_circ(1, 2, 2, 1)
    co = gdlab.CoalgebraStructure(2)
    co.set_delta0(2, 1, 2, 1)
    co.set_delta0(2, 2, 1, -1)
    return gdlab.BialgebraData(alg, co)


def test_bialgebra_check_and_classification():
    d = novikov_type_2d()
    assert d.check("gd").passed
    assert d.classify() == "novikov_type"

    broken = gdlab.CoalgebraStructure(2)
    broken.set_delta0(2, 1, 2, 1)  # drop the antisymmetric partner
    bad = gdlab.BialgebraData(d.alg, broken)
    report = bad.check("gd")
    assert not report.passed
    assert any(v.axiom.endswith("co-antisymmetry") for v in report.violations)


def test_affinize_and_cobracket_render():
    d = novikov_type_2d()
    cs = gdlab.affinize(d.alg)
    assert cs.check().passed
    assert "[e1 _λ e2] = λ e2" in cs.render()
    full, report = gdlab.build_cobracket(cs, d.co)
    assert report.passed
    assert "δ(e2) = e1⊗e2 − e2⊗e1" in full.render_cobracket()
    assert full.check_bialgebra().passed


def test_duality_round_trip():
    d = novikov_type_2d()
    assert gdlab.dualize_coalgebra(gdlab.dualize_algebra(d.alg)).check("gd").passed
    # the dual of the cobracket is the expected 2-dim bracket
    dual = gdlab.dualize_coalgebra(d.co)
    assert dual.bracket(1, 2, 2) == "1"
    assert dual.bracket(2, 1, 2) == "-1"


def test_yang_baxter_and_operator_form():
    d = novikov_type_2d()
    r = gdlab.RMatrix(2)
    r.set(1, 2, 1)
    r.set(2, 1, -1)
    verdict = gdlab.check_gdybe(d.alg, r)
    assert verdict["skew"] and not verdict["solution"]
    T, report = gdlab.r_to_operator(d.alg, r)
    assert not report.passed  # operator form agrees with the tensor form

    zero = gdlab.RMatrix(2)
    assert gdlab.check_gdybe(d.alg, zero)["solution"]
    co = gdlab.coboundary_maps(d.alg, zero)
    assert gdlab.BialgebraData(d.alg, co).check("gd").passed


def test_zinbiel_pipeline():
    z = gdlab.builtin_zinbiel_3d(0, 1)
    assert gdlab.check_zinbiel(z).passed
    p = gdlab.zinbiel_to_pregd(z)
    assert gdlab.check_pre_gd(p).passed
    res = gdlab.pregd_pipeline(p)
    assert res.gdybe["solution"] and res.gdybe["skew"]
    assert res.bialgebra_report.passed
    cs = gdlab.affinize(res.double_alg)
    assert gdlab.ccybe_defect_is_zero(cs, res.r)
    assert "2(∂+2λ) e2" in cs.render()
    assert gdlab.left_symmetric_conformal(p).passed

    text, ok = gdlab.pipeline_text(p)
    assert ok and "gd-bialgebra check: pass" in text


def test_zinbiel_rejects_non_zinbiel_input():
    z = gdlab.ZinbielData(3)
    z.set_dot(1, 1, 2, 1)
    z.set_dot(1, 2, 3, 1)  # violates the defining identity (needs 2)
    z.set_dot(2, 1, 3, 1)
    for i in range(1, 4):
        z.set_D(i, i, i)
    assert not gdlab.check_zinbiel(z).passed
    with pytest.raises(ValueError):
        gdlab.zinbiel_to_pregd(z)


def test_quadratic_and_manin():
    d = novikov_type_2d()
    ident = gdlab.BilinearForm.identity(2)
    assert not gdlab.check_quadratic_gd(d.alg, ident).passed
    dbl, report = gdlab.build_standard_manin(d)
    assert report.passed
    assert gdlab.check_matched_pair_of(d).passed
    assert gdlab.check_conformal_bilinear(
        gdlab.affinize(dbl), gdlab.BilinearForm.standard_hyperbolic(2)
    ).passed


def test_example_catalog_and_cli():
    names = [n for n, _ in gdlab.list_examples()]
    assert "thm3.36-zinbiel" in names
    code, output, message = gdlab.run_example("ex2.14-conformal")
    assert code == 0, message
    code, output = gdlab.cli(["examples", "run", "--all"])
    assert code == 0, output
    code, output = gdlab.cli(["check", "/nonexistent.json", "--kind", "gd"])
    assert code == 2
