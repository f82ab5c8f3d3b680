"""End-to-end command-line tests over real files."""

import json

import numpy as np

from qent.algebra import AlgebraParams, Element
from qent.cli import main
from qent.corep import product_catalog
from qent.fourier import DensityOp, reconstruct, singlet_state, werner_state
from qent.hopf import MultiElement, partial_theta, tensor
from qent.serialize import (
    densityop_to_dict,
    dump_json,
    element_to_dict,
    multielement_from_dict,
    multielement_to_dict,
)


def write_singlet(tmp_path, name="singlet.json"):
    path = tmp_path / name
    dump_json(densityop_to_dict(singlet_state()), path)
    return path


def test_transform_singlet(tmp_path, capsys):
    rho_path = write_singlet(tmp_path)
    out_path = tmp_path / "element.json"
    code = main(["transform", "--input", str(rho_path), "--output", str(out_path), "--q", "0.5"])
    assert code == 0
    out = capsys.readouterr().out
    assert "counit check: 1" in out
    data = json.loads(out_path.read_text())
    assert data["legs"] == 2
    assert len(data["terms"]) == 4
    for term in data["terms"]:
        assert abs(term["coeff"][0] - 0.5) < 1e-12
        assert abs(term["coeff"][1]) < 1e-12


def test_transform_maximally_mixed(tmp_path):
    path = tmp_path / "mixed.json"
    dump_json(densityop_to_dict(werner_state(0.0)), path)
    out_path = tmp_path / "el.json"
    assert main(["transform", "--input", str(path), "--output", str(out_path)]) == 0
    data = json.loads(out_path.read_text())
    assert len(data["terms"]) == 4
    assert all(abs(t["coeff"][0] - 0.25) < 1e-12 for t in data["terms"])


def test_transform_zero_matrix(tmp_path):
    path = tmp_path / "zero.json"
    dump_json({"dims": [2, 2], "entries": [[0.0, 0.0]] * 16}, path)
    out_path = tmp_path / "el.json"
    assert main(["transform", "--input", str(path), "--output", str(out_path)]) == 0
    assert json.loads(out_path.read_text())["terms"] == []


def test_transform_malformed_exits_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["transform", "--input", str(bad)]) == 2
    worse = tmp_path / "worse.json"
    dump_json({"dims": [2, 2], "entries": [[1.0, 0.0]] * 3}, worse)
    assert main(["transform", "--input", str(worse)]) == 2


def test_roundtrip_through_files(tmp_path):
    rho_path = write_singlet(tmp_path)
    out_path = tmp_path / "element.json"
    assert main(["transform", "--input", str(rho_path), "--output", str(out_path)]) == 0
    element = multielement_from_dict(json.loads(out_path.read_text()))
    U = product_catalog(element.params, ("fund*fund",))[0]
    recovered = reconstruct(element, U)
    assert np.max(np.abs(recovered - singlet_state().matrix)) < 1e-8


def test_check_pd_exit_codes(tmp_path):
    params = AlgebraParams(q=0.5)
    U = product_catalog(params, ("fund*fund",))[0]
    rho_path = write_singlet(tmp_path)
    el_path = tmp_path / "el.json"
    assert main(["transform", "--input", str(rho_path), "--output", str(el_path)]) == 0
    assert main(["check-pd", "--input", str(el_path)]) == 0

    element = multielement_from_dict(json.loads(el_path.read_text()))
    npt_path = tmp_path / "npt.json"
    dump_json(multielement_to_dict(partial_theta(element)), npt_path)
    assert main(["check-pd", "--input", str(npt_path)]) == 1

    # outside the catalog span: undecided
    c = Element.generator(params, "c")
    outside = tensor(c * c.adjoint(), Element.unit(params))
    out_path = tmp_path / "outside.json"
    dump_json(multielement_to_dict(outside), out_path)
    assert main(["check-pd", "--input", str(out_path)]) == 3

    assert main(["check-pd", "--input", str(rho_path)]) == 2  # not an element file


def test_check_pd_unit_with_trivial_catalog(tmp_path):
    params = AlgebraParams(q=0.5)
    path = tmp_path / "unit.json"
    dump_json(multielement_to_dict(MultiElement.unit(params, 2)), path)
    assert main(["check-pd", "--input", str(path), "--catalog", "triv*triv"]) == 0


def test_ppt_on_matrix_inputs(tmp_path, capsys):
    singlet_path = write_singlet(tmp_path)
    code = main(["ppt", "--input", str(singlet_path), "--format", "json"])
    assert code == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["matrix_ppt"] is False
    assert payload["agreement"] is True

    werner_path = tmp_path / "werner.json"
    dump_json(densityop_to_dict(werner_state(0.2)), werner_path)
    assert main(["ppt", "--input", str(werner_path)]) == 0

    prod_path = tmp_path / "prod.json"
    mat = np.zeros((4, 4))
    mat[1, 1] = 1.0
    dump_json(densityop_to_dict(DensityOp((2, 2), mat)), prod_path)
    assert main(["ppt", "--input", str(prod_path)]) == 0


def test_ppt_unsupported_dims(tmp_path):
    path = tmp_path / "big.json"
    dump_json({"dims": [3, 3], "entries": [[0.0, 0.0]] * 81}, path)
    assert main(["ppt", "--input", str(path)]) == 2


def test_ppt_on_element_input(tmp_path):
    params = AlgebraParams(q=0.5)
    path = tmp_path / "unit.json"
    dump_json(multielement_to_dict(MultiElement.unit(params, 2)), path)
    assert main(["ppt", "--input", str(path)]) == 0


def test_haar_command(tmp_path, capsys):
    params = AlgebraParams(q=0.5)
    c = Element.generator(params, "c")
    path = tmp_path / "cc.json"
    dump_json(element_to_dict(c * c.adjoint()), path)
    assert main(["haar", "--input", str(path)]) == 0
    out = capsys.readouterr().out
    value = json.loads(out)
    assert abs(value[0] - 0.4) < 1e-9 and abs(value[1]) < 1e-12

    unit_path = tmp_path / "one.json"
    dump_json(element_to_dict(Element.unit(params)), unit_path)
    assert main(["haar", "--input", str(unit_path)]) == 0
    assert json.loads(capsys.readouterr().out)[0] == 1.0

    two_leg = tmp_path / "two.json"
    a = Element.generator(params, "a")
    dump_json(multielement_to_dict(tensor(a, a.adjoint())), two_leg)
    assert main(["haar", "--input", str(two_leg)]) == 0
    assert abs(json.loads(capsys.readouterr().out)[0]) < 1e-12


def test_verify_command(capsys):
    assert main(["verify", "--suite", "hopf", "--q", "0.7"]) == 0
    out = capsys.readouterr().out
    assert "OK" in out and "coassociativity" in out


def test_verify_corep_at_q1(capsys):
    assert main(["verify", "--suite", "corep", "--q", "1.0"]) == 0


def test_demo_singlet(capsys):
    assert main(["demo-singlet", "--q", "0.5"]) == 0
    out = capsys.readouterr().out
    assert "0.5·a ⊗ a*" in out
    assert "counit of the transform: 1" in out
    assert "0.5 != 1" in out  # the quarter-coefficient variant fails normalization
    assert "ENTANGLED" in out


def test_demo_singlet_q1_notes_classical(capsys):
    assert main(["demo-singlet", "--q", "1.0"]) == 0
    assert "commutative" in capsys.readouterr().out


def test_demo_reconstruction_residual_at_q09(capsys):
    from qent.cli import singlet_demo_report

    report = singlet_demo_report(AlgebraParams(q=0.9))
    assert report["reconstruction_residual"] < 1e-8


def test_env_var_default_q(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("QENT_DEFAULT_Q", "0.7")
    assert main(["demo-singlet", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["q"] == 0.7
    monkeypatch.setenv("QENT_DEFAULT_Q", "zebra")
    assert main(["demo-singlet"]) == 2


def test_invalid_q_exits_2():
    assert main(["demo-singlet", "--q", "1.5"]) == 2


def test_element_files_fix_their_own_q(tmp_path, capsys):
    rho_path = write_singlet(tmp_path)
    el_path = tmp_path / "el.json"
    assert main(["transform", "--input", str(rho_path), "--output", str(el_path), "--q", "0.5"]) == 0
    capsys.readouterr()
    # without --q the file's q governs, whatever the environment default is
    assert main(["check-pd", "--input", str(el_path)]) == 0
    # a conflicting explicit --q is refused: the coefficients live at q = 0.5
    assert main(["check-pd", "--input", str(el_path), "--q", "0.7"]) == 2
    assert main(["haar", "--input", str(el_path), "--q", "0.7"]) == 2
    assert main(["ppt", "--input", str(el_path), "--q", "0.7"]) == 2
    # matching --q is fine
    assert main(["haar", "--input", str(el_path), "--q", "0.5"]) == 0
