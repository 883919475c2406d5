import json

import pytest

from triplepoints.cli import main
from triplepoints.fields import Field
from triplepoints.surfaces import Surface, save_points, ProjPoint
from triplepoints.constructions import generic_points

F31 = Field.GF(31)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_bounds_degree(capsys):
    code, data = run(capsys, "bounds", "--degree", "6")
    assert code == 0
    assert data["schema_version"] == 1
    assert (data["polar"], data["spectrum"], data["combined"]) == (10, 11, 10)
    assert data["miyaoka"] is None


def test_bounds_table(capsys):
    code, data = run(capsys, "bounds", "--table", "3..12")
    assert code == 0
    assert data["table"] == {"3": 1, "4": 1, "5": 5, "6": 10, "7": 17,
                             "8": 29, "9": 42, "10": 60, "11": 81, "12": 107}


def test_bounds_requires_argument(capsys):
    code, data = run(capsys, "bounds")
    assert code == 1
    assert "error" in data


def test_spectrum(capsys):
    code, data = run(capsys, "spectrum", "--exponents", "3,3,3",
                     "--interval", "4/5,9/5")
    assert code == 0
    assert data["total"] == 8
    assert data["count"] == 7
    assert ["1", 1] in data["spectrum"]


def test_invariants(capsys):
    code, data = run(capsys, "invariants", "--degree", "6", "--nu", "9")
    assert code == 0
    assert (data["c1sq"], data["chi"], data["p_g"]) == (-3, 2, 1)


def test_classify_sextic(capsys):
    code, data = run(capsys, "classify-sextic", "--nu", "9", "--pg", "1",
                     "--q", "0", "--exc", "4,4,4")
    assert code == 0
    assert data["model"] == "K3"
    code, data = run(capsys, "classify-sextic", "--nu", "5", "--pg", "5",
                     "--q", "0")
    assert code == 1 and "error" in data


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_construct_certify_tangent_roundtrip(capsys, tmp_path):
    surf = tmp_path / "ten.json"
    code, data = run(capsys, "construct", "--family", "sextic-ten-gf31",
                     "-o", str(surf))
    assert code == 0 and data is None
    X = Surface.load(surf)
    assert X.degree == 6 and len(X.points) == 10

    code, report = run(capsys, "certify", "-i", str(surf))
    assert code == 0
    assert report["verdict"] == "certified-exact"
    assert report["expected_degree"] == 80

    code, data = run(capsys, "tangent-dim", "-i", str(surf))
    assert code == 0
    assert data == {"schema_version": 1, "dimension": 18, "points": 10}


def test_construct_with_params(capsys, tmp_path):
    code, data = run(capsys, "construct", "--family", "k3-228",
                     "--field", "GF:31", "--params", "lambda=3")
    assert code == 0
    assert data["metadata"]["family"] == "k3-228"
    assert len(data["points"]) == 9
    code, data = run(capsys, "construct", "--family", "k3-228",
                     "--field", "GF:31", "--params", "lambda=0")
    assert code == 1 and "error" in data


def test_construct_reciprocal_family(capsys, tmp_path):
    base = tmp_path / "base.json"
    code, _ = run(capsys, "construct", "--family", "k3-444",
                  "--field", "GF:29",
                  "--params", "a1=-1,a2=-1,a3=-1,b1=0,b2=0,b3=0",
                  "-o", str(base))
    assert code == 0
    code, data = run(capsys, "construct", "--family", "k3-246",
                     "--base", str(base), "--fundamental", "0,1,3,4")
    assert code == 0
    assert data["metadata"]["exc_degrees"] == [2, 4, 6]
    assert len(data["points"]) == 9


def test_construct_quintic_from_points_file(capsys, tmp_path):
    ptsfile = tmp_path / "points.json"
    save_points(ptsfile, generic_points(F31, 3, seed=0))
    code, data = run(capsys, "construct", "--family", "quintic-nu",
                     "--field", "GF:31", "--points", str(ptsfile))
    assert code == 0
    assert data["degree"] == 5
    assert len(data["points"]) == 3


def test_cremona(capsys, tmp_path):
    surf = tmp_path / "ten.json"
    run(capsys, "construct", "--family", "sextic-ten-gf31", "-o", str(surf))
    code, data = run(capsys, "cremona", "-i", str(surf))
    assert code == 0
    assert data["vertex_multiplicities"] == [0, 0, 0, 0]
    assert data["degree"] == 18


def test_dianode_and_steiner(capsys):
    code, data = run(capsys, "dianode", "--field", "QQ",
                     "--quartic", "x^4+y^4+z^4+w^4",
                     "--quadric", "x^2", "--quadric", "y^2",
                     "--quadric", "z*w")
    assert code == 0
    assert data["degree"] == 6
    code, data = run(capsys, "steiner", "--field", "QQ",
                     "--quadric", "x^2", "--quadric", "y^2",
                     "--quadric", "z*w")
    assert code == 0
    assert len(data["minors"]) == 4
    code, data = run(capsys, "dianode", "--field", "QQ",
                     "--quartic", "x^4", "--quadric", "x^2")
    assert code == 1 and "error" in data


def test_linear_system(capsys, tmp_path):
    ptsfile = tmp_path / "points.json"
    save_points(ptsfile, generic_points(F31, 7, seed=7))
    code, data = run(capsys, "linear-system", "--field", "GF:31",
                     "--degree", "2", "--points", str(ptsfile))
    assert code == 0
    assert data["dimension"] == 3
    assert len(data["basis"]) == 3


def test_missing_file_is_a_domain_error(capsys):
    code, data = run(capsys, "certify", "-i", "/nonexistent/surface.json")
    assert code == 1 and data["error"].startswith("FileNotFoundError")
