import pytest
from hypothesis import given, strategies as st

from triplepoints.invariants import (InvariantTable, smooth_invariants,
                                     resolved_invariants, alpha_from_genus,
                                     plurigenus, minus_one_multiplicity,
                                     geometric_genus, SEXTIC_CLASSES,
                                     sextic_classify)


def test_smooth_quintic():
    t = smooth_invariants(5)
    assert (t.c1sq, t.c2, t.chi, t.p_g, t.q, t.b2, t.h11) == \
        (5, 55, 5, 4, 0, 53, 45)


def test_smooth_sextic():
    t = smooth_invariants(6)
    assert (t.c1sq, t.c2, t.chi, t.p_g, t.b2, t.h11) == \
        (24, 108, 11, 10, 106, 86)


@given(st.integers(1, 15), st.integers(0, 10), st.integers(0, 3))
def test_noether_identity(d, nu, alpha):
    # 12 chi = c1^2 + c2 for every consistent parameter choice
    try:
        t = resolved_invariants(d, nu, alpha)
    except ValueError:
        return
    assert 12 * t.chi == t.c1sq + t.c2
    assert t.b2 == t.h11 + 2 * t.p_g
    assert t.chi == 1 - t.q + t.p_g + (t.chi - 1 + t.q - t.p_g)


def test_resolution_drops():
    s = smooth_invariants(6)
    t = resolved_invariants(6, 4)
    assert s.c1sq - t.c1sq == 12   # 3 per triple point
    assert s.c2 - t.c2 == 36       # 9 per triple point
    assert s.chi - t.chi == 4      # 1 per triple point
    assert s.p_g - t.p_g == 4


def test_resolved_invariants_guards():
    with pytest.raises(ValueError):
        resolved_invariants(6, -1)
    with pytest.raises(ValueError):
        resolved_invariants(5, 5)  # p_g would be -1
    with pytest.raises(ValueError):
        smooth_invariants(0)


def test_alpha_from_genus():
    assert alpha_from_genus(6, 8, 3) == 1
    assert alpha_from_genus(6, 8, 2) == 0
    with pytest.raises(ValueError):
        alpha_from_genus(6, 0, 3)


def test_irregular_row_b2():
    # the irregular nu=8 sextic has b2 = 38, four more than the regular one
    t = resolved_invariants(6, 8, 1)
    assert (t.p_g, t.q, t.b2) == (3, 1, 38)
    t0 = resolved_invariants(6, 8, 0)
    assert (t0.p_g, t0.q, t0.b2) == (2, 0, 34)


def test_plurigenus():
    # K3-like: Ksq + eps = 0 so P_n = chi for all n >= 2
    assert plurigenus(2, 0, 0, 2) == 2
    assert plurigenus(5, 0, 0, 2) == 2
    # general type quintic: Ksq = 5, chi = 5
    assert plurigenus(2, 5, 0, 5) == 10
    assert plurigenus(3, 5, 0, 5) == 20
    with pytest.raises(ValueError):
        plurigenus(1, 5, 0, 5)


def test_minus_one_multiplicity():
    assert minus_one_multiplicity(5, 1) == 2
    assert minus_one_multiplicity(6, 1) == 3
    assert minus_one_multiplicity(6, 2) == 5
    assert minus_one_multiplicity(7, 3) == 10
    with pytest.raises(ValueError):
        minus_one_multiplicity(4, 1)


def test_sextic_table_shape():
    assert len(SEXTIC_CLASSES) == 18
    assert [r.nu for r in SEXTIC_CLASSES] == \
        [0, 1, 2, 3, 4, 5, 5, 6, 6, 7, 7, 8, 8, 8, 8, 9, 9, 10]
    kappas = {r.kappa for r in SEXTIC_CLASSES}
    assert kappas == {2, 1, 0, "-inf"}
    # exactly one rational, one K3, three elliptic
    assert sum(1 for r in SEXTIC_CLASSES if r.model == "rational") == 1
    assert sum(1 for r in SEXTIC_CLASSES if r.model == "K3") == 1
    assert sum(1 for r in SEXTIC_CLASSES if r.model == "elliptic") == 3


def test_sextic_classify_unique_rows():
    r = sextic_classify(10, 0, 0)
    assert r.model == "rational" and r.kappa == "-inf"
    r = sextic_classify(0, 10, 0)
    assert r.c1sq == 24
    r = sextic_classify(8, 3, 1)
    assert r.b2 == 38 and r.model == "elliptic"


def test_sextic_classify_disambiguation():
    # nu=5 rows split on the number of (-1)-curves
    assert sextic_classify(5, 5, 0, exc_degrees=[1]).n_minus_one == 1
    assert sextic_classify(5, 5, 0, exc_degrees=[]).n_minus_one == 0
    with pytest.raises(ValueError):
        sextic_classify(5, 5, 0)
    # nu=9 tie broken by degree sum: 12 means K3
    assert sextic_classify(9, 1, 0, exc_degrees=[4, 4, 4]).model == "K3"
    assert sextic_classify(9, 1, 0, exc_degrees=[1, 1, 1]).model == "elliptic"


def test_sextic_classify_errors():
    with pytest.raises(ValueError):
        sextic_classify(11, 0, 0)
    with pytest.raises(ValueError):
        sextic_classify(3, 0, 0)
    with pytest.raises(ValueError):
        sextic_classify(5, 5, 0, exc_degrees=[1, 1])


def test_geometric_genus_smooth_low_degree():
    from triplepoints.fields import Field
    from triplepoints.surfaces import Surface
    from triplepoints.poly import MultiPoly
    F = Field.QQ()
    X = Surface(MultiPoly.parse("x^4+y^4+z^4+w^4", F))
    assert geometric_genus(X, []) == 0
    X5 = Surface(MultiPoly.parse("x^5+y^5+z^5+w^5", F))
    assert geometric_genus(X5, []) == 4  # full space of linear forms


def test_invariant_table_json_roundtrip():
    t = resolved_invariants(6, 9)
    assert t == InvariantTable(**t.to_json())
    assert t.to_json()["p_g"] == 1
