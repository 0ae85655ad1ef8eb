"""Smoke tests for the eosplit extension module."""

import pytest

eosplit = pytest.importorskip("eosplit")


def w2_comodule(p=3):
    n = p - 1
    return {
        "prime": p,
        "grading": "cohomological",
        "generators": [{"id": "x0", "degree": 0}, {"id": "x1", "degree": 2 * n}],
        "theta": [{"from": "x0", "to": [["x1", 1]]}],
    }


def test_tensor_rep():
    assert eosplit.tensor_rep(2, 2, 5) == [1, 0, 1, 0, 0]
    assert eosplit.tensor_rep(2, 4, 5) == [0, 0, 1, 0, 1]
    assert eosplit.tensor_rep(3, 3, 5) == eosplit.tensor_rep_brute(3, 3, 5)


def test_tensor_errors():
    with pytest.raises(eosplit.EoError):
        eosplit.tensor_rep(0, 2, 5)


def test_sym_power():
    assert eosplit.sym_power(5, 5, 5) == [1, 0, 0, 0, 25]
    assert eosplit.sym_power(2, 2, 3) == eosplit.sym_power_brute(2, 2, 3) == [0, 0, 1]


def test_aq_check():
    assert eosplit.aq_tensor_square_check(5, 0)
    assert eosplit.aq_tensor_square_check(5, 1)


def test_power_sums():
    assert eosplit.power_sums([0, 1], 5) == [0, 3]


def test_zeta_matrix():
    z = eosplit.zeta_matrix(3, 5)
    assert z == [[1, 4, 0], [0, 1, 4], [0, 0, 1]]


def test_decompose_w2():
    assert eosplit.decompose(w2_comodule()) == [(0, 2)]


def test_split_spectrum():
    result = eosplit.split_spectrum(w2_comodule(), connective=True)
    assert result["rule"] == "TwoNSparse"
    assert result["summands"] == [[0, 2]]


def test_smash_and_sym_splitting():
    assert eosplit.smash_splitting([(0, 2)], [(0, 4)], 5) == [(0, 5), (8, 3)]
    assert eosplit.sym_splitting([(0, 3)], 2, 3) == [(0, 3), (8, 3)]


def test_hfpss_chart_p3():
    chart = eosplit.hfpss_chart(3, 0, 71)
    assert chart["periodicity"] == 72
    dots = {
        (c["stem"], c["filtration"])
        for c in chart["classes"]
        if c["flag"] in ("filled", "open")
    }
    assert dots == {(3, 1), (10, 2), (13, 3), (20, 4), (27, 1), (30, 6), (37, 3), (40, 8)}
    squares = {c["stem"] for c in chart["classes"] if "square" in c["flag"]}
    assert squares == {0, 24, 48}


def test_ahss_chart():
    chart = eosplit.ahss_chart(3, 3, 0, 71)
    sources = {(d["from"][0], d["from"][1]) for d in chart["differentials"]}
    assert (11, 1) in sources  # rule-B source alpha[x_2]


def test_y2p():
    rows = eosplit.y2p_summands(3, 14)
    assert (6, 3, True) in rows


def test_orientability():
    sparse = {
        "prime": 5,
        "grading": "cohomological",
        "generators": [{"id": "a", "degree": 8}, {"id": "b", "degree": 16}],
        "theta": [],
    }
    assert eosplit.orientability(sparse, 0) == "Orientable"
    assert eosplit.orientability(sparse, 2) == "NotOrientable"


def test_chart_render_formats():
    svg = eosplit.chart_render(3, 0, 30, "svg")
    assert svg.startswith("<?xml")
    with pytest.raises(eosplit.EoError):
        eosplit.chart_render(3, 0, 30, "png")


def test_svg_is_well_formed_xml():
    import xml.etree.ElementTree as ET

    root = ET.fromstring(eosplit.chart_render(3, 0, 71, "svg"))
    assert root.tag.endswith("svg")
    shapes = [el for el in root.iter() if el.tag.split("}")[-1] in ("circle", "rect")]
    assert len(shapes) >= 11  # 8 dots + 3 squares + background
