import pytest

import kast


def test_square():
    g = kast.rectangle_grid(2, 2)
    assert (g.vertex_count, g.edge_count, g.hole_count) == (4, 4, 1)
    assert kast.count_matchings(g) == 2
    assert kast.singular_polynomial(g) == [1, -4, 4]
    assert kast.singular_polynomial(g, "zero") == [1, -4, 0]


def test_q_class_on_square():
    g = kast.rectangle_grid(2, 2)
    c = kast.singular_polynomial(g, "q")
    assert c[:2] == [1, -4]
    terms = {t["exp"]: (t["re"], t["im"]) for t in c[2]}
    assert terms == {-1: (1, 0), 0: (2, 0), 1: (1, 0)}


def test_closed_form_matches_general():
    for m, n in [(2, 2), (3, 3), (4, 3), (4, 4)]:
        general = kast.singular_polynomial(kast.rectangle_grid(m, n))
        closed = kast.closed_form_poly(m, n)
        # general keeps the zero roots
        assert general[: len(closed)] == closed
        assert all(c == 0 for c in general[len(closed):])


def test_float_backend():
    g = kast.aztec_diamond(2)
    exact = kast.singular_polynomial(g)
    approx = kast.singular_polynomial(g, backend="float")
    assert approx == pytest.approx(exact, rel=1e-9, abs=1e-6)


def test_verify_reports():
    r = kast.verify(kast.rectangle_grid(2, 3), "coeffs")
    assert r["pass"] and r["identity"] == "coeffs"
    with pytest.raises(kast.LimitError):
        kast.verify(kast.rectangle_grid(6, 5), "coeffs", max_m=20)


def test_parse_and_errors():
    g = kast.from_ascii("###\n#.#\n###\n")
    h = kast.parse_graph(g.to_text())
    assert h.to_text() == g.to_text()
    assert kast.matchings(h) and len(kast.matchings(h)) == 2
    with pytest.raises(kast.InputError):
        kast.from_ascii("##\n#x\n")
    with pytest.raises(ValueError):
        kast.singular_polynomial(g, "nope")


def test_tables():
    results = kast.table_check()
    assert len(results) == 27
    assert all(ok for _, ok in results)
    assert kast.sigma_squared(2, 2, 1, 1) == pytest.approx(2)
