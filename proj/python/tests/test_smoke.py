import json
import os

import pytest

import vca

DATA = os.path.join(os.environ.get("VCA_SOURCE_DIR", os.path.join(os.path.dirname(__file__), "..", "..")), "data")


def figure2():
    return vca.Complex(6, [[1, 2, 6], [2, 3, 4], [4, 5, 6]])


def test_complex_basics():
    c = vca.Complex(3, [[1, 2], [1], [2, 3]])
    assert c.facets == [[1, 2], [2, 3]]
    assert c.dimension == 1
    assert c.is_pure
    assert vca.Complex.parse(c.to_json()) == c
    assert vca.skeleton(figure2(), 0).facets == [[i] for i in range(1, 7)]
    assert vca.restriction(figure2(), [1, 3, 5]) is None


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        vca.Complex(3, [[1, 4]])
    with pytest.raises(vca.InputError):
        vca.decompose_cover(figure2(), [1, 0], 1)


def test_covers():
    villarreal = vca.Complex.parse(open(os.path.join(DATA, "villarreal.json")).read())
    c = [1, 1, 1, 1, 2, 0, 1, 1]
    assert vca.cover_order(villarreal, c) == 2
    assert vca.decompose_cover(villarreal, c, 2) is None
    assert vca.is_standard_graded_b(villarreal)["holds"]

    a, i, b, j = vca.decompose_cover(figure2(), [1, 1, 1, 1, 1, 1], 2)
    assert [x + y for x, y in zip(a, b)] == [1] * 6
    assert i + j >= 2

    gens = vca.indecomposable_covers(figure2(), 3)
    assert sorted({d for _, d in gens}) == [1, 2]
    assert [c for c, d in gens if d == 2] == [[0, 1, 0, 1, 0, 1]]

    eq = vca.equals_ab(figure2(), 3, threads=2)
    assert eq["holds"] and eq["kind"] == "up-to-bound" and eq["witness"] is None


def test_figure3_witness():
    c = vca.Complex(6, [[1, 2, 6], [2, 3, 4], [4, 5, 6], [1, 5]])
    v = vca.is_standard_graded_a(c, vca.default_max_degree(c))
    assert not v["holds"]
    assert v["witness"] == [1, 0, 2, 0, 1, 1]
    assert v["witness_degree"] == 2
    assert len(vca.intersection_graph(c)) == 5


def test_ideals():
    b145 = vca.borel_complex(5, [[1, 4, 5]])
    assert vca.lk_sq(b145, 2) == [[1, 2, 3, 4], [1, 2, 3, 5], [1, 2, 4, 5], [1, 3, 4, 5], [2, 3, 4, 5]]
    edge = vca.Complex(2, [[1, 2]])
    assert sorted(vca.lk(edge, 2)) == sorted(vca.jk(edge, 2))
    report = vca.verify_duality(figure2())
    assert report["violations"] == []
    assert [row[0] for row in report["rows"]] == [1, 2, 3]


def test_borel():
    assert vca.borel_expand(4, [[2, 3, 4]]) == [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]
    assert vca.dual_borel_gens([2, 4]) == [[1, 2], [2, 3, 4]]
    assert vca.skeleton_borel_gens(5, [[1, 4, 5]], 1) == [[4, 5]]
    stated, minimal = vca.cover_generators_principal([1, 4, 5], 2)
    assert stated == [[1, 2, 3, 4], [2, 3, 4, 5]]
    a, r, b = vca.decompose_principal([1, 2], [2, 1], 3)
    assert (a, r, b) == ([1, 1], 2, [1, 0])
    assert vca.has_top_degree_generator([2, 3, 5])
    assert not vca.has_top_degree_generator([1, 3])
    assert vca.is_squarefree_borel(4, [[1, 2, 4], [1, 3, 4]]) is None
    assert vca.is_squarefree_borel(3, [[1]]) == [[1]]


def test_posets_and_graphs():
    assert vca.build_delta_r(2, [(1, 2)], 2).facets == [[1, 3], [1, 4], [2, 4]]
    a, b = vca.decompose_poset_cover(2, [(1, 2)], 2, [1, 1, 1, 1], 2)
    assert a == [1, 1, 0, 0] and b == [0, 0, 1, 1]
    fig1 = vca.Complex(7, [[1, 2, 7], [2, 3], [3, 4], [4, 5, 7], [1, 5, 6]])
    assert any(sorted(v) == [1, 2, 3, 4, 5] for v, _ in vca.special_odd_cycles(fig1))
    assert not vca.is_bipartite(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert vca.is_bipartite(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert vca.cover_ideal_complex(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).facets == [[1, 3], [2, 4]]


def test_cli():
    code, out, err = vca.run_cli(["--json", "borel", "dual", "--gen", "2,4"])
    assert code == 0 and err == ""
    report = json.loads(out)
    assert report["schema"] == "vca-report/1"
    code, _, err = vca.run_cli(["frobnicate"])
    assert code == 2 and err.startswith("error: ")
