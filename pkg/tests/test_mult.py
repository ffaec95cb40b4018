import itertools
import json

import pytest

from koszulbench import hecke, mult
from koszulbench.laurent import LaurentPoly
from koszulbench.shapes import Partition, enumerate_partitions_in_box


def v_poly(*pairs):
    return LaurentPoly.from_pairs(list(pairs))


def P(*parts):
    return Partition(parts)


def test_space_parsing():
    assert mult.Space.parse("gr(2,4)") == mult.Space.gr(2, 4)
    assert mult.Space.parse("gr:2,4") == mult.Space.gr(2, 4)
    assert mult.Space.parse("flag(3)") == mult.Space.flag(3)
    assert mult.Space.parse("flag:3") == mult.Space.flag(3)
    assert mult.Space.gr(2, 5).render() == "gr(2,5)"
    with pytest.raises(ValueError):
        mult.Space.parse("proj:3")
    with pytest.raises(ValueError):
        mult.Space.gr(3, 3)


def test_space_labels_order():
    labels = mult.Space.gr(2, 4).labels()
    assert labels == [P(), P(1), P(2), P(1, 1), P(2, 1), P(2, 2)]
    flags = mult.Space.flag(3).labels()
    assert flags[0] == (1, 2, 3)
    assert flags[-1] == (3, 2, 1)
    assert [hecke.length(w) for w in flags] == [0, 1, 1, 2, 2, 3]


GR24_ENTRIES = [
    (P(), P(), v_poly((0, 1))),
    ((P(1)), P(), v_poly((-1, 1))),
    (P(2), P(), LaurentPoly.zero()),
    (P(1, 1), P(), LaurentPoly.zero()),
    (P(2, 1), P(), LaurentPoly.zero()),
    (P(2, 2), P(), v_poly((-2, 1))),
    (P(2), P(1), v_poly((-1, 1))),
    (P(1, 1), P(1), v_poly((-1, 1))),
    (P(2, 1), P(1), v_poly((-2, 1))),
    (P(2, 2), P(1), v_poly((-1, 1))),
    (P(2, 1), P(2), v_poly((-1, 1))),
    (P(2, 2), P(2), LaurentPoly.zero()),
    (P(2, 1), P(1, 1), v_poly((-1, 1))),
    (P(2, 2), P(1, 1), LaurentPoly.zero()),
    (P(2, 2), P(2, 1), v_poly((-1, 1))),
]


@pytest.mark.parametrize("lam,mu,want", GR24_ENTRIES)
def test_delta_ic_gr24(lam, mu, want):
    assert mult.delta_ic_gr(2, 4, lam, mu) == want


def test_delta_ic_gr_validates_box():
    with pytest.raises(ValueError):
        mult.delta_ic_gr(2, 4, P(3), P())
    with pytest.raises(ValueError):
        mult.delta_ic_gr(2, 4, P(2, 2), P(1, 1, 1))
    assert mult.delta_ic_gr(2, 4, P(1), P(2)).is_zero()


def test_delta_ic_gr_accepts_tuples():
    assert mult.delta_ic_gr(2, 4, (2, 2), ()) == v_poly((-2, 1))


def test_graded_cartan_gr12_oracle():
    C = mult.graded_cartan(mult.Space.gr(1, 2))
    assert C.labels == [P(), P(1)]
    assert C.entries[0][0] == v_poly((0, 1), (-2, 1))
    assert C.entries[0][1] == v_poly((-1, 1))
    assert C.entries[1][0] == v_poly((-1, 1))
    assert C.entries[1][1] == v_poly((0, 1))


def test_graded_cartan_symmetric_unitriangular():
    for space in (mult.Space.gr(2, 4), mult.Space.gr(2, 5), mult.Space.flag(3)):
        C = mult.graded_cartan(space)
        size = len(C.labels)
        for i in range(size):
            assert C.entries[i][i].coeff(0) == 1
            for e in C.entries[i][i].support():
                assert e <= 0
            for j in range(size):
                assert C.entries[i][j] == C.entries[j][i]
                for e, c in C.entries[i][j].items():
                    assert c > 0


def test_graded_cartan_gr24_spot_values():
    C = mult.graded_cartan(mult.Space.gr(2, 4))
    assert C.entry(P(), P()) == v_poly((0, 1), (-2, 1), (-4, 1))
    assert C.entry(P(1), P(1)) == v_poly((0, 1), (-2, 3), (-4, 1))
    assert C.entry(P(), P(1)) == v_poly((-1, 1), (-3, 1))
    assert C.entry(P(), P(2, 2)) == v_poly((-2, 1))
    assert C.entry(P(2, 2), P(2, 2)) == v_poly((0, 1))


def test_flag3_cartan_identity_entry():
    C = mult.graded_cartan(mult.Space.flag(3))
    e = (1, 2, 3)
    assert C.entry(e, e) == v_poly((0, 1), (-2, 2), (-4, 2), (-6, 1))


def test_delta_ic_flag_socle_and_loewy():
    for n in (2, 3, 4):
        e = tuple(range(1, n + 1))
        for x in itertools.permutations(range(1, n + 1)):
            lx = hecke.length(x)
            bound = LaurentPoly.from_pairs([(-i, 1) for i in range(lx + 1)])
            assert not mult.delta_ic_flag(n, x, e).is_zero()
            for y in itertools.permutations(range(1, n + 1)):
                p = mult.delta_ic_flag(n, x, y)
                assert p.dominates(bound)


def test_delta_ic_flag_values():
    assert mult.delta_ic_flag(3, (3, 2, 1), (1, 2, 3)) == v_poly((-3, 1))
    assert mult.delta_ic_flag(3, (3, 2, 1), (3, 2, 1)) == v_poly((0, 1))
    assert mult.delta_ic_flag(2, (2, 1), (1, 2)) == v_poly((-1, 1))
    assert mult.delta_ic_flag(3, (1, 2, 3), (3, 2, 1)).is_zero()
    got = mult.delta_ic_flag(4, (4, 3, 2, 1), (1, 3, 2, 4))
    assert got == v_poly((-3, 1), (-5, 1))


def test_flag_agrees_with_gr_on_rank_two():
    C_gr = mult.graded_cartan(mult.Space.gr(1, 2))
    C_fl = mult.graded_cartan(mult.Space.flag(2))
    assert [[p for p in row] for row in C_fl.entries] == C_gr.entries


def test_proj_delta_vector():
    vec = mult.proj_delta_vector(mult.Space.gr(2, 4), P())
    assert vec == {P(): v_poly((0, 1)), P(1): v_poly((-1, 1)),
                   P(2, 2): v_poly((-2, 1))}
    top = mult.proj_delta_vector(mult.Space.gr(2, 4), P(2, 2))
    assert top == {P(2, 2): v_poly((0, 1))}


def test_transpose_box_invariance():
    for k, n in [(1, 3), (2, 5)]:
        a = mult.graded_cartan(mult.Space.gr(k, n))
        b = mult.graded_cartan(mult.Space.gr(n - k, n))
        mapping = {lam: lam.transpose() for lam in a.labels}
        for lam in a.labels:
            for mu in a.labels:
                assert a.entry(lam, mu) == b.entry(mapping[lam], mapping[mu])


def test_multiplicity_matrix_json_schema():
    C = mult.graded_cartan(mult.Space.gr(1, 2))
    doc = C.to_json_dict()
    assert doc["space"] == "gr(1,2)"
    assert doc["tag"] == "cartan"
    assert doc["labels"] == [[], [1]]
    assert doc["entries"][0][0] == {"0": 1, "-2": 1}
    json.dumps(doc)
    D = mult.delta_ic_matrix(mult.Space.flag(2))
    fdoc = D.to_json_dict()
    assert fdoc["labels"] == ["12", "21"]
    assert fdoc["tag"] == "delta_ic"


def test_kl_inversion_check_small():
    for k, n in [(1, 2), (1, 3), (2, 4)]:
        report = mult.kl_inversion_check(k, n)
        assert report.ok, (k, n, report.first_failure)
        assert report.render_text() == "pass"
    assert mult.kl_inversion_check(1, 2).to_json_dict() == {
        "space": "gr(1,2)", "ok": True}


def test_kl_inversion_check_preconditions():
    with pytest.raises(ValueError):
        mult.kl_inversion_check(2, 9)
    with pytest.raises(ValueError):
        mult.kl_inversion_check(4, 4)


def test_dyck_matrix_unitriangular():
    space = mult.Space.gr(2, 5)
    D = mult.delta_ic_matrix(space)
    labels = D.labels
    for i, lam in enumerate(labels):
        assert D.entries[i][i] == v_poly((0, 1))
        for j, mu in enumerate(labels):
            if lam.size < mu.size:
                assert D.entries[i][j].is_zero()
