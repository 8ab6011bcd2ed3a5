"""Smoke test for the pycosetlab extension module."""

import json
from fractions import Fraction

import pycosetlab as cl


def main():
    a2 = cl.RootSystem("A", 2)
    assert a2.num_positive == 3 and a2.dual_coxeter == 3
    assert a2.positive_roots() == [[1, 0], [0, 1], [1, 1]]
    assert a2.normalized_form([1, 0], [0, 1]) == Fraction(-1)
    assert all(a2.check_hvee_identity(a2.fundamental_weight(i)) for i in range(2))

    lv = cl.Level("A", 1, 1)
    assert lv.g() == [[Fraction(3)]]
    assert lv.g_star() == [[Fraction(1, 3)]]
    assert lv.big_g() == [[Fraction(-2, 3)]]
    assert lv.central_charges() == (Fraction(1), Fraction(1))

    b2 = cl.Level("B", 2, Fraction(5, 2))
    g, gs = b2.g(), b2.g_star()
    n = len(g)
    for i in range(n):
        for j in range(n):
            assert sum(g[i][m] * gs[m][j] for m in range(n)) == (1 if i == j else 0)
    assert b2.verify_ope("jalpha")["passed"]

    a2k1 = cl.Level("A", 2, "1")
    jstar = a2k1.weight_to_sc([1, 0])
    assert a2k1.sc_weight_to_af(jstar) == [1, 0]
    bad = a2k1.converse_check([0, 0, Fraction(1, 2)])
    assert not bad["hypothesis_holds"] and bad["violations"] == [([1, 1], Fraction(1, 2))]
    assert a2k1.verify_ope("fst")["passed"]

    assert cl.discriminant_group("qsc-dual", "A", 1) == [3]
    assert cl.discriminant_group("qsc-dual", "A", 2) == [4, 4]
    assert cl.lattice_gram("e-minus", "A", 1, 1) == [[-6]]
    assert len(cl.enumerate_by_norm([[1]], 1)) == 3

    eta = cl.eta_power(1, 8)
    assert [c for _, c in eta] == [1, -1, -1, 1, 1]
    assert eta[0][0] == Fraction(1, 24)

    seed = {
        "type": "A", "rank": 1, "level": "1", "base_weight": ["0"],
        "strings": [
            {"weight_offset": ["0"], "terms": [{"exp": "0", "coef": "1"}], "min_exp": "0"},
            {"weight_offset": ["1"], "terms": [{"exp": "1/2", "coef": "-2"}], "min_exp": "1/2"},
        ],
    }
    ch = cl.Character.from_json(json.dumps(seed))
    assert ch.num_weights == 2
    assert ch.roundtrip(10)
    assert ch.cflemma([1], 6)
    sc = json.loads(ch.fermionize(4))
    assert sc["side"] == "sc" and len(sc["strings"]) == 2

    try:
        cl.Level("A", 1, 0)
    except ValueError as e:
        assert "level" in str(e)
    else:
        raise AssertionError("k = 0 accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
