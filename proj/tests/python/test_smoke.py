import pytest

import deligne


def test_golden_diagrams():
    assert deligne.diagram([[], []], 0, "d") == "xxxxxoooooo"
    assert deligne.diagram("[[2],[2]]", 1, "d") == "xxxx>o<>ooo"
    assert deligne.diagram([[2], [2]], 1) == "xxx>x<o>ooo"
    assert deligne.diagram([[2], [1, 1]], 1) == "xxxx>o<>ooo"


def test_diagram_json():
    assert deligne.diagram_json([[], []], 0) == {
        "t": 0,
        "family": "dprime",
        "window": [-1, 0],
        "symbols": "xo",
    }


def test_multiplicities():
    assert deligne.mult([[1], [1]], [[], []], 0) == 1
    assert deligne.mult([[], []], [[1], [1]], 0) == 0
    assert deligne.mult([[1], [1]], [[], []], "generic") == 0
    assert deligne.mult([[2, 1], [2, 1]], [[], []], 0) == 0


def test_caps():
    assert (0, 1) in deligne.caps([[1], [1]], 0)
    assert (-2, -1) in deligne.caps([[1], [1]], 0)


def test_matrices():
    d = deligne.matrix("D", 0, 2)
    assert ("[[1],[1]]", "[[],[]]", 1) in d
    assert ("[[1],[1]]", "[[],[]]", -1) in deligne.matrix("Dinv", 0, 2)
    assert all(v > 0 for _, _, v in deligne.matrix("A", 0, 3, a=0))
    assert deligne.matrix("atilde", "generic", 2, a="int:1") == deligne.matrix("A", "generic", 2, a="int:1")
    with pytest.raises(ValueError):
        deligne.matrix("atilde", "generic", 2, a=0)
    with pytest.raises(ValueError):
        deligne.matrix("A", 0, 2)


def test_hom_and_eigen():
    assert deligne.hom_dim([[1], [1]], [[1], [1]], 0) == 2
    assert deligne.hom_dim([[], []], [[1], [1]], 0) == 1
    assert deligne.eigenvalue([[], []], [[1], []]) == {"kind": "int", "c": 0}
    assert deligne.eigenvalue([[], [1]], [[], []]) == {"kind": "shifted", "c": 0}
    assert deligne.eigenvalue([[], []], [[1], [1]]) is None
    assert deligne.f_on_standard([[1], [1]], 0, 0) == (None, "[[1],[]]")


def test_lr_and_fock():
    assert deligne.lr_coeff([3, 2, 1], [2, 1], [2, 1]) == 2
    assert deligne.fock_apply("f", 0, []) == {"[1]": 1}
    assert deligne.fock_apply("e", 5, [1]) == {}
    assert deligne.tensor_apply("f", 0, 0, [[1], [1]]) == {"[[1],[]]": 1}


def test_parse_errors():
    with pytest.raises(deligne.ParseError):
        deligne.mult("[[1],[x]]", "[[],[]]", 0)
    with pytest.raises(ValueError):
        deligne.diagram([[1, 2], []], 0)


def test_verify_small():
    results = deligne.verify(t_lo=-1, t_hi=1, max_size=3, seed=7)
    assert results
    assert all(r["passed"] for r in results)
    assert {r["module"] for r in results} >= {"partitions", "caps", "grothendieck"}
