import jacquet
import pytest

PHI_244 = {"group": "SOodd", "phi": [["1", 2], ["1", 4], ["1", 4]]}
PHI_246 = {"group": "SOodd", "phi": [["1", 2], ["1", 4], ["1", 6]]}


def test_packet_names():
    assert jacquet.packet(PHI_244) == [("pi+(2,4,4)", [1, 1, 1]), ("pi-(2,4,4)", [1, -1, -1])]
    assert len(jacquet.packet(PHI_246)) == 4


def test_jac_first_step():
    doc = dict(PHI_244, eta=[1, 1, 1])
    [(name, terms)] = jacquet.jac(doc, "1/2")
    assert name == "pi+(2,4,4)"
    assert terms == [("1", "pi+(4,4)")]


def test_supercuspidal_member():
    doc = dict(PHI_246, eta=[-1, 1, -1])
    for x in ("1/2", "3/2", "5/2"):
        assert jacquet.jac(doc, [x]) == [("pi[-,+,-](2,4,6)", [])]


def test_jac_pk_degree_zero():
    doc = dict(PHI_244, eta=[1, 1, 1])
    assert jacquet.jac_pk(doc, 0) == [("pi+(2,4,4)", "1 ⊗ pi+(2,4,4)\n")]


def test_adjoint_exponents():
    doc = dict(PHI_246, twisted=[["1", 5, "1/2"]])
    exps, complete = jacquet.zeta_exponents(doc)
    assert complete
    assert exps == {"-1": 1, "0": 3, "1": 13, "2": 10, "3": 12, "4": 5, "5": 3}
    assert not jacquet.is_generic(doc)
    assert jacquet.is_generic(PHI_246)


def test_std_irreducible():
    doc = dict(PHI_246, eta=[-1, 1, -1])
    [(name, verdict, reason, length)] = jacquet.std_irreducible(doc, "5/2")
    assert verdict == "IRREDUCIBLE"
    assert length == 1


def test_errors():
    with pytest.raises(jacquet.InputError):
        jacquet.packet({"group": "SOodd", "phi": [["1", 3]]})
    with pytest.raises(jacquet.NonGenericStandard):
        jacquet.jac_pk(dict(PHI_246, eta=[-1, 1, -1], segments=["1:[5/2,-3/2]"]), 1)


def test_cli_in_process():
    code, out, err = jacquet.run_cli(["--help"])
    assert code == 0
    assert "jac-pk" in out
