import pytest

import melonrep


def test_melon_words():
    v = melonrep.representation_number("3,3,3")
    assert v["r"] == 3
    g = melonrep.melon("3,3,3")
    assert melonrep.represents(v["word"], g)
    assert melonrep.uniformity(v["word"]) == 3


def test_p4_word():
    g = melonrep.Graph.parse("c1 c2\nc2 c3\nc3 c4\n")
    w = melonrep.parse_word("c2 c1 c4 c3 c4 c2 c3 c1")
    assert melonrep.represents(w, g)
    assert melonrep.first_mismatch(melonrep.parse_word("c1 c2 c3 c4"), g) is not None


def test_comparability_and_prn():
    assert melonrep.comparability("2,3") is None
    assert melonrep.prn("3,3")["prn"] == 3
    assert melonrep.prn("1,3,3")["prn"] == 2


def test_oracle_agrees():
    assert melonrep.min_uniform_rep(melonrep.melon("2,3"))["k"] == melonrep.representation_number("2,3")["r"]
    assert melonrep.min_perm_rep(melonrep.Graph.parse("C6"), max_k=2) is None


def test_line_graphs():
    assert melonrep.line_rep_number("2,2,2")["r"] == 3
    report = melonrep.analyze("1,2,2,2")
    assert report["schema"] == melonrep.REPORT_SCHEMA
    assert report["line"]["refuter"] == "e_0"
    with pytest.raises(melonrep.MelonrepError):
        melonrep.line_rep_number("1,2,2,2")


def test_errors():
    with pytest.raises(melonrep.MelonrepError):
        melonrep.melon("1,1")
    with pytest.raises(melonrep.MelonrepError):
        melonrep.min_uniform_rep(melonrep.melon("6,6,6"))
