import pcm
import pytest


def test_worked_count():
    assert pcm.cm_p(2, 1, -2, 1, 5) == 2
    assert pcm.cm_inf(2, 1, -2, 1, 5) == 2


def test_cli_document():
    code, doc = pcm.cli("count", "--D", "2", "--d", "-2", "--p", "5")
    assert code == 0
    assert doc["result"]["cm_p"] == "2"
    code, doc = pcm.cli("count", "--D", "2", "--d", "-1", "--p", "5")
    assert code == 2
    assert doc["error"]["kind"] == "validation"


def test_family_points():
    code, doc = pcm.cli("family2p", "--p", "5", "--d", "-2", "--kmax", "0")
    assert code == 0
    shown = {pt["display"] for t in doc["result"]["triples"] for pt in t["points"]}
    assert {"1 + i√-2", "1 - i√-2", "-1 + i√-2", "-1 - i√-2"} <= shown


def test_arithmetic():
    assert pcm.class_number(-23) == 3
    assert pcm.legendre(-1, 5) == 1
    assert pcm.hilbert_symbol("-1", "-1", 2) == -1
    assert pcm.hilbert_symbol("-1", "-1") == -1
    val, digits, text = pcm.hensel_sqrt_digits("-1", 5, 3)
    assert (val, digits) == (0, [2, 1, 2])
    assert text == "2 + 1·5 + 2·5² + O(5³)"


def test_big_integers_cross_the_boundary():
    p = 2**61 - 1
    assert pcm.legendre(-1, p) == -1  # p = 3 mod 4
    assert pcm.legendre(3, p) == pcm.legendre(3 + p, p)


def test_errors():
    assert pcm.classify(["1", "1", "0", "1"], 5) == "parabolic"
    with pytest.raises(ValueError):
        pcm.classify(["1", "2", "2", "4"], 5)
    with pytest.raises(ValueError):
        pcm.hensel_sqrt_digits("2", 5, 4)
