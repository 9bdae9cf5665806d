import math

import pytest

import braidlab


def test_spectrum_truncates_at_the_level():
    sp = braidlab.spectrum_at_level(1, 3, 5)
    assert sp["energies"] == [0, 1, 2]
    assert sp["plateau"] == 2
    assert sp["truncation_index"] == 3


def test_generic_spectrum_is_untruncated():
    sp = braidlab.spectrum_generic(0.3 + 1.7j, 5)
    assert sp["energies"] == [0, 1, 2, 3, 4, 5]
    assert sp["plateau"] is None


def test_yang_baxter_is_exact_at_levels():
    for s in range(2, 10):
        assert braidlab.yang_baxter_residual(1, s) == 0.0
    assert braidlab.yang_baxter_residual_generic(1.25 - 0.5j) < 1e-12


def test_braid_order_is_minimal():
    for s in range(2, 8):
        holds, order = braidlab.braid_order(s)
        assert holds and order == s


def test_quantum_group_match():
    res = braidlab.match_spectrum(1, 3, 4)
    assert res["matched"]
    assert res["energies"] == [0, 1, 2]


def test_singular_level_raises():
    with pytest.raises(braidlab.SingularLevelError):
        braidlab.match_spectrum(1, 4, 2)


def test_cross_angle():
    text, radians = braidlab.cross_angle(3)
    assert text == "5/6"
    assert math.isclose(radians, 5 * math.pi / 6)


def test_bracket_closure():
    assert braidlab.heisenberg_closed(1, 3, 2)
    assert braidlab.meta_abelian_mixed(1, 4, 3)
    assert braidlab.gl11_violations() == []
