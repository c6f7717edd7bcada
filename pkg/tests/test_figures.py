from wulab.drawing import CycleSpec, validate_almost_embedding
from wulab.figures import fig_8_2, fig_8_4, fig_8_5, fig_8_6_left, fig_8_6_right
from wulab.invariants import (
    cyclic_wu,
    k4_profile,
    triodic_wu,
    winding_of_vertex,
)


def test_fig_8_2_winding_three():
    d = fig_8_2()
    assert validate_almost_embedding(d).ok
    assert winding_of_vertex(d, CycleSpec(["1", "2", "3"]), "4") == 3


def test_fig_8_4_alternating_sum_three():
    d = fig_8_4()
    assert validate_almost_embedding(d).ok
    profile = k4_profile(d)
    assert sum((-1) ** j * w for j, w in enumerate(profile, start=1)) == 3
    assert sum(profile) % 2 == 1  # parity statement still holds


def test_fig_8_5_winding_three():
    d = fig_8_5()
    assert validate_almost_embedding(d).ok
    assert winding_of_vertex(d, CycleSpec(["1", "2", "3"]), "5") == 3
    w4 = winding_of_vertex(d, CycleSpec(["1", "2", "3"]), "4")
    assert abs(w4 - 3) == 1


def test_fig_8_6_wu_numbers_are_five():
    assert triodic_wu(fig_8_6_left()) == 5
    assert cyclic_wu(fig_8_6_right()) == 5
