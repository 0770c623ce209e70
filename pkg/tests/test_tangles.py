import pytest

from toricmosaics.diagram import DiagramError
from toricmosaics.invariants import (
    alexander,
    alexander_determinant,
    alexander_torus,
    homfly,
    torus_knot_diagram,
)
from toricmosaics.tangles import (
    continued_fraction,
    montesinos_link,
    pretzel_link,
    rational_link,
)


def test_continued_fraction_odd_length():
    for p, q in [(5, 2), (7, 3), (13, 5), (31, 13), (3, 1)]:
        terms = continued_fraction(p, q)
        assert len(terms) % 2 == 1
        # rebuild the fraction
        num, den = terms[-1], 1
        for a in reversed(terms[:-1]):
            num, den = a * num + den, num
        assert (num, den) == (p, q)


def test_rational_links_small_family():
    assert alexander(rational_link(3, 1)) == alexander_torus(2, 3)
    assert alexander(rational_link(5, 1)) == alexander_torus(2, 5)
    assert alexander(rational_link(7, 1)) == alexander_torus(2, 7)


def test_rational_determinants():
    for p, q in [(5, 2), (13, 5), (21, 8), (29, 12), (65, 19), (75, 29)]:
        d = rational_link(p, q)
        assert alexander_determinant(d) == p  # also asserted inside the builder


def test_rational_two_component_case():
    d = rational_link(4, 1)  # even fraction: the (2,4) torus link
    assert d.component_count == 2


def test_figure_eight_amphichiral():
    d = rational_link(5, 2)
    assert homfly(d) == homfly(d.mirror())


def test_pretzel_determinant_identity():
    for twists in [(3, 3, 2), (3, -3, 2), (3, 3, 3), (3, 3, -3), (-2, 3, 5)]:
        d = pretzel_link(*twists)  # determinant identity asserted inside
        assert d.component_count == 1


def test_pretzel_minus2_3_5_is_torus():
    d = pretzel_link(-2, 3, 5)
    ref = homfly(torus_knot_diagram(3, 5))
    got = homfly(d)
    assert got == ref or got == ref.flip_v()


def test_montesinos_with_extra_twists():
    d = montesinos_link(1, [(3, 1), (3, 1), (2, 1)])
    assert d.component_count == 1
    assert alexander_determinant(d) == 39


def test_bad_inputs():
    with pytest.raises(DiagramError):
        continued_fraction(5, 7)
    with pytest.raises(DiagramError):
        pretzel_link(3, 0, 2)
    with pytest.raises(DiagramError):
        montesinos_link(0, [])
