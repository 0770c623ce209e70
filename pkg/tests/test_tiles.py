from toricmosaics.tiles import (
    BITS,
    CROSSING_KINDS,
    EXIT_FACE,
    LEFT,
    TOP,
    RIGHT,
    BOTTOM,
    PAIRINGS,
    PROFILES,
    validate_kind,
)

import pytest


def test_connection_bit_table():
    expected = {
        0: (0, 0, 0, 0),
        1: (1, 0, 0, 1),
        2: (0, 0, 1, 1),
        3: (0, 1, 1, 0),
        4: (1, 1, 0, 0),
        5: (1, 0, 1, 0),
        6: (0, 1, 0, 1),
        7: (1, 1, 1, 1),
        8: (1, 1, 1, 1),
        9: (1, 1, 1, 1),
        10: (1, 1, 1, 1),
    }
    for kind, bits in expected.items():
        assert BITS[kind] == bits


def test_every_tile_has_even_connection_count():
    for profile in PROFILES:
        assert profile.connection_count in (0, 2, 4)


def test_pairings_cover_connection_points():
    for kind in range(11):
        present = {f for pair in PAIRINGS[kind] for f in pair}
        bits = BITS[kind]
        assert present == {f for f in (LEFT, TOP, RIGHT, BOTTOM) if bits[f]}


def test_double_arc_pairings():
    assert set(PAIRINGS[7]) == {(TOP, RIGHT), (LEFT, BOTTOM)}
    assert set(PAIRINGS[8]) == {(TOP, LEFT), (BOTTOM, RIGHT)}


def test_crossings_pass_straight_through():
    for kind in CROSSING_KINDS:
        assert EXIT_FACE[kind][LEFT] == RIGHT
        assert EXIT_FACE[kind][TOP] == BOTTOM
    assert PROFILES[9].over_strand == "vertical"
    assert PROFILES[10].over_strand == "horizontal"


def test_exit_face_is_involutive():
    for kind in range(11):
        for face, out in EXIT_FACE[kind].items():
            assert EXIT_FACE[kind][out] == face


def test_validate_kind():
    assert validate_kind(10) == 10
    with pytest.raises(ValueError):
        validate_kind(11)
    with pytest.raises(ValueError):
        validate_kind(-1)
