import itertools

import pytest

from toricmosaics.enumerator import EnumOptions, count, enumerate_mosaics
from toricmosaics.mosaic import Mosaic, canonical_code, decode, encode, is_suitably_connected, translate


def codes(opts):
    return [encode(m) for m in enumerate_mosaics(opts)]


def test_single_tile_mosaics():
    assert codes(EnumOptions(1)) == ["0", "5", "6", "7", "8", "9", "a"]
    assert count(EnumOptions(1)) == 7


def test_n2_matches_naive_filter():
    naive = sorted(
        encode(m)
        for tup in itertools.product(range(11), repeat=4)
        for m in [Mosaic.from_rows([tup[:2], tup[2:]])]
        if is_suitably_connected(m, "toric")
    )
    assert codes(EnumOptions(2)) == naive


def test_stream_is_lexicographic_and_contains_trefoil():
    stream = codes(EnumOptions(2))
    assert stream == sorted(stream)
    assert "7779" in stream


def test_every_emitted_mosaic_is_suitably_connected():
    for m in enumerate_mosaics(EnumOptions(2)):
        assert is_suitably_connected(m, "toric")


def test_prefix_partition():
    total = count(EnumOptions(2))
    parts = [count(EnumOptions(2, prefix=(k,))) for k in range(11)]
    assert sum(parts) == total
    merged = sorted(
        c for k in range(11) for c in codes(EnumOptions(2, prefix=(k,)))
    )
    assert merged == codes(EnumOptions(2))


def test_symmetry_reduction():
    reduced = codes(EnumOptions(2, symmetry_reduce=True))
    assert "7779" in reduced and "9777" not in reduced
    for c in reduced:
        assert canonical_code(decode(c)) == c
    expanded = set()
    for c in reduced:
        m = decode(c)
        for r in range(2):
            for s in range(2):
                expanded.add(encode(translate(m, r, s)))
    assert expanded == set(codes(EnumOptions(2)))


def test_prefix_validation():
    with pytest.raises(ValueError):
        EnumOptions(2, prefix=(1, 2, 3))
    with pytest.raises(ValueError):
        EnumOptions(0)
