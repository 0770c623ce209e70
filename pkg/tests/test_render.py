import xml.etree.ElementTree as ET

import pytest

from toricmosaics.generators import full_braid
from toricmosaics.mosaic import decode
from toricmosaics.render import RenderOptions, render, render_ascii, render_svg


def test_ascii_block_shape():
    out = render_ascii(decode("7"))
    lines = out.splitlines()
    assert len(lines) == 3
    assert all(len(line) == 3 for line in lines)
    out = render_ascii(decode("7779"))
    lines = out.splitlines()
    assert len(lines) == 6
    assert all(len(line) == 6 for line in lines)


def test_ascii_fixed_glyphs():
    a = render_ascii(decode("9"))
    b = render_ascii(decode("9"))
    assert a == b
    assert render_ascii(decode("9")) != render_ascii(decode("a"))


def test_svg_well_formed():
    doc = render_svg(decode("7779"))
    root = ET.fromstring(doc)
    assert root.tag.endswith("svg")


def test_svg_crossing_gap_markers():
    m, q = full_braid(3)
    doc = render_svg(m)
    assert doc.count('class="gap"') == 11  # one per visible crossing


def test_svg_hidden_highlight():
    doc = render_svg(decode("9"), RenderOptions(format="svg", highlight_hidden=True))
    assert 'class="closure"' in doc
    ET.fromstring(doc)


def test_options_validation():
    with pytest.raises(ValueError):
        RenderOptions(format="png")
    with pytest.raises(ValueError):
        RenderOptions(cell_size=0)


def test_render_dispatch():
    assert render(decode("7")) == render_ascii(decode("7"))
    assert render(decode("7"), RenderOptions(format="svg")) == render_svg(decode("7"))
