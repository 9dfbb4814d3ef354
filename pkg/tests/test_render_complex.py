import pytest

from render_complex import highlight_cycles, render_svg, write_svg


def test_svg_has_one_element_per_simplex(fig2):
    svg = render_svg(fig2)
    assert svg.lstrip().startswith("<?xml")
    assert svg.count('id="edge-') == len(fig2.edges)
    assert svg.count('id="triangle-') == len(fig2.triangles)
    assert 'id="vertices"' in svg
    assert 'id="highlight-' not in svg


def test_hole_highlight(fig2):
    svg = render_svg(fig2, highlight_cycles(fig2, "holes"))
    for eid in (3, 6, 7):
        assert f'id="highlight-0-hole-{eid}"' in svg
    assert svg.count('id="highlight-') == 3


def test_highlight_modes(fig2, tri):
    assert [tag for _, tag in highlight_cycles(fig2, "h1")] == ["h1"]
    assert [tag for _, tag in highlight_cycles(fig2, "all")] == ["h1", "hole", "contour"]
    assert highlight_cycles(tri, "holes") == []
    with pytest.raises(ValueError):
        highlight_cycles(fig2, "everything")


def test_render_is_deterministic(twohole):
    marks = highlight_cycles(twohole, "all")
    assert render_svg(twohole, marks) == render_svg(twohole, marks)


def test_write_svg(tmp_path, tri):
    path = write_svg(str(tmp_path / "svg" / "tri.svg"), render_svg(tri))
    with open(path, encoding="utf-8") as f:
        assert 'id="triangle-1"' in f.read()
