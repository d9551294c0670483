import re
import xml.etree.ElementTree as ET

import pytest

from oneplanar import construct as cs
from oneplanar.graph import complete
from oneplanar.plotting import layout, plot_edge_window, rotation_matches, svg_export, tutte_layout

from conftest import plane


def crossing_ids(path):
    root = ET.parse(path).getroot()
    return {el.get("id") for el in root.iter() if re.fullmatch(r"crossing-\d+", el.get("id") or "")}


@pytest.mark.parametrize("make", [cs.gen_k2222, lambda: cs.gen_odd_pair(14), lambda: cs.gen_pdw_optimal(6)])
def test_layout_preserves_rotations(make):
    d = make()
    pos, ok = layout(d)
    assert ok and pos.shape == (d.total, 2)
    assert rotation_matches(d.rs, pos)


def test_k2222_svg_marks(tmp_path, k2222):
    path = svg_export(k2222, tmp_path / "k.svg")
    assert crossing_ids(path) == {f"crossing-{c}" for c in k2222.fakes}
    assert len(crossing_ids(path)) == 6


def test_odd_pair_svg_marks(tmp_path, odd_pair):
    assert len(crossing_ids(svg_export(odd_pair, tmp_path / "o.svg"))) == 12


def test_plane_drawing_has_no_marks(tmp_path):
    assert crossing_ids(svg_export(plane(complete(4)), tmp_path / "p.svg")) == set()


def test_tutte_layout_places_outer_face_on_unit_circle(k2222):
    pos = tutte_layout(k2222.rs)
    radii = (pos ** 2).sum(axis=1)
    assert radii.max() == pytest.approx(1.0)


def test_edge_window_plot(tmp_path):
    path = plot_edge_window([(14, 47, 2), (20, 70, 3), (8, 24, 1)], tmp_path / "w.png")
    assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
