import math
import xml.etree.ElementTree as ET

import pytest

from gosset.project import ORTHOGONAL, CircleSpectrum, circle_spectrum, project_many
from gosset.render import render_spectrum

NS = "{http://www.w3.org/2000/svg}"


def e8_orthogonal_spectrum(e8, e8_plane):
    return circle_spectrum(project_many(e8_plane, e8.roots, ORTHOGONAL), mode=ORTHOGONAL)


def groups_of(doc):
    root = ET.fromstring(doc)
    return root, {g.get("id"): g for g in root.findall(f"{NS}g")}


def test_e8_document_counts(e8, e8_plane):
    cs = e8_orthogonal_spectrum(e8, e8_plane)
    doc = render_spectrum(cs, size=640)
    root, groups = groups_of(doc)
    assert root.tag == f"{NS}svg"
    assert len(groups["circles"].findall(f"{NS}circle")) == 8
    assert len(groups["points"].findall(f"{NS}circle")) == 240


def test_h4_document_counts(h4, h4_plane):
    cs = circle_spectrum(project_many(h4_plane, h4.roots, ORTHOGONAL), mode=ORTHOGONAL)
    doc = render_spectrum(cs, size=400)
    _, groups = groups_of(doc)
    assert len(groups["circles"].findall(f"{NS}circle")) == 4
    assert len(groups["points"].findall(f"{NS}circle")) == 120


def test_empty_spectrum_renders_axes_only():
    doc = render_spectrum(None, size=200)
    _, groups = groups_of(doc)
    assert len(groups["axes"].findall(f"{NS}line")) == 2
    assert len(groups["circles"]) == 0
    assert len(groups["points"]) == 0


def test_radius_recovery_within_half_pixel(e8, e8_plane):
    size = 640
    cs = e8_orthogonal_spectrum(e8, e8_plane)
    doc = render_spectrum(cs, size=size)
    _, groups = groups_of(doc)
    rmax = max(c.radius for c in cs.circles)
    scale = (size / 2.0) / (1.1 * rmax)
    rendered = sorted(float(c.get("r")) for c in groups["circles"].findall(f"{NS}circle"))
    for px, circle in zip(rendered, cs.circles):
        assert abs(px - scale * circle.radius) < 0.5


def test_point_positions_recoverable(e8, e8_plane):
    size = 512
    cs = e8_orthogonal_spectrum(e8, e8_plane)
    doc = render_spectrum(cs, size=size)
    _, groups = groups_of(doc)
    rmax = max(c.radius for c in cs.circles)
    scale = (size / 2.0) / (1.1 * rmax)
    disks = groups["points"].findall(f"{NS}circle")
    points = [p for c in cs.circles for p in c.members]
    assert len(disks) == len(points)
    for d, p in zip(disks, points):
        x = (float(d.get("cx")) - size / 2.0) / scale
        y = (size / 2.0 - float(d.get("cy"))) / scale  # y axis is flipped
        assert math.hypot(x - p.x, y - p.y) < 0.5 / scale


def test_labels_opt_in(e8, e8_plane):
    cs = e8_orthogonal_spectrum(e8, e8_plane)
    plain = render_spectrum(cs)
    _, groups = groups_of(plain)
    assert "labels" not in groups
    labelled = render_spectrum(cs, labels=True)
    _, groups = groups_of(labelled)
    assert len(groups["labels"].findall(f"{NS}text")) == 8


def test_deterministic_output(e8, e8_plane):
    cs = e8_orthogonal_spectrum(e8, e8_plane)
    assert render_spectrum(cs) == render_spectrum(cs)


def test_size_floor():
    with pytest.raises(ValueError):
        render_spectrum(None, size=32)


def test_empty_circle_tuple_same_as_none():
    cs = CircleSpectrum(circles=(), mode=ORTHOGONAL)
    doc = render_spectrum(cs)
    _, groups = groups_of(doc)
    assert len(groups["circles"]) == 0
