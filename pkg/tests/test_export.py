import json
import xml.etree.ElementTree as ET

from trimedian.export import fmt_num, orbit_csv, orbit_json, orbit_svg, shape_trace_csv, triangles_csv, triangles_svg
from trimedian.orbit import figure8_family, sample, shape_trace, steiner_family
from trimedian.shape import shape
from trimedian.scalar import OMEGA, OMEGA2, ONE
from trimedian.triangle import Triangle

SVG = "{http://www.w3.org/2000/svg}"


def test_fmt_num():
    assert fmt_num(0.1 + 0.2) == "0.3"
    assert fmt_num(-1e-17) == "0"
    assert fmt_num(-0.0) == "0"
    assert fmt_num(2.5e-9) == "2.5e-09"
    assert fmt_num(1 / 3) == "0.333333333333"


def test_orbit_csv_layout():
    pts = sample(steiner_family(), 4)
    lines = orbit_csv(pts).splitlines()
    assert lines[0] == "t,vertex,re,im"
    assert [line.split(",")[:2] for line in lines[1:4]] == [["0", "0"], ["0", "1"], ["0", "2"]]
    assert lines[4].startswith("0.25,0,")


def test_triangles_csv():
    text = triangles_csv([("base", Triangle(0, 1, 2)), ("image", Triangle(ONE, OMEGA, OMEGA2))])
    lines = text.splitlines()
    assert lines[1] == "base,0,0,0"
    assert lines[5] == "image,1,-0.5,0.866025403784"


def test_shape_trace_csv_infinity():
    inf, zero = shape(Triangle(ONE, OMEGA2, OMEGA)), shape(Triangle(ONE, OMEGA, OMEGA2))
    lines = shape_trace_csv([(0.0, inf, inf.cube()), (0.5, zero, zero.cube())]).splitlines()
    assert lines[1:] == ["0,inf,inf", "0.5,0,0"]
    assert shape_trace_csv(shape_trace(sample(steiner_family(), 3)), cubed=False).startswith("t,re,im\n0,")


def test_orbit_json():
    data = json.loads(orbit_json(sample(figure8_family(), 3), {"kind": "Cevian"}))
    assert data["kind"] == "Cevian" and len(data["samples"]) == 3
    assert data["samples"][0]["vertices"][1] == [-1.15470053838, 1.0]


def test_orbit_svg_is_well_formed():
    pts = sample(figure8_family(), 24)
    root = ET.fromstring(orbit_svg(pts, base=figure8_family().base))
    assert root.tag == SVG + "svg"
    polylines = root.findall(SVG + "polyline")
    assert len(polylines) == 3
    assert {p.get("stroke") for p in polylines} == {"#d62728", "#1f77b4", "#2ca02c"}
    # every track is closed: 24 samples plus the first point again
    assert all(len(p.get("points").split()) == 25 for p in polylines)
    assert any(p.get("stroke-dasharray") for p in root.findall(SVG + "polygon"))


def test_triangles_svg_coordinates_fit_viewbox():
    root = ET.fromstring(triangles_svg([("a", Triangle(0, 1, 1j)), ("b", Triangle(2, 3, 2 + 1j))]))
    _, _, w, h = map(float, root.get("viewBox").split())
    for poly in root.findall(SVG + "polygon"):
        for pair in poly.get("points").split():
            x, y = map(float, pair.split(","))
            assert 0 <= x <= w and 0 <= y <= h
