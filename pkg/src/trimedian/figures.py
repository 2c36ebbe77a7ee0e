"""Data behind the eleven named figures, written as CSV + SVG pairs.

Static figures (1-4) hold a few triangles; orbit figures (5-11) hold sampled
families.  Figures with several panels write one file pair per panel,
suffixed ``_a``, ``_b``, ...
"""

from __future__ import annotations

from pathlib import Path

from .cevian import PQPair, apply, from_pq
from .literals import parse_scalar
from .median import MedianLabel, median_op_pq
from .orbit import (
    DEFAULT_BASE,
    figure8_family,
    median_figure8_family,
    median_smn_family,
    sample,
    smn_family,
    steiner_family,
)
from .export import orbit_csv, orbit_svg, triangles_csv, triangles_svg
from .triangle import Triangle

FIG1_BASE = Triangle(0, 1, parse_scalar("(7+8i)/10"))
FIG1_PQ = PQPair(parse_scalar("4/5"), parse_scalar("(2+4i)/3"))

ROUTH_PANELS = (
    ("00/01", "4/5", "2/3"),
    ("00/02", "2/3", "1/3"),
    ("01/10", "1/5", "1/3"),
    ("02/21", "2/3", "4/5"),
    ("02/20", "1/3", "2/3"),
    ("01/12", "1/3", "1/5"),
)

# figure name -> list of (m, n) panels of S[e^{2 pi i m t}, e^{2 pi i n t}]
SMN_PANELS = {
    "fig6": ((1, 2), (1, -4)),
    "fig7": ((8, 1), (-7, 1)),
    "fig8": ((7, 2), (-5, 2)),
}

FIGURE_NAMES = tuple(f"fig{k}" for k in range(1, 12))
STEINER_STEPS = 17


def _median_panel(label: str):
    cevian = apply(from_pq(FIG1_PQ), FIG1_BASE)
    median = apply(median_op_pq(MedianLabel.parse(label), FIG1_PQ), FIG1_BASE)
    return [
        [("base", FIG1_BASE), ("cevian", cevian)],
        [("base", FIG1_BASE), ("median", median)],
    ]


def _routh_panels():
    panels = []
    for label, p, q in ROUTH_PANELS:
        pq = PQPair(parse_scalar(p), parse_scalar(q))
        m_op = median_op_pq(MedianLabel.parse(label), pq)
        if m_op != from_pq(pq):
            raise AssertionError(f"M^{label}_{p},{q} differs from S_{p},{q}")
        panels.append([("base", DEFAULT_BASE), ("median", apply(m_op, DEFAULT_BASE))])
    return panels


def figure_data(name: str, samples: int = 300):
    """("static", [panel of (name, Triangle)]) or ("orbit", [(family, samples)])."""
    if name == "fig1":
        return "static", _median_panel("00/01")
    if name == "fig2":
        return "static", _median_panel("01/01")
    if name == "fig3":
        return "static", _median_panel("02/01")
    if name == "fig4":
        return "static", _routh_panels()
    if name == "fig5":
        return "orbit", [(steiner_family(), STEINER_STEPS)]
    if name in SMN_PANELS:
        return "orbit", [(smn_family(m, n), samples) for m, n in SMN_PANELS[name]]
    if name == "fig9":
        return "orbit", [(median_smn_family(0, -5, 2), samples)]
    if name == "fig10":
        return "orbit", [(figure8_family(), samples)]
    if name == "fig11":
        return "orbit", [(median_figure8_family(), samples)]
    raise KeyError(f"unknown figure {name!r}; choose from {', '.join(FIGURE_NAMES)}")


def render_figure(name: str, samples: int = 300) -> dict:
    """{file name: text} for every panel of the figure."""
    kind, panels = figure_data(name, samples)
    files = {}
    for idx, panel in enumerate(panels):
        stem = name if len(panels) == 1 else f"{name}_{'abcdef'[idx]}"
        if kind == "static":
            files[f"{stem}.csv"] = triangles_csv(panel)
            files[f"{stem}.svg"] = triangles_svg(panel)
        else:
            family, n = panel
            pts = sample(family, n)
            files[f"{stem}.csv"] = orbit_csv(pts)
            files[f"{stem}.svg"] = orbit_svg(pts, base=family.base)
    return files


def write_figure(name: str, out_dir, samples: int = 300) -> list:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for fname, text in render_figure(name, samples).items():
        path = out / fname
        path.write_text(text, encoding="utf-8", newline="\n")
        written.append(path)
    return written
