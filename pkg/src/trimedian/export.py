"""Deterministic CSV, SVG and JSON writers for triangles and orbits."""

from __future__ import annotations

import json

VERTEX_COLORS = ("#d62728", "#1f77b4", "#2ca02c")
SNAPSHOT_COLOR = "#555555"
BASE_COLOR = "#999999"
MARGIN = 0.05
ZERO_SNAP = 1e-12


def fmt_num(x: float) -> str:
    """12 significant digits; values below 1e-12 in magnitude (rounding noise) print as 0."""
    if abs(x) < ZERO_SNAP:
        return "0"
    text = f"{x:.12g}"
    return "0" if text == "-0" else text


def _c(z) -> complex:
    return complex(z)


def orbit_csv(samples) -> str:
    lines = ["t,vertex,re,im"]
    for s in samples:
        for k, v in enumerate(s.triple):
            z = _c(v)
            lines.append(f"{fmt_num(s.t)},{k},{fmt_num(z.real)},{fmt_num(z.imag)}")
    return "\n".join(lines) + "\n"


def triangles_csv(named) -> str:
    """``named`` is a sequence of (name, Triangle)."""
    lines = ["triangle,vertex,re,im"]
    for name, d in named:
        for k, v in enumerate(d):
            z = _c(v)
            lines.append(f"{name},{k},{fmt_num(z.real)},{fmt_num(z.imag)}")
    return "\n".join(lines) + "\n"


def shape_trace_csv(trace, cubed: bool = True) -> str:
    """t, Re, Im of psi^3 (or psi); the point at infinity prints as inf."""
    lines = ["t,re,im"]
    for t, psi, psi3 in trace:
        p = psi3 if cubed else psi
        v = p.value()
        if v is None:
            lines.append(f"{fmt_num(t)},inf,inf")
        else:
            z = _c(v)
            lines.append(f"{fmt_num(t)},{fmt_num(z.real)},{fmt_num(z.imag)}")
    return "\n".join(lines) + "\n"


def orbit_json(samples, extra=None) -> str:
    data = dict(extra or {})
    data["samples"] = [
        {"t": float(fmt_num(s.t)), "vertices": [[float(fmt_num(_c(v).real)), float(fmt_num(_c(v).imag))] for v in s.triple]}
        for s in samples
    ]
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


# -- SVG ----------------------------------------------------------------------


class _Canvas:
    """Maps the plane to SVG coordinates with y flipped and a 5% margin."""

    def __init__(self, points):
        xs = [z.real for z in points]
        ys = [z.imag for z in points]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        span = max(x1 - x0, y1 - y0, 1e-9)
        pad = MARGIN * span
        self.x0, self.y1 = x0 - pad, y1 + pad
        self.width = (x1 - x0) + 2 * pad
        self.height = (y1 - y0) + 2 * pad
        self.stroke = span / 250

    def pt(self, z) -> str:
        z = _c(z)
        return f"{fmt_num(z.real - self.x0)},{fmt_num(self.y1 - z.imag)}"

    def header(self) -> str:
        w, h = fmt_num(self.width), fmt_num(self.height)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" '
            f'width="{fmt_num(600 * self.width / max(self.width, self.height))}" '
            f'height="{fmt_num(600 * self.height / max(self.width, self.height))}">'
        )


def _polygon(canvas: _Canvas, d, color: str, width_scale: float = 1.0, dashed: bool = False) -> str:
    pts = " ".join(canvas.pt(v) for v in d)
    dash = f' stroke-dasharray="{fmt_num(canvas.stroke * 4)}"' if dashed else ""
    return (
        f'<polygon points="{pts}" fill="none" stroke="{color}" '
        f'stroke-width="{fmt_num(canvas.stroke * width_scale)}"{dash}/>'
    )


def _vertex_dots(canvas: _Canvas, d) -> list:
    out = []
    for k, v in enumerate(d):
        x, y = canvas.pt(v).split(",")
        out.append(f'<circle cx="{x}" cy="{y}" r="{fmt_num(canvas.stroke * 3)}" fill="{VERTEX_COLORS[k]}"/>')
    return out


def orbit_svg(samples, base=None, snapshots: int = 12) -> str:
    """One closed polyline per vertex plus a triangle snapshot every n/snapshots samples."""
    points = [_c(v) for s in samples for v in s.triple]
    if base is not None:
        points += [_c(v) for v in base]
    canvas = _Canvas(points)
    body = [canvas.header()]
    if base is not None:
        body.append(_polygon(canvas, base, BASE_COLOR, dashed=True))
    n = len(samples)
    step = max(1, n // snapshots)
    for j in range(0, n, step):
        body.append(_polygon(canvas, samples[j].triple, SNAPSHOT_COLOR, 0.6))
    for k in range(3):
        track = [s.triple[k] for s in samples] + [samples[0].triple[k]]
        pts = " ".join(canvas.pt(v) for v in track)
        body.append(
            f'<polyline points="{pts}" fill="none" stroke="{VERTEX_COLORS[k]}" '
            f'stroke-width="{fmt_num(canvas.stroke)}"/>'
        )
    body.extend(_vertex_dots(canvas, samples[0].triple))
    body.append("</svg>")
    return "\n".join(body) + "\n"


def triangles_svg(named) -> str:
    """Static figure: the first triangle dashed grey, the rest solid."""
    canvas = _Canvas([_c(v) for _, d in named for v in d])
    body = [canvas.header()]
    for idx, (_, d) in enumerate(named):
        if idx == 0:
            body.append(_polygon(canvas, d, BASE_COLOR, dashed=True))
        else:
            body.append(_polygon(canvas, d, SNAPSHOT_COLOR))
        body.extend(_vertex_dots(canvas, d))
    body.append("</svg>")
    return "\n".join(body) + "\n"
