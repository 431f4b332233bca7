"""CSV and SVG writers for computed tables and curves."""

from __future__ import annotations

import io
import json
import math
from pathlib import Path
from typing import IO, Mapping, NamedTuple, Sequence
from xml.sax.saxutils import escape

import numpy as np

NAN_TOKEN = "NAN"
CONFIG_PREFIX = "# config: "


def _fmt(v) -> str:
    v = float(v)
    if not math.isfinite(v):
        return NAN_TOKEN
    return f"{v:.12g}"


def format_csv(columns: Mapping[str, Sequence[float]], config: Mapping | None = None,
               flags: Sequence[str] | None = None) -> str:
    """Render equally long columns as CSV text.

    Non-finite values become ``NAN``. When ``flags`` is given a ``flag``
    column is appended. The last line is a ``# config:`` comment holding
    ``config`` as sorted JSON.
    """
    names = list(columns)
    data = [np.asarray(columns[n], dtype=float).ravel() for n in names]
    nrows = data[0].size if data else 0
    if any(d.size != nrows for d in data):
        raise ValueError("all columns must have the same length")
    if flags is not None and len(flags) != nrows:
        raise ValueError("flags must match the number of rows")
    buf = io.StringIO()
    header = names + (["flag"] if flags is not None else [])
    buf.write(",".join(header) + "\n")
    for i in range(nrows):
        cells = [_fmt(d[i]) for d in data]
        if flags is not None:
            cells.append(flags[i])
        buf.write(",".join(cells) + "\n")
    buf.write(CONFIG_PREFIX + json.dumps(dict(config or {}), sort_keys=True) + "\n")
    return buf.getvalue()


def emit_csv(columns: Mapping[str, Sequence[float]], path: str | Path | IO[str],
             config: Mapping | None = None, flags: Sequence[str] | None = None) -> None:
    text = format_csv(columns, config, flags)
    if hasattr(path, "write"):
        path.write(text)
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)


class CsvTable(NamedTuple):
    header: list[str]
    rows: list[list[float]]
    flags: list[str] | None
    config: dict


def read_csv(path: str | Path) -> CsvTable:
    """Parse a file written by :func:`emit_csv`."""
    lines = Path(path).read_text().splitlines()
    header = lines[0].split(",")
    has_flag = header[-1] == "flag"
    rows, flags, config = [], [] if has_flag else None, {}
    for line in lines[1:]:
        if line.startswith(CONFIG_PREFIX):
            config = json.loads(line[len(CONFIG_PREFIX):])
            continue
        cells = line.split(",")
        if has_flag:
            flags.append(cells.pop())
        rows.append([math.nan if c == NAN_TOKEN else float(c) for c in cells])
    return CsvTable(header[:-1] if has_flag else header, rows, flags, config)


class Series(NamedTuple):
    label: str
    x: Sequence[float]
    y: Sequence[float]


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
            "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22")
_W, _H = 640, 420
_LEFT, _RIGHT, _TOP, _BOTTOM = 70, 20, 40, 50


def _padded(lo: float, hi: float) -> tuple[float, float]:
    if hi > lo:
        return lo, hi
    pad = 0.05 * abs(lo) if lo != 0 else 0.05
    return lo - pad, hi + pad


def _ticks(lo: float, hi: float, target: int = 5) -> list[float]:
    raw = (hi - lo) / target
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 5, 10) if m * mag >= raw)
    first = math.ceil(lo / step - 1e-9) * step
    ticks = []
    k = 0
    while first + k * step <= hi + 1e-9 * step:
        ticks.append(round(first + k * step, 12))
        k += 1
    return ticks


def render_svg(series: Sequence[Series], title: str = "", x_label: str = "",
               y_label: str = "") -> str:
    """Line plot as a standalone SVG 1.1 document."""
    if not series:
        raise ValueError("need at least one series")
    cleaned = []
    for s in series:
        x = np.asarray(s.x, dtype=float)
        y = np.asarray(s.y, dtype=float)
        if x.size < 2 or x.size != y.size:
            raise ValueError(f"series {s.label!r} needs at least two (x, y) points")
        ok = np.isfinite(x) & np.isfinite(y)
        cleaned.append((s.label, x[ok], y[ok]))
    xs = np.concatenate([c[1] for c in cleaned])
    ys = np.concatenate([c[2] for c in cleaned])
    if xs.size == 0:
        raise ValueError("no finite points to plot")
    x0, x1 = _padded(float(xs.min()), float(xs.max()))
    y0, y1 = _padded(float(ys.min()), float(ys.max()))
    pw, ph = _W - _LEFT - _RIGHT, _H - _TOP - _BOTTOM

    def px(v):
        return _LEFT + (v - x0) / (x1 - x0) * pw

    def py(v):
        return _TOP + (y1 - v) / (y1 - y0) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{_W}" height="{_H}" fill="white"/>',
        f'<rect x="{_LEFT}" y="{_TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    if title:
        out.append(f'<text x="{_W / 2:.1f}" y="22" text-anchor="middle" font-size="13">'
                   f'{escape(title)}</text>')
    for t in _ticks(x0, x1):
        X = px(t)
        out.append(f'<line x1="{X:.2f}" y1="{_TOP + ph}" x2="{X:.2f}" y2="{_TOP + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{X:.2f}" y="{_TOP + ph + 18}" text-anchor="middle">{t:g}</text>')
    for t in _ticks(y0, y1):
        Y = py(t)
        out.append(f'<line x1="{_LEFT - 5}" y1="{Y:.2f}" x2="{_LEFT}" y2="{Y:.2f}" stroke="black"/>')
        out.append(f'<text x="{_LEFT - 8}" y="{Y + 4:.2f}" text-anchor="end">{t:g}</text>')
    if x_label:
        out.append(f'<text x="{_LEFT + pw / 2:.1f}" y="{_H - 10}" text-anchor="middle">{escape(x_label)}</text>')
    if y_label:
        out.append(f'<text x="16" y="{_TOP + ph / 2:.1f}" text-anchor="middle" '
                   f'transform="rotate(-90 16 {_TOP + ph / 2:.1f})">{escape(y_label)}</text>')
    for k, (label, x, y) in enumerate(cleaned):
        colour = _PALETTE[k % len(_PALETTE)]
        pts = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(x, y))
        out.append(f'<polyline fill="none" stroke="{colour}" stroke-width="1.5" points="{pts}"/>')
        ly = _TOP + 14 + 16 * k
        lx = _LEFT + pw - 150
        out.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 20}" y2="{ly - 4}" stroke="{colour}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 26}" y="{ly}">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(series: Sequence[Series], path: str | Path, **kwargs) -> None:
    Path(path).write_text(render_svg(series, **kwargs))
