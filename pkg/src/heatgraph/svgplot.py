"""Minimal deterministic SVG charts (no plotting dependency).

Two figure kinds cover every output: a mean curve inside a translucent
uniform band, and a rate-versus-size curve with vertical error bars.
Coordinates are formatted with fixed precision so identical inputs give
byte-identical files.
"""

from __future__ import annotations

from typing import Sequence

_W, _H = 640, 420
_ML, _MR, _MT, _MB = 62, 16, 24, 46


def _fmt(x: float) -> str:
    return f"{x:.2f}"


class _Axes:
    def __init__(self, xs: Sequence[float], ys: Sequence[float]):
        self.x0, self.x1 = min(xs), max(xs)
        self.y0, self.y1 = min(ys), max(ys)
        if self.x1 == self.x0:
            self.x1 = self.x0 + 1.0
        if self.y1 == self.y0:
            self.y0, self.y1 = self.y0 - 0.5, self.y1 + 0.5
        pad = 0.05 * (self.y1 - self.y0)
        self.y0 -= pad
        self.y1 += pad

    def px(self, x: float) -> float:
        return _ML + (x - self.x0) / (self.x1 - self.x0) * (_W - _ML - _MR)

    def py(self, y: float) -> float:
        return _H - _MB - (y - self.y0) / (self.y1 - self.y0) * (_H - _MT - _MB)

    def frame(self, xlabel: str, ylabel: str, title: str) -> list[str]:
        parts = [
            f'<rect x="{_ML}" y="{_MT}" width="{_W - _ML - _MR}" '
            f'height="{_H - _MT - _MB}" fill="none" stroke="#444"/>'
        ]
        for i in range(5):
            xv = self.x0 + (self.x1 - self.x0) * i / 4
            yv = self.y0 + (self.y1 - self.y0) * i / 4
            xp, yp = self.px(xv), self.py(yv)
            parts.append(
                f'<line x1="{_fmt(xp)}" y1="{_H - _MB}" x2="{_fmt(xp)}" '
                f'y2="{_H - _MB + 5}" stroke="#444"/>'
            )
            parts.append(
                f'<text x="{_fmt(xp)}" y="{_H - _MB + 18}" font-size="11" '
                f'text-anchor="middle">{xv:.3g}</text>'
            )
            parts.append(
                f'<line x1="{_ML - 5}" y1="{_fmt(yp)}" x2="{_ML}" '
                f'y2="{_fmt(yp)}" stroke="#444"/>'
            )
            parts.append(
                f'<text x="{_ML - 8}" y="{_fmt(yp + 4)}" font-size="11" '
                f'text-anchor="end">{yv:.3g}</text>'
            )
        parts.append(
            f'<text x="{(_ML + _W - _MR) // 2}" y="{_H - 8}" font-size="12" '
            f'text-anchor="middle">{xlabel}</text>'
        )
        parts.append(
            f'<text x="14" y="{(_MT + _H - _MB) // 2}" font-size="12" '
            f'text-anchor="middle" transform="rotate(-90 14 {(_MT + _H - _MB) // 2})">'
            f"{ylabel}</text>"
        )
        parts.append(
            f'<text x="{_W // 2}" y="16" font-size="13" text-anchor="middle">{title}</text>'
        )
        return parts

    def polyline(self, xs, ys, color: str) -> str:
        pts = " ".join(f"{_fmt(self.px(x))},{_fmt(self.py(y))}" for x, y in zip(xs, ys))
        return f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'


def _document(body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">\n<rect width="{_W}" height="{_H}" fill="white"/>\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"


def band_svg(times, mean, lower, upper, title: str = "mean process") -> str:
    """Mean curve with a translucent uniform confidence band."""
    ax = _Axes(times, list(lower) + list(upper))
    body = ax.frame("t", "distance", title)
    ring = [ax.px(t) for t in times]
    top = [ax.py(y) for y in upper]
    bot = [ax.py(y) for y in lower]
    poly = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in zip(ring, top))
    poly += " " + " ".join(
        f"{_fmt(x)},{_fmt(y)}" for x, y in zip(reversed(ring), reversed(bot))
    )
    body.append(f'<polygon points="{poly}" fill="#4477aa" fill-opacity="0.3" stroke="none"/>')
    body.append(ax.polyline(times, mean, "#224466"))
    return _document(body)


def rates_svg(xs, rates, ci_low, ci_high, xlabel: str, title: str) -> str:
    """Rate curve over sample sizes with vertical 95% error bars."""
    ax = _Axes(xs, list(ci_low) + list(ci_high) + [0.0, 1.0])
    body = ax.frame(xlabel, "frequency", title)
    for x, lo, hi in zip(xs, ci_low, ci_high):
        xp = ax.px(x)
        body.append(
            f'<line x1="{_fmt(xp)}" y1="{_fmt(ax.py(lo))}" x2="{_fmt(xp)}" '
            f'y2="{_fmt(ax.py(hi))}" stroke="#aa4444" stroke-width="1.2"/>'
        )
        for v in (lo, hi):
            body.append(
                f'<line x1="{_fmt(xp - 4)}" y1="{_fmt(ax.py(v))}" '
                f'x2="{_fmt(xp + 4)}" y2="{_fmt(ax.py(v))}" stroke="#aa4444"/>'
            )
    body.append(ax.polyline(xs, rates, "#224466"))
    for x, r in zip(xs, rates):
        body.append(
            f'<circle cx="{_fmt(ax.px(x))}" cy="{_fmt(ax.py(r))}" r="3" fill="#224466"/>'
        )
    return _document(body)
