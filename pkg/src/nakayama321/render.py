"""ASCII and SVG drawings of a Dyck path with level annotations.

With ``homology=True`` two families of boundary points are marked:

* ``P``: indecomposable injectives of projective dimension one;
* ``R``: injectives whose first syzygy is a nonzero radical ``e_s J``, plus
  the simple ``S_n`` at the right end standing for the zero radical
  ``e_n J``.  Their number is the count of radicals with id <= 1.

An injective ``D(A e_j)`` of length ``d_j`` sits at ``(2j - d_j + 1, d_j - 1)``.
"""

from __future__ import annotations

from html import escape

from . import nakayama as nk
from .bridge import dyck_to_kupisch
from .dyck import DyckPath, peaks_and_levels, valleys_and_levels


def module_point(m: nk.Module) -> tuple[int, int]:
    return (2 * m.top + m.length - 1, m.length - 1)


def homology_marks(path: DyckPath) -> dict[str, list[tuple[int, int]]]:
    c = dyck_to_kupisch(path)
    n = c.simples - 1
    pd_one = [
        module_point(nk.injective(c, j))
        for j in range(c.simples)
        if nk.proj_dim(c, nk.injective(c, j)) == 1
    ]
    radical = [module_point(m) for m in nk.injectives_with_radical_syzygy(c)]
    radical.append((2 * n, 0))
    return {"P": sorted(pd_one), "R": sorted(radical)}


def _levels_line(label: str, points: list[tuple[int, int]]) -> str:
    return f"{label}: " + (" ".join(f"{x}@{lvl}" for x, lvl in points) or "-")


def render_ascii(path: DyckPath, homology: bool = False) -> str:
    h = path.heights()
    top = max(h)
    width = len(path.steps)
    grid = [[" "] * width for _ in range(max(top, 1))]
    for x, step in enumerate(path.steps):
        if step == "U":
            grid[h[x]][x] = "/"
        else:
            grid[h[x + 1]][x] = "\\"
    lines = ["".join(row).rstrip() for row in reversed(grid)]
    lines.append("_" * width)
    lines.append(f"path: {path.steps}")
    if path.semilength:
        lines.append(_levels_line("peaks (x@level)", peaks_and_levels(path)))
    lines.append(_levels_line("valleys (x@level)", valleys_and_levels(path)))
    if homology:
        marks = homology_marks(path)
        lines.append(_levels_line(f"P marks ({len(marks['P'])})", [(x, y + 1) for x, y in marks["P"]]))
        lines.append(_levels_line(f"R marks ({len(marks['R'])})", [(x, y + 1) for x, y in marks["R"]]))
    return "\n".join(lines) + "\n"


def render_svg(path: DyckPath, homology: bool = False, unit: int = 30) -> str:
    h = path.heights()
    width = max(len(path.steps), 1)
    height = max(h) + 1
    margin = unit
    W = width * unit + 2 * margin
    H = height * unit + 2 * margin + (2 * unit if homology else unit)

    def px(x: int, y: int) -> tuple[int, int]:
        return margin + x * unit, margin + (height - y) * unit

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
        f'viewBox="0 0 {W} {H}" font-family="monospace" font-size="{unit // 2}">',
        f"<title>{escape(path.steps) or 'empty path'}</title>",
    ]
    x0, y0 = px(0, 0)
    x1, _ = px(width, 0)
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="#999"/>')
    pts = " ".join("%d,%d" % px(x, y) for x, y in enumerate(h))
    out.append(f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="2"/>')
    if path.semilength:
        for x, lvl in peaks_and_levels(path):
            cx, cy = px(x, lvl - 1)
            out.append(f'<text x="{cx}" y="{cy - 6}" text-anchor="middle">{lvl}</text>')
    # the start point carries k_0 = 1 but is not a valley
    for cls, (x, lvl) in [("start", (0, 1))] + [("valley", v) for v in valleys_and_levels(path)]:
        cx, cy = px(x, lvl - 1)
        out.append(f'<circle class="{cls}" cx="{cx}" cy="{cy}" r="4" fill="#1f77b4"/>')
        out.append(
            f'<text x="{cx}" y="{cy + unit // 2 + 4}" text-anchor="middle" fill="#1f77b4">{lvl}</text>'
        )
    if homology:
        marks = homology_marks(path)
        for label, colour, r in (("P", "#d62728", 9), ("R", "#2ca02c", 6)):
            for x, y in marks[label]:
                cx, cy = px(x, y)
                out.append(
                    f'<circle class="mark-{label}" cx="{cx}" cy="{cy}" r="{r}" '
                    f'fill="none" stroke="{colour}" stroke-width="2"/>'
                )
        out.append(
            f'<text x="{margin}" y="{H - unit // 2}">P (inj, pd 1): {len(marks["P"])}   '
            f'R (syzygy a radical): {len(marks["R"])}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
