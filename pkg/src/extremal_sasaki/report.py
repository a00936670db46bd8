"""Reeb-cone slice scans and their CSV / SVG reports."""
import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .admissible import WeightParams
from .exactalg import fmt
from .futaki import double_root_defect
from .solver import existence_verdict, solve_extremal

CSV_HEADER = ["a", "b", "exists", "A", "B", "min_theta", "csc"]
THETA_SAMPLES = 199


@dataclass(frozen=True)
class ScanRow:
    a: Fraction
    b: Fraction
    exists: bool
    A: Fraction
    B: Fraction
    min_theta: float
    csc: bool
    defect0: Fraction
    defect1: Fraction

    def csv_fields(self):
        return [fmt(self.a), fmt(self.b), str(self.exists).lower(), fmt(self.A),
                fmt(self.B), repr(self.min_theta), str(self.csc).lower()]


def grid(b, n):
    """a_i = b (-1 + 2i/(n+1)), i = 1..n."""
    return [b * (-1 + Fraction(2 * i, n + 1)) for i in range(1, n + 1)]


def scan_row(data, a, b):
    sol = solve_extremal(data, WeightParams(a, b))
    report = existence_verdict(sol)
    F, pc = sol.F, sol.p_c
    zs = [-1 + Fraction(2 * j, THETA_SAMPLES + 1) for j in range(1, THETA_SAMPLES + 1)]
    min_theta = min(float(F(z) / pc(z)) for z in zs)
    d0, d1 = double_root_defect(sol)
    return ScanRow(sol.weight.a, sol.weight.b, report.exists, sol.A, sol.B, min_theta,
                   sol.A * b == sol.B * a, d0, d1)


def _row_task(args):
    return scan_row(*args)


def scan(data, b, n, jobs=1):
    """Rows for the grid of n Reeb directions at fixed b, ascending in a."""
    tasks = [(data, a, b) for a in grid(Fraction(b), n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_row_task, tasks))
    return [_row_task(t) for t in tasks]


def write_csv(rows, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow(r.csv_fields())


def render_svg(rows, width=640, height=360, margin=50):
    """Static plot of min_theta against a with shaded existence bands."""
    xs = [float(r.a) for r in rows]
    ys = [r.min_theta for r in rows]
    b = float(rows[0].b)
    x0, x1 = -b, b
    y0, y1 = min(ys + [0.0]), max(ys + [0.0])
    if y1 == y0:
        y1 = y0 + 1.0
    pad = 0.05 * (y1 - y0)
    y0, y1 = y0 - pad, y1 + pad

    def px(x):
        return margin + (x - x0) / (x1 - x0) * (width - 2 * margin)

    def py(y):
        return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin)

    step = (x1 - x0) / (len(rows) + 1)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">',
           f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>']
    runs, start = [], None
    for i, r in enumerate(rows):
        if r.exists and start is None:
            start = i
        if (not r.exists or i == len(rows) - 1) and start is not None:
            end = i if r.exists else i - 1
            runs.append((start, end))
            start = None
    for s, e in runs:
        left = max(x0, xs[s] - step / 2)
        right = min(x1, xs[e] + step / 2)
        out.append(f'<rect class="exists-band" x="{px(left):.2f}" y="{margin}" '
                   f'width="{px(right) - px(left):.2f}" height="{height - 2 * margin}" '
                   f'fill="#cfe8cf" stroke="none"/>')
    out.append(f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
               f'y2="{height - margin}" stroke="black"/>')
    out.append(f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" '
               f'stroke="black"/>')
    out.append(f'<line x1="{margin}" y1="{py(0.0):.2f}" x2="{width - margin}" '
               f'y2="{py(0.0):.2f}" stroke="gray" stroke-dasharray="4,3"/>')
    pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
    out.append(f'<polyline points="{pts}" fill="none" stroke="#1f4e9a" stroke-width="1.5"/>')
    for x, y, r in zip(xs, ys, rows):
        color = "#1f4e9a" if r.exists else "#b22222"
        out.append(f'<circle cx="{px(x):.2f}" cy="{py(y):.2f}" r="2.5" fill="{color}"/>')
    out.append(f'<text x="{width / 2:.0f}" y="{height - 12}" text-anchor="middle" '
               f'font-size="12">a (b = {fmt(rows[0].b)})</text>')
    out.append(f'<text x="14" y="{height / 2:.0f}" font-size="12" '
               f'transform="rotate(-90 14 {height / 2:.0f})" text-anchor="middle">'
               f'min theta</text>')
    for x in (x0, 0.0, x1):
        out.append(f'<text x="{px(x):.2f}" y="{height - margin + 16}" font-size="10" '
                   f'text-anchor="middle">{x:g}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_scan(rows, svg_path=None, csv_path=None):
    if not rows:
        raise ValueError("no scan rows to emit")
    svg = render_svg(rows) if svg_path else None
    if csv_path:
        with open(csv_path, "w", newline="") as fh:
            write_csv(rows, fh)
    if svg_path:
        with open(svg_path, "w") as fh:
            fh.write(svg)
