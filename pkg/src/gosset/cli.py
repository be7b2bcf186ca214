"""Command-line front end.

Subcommands: diagram, roots, eigvec, project, masses, verify.  The
project subcommand serialises a circle spectrum as JSON, CSV, or SVG and
can additionally save a matplotlib figure of the same spectrum.  Exit
codes: 0 success, 1 verification failure, 2 usage error, 3 computation
error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from .coxplane import build_coxeter_plane, perron_eigenvector
from .diagrams import build_diagram, gram_matrix
from .errors import DiagramSpecError, GossetError
from .masses import ratio_report, toda_masses, zamolodchikov_spectrum
from .project import ORTHOGONAL, SKEW, CircleSpectrum, circle_spectrum, fundamental_weights, project_many
from .render import render_spectrum
from .roots import root_system
from .verify import format_results, run_suite

_MODES = {"ortho": ORTHOGONAL, "skew": SKEW}


@dataclass(frozen=True)
class RunConfig:
    """Options of one projection run."""

    group: str
    mode: str
    points: str = "roots"
    output: str = "json"
    out_path: str | None = None
    fig_path: str | None = None
    m1: float = 1.0
    tol_override: float | None = None
    labels: bool = False

    def __post_init__(self):
        if self.mode not in (ORTHOGONAL, SKEW):
            raise ValueError(f"bad mode {self.mode!r}")
        if self.points not in ("roots", "simples", "weights"):
            raise ValueError(f"bad point set {self.points!r}")
        if self.output not in ("json", "csv", "svg"):
            raise ValueError(f"bad output format {self.output!r}")
        if self.m1 <= 0:
            raise ValueError("m1 must be positive")


def _fmt12(x: float) -> float:
    """Round to 12 significant digits (and drop negative zero)."""
    if x == 0.0:
        return 0.0
    return float(f"{x:.12g}")


def _fmt12s(x: float) -> str:
    return "0" if x == 0.0 else f"{x:.12g}"


def spectrum_to_json(cs: CircleSpectrum, group: str, c: float, h: int) -> str:
    doc = {
        "group": group,
        "mode": cs.mode,
        "c": _fmt12(c),
        "h": h,
        "circles": [
            {
                "radius": _fmt12(circ.radius),
                "count": circ.count,
                "points": [
                    {"x": _fmt12(p.x), "y": _fmt12(p.y), "source": p.source_index}
                    for p in circ.members
                ],
            }
            for circ in cs.circles
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def spectrum_to_csv(cs: CircleSpectrum) -> str:
    out = io.StringIO()
    out.write("circle_index,radius,x,y,source\n")
    for ci, circ in enumerate(cs.circles):
        for p in circ.members:
            out.write(
                f"{ci},{_fmt12s(circ.radius)},{_fmt12s(p.x)},{_fmt12s(p.y)},{p.source_index}\n"
            )
    return out.getvalue()


def _emit(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_diagram(args) -> int:
    d = build_diagram(args.spec)
    print(d)
    g = gram_matrix(d)
    print("Gram matrix:")
    arr = g.as_array()
    for row in arr:
        print("  " + "  ".join(f"{x:8.4f}" for x in row))
    return 0


def _cmd_roots(args) -> int:
    d = build_diagram(args.spec)
    rs = root_system(d)
    print(f"{len(rs.roots)} roots, h = {rs.coxeter_number}")
    if rs.marks is not None:
        print(f"marks: {' '.join(str(m) for m in rs.marks)} (sum {sum(rs.marks)})")
    return 0


def _cmd_eigvec(args) -> int:
    d = build_diagram(args.spec)
    g = gram_matrix(d).as_array()
    m = 2.0 * np.eye(d.rank) - g
    c, z = perron_eigenvector(m)
    print(f"c = {_fmt12s(c)}")
    for i, zi in enumerate(z, start=1):
        print(f"z_{i} = {_fmt12s(float(zi))}")
    return 0


def _cmd_project(args) -> int:
    cfg = RunConfig(
        group=args.spec,
        mode=_MODES[args.mode],
        points=args.points,
        output=args.out,
        out_path=args.file,
        fig_path=args.fig,
        tol_override=args.tol,
        labels=args.labels,
    )
    d = build_diagram(cfg.group)
    rs = root_system(d)
    plane = build_coxeter_plane(rs)
    if cfg.points == "roots":
        vectors = rs.roots
    elif cfg.points == "simples":
        vectors = rs.simples
    else:
        vectors = fundamental_weights(rs)
    pts = project_many(plane, vectors, cfg.mode)
    tol = cfg.tol_override if cfg.tol_override is not None else 1e-6
    cs = circle_spectrum(pts, rel_tol=tol, mode=cfg.mode)

    if cfg.output == "json":
        text = spectrum_to_json(cs, d.name or cfg.group, plane.c, plane.h)
    elif cfg.output == "csv":
        text = spectrum_to_csv(cs)
    else:
        text = render_spectrum(cs, labels=cfg.labels)
    _emit(text, cfg.out_path)

    if cfg.fig_path:
        from .figures import save_spectrum_figure

        title = f"{d.name or cfg.group} — {cfg.points}, {cfg.mode} projection"
        save_spectrum_figure(cs, cfg.fig_path, title=title)
    return 0


def _cmd_masses(args) -> int:
    if args.m1 <= 0:
        raise ValueError("m1 must be positive")
    spectrum = zamolodchikov_spectrum(args.m1)
    rs = root_system(build_diagram("E8"))
    toda = toda_masses(rs)
    toda_scaled = toda * (args.m1 / toda[0])
    rep = ratio_report(list(spectrum.masses), toda)
    print(f"{'k':>2}  {'mass':>12}  {'toda':>12}  {'rel dev':>9}")
    for k, (a, b) in enumerate(zip(spectrum.masses, toda_scaled), start=1):
        dev = abs(a - b) / b
        print(f"{k:>2}  {a:12.4f}  {b:12.4f}  {dev:9.2e}")
    print(f"max relative deviation between routes: {rep.max_rel_dev:.3e}")
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.spec)
    print(format_results(results))
    return 0 if all(r.passed for r in results) else 1


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gosset",
        description="Root systems, Coxeter planes, Gosset-circle projections, and Toda mass spectra.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("diagram", help="print rank, edges, and Gram matrix")
    d.add_argument("spec", help='diagram name ("E8") or "rank=N;edges=i-j:m,..."')
    d.set_defaults(func=_cmd_diagram)

    r = sub.add_parser("roots", help="enumerate the root system")
    r.add_argument("spec")
    r.set_defaults(func=_cmd_roots)

    e = sub.add_parser("eigvec", help="print c and the Perron eigenvector of 2I - C")
    e.add_argument("spec")
    e.set_defaults(func=_cmd_eigvec)

    pr = sub.add_parser("project", help="project onto the Coxeter plane and emit the circle spectrum")
    pr.add_argument("spec")
    pr.add_argument("--mode", choices=("ortho", "skew"), required=True)
    pr.add_argument("--points", choices=("roots", "simples", "weights"), default="roots")
    pr.add_argument("--out", choices=("json", "csv", "svg"), default="json")
    pr.add_argument("--file", default=None, help="output path (default: stdout)")
    pr.add_argument("--fig", default=None, help="also save a matplotlib figure here")
    pr.add_argument("--tol", type=float, default=None, help="radius grouping tolerance (relative)")
    pr.add_argument("--labels", action="store_true", help="annotate SVG circles with radii")
    pr.set_defaults(func=_cmd_project)

    ma = sub.add_parser("masses", help="print the mass octet and the Toda cross-check")
    ma.add_argument("--m1", type=float, default=1.0)
    ma.set_defaults(func=_cmd_masses)

    v = sub.add_parser("verify", help="run the invariant suite")
    v.add_argument("spec", nargs="?", default="E8")
    v.set_defaults(func=_cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else 0
    try:
        return args.func(args)
    except DiagramSpecError as e:
        print(f"error: {e}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except (GossetError, ValueError, ZeroDivisionError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
