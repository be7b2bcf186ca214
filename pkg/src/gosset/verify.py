"""Named invariant checks over a whole pipeline run.

``run_suite`` builds everything for one diagram and evaluates every
applicable invariant: root counts and norms, Perron/plane identities,
dihedral orbit structure, projection circle structure, and (for E8) the
exact folding block diagonalisation plus the three mass routes.  The CLI
prints one pass/fail line per check and exits nonzero on any failure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import folding as fold
from .coxplane import build_coxeter_plane, dihedral_generators, orbit_decomposition, rotation_order
from .diagrams import CoxeterDiagram, bipartition, build_diagram, gram_matrix, is_finite_type
from .golden import TAU
from .masses import jacobi_eigenvalues, ratio_report, toda_mass_matrix, zamolodchikov_spectrum
from .project import (
    ORTHOGONAL,
    SKEW,
    circle_spectrum,
    fundamental_weights,
    project_many,
)
from .roots import RootSystem, root_system

_TAU = float(TAU)

#: |roots| for the fixed-rank named diagrams; A_n, D_n, I2(m) are computed
EXPECTED_ROOT_COUNTS: dict[str, int] = {
    "E6": 72,
    "E7": 126,
    "E8": 240,
    "H2": 10,
    "H3": 30,
    "H4": 120,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


class _Suite:
    def __init__(self):
        self.results: list[CheckResult] = []

    def check(self, name: str, fn: Callable[[], str | None]):
        try:
            detail = fn()
            self.results.append(CheckResult(name, True, detail or ""))
        except Exception as e:  # a failed invariant, not a crash
            self.results.append(CheckResult(name, False, f"{type(e).__name__}: {e}"))

    def info(self, name: str, detail: str):
        self.results.append(CheckResult(name, True, detail))


def _expected_count(d: CoxeterDiagram) -> int | None:
    name = d.name or ""
    if name.startswith("A") and name[1:].isdigit():
        n = int(name[1:])
        return n * (n + 1)
    if name.startswith("D") and name[1:].isdigit():
        n = int(name[1:])
        return 2 * n * (n - 1)
    if name.startswith("I2(") and name.endswith(")"):
        return 2 * int(name[3:-1])
    return EXPECTED_ROOT_COUNTS.get(name)


def _require(cond: bool, msg: str):
    if not cond:
        raise AssertionError(msg)


def run_suite(spec: str = "E8") -> list[CheckResult]:
    s = _Suite()
    d = build_diagram(spec)
    s.check("diagram finite type (leading minors positive)", lambda: _check_finite(d))
    rs = root_system(d)
    _root_checks(s, rs)
    if d.rank >= 2 and d.is_connected():
        _plane_checks(s, rs)
    if (d.name or "").startswith("E8"):
        _folding_checks(s, rs)
        _mass_checks(s, rs)
    if d.name in ("H4", "H4'"):
        _h4_circle_checks(s, rs)
    return s.results


def _check_finite(d: CoxeterDiagram) -> str:
    _require(is_finite_type(d), "Gram matrix is not positive definite")
    return f"rank {d.rank}"


def _root_checks(s: _Suite, rs: RootSystem):
    d = rs.diagram

    def count() -> str:
        exp = _expected_count(d)
        if exp is not None:
            _require(len(rs.roots) == exp, f"got {len(rs.roots)}, expected {exp}")
        _require(len(rs.roots) == d.rank * rs.coxeter_number, "|roots| != rank*h")
        return f"{len(rs.roots)} roots, h = {rs.coxeter_number}"

    s.check("root count matches classification and rank*h", count)

    def norms() -> str:
        nn = np.sum(rs.roots**2, axis=1)
        _require(float(np.max(np.abs(nn - 2.0))) < 1e-9, "some root norm is off")
        return f"max |v.v - 2| = {np.max(np.abs(nn - 2.0)):.2e}"

    s.check("all roots have squared norm 2", norms)

    def symmetric() -> str:
        for v in rs.roots:
            rs.root_index(-v)
        return ""

    s.check("root set is symmetric under negation", symmetric)

    if d.is_crystallographic() and d.is_connected():

        def integrality() -> str:
            prods = rs.roots @ rs.simples.T  # 2(v.a)/(a.a) = v.a for norm-2 roots
            _require(float(np.max(np.abs(prods - np.round(prods)))) < 1e-9, "non-integer pairing")
            return ""

        s.check("crystallographic integrality of root pairings", integrality)

        def marks() -> str:
            _require(rs.marks is not None, "marks missing")
            total = sum(rs.marks)
            _require(total == rs.coxeter_number - 1, f"sum of marks {total} != h-1")
            return f"marks {rs.marks}, sum {total}"

        s.check("highest-root marks are positive integers summing to h-1", marks)


def _plane_checks(s: _Suite, rs: RootSystem):
    d = rs.diagram
    plane = build_coxeter_plane(rs)
    g = gram_matrix(d).as_array()
    m = 2.0 * np.eye(d.rank) - g

    def eigpair() -> str:
        res = np.max(np.abs(m @ plane.z - plane.c * plane.z))
        _require(res < 1e-9, f"eigen-residual {res:.2e}")
        _require(float(np.min(plane.z)) > 0.0, "eigenvector not positive")
        return f"c = {plane.c:.12f}"

    s.check("Perron pair: (2I-C) z = c z with positive z", eigpair)

    def colors() -> str:
        ca, cb = bipartition(d)
        sa = sum(plane.z[i - 1] ** 2 for i in ca)
        sb = sum(plane.z[i - 1] ** 2 for i in cb)
        _require(abs(sa - 1.0) < 1e-9 and abs(sb - 1.0) < 1e-9, f"sums {sa}, {sb}")
        return ""

    s.check("per-colour normalisation: both colour sums of z^2 equal 1", colors)

    def gammas() -> str:
        n1 = float(plane.gamma1 @ plane.gamma1)
        n2 = float(plane.gamma2 @ plane.gamma2)
        ip = float(plane.gamma1 @ plane.gamma2)
        _require(abs(n1 - 2.0) < 1e-9 and abs(n2 - 2.0) < 1e-9, "plane vector norms off")
        _require(abs(ip + plane.c) < 1e-9, "gamma1.gamma2 != -c")
        return ""

    s.check("plane vectors: |gamma|^2 = 2 and gamma1.gamma2 = -c", gammas)

    def hh() -> str:
        _require(plane.h == rs.coxeter_number, f"{plane.h} != {rs.coxeter_number}")
        return f"h = {plane.h}"

    s.check("spectral h equals |roots|/rank", hh)

    s1, s2 = dihedral_generators(plane, rs)

    def dihedral() -> str:
        _require(np.max(np.abs(s1 @ plane.gamma1 + plane.gamma1)) < 1e-9, "S1 gamma1 != -gamma1")
        _require(np.max(np.abs(s2 @ plane.gamma2 + plane.gamma2)) < 1e-9, "S2 gamma2 != -gamma2")
        t1 = s1 @ plane.gamma2 - (plane.gamma2 + plane.c * plane.gamma1)
        t2 = s2 @ plane.gamma1 - (plane.gamma1 + plane.c * plane.gamma2)
        _require(np.max(np.abs(t1)) < 1e-9 and np.max(np.abs(t2)) < 1e-9, "shear relation fails")
        order = rotation_order(s1 @ s2)
        _require(order == rs.coxeter_number, f"order {order} != h")
        return f"order(S1 S2) = {order}"

    s.check("dihedral generators act correctly and S1 S2 has order h", dihedral)

    strict = d.name in ("E8", "H4", "H4'")
    orbits = orbit_decomposition(rs, s1, s2, require_simple_labels=strict)

    def orbit_shape() -> str:
        total = sum(len(o.indices) for o in orbits)
        _require(total == len(rs.roots), "orbits do not cover the roots")
        _require(len(set(i for o in orbits for i in o.indices)) == total, "orbits overlap")
        _require(len(orbits) == d.rank, f"{len(orbits)} orbits != rank")
        _require(all(len(o.indices) == rs.coxeter_number for o in orbits), "orbit size != h")
        return f"{len(orbits)} orbits x {rs.coxeter_number}"

    s.check("roots split into rank orbits of size h", orbit_shape)

    pts = project_many(plane, rs.roots, ORTHOGONAL)
    spec_o = circle_spectrum(pts, mode=ORTHOGONAL)

    def circles() -> str:
        # symmetric diagrams can put several orbits on one circle, so the
        # counts are h times the number of coincident orbits
        _require(spec_o.total_points == len(rs.roots), "points went missing")
        _require(
            all(c.count % rs.coxeter_number == 0 for c in spec_o.circles),
            "circle multiplicities are not multiples of h",
        )
        if d.name in ("E8", "H4", "H4'"):
            _require(len(spec_o.circles) == d.rank, f"{len(spec_o.circles)} circles != rank")
            _require(
                all(c.count == rs.coxeter_number for c in spec_o.circles),
                "circle multiplicities are not h",
            )
        return f"radii {', '.join(f'{c.radius:.4f}' for c in spec_o.circles)}"

    s.check("orthogonal projection: orbit circles with h-fold multiplicity", circles)

    def spread_and_angles() -> str:
        for o in orbits:
            rr = [pts[i].radius for i in o.indices]
            _require((max(rr) - min(rr)) / max(rr) < 1e-9, "orbit radius spread too large")
            ang = sorted(pts[i].angle for i in o.indices)
            gaps = np.diff(ang + [ang[0] + 2.0 * math.pi])
            _require(
                float(np.max(np.abs(gaps - 2.0 * math.pi / rs.coxeter_number))) < 1e-6,
                "orbit angles are not uniform",
            )
        return ""

    s.check("each orbit lands on one circle with uniform angles", spread_and_angles)

    def covariance() -> str:
        w = s1 @ s2
        rotated = project_many(plane, rs.roots @ w.T, ORTHOGONAL)
        step = 2.0 * math.pi / rs.coxeter_number
        for p, q in zip(pts, rotated):
            if p.radius < 1e-12:
                continue
            delta = (q.angle - p.angle) % (2.0 * math.pi)
            err = min(abs(delta - step), abs(delta - step + 2 * math.pi), abs(delta - step - 2 * math.pi))
            _require(err < 1e-9, "rotation does not advance angles by 2 pi / h")
            _require(abs(p.radius - q.radius) < 1e-9, "rotation changed a radius")
        return ""

    s.check("applying S1 S2 rotates all images by 2 pi / h", covariance)

    if d.name == "E8":

        def ladder() -> str:
            for mode in (ORTHOGONAL, SKEW):
                sp = project_many(plane, rs.simples, mode)
                r = [p.radius for p in sp]
                for hi, lo in ((7, 1), (6, 2), (4, 8), (5, 3)):
                    ratio = r[hi - 1] / r[lo - 1]
                    _require(abs(ratio - _TAU) < 1e-9, f"{mode} ratio {ratio} != tau")
            return ""

        s.check("tau ladder of simple-root radii holds in both modes", ladder)

        def skew_spread() -> str:
            skew_pts = project_many(plane, rs.roots, SKEW)
            spread = 0
            for o in orbits:
                rr = [skew_pts[i].radius for i in o.indices]
                if (max(rr) - min(rr)) / max(rr) > 1e-6:
                    spread += 1
            _require(spread >= 1, "no orbit spreads across several skew radii")
            total = circle_spectrum(skew_pts, mode=SKEW)
            return f"{spread} orbits spread; all 240 skew images form {len(total.circles)} circles"

        s.check("skew projection splits at least one orbit across radii", skew_spread)

        def weight_ratios() -> str:
            w = fundamental_weights(rs)
            norms = sorted(p.radius for p in project_many(plane, w, ORTHOGONAL))
            rep = ratio_report(norms, list(zamolodchikov_spectrum(1.0).masses))
            _require(rep.max_rel_dev < 1e-9, f"dev {rep.max_rel_dev:.2e}")
            return f"max rel dev {rep.max_rel_dev:.2e}"

        s.check("projected fundamental-weight norms share the mass ratios", weight_ratios)

    def trig() -> str:
        if rs.coxeter_number != 30:
            return "skipped (h != 30)"
        c = plane.c
        _require(abs((c * c - 1.0) - 2.0 * _TAU * math.cos(2.0 * math.pi / 15.0)) < 1e-12, "identity 1")
        _require(
            abs(_TAU * (c * c - 1.0) / c - 2.0 * _TAU * math.cos(7.0 * math.pi / 30.0)) < 1e-12,
            "identity 2",
        )
        return ""

    s.check("eigenvector-ratio trig identities at h = 30", trig)

    if d.name == "E8":

        def tau_pairing() -> str:
            for i, j in fold.FOLDING_PAIRS:
                hi = max(plane.z[i - 1], plane.z[j - 1])
                lo = min(plane.z[i - 1], plane.z[j - 1])
                _require(abs(hi / lo - _TAU) < 1e-9, f"pair ({i},{j}) ratio {hi / lo}")
            return ""

        s.check("eigenvector components pair with ratio tau", tau_pairing)


def _folding_checks(s: _Suite, rs: RootSystem):
    f = fold.fold_e8_to_h4(rs)

    def exact_blocks() -> str:
        got = fold.block_diagonalize(f)
        want = fold.expected_block_diagonal()
        for a in range(8):
            for b in range(8):
                _require(got[a][b] == want[a][b], f"entry ({a + 1},{b + 1}) differs")
        return "all 32 off-block entries identically zero"

    s.check("exact block diagonalisation over Q(sqrt5)", exact_blocks)

    def beta_floats() -> str:
        bb = f.beta @ f.beta.T
        pp = f.beta_prime @ f.beta_prime.T
        cross = f.beta @ f.beta_prime.T
        _require(np.max(np.abs(np.diag(bb) - 2.0)) < 1e-12, "beta norms off")
        _require(np.max(np.abs(np.diag(pp) - 2.0)) < 1e-12, "beta' norms off")
        _require(np.max(np.abs(cross)) < 1e-12, "beta not orthogonal to beta'")
        return ""

    s.check("folded bases: norm 2 and mutual orthogonality (floats)", beta_floats)

    def generator_orders() -> str:
        gens = fold.folded_generators(rs)
        h4 = build_diagram("H4")
        for a in range(4):
            for b in range(a + 1, 4):
                m = h4.label(a + 1, b + 1)
                order = rotation_order(gens[a] @ gens[b])
                _require(order == m, f"(R{a + 1} R{b + 1}) has order {order}, want {m}")
        return ""

    s.check("folded generators satisfy the H4 relations", generator_orders)

    def decomposition() -> str:
        worst = 0.0
        for v in rs.roots:
            vt, vs = fold.decompose_root(f, v)
            worst = max(worst, abs(float(vt @ vt) + float(vs @ vs) - 2.0))
            worst = max(worst, float(np.max(np.abs(vt + vs - v))))
        _require(worst < 1e-9, f"worst defect {worst:.2e}")
        return f"worst defect {worst:.2e}"

    s.check("every root splits orthogonally across the two H4 spans", decomposition)


def _mass_checks(s: _Suite, rs: RootSystem):
    plane = build_coxeter_plane(rs)
    closed = np.array(zamolodchikov_spectrum(1.0).masses)

    def closed_relations() -> str:
        m = closed
        _require(abs(m[1] / m[0] - _TAU) < 1e-12, "m2 != tau m1")
        _require(abs(m[5] / m[2] - _TAU) < 1e-12, "m6 != tau m3")
        _require(abs(m[6] / m[3] - _TAU) < 1e-12, "m7 != tau m4")
        _require(abs(m[7] / m[4] - _TAU) < 1e-12, "m8 != tau m5")
        return ""

    s.check("closed-form masses satisfy the golden relations", closed_relations)

    tm = toda_mass_matrix(rs)
    eig_m = jacobi_eigenvalues(tm.m)

    def toda_route() -> str:
        _require(float(np.min(eig_m)) > 0, "M not positive definite")
        rep = ratio_report(np.sqrt(eig_m), closed)
        _require(rep.max_rel_dev < 1e-9, f"dev {rep.max_rel_dev:.2e}")
        tr = float(np.trace(tm.m))
        _require(abs(tr - 60.0) < 1e-9, f"trace {tr} != 60")
        return f"max rel dev {rep.max_rel_dev:.2e}, trace 60"

    s.check("Toda matrix eigenvalues reproduce the mass ratios", toda_route)

    def n_matrix() -> str:
        eig_n = jacobi_eigenvalues(tm.n)
        small = [x for x in eig_n if abs(x) < 1e-9]
        _require(len(small) == 1, f"{len(small)} near-zero eigenvalues")
        rest = np.array([x for x in eig_n if abs(x) >= 1e-9])
        _require(float(np.max(np.abs(rest - eig_m))) < 1e-9, "N spectrum differs from M's")
        return ""

    s.check("9x9 companion matrix: one zero eigenvalue, rest match M", n_matrix)

    def gosset_route() -> str:
        pts = project_many(plane, rs.roots, ORTHOGONAL)
        radii = circle_spectrum(pts, mode=ORTHOGONAL).radii
        rep = ratio_report(radii, closed)
        _require(rep.max_rel_dev < 1e-9, f"dev {rep.max_rel_dev:.2e}")
        return f"max rel dev {rep.max_rel_dev:.2e}"

    s.check("Gosset-circle radii reproduce the mass ratios", gosset_route)

    def eigvec_route() -> str:
        rep = ratio_report(np.sort(plane.z), closed)
        _require(rep.max_rel_dev < 1e-9, f"dev {rep.max_rel_dev:.2e}")
        return ""

    s.check("Perron eigenvector components are proportional to the masses", eigvec_route)

    def skew_mass_relations() -> str:
        pl = build_coxeter_plane(rs)
        r = sorted(p.radius for p in project_many(pl, rs.simples, SKEW))
        _require(abs(r[2] / (2.0 * r[0] * math.cos(math.pi / 30.0)) - 1.0) < 1e-9, "r3 relation")
        _require(abs(r[3] / (2.0 * r[1] * math.cos(7.0 * math.pi / 30.0)) - 1.0) < 1e-9, "r4 relation")
        _require(abs(r[4] / (2.0 * r[1] * math.cos(2.0 * math.pi / 15.0)) - 1.0) < 1e-9, "r5 relation")
        return f"skew radii start {r[0]:.4f}, {r[1]:.4f}, {r[2]:.4f}"

    s.check("skew radii satisfy the closed-form mass relations", skew_mass_relations)


def _h4_circle_checks(s: _Suite, rs: RootSystem):
    def circles_match_masses() -> str:
        plane = build_coxeter_plane(rs)
        pts = project_many(plane, rs.roots, ORTHOGONAL)
        sp = circle_spectrum(pts, mode=ORTHOGONAL)
        _require(len(sp.circles) == 4, f"{len(sp.circles)} circles")
        _require(all(c.count == 30 for c in sp.circles), "multiplicities not 30")
        m = zamolodchikov_spectrum(1.0).masses
        rep = ratio_report(sp.radii, [m[0], m[2], m[3], m[4]])
        _require(rep.max_rel_dev < 1e-9, f"dev {rep.max_rel_dev:.2e}")
        return f"radius ratios match m1:m3:m4:m5 (dev {rep.max_rel_dev:.2e})"

    s.check("600-cell projection: 4 circles of 30 matching m1:m3:m4:m5", circles_match_masses)


def format_results(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        suffix = f"  ({r.detail})" if r.detail else ""
        lines.append(f"[{status}] {r.name}{suffix}")
    n_fail = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - n_fail}/{len(results)} checks passed")
    return "\n".join(lines)
