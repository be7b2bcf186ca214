"""The H4-inside-E8 folding.

The E8 nodes pair up as (1,7), (2,6), (3,5), (4,8).  Combining each pair
with golden-ratio weights,

    b_1 = (a_1 + tau a_7)/sqrt(2+tau)   ...   b_4 = (tau a_4 + a_8)/sqrt(2+tau)

yields four vectors whose Gram matrix is exactly the H4 one (with the
obtuse 144-degree convention, entry -tau), while the conjugate weights
sigma give a second H4 quadruple b'_a orthogonal to the first (its Gram
has -sigma in the last slot, the 72-degree convention).  In the basis
(b_1..b_4, b'_1..b'_4) the E8 Gram matrix is block diagonal.

Individual coordinates of the b_a involve sqrt(2+tau), which lies outside
Q(sqrt5); all *inner products*, however, stay inside the field because
the normalisers only ever appear squared or in the product
(2+tau)(2+sigma) = 5.  The exact computations below therefore work with
unnormalised golden coefficient rows plus a per-row normaliser tag, and
divide exactly at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .diagrams import build_diagram, gram_matrix
from .golden import SQRT5, GoldenNumber, SIGMA, TAU
from .roots import RootSystem

#: E8 node pairs folded onto H4 nodes 1..4
FOLDING_PAIRS = ((1, 7), (2, 6), (3, 5), (4, 8))

_ZERO = GoldenNumber(Fraction(0))
_ONE = GoldenNumber(Fraction(1))
_TWO = GoldenNumber(Fraction(2))

GoldenMatrix = tuple[tuple[GoldenNumber, ...], ...]


@dataclass(frozen=True)
class Folding:
    """The two H4 quadruples inside E8 and the exact change of basis.

    ``coeff_tau``/``coeff_sigma`` hold the unnormalised golden coefficient
    rows of b_a / b'_a over the E8 simples; the actual basis vectors carry
    an extra 1/sqrt(norm_sq_tau) resp. 1/sqrt(norm_sq_sigma).  ``beta``
    and ``beta_prime`` are the normalised vectors in floats.
    """

    beta: np.ndarray
    beta_prime: np.ndarray
    coeff_tau: GoldenMatrix
    coeff_sigma: GoldenMatrix
    norm_sq_tau: GoldenNumber
    norm_sq_sigma: GoldenNumber
    pairs: tuple[tuple[int, int], ...]

    def g_matrix(self) -> np.ndarray:
        """The 8x8 change-of-basis matrix in floats: rows are the
        coefficients of (b_1..b_4, b'_1..b'_4) over the E8 simples."""
        top = np.array([[float(x) for x in row] for row in self.coeff_tau])
        bot = np.array([[float(x) for x in row] for row in self.coeff_sigma])
        top /= np.sqrt(float(self.norm_sq_tau))
        bot /= np.sqrt(float(self.norm_sq_sigma))
        return np.vstack([top, bot])


def _is_e8(rs: RootSystem) -> bool:
    e8 = build_diagram("E8")
    d = rs.diagram
    return d.rank == 8 and d.edges == e8.edges


def _coeff_rows(weight: GoldenNumber) -> GoldenMatrix:
    """Unnormalised coefficient rows over the E8 simples for golden
    weight tau or sigma; the fourth pair carries the weight on its
    first node."""
    rows = []
    for a, (i, j) in enumerate(FOLDING_PAIRS):
        row = [_ZERO] * 8
        if a < 3:
            row[i - 1] = _ONE
            row[j - 1] = weight
        else:
            row[i - 1] = weight
            row[j - 1] = _ONE
        rows.append(tuple(row))
    return tuple(rows)


def fold_e8_to_h4(rs: RootSystem) -> Folding:
    """Build the folded H4 bases from an E8 root system."""
    if not _is_e8(rs):
        raise ValueError("folding requires an E8 root system with the package's node labelling")
    coeff_tau = _coeff_rows(TAU)
    coeff_sigma = _coeff_rows(SIGMA)
    norm_tau = _TWO + TAU
    norm_sigma = _TWO + SIGMA

    def realize(rows: GoldenMatrix, norm_sq: GoldenNumber) -> np.ndarray:
        coef = np.array([[float(x) for x in row] for row in rows])
        return (coef @ rs.simples) / np.sqrt(float(norm_sq))

    return Folding(
        beta=realize(coeff_tau, norm_tau),
        beta_prime=realize(coeff_sigma, norm_sigma),
        coeff_tau=coeff_tau,
        coeff_sigma=coeff_sigma,
        norm_sq_tau=norm_tau,
        norm_sq_sigma=norm_sigma,
        pairs=FOLDING_PAIRS,
    )


def folded_generators(rs: RootSystem) -> tuple[np.ndarray, ...]:
    """The four composite reflections R_a = r_i r_j over the folding
    pairs (the paired reflections commute, so the order is immaterial)."""
    if not _is_e8(rs):
        raise ValueError("folded generators require an E8 root system")
    out = []
    for i, j in FOLDING_PAIRS:
        out.append(rs.reflections[i - 1] @ rs.reflections[j - 1])
    return tuple(out)


def _exact_gram_rows(rs_gram: GoldenMatrix, rows: GoldenMatrix, other: GoldenMatrix) -> list[list[GoldenNumber]]:
    """u_a . u_b = x_a C x_b^T over Q(sqrt5), for unnormalised rows."""
    out = []
    for xa in rows:
        line = []
        for xb in other:
            acc = _ZERO
            for i in range(8):
                if xa[i] == _ZERO:
                    continue
                for j in range(8):
                    if xb[j] == _ZERO:
                        continue
                    acc = acc + xa[i] * rs_gram[i][j] * xb[j]
            line.append(acc)
        out.append(line)
    return out


def block_diagonalize(f: Folding) -> GoldenMatrix:
    """Exact 8x8 Gram matrix of (b_1..b_4, b'_1..b'_4).

    Same-type entries divide by 2+tau resp. 2+sigma; mixed entries divide
    by sqrt((2+tau)(2+sigma)) = sqrt5, all inside Q(sqrt5).  For the E8
    folding the result is exactly block-diag of the two H4 Gram matrices.
    """
    cartan = gram_matrix(build_diagram("E8"))
    if not cartan.exact:
        raise AssertionError("E8 Gram matrix must be exact")
    cg: GoldenMatrix = cartan.entries  # type: ignore[assignment]

    tt = _exact_gram_rows(cg, f.coeff_tau, f.coeff_tau)
    ss = _exact_gram_rows(cg, f.coeff_sigma, f.coeff_sigma)
    ts = _exact_gram_rows(cg, f.coeff_tau, f.coeff_sigma)

    rows: list[tuple[GoldenNumber, ...]] = []
    for a in range(8):
        line: list[GoldenNumber] = []
        for b in range(8):
            if a < 4 and b < 4:
                line.append(tt[a][b] / f.norm_sq_tau)
            elif a >= 4 and b >= 4:
                line.append(ss[a - 4][b - 4] / f.norm_sq_sigma)
            elif a < 4:
                line.append(ts[a][b - 4] / SQRT5)
            else:
                line.append(ts[b][a - 4] / SQRT5)
        rows.append(tuple(line))
    return tuple(rows)


def h4_gram_golden(last_entry: GoldenNumber) -> GoldenMatrix:
    """The H4 chain Gram matrix with the given (3,4) off-diagonal entry
    (-tau for the 144-degree convention, -sigma for 72 degrees)."""
    m1 = GoldenNumber(Fraction(-1))
    rows = [
        (_TWO, m1, _ZERO, _ZERO),
        (m1, _TWO, m1, _ZERO),
        (_ZERO, m1, _TWO, last_entry),
        (_ZERO, _ZERO, last_entry, _TWO),
    ]
    return tuple(rows)


def expected_block_diagonal() -> GoldenMatrix:
    """block-diag(H4 Gram with -tau, H4 Gram with -sigma), exactly."""
    top = h4_gram_golden(-TAU)
    bot = h4_gram_golden(-SIGMA)
    rows = []
    for a in range(8):
        line = []
        for b in range(8):
            if a < 4 and b < 4:
                line.append(top[a][b])
            elif a >= 4 and b >= 4:
                line.append(bot[a - 4][b - 4])
            else:
                line.append(_ZERO)
        rows.append(tuple(line))
    return tuple(rows)


def decompose_root(f: Folding, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split v into its components in span(beta) and span(beta')."""
    q_tau, _ = np.linalg.qr(f.beta.T)
    q_sig, _ = np.linalg.qr(f.beta_prime.T)
    v = np.asarray(v, dtype=float)
    return q_tau @ (q_tau.T @ v), q_sig @ (q_sig.T @ v)
