"""Correspondence analysis of contingency tables.

Given counts N with total n, row masses r and column masses c, the analysis
decomposes the matrix of standardized residuals

    A = D_r^{-1/2} (P - r c^T) D_c^{-1/2},    P = N / n

by SVD A = U S V^T and reports principal coordinates F = D_r^{-1/2} U S for
rows and G = D_c^{-1/2} V S for columns. Total inertia equals the sum of
squared singular values and equals chi-square / n.

Zero rows and columns are dropped before the decomposition. Singular values
at or below ``SINGULAR_VALUE_CUTOFF`` are discarded; if none survive, or the
reduced table is smaller than 2x2, the table carries no analysable
association and RankZero is raised. The sign of each singular dimension is
fixed by making the largest-magnitude entry of the corresponding left
singular vector positive (lowest row index on ties), flipping the right
singular vector jointly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateMatrix, RankZero

SINGULAR_VALUE_CUTOFF = 1e-12


def _as_table(table):
    """Accept a ConfrontationMatrix or a bare array; return counts and labels."""
    if hasattr(table, "counts"):
        counts = np.asarray(table.counts, dtype=float)
        row_labels = tuple(table.row_labels)
        col_labels = tuple(table.col_labels)
    else:
        counts = np.asarray(table, dtype=float)
        if counts.ndim != 2:
            raise ValueError(f"table must be two-dimensional, got shape {counts.shape}")
        row_labels = tuple(f"row{i}" for i in range(counts.shape[0]))
        col_labels = tuple(f"col{j}" for j in range(counts.shape[1]))
    if not np.all(np.isfinite(counts)):
        raise ValueError("table contains non-finite values")
    if np.any(counts < 0):
        raise ValueError("table contains negative values")
    return counts, row_labels, col_labels


def _reduce(counts, row_labels, col_labels):
    """Drop all-zero rows and columns, keeping track of the dropped labels."""
    if counts.sum() <= 0:
        raise DegenerateMatrix("table total is zero")
    keep_rows = counts.sum(axis=1) > 0
    keep_cols = counts.sum(axis=0) > 0
    reduced = counts[np.ix_(keep_rows, keep_cols)]
    kept_r = tuple(l for l, k in zip(row_labels, keep_rows) if k)
    kept_c = tuple(l for l, k in zip(col_labels, keep_cols) if k)
    dropped_r = tuple(l for l, k in zip(row_labels, keep_rows) if not k)
    dropped_c = tuple(l for l, k in zip(col_labels, keep_cols) if not k)
    return reduced, kept_r, kept_c, dropped_r, dropped_c


@dataclass(frozen=True)
class PearsonRatioMatrix:
    """Observed-over-expected ratios of the reduced table."""

    ratios: np.ndarray
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]


def _margins(reduced):
    n = reduced.sum()
    P = reduced / n
    r = P.sum(axis=1)
    c = P.sum(axis=0)
    return n, P, r, c


def pearson_ratios(table) -> PearsonRatioMatrix:
    """Ratio of each joint proportion to its product-of-margins expectation."""
    counts, row_labels, col_labels = _as_table(table)
    reduced, kept_r, kept_c, _, _ = _reduce(counts, row_labels, col_labels)
    _, P, r, c = _margins(reduced)
    return PearsonRatioMatrix(
        ratios=P / np.outer(r, c),
        row_labels=kept_r,
        col_labels=kept_c,
    )


def chi_square(table) -> float:
    """Chi-square statistic of the table: n * sum r_i c_j (alpha_ij - 1)^2."""
    counts, row_labels, col_labels = _as_table(table)
    reduced, kept_r, kept_c, _, _ = _reduce(counts, row_labels, col_labels)
    n, P, r, c = _margins(reduced)
    expected = np.outer(r, c)
    alpha = P / expected
    return float(n * np.sum(expected * (alpha - 1.0) ** 2))


def _canonical_signs(U, V):
    """Flip each singular-vector pair so the dominant entry of U is positive."""
    U = U.copy()
    V = V.copy()
    for k in range(U.shape[1]):
        i = int(np.argmax(np.abs(U[:, k])))
        if U[i, k] < 0:
            U[:, k] = -U[:, k]
            V[:, k] = -V[:, k]
    return U, V


@dataclass(frozen=True)
class CAResult:
    """Principal coordinates and spectrum of one correspondence analysis."""

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    row_masses: np.ndarray
    col_masses: np.ndarray
    singular_values: np.ndarray
    F: np.ndarray
    G: np.ndarray
    inertia: float
    dropped_rows: tuple[str, ...]
    dropped_cols: tuple[str, ...]

    @property
    def rank(self) -> int:
        return int(self.singular_values.size)

    @property
    def rank_deficient(self) -> bool:
        """True when fewer than two dimensions survived."""
        return self.rank < 2

    def _padded(self, coords) -> np.ndarray:
        if coords.shape[1] >= 2:
            return coords[:, :2]
        out = np.zeros((coords.shape[0], 2))
        out[:, : coords.shape[1]] = coords
        return out

    @property
    def F2(self) -> np.ndarray:
        """Row coordinates in the first two dimensions, zero-padded if needed."""
        return self._padded(self.F)

    @property
    def G2(self) -> np.ndarray:
        """Column coordinates in the first two dimensions, zero-padded if needed."""
        return self._padded(self.G)


def correspondence_analysis(table) -> CAResult:
    counts, row_labels, col_labels = _as_table(table)
    reduced, kept_r, kept_c, dropped_r, dropped_c = _reduce(counts, row_labels, col_labels)
    if reduced.shape[0] < 2 or reduced.shape[1] < 2:
        raise RankZero(
            f"reduced table is {reduced.shape[0]}x{reduced.shape[1]}; "
            "need at least 2x2 to carry association"
        )
    _, P, r, c = _margins(reduced)
    sqrt_r = np.sqrt(r)
    sqrt_c = np.sqrt(c)
    A = (P - np.outer(r, c)) / np.outer(sqrt_r, sqrt_c)
    U, s, Vt = np.linalg.svd(A, full_matrices=False)
    keep = s > SINGULAR_VALUE_CUTOFF
    if not np.any(keep):
        raise RankZero("all singular values are below the cutoff; rows and columns are independent")
    U = U[:, keep]
    s = s[keep]
    V = Vt[keep].T
    U, V = _canonical_signs(U, V)
    F = (U * s) / sqrt_r[:, None]
    G = (V * s) / sqrt_c[:, None]
    return CAResult(
        row_labels=kept_r,
        col_labels=kept_c,
        row_masses=r,
        col_masses=c,
        singular_values=s,
        F=F,
        G=G,
        inertia=float(np.sum(s**2)),
        dropped_rows=dropped_r,
        dropped_cols=dropped_c,
    )


def _g17(value: float) -> str:
    return format(float(value), ".17g")


def format_ca_result(ca: CAResult) -> str:
    """Full-precision text rendering for fixtures and diffing."""
    lines = [
        "# correspondence analysis",
        f"rank: {ca.rank}",
        f"inertia: {_g17(ca.inertia)}",
        "dropped_rows: " + ("|".join(ca.dropped_rows) or "-"),
        "dropped_cols: " + ("|".join(ca.dropped_cols) or "-"),
        "sigma: " + " ".join(_g17(v) for v in ca.singular_values),
    ]
    for label, mass in zip(ca.row_labels, ca.row_masses):
        lines.append(f"row_mass\t{label}\t{_g17(mass)}")
    for label, mass in zip(ca.col_labels, ca.col_masses):
        lines.append(f"col_mass\t{label}\t{_g17(mass)}")
    for label, row in zip(ca.row_labels, ca.F):
        lines.append("F\t" + label + "\t" + " ".join(_g17(v) for v in row))
    for label, row in zip(ca.col_labels, ca.G):
        lines.append("G\t" + label + "\t" + " ".join(_g17(v) for v in row))
    return "\n".join(lines) + "\n"
