"""Independent oracles the tests check the library against.

Each function here deliberately takes a different computational route from
the code under test: pairwise variances go through the Moore-Penrose inverse
(SVD) instead of an eigendecomposition, concurrences are counted by explicit
enumeration instead of a matrix product, and small search spaces are
enumerated outright.
"""

import itertools

import numpy as np

from arcdesign import ContractionDesign, e_con, validate_contraction
from arcdesign.errors import DisconnectedDesignError


def pairwise_variance_efficiency(info_matrix, u) -> float:
    """Average efficiency factor from replication-weighted pairwise variances.

    For treatments i, j the variance factor of their estimated difference is
    ``A+_ii + A+_jj - 2 A+_ij`` with ``A+`` the pseudo-inverse of the
    information matrix; weighting pairs by u_i u_j and comparing against the
    unblocked reference design gives the same number as the harmonic mean of
    the canonical efficiency factors.
    """
    a_pinv = np.linalg.pinv(np.asarray(info_matrix, dtype=float))
    u = np.asarray(u, dtype=float)
    t = len(u)
    n = float(u.sum())
    d = np.diag(a_pinv)
    variance_factors = d[:, None] + d[None, :] - 2.0 * a_pinv
    weighted = float(u @ variance_factors @ u)
    return 2.0 * n * (t - 1) / weighted


def concurrence_by_enumeration(cells, v: int) -> np.ndarray:
    """Row concurrence counts by walking every row and counting label pairs."""
    cells = np.asarray(cells)
    w = np.zeros((v, v), dtype=np.int64)
    for row in cells:
        for a in row:
            for b in row:
                w[a - 1, b - 1] += 1
    return w


def column_product_by_enumeration(cells, v: int) -> np.ndarray:
    """W @ N_C computed entrywise from definitions, for general-balance checks."""
    cells = np.asarray(cells)
    w = concurrence_by_enumeration(cells, v)
    s = cells.shape[1]
    n_c = np.zeros((v, s), dtype=np.int64)
    for j in range(s):
        for lab in cells[:, j]:
            n_c[lab - 1, j] = 1
    return w @ n_c


def info_matrix_by_bracket_expansion(c: ContractionDesign) -> np.ndarray:
    """The information matrix via the centered-column-product form.

    ``diag(r) - W/s - (1/k)(N_C - r 1'/s)(N_C - r 1'/s)'`` expands to the
    same matrix as the direct four-term assembly; computing it this way gives
    the tests an algebraically distinct construction to compare against.
    """
    v, s, k = c.v, c.s, c.k
    cells = np.asarray(c.cells)
    r = c.r.astype(float)
    n_c = np.zeros((v, s))
    for j in range(s):
        for lab in cells[:, j]:
            n_c[lab - 1, j] = 1.0
    w = concurrence_by_enumeration(cells, v).astype(float)
    f = n_c - np.outer(r, np.ones(s)) / s
    return np.diag(r) - w / s - (f @ f.T) / k


def all_valid_2xs_arrays(v: int, s: int):
    """Every valid 2-row contraction on v labels with balanced replication.

    Rows are built from permutations; column-binarity means the two rows
    disagree everywhere.  Only practical for desk-scale v and s.
    """
    labels = list(range(1, v + 1))
    per_row = s
    if v != s:
        raise ValueError("enumerator assumes v == s so each row is a permutation")
    for row1 in itertools.permutations(labels, per_row):
        for row2 in itertools.permutations(labels, per_row):
            if any(a == b for a, b in zip(row1, row2)):
                continue
            c = ContractionDesign.from_cells(np.array([row1, row2]), v=v)
            if validate_contraction(c).ok:
                yield c


def exhaustive_best_e_con(v: int, s: int):
    """Optimum contraction efficiency over the full (2-row) space, scoring disconnection 0."""
    best = 0.0
    count = 0
    for c in all_valid_2xs_arrays(v, s):
        count += 1
        try:
            val = e_con(c)
        except DisconnectedDesignError:
            val = 0.0
        best = max(best, val)
    return best, count
