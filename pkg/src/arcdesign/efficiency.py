"""Efficiency factors of contractions and of the augmented designs they generate.

The quantities computed here all descend from two information matrices:

* the contraction's own row-column information matrix (v x v), and
* the augmented design's information matrix (v* x v*).

The key fact the package is built on is that the two are linked: the
non-trivial canonical efficiency factors (cefs) of the augmented design are
exactly the non-trivial eigenvalues of a joint (v+s) x (v+s) matrix assembled
from the contraction alone (``b_matrix``), padded with unit cefs.  The
average efficiency factor of the augmented design therefore has a closed form
(``e_aug_formula``) in two contraction-level summaries: ``c_bar_v`` from the
row block and ``c_bar_s`` from the column block.  ``e_aug_direct`` recomputes
the same number from the full v* x v* eigenproblem and serves as the
independent route for verification.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .designs import (
    AugmentedDesign,
    ContractionDesign,
    incidence,
    validate_augmented,
    validate_contraction,
)
from .errors import DisconnectedDesignError
from .spectra import (
    Spectrum,
    cefs_from_info,
    eig_symmetric,
    harmonic_mean_nontrivial,
    helmert_basis,
    restricted_eigenvalues,
    trivial_tolerance,
)


def info_matrix_contraction(c: ContractionDesign) -> np.ndarray:
    """Row-column information matrix of the contraction.

    ``diag(r) - (1/s) N_R N_R' - (1/k) N_C N_C' + (1/(ks)) r r'``; row sums
    are zero, so the matrix has rank at most v-1.
    """
    inc = incidence(c)
    r = c.r.astype(float)
    return (
        np.diag(r)
        - inc.w / c.s
        - (inc.n_c @ inc.n_c.T) / c.k
        + np.outer(r, r) / (c.k * c.s)
    )


def contraction_cefs(c: ContractionDesign) -> Spectrum:
    """Canonical efficiency factors of the contraction itself."""
    return cefs_from_info(info_matrix_contraction(c), c.r.astype(float))


def e_con(c: ContractionDesign) -> float:
    """Average efficiency factor of the contraction: harmonic mean of its v-1 cefs."""
    return harmonic_mean_nontrivial(contraction_cefs(c), expected_trivial=1)


def c_bar_v(c: ContractionDesign) -> float:
    """Harmonic-mean eigenvalue of the contraction information matrix over mean replication.

    Equals ``e_con`` whenever replication is equal; with unequal replication
    the two differ because the scaling here uses the mean rather than the
    per-label replications.
    """
    sp = eig_symmetric(info_matrix_contraction(c))
    c_v = harmonic_mean_nontrivial(sp, expected_trivial=1)
    return c_v / c.r_bar


def _centered_column_incidence(c: ContractionDesign, inc) -> np.ndarray:
    # N_C - (1/s) r 1', the column incidence with row effects swept out.
    return inc.n_c - np.outer(c.r.astype(float), np.ones(c.s)) / c.s


def _row_component(c: ContractionDesign, inc) -> np.ndarray:
    # diag(r) - (1/s) W: the rows-only part of the information matrix.
    return np.diag(c.r.astype(float)) - inc.w / c.s


def c_bar_s(c: ContractionDesign) -> float:
    """Harmonic-mean eigenvalue of the column block of the joint matrix inverse.

    Computed as the Schur complement ``I_s - (1/k) F' (S + cJ)^-1 F`` with
    ``F`` the centered column incidence, ``S`` the rows-only information
    matrix, and a ridge ``c = r_bar^2 / v`` on the all-ones direction to make
    ``S`` invertible (``F`` annihilates that direction, so the ridge does not
    move the relevant eigenvalues).  The trivial eigenvalue of the bracket is
    1 on the all-ones vector, so the s-1 informative ones are extracted on an
    explicit orthonormal complement.
    """
    inc = incidence(c)
    f = _centered_column_incidence(c, inc)
    ridge = (c.r_bar**2 / c.v) * np.ones((c.v, c.v))
    middle = _row_component(c, inc) + ridge

    w = np.linalg.eigvalsh(middle)
    if w[0] <= 1e-10 * max(1.0, w[-1]):
        raise DisconnectedDesignError(
            "row component of the contraction is singular even after the ridge: rows disconnected"
        )
    bracket = np.eye(c.s) - (f.T @ np.linalg.solve(middle, f)) / c.k

    vals = restricted_eigenvalues(bracket, helmert_basis(c.s))
    tol = trivial_tolerance(vals)
    if np.any(np.abs(vals) < tol):
        raise DisconnectedDesignError(
            "column block has a zero eigenvalue: columns disconnected"
        )
    return (c.s - 1) / float(np.sum(1.0 / vals))


def c_bar_s_alt_scaling(c: ContractionDesign) -> float:
    """Diagnostic variant of ``c_bar_s`` with an unscaled concurrence middle term.

    Uses ``(diag(r) - W + J)^-1`` and no 1/k factor on the product.  Retained
    so the sensitivity of the column summary to the middle-term scaling is
    observable; not used by any shipping computation.
    """
    inc = incidence(c)
    f = _centered_column_incidence(c, inc)
    middle = np.diag(c.r.astype(float)) - inc.w + np.ones((c.v, c.v))
    bracket = np.eye(c.s) - f.T @ np.linalg.solve(middle, f)
    vals = restricted_eigenvalues(bracket, helmert_basis(c.s))
    return (c.s - 1) / float(np.sum(1.0 / vals))


def b_matrix(c: ContractionDesign) -> np.ndarray:
    """Joint (v+s) x (v+s) matrix whose non-trivial eigenvalues are augmented-design cefs.

    Assembled as ``D^-1/2 [[diag(r) - W/s, F], [F', k I_s]] D^-1/2`` with
    ``D = diag(s I_v, v I_s)``.  The two trivial directions are spanned by
    ``(1_v, 0)`` (eigenvalue 0) and ``(0, 1_s)`` (eigenvalue k/v); the
    remaining (v-1)+(s-1) eigenvalues are the cefs that the augmented design
    adds beyond its unit ones.
    """
    inc = incidence(c)
    f = _centered_column_incidence(c, inc)
    v, s, k = c.v, c.s, c.k
    top = np.hstack([_row_component(c, inc), f])
    bottom = np.hstack([f.T, k * np.eye(s)])
    m = np.vstack([top, bottom])
    d_inv_sqrt = np.concatenate([np.full(v, 1.0 / np.sqrt(s)), np.full(s, 1.0 / np.sqrt(v))])
    return m * np.outer(d_inv_sqrt, d_inv_sqrt)


def b_nontrivial_eigenvalues(c: ContractionDesign) -> np.ndarray:
    """The (v-1)+(s-1) eigenvalues of ``b_matrix`` off its two trivial directions."""
    b = b_matrix(c)
    hv = helmert_basis(c.v)
    hs = helmert_basis(c.s)
    basis = np.zeros((c.v + c.s, (c.v - 1) + (c.s - 1)))
    basis[: c.v, : c.v - 1] = hv
    basis[c.v :, c.v - 1 :] = hs
    return restricted_eigenvalues(b, basis)


def e_dual_column(c: ContractionDesign) -> float:
    """Average efficiency factor of the dual of the contraction's column design.

    The column design has v treatments in s blocks of size k; its dual swaps
    the roles, giving s treatments (each replicated k times) in v blocks with
    incidence ``N_C'``.  The dual's non-unit cefs coincide with the column
    design's, so this is also the unit-padded column-design summary.
    """
    if c.s < 2:
        raise ValueError("dual of a single-column design is degenerate")
    inc = incidence(c)
    r = c.r.astype(float)
    dual_info = c.k * np.eye(c.s) - inc.n_c.T @ np.diag(1.0 / r) @ inc.n_c
    sp = cefs_from_info(dual_info, np.full(c.s, float(c.k)))
    return harmonic_mean_nontrivial(sp, expected_trivial=1)


def is_generally_balanced(c: ContractionDesign, tol: float = 1e-8) -> bool:
    """Whether row and column structures commute: ``W N_C`` constant at r_bar^2.

    When true, the column block of the joint matrix collapses to the dual
    column design and ``c_bar_s`` equals ``e_dual_column`` exactly.
    """
    inc = incidence(c)
    target = c.r_bar**2
    return float(np.abs(inc.w @ inc.n_c - target).max()) <= tol


def e_aug_formula(v_star: int, v: int, s: int, k: int, c_bar_v: float, c_bar_s: float) -> float:
    """Closed-form average efficiency factor of the augmented design.

    ``(v*-1) / (v* - (v+s) + 1 + (v/k) ((v-1)/c_bar_v + (s-1)/c_bar_s))``.
    """
    for name, value in (("v_star", v_star), ("v", v), ("s", s), ("k", k)):
        if value < 1:
            raise ValueError(f"{name} must be positive, got {value}")
    if c_bar_v <= 0 or c_bar_s <= 0:
        raise ValueError("c_bar_v and c_bar_s must be positive")
    denom = v_star - (v + s) + 1 + (v / k) * ((v - 1) / c_bar_v + (s - 1) / c_bar_s)
    return (v_star - 1) / denom


def info_matrix_augmented(a: AugmentedDesign) -> np.ndarray:
    """Information matrix of the augmented design.

    ``diag(u) - (1/s) M_R M_R' - (1/v) M_C M_C' + (1/n) u u'`` where the
    replication-products term carries the 1/n factor required for zero row
    sums.  ``M_R``/``M_C`` count treatment occurrences per row/column.
    """
    validate_augmented(a).raise_if_invalid("augmented design")
    v, s = a.v, a.s
    v_star, n = a.v_star, v * s
    labels = a.cells - 1
    m_r = np.zeros((v_star, v))
    m_c = np.zeros((v_star, s))
    rows = np.repeat(np.arange(v), s)
    cols = np.tile(np.arange(s), v)
    np.add.at(m_r, (labels.ravel(), rows), 1.0)
    np.add.at(m_c, (labels.ravel(), cols), 1.0)
    u = a.u
    return np.diag(u) - (m_r @ m_r.T) / s - (m_c @ m_c.T) / v + np.outer(u, u) / n


def augmented_cefs(a: AugmentedDesign) -> Spectrum:
    """Canonical efficiency factors of the augmented design."""
    return cefs_from_info(info_matrix_augmented(a), a.u)


def e_aug_direct(a: AugmentedDesign) -> float:
    """Average efficiency factor from the full v* x v* eigenproblem."""
    return harmonic_mean_nontrivial(augmented_cefs(a), expected_trivial=1)


def _clamped_cefs(sp: Spectrum) -> tuple[float, ...]:
    vals = sp.nontrivial()
    return tuple(float(x) for x in np.clip(np.sort(vals)[::-1], 0.0, 1.0))


@dataclass(frozen=True)
class EfficiencyReport:
    """Every efficiency summary of a contraction and its augmented design.

    ``e_aug_direct`` and ``cefs_augmented`` are filled only when the direct
    (v* x v* eigendecomposition) route was requested; the formula route is
    always present.
    """

    e_con: float
    c_bar_v: float
    c_bar_s: float
    e_dual: float
    e_aug_formula: float
    generally_balanced: bool
    cefs_contraction: tuple[float, ...]
    e_aug_direct: float | None = None
    cefs_augmented: tuple[float, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "eCon": self.e_con,
            "cBarV": self.c_bar_v,
            "cBarS": self.c_bar_s,
            "eDual": self.e_dual,
            "eAugFormula": self.e_aug_formula,
            "eAugDirect": self.e_aug_direct,
            "generallyBalanced": self.generally_balanced,
            "cefsContraction": list(self.cefs_contraction),
            "cefsAugmented": list(self.cefs_augmented) if self.cefs_augmented is not None else None,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def full_report(c: ContractionDesign, include_direct: bool = False) -> EfficiencyReport:
    """Compute every efficiency quantity for a contraction.

    The direct route materializes the augmented design and solves the full
    v* x v* eigenproblem, which is O((vs)^3); it is optional for that reason.
    """
    validate_contraction(c).raise_if_invalid("contraction")
    cbv = c_bar_v(c)
    cbs = c_bar_s(c)
    v_star = (c.v - c.k) * c.s + c.k
    report = dict(
        e_con=e_con(c),
        c_bar_v=cbv,
        c_bar_s=cbs,
        e_dual=e_dual_column(c),
        e_aug_formula=e_aug_formula(v_star, c.v, c.s, c.k, cbv, cbs),
        generally_balanced=is_generally_balanced(c),
        cefs_contraction=_clamped_cefs(contraction_cefs(c)),
    )
    if include_direct:
        from .augmentor import augment

        a = augment(c)
        sp = augmented_cefs(a)
        report["e_aug_direct"] = harmonic_mean_nontrivial(sp, expected_trivial=1)
        report["cefs_augmented"] = _clamped_cefs(sp)
    return EfficiencyReport(**report)
