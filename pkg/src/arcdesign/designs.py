"""Design containers, structural validation, and incidence matrices.

Two array types are used throughout:

* ``ContractionDesign`` -- a small k x s auxiliary row-column design on v
  pseudo-treatment labels.  Each pseudo-treatment stands for one row of the
  larger design it will generate, and its replication vector ``r`` records how
  often each label occurs.
* ``AugmentedDesign`` -- the full v x s layout in which a handful of
  replicated check treatments share the array with unreplicated test lines.
  The last k labels are the checks; each check occupies exactly one plot per
  column.

All cell labels are 1-based at every interface.  Arrays are stored read-only,
so design values can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleParametersError, InvalidDesignError


def feasibility_df(v: int, s: int, k: int) -> int:
    """Residual degrees of freedom of the contraction's row-column ANOVA.

    ``k*s - 1 - (k-1) - (s-1) - (v-1)``; a valid contraction requires this to
    be non-negative.
    """
    return k * s - 1 - (k - 1) - (s - 1) - (v - 1)


def _frozen_int_array(values, name: str) -> np.ndarray:
    arr = np.array(values, dtype=np.int64, copy=True)
    arr.setflags(write=False)
    if name == "cells" and arr.ndim != 2:
        raise ValueError(f"cells must be a 2-D array, got {arr.ndim}-D")
    if name == "r" and arr.ndim != 1:
        raise ValueError(f"r must be a 1-D vector, got {arr.ndim}-D")
    return arr


@dataclass(frozen=True, eq=False)
class ContractionDesign:
    """A k x s array of pseudo-treatment labels 1..v with replication vector r."""

    v: int
    cells: np.ndarray
    r: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "cells", _frozen_int_array(self.cells, "cells"))
        object.__setattr__(self, "r", _frozen_int_array(self.r, "r"))
        if self.v < 1:
            raise ValueError("v must be positive")
        if len(self.r) != self.v:
            raise ValueError(f"r has length {len(self.r)}, expected v={self.v}")

    @classmethod
    def from_cells(cls, cells, v: int | None = None) -> "ContractionDesign":
        """Build a design from its array alone, deriving r by counting labels."""
        arr = np.asarray(cells, dtype=np.int64)
        if v is None:
            v = int(arr.max()) if arr.size else 0
        counts = np.bincount(arr.ravel(), minlength=v + 1)[1 : v + 1]
        return cls(v=v, cells=arr, r=counts)

    @property
    def k(self) -> int:
        return self.cells.shape[0]

    @property
    def s(self) -> int:
        return self.cells.shape[1]

    @property
    def r_bar(self) -> float:
        """Mean replication k*s/v."""
        return self.k * self.s / self.v

    def __eq__(self, other):
        if not isinstance(other, ContractionDesign):
            return NotImplemented
        return (
            self.v == other.v
            and self.cells.shape == other.cells.shape
            and np.array_equal(self.cells, other.cells)
            and np.array_equal(self.r, other.r)
        )

    def __hash__(self):
        return hash((self.v, self.cells.shape, self.cells.tobytes(), self.r.tobytes()))

    def __repr__(self):
        return f"ContractionDesign(v={self.v}, k={self.k}, s={self.s})"


@dataclass(frozen=True, eq=False)
class AugmentedDesign:
    """A v x s array over labels 1..v_star whose last k labels are checks."""

    k: int
    cells: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "cells", _frozen_int_array(self.cells, "cells"))
        if not 1 <= self.k <= self.v:
            raise ValueError(f"k={self.k} out of range for a {self.v}-row array")

    @property
    def v(self) -> int:
        return self.cells.shape[0]

    @property
    def s(self) -> int:
        return self.cells.shape[1]

    @property
    def n_test_lines(self) -> int:
        return (self.v - self.k) * self.s

    @property
    def v_star(self) -> int:
        return self.n_test_lines + self.k

    @property
    def check_labels(self) -> range:
        return range(self.n_test_lines + 1, self.v_star + 1)

    @property
    def u(self) -> np.ndarray:
        """Replication vector: 1 per test line, then s per check."""
        u = np.ones(self.v_star)
        u[self.n_test_lines :] = self.s
        return u

    def __eq__(self, other):
        if not isinstance(other, AugmentedDesign):
            return NotImplemented
        return (
            self.k == other.k
            and self.cells.shape == other.cells.shape
            and np.array_equal(self.cells, other.cells)
        )

    def __hash__(self):
        return hash((self.k, self.cells.shape, self.cells.tobytes()))

    def __repr__(self):
        return f"AugmentedDesign(v={self.v}, s={self.s}, k={self.k})"


@dataclass(frozen=True)
class IncidenceSet:
    """Row/column incidence matrices of a contraction and its row concurrences.

    ``n_r[h, i] = 1`` iff label h+1 occurs in contraction row i+1; ``n_c`` is
    the same against columns; ``w = n_r @ n_r.T`` counts, for every pair of
    labels, the rows in which they appear together.
    """

    n_r: np.ndarray
    n_c: np.ndarray
    w: np.ndarray


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of structural validation: an empty tuple means the design is valid."""

    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def raise_if_invalid(self, what: str = "design"):
        if self.violations:
            raise InvalidDesignError(
                f"invalid {what}: " + "; ".join(self.violations), self.violations
            )


def validate_contraction(c: ContractionDesign) -> ValidationReport:
    """Check every structural invariant of a contraction.

    Violations are returned as data (with cell coordinates) rather than
    raised, so callers can print actionable diagnostics.
    """
    violations: list[str] = []
    k, s, v = c.k, c.s, c.v
    cells = c.cells

    if v < s:
        violations.append(f"needs at least as many pseudo-treatments as columns (v={v} < s={s})")

    bad = (cells < 1) | (cells > v)
    if bad.any():
        for i, j in zip(*np.nonzero(bad)):
            violations.append(f"label {cells[i, j]} at ({i + 1},{j + 1}) outside 1..{v}")
        return ValidationReport(tuple(violations))

    for j in range(s):
        col = cells[:, j]
        labels, counts = np.unique(col, return_counts=True)
        for lab, cnt in zip(labels, counts):
            if cnt > 1:
                rows = [str(i + 1) for i in np.nonzero(col == lab)[0]]
                violations.append(
                    f"column {j + 1} non-binary: label {lab} occurs {cnt} times (rows {', '.join(rows)})"
                )
    for i in range(k):
        row = cells[i, :]
        labels, counts = np.unique(row, return_counts=True)
        for lab, cnt in zip(labels, counts):
            if cnt > 1:
                cols = [str(j + 1) for j in np.nonzero(row == lab)[0]]
                violations.append(
                    f"row {i + 1} non-binary: label {lab} occurs {cnt} times (columns {', '.join(cols)})"
                )

    counts = np.bincount(cells.ravel(), minlength=v + 1)[1 : v + 1]
    if int(c.r.sum()) != k * s:
        violations.append(f"replication vector sums to {int(c.r.sum())}, expected k*s={k * s}")
    mismatched = np.nonzero(counts != c.r)[0]
    for h in mismatched:
        violations.append(
            f"replication mismatch for label {h + 1}: r says {int(c.r[h])}, cells contain {int(counts[h])}"
        )
    if int(c.r.max()) - int(c.r.min()) > 1:
        violations.append(
            f"replication spread exceeds 1 (min {int(c.r.min())}, max {int(c.r.max())})"
        )

    df = feasibility_df(v, s, k)
    if df < 0:
        violations.append(f"negative residual degrees of freedom ({df}) for a {k}x{s} array on {v} labels")

    return ValidationReport(tuple(violations))


def validate_augmented(a: AugmentedDesign, r=None) -> ValidationReport:
    """Check the structural invariants of an augmented design.

    Each check label must occur exactly once per column and each test line
    exactly once overall.  When the generating contraction's replication
    vector ``r`` is supplied, per-row check counts are verified against it.
    """
    violations: list[str] = []
    v, s, k = a.v, a.s, a.k
    cells = a.cells
    n_test = a.n_test_lines

    bad = (cells < 1) | (cells > a.v_star)
    if bad.any():
        for i, j in zip(*np.nonzero(bad)):
            violations.append(f"label {cells[i, j]} at ({i + 1},{j + 1}) outside 1..{a.v_star}")
        return ValidationReport(tuple(violations))

    for j in range(s):
        col = cells[:, j]
        for lab in a.check_labels:
            cnt = int(np.count_nonzero(col == lab))
            if cnt != 1:
                violations.append(f"column {j + 1} has check {lab} {cnt} times (expected once)")

    counts = np.bincount(cells.ravel(), minlength=a.v_star + 1)[1:]
    for t in range(n_test):
        if counts[t] != 1:
            violations.append(f"test line {t + 1} occurs {int(counts[t])} times (expected once)")

    if r is not None:
        r = np.asarray(r, dtype=np.int64)
        is_check = cells > n_test
        row_counts = is_check.sum(axis=1)
        for h in range(v):
            if row_counts[h] != r[h]:
                violations.append(
                    f"row {h + 1} holds {int(row_counts[h])} checks, expected {int(r[h])}"
                )

    return ValidationReport(tuple(violations))


def incidence(c: ContractionDesign) -> IncidenceSet:
    """Incidence and concurrence matrices of a valid contraction.

    Rejects invalid input: incidence matrices of a non-binary array would not
    be 0/1 and every downstream formula assumes binarity.
    """
    validate_contraction(c).raise_if_invalid("contraction")
    n_r, n_c = _incidence_arrays(c.cells, c.v)
    return IncidenceSet(n_r=n_r, n_c=n_c, w=n_r @ n_r.T)


def _incidence_arrays(cells: np.ndarray, v: int) -> tuple[np.ndarray, np.ndarray]:
    # Assumes a binary array; shared with the search hot path.
    k, s = cells.shape
    flat = cells.ravel() - 1
    n_r = np.zeros((v, k))
    n_r[flat, np.repeat(np.arange(k), s)] = 1.0
    n_c = np.zeros((v, s))
    n_c[flat, np.tile(np.arange(s), k)] = 1.0
    return n_r, n_c


def balanced_replication(v: int, k: int, s: int) -> np.ndarray:
    """Near-equal replication counts for v labels in a k x s binary array.

    Every entry is floor(ks/v) or ceil(ks/v) and the ``ks mod v`` larger
    values go to the lowest labels.  That assignment is a deterministic
    canonical form: which labels carry the extra replicate is immaterial to
    any efficiency quantity, and the search permutes cell contents anyway.
    """
    if k < 1 or s < 1 or v < 1:
        raise InfeasibleParametersError("v, k, s must all be positive")
    if k > v:
        raise InfeasibleParametersError(
            f"k={k} checks cannot be column-distinct among v={v} labels"
        )
    df = feasibility_df(v, s, k)
    if df < 0:
        raise InfeasibleParametersError(
            f"(v={v}, s={s}, k={k}) leaves {df} residual degrees of freedom; need >= 0"
        )
    base, extra = divmod(k * s, v)
    r = np.full(v, base, dtype=np.int64)
    r[:extra] += 1
    if r.max() > min(k, s):
        raise InfeasibleParametersError(
            f"replication {int(r.max())} exceeds min(k, s)={min(k, s)}; no binary array exists"
        )
    return r
