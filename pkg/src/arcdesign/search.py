"""Seeded stochastic search for efficient contractions.

The search walks the space of valid contractions (column- and row-binary
arrays with a fixed replication vector) using three move classes:

* ``within_column`` -- swap two cells of one column; row membership changes,
  column contents and replications do not.
* ``within_row`` -- swap two cells of one row; column contents change, row
  membership does not.
* ``transpose`` -- swap two cells in different rows and columns.

Moves are emitted only when the result stays binary, so every design the
search evaluates is valid.  Everything is deterministic given the seed:
restart i draws from a generator seeded with ``seed ^ i``, and the reduction
over restarts is by (objective, restart index, lexicographic array), so
running restarts serially or concurrently gives the same answer.

A direct search over the full augmented array is included as a baseline
comparator; it moves check plots within columns and scores candidates with
the O((vs)^3) direct efficiency computation, which is exactly the cost the
contraction route avoids.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .designs import (
    AugmentedDesign,
    ContractionDesign,
    _incidence_arrays,
    balanced_replication,
    feasibility_df,
)
from .efficiency import e_aug_direct, e_aug_formula
from .errors import (
    ConstructionError,
    DisconnectedDesignError,
    InfeasibleParametersError,
)
from .spectra import helmert_basis
from .textio import format_design

_STRATEGIES = ("hillclimb", "anneal", "column-first")
_OBJECTIVES = ("e_con", "e_aug")
#: Second-smallest eigenvalue below this means the candidate is disconnected.
_DISCONNECT_TOL = 1e-8


class Move(NamedTuple):
    """A two-cell swap; positions are 0-based (row, column) pairs."""

    kind: str
    a: tuple[int, int]
    b: tuple[int, int]


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of the stochastic search; defaults suit desk-scale arrays."""

    seed: int = 0
    strategy: str = "hillclimb"
    restarts: int = 50
    max_iters: int = 20000
    anneal_initial_temp: float = 0.05
    anneal_decay: float = 0.999
    time_budget: float | None = None
    workers: int = 1
    objective: str = "e_con"

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.strategy not in _STRATEGIES:
            raise ValueError(f"strategy must be one of {_STRATEGIES}, got {self.strategy!r}")
        if self.objective not in _OBJECTIVES:
            raise ValueError(f"objective must be one of {_OBJECTIVES}, got {self.objective!r}")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if not 0 < self.anneal_decay < 1:
            raise ValueError("anneal_decay must lie in (0, 1)")
        if self.anneal_initial_temp <= 0:
            raise ValueError("anneal_initial_temp must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class SearchResult:
    """Best contraction found, with the improvement trace of its restart."""

    best: ContractionDesign
    objective: float
    trace: tuple[tuple[int, float], ...]
    elapsed: float
    restart_of_best: int
    timed_out: bool = False

    def to_dict(self, include_elapsed: bool = True) -> dict:
        d = {
            "design": format_design(self.best),
            "objective": self.objective,
            "trace": [[i, v] for i, v in self.trace],
            "restartOfBest": self.restart_of_best,
            "timedOut": self.timed_out,
        }
        if include_elapsed:
            d["elapsed"] = self.elapsed
        return d

    def to_json(self, indent: int | None = 2, include_elapsed: bool = True) -> str:
        return json.dumps(self.to_dict(include_elapsed=include_elapsed), indent=indent)


@dataclass(frozen=True)
class DirectSearchResult:
    """Best augmented design from the direct (full-array) baseline search.

    ``row_check_counts`` reports how many checks each row carries; the direct
    moves keep columns valid but do not constrain rows, so this is
    informational rather than enforced.
    """

    best: AugmentedDesign
    objective: float
    trace: tuple[tuple[int, float], ...]
    elapsed: float
    restart_of_best: int
    row_check_counts: tuple[int, ...]
    timed_out: bool = False

    def to_dict(self, include_elapsed: bool = True) -> dict:
        d = {
            "design": format_design(self.best),
            "objective": self.objective,
            "trace": [[i, v] for i, v in self.trace],
            "restartOfBest": self.restart_of_best,
            "rowCheckCounts": list(self.row_check_counts),
            "timedOut": self.timed_out,
        }
        if include_elapsed:
            d["elapsed"] = self.elapsed
        return d

    def to_json(self, indent: int | None = 2, include_elapsed: bool = True) -> str:
        return json.dumps(self.to_dict(include_elapsed=include_elapsed), indent=indent)


# ---------------------------------------------------------------------------
# random construction


def random_contraction(v: int, s: int, k: int, r=None, seed: int = 0) -> ContractionDesign:
    """A seeded random valid contraction for the given replication vector.

    Fills column by column: labels that must appear in every remaining column
    are forced in, the rest are drawn at random, and a matching assigns them
    to rows without repeats.  Dead ends redraw the labels and, failing that,
    the whole array; the preconditions guarantee an array exists, so bounded
    retries suffice.
    """
    if r is None:
        r = balanced_replication(v, k, s)
    r = np.asarray(r, dtype=np.int64)
    _check_replication(v, s, k, r)
    rng = np.random.default_rng(seed)
    for _ in range(200):
        cells = _try_fill(v, s, k, r, rng)
        if cells is not None:
            return ContractionDesign(v=v, cells=cells, r=r)
    raise ConstructionError(
        f"failed to fill a {k}x{s} array on {v} labels after bounded retries"
    )


def _check_replication(v: int, s: int, k: int, r: np.ndarray) -> None:
    if len(r) != v:
        raise InfeasibleParametersError(f"r has length {len(r)}, expected v={v}")
    if int(r.sum()) != k * s:
        raise InfeasibleParametersError(f"r sums to {int(r.sum())}, expected k*s={k * s}")
    if r.min() < 0:
        raise InfeasibleParametersError("replication counts must be non-negative")
    if int(r.max()) > min(k, s):
        raise InfeasibleParametersError(
            f"replication {int(r.max())} exceeds min(k, s)={min(k, s)}; no binary array exists"
        )
    df = feasibility_df(v, s, k)
    if df < 0:
        raise InfeasibleParametersError(
            f"(v={v}, s={s}, k={k}) leaves {df} residual degrees of freedom; need >= 0"
        )


def _try_fill(v: int, s: int, k: int, r: np.ndarray, rng) -> np.ndarray | None:
    remaining = r.copy()
    cells = np.zeros((k, s), dtype=np.int64)
    row_sets: list[set[int]] = [set() for _ in range(k)]
    for j in range(s):
        cols_left = s - j
        urgent = np.nonzero(remaining == cols_left)[0]
        if len(urgent) > k:
            return None
        optional = np.nonzero((remaining > 0) & (remaining < cols_left))[0]
        need = k - len(urgent)
        if len(optional) < need:
            return None
        placed = False
        for _ in range(12):
            extra = rng.choice(optional, size=need, replace=False) if need else optional[:0]
            labels = np.concatenate([urgent, extra]) + 1
            rows = _match_rows(labels, row_sets, k, rng)
            if rows is None:
                continue
            for i, lab in zip(rows, labels):
                cells[i, j] = lab
                row_sets[i].add(int(lab))
                remaining[lab - 1] -= 1
            placed = True
            break
        if not placed:
            return None
    return cells


def _match_rows(labels, row_sets, k: int, rng) -> list[int] | None:
    # Kuhn's augmenting paths: labels to rows, avoiding row repeats.
    allowed = []
    for lab in labels:
        rows = [i for i in range(k) if int(lab) not in row_sets[i]]
        allowed.append([rows[x] for x in rng.permutation(len(rows))] if rows else [])
    row_owner = [-1] * k

    def assign(li: int, seen: list[bool]) -> bool:
        for row in allowed[li]:
            if not seen[row]:
                seen[row] = True
                if row_owner[row] == -1 or assign(row_owner[row], seen):
                    row_owner[row] = li
                    return True
        return False

    for li in rng.permutation(len(labels)):
        if not assign(int(li), [False] * k):
            return None
    rows_for_label = [-1] * len(labels)
    for row, li in enumerate(row_owner):
        rows_for_label[li] = row
    return rows_for_label


# ---------------------------------------------------------------------------
# neighbourhood


def neighbor_moves(c: ContractionDesign, classes=("within_column", "within_row", "transpose")):
    """All validity-preserving two-cell swaps of a contraction, in canonical order."""
    return tuple(_catalogue(c.cells, c.v, classes))


def apply_move(c: ContractionDesign, move: Move) -> ContractionDesign:
    """The contraction obtained by performing one move; replications are unchanged."""
    return ContractionDesign(v=c.v, cells=_apply_cells(c.cells, move), r=c.r)


def _apply_cells(cells: np.ndarray, move: Move) -> np.ndarray:
    out = cells.copy()
    (i1, j1), (i2, j2) = move.a, move.b
    out[i1, j1], out[i2, j2] = out[i2, j2], out[i1, j1]
    return out


def _membership(cells: np.ndarray, v: int):
    k, s = cells.shape
    row_has = np.zeros((k, v + 1), dtype=bool)
    col_has = np.zeros((s, v + 1), dtype=bool)
    for i in range(k):
        row_has[i, cells[i]] = True
    for j in range(s):
        col_has[j, cells[:, j]] = True
    return row_has, col_has


def _catalogue(cells: np.ndarray, v: int, classes) -> list[Move]:
    k, s = cells.shape
    row_has, col_has = _membership(cells, v)
    moves: list[Move] = []
    if "within_column" in classes:
        for j in range(s):
            for i1 in range(k - 1):
                for i2 in range(i1 + 1, k):
                    a, b = cells[i1, j], cells[i2, j]
                    if a != b and not row_has[i1, b] and not row_has[i2, a]:
                        moves.append(Move("within_column", (i1, j), (i2, j)))
    if "within_row" in classes:
        for i in range(k):
            for j1 in range(s - 1):
                for j2 in range(j1 + 1, s):
                    a, b = cells[i, j1], cells[i, j2]
                    if a != b and not col_has[j1, b] and not col_has[j2, a]:
                        moves.append(Move("within_row", (i, j1), (i, j2)))
    if "transpose" in classes:
        for i1 in range(k - 1):
            for i2 in range(i1 + 1, k):
                for j1 in range(s):
                    for j2 in range(s):
                        if j1 == j2:
                            continue
                        a, b = cells[i1, j1], cells[i2, j2]
                        if (
                            a != b
                            and not row_has[i1, b]
                            and not row_has[i2, a]
                            and not col_has[j1, b]
                            and not col_has[j2, a]
                        ):
                            moves.append(Move("transpose", (i1, j1), (i2, j2)))
    return moves


def _sample_move(cells: np.ndarray, v: int, rng) -> Move | None:
    # Uniform over valid swaps: draw cell pairs, classify, reject invalid.
    k, s = cells.shape
    n = k * s
    for _ in range(256):
        p, q = rng.choice(n, size=2, replace=False)
        p, q = (p, q) if p < q else (q, p)
        i1, j1 = divmod(int(p), s)
        i2, j2 = divmod(int(q), s)
        a, b = cells[i1, j1], cells[i2, j2]
        if a == b:
            continue
        if i1 != i2 and ((b in cells[i1]) or (a in cells[i2])):
            continue
        if j1 != j2 and ((b in cells[:, j1]) or (a in cells[:, j2])):
            continue
        if i1 == i2:
            kind = "within_row"
        elif j1 == j2:
            kind = "within_column"
        else:
            kind = "transpose"
        return Move(kind, (i1, j1), (i2, j2))
    return None


# ---------------------------------------------------------------------------
# objectives


class _ContractionObjective:
    """Fast average-efficiency evaluation on raw cell arrays.

    Incidence and information matrices are rebuilt per call (they are tiny);
    the column Gram matrix can be pinned when a phase only uses moves that
    keep columns fixed.
    """

    def __init__(self, v: int, s: int, k: int, r: np.ndarray, objective: str = "e_con"):
        self.v, self.s, self.k = v, s, k
        self.r = r.astype(float)
        self.r_diag = np.diag(self.r)
        self.rr_term = np.outer(self.r, self.r) / (k * s)
        inv_sqrt = 1.0 / np.sqrt(self.r)
        self.scale = np.outer(inv_sqrt, inv_sqrt)
        self.objective = objective
        self.v_star = (v - k) * s + k
        self.r_bar = k * s / v
        self._helmert_s = helmert_basis(s) if objective == "e_aug" else None

    def column_gram(self, cells: np.ndarray) -> np.ndarray:
        _, n_c = _incidence_arrays(cells, self.v)
        return (n_c @ n_c.T) / self.k

    def value(self, cells: np.ndarray, col_gram: np.ndarray | None = None) -> float:
        if self.objective == "e_aug":
            return self._value_e_aug(cells)
        return self._value_e_con(cells, col_gram)

    def _value_e_con(self, cells: np.ndarray, col_gram: np.ndarray | None) -> float:
        n_r, n_c = _incidence_arrays(cells, self.v)
        if col_gram is None:
            col_gram = (n_c @ n_c.T) / self.k
        a = self.r_diag - (n_r @ n_r.T) / self.s - col_gram + self.rr_term
        w = np.linalg.eigvalsh(a * self.scale)
        if w[1] <= _DISCONNECT_TOL:
            return 0.0
        return (self.v - 1) / float(np.sum(1.0 / w[1:]))

    def column_value(self, cells: np.ndarray) -> float:
        """Average efficiency factor of the columns-only block design."""
        _, n_c = _incidence_arrays(cells, self.v)
        a = self.r_diag - (n_c @ n_c.T) / self.k
        w = np.linalg.eigvalsh(a * self.scale)
        if w[1] <= _DISCONNECT_TOL:
            return 0.0
        return (self.v - 1) / float(np.sum(1.0 / w[1:]))

    def _value_e_aug(self, cells: np.ndarray) -> float:
        # Closed-form augmented efficiency; costs one extra s x s reduction.
        v, s, k = self.v, self.s, self.k
        n_r, n_c = _incidence_arrays(cells, v)
        w_mat = n_r @ n_r.T
        a = self.r_diag - w_mat / s - (n_c @ n_c.T) / k + self.rr_term
        w = np.linalg.eigvalsh(a)
        if w[1] <= _DISCONNECT_TOL:
            return 0.0
        cbv = ((v - 1) / float(np.sum(1.0 / w[1:]))) / self.r_bar
        f = n_c - np.outer(self.r, np.ones(s)) / s
        middle = self.r_diag - w_mat / s + (self.r_bar**2 / v) * np.ones((v, v))
        try:
            bracket = np.eye(s) - (f.T @ np.linalg.solve(middle, f)) / k
        except np.linalg.LinAlgError:
            return 0.0
        vals = np.linalg.eigvalsh(self._helmert_s.T @ bracket @ self._helmert_s)
        if vals[0] <= _DISCONNECT_TOL:
            return 0.0
        cbs = (s - 1) / float(np.sum(1.0 / vals))
        return e_aug_formula(self.v_star, v, s, k, cbv, cbs)


# ---------------------------------------------------------------------------
# generic local-search drivers


def _hillclimb(state, obj_fn, catalogue_fn, apply_fn, rng, max_iters, deadline):
    """First-improvement hill climbing; stops at a local optimum or budget."""
    cur_val = obj_fn(state)
    trace = [(0, cur_val)]
    evals = 0
    timed_out = False
    while evals < max_iters:
        if deadline is not None and time.monotonic() > deadline:
            timed_out = True
            break
        moves = catalogue_fn(state)
        if not moves:
            break
        improved = False
        for mi in rng.permutation(len(moves)):
            if evals >= max_iters:
                break
            if deadline is not None and time.monotonic() > deadline:
                timed_out = True
                break
            cand = apply_fn(state, moves[mi])
            evals += 1
            val = obj_fn(cand)
            if val > cur_val:
                state, cur_val = cand, val
                trace.append((evals, val))
                improved = True
                break
        if not improved:
            break
    return state, cur_val, trace, evals, timed_out


def _anneal(state, obj_fn, sample_fn, apply_fn, rng, max_iters, t0, decay, deadline):
    """Metropolis acceptance on the objective difference; reports the running best."""
    cur_val = obj_fn(state)
    best_state, best_val = state, cur_val
    trace = [(0, cur_val)]
    temp = t0
    timed_out = False
    for it in range(1, max_iters + 1):
        if deadline is not None and it % 64 == 0 and time.monotonic() > deadline:
            timed_out = True
            break
        move = sample_fn(state, rng)
        if move is None:
            break
        cand = apply_fn(state, move)
        val = obj_fn(cand)
        delta = val - cur_val
        if delta > 0 or rng.random() < np.exp(delta / temp):
            state, cur_val = cand, val
        if cur_val > best_val:
            best_state, best_val = state, cur_val
            trace.append((it, best_val))
        temp *= decay
    return best_state, best_val, trace, max_iters, timed_out


# ---------------------------------------------------------------------------
# contraction search


def _contraction_restart(v, s, k, r, cfg: SearchConfig, restart: int, deadline):
    rng = np.random.default_rng(cfg.seed ^ restart)
    cells = None
    for _ in range(200):
        cells = _try_fill(v, s, k, r, rng)
        if cells is not None:
            break
    if cells is None:
        raise ConstructionError(f"restart {restart}: could not build a starting contraction")

    obj = _ContractionObjective(v, s, k, r, cfg.objective)
    all_classes = ("within_column", "within_row", "transpose")

    def catalogue_all(state):
        return _catalogue(state, v, all_classes)

    if cfg.strategy == "hillclimb":
        state, val, trace, _, timed = _hillclimb(
            cells, obj.value, catalogue_all, _apply_cells, rng, cfg.max_iters, deadline
        )
    elif cfg.strategy == "anneal":
        state, val, trace, _, timed = _anneal(
            cells,
            obj.value,
            lambda st, g: _sample_move(st, v, g),
            _apply_cells,
            rng,
            cfg.max_iters,
            cfg.anneal_initial_temp,
            cfg.anneal_decay,
            deadline,
        )
    else:  # column-first
        state, val, trace, timed = _column_first(cells, obj, v, rng, cfg, deadline)

    return restart, state, val, tuple(trace), timed


def _column_first(cells, obj, v, rng, cfg: SearchConfig, deadline):
    """Optimize the column design first, then rows with columns pinned."""
    initial_val = obj.value(cells)
    budget1 = cfg.max_iters // 2
    budget2 = cfg.max_iters - budget1

    col_classes = ("within_row", "transpose")
    state1, _, _, evals1, timed1 = _hillclimb(
        cells,
        obj.column_value,
        lambda st: _catalogue(st, v, col_classes),
        _apply_cells,
        rng,
        budget1,
        deadline,
    )

    col_gram = obj.column_gram(state1)
    state2, val2, trace2, _, timed2 = _hillclimb(
        state1,
        lambda st: obj.value(st, col_gram),
        lambda st: _catalogue(st, v, ("within_column",)),
        _apply_cells,
        rng,
        budget2,
        deadline,
    )

    timed = timed1 or timed2
    if val2 > initial_val:
        trace = [(0, initial_val)] + [
            (evals1 + it, val) for it, val in trace2 if val > initial_val
        ]
        return state2, val2, trace, timed
    return cells, initial_val, [(0, initial_val)], timed


def search_contraction(v: int, s: int, k: int, cfg: SearchConfig | None = None) -> SearchResult:
    """Search for a contraction maximizing the configured efficiency objective.

    Deterministic given the seed; restarts are reduced in fixed index order
    (ties by restart index, then lexicographically smallest array), so serial
    and concurrent execution agree.
    """
    cfg = cfg or SearchConfig()
    r = balanced_replication(v, k, s)
    start = time.monotonic()
    deadline = start + cfg.time_budget if cfg.time_budget is not None else None

    indices = list(range(cfg.restarts))
    skipped = False
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            outcomes = list(
                pool.map(lambda i: _contraction_restart(v, s, k, r, cfg, i, deadline), indices)
            )
    else:
        outcomes = []
        for i in indices:
            if deadline is not None and time.monotonic() > deadline and outcomes:
                skipped = True
                break
            outcomes.append(_contraction_restart(v, s, k, r, cfg, i, deadline))

    best = min(
        outcomes,
        key=lambda o: (-o[2], o[0], tuple(o[1].ravel())),
    )
    restart, cells, val, trace, timed = best
    elapsed = time.monotonic() - start
    return SearchResult(
        best=ContractionDesign(v=v, cells=cells, r=r),
        objective=val,
        trace=trace,
        elapsed=elapsed,
        restart_of_best=restart,
        timed_out=timed or skipped or any(o[4] for o in outcomes),
    )


# ---------------------------------------------------------------------------
# direct augmented-array search (baseline comparator)


class _DirectMove(NamedTuple):
    kind: str  # "relocate" or "exchange"
    column: int
    i: int
    target: int  # destination row (relocate) or second check index (exchange)


def _direct_cells(check_rows: np.ndarray, v: int, s: int, k: int) -> np.ndarray:
    n_test = (v - k) * s
    cells = np.zeros((v, s), dtype=np.int64)
    for j in range(s):
        for i in range(k):
            cells[check_rows[i, j], j] = n_test + i + 1
    next_line = 1
    for j in range(s):
        for l in range(v):
            if cells[l, j] == 0:
                cells[l, j] = next_line
                next_line += 1
    return cells


def _direct_objective(check_rows: np.ndarray, v: int, s: int, k: int) -> float:
    design = AugmentedDesign(k=k, cells=_direct_cells(check_rows, v, s, k))
    try:
        return e_aug_direct(design)
    except DisconnectedDesignError:
        return 0.0


def _direct_catalogue(check_rows: np.ndarray, v: int, s: int, k: int) -> list[_DirectMove]:
    moves: list[_DirectMove] = []
    for j in range(s):
        occupied = set(int(x) for x in check_rows[:, j])
        for i in range(k):
            for row in range(v):
                if row not in occupied:
                    moves.append(_DirectMove("relocate", j, i, row))
        for i1 in range(k - 1):
            for i2 in range(i1 + 1, k):
                moves.append(_DirectMove("exchange", j, i1, i2))
    return moves


def _direct_apply(check_rows: np.ndarray, move: _DirectMove) -> np.ndarray:
    out = check_rows.copy()
    if move.kind == "relocate":
        out[move.i, move.column] = move.target
    else:
        out[move.i, move.column], out[move.target, move.column] = (
            out[move.target, move.column],
            out[move.i, move.column],
        )
    return out


def _direct_sample(check_rows: np.ndarray, rng, v: int, s: int, k: int) -> _DirectMove | None:
    for _ in range(64):
        j = int(rng.integers(s))
        if k >= 2 and rng.random() < 0.25:
            i1, i2 = rng.choice(k, size=2, replace=False)
            return _DirectMove("exchange", j, int(min(i1, i2)), int(max(i1, i2)))
        i = int(rng.integers(k))
        occupied = set(int(x) for x in check_rows[:, j])
        free = [row for row in range(v) if row not in occupied]
        if free:
            return _DirectMove("relocate", j, i, free[int(rng.integers(len(free)))])
    return None


def _direct_restart(v, s, k, cfg: SearchConfig, restart: int, deadline):
    rng = np.random.default_rng(cfg.seed ^ restart)
    check_rows = np.empty((k, s), dtype=np.int64)
    for j in range(s):
        check_rows[:, j] = rng.choice(v, size=k, replace=False)

    def obj(state):
        return _direct_objective(state, v, s, k)

    if cfg.strategy == "anneal":
        state, val, trace, _, timed = _anneal(
            check_rows,
            obj,
            lambda st, g: _direct_sample(st, g, v, s, k),
            _direct_apply,
            rng,
            cfg.max_iters,
            cfg.anneal_initial_temp,
            cfg.anneal_decay,
            deadline,
        )
    else:
        # hillclimb; column-first has no meaning on the full array and falls
        # back to plain hill climbing.
        state, val, trace, _, timed = _hillclimb(
            check_rows,
            obj,
            lambda st: _direct_catalogue(st, v, s, k),
            _direct_apply,
            rng,
            cfg.max_iters,
            deadline,
        )
    return restart, state, val, tuple(trace), timed


def search_augmented_direct(v: int, s: int, k: int, cfg: SearchConfig | None = None) -> DirectSearchResult:
    """Baseline search over check placements in the full v x s array.

    Moves swap a check with a test-line plot or two checks within one column,
    so every candidate keeps each check exactly once per column.  The
    objective is the direct augmented-design efficiency, evaluated by a full
    eigendecomposition per candidate; use small budgets.
    """
    cfg = cfg or SearchConfig()
    if k > v:
        raise InfeasibleParametersError(f"k={k} checks exceed v={v} rows")
    df = feasibility_df(v, s, k)
    if df < 0:
        raise InfeasibleParametersError(
            f"(v={v}, s={s}, k={k}) leaves {df} residual degrees of freedom; need >= 0"
        )
    start = time.monotonic()
    deadline = start + cfg.time_budget if cfg.time_budget is not None else None

    indices = list(range(cfg.restarts))
    skipped = False
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            outcomes = list(
                pool.map(lambda i: _direct_restart(v, s, k, cfg, i, deadline), indices)
            )
    else:
        outcomes = []
        for i in indices:
            if deadline is not None and time.monotonic() > deadline and outcomes:
                skipped = True
                break
            outcomes.append(_direct_restart(v, s, k, cfg, i, deadline))

    best = min(outcomes, key=lambda o: (-o[2], o[0], tuple(o[1].ravel())))
    restart, check_rows, val, trace, timed = best
    design = AugmentedDesign(k=k, cells=_direct_cells(check_rows, v, s, k))
    row_counts = tuple(int(x) for x in (design.cells > design.n_test_lines).sum(axis=1))
    return DirectSearchResult(
        best=design,
        objective=val,
        trace=trace,
        elapsed=time.monotonic() - start,
        restart_of_best=restart,
        row_check_counts=row_counts,
        timed_out=timed or skipped or any(o[4] for o in outcomes),
    )
