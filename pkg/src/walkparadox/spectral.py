"""Sparse numeric kernels: matrix-vector products, dominant eigenpairs,
Katz resolvents, matrix-function actions, and exact walk totals.

Everything here acts on the stored arc structure directly.  Transposed
variants run on the cached reversed graph, which makes "transposed on g"
and "plain on transpose(g)" the same computation down to the last bit.

Conventions fixed by this module:

* Dominant eigenvectors are scaled to sum n, so paradox gaps computed
  from them are comparable across graphs; the reported residual
  ||A x - lambda x||_2 is measured at that scale.
* Power iteration always runs on the shifted operator A + I.  The shift
  is invisible in the result (subtracted from the eigenvalue) but makes
  bipartite and periodic structures converge.
* Walk totals on unweighted graphs use Python integers, so they are
  exact at any order; weighted graphs fall back to float sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConvergenceError, GraphError, ParameterError
from .graph import Graph, NodeVector, is_connected, is_strongly_connected

__all__ = [
    "EigenResult",
    "SeriesCoefficients",
    "apply",
    "dominant_eigenpair",
    "spectral_radius_estimate",
    "katz_action",
    "series_action",
    "exp_action",
    "odd_action",
    "even_action",
    "walk_count",
    "walk_counts_through",
    "mixed_walk_count",
]

# Relative margin kept between alpha and 1/lambda_1 when validating Katz
# parameters, guarding against eigensolver error near the boundary.
_ALPHA_MARGIN = 1e-9

# Graphs at or below this size run power iteration in plain Python,
# where per-iteration overhead is far below numpy's dispatch cost.
_SMALL_N = 32

_TAYLOR_CAP = 20_000


def _matvec(g: Graph, x: np.ndarray) -> np.ndarray:
    """A @ x over the stored arcs."""
    return np.bincount(g.rows, weights=g.weights * x[g.indices], minlength=g.n)


def apply(g: Graph, v, transposed: bool = False) -> NodeVector:
    """Sparse product A v, or A^T v when transposed."""
    values = v.values if isinstance(v, NodeVector) else np.asarray(v, dtype=float)
    if values.shape != (g.n,):
        raise GraphError(f"vector length {values.shape} does not match n={g.n}")
    work = g.reverse if transposed else g
    label = getattr(v, "label", "")
    return NodeVector(_matvec(work, values), f"apply[{label}]" if label else "apply")


@dataclass(frozen=True)
class EigenResult:
    """Dominant eigenpair with the residual actually achieved.

    The vector is strictly positive and scaled so its entries sum to n;
    residual is ||A x - eigenvalue * x||_2 at that scale.
    """

    eigenvalue: float
    vector: NodeVector
    side: str
    residual: float
    iterations: int


def _start_vector(n: int) -> list[float]:
    # 1/n with a +i/n^2 ramp: deterministic, positive, breaks the
    # symmetry that would stall iteration on vertex-transitive graphs.
    raw = [1.0 / n + i / (n * n) for i in range(n)]
    s = sum(raw)
    return [v * (n / s) for v in raw]


def _power_iteration_small(g: Graph, tol: float, max_iter: int):
    n = g.n
    ptr = g.indptr.tolist()
    cols = g.indices.tolist()
    wts = g.weights.tolist()
    plain = g.unweighted
    x = _start_vector(n)
    best = (math.inf, None, 0.0, 0)
    for it in range(1, max_iter + 1):
        z = [0.0] * n
        if plain:
            for i in range(n):
                s = 0.0
                for t in range(ptr[i], ptr[i + 1]):
                    s += x[cols[t]]
                z[i] = s + x[i]
        else:
            for i in range(n):
                s = 0.0
                for t in range(ptr[i], ptr[i + 1]):
                    s += wts[t] * x[cols[t]]
                z[i] = s + x[i]
        xz = 0.0
        xx = 0.0
        for i in range(n):
            xz += x[i] * z[i]
            xx += x[i] * x[i]
        lam = xz / xx
        rr = 0.0
        for i in range(n):
            d = z[i] - lam * x[i]
            rr += d * d
        res = math.sqrt(rr)
        if res <= tol:
            return lam - 1.0, x, res, it
        if res < best[0]:
            best = (res, list(x), lam - 1.0, it)
        s = sum(z)
        scale = n / s
        x = [v * scale for v in z]
    return None, best, None, max_iter


def _power_iteration_large(g: Graph, tol: float, max_iter: int):
    n = g.n
    x = np.asarray(_start_vector(n))
    best = (math.inf, None, 0.0, 0)
    for it in range(1, max_iter + 1):
        z = _matvec(g, x) + x
        lam = float(x @ z) / float(x @ x)
        res = float(np.linalg.norm(z - lam * x))
        if res <= tol:
            return lam - 1.0, x.tolist(), res, it
        if res < best[0]:
            best = (res, x.copy(), lam - 1.0, it)
        x = z * (n / float(z.sum()))
    return None, best, None, max_iter


def dominant_eigenpair(
    g: Graph, side: str = "right", tol: float = 1e-10, max_iter: int | None = None
) -> EigenResult:
    """Perron eigenpair of a connected (strongly connected) graph.

    side "left" is served by running the right iteration on the
    reversed graph, so left-on-g and right-on-transpose(g) coincide
    exactly.  Raises ConvergenceError carrying the best iterate if the
    residual never reaches tol.
    """
    if side not in ("left", "right"):
        raise ParameterError(f"side must be 'left' or 'right': {side!r}")
    if not tol > 0:
        raise ParameterError("tol must be positive")
    if g.directed:
        if not is_strongly_connected(g):
            raise GraphError("irreducibility required: graph is not strongly connected")
    elif not is_connected(g):
        raise GraphError("irreducibility required: graph is not connected")

    work = g.reverse if side == "left" else g
    if max_iter is None:
        max_iter = 100 * g.n + 1000
    runner = _power_iteration_small if g.n <= _SMALL_N else _power_iteration_large
    lam, payload, res, iters = runner(work, tol, max_iter)
    if lam is not None:
        vec = NodeVector(payload, f"eigenvector[{side}]")
        return EigenResult(lam, vec, side, res, iters)
    best_res, best_x, best_lam, best_it = payload
    best = None
    if best_x is not None:
        best = EigenResult(
            best_lam,
            NodeVector(best_x, f"eigenvector[{side}]"),
            side,
            best_res,
            best_it,
        )
    raise ConvergenceError(
        f"power iteration did not reach residual {tol:g} in {max_iter} steps "
        f"(best {best_res:.3g})",
        residual=best_res,
        best=best,
    )


def spectral_radius_estimate(g: Graph) -> float:
    """Spectral radius for parameter validation.

    Irreducible graphs get the computed dominant eigenvalue.  Reducible
    ones fall back to min(max row sum, max col sum), an upper bound that
    may reject some admissible Katz parameters but never admits a bad one.
    """
    connected = is_connected(g) if not g.directed else is_strongly_connected(g)
    if connected:
        return dominant_eigenpair(g).eigenvalue
    row_max = float(np.bincount(g.rows, weights=g.weights, minlength=g.n).max())
    col_max = float(np.bincount(g.indices, weights=g.weights, minlength=g.n).max())
    return min(row_max, col_max)


def katz_action(
    g: Graph,
    alpha: float,
    transposed: bool = False,
    tol: float = 1e-12,
    max_iter: int | None = None,
    spectral_radius: float | None = None,
) -> NodeVector:
    """Solve (I - alpha A) x = 1 by geometric-series iteration.

    At return ||(I - alpha A) x - 1||_2 <= tol.  alpha is accepted only
    while alpha * rho <= 1 - 1e-9; pass spectral_radius to skip the
    built-in estimate when the caller already has one.
    """
    alpha = float(alpha)
    if not (alpha > 0 and math.isfinite(alpha)):
        raise ParameterError("alpha must be positive and finite")
    if not tol > 0:
        raise ParameterError("tol must be positive")
    rho = spectral_radius_estimate(g) if spectral_radius is None else float(spectral_radius)
    if alpha * rho > 1.0 - _ALPHA_MARGIN:
        raise ParameterError(
            f"alpha exceeds 1/spectral-radius: alpha*rho = {alpha * rho:.12g} "
            f"(rho ~ {rho:.12g}); need alpha*rho <= {1.0 - _ALPHA_MARGIN}"
        )
    work = g.reverse if transposed else g
    if max_iter is None:
        max_iter = 1_000_000
    ones = np.ones(g.n)
    x = ones.copy()
    delta = math.inf
    label = f"katz[alpha={alpha:.6g}]"
    for _ in range(max_iter):
        y = ones + alpha * _matvec(work, x)
        delta = float(np.linalg.norm(y - x))
        x = y
        if delta <= tol:
            return NodeVector(x, label)
    raise ConvergenceError(
        f"katz iteration stalled at step size {delta:.3g} (tol {tol:g})",
        residual=delta,
        best=NodeVector(x, label),
    )


@dataclass(frozen=True)
class SeriesCoefficients:
    """Nonnegative weights c_0..c_K of a finite walk-series centrality."""

    values: tuple

    def __post_init__(self):
        vals = tuple(float(c) for c in self.values)
        if not vals:
            raise ParameterError("coefficient sequence must be nonempty")
        if any(not math.isfinite(c) or c < 0 for c in vals):
            raise ParameterError("coefficients must be finite and nonnegative")
        if not any(c > 0 for c in vals):
            raise ParameterError("at least one coefficient must be positive")
        object.__setattr__(self, "values", vals)

    @property
    def order(self) -> int:
        return len(self.values) - 1


def series_action(g: Graph, coeffs: SeriesCoefficients, transposed: bool = False) -> NodeVector:
    """x = sum_k c_k A^k 1, evaluated Horner-style from the top power."""
    if not isinstance(coeffs, SeriesCoefficients):
        coeffs = SeriesCoefficients(tuple(coeffs))
    work = g.reverse if transposed else g
    ones = np.ones(g.n)
    vals = coeffs.values
    x = vals[-1] * ones
    for c in reversed(vals[:-1]):
        x = _matvec(work, x) + c * ones
    tag = ",".join(f"{c:.6g}" for c in vals)
    return NodeVector(x, f"series[{tag}]")


def _taylor_action(
    g: Graph, beta: float, tol: float, parity: int | None, transposed: bool, label: str
) -> NodeVector:
    beta = float(beta)
    if not (beta > 0 and math.isfinite(beta)):
        raise ParameterError("beta must be positive and finite")
    if not tol > 0:
        raise ParameterError("tol must be positive")
    work = g.reverse if transposed else g
    term = np.ones(g.n)
    total = term.copy() if parity in (None, 0) else np.zeros(g.n)
    # Terms grow until k ~ beta * max row sum; never trust the tolerance
    # test before that point.
    row_max = float(np.bincount(work.rows, weights=work.weights, minlength=work.n).max())
    settle = beta * row_max
    added = parity in (None, 0)
    with np.errstate(over="ignore"):
        for k in range(1, _TAYLOR_CAP + 1):
            term = (beta / k) * _matvec(work, term)
            if not np.all(np.isfinite(term)):
                raise ParameterError(
                    f"series terms overflowed at order {k}; use a smaller beta"
                )
            if parity is None or k % 2 == parity:
                total += term
                added = True
            if added and k >= settle and float(np.abs(term).max()) <= tol * float(np.abs(total).max()):
                return NodeVector(total, label)
    raise ConvergenceError(
        f"series did not settle within {_TAYLOR_CAP} terms",
        residual=float(np.abs(term).max()),
        best=NodeVector(total, label),
    )


def exp_action(g: Graph, beta: float, tol: float = 1e-12, transposed: bool = False) -> NodeVector:
    """exp(beta A) 1 by adaptive truncated Taylor summation."""
    return _taylor_action(g, beta, tol, None, transposed, f"total[beta={beta:.6g}]")


def odd_action(g: Graph, beta: float, tol: float = 1e-12, transposed: bool = False) -> NodeVector:
    """sinh(beta A) 1: the odd-power half of the exponential series."""
    return _taylor_action(g, beta, tol, 1, transposed, f"odd[beta={beta:.6g}]")


def even_action(g: Graph, beta: float, tol: float = 1e-12, transposed: bool = False) -> NodeVector:
    """cosh(beta A) 1: the even-power half of the exponential series."""
    return _taylor_action(g, beta, tol, 0, transposed, f"even[beta={beta:.6g}]")


def _int_matvec(lists: Sequence[Sequence[int]], x: list) -> list:
    return [sum(x[j] for j in nbrs) for nbrs in lists]


def walk_counts_through(g: Graph, kmax: int):
    """Totals 1^T A^k 1 for k = 0..kmax in one pass.

    Exact Python integers on unweighted graphs (arbitrary precision, so
    no overflow is possible); float sums on weighted graphs, rejected
    if they leave the finite range.
    """
    if kmax < 0:
        raise ParameterError("walk order must be nonnegative")
    out: list = [g.n]
    if kmax == 0:
        return out
    if g.unweighted:
        lists = g.out_lists
        x = [1] * g.n
        for _ in range(kmax):
            x = _int_matvec(lists, x)
            out.append(sum(x))
        return out
    x = np.ones(g.n)
    # errstate: overflow is caught by the isfinite check below, not a warning
    with np.errstate(over="ignore"):
        for _ in range(kmax):
            x = _matvec(g, x)
            total = float(x.sum())
            if not math.isfinite(total):
                raise ParameterError("walk count overflow: weighted totals left float range")
            out.append(total)
    return out


def walk_count(g: Graph, k: int):
    """Total walks of length k (1^T A^k 1); k = 0 gives n."""
    return walk_counts_through(g, k)[k]


def mixed_walk_count(g: Graph, k: int):
    """1^T A^T A^k 1 = d_out . (A^k 1), exact on unweighted graphs."""
    if k < 0:
        raise ParameterError("walk order must be nonnegative")
    if g.unweighted:
        lists = g.out_lists
        x = [1] * g.n
        for _ in range(k):
            x = _int_matvec(lists, x)
        d_out = [len(nbrs) for nbrs in lists]
        return sum(d * v for d, v in zip(d_out, x))
    x = np.ones(g.n)
    with np.errstate(over="ignore"):
        for _ in range(k):
            x = _matvec(g, x)
        d_out = np.bincount(g.rows, weights=g.weights, minlength=g.n)
        total = float(d_out @ x)
    if not math.isfinite(total):
        raise ParameterError("walk count overflow: weighted totals left float range")
    return total
