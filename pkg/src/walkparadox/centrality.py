"""Uniform front-end from a measure specification to a node vector.

Directions: "undirected" demands an undirected graph; "broadcast" scores
nodes by the walks they emit (A-based) and "receive" by the walks that
reach them (A^T-based).  Receive is implemented literally as broadcast
on the reversed graph, which is why the two agree bit for bit under
transposition.  For the eigenvector kind, broadcast selects the right
Perron vector and receive the left one: those are the pairings under
which the in- and out-degree paradox statements become equivalences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GraphError, ParameterError
from .graph import Graph, NodeVector, out_degree_vector, transpose
from .spectral import (
    SeriesCoefficients,
    dominant_eigenpair,
    even_action,
    exp_action,
    katz_action,
    odd_action,
    series_action,
    spectral_radius_estimate,
)

__all__ = [
    "CentralitySpec",
    "compute",
    "katz_degree_limit_check",
    "katz_eigenvector_limit_check",
    "KatzDegreeDiagnostic",
    "KatzEigenvectorDiagnostic",
]

_KINDS = ("degree", "eigenvector", "katz", "total", "odd", "even", "power_series")
_DIRECTIONS = ("undirected", "broadcast", "receive")

_DEGREE_LABELS = {"undirected": "degree", "broadcast": "out-degree", "receive": "in-degree"}


@dataclass(frozen=True)
class CentralitySpec:
    """Measure choice plus its parameters.

    alpha (katz) and beta (total/odd/even) may be left None to take the
    documented defaults: alpha = 0.5/rho(A), beta = 1.  coeffs is
    mandatory for power_series.
    """

    kind: str
    direction: str = "undirected"
    alpha: float | None = None
    beta: float | None = None
    coeffs: SeriesCoefficients | None = None
    tol: float | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ParameterError(f"unknown centrality kind {self.kind!r}")
        if self.direction not in _DIRECTIONS:
            raise ParameterError(f"unknown direction {self.direction!r}")
        if self.kind == "power_series":
            if self.coeffs is None:
                raise ParameterError("power_series requires coefficients")
            if not isinstance(self.coeffs, SeriesCoefficients):
                object.__setattr__(self, "coeffs", SeriesCoefficients(tuple(self.coeffs)))
        if self.alpha is not None and not (float(self.alpha) > 0 and math.isfinite(self.alpha)):
            raise ParameterError("alpha must be positive and finite")
        if self.beta is not None and not (float(self.beta) > 0 and math.isfinite(self.beta)):
            raise ParameterError("beta must be positive and finite")
        if self.tol is not None and not float(self.tol) > 0:
            raise ParameterError("tol must be positive")


def _work_graph(g: Graph, direction: str) -> Graph:
    if direction == "undirected":
        if g.directed:
            raise GraphError(
                "direction 'undirected' is invalid on a directed graph; "
                "choose 'broadcast' or 'receive'"
            )
        return g
    return transpose(g) if direction == "receive" else g


def compute(g: Graph, spec: CentralitySpec) -> NodeVector:
    """Evaluate the specified measure on g.

    Eigenvector output is scaled to sum n; walk-based measures are
    returned raw (Katz entries are always >= 1 from the identity term).
    """
    work = _work_graph(g, spec.direction)
    kind = spec.kind

    if kind == "degree":
        vec = out_degree_vector(work)
        return NodeVector(vec.values, _DEGREE_LABELS[spec.direction])

    if kind == "eigenvector":
        result = dominant_eigenpair(work, side="right", tol=spec.tol or 1e-10)
        return NodeVector(result.vector.values, f"eigenvector[{spec.direction}]")

    if kind == "katz":
        alpha = spec.alpha
        if alpha is None:
            alpha = 0.5 / spectral_radius_estimate(work)
        vec = katz_action(work, alpha, tol=spec.tol or 1e-12)
        return NodeVector(vec.values, f"katz[alpha={alpha:.6g},{spec.direction}]")

    if kind in ("total", "odd", "even"):
        beta = 1.0 if spec.beta is None else float(spec.beta)
        action = {"total": exp_action, "odd": odd_action, "even": even_action}[kind]
        vec = action(work, beta, tol=spec.tol or 1e-12)
        return NodeVector(vec.values, f"{kind}[beta={beta:.6g},{spec.direction}]")

    vec = series_action(work, spec.coeffs)
    return NodeVector(vec.values, f"{vec.label},{spec.direction}")


@dataclass(frozen=True)
class KatzDegreeDiagnostic:
    direction: str
    alphas: tuple
    deviations: tuple
    max_deviation: float
    decreasing: bool


def katz_degree_limit_check(g: Graph, direction: str = "undirected", alphas=None) -> KatzDegreeDiagnostic:
    """Quantify how fast (x(alpha) - 1)/alpha approaches the degrees.

    Deviations are max-norm distances to the direction's degree vector,
    relative to its largest entry; they must shrink as alpha does.
    """
    work = _work_graph(g, direction)
    if alphas is None:
        rho = spectral_radius_estimate(work)
        alphas = (0.1 / rho, 0.01 / rho, 0.001 / rho)
    alphas = tuple(float(a) for a in alphas)
    if any(b >= a for a, b in zip(alphas, alphas[1:])):
        raise ParameterError("alphas must be strictly decreasing")
    d = out_degree_vector(work).values
    scale = float(np.abs(d).max())
    deviations = []
    for a in alphas:
        x = katz_action(work, a, tol=1e-12)
        deviations.append(float(np.abs((x.values - 1.0) / a - d).max()) / scale)
    dec = all(b < a for a, b in zip(deviations, deviations[1:]))
    return KatzDegreeDiagnostic(direction, alphas, tuple(deviations), max(deviations), dec)


@dataclass(frozen=True)
class KatzEigenvectorDiagnostic:
    side: str
    alphas: tuple
    similarities: tuple
    final_similarity: float
    increasing: bool


def _cosine(a: np.ndarray, b: np.ndarray) -> float:
    return float(a @ b) / (float(np.linalg.norm(a)) * float(np.linalg.norm(b)))


def katz_eigenvector_limit_check(g: Graph, side: str = "right", alphas=None) -> KatzEigenvectorDiagnostic:
    """Cosine similarity of Katz vectors to the Perron vector as alpha rises.

    side accepts left/right or the direction aliases receive/broadcast.
    With the default grid the last point sits at 0.999/lambda_1, where
    similarity should be within 1e-6 of 1.
    """
    side = {"broadcast": "right", "receive": "left"}.get(side, side)
    if side not in ("left", "right"):
        raise ParameterError(f"side must be left/right (or broadcast/receive): {side!r}")
    work = transpose(g) if side == "left" else g
    eig = dominant_eigenpair(work, side="right", tol=1e-10)
    lam = eig.eigenvalue
    if alphas is None:
        alphas = tuple(f / lam for f in (0.5, 0.9, 0.99, 0.999))
    alphas = tuple(float(a) for a in alphas)
    if any(b <= a for a, b in zip(alphas, alphas[1:])):
        raise ParameterError("alphas must be strictly increasing")
    sims = []
    for a in alphas:
        x = katz_action(work, a, tol=1e-10, spectral_radius=lam)
        sims.append(_cosine(x.values, eig.vector.values))
    inc = all(b >= a - 1e-12 for a, b in zip(sims, sims[1:]))
    return KatzEigenvectorDiagnostic(side, alphas, tuple(sims), sims[-1], inc)
