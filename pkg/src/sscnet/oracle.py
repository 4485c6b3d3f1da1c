"""Numerical controllability oracle over weighted realizations.

A realization fixes positive couplings ``a_ij = a_ji``, strictly negative
self-loops ``a_ii`` and nonzero input gains. The assembled state matrix is the
modified Laplacian ``L~ = (D - A) - S`` with ``D = diag(A 1)`` and ``S`` the
self-loop diagonal; the dynamics read ``x' = -L~ x + B u``. The overall sign
does not affect controllability, and with this orientation ``L~`` is positive
definite for every sign-valid realization.

Two independent rank computations are provided: a block-Krylov basis built by
iterated multiplication with incremental re-orthonormalisation, and an
eigenspace (PBH) test that sums ``rank(V_c^T B)`` over eigenvalue clusters of
the symmetric ``L~``. The eigenspace test is the oracle of record.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ExtraWeight, MissingWeight, SignViolation
from .graph import InputNode, StructuredNetwork, as_input


@dataclass(frozen=True)
class OracleConfig:
    """Sampling ranges for realizations. Only the signs are fixed by the model."""

    coupling: tuple[float, float] = (0.1, 10.0)
    loop: tuple[float, float] = (-10.0, -0.1)
    gain: tuple[float, float] = (0.5, 2.0)


@dataclass
class WeightedRealization:
    coupling: dict[tuple[int, int], float]
    loop: dict[int, float]
    gain: dict[InputNode, float] = field(default_factory=dict)


@dataclass(frozen=True)
class RealizedSystem:
    l_tilde: np.ndarray
    b: np.ndarray

    @property
    def n(self) -> int:
        return self.l_tilde.shape[0]


def realize(net: StructuredNetwork, weights: WeightedRealization, strict: bool = True) -> RealizedSystem:
    """Assemble ``L~`` and ``B`` for one realization.

    With ``strict=False`` sign checks are skipped, which lets tests build
    deliberately invalid systems.
    """
    coupling = {(min(a, b), max(a, b)): w for (a, b), w in weights.coupling.items()}
    gain = {as_input(u): g for u, g in weights.gain.items()}

    edges = set(net.state_edges)
    if missing := edges - coupling.keys():
        raise MissingWeight(f"no coupling weight for edges {sorted(missing)}")
    if extra := coupling.keys() - edges:
        raise ExtraWeight(f"coupling weights for non-edges {sorted(extra)}")
    nodes = set(net.state_nodes)
    if missing := nodes - weights.loop.keys():
        raise MissingWeight(f"no self-loop weight for nodes {sorted(missing)}")
    if extra := weights.loop.keys() - nodes:
        raise ExtraWeight(f"self-loop weights for unknown nodes {sorted(extra)}")
    names = set(net.input_nodes)
    if missing := names - gain.keys():
        raise MissingWeight(f"no gain for inputs {sorted(missing)}")
    if extra := gain.keys() - names:
        raise ExtraWeight(f"gains for unknown inputs {sorted(extra)}")

    if strict:
        for e, w in coupling.items():
            if not w > 0:
                raise SignViolation(f"coupling on {e} must be positive, got {w}")
        for v, w in weights.loop.items():
            if not w < 0:
                raise SignViolation(f"self-loop on {v} must be negative, got {w}")
        for u, g in gain.items():
            if g == 0:
                raise SignViolation(f"gain on {u} must be nonzero")

    n = net.n
    idx = net.index
    adj = np.zeros((n, n))
    for (a, b), w in coupling.items():
        adj[idx[a], idx[b]] = adj[idx[b], idx[a]] = w
    degree = np.diag(adj.sum(axis=1))
    loops = np.diag([weights.loop[v] for v in net.state_nodes])
    l_tilde = (degree - adj) - loops

    b = np.zeros((n, len(net.inputs)))
    for col, (u, t) in enumerate(net.inputs):
        b[idx[t], col] = gain[u]
    return RealizedSystem(l_tilde, b)


def random_realization(
    net: StructuredNetwork, rng: np.random.Generator, config: OracleConfig = OracleConfig()
) -> WeightedRealization:
    return WeightedRealization(
        coupling={e: float(rng.uniform(*config.coupling)) for e in net.state_edges},
        loop={v: float(rng.uniform(*config.loop)) for v in net.state_nodes},
        gain={u: float(rng.uniform(*config.gain)) for u in net.input_nodes},
    )


def _tol(sys: RealizedSystem) -> float:
    scale = max(np.linalg.norm(sys.l_tilde, 2), np.linalg.norm(sys.b, 2) if sys.b.size else 0.0, 1.0)
    return sys.n * np.finfo(float).eps * scale


def check_full_rank(sys: RealizedSystem) -> bool:
    """True iff ``L~`` is positive definite (smallest eigenvalue above tolerance)."""
    return bool(np.linalg.eigvalsh(sys.l_tilde)[0] > _tol(sys))


def krylov_rank(sys: RealizedSystem) -> int:
    """Dimension of span[B, L~B, ..., L~^(n-1)B] via an orthonormal block-Krylov basis."""
    n = sys.n
    if sys.b.size == 0:
        return 0
    tol = _tol(sys)
    basis = np.zeros((n, 0))
    block = sys.b
    for _ in range(n):
        for _ in range(2):  # classical Gram-Schmidt, repeated once for stability
            block = block - basis @ (basis.T @ block)
        u, s, _ = np.linalg.svd(block, full_matrices=False)
        keep = s > tol
        if not keep.any():
            break
        fresh = u[:, keep]
        basis = np.hstack([basis, fresh])
        if basis.shape[1] >= n:
            break
        block = sys.l_tilde @ fresh
    return basis.shape[1]


def eigenspace_rank(sys: RealizedSystem, cluster_tol: float | None = None) -> int:
    """Controllable dimension from the eigendecomposition of the symmetric ``L~``.

    Eigenvalues closer than ``cluster_tol`` share an eigenspace; each cluster
    contributes the numerical rank of its projection onto the columns of B.
    The rank threshold of a cluster is widened by ``|L~| / gap`` (gap to the
    nearest other eigenvalue), the accuracy to which its eigenvectors are known.
    """
    if sys.b.size == 0:
        return 0
    w, v = np.linalg.eigh(sys.l_tilde)
    tol = _tol(sys)
    if cluster_tol is None:
        cluster_tol = 1e3 * tol
    bnorm = np.linalg.norm(sys.b, 2)
    lnorm = max(abs(w[0]), abs(w[-1]), 1.0)
    bounds = [0]
    for k in range(1, len(w)):
        if w[k] - w[k - 1] > cluster_tol:
            bounds.append(k)
    bounds.append(len(w))
    rank = 0
    for lo, hi in zip(bounds, bounds[1:]):
        # eigenvectors of a cluster are only determined up to ~eps * |L| / gap
        gaps = [w[lo] - w[lo - 1] if lo > 0 else np.inf, w[hi] - w[hi - 1] if hi < len(w) else np.inf]
        slack = max(1.0, lnorm / min(gaps)) if np.isfinite(min(gaps)) else 1.0
        s = np.linalg.svd(v[:, lo:hi].T @ sys.b, compute_uv=False)
        rank += int(np.sum(s > tol * bnorm * slack))
    return rank


def controllability_rank(sys: RealizedSystem, method: str = "eigen") -> int:
    if method == "eigen":
        return eigenspace_rank(sys)
    if method == "krylov":
        return krylov_rank(sys)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class SampleSummary:
    trials: int
    controllable: int
    krylov_controllable: int
    disagreements: int
    positive_definite: int

    @property
    def fraction(self) -> float:
        return self.controllable / self.trials


def sample(
    net: StructuredNetwork, trials: int, seed: int, config: OracleConfig = OracleConfig()
) -> SampleSummary:
    """Draw ``trials`` realizations; each trial uses its own spawned sub-seed."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    children = np.random.SeedSequence(seed).spawn(trials)
    ctrl = kctrl = disagree = pd = 0
    for child in children:
        sys = realize(net, random_realization(net, np.random.default_rng(child), config))
        r_eig = eigenspace_rank(sys)
        r_kry = krylov_rank(sys)
        ctrl += r_eig == net.n
        kctrl += r_kry == net.n
        disagree += r_eig != r_kry
        pd += check_full_rank(sys)
    return SampleSummary(trials, ctrl, kctrl, disagree, pd)


def sample_verdict(
    net: StructuredNetwork, trials: int, seed: int, config: OracleConfig = OracleConfig()
) -> float:
    """Fraction of sampled realizations whose controllability matrix has rank n."""
    return sample(net, trials, seed, config).fraction
