"""Dense square matrices and three independent spectral-radius solvers.

The solvers are deliberately self-contained so they can cross-check each
other:

* :func:`spectral_radius_symmetric` -- cyclic Jacobi rotations,
* :func:`spectral_radius_general` -- Householder reduction to Hessenberg
  form followed by Francis double-shift QR,
* :func:`spectral_radius_nonnegative` -- power iteration on ``M + I``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Optional, Sequence, Union

import numpy as np

from .errors import InvariantViolation, NegativeEntry, NoConvergence, NonSquare, NotSymmetric

Method = Literal["symmetric-jacobi", "general-qr", "power-iteration"]

SYMMETRY_TOL = 1e-12
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
QR_DEFLATION_TOL = 1e-12
QR_ITERATIONS_PER_ROW = 30
POWER_TOL = 1e-12
POWER_RESIDUAL_TOL = 1e-9
POWER_MAX_ITER = 100_000


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """Square real matrix with finite entries, stored as a read-only array."""

    data: np.ndarray

    def __post_init__(self):
        a = np.array(self.data, dtype=float, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise NonSquare(f"expected a square matrix, got shape {a.shape}")
        if a.shape[0] < 1:
            raise InvariantViolation("matrix dimension must be at least 1")
        if not np.all(np.isfinite(a)):
            raise InvariantViolation("matrix entries must be finite")
        a.setflags(write=False)
        object.__setattr__(self, "data", a)

    @classmethod
    def from_entries(cls, n: int, entries: Sequence[float]) -> "DenseMatrix":
        """Build from ``n*n`` entries in row-major order."""
        if n < 1 or len(entries) != n * n:
            raise NonSquare(f"{len(entries)} entries cannot fill a {n}x{n} matrix")
        return cls(np.asarray(entries, dtype=float).reshape(n, n))

    @classmethod
    def coerce(cls, m: "MatrixLike") -> "DenseMatrix":
        return m if isinstance(m, DenseMatrix) else cls(np.asarray(m, dtype=float))

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def entries(self) -> tuple:
        return tuple(self.data.ravel().tolist())

    def tolist(self) -> list:
        return self.data.tolist()

    def __array__(self, dtype=None, copy=None):
        return self.data if dtype is None else self.data.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.data.shape == other.data.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.n, self.data.tobytes()))

    def __repr__(self):
        return f"DenseMatrix({self.data.tolist()!r})"


MatrixLike = Union[DenseMatrix, np.ndarray, Sequence[Sequence[float]]]


@dataclass(frozen=True)
class SpectralResult:
    radius: float
    method: Method
    iterations: int
    residual: float
    eigenvector: Optional[tuple] = None


def require_nonnegative(a: np.ndarray) -> None:
    if np.any(a < 0):
        i, j = np.argwhere(a < 0)[0]
        raise NegativeEntry(f"entry ({i}, {j}) = {a[i, j]!r} is negative")


def _trivial(a: np.ndarray, method: Method) -> SpectralResult:
    return SpectralResult(abs(float(a[0, 0])), method, 0, 0.0,
                          (1.0,) if method == "power-iteration" else None)


# -- symmetric: cyclic Jacobi ---------------------------------------------------

@lru_cache(maxsize=None)
def _round_robin(n: int) -> tuple:
    """Rounds of disjoint index pairs covering every pair ``p < q`` once."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(p, q), max(p, q)) for p, q in pairs if p < n and q < n]
        rounds.append((np.array([p for p, _ in pairs]), np.array([q for _, q in pairs])))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def jacobi_eigenvalues(stack: np.ndarray, tol: float = JACOBI_TOL,
                       max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigenvalues of a batch of symmetric matrices, shape ``(B, n, n)``.

    Cyclic Jacobi in round-robin order: every round rotates ``n // 2``
    disjoint pairs at once, and ``n - 1`` rounds make one sweep over all
    pairs. A matrix is converged when its off-diagonal Frobenius norm is at
    most ``tol * (1 + ||M||_F)``; iteration continues until the whole batch
    is. Returns ``(eigenvalues, sweeps, off_norms)``.
    """
    a = np.array(stack, dtype=float)
    a = 0.5 * (a + np.swapaxes(a, 1, 2))
    n = a.shape[1]
    threshold = tol * (1.0 + np.sqrt(np.einsum("bij,bij->b", a, a)))
    offmask = ~np.eye(n, dtype=bool)

    def off_norm():
        return np.sqrt(np.sum(a[:, offmask] ** 2, axis=1))

    off = off_norm()
    sweeps = 0
    while np.any(off > threshold):
        if sweeps == max_sweeps:
            raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps "
                                f"(off={off.max():.3g})")
        sweeps += 1
        for p, q in _round_robin(n):
            apq = a[:, p, q]
            nz = apq != 0.0
            safe = np.where(nz, apq, 1.0)
            with np.errstate(over="ignore"):
                # theta may overflow for tiny apq; t -> 0 is then correct
                theta = (a[:, q, q] - a[:, p, p]) / (2.0 * safe)
                t = np.where(theta < 0.0, -1.0, 1.0) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t = np.where(nz, t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            cp = a[:, :, p]
            cq = a[:, :, q]
            a[:, :, p] = cp * c[:, None, :] - cq * s[:, None, :]
            a[:, :, q] = cp * s[:, None, :] + cq * c[:, None, :]
            rp = a[:, p, :]
            rq = a[:, q, :]
            a[:, p, :] = c[:, :, None] * rp - s[:, :, None] * rq
            a[:, q, :] = s[:, :, None] * rp + c[:, :, None] * rq
            a[:, p, q] = 0.0
            a[:, q, p] = 0.0
        off = off_norm()
    return np.diagonal(a, axis1=1, axis2=2).copy(), sweeps, off


def check_symmetric(a: np.ndarray) -> None:
    asym = np.abs(a - a.T)
    if np.any(asym > SYMMETRY_TOL):
        i, j = np.unravel_index(np.argmax(asym), asym.shape)
        raise NotSymmetric(f"|M[{i},{j}] - M[{j},{i}]| = {asym[i, j]:.3g}")


def spectral_radius_symmetric(m: MatrixLike, tol: float = JACOBI_TOL,
                              max_sweeps: int = JACOBI_MAX_SWEEPS) -> SpectralResult:
    """Largest |eigenvalue| of a symmetric matrix by cyclic Jacobi sweeps."""
    a = DenseMatrix.coerce(m).data
    check_symmetric(a)
    if a.shape[0] == 1:
        return _trivial(a, "symmetric-jacobi")
    eig, sweeps, off = jacobi_eigenvalues(a[None], tol, max_sweeps)
    return SpectralResult(float(np.max(np.abs(eig[0]))), "symmetric-jacobi", sweeps, float(off[0]))


def spectral_radii_symmetric(stack: np.ndarray, tol: float = JACOBI_TOL) -> np.ndarray:
    """Spectral radii of a batch of same-size symmetric matrices."""
    stack = np.asarray(stack, dtype=float)
    if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
        raise NonSquare(f"expected shape (B, n, n), got {stack.shape}")
    for a in stack:
        check_symmetric(a)
    if stack.shape[1] == 1:
        return np.abs(stack[:, 0, 0])
    eig, _, _ = jacobi_eigenvalues(stack, tol)
    return np.max(np.abs(eig), axis=1)


# -- general: Hessenberg + Francis double-shift QR -----------------------------

def hessenberg(m: MatrixLike) -> np.ndarray:
    """Householder reduction to upper Hessenberg form (similarity transform)."""
    h = DenseMatrix.coerce(m).data.copy()
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1:, k]
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        v = x.copy()
        v[0] += math.copysign(alpha, x[0])
        v /= np.linalg.norm(v)
        h[k + 1:, k:] -= 2.0 * np.outer(v, v @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v)
        h[k + 2:, k] = 0.0
    return h


def eigenvalues_general(m: MatrixLike, deflation_tol: float = QR_DEFLATION_TOL):
    """All eigenvalues of a real square matrix, plus iteration count and residual.

    Returns ``(eigenvalues, iterations, residual)`` where ``residual`` is the
    largest relative subdiagonal magnitude that was deflated.
    """
    a = hessenberg(m)
    n = a.shape[0]
    if n == 1:
        return np.array([complex(a[0, 0])]), 0, 0.0
    wr = np.zeros(n)
    wi = np.zeros(n)
    anorm = float(np.sum(np.abs(np.triu(a, -1))))
    max_iter = QR_ITERATIONS_PER_ROW * n
    total = 0
    residual = 0.0
    shift = 0.0
    nn = n - 1
    while nn >= 0:
        its = 0
        while True:
            # locate a negligible subdiagonal entry
            l = nn
            while l >= 1:
                s = abs(a[l - 1, l - 1]) + abs(a[l, l])
                if s == 0.0:
                    s = anorm
                if abs(a[l, l - 1]) <= deflation_tol * s:
                    if s > 0.0:
                        residual = max(residual, abs(a[l, l - 1]) / s)
                    a[l, l - 1] = 0.0
                    break
                l -= 1
            x = a[nn, nn]
            if l == nn:
                wr[nn] = x + shift
                nn -= 1
                break
            y = a[nn - 1, nn - 1]
            w = a[nn, nn - 1] * a[nn - 1, nn]
            if l == nn - 1:
                p = 0.5 * (y - x)
                q = p * p + w
                z = math.sqrt(abs(q))
                x += shift
                if q >= 0.0:
                    z = p + math.copysign(z, p)
                    wr[nn - 1] = wr[nn] = x + z
                    if z != 0.0:
                        wr[nn] = x - w / z
                else:
                    wr[nn - 1] = wr[nn] = x + p
                    wi[nn - 1] = z
                    wi[nn] = -z
                nn -= 2
                break
            if total >= max_iter:
                raise NoConvergence(f"QR iteration exceeded {max_iter} steps")
            if its and its % 10 == 0:
                # exceptional shift
                shift += x
                idx = np.arange(nn + 1)
                a[idx, idx] -= x
                s = abs(a[nn, nn - 1]) + abs(a[nn - 1, nn - 2])
                x = y = 0.75 * s
                w = -0.4375 * s * s
            its += 1
            total += 1
            m_ = nn - 2
            while True:
                z = a[m_, m_]
                r = x - z
                s = y - z
                p = (r * s - w) / a[m_ + 1, m_] + a[m_, m_ + 1]
                q = a[m_ + 1, m_ + 1] - z - r - s
                r = a[m_ + 2, m_ + 1]
                s = abs(p) + abs(q) + abs(r)
                p /= s
                q /= s
                r /= s
                if m_ == l:
                    break
                u = abs(a[m_, m_ - 1]) * (abs(q) + abs(r))
                v = abs(p) * (abs(a[m_ - 1, m_ - 1]) + abs(z) + abs(a[m_ + 1, m_ + 1]))
                if u + v == v:
                    break
                m_ -= 1
            for i in range(m_ + 2, nn + 1):
                a[i, i - 2] = 0.0
                if i != m_ + 2:
                    a[i, i - 3] = 0.0
            _francis_sweep(a, l, m_, nn, p, q, r)
    return wr + 1j * wi, total, residual


def _francis_sweep(a, l, m, nn, p, q, r):
    # chase the double-shift bulge from row m down to nn, rows/cols l..nn only
    x = 0.0
    for k in range(m, nn):
        if k != m:
            p = a[k, k - 1]
            q = a[k + 1, k - 1]
            r = a[k + 2, k - 1] if k != nn - 1 else 0.0
            x = abs(p) + abs(q) + abs(r)
            if x != 0.0:
                p /= x
                q /= x
                r /= x
        s = math.copysign(math.sqrt(p * p + q * q + r * r), p)
        if s == 0.0:
            continue
        if k == m:
            if l != m:
                a[k, k - 1] = -a[k, k - 1]
        else:
            a[k, k - 1] = -s * x
        p += s
        x = p / s
        y = q / s
        z = r / s
        q /= p
        r /= p
        cols = slice(k, nn + 1)
        rows = slice(l, min(nn, k + 3) + 1)
        if k != nn - 1:
            pv = a[k, cols] + q * a[k + 1, cols] + r * a[k + 2, cols]
            a[k + 2, cols] -= pv * z
            a[k + 1, cols] -= pv * y
            a[k, cols] -= pv * x
            pc = x * a[rows, k] + y * a[rows, k + 1] + z * a[rows, k + 2]
            a[rows, k + 2] -= pc * r
            a[rows, k + 1] -= pc * q
            a[rows, k] -= pc
        else:
            pv = a[k, cols] + q * a[k + 1, cols]
            a[k + 1, cols] -= pv * y
            a[k, cols] -= pv * x
            pc = x * a[rows, k] + y * a[rows, k + 1]
            a[rows, k + 1] -= pc * q
            a[rows, k] -= pc


def spectral_radius_general(m: MatrixLike, deflation_tol: float = QR_DEFLATION_TOL) -> SpectralResult:
    """Max modulus over all (possibly complex) eigenvalues of any real matrix."""
    a = DenseMatrix.coerce(m).data
    if a.shape[0] == 1:
        return _trivial(a, "general-qr")
    eig, iterations, residual = eigenvalues_general(a, deflation_tol)
    return SpectralResult(float(np.max(np.abs(eig))), "general-qr", iterations, float(residual))


# -- nonnegative: power iteration on M + I -------------------------------------

def spectral_radius_nonnegative(m: MatrixLike, tol: float = POWER_TOL,
                                residual_tol: float = POWER_RESIDUAL_TOL,
                                max_iter: int = POWER_MAX_ITER) -> SpectralResult:
    """Perron root of a nonnegative matrix by power iteration on ``M + I``.

    The shift makes every irreducible input primitive, so periodic matrices
    such as directed cycles still converge. Stops once successive estimates
    agree to ``tol`` (relative) and ``||Mx - rho x||_inf / ||x||_inf`` is at
    most ``residual_tol * max(1, rho)``.
    """
    a = DenseMatrix.coerce(m).data
    require_nonnegative(a)
    n = a.shape[0]
    if n == 1:
        return _trivial(a, "power-iteration")
    b = a + np.eye(n)
    x = np.ones(n)
    prev = None
    for it in range(1, max_iter + 1):
        y = b @ x
        est = float(y.max())
        x = y / est
        if prev is not None and abs(est - prev) <= tol * est:
            rho = est - 1.0
            residual = float(np.max(np.abs(a @ x - rho * x)))
            if residual <= residual_tol * max(1.0, rho):
                return SpectralResult(max(rho, 0.0), "power-iteration", it, residual,
                                      tuple(x.tolist()))
        prev = est
    raise NoConvergence(f"power iteration did not converge in {max_iter} iterations")


# -- utilities -------------------------------------------------------------------

def row_sum_interval(m: MatrixLike) -> tuple[float, float]:
    a = DenseMatrix.coerce(m).data
    require_nonnegative(a)
    sums = a.sum(axis=1)
    return float(sums.min()), float(sums.max())


def entrywise_abs(m: MatrixLike) -> DenseMatrix:
    return DenseMatrix(np.abs(DenseMatrix.coerce(m).data))


def strongly_connected(adj: np.ndarray) -> bool:
    """True iff the digraph with boolean adjacency ``adj`` is strongly connected."""
    n = adj.shape[0]
    if n <= 1:
        return True
    return _reaches_all(adj) and _reaches_all(adj.T)


def _reaches_all(adj: np.ndarray) -> bool:
    seen = np.zeros(adj.shape[0], dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        frontier = adj[frontier].any(axis=0) & ~seen
        seen |= frontier
    return bool(seen.all())


def is_irreducible(m: MatrixLike) -> bool:
    a = DenseMatrix.coerce(m).data
    support = a != 0
    np.fill_diagonal(support, False)
    return strongly_connected(support)
