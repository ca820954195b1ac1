"""Discretized deformed quantum operators and the bound-state eigensolver.

Two equivalent formulations of the same eigenproblem are assembled:

* ``hamiltonian_xspace``: position-dependent-mass operator on a plain-x grid,
      -(hbar^2/2m0) A^2 psi'' - (hbar^2/m0) A A' psi'
      - (hbar^2/8m0)(A'^2 + 2 A A'') psi + V psi,
  discretized with 3-point stencils (non-symmetric as written);

* ``hamiltonian_gspace``: constant-mass operator on a grid in the deformed
  coordinate u = G^{-1}(x), a plain Dirichlet Laplacian plus V(G(u)).

``solve_eigen`` extracts the lowest eigenpairs with LAPACK bisection on Sturm
sequences plus inverse iteration, refining each pair with one extended
precision inverse-iteration step.  Non-symmetric tridiagonal input is first
reduced to a symmetric matrix by an exact diagonal similarity (the discrete
counterpart of the sqrt(A) wavefunction rescaling, which itself is exposed as
:func:`transform_state`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import ConvergenceError, DomainError
from .groups import GroupClass

SPACE_X = "x"
SPACE_G = "g"


@dataclass(frozen=True)
class Grid:
    """Uniform mesh, tagged with the coordinate space it discretizes."""

    start: float
    end: float
    n_points: int
    space: str = SPACE_X

    def __post_init__(self):
        if self.n_points < 3:
            raise ValueError("grid needs at least 3 points")
        if not self.end > self.start:
            raise ValueError("grid needs end > start")
        if self.space not in (SPACE_X, SPACE_G):
            raise ValueError(f"unknown coordinate space {self.space!r}")

    @property
    def spacing(self) -> float:
        return (self.end - self.start) / (self.n_points - 1)

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(self.start, self.end, self.n_points)


@dataclass
class WaveFunction:
    """Sampled state with per-node quadrature weights for its norm."""

    grid: Grid
    values: np.ndarray
    norm_weight: np.ndarray

    def norm_sq(self) -> float:
        return float(np.sum(self.norm_weight * np.abs(self.values) ** 2))

    def normalize(self) -> "WaveFunction":
        n = math.sqrt(self.norm_sq())
        if n == 0.0:
            raise ValueError("cannot normalize the zero state")
        self.values = self.values / n
        return self

    def inner(self, other: "WaveFunction") -> float:
        return float(np.sum(self.norm_weight * np.conj(self.values) * other.values).real)

    def prob_density(self) -> np.ndarray:
        return np.abs(self.values) ** 2


@dataclass
class Spectrum:
    """Ordered eigenpairs with solver provenance."""

    energies: np.ndarray
    states: list[WaveFunction]
    group_class: GroupClass
    solver_meta: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# potentials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InfiniteWell:
    """Zero inside [0, L]; the solver imposes hard Dirichlet walls."""

    L: float

    def __post_init__(self):
        if self.L <= 0:
            raise ValueError("well width must be positive")

    def value_x(self, x: float) -> float:
        return 0.0


@dataclass(frozen=True)
class CallablePotential:
    rule: Callable[[float], float]

    def value_x(self, x: float) -> float:
        return float(self.rule(x))


class TabulatedPotential:
    """Cubic-spline interpolant of (x, V) samples."""

    def __init__(self, xs, vs):
        from scipy.interpolate import CubicSpline

        xs = np.asarray(xs, dtype=float)
        vs = np.asarray(vs, dtype=float)
        if xs.ndim != 1 or xs.shape != vs.shape or xs.size < 4:
            raise ValueError("need matching 1-d arrays with at least 4 samples")
        self.xs, self.vs = xs, vs
        self._spline = CubicSpline(xs, vs)

    def value_x(self, x: float) -> float:
        return float(self._spline(x))


# ---------------------------------------------------------------------------
# momentum operator
# ---------------------------------------------------------------------------


def _diff_matrix(grid: Grid) -> np.ndarray:
    """Centered first-derivative stencil; one-sided on the boundary rows."""
    n, h = grid.n_points, grid.spacing
    p = np.zeros((n, n))
    idx = np.arange(1, n - 1)
    p[idx, idx + 1] = 0.5 / h
    p[idx, idx - 1] = -0.5 / h
    p[0, 0], p[0, 1] = -1.0 / h, 1.0 / h
    p[-1, -2], p[-1, -1] = -1.0 / h, 1.0 / h
    return p


def momentum_matrix(cls: GroupClass, grid: Grid, form: str = "symmetric") -> np.ndarray:
    """Real stencil matrix K of the deformed momentum, p_g = -i hbar K.

    ``form="symmetric"`` assembles the symmetrized product (A K0 + K0 A)/2
    with K0 the centered-difference derivative; ``form="gradient"`` assembles
    the equivalent A K0 + [K0, A]/2, where the multiplier A' is realized by
    the same discrete commutator so the two routes agree to rounding.

    With the -i hbar factor restored the operator is Hermitian on interior
    rows (K is antisymmetric there); boundary rows use one-sided differences
    and are excluded from Hermiticity statements.
    """
    if grid.space != SPACE_X:
        raise ValueError("momentum_matrix expects a plain-x grid")
    nodes = grid.nodes
    for x in (nodes[0], nodes[-1]):
        cls.require_in_domain(x)
    a = np.array([cls.deformation_factor(x) for x in nodes])
    k0 = _diff_matrix(grid)
    ak = a[:, None] * k0
    if form == "symmetric":
        return 0.5 * (ak + k0 * a[None, :])
    if form == "gradient":
        return ak + 0.5 * (k0 * a[None, :] - ak)
    raise ValueError(f"unknown momentum form {form!r}")


def hermiticity_defect(k: np.ndarray) -> float:
    """Max interior-row deviation of K from antisymmetry (p_g from Hermiticity)."""
    d = k + k.T
    return float(np.abs(d[1:-1, 1:-1]).max())


def _default_bumps(grid: Grid) -> list[np.ndarray]:
    """Smooth low-curvature test states, small near the grid ends."""
    x = grid.nodes
    a, b = grid.start, grid.end
    u = (x - a) / (b - a)
    gauss = 0.25 * np.exp(-(((u - 0.5) / 0.3) ** 2))
    poly = u * (1.0 - u)
    return [gauss, poly]


def commutator_check(
    cls: GroupClass,
    grid: Grid,
    test_functions: Sequence[np.ndarray] | None = None,
    hbar: float = 1.0,
) -> float:
    """Max interior residual of ([x_g, p_g] - i hbar) applied to test states.

    x_g is the diagonal operator G^{-1}(x).  The residual decays as the square
    of the grid spacing for smooth states.
    """
    nodes = grid.nodes
    xg = np.array([cls.g_inv(x) for x in nodes])
    k = momentum_matrix(cls, grid)
    states = list(test_functions) if test_functions is not None else _default_bumps(grid)
    worst = 0.0
    for psi in states:
        psi = np.asarray(psi, dtype=float)
        # [x_g, -i hbar K] psi - i hbar psi = -i hbar ([x_g, K] psi + psi)
        resid = hbar * (xg * (k @ psi) - k @ (xg * psi) + psi)
        worst = max(worst, float(np.abs(resid[1:-1]).max()))
    return worst


# ---------------------------------------------------------------------------
# Hamiltonians
# ---------------------------------------------------------------------------


def _potential_values(potential, xs: np.ndarray) -> np.ndarray:
    if isinstance(potential, InfiniteWell):
        return np.zeros_like(xs)
    return np.array([potential.value_x(x) for x in xs])


def hamiltonian_xspace(
    cls: GroupClass,
    grid: Grid,
    potential,
    m0: float = 1.0,
    hbar: float = 1.0,
) -> np.ndarray:
    """Position-dependent-mass Hamiltonian on interior nodes (Dirichlet walls).

    Returns the dense tridiagonal matrix of the operator
    -(hbar^2/2m0) A^2 d2 - (hbar^2/m0) A A' d1 - (hbar^2/8m0)(A'^2 + 2AA'') + V
    with centered 3-point stencils; rows/columns for the wall nodes are
    dropped.  The matrix is non-symmetric as written (its exact diagonal
    symmetrization happens inside :func:`solve_eigen`).
    """
    if grid.space != SPACE_X:
        raise ValueError("hamiltonian_xspace expects a plain-x grid")
    nodes = grid.nodes
    for x in (nodes[0], nodes[-1]):
        cls.require_in_domain(x)
    h = grid.spacing
    alpha = hbar * hbar / (2.0 * m0)
    inner = nodes[1:-1]
    derivs = [cls.deformation_derivs(x) for x in inner]
    a = np.array([d[0] for d in derivs])
    da = np.array([d[1] for d in derivs])
    d2a = np.array([d[2] for d in derivs])
    v = _potential_values(potential, inner)

    lap = a * a / (h * h)
    drift = a * da / h  # coefficient of the centered first difference
    diag = 2.0 * alpha * lap - 0.25 * alpha * (da * da + 2.0 * a * d2a) + v
    upper = -alpha * (lap[:-1] + drift[:-1])
    lower = -alpha * (lap[1:] - drift[1:])

    m = np.zeros((inner.size, inner.size))
    np.fill_diagonal(m, diag)
    idx = np.arange(inner.size - 1)
    m[idx, idx + 1] = upper
    m[idx + 1, idx] = lower
    return m


def field_term(cls: GroupClass, x: float, m0: float = 1.0, hbar: float = 1.0) -> float:
    """Deformation-induced scalar term -(hbar^2/8m0)(A'^2 + 2 A A'') at x."""
    a, da, d2a = cls.deformation_derivs(x)
    return -(hbar * hbar / (8.0 * m0)) * (da * da + 2.0 * a * d2a)


def hamiltonian_gspace(
    cls: GroupClass,
    grid: Grid,
    potential,
    m0: float = 1.0,
    hbar: float = 1.0,
) -> np.ndarray:
    """Constant-mass Hamiltonian in the deformed coordinate (interior nodes).

    Plain 3-point Dirichlet Laplacian plus the potential evaluated at
    x = G(u); symmetric tridiagonal by construction.
    """
    if grid.space != SPACE_G:
        raise ValueError("hamiltonian_gspace expects a deformed-coordinate grid")
    h = grid.spacing
    alpha = hbar * hbar / (2.0 * m0)
    inner_u = grid.nodes[1:-1]
    xs = np.array([cls.g(u) for u in inner_u])
    v = _potential_values(potential, xs)
    n = inner_u.size
    m = np.zeros((n, n))
    np.fill_diagonal(m, 2.0 * alpha / (h * h) + v)
    idx = np.arange(n - 1)
    m[idx, idx + 1] = -alpha / (h * h)
    m[idx + 1, idx] = -alpha / (h * h)
    return m


def mass_profile(cls: GroupClass, x: float, m0: float = 1.0) -> float:
    """Position-dependent mass m0 / A(x)^2."""
    a = cls.deformation_factor(x)
    return m0 / (a * a)


# ---------------------------------------------------------------------------
# eigensolver
# ---------------------------------------------------------------------------


def _extract_tridiagonal(matrix: np.ndarray):
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    if m.shape[0] > 2 and (np.any(np.triu(m, 2)) or np.any(np.tril(m, -2))):
        raise ValueError("matrix must be tridiagonal")
    return np.diag(m).copy(), np.diag(m, 1).copy(), np.diag(m, -1).copy()


def _balance(d, upper, lower):
    """Exact diagonal similarity onto a symmetric tridiagonal matrix.

    Returns (off, scale) with S = D M D^{-1}, D = diag(scale), symmetric with
    off-diagonal sign(upper) * sqrt(upper * lower).  Requires every product
    upper_i * lower_i > 0.
    """
    prod = upper * lower
    if np.any(prod <= 0.0):
        raise ConvergenceError(
            "cannot symmetrize: an off-diagonal product is not positive "
            "(grid too coarse for this deformation)"
        )
    n = d.size
    scale = np.ones(n)
    for i in range(n - 1):
        scale[i + 1] = scale[i] * math.sqrt(upper[i] / lower[i])
    off = np.sign(upper) * np.sqrt(prod)
    return off, scale


def _tridiag_matvec(d, e, x):
    y = d * x
    y[:-1] += e * x[1:]
    y[1:] += e * x[:-1]
    return y


def _thomas(diag, off, b):
    """Tridiagonal solve (longdouble) used by the refinement pass."""
    n = diag.size
    c = np.zeros(n - 1, dtype=np.longdouble)
    g = np.zeros(n, dtype=np.longdouble)
    beta = diag[0]
    if beta == 0.0:
        raise ZeroDivisionError
    g[0] = b[0] / beta
    for i in range(1, n):
        c[i - 1] = off[i - 1] / beta
        beta = diag[i] - off[i - 1] * c[i - 1]
        if beta == 0.0:
            raise ZeroDivisionError
        g[i] = (b[i] - off[i - 1] * g[i - 1]) / beta
    for i in range(n - 2, -1, -1):
        g[i] -= c[i] * g[i + 1]
    return g


def _refine_pair(d_ld, e_ld, energy, vector):
    """One inverse-iteration step plus a Rayleigh update, in longdouble."""
    x = vector.astype(np.longdouble)
    try:
        z = _thomas(d_ld - np.longdouble(energy), e_ld, x)
    except ZeroDivisionError:
        z = x
    z /= np.sqrt((z * z).sum())
    y = _tridiag_matvec(d_ld, e_ld, z)
    e_new = float((z * y).sum())
    resid = float(np.sqrt(((y - e_new * z) ** 2).sum()))
    return e_new, z.astype(float), resid


def solve_eigen(
    matrix: np.ndarray,
    k: int,
    grid: Grid,
    group_class: GroupClass | None = None,
    hbar: float = 1.0,
    m0: float = 1.0,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Spectrum:
    """Lowest k eigenpairs of a (possibly non-symmetric) tridiagonal operator.

    Parameters
    ----------
    matrix : ndarray
        Interior-node operator from one of the Hamiltonian builders.
    k : int
        Number of eigenpairs, 1 <= k <= matrix dimension.
    grid : Grid
        The full grid (including wall nodes) the matrix was assembled on.
    tol : Tolerances
        ``tol.eigen_backend`` picks "sturm" (bisection + inverse iteration,
        default) or "ql"; ``tol.eigen_residual`` is the per-pair residual
        bound checked after refinement.

    Returns
    -------
    Spectrum
        States carry zero wall values and trapezoid weights in the grid
        measure (times the balancing factors for the non-symmetric path, in
        which measure the returned states are exactly orthogonal).
    """
    d, upper, lower = _extract_tridiagonal(matrix)
    n = d.size
    if grid.n_points != n + 2:
        raise ValueError("grid does not match matrix size (interior nodes expected)")
    if not 1 <= k <= n:
        raise DomainError(f"k must be in [1, {n}], got {k}")

    if np.array_equal(upper, lower):
        off, scale = upper, np.ones(n)
    else:
        off, scale = _balance(d, upper, lower)

    if tol.eigen_backend == "ql":
        energies, vectors = eigh_tridiagonal(d, off, select="a", lapack_driver="stev")
        energies, vectors = energies[:k], vectors[:, :k]
    elif tol.eigen_backend == "sturm":
        energies, vectors = eigh_tridiagonal(
            d, off, select="i", select_range=(0, k - 1), lapack_driver="stebz"
        )
    else:
        raise ValueError(f"unknown eigen backend {tol.eigen_backend!r}")

    d_ld = d.astype(np.longdouble)
    e_ld = off.astype(np.longdouble)
    states, out_energies, residuals = [], [], []
    h = grid.spacing
    weights = np.full(grid.n_points, h)
    weights[0] = weights[-1] = 0.5 * h
    weights[1:-1] *= scale * scale  # measure in which the x-space path is symmetric

    for j in range(k):
        energy, w, resid = _refine_pair(d_ld, e_ld, energies[j], vectors[:, j])
        if resid > 10.0 * tol.eigen_residual:
            raise ConvergenceError(
                f"eigenpair {j} residual {resid:.3e} stayed above "
                f"10 x {tol.eigen_residual:.1e} after refinement"
            )
        v = w / scale
        full = np.zeros(grid.n_points)
        full[1:-1] = v
        state = WaveFunction(grid, full, weights.copy()).normalize()
        if state.values[1] < 0:  # deterministic sign convention
            state.values = -state.values
        states.append(state)
        out_energies.append(energy)
        residuals.append(resid)

    meta = {
        "backend": tol.eigen_backend,
        "n_points": grid.n_points,
        "spacing": h,
        "space": grid.space,
        "hbar": hbar,
        "m0": m0,
        "residuals": residuals,
        "class": group_class.spec_string() if group_class is not None else None,
    }
    return Spectrum(np.array(out_energies), states, group_class, meta)


# ---------------------------------------------------------------------------
# state transforms and conveniences
# ---------------------------------------------------------------------------


def transform_state(cls: GroupClass, phi: WaveFunction) -> WaveFunction:
    """Map a deformed-coordinate state to plain x space.

    psi(x) = phi(G^{-1}(x)) / sqrt(A(x)), sampled on a uniform x grid spanning
    the image of the input grid; the plain-dx norm is preserved.
    """
    from scipy.interpolate import CubicSpline

    if phi.grid.space != SPACE_G:
        raise ValueError("transform_state expects a state on a deformed-coordinate grid")
    if cls.is_identity:
        return WaveFunction(
            Grid(phi.grid.start, phi.grid.end, phi.grid.n_points, SPACE_X),
            phi.values.copy(),
            phi.norm_weight.copy(),
        )
    u = phi.grid.nodes
    spline = CubicSpline(u, phi.values)
    x_grid = Grid(cls.g(phi.grid.start), cls.g(phi.grid.end), phi.grid.n_points, SPACE_X)
    xs = x_grid.nodes
    values = np.empty_like(xs)
    for i, x in enumerate(xs):
        ui = cls.g_inv(x)
        values[i] = float(spline(np.clip(ui, u[0], u[-1]))) / math.sqrt(
            cls.deformation_factor(x)
        )
    h = x_grid.spacing
    weights = np.full(x_grid.n_points, h)
    weights[0] = weights[-1] = 0.5 * h
    return WaveFunction(x_grid, values, weights)


def well_grids(cls: GroupClass, L: float, n_points: int) -> tuple[Grid, Grid]:
    """Matching x-space and deformed-space grids for a width-L well."""
    lo, hi = cls.domain
    if not (lo < 0.0 and L < hi):
        raise DomainError(
            f"well [0, {L}] exits the domain {cls.domain} of class {cls.spec_string()}"
        )
    return (
        Grid(0.0, L, n_points, SPACE_X),
        Grid(0.0, cls.g_inv(L), n_points, SPACE_G),
    )


def solve_well(
    cls: GroupClass,
    L: float,
    n_points: int,
    k: int,
    path: str = SPACE_G,
    hbar: float = 1.0,
    m0: float = 1.0,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Spectrum:
    """Infinite-well spectrum through either formulation ("g" or "x")."""
    grid_x, grid_g = well_grids(cls, L, n_points)
    pot = InfiniteWell(L)
    if path == SPACE_G:
        ham = hamiltonian_gspace(cls, grid_g, pot, m0, hbar)
        return solve_eigen(ham, k, grid_g, cls, hbar, m0, tol)
    if path == SPACE_X:
        ham = hamiltonian_xspace(cls, grid_x, pot, m0, hbar)
        return solve_eigen(ham, k, grid_x, cls, hbar, m0, tol)
    raise ValueError(f"unknown path {path!r}")


def cross_check_well(
    cls: GroupClass,
    L: float,
    n_points: int,
    k: int,
    hbar: float = 1.0,
    m0: float = 1.0,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> tuple[Spectrum, Spectrum, float]:
    """Solve both formulations; return them plus the max relative energy gap."""
    spec_g = solve_well(cls, L, n_points, k, SPACE_G, hbar, m0, tol)
    spec_x = solve_well(cls, L, n_points, k, SPACE_X, hbar, m0, tol)
    rel = np.abs(spec_x.energies - spec_g.energies) / np.abs(spec_g.energies)
    return spec_g, spec_x, float(rel.max())
