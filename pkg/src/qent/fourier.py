"""Fourier transform between operators on carrier spaces and algebra elements.

An operator ρ on the carrier space of a product corepresentation U is sent to

    ρ̂ = Σ ρ_(ik),(jl) U_(jl),(ik)  =  (tr ⊗ id) ρU,

an element of the two-leg algebra.  The inverse transform of any element x
against an irreducible block U is

    x̂(U) = F^(-1/2) · H^T · F^(1/2),   H_(rs),(mn) = h(U_(rs),(mn)* · x),

and the original operator is recovered as (tr F) √F x̂(U) √F.  The same maps
with a single-factor corepresentation act between matrices and one-leg
Elements.
"""

from __future__ import annotations

import numpy as np

from .algebra import Element
from .corep import Corep, ProductCorep
from .haar import haar
from .hopf import MultiElement, product_counit


class DensityOp:
    """A complex square matrix on a bipartite carrier space with declared factor dims.

    The composite row index is (ik) with i over the left factor and k over
    the right, i.e. row = i * dims[1] + k.
    """

    __slots__ = ("dims", "matrix")

    def __init__(self, dims, matrix):
        n, m = int(dims[0]), int(dims[1])
        if n < 1 or m < 1:
            raise ValueError("factor dimensions must be positive")
        arr = np.array(matrix, dtype=complex)
        if arr.shape != (n * m, n * m):
            raise ValueError(f"matrix shape {arr.shape} does not match dims {n}x{m}")
        arr.setflags(write=False)
        self.dims = (n, m)
        self.matrix = arr

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def hermiticity_residual(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T)))

    def is_hermitian(self, tol: float = 1e-9) -> bool:
        return self.hermiticity_residual() <= tol

    def min_eigenvalue(self) -> float:
        herm = (self.matrix + self.matrix.conj().T) / 2.0
        return float(np.linalg.eigvalsh(herm).min())

    def is_psd(self, tol: float = 1e-9) -> bool:
        return self.is_hermitian(tol) and self.min_eigenvalue() >= -tol

    def is_state(self, tol: float = 1e-9) -> bool:
        return self.is_psd(tol) and abs(self.trace() - 1.0) <= tol

    def __repr__(self):
        return f"DensityOp(dims={self.dims}, trace={self.trace():.6g})"


# -- two-leg transform ---------------------------------------------------------

def forward(rho, U: ProductCorep) -> MultiElement:
    """ρ̂ = Σ ρ_(ik),(jl) U_(jl),(ik); linear in ρ."""
    mat = rho.matrix if isinstance(rho, DensityOp) else np.asarray(rho, dtype=complex)
    d = U.dim
    if mat.shape != (d, d):
        raise ValueError(f"operator shape {mat.shape} does not match corep dimension {d}")
    out = MultiElement.zero(U.params, 2)
    for row in range(d):
        for col in range(d):
            coeff = mat[row, col]
            if coeff:
                out = out + U.entries[col][row] * coeff
    return out


def inverse(x: MultiElement, U: ProductCorep) -> np.ndarray:
    """The inverse transform of x against the irreducible block U."""
    if not isinstance(x, MultiElement) or x.legs != 2:
        raise ValueError("inverse() expects a two-leg element")
    if x.params != U.params:
        raise ValueError("element and corepresentation parameters differ")
    d = U.dim
    H = np.empty((d, d), dtype=complex)
    for r in range(d):
        for c in range(d):
            H[r, c] = haar(U.entries[r][c].adjoint() * x)
    sqrtF, inv_sqrtF = _sqrt_pair(U.F)
    return inv_sqrtF @ H.T @ sqrtF


def reconstruct(x: MultiElement, U: ProductCorep) -> np.ndarray:
    """(tr F) √F x̂(U) √F: recovers ρ when x is the transform of ρ over U."""
    sqrtF, _ = _sqrt_pair(U.F)
    return float(np.trace(U.F).real) * (sqrtF @ inverse(x, U) @ sqrtF)


def normalization_check(x: MultiElement) -> complex:
    """ε(x); equals tr ρ whenever x is the transform of ρ."""
    return product_counit(x)


def support_residual(x: MultiElement, catalog) -> float:
    """Distance between x and its re-expansion from the catalog's blocks.

    Zero means every matrix-coefficient component of x lives in one of the
    catalog's corepresentation blocks; a positive value reports the largest
    missed coefficient.
    """
    total = MultiElement.zero(x.params, 2)
    for U in catalog:
        total = total + forward(reconstruct(x, U), U)
    return x.distance(total)


# -- single-factor transform -----------------------------------------------------

def forward_single(mat, u: Corep) -> Element:
    """Σ ρ_ij u_ji for a single-factor operator ρ."""
    arr = np.asarray(mat, dtype=complex)
    d = u.dim
    if arr.shape != (d, d):
        raise ValueError(f"operator shape {arr.shape} does not match corep dimension {d}")
    out = Element.zero(u.params)
    for i in range(d):
        for j in range(d):
            coeff = arr[i, j]
            if coeff:
                out = out + u.entries[j][i] * coeff
    return out


def inverse_single(x: Element, u: Corep) -> np.ndarray:
    if not isinstance(x, Element):
        raise ValueError("inverse_single() expects a one-leg Element")
    if x.params != u.params:
        raise ValueError("element and corepresentation parameters differ")
    d = u.dim
    H = np.empty((d, d), dtype=complex)
    for r in range(d):
        for c in range(d):
            H[r, c] = haar(u.entries[r][c].adjoint() * x)
    sqrtF, inv_sqrtF = _sqrt_pair(u.F)
    return inv_sqrtF @ H.T @ sqrtF


def reconstruct_single(x: Element, u: Corep) -> np.ndarray:
    sqrtF, _ = _sqrt_pair(u.F)
    return float(np.trace(u.F).real) * (sqrtF @ inverse_single(x, u) @ sqrtF)


def support_residual_single(x: Element, coreps) -> float:
    total = Element.zero(x.params)
    for u in coreps:
        total = total + forward_single(reconstruct_single(x, u), u)
    return x.distance(total)


# -- reference states ------------------------------------------------------------

def singlet_state() -> DensityOp:
    """The projector onto (|01⟩ - |10⟩)/√2 on a 2⊗2 carrier space."""
    psi = np.array([0.0, 1.0, -1.0, 0.0]) / np.sqrt(2.0)
    return DensityOp((2, 2), np.outer(psi, psi.conj()))


def maximally_mixed(dims=(2, 2)) -> DensityOp:
    n, m = dims
    return DensityOp(dims, np.eye(n * m) / (n * m))


def werner_state(p: float) -> DensityOp:
    """(1-p)·I/4 + p·|Ψ⁻⟩⟨Ψ⁻|; its partial transpose loses positivity at p = 1/3."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing parameter must lie in [0, 1], got {p}")
    return DensityOp((2, 2), (1.0 - p) * np.eye(4) / 4.0 + p * singlet_state().matrix)


def product_basis_projector(i: int, k: int, dims=(2, 2)) -> DensityOp:
    """|ik⟩⟨ik| in the computational product basis."""
    n, m = dims
    if not (0 <= i < n and 0 <= k < m):
        raise ValueError("basis indices out of range")
    mat = np.zeros((n * m, n * m))
    mat[i * m + k, i * m + k] = 1.0
    return DensityOp(dims, mat)


# -- internals --------------------------------------------------------------------

def _sqrt_pair(F: np.ndarray):
    """(√F, F^(-1/2)) for a positive matrix; diagonal inputs stay exact."""
    if np.max(np.abs(F - np.diag(np.diagonal(F)))) == 0.0:
        root = np.sqrt(np.diagonal(F).astype(float))
        return np.diag(root), np.diag(1.0 / root)
    eigvals, vecs = np.linalg.eigh(F)
    if np.min(eigvals) <= 0:
        raise ValueError("intertwiner matrix is not positive definite")
    root = np.sqrt(eigvals)
    return (vecs * root) @ vecs.conj().T, (vecs / root) @ vecs.conj().T
