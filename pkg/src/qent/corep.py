"""Unitary corepresentations of the quantum SU(2) group and its direct square.

A corepresentation is a square matrix u of algebra Elements satisfying the
comultiplication rule Δu_ij = Σ_r u_ir ⊗ u_rj together with the two
unitarity families Σ_r u_ri* u_rj = δ_ij = Σ_r u_ir u_jr*.  Each irreducible
corepresentation carries a positive intertwiner F, the unique positive
invertible solution of

    (id ⊗ κ²) u = F u F⁻¹     with    tr F = tr F⁻¹ > 0.

The shipped catalog holds the trivial (spin-0) and the fundamental
(spin-1/2) corepresentations; product corepresentations of the direct
square are built as entry-wise tensor products with F given by the
Kronecker product of the factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import AlgebraParams, Element
from .haar import haar
from .hopf import MultiElement, coinverse_squared, tensor

_NULLSPACE_RTOL = 1e-10


@dataclass(frozen=True)
class Corep:
    """A unitary corepresentation with its positive intertwiner."""

    label: str
    dim: int
    entries: tuple
    F: np.ndarray = field(repr=False)
    params: AlgebraParams

    def entry(self, i: int, j: int) -> Element:
        return self.entries[i][j]


@dataclass(frozen=True)
class ProductCorep:
    """Corepresentation u ⊗ v of the direct square, with composite indices (ik),(jl)."""

    label: str
    left: Corep
    right: Corep
    dim: int
    entries: tuple
    F: np.ndarray = field(repr=False)
    params: AlgebraParams

    @property
    def dims(self) -> tuple:
        return (self.left.dim, self.right.dim)

    def entry(self, row: int, col: int) -> MultiElement:
        return self.entries[row][col]


def trivial_corep(params: AlgebraParams) -> Corep:
    """The one-dimensional trivial corepresentation."""
    entries = ((Element.unit(params),),)
    return Corep("triv", 1, entries, _freeze(np.array([[1.0]])), params)


def fundamental_corep(params: AlgebraParams) -> Corep:
    """The two-dimensional fundamental corepresentation [[a, √q c], [-c*/√q, a*]]."""
    a, astar, c, cstar = (Element.generator(params, g) for g in ("a", "a*", "c", "c*"))
    rq = math.sqrt(params.q)
    entries = (
        (a, rq * c),
        ((-1.0 / rq) * cstar, astar),
    )
    F = compute_F(entries, params)
    return Corep("fund", 2, entries, _freeze(F), params)


def compute_F(entries, params: AlgebraParams) -> np.ndarray:
    """Solve (id ⊗ κ²)u · F = F · u for the unique positive normalized F.

    The equation is linear in the entries of F; its solution space must be
    one-dimensional (Schur), otherwise the input is reducible or corrupted
    and a ValueError is raised.  The normalization tr F = tr F⁻¹ with
    positive trace fixes the scale.
    """
    dim = len(entries)
    k2 = [[coinverse_squared(e) for e in row] for row in entries]

    monomials = set()
    for row in entries:
        for e in row:
            monomials.update(e.terms)
    for row in k2:
        for e in row:
            monomials.update(e.terms)
    monomials = sorted(monomials, key=lambda m: (m.sector, m.k, m.m, m.n))

    rows = []
    for i in range(dim):
        for j in range(dim):
            for mono in monomials:
                row = np.zeros(dim * dim, dtype=complex)
                for r in range(dim):
                    row[r * dim + j] += k2[i][r].coeff(mono)
                    row[i * dim + r] -= entries[r][j].coeff(mono)
                if np.any(np.abs(row) > 0):
                    rows.append(row)

    if not rows:
        if dim == 1:
            return np.array([[1.0]])
        raise ValueError("degenerate intertwiner system")

    system = np.array(rows)
    _, sigma, vh = np.linalg.svd(system)
    scale = sigma[0] if sigma.size else 1.0
    null_count = int(np.sum(sigma <= _NULLSPACE_RTOL * scale)) + (dim * dim - len(sigma))
    if null_count != 1:
        raise ValueError(
            f"intertwiner solution space has dimension {null_count}; "
            "input is not an irreducible unitary corepresentation"
        )
    F0 = vh[-1].reshape(dim, dim)

    # rotate the free phase away, then enforce hermiticity and positivity
    pivot = F0.flat[int(np.argmax(np.abs(F0)))]
    F0 = F0 * (pivot.conjugate() / abs(pivot))
    if np.max(np.abs(F0 - F0.conj().T)) > 1e-8 * np.max(np.abs(F0)):
        raise ValueError("intertwiner is not hermitian up to a phase")
    F0 = (F0 + F0.conj().T).real / 2.0
    eigvals = np.linalg.eigvalsh(F0)
    if np.all(eigvals < 0):
        F0, eigvals = -F0, -eigvals[::-1]
    if np.min(eigvals) <= 0:
        raise ValueError("no positive intertwiner exists for this input")

    scale = math.sqrt(np.trace(np.linalg.inv(F0)).real / np.trace(F0).real)
    return scale * F0


def product_corep(u: Corep, v: Corep) -> ProductCorep:
    """Entry-wise tensor product with U_(ik),(jl) = u_ij ⊗ v_kl and F = F_u ⊗ F_v."""
    if u.params != v.params:
        raise ValueError("factors carry different algebra parameters")
    n, m = u.dim, v.dim
    entries = tuple(
        tuple(tensor(u.entries[i][j], v.entries[k][l]) for j in range(n) for l in range(m))
        for i in range(n)
        for k in range(m)
    )
    F = np.kron(u.F, v.F)
    return ProductCorep(f"{u.label}*{v.label}", u, v, n * m, entries, _freeze(F), u.params)


def unitarity_residual(u) -> float:
    """Deviation from both unitarity families, over all index pairs."""
    dim = u.dim
    residual = 0.0
    for i in range(dim):
        for j in range(dim):
            target = _delta_unit(u, i == j)
            col = _sum(u.entries[r][i].adjoint() * u.entries[r][j] for r in range(dim))
            row = _sum(u.entries[i][r] * u.entries[j][r].adjoint() for r in range(dim))
            residual = max(residual, col.distance(target), row.distance(target))
    return residual


def intertwiner_residual(u) -> float:
    """Deviation of κ²(u)·F from F·u, entry-wise over the monomial support."""
    dim = u.dim
    F = u.F
    residual = 0.0
    for i in range(dim):
        for j in range(dim):
            lhs = _sum(coinverse_squared(u.entries[i][r]) * complex(F[r, j]) for r in range(dim))
            rhs = _sum(u.entries[r][j] * complex(F[i, r]) for r in range(dim))
            residual = max(residual, lhs.distance(rhs))
    return residual


def orthogonality_check(u, w) -> float:
    """Largest deviation from the deformed orthogonality relations.

    For matrix coefficients of irreducible unitary corepresentations,

        h(u_ij* w_i'j') = δ_uw (F⁻¹)_i'i δ_jj' / tr F,
        h(u_ij w_i'j'*) = δ_uw δ_ii' F_j'j / tr F.

    Cross terms between inequivalent corepresentations vanish.
    """
    same = u.label == w.label
    trF = float(np.trace(u.F).real)
    Finv = np.linalg.inv(u.F)
    residual = 0.0
    for i in range(u.dim):
        for j in range(u.dim):
            uij = u.entries[i][j]
            uij_star = uij.adjoint()
            for i2 in range(w.dim):
                for j2 in range(w.dim):
                    wij = w.entries[i2][j2]
                    first = haar(uij_star * wij)
                    second = haar(uij * wij.adjoint())
                    expect1 = Finv[i2, i] * (j == j2) / trF if same else 0.0
                    expect2 = u.F[j2, j] * (i == i2) / trF if same else 0.0
                    residual = max(residual, abs(first - expect1), abs(second - expect2))
    return residual


def standard_catalog(params: AlgebraParams) -> dict:
    """The shipped single-factor coreps, keyed by label."""
    triv = trivial_corep(params)
    fund = fundamental_corep(params)
    return {triv.label: triv, fund.label: fund}


DEFAULT_PAIRS = ("triv*triv", "triv*fund", "fund*triv", "fund*fund")


def product_catalog(params: AlgebraParams, pairs=DEFAULT_PAIRS) -> list:
    """Product corepresentations for the requested "left*right" pair labels."""
    singles = standard_catalog(params)
    catalog = []
    for pair in pairs:
        try:
            left, right = pair.split("*")
            catalog.append(product_corep(singles[left], singles[right]))
        except (ValueError, KeyError):
            known = ", ".join(sorted(singles))
            raise ValueError(f"unknown corepresentation pair {pair!r} (labels: {known})") from None
    return catalog


def _sum(elements):
    it = iter(elements)
    total = next(it)
    for e in it:
        total = total + e
    return total


def _delta_unit(u, diagonal: bool):
    unit = MultiElement.unit if isinstance(u.entries[0][0], MultiElement) else Element.unit
    args = (u.params, 2) if isinstance(u.entries[0][0], MultiElement) else (u.params,)
    one = unit(*args)
    return one if diagonal else one * 0.0


def _freeze(arr: np.ndarray) -> np.ndarray:
    out = np.asarray(arr, dtype=float)
    out.setflags(write=False)
    return out
