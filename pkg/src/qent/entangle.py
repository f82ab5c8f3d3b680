"""Positive definiteness, separability, and the quantum PPT criterion.

A two-leg element x is positive definite when (b*hκ ⊗ hb)Δx >= 0 for every
two-leg b, where hb(y) = h(by) and b*hκ(y) = h(κ(y)b*).  Over a catalog of
irreducible blocks this is equivalent to every inverse-transform block of x
being positive semidefinite, which is what the report-producing checks
compute.  Separable elements are convex combinations of tensor products of
single-factor positive definite elements; applying the transposition map to
one leg of a separable element preserves positive definiteness, giving a
transform-side partial-transposition test that mirrors the matrix-side PPT
criterion.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corep import ProductCorep, product_corep, standard_catalog
from .fourier import (
    DensityOp,
    inverse,
    inverse_single,
    support_residual,
    support_residual_single,
    _sqrt_pair,
)
from .haar import haar
from .hopf import MultiElement, partial_theta, product_coinverse, product_coproduct, tensor

POSITIVE_DEFINITE = "POSITIVE_DEFINITE"
NOT_POSITIVE_DEFINITE = "NOT_POSITIVE_DEFINITE"
UNDECIDED_SUPPORT = "UNDECIDED_SUPPORT"

SEPARABLE = "SEPARABLE"
ENTANGLED = "ENTANGLED"

# eigenvalues in (-EIG_TOL, 0) count as zero; eigen-solvers jitter at this scale
EIG_TOL = 1e-9


@dataclass(frozen=True)
class PDReport:
    """Outcome of a positive-definiteness check over a block catalog."""

    verdict: str
    per_block: dict
    support_residual: float
    witness: MultiElement | None = None


@dataclass(frozen=True)
class PPTMatrixReport:
    """Partial-transpose spectrum of a density operator."""

    psd: bool
    eigenvalues: tuple


def pd_witness_value(x: MultiElement, b: MultiElement) -> complex:
    """(b*hκ ⊗ hb)Δx: the positive-definiteness pairing of x against a witness b.

    The four-leg coproduct of x is contracted with y ↦ h(κ(y)·b*) on the
    first leg pair and y ↦ h(b·y) on the second.  For positive definite x
    the value is real and non-negative for every b.
    """
    _require_two_legs(x)
    _require_two_legs(b)
    if x.params != b.params:
        raise ValueError("operands carry different algebra parameters")
    params = x.params
    b_star = b.adjoint()
    total = 0j
    for (m0, m1, m2, m3), coeff in product_coproduct(x).terms.items():
        first = MultiElement(params, 2, {(m0, m1): 1.0})
        second = MultiElement(params, 2, {(m2, m3): 1.0})
        total += coeff * haar(product_coinverse(first) * b_star) * haar(b * second)
    return total


def is_positive_definite(x: MultiElement, catalog, *, with_witness: bool = True) -> PDReport:
    """Block-wise positive-definiteness test over a catalog of product coreps.

    Every block of the inverse transform must be positive semidefinite and
    the catalog must span x (support residual within tolerance); otherwise
    the verdict is NOT_POSITIVE_DEFINITE or UNDECIDED_SUPPORT respectively.
    A failing block yields a concrete witness b with a negative pairing.
    """
    _require_two_legs(x)
    tol = x.params.tol
    per_block = {}
    failing = None
    failing_min = 0.0
    nonhermitian = False
    for U in catalog:
        block = inverse(x, U)
        if float(np.max(np.abs(block - block.conj().T))) > tol:
            # the pairing takes non-real values against suitable witnesses
            nonhermitian = True
        min_eig = float(np.linalg.eigvalsh((block + block.conj().T) / 2.0).min())
        per_block[U.label] = min_eig
        if min_eig < -EIG_TOL and min_eig < failing_min:
            failing = U
            failing_min = min_eig

    residual = support_residual(x, catalog)
    if residual > tol:
        return PDReport(UNDECIDED_SUPPORT, per_block, residual)
    if failing is None and not nonhermitian:
        return PDReport(POSITIVE_DEFINITE, per_block, residual)
    witness = find_negative_witness(x, failing) if (with_witness and failing is not None) else None
    return PDReport(NOT_POSITIVE_DEFINITE, per_block, residual, witness)


def find_negative_witness(x: MultiElement, U: ProductCorep) -> MultiElement | None:
    """A witness b with pd_witness_value(x, b) < 0, or None when the block is PSD.

    The block's most negative eigenvector is pulled back through the
    deformed orthogonality relations: with b a combination of adjoints of
    one row of matrix coefficients, the pairing collapses to a positive
    multiple of ⟨v|A|v⟩ for the block coefficient matrix A, so the negative
    eigenvector certifies failure.
    """
    block = inverse(x, U)
    herm = (block + block.conj().T) / 2.0
    if float(np.linalg.eigvalsh(herm).min()) >= -EIG_TOL:
        return None
    sqrtF, _ = _sqrt_pair(U.F)
    A = float(np.trace(U.F).real) * (sqrtF @ herm @ sqrtF)
    eigvals, vecs = np.linalg.eigh(A)
    v = vecs[:, int(np.argmin(eigvals))]
    Finv = np.linalg.inv(U.F)
    row = int(np.argmax(np.sum(np.abs(Finv) ** 2, axis=0)))
    witness = MultiElement.zero(x.params, 2)
    for col in range(U.dim):
        beta = v[col].conjugate()
        if abs(beta) > 0:
            witness = witness + U.entries[row][col].adjoint() * beta
    return witness


def is_positive_definite_single(x, coreps) -> PDReport:
    """Single-factor version of the block-wise positive-definiteness test."""
    tol = x.params.tol
    per_block = {}
    ok = True
    for u in coreps:
        block = inverse_single(x, u)
        asym = float(np.max(np.abs(block - block.conj().T)))
        min_eig = float(np.linalg.eigvalsh((block + block.conj().T) / 2.0).min())
        per_block[u.label] = min_eig
        if asym > tol or min_eig < -EIG_TOL:
            ok = False
    residual = support_residual_single(x, coreps)
    if residual > tol:
        return PDReport(UNDECIDED_SUPPORT, per_block, residual)
    return PDReport(POSITIVE_DEFINITE if ok else NOT_POSITIVE_DEFINITE, per_block, residual)


def separable_build(terms, coreps=None) -> MultiElement:
    """Σ p_λ a_λ ⊗ b_λ from non-negative weights and positive definite factors.

    Raises ValueError on a negative weight or a factor that fails the
    single-factor positive-definiteness test over the given corep catalog
    (default: trivial and fundamental).
    """
    terms = list(terms)
    if not terms:
        raise ValueError("separable_build needs at least one term")
    params = terms[0][1].params
    if coreps is None:
        coreps = tuple(standard_catalog(params).values())
    out = MultiElement.zero(params, 2)
    for idx, (weight, left, right) in enumerate(terms):
        if weight < 0:
            raise ValueError(f"term {idx}: negative weight {weight}")
        for side, factor in (("left", left), ("right", right)):
            report = is_positive_definite_single(factor, coreps)
            if report.verdict != POSITIVE_DEFINITE:
                raise ValueError(
                    f"term {idx}: {side} factor is not positive definite "
                    f"({report.verdict}, blocks {report.per_block})"
                )
        out = out + tensor(left, right) * float(weight)
    return out


def ppt_check(x: MultiElement, catalog, *, leg: int = 1) -> PDReport:
    """Positive-definiteness of the element with the transposition map on one leg.

    Separable elements always pass; a failure certifies entanglement of any
    operator whose transform is x.
    """
    return is_positive_definite(partial_theta(x, leg=leg), catalog)


def partial_transpose(matrix, dims, leg: int = 1) -> np.ndarray:
    """Transpose one tensor factor of a bipartite matrix in the product basis."""
    n, m = dims
    arr = np.asarray(matrix, dtype=complex).reshape(n, m, n, m)
    arr = arr.transpose(0, 3, 2, 1) if leg == 1 else arr.transpose(2, 1, 0, 3)
    return arr.reshape(n * m, n * m)


def ppt_matrix(rho: DensityOp) -> PPTMatrixReport:
    """Spectrum test of the partial transpose on the second factor."""
    if not rho.is_hermitian(1e-9):
        raise ValueError("ppt_matrix requires a hermitian input")
    pt = partial_transpose(rho.matrix, rho.dims)
    eigvals = np.linalg.eigvalsh((pt + pt.conj().T) / 2.0)
    return PPTMatrixReport(bool(eigvals.min() >= -EIG_TOL), tuple(float(v) for v in eigvals))


def tensor_pd(a, b, coreps=None):
    """a ⊗ b for positive definite single-factor elements, with a PSD certificate.

    The certificate records the single-factor block minima together with the
    product-block minima; the product blocks are Kronecker products of the
    single-factor blocks, so positivity of the factors forces positivity of
    the product.
    """
    params = a.params
    if coreps is None:
        coreps = tuple(standard_catalog(params).values())
    report_a = is_positive_definite_single(a, coreps)
    report_b = is_positive_definite_single(b, coreps)
    for name, report in (("left", report_a), ("right", report_b)):
        if report.verdict != POSITIVE_DEFINITE:
            raise ValueError(f"{name} factor is not positive definite ({report.verdict})")
    product = tensor(a, b)
    product_minima = {}
    for u in coreps:
        for v in coreps:
            U = product_corep(u, v)
            block = inverse(product, U)
            min_eig = float(np.linalg.eigvalsh((block + block.conj().T) / 2.0).min())
            product_minima[U.label] = min_eig
    certificate = {
        "left": report_a.per_block,
        "right": report_b.per_block,
        "product": product_minima,
    }
    return product, certificate


def decide_separability_2x2(rho: DensityOp) -> str:
    """SEPARABLE or ENTANGLED for a 2⊗2 state; the PPT test is decisive here.

    Larger carrier spaces are refused: there the partial transpose is only a
    necessary condition and a one-sided answer would be misleading.
    """
    if rho.dims != (2, 2):
        raise ValueError(f"decide_separability_2x2 handles dims (2, 2) only, got {rho.dims}")
    if not rho.is_state(1e-8):
        raise ValueError("input is not a state (hermitian, unit trace, PSD)")
    return SEPARABLE if ppt_matrix(rho).psd else ENTANGLED


def _require_two_legs(x):
    if not isinstance(x, MultiElement) or x.legs != 2:
        got = x.legs if isinstance(x, MultiElement) else type(x).__name__
        raise ValueError(f"expected a two-leg element, got {got}")
