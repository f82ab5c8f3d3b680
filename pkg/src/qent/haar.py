"""The Haar state on the quantum SU(2) algebra and on its direct square.

The state h is the unique normalized two-sided invariant functional:
(h ⊗ id)Δx = h(x)·1 = (id ⊗ h)Δx.  On the normal-ordered basis it vanishes
unless the a-power is zero and the c and c* powers match, and

    h((cc*)^m) = q^m (1 - q²) / (1 - q^(2m+2))      for q < 1,
    h((cc*)^m) = 1 / (m + 1)                        at q = 1,

the q = 1 value being the classical limit of the same expression.  The
closed form is validated in the test suite against an independent linear
solver for the invariance equations.  On multi-leg elements h acts as the
product of the per-leg values.
"""

from __future__ import annotations

from .algebra import AlgebraParams, Element, Monomial
from .hopf import MultiElement, coproduct, product_coproduct, product_coinverse

_UNIT_KEY = Monomial()


def haar_monomial(mono: Monomial, params: AlgebraParams) -> complex:
    """h on a single basis monomial."""
    if mono.k > 0 or mono.m != mono.n:
        return 0j
    m = mono.m
    if m == 0:
        return 1 + 0j
    q = params.q
    if q == 1.0:
        return complex(1.0 / (m + 1))
    q2 = q * q
    return complex(q ** m * (1.0 - q2) / (1.0 - q2 ** (m + 1)))


def haar(x) -> complex:
    """Linear extension of the per-monomial Haar value; product state on tensors."""
    if isinstance(x, Element):
        return sum(
            (coeff * haar_monomial(mono, x.params) for mono, coeff in x.terms.items()),
            0j,
        )
    if isinstance(x, MultiElement):
        total = 0j
        for tup, coeff in x.terms.items():
            value = coeff
            for mono in tup:
                value *= haar_monomial(mono, x.params)
                if not value:
                    break
            total += value
        return total
    raise TypeError(f"haar() expects an Element or MultiElement, got {type(x)!r}")


def translated_haar_left(a, b) -> complex:
    """h(ab): the Haar value of the product, i.e. h translated by a on the left."""
    return haar(a * b)


def translated_haar_right(a, b) -> complex:
    """h(ba): the Haar value of the product in the opposite order."""
    return haar(b * a)


def convolve_check(a: MultiElement, b: MultiElement) -> complex:
    """((hb)* ∗ hb)(a): convolution of the translated functional with its involution.

    Here (η' ∗ η)(x) = (η' ⊗ η)Δx, with η(y) = h(by) and
    η*(y) = conj(η(κ(y)*)).  For every a and b this equals the
    positive-definiteness pairing computed in the entanglement module, which
    the tests cross-check.
    """
    if not isinstance(a, MultiElement) or a.legs != 2:
        raise ValueError("convolve_check expects two-leg elements")
    if not isinstance(b, MultiElement) or b.legs != 2:
        raise ValueError("convolve_check expects two-leg elements")
    params = a.params
    total = 0j
    for (m0, m1, m2, m3), coeff in product_coproduct(a).terms.items():
        first = MultiElement(params, 2, {(m0, m1): 1.0})
        second = MultiElement(params, 2, {(m2, m3): 1.0})
        eta_star = haar(b * product_coinverse(first).adjoint()).conjugate()
        eta = haar(b * second)
        total += coeff * eta_star * eta
    return total


def invariance_residual(x: Element) -> float:
    """Deviation of both one-sided Haar contractions of Δx from h(x)·1."""
    params = x.params
    hx = haar(x)
    left: dict = {}
    right: dict = {}
    for (m0, m1), coeff in coproduct(x).terms.items():
        h0 = haar_monomial(m0, params)
        if h0:
            left[m1] = left.get(m1, 0j) + coeff * h0
        h1 = haar_monomial(m1, params)
        if h1:
            right[m0] = right.get(m0, 0j) + coeff * h1
    residual = 0.0
    for contracted in (left, right):
        keys = set(contracted) | {_UNIT_KEY}
        for key in keys:
            expect = hx if key == _UNIT_KEY else 0j
            residual = max(residual, abs(contracted.get(key, 0j) - expect))
    return residual
