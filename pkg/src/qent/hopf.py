"""Hopf structure maps and tensor-leg elements.

The coproduct, counit and coinverse act on single-leg Elements; their
leg-wise extensions act on MultiElements, which represent elements of the
tensor powers of the algebra (two legs for the direct square, four legs for
its coproduct, and so on).  All legs share one deformation parameter.

On the generators:

    Δ(a)  = a ⊗ a  - c ⊗ c*          Δ(c)  = a ⊗ c  + c ⊗ a*
    Δ(a*) = a* ⊗ a* - c* ⊗ c         Δ(c*) = a* ⊗ c* + c* ⊗ a
    ε(a) = ε(a*) = 1,  ε(c) = ε(c*) = 0
    κ(a) = a*,  κ(a*) = a,  κ(c) = -(1/q) c,  κ(c*) = -q c*

These choices make the fundamental matrix [[a, √q c], [-c*/√q, a*]] a
unitary corepresentation and Δ coassociative.
"""

from __future__ import annotations

from typing import Mapping

from .algebra import (
    PLAIN,
    STAR,
    AlgebraParams,
    Element,
    Monomial,
    MONO_A,
    MONO_ASTAR,
    MONO_C,
    MONO_CSTAR,
    UNIT,
    _format_terms,
    _mono,
    _mono_adjoint,
    _mono_mul,
)


class MultiElement:
    """Linear combination of tuples of monomials: an element of a tensor power."""

    __slots__ = ("params", "legs", "terms")

    def __init__(self, params: AlgebraParams, legs: int, terms: Mapping[tuple, complex] | None = None):
        if legs < 1:
            raise ValueError("legs must be at least 1")
        pruned = {}
        if terms:
            for tup, coeff in terms.items():
                if len(tup) != legs:
                    raise ValueError(f"term {tup!r} does not have {legs} legs")
                z = complex(coeff)
                if abs(z) > params.tol:
                    pruned[tup] = z
        self.params = params
        self.legs = legs
        self.terms = pruned

    @classmethod
    def zero(cls, params: AlgebraParams, legs: int) -> "MultiElement":
        return cls(params, legs)

    @classmethod
    def unit(cls, params: AlgebraParams, legs: int) -> "MultiElement":
        return cls(params, legs, {(UNIT,) * legs: 1.0})

    def coeff(self, tup: tuple) -> complex:
        return self.terms.get(tup, 0j)

    def items(self):
        return self.terms.items()

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "MultiElement"):
        if self.params != other.params:
            raise ValueError("operands carry different algebra parameters")
        if self.legs != other.legs:
            raise ValueError(f"leg mismatch: {self.legs} vs {other.legs}")

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = MultiElement(self.params, self.legs, {(UNIT,) * self.legs: other})
        if not isinstance(other, MultiElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for tup, coeff in other.terms.items():
            out[tup] = out.get(tup, 0j) + coeff
        return MultiElement(self.params, self.legs, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return MultiElement(
                self.params, self.legs,
                {tup: coeff * other for tup, coeff in self.terms.items()},
            )
        if not isinstance(other, MultiElement):
            return NotImplemented
        self._check(other)
        q = self.params.q
        out: dict = {}
        for tx, cx in self.terms.items():
            for ty, cy in other.terms.items():
                base = cx * cy
                # leg-wise monomial products, expanded over all legs
                partial = [((), base)]
                for mono_x, mono_y in zip(tx, ty):
                    factors = _mono_mul(mono_x, mono_y, q)
                    partial = [
                        (tup + (mono,), coeff * scale)
                        for tup, coeff in partial
                        for mono, scale in factors
                    ]
                for tup, coeff in partial:
                    out[tup] = out.get(tup, 0j) + coeff
        return MultiElement(self.params, self.legs, out)

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self.__mul__(other)
        return NotImplemented

    def adjoint(self) -> "MultiElement":
        q = self.params.q
        out: dict = {}
        for tup, coeff in self.terms.items():
            scale = 1.0
            monos = []
            for mono in tup:
                s, mono2 = _mono_adjoint(mono, q)
                scale *= s
                monos.append(mono2)
            key = tuple(monos)
            out[key] = out.get(key, 0j) + coeff.conjugate() * scale
        return MultiElement(self.params, self.legs, out)

    def distance(self, other: "MultiElement") -> float:
        self._check(other)
        keys = set(self.terms) | set(other.terms)
        return max((abs(self.coeff(k) - other.coeff(k)) for k in keys), default=0.0)

    def equal(self, other: "MultiElement") -> bool:
        return self.distance(other) <= self.params.tol

    def __eq__(self, other):
        if not isinstance(other, MultiElement):
            return NotImplemented
        return self.params == other.params and self.legs == other.legs and self.equal(other)

    __hash__ = None

    def __repr__(self):
        return f"MultiElement(legs={self.legs}, {_format_terms(self.terms)!s})"

    def __str__(self):
        return _format_terms(self.terms)


def tensor(*factors) -> MultiElement:
    """Tensor product of Elements / MultiElements, with legs concatenated."""
    if not factors:
        raise ValueError("tensor() needs at least one factor")
    params = factors[0].params
    terms = [((), 1.0 + 0.0j)]
    legs = 0
    for f in factors:
        if f.params != params:
            raise ValueError("tensor factors carry different algebra parameters")
        if isinstance(f, Element):
            items = [((mono,), coeff) for mono, coeff in f.terms.items()]
            legs += 1
        else:
            items = list(f.terms.items())
            legs += f.legs
        terms = [(tup + t2, c * c2) for tup, c in terms for t2, c2 in items]
    return MultiElement(params, legs, dict_accumulate(terms))


def dict_accumulate(pairs) -> dict:
    out: dict = {}
    for key, coeff in pairs:
        out[key] = out.get(key, 0j) + coeff
    return out


def as_multi(x, legs: int | None = None) -> MultiElement:
    """View an Element as a one-leg MultiElement (MultiElements pass through)."""
    if isinstance(x, MultiElement):
        if legs is not None and x.legs != legs:
            raise ValueError(f"expected {legs} legs, got {x.legs}")
        return x
    me = MultiElement(x.params, 1, {(mono,): coeff for mono, coeff in x.terms.items()})
    if legs is not None and legs != 1:
        raise ValueError(f"expected {legs} legs, got 1")
    return me


def _require_legs(x: MultiElement, legs: int):
    if not isinstance(x, MultiElement) or x.legs != legs:
        got = x.legs if isinstance(x, MultiElement) else "Element"
        raise ValueError(f"expected a MultiElement with {legs} legs, got {got}")


# -- coproduct ---------------------------------------------------------------

_DELTA_TABLE = {
    MONO_A: (((MONO_A, MONO_A), 1.0), ((MONO_C, MONO_CSTAR), -1.0)),
    MONO_ASTAR: (((MONO_ASTAR, MONO_ASTAR), 1.0), ((MONO_CSTAR, MONO_C), -1.0)),
    MONO_C: (((MONO_A, MONO_C), 1.0), ((MONO_C, MONO_ASTAR), 1.0)),
    MONO_CSTAR: (((MONO_ASTAR, MONO_CSTAR), 1.0), ((MONO_CSTAR, MONO_A), 1.0)),
}

_COPRODUCT_CACHE: dict = {}


def _coproduct_monomial(params: AlgebraParams, mono: Monomial) -> MultiElement:
    key = (params.q, params.tol, mono)
    cached = _COPRODUCT_CACHE.get(key)
    if cached is not None:
        return cached
    out = MultiElement.unit(params, 2)
    gens = (
        (MONO_A if mono.sector == PLAIN else MONO_ASTAR, mono.k),
        (MONO_C, mono.m),
        (MONO_CSTAR, mono.n),
    )
    for gen, count in gens:
        if count == 0:
            continue
        factor = MultiElement(params, 2, dict(_DELTA_TABLE[gen]))
        for _ in range(count):
            out = out * factor
    _COPRODUCT_CACHE[key] = out
    return out


def coproduct(x: Element) -> MultiElement:
    """Δ as a multiplicative *-homomorphism into the two-leg algebra."""
    out: dict = {}
    for mono, coeff in x.terms.items():
        for tup, c in _coproduct_monomial(x.params, mono).terms.items():
            out[tup] = out.get(tup, 0j) + coeff * c
    return MultiElement(x.params, 2, out)


def apply_coproduct_leg(x: MultiElement, leg: int) -> MultiElement:
    """Apply Δ to one leg, producing a MultiElement with one extra leg."""
    if not 0 <= leg < x.legs:
        raise ValueError(f"leg {leg} out of range for {x.legs} legs")
    out: dict = {}
    for tup, coeff in x.terms.items():
        for (g1, g2), c in _coproduct_monomial(x.params, tup[leg]).terms.items():
            key = tup[:leg] + (g1, g2) + tup[leg + 1:]
            out[key] = out.get(key, 0j) + coeff * c
    return MultiElement(x.params, x.legs + 1, out)


def product_coproduct(x: MultiElement) -> MultiElement:
    """Coproduct of the direct square: two legs in, four legs out, ordered (A,B,A,B)."""
    _require_legs(x, 2)
    out: dict = {}
    for (ma, mb), coeff in x.terms.items():
        da = _coproduct_monomial(x.params, ma)
        db = _coproduct_monomial(x.params, mb)
        for (a1, a2), ca in da.terms.items():
            cca = coeff * ca
            for (b1, b2), cb in db.terms.items():
                key = (a1, b1, a2, b2)
                out[key] = out.get(key, 0j) + cca * cb
    return MultiElement(x.params, 4, out)


# -- counit ------------------------------------------------------------------

def _counit_monomial(mono: Monomial) -> float:
    return 1.0 if (mono.m == 0 and mono.n == 0) else 0.0


def counit(x: Element) -> complex:
    """ε: the unital homomorphism with ε(a) = ε(a*) = 1 and ε(c) = ε(c*) = 0."""
    return sum(
        (coeff for mono, coeff in x.terms.items() if mono.m == 0 and mono.n == 0),
        0j,
    )


def multi_counit(x: MultiElement) -> complex:
    total = 0j
    for tup, coeff in x.terms.items():
        if all(mono.m == 0 and mono.n == 0 for mono in tup):
            total += coeff
    return total


def product_counit(x: MultiElement) -> complex:
    """ε of the direct square, applied leg-wise."""
    _require_legs(x, 2)
    return multi_counit(x)


# -- coinverse ---------------------------------------------------------------

def _coinverse_monomial(mono: Monomial, q: float):
    """κ on a basis monomial as (real scale, monomial)."""
    scale = (-q) ** mono.n * (-1.0 / q) ** mono.m
    if mono.sector == PLAIN:
        scale *= q ** ((mono.m + mono.n) * mono.k)
        return scale, _mono(STAR, mono.k, mono.m, mono.n)
    scale *= q ** (-(mono.m + mono.n) * mono.k)
    return scale, _mono(PLAIN, mono.k, mono.m, mono.n)


def coinverse(x: Element) -> Element:
    """κ: the antihomomorphic coinverse (antipode)."""
    out: dict = {}
    for mono, coeff in x.terms.items():
        scale, mono2 = _coinverse_monomial(mono, x.params.q)
        out[mono2] = out.get(mono2, 0j) + coeff * scale
    return Element(x.params, out)


def coinverse_squared(x):
    """κ² as a homomorphism; acts diagonally on monomials, leg-wise on tensors."""
    q = x.params.q
    if isinstance(x, Element):
        out = {}
        for mono, coeff in x.terms.items():
            out[mono] = out.get(mono, 0j) + coeff * q ** (2 * (mono.n - mono.m))
        return Element(x.params, out)
    out = {}
    for tup, coeff in x.terms.items():
        scale = 1.0
        for mono in tup:
            scale *= q ** (2 * (mono.n - mono.m))
        out[tup] = out.get(tup, 0j) + coeff * scale
    return MultiElement(x.params, x.legs, out)


def product_coinverse(x: MultiElement) -> MultiElement:
    """κ of the direct square, applied leg-wise."""
    _require_legs(x, 2)
    q = x.params.q
    out: dict = {}
    for tup, coeff in x.terms.items():
        scale = 1.0
        monos = []
        for mono in tup:
            s, mono2 = _coinverse_monomial(mono, q)
            scale *= s
            monos.append(mono2)
        key = tuple(monos)
        out[key] = out.get(key, 0j) + coeff * scale
    return MultiElement(x.params, 2, out)


# -- transposition map ---------------------------------------------------------

def _theta_monomial(mono: Monomial, q: float):
    """θ = (adjoint ∘ κ) on a basis monomial as (real scale, monomial)."""
    scale = (-1.0) ** (mono.m + mono.n) * q ** (mono.n - mono.m)
    return scale, _mono(mono.sector, mono.k, mono.n, mono.m)


def theta(x: Element) -> Element:
    """θ(x) = κ(x)*: an antilinear homomorphism (the transposition map)."""
    q = x.params.q
    out: dict = {}
    for mono, coeff in x.terms.items():
        scale, mono2 = _theta_monomial(mono, q)
        out[mono2] = out.get(mono2, 0j) + coeff.conjugate() * scale
    return Element(x.params, out)


def partial_theta(x: MultiElement, leg: int = 1) -> MultiElement:
    """Apply θ to one leg's basis monomials, leaving stored coefficients alone.

    θ itself is antilinear, so a leg-wise θ is only defined relative to the
    monomial basis; with this convention the image of a transformed density
    matrix is the transform of its partial transpose.
    """
    _require_legs(x, 2)
    if leg not in (0, 1):
        raise ValueError("leg must be 0 or 1")
    q = x.params.q
    out: dict = {}
    for tup, coeff in x.terms.items():
        scale, mono2 = _theta_monomial(tup[leg], q)
        key = (mono2, tup[1]) if leg == 0 else (tup[0], mono2)
        out[key] = out.get(key, 0j) + coeff * scale
    return MultiElement(x.params, 2, out)
