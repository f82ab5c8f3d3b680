"""Polynomial *-algebra of the quantum SU(2) group in normal-ordered form.

Two generators a, c subject to the relations

    ac = q ca,   ac* = q c*a,   cc* = c*c,
    a*a + (1/q) c*c  =  aa* + q cc*  =  I,

with a fixed deformation parameter 0 < q <= 1 (q = 1 is the commutative,
classical case).  Every element is stored as a finite complex linear
combination of normal-ordered basis monomials

    a^k c^m c*^n        (k, m, n >= 0)   or
    a*^k c^m c*^n       (k >= 1, m, n >= 0),

and all products are reduced back to this basis.  The rewrite system that
performs the reduction is confluent and terminating, so the normal form is
independent of the order in which rules are applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

PLAIN = "plain"  # monomial carries a^k
STAR = "star"    # monomial carries a*^k

GEN_A = "a"
GEN_ASTAR = "a*"
GEN_C = "c"
GEN_CSTAR = "c*"
GENERATOR_NAMES = (GEN_A, GEN_ASTAR, GEN_C, GEN_CSTAR)


@dataclass(frozen=True)
class AlgebraParams:
    """Deformation parameter and the absolute tolerance used for comparisons."""

    q: float = 0.5
    tol: float = 1e-9

    def __post_init__(self):
        if not 0.0 < self.q <= 1.0:
            raise ValueError(f"q must lie in (0, 1], got {self.q!r}")
        if not self.tol > 0.0:
            raise ValueError(f"tol must be positive, got {self.tol!r}")


@dataclass(frozen=True)
class Monomial:
    """A normal-ordered basis word a^k c^m c*^n (PLAIN) or a*^k c^m c*^n (STAR)."""

    sector: str = PLAIN
    k: int = 0
    m: int = 0
    n: int = 0

    def __post_init__(self):
        if self.sector not in (PLAIN, STAR):
            raise ValueError(f"unknown sector {self.sector!r}")
        if min(self.k, self.m, self.n) < 0:
            raise ValueError("monomial exponents must be non-negative")
        if self.k == 0 and self.sector != PLAIN:
            raise ValueError("k = 0 monomials must use the PLAIN sector")

    @property
    def degree(self) -> int:
        return self.k + self.m + self.n

    @property
    def is_unit(self) -> bool:
        return self.degree == 0

    def __str__(self):
        if self.is_unit:
            return "1"
        parts = []
        if self.k:
            sym = "a" if self.sector == PLAIN else "a*"
            parts.append(sym if self.k == 1 else f"{sym}^{self.k}")
        if self.m:
            parts.append("c" if self.m == 1 else f"c^{self.m}")
        if self.n:
            parts.append("c*" if self.n == 1 else f"c*^{self.n}")
        return " ".join(parts)


UNIT = Monomial()
MONO_A = Monomial(PLAIN, 1, 0, 0)
MONO_ASTAR = Monomial(STAR, 1, 0, 0)
MONO_C = Monomial(PLAIN, 0, 1, 0)
MONO_CSTAR = Monomial(PLAIN, 0, 0, 1)

_GENERATOR_MONOMIALS = {
    GEN_A: MONO_A,
    GEN_ASTAR: MONO_ASTAR,
    GEN_C: MONO_C,
    GEN_CSTAR: MONO_CSTAR,
}

_SORT_KEY = {PLAIN: 0, STAR: 1}


def _mono(sector: str, k: int, m: int, n: int) -> Monomial:
    return Monomial(PLAIN if k == 0 else sector, k, m, n)


def _mono_sort_key(mono: Monomial):
    return (_SORT_KEY[mono.sector], mono.k, mono.m, mono.n)


def _mono_times_gen(mono: Monomial, gen: str, q: float) -> dict:
    """Right-multiply a basis monomial by a single generator."""
    k, m, n = mono.k, mono.m, mono.n
    if gen == GEN_C:
        return {_mono(mono.sector, k, m + 1, n): 1.0}
    if gen == GEN_CSTAR:
        return {_mono(mono.sector, k, m, n + 1): 1.0}
    if gen == GEN_A:
        # commute a to the left of the c-block, then absorb: a*a = 1 - (1/q) cc*
        phase = q ** (-(m + n))
        if mono.sector == PLAIN:
            return {_mono(PLAIN, k + 1, m, n): phase}
        return {
            _mono(STAR, k - 1, m, n): phase,
            _mono(STAR, k - 1, m + 1, n + 1): -phase / q,
        }
    if gen == GEN_ASTAR:
        # commute a* to the left of the c-block, then absorb: aa* = 1 - q cc*
        phase = q ** (m + n)
        if mono.sector == STAR or k == 0:
            return {_mono(STAR, k + 1, m, n): phase}
        return {
            _mono(PLAIN, k - 1, m, n): phase,
            _mono(PLAIN, k - 1, m + 1, n + 1): -phase * q,
        }
    raise ValueError(f"unknown generator {gen!r}")


@lru_cache(maxsize=None)
def _mono_mul(x: Monomial, y: Monomial, q: float):
    """Normal-ordered product of two basis monomials, as ((monomial, coeff), ...)."""
    acc = {x: 1.0 + 0.0j}
    steps = (
        (GEN_A if y.sector == PLAIN else GEN_ASTAR, y.k),
        (GEN_C, y.m),
        (GEN_CSTAR, y.n),
    )
    for gen, count in steps:
        for _ in range(count):
            nxt: dict = {}
            for mono, coeff in acc.items():
                for mono2, scale in _mono_times_gen(mono, gen, q).items():
                    nxt[mono2] = nxt.get(mono2, 0j) + coeff * scale
            acc = nxt
    return tuple(acc.items())


def _mono_adjoint(mono: Monomial, q: float):
    """Adjoint of a basis monomial as (real scale, monomial)."""
    if mono.sector == PLAIN:
        scale = q ** ((mono.m + mono.n) * mono.k)
        return scale, _mono(STAR, mono.k, mono.n, mono.m)
    scale = q ** (-(mono.m + mono.n) * mono.k)
    return scale, _mono(PLAIN, mono.k, mono.n, mono.m)


class Element:
    """Finite complex linear combination of normal-ordered monomials.

    Instances are immutable by convention: every operation returns a new
    Element, so values can be shared freely between threads.  Coefficients
    with modulus at most ``params.tol`` are pruned on construction.
    """

    __slots__ = ("params", "terms")

    def __init__(self, params: AlgebraParams, terms: Mapping[Monomial, complex] | None = None):
        pruned = {}
        if terms:
            for mono, coeff in terms.items():
                z = complex(coeff)
                if abs(z) > params.tol:
                    pruned[mono] = z
        self.params = params
        self.terms = pruned

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, params: AlgebraParams) -> "Element":
        return cls(params)

    @classmethod
    def unit(cls, params: AlgebraParams) -> "Element":
        return cls(params, {UNIT: 1.0})

    @classmethod
    def from_scalar(cls, params: AlgebraParams, value: complex) -> "Element":
        return cls(params, {UNIT: complex(value)})

    @classmethod
    def generator(cls, params: AlgebraParams, name: str) -> "Element":
        try:
            mono = _GENERATOR_MONOMIALS[name]
        except KeyError:
            raise ValueError(f"unknown generator {name!r}") from None
        return cls(params, {mono: 1.0})

    @classmethod
    def monomial(cls, params: AlgebraParams, mono: Monomial, coeff: complex = 1.0) -> "Element":
        return cls(params, {mono: complex(coeff)})

    # -- inspection --------------------------------------------------------

    def coeff(self, mono: Monomial) -> complex:
        return self.terms.get(mono, 0j)

    def items(self):
        return self.terms.items()

    def degree(self) -> int:
        return max((mono.degree for mono in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Element"):
        if self.params != other.params:
            raise ValueError("operands carry different algebra parameters")

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = Element.from_scalar(self.params, other)
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, 0j) + coeff
        return Element(self.params, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * (other if isinstance(other, Element) else Element.from_scalar(self.params, other))

    def __rsub__(self, other):
        return (-1) * self + other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return Element(self.params, {mono: coeff * other for mono, coeff in self.terms.items()})
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        q = self.params.q
        out: dict = {}
        for mx, cx in self.terms.items():
            for my, cy in other.terms.items():
                cxy = cx * cy
                for mono, scale in _mono_mul(mx, my, q):
                    out[mono] = out.get(mono, 0j) + cxy * scale
        return Element(self.params, out)

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self.__mul__(other)
        return NotImplemented

    def adjoint(self) -> "Element":
        q = self.params.q
        out: dict = {}
        for mono, coeff in self.terms.items():
            scale, mono2 = _mono_adjoint(mono, q)
            out[mono2] = out.get(mono2, 0j) + coeff.conjugate() * scale
        return Element(self.params, out)

    # -- comparison --------------------------------------------------------

    def distance(self, other: "Element") -> float:
        """Largest coefficient deviation over the union of supports."""
        self._check(other)
        keys = set(self.terms) | set(other.terms)
        return max((abs(self.coeff(k) - other.coeff(k)) for k in keys), default=0.0)

    def equal(self, other: "Element") -> bool:
        return self.distance(other) <= self.params.tol

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.params == other.params and self.equal(other)

    __hash__ = None

    def __repr__(self):
        return f"Element({_format_terms(self.terms)!s})"

    def __str__(self):
        return _format_terms(self.terms)


def _format_coeff(z: complex) -> str:
    if abs(z.imag) < 1e-12:
        r = z.real
        return f"{int(r)}" if r == int(r) else f"{r:.6g}"
    return f"({z.real:.6g}{z.imag:+.6g}j)"


def _format_terms(terms) -> str:
    if not terms:
        return "0"
    parts = []
    for key in sorted(terms, key=_term_sort_key):
        coeff = terms[key]
        label = key if isinstance(key, str) else _term_label(key)
        if label == "1":
            parts.append(_format_coeff(coeff))
        else:
            parts.append(f"{_format_coeff(coeff)}·{label}")
    return " + ".join(parts)


def _term_label(key) -> str:
    if isinstance(key, Monomial):
        return str(key)
    return " ⊗ ".join(str(m) for m in key)


def _term_sort_key(key):
    if isinstance(key, Monomial):
        return _mono_sort_key(key)
    return tuple(_mono_sort_key(m) for m in key)


# -- word rewriting ----------------------------------------------------------

def _rules(q: float) -> dict:
    qi = 1.0 / q
    return {
        (GEN_C, GEN_A): ((qi, (GEN_A, GEN_C)),),
        (GEN_CSTAR, GEN_A): ((qi, (GEN_A, GEN_CSTAR)),),
        (GEN_C, GEN_ASTAR): ((q, (GEN_ASTAR, GEN_C)),),
        (GEN_CSTAR, GEN_ASTAR): ((q, (GEN_ASTAR, GEN_CSTAR)),),
        (GEN_A, GEN_ASTAR): ((1.0, ()), (-q, (GEN_C, GEN_CSTAR))),
        (GEN_ASTAR, GEN_A): ((1.0, ()), (-qi, (GEN_C, GEN_CSTAR))),
        (GEN_CSTAR, GEN_C): ((1.0, (GEN_C, GEN_CSTAR)),),
    }


def _reducible_positions(word, rules):
    return [i for i in range(len(word) - 1) if (word[i], word[i + 1]) in rules]


def _word_to_monomial(word) -> Monomial:
    # an irreducible word is s...s c...c c*...c* with s = a or a*
    k = m = n = 0
    sector = PLAIN
    stage = 0
    for sym in word:
        if sym in (GEN_A, GEN_ASTAR):
            if stage > 0:
                raise AssertionError(f"word {word!r} is not normal-ordered")
            if k and (sector == STAR) != (sym == GEN_ASTAR):
                raise AssertionError(f"word {word!r} mixes a and a*")
            sector = STAR if sym == GEN_ASTAR else PLAIN
            k += 1
        elif sym == GEN_C:
            if stage > 1:
                raise AssertionError(f"word {word!r} is not normal-ordered")
            stage = 1
            m += 1
        else:
            stage = 2
            n += 1
    return _mono(sector, k, m, n)


def normal_form(word: Iterable[str], params: AlgebraParams, *, rng=None) -> Element:
    """Reduce a product of generator symbols to its normal-ordered Element.

    ``word`` is a sequence over {"a", "a*", "c", "c*"}; the empty word gives
    the unit.  Reduction applies the rewrite rules at the leftmost reducible
    position; pass a numpy ``rng`` to pick positions at random instead (the
    result is the same either way, which is what the confluence tests check).
    """
    word = tuple(word)
    for sym in word:
        if sym not in GENERATOR_NAMES:
            raise ValueError(f"unknown generator symbol {sym!r}")
    rules = _rules(params.q)
    states = {word: 1.0 + 0.0j}
    out: dict = {}
    while states:
        nxt: dict = {}
        for w, coeff in states.items():
            positions = _reducible_positions(w, rules)
            if not positions:
                mono = _word_to_monomial(w)
                out[mono] = out.get(mono, 0j) + coeff
                continue
            i = positions[0] if rng is None else positions[int(rng.integers(len(positions)))]
            for scale, repl in rules[(w[i], w[i + 1])]:
                w2 = w[:i] + repl + w[i + 2:]
                nxt[w2] = nxt.get(w2, 0j) + coeff * scale
        states = nxt
    return Element(params, out)


# -- module-level operation aliases ------------------------------------------

def mul(x: Element, y: Element) -> Element:
    """Normal-ordered product of two Elements (bilinear in both arguments)."""
    return x * y


def adjoint(x: Element) -> Element:
    """The *-involution: antilinear and antimultiplicative."""
    return x.adjoint()


def equal(x: Element, y: Element) -> bool:
    """Coefficient-wise agreement within the shared tolerance."""
    return x.equal(y)


def generators(params: AlgebraParams):
    """The four generators (a, a*, c, c*) as Elements."""
    return tuple(Element.generator(params, name) for name in GENERATOR_NAMES)
