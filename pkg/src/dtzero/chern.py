"""Chern-number calculus for threefolds.

The three degree-six Chern monomials (c1^3, c1c2, c3) are computed
symbolically: cohomology of a product of projective spaces is modelled as
a truncated polynomial ring, hypersurfaces in P^4 go through a one-variable
truncation, and the tangent-twist exponent is expanded from Chern roots by
the splitting principle.  Integration means reading off the coefficient of
the top monomial.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

from .series import TruncatedSeries

Rational = Union[int, Fraction]

__all__ = [
    "BUILTIN_THREEFOLDS",
    "ChernNumbers",
    "ThreefoldSpec",
    "catalog",
    "chern_disjoint_union",
    "chern_of_hypersurface",
    "chern_of_projective_space_product",
    "chern_scale",
    "twist_class_monomials",
    "twist_exponent",
]


def _exact(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point values are not allowed in exact Chern data")
    return Fraction(value)


def _tidy(value: Fraction):
    """Render exact rationals as ints whenever they are integers."""
    return int(value) if value.denominator == 1 else value


# ---------------------------------------------------------------------------
# a minimal multivariate polynomial with optional nilpotency caps
# ---------------------------------------------------------------------------


class TruncatedPolynomial:
    """Polynomial in a fixed list of degree-one generators.

    When ``caps`` is given, any monomial in which generator j exceeds
    caps[j] is dropped; this models the truncated cohomology ring of a
    product of projective spaces.  Without caps it is an ordinary exact
    polynomial, which is what the splitting-principle expansion uses.
    """

    __slots__ = ("nvars", "caps", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Rational] | None = None,
                 caps: tuple[int, ...] | None = None):
        self.nvars = nvars
        self.caps = caps
        clean: dict[tuple[int, ...], Fraction] = {}
        for mono, coeff in (terms or {}).items():
            coeff = _exact(coeff)
            if coeff == 0:
                continue
            if caps is not None and any(e > c for e, c in zip(mono, caps)):
                continue
            clean[mono] = coeff
        self.terms = clean

    @classmethod
    def one(cls, nvars: int, caps: tuple[int, ...] | None = None) -> "TruncatedPolynomial":
        return cls(nvars, {(0,) * nvars: 1}, caps)

    @classmethod
    def variable(cls, index: int, nvars: int, caps: tuple[int, ...] | None = None) -> "TruncatedPolynomial":
        mono = tuple(1 if j == index else 0 for j in range(nvars))
        return cls(nvars, {mono: 1}, caps)

    def _like(self, terms) -> "TruncatedPolynomial":
        return TruncatedPolynomial(self.nvars, terms, self.caps)

    def _compatible(self, other: "TruncatedPolynomial") -> None:
        if self.nvars != other.nvars or self.caps != other.caps:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._compatible(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return self._like(terms)

    def __sub__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._compatible(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) - coeff
        return self._like(terms)

    def scale(self, factor: Rational) -> "TruncatedPolynomial":
        factor = _exact(factor)
        return self._like({m: c * factor for m, c in self.terms.items()})

    def __mul__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._compatible(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                if self.caps is not None and any(e > c for e, c in zip(mono, self.caps)):
                    continue
                terms[mono] = terms.get(mono, Fraction(0)) + c1 * c2
        return self._like(terms)

    def __pow__(self, e: int) -> "TruncatedPolynomial":
        if e < 0:
            raise ValueError("negative powers are not defined here")
        result = TruncatedPolynomial.one(self.nvars, self.caps)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def coefficient(self, mono: tuple[int, ...]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def graded_part(self, degree: int) -> "TruncatedPolynomial":
        return self._like({m: c for m, c in self.terms.items() if sum(m) == degree})

    def is_zero(self) -> bool:
        return not self.terms


def _elementary_symmetric(nvars: int) -> list[TruncatedPolynomial]:
    """e_1..e_nvars in the given number of variables."""
    out = []
    for k in range(1, nvars + 1):
        terms = {}
        for combo in combinations(range(nvars), k):
            mono = tuple(1 if j in combo else 0 for j in range(nvars))
            terms[mono] = 1
        out.append(TruncatedPolynomial(nvars, terms))
    return out


def _to_elementary(poly: TruncatedPolynomial) -> dict[tuple[int, ...], Fraction]:
    """Rewrite a symmetric polynomial in e_1..e_n, by the greedy leading-term
    reduction.  Keys are exponent tuples of (e_1, ..., e_n)."""
    es = _elementary_symmetric(poly.nvars)
    out: dict[tuple[int, ...], Fraction] = {}
    work = poly
    while not work.is_zero():
        mono = max(work.terms)
        coeff = work.terms[mono]
        lam = tuple(sorted(mono, reverse=True))
        if lam != mono:
            raise ValueError("polynomial is not symmetric")
        exps = tuple(
            lam[i] - (lam[i + 1] if i + 1 < len(lam) else 0) for i in range(len(lam))
        )
        out[exps] = out.get(exps, Fraction(0)) + coeff
        product = TruncatedPolynomial.one(poly.nvars)
        for e_poly, e_exp in zip(es, exps):
            if e_exp:
                product = product * e_poly ** e_exp
        work = work - product.scale(coeff)
    return {k: v for k, v in out.items() if v != 0}


# ---------------------------------------------------------------------------
# Chern numbers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChernNumbers:
    """The triple (c1^3, c1c2, c3) of a (weakly) complex threefold.

    Honest compact threefolds carry integers; rational cobordism
    combinations are allowed and flagged by is_integral().
    """

    c111: Rational
    c12: Rational
    c3: Rational

    def __post_init__(self):
        for name in ("c111", "c12", "c3"):
            object.__setattr__(self, name, _tidy(_exact(getattr(self, name))))

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in (self.c111, self.c12, self.c3))

    def as_integers(self) -> tuple[int, int, int]:
        if not self.is_integral():
            raise ValueError("Chern numbers are not integral")
        return (self.c111, self.c12, self.c3)

    def validation_warnings(self) -> tuple[str, ...]:
        """Soft sanity checks; violations are suspicious, not fatal."""
        notes = []
        if self.is_integral() and self.c12 % 24 != 0:
            notes.append(
                f"c1c2 = {self.c12} is not divisible by 24; "
                "no honest compact complex threefold has such Chern numbers"
            )
        return tuple(notes)

    def __add__(self, other: "ChernNumbers") -> "ChernNumbers":
        if not isinstance(other, ChernNumbers):
            return NotImplemented
        return chern_disjoint_union(self, other)


def chern_disjoint_union(a: ChernNumbers, b: ChernNumbers) -> ChernNumbers:
    """Chern numbers add over disjoint unions."""
    return ChernNumbers(a.c111 + b.c111, a.c12 + b.c12, a.c3 + b.c3)


def chern_scale(factor: Rational, c: ChernNumbers) -> ChernNumbers:
    """Scale a Chern triple by a rational factor (formal cobordism combination)."""
    factor = _exact(factor)
    return ChernNumbers(factor * c.c111, factor * c.c12, factor * c.c3)


@lru_cache(maxsize=1)
def twist_class_monomials() -> tuple[tuple[tuple[int, int, int], int], ...]:
    """Degree-three Chern class of T tensor K, expanded symbolically.

    With Chern roots a1, a2, a3 of the tangent bundle and c1(K) = -(a1+a2+a3),
    the class is prod_i (a_i - c1).  The expansion is rewritten in elementary
    symmetric polynomials; keys are exponent tuples of (c1, c2, c3).
    """
    a = [TruncatedPolynomial.variable(i, 3) for i in range(3)]
    c1 = a[0] + a[1] + a[2]
    product = (a[0] - c1) * (a[1] - c1) * (a[2] - c1)
    reduced = _to_elementary(product)
    items = []
    for mono, coeff in sorted(reduced.items()):
        if coeff.denominator != 1:
            raise ArithmeticError("twist class expansion produced a non-integer coefficient")
        items.append((mono, int(coeff)))
    return tuple(items)


def twist_exponent(c: ChernNumbers) -> Rational:
    """The Chern number of the twisted tangent bundle, evaluated on (c1^3, c1c2, c3).

    Always computed through the symbolic expansion, never from a
    hard-coded formula.
    """
    monomial_values = {
        (3, 0, 0): _exact(c.c111),
        (1, 1, 0): _exact(c.c12),
        (0, 0, 1): _exact(c.c3),
    }
    total = Fraction(0)
    for mono, coeff in twist_class_monomials():
        if mono not in monomial_values:
            raise ArithmeticError(f"unexpected Chern monomial {mono} in the twist expansion")
        total += coeff * monomial_values[mono]
    return _tidy(total)


def chern_of_projective_space_product(dims: Sequence[int]) -> ChernNumbers:
    """Chern numbers of a product of projective spaces with the given dimensions.

    Expands prod_j (1+h_j)^(d_j+1) in the truncated ring where h_j^(d_j+1) = 0
    and integrates degree-three monomials against the top class.
    """
    dims = tuple(int(d) for d in dims)
    if any(d < 1 for d in dims):
        raise ValueError("projective factors must have positive dimension")
    if sum(dims) != 3:
        raise ValueError(f"dimensions {list(dims)} do not sum to 3")
    nvars = len(dims)
    caps = dims
    total = TruncatedPolynomial.one(nvars, caps)
    for j, d in enumerate(dims):
        one_plus_h = TruncatedPolynomial.one(nvars, caps) + TruncatedPolynomial.variable(j, nvars, caps)
        total = total * one_plus_h ** (d + 1)
    c1 = total.graded_part(1)
    c2 = total.graded_part(2)
    c3 = total.graded_part(3)
    top = dims
    return ChernNumbers(
        (c1 * c1 * c1).coefficient(top),
        (c1 * c2).coefficient(top),
        c3.coefficient(top),
    )


def chern_of_hypersurface(degree: int) -> ChernNumbers:
    """Chern numbers of a smooth degree-d hypersurface in P^4.

    The total Chern class restricts to (1+h)^5 / (1+dh) mod h^4, and the
    hyperplane class integrates to the degree: int_X h^3 = d.
    """
    d = int(degree)
    if d < 1:
        raise ValueError("hypersurface degree must be positive")
    one_plus_h = TruncatedSeries.from_coefficients([1, 1], order=3)
    one_plus_dh = TruncatedSeries.from_coefficients([1, d], order=3)
    total = one_plus_h ** 5 * one_plus_dh.inverse()
    c1, c2, c3 = total[1], total[2], total[3]
    return ChernNumbers(c1 ** 3 * d, c1 * c2 * d, c3 * d)


# ---------------------------------------------------------------------------
# threefold constructor expressions
# ---------------------------------------------------------------------------


# Builtin names resolve to constructor data, not to frozen triples, so that
# every catalog value is produced by the symbolic engines above.
BUILTIN_THREEFOLDS: dict[str, tuple[str, object]] = {
    "P3": ("product", (3,)),
    "P2xP1": ("product", (2, 1)),
    "P1xP1xP1": ("product", (1, 1, 1)),
    "quintic": ("hypersurface", 5),
}


@dataclass(frozen=True)
class ThreefoldSpec:
    """A named threefold or constructor expression resolving to Chern numbers."""

    kind: str
    name: str | None = None
    chern: ChernNumbers | None = None
    dims: tuple[int, ...] | None = None
    degree: int | None = None
    parts: tuple["ThreefoldSpec", ...] | None = None
    factor: Fraction | None = None
    base: "ThreefoldSpec | None" = None

    @classmethod
    def builtin(cls, name: str) -> "ThreefoldSpec":
        if name not in BUILTIN_THREEFOLDS:
            known = ", ".join(sorted(BUILTIN_THREEFOLDS))
            raise ValueError(f"unknown builtin threefold {name!r}; known names: {known}")
        return cls(kind="builtin", name=name)

    @classmethod
    def explicit(cls, chern: ChernNumbers) -> "ThreefoldSpec":
        return cls(kind="explicit", chern=chern)

    @classmethod
    def product(cls, dims: Iterable[int]) -> "ThreefoldSpec":
        return cls(kind="product", dims=tuple(int(d) for d in dims))

    @classmethod
    def hypersurface(cls, degree: int) -> "ThreefoldSpec":
        return cls(kind="hypersurface", degree=int(degree))

    @classmethod
    def disjoint_union(cls, parts: Iterable["ThreefoldSpec"]) -> "ThreefoldSpec":
        return cls(kind="disjoint_union", parts=tuple(parts))

    @classmethod
    def scaled(cls, factor: Rational, base: "ThreefoldSpec") -> "ThreefoldSpec":
        return cls(kind="scaled", factor=_exact(factor), base=base)

    def resolve(self) -> ChernNumbers:
        """Evaluate the constructor expression to a Chern triple."""
        if self.kind == "builtin":
            ctor, arg = BUILTIN_THREEFOLDS[self.name]
            if ctor == "product":
                return chern_of_projective_space_product(arg)
            return chern_of_hypersurface(arg)
        if self.kind == "explicit":
            return self.chern
        if self.kind == "product":
            return chern_of_projective_space_product(self.dims)
        if self.kind == "hypersurface":
            return chern_of_hypersurface(self.degree)
        if self.kind == "disjoint_union":
            return reduce(chern_disjoint_union, (p.resolve() for p in self.parts), ChernNumbers(0, 0, 0))
        if self.kind == "scaled":
            return chern_scale(self.factor, self.base.resolve())
        raise ValueError(f"unknown spec kind {self.kind!r}")

    def is_integral(self) -> bool:
        return self.resolve().is_integral()

    def label(self) -> str:
        if self.kind == "builtin":
            return self.name
        if self.kind == "explicit":
            c = self.chern
            return f"X({c.c111},{c.c12},{c.c3})"
        if self.kind == "product":
            return "x".join(f"P{d}" for d in self.dims)
        if self.kind == "hypersurface":
            return f"X{self.degree}<P4"
        if self.kind == "disjoint_union":
            if not self.parts:
                return "empty"
            return " + ".join(p.label() for p in self.parts)
        if self.kind == "scaled":
            return f"({self.factor})*{self.base.label()}"
        return self.kind

    def to_document(self):
        """The JSON-document form of this spec (see the CLI schema)."""
        if self.kind == "builtin":
            return {"builtin": self.name}
        if self.kind == "explicit":
            c = self.chern
            if not c.is_integral():
                raise ValueError(
                    "the document schema only admits integer Chern triples; "
                    "express rational combinations with scaled"
                )
            return {"chern": {"c111": c.c111, "c12": c.c12, "c3": c.c3}}
        if self.kind == "product":
            return {"product": list(self.dims)}
        if self.kind == "hypersurface":
            return {"hypersurface": {"degree": self.degree}}
        if self.kind == "disjoint_union":
            return {"disjoint_union": [p.to_document() for p in self.parts]}
        if self.kind == "scaled":
            f = self.factor
            return {"scaled": {"factor": str(f) if f.denominator != 1 else int(f), "of": self.base.to_document()}}
        raise ValueError(f"unknown spec kind {self.kind!r}")


def catalog() -> tuple[ThreefoldSpec, ...]:
    """The four builtin threefolds, in a fixed order."""
    return tuple(ThreefoldSpec.builtin(name) for name in BUILTIN_THREEFOLDS)
