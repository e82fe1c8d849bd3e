"""Rational cobordism decomposition over the three generator threefolds.

Degree-six complex cobordism is spanned rationally by P^3, P^2xP^1 and
(P^1)^3; a threefold's class is recovered from its Chern numbers by an
exact 3x3 linear solve.  The module also checks the exponent identity
that the decomposition must satisfy for the twisted tangent class.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .chern import ChernNumbers, chern_of_projective_space_product, twist_exponent

__all__ = [
    "GENERATOR_DIMS",
    "CobordismDecomposition",
    "ExponentIdentityReport",
    "decompose",
    "generator_chern_numbers",
    "generator_determinant",
    "generator_matrix",
    "verify_exponent_identity",
]

# Y1 = P^3, Y2 = P^2 x P^1, Y3 = (P^1)^3
GENERATOR_DIMS: tuple[tuple[int, ...], ...] = ((3,), (2, 1), (1, 1, 1))


@lru_cache(maxsize=1)
def generator_chern_numbers() -> tuple[ChernNumbers, ...]:
    return tuple(chern_of_projective_space_product(d) for d in GENERATOR_DIMS)


def generator_matrix() -> tuple[tuple[int, int, int], ...]:
    """Rows are (c1^3, c1c2, c3); columns are the generators Y1, Y2, Y3."""
    cols = generator_chern_numbers()
    return (
        tuple(c.c111 for c in cols),
        tuple(c.c12 for c in cols),
        tuple(c.c3 for c in cols),
    )


def _eliminate(matrix, rhs) -> list[Fraction]:
    """Solve a square exact system by Gaussian elimination (first nonzero pivot)."""
    n = len(rhs)
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("generator matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def generator_determinant() -> int:
    """Determinant of the generator matrix, by cofactor expansion."""
    (a, b, c), (d, e, f), (g, h, i) = generator_matrix()
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


@dataclass(frozen=True)
class CobordismDecomposition:
    """Rational coefficients (r1, r2, r3) over the generators, with m the
    least common denominator, so that m*X ~ m1*Y1 + m2*Y2 + m3*Y3."""

    r1: Fraction
    r2: Fraction
    r3: Fraction
    m: int

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.r1, self.r2, self.r3)

    def integer_multiples(self) -> tuple[int, int, int]:
        """(m1, m2, m3) = m * (r1, r2, r3), always integers."""
        out = []
        for r in self.coefficients:
            v = Fraction(r) * self.m
            if v.denominator != 1:
                raise ArithmeticError("m is not a common denominator")
            out.append(int(v))
        return tuple(out)

    def reconstruct(self) -> ChernNumbers:
        """Chern numbers of r1*Y1 + r2*Y2 + r3*Y3."""
        gens = generator_chern_numbers()
        fields = []
        for attr in ("c111", "c12", "c3"):
            fields.append(sum(Fraction(r) * getattr(g, attr) for r, g in zip(self.coefficients, gens)))
        return ChernNumbers(*fields)


def decompose(c: ChernNumbers) -> CobordismDecomposition:
    """Express a Chern triple over the generators, exactly."""
    solution = _eliminate(generator_matrix(), (c.c111, c.c12, c.c3))
    m = lcm(*(r.denominator for r in solution))
    return CobordismDecomposition(*solution, m=m)


@dataclass(frozen=True)
class ExponentIdentityReport:
    """Both sides of m*K(X) = sum_i m_i*K(Y_i) for the twist exponent K."""

    decomposition: CobordismDecomposition
    lhs: Fraction
    rhs: Fraction
    ok: bool


def verify_exponent_identity(c: ChernNumbers) -> ExponentIdentityReport:
    """Check the exponent identity for the given Chern triple.

    A failure would be an implementation bug: the identity is forced by
    linearity of the twist exponent through the generator basis.
    """
    dec = decompose(c)
    m1, m2, m3 = dec.integer_multiples()
    gens = generator_chern_numbers()
    lhs = dec.m * Fraction(twist_exponent(c))
    rhs = sum(mi * Fraction(twist_exponent(g)) for mi, g in zip((m1, m2, m3), gens))
    return ExponentIdentityReport(dec, lhs, rhs, lhs == rhs)
