"""The set-partition lattice and its diagonal geometry.

Partitions of {1..n} ordered by refinement, with meet/join, block
multiplicities of labeled point configurations, discrepancy-set
predicates, the epsilon-neighborhood classifier for strict diagonals,
and the discrepancy recursion (lattice Moebius inversion) over any
abelian-group values.

All geometry is done on point configurations with exact rational
coordinates; distances are kept in squared form so no square roots ever
appear.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Iterable, Mapping, Union

Rational = Union[int, Fraction]

__all__ = [
    "EpsilonSchedule",
    "InadmissibleScheduleError",
    "PointConfig",
    "SetPartition",
    "alpha_factorial",
    "classify_q_set",
    "delta_transform",
    "fiber_multiplicity_sum",
    "in_discrepancy_set",
    "multiplicative_delta_property",
    "multiplicity",
    "partitions",
    "strict_diagonal_distance_sq",
]


class InadmissibleScheduleError(ValueError):
    """The epsilon schedule is too loose for the configuration: the deepest
    diagonal neighborhood containing the point is not unique."""


def _exact(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point coordinates are not allowed")
    return Fraction(value)


# ---------------------------------------------------------------------------
# set partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SetPartition:
    """An indexed partition of the ground set {1..n}.

    Blocks are canonicalized by sorting on their minimum, so equality is
    equality of the underlying equivalence relation.
    """

    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(frozenset(int(e) for e in b) for b in self.blocks)
        if any(not b for b in blocks):
            raise ValueError("blocks must be non-empty")
        seen: set[int] = set()
        for b in blocks:
            if seen & b:
                raise ValueError("blocks must be pairwise disjoint")
            seen |= b
        if seen != set(range(1, self.n + 1)):
            raise ValueError(f"blocks must cover exactly {{1..{self.n}}}")
        object.__setattr__(self, "blocks", tuple(sorted(blocks, key=min)))

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        """The bottom element: every element alone."""
        return cls(n, tuple(frozenset([i]) for i in range(1, n + 1)))

    @classmethod
    def whole(cls, n: int) -> "SetPartition":
        """The top element: one block."""
        return cls(n, (frozenset(range(1, n + 1)),))

    @property
    def rank(self) -> int:
        return self.n - len(self.blocks)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def labels(self) -> tuple[int, ...]:
        """labels()[i-1] is the index of the block containing element i."""
        out = [0] * self.n
        for idx, b in enumerate(self.blocks):
            for e in b:
                out[e - 1] = idx
        return tuple(out)

    def _same_ground_set(self, other: "SetPartition") -> None:
        if not isinstance(other, SetPartition):
            raise TypeError("expected a SetPartition")
        if self.n != other.n:
            raise ValueError(f"ground sets differ: {self.n} vs {other.n}")

    def __le__(self, other: "SetPartition") -> bool:
        """self <= other iff self refines other."""
        self._same_ground_set(other)
        coarse = other.labels()
        for b in self.blocks:
            it = iter(b)
            first = coarse[next(it) - 1]
            if any(coarse[e - 1] != first for e in it):
                return False
        return True

    def __lt__(self, other: "SetPartition") -> bool:
        return self != other and self <= other

    def __ge__(self, other: "SetPartition") -> bool:
        self._same_ground_set(other)
        return other <= self

    def __gt__(self, other: "SetPartition") -> bool:
        return self != other and self >= other

    def meet(self, other: "SetPartition") -> "SetPartition":
        """Common refinement: blockwise intersections, empties dropped."""
        self._same_ground_set(other)
        blocks = []
        for a in self.blocks:
            for b in other.blocks:
                common = a & b
                if common:
                    blocks.append(common)
        return SetPartition(self.n, tuple(blocks))

    def join(self, other: "SetPartition") -> "SetPartition":
        """Transitive closure of the union of the two equivalence relations."""
        self._same_ground_set(other)
        parent = list(range(self.n + 1))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for part in (self, other):
            for b in part.blocks:
                it = iter(sorted(b))
                root = find(next(it))
                for e in it:
                    parent[find(e)] = root
        groups: dict[int, set[int]] = {}
        for e in range(1, self.n + 1):
            groups.setdefault(find(e), set()).add(e)
        return SetPartition(self.n, tuple(frozenset(g) for g in groups.values()))

    def __repr__(self) -> str:
        body = "|".join("".join(str(e) for e in sorted(b)) for b in self.blocks)
        return f"SetPartition({self.n}, {body})"


def _sort_key(p: SetPartition) -> tuple:
    return tuple(tuple(sorted(b)) for b in p.blocks)


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[SetPartition, ...]:
    """All partitions of {1..n}, enumerated by restricted-growth strings."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return (SetPartition(0, ()),)
    out: list[SetPartition] = []
    rgs = [0] * n

    def rec(i: int, kmax: int):
        if i == n:
            blocks: dict[int, set[int]] = {}
            for e, label in enumerate(rgs, start=1):
                blocks.setdefault(label, set()).add(e)
            out.append(SetPartition(n, tuple(frozenset(b) for b in blocks.values())))
            return
        for v in range(kmax + 1):
            rgs[i] = v
            rec(i + 1, max(kmax, v + 1))

    rec(0, 0)
    return tuple(out)


def alpha_factorial(p: SetPartition) -> int:
    """Product of the factorials of the block sizes."""
    out = 1
    for b in p.blocks:
        for k in range(2, len(b) + 1):
            out *= k
    return out


# ---------------------------------------------------------------------------
# labeled point configurations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PointConfig:
    """A labeled tuple of points in rational 3-space; coordinates exact."""

    points: tuple[tuple[Fraction, Fraction, Fraction], ...]

    def __post_init__(self):
        pts = []
        for p in self.points:
            p = tuple(_exact(v) for v in p)
            if len(p) != 3:
                raise ValueError("points must have exactly three coordinates")
            pts.append(p)
        object.__setattr__(self, "points", tuple(pts))

    @property
    def n(self) -> int:
        return len(self.points)

    def point(self, element: int) -> tuple[Fraction, Fraction, Fraction]:
        """Coordinate of the element labeled 1..n."""
        return self.points[element - 1]

    def min_gap_sq(self) -> Fraction | None:
        """Smallest squared distance between distinct points; None if all coincide."""
        best = None
        for i in range(self.n):
            for j in range(i + 1, self.n):
                d = _dist_sq(self.points[i], self.points[j])
                if d != 0 and (best is None or d < best):
                    best = d
        return best


def _dist_sq(p, q) -> Fraction:
    return sum((a - b) ** 2 for a, b in zip(p, q))


def _check_config(p: SetPartition, x: PointConfig) -> None:
    if p.n != x.n:
        raise ValueError(f"ground set size {p.n} does not match configuration size {x.n}")


# ---------------------------------------------------------------------------
# multiplicities of the blockwise symmetrization map
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _block_stabilizer_size(values: tuple) -> int:
    """Permutations of the positions of `values` that fix the tuple, counted
    by exhaustive enumeration."""
    k = len(values)
    count = 0
    for sigma in permutations(range(k)):
        if all(values[sigma[i]] == values[i] for i in range(k)):
            count += 1
    return count


@lru_cache(maxsize=None)
def _block_arrangements(values: tuple) -> tuple[tuple, ...]:
    """Distinct reorderings of a value tuple, deduplicated as tuples."""
    return tuple(sorted(set(permutations(values))))


def multiplicity(p: SetPartition, x: PointConfig) -> int:
    """Number of permutations of {1..n} fixing x and preserving every
    indexed block setwise.

    Such permutations factor over the blocks, so the count is the product
    of per-block stabilizer sizes; each factor is still obtained by
    exhaustive enumeration of the block's permutations.
    """
    _check_config(p, x)
    out = 1
    for b in p.blocks:
        values = tuple(x.point(e) for e in sorted(b))
        out *= _block_stabilizer_size(values)
    return out


def fiber_multiplicity_sum(p: SetPartition, x: PointConfig) -> int:
    """Sum of multiplicities over the fiber of the blockwise symmetrization
    map through x.

    The fiber consists of every configuration obtained by permuting
    coordinates within blocks, deduplicated as tuples.  The sum always
    equals alpha_factorial(p); computing it the long way is the point.
    """
    _check_config(p, x)
    block_elements = [tuple(sorted(b)) for b in p.blocks]
    choices = [
        _block_arrangements(tuple(x.point(e) for e in elems)) for elems in block_elements
    ]
    total = 0
    for combo in product(*choices):
        coords = list(x.points)
        for elems, arrangement in zip(block_elements, combo):
            for e, value in zip(elems, arrangement):
                coords[e - 1] = value
        total += multiplicity(p, PointConfig(tuple(coords)))
    return total


# ---------------------------------------------------------------------------
# discrepancy sets and strict diagonals
# ---------------------------------------------------------------------------


def _coincidence_against_refinement(coarser: SetPartition, finer: SetPartition, x: PointConfig) -> bool:
    """True iff some pair related by `coarser` but not by `finer` coincides in x."""
    fine = finer.labels()
    for b in coarser.blocks:
        elems = sorted(b)
        for i, a in enumerate(elems):
            for c in elems[i + 1:]:
                if fine[a - 1] != fine[c - 1] and x.point(a) == x.point(c):
                    return True
    return False


def in_discrepancy_set(a: SetPartition, b: SetPartition, x: PointConfig) -> bool:
    """Membership in the discrepancy set of the pair (a, b).

    Coincidence of a pair of labels that one partition relates and the
    other does not; incomparable pairs route through the meet, and the
    comparable case reduces to the direct definition.
    """
    a._same_ground_set(b)
    _check_config(a, x)
    if a == b:
        return False
    common = a.meet(b)
    return (
        _coincidence_against_refinement(a, common, x)
        or _coincidence_against_refinement(b, common, x)
    )


def strict_diagonal_distance_sq(p: SetPartition, x: PointConfig) -> Fraction:
    """Squared Euclidean distance from x to the strict diagonal of p.

    The orthogonal projection replaces each block's points by their mean,
    so the squared distance is the sum of squared deviations from the
    blockwise means.  Exact, and square-root free.
    """
    _check_config(p, x)
    total = Fraction(0)
    for b in p.blocks:
        elems = sorted(b)
        size = len(elems)
        if size == 1:
            continue
        mean = tuple(
            sum((x.point(e)[axis] for e in elems), Fraction(0)) / size for axis in range(3)
        )
        for e in elems:
            total += _dist_sq(x.point(e), mean)
    return total


# ---------------------------------------------------------------------------
# epsilon schedules and Q-set classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EpsilonSchedule:
    """Geometrically decreasing diagonal-neighborhood radii.

    Stores squared values only.  eps_sq(p) = c^2 * ratio^(2*(rank(p) - n)),
    so every radius is strictly below c and consecutive ranks are separated
    by the factor `ratio`.  The classifier is guaranteed a unique answer
    only when c is small against the configuration's point gaps; the
    default constructor ties c to 1/8 of the minimum gap.
    """

    n: int
    c_sq: Fraction
    ratio_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c_sq", _exact(self.c_sq))
        object.__setattr__(self, "ratio_sq", _exact(self.ratio_sq))
        if self.c_sq <= 0:
            raise ValueError("the bound c must be positive")
        if self.ratio_sq <= 1:
            raise ValueError("the ratio R must exceed 1")

    @classmethod
    def default_for(cls, x: PointConfig, ratio: Rational = 16) -> "EpsilonSchedule":
        """Schedule with c = (minimum pairwise gap)/8 and the given ratio."""
        gap_sq = x.min_gap_sq()
        c_sq = Fraction(1) if gap_sq is None else gap_sq / 64
        return cls(n=x.n, c_sq=c_sq, ratio_sq=_exact(ratio) ** 2)

    def eps_sq(self, p: SetPartition) -> Fraction:
        if p.n != self.n:
            raise ValueError("schedule and partition ground sets differ")
        return self.c_sq * self.ratio_sq ** (p.rank - self.n)

    def check_admissible(self) -> None:
        """Verify the schedule invariants exhaustively (small n only):
        every radius below c, and the ratio met on every strict pair."""
        for p in partitions(self.n):
            if not 0 < self.eps_sq(p) < self.c_sq:
                raise InadmissibleScheduleError(f"radius at {p!r} is not inside (0, c)")
        for a in partitions(self.n):
            for b in partitions(self.n):
                if b < a and self.eps_sq(a) < self.ratio_sq * self.eps_sq(b):
                    raise InadmissibleScheduleError(
                        f"ratio violated on {b!r} < {a!r}"
                    )


def classify_q_set(alpha: SetPartition, x: PointConfig, eps: EpsilonSchedule) -> SetPartition:
    """The unique beta <= alpha whose Q-set contains x.

    Candidates are the gamma <= alpha whose diagonal neighborhood contains
    x (the bottom partition always qualifies); the answer is the unique
    maximal candidate.  Several maximal candidates mean the schedule is
    too loose for this configuration, which is an error, not a choice.
    """
    _check_config(alpha, x)
    if eps.n != alpha.n:
        raise ValueError("schedule and partition ground sets differ")
    candidates = [
        gamma
        for gamma in partitions(alpha.n)
        if gamma <= alpha and strict_diagonal_distance_sq(gamma, x) < eps.eps_sq(gamma)
    ]
    maximal = [
        g for g in candidates if not any(g < h for h in candidates)
    ]
    if len(maximal) != 1:
        found = ", ".join(repr(g) for g in sorted(maximal, key=_sort_key))
        raise InadmissibleScheduleError(
            f"inadmissible schedule for this configuration: maximal candidates {found}"
        )
    return maximal[0]


# ---------------------------------------------------------------------------
# the discrepancy recursion
# ---------------------------------------------------------------------------


def delta_transform(alpha: SetPartition, values: Union[Mapping, Callable]) -> dict[SetPartition, object]:
    """Solve delta_beta = F(beta) - sum_{gamma < beta} delta_gamma on the
    interval below alpha.

    F may be a mapping or a callable defined on every beta <= alpha; the
    values may live in any abelian group.  By construction the inverse
    relation F(beta) = sum_{gamma <= beta} delta_gamma holds exactly.
    """
    if isinstance(values, Mapping):
        def fetch(p):
            try:
                return values[p]
            except KeyError:
                raise ValueError(f"F is not defined on {p!r}") from None
    else:
        fetch = values
    interval = sorted(
        (b for b in partitions(alpha.n) if b <= alpha),
        key=lambda p: (p.rank, _sort_key(p)),
    )
    delta: dict[SetPartition, object] = {}
    for beta in interval:
        acc = fetch(beta)
        for gamma in interval:
            if gamma.rank >= beta.rank:
                break
            if gamma < beta:
                acc = acc - delta[gamma]
        delta[beta] = acc
    return delta


def _ring_product(factors) -> object:
    it = iter(factors)
    out = next(it)
    for f in it:
        out = out * f
    return out


def multiplicative_delta_property(t: Mapping[int, object], n: int) -> bool:
    """Check that block-multiplicative F forces block-multiplicative delta.

    Given per-size values t, set F(beta) = prod_i t[|beta_i|] on every
    lattice below the top; the discrepancy of alpha must factor as the
    product of the top discrepancies of its blocks, for every alpha.
    """
    if n < 1:
        raise ValueError("n must be at least 1")

    def block_product(p: SetPartition):
        return _ring_product(t[len(b)] for b in p.blocks)

    top_delta = {
        k: delta_transform(SetPartition.whole(k), block_product)[SetPartition.whole(k)]
        for k in range(1, n + 1)
    }
    deltas = delta_transform(SetPartition.whole(n), block_product)
    for alpha in partitions(n):
        expected = _ring_product(top_delta[len(b)] for b in alpha.blocks)
        if deltas[alpha] != expected:
            return False
    return True
