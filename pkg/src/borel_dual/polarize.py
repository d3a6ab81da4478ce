"""Squarefree grid ideals and the two polarizations.

The grid ring has variables x_{i,j} for 1 <= i <= n (rows) and
1 <= j <= d (columns).  The column-placing polarization of a monomial
x_{a1}...x_{ae} (indices nondecreasing) puts its k-th variable in
column k: prod_k x_{a_k, k}.  The row-filling (standard) polarization
of x^a uses cells (i, 1..a_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Monomial, MonomialIdeal, contains, hilbert_series_quotient, is_strongly_stable, minimalize


@dataclass(frozen=True)
class GridMonomial:
    """A squarefree monomial in the grid ring, as a set of (row, col) cells."""

    rows: int
    cols: int
    cells: frozenset[tuple[int, int]]

    def __post_init__(self):
        for (i, j) in self.cells:
            if not (1 <= i <= self.rows and 1 <= j <= self.cols):
                raise ValueError(f"cell ({i},{j}) outside {self.rows}x{self.cols} grid")

    @property
    def degree(self) -> int:
        return len(self.cells)

    @property
    def is_one(self) -> bool:
        return not self.cells

    def divides(self, other: GridMonomial) -> bool:
        return self.cells <= other.cells

    def sort_key(self):
        return (self.degree, tuple(sorted(self.cells)))

    def to_str(self, letter: str = "x") -> str:
        if not self.cells:
            return "1"
        return "*".join(f"{letter}{i}_{j}" for i, j in sorted(self.cells))

    def __str__(self):
        return self.to_str()


@dataclass(frozen=True)
class GridIdeal:
    rows: int
    cols: int
    gens: tuple[GridMonomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if (g.rows, g.cols) != (self.rows, self.cols):
                raise ValueError("generator grid shape mismatch")
        for a, b in combinations(self.gens, 2):
            if a.divides(b) or b.divides(a):
                raise ValueError("generators are not a divisibility antichain")
        object.__setattr__(self, "gens", tuple(sorted(self.gens, key=GridMonomial.sort_key)))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    def to_str(self, letter: str = "x") -> str:
        if self.is_zero:
            return "0"
        return ", ".join(g.to_str(letter) for g in self.gens)

    def __str__(self):
        return self.to_str()


def grid_minimalize(gens, rows: int, cols: int) -> GridIdeal:
    gens = set(gens)
    minimal = [g for g in gens if not any(h != g and h.divides(g) for h in gens)]
    return GridIdeal(rows, cols, tuple(minimal))


def default_cols(I: MonomialIdeal, d: int | None) -> int:
    if d is None:
        d = max(I.max_degree, 1)
    return d


def bpol_monomial(m: Monomial, d: int) -> GridMonomial:
    """Column-placing polarization: the k-th letter of m goes to column k."""
    if m.degree > d:
        raise ValueError(f"deg({m}) = {m.degree} exceeds column count {d}")
    cells = frozenset((a, k + 1) for k, a in enumerate(m.alpha_word()))
    return GridMonomial(m.n, d, cells)


def bpol_ideal(I: MonomialIdeal, d: int | None = None) -> GridIdeal:
    d = default_cols(I, d)
    if I.max_degree > d:
        raise ValueError(f"generator degree {I.max_degree} exceeds column count {d}")
    return GridIdeal(I.n, d, tuple(bpol_monomial(m, d) for m in I.gens))


def stdpol_monomial(m: Monomial, d: int) -> GridMonomial:
    """Standard polarization: x_i^a consumes cells (i, 1..a)."""
    if max(m.exponents, default=0) > d:
        raise ValueError(f"exponent of {m} exceeds column count {d}")
    cells = frozenset((i + 1, j) for i, e in enumerate(m.exponents) for j in range(1, e + 1))
    return GridMonomial(m.n, d, cells)


def stdpol_ideal(I: MonomialIdeal, d: int | None = None) -> GridIdeal:
    if d is None:
        d = max((max(m.exponents, default=0) for m in I.gens), default=1)
        d = max(d, 1)
    return GridIdeal(I.n, d, tuple(stdpol_monomial(m, d) for m in I.gens))


def depolarize(J: GridIdeal) -> MonomialIdeal:
    """Image under the collapse x_{i,j} -> x_i, minimalized."""
    images = []
    for g in J.gens:
        e = [0] * J.rows
        for (i, _j) in g.cells:
            e[i - 1] += 1
        images.append(Monomial(tuple(e)))
    return minimalize(images, J.rows)


def transpose(J: GridIdeal) -> GridIdeal:
    """Swap rows and columns: cell (i, j) -> (j, i).  An involution."""
    gens = tuple(
        GridMonomial(J.cols, J.rows, frozenset((j, i) for i, j in g.cells)) for g in J.gens
    )
    return GridIdeal(J.cols, J.rows, gens)


def grid_contains(J: GridIdeal, m: GridMonomial) -> bool:
    return any(g.divides(m) for g in J.gens)


def bpol_membership(I: MonomialIdeal, m: Monomial, d: int | None = None) -> bool:
    """Membership of m in I tested entirely on the polarized side."""
    d = default_cols(I, d)
    if not is_strongly_stable(I):
        raise ValueError("ideal is not strongly stable")
    if m.degree > d:
        raise ValueError("monomial degree exceeds column count")
    return grid_contains(bpol_ideal(I, d), bpol_monomial(m, d))


def flatten_grid_ideal(J: GridIdeal) -> MonomialIdeal:
    """Re-read a grid ideal as a squarefree ideal in rows*cols variables.

    Cell (i, j) becomes variable (i-1)*cols + j.
    """
    nvars = J.rows * J.cols
    gens = []
    for g in J.gens:
        e = [0] * nvars
        for (i, j) in g.cells:
            e[(i - 1) * J.cols + (j - 1)] = 1
        gens.append(Monomial(tuple(e)))
    return MonomialIdeal(nvars, tuple(gens))


def unflatten_support(support, cols: int) -> list[tuple[int, int]]:
    """Inverse of the flattening on variable supports: var -> (row, col)."""
    return [((v - 1) // cols + 1, (v - 1) % cols + 1) for v in support]


def grid_hilbert_series_quotient(J: GridIdeal):
    return hilbert_series_quotient(flatten_grid_ideal(J))


def verify_polarization(I: MonomialIdeal, J: GridIdeal) -> bool:
    """Polarization check: collapse recovers I, and the Hilbert series drop
    by exactly (1-lambda)^{n(d-1)}, which for linear forms on a graded
    quotient is equivalent to regularity of the collapse sequence."""
    if depolarize(J) != I:
        return False
    k = J.rows * (J.cols - 1)
    lhs = grid_hilbert_series_quotient(J).times_one_minus_lambda_power(k)
    return lhs == hilbert_series_quotient(I)
