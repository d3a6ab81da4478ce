"""Betti tables, local cohomology Hilbert series, and arithmetic degree.

Betti numbers are always those of the *ideal*: beta_{0,j} counts the
degree-j minimal generators.  The closed-form table for strongly stable
ideals is cross-checked by a brute-force oracle that computes reduced
simplicial homology of Koszul complexes over the rationals with exact
integer arithmetic.

Local cohomology series are stored in the lambda^{-1} convention: the
entry at cohomological index i is H(H_m^i(S/I), lambda^{-1}) as an exact
rational function.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from .core import (
    DegenerateIdealError,
    Monomial,
    MonomialIdeal,
    NotStronglyStableError,
    RationalSeries,
    height,
    hilbert_series_quotient,
    is_cohen_macaulay,
    is_strongly_stable,
)
from .decompose import bpol_decomposition, decompose_strongly_stable, e_of, t_of, w_of
from .duality import star_dual
from .polarize import GridIdeal, GridMonomial, bpol_monomial, default_cols, flatten_grid_ideal

ORACLE_GENERATOR_BOUND = 12


class OracleSizeError(ValueError):
    """Input too large for the brute-force homology oracle."""


class NotCohenMacaulayError(ValueError):
    """Raised when an operation needs a Cohen-Macaulay quotient."""


@dataclass(frozen=True)
class BettiTable:
    """Finitely supported map (homological index, internal degree) -> multiplicity."""

    entries: tuple[tuple[tuple[int, int], int], ...]

    @staticmethod
    def make(data: dict[tuple[int, int], int]) -> BettiTable:
        return BettiTable(tuple(sorted((k, v) for k, v in data.items() if v != 0)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def get(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    def __str__(self):
        return ", ".join(f"b[{i},{j}]={v}" for (i, j), v in self.entries)


@dataclass(frozen=True)
class LocalCohSeries:
    """Map from cohomological index i to H(H_m^i(S/I), lambda^{-1})."""

    entries: tuple[tuple[int, RationalSeries], ...]

    @staticmethod
    def make(data: dict[int, RationalSeries]) -> LocalCohSeries:
        return LocalCohSeries(tuple(sorted((i, s) for i, s in data.items() if not s.is_zero)))

    def as_dict(self) -> dict[int, RationalSeries]:
        return dict(self.entries)

    def __str__(self):
        return "; ".join(f"i={i}: {s}" for i, s in self.entries)


def ek_betti(I: MonomialIdeal) -> BettiTable:
    """Closed-form Betti table of a strongly stable ideal: a generator m of
    degree j contributes binom(nu(m)-1, i) to beta_{i, i+j}."""
    if not is_strongly_stable(I):
        raise NotStronglyStableError(str(I))
    table: dict[tuple[int, int], int] = {}
    for m in I.gens:
        top = max(m.nu - 1, 0)
        for i in range(top + 1):
            key = (i, i + m.degree)
            table[key] = table.get(key, 0) + comb(top, i)
    return BettiTable.make(table)


def betti_oracle(J) -> BettiTable:
    """Brute-force Betti table of a plain or grid monomial ideal.

    For each lcm b of a generator subset, beta_{i, deg b} picks up
    dim H~_{i-1} of the complex of squarefree vectors tau <= b with
    x^(b - tau) in the ideal.  Desk-scale only: at most
    ORACLE_GENERATOR_BOUND generators.
    """
    if isinstance(J, GridIdeal):
        J = flatten_grid_ideal(J)
    if len(J.gens) > ORACLE_GENERATOR_BOUND:
        raise OracleSizeError(f"{len(J.gens)} generators exceed the oracle bound")
    lcms: set[Monomial] = set()
    for g in J.gens:
        lcms |= {g.lcm(h) for h in lcms}
        lcms.add(g)
    table: dict[tuple[int, int], int] = {}
    for b in lcms:
        for k, dim in _koszul_homology(J, b).items():
            key = (k + 1, b.degree)
            table[key] = table.get(key, 0) + dim
    return BettiTable.make(table)


def _koszul_homology(I: MonomialIdeal, b: Monomial) -> dict[int, int]:
    """Reduced homology dimensions (by simplex dimension) of the complex
    {tau : x^(b - tau) in I} on the support of b."""
    support = list(b.support)
    vertices = []
    for v in support:
        if any(g.divides(b.div_var(v)) for g in I.gens):
            vertices.append(v)
    faces = _collect_faces(I, b, vertices)
    if not faces:
        return {}
    if len(faces) == 1 << len(vertices) and vertices:
        return {}  # full simplex, acyclic
    for v in vertices:  # cones are acyclic
        if all((tau | {v}) in faces for tau in faces):
            return {}
    return _reduced_homology(faces)


def _collect_faces(I: MonomialIdeal, b: Monomial, vertices) -> set[frozenset[int]]:
    faces: set[frozenset[int]] = set()
    if not any(g.divides(b) for g in I.gens):
        return faces
    faces.add(frozenset())
    frontier = [frozenset()]
    while frontier:
        new = []
        for tau in frontier:
            for v in vertices:
                if v in tau:
                    continue
                cand = tau | {v}
                if cand in faces:
                    continue
                rest = b
                for u in cand:
                    rest = rest.div_var(u)
                if any(g.divides(rest) for g in I.gens):
                    faces.add(cand)
                    new.append(cand)
        frontier = new
    return faces


def _reduced_homology(faces: set[frozenset[int]]) -> dict[int, int]:
    """Reduced homology over Q of a simplicial complex given as its full
    face set (including the empty face), via exact boundary ranks."""
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for tau in faces:
        by_dim.setdefault(len(tau) - 1, []).append(tuple(sorted(tau)))
    for fs in by_dim.values():
        fs.sort()
    top = max(by_dim)
    ranks: dict[int, int] = {}  # rank of boundary from dim k to k-1
    for k in range(0, top + 1):
        ranks[k] = _boundary_rank(by_dim.get(k, []), by_dim.get(k - 1, []))
    out = {}
    for k in range(-1, top + 1):
        dim_ck = len(by_dim.get(k, []))
        betti = dim_ck - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if betti:
            out[k] = betti
    return out


def _boundary_rank(faces_k, faces_km1) -> int:
    if not faces_k or not faces_km1:
        return 0
    index = {f: i for i, f in enumerate(faces_km1)}
    rows = []
    for f in faces_k:
        row = [0] * len(faces_km1)
        for drop in range(len(f)):
            sub = f[:drop] + f[drop + 1:]
            row[index[sub]] = (-1) ** drop
        rows.append(row)
    return _rank_exact(rows)


def _rank_exact(rows: list[list[int]]) -> int:
    """Rank of an integer matrix over Q, by fraction-free elimination."""
    rows = [r[:] for r in rows]
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            q = rows[r][col]
            if q:
                rows[r] = [p * a - q * b for a, b in zip(rows[r], rows[rank])]
                g = 0
                for a in rows[r]:
                    g = gcd(g, a)
                if g > 1:
                    rows[r] = [a // g for a in rows[r]]
        rank += 1
        col += 1
    return rank


def lc_series_via_dual(I: MonomialIdeal, d: int | None = None) -> LocalCohSeries:
    """Local cohomology series through the Betti table of the dual ideal:
    entry i sums beta_{i-j, n-j} of the dual times lambda^j/(1-lambda)^j
    over all integers j (negative included)."""
    d = default_cols(I, d)
    if I.is_zero or I.is_unit:
        raise DegenerateIdealError("zero or unit ideal")
    n = I.n
    dual_table = ek_betti(star_dual(I, d))
    acc: dict[int, RationalSeries] = {}
    for (p, q), v in dual_table.entries:
        j = n - q
        i = p + j
        term = RationalSeries.geometric(j).scale(v)
        acc[i] = acc.get(i, RationalSeries.zero()) + term
    return LocalCohSeries.make(acc)


def lc_series_via_components(E, n: int) -> LocalCohSeries:
    """Local cohomology series straight from the irreducible decomposition:
    a component a with t(a) = n - i contributes
    (lambda^w + ... + lambda^(w + e(a) - 1)) / (1-lambda)^i."""
    acc: dict[int, dict[int, int]] = {}
    for a in E:
        a = tuple(a)
        i = n - t_of(a)
        num = acc.setdefault(i, {})
        w = w_of(a, n)
        for k in range(e_of(a)):
            num[w + k] = num.get(w + k, 0) + 1
    return LocalCohSeries.make({i: RationalSeries.make(num, i) for i, num in acc.items()})


def lc_series_via_gamma(grid_components, n: int) -> LocalCohSeries:
    """Local cohomology series from the grid components of the polarization:
    a component of length t = n - i with last column j contributes
    lambda^(i - j + 1) / (1-lambda)^i."""
    acc: dict[int, dict[int, int]] = {}
    for b in grid_components:
        b = tuple(b)
        i = n - len(b)
        num = acc.setdefault(i, {})
        e = i - b[-1] + 1
        num[e] = num.get(e, 0) + 1
    return LocalCohSeries.make({i: RationalSeries.make(num, i) for i, num in acc.items()})


@dataclass(frozen=True)
class ArithmeticDegree:
    strata: tuple[tuple[int, int], ...]  # (dimension i, adeg_i)
    total: int
    deg: int

    def as_dict(self) -> dict[int, int]:
        return dict(self.strata)


def adeg(E, n: int) -> ArithmeticDegree:
    """Arithmetic degree strata from the decomposition: adeg_i counts
    components of dimension i with multiplicity e(a); deg keeps only the
    minimal-height (top-dimensional) stratum."""
    E = [tuple(a) for a in E]
    if not E:
        raise ValueError("empty decomposition")
    strata: dict[int, int] = {}
    for a in E:
        i = n - t_of(a)
        strata[i] = strata.get(i, 0) + e_of(a)
    ht = min(t_of(a) for a in E)
    deg = sum(e_of(a) for a in E if t_of(a) == ht)
    return ArithmeticDegree(tuple(sorted(strata.items())), sum(strata.values()), deg)


def adeg_top_from_generators(I: MonomialIdeal) -> int:
    """Independent shortcut for the top nu-stratum: sum of the nu(I)-th
    exponents over the generators reaching nu(I).  Equals adeg_{n - nu(I)}."""
    l = I.nu()
    return sum(g.exponents[l - 1] for g in I.gens if g.nu == l)


def has_linear_resolution(I: MonomialIdeal) -> bool:
    """All generators in one degree j0 and no Betti entry off the j0 strand."""
    if I.is_zero or I.is_unit:
        raise DegenerateIdealError("zero or unit ideal")
    degrees = {m.degree for m in I.gens}
    if len(degrees) != 1:
        return False
    j0 = degrees.pop()
    return all(j - i == j0 for (i, j), _ in ek_betti(I).entries)


def is_cm_via_dual(I: MonomialIdeal, d: int | None = None) -> bool:
    """Cohen-Macaulayness of S/I read off the dual: equivalent to the dual
    ideal having a linear resolution."""
    return has_linear_resolution(star_dual(I, d))


def canonical_generators(I: MonomialIdeal, d: int | None = None) -> set[GridMonomial]:
    """Generators of the canonical module of the polarized quotient, for a
    Cohen-Macaulay strongly stable ideal: for each generator m reaching
    nu(m) = ht(I), the complement in the full grid of
    (prod_{i<l} x_{i, b_i + 1}) * bpol(m), with b the partial degree sums."""
    d = default_cols(I, d)
    if not is_strongly_stable(I):
        raise NotStronglyStableError(str(I))
    if not is_cohen_macaulay(I):
        raise NotCohenMacaulayError(str(I))
    c = height(I)
    full = {(i, j) for i in range(1, I.n + 1) for j in range(1, d + 1)}
    out = set()
    for m in I.gens:
        if m.nu != c:
            continue
        cells = set(bpol_monomial(m, d).cells)
        total = 0
        for i in range(1, c):
            total += m.exponents[i - 1]
            cells.add((i, total + 1))
        out.add(GridMonomial(I.n, d, frozenset(full - cells)))
    return out


def euler_consistency(I: MonomialIdeal) -> bool:
    """Local duality sanity check: the alternating sum of the local
    cohomology series equals the Hilbert series of S/I at lambda^{-1}."""
    lc = lc_series_via_components(decompose_strongly_stable(I), I.n)
    total = RationalSeries.zero()
    for i, s in lc.entries:
        total = total + (s if i % 2 == 0 else -s)
    return total == hilbert_series_quotient(I).invert_variable()
