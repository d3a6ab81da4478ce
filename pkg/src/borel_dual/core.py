"""Exponent-vector monomials, monomial ideals, and exact Hilbert series.

Everything here is immutable and uses plain Python integers, so all
arithmetic is exact.  Variables are 1-based: ``x1, ..., xn``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


class DegenerateIdealError(ValueError):
    """Raised when the zero or unit ideal is fed to an analytic routine."""


class NotStronglyStableError(ValueError):
    """Raised when an operation requires a strongly stable ideal."""


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e > 0)

    @property
    def nu(self) -> int:
        """Largest variable index with positive exponent; 0 for the monomial 1."""
        for i in range(len(self.exponents) - 1, -1, -1):
            if self.exponents[i] > 0:
                return i + 1
        return 0

    @property
    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def alpha_word(self) -> tuple[int, ...]:
        """The nondecreasing index word: x1*x2^2 -> (1, 2, 2)."""
        word = []
        for i, e in enumerate(self.exponents):
            word.extend([i + 1] * e)
        return tuple(word)

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def times_var(self, i: int) -> Monomial:
        e = list(self.exponents)
        e[i - 1] += 1
        return Monomial(tuple(e))

    def div_var(self, i: int) -> Monomial:
        e = list(self.exponents)
        if e[i - 1] == 0:
            raise ValueError(f"x{i} does not divide {self}")
        e[i - 1] -= 1
        return Monomial(tuple(e))

    def sort_key(self):
        return (self.degree, self.alpha_word())

    def __str__(self):
        if self.is_one:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)


def monomial_from_word(word, n: int) -> Monomial:
    e = [0] * n
    for i in word:
        e[i - 1] += 1
    return Monomial(tuple(e))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators (a divisibility antichain).

    The zero ideal has no generators; the unit ideal is generated by 1.
    Use :func:`minimalize` to build one from an arbitrary generating set.
    """

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if g.n != self.n:
                raise ValueError(f"generator {g} has length {g.n}, ambient is {self.n}")
        for a, b in combinations(self.gens, 2):
            if a.divides(b) or b.divides(a):
                raise ValueError("generators are not a divisibility antichain")
        object.__setattr__(self, "gens", tuple(sorted(self.gens, key=Monomial.sort_key)))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.gens), default=0)

    def nu(self) -> int:
        return max((g.nu for g in self.gens), default=0)

    def __str__(self):
        if self.is_zero:
            return "0"
        return ", ".join(str(g) for g in self.gens)


def minimalize(gens, n: int) -> MonomialIdeal:
    """The divisibility antichain generating the same ideal as ``gens``."""
    gens = set(gens)
    for g in gens:
        if g.n != n:
            raise ValueError(f"generator {g} has length {g.n}, expected {n}")
    minimal = [g for g in gens if not any(h != g and h.divides(g) for h in gens)]
    return MonomialIdeal(n, tuple(minimal))


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    if m.n != I.n:
        raise ValueError(f"monomial length {m.n} does not match ambient {I.n}")
    return any(g.divides(m) for g in I.gens)


def is_strongly_stable(I: MonomialIdeal) -> bool:
    """Closure of G(I) under the left shifts x_i -> x_j for j < i."""
    for m in I.gens:
        for i in m.support:
            for j in range(1, i):
                if not contains(I, m.div_var(i).times_var(j)):
                    return False
    return True


def borel_closure(gens, n: int) -> MonomialIdeal:
    """Smallest strongly stable ideal containing ``gens`` (left-shift fixpoint)."""
    seen = set(gens)
    queue = list(gens)
    while queue:
        m = queue.pop()
        for i in m.support:
            for j in range(1, i):
                shifted = m.div_var(i).times_var(j)
                if shifted not in seen:
                    seen.add(shifted)
                    queue.append(shifted)
    return minimalize(seen, n)


def colon_variable(I: MonomialIdeal, l: int) -> MonomialIdeal:
    """The ideal quotient I : x_l."""
    if not 1 <= l <= I.n:
        raise IndexError(f"variable index {l} out of range for n={I.n}")
    new = [m.div_var(l) if m.exponents[l - 1] > 0 else m for m in I.gens]
    return minimalize(new, I.n)


def saturate_variable(I: MonomialIdeal, l: int) -> MonomialIdeal:
    """The saturation I : x_l^infinity (stable value of iterated colons)."""
    if not 1 <= l <= I.n:
        raise IndexError(f"variable index {l} out of range for n={I.n}")
    stripped = []
    for m in I.gens:
        e = list(m.exponents)
        e[l - 1] = 0
        stripped.append(Monomial(tuple(e)))
    return minimalize(stripped, I.n)


def restrict_away_last(I: MonomialIdeal) -> MonomialIdeal:
    """The ideal generated by the generators not divisible by x_n."""
    kept = [m for m in I.gens if m.exponents[I.n - 1] == 0]
    return minimalize(kept, I.n)


def _require_nondegenerate_stable(I: MonomialIdeal):
    if I.is_zero or I.is_unit:
        raise DegenerateIdealError("zero or unit ideal")
    if not is_strongly_stable(I):
        raise NotStronglyStableError(str(I))


def height(I: MonomialIdeal) -> int:
    """ht(I) = max { i | x_i in rad(I) }, for a strongly stable ideal.

    A pure power of x_i lies in I iff some minimal generator is a pure
    power of x_i.
    """
    _require_nondegenerate_stable(I)
    return max(g.nu for g in I.gens if len(g.support) == 1)


def proj_dim_quotient(I: MonomialIdeal) -> int:
    """proj-dim of S/I for strongly stable I: max of nu over the generators."""
    _require_nondegenerate_stable(I)
    return max(g.nu for g in I.gens)


def is_cohen_macaulay(I: MonomialIdeal) -> bool:
    _require_nondegenerate_stable(I)
    return proj_dim_quotient(I) == height(I)


@dataclass(frozen=True)
class RationalSeries:
    """A Laurent polynomial over a power of (1 - lambda), in canonical form.

    Canonical means: no zero coefficients, and if denom_power > 0 the
    numerator is not divisible by (1 - lambda).  Build via :meth:`make`.
    """

    numerator: tuple[tuple[int, int], ...]  # sorted (exponent, coefficient)
    denom_power: int

    @staticmethod
    def make(num: dict[int, int], denom_power: int) -> RationalSeries:
        num = {e: c for e, c in num.items() if c != 0}
        while denom_power > 0 and num and sum(num.values()) == 0:
            num = _divide_one_minus_lambda(num)
            denom_power -= 1
        if not num:
            denom_power = 0
        return RationalSeries(tuple(sorted(num.items())), denom_power)

    @staticmethod
    def zero() -> RationalSeries:
        return RationalSeries.make({}, 0)

    @staticmethod
    def geometric(j: int) -> RationalSeries:
        """lambda^j / (1 - lambda)^j for any integer j (negative allowed)."""
        if j >= 0:
            return RationalSeries.make({j: 1}, j)
        # lambda^j * (1 - lambda)^(-j), a Laurent polynomial
        num = _poly_mul({j: 1}, _one_minus_lambda_power(-j))
        return RationalSeries.make(num, 0)

    @property
    def num_dict(self) -> dict[int, int]:
        return dict(self.numerator)

    @property
    def is_zero(self) -> bool:
        return not self.numerator

    def __add__(self, other: RationalSeries) -> RationalSeries:
        k = max(self.denom_power, other.denom_power)
        a = _poly_mul(self.num_dict, _one_minus_lambda_power(k - self.denom_power))
        b = _poly_mul(other.num_dict, _one_minus_lambda_power(k - other.denom_power))
        for e, c in b.items():
            a[e] = a.get(e, 0) + c
        return RationalSeries.make(a, k)

    def __neg__(self) -> RationalSeries:
        return RationalSeries(tuple((e, -c) for e, c in self.numerator), self.denom_power)

    def __sub__(self, other: RationalSeries) -> RationalSeries:
        return self + (-other)

    def scale(self, c: int) -> RationalSeries:
        return RationalSeries.make({e: c * v for e, v in self.numerator}, self.denom_power)

    def times_one_minus_lambda_power(self, k: int) -> RationalSeries:
        """Multiply by (1 - lambda)^k."""
        if k >= self.denom_power:
            num = _poly_mul(self.num_dict, _one_minus_lambda_power(k - self.denom_power))
            return RationalSeries.make(num, 0)
        return RationalSeries.make(self.num_dict, self.denom_power - k)

    def invert_variable(self) -> RationalSeries:
        """Substitute lambda -> 1/lambda, re-expressed over (1 - lambda)^k."""
        k = self.denom_power
        num = {k - e: (-1) ** k * c for e, c in self.numerator}
        return RationalSeries.make(num, k)

    def numerator_at_one(self) -> int:
        return sum(c for _, c in self.numerator)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for e, c in self.numerator:
            if e == 0:
                term = str(abs(c))
            else:
                coeff = "" if abs(c) == 1 else str(abs(c))
                power = "λ" if e == 1 else f"λ^{e}"
                term = coeff + power
            parts.append(("- " if c < 0 else "+ ") + term)
        body = " ".join(parts).lstrip("+ ")
        if body.startswith("- "):
            body = "-" + body[2:]
        if self.denom_power == 0:
            return body
        denom = "(1-λ)" if self.denom_power == 1 else f"(1-λ)^{self.denom_power}"
        if len(self.numerator) > 1:
            return f"({body}) / {denom}"
        return f"{body} / {denom}"


def _one_minus_lambda_power(k: int) -> dict[int, int]:
    poly = {0: 1}
    for _ in range(k):
        poly = _poly_mul(poly, {0: 1, 1: -1})
    return poly


def _poly_mul(p: dict[int, int], q: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def _divide_one_minus_lambda(num: dict[int, int]) -> dict[int, int]:
    """Divide a Laurent polynomial with num(1) == 0 by (1 - lambda)."""
    lo = min(num)
    hi = max(num)
    # p = (1 - lambda) * q  =>  q coefficients are prefix sums of p's
    q: dict[int, int] = {}
    acc = 0
    for e in range(lo, hi):
        acc += num.get(e, 0)
        if acc:
            q[e] = acc
    assert acc + num.get(hi, 0) == 0
    return q


def hilbert_series_quotient(I: MonomialIdeal) -> RationalSeries:
    """Exact Hilbert series H(S/I, lambda), by inclusion-exclusion over
    lcms of generator subsets."""
    g = len(I.gens)
    num: dict[int, int] = {0: 1}
    for r in range(1, g + 1):
        sign = (-1) ** r
        for subset in combinations(I.gens, r):
            m = subset[0]
            for other in subset[1:]:
                m = m.lcm(other)
            num[m.degree] = num.get(m.degree, 0) + sign
    return RationalSeries.make(num, I.n)
