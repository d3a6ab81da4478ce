from itertools import combinations, product

import pytest

from borel_dual import Monomial, MonomialIdeal, contains


def ideal(n, *words):
    """Build an ideal from exponent tuples, e.g. ideal(2, (2,0), (1,1))."""
    return MonomialIdeal(n, tuple(Monomial(w) for w in words))


def series_coefficients(series, upto):
    """Expand num / (1-lambda)^k as a power series in lambda up to degree
    `upto` (requires a plain, non-Laurent numerator)."""
    coeffs = [0] * (upto + 1)
    num = dict(series.numerator)
    assert all(e >= 0 for e in num), "expansion needs a polynomial numerator"
    # 1/(1-lambda)^k has coefficient C(m+k-1, k-1) at lambda^m
    from math import comb

    k = series.denom_power
    for e, c in num.items():
        for m in range(upto + 1 - e):
            coeffs[e + m] += c * (comb(m + k - 1, k - 1) if k else (1 if m == 0 else 0))
    return coeffs


def standard_monomial_counts(I, upto):
    """Number of monomials of each degree 0..upto outside I, by enumeration."""
    counts = []
    for deg in range(upto + 1):
        total = 0
        for exps in product(range(deg + 1), repeat=I.n):
            if sum(exps) != deg:
                continue
            if not contains(I, Monomial(exps)):
                total += 1
        counts.append(total)
    return counts


def minimal_transversals(supports):
    """All inclusion-minimal sets hitting every support set, by brute force."""
    universe = sorted(set().union(*supports))
    hits = []
    for r in range(1, len(universe) + 1):
        for cand in combinations(universe, r):
            s = set(cand)
            if all(s & set(sup) for sup in supports):
                if not any(set(h) < s for h in hits):
                    hits.append(cand)
    return sorted(hits)


@pytest.fixture
def running_example():
    """(x1^2, x1x2, x1x3, x2^2, x2x3) in three variables."""
    return ideal(3, (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1))
