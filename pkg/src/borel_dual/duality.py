"""Alexander duality, the strongly stable dual, and the staircase shift.

The dual of a strongly stable ideal I in n variables with generator
degrees <= d is a strongly stable ideal in d variables with generator
degrees <= n.  It is computed here directly from the irreducible
decomposition of I via the psi expansion; the grid-level route
(transpose of the Alexander dual of the polarization) is kept as an
independent check.
"""

from __future__ import annotations

from .core import (
    Monomial,
    MonomialIdeal,
    NotStronglyStableError,
    contains,
    is_strongly_stable,
    minimalize,
    monomial_from_word,
)
from .decompose import (
    bpol_decomposition,
    decompose_oracle,
    decompose_strongly_stable,
    general_from_initial,
)
from .polarize import (
    GridIdeal,
    GridMonomial,
    default_cols,
    flatten_grid_ideal,
    grid_minimalize,
    unflatten_support,
)


def alexander_dual(J):
    """Alexander dual of a squarefree ideal (plain or grid): one generator
    per irreducible component, the product over its support."""
    if isinstance(J, GridIdeal):
        flat = _dual_squarefree(flatten_grid_ideal(J))
        gens = []
        for g in flat.gens:
            cells = unflatten_support(g.support, J.cols)
            gens.append(GridMonomial(J.rows, J.cols, frozenset(cells)))
        return grid_minimalize(gens, J.rows, J.cols)
    return _dual_squarefree(J)


def _dual_squarefree(I: MonomialIdeal) -> MonomialIdeal:
    if not I.is_squarefree:
        raise ValueError("Alexander dual requires a squarefree ideal")
    comps = decompose_oracle(I)
    gens = [Monomial(tuple(1 if i in c else 0 for i in range(1, I.n + 1))) for c in comps]
    return minimalize(gens, I.n)


def star_dual(I: MonomialIdeal, d: int | None = None) -> MonomialIdeal:
    """The strongly stable dual, read off the decomposition of I: every
    grid component (b_1, ..., b_t) of the polarization contributes the
    generator y_{b_1} * ... * y_{b_t} in d variables."""
    d = default_cols(I, d)
    if not is_strongly_stable(I):
        raise NotStronglyStableError(str(I))
    if I.max_degree > d:
        raise ValueError(f"generator degree {I.max_degree} exceeds {d}")
    E = decompose_strongly_stable(I)
    gens = [monomial_from_word(b, d) for b in bpol_decomposition(E)]
    return minimalize(gens, d)


def sigma_monomial(m: Monomial, ambient: int | None = None) -> Monomial:
    """Staircase shift x_{a_1}...x_{a_e} -> x_{a_1} x_{a_2+1} ... x_{a_e+e-1},
    landing in n + deg(m) - 1 variables by default."""
    word = m.alpha_word()
    shifted = [a + i for i, a in enumerate(word)]
    if ambient is None:
        ambient = m.n + max(m.degree, 1) - 1
    return monomial_from_word(shifted, ambient)


def sigma_ideal(I: MonomialIdeal, d: int | None = None) -> MonomialIdeal:
    """Squarefree strongly stable image of a strongly stable ideal, in
    n + d - 1 variables."""
    d = default_cols(I, d)
    if not is_strongly_stable(I):
        raise NotStronglyStableError(str(I))
    if I.max_degree > d:
        raise ValueError(f"generator degree {I.max_degree} exceeds {d}")
    ambient = I.n + d - 1
    return minimalize([sigma_monomial(m, ambient) for m in I.gens], ambient)


def sigma_decomposition(E) -> list[dict[int, int]]:
    """Components of the shifted ideal: a grid component (b_1, ..., b_t)
    becomes the prime with support {b_i + i - 1}."""
    comps = []
    for b in bpol_decomposition(E):
        supp = [bi + i for i, bi in enumerate(b)]
        comps.append({v: 1 for v in supp})
    return sorted(comps, key=lambda c: sorted(c.items()))


def is_squarefree_strongly_stable(J: MonomialIdeal) -> bool:
    """Left shifts x_i -> x_j (j < i, x_j not already present) stay in J."""
    if not J.is_squarefree:
        raise ValueError("requires a squarefree ideal")
    for m in J.gens:
        for i in m.support:
            for j in range(1, i):
                if m.exponents[j - 1] == 0:
                    if not contains(J, m.div_var(i).times_var(j)):
                        return False
    return True


def _trimmed_gens(I: MonomialIdeal):
    out = set()
    for g in I.gens:
        e = list(g.exponents)
        while e and e[-1] == 0:
            e.pop()
        out.add(tuple(e))
    return out


def ideal_equiv(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Equality of generator sets after trimming trailing unused variables;
    variable names play no role."""
    return _trimmed_gens(I) == _trimmed_gens(J)
