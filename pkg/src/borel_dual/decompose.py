"""Irreducible decompositions of monomial ideals.

Three flavours of component are used:

* an *initial-segment* component ``(a_1, ..., a_t)`` with all ``a_i >= 1``,
  standing for the ideal ``(x_1^{a_1}, ..., x_t^{a_t})`` -- the form every
  component of a strongly stable ideal takes;
* a *grid* component ``(b_1, ..., b_t)``, nondecreasing, standing for
  ``(x_{1,b_1}, ..., x_{t,b_t})`` in the grid ring;
* a *general* component, a mapping ``{variable index: exponent}`` with
  arbitrary support, produced by the splitting oracle.
"""

from __future__ import annotations

from .core import (
    DegenerateIdealError,
    Monomial,
    MonomialIdeal,
    NotStronglyStableError,
    is_strongly_stable,
    minimalize,
    saturate_variable,
)
from .polarize import GridIdeal, flatten_grid_ideal, unflatten_support

IrreducibleComponent = tuple[int, ...]
GridComponent = tuple[int, ...]
GeneralComponent = dict[int, int]


class GridConditionError(ValueError):
    """A grid ideal whose components are not in initial-segment/staircase form."""


def t_of(a: IrreducibleComponent) -> int:
    return len(a)

def e_of(a: IrreducibleComponent) -> int:
    return a[-1]

def w_of(a: IrreducibleComponent, n: int) -> int:
    return n - sum(a)


def component_sort_key(a):
    return (len(a), a)


def psi(a: IrreducibleComponent) -> list[GridComponent]:
    """Expand one initial-segment component into the e(a) grid components
    it induces on the polarized side: b_i = (a_1+...+a_i) - i + 1 for
    i < t, with the last entry sweeping an interval of length a_t."""
    t = len(a)
    if t == 0 or any(x < 1 for x in a):
        raise ValueError(f"not a positive component: {a}")
    if t == 1:
        return [(c,) for c in range(1, a[0] + 1)]
    prefix = []
    total = 0
    for i in range(t - 1):
        total += a[i]
        prefix.append(total - i)  # sum - (i+1) + 1
    last = prefix[-1]
    return [tuple(prefix) + (c,) for c in range(last, last + a[-1])]


def general_from_initial(a: IrreducibleComponent) -> GeneralComponent:
    return {i + 1: e for i, e in enumerate(a)}


def initial_from_general(c: GeneralComponent) -> IrreducibleComponent:
    """Convert back when the support is an initial segment 1..t; error otherwise."""
    t = len(c)
    if sorted(c) != list(range(1, t + 1)):
        raise ValueError(f"component support {sorted(c)} is not an initial segment")
    return tuple(c[i] for i in range(1, t + 1))


def component_leq(c: GeneralComponent, d: GeneralComponent) -> bool:
    """Ideal containment m^c <= m^d (as ideals, i.e. m^c is the smaller one)."""
    return all(i in d and d[i] <= e for i, e in c.items())


def _irredundant(comps: list[GeneralComponent]) -> list[GeneralComponent]:
    """Drop components that contain another one; for irreducible monomial
    ideals this yields the unique irredundant decomposition."""
    uniq = []
    for c in comps:
        if c not in uniq:
            uniq.append(c)
    return [c for c in uniq if not any(d != c and component_leq(d, c) for d in uniq)]


def decompose_oracle(I: MonomialIdeal) -> list[GeneralComponent]:
    """Irredundant irreducible decomposition of any monomial ideal, by
    coprime splitting: peel the top pure-power factor off the first mixed
    generator and recurse on the two enlarged ideals."""
    if I.is_zero or I.is_unit:
        raise DegenerateIdealError("zero or unit ideal has no decomposition here")
    comps = _split(I)
    return sorted(_irredundant(comps), key=lambda c: sorted(c.items()))


def _split(I: MonomialIdeal) -> list[GeneralComponent]:
    mixed = next((g for g in I.gens if len(g.support) >= 2), None)
    if mixed is None:
        return [{g.nu: g.degree for g in I.gens}]
    k = mixed.nu
    e = mixed.exponents[k - 1]
    v = Monomial(tuple(e if i == k else 0 for i in range(1, I.n + 1)))
    u = Monomial(tuple(0 if i == k else x for i, x in enumerate(mixed.exponents, 1)))
    out = []
    for extra in (u, v):
        out.extend(_split(minimalize(set(I.gens) | {extra}, I.n)))
    return out


def decompose_strongly_stable(I: MonomialIdeal) -> list[IrreducibleComponent]:
    """Decomposition of a strongly stable ideal by repeated top-stratum
    extraction and saturation: each generator at the maximal nu-level l
    contributes (a_1+1, ..., a_{l-1}+1, a_l), then the l-th variable is
    saturated away and the loop continues one level down."""
    if I.is_zero or I.is_unit:
        raise DegenerateIdealError("zero or unit ideal")
    if not is_strongly_stable(I):
        raise NotStronglyStableError(str(I))
    comps: list[IrreducibleComponent] = []
    J = I
    while not J.is_zero and not J.is_unit:
        comps.extend(top_components(J))
        J = saturate_variable(J, J.nu())
    comps = [
        a for a in comps
        if not any(b != a and component_leq(general_from_initial(b), general_from_initial(a))
                   for b in comps)
    ]
    return sorted(set(comps), key=component_sort_key)


def top_components(I: MonomialIdeal) -> list[IrreducibleComponent]:
    """The height-nu(I) components: one per generator reaching the top level."""
    if I.is_zero or I.is_unit:
        raise DegenerateIdealError("zero or unit ideal")
    if not is_strongly_stable(I):
        raise NotStronglyStableError(str(I))
    l = I.nu()
    out = set()
    for g in I.gens:
        if g.nu == l:
            a = g.exponents[:l]
            out.add(tuple(x + 1 for x in a[: l - 1]) + (a[l - 1],))
    return sorted(out, key=component_sort_key)


def bpol_decomposition(E) -> list[GridComponent]:
    """Grid components of the polarized ideal: the disjoint union of the
    psi-expansions of the components of the base ideal."""
    out: list[GridComponent] = []
    for a in E:
        out.extend(psi(tuple(a)))
    assert len(out) == len(set(out)), "psi images are expected to be disjoint"
    return sorted(set(out), key=component_sort_key)


def grid_components_oracle(J: GridIdeal) -> list[GridComponent]:
    """Decompose a grid ideal with the splitting oracle and insist the
    components are staircase-shaped: support in rows 1..t, one cell per
    row, column indices nondecreasing."""
    flat = decompose_oracle(flatten_grid_ideal(J))
    out = []
    for comp in flat:
        cells = sorted(unflatten_support(sorted(comp), J.cols))
        t = len(cells)
        if [i for i, _ in cells] != list(range(1, t + 1)):
            raise GridConditionError(f"component rows {cells} are not 1..t")
        gammas = [j for _, j in cells]
        if any(x > y for x, y in zip(gammas, gammas[1:])):
            raise GridConditionError(f"component columns {gammas} are not nondecreasing")
        out.append(tuple(gammas))
    return sorted(out, key=component_sort_key)


def right_shift_check(E, n: int) -> bool:
    """The right-shift property of a component set: moving one unit of
    exponent from a spot with a_i > 1 to a later spot inside the same
    component always lands over some component of E."""
    comps = [general_from_initial(tuple(a)) for a in E]
    for a in E:
        a = tuple(a)
        t = len(a)
        for i in range(1, t + 1):
            if a[i - 1] <= 1:
                continue
            for j in range(i + 1, t + 1):
                shifted = list(a)
                shifted[i - 1] -= 1
                shifted[j - 1] += 1
                sh = general_from_initial(tuple(shifted))
                if not any(component_leq(b, sh) for b in comps):
                    return False
    return True


def intersect_components(comps, n: int) -> MonomialIdeal:
    """The exact ideal cut out by a set of components, via pairwise lcms."""
    comps = list(comps)
    if not comps:
        raise ValueError("empty component set")
    norm = [c if isinstance(c, dict) else general_from_initial(tuple(c)) for c in comps]

    def gens_of(c: GeneralComponent):
        return [Monomial(tuple(c.get(i, 0) if i == v else 0 for i in range(1, n + 1)))
                for v in c]

    current = minimalize(gens_of(norm[0]), n)
    for c in norm[1:]:
        inter = [g.lcm(h) for g in current.gens for h in gens_of(c)]
        current = minimalize(inter, n)
    return current
