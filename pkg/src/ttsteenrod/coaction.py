"""The coaction of A on the D-limit Ext ring, and invariant-ideal operators.

``psi(h_ts)`` is an element of ``A (x) R`` (left factor a polynomial in the
xi's, right factor a single generator), extended multiplicatively.  From it:

* ``sharp(I)``  -- smallest invariant ideal containing I,
* ``star(I)``   -- largest invariant ideal inside I, up to a truncation,
* ``is_invariant(I)`` with a witness when it fails,
* ``invariants_subring`` -- the coaction fixed points, degree by degree.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .algebra import (UNIT, AlgebraError, BiDegree, Generator, Ideal, Monomial, Poly,
                      TensorPoly, Truncation, graded_basis, sort_monomials)
from .ext import ExtRing, d_limit_ring, ext_of_elementary
from .groebner import groebner_basis, ideal_member, reducer
from .linalg import in_span, kernel_of_images
from .steenrod import QuotientHopf, conjugate, in_d_cotensor, is_elementary, xi_power


class SharpGuardError(AlgebraError):
    pass


@lru_cache(maxsize=None)
def coaction_generator(t: int, s: int) -> TensorPoly:
    """psi(h_ts) = sum_j sum_i zeta_j^(2^s) xi_{t-i-j}^(2^(i+j+s)) (x) h_{i,j+s}."""
    if not 0 <= s < t:
        raise AlgebraError(f"h({t},{s}) needs 0 <= s < t")
    acc: set = set()
    for j in range((t - s - 1) // 2 + 1):
        zeta = [m ** (2 ** s) for m in conjugate(j).terms]
        for i in range(j + s + 1, t - j + 1):
            xi_part = xi_power(t - i - j, 2 ** (i + j + s))
            right = Monomial.of(Generator("h", i, j + s))
            for z in zeta:
                acc ^= {(z * xi_part, right)}
    return TensorPoly._from_set(acc)


class CoactionTable:
    """Generator values of the coaction on one Ext ring, with a monomial memo.

    Instances come from :func:`coaction_table` / :func:`coaction_restricted`
    and are shared per ring; the memo never changes any answer.
    """

    def __init__(self, ring: ExtRing, values: Dict[Generator, TensorPoly]):
        self.ring = ring
        self.values = dict(values)
        self._memo: Dict[Monomial, TensorPoly] = {UNIT: TensorPoly.one()}
        self._components: Dict[Monomial, Dict[Monomial, Poly]] = {}

    def _reduce_right(self, terms) -> set:
        pres = self.ring.presentation
        if not pres.relations:
            return set(terms)
        return {t for t in terms if pres.is_normal(t[1])}

    def monomial(self, m: Monomial) -> TensorPoly:
        hit = self._memo.get(m)
        if hit is not None:
            return hit
        pairs = list(m)
        g, e = pairs[-1]
        rest = Monomial._raw(tuple(pairs[:-1]))
        if e > 1:
            # m = rest * g^e; peel one factor of g
            rest = Monomial._raw(tuple(pairs[:-1]) + ((g, e - 1),))
        base = self.monomial(rest)
        val = self.values.get(g)
        if val is None:
            raise AlgebraError(f"generator {g} is not in the ring")
        out = TensorPoly._from_set(self._reduce_right((base * val).terms))
        self._memo[m] = out
        return out

    def components(self, m: Monomial) -> Dict[Monomial, Poly]:
        hit = self._components.get(m)
        if hit is None:
            hit = self.monomial(m).components()
            self._components[m] = hit
        return hit

    def __call__(self, p: Poly) -> TensorPoly:
        return coaction_poly(p, self)

    def __repr__(self):
        return f"CoactionTable({self.ring})"


def coaction_poly(p: Poly, table: CoactionTable) -> TensorPoly:
    """psi extended additively and multiplicatively; relations go to 0."""
    p = table.ring.presentation.normal_form(p)
    acc: set = set()
    for m in p.terms:
        acc ^= table.monomial(m).terms
    return TensorPoly._from_set(acc)


def components(p: Poly, table: CoactionTable) -> Dict[Monomial, Poly]:
    """``{left monomial: right-factor component}`` of psi(p)."""
    return coaction_poly(p, table).components()


@lru_cache(maxsize=None)
def _d_table(tr: Truncation) -> CoactionTable:
    ring = d_limit_ring(tr)
    return CoactionTable(ring, {g: coaction_generator(g.t, g.s) for g in ring.variables})


def coaction_restricted(E: QuotientHopf, table: CoactionTable) -> CoactionTable:
    """psi_E = (id (x) res_{D,E}) psi_D on the generators alive in E."""
    return _restricted(E, table.ring.truncation)


@lru_cache(maxsize=None)
def _restricted(E: QuotientHopf, tr: Truncation) -> CoactionTable:
    if not is_elementary(E):
        raise AlgebraError(f"{E} is not elementary")
    ring = ext_of_elementary(E, tr)
    alive = set(ring.variables)
    values = {}
    for g in ring.variables:
        full = coaction_generator(g.t, g.s)
        values[g] = TensorPoly._from_set(t for t in full.terms if t[1].generators[0] in alive)
    return CoactionTable(ring, values)


def coaction_table(ring: ExtRing) -> CoactionTable:
    """The coaction on ``ring``: psi_D, or its restriction for an elementary ring."""
    if ring.flavor == "d-limit":
        return _d_table(ring.truncation)
    return _restricted(ring.quotient, ring.truncation)


def counit_left(x: TensorPoly) -> Poly:
    """``(epsilon (x) id)``: keep the terms whose left factor is 1."""
    return Poly._from_set(r for l, r in x.terms if not l)


def cotensor_report(table: CoactionTable) -> List[Tuple[Generator, Monomial]]:
    """Generator/left-factor pairs of psi falling outside F2[xi_1^2, xi_2^4, ...]."""
    out = []
    for g in table.ring.variables:
        for left in sort_monomials({l for l, _ in table.values[g].terms}):
            if not in_d_cotensor(Poly.mono(left)):
                out.append((g, left))
    return out


# -- invariant ideals ------------------------------------------------------

def _check_ring(I: Ideal, table: CoactionTable) -> None:
    if I.ring != table.ring.presentation:
        raise AlgebraError("ideal and coaction table live in different rings")


@dataclass(frozen=True)
class InvariantIdealReport:
    ideal: Ideal
    is_invariant: bool
    witness: Optional[Tuple[Poly, Monomial, Poly]] = None  # (generator, left, component)

    def __bool__(self):
        return self.is_invariant


def _sorted_components(p: Poly, table: CoactionTable) -> List[Tuple[Monomial, Poly]]:
    comps = components(p, table)
    return [(left, comps[left]) for left in sort_monomials(comps, descending=False)]


def is_invariant(I: Ideal, table: CoactionTable) -> InvariantIdealReport:
    """Every right-factor component of psi(g), g a generator, lies in I."""
    _check_ring(I, table)
    red = reducer(I)
    for g in I.generators:
        for left, comp in _sorted_components(g, table):
            if not red.is_member(comp):
                return InvariantIdealReport(I, False, (g, left, comp))
    return InvariantIdealReport(I, True)


def _box_size(I: Ideal) -> int:
    degs = [d for g in I.generators for d in g.bidegrees()]
    hmax = max(d[0] for d in degs)
    imax = max(d[1] for d in degs)
    table = graded_basis(I.ring, Truncation(1, max(imax, 1), max(hmax, 1)))
    return sum(len(v) for v in table.values())


def sharp(I: Ideal, table: CoactionTable) -> Ideal:
    """Smallest invariant ideal containing I: adjoin coaction components to a fixed point."""
    _check_ring(I, table)
    if I.is_zero():
        return I
    gens = list(I.generators)
    guard = _box_size(I)
    added = 0
    queue = list(gens)
    current = I
    while queue:
        g = queue.pop(0)
        for _, comp in _sorted_components(g, table):
            if ideal_member(comp, current):
                continue
            added += 1
            if added > guard:
                raise SharpGuardError(f"sharp did not stabilise within {guard} steps")
            gens.append(comp)
            queue.append(comp)
            current = Ideal(I.ring, tuple(gens))
    return current


def _vector(p, index: dict) -> int:
    v = 0
    for key in p:
        k = index.get(key)
        if k is None:
            k = index[key] = len(index)
        v ^= 1 << k
    return v


def star(I: Ideal, table: CoactionTable, tr: Truncation) -> Ideal:
    """Largest invariant ideal inside I, computed bidegree by bidegree within ``tr``.

    In each bidegree d the solutions are the x in I_d all of whose coaction
    components lie in I; the result is the ideal they generate.
    """
    _check_ring(I, table)
    I.require_homogeneous()
    out: List[Poly] = []
    if I.is_zero():
        return Ideal(I.ring, ())
    red = reducer(I)
    ring = I.ring
    J = Ideal(ring, ())
    for d, monos in graded_basis(ring, tr).items():
        if d == (0, 0) and not red.is_member(Poly.one()):
            continue
        # x in I_d  <=>  NF_I(x) = 0
        index: dict = {}
        images = [_vector((("", m) for m in red.monomial(b)), index) for b in monos]
        if not kernel_of_images(images):
            continue
        for k, b in enumerate(monos):
            for left, comp in table.components(b).items():
                if not left:
                    continue  # the left-1 component is b itself
                nf = red(comp)
                images[k] ^= _vector(((left, m) for m in nf.terms), index)
        sols = kernel_of_images(images)
        if not sols:
            continue
        polys = [Poly._from_set(monos[k] for k in range(len(monos)) if c >> k & 1) for c in sols]
        # keep only what the generators found so far do not already give
        jred = reducer(J)
        jindex: dict = {}
        rows: List[int] = []
        for p in polys:
            v = _vector(jred(p).terms, jindex)
            if v and not in_span(v, rows):
                rows.append(v)
                out.append(p)
        if len(out) != len(J.generators):
            J = Ideal(ring, tuple(out))
    return J


def invariants_subring(table: CoactionTable, tr: Truncation) -> Dict[BiDegree, List[Poly]]:
    """Per bidegree, a basis of ``ker(x -> psi(x) + 1 (x) x)``."""
    ring = table.ring.presentation
    out: Dict[BiDegree, List[Poly]] = {}
    for d, monos in graded_basis(ring, tr).items():
        index: dict = {}
        images = []
        for b in monos:
            terms = set(table.monomial(b).terms)
            terms ^= {(UNIT, b)}
            images.append(_vector(terms, index))
        sols = kernel_of_images(images)
        polys = [Poly._from_set(monos[k] for k in range(len(monos)) if c >> k & 1) for c in sols]
        out[d] = sorted(polys, key=str)
    return out


def canonical_generators(I: Ideal) -> List[Poly]:
    """Reduced Groebner basis (relations omitted), smallest leading term first."""
    gb = groebner_basis(I)
    return sorted(gb.generators, key=_poly_sort_key)


def _poly_sort_key(p: Poly):
    lead = p.leading_monomial()
    variables = sorted(p.generators)
    d = dict(lead)
    return (lead.bidegree, str(p), tuple(-d.get(v, 0) for v in variables))
