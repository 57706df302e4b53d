"""Supports of Koszul objects, the V^inv lattice and monomial invariant primes.

Thick tensor-ideals are compared through their supports: a Koszul object
``S/f_1 (x) ... (x) S/f_k`` has support ``V((f_1, ..., f_k))`` (or ``V^inv``
of it at the A level), and inclusion of supports is decided by radical
membership of sharp-closed ideals.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .algebra import AlgebraError, Generator, Ideal, Poly, RingMismatchError, Truncation
from .coaction import CoactionTable, canonical_generators, coaction_table, components, is_invariant, sharp, star
from .ext import ExtRing
from .groebner import radical_member, reducer

MAX_ENUMERATION_VARIABLES = 20


class InvarianceError(AlgebraError):
    """A Koszul element is not invariant modulo the earlier ones."""

    def __init__(self, index: int, element: Poly, component: Poly):
        super().__init__(f"element {index + 1} ({element}) is not invariant modulo the "
                         f"previous elements: component {component} escapes")
        self.index = index
        self.element = element
        self.component = component


def _hom_key(p: Poly):
    return p.bidegree if p.terms else (0, 0)


@dataclass(frozen=True)
class KoszulObject:
    """Iterated cofiber data: a ring and an ordered list of homogeneous elements.

    Elements are kept in ascending homological (then internal) degree; the
    sort is stable, so ties keep the caller's order.
    """

    ring: ExtRing
    elements: Tuple[Poly, ...] = ()
    requires_invariance: bool = False

    def __post_init__(self):
        pres = self.ring.presentation
        elems = []
        for f in self.elements:
            f = pres.normal_form(f)
            if not f.is_homogeneous():
                raise AlgebraError(f"Koszul element {f} is not homogeneous")
            elems.append(f)
        object.__setattr__(self, "elements", tuple(sorted(elems, key=_hom_key)))

    @property
    def ideal(self) -> Ideal:
        return Ideal(self.ring.presentation, self.elements)

    def invariance_failure(self) -> Optional[InvarianceError]:
        """The first f_j with a coaction component outside (f_1, ..., f_{j-1})."""
        table = coaction_table(self.ring)
        pres = self.ring.presentation
        for j, f in enumerate(self.elements):
            prior = Ideal(pres, self.elements[:j])
            red = reducer(prior)
            for left, comp in sorted(components(f, table).items(), key=lambda kv: str(kv[0])):
                if not left:
                    continue
                if not red.is_member(comp):
                    return InvarianceError(j, f, comp)
        return None

    def __str__(self):
        return "Koszul(" + ", ".join(str(f) for f in self.elements) + ")"


def koszul(ring: ExtRing, *elements, requires_invariance: bool = False) -> KoszulObject:
    polys = tuple(Poly.gen(e) if isinstance(e, Generator) else e for e in elements)
    return KoszulObject(ring, polys, requires_invariance)


@dataclass(frozen=True)
class SupportSet:
    """``V(ideal)`` or, in invariant mode, ``V^inv(ideal)`` with the ideal sharp-closed."""

    ring: ExtRing
    ideal: Ideal
    invariant_mode: bool = True
    _radical: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.ideal.ring != self.ring.presentation:
            raise RingMismatchError("support ideal is not in the support's ring")
        I = sharp_closure(self.ring, self.ideal) if self.invariant_mode else self.ideal
        # canonical generators, so equal ideals share radical-membership caches
        object.__setattr__(self, "ideal", _canonical(I))

    def in_radical(self, f: Poly) -> bool:
        """Whether ``f`` vanishes on this closed set; answers are memoised per set."""
        hit = self._radical.get(f)
        if hit is None:
            hit = self._radical[f] = radical_member(f, self.ideal)
        return hit

    def __str__(self):
        kind = "V^inv" if self.invariant_mode else "V"
        return f"{kind}({self.ideal})"


@lru_cache(maxsize=1 << 14)
def sharp_closure(ring: ExtRing, I: Ideal) -> Ideal:
    """Memoised ``sharp`` against the ring's own coaction table."""
    return sharp(I, coaction_table(ring))


@lru_cache(maxsize=1 << 14)
def _canonical(I: Ideal) -> Ideal:
    return Ideal(I.ring, tuple(canonical_generators(I)))


def support_of_ideal(ring: ExtRing, I: Ideal, invariant_mode: bool = True) -> SupportSet:
    return SupportSet(ring, I, invariant_mode)


def support(X: KoszulObject) -> SupportSet:
    """sigma(X) = V((f_1, ..., f_k)), as V^inv when invariance is required."""
    if X.requires_invariance:
        err = X.invariance_failure()
        if err is not None:
            raise err
    return support_of_ideal(X.ring, X.ideal, X.requires_invariance)


def _same_kind(S: SupportSet, T: SupportSet) -> None:
    if S.ring is not T.ring and S.ring.presentation != T.ring.presentation:
        raise RingMismatchError("supports live over different rings")
    if S.invariant_mode != T.invariant_mode:
        raise AlgebraError("cannot compare an invariant support with a plain one")


def vinv_subset(S: SupportSet, T: SupportSet) -> bool:
    """``S subset T``, i.e. every generator of T's ideal lies in the radical of S's."""
    _same_kind(S, T)
    return all(S.in_radical(g) for g in T.ideal.generators)


def union(S: SupportSet, T: SupportSet) -> SupportSet:
    """``V(I) cup V(J) = V(IJ)``."""
    _same_kind(S, T)
    return support_of_ideal(S.ring, S.ideal * T.ideal, S.invariant_mode)


def intersection(S: SupportSet, T: SupportSet) -> SupportSet:
    """``V(I) cap V(J) = V(I + J)``."""
    _same_kind(S, T)
    return support_of_ideal(S.ring, S.ideal + T.ideal, S.invariant_mode)


def lattice_ops(S: SupportSet, T: SupportSet) -> Tuple[SupportSet, SupportSet]:
    """(union, intersection)."""
    return union(S, T), intersection(S, T)


def same_support(S: SupportSet, T: SupportSet) -> bool:
    return vinv_subset(S, T) and vinv_subset(T, S)


def thick_subset(X: KoszulObject, Y: KoszulObject) -> bool:
    """Whether the thick tensor-ideal generated by X sits inside the one generated by Y."""
    return vinv_subset(support(X), support(Y))


# -- monomial invariant primes -----------------------------------------------

@dataclass(frozen=True)
class InvariantPrimeRecord:
    ring: ExtRing
    variables: FrozenSet[Generator]
    is_prime: bool
    is_invariant: bool

    @property
    def ideal(self) -> Ideal:
        return Ideal(self.ring.presentation, tuple(Poly.gen(g) for g in sorted(self.variables)))

    def label(self) -> str:
        return "{" + ", ".join(str(g) for g in sorted(self.variables)) + "}"


def variable_ideal_is_invariant(ring: ExtRing, gens: Iterable[Generator]) -> bool:
    I = Ideal(ring.presentation, tuple(Poly.gen(g) for g in gens))
    return sharp_closure(ring, I) == I


def enumerate_monomial_invariant_primes(ring: ExtRing, table: Optional[CoactionTable] = None
                                        ) -> List[InvariantPrimeRecord]:
    """Every subset of the variables with prime/invariant flags, lexicographic by index."""
    variables = ring.variables
    n = len(variables)
    if n > MAX_ENUMERATION_VARIABLES:
        raise AlgebraError(f"{n} variables exceeds the enumeration guard of "
                           f"{MAX_ENUMERATION_VARIABLES}")
    if table is not None and table.ring.presentation != ring.presentation:
        raise RingMismatchError("coaction table belongs to another ring")
    rel_sets = [frozenset(g for g, _ in r) for r in ring.relations]
    out = []
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            chosen = frozenset(variables[i] for i in combo)
            prime = all(rs & chosen for rs in rel_sets)
            inv = variable_ideal_is_invariant(ring, chosen)
            out.append(InvariantPrimeRecord(ring, chosen, prime, inv))
    order = {g: i for i, g in enumerate(variables)}
    out.sort(key=lambda r: sorted(order[g] for g in r.variables))
    return out


def invariant_primes(records: Sequence[InvariantPrimeRecord]) -> List[InvariantPrimeRecord]:
    return [r for r in records if r.is_prime and r.is_invariant]


def star_retract(p: Ideal, table: CoactionTable, tr: Truncation) -> Ideal:
    """``p -> p*`` within the truncation; invariant inputs come back unchanged."""
    if is_invariant(p, table).is_invariant:
        return p
    return star(p, table, tr)


def spc_map_res(p, target: ExtRing, source: Optional[ExtRing] = None) -> Ideal:
    """Preimage in the D-limit ring of a prime over an elementary ring.

    ``p`` is an :class:`InvariantPrimeRecord`, or an Ideal together with its
    ``source`` ring.  The preimage is generated by the generators killed by
    restriction together with the generators of ``p``.
    """
    if target.flavor != "d-limit":
        raise AlgebraError("spc_map_res targets the D-limit ring")
    if isinstance(p, InvariantPrimeRecord):
        source, gens = p.ring, tuple(Poly.gen(g) for g in sorted(p.variables))
    else:
        if source is None:
            raise AlgebraError("an ideal argument needs its source ring")
        if p.ring != source.presentation:
            raise RingMismatchError("ideal is not in the source ring")
        gens = p.generators
    if source.truncation.max_t != target.truncation.max_t:
        raise AlgebraError("source and target truncations differ")
    alive = set(source.variables)
    dead = tuple(Poly.gen(g) for g in target.variables if g not in alive)
    for g in gens:
        target.presentation.check(g)
    return Ideal(target.presentation, dead + tuple(gens))


# -- emitters ---------------------------------------------------------------

def to_dot(records: Sequence[InvariantPrimeRecord]) -> str:
    """Hasse diagram of inclusion among the invariant primes in ``records``."""
    pts = invariant_primes(records)
    names = {r.variables: f"p{i}" for i, r in enumerate(pts)}
    lines = ["digraph invariant_primes {", "  rankdir=BT;"]
    for r in pts:
        lines.append(f'  {names[r.variables]} [label="{r.label()}"];')
    for a in pts:
        for b in pts:
            if a.variables < b.variables and not any(
                    a.variables < c.variables < b.variables for c in pts):
                lines.append(f"  {names[a.variables]} -> {names[b.variables]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(records: Sequence[InvariantPrimeRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["variables", "is_prime", "is_invariant"])
    order = None
    for r in records:
        if order is None:
            order = {g: i for i, g in enumerate(r.ring.variables)}
        vs = " ".join(str(g) for g in sorted(r.variables, key=order.get))
        w.writerow([vs, str(r.is_prime).lower(), str(r.is_invariant).lower()])
    return buf.getvalue()
