"""Buchberger's algorithm over GF(2) and the membership tests built on it.

Quotient rings are handled by lifting to the free polynomial ring on the
ring's variables and adjoining the relation monomials as extra generators.
Internally a polynomial is a set of exponent tuples indexed by the ring's
(ascending) variable list; ``rank(e)`` is a tuple that is *smaller* for
*larger* monomials, so the leading term is ``min(f, key=rank)``.
"""
from __future__ import annotations

import heapq
from functools import lru_cache
from operator import add, sub
from typing import Callable, FrozenSet, List, Sequence, Tuple

from .algebra import (AlgebraError, Generator, Ideal, Monomial, Poly, RingMismatchError,
                      RingPresentation)

Exps = Tuple[int, ...]
Basis = Tuple[Tuple[Exps, FrozenSet[Exps]], ...]


def _make_rank(weights: Sequence[int]) -> Callable[[Exps], tuple]:
    if all(w == 1 for w in weights):
        def rank(e):
            return (-sum(e),) + e
        return rank
    weights = tuple(weights)

    def rank(e):
        return (-sum(map(int.__mul__, weights, e)), -sum(e)) + e
    return rank


def _elim_rank(base: Callable[[Exps], tuple]) -> Callable[[Exps], tuple]:
    # block order: the last variable dominates everything else
    def rank(e):
        return (-e[-1],) + base(e[:-1])
    return rank


def _divides(a: Exps, b: Exps) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _reduce(f, G, rank) -> set:
    """Full reduction of ``f`` modulo the leads of ``G``."""
    f = set(f)
    heap = [(rank(m), m) for m in f]
    heapq.heapify(heap)
    rem = set()
    while heap:
        _, m = heapq.heappop(heap)
        if m not in f:
            continue
        for lead, terms in G:
            if _divides(lead, m):
                q = tuple(map(sub, m, lead))
                for t in terms:
                    mt = tuple(map(add, t, q))
                    if mt in f:
                        f.remove(mt)
                    else:
                        f.add(mt)
                        heapq.heappush(heap, (rank(mt), mt))
                break
        else:
            f.remove(m)
            rem.add(m)
    return rem


def buchberger(polys, rank) -> Basis:
    """Reduced Groebner basis of the given internal polynomials."""
    G: List[Tuple[Exps, FrozenSet[Exps]]] = []
    pairs: list = []
    pending = set()

    def insert(h):
        lead = min(h, key=rank)
        k = len(G)
        G.append((lead, frozenset(h)))
        for i in range(k):
            lcm = tuple(map(max, G[i][0], lead))
            heapq.heappush(pairs, (rank(lcm), i, k, lcm))
            pending.add((i, k))

    polys = [f for f in polys if f]
    if all(len(f) == 1 for f in polys):
        # monomial ideal: the minimal generators already form the reduced basis
        leads = {next(iter(f)) for f in polys}
        minimal = [m for m in leads if not any(o != m and _divides(o, m) for o in leads)]
        minimal.sort(key=rank, reverse=True)
        return tuple((m, frozenset((m,))) for m in minimal)

    for f in polys:
        r = _reduce(f, G, rank)
        if r:
            insert(r)

    while pairs:
        _, i, j, lcm = heapq.heappop(pairs)
        pending.discard((i, j))
        li, lj = G[i][0], G[j][0]
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leads
        skip = False
        for k, (lk, _) in enumerate(G):
            if k == i or k == j or not _divides(lk, lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        qi = tuple(map(sub, lcm, li))
        qj = tuple(map(sub, lcm, lj))
        s = {tuple(map(add, t, qi)) for t in G[i][1]}
        s ^= {tuple(map(add, t, qj)) for t in G[j][1]}
        r = _reduce(s, G, rank)
        if r:
            insert(r)

    # minimise, then inter-reduce
    minimal = []
    for idx, (lead, terms) in enumerate(G):
        if any(_divides(l2, lead) and (l2 != lead or j2 < idx)
               for j2, (l2, _) in enumerate(G) if j2 != idx):
            continue
        minimal.append((lead, terms))
    reduced = []
    for idx, (lead, terms) in enumerate(minimal):
        others = [g for j2, g in enumerate(minimal) if j2 != idx]
        tail = _reduce(terms - {lead}, others, rank)
        reduced.append((lead, frozenset(tail | {lead})))
    reduced.sort(key=lambda g: rank(g[0]), reverse=True)
    return tuple(reduced)


# -- ring-level interface -------------------------------------------------

@lru_cache(maxsize=None)
def _index(ring: RingPresentation):
    return {g: k for k, g in enumerate(ring.variables)}


@lru_cache(maxsize=None)
def _ring_rank(ring: RingPresentation):
    return _make_rank([g.bidegree[0] for g in ring.variables])


def _to_exps(p: Poly, index, n: int, extra: int = 0) -> set:
    out = set()
    for m in p.terms:
        e = [0] * (n + extra)
        for g, k in m:
            try:
                e[index[g]] = k
            except KeyError:
                raise RingMismatchError(f"generator {g} is not a variable of this ring") from None
        out.add(tuple(e))
    return out


def _from_exps(terms, variables: Sequence[Generator]) -> Poly:
    return Poly._from_set(
        Monomial._raw(tuple((variables[k], x) for k, x in enumerate(e) if x)) for e in terms)


def _relation_exps(ring: RingPresentation, extra: int = 0):
    idx = _index(ring)
    n = len(ring.variables)
    return [_to_exps(Poly.mono(r), idx, n, extra) for r in ring.relations]


@lru_cache(maxsize=4096)
def _ideal_gb(ring: RingPresentation, gens: Tuple[Poly, ...]) -> Basis:
    idx = _index(ring)
    n = len(ring.variables)
    F = _relation_exps(ring) + [_to_exps(g, idx, n) for g in gens]
    return buchberger(F, _ring_rank(ring))


def groebner_basis(I: Ideal) -> Ideal:
    """Reduced Groebner basis of ``I`` in its quotient ring, as an Ideal.

    Elements of the lifted basis that are relation monomials vanish in the
    ring and are dropped by :class:`Ideal`.
    """
    G = _ideal_gb(I.ring, I.generators)
    return Ideal(I.ring, tuple(_from_exps(t, I.ring.variables) for _, t in G))


class Reducer:
    """Normal forms modulo a fixed ideal, memoised per monomial."""

    def __init__(self, I: Ideal):
        self.ideal = I
        self.ring = I.ring
        self._G = _ideal_gb(I.ring, I.generators)
        self._rank = _ring_rank(I.ring)
        self._index = _index(I.ring)
        self._n = len(I.ring.variables)
        self._memo: dict = {}

    def monomial(self, m: Monomial) -> frozenset:
        r = self._memo.get(m)
        if r is None:
            e = _to_exps(Poly.mono(m), self._index, self._n)
            rem = _reduce(e, self._G, self._rank)
            r = frozenset(_from_exps(rem, self.ring.variables).terms)
            self._memo[m] = r
        return r

    def __call__(self, p: Poly) -> Poly:
        acc: set = set()
        for m in p.terms:
            acc ^= self.monomial(m)
        return Poly._from_set(acc)

    def is_member(self, p: Poly) -> bool:
        return self(p).is_zero()


@lru_cache(maxsize=512)
def reducer(I: Ideal) -> Reducer:
    return Reducer(I)


def normal_form(f: Poly, I: Ideal) -> Poly:
    """Remainder of ``f`` modulo ``I`` plus the ring relations."""
    ring = I.ring
    if f.generators - ring.varset:
        raise RingMismatchError("polynomial is not in the ideal's ring")
    return reducer(I)(f)


def ideal_member(f: Poly, I: Ideal) -> bool:
    if f.is_zero():
        return True
    return normal_form(f, I).is_zero()


def contains(I: Ideal, J: Ideal) -> bool:
    """``J`` is contained in ``I``."""
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")
    return all(ideal_member(g, I) for g in J.generators)


def same_ideal(I: Ideal, J: Ideal) -> bool:
    return contains(I, J) and contains(J, I)


@lru_cache(maxsize=1 << 16)
def _radical_member(ring: RingPresentation, gens: Tuple[Poly, ...], f: Poly) -> bool:
    idx = _index(ring)
    n = len(ring.variables)
    y = tuple([0] * n + [1])
    F = _relation_exps(ring, 1) + [_to_exps(g, idx, n, 1) for g in gens]
    # 1 + y*f; y is ungraded
    yf = {tuple(map(add, e, y)) for e in _to_exps(f, idx, n, 1)}
    F.append(yf ^ {tuple([0] * (n + 1))})
    rank = _make_rank([g.bidegree[0] for g in ring.variables] + [0])
    G = buchberger(F, rank)
    return any(not any(lead) for lead, _ in G)


def radical_member(f: Poly, I: Ideal) -> bool:
    """Whether some power of ``f`` lies in ``I`` (Rabinowitsch trick)."""
    ring = I.ring
    if f.generators - ring.varset:
        raise RingMismatchError("polynomial is not in the ideal's ring")
    f = ring.normal_form(f)
    if f.is_zero():
        return True
    return _radical_member(ring, I.generators, f)


def intersection(I: Ideal, J: Ideal) -> Ideal:
    """``I cap J`` by elimination of ``t`` from ``t*I + (1+t)*J``."""
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")
    ring = I.ring
    idx = _index(ring)
    n = len(ring.variables)
    t = tuple([0] * n + [1])
    F = _relation_exps(ring, 1)
    for g in I.generators:
        F.append({tuple(map(add, e, t)) for e in _to_exps(g, idx, n, 1)})
    for g in J.generators:
        base = _to_exps(g, idx, n, 1)
        F.append(base ^ {tuple(map(add, e, t)) for e in base})
    rank = _elim_rank(_ring_rank(ring))
    G = buchberger(F, rank)
    kept = [_from_exps({e[:-1] for e in terms}, ring.variables)
            for lead, terms in G if lead[-1] == 0]
    return Ideal(ring, tuple(kept))


def check_same_ring(*ideals: Ideal) -> RingPresentation:
    rings = {I.ring for I in ideals}
    if len(rings) != 1:
        raise RingMismatchError("ideals live in different rings")
    return rings.pop()


__all__ = ["groebner_basis", "normal_form", "ideal_member", "radical_member", "contains",
           "same_ideal", "intersection", "buchberger", "AlgebraError"]
