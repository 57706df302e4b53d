"""Shared builders and brute-force oracles for the test suite."""
from itertools import product

from ttsteenrod import Ideal, Monomial, Poly, h
from ttsteenrod.algebra import graded_basis
from ttsteenrod.linalg import in_span


def P(*pairs):
    """P((2,0), (1,0)) is h(2,0)*h(1,0); pass ((t,s), e) for powers."""
    m = {}
    for item in pairs:
        if isinstance(item[0], tuple):
            (t, s), e = item
        else:
            (t, s), e = item, 1
        m[h(t, s)] = m.get(h(t, s), 0) + e
    return Poly.mono(Monomial(m))


def hpoly(t, s):
    return Poly.gen(h(t, s))


def ideal(ring, *gens):
    return Ideal(ring.presentation, tuple(gens))


def span_member(f, I, tr):
    """Membership by spanning the bidegree piece of I with monomial multiples."""
    ring = I.ring
    f = ring.normal_form(f)
    if f.is_zero():
        return True
    d = f.bidegree
    if d is None:
        # homogeneous ideals: test each bidegree piece separately
        return all(span_member(Poly._from_set(x for x in f.terms if x.bidegree == dd), I, tr)
                   for dd in f.bidegrees())
    basis = graded_basis(ring, tr)
    target = basis[d]
    index = {m: k for k, m in enumerate(target)}
    vecs = []
    for g in I.generators:
        gd = g.bidegree
        q = (d[0] - gd[0], d[1] - gd[1])
        if q not in basis:
            continue
        for m in basis[q]:
            prod = ring.normal_form(g * m)
            vecs.append(sum(1 << index[x] for x in prod.terms))
    v = sum(1 << index[x] for x in f.terms)
    return in_span(v, vecs)


def all_vectors(monos):
    """Every nonzero GF(2) combination of the given monomials."""
    for bits in product((0, 1), repeat=len(monos)):
        if any(bits):
            yield Poly._from_set(m for m, b in zip(monos, bits) if b)
