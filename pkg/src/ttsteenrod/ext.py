"""Ext rings (up to F-isomorphism) for elementary quotients and for D.

``h(t,s)`` always names the class of ``xi_t^(2^s)``, so the restriction map
from the D-limit ring to an elementary quotient keeps a generator or kills it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from .algebra import (AlgebraError, BiDegree, Generator, Ideal, Monomial, Poly, RingPresentation,
                      Truncation, bidegree_basis, graded_basis, h)
from .steenrod import NotElementaryError, QuotientHopf, is_elementary, make_E_i, parse_profile

DEFAULT_MAX_INTERNAL = 40
DEFAULT_MAX_HOMOLOGICAL = 10


def d_limit_generators(max_t: int) -> Tuple[Generator, ...]:
    return tuple(h(t, s) for t in range(1, max_t + 1) for s in range(t))


def d_limit_relations(max_t: int) -> Tuple[Monomial, ...]:
    """``h(t,s) h(v,u)`` for every ordered pair of generators with t <= u."""
    gens = d_limit_generators(max_t)
    rels = set()
    for a in gens:
        for b in gens:
            if a != b and a.t <= b.s:
                rels.add(Monomial({a: 1, b: 1}))
    return tuple(sorted(rels))


@dataclass(frozen=True)
class ExtRing:
    flavor: str  # "elementary" or "d-limit"
    truncation: Truncation
    quotient: Optional[QuotientHopf] = None
    presentation: RingPresentation = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        max_t = self.truncation.max_t
        if self.flavor == "d-limit":
            if self.quotient is not None:
                raise AlgebraError("the D-limit ring takes no quotient")
            pres = RingPresentation(d_limit_generators(max_t), d_limit_relations(max_t))
        elif self.flavor == "elementary":
            q = self.quotient
            if q is None or not is_elementary(q):
                raise NotElementaryError(f"{q} is not an elementary quotient")
            gens = tuple(h(t, s) for t in range(1, max_t + 1)
                         for s in range(int(min(q.profile(t), max_t + 1))) if q.alive(t, s))
            pres = RingPresentation(gens, ())
        else:
            raise AlgebraError(f"unknown ring flavor {self.flavor!r}")
        object.__setattr__(self, "presentation", pres)

    @property
    def variables(self) -> Tuple[Generator, ...]:
        return self.presentation.variables

    @property
    def relations(self) -> Tuple[Monomial, ...]:
        return self.presentation.relations

    def poly(self, p: Poly) -> Poly:
        return self.presentation.normal_form(p)

    def ideal(self, *gens) -> Ideal:
        return Ideal.of(self.presentation, *gens)

    def basis(self, d: BiDegree):
        return bidegree_basis(self.presentation, d, self.truncation)

    def graded_basis(self):
        return graded_basis(self.presentation, self.truncation)

    def descriptor(self) -> dict:
        if self.flavor == "d-limit":
            return {"flavor": "d-limit", "max_t": self.truncation.max_t}
        return {"flavor": "elementary", "profile": str(self.quotient.profile),
                "max_t": self.truncation.max_t}

    def __str__(self):
        if self.flavor == "d-limit":
            return f"Ext_D (limit ring, t <= {self.truncation.max_t})"
        return f"Ext_{self.quotient} (t <= {self.truncation.max_t})"


def make_truncation(max_t: int, max_internal: int = DEFAULT_MAX_INTERNAL,
                    max_homological: int = DEFAULT_MAX_HOMOLOGICAL) -> Truncation:
    return Truncation(max_t, max_internal, max_homological)


def d_limit_ring(tr: Truncation) -> ExtRing:
    return ExtRing("d-limit", tr)


def ext_of_elementary(q: QuotientHopf, tr: Truncation) -> ExtRing:
    return ExtRing("elementary", tr, q)


def ring_from_descriptor(desc: Mapping, max_internal: int = DEFAULT_MAX_INTERNAL,
                         max_homological: int = DEFAULT_MAX_HOMOLOGICAL) -> ExtRing:
    """Build a ring from ``{"flavor": ..., "max_t": N[, "profile": STR]}``."""
    allowed = {"flavor", "max_t", "profile"}
    extra = set(desc) - allowed
    if extra:
        raise AlgebraError(f"unknown ring descriptor fields: {sorted(extra)}")
    tr = Truncation(int(desc["max_t"]), max_internal, max_homological)
    flavor = desc.get("flavor")
    if flavor == "d-limit":
        if "profile" in desc:
            raise AlgebraError("the d-limit ring takes no profile")
        return d_limit_ring(tr)
    if flavor == "elementary":
        if "profile" not in desc:
            raise AlgebraError("elementary rings need a profile")
        return ext_of_elementary(QuotientHopf(parse_profile(desc["profile"])), tr)
    raise AlgebraError(f"unknown ring flavor {flavor!r}")


@dataclass(frozen=True)
class RingMap:
    """Algebra map sending each source variable to a target variable or to 0."""

    source: ExtRing
    target: ExtRing
    rule: Tuple[Tuple[Generator, Optional[Generator]], ...]

    def __post_init__(self):
        rule = dict(self.rule)
        if set(rule) != set(self.source.variables):
            raise AlgebraError("ring map must specify every source variable")
        tvars = set(self.target.variables)
        for g, img in rule.items():
            if img is not None and img not in tvars:
                raise AlgebraError(f"{g} maps to {img}, which is not a target variable")
            if img is not None and img.bidegree != g.bidegree:
                raise AlgebraError(f"{g} -> {img} does not preserve bidegree")
        for r in self.source.relations:
            img = self._apply_monomial(r, rule)
            if img is not None and self.target.presentation.is_normal(img):
                raise AlgebraError(f"relation {r} maps to the nonzero element {img}")

    @staticmethod
    def _apply_monomial(m: Monomial, rule: Dict) -> Optional[Monomial]:
        pairs = []
        for g, e in m:
            img = rule[g]
            if img is None:
                return None
            pairs.append((img, e))
        return Monomial(pairs)

    def __call__(self, p: Poly) -> Poly:
        self.source.presentation.check(p)
        rule = dict(self.rule)
        out: set = set()
        for m in p.terms:
            img = self._apply_monomial(m, rule)
            if img is not None:
                out ^= {img}
        return self.target.presentation.normal_form(Poly._from_set(out))

    def killed(self) -> Tuple[Generator, ...]:
        return tuple(g for g, img in self.rule if img is None)


def restriction(src: ExtRing, q: QuotientHopf) -> RingMap:
    """``res_{D,E}``: keep h(t,s) when xi_t^(2^s) survives in ``q``, else kill it."""
    if src.flavor != "d-limit":
        raise AlgebraError("restriction starts from the D-limit ring")
    target = ext_of_elementary(q, src.truncation)
    alive = set(target.variables)
    rule = tuple((g, g if g in alive else None) for g in src.variables)
    return RingMap(src, target, rule)


def direct_limit_consistency(E: QuotientHopf, i: int, j: int, tr: Truncation) -> bool:
    """Generators of Ext_{E_i} sit inside those of Ext_{E_j}, and the E_k exhaust E."""
    if i > j:
        raise AlgebraError("need i <= j")
    gi = set(ext_of_elementary(make_E_i(E, i), tr).variables)
    gj = set(ext_of_elementary(make_E_i(E, j), tr).variables)
    if not gi <= gj:
        return False
    full = set(ext_of_elementary(E, tr).variables)
    union = set()
    for k in range(tr.max_t + 1):
        union |= set(ext_of_elementary(make_E_i(E, k), tr).variables)
    return union == full
