"""Bigraded sparse polynomials over GF(2).

Generators are the Milnor generators ``xi(n)`` of the dual Steenrod algebra and
the Ext classes ``h(t,s)``.  A monomial is a sorted tuple of
``(generator, exponent)`` pairs and a polynomial is a frozenset of monomials
(every coefficient is 1, so addition is symmetric difference).

Monomial order: homological degree first, then total degree, then reverse
lexicographic with the generator enumeration ``h(1,0) < h(2,0) < h(2,1) <
h(3,0) < ...`` (and ``xi(1) < xi(2) < ...``).  Canonical printing lists terms
in descending order and factors from the largest generator down.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple


class AlgebraError(ValueError):
    """Base class for domain errors raised by the toolkit."""


class RingMismatchError(AlgebraError):
    pass


class TruncationError(AlgebraError):
    pass


class BiDegree(NamedTuple):
    homological: int
    internal: int

    def __add__(self, other):  # type: ignore[override]
        return BiDegree(self.homological + other[0], self.internal + other[1])

    def __sub__(self, other):
        return BiDegree(self.homological - other[0], self.internal - other[1])

    def __str__(self):
        return f"({self.homological},{self.internal})"


ZERO_DEGREE = BiDegree(0, 0)


class Generator(NamedTuple):
    """``xi(n)`` (kind ``"xi"``, t = n) or ``h(t,s)`` (kind ``"h"``)."""

    kind: str
    t: int
    s: int = 0

    @property
    def bidegree(self) -> BiDegree:
        return _gen_bidegree(self)

    def __str__(self):
        if self.kind == "xi":
            return f"xi({self.t})"
        return f"h({self.t},{self.s})"

    __repr__ = __str__


@lru_cache(maxsize=None)
def _gen_bidegree(g: Generator) -> BiDegree:
    if g.kind == "xi":
        return BiDegree(0, 2 ** g.t - 1)
    # h(t,s) is the class of xi_t^(2^s)
    return BiDegree(1, 2 ** g.s * (2 ** g.t - 1))


def xi(n: int) -> Generator:
    if n < 1:
        raise AlgebraError(f"xi({n}): index must be positive")
    return Generator("xi", n, 0)


def h(t: int, s: int) -> Generator:
    if t < 1 or not 0 <= s < t:
        raise AlgebraError(f"h({t},{s}): need 0 <= s < t")
    return Generator("h", t, s)


class Monomial(tuple):
    """Sorted tuple of ``(Generator, exponent)`` pairs; ``()`` is the unit."""

    __slots__ = ()

    def __new__(cls, pairs: Iterable[Tuple[Generator, int]] = ()):
        acc: Dict[Generator, int] = {}
        for g, e in (pairs.items() if isinstance(pairs, dict) else pairs):
            if e < 0:
                raise AlgebraError("negative exponent")
            if e:
                acc[g] = acc.get(g, 0) + e
        return tuple.__new__(cls, sorted(acc.items()))

    @classmethod
    def _raw(cls, pairs) -> "Monomial":
        return tuple.__new__(cls, pairs)

    @classmethod
    def of(cls, g: Generator, e: int = 1) -> "Monomial":
        return tuple.__new__(cls, ((g, e),)) if e else UNIT

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        if not self:
            return other
        if not other:
            return self
        acc = dict(self)
        for g, e in other:
            acc[g] = acc.get(g, 0) + e
        return tuple.__new__(Monomial, sorted(acc.items()))

    def __pow__(self, n: int) -> "Monomial":
        if n == 0:
            return UNIT
        return tuple.__new__(Monomial, tuple((g, e * n) for g, e in self))

    def divides(self, other: "Monomial") -> bool:
        d = dict(other)
        return all(d.get(g, 0) >= e for g, e in self)

    def exponent(self, g: Generator) -> int:
        for gg, e in self:
            if gg == g:
                return e
        return 0

    @property
    def generators(self) -> Tuple[Generator, ...]:
        return tuple(g for g, _ in self)

    @property
    def bidegree(self) -> BiDegree:
        return _mono_bidegree(self)

    @property
    def total_degree(self) -> int:
        return sum(e for _, e in self)

    def is_unit(self) -> bool:
        return not self

    def __str__(self):
        if not self:
            return "1"
        parts = []
        for g, e in reversed(self):
            parts.append(str(g) if e == 1 else f"{g}^{e}")
        return "*".join(parts)

    def __repr__(self):
        return f"Monomial({self})"


UNIT = tuple.__new__(Monomial, ())


@lru_cache(maxsize=1 << 16)
def _mono_bidegree(m: Monomial) -> BiDegree:
    hd = idg = 0
    for g, e in m:
        d = _gen_bidegree(g)
        hd += d[0] * e
        idg += d[1] * e
    return BiDegree(hd, idg)


def order_key(m: Monomial, variables: Sequence[Generator]) -> tuple:
    """Sort key realising the monomial order; larger key = larger monomial.

    ``variables`` must be sorted ascending and contain every generator of
    ``m``; the comparison restricted to any such list is the same.
    """
    d = dict(m)
    return (_mono_bidegree(m)[0], sum(d.values()), tuple(-d.get(v, 0) for v in variables))


def sort_monomials(monos: Iterable[Monomial], descending: bool = True) -> List[Monomial]:
    monos = list(monos)
    variables = sorted({g for m in monos for g, _ in m})
    return sorted(monos, key=lambda m: order_key(m, variables), reverse=descending)


def _toggle(acc: set, x) -> None:
    if x in acc:
        acc.remove(x)
    else:
        acc.add(x)


class Poly:
    """Polynomial over GF(2): a frozenset of monomials."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[Monomial] = ()):
        acc = set()
        for m in terms:
            if not isinstance(m, Monomial):
                m = Monomial(m)
            if m in acc:
                acc.remove(m)
            else:
                acc.add(m)
        self.terms = frozenset(acc)
        self._hash = None

    @classmethod
    def _from_set(cls, terms) -> "Poly":
        p = object.__new__(cls)
        p.terms = frozenset(terms)
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> "Poly":
        return cls._from_set(())

    @classmethod
    def one(cls) -> "Poly":
        return cls._from_set((UNIT,))

    @classmethod
    def gen(cls, g: Generator, e: int = 1) -> "Poly":
        return cls._from_set((Monomial.of(g, e),))

    @classmethod
    def mono(cls, m: Monomial) -> "Poly":
        return cls._from_set((m,))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other in (0, 1):
            other = Poly.one() if other else Poly.zero()
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __add__(self, other: "Poly") -> "Poly":
        return Poly._from_set(self.terms ^ other.terms)

    __sub__ = __add__
    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, Monomial):
            return Poly._from_set(m * other for m in self.terms)
        acc: set = set()
        for a in self.terms:
            for b in other.terms:
                _toggle(acc, a * b)
        return Poly._from_set(acc)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise AlgebraError("negative power")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base.square()
        return result

    def square(self) -> "Poly":
        # Frobenius: cross terms cancel in characteristic 2
        return Poly._from_set(m ** 2 for m in self.terms)

    def substitute(self, images: Dict[Generator, "Poly"]) -> "Poly":
        """Algebra map sending each generator in ``images`` to its image."""
        out: set = set()
        for m in self.terms:
            term = Poly.one()
            for g, e in m:
                term = term * (images[g] ** e if g in images else Poly.gen(g, e))
            out ^= term.terms
        return Poly._from_set(out)

    @property
    def generators(self) -> frozenset:
        return frozenset(g for m in self.terms for g, _ in m)

    def bidegrees(self) -> frozenset:
        return frozenset(m.bidegree for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    @property
    def bidegree(self) -> Optional[BiDegree]:
        """Common bidegree of a homogeneous nonzero poly, else None."""
        ds = self.bidegrees()
        return next(iter(ds)) if len(ds) == 1 else None

    def sorted_terms(self) -> List[Monomial]:
        return sort_monomials(self.terms)

    def leading_monomial(self) -> Monomial:
        return self.sorted_terms()[0]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(str(m) for m in self.sorted_terms())

    def __repr__(self):
        return f"Poly({self})"


class TensorPoly:
    """Element of a tensor product: a GF(2)-set of tuples of monomials.

    Arity 2 is the usual ``left (x) right``; higher arities appear when
    checking coassociativity.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[Tuple[Monomial, ...]] = ()):
        acc: set = set()
        for t in terms:
            _toggle(acc, tuple(m if isinstance(m, Monomial) else Monomial(m) for m in t))
        self.terms = frozenset(acc)
        self._hash = None

    @classmethod
    def _from_set(cls, terms) -> "TensorPoly":
        p = object.__new__(cls)
        p.terms = frozenset(terms)
        p._hash = None
        return p

    @classmethod
    def one(cls, arity: int = 2) -> "TensorPoly":
        return cls._from_set(((UNIT,) * arity,))

    @classmethod
    def pure(cls, *factors: Poly) -> "TensorPoly":
        """``f_1 (x) f_2 (x) ...`` expanded into monomial tuples."""
        acc: set = {()}
        for f in factors:
            acc = {t + (m,) for t in acc for m in f.terms}
        return cls._from_set(acc)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        return isinstance(other, TensorPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        return TensorPoly._from_set(self.terms ^ other.terms)

    def __mul__(self, other: "TensorPoly") -> "TensorPoly":
        acc: set = set()
        for a in self.terms:
            for b in other.terms:
                _toggle(acc, tuple(x * y for x, y in zip(a, b)))
        return TensorPoly._from_set(acc)

    def __pow__(self, n: int) -> "TensorPoly":
        arity = len(next(iter(self.terms))) if self.terms else 2
        result = TensorPoly.one(arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = TensorPoly._from_set(tuple(m ** 2 for m in t) for t in base.terms)
        return result

    def map_factors(self, *maps) -> "TensorPoly":
        """Apply one Monomial -> (Poly | TensorPoly) map per tensor factor.

        ``None`` leaves a factor unchanged.  A map returning a TensorPoly
        splices its factors in place, which is how ``(Delta (x) id)`` is built.
        """
        out: set = set()
        for t in self.terms:
            acc = {()}
            for m, f in zip(t, maps):
                if f is None:
                    acc = {a + (m,) for a in acc}
                    continue
                img = f(m)
                if isinstance(img, TensorPoly):
                    acc = {a + b for a in acc for b in img.terms}
                else:
                    acc = {a + (b,) for a in acc for b in img.terms}
            for a in acc:
                _toggle(out, a)
        return TensorPoly._from_set(out)

    def bidegrees(self) -> frozenset:
        out = set()
        for t in self.terms:
            d = ZERO_DEGREE
            for m in t:
                d = d + m.bidegree
            out.add(d)
        return frozenset(out)

    def components(self) -> Dict[Monomial, Poly]:
        """Group an arity-2 element by left monomial: ``{left: right poly}``."""
        acc: Dict[Monomial, set] = {}
        for left, right in self.terms:
            acc.setdefault(left, set()).add(right)
        return {k: Poly._from_set(v) for k, v in acc.items()}

    def sorted_terms(self) -> List[Tuple[Monomial, ...]]:
        if not self.terms:
            return []
        arity = len(next(iter(self.terms)))
        var_lists = [sorted({g for t in self.terms for g, _ in t[k]}) for k in range(arity)]
        return sorted(self.terms,
                      key=lambda t: tuple(order_key(m, var_lists[k]) for k, m in enumerate(t)),
                      reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(" (x) ".join(str(m) for m in t) for t in self.sorted_terms())

    def __repr__(self):
        return f"TensorPoly({self})"


@dataclass(frozen=True)
class Truncation:
    max_t: int
    max_internal: int
    max_homological: int

    def __post_init__(self):
        for name in ("max_t", "max_internal", "max_homological"):
            if getattr(self, name) < 1:
                raise TruncationError(f"{name} must be positive")

    def contains(self, d: BiDegree) -> bool:
        return 0 <= d[0] <= self.max_homological and 0 <= d[1] <= self.max_internal


@dataclass(frozen=True)
class RingPresentation:
    """``F2[variables] / (relations)`` with monomial relations only."""

    variables: Tuple[Generator, ...]
    relations: Tuple[Monomial, ...] = ()
    order: str = "hom-grevlex"

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(sorted(set(self.variables))))
        varset = set(self.variables)
        rels = []
        for r in self.relations:
            r = r if isinstance(r, Monomial) else Monomial(r)
            if not r or not set(r.generators) <= varset:
                raise AlgebraError(f"relation {r} is not a monomial in the ring variables")
            rels.append(r)
        object.__setattr__(self, "relations", tuple(sorted(set(rels))))

    @property
    def varset(self) -> frozenset:
        return _varset(self)

    def check(self, p: Poly) -> None:
        bad = p.generators - self.varset
        if bad:
            g = min(bad)
            raise AlgebraError(f"generator {g} is not a variable of this ring")

    def is_normal(self, m: Monomial) -> bool:
        return not any(r.divides(m) for r in self.relations)

    def normal_form(self, p: Poly) -> Poly:
        """Drop every term divisible by a relation monomial."""
        self.check(p)
        if not self.relations:
            return p
        return Poly._from_set(m for m in p.terms if self.is_normal(m))

    def mul(self, a: Poly, b: Poly) -> Poly:
        return poly_mul(a, b, self)


@lru_cache(maxsize=None)
def _varset(ring: RingPresentation) -> frozenset:
    return frozenset(ring.variables)


def poly_mul(a: Poly, b: Poly, ring: RingPresentation) -> Poly:
    """Product in ``ring``: free product, then drop relation multiples."""
    ring.check(a)
    ring.check(b)
    return ring.normal_form(a * b)


@dataclass(frozen=True)
class Ideal:
    """Finitely generated ideal of a :class:`RingPresentation`.

    Generators are stored in normal form with zeros and repeats removed.
    Inhomogeneous generators are accepted; operations that work bidegree by
    bidegree check :attr:`is_homogeneous` themselves.
    """

    ring: RingPresentation
    generators: Tuple[Poly, ...] = ()

    def __post_init__(self):
        gens = []
        seen = set()
        for g in self.generators:
            if not isinstance(g, Poly):
                raise AlgebraError("ideal generators must be Poly")
            g = self.ring.normal_form(g)
            if g and g not in seen:
                seen.add(g)
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def of(cls, ring: RingPresentation, *gens) -> "Ideal":
        return cls(ring, tuple(Poly.gen(g) if isinstance(g, Generator) else g for g in gens))

    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def require_homogeneous(self) -> None:
        for g in self.generators:
            if not g.is_homogeneous():
                raise AlgebraError(f"generator {g} is not homogeneous")

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError("ideals live in different rings")
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError("ideals live in different rings")
        return Ideal(self.ring, tuple(self.ring.mul(a, b)
                                      for a in self.generators for b in other.generators))

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def unit_ideal(ring: RingPresentation) -> Ideal:
    return Ideal(ring, (Poly.one(),))


def variable_ideal(ring: RingPresentation, gens: Iterable[Generator]) -> Ideal:
    return Ideal(ring, tuple(Poly.gen(g) for g in sorted(gens)))


def _enumerate(variables: Sequence[Generator], relations: Sequence[Monomial],
               max_hom: int, max_int: int) -> Dict[BiDegree, List[Monomial]]:
    """All normal monomials with bidegree inside the box, grouped by bidegree."""
    degs = [g.bidegree for g in variables]
    out: Dict[BiDegree, List[Monomial]] = {}
    n = len(variables)

    def rec(i: int, chosen: list, hd: int, idg: int):
        if i == n:
            m = Monomial._raw(tuple(chosen))
            out.setdefault(BiDegree(hd, idg), []).append(m)
            return
        g = variables[i]
        dh, di = degs[i]
        rec(i + 1, chosen, hd, idg)
        e = 1
        while hd + dh * e <= max_hom and idg + di * e <= max_int:
            if dh == 0 and di == 0:
                raise TruncationError("degree-zero generator cannot be enumerated")
            cand = chosen + [(g, e)]
            m = Monomial._raw(tuple(cand))
            if any(r.divides(m) for r in relations):
                break
            rec(i + 1, cand, hd + dh * e, idg + di * e)
            e += 1

    rec(0, [], 0, 0)
    return out


@lru_cache(maxsize=256)
def _graded_basis(ring: RingPresentation, max_hom: int, max_int: int) -> Dict[BiDegree, Tuple[Monomial, ...]]:
    table = _enumerate(ring.variables, ring.relations, max_hom, max_int)
    return {d: tuple(sort_monomials(ms)) for d, ms in table.items()}


def bidegree_basis(ring: RingPresentation, d: BiDegree, tr: Truncation) -> List[Monomial]:
    """Normal-form monomials of bidegree ``d``, in descending monomial order."""
    d = BiDegree(*d)
    if not tr.contains(d):
        raise TruncationError(f"bidegree {d} outside truncation")
    return list(_graded_basis(ring, tr.max_homological, tr.max_internal).get(d, ()))


def graded_basis(ring: RingPresentation, tr: Truncation) -> Dict[BiDegree, Tuple[Monomial, ...]]:
    """Every nonempty bidegree basis inside ``tr``, keyed by bidegree (sorted)."""
    table = _graded_basis(ring, tr.max_homological, tr.max_internal)
    return {d: table[d] for d in sorted(table)}
