"""The mod 2 dual Steenrod algebra F2[xi_1, xi_2, ...] and its quotient Hopf algebras.

Quotients are described by profile functions ``(n_1, n_2, ...)`` with
entries in ``Z>=0 cup {inf}``: the quotient is ``A / (xi_i^(2^n_i))``.  A
profile is a finite prefix followed by one of three tail rules, which covers
A itself, every E(m), D and their finite truncations E_i.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple, Union

from .algebra import UNIT, AlgebraError, Monomial, Poly, TensorPoly, xi

INF = math.inf
Entry = Union[int, float]


class NotElementaryError(AlgebraError):
    pass


class ProfileSyntaxError(AlgebraError):
    pass


@dataclass(frozen=True)
class Tail:
    kind: str  # "inf", "const" or "slope1"
    value: Entry = 0

    def __post_init__(self):
        if self.kind not in ("inf", "const", "slope1"):
            raise AlgebraError(f"unknown tail rule {self.kind!r}")
        if self.kind == "const" and self.value != INF and (self.value < 0 or self.value != int(self.value)):
            raise AlgebraError("constant tail must be a nonnegative integer or inf")
        if self.kind == "slope1" and self.value != int(self.value):
            raise AlgebraError("slope1 offset must be an integer")

    def at(self, i: int) -> Entry:
        if self.kind == "inf":
            return INF
        if self.kind == "const":
            return self.value
        return max(0, i + int(self.value))


ALL_INFINITY = Tail("inf")


def _fmt(n: Entry) -> str:
    return "inf" if n == INF else str(int(n))


@dataclass(frozen=True)
class ProfileFunction:
    prefix: Tuple[Entry, ...] = ()
    tail: Tail = ALL_INFINITY

    def __post_init__(self):
        pre = []
        for n in self.prefix:
            if n != INF and (n < 0 or n != int(n)):
                raise AlgebraError(f"profile entry {n!r} is not in Z>=0 or inf")
            pre.append(INF if n == INF else int(n))
        object.__setattr__(self, "prefix", tuple(pre))

    def __call__(self, i: int) -> Entry:
        if i < 1:
            raise AlgebraError("profile functions are indexed from 1")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.tail.at(i)

    def values(self, upto: int) -> List[Entry]:
        return [self(i) for i in range(1, upto + 1)]

    def leading_zeros(self) -> Optional[int]:
        """Number m of leading zero entries; None when every entry is 0."""
        for k, n in enumerate(self.prefix):
            if n != 0:
                return k
        P = len(self.prefix)
        t = self.tail
        if t.kind == "const" and t.value == 0:
            return None
        if t.kind == "slope1":
            # max(0, i + offset) vanishes exactly for i <= -offset
            return max(P, -int(t.value))
        return P

    def __str__(self):
        pre = ",".join(_fmt(n) for n in self.prefix)
        t = self.tail
        if t.kind == "inf":
            tail = "inf"
        elif t.kind == "const":
            tail = f"const:{_fmt(t.value)}"
        else:
            tail = f"slope1:{int(t.value)}"
        return f"prefix=[{pre}];tail={tail}"


_PROFILE_RE = re.compile(
    r"^\s*prefix\s*=\s*\[(?P<prefix>[^\]]*)\]\s*;\s*tail\s*=\s*"
    r"(?P<tail>inf|const\s*:\s*(?:inf|\d+)|slope1\s*:\s*[+-]?\d+)\s*$")


def _entry(tok: str) -> Entry:
    tok = tok.strip()
    if tok == "inf":
        return INF
    if not tok.isdigit():
        raise ProfileSyntaxError(f"bad profile entry {tok!r}")
    return int(tok)


def parse_profile(text: str) -> ProfileFunction:
    """Parse ``prefix=[n1,n2,...];tail=inf|const:c|slope1:offset``."""
    m = _PROFILE_RE.match(text)
    if not m:
        raise ProfileSyntaxError(f"cannot parse profile {text!r}")
    raw = m.group("prefix").strip()
    prefix = tuple(_entry(tok) for tok in raw.split(",")) if raw else ()
    tail_txt = re.sub(r"\s+", "", m.group("tail"))
    if tail_txt == "inf":
        tail = ALL_INFINITY
    else:
        kind, val = tail_txt.split(":")
        tail = Tail(kind, _entry(val) if kind == "const" else int(val))
    return ProfileFunction(prefix, tail)


def admissibility_violation(p: ProfileFunction, check_bound: int = 1) -> Optional[Tuple[int, int]]:
    """First pair (i, j) breaking ``n_i <= n_{i+j} + j or n_j <= n_{i+j}``.

    Pairs with i or j beyond the prefix always pass for the three tail rules
    (the tail entry at i+j dominates the tail entry at i or j), so scanning
    ``i, j <= max(check_bound, len(prefix))`` decides the whole sequence.
    """
    bound = max(check_bound, len(p.prefix))
    for i in range(1, bound + 1):
        ni = p(i)
        for j in range(1, bound + 1):
            nij = p(i + j)
            if not (ni <= nij + j or p(j) <= nij):
                return (i, j)
    return None


def profile_admissible(p: ProfileFunction, check_bound: int = 1) -> bool:
    if check_bound < 1:
        raise AlgebraError("check_bound must be positive")
    return admissibility_violation(p, check_bound) is None


@dataclass(frozen=True)
class QuotientHopf:
    """``A / (xi_1^(2^n_1), xi_2^(2^n_2), ...)`` for an admissible profile."""

    profile: ProfileFunction
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not profile_admissible(self.profile, 8):
            raise AlgebraError(f"profile {self.profile} is not admissible")

    def alive(self, t: int, s: int) -> bool:
        """Whether xi_t^(2^s) survives in the quotient."""
        return s < self.profile(t)

    def exponent_bound(self, i: int) -> Entry:
        n = self.profile(i)
        return INF if n == INF else 2 ** n

    def reduce_monomial(self, m: Monomial) -> bool:
        """True iff ``m`` is nonzero in the quotient."""
        for g, e in m:
            if g.kind != "xi" or e >= self.exponent_bound(g.t):
                return False
        return True

    def reduce(self, p: Poly) -> Poly:
        _require_xi(p)
        return Poly._from_set(m for m in p.terms if self.reduce_monomial(m))

    def basis(self, degree: int) -> List[Monomial]:
        """Monomial basis in the given internal degree."""
        return [m for m in xi_monomials(degree) if self.reduce_monomial(m)]

    def dimension(self, degree: int) -> int:
        return len(self.basis(degree))

    def __str__(self):
        return self.name or str(self.profile)


def make_A() -> QuotientHopf:
    return QuotientHopf(ProfileFunction((), ALL_INFINITY), "A")


def make_E(m: int) -> QuotientHopf:
    if m < 0:
        raise AlgebraError("E(m) needs m >= 0")
    return QuotientHopf(ProfileFunction((0,) * m, Tail("const", m + 1)), f"E({m})")


def make_D() -> QuotientHopf:
    return QuotientHopf(ProfileFunction((), Tail("slope1", 0)), "D")


def is_elementary(q: QuotientHopf, check_bound: int = 8) -> bool:
    """Admissible and pointwise below E(m), m = number of leading zeros."""
    p = q.profile
    if not profile_admissible(p, check_bound):
        return False
    m = p.leading_zeros()
    if m is None:
        return True
    for i in range(m + 1, len(p.prefix) + 1):
        if p(i) > m + 1:
            return False
    t = p.tail
    if t.kind == "inf" or t.kind == "slope1":
        return False
    return t.value <= m + 1


def make_E_i(E: QuotientHopf, i: int) -> QuotientHopf:
    """The finite quotient keeping the first ``i`` nonzero columns of ``E``."""
    if i < 0:
        raise AlgebraError("E_i needs i >= 0")
    if not is_elementary(E):
        raise NotElementaryError(f"{E} is not elementary")
    m = E.profile.leading_zeros()
    if m is None:
        return E
    prefix = tuple(E.profile(k) for k in range(1, m + i + 1))
    name = f"{E.name}_{i}" if E.name else ""
    return QuotientHopf(ProfileFunction(prefix, Tail("const", 0)), name)


def in_d_cotensor(p: Poly) -> bool:
    """Membership in the subalgebra F2[xi_1^2, xi_2^4, xi_3^8, ...]."""
    _require_xi(p)
    return all(e % (2 ** g.t) == 0 for m in p.terms for g, e in m)


# -- Hopf structure --------------------------------------------------------

def _require_xi(p: Poly) -> None:
    for g in p.generators:
        if g.kind != "xi":
            raise AlgebraError(f"{g} is not a dual Steenrod generator")


def xi_monomials(degree: int, max_index: Optional[int] = None) -> List[Monomial]:
    """All monomials in the xi's of the given internal degree."""
    if degree < 0:
        return []
    top = 1
    while 2 ** (top + 1) - 1 <= degree:
        top += 1
    if max_index is not None:
        top = min(top, max_index)
    out: List[Monomial] = []

    def rec(k: int, rest: int, chosen: list):
        if rest == 0:
            out.append(Monomial._raw(tuple(reversed(chosen))))
            return
        if k == 0:
            return
        d = 2 ** k - 1
        for e in range(rest // d, -1, -1):
            rec(k - 1, rest - e * d, chosen + [(xi(k), e)] if e else chosen)

    rec(top, degree, [])
    return out


def xi_power(n: int, e: int) -> Monomial:
    """``xi_n^e`` with ``xi_0 = 1``."""
    return UNIT if n == 0 or e == 0 else Monomial.of(xi(n), e)


@lru_cache(maxsize=None)
def coproduct_generator(n: int) -> TensorPoly:
    """``Delta(xi_n) = sum_i xi_{n-i}^(2^i) (x) xi_i``."""
    if n == 0:
        return TensorPoly.one()
    return TensorPoly((xi_power(n - i, 2 ** i), xi_power(i, 1)) for i in range(n + 1))


@lru_cache(maxsize=1 << 14)
def _coproduct_monomial(m: Monomial) -> TensorPoly:
    out = TensorPoly.one()
    for g, e in m:
        out = out * coproduct_generator(g.t) ** e
    return out


def coproduct(p: Poly, quotient: Optional[QuotientHopf] = None) -> TensorPoly:
    _require_xi(p)
    acc: set = set()
    for m in p.terms:
        acc ^= _coproduct_monomial(m).terms
    if quotient is not None:
        acc = {t for t in acc if all(quotient.reduce_monomial(x) for x in t)}
    return TensorPoly._from_set(acc)


def coproduct_monomial(m: Monomial) -> TensorPoly:
    return _coproduct_monomial(m)


def counit(p: Poly) -> Poly:
    """Projection onto internal degree 0."""
    return Poly.one() if UNIT in p.terms else Poly.zero()


@lru_cache(maxsize=None)
def conjugate(n: int) -> Poly:
    """zeta_n: the antipode of xi_n, from ``sum_i xi_{n-i}^(2^i) zeta_i = 0``."""
    if n < 0:
        raise AlgebraError("conjugate needs n >= 0")
    if n == 0:
        return Poly.one()
    acc = Poly.zero()
    for i in range(n):
        acc = acc + conjugate(i) * xi_power(n - i, 2 ** i)
    return acc


def conjugate_poly(p: Poly) -> Poly:
    """Apply the antipode (an algebra map, A being commutative)."""
    _require_xi(p)
    return p.substitute({g: conjugate(g.t) for g in p.generators})


def antipode_defect(n: int) -> Poly:
    """``sum_{i=0}^n xi_{n-i}^(2^i) zeta_i``; zero for every n >= 1."""
    acc = Poly.zero()
    for i in range(n + 1):
        acc = acc + conjugate(i) * xi_power(n - i, 2 ** i)
    return acc


def iter_xi_monomials(max_degree: int) -> Iterator[Monomial]:
    for d in range(max_degree + 1):
        yield from xi_monomials(d)


def xi_poly(exponents: Dict[int, int]) -> Poly:
    """Convenience: ``{n: e}`` -> the monomial prod xi_n^e as a Poly."""
    return Poly.mono(Monomial({xi(n): e for n, e in exponents.items()}))
