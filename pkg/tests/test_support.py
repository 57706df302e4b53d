import csv
import io
import random

import pytest

from ttsteenrod import (AlgebraError, Ideal, Poly, RingMismatchError, coaction_table,
                        d_limit_ring, enumerate_monomial_invariant_primes, ext_of_elementary, h,
                        koszul, lattice_ops, make_E, make_truncation, sharp, spc_map_res,
                        star_retract, support, support_of_ideal, thick_subset, vinv_subset)
from ttsteenrod.groebner import same_ideal
from ttsteenrod.support import (InvarianceError, KoszulObject, intersection, invariant_primes,
                                same_support, to_csv, to_dot, union)

from helpers import P, hpoly, ideal

TR = make_truncation(3, 24, 4)
RING = d_limit_ring(TR)
TABLE = coaction_table(RING)


def V(*gens, invariant=True):
    return support_of_ideal(RING, ideal(RING, *gens), invariant)


class TestKoszul:
    def test_unit_object(self):
        S = support(koszul(RING))
        assert S.ideal.is_zero()

    def test_single(self):
        assert same_ideal(support(koszul(RING, h(1, 0))).ideal, ideal(RING, hpoly(1, 0)))

    def test_invariant_sequence(self):
        X = koszul(RING, h(1, 0), h(2, 0), requires_invariance=True)
        S = support(X)
        assert S.invariant_mode
        assert same_ideal(S.ideal, ideal(RING, hpoly(1, 0), hpoly(2, 0)))

    def test_invariance_violation(self):
        with pytest.raises(InvarianceError) as err:
            support(koszul(RING, h(2, 0), requires_invariance=True))
        assert err.value.index == 0
        assert err.value.component == hpoly(1, 0)

    def test_ordering_by_homological_degree(self):
        X = koszul(RING, P(((1, 0), 2)), h(2, 1), h(1, 0))
        assert X.elements == (hpoly(1, 0), hpoly(2, 1), P(((1, 0), 2)))
        # equal bidegrees keep the caller's order
        a, b = P(((2, 0), 3)), P((3, 0), ((1, 0), 2))
        assert koszul(RING, a, b).elements == (a, b)
        assert koszul(RING, b, a).elements == (b, a)

    def test_inhomogeneous_rejected(self):
        with pytest.raises(AlgebraError):
            koszul(RING, hpoly(1, 0) + hpoly(2, 0))

    def test_product_structure(self):
        elems = [hpoly(1, 0), hpoly(2, 0), P((2, 1), (3, 0))]
        whole = support(KoszulObject(RING, tuple(elems), False))
        parts = [support(KoszulObject(RING, (f,), False)) for f in elems]
        acc = parts[0]
        for p in parts[1:]:
            acc = intersection(acc, p)
        assert same_support(whole, acc)


class TestVinv:
    def test_sharp_invariance(self):
        assert same_support(V(hpoly(2, 0)), V(hpoly(1, 0), hpoly(2, 0)))
        S = V(hpoly(3, 0))
        assert same_ideal(S.ideal, sharp(ideal(RING, hpoly(3, 0)), TABLE))

    def test_strict_inclusion(self):
        a, b = V(hpoly(1, 0), hpoly(2, 1)), V(hpoly(1, 0))
        assert vinv_subset(a, b)
        assert not vinv_subset(b, a)

    def test_whole_space(self):
        whole = V()
        for S in (V(hpoly(1, 0)), V(hpoly(3, 0)), V(Poly.one())):
            assert vinv_subset(S, whole)

    def test_plain_mode(self):
        # without invariance, V(h20) is strictly bigger than V(h10, h20)
        assert vinv_subset(V(hpoly(1, 0), hpoly(2, 0), invariant=False),
                           V(hpoly(2, 0), invariant=False))
        assert not vinv_subset(V(hpoly(2, 0), invariant=False),
                               V(hpoly(1, 0), hpoly(2, 0), invariant=False))

    def test_mode_mismatch(self):
        with pytest.raises(AlgebraError):
            vinv_subset(V(hpoly(1, 0)), V(hpoly(1, 0), invariant=False))

    def test_ring_mismatch(self):
        other = d_limit_ring(make_truncation(2))
        with pytest.raises(RingMismatchError):
            vinv_subset(V(hpoly(1, 0)), support_of_ideal(other, ideal(other, hpoly(1, 0))))


class TestLattice:
    def test_union_through_relation(self):
        u, i = lattice_ops(V(hpoly(1, 0)), V(hpoly(2, 1)))
        assert u.ideal.is_zero()
        assert same_support(u, V())
        assert same_support(i, V(hpoly(1, 0), hpoly(2, 1)))

    def test_union_with_empty(self):
        S = V(hpoly(1, 0), hpoly(2, 0))
        assert same_support(union(S, V(Poly.one())), S)
        assert same_support(intersection(S, V()), S)


@pytest.fixture(scope="module")
def records():
    return enumerate_monomial_invariant_primes(RING, TABLE)


class TestEnumeration:
    def _find(self, records, *gens):
        target = frozenset(gens)
        return next(r for r in records if r.variables == target)

    def test_examples(self, records):
        r = self._find(records, h(1, 0), h(2, 1), h(3, 2))
        assert r.is_prime and r.is_invariant
        r = self._find(records, h(2, 0))
        assert not r.is_invariant
        r = self._find(records, *RING.variables)
        assert r.is_prime and r.is_invariant

    def test_count_and_order(self, records):
        assert len(records) == 2 ** 6
        idx = {g: i for i, g in enumerate(RING.variables)}
        keys = [sorted(idx[g] for g in r.variables) for r in records]
        assert keys == sorted(keys)

    def test_flags_against_definitions(self, records):
        rel_sets = [set(r.generators) for r in RING.relations]
        for r in records:
            assert r.is_prime == all(rs & r.variables for rs in rel_sets)
            gens = [Poly.gen(g) for g in r.variables]
            closure = sharp(ideal(RING, *gens), TABLE)
            assert r.is_invariant == same_ideal(closure, ideal(RING, *gens))

    def test_guard(self):
        big = d_limit_ring(make_truncation(6))
        with pytest.raises(AlgebraError):
            enumerate_monomial_invariant_primes(big)

    def test_vinv_against_primes(self, records):
        pts = invariant_primes(records)
        for a in records:
            for b in records:
                S = support_of_ideal(RING, a.ideal)
                T = support_of_ideal(RING, b.ideal)
                brute = all(b.variables <= p.variables for p in pts if a.variables <= p.variables)
                assert vinv_subset(S, T) == brute

    def test_csv(self, records):
        rows = list(csv.reader(io.StringIO(to_csv(records))))
        assert rows[0] == ["variables", "is_prime", "is_invariant"]
        assert len(rows) == 65
        assert rows[1] == ["", "false", "true"]

    def test_dot(self, records):
        dot = to_dot(records)
        assert dot.startswith("digraph invariant_primes {")
        assert dot.count("[label=") == len(invariant_primes(records))


class TestRetract:
    def test_invariant_prime_fixed(self):
        p = ideal(RING, hpoly(1, 0), hpoly(2, 1))
        assert star_retract(p, TABLE, TR) == p

    def test_non_invariant_prime(self):
        p = ideal(RING, *(hpoly(t, s) for t, s in [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2)]))
        out = star_retract(p, TABLE, TR)
        # h(3,2) lies beyond internal degree 24, so only h(2,1) and h(3,1) are seen
        assert same_ideal(out, ideal(RING, hpoly(2, 1), hpoly(3, 1)))
        wide = make_truncation(3, 40, 4)
        wide_ring = d_limit_ring(wide)
        p2 = ideal(wide_ring, *(hpoly(t, s) for t, s in [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2)]))
        out2 = star_retract(p2, coaction_table(wide_ring), wide)
        assert same_ideal(out2, ideal(wide_ring, hpoly(2, 1), hpoly(3, 1), hpoly(3, 2)))

    def test_zero(self):
        assert star_retract(ideal(RING), TABLE, TR).is_zero()

    def test_idempotent(self):
        p = ideal(RING, hpoly(2, 0), hpoly(3, 0))
        once = star_retract(p, TABLE, TR)
        assert same_ideal(star_retract(once, TABLE, TR), once)


class TestThick:
    def test_examples(self):
        X = koszul(RING, h(1, 0), h(2, 0), requires_invariance=True)
        Y = koszul(RING, h(1, 0), requires_invariance=True)
        assert thick_subset(X, Y)
        assert not thick_subset(Y, X)
        assert thick_subset(X, X)

    def test_preorder_on_random_family(self):
        rng = random.Random(3)
        invariant_gens = [hpoly(1, 0), hpoly(2, 1), hpoly(3, 2), hpoly(3, 1)]
        family = []
        while len(family) < 12:
            k = rng.randint(0, 3)
            X = KoszulObject(RING, tuple(rng.sample(invariant_gens, k)), True)
            # h(3,1) needs h(2,1) earlier in the sequence
            if X.invariance_failure() is None:
                family.append(X)
        for X in family:
            assert thick_subset(X, X)
        for X in family:
            for Y in family:
                for Z in family:
                    if thick_subset(X, Y) and thick_subset(Y, Z):
                        assert thick_subset(X, Z)


class TestSpcMapRes:
    def test_E0(self):
        E = ext_of_elementary(make_E(0), TR)
        dead = [hpoly(2, 1), hpoly(3, 1), hpoly(3, 2)]
        p1 = spc_map_res(ideal(E, hpoly(1, 0)), RING, E)
        assert same_ideal(p1, ideal(RING, hpoly(1, 0), *dead))
        p0 = spc_map_res(ideal(E), RING, E)
        assert same_ideal(p0, ideal(RING, *dead))
        p2 = spc_map_res(ideal(E, hpoly(1, 0), hpoly(2, 0)), RING, E)
        assert not same_ideal(p1, p2)

    def test_record_input(self):
        E = ext_of_elementary(make_E(0), TR)
        rec = next(r for r in enumerate_monomial_invariant_primes(E)
                   if r.variables == frozenset({h(1, 0)}))
        assert rec.is_prime and rec.is_invariant
        out = spc_map_res(rec, RING)
        assert set(out.generators) == {hpoly(1, 0), hpoly(2, 1), hpoly(3, 1), hpoly(3, 2)}

    def test_needs_source(self):
        E = ext_of_elementary(make_E(0), TR)
        with pytest.raises(AlgebraError):
            spc_map_res(ideal(E, hpoly(1, 0)), RING)
        with pytest.raises(AlgebraError):
            spc_map_res(ideal(E, hpoly(1, 0)), E, E)


def test_equal_ideals_give_equal_supports():
    a = V(hpoly(2, 0), hpoly(1, 0))
    b = V(hpoly(1, 0), P(((2, 0), 1)), hpoly(2, 0))
    assert a == b
    assert a.ideal.generators == b.ideal.generators
