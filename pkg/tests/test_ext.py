import pytest

from ttsteenrod import (AlgebraError, Poly, RingMap, d_limit_ring, ext_of_elementary, h,
                        make_D, make_E, make_truncation, restriction, ring_from_descriptor)
from ttsteenrod.ext import d_limit_generators, d_limit_relations, direct_limit_consistency
from ttsteenrod.steenrod import NotElementaryError, make_E_i

from helpers import P, hpoly


def _zero_pairs(max_t):
    gens = [(t, s) for t in range(1, max_t + 1) for s in range(t)]
    return {frozenset([a, b]) for a in gens for b in gens if a != b and a[0] <= b[1]}


class TestDLimit:
    def test_max_t_3(self):
        ring = d_limit_ring(make_truncation(3))
        assert [str(g) for g in ring.variables] == ["h(1,0)", "h(2,0)", "h(2,1)", "h(3,0)",
                                                    "h(3,1)", "h(3,2)"]
        rels = {frozenset((g.t, g.s) for g in r.generators) for r in ring.relations}
        assert rels == {frozenset({(1, 0), (2, 1)}), frozenset({(1, 0), (3, 1)}),
                        frozenset({(1, 0), (3, 2)}), frozenset({(2, 0), (3, 2)}),
                        frozenset({(2, 1), (3, 2)})}

    @pytest.mark.parametrize("max_t", range(1, 7))
    def test_relations_match_pair_enumeration(self, max_t):
        rels = {frozenset((g.t, g.s) for g in r.generators) for r in d_limit_relations(max_t)}
        assert rels == _zero_pairs(max_t)
        assert len(d_limit_generators(max_t)) == max_t * (max_t + 1) // 2

    def test_max_t_4_counts(self):
        ring = d_limit_ring(make_truncation(4))
        assert len(ring.variables) == 10
        assert len(ring.relations) == 15

    def test_no_squares_among_relations(self):
        assert all(len(r) == 2 for r in d_limit_relations(5))


class TestElementary:
    def test_E0_generators(self):
        ring = ext_of_elementary(make_E(0), make_truncation(4))
        assert ring.variables == (h(1, 0), h(2, 0), h(3, 0), h(4, 0))
        assert ring.relations == ()

    def test_E1_generators(self):
        ring = ext_of_elementary(make_E(1), make_truncation(3))
        assert set(ring.variables) == {h(2, 0), h(2, 1), h(3, 0), h(3, 1)}

    def test_E_i_generators(self):
        ring = ext_of_elementary(make_E_i(make_E(0), 2), make_truncation(4))
        assert ring.variables == (h(1, 0), h(2, 0))

    def test_not_elementary(self):
        with pytest.raises(NotElementaryError):
            ext_of_elementary(make_D(), make_truncation(3))

    def test_direct_limit(self):
        tr = make_truncation(4)
        for m in range(3):
            for i in range(3):
                assert direct_limit_consistency(make_E(m), i, i + 1, tr)


class TestRestriction:
    def test_E0_kills_positive_s(self):
        tr = make_truncation(3)
        res = restriction(d_limit_ring(tr), make_E(0))
        assert set(res.killed()) == {h(2, 1), h(3, 1), h(3, 2)}
        assert res(hpoly(2, 0) + hpoly(2, 1)) == hpoly(2, 0)
        assert res(P((1, 0), (2, 0))) == P((1, 0), (2, 0))

    def test_relations_map_to_zero(self):
        # every relation h_ts h_vu (t <= u) involves some u >= 1, which dies in E(0)
        tr = make_truncation(4)
        res = restriction(d_limit_ring(tr), make_E(0))
        for r in d_limit_ring(tr).relations:
            assert res(Poly.mono(r)).is_zero()

    def test_invalid_map(self):
        tr = make_truncation(2)
        src = d_limit_ring(tr)
        tgt = ext_of_elementary(make_E(0), tr)
        with pytest.raises(AlgebraError):
            RingMap(src, tgt, ((h(1, 0), h(2, 0)), (h(2, 0), h(2, 0)), (h(2, 1), None)))
        with pytest.raises(AlgebraError):
            RingMap(src, tgt, ((h(1, 0), h(1, 0)),))

    def test_identity_map(self):
        src = d_limit_ring(make_truncation(3))
        ident = RingMap(src, src, tuple((g, g) for g in src.variables))
        p = P((1, 0), (2, 0)) + hpoly(3, 1)
        assert ident(p) == p
        assert ident.killed() == ()


class TestDescriptor:
    def test_round_trip(self):
        ring = ring_from_descriptor({"flavor": "elementary", "max_t": 3,
                                     "profile": "prefix=[0];tail=const:2"})
        assert ring.descriptor() == {"flavor": "elementary", "max_t": 3,
                                     "profile": "prefix=[0];tail=const:2"}
        assert ring_from_descriptor(ring.descriptor()).presentation == ring.presentation

    @pytest.mark.parametrize("desc", [
        {"flavor": "d-limit", "max_t": 3, "colour": "red"},
        {"flavor": "d-limit", "max_t": 3, "profile": "prefix=[];tail=inf"},
        {"flavor": "elementary", "max_t": 3},
        {"flavor": "weird", "max_t": 3},
    ])
    def test_rejects(self, desc):
        with pytest.raises(AlgebraError):
            ring_from_descriptor(desc)
