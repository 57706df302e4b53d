"""Symbolic tools for invariant ideals over the dual Steenrod algebra.

The package models the D-limit Ext ring with its coaction, the invariant-ideal
operators built from it, and the support/thick-subcategory comparisons that
they decide.
"""
from .algebra import (AlgebraError, BiDegree, Generator, Ideal, Monomial, Poly,
                      RingMismatchError, RingPresentation, TensorPoly, Truncation,
                      TruncationError, bidegree_basis, graded_basis, h, xi)
from .coaction import (CoactionTable, InvariantIdealReport, canonical_generators,
                       coaction_generator, coaction_poly, coaction_restricted, coaction_table,
                       invariants_subring, is_invariant, sharp, star)
from .ext import (ExtRing, RingMap, d_limit_ring, ext_of_elementary, make_truncation,
                  restriction, ring_from_descriptor)
from .groebner import (groebner_basis, ideal_member, intersection, normal_form,
                       radical_member)
from .parse import ParseError, parse_poly, parse_poly_list
from .steenrod import (ProfileFunction, QuotientHopf, conjugate, conjugate_poly, coproduct,
                       is_elementary, make_A, make_D, make_E, make_E_i, parse_profile,
                       profile_admissible)
from .support import (InvariantPrimeRecord, KoszulObject, SupportSet,
                      enumerate_monomial_invariant_primes, koszul, lattice_ops, spc_map_res,
                      star_retract, support, support_of_ideal, thick_subset, vinv_subset)

__version__ = "0.1.0"
