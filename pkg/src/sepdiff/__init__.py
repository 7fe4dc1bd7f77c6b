"""Exact differential algebra over GF(p)(c1, ..., cm)(t)."""

from .diffpoly import (DerivVar, DiffPoly, DiffRing, Rank, delta, degree, evaluate, initial,
                       leader, nonvanishing_witness, order, partial, rank, separant)
from .field import (FieldPresentation, PCoordinates, RationalFunction, derive, frobenius,
                    is_constant, is_pth_power, make_presentation, p_coordinates, pth_power_rank,
                    pth_root, solve_over_pth_powers)
from .parsing import parse_dpoly, parse_element, parse_field
from .prolongation import AlgebraicSystem, ProlongedSystem, check_membership, lift_point, prolong
from .pstructure import (LambdaResult, PMonomialSet, adjoin_pth_root, degree_of_imperfection,
                         differential_p_basis, extend_with_constants, is_diff_p_independent,
                         is_p_independent, lambda_finite, lambda_infinite, p_monomials)
from .quotient import (QuotientElement, WitnessReport, generic_point, image, q_add, q_delta,
                       q_eq, q_inv, q_is_zero, q_mul, q_neg, sdcf_witness,
                       separating_basis_check)
from .reduction import (ReductionCertificate, SatIdeal, check_irreducible_heuristic,
                        full_reduce, make_satideal, member, partial_remainder, pseudo_remainder,
                        verify_certificate)

__version__ = "0.1.0"
