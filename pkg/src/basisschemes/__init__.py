"""Exact-arithmetic toolkit for border basis and Groebner basis schemes
of zero-dimensional polynomial ideals."""

from .borderscheme import (GenericMatrix, SchemePoint, border_scheme_ideal,
                           generic_prebasis, is_border_basis_point,
                           multiplication_matrix, oracle_is_border_basis,
                           specialize_prebasis)
from .errors import (DivisorClosureError, InvariantViolationError,
                     MalformedRulesError, NotAPointError, OrderingDomainError,
                     ParseError, PreconditionError, ResourceLimitError,
                     SchemeError, UniverseMismatchError)
from .gbscheme import (CellResult, DeformationFamily, HomogeneityReport, Route,
                       SchemeVars, WeightSystem, affine_cell_detect, deform,
                       expand_point, fiber, find_weights, gb_scheme_ideal,
                       generic_gb_prebasis, h_polynomials, has_maxdeg_border,
                       ideal_from_point, is_V_cornercut, is_sigma_cornercut,
                       point_from_ideal, sigma_bar_ordering, split_variables,
                       verify_homogeneity)
from .groebner import (DEFAULT_LIMITS, Ideal, MonomialIdeal, ResourceLimits,
                       buchberger, eliminate, ideals_equal, krull_dimension,
                       leading_term_ideal, linear_substitution_preprocess,
                       normal_form, substitution_eliminate)
from .orderideals import (OrderIdealData, border_of, corners_of,
                          order_ideal_from_strings, segment_order_ideal,
                          validate_order_ideal)
from .orderings import (Comparison, DegLex, DegRevLex, Elimination, Lex,
                        SigmaBar, TermOrdering, WeightedDeg, ordering_from_name)
from .poly import Polynomial, divide, parse_polynomial
from .universe import Term, VariableUniverse, c_name, parse_monomial

__version__ = "0.1.0"
