"""Newton complementary duality for sets of forms.

Exact-rational calculus around the Newton complementary dual: dual sets and
directrix vectors, the Magnus involution and its evaluation identities,
rational-map composition and inversion factors, Rees presentation ideals
compared through the psi transform, de Jonquieres maps, and a built-in
Buchberger engine (reduced bases, elimination, quotient, saturation).
"""

from .errors import *  # noqa: F401,F403
from .poly import Polynomial, poly_gcd, poly_gcd_list
from .newton import (FormSet, NewtonMatrix, canonical_restrictions, directrix,
                     dual_form, dual_forms, dual_set, newton_matrix)
from .identities import (composite_identity, eval_identity, magnus,
                     matrix_identity_check, product_rule, sum_rule)
from .groebner import (GroebnerBasis, Ideal, TermOrder, eliminate,
                       groebner_basis, ideal_equal, ideal_quotient,
                       normal_form, saturate)
from .maps import (RationalMap, compose, identity_map, image_kernel,
                   inversion_duality_check, inversion_factor, magnus_commute,
                   magnus_map, monomial_cremona_inverse, reduce_representative,
                   same_map)
from .bigraded import (BiPolynomial, MainReesReport, PsiWitnesses, bi_newton,
                       bidual_eval, bihomogeneous_components, main_rees_check,
                       psi, psi_flat, psi_laws_witness, psi_preimage,
                       push_relation, rees_ideal)
from .jonquieres import (JonquieresMap, commute_criterion, dual_jonquieres,
                         make_jonquieres)
from .parsing import parse_polynomial, render_polynomial

__all__ = [name for name in dir() if not name.startswith("_")]
