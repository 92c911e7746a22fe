"""Family classification, F-system solving, operators and factorizations."""

from .construct import (ConstructionError, ParameterChainMismatch, VermaHom, build_operator,
                        build_verma_hom, compose_homs, hom_label, identity_hom, operator_label,
                        singular_body)
from .factorization import (FactorizationReport, RegimeMismatch, admissible_cases,
                            verify_factorization)
from .families import (p_family, pc_jacobi, pc_krawtchouk_first, pc_krawtchouk_second, pc_poly,
                       pminus_jacobi, pminus_poly, pplus_jacobi, pplus_poly, sol_generator)
from .fsystem import (FSystemError, ImageOutsidePol, am_recurrence, annihilates,
                      closed_form_matrix, closed_form_pair, dpi_star, dpi_star_hat,
                      fsystem_operator, fsystem_solve, fsystem_verify, t_saturate,
                      t_unsaturate, tsat_matrix)
from .params import (ALPHA, BETA, GAMMA, M_ELEMENTS, RHO, FamilyTag, InducedParams,
                     InvalidFamily, MChar, NonRationalInput, ParamError, Weight3,
                     c_family_lambda, classify, lambda_from_weight, link_check, ma_match,
                     mu_lambda, reflect, reflect_word)
from .suites import SUITES, SuiteCheck, run_suite
from .tpoly import TPoly
