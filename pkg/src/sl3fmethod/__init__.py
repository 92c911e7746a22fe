"""Exact symbolic machinery for differential intertwining operators on SL(3,R).

Layers, bottom up: ``ring`` (rational polynomials in the parameters),
``weyl`` (Weyl algebra and its Fourier transform), ``pbw`` (enveloping
algebra of sl(3), its realizations and Verma modules), ``special``
(Cayley, Krawtchouk and Jacobi values) and ``fmethod`` (families,
F-system, operators, factorizations).
"""

from .ring import (DivisionByZero, ParameterMismatch, ParamPoly, RingError, UnknownParameter,
                   ppoly, ppoly_arith, ppoly_eval, rational_arith)
from .weyl import (X, ZETA, ArityMismatch, NotAPolynomial, SpaceMismatch, WeylElement, WeylError,
                   fourier_hat, fourier_inverse, symb0, trun0, weyl_act, weyl_mul)
from .pbw import (BasisDecompositionFailure, DegreeLimitExceeded, NotInNilradical, PBWError, UEnv,
                  VermaVector, bracket, dLhat_realize, dR_realize, fc_forward, fc_inverse,
                  is_singular, pbw_mul, symmetrize, verma_act)
from .special import binom, cayley, factorial_binom, falling, jacobi_at0, krawtchouk, rising
from .fmethod import (FamilyTag, MChar, TPoly, Weight3, build_operator, build_verma_hom, classify,
                      compose_homs, fsystem_solve, fsystem_verify, link_check, mu_lambda,
                      sol_generator, tsat_matrix, verify_factorization)

__version__ = "0.1.0"
