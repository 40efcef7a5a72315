"""Exact apolarity computations and certified lower bounds for Waring rank."""

from .apolarity import (apolar_graded_piece, apolar_length, catalecticant, colon_piece,
                        hilbert_function, minimal_generators, quotient_length)
from .bounds import (algen, al_capped, best_bound, cactus_bound, derksen_bound, generic_rank,
                     hseq, hseq_capped, improved_bound, max_monomial_rank, monomial_rank)
from .certificate import BoundCertificate
from .construct import (certify_explicit_quintic, check_K, construct_high_rank_form, find_psi,
                        parametric_ruleout, random_power_sum)
from .decompose import (Decomposition, binary_rank, ci_rank, numerical_decompose,
                        squarefree_binary, verify_decomposition)
from .polyring import Form, LinearForm, apply, parse_form, power_sum
from .replay import verify_certificate

__version__ = "0.1.0"
