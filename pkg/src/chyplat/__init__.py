"""chyplat: exact cyclotomic arithmetic, Hermitian signatures, the finite
groups G(m,p,2), reduction modulo primes, and congruence-separation
certificates with a from-scratch verifier."""

from .certify import (Certificate, VerificationResult, divalg_torsion_admissible,
                      pipeline_certify, verify_certificate)
from .cyclo import CycloField, CycloNum, cyclotomic_poly, field_make
from .elliptic import (COMPLEX_REFLECTION, POINT_REFLECTION, REGULAR_ELLIPTIC, SCALAR,
                       CharPoly, EllipticClass, char_poly, classify, element_order,
                       normalize_to_su)
from .gmp2 import (CensusReport, CensusRow, Gmp2Element, Gmp2Group, build_group,
                   embed_u21, order_p_element, special_subgroup, torsion_census)
from .intervals import IntervalComplex, certified_real_sign, embed, find_indefinite_scalar
from .matrices import (AdmissibilityReport, CycloMatrix, HermitianForm,
                       build_diagonal_form, is_admissible, signature_at, signatures,
                       su_membership)
from .presentation import PresentationReport, verify_p2_presentation
from .redmod import (PrimeIdealRep, ResidueField, candidate_reflection_polys,
                     charpoly_mod, reduce_mat, reduce_num, reduce_poly,
                     separation_test, sl3_order, split_prime)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
