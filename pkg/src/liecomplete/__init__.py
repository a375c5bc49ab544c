"""Exact derivation algebras, holomorphs and completeness certificates for
finite-dimensional Lie algebras over Q and F_p."""

from .algebra import (LieAlgebra, Subspace, ad_matrix, bracket, center, checked, classify,
                      derived_subalgebra, direct_sum, quotient_algebra, validate)
from .catalog import CatalogSpec, abelian, affine2, build_named, current_sl2, heisenberg, sl
from .certificate import Certificate, Claim
from .derivations import (DerivationSpace, TowerReport, der_algebra, derivation_basis,
                          derivation_tower, is_complete, outer_center)
from .fields import GF, QQ, Field
from .forms import BilinearForm, check_perp_center, is_invariant, killing_form, orthogonal_complement
from .holomorph import (Holomorph, build_holomorph, certify_completeness_theorem,
                        outer_holomorph_derivation)
from .torus import ExponentTorus, f_exp, graded_decomposition_check, radical_basis, sigma_exp

__version__ = "0.1.0"
