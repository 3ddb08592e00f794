"""Exact computer algebra for alternative and pre-alternative structures.

The package verifies axiom systems (alternativity, pre-alternativity,
bimodules, coalgebras, bialgebras, Yang-Baxter-type equations) and runs
the constructions connecting them (semidirect sums, duals, doubles,
operator-induced splittings), all in exact arithmetic over the rationals
or an odd prime field.
"""

from .fields import QQ, FieldSpec, PrimeField, Rationals
from .linalg import LinearMap
from .tensors import (
    BilinearForm,
    Tensor2,
    Tensor3,
    dual_action,
    form_to_tensor2,
    map_to_form,
    map_to_tensor2,
    orth_complement,
    pair_product,
)
from .reports import CheckReport, Violation
from .alternative import (
    AlternativeAlgebra,
    AltBimoduleAction,
    alt_dual_bimodule,
    alt_hom_check,
    alt_semidirect,
    check_alt_bimodule,
    check_alternative,
    check_associativity,
    check_form,
    subspace_lagrangian,
)
from .prealternative import (
    PreAlternativeAlgebra,
    PreAltBimoduleAction,
    associated_algebra,
    check_2cocycle,
    check_prealt_bimodule,
    check_prealternative,
    prealt_dual_bimodule,
    prealt_hom_check,
    prealt_semidirect,
    standard_actions,
)
from .constructions import (
    AlOperator,
    Grading,
    al_induce,
    check_1cocycle,
    check_al_operator,
    compatible_from_al,
    compatible_from_pa_solution,
    graded_split,
    symplectic_split,
)
from .yangbaxter import (
    PaResiduals,
    SolutionRecord,
    aybe_residual,
    brute_search,
    canonical_r,
    graph_check,
    induced_dual_prealt,
    minus_tensor,
    nondegenerate_correspondence,
    pa_residuals,
    plus_tensor,
    r_from_operator,
    yb_operator_check,
)
from .bialgebras import (
    AltMatchedPair,
    Comultiplication,
    ComultiplicationPair,
    PreAltBialgebra,
    PreAltMatchedPair,
    alt_dbialgebra_check,
    alt_matched_pair_from_dual,
    bialgebra_check,
    coalgebra_check,
    coboundary_comult,
    coboundary_condition_check,
    coboundary_delta,
    drinfeld_double,
    dual_alt_from_delta,
    dual_bialgebra,
    dual_prealt_from_pair,
    dualize_alt_product,
    dualize_prealt_products,
    hom_check_alt_bialgebra,
    hom_check_bialgebra,
    identity_split_tensor,
    invariant_pairing_form,
    matched_pair_alt,
    matched_pair_prealt_assemble,
    omega_p_form,
    pad_double,
    phase_space_check,
    prealt_matched_pair_from_dual,
    symplectic_double_prealt,
)

__all__ = [name for name in dir() if not name.startswith("_")]
