"""Exact-arithmetic toolkit for torus-link homology and its geometric models.

Three independent pipelines cross-check each other:

* the binary-pair recursion for triply graded Poincare series of positive
  torus links (``torushom.recursion``);
* Hecke-algebra and brute-force point counts of braid varieties
  (``torushom.hecke``);
* cell data of Hilbert schemes and compactified Jacobians of plane curve
  singularities (``torushom.curves``).
"""

from .algebra import (
    GradedTable,
    LaurentPoly,
    RatFunc,
    lp_add,
    lp_mul,
    lp_substitute_monomial,
    monomial_ratio,
    qta_degree_from_QTA,
    ratfunc_normalize,
    series_truncate,
)
from .braid import (
    BraidWord,
    closure_components,
    cyclic_rotate,
    full_twist,
    half_twist,
    permutation_of,
    positive_stabilize,
    torus_braid,
)
from .curves import (
    GammaModule,
    Semigroup,
    cell_dimension,
    enumerate_hilb_ideals,
    enumerate_jacobian_modules,
    euler_compare,
    hilb_poincare_series,
    jacobian_cells,
    lattice_path_count,
    node_hilb,
    ors_compare,
    rational_catalan,
    semigroup,
)
from .hecke import (
    HeckeElement,
    QPoly,
    braid_hecke_product,
    braid_matrix_symbolic,
    braid_transfer_product,
    brute_force_count,
    check_braid_matrix_relation,
    hecke_mul_gen,
    point_count,
)
from .recursion import (
    euler_a0,
    hhh_a0,
    hhh_torus,
    pair_series,
    reduced_knot_poly,
    term_census_a,
)
from .soergel import hhh0_two_strand, hom_complex_two_strand, two_strand_qt_dims

__version__ = "0.1.0"
