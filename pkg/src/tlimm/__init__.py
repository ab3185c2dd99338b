"""
tlimm: Temperley-Lieb immanants and percent immanants in exact arithmetic.

The package computes, classifies, and exhaustively verifies:

* the Temperley-Lieb algebra TL_n(2) on non-crossing matchings, the map
  theta(s_i) = t_i - 1 and the coefficients f_w(u) (:mod:`tlimm.tl`);
* percent immanants of skew shapes, hulls, complementary minors, and the
  1324-sign-alternation test for membership in their span
  (:mod:`tlimm.immanant`);
* the classification of which Temperley-Lieb immanants are combinations of
  percent immanants, with explicit one- or two-shape decompositions and
  closed-form coefficients (:mod:`tlimm.classify`);
* colorings and the unique zone-constrained matchings behind the
  complementary-minor expansions (:mod:`tlimm.coloring`);
* the A1-A10 verification suites (:mod:`tlimm.verify`) and a CLI
  (:mod:`tlimm.cli`).
"""

from .classify import (
    Case1,
    Case2,
    Decomposition,
    antidiag_coeff,
    avoids_main_patterns,
    build_case1,
    build_case2,
    classify_2143,
    closed_form_coeff,
    cm_expansion,
    corner_params,
    decompose,
    rect_cm_expansion,
    reduce_to_special,
)
from .coloring import (
    CircularColoring,
    Coloring,
    canonical_coloring,
    make_coloring,
    compatible_permutations,
    has_internal_pairing,
    is_compatible,
    unique_matching_case1,
    unique_matching_case2,
    unique_matching_general,
)
from .errors import LimitError, PreconditionError
from .immanant import (
    Immanant,
    SkewShape,
    cm_immanant,
    determinant_immanant,
    evaluate,
    hull,
    is_1324_sign_alternating,
    lies_in,
    percent_basis_decompose,
    percent_immanant,
    related_classes,
    s_transform,
    shape_leq,
    skew_shape,
    t_transform,
    tl_immanant,
)
from .perm import (
    Perm,
    block_structure,
    bruhat_leq,
    compose,
    contains_pattern,
    format_perm,
    identity,
    inverse,
    is_1324_adjacent,
    length,
    longest_word,
    parse_perm,
    reduced_word,
    restriction,
    sign,
)
from .tl import (
    NonCrossingMatching,
    TLElement,
    beta,
    beta_inv,
    catalan,
    f_coeff,
    format_matching,
    generator,
    parse_matching,
    theta,
    theta_table,
)

__version__ = "0.1.0"
