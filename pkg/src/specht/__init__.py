"""Exact computations with symmetric and alternating group characters:
eigenvalue multiplicities and minimal polynomials of representation
matrices, major-index tableau statistics, Littlewood-Richardson
coefficients, and verification scans that reproduce exception lists of
the supported theorems and Schur-positivity inequalities at desk scale.
"""

from .characters import (
    AltClassLabel,
    AltIrrep,
    SplitValue,
    alt_char,
    alt_class_size,
    alt_classes,
    alt_dimension,
    alt_irreducibles,
    chi,
    dimension,
    epsilon_mu,
    inner_product,
    m_product,
    split_class_of_power,
)
from .render import render_minimal_polynomial
from .reports import VerificationReport
from .schur import (
    LEMMA_TAGS,
    SchurVector,
    SkewTableau,
    choose_beta,
    f_mu,
    g_mu,
    is_lattice_word,
    lr_coefficient,
    schur_product,
    t_lambda_alpha,
    verify_lemma,
    verify_schur_inequality,
)
from .shapes import (
    Cell,
    HypothesisViolation,
    Partition,
    Permutation,
    canonical_permutation,
    fold,
    format_partition,
    hook_length,
    is_dop,
    order,
    parse_partition,
    partitions_of,
    power_cycle_type,
    rim_hook,
    sign_of_class,
    unfold,
    wreath_embed,
    z_mu,
)
from .spectrum import (
    THEOREM_TAGS,
    MultiplicityVector,
    RootSet,
    alt_eig_multiplicities,
    eig_multiplicities,
    has_invariant_vector,
    has_minus_one,
    maj_count_kw,
    minimal_polynomial,
    ramanujan_sum,
    verify_theorem,
)
from .tableaux import enumerate_syt, maj_count_brute, maj_counts_brute, major_index

__version__ = "0.1.0"
