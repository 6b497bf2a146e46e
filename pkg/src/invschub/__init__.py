"""
Schubert polynomials of permutations, involutions, and mu-involutions.

Exact integer arithmetic throughout: sparse polynomials over Z, divided
differences, weak-order posets, atom sets, and mechanical verification of
the atom-sum factorization identities.
"""

from __future__ import annotations

from .involutions import (
    BRUTE_FORCE_BOUND,
    POSET_RANK_BOUND,
    Involution,
    InvolutionDiagram,
    WeakOrderGraph,
    atoms,
    atoms_bruteforce,
    closed_orbit_polynomial,
    identity_involution,
    inv_schubert,
    inv_schubert_dominant,
    involution_diagram,
    involution_length,
    involutions,
    longest_involution,
    monoid_apply,
    monoid_apply_word,
    parse_involution,
    relative_atoms,
    relative_atoms_bruteforce,
    weak_le,
    weak_order_graph,
)
from .mu_involutions import (
    Composition,
    DegenerateDiagram,
    MuInvolution,
    all_compositions,
    atoms_mu_bruteforce,
    atoms_mu_top,
    count_mu_involutions,
    degenerate_diagram,
    identity_mu_involution,
    mu_closed_orbit_polynomial,
    mu_inv_schubert,
    mu_involutions,
    mu_length,
    mu_monoid_apply,
    mu_monoid_apply_word,
    mu_strings,
    mu_weak_order_graph,
    parse_composition,
    parse_mu_involution,
    sort_mu,
    top_mu_involution,
)
from .permutations import (
    EnumerationBoundError,
    Permutation,
    ReducedWordBoundError,
    all_permutations,
    all_reduced_words,
    code,
    compose,
    identity,
    is_dominant,
    longest,
    parse_permutation,
    permutation_from_code,
    product_of_word,
    reduced_word,
    rothe_diagram,
    standardize,
)
from .polynomials import (
    IntPolynomial,
    ONE,
    ZERO,
    divided_difference,
    monomial,
    parse_polynomial,
    variable,
)
from .schubert import SchubertExpansion, expand_in_schubert_basis, schubert, schubert_dominant
from .verify import (
    IdentityReport,
    verify_all,
    verify_brion_general,
    verify_involution_identity,
    verify_mu_identity,
)

__version__ = "1.0.0"
