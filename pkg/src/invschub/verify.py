"""
Mechanical verification of the atom-sum factorization identities.

Every verifier assembles an :class:`IdentityReport` whose two sides are
computed by pipelines that share nothing beyond polynomial arithmetic:

* ``lhs`` enumerates an atom set and sums ordinary Schubert polynomials of
  the inverses (descent recursion down from the staircase monomial);
* ``rhs`` is a fully factored product read directly off a diagram, or the
  divided-difference chain anchored at the closed-orbit product -- no atom
  or ordinary-Schubert code is involved;
* ``expansion`` re-expands the rhs in the Schubert basis by peeling the
  graded-lex minimal monomial, a third route whose support must land back
  on the inverted atom set.

A failed identity never raises: ``equal`` is simply False and the caller
decides what to do (the command line maps it to exit code 3).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .involutions import (
    BRUTE_FORCE_BOUND,
    Involution,
    atoms,
    inv_schubert,
    inv_schubert_dominant,
    involutions,
)
from .mu_involutions import (
    Composition,
    all_compositions,
    atoms_mu_top,
    mu_closed_orbit_polynomial,
)
from .permutations import EnumerationBoundError, Permutation, is_dominant
from .polynomials import IntPolynomial, ZERO
from .schubert import SchubertExpansion, expand_in_schubert_basis, schubert

__all__ = [
    "IdentityReport",
    "verify_involution_identity",
    "verify_mu_identity",
    "verify_brion_general",
    "verify_all",
]


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity check.

    ``equal`` is True iff lhs - rhs is the zero polynomial;
    ``multiplicity_free`` is True iff every expansion coefficient is 1.
    """

    subject: str
    lhs: IntPolynomial
    rhs: IntPolynomial
    equal: bool
    expansion: SchubertExpansion
    multiplicity_free: bool

    def to_json_dict(self) -> dict:
        return {
            "subject": self.subject,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "equal": self.equal,
            "expansion": [
                {"perm": str(w), "coeff": coeff}
                for w, coeff in self.expansion.sorted_items()
            ],
            "multiplicity_free": self.multiplicity_free,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [
            "subject: %s" % self.subject,
            "lhs: %s" % self.lhs,
            "rhs: %s" % self.rhs,
            "equal: %s" % self.equal,
            "expansion: %s" % self.expansion,
            "multiplicity_free: %s" % self.multiplicity_free,
        ]
        return "\n".join(lines) + "\n"


def _report(subject: str, lhs: IntPolynomial, rhs: IntPolynomial, n: int) -> IdentityReport:
    expansion = expand_in_schubert_basis(rhs, n)
    return IdentityReport(
        subject=subject,
        lhs=lhs,
        rhs=rhs,
        equal=lhs == rhs,
        expansion=expansion,
        multiplicity_free=expansion.is_multiplicity_free(),
    )


def _atom_sum(atom_set: frozenset[Permutation]) -> IntPolynomial:
    """Sum of ordinary Schubert polynomials of the inverses."""
    total = ZERO
    for w in sorted(atom_set, key=lambda w: w.oneline):
        total = total + schubert(w.inverse())
    return total


def verify_involution_identity(tau: Involution) -> IdentityReport:
    """Check the factorization identity for a dominant involution.

    lhs sums schubert(w.inverse()) over atoms(tau); rhs is the product of
    x_i over diagonal diagram cells and (x_i + x_j) over strict ones.

    >>> from .involutions import parse_involution
    >>> report = verify_involution_identity(parse_involution("(1,2)", 2))
    >>> report.equal, str(report.lhs)
    (True, 'x1')
    >>> verify_involution_identity(parse_involution("(1,5)(2,3)", 5)).equal
    True
    >>> report = verify_involution_identity(parse_involution("id", 3))
    >>> str(report.lhs), str(report.rhs)
    ('1', '1')
    """
    if not is_dominant(tau.perm):
        raise ValueError(
            "involution %s in S_%d is not dominant" % (tau.cycles_string(), tau.n)
        )
    lhs = _atom_sum(atoms(tau))
    rhs = inv_schubert_dominant(tau)
    subject = "dominant-involution %s in S_%d" % (tau.cycles_string(), tau.n)
    return _report(subject, lhs, rhs, tau.n)


def verify_mu_identity(mu: Composition) -> IdentityReport:
    """Check the factorization identity for the top mu-involution.

    rhs is the factored diagram product for ``mu``.  lhs sums
    schubert(w.inverse()) over the atom set of the top element for the
    *reversed* composition: that index set is the one whose inverses form
    the expansion support of the rhs for every composition (the unreversed
    sum already fails at mu = (1,4), whichever of w or w^(-1) indexes the
    summands; the test suite checks the reversed form exhaustively for
    n <= 6).  For a one-part or palindromic mu the reversal is invisible.

    >>> from .mu_involutions import parse_composition
    >>> report = verify_mu_identity(parse_composition("3,1"))
    >>> report.equal, report.multiplicity_free
    (True, True)
    >>> str(report.lhs)
    'x1^3*x2*x3 + x1^2*x2^2*x3'
    >>> [str(w) for w in sorted(report.expansion.support(), key=lambda w: w.oneline)]
    ['[3,4,2,1]', '[4,2,3,1]']
    >>> str(verify_mu_identity(parse_composition("2")).lhs)
    'x1'
    >>> str(verify_mu_identity(parse_composition("1,1,1")).lhs)
    'x1^2*x2'
    """
    reversed_mu = Composition(tuple(reversed(mu.parts)))
    lhs = _atom_sum(frozenset(atoms_mu_top(reversed_mu)))
    rhs = mu_closed_orbit_polynomial(mu)
    return _report("mu %s" % mu, lhs, rhs, mu.n)


def verify_brion_general(
    tau: Involution, max_n: int = BRUTE_FORCE_BOUND
) -> IdentityReport:
    """Check the atom-sum identity for an arbitrary involution.

    lhs sums schubert(w.inverse()) over atoms(tau); rhs is the
    divided-difference chain polynomial of tau (a sum of monomials once
    tau is not dominant).  Atom enumeration scans S_n, hence the bound.

    >>> from .involutions import parse_involution
    >>> verify_brion_general(parse_involution("(1,3)", 3)).equal
    True
    >>> str(verify_brion_general(parse_involution("(1,3)", 3)).rhs)
    'x1^2 + x1*x2'
    """
    if tau.n > max_n:
        raise EnumerationBoundError(
            "atom enumeration over S_%d exceeds the bound %d" % (tau.n, max_n)
        )
    lhs = _atom_sum(atoms(tau))
    rhs = inv_schubert(tau)
    subject = "involution %s in S_%d" % (tau.cycles_string(), tau.n)
    return _report(subject, lhs, rhs, tau.n)


def verify_all(n: int, max_n: int = BRUTE_FORCE_BOUND) -> list[IdentityReport]:
    """Every check available at rank n, in a fixed order.

    Runs the general atom-sum check on every involution in I_n, the
    dominant factorization on the dominant ones, and the top-element
    check on every composition of n.  Deterministic: involutions sorted
    by one-line notation, compositions in lexicographic order.
    """
    if n > max_n:
        raise EnumerationBoundError(
            "verification sweep at rank %d exceeds the bound %d" % (n, max_n)
        )
    reports = []
    for tau in involutions(n):
        reports.append(verify_brion_general(tau, max_n=max_n))
    for tau in involutions(n):
        if is_dominant(tau.perm):
            reports.append(verify_involution_identity(tau))
    for mu in all_compositions(n):
        reports.append(verify_mu_identity(mu))
    return reports
