"""
Ordinary Schubert polynomials.

S_{w0} = x1^{n-1} x2^{n-2} ... x_{n-1}, and S_w = d_i(S_{w s_i}) whenever
l(w s_i) = l(w) + 1.  The recursion descends from w0 and is memoized per
(n, one-line notation).

The inverse direction - expanding an arbitrary polynomial in the Schubert
basis - uses greedy trailing-term peeling.  The graded-lex MINIMAL monomial
of S_w is x^{code(w)} with coefficient 1 (every other monomial arises from
it by moving diagram cells to strictly smaller row indices, which increases
the monomial), so repeatedly reading off the trailing monomial of the
residual, converting it to a permutation through the inverse Lehmer code and
subtracting recovers the coefficients; each step only disturbs monomials
strictly above the one it clears, hence the loop terminates.  A slower
exact-elimination fallback (`method="solve"`) is kept for independent
cross-checking.
"""

from __future__ import annotations

from .permutations import (
    Permutation,
    all_permutations,
    code,
    identity,
    is_dominant,
    longest,
    permutation_from_code,
    rothe_diagram,
)
from .polynomials import IntPolynomial, ONE, ZERO, monomial

__all__ = [
    "schubert",
    "schubert_dominant",
    "expand_in_schubert_basis",
    "SchubertExpansion",
    "clear_cache",
]

_CACHE: dict[tuple[int, tuple[int, ...]], IntPolynomial] = {}


def clear_cache(n: int | None = None) -> None:
    """Drop memoized Schubert polynomials (all of rank n, or everything)."""
    if n is None:
        _CACHE.clear()
    else:
        for key in [k for k in _CACHE if k[0] == n]:
            del _CACHE[key]


def schubert(w: Permutation) -> IntPolynomial:
    """The Schubert polynomial S_w.

    >>> print(schubert(Permutation([3, 2, 1])))
    x1^2*x2
    >>> print(schubert(Permutation([1, 3, 2])))
    x1 + x2
    """
    key = (w.n, w.oneline)
    cached = _CACHE.get(key)
    if cached is not None:
        return cached

    # Iterative ascent to w0: record the generators used, then peel back
    # down with divided differences, memoizing every intermediate stop.
    from .polynomials import divided_difference

    stack: list[tuple[tuple[int, ...], int]] = []
    current = w
    while True:
        cur_key = (current.n, current.oneline)
        if cur_key in _CACHE:
            poly = _CACHE[cur_key]
            break
        ascents = current.ascents()
        if not ascents:
            # current == w0
            n = current.n
            poly = monomial(tuple(n - k for k in range(1, n + 1)))
            _CACHE[cur_key] = poly
            break
        i = ascents[0]
        stack.append((current.oneline, i))
        current = current.right_multiply_s(i)
    while stack:
        oneline, i = stack.pop()
        poly = divided_difference(poly, i)
        _CACHE[(len(oneline), oneline)] = poly
    return poly


def schubert_dominant(w: Permutation) -> IntPolynomial:
    """S_w for dominant (132-avoiding) w: the single monomial prod x_i^{c_i}.

    >>> print(schubert_dominant(Permutation([6, 4, 3, 5, 7, 2, 1])))
    x1^5*x2^3*x3^2*x4^2*x5^2*x6
    """
    if not is_dominant(w):
        raise ValueError("%s is not dominant (contains a 132 pattern)" % w)
    return monomial(rothe_diagram(w).code)


class SchubertExpansion:
    """A finite integer combination of Schubert polynomials.

    Stored as a mapping from Permutation to nonzero coefficient.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: dict[Permutation, int]):
        self._coefficients = {w: c for w, c in coefficients.items() if c != 0}

    @property
    def coefficients(self) -> dict[Permutation, int]:
        return dict(self._coefficients)

    def coefficient(self, w: Permutation) -> int:
        return self._coefficients.get(w, 0)

    def support(self) -> frozenset[Permutation]:
        return frozenset(self._coefficients)

    def is_multiplicity_free(self) -> bool:
        """True iff every (nonzero) coefficient equals 1."""
        return all(c == 1 for c in self._coefficients.values())

    def sorted_items(self) -> list[tuple[Permutation, int]]:
        return sorted(self._coefficients.items(), key=lambda kv: kv[0].oneline)

    def reconstruct(self) -> IntPolynomial:
        total = ZERO
        for w, coeff in self._coefficients.items():
            total = total + schubert(w).scale(coeff)
        return total

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SchubertExpansion)
            and self._coefficients == other._coefficients
        )

    def __hash__(self) -> int:
        return hash(frozenset(self._coefficients.items()))

    def __str__(self) -> str:
        if not self._coefficients:
            return "0"
        parts = []
        for w, coeff in self.sorted_items():
            prefix = "" if coeff == 1 else "%d*" % coeff
            parts.append("%sS%s" % (prefix, w))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return "SchubertExpansion(%s)" % str(self)


def _check_artin_bound(f: IntPolynomial, n: int) -> None:
    for exps, _coeff in f.terms.items():
        if len(exps) > n:
            raise ValueError(
                "monomial %r uses more than %d variables" % (exps, n)
            )
        for i, e in enumerate(exps, start=1):
            if e > n - i:
                raise ValueError(
                    "monomial %r violates the Artin bound a_%d <= %d for n=%d"
                    % (exps, i, n - i, n)
                )


def expand_in_schubert_basis(
    f: IntPolynomial, n: int, method: str = "peel"
) -> SchubertExpansion:
    """Write f as an integer combination of S_w, w in S_n.

    Every monomial of f must satisfy the Artin bound a_i <= n - i.  The
    reconstruction identity is asserted before returning.

    >>> exp = expand_in_schubert_basis(monomial((2,)) + monomial((1, 1)), 3)
    >>> sorted((str(w), c) for w, c in exp.coefficients.items())
    [('[2,3,1]', 1), ('[3,1,2]', 1)]
    """
    _check_artin_bound(f, n)
    if method == "peel":
        coefficients: dict[Permutation, int] = {}
        residual = f
        while not residual.is_zero():
            exps, coeff = residual.trailing_term()
            padded = exps + (0,) * (n - len(exps))
            w = permutation_from_code(padded)
            coefficients[w] = coefficients.get(w, 0) + coeff
            residual = residual - schubert(w).scale(coeff)
        expansion = SchubertExpansion(coefficients)
    elif method == "solve":
        # Triangular elimination against the full rank-n basis, scanning
        # permutations in increasing graded-lex order of their minimal
        # monomials x^{code(w)}: when w's turn comes, every unprocessed u
        # has code(u) above code(w) and so cannot contribute at x^{code(w)}.
        basis = sorted(
            all_permutations(n),
            key=lambda w: (sum(code(w)), code(w)),
        )
        coefficients = {}
        residual = f
        for w in basis:
            if residual.is_zero():
                break
            c = residual.coefficient(code(w))
            if c != 0:
                coefficients[w] = c
                residual = residual - schubert(w).scale(c)
        if not residual.is_zero():
            raise AssertionError(
                "elimination left a nonzero residual %s" % residual
            )
        expansion = SchubertExpansion(coefficients)
    else:
        raise ValueError("unknown expansion method %r" % method)

    if expansion.reconstruct() != f:
        raise AssertionError("Schubert expansion failed to reconstruct input")
    return expansion


if __name__ == "__main__":
    import doctest

    doctest.testmod()
