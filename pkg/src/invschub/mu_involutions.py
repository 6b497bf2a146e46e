"""
Compositions, mu-involutions (block-involution words), the monoid action on
them, the mu-weak order, atoms of the top element, the degenerate diagram,
and degenerate involution Schubert polynomials.

A mu-involution for a composition mu = (mu_1, ..., mu_k) of n is a
permutation whose one-line notation, cut into blocks of sizes mu_1, ...,
mu_k, has every block standardizing to an involution.  Blocks are written
pipe-separated, e.g. "586|21|743" for mu = (3,2,3).

The generator m(s_i) acts by four cases: stay when letter i appears after
letter i+1; swap the two letters when they lie in different blocks; swap
them in place when they lie in the same block and the block fixes both
(as a permutation of its own alphabet); otherwise conjugate inside the
block, i.e. swap the two block slots at the ranks of i and i+1 and then
relabel i <-> i+1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .involutions import (
    BRUTE_FORCE_BOUND,
    Involution,
    atoms,
    build_weak_order_graph,
    involution_diagram,
    involutions,
    longest_involution,
    WeakOrderGraph,
)
from .permutations import (
    EnumerationBoundError,
    Permutation,
    all_permutations,
    identity,
    longest,
    reduced_word,
    standardize,
)
from .polynomials import IntPolynomial, ONE, divided_difference, variable

__all__ = [
    "Composition",
    "MuInvolution",
    "all_compositions",
    "DegenerateDiagram",
    "parse_composition",
    "parse_mu_involution",
    "validate_mu_involution",
    "mu_strings",
    "identity_mu_involution",
    "top_mu_involution",
    "mu_monoid_apply",
    "mu_monoid_apply_word",
    "sort_mu",
    "mu_length",
    "count_mu_involutions",
    "mu_involutions",
    "mu_weak_order_graph",
    "atoms_mu_top",
    "atoms_mu_bruteforce",
    "degenerate_diagram",
    "mu_closed_orbit_polynomial",
    "mu_inv_schubert",
    "clear_mu_inv_schubert_cache",
    "DEFAULT_VERTEX_BUDGET",
]

DEFAULT_VERTEX_BUDGET = 50000


class Composition:
    """An ordered tuple of positive parts with prefix sums nu.

    >>> mu = parse_composition("4,1,3")
    >>> mu.n, mu.k, mu.nu
    (8, 3, (0, 4, 5, 8))
    >>> mu.block_of(5)
    2
    """

    __slots__ = ("_parts", "_nu")

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(p) for p in parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError("composition parts must be positive integers, got %r" % (parts,))
        nu = [0]
        for p in parts:
            nu.append(nu[-1] + p)
        self._parts = parts
        self._nu = tuple(nu)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def n(self) -> int:
        return self._nu[-1]

    @property
    def k(self) -> int:
        return len(self._parts)

    @property
    def nu(self) -> tuple[int, ...]:
        return self._nu

    def block_positions(self, a: int) -> range:
        """Positions (1-based) of block a (1-based)."""
        return range(self._nu[a - 1] + 1, self._nu[a] + 1)

    def block_of(self, pos: int) -> int:
        if not 1 <= pos <= self.n:
            raise IndexError("position %d out of range 1..%d" % (pos, self.n))
        for a in range(1, self.k + 1):
            if pos <= self._nu[a]:
                return a
        raise AssertionError("unreachable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Composition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(("Composition", self._parts))

    def __repr__(self) -> str:
        return "Composition(%r)" % (self._parts,)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self._parts)


def parse_composition(text: str) -> Composition:
    """Parse "4,1,3" (spaces allowed)."""
    try:
        parts = [int(chunk) for chunk in text.replace(" ", "").split(",") if chunk]
    except ValueError:
        raise ValueError("cannot parse composition %r" % text) from None
    if not parts:
        raise ValueError("empty composition %r" % text)
    return Composition(parts)


def all_compositions(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n, in lexicographic order of parts.

    >>> [str(mu) for mu in all_compositions(3)]
    ['1,1,1', '1,2', '2,1', '3']
    """
    if n < 1:
        raise ValueError("n must be at least 1, got %d" % n)

    def rec(m: int) -> Iterator[tuple[int, ...]]:
        if m == 0:
            yield ()
            return
        for first in range(1, m + 1):
            for rest in rec(m - first):
                yield (first,) + rest

    return [Composition(parts) for parts in rec(n)]


class MuInvolution:
    """A permutation whose mu-blocks standardize to involutions.

    >>> pi = parse_mu_involution("586|21|743")
    >>> pi.mu.parts
    (3, 2, 3)
    >>> str(pi)
    '586|21|743'
    """

    __slots__ = ("perm", "mu")

    def __init__(self, perm: Permutation, mu: Composition):
        if perm.n != mu.n:
            raise ValueError("rank mismatch: permutation of %d vs composition of %d" % (perm.n, mu.n))
        for a in range(1, mu.k + 1):
            block = tuple(perm(p) for p in mu.block_positions(a))
            if not standardize(block).is_involution():
                raise ValueError(
                    "block %d (%s) of %s does not standardize to an involution"
                    % (a, "".join(str(x) for x in block) if perm.n <= 9 else
                       ",".join(str(x) for x in block), perm)
                )
        self.perm = perm
        self.mu = mu

    @property
    def n(self) -> int:
        return self.perm.n

    @property
    def oneline(self) -> tuple[int, ...]:
        return self.perm.oneline

    @property
    def strings(self) -> tuple[tuple[int, ...], ...]:
        return mu_strings(self.perm, self.mu)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MuInvolution)
            and self.perm == other.perm
            and self.mu == other.mu
        )

    def __hash__(self) -> int:
        return hash(("MuInvolution", self.perm.oneline, self.mu.parts))

    def __repr__(self) -> str:
        return "MuInvolution(%s, mu=%s)" % (self.perm, self.mu)

    def __str__(self) -> str:
        if self.n <= 9:
            return "|".join(
                "".join(str(x) for x in block) for block in self.strings
            )
        return "|".join(
            ",".join(str(x) for x in block) for block in self.strings
        )


def validate_mu_involution(p: Permutation, mu: Composition) -> MuInvolution:
    return MuInvolution(p, mu)


def parse_mu_involution(text: str, mu: Composition | None = None) -> MuInvolution:
    """Parse "586|21|743"; block lengths determine the composition.

    Blocks of single digits are split characterwise; blocks containing
    commas are split on them (needed once letters exceed 9).  An explicit
    composition, when given, must match the block lengths.
    """
    chunks = [c.strip() for c in text.strip().split("|")]
    if any(not c for c in chunks):
        raise ValueError("empty block in %r" % text)
    blocks: list[list[int]] = []
    for chunk in chunks:
        try:
            if "," in chunk:
                blocks.append([int(x) for x in chunk.split(",")])
            else:
                blocks.append([int(ch) for ch in chunk])
        except ValueError:
            raise ValueError("cannot parse block %r in %r" % (chunk, text)) from None
    inferred = Composition([len(b) for b in blocks])
    if mu is not None and mu != inferred:
        raise ValueError(
            "block lengths %s do not match the composition %s" % (inferred, mu)
        )
    letters = [x for block in blocks for x in block]
    if sorted(letters) != list(range(1, len(letters) + 1)):
        raise ValueError("%r is not a word on 1..%d" % (text, len(letters)))
    return MuInvolution(Permutation(letters), inferred)


def mu_strings(w: Permutation, mu: Composition) -> tuple[tuple[int, ...], ...]:
    """Positional slices of the one-line notation at the nu boundaries.

    >>> from .permutations import Permutation
    >>> mu_strings(Permutation([3,7,1,8,4,2,6,5]), parse_composition("4,1,3"))
    ((3, 7, 1, 8), (4,), (2, 6, 5))
    """
    if w.n != mu.n:
        raise ValueError("rank mismatch")
    return tuple(
        tuple(w(p) for p in mu.block_positions(a)) for a in range(1, mu.k + 1)
    )


def identity_mu_involution(mu: Composition) -> MuInvolution:
    return MuInvolution(identity(mu.n), mu)


def top_mu_involution(mu: Composition) -> MuInvolution:
    """The longest permutation viewed as a mu-involution (blocks of w0 are
    decreasing runs, which standardize to longest involutions)."""
    return MuInvolution(longest(mu.n), mu)


def _block_alphabet_rank(block: tuple[int, ...], letter: int) -> int:
    """1-based rank of ``letter`` within the sorted alphabet of ``block``."""
    return sorted(block).index(letter) + 1


def _block_fixes(block: tuple[int, ...], letter: int) -> bool:
    """Whether the block string, as a permutation of its alphabet, fixes
    ``letter``; i.e. the slot at the letter's rank holds the letter itself."""
    return block[_block_alphabet_rank(block, letter) - 1] == letter


def mu_monoid_apply(i: int, pi: MuInvolution) -> MuInvolution:
    """m(s_i) . pi by the four-case rule.

    >>> str(mu_monoid_apply(1, parse_mu_involution("123|4")))
    '213|4'
    >>> str(mu_monoid_apply(3, parse_mu_involution("123|4")))
    '124|3'
    >>> str(mu_monoid_apply(3, parse_mu_involution("324|1")))
    '432|1'
    >>> str(mu_monoid_apply(3, parse_mu_involution("432|1")))
    '432|1'
    """
    perm, mu = pi.perm, pi.mu
    if not 1 <= i <= perm.n - 1:
        raise IndexError("generator index %d out of range 1..%d" % (i, perm.n - 1))
    inv = perm.inverse()
    p_lo, p_hi = inv(i), inv(i + 1)
    if p_lo > p_hi:
        return pi
    block_lo, block_hi = mu.block_of(p_lo), mu.block_of(p_hi)
    if block_lo != block_hi:
        return MuInvolution(perm.left_multiply_s(i), mu)
    block = pi.strings[block_lo - 1]
    if _block_fixes(block, i) and _block_fixes(block, i + 1):
        return MuInvolution(perm.left_multiply_s(i), mu)
    # Conjugation inside the block: swap the slots at the ranks of i and
    # i+1 (consecutive, since no letter lies between them), then relabel.
    base = mu.nu[block_lo - 1]
    r = _block_alphabet_rank(block, i)
    images = list(perm.oneline)
    images[base + r - 1], images[base + r] = images[base + r], images[base + r - 1]
    for idx, val in enumerate(images):
        if val == i:
            images[idx] = i + 1
        elif val == i + 1:
            images[idx] = i
    return MuInvolution(Permutation(images), mu)


def mu_monoid_apply_word(w: Permutation, pi: MuInvolution) -> MuInvolution:
    """m(w) . pi along a reduced word of w, rightmost generator first."""
    if w.n != pi.n:
        raise ValueError("rank mismatch: %d vs %d" % (w.n, pi.n))
    result = pi
    for i in reversed(reduced_word(w)):
        result = mu_monoid_apply(i, result)
    return result


def sort_mu(pi: MuInvolution) -> Permutation:
    """Concatenation of the increasing rearrangements of the blocks.

    >>> sort_mu(parse_mu_involution("586|21|743")).compact()
    '56812347'
    """
    return Permutation(
        [x for block in pi.strings for x in sorted(block)]
    )


def mu_length(pi: MuInvolution) -> int:
    """lhat_mu(pi): blockwise involution lengths plus l(sort(pi)).

    >>> mu_length(parse_mu_involution("586|21|743"))
    17
    """
    blockwise = sum(
        involution_diagram(Involution(standardize(block))).inv_length
        for block in pi.strings
    )
    return blockwise + sort_mu(pi).length()


@lru_cache(maxsize=None)
def _involution_count(m: int) -> int:
    if m < 2:
        return 1
    return _involution_count(m - 1) + (m - 1) * _involution_count(m - 2)


def count_mu_involutions(mu: Composition) -> int:
    """|I_mu| = multinomial(n; mu) * prod of blockwise involution counts."""
    total = math.factorial(mu.n)
    for p in mu.parts:
        total //= math.factorial(p)
    for p in mu.parts:
        total *= _involution_count(p)
    return total


def mu_involutions(mu: Composition) -> Iterator[MuInvolution]:
    """All mu-involutions, in lexicographic one-line order."""

    def assign(letters: tuple[int, ...], a: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if a > mu.k:
            yield ()
            return
        m = mu.parts[a - 1]
        for chosen in itertools.combinations(letters, m):
            rest = tuple(x for x in letters if x not in chosen)
            for tail in assign(rest, a + 1):
                yield (chosen,) + tail

    collected = []
    for alphabet_choice in assign(tuple(range(1, mu.n + 1)), 1):
        block_options = []
        for alphabet in alphabet_choice:
            sorted_alpha = sorted(alphabet)
            block_options.append(
                [
                    tuple(sorted_alpha[alpha(t) - 1] for t in range(1, len(alphabet) + 1))
                    for alpha in involutions(len(alphabet))
                ]
            )
        for combo in itertools.product(*block_options):
            word = [x for block in combo for x in block]
            collected.append(MuInvolution(Permutation(word), mu))
    collected.sort(key=lambda pi: pi.oneline)
    yield from collected


def mu_weak_order_graph(
    mu: Composition,
    max_n: int = 8,
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
) -> WeakOrderGraph:
    """The labeled weak-order digraph on I_mu, ranked by lhat_mu.

    >>> mu_weak_order_graph(parse_composition("3,1")).vertex_count
    16
    """
    if mu.n > max_n:
        raise EnumerationBoundError(
            "poset construction for n=%d exceeds the bound %d" % (mu.n, max_n)
        )
    expected = count_mu_involutions(mu)
    if expected > vertex_budget:
        raise EnumerationBoundError(
            "|I_mu| = %d exceeds the vertex budget %d" % (expected, vertex_budget)
        )
    elements = list(mu_involutions(mu))
    if len(elements) != expected:
        raise AssertionError(
            "enumerated %d mu-involutions, expected %d" % (len(elements), expected)
        )
    graph = build_weak_order_graph(
        "mu_involutions_%s" % "_".join(str(p) for p in mu.parts),
        elements,
        rank_fn=mu_length,
        label_fn=str,
        oneline_fn=lambda pi: pi.oneline,
        apply_fn=mu_monoid_apply,
        generators=range(1, mu.n),
    )
    if graph.minimal_vertices() != (graph.index_of(identity(mu.n).oneline),):
        raise AssertionError("identity is not the unique minimum of the mu-weak order")
    if graph.maximal_vertices() != (graph.index_of(longest(mu.n).oneline),):
        raise AssertionError("w0 is not the unique maximum of the mu-weak order")
    return graph


def atoms_mu_top(mu: Composition) -> frozenset[Permutation]:
    """Atoms of the top mu-involution: words whose block a carries exactly
    the letters n - nu_a + 1 .. n - nu_{a-1} and standardizes to an atom of
    the longest involution of its block size.

    >>> sorted(w.compact() for w in atoms_mu_top(parse_composition("3,1")))
    ['3421', '4231']
    """
    n = mu.n
    block_options: list[list[tuple[int, ...]]] = []
    for a in range(1, mu.k + 1):
        alphabet = list(range(n - mu.nu[a] + 1, n - mu.nu[a - 1] + 1))
        block_atoms = atoms(longest_involution(mu.parts[a - 1]))
        block_options.append(
            [tuple(alphabet[v(t) - 1] for t in range(1, len(alphabet) + 1)) for v in sorted(
                block_atoms, key=lambda w: w.oneline)]
        )
    result = set()
    for combo in itertools.product(*block_options):
        word = [x for block in combo for x in block]
        result.add(Permutation(word))
    return frozenset(result)


def atoms_mu_bruteforce(
    target: MuInvolution,
    base: MuInvolution,
    max_n: int = BRUTE_FORCE_BOUND,
    candidates: Sequence[Permutation] | None = None,
) -> frozenset[Permutation]:
    """Relative atoms by the definition: all w with m(w).base = target and
    l(w) = lhat_mu(target) - lhat_mu(base).

    ``candidates`` restricts the search space (the filter stays exhaustive
    over whatever is supplied); without it, all of S_n is scanned, subject
    to the bound.
    """
    if target.mu != base.mu:
        raise ValueError("composition mismatch")
    if candidates is None:
        if target.n > max_n:
            raise EnumerationBoundError(
                "brute force over S_%d exceeds the bound %d" % (target.n, max_n)
            )
        candidates = all_permutations(target.n)
    gap = mu_length(target) - mu_length(base)
    if gap < 0:
        return frozenset()
    return frozenset(
        w
        for w in candidates
        if w.length() == gap and mu_monoid_apply_word(w, base) == target
    )


@dataclass(frozen=True)
class DegenerateDiagram:
    """The three disjoint cell families of Dhat^mu for the top element."""

    d0: frozenset[tuple[int, int]]
    d1: frozenset[tuple[int, int]]
    d2: frozenset[tuple[int, int]]

    @property
    def union(self) -> frozenset[tuple[int, int]]:
        return self.d0 | self.d1 | self.d2

    @property
    def size(self) -> int:
        return len(self.d0) + len(self.d1) + len(self.d2)


def degenerate_diagram(mu: Composition) -> DegenerateDiagram:
    """d0: all cross-block cells (i earlier block than j); d1, d2: the
    within-block translates of the diagram parts of each block's longest
    involution.

    >>> d = degenerate_diagram(parse_composition("3,1"))
    >>> sorted(d.d0), sorted(d.d1), sorted(d.d2)
    ([(1, 4), (2, 4), (3, 4)], [(1, 1)], [(1, 2)])
    """
    d0 = set()
    for a in range(1, mu.k + 1):
        for b in range(a + 1, mu.k + 1):
            for i in mu.block_positions(a):
                for j in mu.block_positions(b):
                    d0.add((i, j))
    d1: set[tuple[int, int]] = set()
    d2: set[tuple[int, int]] = set()
    for a in range(1, mu.k + 1):
        base = mu.nu[a - 1]
        diagram = involution_diagram(longest_involution(mu.parts[a - 1]))
        d1.update((base + i, base + j) for (i, j) in diagram.d1)
        d2.update((base + i, base + j) for (i, j) in diagram.d2)
    if (d0 & d1) or (d0 & d2) or (d1 & d2):
        raise AssertionError("degenerate diagram parts are not disjoint")
    return DegenerateDiagram(frozenset(d0), frozenset(d1), frozenset(d2))


def mu_closed_orbit_polynomial(mu: Composition) -> IntPolynomial:
    """The factored product read off the degenerate diagram of mu:
    prod_{(i,j) in d0} x_i * prod_{(i,i) in d1} x_i * prod_{(i,j) in d2} (x_i + x_j).

    Note the block-order twist: this product is the top polynomial of the
    weak order for the REVERSED composition, i.e. it equals
    mu_inv_schubert(top_mu_involution(reversed mu)).  The two coincide
    exactly when mu is palindromic.

    >>> print(mu_closed_orbit_polynomial(parse_composition("3,1")))
    x1^3*x2*x3 + x1^2*x2^2*x3
    """
    diagram = degenerate_diagram(mu)
    poly = ONE
    for (i, _) in sorted(diagram.d0):
        poly = poly * variable(i)
    for (i, _) in sorted(diagram.d1):
        poly = poly * variable(i)
    for (i, j) in sorted(diagram.d2):
        poly = poly * (variable(i) + variable(j))
    return poly


_MU_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...]], IntPolynomial] = {}


def clear_mu_inv_schubert_cache() -> None:
    _MU_CACHE.clear()


def mu_inv_schubert(pi: MuInvolution) -> IntPolynomial:
    """Shat^mu_pi: divided differences along any raising chain to the top.

    The anchor at the top element is mu_closed_orbit_polynomial of the
    REVERSED composition.  That choice is forced: it is the unique anchor
    for which the descent is chain-independent (every raising edge gives
    the same polynomial under its divided difference) and for which the
    result equals the multiplicity-free sum of S_{w^-1} over the words w
    of minimal length driving the identity up to pi.  Both properties are
    checked exhaustively in the tests; for palindromic compositions the
    two candidate anchors agree.  The greedy smallest-label chain is used
    here, and every non-stay move must raise lhat_mu by exactly one or
    the chain is rejected.

    >>> print(mu_inv_schubert(parse_mu_involution("432|1")))
    x1^3*x2^2 + x1^3*x2*x3
    >>> print(mu_inv_schubert(parse_mu_involution("123|4")))
    1
    """
    mu = pi.mu
    top = longest(mu.n).oneline
    stack: list[tuple[tuple[int, ...], int]] = []
    current = pi
    while True:
        key = (mu.parts, current.oneline)
        if key in _MU_CACHE or current.oneline == top:
            break
        rank = mu_length(current)
        for i in range(1, mu.n):
            image = mu_monoid_apply(i, current)
            if image.oneline != current.oneline:
                if mu_length(image) != rank + 1:
                    raise AssertionError(
                        "monoid move s_%d does not raise rank by 1 at %s" % (i, current)
                    )
                stack.append((current.oneline, i))
                current = image
                break
        else:
            raise AssertionError("no raising move below the top at %s" % current)
    key = (mu.parts, current.oneline)
    if key in _MU_CACHE:
        poly = _MU_CACHE[key]
    else:
        poly = mu_closed_orbit_polynomial(Composition(tuple(reversed(mu.parts))))
        _MU_CACHE[key] = poly
    while stack:
        oneline, i = stack.pop()
        poly = divided_difference(poly, i)
        _MU_CACHE[(mu.parts, oneline)] = poly
    return poly


if __name__ == "__main__":
    import doctest

    doctest.testmod()
