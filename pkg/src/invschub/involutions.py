"""
Involutions in S_n: diagrams and lengths, the idempotent monoid action
m(s_i), the weak order poset, atoms and relative atoms, and involution
Schubert polynomials.

The monoid generator acts by the three-case rule

    m(s_i) . tau = tau            if tau(i+1) < tau(i)
                 = s_i tau        if tau(i) = i and tau(i+1) = i+1
                 = s_i tau s_i    otherwise

and words act rightmost generator first, so
m(s_{i_1} ... s_{i_l}) . tau = m(s_{i_1}) . ( ... (m(s_{i_l}) . tau)).

Atoms of tau are the minimal-length w with m(w) . id = tau; their common
length is the involution length lhat(tau) = #Dhat(tau).  The closed
characterization below (three conditions on the *inverse* of the candidate)
is cross-validated against the definitional brute force by the test suite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .permutations import (
    EnumerationBoundError,
    Permutation,
    all_permutations,
    identity,
    is_dominant,
    longest,
    reduced_word,
)
from .polynomials import IntPolynomial, ONE, divided_difference, variable

__all__ = [
    "Involution",
    "InvolutionDiagram",
    "WeakOrderGraph",
    "identity_involution",
    "longest_involution",
    "parse_involution",
    "monoid_apply",
    "monoid_apply_word",
    "involution_diagram",
    "involution_length",
    "involutions",
    "weak_order_graph",
    "weak_le",
    "atoms",
    "atoms_bruteforce",
    "relative_atoms",
    "relative_atoms_bruteforce",
    "inv_schubert",
    "inv_schubert_dominant",
    "closed_orbit_polynomial",
    "clear_inv_schubert_cache",
    "POSET_RANK_BOUND",
    "BRUTE_FORCE_BOUND",
]

# Default resource bounds; CLI callers may override them explicitly.
POSET_RANK_BOUND = 8
BRUTE_FORCE_BOUND = 7


class Involution:
    """A permutation equal to its own inverse.

    ``cyc`` lists the 1- and 2-cycles as pairs (i, j) with i <= j = tau(i);
    ``fix`` lists the fixed points; ``kappa`` counts the 2-cycles.

    >>> tau = parse_involution("(1,5)(2,3)", 5)
    >>> tau.kappa, tau.fix
    (2, (4,))
    >>> tau.cycles_string()
    '(1,5)(2,3)'
    """

    __slots__ = ("perm",)

    def __init__(self, perm: Permutation):
        if not perm.is_involution():
            raise ValueError("%s is not an involution" % perm)
        self.perm = perm

    @property
    def n(self) -> int:
        return self.perm.n

    @property
    def oneline(self) -> tuple[int, ...]:
        return self.perm.oneline

    def __call__(self, i: int) -> int:
        return self.perm(i)

    @property
    def cyc(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, self.perm(i)) for i in range(1, self.n + 1) if i <= self.perm(i)
        )

    @property
    def fix(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.perm(i) == i)

    @property
    def kappa(self) -> int:
        return sum(1 for i in range(1, self.n + 1) if self.perm(i) > i)

    def two_cycles(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for (i, j) in self.cyc if i < j)

    def cycles_string(self) -> str:
        """Cycle notation listing 2-cycles only, e.g. "(1,5)(2,3)"; "id" if none."""
        pairs = self.two_cycles()
        if not pairs:
            return "id"
        return "".join("(%d,%d)" % (i, j) for (i, j) in pairs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Involution) and self.perm == other.perm

    def __hash__(self) -> int:
        return hash(("Involution", self.perm.oneline))

    def __repr__(self) -> str:
        return "Involution(%s)" % self.perm

    def __str__(self) -> str:
        return self.cycles_string()


def identity_involution(n: int) -> Involution:
    return Involution(identity(n))


def longest_involution(n: int) -> Involution:
    return Involution(longest(n))


def parse_involution(text: str, n: int) -> Involution:
    """Parse cycle notation "(1,5)(2,3)" (unlisted points fixed) or
    one-line notation; the rank must be supplied for cycle input."""
    text = text.strip()
    if text == "id" or text == "()":
        return identity_involution(n)
    if text.startswith("("):
        images = list(range(1, n + 1))
        seen: set[int] = set()
        body = text.replace(" ", "")
        if not body.endswith(")"):
            raise ValueError("cannot parse cycles %r" % text)
        for chunk in body[1:-1].split(")("):
            parts = chunk.split(",")
            if len(parts) == 1 and parts[0]:
                parts = [parts[0], parts[0]]
            if len(parts) != 2:
                raise ValueError(
                    "only 1- and 2-cycles are allowed in involution input, got (%s)"
                    % chunk
                )
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError("cannot parse cycles %r" % text) from None
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError("cycle entry out of range 1..%d in %r" % (n, text))
            if a in seen or (b in seen and b != a):
                raise ValueError("cycles are not disjoint in %r" % text)
            seen.update((a, b))
            images[a - 1], images[b - 1] = b, a
        return Involution(Permutation(images))
    from .permutations import parse_permutation

    return Involution(parse_permutation(text, n))


def monoid_apply(i: int, tau: Involution) -> Involution:
    """m(s_i) . tau by the three-case rule.

    >>> monoid_apply(1, identity_involution(2)).cycles_string()
    '(1,2)'
    >>> monoid_apply(1, parse_involution("(1,2)", 2)).cycles_string()
    '(1,2)'
    >>> monoid_apply(2, parse_involution("(1,2)", 3)).cycles_string()
    '(1,3)'
    """
    perm = tau.perm
    if not 1 <= i <= perm.n - 1:
        raise IndexError("generator index %d out of range 1..%d" % (i, perm.n - 1))
    if perm(i + 1) < perm(i):
        return tau
    if perm(i) == i and perm(i + 1) == i + 1:
        return Involution(perm.left_multiply_s(i))
    return Involution(perm.right_multiply_s(i).left_multiply_s(i))


def monoid_apply_word(w: Permutation, tau: Involution) -> Involution:
    """m(w) . tau along a reduced word of w, rightmost generator first."""
    if w.n != tau.n:
        raise ValueError("rank mismatch: %d vs %d" % (w.n, tau.n))
    result = tau
    for i in reversed(reduced_word(w)):
        result = monoid_apply(i, result)
    return result


@dataclass(frozen=True)
class InvolutionDiagram:
    """Dhat(tau) with its diagonal part, strict part, code and length."""

    d_all: frozenset[tuple[int, int]]
    d1: frozenset[tuple[int, int]]
    d2: frozenset[tuple[int, int]]
    inv_code: tuple[int, ...]
    inv_length: int


def involution_diagram(tau: Involution) -> InvolutionDiagram:
    """The weakly-lower-triangular part of the Rothe diagram of tau.

    >>> involution_diagram(parse_involution("(1,3)", 3)).inv_length
    2
    """
    n = tau.n
    cells = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if j < tau(i) and i < tau(j) and i <= j
    )
    d1 = frozenset(c for c in cells if c[0] == c[1])
    d2 = frozenset(c for c in cells if c[0] < c[1])
    row_counts = [0] * n
    for (i, _) in cells:
        row_counts[i - 1] += 1
    return InvolutionDiagram(cells, d1, d2, tuple(row_counts), len(cells))


def involution_length(tau: Involution) -> int:
    return involution_diagram(tau).inv_length


def involutions(n: int) -> Iterator[Involution]:
    """All involutions of [n], in lexicographic one-line order."""

    def build(remaining: tuple[int, ...], images: dict[int, int]) -> Iterator[dict[int, int]]:
        if not remaining:
            yield dict(images)
            return
        first, rest = remaining[0], remaining[1:]
        images[first] = first
        yield from build(rest, images)
        del images[first]
        for idx, partner in enumerate(rest):
            images[first], images[partner] = partner, first
            yield from build(rest[:idx] + rest[idx + 1 :], images)
            del images[first], images[partner]

    collected = [
        Involution(Permutation(mapping[i] for i in range(1, n + 1)))
        for mapping in build(tuple(range(1, n + 1)), {})
    ]
    collected.sort(key=lambda t: t.oneline)
    yield from collected


# ---------------------------------------------------------------------------
# Weak order graph (shared by the mu-involution module)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeakOrderGraph:
    """A rank-labeled directed multigraph with generator-labeled edges.

    Vertices are identified by index into ``vertices``; each vertex carries
    its one-line notation, a display label and its rank.  Edges are
    (from_index, generator, to_index) triples.  Vertex order is
    deterministic: by (rank, one-line notation).
    """

    name: str
    vertices: tuple[tuple[tuple[int, ...], str, int], ...]
    edges: tuple[tuple[int, int, int], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def rank_profile(self) -> tuple[int, ...]:
        if not self.vertices:
            return ()
        top = max(rank for (_, _, rank) in self.vertices)
        profile = [0] * (top + 1)
        for (_, _, rank) in self.vertices:
            profile[rank] += 1
        return tuple(profile)

    def index_of(self, oneline: tuple[int, ...]) -> int:
        for idx, (ol, _, _) in enumerate(self.vertices):
            if ol == oneline:
                return idx
        raise KeyError("vertex %r not in graph" % (oneline,))

    def has_edge(self, from_oneline: tuple[int, ...], gen: int, to_oneline: tuple[int, ...]) -> bool:
        u, v = self.index_of(from_oneline), self.index_of(to_oneline)
        return (u, gen, v) in self.edges

    def minimal_vertices(self) -> tuple[int, ...]:
        targets = {v for (_, _, v) in self.edges}
        return tuple(i for i in range(len(self.vertices)) if i not in targets)

    def maximal_vertices(self) -> tuple[int, ...]:
        sources = {u for (u, _, _) in self.edges}
        return tuple(i for i in range(len(self.vertices)) if i not in sources)

    def to_dot(self) -> str:
        lines = ["digraph %s {" % self.name]
        for idx, (_, label, _) in enumerate(self.vertices):
            lines.append('  n%d [label="%s"];' % (idx, label))
        for (u, gen, v) in self.edges:
            lines.append('  n%d -> n%d [label="s_%d"];' % (u, v, gen))
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "vertices": [
                {
                    "id": idx,
                    "oneline": "[" + ",".join(str(v) for v in ol) + "]",
                    "cycles": label,
                    "rank": rank,
                }
                for idx, (ol, label, rank) in enumerate(self.vertices)
            ],
            "edges": [
                {"from": u, "to": v, "label": "s_%d" % gen}
                for (u, gen, v) in self.edges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = ["%s: %d vertices, %d edges" % (self.name, len(self.vertices), len(self.edges))]
        for idx, (ol, label, rank) in enumerate(self.vertices):
            lines.append(
                "  n%d rank=%d %s %s"
                % (idx, rank, "[" + ",".join(str(v) for v in ol) + "]", label)
            )
        for (u, gen, v) in self.edges:
            lines.append("  n%d -s_%d-> n%d" % (u, gen, v))
        return "\n".join(lines) + "\n"


def build_weak_order_graph(
    name: str,
    elements: Sequence,
    rank_fn: Callable,
    label_fn: Callable,
    oneline_fn: Callable,
    apply_fn: Callable,
    generators: Sequence[int],
) -> WeakOrderGraph:
    """Assemble a WeakOrderGraph from an action (shared involution/mu code).

    An edge (tau, j, tau') is recorded whenever apply_fn(j, tau) = tau'
    differs from tau; the stay case never materializes a self-loop.
    """
    decorated = sorted(
        ((rank_fn(el), oneline_fn(el), el) for el in elements),
        key=lambda t: (t[0], t[1]),
    )
    index = {ol: idx for idx, (_, ol, _) in enumerate(decorated)}
    vertices = tuple(
        (ol, label_fn(el), rank) for (rank, ol, el) in decorated
    )
    edges: list[tuple[int, int, int]] = []
    for idx, (_, ol, el) in enumerate(decorated):
        for j in generators:
            image = apply_fn(j, el)
            image_ol = oneline_fn(image)
            if image_ol != ol:
                edges.append((idx, j, index[image_ol]))
    edges.sort()
    return WeakOrderGraph(name, vertices, tuple(edges))


def weak_order_graph(n: int, max_n: int = POSET_RANK_BOUND) -> WeakOrderGraph:
    """The labeled weak-order digraph on all involutions of [n].

    >>> weak_order_graph(2).rank_profile()
    (1, 1)
    """
    if n > max_n:
        raise EnumerationBoundError(
            "poset construction for n=%d exceeds the bound %d" % (n, max_n)
        )
    return build_weak_order_graph(
        "involutions_%d" % n,
        list(involutions(n)),
        rank_fn=involution_length,
        label_fn=lambda t: t.cycles_string(),
        oneline_fn=lambda t: t.oneline,
        apply_fn=monoid_apply,
        generators=range(1, n),
    )


def weak_le(tau: Involution, tau_prime: Involution) -> bool:
    """True iff tau <= tau' in weak order (tau' reachable by raising moves)."""
    if tau.n != tau_prime.n:
        raise ValueError("rank mismatch")
    target_rank = involution_length(tau_prime)
    seen = {tau.oneline}
    frontier = [tau]
    while frontier:
        nxt = []
        for t in frontier:
            if t.oneline == tau_prime.oneline:
                return True
            if involution_length(t) >= target_rank:
                continue
            for i in range(1, t.n):
                image = monoid_apply(i, t)
                if image.oneline not in seen:
                    seen.add(image.oneline)
                    nxt.append(image)
        frontier = nxt
    return tau.oneline == tau_prime.oneline


# ---------------------------------------------------------------------------
# Atoms
# ---------------------------------------------------------------------------


def _wset_conditions(v: Permutation, tau: Involution) -> bool:
    # The closed three-condition test; satisfied exactly by the inverses of
    # the atoms of tau (cross-checked against brute force in the tests).
    cyc = tau.cyc
    for (i, j) in cyc:
        if v(i) < v(j):
            return False
        if any(v(i) > v(k) > v(j) for k in range(i + 1, j)):
            return False
    for (i, j) in cyc:
        for (k, l) in cyc:
            if i < k and j < l:
                if not (v(k) >= v(l) > v(i) >= v(j)):
                    return False
    return True


def atoms(tau: Involution) -> frozenset[Permutation]:
    """The atom set A(tau) via the closed characterization.

    >>> sorted(w.compact() for w in atoms(parse_involution("(1,5)(2,3)", 5)))
    ['32451', '32514', '35124', '51324']
    """
    return frozenset(
        w for w in all_permutations(tau.n) if _wset_conditions(w.inverse(), tau)
    )


def atoms_bruteforce(
    tau: Involution, max_n: int = BRUTE_FORCE_BOUND
) -> frozenset[Permutation]:
    """A(tau) by the definition: all w with m(w).id = tau, l(w) = lhat(tau)."""
    if tau.n > max_n:
        raise EnumerationBoundError(
            "brute force over S_%d exceeds the bound %d" % (tau.n, max_n)
        )
    target_length = involution_length(tau)
    base = identity_involution(tau.n)
    return frozenset(
        w
        for w in all_permutations(tau.n)
        if w.length() == target_length and monoid_apply_word(w, base) == tau
    )


def _relative_conditions(v: Permutation, tau: Involution, tau_prime: Involution) -> bool:
    # Five-condition test for relative atoms, applied (like the absolute
    # case) to the inverse v = w^{-1}; brute force remains the normative
    # definition and the test suite reports any divergence.
    cyc_prime = tau_prime.cyc
    cyc_set = set(tau.cyc)
    fix_set = set(tau.fix)
    for (i, j) in cyc_prime:
        if v(i) < v(j):
            if (v(i), v(j)) not in cyc_set:
                return False
        else:
            if v(i) not in fix_set or v(j) not in fix_set:
                return False
    for (i, j) in cyc_prime:
        for (k, l) in cyc_prime:
            if (i, j) == (k, l):
                continue
            if j < k:  # i <= j < k <= l
                if not (v(i) < v(k) and v(i) < v(l) and v(j) < v(k) and v(j) < v(l)):
                    return False
            elif i < k < j < l:
                if not (v(i) < v(k) and v(i) < v(l) and v(j) < v(l)):
                    return False
            elif i < k < l < j:
                if v(j) < v(k) < v(i):
                    return False
                if v(j) < v(l) < v(i):
                    return False
                if v(k) < v(i) < v(j) < v(l):
                    return False
                if v(k) < v(j) <= v(i) < v(l):
                    return False
            elif i < k == l < j:
                if v(j) < v(k) < v(i):
                    return False
    return True


def relative_atoms(tau: Involution, tau_prime: Involution) -> frozenset[Permutation]:
    """A_*(tau, tau') via the five-condition characterization.

    Empty when tau is not below tau' in weak order.
    """
    if tau.n != tau_prime.n:
        raise ValueError("rank mismatch")
    if not weak_le(tau, tau_prime):
        return frozenset()
    return frozenset(
        w
        for w in all_permutations(tau.n)
        if _relative_conditions(w.inverse(), tau, tau_prime)
    )


def relative_atoms_bruteforce(
    tau: Involution, tau_prime: Involution, max_n: int = BRUTE_FORCE_BOUND
) -> frozenset[Permutation]:
    """A_*(tau, tau') by the definition."""
    if tau.n != tau_prime.n:
        raise ValueError("rank mismatch")
    if tau.n > max_n:
        raise EnumerationBoundError(
            "brute force over S_%d exceeds the bound %d" % (tau.n, max_n)
        )
    gap = involution_length(tau_prime) - involution_length(tau)
    if gap < 0:
        return frozenset()
    return frozenset(
        w
        for w in all_permutations(tau.n)
        if w.length() == gap and monoid_apply_word(w, tau) == tau_prime
    )


# ---------------------------------------------------------------------------
# Involution Schubert polynomials
# ---------------------------------------------------------------------------


def closed_orbit_polynomial(n: int) -> IntPolynomial:
    """Shat of the longest involution:
    x1 ... x_{floor(n/2)} * prod over 0 < i < j <= n - i of (x_i + x_j).

    >>> print(closed_orbit_polynomial(3))
    x1^2 + x1*x2
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    poly = ONE
    for i in range(1, n // 2 + 1):
        poly = poly * variable(i)
    for i in range(1, n + 1):
        for j in range(i + 1, n - i + 1):
            poly = poly * (variable(i) + variable(j))
    return poly


_INV_SCHUBERT_CACHE: dict[tuple[int, tuple[int, ...]], IntPolynomial] = {}


def clear_inv_schubert_cache() -> None:
    _INV_SCHUBERT_CACHE.clear()


def _raising_chain(tau: Involution) -> list[int]:
    # Labels of the greedy chain tau -> ... -> w0, smallest raising
    # generator first at every step.
    labels: list[int] = []
    current = tau
    top = longest(tau.n).oneline
    guard = involution_length(longest_involution(tau.n)) + 1
    while current.oneline != top:
        for i in range(1, current.n):
            image = monoid_apply(i, current)
            if image != current:
                labels.append(i)
                current = image
                break
        else:
            raise AssertionError(
                "no raising generator found below the maximum at %s" % current
            )
        if len(labels) > guard:
            raise AssertionError("raising chain failed to terminate")
    return labels


def inv_schubert(tau: Involution) -> IntPolynomial:
    """Shat_tau: divided differences along any chain up to w0.

    Chain-independence is a property of the action and is asserted by the
    test suite; this implementation uses the greedy smallest-label chain.

    >>> print(inv_schubert(longest_involution(3)))
    x1^2 + x1*x2
    >>> print(inv_schubert(identity_involution(3)))
    1
    """
    key = (tau.n, tau.oneline)
    cached = _INV_SCHUBERT_CACHE.get(key)
    if cached is not None:
        return cached
    poly = closed_orbit_polynomial(tau.n)
    for i in reversed(_raising_chain(tau)):
        poly = divided_difference(poly, i)
    _INV_SCHUBERT_CACHE[key] = poly
    return poly


def inv_schubert_dominant(tau: Involution) -> IntPolynomial:
    """Shat_tau for dominant tau, as the diagram product
    prod_{(i,i) in Dhat_1} x_i * prod_{(i,j) in Dhat_2} (x_i + x_j).

    Also checks the equivalent half-sum form
    2^kappa * result = prod_{(i,j) in Dhat} (x_i + x_j).
    """
    if not is_dominant(tau.perm):
        raise ValueError("%s is not a dominant involution" % tau)
    diagram = involution_diagram(tau)
    poly = ONE
    for (i, _) in sorted(diagram.d1):
        poly = poly * variable(i)
    for (i, j) in sorted(diagram.d2):
        poly = poly * (variable(i) + variable(j))
    full = ONE
    for (i, j) in sorted(diagram.d_all):
        full = full * (variable(i) + variable(j))
    if poly.scale(2 ** tau.kappa) != full:
        raise AssertionError(
            "half-sum form disagrees with the diagram product for %s" % tau
        )
    return poly


if __name__ == "__main__":
    import doctest

    doctest.testmod()
