"""
Permutations of [n] = {1, ..., n} in one-line notation, with inversions,
reduced words, Rothe diagrams, Lehmer codes and dominance.

All indices and values are 1-based, matching the usual combinatorics
conventions.  Permutations are immutable and hashable.

>>> w = Permutation([3, 2, 4, 5, 1])
>>> w(1), w(5)
(3, 1)
>>> w.inverse()
Permutation([5, 2, 1, 3, 4])
>>> w.length()
5
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Permutation",
    "RotheDiagram",
    "identity",
    "longest",
    "simple_transposition",
    "compose",
    "inverse",
    "length",
    "reduced_word",
    "all_reduced_words",
    "rothe_diagram",
    "code",
    "permutation_from_code",
    "is_dominant",
    "string_as_permutation",
    "standardize",
    "all_permutations",
    "parse_permutation",
    "product_of_word",
    "EnumerationBoundError",
    "ReducedWordBoundError",
    "REDUCED_WORD_LENGTH_CAP",
]

# all_reduced_words refuses inputs longer than this (the number of words
# grows factorially; exceeding the cap is an error, never silent truncation).
REDUCED_WORD_LENGTH_CAP = 20


class EnumerationBoundError(ValueError):
    """Raised when an enumeration would exceed a configured bound."""


class ReducedWordBoundError(EnumerationBoundError):
    """Raised when reduced-word enumeration would exceed the length cap."""


class Permutation:
    """A bijection of [n], stored in one-line notation.

    >>> Permutation([2, 1, 3]) * Permutation([1, 3, 2])
    Permutation([2, 3, 1])
    """

    __slots__ = ("_images", "_length")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        if n == 0:
            raise ValueError("rank must be at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(
                "one-line notation must list each of 1..%d exactly once, got %r"
                % (n, list(images))
            )
        self._images = images
        self._length = None

    @property
    def oneline(self) -> tuple[int, ...]:
        return self._images

    @property
    def n(self) -> int:
        return len(self._images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError("position %d out of range 1..%d" % (i, self.n))
        return self._images[i - 1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return "Permutation(%r)" % (list(self._images),)

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self._images) + "]"

    def compact(self) -> str:
        """One-line notation as a digit string (only defined for n <= 9)."""
        if self.n > 9:
            raise ValueError("compact digit form is ambiguous for n > 9")
        return "".join(str(v) for v in self._images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self._images, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        """Number of inversions, i.e. pairs i < j with w(i) > w(j)."""
        if self._length is None:
            imgs = self._images
            self._length = sum(
                1
                for i in range(len(imgs))
                for j in range(i + 1, len(imgs))
                if imgs[i] > imgs[j]
            )
        return self._length

    def right_multiply_s(self, i: int) -> "Permutation":
        """w * s_i: swap the entries in positions i and i+1."""
        if not 1 <= i <= self.n - 1:
            raise IndexError("generator index %d out of range 1..%d" % (i, self.n - 1))
        imgs = list(self._images)
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
        return Permutation(imgs)

    def left_multiply_s(self, i: int) -> "Permutation":
        """s_i * w: swap the values i and i+1 wherever they occur."""
        if not 1 <= i <= self.n - 1:
            raise IndexError("generator index %d out of range 1..%d" % (i, self.n - 1))
        swap = {i: i + 1, i + 1: i}
        return Permutation(swap.get(v, v) for v in self._images)

    def descents(self) -> tuple[int, ...]:
        """Indices i with w(i) > w(i+1)."""
        imgs = self._images
        return tuple(i for i in range(1, len(imgs)) if imgs[i - 1] > imgs[i])

    def ascents(self) -> tuple[int, ...]:
        """Indices i with w(i) < w(i+1)."""
        imgs = self._images
        return tuple(i for i in range(1, len(imgs)) if imgs[i - 1] < imgs[i])

    def is_involution(self) -> bool:
        return all(self._images[v - 1] == i + 1 for i, v in enumerate(self._images))


@dataclass(frozen=True)
class RotheDiagram:
    """Cells {(i,j) : j < w(i) and i < w^{-1}(j)} and the code of w."""

    cells: frozenset[tuple[int, int]]
    code: tuple[int, ...]


def identity(n: int) -> Permutation:
    """The identity permutation [1, 2, ..., n].

    >>> identity(3)
    Permutation([1, 2, 3])
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    return Permutation(range(1, n + 1))


def longest(n: int) -> Permutation:
    """The longest permutation w_0, with w_0(i) = n + 1 - i.

    >>> longest(4)
    Permutation([4, 3, 2, 1])
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    return Permutation(range(n, 0, -1))


def simple_transposition(i: int, n: int) -> Permutation:
    """s_i in S_n, swapping i and i+1."""
    return identity(n).right_multiply_s(i)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u * v)(i) = u(v(i)).  Ranks must agree."""
    if u.n != v.n:
        raise ValueError("rank mismatch: %d vs %d" % (u.n, v.n))
    return Permutation(u.oneline[j - 1] for j in v.oneline)


def inverse(w: Permutation) -> Permutation:
    return w.inverse()


def length(w: Permutation) -> int:
    return w.length()


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A reduced word for w (product of s_i, leftmost factor first).

    Deterministic: repeatedly lifts the leftmost descent, so the same
    permutation always yields the same word.

    >>> reduced_word(Permutation([3, 2, 1]))
    (1, 2, 1)
    >>> reduced_word(identity(4))
    ()
    """
    word: list[int] = []
    current = w
    while True:
        descents = current.descents()
        if not descents:
            break
        i = descents[0]
        word.append(i)
        current = current.right_multiply_s(i)
    # current steps track w * s_{i_1} * ... * s_{i_k} = id, so
    # w = s_{i_k} * ... * s_{i_1}.
    return tuple(reversed(word))


def all_reduced_words(w: Permutation, length_cap: int = REDUCED_WORD_LENGTH_CAP) -> frozenset[tuple[int, ...]]:
    """Every reduced word of w.

    Raises ReducedWordBoundError when l(w) exceeds ``length_cap``.

    >>> sorted(all_reduced_words(Permutation([3, 2, 1])))
    [(1, 2, 1), (2, 1, 2)]
    """
    if w.length() > length_cap:
        raise ReducedWordBoundError(
            "l(w) = %d exceeds the enumeration cap %d" % (w.length(), length_cap)
        )

    def recurse(v: Permutation) -> frozenset[tuple[int, ...]]:
        descents = v.descents()
        if not descents:
            return frozenset({()})
        words = set()
        for i in descents:
            for prefix in recurse(v.right_multiply_s(i)):
                words.add(prefix + (i,))
        return frozenset(words)

    return recurse(w)


def product_of_word(word: Sequence[int], n: int) -> Permutation:
    """s_{i_1} * s_{i_2} * ... * s_{i_k} in S_n."""
    result = identity(n)
    for i in word:
        result = result.right_multiply_s(i)
    return result


def rothe_diagram(w: Permutation) -> RotheDiagram:
    """Rothe diagram and code of w.

    >>> rothe_diagram(Permutation([6, 4, 3, 5, 7, 2, 1])).code
    (5, 3, 2, 2, 2, 1, 0)
    """
    winv = w.inverse()
    cells = frozenset(
        (i, j)
        for i in range(1, w.n + 1)
        for j in range(1, w.n + 1)
        if j < w(i) and i < winv(j)
    )
    row_counts = [0] * w.n
    for (i, _) in cells:
        row_counts[i - 1] += 1
    return RotheDiagram(cells, tuple(row_counts))


def code(w: Permutation) -> tuple[int, ...]:
    """Lehmer code: c_i = #{j > i : w(j) < w(i)}."""
    imgs = w.oneline
    return tuple(
        sum(1 for j in range(i + 1, len(imgs)) if imgs[j] < imgs[i])
        for i in range(len(imgs))
    )


def permutation_from_code(c: Sequence[int]) -> Permutation:
    """Inverse of :func:`code`: rebuild w with code c.

    The i-th entry is the (c_i + 1)-th smallest value not yet used.

    >>> permutation_from_code((5, 3, 2, 2, 2, 1, 0))
    Permutation([6, 4, 3, 5, 7, 2, 1])
    """
    n = len(c)
    available = list(range(1, n + 1))
    images = []
    for i, ci in enumerate(c):
        if not 0 <= ci <= n - i - 1:
            raise ValueError("entry %d of %r is not a valid code entry" % (ci, list(c)))
        images.append(available.pop(ci))
    return Permutation(images)


def is_dominant(w: Permutation) -> bool:
    """True iff w is 132-avoiding (no i < j < k with w(i) < w(k) < w(j)).

    >>> is_dominant(Permutation([6, 4, 3, 5, 7, 2, 1]))
    True
    >>> is_dominant(Permutation([1, 3, 2]))
    False
    """
    imgs = w.oneline
    n = len(imgs)
    for i in range(n):
        for j in range(i + 1, n):
            if imgs[i] >= imgs[j]:
                continue
            for k in range(j + 1, n):
                if imgs[i] < imgs[k] < imgs[j]:
                    return False
    return True


def string_as_permutation(letters: Sequence[int]) -> dict[int, int]:
    """Read a string of distinct letters as a permutation of its alphabet.

    The alphabet is the set of letters ordered increasingly; the i-th
    smallest alphabet element maps to the i-th letter.

    >>> string_as_permutation([5, 2, 6, 4])
    {2: 5, 4: 2, 5: 6, 6: 4}
    """
    letters = tuple(letters)
    if len(set(letters)) != len(letters):
        raise ValueError("letters must be distinct, got %r" % (list(letters),))
    alphabet = sorted(letters)
    return dict(zip(alphabet, letters))


def standardize(letters: Sequence[int]) -> Permutation:
    """Replace each letter by its rank in the alphabet (smallest -> 1).

    The result is the permutation of [m] order-isomorphic to the string.

    >>> standardize([5, 8, 6])
    Permutation([1, 3, 2])
    """
    letters = tuple(letters)
    rank = {v: r for r, v in enumerate(sorted(set(letters)), start=1)}
    if len(rank) != len(letters):
        raise ValueError("letters must be distinct, got %r" % (list(letters),))
    return Permutation(rank[v] for v in letters)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    for images in _itertools_permutations(range(1, n + 1)):
        yield Permutation(images)


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse one-line notation.

    Accepts the bracketed comma form "[3,2,4,5,1]" for any rank, or the
    compact digit form "32451" for n <= 9.

    >>> parse_permutation("[3,2,4,5,1]") == parse_permutation("32451")
    True
    """
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        body = text[1:-1].strip()
        if not body:
            raise ValueError("empty permutation %r" % text)
        try:
            images = [int(part) for part in body.split(",")]
        except ValueError:
            raise ValueError("cannot parse permutation %r" % text) from None
    else:
        if not text.isdigit():
            raise ValueError("cannot parse permutation %r" % text)
        if len(text) > 9:
            raise ValueError(
                "compact digit form is only accepted for n <= 9; "
                "use the bracketed form [ ... ] instead"
            )
        images = [int(ch) for ch in text]
    w = Permutation(images)
    if n is not None and w.n != n:
        raise ValueError("permutation %r has rank %d, expected %d" % (text, w.n, n))
    return w


def render_mapping(mapping: Mapping[int, int]) -> str:
    """Render an alphabet mapping deterministically, e.g. "{2->5, 4->2}"."""
    parts = ["%d->%d" % (k, mapping[k]) for k in sorted(mapping)]
    return "{" + ", ".join(parts) + "}"


if __name__ == "__main__":
    import doctest

    doctest.testmod()
