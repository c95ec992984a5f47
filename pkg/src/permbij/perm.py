"""
Permutations of {1, ..., n} in one-line notation.

A permutation is a sequence of the integers 1..n containing each value
exactly once.  Functions accept any such sequence and return plain tuples.
Positions and values are both 1-based throughout, so ``perm[i - 1]`` is the
value at position ``i``.

The module covers the word symmetries (reverse, complement, inverse and
their composites), detection of 321- and 132-patterns, the fixed-point and
excedance statistics, and brute-force enumeration of the avoidance classes
S_n(321) and S_n(132), which the rest of the package uses as its exhaustive
test bed.
"""
from __future__ import annotations

import functools
import itertools
import math
from typing import Iterator, Sequence

Perm = tuple[int, ...]

#: patterns understood by avoids() and enumerate_avoiders()
PATTERNS = ("321", "132")

#: largest n enumerate_avoiders() accepts unless the caller raises the cap
ENUMERATION_CAP = 10


def is_permutation(word: Sequence[int]) -> bool:
    """
    Check that ``word`` contains each of 1..len(word) exactly once.

    >>> [is_permutation(w) for w in [(1,), (2, 1), (), (1, 3), (1, 1, 2)]]
    [True, True, False, False, False]
    """
    n = len(word)
    return n >= 1 and sorted(word) == list(range(1, n + 1))


def parse_permutation(text: str) -> Perm:
    """
    Parse whitespace- or comma-separated values, or a contiguous digit
    string such as "14237586" (accepted only while every value is a single
    digit, i.e. n <= 9).

    >>> parse_permutation("1 4 2 3 7 5 8 6")
    (1, 4, 2, 3, 7, 5, 8, 6)
    >>> parse_permutation("14237586")
    (1, 4, 2, 3, 7, 5, 8, 6)
    >>> parse_permutation("3, 1, 2")
    (3, 1, 2)
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError("empty permutation text")
    if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0].isdigit():
        if len(tokens[0]) > 9:
            raise ValueError(
                f"digit string {tokens[0]!r} has more than 9 entries; "
                "use separators for n >= 10"
            )
        tokens = list(tokens[0])
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise ValueError(f"invalid token {tok!r}") from None
    n = len(values)
    seen = set()
    for v in values:
        if not 1 <= v <= n:
            raise ValueError(f"value {v} out of range 1..{n}")
        if v in seen:
            raise ValueError(f"duplicate value {v}")
        seen.add(v)
    return tuple(values)


def format_permutation(perm: Sequence[int], compact: bool = False) -> str:
    """
    Canonical text form: space-separated values.  ``compact=True`` gives
    the digit-string form, which only exists for n <= 9.

    >>> format_permutation((1, 4, 2, 3, 7, 5, 8, 6))
    '1 4 2 3 7 5 8 6'
    >>> format_permutation((1, 4, 2, 3, 7, 5, 8, 6), compact=True)
    '14237586'
    """
    if compact:
        if len(perm) > 9:
            raise ValueError(f"compact form needs n <= 9, got n={len(perm)}")
        return "".join(str(v) for v in perm)
    return " ".join(str(v) for v in perm)


def identity(n: int) -> Perm:
    """The increasing word 1 2 ... n."""
    return tuple(range(1, n + 1))


def bar(value: int, n: int) -> int:
    """
    The reflection v -> n + 1 - v, an involution on 1..n.

    >>> [bar(v, 8) for v in (1, 4, 8)]
    [8, 5, 1]
    """
    return n + 1 - value


def inverse(perm: Sequence[int]) -> Perm:
    """
    The inverse permutation: position of each value.

    >>> inverse((1, 4, 2, 3, 7, 5, 8, 6))
    (1, 3, 4, 2, 6, 8, 5, 7)
    """
    inv = [0] * len(perm)
    for pos, value in enumerate(perm, start=1):
        inv[value - 1] = pos
    return tuple(inv)


def reverse(perm: Sequence[int]) -> Perm:
    """Read the word right to left."""
    return tuple(reversed(perm))


def complement(perm: Sequence[int]) -> Perm:
    """Replace every value v by n + 1 - v."""
    n = len(perm)
    return tuple(n + 1 - v for v in perm)


def reverse_complement(perm: Sequence[int]) -> Perm:
    """
    Reverse and complement combined.  Reverse acts on positions and
    complement on values, so the two commute and this is an involution.

    >>> reverse_complement((1, 4, 2, 3, 7, 5, 8, 6))
    (3, 1, 4, 2, 6, 7, 5, 8)
    """
    n = len(perm)
    return tuple(n + 1 - v for v in reversed(perm))


def inverse_reverse_complement(perm: Sequence[int]) -> Perm:
    """The inverse of the reverse-complement."""
    return inverse(reverse_complement(perm))


def avoids(perm: Sequence[int], pattern: str) -> bool:
    """
    True iff no position triple i < j < k is order-isomorphic to the
    pattern: "321" means perm[i] > perm[j] > perm[k], "132" means
    perm[j] > perm[k] > perm[i].

    >>> avoids((1, 4, 2, 3, 7, 5, 8, 6), "321")
    True
    >>> avoids((3, 2, 1), "321")
    False
    """
    if pattern == "321":
        return not _contains_321(perm)
    if pattern == "132":
        return not _contains_132(perm)
    raise ValueError(f"unknown pattern {pattern!r}; expected one of {PATTERNS}")


def _contains_321(word: Sequence[int]) -> bool:
    # plain triple scan, short-circuiting on the first witness
    n = len(word)
    for i in range(n - 2):
        a = word[i]
        for j in range(i + 1, n - 1):
            b = word[j]
            if b >= a:
                continue
            for k in range(j + 1, n):
                if word[k] < b:
                    return True
    return False


def _contains_132(word: Sequence[int]) -> bool:
    # plain triple scan, short-circuiting on the first witness
    n = len(word)
    for i in range(n - 2):
        a = word[i]
        for j in range(i + 1, n - 1):
            b = word[j]
            if b <= a:
                continue
            for k in range(j + 1, n):
                if a < word[k] < b:
                    return True
    return False


def smallest_132(perm: Sequence[int]) -> tuple[int, int, int] | None:
    """
    The lexicographically least position triple (i, j, k), 1-based, forming
    a 132-pattern, or None when the word avoids 132.  Triples are scanned
    in lexicographic order, so the first hit is the minimum.

    >>> smallest_132((1, 4, 2, 3, 7, 5, 8, 6))
    (1, 2, 3)
    >>> smallest_132((1, 2, 3)) is None
    True
    """
    n = len(perm)
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            if perm[j] <= perm[i]:
                continue
            for k in range(j + 1, n):
                if perm[i] < perm[k] < perm[j]:
                    return (i + 1, j + 1, k + 1)
    return None


def fixed_points(perm: Sequence[int]) -> int:
    """Number of positions with perm[i] == i."""
    return sum(1 for pos, v in enumerate(perm, start=1) if v == pos)


def excedances(perm: Sequence[int]) -> int:
    """Number of positions with perm[i] > i."""
    return sum(1 for pos, v in enumerate(perm, start=1) if v > pos)


def two_one_classify(perm: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    """
    Split the positions of a 321-avoider by their role in 21-patterns:
    position i is a "2" when some later value is smaller, and a "1" when
    some earlier value is larger.  No position plays both roles (that would
    make a 321-pattern) and the values along each class increase left to
    right; both facts are asserted.

    >>> two, one = two_one_classify((2, 1))
    >>> (sorted(two), sorted(one))
    ([1], [2])
    """
    if not avoids(perm, "321"):
        raise ValueError("permutation contains a 321-pattern")
    n = len(perm)
    twos = frozenset(
        i + 1 for i in range(n) if any(perm[j] < perm[i] for j in range(i + 1, n))
    )
    ones = frozenset(
        j + 1 for j in range(n) if any(perm[i] > perm[j] for i in range(j))
    )
    assert not (twos & ones), "a position acted as both a 2 and a 1"
    for positions in (twos, ones):
        values = [perm[p - 1] for p in sorted(positions)]
        assert values == sorted(values), "class values are not increasing"
    return twos, ones


def catalan(n: int) -> int:
    """
    The n-th Catalan number (2n choose n) / (n + 1), the common size of
    S_n(321) and S_n(132).

    >>> [catalan(n) for n in range(1, 6)]
    [1, 2, 5, 14, 42]
    """
    return math.comb(2 * n, n) // (n + 1)


@functools.lru_cache(maxsize=None)
def _avoider_list(n: int, pattern: str) -> tuple[Perm, ...]:
    check = _contains_321 if pattern == "321" else _contains_132
    return tuple(
        word for word in itertools.permutations(range(1, n + 1)) if not check(word)
    )


def enumerate_avoiders(
    n: int, pattern: str, cap: int = ENUMERATION_CAP
) -> Iterator[Perm]:
    """
    Yield S_n(pattern) in lexicographic order, by brute-force filtering of
    all n! words.  The count always equals catalan(n).  Guarded by a cap
    because the filter walks every word of S_n.

    >>> [format_permutation(p, compact=True) for p in enumerate_avoiders(3, "321")]
    ['123', '132', '213', '231', '312']
    """
    if pattern not in PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}; expected one of {PATTERNS}")
    if not 1 <= n <= cap:
        raise ValueError(f"n={n} outside 1..{cap}; pass a larger cap to go higher")
    yield from _avoider_list(n, pattern)
