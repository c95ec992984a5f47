"""
Two-row insertion and recording tableaux, the balanced up-down word they
define, and the staircase region that word cuts out of the square grid.

Only the two-row case is implemented: a bumped entry always lands at the
end of the second row, never deeper.  Words whose insertion would need a
third row (exactly those containing a 321-pattern) are rejected.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence

from .grid import Template
from .perm import Perm

UP = "u"
DOWN = "d"

_SWAP_STEPS = str.maketrans({UP: DOWN, DOWN: UP})


@dataclass(frozen=True)
class TwoRowTableau:
    """A standard Young tableau of at most two rows on {1, ..., n}."""

    row1: tuple[int, ...]
    row2: tuple[int, ...] = ()

    def __post_init__(self):
        r1, r2 = self.row1, self.row2
        if len(r1) < len(r2):
            raise ValueError("first row is shorter than the second")
        for row in (r1, r2):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {row} is not strictly increasing")
        if sorted(r1 + r2) != list(range(1, len(r1) + len(r2) + 1)):
            raise ValueError("rows must partition 1..n")
        if any(r2[j] <= r1[j] for j in range(len(r2))):
            raise ValueError("columns must increase downward")

    @property
    def size(self) -> int:
        return len(self.row1) + len(self.row2)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row1), len(self.row2))


def rsk_tableaux(perm: Sequence[int]) -> tuple[TwoRowTableau, TwoRowTableau]:
    """
    Row insertion, left to right.  A value larger than everything in the
    first row is appended there; otherwise it bumps the leftmost larger
    first-row entry to the end of the second row.  The recording tableau
    stores, in the cell each step fills for the first time, the index of
    that step.  Raises when a bumped entry would land below the current end
    of the second row, which happens iff the input contains a 321-pattern.

    >>> ins, rec = rsk_tableaux((1, 4, 2, 3, 7, 5, 8, 6))
    >>> ins.row1, ins.row2
    ((1, 2, 3, 5, 6), (4, 7, 8))
    >>> rec.row1, rec.row2
    ((1, 2, 4, 5, 7), (3, 6, 8))
    """
    ins1: list[int] = []
    ins2: list[int] = []
    rec1: list[int] = []
    rec2: list[int] = []
    for step, value in enumerate(perm, start=1):
        if not ins1 or value > ins1[-1]:
            ins1.append(value)
            rec1.append(step)
            continue
        j = bisect_left(ins1, value)
        bumped = ins1[j]
        ins1[j] = value
        if ins2 and bumped < ins2[-1]:
            raise ValueError(
                "insertion needs a third row: permutation contains a 321-pattern"
            )
        ins2.append(bumped)
        rec2.append(step)
    return (
        TwoRowTableau(tuple(ins1), tuple(ins2)),
        TwoRowTableau(tuple(rec1), tuple(rec2)),
    )


def _half_word(tableau: TwoRowTableau) -> str:
    first_row = set(tableau.row1)
    return "".join(UP if i in first_row else DOWN for i in range(1, tableau.size + 1))


def dyck_from_tableaux(ins: TwoRowTableau, rec: TwoRowTableau) -> str:
    """
    First half: scan the values 1..n, writing 'u' for each value in the
    insertion tableau's first row and 'd' for each in its second.  Second
    half: build the same word from the recording tableau, reverse it, and
    interchange 'u' with 'd'.  The concatenation is always a balanced
    up-down word.

    >>> dyck_from_tableaux(*rsk_tableaux((1, 4, 2, 3, 7, 5, 8, 6)))
    'uuuduuddududdudd'
    """
    if ins.shape != rec.shape:
        raise ValueError(f"tableau shapes differ: {ins.shape} vs {rec.shape}")
    first = _half_word(ins)
    second = _half_word(rec)[::-1].translate(_SWAP_STEPS)
    return first + second


def validate_dyck(word: str) -> bool:
    """
    True iff the word is over {u, d} with equal step counts and no prefix
    holding more d's than u's.

    >>> validate_dyck("uuuduuddududdudd"), validate_dyck("duud"), validate_dyck("uu")
    (True, False, False)
    """
    height = 0
    for step in word:
        if step == UP:
            height += 1
        elif step == DOWN:
            height -= 1
            if height < 0:
                return False
        else:
            return False
    return height == 0


def template_from_dyck(word: str, n: int) -> Template:
    """
    Walk the word as a lattice path from the grid's lower-left corner, one
    edge up per 'u' and one edge right per 'd', and shade every square
    strictly left of the path.  Row i from the top receives as many squares
    as there are d's before the (n - i + 1)-th u.

    >>> sorted(template_from_dyck("udud", 2).shaded)
    [(1, 1)]
    """
    if len(word) != 2 * n or not validate_dyck(word):
        raise ValueError(f"not a balanced up-down word of length {2 * n}: {word!r}")
    downs_before_up = []
    downs = 0
    for step in word:
        if step == DOWN:
            downs += 1
        else:
            downs_before_up.append(downs)
    squares = set()
    for i in range(1, n + 1):
        width = downs_before_up[n - i]
        squares.update((i, j) for j in range(1, width + 1))
    return Template(n, frozenset(squares))


def second_half_from_top_right(rec: TwoRowTableau, n: int) -> tuple[str, ...]:
    """
    The second half of the lattice path traced backward from the grid's
    upper-right corner: one edge per value 1..n, going left when the value
    sits in the recording tableau's first row and down when in its second.
    Edge for edge, this retraces the reversed-and-interchanged half that
    dyck_from_tableaux() appends.
    """
    assert n == rec.size, "n must match the tableau size"
    first_row = set(rec.row1)
    return tuple("left" if i in first_row else "down" for i in range(1, n + 1))
