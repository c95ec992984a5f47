"""
Two bijections from the 321-avoiders onto the 132-avoiders, each computed
by several independent routes.

The rewriting map is available as the literal iteration (gamma_iterative)
and as a one-shot template realization (gamma_template).  The tableau map
is available through four routes: the full tableau/lattice-path pipeline
(theta_rsk), the corner template (theta_corners), a slide-and-flip of the
rc-template (theta_slide_flip), and transport of the rewriting map through
the half-turn (theta_via_gamma).  All routes agree point for point; the
verification suite holds them against each other exhaustively.
"""
from __future__ import annotations

from typing import Sequence

from . import grid, rsk
from .perm import Perm, avoids, bar, inverse_reverse_complement, smallest_132


def _rewrite_smallest_132(word: list[int]) -> bool:
    """Rotate the values of the first 132-pattern in place; False if none."""
    triple = smallest_132(word)
    if triple is None:
        return False
    i, j, k = (t - 1 for t in triple)
    word[i], word[j], word[k] = word[j], word[k], word[i]
    return True


def gamma_iterative(perm: Sequence[int]) -> Perm:
    """
    Repeatedly rewrite the lexicographically first 132-pattern, rotating
    its three values so the smallest moves to the back, until no
    132-pattern remains.  Intermediate words may contain 321-patterns; only
    the input is required to avoid them.

    >>> gamma_iterative((1, 4, 2, 3, 7, 5, 8, 6))
    (7, 8, 6, 4, 3, 5, 2, 1)
    """
    if not avoids(perm, "321"):
        raise ValueError("permutation contains a 321-pattern")
    word = list(perm)
    # n**3 rewrites is far beyond what any valid input needs
    for _ in range(len(word) ** 3 + 1):
        if not _rewrite_smallest_132(word):
            return tuple(word)
    raise RuntimeError("132-rewriting did not terminate; this is a bug")


def gamma_template(perm: Sequence[int]) -> Perm:
    """One-shot route: realize the diagonal redrawing of the nested template."""
    return grid.realize(grid.diagonal_template(perm))


#: canonical rewriting-map route (cheapest)
gamma = gamma_template


def theta_template(perm: Sequence[int]) -> grid.Template:
    """
    Template for the tableau map's image: the i-th corner pair (v, p) of
    rcl_corners() contributes an inverted L at (i, i) with vertical leg
    n + 1 - v and horizontal leg n + 1 - p.
    """
    n = len(perm)
    legs = [(bar(v, n), bar(p, n)) for v, p in grid.rcl_corners(perm)]
    return grid.diagonal_ls(n, legs)


def theta_corners(perm: Sequence[int]) -> Perm:
    """Corner route: realize the rcl-corner template."""
    return grid.realize(theta_template(perm))


#: canonical tableau-map route (cheapest)
theta = theta_corners


def slide_flip_template(perm: Sequence[int]) -> grid.Template:
    """
    The same template reached geometrically: take the inverted L's of the
    rc-template, slide the i-th largest so its corner lands on (i, i), then
    flip everything across the main diagonal.
    """
    n = len(perm)
    squares = set()
    for i, (v, p) in enumerate(grid.rcl_corners(perm), start=1):
        # the L cornered at (p, v), reaching the bottom and right borders
        ell = {(p, c) for c in range(v, n + 1)} | {(r, v) for r in range(p, n + 1)}
        squares.update((r - p + i, c - v + i) for r, c in ell)
    return grid.transpose(grid.Template(n, frozenset(squares)))


def theta_slide_flip(perm: Sequence[int]) -> Perm:
    """Slide-and-flip route: realize the slid and flipped rc-template."""
    return grid.realize(slide_flip_template(perm))


def theta_rsk(perm: Sequence[int]) -> Perm:
    """
    Tableau route: insertion and recording tableaux, their up-down word,
    the region left of the walked path, then dot placement.

    >>> theta_rsk((1, 4, 2, 3, 7, 5, 8, 6))
    (7, 5, 4, 2, 3, 1, 6, 8)
    """
    insertion, recording = rsk.rsk_tableaux(perm)
    word = rsk.dyck_from_tableaux(insertion, recording)
    return grid.realize(rsk.template_from_dyck(word, len(perm)))


def theta_via_gamma(perm: Sequence[int]) -> Perm:
    """Transport route: the rewriting map after inverse-reverse-complement."""
    return gamma_iterative(inverse_reverse_complement(perm))
