"""
permbij: bijections between 321-avoiding and 132-avoiding permutations.

The library builds the grid templates, two-row tableaux, and lattice paths
behind two classical bijections, exposes every construction route
separately, and ships an exhaustive verifier that holds the routes against
each other over entire avoidance classes.
"""
from .grid import (
    Square,
    Template,
    bar_reflect,
    diagonal_ls,
    diagonal_template,
    l_corners,
    nested_template,
    rc_realize,
    rc_template,
    rcl_corners,
    realize,
    render_ascii,
    transpose,
)
from .maps import (
    gamma,
    gamma_iterative,
    gamma_template,
    slide_flip_template,
    theta,
    theta_corners,
    theta_rsk,
    theta_slide_flip,
    theta_template,
    theta_via_gamma,
)
from .perm import (
    ENUMERATION_CAP,
    PATTERNS,
    Perm,
    avoids,
    bar,
    catalan,
    complement,
    enumerate_avoiders,
    excedances,
    fixed_points,
    format_permutation,
    identity,
    inverse,
    inverse_reverse_complement,
    is_permutation,
    parse_permutation,
    reverse,
    reverse_complement,
    smallest_132,
    two_one_classify,
)
from .rsk import (
    TwoRowTableau,
    dyck_from_tableaux,
    rsk_tableaux,
    second_half_from_top_right,
    template_from_dyck,
    validate_dyck,
)
from .verify import CHECKS, CheckReport, StatTable, run_suite, stats_table

__version__ = "0.1.0"

__all__ = [
    "CHECKS",
    "CheckReport",
    "ENUMERATION_CAP",
    "PATTERNS",
    "Perm",
    "Square",
    "StatTable",
    "Template",
    "TwoRowTableau",
    "avoids",
    "bar",
    "bar_reflect",
    "catalan",
    "complement",
    "diagonal_ls",
    "diagonal_template",
    "dyck_from_tableaux",
    "enumerate_avoiders",
    "excedances",
    "fixed_points",
    "format_permutation",
    "gamma",
    "gamma_iterative",
    "gamma_template",
    "identity",
    "inverse",
    "inverse_reverse_complement",
    "is_permutation",
    "l_corners",
    "nested_template",
    "parse_permutation",
    "rc_realize",
    "rc_template",
    "rcl_corners",
    "realize",
    "render_ascii",
    "reverse",
    "reverse_complement",
    "rsk_tableaux",
    "run_suite",
    "second_half_from_top_right",
    "slide_flip_template",
    "smallest_132",
    "stats_table",
    "template_from_dyck",
    "theta",
    "theta_corners",
    "theta_rsk",
    "theta_slide_flip",
    "theta_template",
    "theta_via_gamma",
    "transpose",
    "two_one_classify",
    "validate_dyck",
]
