"""
Walk one permutation through every construction in the package.

Run:  python demos/worked_example.py [permutation]

The default input 14237586 avoids 321, so every route applies.  Pass any
other 321-avoider (digits, or space-separated values) to tour it instead.
"""
import sys

sys.path.insert(0, "src")

from permbij import (
    dyck_from_tableaux,
    gamma_iterative,
    gamma_template,
    inverse_reverse_complement,
    l_corners,
    nested_template,
    diagonal_template,
    parse_permutation,
    rc_realize,
    rc_template,
    rcl_corners,
    realize,
    render_ascii,
    reverse_complement,
    rsk_tableaux,
    second_half_from_top_right,
    template_from_dyck,
    theta_corners,
    theta_rsk,
    theta_slide_flip,
    theta_template,
    theta_via_gamma,
    two_one_classify,
)


def show(title, body=""):
    print(f"--- {title}")
    if body:
        print(body)
    print()


def main():
    text = sys.argv[1] if len(sys.argv) > 1 else "14237586"
    sigma = parse_permutation(text)
    n = len(sigma)
    show(f"input sigma = {' '.join(map(str, sigma))}  (n = {n})")

    twos, ones = two_one_classify(sigma)
    show(
        "2-elements and 1-elements",
        f"positions acting as the 2 of some 21-pattern: {sorted(twos)}\n"
        f"positions acting as the 1 of some 21-pattern: {sorted(ones)}",
    )

    corners = l_corners(sigma)
    t_nested = nested_template(sigma)
    show(
        f"nested reversed L's from the corners {corners}",
        render_ascii(t_nested, realize(t_nested)),
    )
    assert realize(t_nested) == sigma

    t_diag = diagonal_template(sigma)
    image = realize(t_diag)
    show(
        "the same corners packed along the diagonal realize the rewritten word",
        render_ascii(t_diag, image),
    )
    assert image == gamma_iterative(sigma) == gamma_template(sigma)
    show(f"rewriting map image = {' '.join(map(str, image))}")

    ins, rec = rsk_tableaux(sigma)
    word = dyck_from_tableaux(ins, rec)
    show(
        "two-row tableaux and their up-down word",
        f"insertion : {ins.row1} / {ins.row2}\n"
        f"recording : {rec.row1} / {rec.row2}\n"
        f"word      : {word[:n]} + {word[n:]}\n"
        f"second half retraced from the top right: "
        f"{' '.join(second_half_from_top_right(rec, n))}",
    )

    t_path = template_from_dyck(word, n)
    theta_image = realize(t_path)
    show(
        "region left of the lattice path",
        render_ascii(t_path, theta_image),
    )

    show(
        "four routes to the same image",
        f"via the path      : {theta_rsk(sigma)}\n"
        f"via the corners   : {theta_corners(sigma)}\n"
        f"slide and flip    : {theta_slide_flip(sigma)}\n"
        f"via the half-turn : {theta_via_gamma(sigma)}",
    )
    assert theta_image == theta_corners(sigma)
    assert t_path.shaded == theta_template(sigma).shaded

    rc = reverse_complement(sigma)
    irc = inverse_reverse_complement(sigma)
    t_rc = rc_template(sigma)
    show(
        f"rc sigma = {' '.join(map(str, rc))}, rcl-corners {rcl_corners(sigma)}",
        render_ascii(t_rc, rc_realize(t_rc)),
    )
    assert rc_realize(t_rc) == sigma
    show(
        "the bridge between the two maps",
        f"irc sigma                   : {' '.join(map(str, irc))}\n"
        f"rewriting map of irc sigma  : {' '.join(map(str, gamma_iterative(irc)))}\n"
        f"tableau map of sigma        : {' '.join(map(str, theta_rsk(sigma)))}",
    )


if __name__ == "__main__":
    main()
