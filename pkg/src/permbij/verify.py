"""
Exhaustive cross-checks over whole avoidance classes, plus the joint
fixed-point/excedance tables.

Every check sweeps all of S_n(321) for one n (whole-class checks compare
entire images at once) and reports counterexamples, capped so a broken
build stays readable.  Reports serialize to JSON Lines and back without
loss.
"""
from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from . import grid, maps, rsk
from .perm import (
    ENUMERATION_CAP,
    Perm,
    bar,
    catalan,
    enumerate_avoiders,
    excedances,
    fixed_points,
    inverse,
    inverse_reverse_complement,
    reverse_complement,
)

#: most counterexamples a single report keeps
FAILURE_LIMIT = 20


def _class(n: int, pattern: str):
    # run_suite has already validated n against its own cap
    return enumerate_avoiders(n, pattern, cap=max(n, ENUMERATION_CAP))


def _jsonable(value):
    if isinstance(value, grid.Template):
        return sorted([r, c] for r, c in value.shaded)
    if isinstance(value, frozenset):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    return value


def _failure(input_perm, expected, actual) -> dict:
    return {
        "input": _jsonable(input_perm),
        "expected": _jsonable(expected),
        "actual": _jsonable(actual),
    }


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one check at one n; passes iff no failures were found."""

    check: str
    n: int
    cases: int
    failures: tuple = ()
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def text_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.check} n={self.n} cases={self.cases} failures={len(self.failures)}"

    def json_line(self) -> str:
        return json.dumps(
            {
                "check": self.check,
                "n": self.n,
                "cases": self.cases,
                "passed": self.passed,
                "failures": list(self.failures),
                "elapsed_ms": self.elapsed_ms,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json_line(cls, line: str) -> "CheckReport":
        record = json.loads(line)
        return cls(
            check=record["check"],
            n=record["n"],
            cases=record["cases"],
            failures=tuple(record["failures"]),
            elapsed_ms=record["elapsed_ms"],
        )


def _sweep(map_pairs) -> Callable[[int], Iterator[dict]]:
    """Per-permutation check comparing expected(p) against actual(p)."""

    def run(n: int) -> Iterator[dict]:
        for p in _class(n, "321"):
            for expected_fn, actual_fn in map_pairs:
                expected = expected_fn(p)
                actual = actual_fn(p)
                if expected != actual:
                    yield _failure(p, expected, actual)

    return run


def _check_fact2(n: int) -> Iterator[dict]:
    for p in _class(n, "321"):
        got = grid.realize(grid.nested_template(p))
        if got != p:
            yield _failure(p, p, got)


def _check_rc_template(n: int) -> Iterator[dict]:
    for p in _class(n, "321"):
        got = grid.rc_realize(grid.rc_template(p))
        if got != p:
            yield _failure(p, p, got)


def _check_bar_reflection(n: int) -> Iterator[dict]:
    for p in _class(n, "321"):
        direct = grid.rc_template(p)
        reflected = grid.bar_reflect(grid.nested_template(reverse_complement(p)))
        if direct.shaded != reflected.shaded:
            yield _failure(p, reflected, direct)


def _dyck_template(p: Perm) -> grid.Template:
    ins, rec = rsk.rsk_tableaux(p)
    return rsk.template_from_dyck(rsk.dyck_from_tableaux(ins, rec), len(p))


def _check_lemma1(n: int) -> Iterator[dict]:
    # The path template must decompose into diagonal inverted L's whose leg
    # lengths are the bar-reflected tableau second rows.
    for p in _class(n, "321"):
        ins, rec = rsk.rsk_tableaux(p)
        legs = [(bar(a, n), bar(b, n)) for a, b in zip(ins.row2, rec.row2)]
        rebuilt = grid.diagonal_ls(n, legs)
        walked = _dyck_template(p)
        if rebuilt.shaded != walked.shaded:
            yield _failure(p, rebuilt, walked)


def _check_lemma3(n: int) -> Iterator[dict]:
    # Tableau second rows must read off the rcl-corner values and positions.
    for p in _class(n, "321"):
        ins, rec = rsk.rsk_tableaux(p)
        corners = grid.rcl_corners(p)
        expected = (tuple(v for v, _ in corners), tuple(q for _, q in corners))
        actual = (ins.row2, rec.row2)
        if expected != actual:
            yield _failure(p, expected, actual)


def _check_theorem1_route(n: int) -> Iterator[dict]:
    for p in _class(n, "321"):
        corner = maps.theta_template(p)
        walked = _dyck_template(p)
        if corner.shaded != walked.shaded:
            yield _failure(p, walked, corner)


def _check_theorem2_route(n: int) -> Iterator[dict]:
    for p in _class(n, "321"):
        slid = maps.slide_flip_template(p)
        walked = _dyck_template(p)
        if slid.shaded != walked.shaded:
            yield _failure(p, walked, slid)


def _check_bijectivity(map_fn) -> Callable[[int], Iterator[dict]]:
    def run(n: int) -> Iterator[dict]:
        targets = set(_class(n, "132"))
        image: dict[Perm, Perm] = {}
        for p in _class(n, "321"):
            q = map_fn(p)
            if q in image:
                yield _failure(p, "a fresh image", {"collides_with": _jsonable(image[q])})
            elif q not in targets:
                yield _failure(p, "an image avoiding 132", q)
            image[q] = p
        for missed in sorted(targets - image.keys()):
            yield _failure(missed, "hit by some 321-avoider", "not in image")

    return run


def _check_statistic(stat) -> Callable[[int], Iterator[dict]]:
    def run(n: int) -> Iterator[dict]:
        for p in _class(n, "321"):
            want = stat(p)
            for route in (maps.gamma, maps.theta):
                got = stat(route(p))
                if got != want:
                    yield _failure(p, want, got)

    return run


def _check_inverse_commute(map_fn) -> Callable[[int], Iterator[dict]]:
    def run(n: int) -> Iterator[dict]:
        for p in _class(n, "321"):
            expected = inverse(map_fn(p))
            actual = map_fn(inverse(p))
            if expected != actual:
                yield _failure(p, expected, actual)

    return run


def _check_catalan_counts(n: int) -> Iterator[dict]:
    want = catalan(n)
    for pattern in ("321", "132"):
        count = sum(1 for _ in _class(n, pattern))
        if count != want:
            yield _failure(pattern, want, count)


#: every check, keyed by its public name
CHECKS: dict[str, Callable[[int], Iterator[dict]]] = {
    "fact2": _check_fact2,
    "fact3-route-agreement": _sweep([(maps.gamma_iterative, maps.gamma_template)]),
    "lemma1": _check_lemma1,
    "lemma3": _check_lemma3,
    "theorem1-route": _check_theorem1_route,
    "theorem2-route": _check_theorem2_route,
    "theorem3": _sweep(
        [(lambda p: maps.gamma_iterative(inverse_reverse_complement(p)), maps.theta_rsk)]
    ),
    "bijectivity-gamma": _check_bijectivity(maps.gamma),
    "bijectivity-theta": _check_bijectivity(maps.theta),
    "fixed-points": _check_statistic(fixed_points),
    "excedances": _check_statistic(excedances),
    "inverse-commute-gamma": _check_inverse_commute(maps.gamma),
    "inverse-commute-theta": _check_inverse_commute(maps.theta),
    "catalan-counts": _check_catalan_counts,
    "rc-template": _check_rc_template,
    "bar-reflection": _check_bar_reflection,
}


def run_suite(
    n_min: int,
    n_max: int,
    checks: Sequence[str] | None = None,
    cap: int = ENUMERATION_CAP,
    failure_limit: int = FAILURE_LIMIT,
) -> list[CheckReport]:
    """
    Run the named checks (default: all) for every n in n_min..n_max and
    return one report per (check, n), sorted by check name then n.
    """
    if checks is None:
        names = sorted(CHECKS)
    else:
        unknown = sorted(set(checks) - CHECKS.keys())
        if unknown:
            known = ", ".join(sorted(CHECKS))
            raise ValueError(f"unknown checks {unknown}; known checks: {known}")
        names = sorted(set(checks))
    if not 1 <= n_min <= n_max <= cap:
        raise ValueError(f"n range {n_min}..{n_max} outside 1..{cap}")
    reports = []
    for name in names:
        for n in range(n_min, n_max + 1):
            start = time.perf_counter()
            failures = []
            for failure in CHECKS[name](n):
                failures.append(failure)
                if len(failures) >= failure_limit:
                    break
            elapsed_ms = (time.perf_counter() - start) * 1000.0
            reports.append(
                CheckReport(name, n, catalan(n), tuple(failures), elapsed_ms)
            )
    return reports


@dataclass(frozen=True)
class StatTable:
    """Joint (fixed points, excedances) distribution over one class."""

    n: int
    pattern: str
    rows: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.rows.values())

    def json_line(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "class": self.pattern,
                "total": self.total,
                "rows": [
                    {"fixed_points": f, "excedances": e, "count": c}
                    for (f, e), c in sorted(self.rows.items())
                ],
            },
            sort_keys=True,
        )

    @classmethod
    def from_json_line(cls, line: str) -> "StatTable":
        record = json.loads(line)
        rows = {
            (row["fixed_points"], row["excedances"]): row["count"]
            for row in record["rows"]
        }
        return cls(n=record["n"], pattern=record["class"], rows=rows)


def stats_table(n: int, pattern: str, cap: int = ENUMERATION_CAP) -> StatTable:
    """
    Tabulate (fixed points, excedances) over S_n(pattern).  The tables of
    the two classes coincide at every n; counts always sum to catalan(n).
    """
    counts = Counter(
        (fixed_points(p), excedances(p)) for p in enumerate_avoiders(n, pattern, cap)
    )
    table = StatTable(n, pattern, dict(sorted(counts.items())))
    assert table.total == catalan(n), "class total is off; enumeration is broken"
    return table
