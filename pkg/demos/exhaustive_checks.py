"""
Sweep every cross-check over whole avoidance classes.

Run:  python demos/exhaustive_checks.py [n_max]

Each line reports one check at one size; "cases" is the class size, the
n-th Catalan number.  The default n_max of 8 sweeps 2055 permutations per
check; 9 and 10 also finish in seconds to minutes.
"""
import sys

sys.path.insert(0, "src")

from permbij import run_suite


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    reports = run_suite(1, n_max)
    width = max(len(r.check) for r in reports)
    for report in reports:
        status = "ok " if report.passed else "FAIL"
        print(
            f"{status} {report.check:<{width}} n={report.n:<2} "
            f"cases={report.cases:<5} {report.elapsed_ms:8.1f} ms"
        )
    failed = [r for r in reports if not r.passed]
    print()
    print(f"{len(reports)} reports, {len(failed)} failing")
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
