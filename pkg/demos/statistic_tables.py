"""
Print the joint fixed-point/excedance tables of both avoidance classes
side by side, n = 1..7.  The tables coincide at every size because both
bijections carry one class onto the other preserving both statistics.

Run:  python demos/statistic_tables.py
"""
import sys

sys.path.insert(0, "src")

from permbij import stats_table


def main():
    for n in range(1, 8):
        left = stats_table(n, "321")
        right = stats_table(n, "132")
        print(f"n = {n}   total = {left.total}")
        print("  fixed  exced   avoid-321   avoid-132")
        keys = sorted(set(left.rows) | set(right.rows))
        for f, e in keys:
            a = left.rows.get((f, e), 0)
            b = right.rows.get((f, e), 0)
            marker = "" if a == b else "   <- differ!"
            print(f"  {f:>5}  {e:>5}   {a:>9}   {b:>9}{marker}")
        assert left.rows == right.rows
        print()


if __name__ == "__main__":
    main()
