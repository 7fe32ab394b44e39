"""
Checking everything at one size
===============================

A census walks all Catalan(n) paths of semilength n and evaluates every
check.  The distribution of dim Ext^1(J, J) is compared with two-row
standard tableaux.
"""

from nakayama321.census import CHECKS, run_census, syt_two_row

n = 7
report = run_census(n)
print(f"n={n}: {report.total} algebras, {report.elapsed:.2f}s")
for name in CHECKS:
    print(f"  {name:22s} {report.checks[name]['status']}")

print("k   algebras  tableaux")
for k in sorted(report.distribution):
    print(f"{k:<3d} {report.distribution[k]:8d}  {syt_two_row(n - 1, k):8d}")

# setting NAKAYAMA_CENSUS_THREADS, or passing workers=, shards the work
# across processes; the report is the same
assert run_census(n, workers=2).distribution == report.distribution
