"""
Bounds and a conjecture sweep
=============================

Every connected labeled graph on five vertices is solved exactly and each
inequality between mp, gb, radius and diameter is checked.
"""

from bmp import generators as gen
from bmp.harness import compute_bounds, enumerate_connected, summarize, sweep

report = compute_bounds(gen.fig3b())
print(f"fig3b: radius={report.radius} diameter={report.diameter} mp={report.mp[0]} gb={report.gb[0]}")
for check in report.checks:
    print(f"  {check.status:7s} {check.name}{'  (tight)' if check.tight else ''}")

# Past the exact cap the report brackets each parameter instead.
report = compute_bounds(gen.path(40), cap=24)
print(f"P40 above the cap: mp in {list(report.mp)}, gb in {list(report.gb)}")

summary = summarize(sweep(enumerate_connected(5)))
print(f"n=5: {summary.count} graphs, max gb/mp = {summary.max_ratio}, "
      f"histogram {dict(sorted(summary.histogram.items()))}")
print(f"graphs with gb = 2mp: {len(summary.extremal)}, violations: {len(summary.violations)}")
