"""
Random-graph trials: reveal knowledge, fold it back, verify
===========================================================

Each trial draws a random DAG, hides ~10% of its nodes, reveals a
percentage of the class summary's circle marks as expert statements,
folds them in, and verifies completeness of the result. The harness
records per-trial counts and per-stage runtimes.
"""

from ancestral import simulate as sim

# one cell of the grid, reproducible from the master seed
records = sim.run_trials(n=10, p=0.1, reveal_percent=50, trials=20,
                         master_seed=7)

print("trial  circ->arrows   circles  verdict  total ms")
for i, r in enumerate(records):
    print("%5d  %13d  %7d  %7s  %8.1f"
          % (i, r.circ2arrow, r.circle_marks, r.verify_verdict,
             sum(r.runtimes_ms.values())))

rows = sim.summarize(records)
print()
print("summary over the cell:")
for row in rows:
    print("  mean circles->arrowheads: %(meanCirc2Arrow).2f, "
          "verify TRUE rate: %(verifyTrueRate).2f, "
          "mean runtime: %(meanRuntimeMs).1f ms" % row)
