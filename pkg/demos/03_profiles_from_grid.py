# Data profiles of the ablation grid.
#
# Needs a finished grid, for example
#     python3 -m sacobra run --config configs/acceptance.cfg
# then:  python3 demos/03_profiles_from_grid.py [results/acceptance]
import sys
from pathlib import Path

import numpy as np

from sacobra import profiles
from sacobra.cli import load_grid, profile_matrix

root = Path(sys.argv[1] if len(sys.argv) > 1 else "results/acceptance")
records = load_grid(root)
if not records:
    sys.exit(f"no records under {root}")
records.pop("plog-always", None)  # diagnostic variant, not part of the ablation study

# one row per (problem, seed), one column per variant; entries are evaluations to solve
m = profile_matrix(records)
print(f"{len(m.problems)} problem instances, {len(m.solvers)} variants\n")

print("variant        solved@alpha=10   @50    @100   @200")
for v in m.solvers:
    row = [profiles.data_profile(m, v, a) for a in (10, 50, 100, 200)]
    print(f"{v:14s} " + "   ".join(f"{x:6.3f}" for x in row))

# performance profile at ratio 1: how often each variant was (jointly) fastest
print("\nfastest on fraction of instances:")
for v in m.solvers:
    print(f"  {v:14s} {profiles.performance_profile(m, v, 1.0):.3f}")

# paired test: do ablations leave larger final errors than the full method?
# G02 has no known optimum, so every problem is measured against the best
# value any variant found, relative so large objective values do not dominate
ref = {}
for recs in records.values():
    for r in recs:
        if r.feasible:
            ref[r.problem] = min(ref.get(r.problem, np.inf), r.best_f)


def rel_errors(recs):
    recs = sorted(recs, key=lambda r: (r.problem, r.seed))
    return np.array([(r.best_f - ref[r.problem]) / max(1.0, abs(ref[r.problem])) if r.feasible else np.inf
                     for r in recs])


full = rel_errors(records["full"])
for v in m.solvers:
    if v != "full":
        print(f"Wilcoxon {v:12s} vs full: p = {profiles.wilcoxon_greater(rel_errors(records[v]), full):.3g}")

out = root / "data_profiles.csv"
out.write_text(profiles.curves_csv([profiles.data_profile_curve(m, v) for v in m.solvers]))
print("\nwrote", out)
