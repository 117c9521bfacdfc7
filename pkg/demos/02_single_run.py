# One SACOBRA run on G06, then the same run with every self-adjusting element
# switched off. Run from the repository root:  python3 demos/02_single_run.py
import numpy as np

from sacobra.adjust import SacobraSwitches, run_sacobra
from sacobra.problems import characterize, get_problem

problem = get_problem("G06")
print(problem.name, "d =", problem.dim, "optimum =", problem.optimum_value)

# what the search box looks like to a random sampler
ch = characterize(problem, 10**5, seed=0)
print(f"feasible fraction {ch.feasibility_rate:.4%}, objective range {ch.fitness_range:.4g}, "
      f"constraint range ratio {ch.constraint_range_ratio:.3g}")

full = run_sacobra(problem, seed=1, budget=100)
plain = run_sacobra(problem, seed=1, budget=100, switches=SacobraSwitches.all_off())

for name, rec in (("full", full), ("all off", plain)):
    print(f"\n{name}: best {rec.best_f:.5f} at {np.round(rec.best_x, 4)}, error {rec.final_error():.2e}")
    curve = rec.best_curve()
    for k in (10, 25, 50, 100):
        print(f"  after {k:3d} evaluations: {curve[k - 1]:.4f}")

# the adjustments the full run picked from its initial design
adj = full.adjustments
print("\nDRC used:", adj["drc_used"], " final Q:", round(adj["final_q"], 2),
      " plog at end:", adj["plog_active_at_end"])

# every record round-trips through CSV and JSON
print("\nfirst CSV lines:\n" + "\n".join(full.to_csv().splitlines()[:3]))
