# Two ways an RBF surrogate goes wrong before any optimization starts.
#
# Run from the repository root:  python3 demos/01_numerical_pitfalls.py
import numpy as np

from sacobra.surrogate import (
    demo_plog_benefit, demo_scaling_pitfall, fit, plog, plog_inverse, predict,
)

# Pitfall 1: a badly scaled input axis.
# The same 1D function is sampled on [0, s] and fitted twice, once on the raw
# coordinate and once after mapping the interval to [-1, 1]. The cubic kernel
# plus linear tail is not scale invariant, so the raw fit degrades as s grows.
for scale in (1.0, 1e2, 1e4):
    raw, rescaled = demo_scaling_pitfall(scale)
    print(f"scale {scale:8.0e}   rmse raw {raw:10.3e}   rmse rescaled {rescaled:10.3e}")

# Pitfall 2: a steep objective.
# Fitting plog(f) and mapping back tames the oscillations around the steep
# walls that the direct fit shows.
direct, logged = demo_plog_benefit()
print(f"\nsteep function   rmse direct {direct:.3g}   rmse via plog {logged:.3g}   ratio {direct / logged:.1f}")

# plog is a sign-preserving log, invertible everywhere
y = np.array([-1e6, -1.0, 0.0, 0.5, 1e6])
print("\nplog:", plog(y))
print("round trip:", plog_inverse(plog(y)))

# A small multi-output fit: objective and one constraint share one system solve.
rng = np.random.default_rng(0)
X = rng.uniform(-1, 1, size=(12, 2))
Y = np.column_stack([np.sum(X**2, axis=1), X[:, 0] + X[:, 1] - 0.5])
model = fit(X, Y)
print("\ninterpolation residual:", np.abs(predict(model, X) - Y).max())
