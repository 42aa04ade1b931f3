"""Bounds on a finite chain where the exact value is known.

A five-day storage facility with three price states.  Exact dynamic
programming gives V*; feeding its surfaces to the dual recursion returns a
zero surplus on every path.  Perturbed surfaces give a nonzero surplus and
the dual estimate stays above V*.

    python demos/toy_bounds.py
"""
import numpy as np

from dualstorage.cli import toy_instance
from dualstorage.dual import run_dual
from dualstorage.oracle import _TableFn, exact_dp, instance_problem, sample_chain, tabular_model

inst = toy_instance()
sol = exact_dp(inst)
grid, prices = inst.control_grid, inst.price_states
vstar = sol.V[0][:, inst.x0_index]
paths = prices[sample_chain(inst, 4000, seed=1)]
problem = instance_problem(inst)

exact = run_dual(problem, paths, tabular_model(inst, sol.V), V0=_TableFn(sol.V[0], grid, prices),
                 impl="I", grid=grid, y0=grid)
print("exact surfaces: max |F0| =", np.abs(exact.surplus).max())

# a crude guess: the exact values scaled up by 10% and shifted by noise
rng = np.random.default_rng(0)
V = sol.V * 1.1 + rng.normal(scale=0.5, size=sol.V.shape)
V[-1] = sol.V[-1]
rough = run_dual(problem, paths, tabular_model(inst, V), V0=_TableFn(V[0], grid, prices),
                 impl="I", grid=grid, y0=grid)

print(f"{'y0':>4} {'V*':>8} {'V_up':>8} {'se':>6}")
for y, v, u, s in zip(grid, vstar, rough.upper, rough.stderr):
    print(f"{y:4.0f} {v:8.3f} {u:8.3f} {s:6.3f}")
