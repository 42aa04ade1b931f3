"""Thirty-day gas storage: a priori value, dual upper bound and greedy lower bound.

Runs the three stages directly (no config file) on a short horizon so that it
finishes in about a minute.  Prices follow the mean-reverting jump diffusion
with daily parameters and jump mean 6.4.

    python demos/short_gas.py
"""
import numpy as np

from dualstorage.apriori import Candidates, run_apriori
from dualstorage.dual import SurfaceModel, run_dual
from dualstorage.gridbasis import initial_price_grid, paper_basis, paper_ybasis
from dualstorage.policy import low_biased_estimate
from dualstorage.problem import GasStorageSpec, gas_storage_problem
from dualstorage.process import JumpDiffusionParams, simulate_paths

T, seed = 30, 3
problem = gas_storage_problem(GasStorageSpec(T=T))
process = JumpDiffusionParams.daily_gas(6.4)

x0 = initial_price_grid()
stack = run_apriori(problem, simulate_paths(process, x0, T, x0.size, seed, tag="apriori"),
                    paper_basis(), N_y=21, lattice_seed=seed, cand=Candidates())

y0 = np.array([0.0, 5.0, 10.0, 15.0, 20.0])
X0 = 6.0
dual = run_dual(problem, simulate_paths(process, X0, T, 1000, seed, tag="dual"), SurfaceModel(stack),
                impl="II", grid=np.linspace(0, 20, 161), y0=y0, phi=paper_ybasis(), n_h=33)
low = low_biased_estimate(problem, simulate_paths(process, X0, T, 5000, seed, tag="policy"), stack, y0)

print(f"X0 = {X0}, T = {T} days")
print(f"{'y0':>4} {'a priori':>9} {'V_up':>8} {'se':>6} {'V_low':>8} {'se':>6}")
for k, y in enumerate(y0):
    print(f"{y:4.0f} {dual.V0[k]:9.3f} {dual.upper[k]:8.3f} {dual.stderr[k]:6.3f} "
          f"{low[k].mean:8.3f} {low[k].stderr:6.3f}")
