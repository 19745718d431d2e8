"""
Watching the iteration converge
===============================

Each step solves one saddle-point system.  For small noise the step
length shrinks by orders of magnitude per iteration, so a handful of
iterations reaches a step tolerance of 1e-8.
"""
import numpy as np

from gpgcd import OptimizerConfig, Problem, recover_gcd, run
from gpgcd.experiments import InstanceParams, generate_instance

inst = generate_instance(InstanceParams(m=12, n=10, d=4, e_F=0.1, e_G=0.1, seed=3))
problem = Problem(inst.F, inst.G, 4)
print(problem, "-> decision vector of length", problem.size,
      "and", problem.n_constraints, "constraints")

x0 = problem.initialize()
print("start: |q(x0)|_inf =", f"{np.abs(problem.constraint(x0)).max():.3e}")

state = run(problem, OptimizerConfig(epsilon=1e-8))
for k, step in enumerate(state.history, 1):
    print(f"  iteration {k}: |dx| = {step:.3e}")
print("final: |q(x)|_inf =", f"{state.constraint_norm:.3e}",
      " sigma_min/sigma_max(J) =", f"{state.jacobian_sigma_ratio:.3e}")

res = recover_gcd(state.x, problem, iterations=state.iteration)
print("perturbation:", f"{res.perturbation:.3e}",
      " (noise put in: ", f"{0.1**2 + 0.1**2:.3e})")
print("candidate used:", res.candidate_used, " residual:", f"{res.residual_chosen:.2e}")
