"""
Randomized benchmark
====================

Rows in the style of the classic approximate-GCD benchmark: monic
polynomials with a planted GCD of degree ``d = m/2``, noise of 2-norm 0.1
added to each, averaged over random trials.  Pass ``--full`` to run up to
degree 100 (about twenty seconds).
"""
import sys

from gpgcd.experiments import InstanceParams, run_batch

degrees = range(10, 101, 10) if "--full" in sys.argv else (10, 20, 30)
print(f"{'m,n':>8} {'d':>3} {'error':>10} {'#iter':>6} {'time (s)':>9} {'rate':>5}")
for m in degrees:
    trials = 100 if m == 10 else 25
    rec = run_batch(InstanceParams(m, m, m // 2, e_F=0.1, e_G=0.1, seed=1), trials)
    print(f"{m:>4},{m:<3} {m // 2:>3} {rec.mean_error:>10.2e} {rec.mean_iterations:>6.2f} "
          f"{rec.mean_time_seconds:>9.4f} {rec.convergence_rate:>5.2f}")
