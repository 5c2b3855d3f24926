"""
Independent charging hits a ceiling
===================================

If every cell is charged on its own, each by a two-level drive of strength
alpha_j = alpha (1 + 4 k_j), the rate can never exceed 1/sqrt(N). The bound
is met by identical drives. Mixing strengths only slows things down.
"""

import math
from fractions import Fraction

from qbcharge import ParallelSpec, build_parallel, parallel_eta_squared, scheme_rate
from qbcharge.schemes import parallel_closed_form_time

for k in [(0,) * 9, (0, 1), (0, 1, 2), (0, 0, 0, 3)]:
    spec = ParallelSpec(len(k), k)
    scheme = build_parallel(spec)
    qsl, rate = scheme_rate(scheme)
    exact = parallel_eta_squared(k)
    print(f"k={k}: eta^2 = {exact} = {float(exact):.6f}, numeric {rate.eta**2:.6f}, "
          f"ceiling 1/N = {Fraction(1, len(k))}")

# the closed-form time pi (1 + 4 k_1) / alpha_1 assumes the multipliers share
# no common factor. For k=(1,1) both drives equal alpha_1 and the cells are
# full at pi, a fifth of the closed form, so the ceiling is reached anyway.
k = (1, 1)
spec = ParallelSpec(2, k)
qsl, rate = scheme_rate(build_parallel(spec))
print(f"\nk={k}: closed form T = {parallel_closed_form_time(spec):.6f}, minimal T = {rate.T:.6f}, "
      f"eta^2 = {rate.eta**2:.6f}")
