"""
Charging rate of the SU(2) ladder
=================================

A collective spin-d/2 drive moves the battery from its empty state to its
full state in time pi/|alpha|. The speed limit for that trip shrinks like
1/sqrt(d), so the rate eta = tau/T is 1/sqrt(d) no matter how hard we drive.
"""

import math

from qbcharge import SU2Spec, build_su2, charging_time, scheme_rate

# the ladder for d = 3 steps, unit drive along x
scheme = build_su2(SU2Spec(3, 1.0, 0.0), n_qubits=100)
print(scheme.describe())
print("H =")
print(scheme.H.real.round(4))

T = charging_time(scheme)
print(f"\ncharging time T = {T:.12f}  (pi = {math.pi:.12f})")

# the rate does not depend on the size of the drive, only on d
print("\n d   |alpha|   eta        1/sqrt(d)")
for d in (1, 2, 3, 5, 8):
    for mag in (0.5, 2.0):
        qsl, rate = scheme_rate(build_su2(SU2Spec.polar(d, mag, 0.0)))
        print(f"{d:2d}   {mag:5.2f}   {rate.eta:.9f}  {1 / math.sqrt(d):.9f}")

# a phase in the drive direction only rotates amplitudes
qsl, rate = scheme_rate(build_su2(SU2Spec.polar(4, 1.0, math.pi / 3)))
print(f"\nd=4, theta=pi/3: eta = {rate.eta:.9f}")
