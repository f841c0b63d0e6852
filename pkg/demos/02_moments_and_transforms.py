#!/usr/bin/env python3
"""Walkthrough: moments, generating functions, and Laplace transforms.

Everything here is a closed form; the script cross-checks each quantity
against an independent route (pmf sums, numerical derivatives, quadrature)
so the output doubles as a quick sanity report.
"""

import math

import numpy as np
from scipy import integrate

from cfpp import (
    GeometricIntensity,
    factorial_moment,
    laplace_pgf,
    laplace_pmf,
    mean_cfpp,
    mgf,
    moment,
    moment_report,
    pgf,
    pmf_cfpp,
    var_cfpp,
)

model = GeometricIntensity(1.0, 0.5)
alpha, t = 0.7, 1.0

# Mean and variance in closed form vs sums over the exact pmf.
sd = pmf_cfpp(model, alpha, t, 80)
ns = np.arange(81, dtype=float)
mean_pmf = float((ns * sd.probs).sum())
var_pmf = float((ns**2 * sd.probs).sum()) - mean_pmf**2
print(f"mean:     closed form {mean_cfpp(model, alpha, t):.10f}   pmf sum {mean_pmf:.10f}")
print(f"variance: closed form {var_cfpp(model, alpha, t):.10f}   pmf sum {var_pmf:.10f}")

# Raw and factorial moments up to order 4.
rep = moment_report(model, alpha, t, 4)
print("\nr   raw moment       factorial moment")
for r in range(1, 5):
    print(f"{r}   {rep.raw_moments[r-1]:<16.8f} {rep.factorial_moments[r-1]:<16.8f}")

# Overdispersion: variance always exceeds the mean when jumps can be > 1.
for a in (0.5, 0.7, 1.0):
    gap = var_cfpp(model, a, t) - mean_cfpp(model, a, t)
    print(f"alpha={a}: variance - mean = {gap:.6f} (> 0)")

# The probability generating function, with two spot identities:
# G(1) = 1 and G(0) = P{N(t) = 0}.
print(f"\npgf(1) = {pgf(model, alpha, t, 1.0):.12f}")
print(f"pgf(0) = {pgf(model, alpha, t, 0.0):.12f} vs p(0) = {sd.probs[0]:.12f}")

# The mean is the slope of the pgf at u = 1.
h = 1e-5
fd = (pgf(model, alpha, t, 1.0) - pgf(model, alpha, t, 1.0 - h)) / h
print(f"pgf slope at 1: {fd:.8f} vs mean {mean_cfpp(model, alpha, t):.8f}")

# The mgf is the pgf evaluated at e^{-w}.
w = 0.8
print(f"mgf({w}) = {mgf(model, alpha, t, w):.12f} "
      f"= pgf(e^-{w}) = {pgf(model, alpha, t, math.exp(-w)):.12f}")

# Laplace transforms in t: closed form vs adaptive quadrature of the pmf.
s, n = 1.0, 2
t_cut = math.log(1e9 / s) / s
quad, _ = integrate.quad(
    lambda u: math.exp(-s * u) * pmf_cfpp(model, alpha, u, n).probs[n] if u > 0 else 0.0,
    0.0, t_cut, limit=200,
)
print(f"\nLaplace transform of p({n}, .) at s={s}:")
print(f"  closed form {laplace_pmf(model, alpha, n, s):.10f}")
print(f"  quadrature  {quad:.10f}")

# And for the pgf: at u = 1 it is the transform of the constant 1, i.e. 1/s.
print(f"laplace pgf at u=1, s={s}: {laplace_pgf(model, alpha, 1.0, s):.10f} (expect {1/s})")

# Moments also close the loop with the factorial moments:
m1 = moment(model, alpha, t, 1)
m2 = moment(model, alpha, t, 2)
print(f"\nE N(N-1) = {factorial_moment(model, alpha, t, 2):.10f} "
      f"= m2 - m1 = {m2 - m1:.10f}")
