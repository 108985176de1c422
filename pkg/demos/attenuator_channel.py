#!/usr/bin/env python3
"""
Photon-loss attenuator on a truncated Fock space
================================================

Walks through the basic facts the library is built on:

  * the Kraus operators sweep coherent states |alpha> -> |eta alpha|,
  * the channel family is a semigroup in eta,
  * powers mix every state into the vacuum, exponentially fast for states
    with finite particle number, but never uniformly over all states.
"""

import numpy as np

from zenolab import (
    apply,
    attenuator_generator,
    attenuator_kraus,
    attenuator_mixing_bound,
    coherent_vector,
    matrix_exp,
    to_superoperator,
    trace_distance,
    trace_norm,
    vacuum_projection_superop,
    vacuum_state,
)

d = 24
eta = 0.6

# --- coherent states are swept to coherent states --------------------------
print("coherent-state sweeping, d =", d)
channel = attenuator_kraus(eta, d)
for alpha in (0.4, 1.0, 1.8):
    cv = coherent_vector(alpha, d)
    out = apply(channel, cv.projector())
    target = coherent_vector(eta * alpha, d).projector()
    print(
        f"  alpha={alpha:4.1f}: trace distance to |eta*alpha> = "
        f"{trace_distance(out, target):.2e} (truncation tail {cv.tail_mass:.1e})"
    )

# --- semigroup property and the generator ----------------------------------
s1 = to_superoperator(attenuator_kraus(0.7, d)).matrix
s2 = to_superoperator(attenuator_kraus(0.8, d)).matrix
s12 = to_superoperator(attenuator_kraus(0.56, d)).matrix
print(f"\nsemigroup property |S(0.56) - S(0.7)S(0.8)|_F = {np.linalg.norm(s12 - s1 @ s2):.2e}")

t = 0.4
lhs = matrix_exp(t * attenuator_generator(d).matrix)
rhs = to_superoperator(attenuator_kraus(np.exp(-t), d)).matrix
print(f"generator consistency |exp(tK) - S(e^-t)|_F = {np.linalg.norm(lhs - rhs):.2e}")

# --- exponential mixing for finite-particle states --------------------------
print("\nmixing toward the vacuum, eta =", eta)
p = vacuum_projection_superop(d)
rho = coherent_vector(1.0, d).projector()
print("   n    error          bound 4|eta|^n Tr((N+1)rho)")
for n in (1, 2, 4, 8, 16, 32):
    out = apply(attenuator_kraus(eta**n, d), rho)  # Phi^n via the semigroup
    err = trace_norm(out - apply(p, rho))
    bound = attenuator_mixing_bound(eta, n, rho)
    print(f"  {n:3d}   {err:.6e}   {bound:.6e}")

# --- ... but not uniformly: large coherent states stay far ------------------
print("\nnon-uniform mixing witness (d = 64):")
d_big = 64
p_big = vacuum_projection_superop(d_big)
for n in (1, 2, 3):
    alpha = 3.0 / 0.9**n
    rho = coherent_vector(alpha, d_big).projector()
    out = apply(attenuator_kraus(0.9**n, d_big), rho)
    gap = trace_norm(out - apply(p_big, rho))
    print(f"  n={n}: alpha={alpha:5.2f}, ||Phi^n(rho) - P(rho)||_1 = {gap:.6f} (sup is 2)")

print("\nVacuum is the unique fixed point: K(|0><0|) =",
      trace_norm(apply(attenuator_generator(d), vacuum_state(d))))
