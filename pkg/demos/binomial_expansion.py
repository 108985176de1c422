#!/usr/bin/env python3
"""
The generalized binomial product and its combinatorics
======================================================

Three views of (M + L/n)^n:

  1. the scalar-style limit (I + L/n)^n -> exp(L),
  2. the order-k expansion terms y_{n,k}, sums over a discrete simplex,
     converging to (PLP)^k / k!,
  3. the exact simplex counting that controls the error budget.
"""

import numpy as np

from zenolab import (
    binomial_product,
    expansion_terms,
    matrix_exp,
    simplex_count,
    simplex_count_enumerated,
    simplex_ratio_bound_check,
    workhorse_limit_check,
)
from zenolab.sampling import random_gapped_channel, random_operator, stream

# --- 1. the exponential limit -----------------------------------------------
rng = stream(2024, 0)
l = random_operator(4, rng, norm=0.9)
print("(I + L/n)^n versus exp(L), spectral-norm distance:")
for n in (16, 256, 4096):
    dist = np.linalg.norm(binomial_product(np.eye(4, dtype=complex), l, n) - matrix_exp(l), 2)
    print(f"  n={n:5d}: {dist:.3e}")

# --- 2. expansion terms around a gapped mixing channel ----------------------
m, p, _ = random_gapped_channel(2, stream(2024, 1), delta=0.5)
l = random_operator(4, stream(2024, 2), norm=0.5)
x = np.zeros(4, dtype=complex)
x[0] = 1.0  # vec of a qubit basis state

print("\nsum of the first terms y_{n,k} against the full product (n = 32):")
terms = expansion_terms(m.matrix, l, 32, 4)
full = binomial_product(m.matrix, l, 32)
partial = np.zeros_like(full)
for k, term in enumerate(terms):
    partial = partial + term
    print(f"  through k={k}: remainder {np.linalg.norm(partial - full, 2):.3e}")

print("\ny_{n,2} converging to (PLP)^2/2! on a fixed state:")
result = workhorse_limit_check(m.matrix, l, p.matrix, 2, [16, 64, 256, 1024], x)
for n, err in result.records:
    print(f"  n={n:5d}: {err:.3e}")
print("  monotone decreasing:", result.decreasing)

# --- 3. the counting behind the bounds ---------------------------------------
print("\ndiscrete-simplex cardinalities (exact vs brute force) and the ratio bound:")
print("   n   k   count   enum    |count/n^k - 1/k!|   bound 2^k/((k-1)! n)")
for n, k in ((12, 2), (25, 3), (400, 4)):
    count = simplex_count(n, k)
    enum = simplex_count_enumerated(n, k) if n <= 25 else count
    check = simplex_ratio_bound_check(n, k)
    print(
        f"  {n:4d} {k:3d} {count:7d} {enum:7d}   {abs(check.ratio - check.limit):.6e}     "
        f"{check.bound:.6e}  holds={check.holds}"
    )
