"""
Saturating sets and exact counting bounds
=========================================

Saturating sets must reach every point in a single step, so they are rarer
and larger than spreading sets.  In binary projective space their size is
pinned between an exact counting bound and small exhaustive searches, with
an exact rational variance identity controlling how evenly a set can meet
the hyperplanes.
"""

import random

from stspread import (
    compute_saturation_bound,
    deviating_hyperplane,
    hyperplanes_pg2,
    intersection_extremes,
    is_spreading_set,
    lunelli_sce_min,
    min_saturating_size,
    pg2,
    variance_identity,
)

# Counting bound: m points span at most (q-1)C(m,2)+m points in one step,
# which must cover the whole space.
print("counting lower bounds, q=2 and q=3")
for n in range(1, 7):
    print("  n=%d: s >= %2d (q=2)   s >= %2d (q=3)"
          % (n, lunelli_sce_min(n, 2), lunelli_sce_min(n, 3)))

# The variance identity is exact in rational arithmetic: summed over all
# hyperplanes, the squared deviation of |S on H| from m/2 is a closed form
# in m and n alone.  Hence some hyperplane deviates by more than the r.m.s.
rng = random.Random(0)
subset = rng.sample(range(15), 6)
lhs, rhs = variance_identity(3, subset)
print("\nrandom 6-subset of pg2(3):", sorted(subset))
print("  identity: %s == %s -> %s" % (lhs, rhs, lhs == rhs))
dev = deviating_hyperplane(3, subset)
print("  worst hyperplane deviates by %s (strict beyond the mean bound: %s)"
      % (dev.deviation, dev.strict))

# Exhaustive minima for the two smallest spaces, against the refined bound.
print("\nexact minima vs bounds")
both_spread = True
for n in (2, 3):
    bound = compute_saturation_bound(n, 2, exact=True)
    size, witness = min_saturating_size(pg2(n))
    both_spread = both_spread and is_spreading_set(pg2(n), witness)
    print("  n=%d: lunelli %d <= refined %d <= exact %d, witness %r"
          % (n, bound.lunelli, bound.refined, size, sorted(witness)))

# How evenly can a small set sit relative to the hyperplanes?  For 3 points
# in the 7-point plane the best guaranteed meet is 1 and the best cap is 2.
ex = intersection_extremes(2, 3)
print("\n3-point sets vs the %d hyperplanes of pg2(2): max-min %d, min-max %d"
      % (len(hyperplanes_pg2(2)), ex.max_min, ex.min_max))

ok = (lhs == rhs and dev.strict and both_spread
      and (ex.max_min, ex.min_max) == (1, 2))
print("\n%s saturation: identities exact, minima within bounds"
      % ("PASS" if ok else "FAIL"))
