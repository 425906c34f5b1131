"""A mixed-rank optimal packing in C^7
=====================================

The Fano plane (a symmetric 2-(7,3,1) design) and its complement (7,4,2) feed
two families of coordinate projections: rank 3 from the first, rank 4 from
the second, spread over a partition of the eight MUBs of C^7. Every pairwise
embedded inner product is at most zero, and with 56 > d+1 = 49 elements the
orthoplex-regime bound certifies the packing as optimally spread, over BOTH
rank classes at once.
"""

import grasspack as gp

fano = gp.BlockDesign(7, gp.enumerate_projective_plane(2))
complement = gp.complement_design(fano)
print("Fano blocks:     ", list(fano.blocks))
print("complement blocks:", list(complement.blocks))

# cohesion thresholds: l^2/m per design, compared as exact rationals
from fractions import Fraction
for name, dsgn in (("Fano", fano), ("complement", complement)):
    l, m = dsgn.block_size, dsgn.m
    print(f"{name}: cohesion {gp.cohesion(dsgn)} <= l^2/m = {l * l}/{m}:",
          gp.is_cohesive(dsgn, Fraction(l * l, m)))

mubs = gp.gen_mubs_prime(7)
packing = gp.build_mixed_packing(mubs, [fano, complement],
                                 [[0, 1, 2, 3], [4, 5, 6, 7]])
print(f"\npacking: {packing.n} projections, rank profile {packing.rank_profile}, "
      f"mixture {packing.mixture}")

rep = gp.coherence(packing)
print(f"packing constant (max embedded inner product): {rep.mu_embedded:.2e}")
print("pair classes:")
for key, summary in rep.pair_classes.items():
    print(f"  {key:26s} count {summary.count:4d}   max inner {summary.max_inner:+.6f}")

cert = gp.certify(packing)
print(f"\ncertificate: {cert.status.value} (n = {cert.n} > d+1 = {cert.d + 1})")
print(f"tight: {cert.is_tight}, constant {cert.tight_constant:g} (= 3*4 + 4*4)")

dim, full = gp.span_of_achievers(packing, rep, cert)
print(f"achiever subspaces span dimension {dim} (full: {full})")

flipped = gp.spatial_complement(packing)
print(f"\nspatial complement has rank profile {flipped.rank_profile} and packing "
      f"constant {gp.coherence(flipped).mu_embedded:.2e} (unchanged)")
