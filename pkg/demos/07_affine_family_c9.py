"""Two more infinite families in C^9
===================================

First: hyperplane cosets of GF(3)^2 and their complements make a mixture-2
optimal packing over the ten MUBs of C^9. Second: the rebased Fano plane
(whose blocks, viewed inside 9 points, meet in exactly l^2/9 = 1 point)
drives the orthoplex construction; with only 7 of the possible 8 block pairs
it certifies as optimally spread but stops short of the full orthoplex.
"""

import grasspack as gp

mubs = gp.gen_mubs_prime_power(9)
print(f"{mubs.k} MUBs in C^9, d = {gp.embedding_dim(9, gp.COMPLEX)}")

# --- affine design + complement, mixture 2 ----------------------------------
ag = gp.BlockDesign(9, gp.enumerate_affine_hyperplanes(3, 2))
packing = gp.build_mixed_packing(mubs, [ag, gp.complement_design(ag)],
                                 [[0, 1, 2, 3, 4], [5, 6, 7, 8, 9]])
cert = gp.certify(packing)
print(f"\naffine family: {packing.n} projections, profile {packing.rank_profile}")
print(f"  certificate {cert.status.value}, mu = {cert.mu_embedded:.2e}, "
      f"tight constant {cert.tight_constant:g}")

# --- rebased Fano, orthoplex route ------------------------------------------
fano = gp.BlockDesign(7, gp.enumerate_projective_plane(2))
m_prime, rebased = gp.design_rebase(fano)
assert m_prime == 9
packing = gp.build_orthoplex_packing(mubs, rebased)
cert = gp.certify(packing)
geometry = gp.verify_orthoplex_geometry(packing)
print(f"\nrebased Fano: {packing.n} projections of ranks 3 and 6")
print(f"  certificate {cert.status.value}, mu = {cert.mu_embedded:.2e}, "
      f"tight: {cert.is_tight}")
print(f"  full orthoplex? {geometry.passes} ({geometry.reason}); the vertices "
      f"cannot be exhausted since 2 m k = {packing.n} < 2d = {2 * cert.d}")
