"""A block-design tour
====================

The combinatorial inputs of the packing constructions: t-design verification
with exact counting, complements, resolvability and affineness (with Bose's
equality), Hadamard generation, and re-declaring symmetric designs over more
points so that blocks meet in exactly l^2/m points.
"""

import grasspack as gp

# --- projective planes are symmetric designs -------------------------------
for q in (2, 3):
    m = q * q + q + 1
    design = gp.BlockDesign(m, gp.enumerate_projective_plane(q))
    rep = gp.verify_design(design, 2)
    print(f"plane of order {q}: 2-({m}, {q + 1}, {rep.lambda_observed}), "
          f"b = {rep.b}, r = {rep.r_observed}, symmetric = {rep.is_symmetric}, "
          f"cohesion = {rep.cohesion}")

# --- affine geometries resolve into parallel classes ------------------------
for p, t1 in ((2, 2), (3, 2)):
    design = gp.BlockDesign(p ** t1, gp.enumerate_affine_hyperplanes(p, t1))
    rep = gp.verify_design(design, 2)
    res = gp.resolvability(design)
    bose = design.b == design.m + rep.r_observed - 1
    print(f"AG({t1},{p}): b = {design.b}, resolvable = {res.is_resolvable} "
          f"({len(res.parallel_classes)} classes), affine = {res.is_affine}, "
          f"cross-class intersection = {res.cross_intersection}, "
          f"Bose equality b = m + r - 1: {bose}")

# --- complements of symmetric designs ---------------------------------------
fano = gp.BlockDesign(7, gp.enumerate_projective_plane(2))
comp = gp.complement_design(fano)
rep = gp.verify_design(comp, 2)
print(f"\nFano complement: 2-(7, {comp.block_size}, {rep.lambda_observed}) "
      f"(m - 2l + lambda = 7 - 6 + 1 = 2)")

# --- Hadamard matrices and their 3-designs ----------------------------------
for order in (4, 8, 12):
    h = gp.gen_hadamard(order)
    print(f"\nHadamard order {order}: H H^T = {order} I verified in integers")
    if order % 4 == 0:
        design = gp.hadamard_to_3design(h)
        rep = gp.verify_design(design, 3)
        print(f"  3-design: {design.b} blocks of size {design.block_size}, "
              f"lambda_3 = {rep.lambda_observed}, levels {rep.is_t_design}")

# --- rebasing: making block intersections equal l^2/m' ----------------------
print()
for name, design in (("Fano", fano),
                     ("plane of order 3",
                      gp.BlockDesign(13, gp.enumerate_projective_plane(3)))):
    m_prime, rebased = gp.design_rebase(design)
    l = rebased.block_size
    lam = gp.cohesion(rebased)
    print(f"{name}: re-declared over {m_prime} points; pairwise intersections "
          f"{lam} = l^2/m' = {l * l}/{m_prime}")
