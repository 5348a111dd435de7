#!/usr/bin/env python3
"""A tour of the label types and block structure at p = 7.

Both group algebras split into blocks with cyclic defect.  On the Borel side
every indecomposable is a uniserial U_{a,b}; on the SL2 side the two
non-semisimple blocks are line Brauer trees and each non-projective
indecomposable is a walk M(i, l, s, eps) on its tree.
"""

from sl2green import (
    PrimeContext,
    WalkLabel,
    b_cartan,
    brauer_tree,
    canonicalize_walk,
    count_nonprojective_per_block,
    enumerate_canonical_walks,
    expand_walk,
    g_cartan,
    walk_dim,
    walk_factors,
    walk_top_socle,
)

ctx = PrimeContext(7)
print(f"p = {ctx.p}, primitive root zeta = {ctx.zeta}, vareps = {ctx.vareps:+d}")

print("\n-- Brauer trees of the two SL2 blocks (edges left to right) --")
for i in (0, 1):
    tree = brauer_tree(ctx, i)
    edges = "  ".join(f"V{t}" for t in tree.edges)
    print(f"block {i}:  {edges}   (exceptional vertex {tree.exceptional}, m = {tree.multiplicity})")

print("\n-- walks name the non-projective indecomposables --")
for quad in [(0, 0, 3, 1), (0, 1, 2, -1), (0, 0, 5, 1)]:
    w = canonicalize_walk(ctx, *quad)
    edges, vertices = expand_walk(ctx, w)
    print(
        f"M{quad} -> canonical {w}: edges {edges}, vertices {vertices}, "
        f"dim {walk_dim(ctx, w)}, factors {walk_factors(ctx, w)}"
    )

w = WalkLabel(0, 1, 3, 1)
top, socle = walk_top_socle(ctx, w)
print(f"\ntop/socle of {w}: top {top}, socle {socle}")

print("\n-- counting --")
print(f"canonical walks per block: {count_nonprojective_per_block(ctx)} = (p-1)^2/2")
print(f"block 0 walks: {len(enumerate_canonical_walks(ctx, 0))}")

print("\n-- Cartan matrices and their exact rational inverses --")
bc = b_cartan(ctx, 0)
print("Borel block 0, gamma:")
for row in bc.gamma:
    print("   ", row)
print("delta = gamma^-1 (denominators are exactly p):")
for row in bc.delta:
    print("   ", [str(x) for x in row])
gc = g_cartan(ctx, 0)
print("SL2 block 0, Cartan:")
for row in gc.B:
    print("   ", row)
print("inverse:")
for row in gc.Gamma:
    print("   ", [str(x) for x in row])
