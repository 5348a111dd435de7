#!/usr/bin/env python3
"""The brute-force oracle: explicit matrices over F_5 versus the formulas.

Modules are built as honest representing matrices, induced through a coset
transversal of the projective line, restricted by forgetting generators, and
decomposed by exact linear algebra.  Nothing here reuses the closed-form
route, so agreement is a genuine cross-check.
"""

from sl2green import PrimeContext, ULabel
from sl2green.indres import ell, ind_u, res_projective_g, res_walk
from sl2green.labels import BDecomposition
from sl2green.oracle import (
    brauer_factors_g,
    build_simple_g,
    build_u,
    decompose_b_module,
    induce,
    restrict,
)

ctx = PrimeContext(5)

print("-- explicit matrices for U(2,3) --")
m = build_u(ctx, ULabel(2, 3))
print("g acts as:")
print(m.mat_g)
print("lambda acts as:")
print(m.mat_lambda)

print("\n-- the simple V_3 restricts to U(2,3) --")
v3 = build_simple_g(ctx, 3)
print("decompose(restrict(V_3)) =", decompose_b_module(ctx, restrict(ctx, v3)))

print("\n-- induction, concretely --")
u = ULabel(0, 3)
ind = induce(ctx, build_u(ctx, u))
print(f"dim Ind U(0,3) = {ind.dim}")
print("Brauer factors of the induced module:", brauer_factors_g(ctx, ind))
print("closed-form ell(0,3,t):", {t: ell(ctx, 0, 3, t) for t in range(1, 6) if ell(ctx, 0, 3, t)})

print("\n-- the flagship diff: Res(Ind(U)) both ways --")
matside = decompose_b_module(ctx, restrict(ctx, ind))
gdec = ind_u(ctx, u)
formula = BDecomposition()
for w, n in gdec.walks.items():
    formula.merge(res_walk(ctx, w).scaled(n))
for t, n in gdec.proj.items():
    formula.merge(res_projective_g(ctx, t).scaled(n))
print("matrix route:  ", matside)
print("formula route: ", formula)
print("equal:", matside == formula)
