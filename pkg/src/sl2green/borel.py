"""Closed-form combinatorics on the Borel side.

Composition factors of U_{a,b}, the per-block Cartan matrix and its exact
rational inverse, the stable AR quiver (Heller shift, almost split sequences,
boundary paths, hook distances), and the projective-decomposition solver.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import exact
from .labels import NotProjectiveError, ULabel, u_is_projective, validate_ulabel


def theta(ctx, a, b, c):
    """Multiplicity of S_c as a composition factor of U_{a,b}.

    ``a`` is reduced mod p-1; ``c`` is NOT reduced -- any c outside
    [0, p-2] contributes 0.  This convention is what makes
    ell(a,b,t) = theta(a,b,t-1) + theta(a,b,p-t) bookkeeping come out right
    at t in {1, p}, where one of the two indices equals p-1.
    """
    p = ctx.p
    if not (1 <= b <= p):
        raise ValueError(f"b must lie in [1, {p}], got {b}")
    a = a % (p - 1)
    if c < 0 or c > p - 2:
        return 0
    if (a - c) % 2 != 0:
        return 0
    lo = -((c - a) // (p - 1))  # ceil((a-c)/(p-1))
    hi = (2 * (b - 1) + a - c) // (p - 1)
    return hi - lo + 1


@dataclass(frozen=True)
class BCartan:
    """Cartan matrix gamma of a Borel block and its exact inverse delta.

    Rows/columns are indexed by the block's simples S_i, S_{i+2}, ... in
    that order; delta has every entry with denominator exactly p.
    """

    block: int
    gamma: tuple
    delta: tuple


@lru_cache(maxsize=None)
def b_cartan(ctx, i):
    if i not in (0, 1):
        raise ValueError(f"block index must be 0 or 1, got {i}")
    n = ctx.half
    gamma = [[3 if r == c else 2 for c in range(n)] for r in range(n)]
    delta = exact.invert(gamma)
    # closed form: (p-2)/p on the diagonal, -2/p elsewhere
    p = ctx.p
    for r in range(n):
        for c in range(n):
            want = Fraction(p - 2, p) if r == c else Fraction(-2, p)
            if delta[r][c] != want:
                raise AssertionError("delta disagrees with its closed form")
    to_t = lambda M: tuple(tuple(row) for row in M)
    return BCartan(i, to_t(gamma), to_t(delta))


def omega2(ctx, u):
    """Heller shift squared: U_{a,b} -> U_{a-2,b} (one vertex to the left)."""
    if u_is_projective(ctx, u):
        raise ValueError("omega2 is undefined on projective labels")
    return ULabel((u.a - 2) % (ctx.p - 1), u.b)


@dataclass(frozen=True)
class AlmostSplitSeq:
    """0 -> left -> (+) middle -> right -> 0; middle has one or two terms."""

    left: ULabel
    middle: tuple
    right: ULabel


def almost_split(ctx, u):
    """The almost split sequence starting at a non-projective U_{a,b}.

    The middle is U_{a,b+1} (+) U_{a+2,b-1}; the b-1 = 0 term is dropped,
    and the b+1 = p term is the projective middle term at the quiver rim
    and is kept.
    """
    if u_is_projective(ctx, u):
        raise ValueError("no almost split sequence starts at a projective")
    a, b = u.a, u.b
    middle = [validate_ulabel(ctx, a, b + 1)]
    if b - 1 >= 1:
        middle.append(validate_ulabel(ctx, a + 2, b - 1))
    return AlmostSplitSeq(u, tuple(middle), validate_ulabel(ctx, a + 2, b))


@dataclass(frozen=True)
class BBoundaries:
    """The two boundary modules of U_{a,b} with directed-path lengths."""

    rim: ULabel          # U_{a,p-1}
    rim_distance: int    # p-1-b
    simple: ULabel       # S_{a+2(b-1)}
    simple_distance: int  # b-1


def b_boundaries(ctx, u):
    if u_is_projective(ctx, u):
        raise ValueError("projective labels are not on the stable quiver")
    p, a, b = ctx.p, u.a, u.b
    return BBoundaries(
        rim=ULabel(a, p - 1),
        rim_distance=p - 1 - b,
        simple=validate_ulabel(ctx, a + 2 * (b - 1), 1),
        simple_distance=b - 1,
    )


def b_hook_distance(ctx, a, a_prime, kind):
    """Minimal directed-path length between two hooks on the same boundary.

    ``kind`` selects the simple-module rim ("simple-rim") or the
    U_{.,p-1} rim ("top-rim"); the formula (a'-a mod p-1) is the same for
    both.  The labels must sit on one rim, i.e. a = a' (mod 2).
    """
    if kind not in ("simple-rim", "top-rim"):
        raise ValueError(f"unknown rim kind {kind!r}")
    p = ctx.p
    a, a_prime = a % (p - 1), a_prime % (p - 1)
    if (a - a_prime) % 2 != 0:
        raise ValueError("hooks on one boundary have weights of equal parity")
    return (a_prime - a) % (p - 1)


def decompose_projective_b(ctx, i, kappa):
    """Decompose a projective Borel module from its factor counts.

    ``kappa[j]`` is the multiplicity of S_{i+2j} for j = 0..(p-3)/2.  Returns
    the multiset of U_{c,p}; raises NotProjectiveError when the exact solve
    is non-integral or negative (the input was not a projective's vector).
    """
    n = ctx.half
    kappa = list(kappa)
    if len(kappa) != n:
        raise ValueError(f"kappa must have {n} entries, got {len(kappa)}")
    delta = b_cartan(ctx, i).delta
    counts = exact.mat_vec([list(row) for row in delta], [Fraction(k) for k in kappa])
    out = {}
    for j, m in enumerate(counts):
        if m.denominator != 1 or m < 0:
            raise NotProjectiveError("not a projective composition-factor vector")
        if m:
            out[ULabel((i + 2 * j) % (ctx.p - 1), ctx.p)] = int(m)
    from .labels import BDecomposition

    return BDecomposition(out)
