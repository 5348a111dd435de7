"""Core label types and canonical forms.

Two families of isomorphism classes are named here:

* ``ULabel`` -- the indecomposable modules of the Borel subgroup, written
  U_{a,b}: torus weight ``a`` (mod p-1) and dimension ``b`` in [1, p].
  ``b == p`` marks the projective indecomposables.
* ``WalkLabel`` -- the non-projective indecomposables of SL2(F_p), written
  M(i, l, s, eps): a walk of length ``s`` starting at vertex ``l+1`` of the
  Brauer tree of block ``i``, with sign ``eps`` selecting which alternating
  positions form the top.

Walk quadruples are not unique names: a walk that loops past the exceptional
vertex can be read from either end.  ``canonicalize_walk`` fixes one
representative per isomorphism class (see its docstring), and all equality
tests route through it.
"""

from dataclasses import dataclass
from functools import lru_cache


class NotProjectiveError(ValueError):
    """A composition-factor vector does not come from a projective module."""


class InternalConsistencyError(RuntimeError):
    """A closed-form identity that must hold failed; indicates a bug."""


class InconsistentDataError(ValueError):
    """User-supplied module data is not internally consistent."""


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _order_mod(x, p):
    k, y = 1, x % p
    while y != 1:
        y = (y * x) % p
        k += 1
    return k


@dataclass(frozen=True)
class PrimeContext:
    """An odd prime p together with a fixed primitive root zeta mod p.

    Derived constants: ``half`` = (p-1)/2 and ``vareps`` = +1 or -1 with
    p = vareps (mod 4).
    """

    p: int
    zeta: int = 0  # 0 means "pick the smallest primitive root"

    def __post_init__(self):
        p = self.p
        if not _is_prime(p) or p < 3:
            raise ValueError(f"p must be an odd prime >= 3, got {p}")
        if self.zeta == 0:
            z = next(z for z in range(2, p) if _order_mod(z, p) == p - 1)
            object.__setattr__(self, "zeta", z)
        if not (2 <= self.zeta <= p - 1) or _order_mod(self.zeta, p) != p - 1:
            raise ValueError(f"zeta={self.zeta} is not a primitive root mod {p}")

    @property
    def half(self):
        return (self.p - 1) // 2

    @property
    def vareps(self):
        return 1 if self.p % 4 == 1 else -1


@dataclass(frozen=True, order=True)
class ULabel:
    """The Borel-side indecomposable U_{a,b}; projective iff b == p."""

    a: int
    b: int

    @property
    def block(self):
        return self.a % 2

    def __str__(self):
        return f"U({self.a},{self.b})"


@dataclass(frozen=True, order=True)
class WalkLabel:
    """The SL2-side non-projective indecomposable M(i, l, s, eps)."""

    i: int
    l: int
    s: int
    eps: int

    def __str__(self):
        return f"M({self.i},{self.l},{self.s},{self.eps:+d})"


@dataclass(frozen=True, order=True)
class GSimpleLabel:
    """The simple SL2-module V_t, t in [1, p]; V_p is the projective simple."""

    t: int

    def __str__(self):
        return f"V({self.t})"


def validate_ulabel(ctx, a, b):
    """Build U_{a,b} from raw integers; ``a`` is reduced mod p-1."""
    p = ctx.p
    if not (1 <= b <= p):
        raise ValueError(f"b must lie in [1, {p}], got {b}")
    return ULabel(a % (p - 1), b)


def u_is_projective(ctx, u):
    return u.b == ctx.p


def simple_block(ctx, t):
    """Block index of V_t: 0 for t odd, 1 for t even; t = p is the semisimple block."""
    if not (1 <= t <= ctx.p):
        raise ValueError(f"t must lie in [1, {ctx.p}], got {t}")
    if t == ctx.p:
        return 2
    return 0 if t % 2 == 1 else 1


def _check_walk_ranges(ctx, i, l, s, eps):
    p = ctx.p
    if i not in (0, 1):
        raise ValueError(f"block index must be 0 or 1, got {i}")
    if not (0 <= l <= (p - 3) // 2):
        raise ValueError(f"l must lie in [0, {(p - 3) // 2}], got {l}")
    if not (1 <= s <= p - 1):
        raise ValueError(f"s must lie in [1, {p - 1}], got {s}")
    if l + s > p - 1:
        raise ValueError(f"l + s must be at most {p - 1}, got {l + s}")
    if eps not in (-1, 1):
        raise ValueError(f"eps must be -1 or +1, got {eps}")


def is_type_two(ctx, w):
    """Whether the walk loops around the exceptional vertex."""
    return w.l + w.s > ctx.half


def reverse_walk(ctx, w):
    """The same isomorphism class read from the other end of the walk.

    Only type-II walks admit a second encoding: the reversed walk starts at
    vertex p - (l+s), i.e. l' = p-1-l-s, and the sign flips iff s is even.
    """
    if not is_type_two(ctx, w):
        raise ValueError("type-I walks have a single left-to-right encoding")
    delta = w.eps if w.s % 2 == 1 else -w.eps
    return WalkLabel(w.i, ctx.p - 1 - w.l - w.s, w.s, delta)


def canonicalize_walk(ctx, i, l, s, eps):
    """Return the canonical representative of the class of M(i, l, s, eps).

    Rules, applied in order:

    * s = 1 names a simple module independently of eps; store eps = -1.
    * A type-II walk (l + s > (p-1)/2) with l < p-1-l-s is replaced by its
      reversal (i, p-1-l-s, s, delta) with delta = eps for s odd and -eps
      for s even, so the stored start tail is the longer one.
    * If l = p-1-l-s (walk starts and ends at the same vertex) the two signs
      name the same module; store eps = -1.

    Two quadruples denote isomorphic modules iff their canonical forms agree.
    """
    _check_walk_ranges(ctx, i, l, s, eps)
    if s == 1:
        return WalkLabel(i, l, 1, -1)
    w = WalkLabel(i, l, s, eps)
    if is_type_two(ctx, w):
        mirror_l = ctx.p - 1 - l - s
        if l < mirror_l:
            w = reverse_walk(ctx, w)
        if w.l == ctx.p - 1 - w.l - w.s:
            w = WalkLabel(w.i, w.l, w.s, -1)
    return w


def canonicalize(ctx, w):
    return canonicalize_walk(ctx, w.i, w.l, w.s, w.eps)


def enumerate_nonprojective_ulabels(ctx):
    p = ctx.p
    return [ULabel(a, b) for a in range(p - 1) for b in range(1, p)]


@lru_cache(maxsize=None)
def enumerate_canonical_walks(ctx, i):
    """All canonical walk labels of block i, sorted."""
    p = ctx.p
    seen = set()
    for l in range((p - 1) // 2):
        for s in range(1, p - l):
            for eps in (-1, 1):
                seen.add(canonicalize_walk(ctx, i, l, s, eps))
    return tuple(sorted(seen))


def count_nonprojective_per_block(ctx):
    """(p-1)^2/2, checked against the canonical-label enumeration."""
    expected = (ctx.p - 1) ** 2 // 2
    for i in (0, 1):
        found = len(enumerate_canonical_walks(ctx, i))
        if found != expected:
            raise InternalConsistencyError(
                f"block {i}: enumerated {found} canonical labels, expected {expected}"
            )
    return expected


class BDecomposition:
    """A finite multiset of U-labels with multiplicities."""

    def __init__(self, mult=None):
        self.mult = {}
        if mult:
            for label, n in dict(mult).items():
                self.add(label, n)

    def add(self, label, n=1):
        if n < 0:
            raise ValueError("multiplicities must be non-negative")
        if n:
            self.mult[label] = self.mult.get(label, 0) + n

    def merge(self, other):
        for label, n in other.mult.items():
            self.add(label, n)
        return self

    def scaled(self, k):
        out = BDecomposition()
        for label, n in self.mult.items():
            out.add(label, n * k)
        return out

    def items(self):
        return sorted(self.mult.items())

    def total_dim(self):
        return sum(n * label.b for label, n in self.mult.items())

    def __eq__(self, other):
        return isinstance(other, BDecomposition) and self.mult == other.mult

    def __repr__(self):
        inner = " + ".join(f"{n}*{label}" for label, n in self.items())
        return f"BDecomposition({inner or '0'})"


class GDecomposition:
    """Walk-label multiplicities plus projective multiplicities P_{V_t}."""

    def __init__(self, walks=None, proj=None):
        self.walks = {}
        self.proj = {}
        if walks:
            for w, n in dict(walks).items():
                self.add_walk(w, n)
        if proj:
            for t, n in dict(proj).items():
                self.add_proj(t, n)

    def add_walk(self, w, n=1):
        if n < 0:
            raise ValueError("multiplicities must be non-negative")
        if n:
            self.walks[w] = self.walks.get(w, 0) + n

    def add_proj(self, t, n=1):
        if n < 0:
            raise ValueError("multiplicities must be non-negative")
        if n:
            self.proj[t] = self.proj.get(t, 0) + n

    def merge(self, other):
        for w, n in other.walks.items():
            self.add_walk(w, n)
        for t, n in other.proj.items():
            self.add_proj(t, n)
        return self

    def walk_items(self):
        return sorted(self.walks.items())

    def proj_items(self):
        return sorted(self.proj.items())

    def __eq__(self, other):
        return (
            isinstance(other, GDecomposition)
            and self.walks == other.walks
            and self.proj == other.proj
        )

    def __repr__(self):
        parts = [f"{n}*{w}" for w, n in self.walk_items()]
        parts += [f"{n}*P(V{t})" for t, n in self.proj_items()]
        return f"GDecomposition({' + '.join(parts) or '0'})"


def proj_g_dim(ctx, t):
    """dim P_{V_t}: p for t in {1, p}, else 2p."""
    return ctx.p if t in (1, ctx.p) else 2 * ctx.p
