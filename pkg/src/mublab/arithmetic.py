"""Dimension-N arithmetic: Galois fields GF(p^m) and the modulo-N ring.

Elements are plain integers 0..N-1.  In galois mode the integer i stands
for the m-tuple of its base-p digits (i_0, ..., i_{m-1}), i.e. for the
polynomial sum_k i_k x^k in the power basis.  Addition is digitwise mod p
and multiplication is polynomial multiplication modulo a fixed monic
irreducible of degree m, so 0 and 1 are automatically the additive and
multiplicative identities.  The irreducible is the lexicographically
smallest monic one, scanning the integer encoding of its non-leading
coefficient vector, which makes every context reproducible without
external polynomial tables.

The additive character sends an element g to char_root ** g_0 where g_0
is the lowest base-p digit (galois mode, char_root = exp(2*pi*1j/p)), or
to char_root ** g (modular mode, char_root = exp(2*pi*1j/N)).

All tables are built eagerly and marked read-only; contexts are safe to
share between threads or processes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def smallest_prime_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def factor_prime_power(n: int) -> tuple[int, int]:
    """Return (p, m) with n = p**m, or raise if n is not a prime power."""
    if n < 2:
        raise ValueError(f"{n} is not a prime power")
    p = smallest_prime_factor(n)
    m = 0
    while n % p == 0:
        n //= p
        m += 1
    if n != 1:
        raise ValueError(f"{n * p**m} is not a prime power")
    return p, m


def digits(x: int, p: int, m: int) -> list[int]:
    """Lowest-first base-p digit vector of length m."""
    out = []
    for _ in range(m):
        out.append(x % p)
        x //= p
    return out


def undigits(vec, p: int) -> int:
    x = 0
    for k in reversed(range(len(vec))):
        x = x * p + int(vec[k]) % p
    return x


def _poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder of dense coefficient lists (lowest first) over GF(p)."""
    num = [c % p for c in num]
    den = [c % p for c in den]
    while den and den[-1] == 0:
        den.pop()
    dn = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p) if p > 2 else den[-1]
    quo = [0] * max(len(num) - dn, 0)
    rem = list(num)
    for k in range(len(rem) - 1 - dn, -1, -1):
        coef = (rem[k + dn] * inv_lead) % p
        quo[k] = coef
        if coef:
            for j, d in enumerate(den):
                rem[k + j] = (rem[k + j] - coef * d) % p
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return quo, rem


def _poly_is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every lower-degree monic polynomial."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d):
            den = digits(enc, p, d) + [1]
            _, rem = _poly_divmod(poly, den, p)
            if len(rem) == 1 and rem[0] == 0:
                return False
    return True


def find_irreducible(p: int, m: int) -> list[int]:
    """Smallest monic irreducible of degree m over GF(p), coefficients lowest first."""
    for enc in range(p**m):
        poly = digits(enc, p, m) + [1]
        if _poly_is_irreducible(poly, p):
            return poly
    raise RuntimeError(f"no irreducible polynomial of degree {m} over GF({p})")


@dataclass(frozen=True)
class ArithmeticContext:
    """Dimension-N arithmetic with precomputed operation tables.

    add, mul are (N, N) integer tables; neg is length N; inv is length N
    with -1 where no inverse exists (always at 0, and at non-units in
    modular mode).  chi[g] is the additive character of g.
    """

    mode: str
    p: int
    m: int
    n: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray
    char_root: complex
    chi: np.ndarray
    irreducible: tuple[int, ...] | None

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def __repr__(self) -> str:
        if self.mode == "galois":
            return f"ArithmeticContext(GF({self.p}^{self.m}), N={self.n})"
        return f"ArithmeticContext(Z/{self.n})"


def _freeze(*arrays: np.ndarray) -> None:
    for a in arrays:
        a.setflags(write=False)


def build_context(mode: str, p_or_n: int, m: int = 1) -> ArithmeticContext:
    """Build a galois GF(p^m) or modular Z/N arithmetic context.

    galois mode: p_or_n is the prime characteristic p and m the extension
    degree.  modular mode: p_or_n is the dimension N itself (m ignored).
    """
    if mode == "galois":
        p, deg = p_or_n, m
        if not is_prime(p):
            raise ValueError(f"galois mode needs a prime characteristic, got {p}")
        if deg < 1:
            raise ValueError(f"extension degree must be >= 1, got {deg}")
        n = p**deg
        dig = np.array([digits(x, p, deg) for x in range(n)], dtype=np.int64)
        powers = p ** np.arange(deg, dtype=np.int64)

        add = ((dig[:, None, :] + dig[None, :, :]) % p) @ powers
        neg = ((-dig) % p) @ powers

        poly = find_irreducible(p, deg)
        # x^k reduced mod the irreducible, as digit vectors, k = 0 .. 2(deg-1)
        xpow = np.zeros((2 * deg - 1, deg), dtype=np.int64)
        cur = [0] * deg
        cur[0] = 1
        for k in range(2 * deg - 1):
            xpow[k] = cur
            carry = cur[-1]
            cur = [0] + cur[:-1]
            for j in range(deg):
                cur[j] = (cur[j] - carry * poly[j]) % p
        conv = np.einsum("ai,bj->abij", dig, dig)
        full = np.zeros((n, n, 2 * deg - 1), dtype=np.int64)
        for i in range(deg):
            for j in range(deg):
                full[:, :, i + j] += conv[:, :, i, j]
        mul = ((full @ xpow) % p) @ powers

        chi = np.exp(2j * np.pi * (np.arange(n) % p) / p)
        char_root = complex(np.exp(2j * np.pi / p))
        irreducible: tuple[int, ...] | None = tuple(poly)
    elif mode == "modular":
        n = p_or_n
        if n < 2:
            raise ValueError(f"modular dimension must be >= 2, got {n}")
        p = smallest_prime_factor(n)
        deg = 1
        idx = np.arange(n, dtype=np.int64)
        add = (idx[:, None] + idx[None, :]) % n
        mul = (idx[:, None] * idx[None, :]) % n
        neg = (-idx) % n
        chi = np.exp(2j * np.pi * idx / n)
        char_root = complex(np.exp(2j * np.pi / n))
        irreducible = None
    else:
        raise ValueError(f"unknown mode {mode!r}")

    inv = np.full(n, -1, dtype=np.int64)
    for a in range(1, n):
        hits = np.flatnonzero(mul[a] == 1)
        if hits.size:
            inv[a] = hits[0]

    add = add.astype(np.int64)
    mul = mul.astype(np.int64)
    _freeze(add, mul, neg, inv, chi)
    return ArithmeticContext(
        mode=mode,
        p=p,
        m=deg,
        n=n,
        add=add,
        mul=mul,
        neg=neg,
        inv=inv,
        char_root=char_root,
        chi=chi,
        irreducible=irreducible,
    )


def character(ctx: ArithmeticContext, g: int) -> complex:
    """Additive character of element g."""
    if not 0 <= g < ctx.n:
        raise ValueError(f"element {g} out of range 0..{ctx.n - 1}")
    return complex(ctx.chi[g])


def half(ctx: ArithmeticContext, g: int) -> int:
    """Division of g by the element 2; needs odd characteristic / odd N."""
    if ctx.mode == "galois" and ctx.p == 2:
        raise ValueError("division by 2 is undefined in characteristic 2")
    if ctx.mode == "modular" and ctx.n % 2 == 0:
        raise ValueError("division by 2 needs odd N in modular mode")
    return int(ctx.mul[g, ctx.inv[2]])


@dataclass(frozen=True)
class ExtensionContext:
    """Quadratic extension GF(N^2) over a galois base context.

    Pairs (a, b) of base elements are labelled by the integer a + b*N, so
    the base-p digit string of a label is a's digits followed by b's.
    The defining relation is t^2 = quad_a + quad_b * t with t^2 - quad_b*t
    - quad_a irreducible over the base field; the residue r equals quad_a,
    the base-field component of t*t.
    """

    base: ArithmeticContext
    quad_a: int
    quad_b: int
    r: int
    add_pairs: np.ndarray
    mul_pairs: np.ndarray
    neg_pairs: np.ndarray
    chi: np.ndarray

    @property
    def n2(self) -> int:
        return self.base.n**2

    def label(self, a: int, b: int) -> int:
        return a + b * self.base.n

    def unlabel(self, e: int) -> tuple[int, int]:
        return e % self.base.n, e // self.base.n

    def mul_pair(self, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        return self.unlabel(int(self.mul_pairs[self.label(*x), self.label(*y)]))

    def __repr__(self) -> str:
        return f"ExtensionContext(GF({self.base.n}^2), t^2={self.quad_a}+{self.quad_b}t, R={self.r})"


def build_extension(ctx: ArithmeticContext) -> ExtensionContext:
    """Quadratic extension via the first irreducible t^2 - b*t - a in label order."""
    if ctx.mode != "galois":
        raise ValueError("quadratic extensions need a galois base context")
    n = ctx.n
    quad_a = quad_b = -1
    squares = ctx.mul[np.arange(n), np.arange(n)]
    for e in range(n * n):
        a, b = e % n, e // n
        # t^2 - b*t - a has a root g iff g*g - b*g - a == 0
        vals = ctx.add[ctx.add[squares, ctx.neg[ctx.mul[b, np.arange(n)]]], ctx.neg[a]]
        if np.all(vals != 0):
            quad_a, quad_b = a, b
            break
    else:  # pragma: no cover - an irreducible quadratic always exists
        raise RuntimeError("no irreducible quadratic found")

    idx = np.arange(n, dtype=np.int64)
    a1 = idx[:, None, None, None]
    b1 = idx[None, :, None, None]
    a2 = idx[None, None, :, None]
    b2 = idx[None, None, None, :]
    bb = ctx.mul[b1, b2]
    first = ctx.add[ctx.mul[a1, a2], ctx.mul[bb, quad_a]]
    second = ctx.add[ctx.add[ctx.mul[a1, b2], ctx.mul[b1, a2]], ctx.mul[bb, quad_b]]
    # label (a, b) <-> a + b*n; reorder broadcast axes so row = b1*n + a1
    mul_pairs = (first + n * second).transpose(1, 0, 3, 2).reshape(n * n, n * n)
    add_pairs = (ctx.add[a1, a2] + n * ctx.add[b1, b2]).transpose(1, 0, 3, 2).reshape(n * n, n * n)
    labels = np.arange(n * n, dtype=np.int64)
    av, bv = labels % n, labels // n
    neg_pairs = ctx.neg[av] + n * ctx.neg[bv]
    chi = ctx.chi[av]

    mul_pairs = np.ascontiguousarray(mul_pairs)
    add_pairs = np.ascontiguousarray(add_pairs)
    _freeze(mul_pairs, add_pairs, neg_pairs, chi)
    return ExtensionContext(
        base=ctx,
        quad_a=quad_a,
        quad_b=quad_b,
        r=quad_a,
        add_pairs=add_pairs,
        mul_pairs=mul_pairs,
        neg_pairs=neg_pairs,
        chi=chi,
    )


def ext_character(ext: ExtensionContext, pair: tuple[int, int]) -> complex:
    """Additive character of the extension element (a, b)."""
    a, b = pair
    n = ext.base.n
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"pair {pair} out of range for GF({n}^2)")
    return complex(ext.chi[ext.label(a, b)])
