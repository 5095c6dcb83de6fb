"""Polynomials and truncated power series over Indigenous semirings.

Polynomials are dense coefficient tuples trimmed to canonical form; the
degree of the zero polynomial is negative infinity, which is neutral
for max and absorbing for +, so degree is a morphism from multiplication
and addition of polynomials into (max, +) arithmetic.

Truncated series are fixed windows of depth N: coefficients 0..N with
multiplication cut off beyond the window.  Idempotent windows have a
rigid shape (constant term 1 or m, every higher nonzero coefficient m,
support additively closed inside the window); the structural test and
the direct squaring test are both implemented and must agree.

Quadratic irreducibility over the order-k semiring has a closed form:
with both coefficients finite and nonzero it reduces to coprimality,
and with a saturated coefficient only the two mixed shapes with a unit
partner coefficient resist factoring.  ``factorization_oracle`` checks
the closed form independently by exhausting candidate factorizations.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence, Union

from .core import MANY, ZERO, BoundExceededError, ContextMismatchError, Elem, SemiringCtx, fin

ORACLE_BOUND = 6

NEG_INFINITY = float("-inf")

Degree = Union[int, float]


@dataclass(frozen=True)
class Poly:
    """Polynomial in canonical form: no trailing zero coefficients."""

    ctx: SemiringCtx
    coeffs: tuple

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == ZERO:
            raise ValueError("trailing zero coefficient; build polynomials with make_poly")
        for c in self.coeffs:
            self.ctx.check(c)

    @classmethod
    def zero(cls, ctx: SemiringCtx) -> "Poly":
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx: SemiringCtx) -> "Poly":
        return cls(ctx, (ctx.one,))

    @classmethod
    def constant(cls, ctx: SemiringCtx, a: Elem) -> "Poly":
        return make_poly(ctx, (a,))

    @classmethod
    def x(cls, ctx: SemiringCtx) -> "Poly":
        return cls(ctx, (ZERO, ctx.one))

    def coeff(self, i: int) -> Elem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def _check_compat(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatchError("polynomials live over different semirings")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_compat(other)
        n = max(len(self.coeffs), len(other.coeffs))
        out = [self.ctx.add(self.coeff(i), other.coeff(i)) for i in range(n)]
        return make_poly(self.ctx, out)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_compat(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.ctx)
        ctx = self.ctx
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == ZERO:
                continue
            for j, b in enumerate(other.coeffs):
                if b == ZERO:
                    continue
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
        return make_poly(ctx, out)

    def is_unit(self) -> bool:
        """True exactly for the constant polynomial 1."""
        return self.coeffs == (self.ctx.one,)

    def is_idempotent(self) -> bool:
        """True when f * f = f (holds exactly for the constants 0, 1 and m)."""
        return self * self == self

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == ZERO:
                continue
            if i == 0:
                parts.append(c.render())
                continue
            power = "X" if i == 1 else f"X^{i}"
            if c == fin(1):
                parts.append(power)
            else:
                parts.append(f"{c.render()} {power}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    def __repr__(self):
        return f"<Poly {self.render()} over k={self.ctx.k}>"


def make_poly(ctx: SemiringCtx, coeffs: Iterable[Elem]) -> Poly:
    """Build a polynomial, trimming trailing zero coefficients."""
    cs = list(coeffs)
    while cs and cs[-1] == ZERO:
        cs.pop()
    return Poly(ctx, tuple(cs))


_TERM_RE = re.compile(r"^(m|\d+)?(X(\^(\d+))?)?$")


def parse_poly(ctx: SemiringCtx, text: str) -> Poly:
    """Parse "c0 + c1 X + c2 X^2" style text (coefficient 1 may be omitted)."""
    body = text.strip()
    if not body:
        raise ValueError("empty polynomial text")
    coeffs: dict = {}
    for raw in body.split("+"):
        term = raw.replace(" ", "").replace("x", "X")
        match = _TERM_RE.match(term)
        if not match or (match.group(1) is None and match.group(2) is None):
            raise ValueError(f"cannot parse polynomial term {raw.strip()!r}")
        coef_tok, has_x, _, power_tok = match.groups()
        coef = Elem.parse(coef_tok) if coef_tok is not None else fin(1)
        degree = 0 if has_x is None else (1 if power_tok is None else int(power_tok))
        prev = coeffs.get(degree, ZERO)
        coeffs[degree] = ctx.add(prev, coef)
    top = max(coeffs) if coeffs else 0
    return make_poly(ctx, [coeffs.get(i, ZERO) for i in range(top + 1)])


def poly_from_json(ctx: SemiringCtx, data: Sequence) -> Poly:
    return make_poly(ctx, [Elem.from_json(x) for x in data])


@dataclass(frozen=True)
class TruncSeries:
    """A power series window: coefficients 0..depth, no trimming."""

    ctx: SemiringCtx
    depth: int
    coeffs: tuple

    def __post_init__(self):
        if not isinstance(self.depth, int) or self.depth < 0:
            raise ValueError(f"depth must be an integer >= 0, got {self.depth!r}")
        if len(self.coeffs) != self.depth + 1:
            raise ValueError(
                f"window of depth {self.depth} needs {self.depth + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            self.ctx.check(c)

    def _check_compat(self, other: "TruncSeries"):
        if not isinstance(other, TruncSeries):
            raise TypeError(f"expected TruncSeries, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatchError("series live over different semirings")
        if other.depth != self.depth:
            raise ValueError("series windows have different depths")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_compat(other)
        ctx = self.ctx
        out = tuple(ctx.add(a, b) for a, b in zip(self.coeffs, other.coeffs))
        return TruncSeries(ctx, self.depth, out)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        """Product truncated to the window."""
        self._check_compat(other)
        ctx = self.ctx
        out = [ZERO] * (self.depth + 1)
        for i, a in enumerate(self.coeffs):
            if a == ZERO:
                continue
            for j in range(self.depth + 1 - i):
                b = other.coeffs[j]
                if b == ZERO:
                    continue
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
        return TruncSeries(ctx, self.depth, tuple(out))

    def is_unit(self) -> bool:
        """True exactly for the constant-1 window."""
        if self.coeffs[0] != self.ctx.one:
            return False
        return all(c == ZERO for c in self.coeffs[1:])

    def support(self) -> tuple:
        """Degrees >= 1 carrying a nonzero coefficient."""
        return tuple(i for i in range(1, self.depth + 1) if self.coeffs[i] != ZERO)

    def squares_to_self(self) -> bool:
        return self * self == self

    def has_idempotent_shape(self) -> bool:
        """Structural test: all zero, or constant term in {1, m}, higher
        nonzero coefficients all m, support additively closed in-window."""
        if all(c == ZERO for c in self.coeffs):
            return True
        if self.coeffs[0] not in (self.ctx.one, MANY):
            return False
        sup = self.support()
        for i in sup:
            if self.coeffs[i] != MANY:
                return False
        sup_set = set(sup)
        for s in sup:
            for t in sup:
                if s + t <= self.depth and s + t not in sup_set:
                    return False
        # a nonzero constant term with empty support is fine: 1 and m square to themselves
        return True

    def render(self) -> str:
        text = make_poly(self.ctx, self.coeffs).render()
        return f"{text} (window depth {self.depth})"

    def to_json(self) -> dict:
        return {"depth": self.depth, "coeffs": [c.to_json() for c in self.coeffs]}

    def __repr__(self):
        return f"<TruncSeries {self.render()} over k={self.ctx.k}>"


def make_series(ctx: SemiringCtx, depth: int, coeffs: Iterable[Elem]) -> TruncSeries:
    """Build a window of the given depth, padding with zeros."""
    cs = list(coeffs)
    if len(cs) > depth + 1:
        raise ValueError(f"{len(cs)} coefficients do not fit a window of depth {depth}")
    cs.extend([ZERO] * (depth + 1 - len(cs)))
    return TruncSeries(ctx, depth, tuple(cs))


def series_from_json(ctx: SemiringCtx, data: dict) -> TruncSeries:
    return make_series(ctx, int(data["depth"]), [Elem.from_json(x) for x in data["coeffs"]])


def ts_is_idempotent_window(f: TruncSeries) -> bool:
    """Window idempotency, computed both structurally and by squaring.

    The two answers must agree; a mismatch means the arithmetic itself
    is broken and is reported as an error rather than a value.
    """
    by_square = f.squares_to_self()
    by_shape = f.has_idempotent_shape()
    if by_square != by_shape:
        raise RuntimeError(
            f"idempotency checks disagree on {f!r}: squaring says {by_square}, "
            f"shape says {by_shape}"
        )
    return by_square


def idempotent_series_from_generators(
    ctx: SemiringCtx, constant: Elem, gens: Iterable[int], depth: int
) -> TruncSeries:
    """The idempotent window with the given constant term and support
    generated additively by ``gens`` inside [1, depth].

    The constant term must be 1 or m; generators are positive exponents.
    """
    constant = ctx.check(constant)
    if constant not in (ctx.one, MANY):
        raise ValueError("constant term of an idempotent window must be 1 or m")
    gen_list = sorted(set(gens))
    if not gen_list:
        raise ValueError("need at least one generator")
    for g in gen_list:
        if not isinstance(g, int) or g < 1:
            raise ValueError(f"generators must be integers >= 1, got {g!r}")
    reach = [False] * (depth + 1)
    reach[0] = True
    for i in range(1, depth + 1):
        reach[i] = any(g <= i and reach[i - g] for g in gen_list)
    coeffs = [constant] + [MANY if reach[i] else ZERO for i in range(1, depth + 1)]
    return TruncSeries(ctx, depth, tuple(coeffs))


def quadratic(ctx: SemiringCtx, alpha: Elem, beta: Elem) -> Poly:
    """The polynomial alpha X^2 + beta."""
    return make_poly(ctx, (beta, ZERO, alpha))


def quadratic_irreducible(ctx: SemiringCtx, alpha: Elem, beta: Elem) -> bool:
    """Closed-form irreducibility of alpha X^2 + beta (alpha nonzero).

    Both coefficients finite and nonzero: irreducible iff coprime.
    Otherwise only m X^2 + 1 and X^2 + m are irreducible; in particular
    beta = 0 always factors as X times alpha X.
    """
    alpha = ctx.check(alpha)
    beta = ctx.check(beta)
    if alpha == ZERO:
        raise ValueError("leading coefficient must be nonzero")
    if alpha.kind == "fin" and beta.kind == "fin":
        return math.gcd(alpha.value, beta.value) == 1
    if alpha == MANY and beta == ctx.one:
        return True
    if alpha == ctx.one and beta == MANY:
        return True
    return False


def _codes_is_unit(mul_t, g: tuple) -> bool:
    # a unit factor must be a constant with a constant inverse: degree is
    # additive, so nothing of positive degree can divide 1
    if len(g) != 1:
        return False
    n = mul_t.shape[0]
    return any(int(mul_t[g[0], c]) == 1 for c in range(n))


def factorization_oracle(f: Poly, max_k: int = ORACLE_BOUND) -> Optional[tuple]:
    """Search every factorization of f into two nonunit factors.

    Returns the first witness pair in a fixed enumeration order, or
    ``None`` when f is irreducible.  Exhaustive over coefficient tuples,
    so the bound keeps k <= ``max_k`` and the degree at most 2.
    """
    ctx = f.ctx
    if ctx.k > max_k:
        raise BoundExceededError(
            f"factorization search is exhaustive; bounded at k <= {max_k}, got k={ctx.k}"
        )
    deg = f.degree()
    if deg == NEG_INFINITY:
        raise ValueError("the zero polynomial is outside the oracle's scope")
    if deg > 2:
        raise ValueError(f"oracle covers degree <= 2, got degree {deg}")
    add_t, mul_t = ctx.tables()
    target = tuple(ctx.encode(c) for c in f.coeffs)
    n = ctx.size
    for d1 in range(0, deg // 2 + 1):
        d2 = deg - d1
        for g in product(range(n), repeat=d1 + 1):
            if g[-1] == 0 or _codes_is_unit(mul_t, g):
                continue
            for h in product(range(n), repeat=d2 + 1):
                if h[-1] == 0 or _codes_is_unit(mul_t, h):
                    continue
                out = [0] * (deg + 1)
                for i, gi in enumerate(g):
                    for j, hj in enumerate(h):
                        out[i + j] = int(add_t[out[i + j], mul_t[gi, hj]])
                if tuple(out) == target:
                    left = make_poly(ctx, [ctx.decode(c) for c in g])
                    right = make_poly(ctx, [ctx.decode(c) for c in h])
                    return (left, right)
    return None
