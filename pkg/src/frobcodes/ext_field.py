"""The extension field F_{p^n} = F_p[X]/(f) seen as the vector space F_p^n.

Coordinates are taken over the descending monomial basis
``(X^(n-1), ..., X, 1) = (e_1, ..., e_n)``, so ``coords[0]`` multiplies
X^(n-1) and ``coords[-1]`` is the constant term.
"""

import random
import re
from functools import cached_property

from .errors import (
    CtxMismatch,
    InvalidParams,
    ParseError,
    ZeroInverse,
    ZeroOrder,
    ZeroToZeroPower,
)
from .field_core import (
    check_odd_prime,
    degree,
    factorize,
    format_poly,
    is_irreducible,
    normalize,
    parse_poly,
    poly_egcd,
    poly_mul,
    poly_rem,
)
from .linalg import Matrix


class FieldCtx:
    """F_p[X]/(f) for a monic irreducible ``f`` of degree ``n``."""

    def __init__(self, p, f, check=True):
        if check:
            check_odd_prime(p)
        f = normalize(f, p)
        if degree(f) < 1:
            raise InvalidParams("modulus must have degree >= 1")
        if f[0] != 1:
            raise InvalidParams(f"modulus {format_poly(f)} is not monic")
        if check and not is_irreducible(f, p):
            raise InvalidParams(f"modulus {format_poly(f)} is reducible over F_{p}")
        self.p = p
        self.f = f
        self.n = degree(f)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.f) == (other.p, other.f)

    def __hash__(self):
        return hash((self.p, self.f))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, f={format_poly(self.f)})"

    # pickling keeps cached tensors out of the payload
    def __getstate__(self):
        return {"p": self.p, "f": self.f, "n": self.n}

    @property
    def order(self):
        return self.p ** self.n

    def __call__(self, value):
        """Build an element from coordinates, a polynomial tuple, an int or text."""
        if isinstance(value, FieldElem):
            if value.ctx != self:
                raise CtxMismatch("element from another field")
            return value
        if isinstance(value, int):
            return self.from_poly((value,))
        if isinstance(value, str):
            return self.parse(value)
        return self.from_coords(value)

    def from_coords(self, coords):
        coords = tuple(int(c) % self.p for c in coords)
        if len(coords) != self.n:
            raise InvalidParams(f"expected {self.n} coordinates, got {len(coords)}")
        return FieldElem(coords, self)

    def from_poly(self, poly):
        r = poly_rem(normalize(poly, self.p), self.f, self.p)
        return FieldElem((0,) * (self.n - len(r)) + r, self)

    def zero(self):
        return FieldElem((0,) * self.n, self)

    def one(self):
        return self.from_poly((1,))

    def basis(self):
        """``(e_1, ..., e_n) = (X^(n-1), ..., 1)``."""
        return [FieldElem(tuple(int(i == j) for j in range(self.n)), self) for i in range(self.n)]

    def gen(self):
        """The class of X."""
        return self.from_poly((1, 0))

    def parse(self, text):
        """Parse ``"[2,6,5,5,0,4]"`` (coordinates) or ``"2*X^5+6*X^4+5*X^3+5*X^2+4"``."""
        s = text.strip()
        if s.startswith("["):
            try:
                coords = [int(c) for c in re.split(r"[,\s]+", s.strip("[]").strip())]
            except ValueError:
                raise ParseError(f"bad coordinate vector {text!r}") from None
            if len(coords) != self.n:
                raise ParseError(f"expected {self.n} coordinates in {text!r}")
            return self.from_coords(coords)
        return self.from_poly(parse_poly(s, self.p))

    def random_element(self, rng):
        return FieldElem(tuple(rng.randrange(self.p) for _ in range(self.n)), self)

    @cached_property
    def structure_tensor(self):
        """``c[j][k][l]`` with ``e_j * e_k = sum_l c[j][k][l] e_l`` (0-based)."""
        n = self.n
        basis = self.basis()
        return tuple(
            tuple((basis[j] * basis[k]).coords for k in range(n)) for j in range(n)
        )

    def mul_via_tensor(self, a, b):
        """Product through the structure constants; independent of :meth:`FieldElem.__mul__`."""
        _same_ctx(a, b)
        p, n = self.p, self.n
        c = self.structure_tensor
        out = [0] * n
        for j, aj in enumerate(a.coords):
            if not aj:
                continue
            for k, bk in enumerate(b.coords):
                if not bk:
                    continue
                s = aj * bk
                for l, v in enumerate(c[j][k]):
                    out[l] += s * v
        return FieldElem(tuple(x % p for x in out), self)

    def left_mul_matrix(self, a):
        """Matrix M with ``M @ coords(u) == coords(a * u)``, built from the tensor."""
        p, n = self.p, self.n
        c = self.structure_tensor
        # column k is a * e_k = sum_j a_j c[j][k]
        rows = [[0] * n for _ in range(n)]
        for j, aj in enumerate(a.coords):
            if not aj:
                continue
            for k in range(n):
                for l, v in enumerate(c[j][k]):
                    rows[l][k] += aj * v
        return Matrix(rows, p)

    @cached_property
    def _group_factors(self):
        return factorize(self.order - 1)

    def element_order(self, a):
        """Multiplicative order, by stripping prime factors from p^n - 1."""
        if a.is_zero():
            raise ZeroOrder("0 has no multiplicative order")
        e = self.order - 1
        for ell, mult in self._group_factors:
            for _ in range(mult):
                if (a ** (e // ell)).is_one():
                    e //= ell
                else:
                    break
        return e

    def is_primitive(self, a):
        if a.is_zero():
            return False
        e = self.order - 1
        return all(not (a ** (e // ell)).is_one() for ell, _ in self._group_factors)

    def find_primitive_root(self, seed=0):
        """Seeded random search for an element of order p^n - 1."""
        rng = random.Random(seed)
        while True:
            a = self.random_element(rng)
            if self.is_primitive(a):
                return a


def _same_ctx(a, b):
    if a.ctx != b.ctx:
        raise CtxMismatch(f"{a.ctx!r} vs {b.ctx!r}")


class FieldElem:
    __slots__ = ("coords", "ctx")

    def __init__(self, coords, ctx):
        self.coords = coords
        self.ctx = ctx

    def __getstate__(self):
        return (self.coords, self.ctx)

    def __setstate__(self, state):
        self.coords, self.ctx = state

    @property
    def poly(self):
        return normalize(self.coords, self.ctx.p)

    def is_zero(self):
        return not any(self.coords)

    def is_one(self):
        return self.coords[-1] == 1 and not any(self.coords[:-1])

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.ctx == other.ctx and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"FieldElem({format_poly(self.poly)})"

    def __str__(self):
        return format_poly(self.poly)

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ctx(other)
        if isinstance(other, FieldElem):
            _same_ctx(self, other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElem(tuple((a + b) % p for a, b in zip(self.coords, other.coords)), self.ctx)

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FieldElem(tuple(-a % p for a in self.coords), self.ctx)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ctx = self.ctx
        return ctx.from_poly(poly_mul(self.poly, other.poly, ctx.p))

    __rmul__ = __mul__

    def inverse(self):
        """Inverse by the extended Euclidean algorithm on (a, f)."""
        if self.is_zero():
            raise ZeroInverse("0 is not invertible")
        ctx = self.ctx
        g, s, _ = poly_egcd(self.poly, ctx.f, ctx.p)
        assert g == (1,)
        return ctx.from_poly(s)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0 and self.is_zero():
            raise ZeroToZeroPower("0^0 is undefined")
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def order(self):
        return self.ctx.element_order(self)

    def coords_str(self):
        return "[" + ",".join(str(c) for c in self.coords) + "]"
