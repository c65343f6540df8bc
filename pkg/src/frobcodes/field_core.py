"""Arithmetic in F_p and F_p[X].

Polynomials are tuples of residues in *descending* degree order, so
``(1, 1, 2, 1, 5, 3, 2)`` is X^6 + X^5 + 2X^4 + X^3 + 5X^2 + 3X + 2.
The zero polynomial is the empty tuple and every nonzero polynomial has a
nonzero leading coefficient. All functions are pure and take the prime
``p`` explicitly.
"""

import random
import re

from .errors import DivisionByZeroPoly, InvalidParams, ParseError, ZeroInverse

FACTORIZE_LIMIT = 1 << 63


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_odd_prime(p):
    """Return ``p`` if it is an odd prime, else raise InvalidParams."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise InvalidParams(f"p must be an integer, got {p!r}")
    if not is_prime(p):
        raise InvalidParams(f"p = {p} is not prime")
    if p == 2:
        raise InvalidParams("characteristic 2 is not supported (1/2 must exist in F_p)")
    return p


def fp_inv(a, p):
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


# -- polynomials -------------------------------------------------------------

def normalize(coeffs, p):
    """Reduce coefficients into [0, p) and strip leading zeros."""
    coeffs = [c % p for c in coeffs]
    i = 0
    while i < len(coeffs) and coeffs[i] == 0:
        i += 1
    return tuple(coeffs[i:])


def degree(a):
    """Degree of ``a``; -1 for the zero polynomial."""
    return len(a) - 1


def monomial(d, p, c=1):
    return normalize((c,) + (0,) * d, p)


def poly_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    shift = len(a) - len(b)
    out = list(a)
    for i, c in enumerate(b):
        out[shift + i] += c
    return normalize(out, p)


def poly_neg(a, p):
    return normalize([-c for c in a], p)


def poly_sub(a, b, p):
    return poly_add(a, poly_neg(b, p), p)


def poly_scale(a, c, p):
    return normalize([c * x for x in a], p)


def poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return normalize(out, p)


def poly_divmod(a, m, p):
    """Schoolbook long division: returns (q, r) with a = q*m + r, deg r < deg m."""
    if not m:
        raise DivisionByZeroPoly("division by the zero polynomial")
    a = normalize(a, p)
    if len(a) < len(m):
        return (), a
    lead_inv = fp_inv(m[0], p)
    r = list(a)
    q = [0] * (len(a) - len(m) + 1)
    for i in range(len(q)):
        c = r[i] * lead_inv % p
        q[i] = c
        if c:
            for j in range(1, len(m)):
                r[i + j] = (r[i + j] - c * m[j]) % p
        r[i] = 0
    return normalize(q, p), normalize(r[len(q):], p)


def poly_rem(a, m, p):
    return poly_divmod(a, m, p)[1]


def poly_monic(a, p):
    if not a:
        return a
    return poly_scale(a, fp_inv(a[0], p), p)


def poly_gcd(a, b, p):
    """Monic gcd (zero polynomial if both inputs are zero)."""
    while b:
        a, b = b, poly_rem(a, b, p)
    return poly_monic(a, p)


def poly_egcd(a, b, p):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, p), p)
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1, p), p)
    if not r0:
        return (), s0, t0
    c = fp_inv(r0[0], p)
    return poly_scale(r0, c, p), poly_scale(s0, c, p), poly_scale(t0, c, p)


def poly_powmod(a, e, m, p):
    result = poly_rem((1,), m, p)
    base = poly_rem(a, m, p)
    while e:
        if e & 1:
            result = poly_rem(poly_mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = poly_rem(poly_mul(base, base, p), m, p)
    return result


def is_irreducible(f, p):
    """Rabin's test: f of degree n is irreducible iff X^(p^n) = X mod f and
    gcd(X^(p^(n/l)) - X, f) = 1 for every prime l dividing n."""
    f = normalize(f, p)
    n = degree(f)
    if n < 1:
        raise InvalidParams("irreducibility is only defined for deg f >= 1")
    if n == 1:
        return True
    f = poly_monic(f, p)
    x = (1, 0)
    # frob[d] = X^(p^d) mod f
    frob = [poly_rem(x, f, p)]
    for _ in range(n):
        frob.append(poly_powmod(frob[-1], p, f, p))
    if frob[n] != poly_rem(x, f, p):
        return False
    for ell, _ in factorize(n):
        if poly_gcd(poly_sub(frob[n // ell], x, p), f, p) != (1,):
            return False
    return True


def find_irreducible(p, n, seed=0):
    """Seeded search for a monic irreducible polynomial of degree ``n``.

    Candidates X^n + c_1 X^(n-1) + ... + c_n draw their lower coefficients
    from ``random.Random(seed)`` (Mersenne Twister) until one passes
    :func:`is_irreducible`. Roughly one candidate in ``n`` succeeds.
    """
    if n < 1:
        raise InvalidParams("degree must be >= 1")
    rng = random.Random(seed)
    while True:
        cand = (1,) + tuple(rng.randrange(p) for _ in range(n))
        if is_irreducible(cand, p):
            return cand


def factorize(m):
    """Prime factorization by trial division, as ``((prime, exp), ...)``."""
    if m < 1:
        raise InvalidParams("factorize needs m >= 1")
    if m >= FACTORIZE_LIMIT:
        raise InvalidParams("trial division is capped at m < 2^63")
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


# -- text format ---------------------------------------------------------------

_TERM = re.compile(r"([+-]?)(\d*)\*?(?:(X)(?:\^(\d+))?)?")


def parse_poly(text, p):
    """Parse ``"1,1,2,1,5,3,2"`` (descending coefficients) or a symbolic
    form such as ``"X^6+X^5+2*X^4+X^3+5*X^2+3*X+2"``."""
    if re.search(r"[\dXx]\s+[\dXx]", text):
        raise ParseError(f"missing operator in {text!r}")
    s = re.sub(r"\s+", "", text)
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    if not s:
        raise ParseError("empty polynomial")
    if "X" not in s.upper() and ("," in s or re.fullmatch(r"-?\d+", s)):
        try:
            return normalize([int(c) for c in s.split(",")], p)
        except ValueError:
            raise ParseError(f"bad coefficient list {text!r}") from None
    s = s.replace("x", "X")
    terms = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ParseError(f"cannot parse polynomial {text!r} at offset {pos}")
        if pos > 0 and not m.group(1):
            raise ParseError(f"missing sign between terms in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) else 1
        else:
            exp = 0
        terms[exp] = terms.get(exp, 0) + sign * coeff
        pos = m.end()
    top = max(terms)
    return normalize([terms.get(d, 0) for d in range(top, -1, -1)], p)


def format_poly(a, var="X"):
    """Symbolic form, e.g. ``2*X^5+6*X^4+5*X^3+5*X^2+4``; ``0`` for zero."""
    parts = []
    d = degree(a)
    for i, c in enumerate(a):
        e = d - i
        if c == 0:
            continue
        if e == 0:
            parts.append(str(c))
            continue
        mono = var if e == 1 else f"{var}^{e}"
        parts.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(parts) if parts else "0"
