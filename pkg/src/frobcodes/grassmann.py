"""Exact counts for GL(n, F_q) and the Grassmannian Grass(k, n, F_q)."""

from .errors import InvalidParams


def _check(n, q):
    if n < 1 or q < 2:
        raise InvalidParams(f"need n >= 1 and q >= 2, got n={n}, q={q}")


def gl_order(n, q):
    """(q^n - 1)(q^n - q)...(q^n - q^(n-1))."""
    _check(n, q)
    out = 1
    qn = q**n
    for i in range(n):
        out *= qn - q**i
    return out


def gl_order_factored(n, q):
    """Same count as (q^n - 1)(q^(n-1) - 1)...(q - 1) * q^(n(n-1)/2)."""
    _check(n, q)
    out = q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        out *= q**i - 1
    return out


def grass_count(k, n, q):
    """Number of k-dimensional subspaces of F_q^n (Gaussian binomial)."""
    if q < 2 or n < 0 or not 0 <= k <= n:
        raise InvalidParams(f"need 0 <= k <= n and q >= 2, got k={k}, n={n}, q={q}")
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    count, rem = divmod(num, den)
    assert rem == 0, "Gaussian binomial division left a remainder"
    return count


def format_grouped(value, sep=" "):
    """Decimal string in groups of three, e.g. ``301 490 686 407 185``."""
    return f"{value:,}".replace(",", sep)
