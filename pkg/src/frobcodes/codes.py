"""Half-dimension codes from the projective line over F_{p^k}.

A point of P^1(F_{p^k}) is sent to a k-dimensional F_p-subspace of
F_p^{2k}::

    infinity -> V+
    x in V+  -> span_{F_{p^k}} {x + xi} = span_{F_p} {f_1 (x+xi), ..., f_k (x+xi)}

Codes use the row convention: a generator matrix has one basis codeword
per row. A parity-check matrix H satisfies ``G @ H.T == 0``.
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidParams, RankDeficiency, TooLarge
from .ext_field import FieldElem
from .field_core import fp_inv
from .linalg import Matrix, in_row_space

MIN_DISTANCE_LIMIT = 10**7


@dataclass(frozen=True)
class ProjectivePoint:
    """``x = None`` is the point at infinity, otherwise ``x`` lies in V+."""

    x: FieldElem | None = None

    @property
    def is_infinity(self):
        return self.x is None

    def __str__(self):
        return "inf" if self.x is None else str(self.x)


INFINITY = ProjectivePoint()


class LinearCode:
    """A k-dimensional subspace of F_p^n given by a k x n generator matrix."""

    def __init__(self, generator):
        if not isinstance(generator, Matrix):
            raise TypeError("generator must be a Matrix")
        canonical = generator.row_basis()
        if canonical.shape[0] != generator.shape[0] or generator.shape[0] == 0:
            raise RankDeficiency(
                f"generator has rank {canonical.shape[0]} but {generator.shape[0]} rows"
            )
        self.generator = generator
        self.canonical = canonical

    @property
    def k(self):
        return self.generator.shape[0]

    @property
    def n(self):
        return self.generator.shape[1]

    @property
    def p(self):
        return self.generator.p

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return f"LinearCode(p={self.p}, n={self.n}, k={self.k})"

    def __str__(self):
        return str(self.generator)


@dataclass(frozen=True)
class StandardForm:
    """``matrix = [I_k | M]`` on columns ``perm``; ``check = [-M^T | I_(n-k)]``.

    Column j of ``matrix`` is column ``perm[j]`` of the original code.
    """

    perm: tuple
    matrix: Matrix
    check: Matrix


# -- enumeration -----------------------------------------------------------

def enumerate_points(ctx):
    """All p^k + 1 points: infinity, then ``sum a_i f_i`` with a_1 varying fastest."""
    points = [INFINITY]
    points.extend(_finite_points(ctx, 0, ctx.p ** ctx.k))
    return points


def _finite_points(ctx, start, stop):
    p, k = ctx.p, ctx.k
    basis = ctx.v_plus_basis
    zero = ctx.field.zero()
    for idx in range(start, stop):
        x = zero
        for i in range(k):
            a = idx // p**i % p
            if a:
                x = x + basis[i] * a
        yield ProjectivePoint(x)


def point_at(ctx, index):
    """Point number ``index`` (0-based) of :func:`enumerate_points`."""
    if not 0 <= index <= ctx.p ** ctx.k:
        raise IndexError(index)
    if index == 0:
        return INFINITY
    return next(_finite_points(ctx, index - 1, index))


def theta_embed(pt, ctx):
    if pt.is_infinity:
        rows = [f.coords for f in ctx.v_plus_basis]
    else:
        x = ctx.field(pt.x)
        if not ctx.in_v_plus(x):
            raise InvalidParams(f"{x} is not in V+")
        w = (x + ctx.xi).coords
        rows = [m @ w for m in ctx.vplus_mul_mats]
    return LinearCode(Matrix(rows, ctx.p))


def _embed_range(ctx, start, stop):
    return [theta_embed(pt, ctx) for pt in _finite_points(ctx, start, stop)]


def generate_all(ctx, workers=None):
    """Theta over :func:`enumerate_points`, in order.

    With ``workers > 1`` the finite points are split into contiguous index
    ranges embedded in separate processes; results are concatenated in
    index order, so the output is identical to the sequential run.
    """
    total = ctx.p ** ctx.k
    codes = [theta_embed(INFINITY, ctx)]
    if not workers or workers <= 1:
        codes.extend(_embed_range(ctx, 0, total))
        return codes
    step = -(-total // workers)
    bounds = [(s, min(s + step, total)) for s in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_embed_range, ctx, s, e) for s, e in bounds]
        for fut in futures:
            codes.extend(fut.result())
    return codes


# -- code operations -------------------------------------------------------

def standard_form(code):
    R = code.canonical
    _, pivots, _ = R.rref()
    k, n, p = code.k, code.n, code.p
    rest = [j for j in range(n) if j not in pivots]
    perm = tuple(pivots) + tuple(rest)
    matrix = R.select_columns(perm)
    m_block = matrix.select_columns(range(k, n))
    check = (-m_block.T).hstack(Matrix.identity(n - k, p))
    return StandardForm(perm, matrix, check)


def check_matrix(code):
    """Parity-check matrix in the code's original column order."""
    n = code.n
    if n == code.k:
        return Matrix.zeros(0, n, code.p)
    sf = standard_form(code)
    H = sf.check
    cols = [None] * n
    for j, orig in enumerate(sf.perm):
        cols[orig] = tuple(r[j] for r in H.rows)
    return Matrix.from_columns(cols, code.p)


def syndrome(code, v, H=None):
    H = check_matrix(code) if H is None else H
    v = tuple(v)
    if len(v) != code.n:
        raise DimensionMismatch(f"vector of length {len(v)} for a length-{code.n} code")
    return H @ v


def contains(code, v, H=None):
    """Membership by a zero syndrome."""
    return not any(syndrome(code, v, H))


def contains_by_solve(code, v):
    return in_row_space(code.generator, v)


def pluecker_coords(code):
    """All k x k minors over lexicographic column tuples, first nonzero scaled to 1."""
    G = code.generator
    p = code.p
    minors = [G.select_columns(cols).det() for cols in itertools.combinations(range(code.n), code.k)]
    lead = next(m for m in minors if m)
    inv = fp_inv(lead, p)
    return tuple(m * inv % p for m in minors)


def min_distance(code):
    """Minimum Hamming weight, scanning one codeword per scalar class."""
    p, k = code.p, code.k
    if p**k > MIN_DISTANCE_LIMIT:
        raise TooLarge(f"p^k = {p**k} exceeds the brute-force limit {MIN_DISTANCE_LIMIT}")
    rows = code.generator.rows
    n = code.n
    best = n
    # coefficient vectors whose first nonzero entry is 1
    for lead in range(k):
        for tail in itertools.product(range(p), repeat=k - lead - 1):
            word = list(rows[lead])
            for c, r in zip(tail, rows[lead + 1:]):
                if c:
                    word = [w + c * x for w, x in zip(word, r)]
            wt = sum(1 for w in word if w % p)
            if wt < best:
                best = wt
                if best == 1:
                    return 1
    return best


def is_vplus_submodule(code, ctx):
    """Each ``f_i *`` maps the code into itself (closure under F_{p^k})."""
    G = code.generator
    return all(in_row_space(G, m @ row) for m in ctx.vplus_mul_mats for row in G.rows)
