"""Invariant checks run by ``frobcodes verify``.

Each check returns a bool; :func:`run_checks` collects ``(name, ok)``
pairs in a fixed order so reports are reproducible.
"""

import random

from .codes import check_matrix, generate_all, is_vplus_submodule, pluecker_coords
from .field_core import is_irreducible
from .frobenius import v_plus_closed, xi_squared_in_v_plus
from .grassmann import grass_count
from .linalg import Matrix


def _operator_checks(ctx):
    n, p = ctx.n, ctx.p
    eye = Matrix.identity(n, p)
    zero = Matrix.zeros(n, n, p)
    pp, pm = ctx.pi_plus, ctx.pi_minus
    vp = Matrix([f.coords for f in ctx.v_plus_basis], p)
    vm = Matrix([f.coords for f in ctx.v_minus_basis], p)
    yield "modulus irreducible", is_irreducible(ctx.field.f, p)
    yield "sigma^n = 1", ctx.sigma ** n == eye
    yield "tau^2 = 1", ctx.tau @ ctx.tau == eye
    yield "pi+ + pi- = 1", pp + pm == eye
    yield "pi+ idempotent", pp @ pp == pp
    yield "pi- idempotent", pm @ pm == pm
    yield "pi+ pi- = 0 = pi- pi+", pp @ pm == zero and pm @ pp == zero
    yield "dim V+ = dim V- = k", vp.rank() == ctx.k and vm.rank() == ctx.k
    yield "V+ + V- = F_p^n", vp.vstack(vm).rank() == n
    yield "ker pi+ = V+", all(not any(pp @ f.coords) for f in ctx.v_plus_basis) and pp.rank() == ctx.k
    yield "ker pi- = V-", all(not any(pm @ f.coords) for f in ctx.v_minus_basis) and pm.rank() == ctx.k
    yield "V+ closed under multiplication", v_plus_closed(ctx)
    yield "xi * xi^-1 = 1", (ctx.xi * ctx.xi_inv).is_one()
    yield "xi in V-, xi not in V+", ctx.in_v_minus(ctx.xi) and not ctx.in_v_plus(ctx.xi)
    yield "xi^2 in V+", xi_squared_in_v_plus(ctx)
    yield "xi V+ = V-", all(ctx.in_v_minus(ctx.xi * f) for f in ctx.v_plus_basis) and Matrix(
        [(ctx.xi * f).coords for f in ctx.v_plus_basis], p
    ).rank() == ctx.k


def _sampled_checks(ctx, samples, seed):
    field = ctx.field
    rng = random.Random(seed)
    pairs = [(field.random_element(rng), field.random_element(rng)) for _ in range(samples)]

    def frob(u):
        return field.from_coords(ctx.sigma @ u.coords)

    yield "sigma is multiplicative", all(frob(a * b) == frob(a) * frob(b) for a, b in pairs)
    yield "tensor product = reduced product", all(field.mul_via_tensor(a, b) == a * b for a, b in pairs)
    yield "left-mul matrices compose", all(
        field.left_mul_matrix(a) @ field.left_mul_matrix(b) == field.left_mul_matrix(a * b)
        for a, b in pairs[:20]
    )

    def splits(u):
        a, b = ctx.split_coordinates(u)
        return ctx.in_v_plus(a) and ctx.in_v_plus(b) and ctx.xi * a + b == u

    yield "u = xi a + b with a, b in V+", all(splits(a) for a, _ in pairs)


def _code_checks(ctx, workers):
    p, k, n = ctx.p, ctx.k, ctx.n
    codes = generate_all(ctx, workers)
    yield "p^k + 1 codes", len(codes) == p**k + 1
    yield "every code has rank k", all(c.generator.rank() == k for c in codes)
    yield "codes pairwise distinct", len({c.canonical for c in codes}) == len(codes)
    yield "codes are F_{p^k}-subspaces", all(is_vplus_submodule(c, ctx) for c in codes)
    hs = [check_matrix(c) for c in codes]
    yield "G H^T = 0", all((c.generator @ h.T).is_zero() for c, h in zip(codes, hs))
    yield "rank H = n - k", all(h.rank() == n - k for h in hs)
    by_canon = {}
    by_plk = {}
    for i, c in enumerate(codes):
        by_canon.setdefault(c.canonical, []).append(i)
        by_plk.setdefault(pluecker_coords(c), []).append(i)
    yield "Pluecker partition = canonical partition", sorted(by_canon.values()) == sorted(by_plk.values())
    yield "fits in Grass(k, 2k, F_p)", len(codes) <= grass_count(k, n, p)


def run_checks(ctx, samples=100, seed=0, workers=None):
    results = []
    for group in (
        _operator_checks(ctx),
        _sampled_checks(ctx, samples, seed),
        _code_checks(ctx, workers),
    ):
        results.extend((name, bool(ok)) for name, ok in group)
    return results
