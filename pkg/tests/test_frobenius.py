import random

import pytest

from frobcodes.errors import InvalidParams, NotInvolution, XiNotInVminus, XiZero
from frobcodes.ext_field import FieldCtx
from frobcodes.field_core import find_irreducible
from frobcodes.frobenius import (
    DecompositionCtx,
    eigenspace_bases,
    frobenius_matrix,
    involution_matrix,
    projection_pair,
    v_plus_closed,
    xi_squared_in_v_plus,
)
from frobcodes.linalg import Matrix, in_row_space, row_space_equal

PARAMS = [(3, 1), (3, 2), (5, 2), (7, 2), (7, 3), (5, 3)]


@pytest.fixture(scope="module", params=PARAMS, ids=lambda pk: f"p{pk[0]}k{pk[1]}")
def ctx(request):
    p, k = request.param
    return DecompositionCtx(FieldCtx(p, find_irreducible(p, 2 * k, seed=0)))


def test_sigma_example(field7, example, mat7):
    sigma = frobenius_matrix(field7)
    assert sigma == mat7(example["sigma"])
    assert sigma.columns()[-1] == (0, 0, 0, 0, 0, 1)


def test_sigma_small_oracle():
    # X^3 = -X mod X^2 + 1 over F_3; 1^3 = 1
    assert frobenius_matrix(FieldCtx(3, (1, 0, 1))) == Matrix([[2, 0], [0, 1]], 3)


def test_tau_example(field7, example, mat7):
    sigma = frobenius_matrix(field7)
    tau = involution_matrix(sigma, 3)
    assert tau == mat7(example["tau"])
    assert tau @ tau == Matrix.identity(6, 7)
    assert involution_matrix(sigma, 6) == Matrix.identity(6, 7)


def test_projections_example(example, mat7):
    pp, pm = projection_pair(mat7(example["tau"]))
    assert pp == mat7(example["pi_plus"])
    assert pm == mat7(example["pi_minus"])


def test_projections_trivial():
    eye = Matrix.identity(4, 5)
    zero = Matrix.zeros(4, 4, 5)
    assert projection_pair(eye) == (zero, eye)
    assert projection_pair(-eye) == (eye, zero)
    with pytest.raises(NotInvolution):
        projection_pair(Matrix([[1, 1], [0, 1]], 5))


def test_eigenspaces_example(example, mat7):
    vp, vm = eigenspace_bases(mat7(example["tau"]))
    assert row_space_equal(Matrix(vp, 7), mat7(example["v_plus"]).T)
    assert row_space_equal(Matrix(vm, 7), mat7(example["v_minus"]).T)
    # the canonical kernel bases happen to be the printed ones column for column
    assert Matrix.from_columns(vp, 7) == mat7(example["v_plus"])
    assert Matrix.from_columns(vm, 7) == mat7(example["v_minus"])
    assert Matrix(vp + vm, 7).rank() == 6


def test_eigenspaces_identity():
    vp, vm = eigenspace_bases(Matrix.identity(2, 3))
    assert len(vp) == 2 and vm == []


def test_example_xi(ctx7, example, field7):
    assert ctx7.xi.coords == tuple(example["xi"])
    assert ctx7.xi_inv.coords == tuple(example["xi_inv"])
    assert xi_squared_in_v_plus(ctx7)
    assert not ctx7.in_v_plus(ctx7.xi)


def test_default_xi_is_first_kernel_vector(field7):
    ctx = DecompositionCtx(field7)
    assert ctx.xi == ctx.v_minus_basis[0]
    # with this field the canonical choice is the printed xi^-1
    assert str(ctx.xi) == "3*X^5+6*X^3+X^2"


def test_xi_override_errors(field7):
    with pytest.raises(XiZero):
        DecompositionCtx(field7, xi=[0] * 6)
    with pytest.raises(XiNotInVminus):
        DecompositionCtx(field7, xi="X")


def test_odd_degree_rejected():
    with pytest.raises(InvalidParams):
        DecompositionCtx(FieldCtx(7, find_irreducible(7, 3)))


def test_v_plus_override(field7, ctx7):
    f1, f2, f3 = ctx7.v_plus_basis
    ctx = DecompositionCtx(field7, xi=ctx7.xi, v_plus=[f3, f1 + f2, f2])
    assert ctx.v_plus_basis[0] == f3
    with pytest.raises(InvalidParams):
        DecompositionCtx(field7, v_plus=[f1, f2, ctx7.xi])


def test_operator_identities(ctx):
    n, p = ctx.n, ctx.p
    eye, zero = Matrix.identity(n, p), Matrix.zeros(n, n, p)
    assert ctx.sigma**n == eye
    assert ctx.tau @ ctx.tau == eye
    assert ctx.pi_plus + ctx.pi_minus == eye
    assert ctx.pi_plus @ ctx.pi_plus == ctx.pi_plus
    assert ctx.pi_minus @ ctx.pi_minus == ctx.pi_minus
    assert ctx.pi_plus @ ctx.pi_minus == zero == ctx.pi_minus @ ctx.pi_plus


def test_sigma_is_ring_homomorphism(ctx):
    F = ctx.field
    rng = random.Random(5)
    for _ in range(500 if ctx.n <= 6 else 100):
        a, b = F.random_element(rng), F.random_element(rng)
        lhs = ctx.sigma @ (a * b).coords
        rhs = F.from_coords(ctx.sigma @ a.coords) * F.from_coords(ctx.sigma @ b.coords)
        assert lhs == rhs.coords
        assert ctx.sigma @ a.coords == (a**ctx.p).coords


def test_eigenspace_structure(ctx):
    p, k = ctx.p, ctx.k
    vp = Matrix([f.coords for f in ctx.v_plus_basis], p)
    vm = Matrix([f.coords for f in ctx.v_minus_basis], p)
    assert vp.rank() == vm.rank() == k
    assert vp.vstack(vm).rank() == ctx.n
    # ker pi+ = V+ = im pi-, ker pi- = V- = im pi+
    assert all(not any(ctx.pi_plus @ f.coords) for f in ctx.v_plus_basis)
    assert all(not any(ctx.pi_minus @ f.coords) for f in ctx.v_minus_basis)
    assert row_space_equal(ctx.pi_minus.T, vp)
    assert row_space_equal(ctx.pi_plus.T, vm)
    assert v_plus_closed(ctx)


def test_xi_isomorphism(ctx):
    assert ctx.in_v_minus(ctx.xi) and not ctx.xi.is_zero()
    assert (ctx.xi * ctx.xi_inv).is_one()
    assert xi_squared_in_v_plus(ctx)
    images = [ctx.xi * f for f in ctx.v_plus_basis]
    assert all(ctx.in_v_minus(u) for u in images)
    assert Matrix([u.coords for u in images], ctx.p).rank() == ctx.k
    back = [ctx.xi_inv * u for u in ctx.v_minus_basis]
    assert all(ctx.in_v_plus(u) for u in back)


def test_v_plus_is_subfield_of_order_pk(ctx):
    # every element of V+ satisfies x^(p^k) = x
    span = Matrix([f.coords for f in ctx.v_plus_basis], ctx.p)
    rng = random.Random(9)
    for _ in range(20):
        x = ctx.field.zero()
        for f in ctx.v_plus_basis:
            x = x + f * rng.randrange(ctx.p)
        assert x ** (ctx.p**ctx.k) == x
        assert in_row_space(span, x.coords)


def test_split_coordinates(ctx):
    F = ctx.field
    f = ctx.v_plus_basis[0]
    assert ctx.split_coordinates(f) == (F.zero(), f)
    assert ctx.split_coordinates(ctx.xi) == (F.one(), F.zero())
    rng = random.Random(3)
    for _ in range(500):
        u = F.random_element(rng)
        a, b = ctx.split_coordinates(u)
        assert ctx.in_v_plus(a) and ctx.in_v_plus(b)
        assert ctx.xi * a + b == u


def test_v_plus_coordinates(ctx7):
    f1, f2, f3 = ctx7.v_plus_basis
    assert ctx7.v_plus_coordinates(f1 * 2 + f3 * 5) == (2, 0, 5)
    with pytest.raises(InvalidParams):
        ctx7.v_plus_coordinates(ctx7.xi)


def test_dict_roundtrip(ctx7):
    d = ctx7.to_dict()
    again = DecompositionCtx.from_dict(d)
    assert again.to_dict() == d
    d_bad = dict(d, tau=[[0] * 6] * 6)
    with pytest.raises(InvalidParams):
        DecompositionCtx.from_dict(d_bad)
