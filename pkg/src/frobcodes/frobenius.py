"""The Frobenius involution on F_{p^2k} and the splitting it induces.

Sign convention (kept on purpose, do not "fix"):

    pi_plus  = (1 - tau) / 2    kernel V+, image V-
    pi_minus = (1 + tau) / 2    kernel V-, image V+

where V+ = ker(tau - 1) is the subfield F_{p^k} and V- = ker(tau + 1).
All operator matrices act on column coordinate vectors.
"""

from .errors import InvalidParams, NotInvolution, XiNotInVminus, XiZero
from .ext_field import FieldCtx
from .field_core import fp_inv
from .linalg import Matrix, in_row_space, solve_in_row_space


def frobenius_matrix(field):
    """Matrix of x -> x^p; column j holds the coordinates of e_j^p."""
    return Matrix.from_columns([(e ** field.p).coords for e in field.basis()], field.p)


def involution_matrix(sigma, k):
    return sigma ** k


def projection_pair(tau):
    """Return ``(pi_plus, pi_minus) = ((1 - tau)/2, (1 + tau)/2)``."""
    n = tau.shape[0]
    eye = Matrix.identity(n, tau.p)
    if tau @ tau != eye:
        raise NotInvolution("tau^2 != 1")
    half = fp_inv(2, tau.p)
    return (eye - tau).scale(half), (eye + tau).scale(half)


def eigenspace_bases(tau):
    """Kernel bases of ``tau - 1`` and ``tau + 1`` as coordinate tuples."""
    eye = Matrix.identity(tau.shape[0], tau.p)
    if tau @ tau != eye:
        raise NotInvolution("tau^2 != 1")
    return (tau - eye).kernel_basis(), (tau + eye).kernel_basis()


class DecompositionCtx:
    """Operators sigma, tau, pi_plus, pi_minus, the bases f_i of V+ and of
    V-, the chosen xi in V- and the left-multiplication matrices ``f_i *``.

    ``xi`` may be given to override the default (first kernel vector of
    tau + 1); ``v_plus`` may re-express V+ in a different basis.
    """

    def __init__(self, field, xi=None, v_plus=None):
        if field.n % 2:
            raise InvalidParams(f"extension degree n = {field.n} must be even (n = 2k)")
        self.field = field
        self.p = field.p
        self.n = field.n
        self.k = field.n // 2
        self.sigma = frobenius_matrix(field)
        self.tau = involution_matrix(self.sigma, self.k)
        self.pi_plus, self.pi_minus = projection_pair(self.tau)
        vp, vm = eigenspace_bases(self.tau)
        if v_plus is not None:
            v_plus = [field(v) for v in v_plus]
            span = Matrix([v.coords for v in v_plus], self.p)
            if len(v_plus) != self.k or not _same_rows(span, Matrix(vp, self.p)):
                raise InvalidParams("v_plus override is not a basis of V+")
            self.v_plus_basis = v_plus
        else:
            self.v_plus_basis = [field.from_coords(v) for v in vp]
        self.v_minus_basis = [field.from_coords(v) for v in vm]
        self.xi, self.xi_inv = self._select_xi(xi)
        self.vplus_mul_mats = [field.left_mul_matrix(f) for f in self.v_plus_basis]

    def __repr__(self):
        return f"DecompositionCtx({self.field!r}, xi={self.xi})"

    def _select_xi(self, override):
        field = self.field
        if override is None:
            xi = self.v_minus_basis[0]
        else:
            xi = field(override)
            if xi.is_zero():
                raise XiZero("xi must be nonzero")
            if not self.in_v_minus(xi):
                raise XiNotInVminus(f"xi = {xi} is not in V- = ker(tau + 1)")
        return xi, xi.inverse()

    def in_v_plus(self, u):
        return self.tau @ u.coords == u.coords

    def in_v_minus(self, u):
        return self.tau @ u.coords == (-u).coords

    def v_plus_coordinates(self, u):
        """Coefficients ``a`` with ``u = sum a_i f_i``; ``u`` must lie in V+."""
        c = solve_in_row_space(Matrix([f.coords for f in self.v_plus_basis], self.p), u.coords)
        if c is None:
            raise InvalidParams(f"{u} is not in V+")
        return c

    def split_coordinates(self, u):
        """``u -> (xi^-1 * pi_plus u, pi_minus u)``, both in V+; ``u = xi*a + b``."""
        field = self.field
        u = field(u)
        a = self.xi_inv * field.from_coords(self.pi_plus @ u.coords)
        b = field.from_coords(self.pi_minus @ u.coords)
        return a, b

    def to_dict(self):
        return {
            "p": self.p,
            "k": self.k,
            "n": self.n,
            "f": list(self.field.f),
            "sigma": _rows(self.sigma),
            "tau": _rows(self.tau),
            "pi_plus": _rows(self.pi_plus),
            "pi_minus": _rows(self.pi_minus),
            "v_plus": _rows(Matrix.from_columns([f.coords for f in self.v_plus_basis], self.p)),
            "v_minus": _rows(Matrix.from_columns([f.coords for f in self.v_minus_basis], self.p)),
            "xi": list(self.xi.coords),
            "xi_inv": list(self.xi_inv.coords),
        }

    @classmethod
    def from_dict(cls, d):
        """Rebuild from :meth:`to_dict` output; stored operators must match."""
        field = FieldCtx(d["p"], d["f"])
        v_plus = [tuple(c) for c in zip(*d["v_plus"])]
        ctx = cls(field, xi=d["xi"], v_plus=v_plus)
        if ctx.to_dict() != {key: d[key] for key in ctx.to_dict()}:
            raise InvalidParams("stored operators disagree with the recomputed ones")
        return ctx


def _rows(m):
    return [list(r) for r in m.rows]


def _same_rows(a, b):
    return a.shape == b.shape and a.row_basis() == b.row_basis()


def xi_squared_in_v_plus(ctx):
    return ctx.in_v_plus(ctx.xi * ctx.xi)


def v_plus_closed(ctx):
    """V+ is closed under multiplication (it is the subfield F_{p^k})."""
    span = Matrix([f.coords for f in ctx.v_plus_basis], ctx.p)
    return all(
        in_row_space(span, (a * b).coords) for a in ctx.v_plus_basis for b in ctx.v_plus_basis
    )
