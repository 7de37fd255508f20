"""Exact tensor calculus on polynomial-metric coordinate patches and on
algebraic products of constant-curvature blocks.

Sign conventions (calibrated once, see docs/conventions.md):
  * Riemann  R(X,Y)Z = [nabla_X, nabla_Y]Z - nabla_[X,Y] Z,
    R(X,Y,Z,W) = g(R(X,Y)Z, W); the round unit sphere has
    R(X,Y,Y,X) = +1 for orthonormal X,Y and Riem = 1/2 g . g.
  * Ricci  Ric(Y,Z) = g^{ab} R(e_a, Y, Z, e_b), positive on spheres.
  * Metric connections with skew torsion:  D_X Y = nabla_X Y + 1/2 T(X,Y)
    with H(X,Y,Z) = g(T(X,Y),Z); their curvature violates the first
    Bianchi identity, which BiSymTensor's symmetries permit.
"""

from itertools import combinations

from .exactnum import Scalar, Polynomial
from .multilinear import QuadraticSpace, KForm, BiSymTensor
from .liealg import MetricLieAlgebra
from . import linalg

__all__ = ["CoordinatePatch", "cw_patch", "christoffel", "riemann", "ricci",
           "exterior_derivative", "covariant_derivative_form",
           "curvature_with_torsion", "flat_torsion_consequences",
           "lightcone_coframe", "spin_connection", "killing_check",
           "ConstCurvBlock", "ProductGeometry"]

_Z = Scalar(0)


def _pz(vars=()):
    return Polynomial(vars, {})


class CoordinatePatch:
    """Chart with polynomial metric components and an exact polynomial
    inverse (verified on construction)."""

    def __init__(self, coords, metric, inverse, orientation=1):
        self.coords = tuple(coords)
        self.dim = len(coords)
        self.metric = metric
        self.metric_inv = inverse
        prod = linalg.mat_mul(metric, inverse)
        for i in range(self.dim):
            for j in range(self.dim):
                e = prod[i][j] - Scalar(1 if i == j else 0)
                if not e.is_zero():
                    raise ValueError("metric inverse is not exact")
        self.space = QuadraticSpace(metric, orientation, names=self.coords,
                                    inverse=inverse)
        self._christoffel = None

    def metric_at_origin(self):
        vals = {v: Scalar(0) for v in self.coords}
        out = []
        for row in self.metric:
            out.append([_eval_const(x, vals) for x in row])
        return out

    def __repr__(self):
        return f"CoordinatePatch({', '.join(self.coords)})"


def _eval_const(p, vals):
    if isinstance(p, Scalar):
        return p
    return p.subs(vals).constant_value()


def _poly(x, vars):
    if isinstance(x, Polynomial):
        return x
    return Polynomial.constant(x, vars)


def cw_patch(data, names=None, orientation=1):
    """Plane-wave chart: g = 2 dx+ dx- + (sum A_ij x^i x^j)(dx-)^2 + dx.dx
    with coordinates (x+, x-, x1..x_{n-2})."""
    m = data.n - 2
    coords = tuple(names) if names else \
        ("xp", "xm") + tuple(f"x{i+1}" for i in range(m))
    xs = [Polynomial.variable(c) for c in coords]
    h = _pz()
    for i in range(m):
        for j in range(m):
            if not data.A[i][j].is_zero():
                h = h + data.A[i][j] * xs[2 + i] * xs[2 + j]
    n = data.n
    g = [[_pz() for _ in range(n)] for _ in range(n)]
    ginv = [[_pz() for _ in range(n)] for _ in range(n)]
    one = Polynomial.constant(1)
    g[0][1] = g[1][0] = one
    g[1][1] = h
    ginv[0][1] = ginv[1][0] = one
    ginv[0][0] = -h
    for i in range(m):
        g[2 + i][2 + i] = one
        ginv[2 + i][2 + i] = one
    return CoordinatePatch(coords, g, ginv, orientation)


def flat_patch(dim, lorentzian=True, names=None):
    """Minkowski/euclidean chart, mostly-plus."""
    coords = tuple(names) if names else tuple(f"x{i}" for i in range(dim))
    g = [[_pz() for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        g[i][i] = Polynomial.constant(-1 if (lorentzian and i == 0) else 1)
    return CoordinatePatch(coords, g, [row[:] for row in g])


def christoffel(p):
    """Levi-Civita symbols as a sparse dict {(k,i,j): Polynomial} (i <= j)."""
    if p._christoffel is not None:
        return p._christoffel
    n = p.dim
    g, ginv = p.metric, p.metric_inv
    d = [[[None] * n for _ in range(n)] for _ in range(n)]

    def dg(m, i, j):
        if d[m][i][j] is None:
            e = g[i][j]
            d[m][i][j] = e.partial(p.coords[m]) if isinstance(e, Polynomial) \
                and p.coords[m] in e.vars else _pz()
        return d[m][i][j]

    out = {}
    half = Scalar.from_rational(1, 2)
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                total = None
                for l in range(n):
                    if ginv[k][l].is_zero():
                        continue
                    s = dg(i, j, l) + dg(j, i, l) - dg(l, i, j)
                    if s.is_zero():
                        continue
                    term = ginv[k][l] * s
                    total = term if total is None else total + term
                if total is not None and not total.is_zero():
                    out[(k, i, j)] = total * half
    p._christoffel = out
    return out


def _gamma(ch, k, i, j):
    if i <= j:
        return ch.get((k, i, j))
    return ch.get((k, j, i))


def riemann(p):
    """Riemann tensor of the Levi-Civita connection as a BiSymTensor with
    polynomial components."""
    ch = christoffel(p)
    n = p.dim
    g = p.metric

    def upper(kk, rho, mu, nu):
        # R^kk_{rho mu nu} = d_mu G^kk_{nu rho} - d_nu G^kk_{mu rho}
        #                    + G^kk_{mu l} G^l_{nu rho} - G^kk_{nu l} G^l_{mu rho}
        total = None
        a = _gamma(ch, kk, nu, rho)
        if a is not None:
            t = a.partial(p.coords[mu]) if p.coords[mu] in a.vars else None
            if t is not None and not t.is_zero():
                total = t
        b = _gamma(ch, kk, mu, rho)
        if b is not None:
            t = b.partial(p.coords[nu]) if p.coords[nu] in b.vars else None
            if t is not None and not t.is_zero():
                total = -t if total is None else total - t
        for l in range(n):
            x = _gamma(ch, kk, mu, l)
            y = _gamma(ch, l, nu, rho)
            if x is not None and y is not None:
                t = x * y
                total = t if total is None else total + t
            x = _gamma(ch, kk, nu, l)
            y = _gamma(ch, l, mu, rho)
            if x is not None and y is not None:
                t = x * y
                total = -t if total is None else total - t
        return total

    def component(mu, nu, rho, sigma):
        total = None
        for kk in range(n):
            if g[kk][sigma].is_zero():
                continue
            u = upper(kk, rho, mu, nu)
            if u is None or u.is_zero():
                continue
            t = u * g[kk][sigma]
            total = t if total is None else total + t
        return _pz() if total is None else total

    return BiSymTensor.from_function(p.space, component)


def ricci(p):
    return riemann(p).ricci()


def exterior_derivative(F, p):
    """Coordinate exterior derivative of a KForm with polynomial components."""
    n = p.dim
    comps = {}
    for idx, c in F.components.items():
        if not isinstance(c, Polynomial):
            continue
        for mu in range(n):
            if p.coords[mu] not in c.vars:
                continue
            dc = c.partial(p.coords[mu])
            if dc.is_zero():
                continue
            if mu in idx:
                continue
            pos = sum(1 for i in idx if i < mu)
            new = tuple(sorted(idx + (mu,)))
            term = dc if pos % 2 == 0 else -dc
            if new in comps:
                term = comps[new] + term
            if term.is_zero():
                comps.pop(new, None)
            else:
                comps[new] = term
    return KForm(p.space, F.degree + 1, comps)


def covariant_derivative_form(F, p):
    """nabla_mu F_{i1..ik} as a dict {mu: KForm} (each a k-form)."""
    ch = christoffel(p)
    n = p.dim
    out = {}
    for mu in range(n):
        comps = {}
        for idx, c in F.components.items():
            if isinstance(c, Polynomial) and p.coords[mu] in c.vars:
                dc = c.partial(p.coords[mu])
                if not dc.is_zero():
                    _acc_form(comps, idx, dc)
            # (nabla_mu F)_J -= Gamma^{i}_{mu j} F_{J|pos: j -> i}: the stored
            # component at idx feeds outputs with slot pos replaced by j
            for pos, i in enumerate(idx):
                for j in range(n):
                    gma = _gamma(ch, i, mu, j)
                    if gma is None:
                        continue
                    new = idx[:pos] + (j,) + idx[pos + 1:]
                    sign, srt = _sort_idx(new)
                    if sign == 0:
                        continue
                    term = c * gma
                    if sign < 0:
                        term = -term
                    _acc_form(comps, srt, -term)
        out[mu] = KForm(p.space, F.degree, comps)
    return out


def _acc_form(comps, idx, val):
    if idx in comps:
        val = comps[idx] + val
    if val.is_zero():
        comps.pop(idx, None)
    else:
        comps[idx] = val


def _sort_idx(idx):
    lst = list(idx)
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(lst, lst[1:]):
        if a == b:
            return 0, None
    return sign, tuple(lst)


# ---------------------------------------------------------------------------
# connections with torsion
# ---------------------------------------------------------------------------

class _PatchData:
    """Uniform access to patch / Lie-algebra connection data."""

    def __init__(self, obj):
        if isinstance(obj, CoordinatePatch):
            self.kind = "patch"
            self.p = obj
            self.n = obj.dim
            self.space = obj.space
            self.g = obj.metric
            self.ginv = obj.metric_inv
            ch = christoffel(obj)
            self.gamma = lambda k, i, j: _gamma(ch, k, i, j)
            self.cbrk = None
            self.coords = obj.coords
        elif isinstance(obj, MetricLieAlgebra):
            self.kind = "algebra"
            self.alg = obj
            self.n = obj.dim
            self.space = obj.space()
            self.g = obj.metric
            self.ginv = self.space.metric_inv
            gam = _koszul(obj)
            self.gamma = lambda k, i, j: (gam[i][j][k]
                                          if not gam[i][j][k].is_zero() else None)
            self.cbrk = obj.c
            self.coords = None
        else:
            raise TypeError("expected CoordinatePatch or MetricLieAlgebra")

    def partial(self, poly, mu):
        if self.kind != "patch" or not isinstance(poly, Polynomial):
            return None
        if self.coords[mu] not in poly.vars:
            return None
        d = poly.partial(self.coords[mu])
        return None if d.is_zero() else d


def _koszul(alg):
    """Levi-Civita coefficients of a left-invariant metric in the invariant
    frame: 2 B(nabla_i j, k) = B([i,j],k) - B([j,k],i) + B([k,i],j)."""
    n = alg.dim
    half = Scalar.from_rational(1, 2)
    lower = [[[None] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = alg.inner(alg.basis_bracket(i, j), alg.basis_vector(k)) \
                    - alg.inner(alg.basis_bracket(j, k), alg.basis_vector(i)) \
                    + alg.inner(alg.basis_bracket(k, i), alg.basis_vector(j))
                lower[i][j][k] = v * half
    out = [[[_Z] * n for _ in range(n)] for _ in range(n)]
    ginv = alg.space().metric_inv
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = _Z
                for l in range(n):
                    if not (ginv[k][l].is_zero() or lower[i][j][l].is_zero()):
                        s = s + ginv[k][l] * lower[i][j][l]
                out[i][j][k] = s
    return out


def _torsion_from_h(pd, H):
    """T^k_{ij} = H_{ijl} g^{lk} as a dense 3-array."""
    n = pd.n
    T = [[[None] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                total = None
                for l in range(n):
                    if pd.ginv[l][k].is_zero():
                        continue
                    h = _form_component(H, (i, j, l))
                    if h is None:
                        continue
                    t = h * pd.ginv[l][k]
                    total = t if total is None else total + t
                T[i][j][k] = total
    return T


def _form_component(F, idx):
    sign, srt = _sort_idx(idx)
    if sign == 0:
        return None
    c = F.components.get(srt)
    if c is None:
        return None
    return c if sign > 0 else -c


def _is_closed(pd, H):
    if pd.kind == "patch":
        return exterior_derivative(H, pd.p).is_zero()
    from .liealg import ce_differential
    return ce_differential(H, pd.alg).is_zero()


def curvature_with_torsion(obj, H):
    """Curvature of D = nabla + T/2 (H must be closed; checked):

    R^D(X,Y,Z,W) = R + 1/2 g((nabla_X T)(Y,Z),W) - 1/2 g((nabla_Y T)(X,Z),W)
                   - 1/4 g(T(X,W),T(Y,Z)) + 1/4 g(T(Y,W),T(X,Z)).

    On a metric Lie algebra with its canonical 3-form this vanishes
    identically (the parallelising connection)."""
    pd = _PatchData(obj)
    if not _is_closed(pd, H):
        raise ValueError("torsion 3-form is not closed")
    n = pd.n
    T = _torsion_from_h(pd, H)
    base = riemann(obj) if pd.kind == "patch" else _frame_riemann(pd)
    nT = _nabla_torsion(pd, T)
    half = Scalar.from_rational(1, 2)
    quarter = Scalar.from_rational(1, 4)

    def t_low(i, j, k):
        # g(T(e_i, e_j), e_k)
        total = None
        for l in range(n):
            v = T[i][j][l]
            if v is None or pd.g[l][k].is_zero():
                continue
            t = v * pd.g[l][k]
            total = t if total is None else total + t
        return total

    def nt_low(mu, i, j, k):
        total = None
        for l in range(n):
            v = nT[mu][i][j][l]
            if v is None or pd.g[l][k].is_zero():
                continue
            t = v * pd.g[l][k]
            total = t if total is None else total + t
        return total

    def tt(i, j, k, l):
        # g(T(e_i,e_j), T(e_k,e_l))
        total = None
        for a in range(n):
            va = T[i][j][a]
            if va is None:
                continue
            for b in range(n):
                vb = T[k][l][b]
                if vb is None or pd.g[a][b].is_zero():
                    continue
                t = va * vb * pd.g[a][b]
                total = t if total is None else total + t
        return total

    def component(x, y, z, w):
        total = base.get(x, y, z, w)
        u = nt_low(x, y, z, w)
        if u is not None:
            total = total + half * u
        u = nt_low(y, x, z, w)
        if u is not None:
            total = total - half * u
        u = tt(x, w, y, z)
        if u is not None:
            total = total - quarter * u
        u = tt(y, w, x, z)
        if u is not None:
            total = total + quarter * u
        return total

    return BiSymTensor.from_function(pd.space, component)


def _nabla_torsion(pd, T):
    """(nabla_mu T)^k_{ij}; includes coordinate derivatives on patches."""
    n = pd.n
    out = [[[[None] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for mu in range(n):
        for i in range(n):
            for j in range(i + 1, n):       # T skew in (i,j)
                for k in range(n):
                    total = None
                    v = T[i][j][k]
                    d = pd.partial(v, mu) if v is not None else None
                    if d is not None:
                        total = d
                    for lam in range(n):
                        gkl = pd.gamma(k, mu, lam)
                        if gkl is not None and T[i][j][lam] is not None:
                            t = gkl * T[i][j][lam]
                            total = t if total is None else total + t
                        gli = pd.gamma(lam, mu, i)
                        if gli is not None and T[lam][j][k] is not None:
                            t = gli * T[lam][j][k]
                            total = -t if total is None else total - t
                        glj = pd.gamma(lam, mu, j)
                        if glj is not None and T[i][lam][k] is not None:
                            t = glj * T[i][lam][k]
                            total = -t if total is None else total - t
                    out[mu][i][j][k] = total
                    out[mu][j][i][k] = None if total is None else -total
    return out


def _frame_riemann(pd):
    """Riemann of the invariant metric in the frame:
    R(a,b)c = nabla_a nabla_b c - nabla_b nabla_a c - nabla_{[a,b]} c."""
    n = pd.n

    def component(a, b, c, w):
        total = _Z
        for kap in range(n):
            if pd.g[kap][w].is_zero():
                continue
            s = _Z
            for lam in range(n):
                x1 = pd.gamma(lam, b, c)
                x2 = pd.gamma(kap, a, lam)
                if x1 is not None and x2 is not None:
                    s = s + x2 * x1
                x1 = pd.gamma(lam, a, c)
                x2 = pd.gamma(kap, b, lam)
                if x1 is not None and x2 is not None:
                    s = s - x2 * x1
                br = pd.cbrk[a][b][lam]
                if not br.is_zero():
                    x2 = pd.gamma(kap, lam, c)
                    if x2 is not None:
                        s = s - br * x2
            total = total + s * pd.g[kap][w]
        return total

    return BiSymTensor.from_function(pd.space, component)


def flat_torsion_consequences(obj, H):
    """Given R^D = 0 (re-verified), independently check that the torsion is
    parallel (nabla H = 0) and satisfies the cyclic Jacobi identity.
    Returns a dict report; a nonzero R^D is a precondition violation."""
    pd = _PatchData(obj)
    report = {"precondition_RD_zero": None, "nabla_H_zero": None,
              "jacobi_cyclic": None}
    rd = curvature_with_torsion(obj, H)
    if not rd.is_zero():
        report["precondition_RD_zero"] = False
        report["witness"] = rd.first_nonzero()
        return report
    report["precondition_RD_zero"] = True
    n = pd.n
    # nabla H = 0
    if pd.kind == "patch":
        nH = covariant_derivative_form(H, pd.p)
        report["nabla_H_zero"] = all(f.is_zero() for f in nH.values())
    else:
        ok = True
        T = _torsion_from_h(pd, H)
        nT = _nabla_torsion(pd, T)
        for mu in range(n):
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        v = nT[mu][i][j][k]
                        if v is not None and not v.is_zero():
                            ok = False
        report["nabla_H_zero"] = ok
    # cyclic identity sum T(X, T(Y,Z)) = 0
    T = _torsion_from_h(pd, H)
    ok = True
    for i, j, k in combinations(range(n), 3):
        for m in range(n):
            total = None
            for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                for l in range(n):
                    x = T[b][c][l]
                    if x is None:
                        continue
                    y = T[a][l][m]
                    if y is None:
                        continue
                    t = x * y
                    total = t if total is None else total + t
            if total is not None and not total.is_zero():
                ok = False
    report["jacobi_cyclic"] = ok
    return report


# ---------------------------------------------------------------------------
# frames and the spin connection
# ---------------------------------------------------------------------------

def lightcone_coframe(p):
    """For a plane-wave patch: e+ = dx+ + h/2 dx-, e- = dx-, e^i = dx^i.
    Returns (coframe, frame, gram): coframe[a][mu] with e^a = coframe[a][mu]
    dx^mu, frame[a][mu] with E_a = frame[a][mu] d_mu, and the constant
    lightcone Gram matrix as a QuadraticSpace-ready list."""
    n = p.dim
    h = p.metric[1][1]
    half = Scalar.from_rational(1, 2)
    cof = [[_pz() for _ in range(n)] for _ in range(n)]
    frm = [[_pz() for _ in range(n)] for _ in range(n)]
    one = Polynomial.constant(1)
    cof[0][0] = one
    cof[0][1] = h * half
    cof[1][1] = one
    frm[0][0] = one
    frm[1][1] = one
    frm[1][0] = -(h * half)
    for i in range(2, n):
        cof[i][i] = one
        frm[i][i] = one
    gram = linalg.zeros(n, n)
    gram[0][1] = gram[1][0] = Scalar(1)
    for i in range(2, n):
        gram[i][i] = Scalar(1)
    # exactness: coframe . frame^T = id and e^a_mu G^{ab} ... metric check
    _check_frame(p, cof, frm, gram)
    return cof, frm, gram


def _check_frame(p, cof, frm, gram):
    # duality e^a(E_b) = delta^a_b and exact orthonormalization of g
    n = p.dim
    for a in range(n):
        for b in range(n):
            s = None
            for mu in range(n):
                t = cof[a][mu] * frm[b][mu]
                s = t if s is None else s + t
            want = Scalar(1 if a == b else 0)
            if not (s - want).is_zero():
                raise ValueError("coframe/frame are not dual")
    # g_{mu nu} = sum_{a,b} G_{ab} e^a_mu e^b_nu
    for mu in range(n):
        for nu in range(n):
            s = None
            for a in range(n):
                for b in range(n):
                    if gram[a][b].is_zero():
                        continue
                    t = cof[a][mu] * cof[b][nu] * gram[a][b]
                    s = t if s is None else s + t
            e = (s if s is not None else _pz()) - p.metric[mu][nu]
            if not e.is_zero():
                raise ValueError("coframe does not orthonormalize the metric")


def spin_connection(p, cof, frm, gram):
    """Connection coefficients omega_{mu,ab} (lowered, skew in ab) of the
    Levi-Civita connection in the given frame:
    omega_mu^a_b = e^a_nu (d_mu E_b^nu + Gamma^nu_{mu lam} E_b^lam)."""
    ch = christoffel(p)
    n = p.dim
    omega = [dict() for _ in range(n)]
    for mu in range(n):
        for b in range(n):
            # v^nu = d_mu E_b^nu + Gamma^nu_{mu lam} E_b^lam
            v = []
            for nu in range(n):
                e = frm[b][nu]
                total = None
                if isinstance(e, Polynomial) and p.coords[mu] in e.vars:
                    d = e.partial(p.coords[mu])
                    if not d.is_zero():
                        total = d
                for lam in range(n):
                    gma = _gamma(ch, nu, mu, lam)
                    if gma is None or frm[b][lam].is_zero():
                        continue
                    t = gma * frm[b][lam]
                    total = t if total is None else total + t
                v.append(total)
            for a in range(n):
                total = None
                for nu in range(n):
                    if v[nu] is None or cof[a][nu].is_zero():
                        continue
                    t = cof[a][nu] * v[nu]
                    total = t if total is None else total + t
                if total is not None and not total.is_zero():
                    omega[mu][(a, b)] = total
    # lower the first index with the Gram matrix and verify skewness
    lowered = [dict() for _ in range(n)]
    for mu in range(n):
        for a in range(n):
            for b in range(n):
                total = None
                for c in range(n):
                    if gram[a][c].is_zero():
                        continue
                    u = omega[mu].get((c, b))
                    if u is None:
                        continue
                    t = gram[a][c] * u
                    total = t if total is None else total + t
                if total is not None and not total.is_zero():
                    lowered[mu][(a, b)] = total
    for mu in range(n):
        for (a, b), v in lowered[mu].items():
            w = lowered[mu].get((b, a))
            e = v + w if w is not None else v
            if not e.is_zero():
                raise ValueError("spin connection not metric-skew")
    return lowered


def killing_check(p, V):
    """Exact Killing equation nabla_(mu V_nu) = 0 for a vector field with
    polynomial components V^mu."""
    ch = christoffel(p)
    n = p.dim
    # V_mu = g_{mu nu} V^nu
    Vlow = []
    for mu in range(n):
        s = None
        for nu in range(n):
            if p.metric[mu][nu].is_zero():
                continue
            t = p.metric[mu][nu] * V[nu]
            s = t if s is None else s + t
        Vlow.append(s if s is not None else _pz())

    def nabla(mu, nu):
        e = Vlow[nu]
        total = None
        if isinstance(e, Polynomial) and p.coords[mu] in e.vars:
            d = e.partial(p.coords[mu])
            if not d.is_zero():
                total = d
        for lam in range(n):
            gma = _gamma(ch, lam, mu, nu)
            if gma is None or Vlow[lam].is_zero():
                continue
            t = gma * Vlow[lam]
            total = -t if total is None else total - t
        return total

    for mu in range(n):
        for nu in range(mu, n):
            a = nabla(mu, nu)
            b = nabla(nu, mu)
            s = None
            if a is not None:
                s = a
            if b is not None:
                s = b if s is None else s + b
            if s is not None and not s.is_zero():
                return False, (mu, nu)
    return True, None


# ---------------------------------------------------------------------------
# products of constant-curvature blocks
# ---------------------------------------------------------------------------

class ConstCurvBlock:
    """Constant-curvature factor described by its scalar curvature."""

    def __init__(self, dim, scalar_curvature, lorentzian=False, label=""):
        self.dim = dim
        self.S = scalar_curvature if isinstance(scalar_curvature, Scalar) \
            else Scalar(scalar_curvature)
        self.lorentzian = lorentzian
        self.label = label or ("AdS%d" % dim if lorentzian else "S%d" % dim)

    def sectional(self):
        return self.S * Scalar.from_rational(1, self.dim * (self.dim - 1))

    def ricci_factor(self):
        return self.S * Scalar.from_rational(1, self.dim)

    def __repr__(self):
        return f"{self.label}({self.S})"


class ProductGeometry:
    """Ordered product of constant-curvature blocks with the concatenated
    orthonormal frame (exactly one lorentzian block, timelike leg first)."""

    def __init__(self, blocks, orientation=1):
        assert sum(1 for b in blocks if b.lorentzian) == 1
        self.blocks = blocks
        self.dim = sum(b.dim for b in blocks)
        g = linalg.eye(self.dim)
        names = []
        ranges = []
        ofs = 0
        for b in blocks:
            ranges.append(range(ofs, ofs + b.dim))
            for i in range(b.dim):
                names.append(f"{b.label}:{i}")
            if b.lorentzian:
                g[ofs][ofs] = Scalar(-1)
            ofs += b.dim
        self.ranges = ranges
        self.space = QuadraticSpace(g, orientation, names)

    def block_of(self, index):
        for bi, r in enumerate(self.ranges):
            if index in r:
                return bi
        raise IndexError(index)

    def volume_form(self, block_index, coeff=None):
        """coeff * dvol(block) as a KForm on the product frame."""
        c = Scalar(1) if coeff is None else coeff
        idx = tuple(self.ranges[block_index])
        return KForm(self.space, len(idx), {idx: c})

    def riemann(self):
        """Block-diagonal Riemann: Riem_b = (K_b/2) (g . g) per block."""
        def component(i, j, k, l):
            bi = self.block_of(i)
            if any(self.block_of(x) != bi for x in (j, k, l)):
                return _Z
            K = self.blocks[bi].sectional()
            g = self.space.metric
            return K * (g[i][l] * g[j][k] - g[i][k] * g[j][l])
        return BiSymTensor.from_function(self.space, component)

    def ricci(self):
        n = self.dim
        out = linalg.zeros(n, n)
        for bi, r in enumerate(self.ranges):
            f = self.blocks[bi].ricci_factor()
            for i in r:
                out[i][i] = f * self.space.metric[i][i]
        return out
