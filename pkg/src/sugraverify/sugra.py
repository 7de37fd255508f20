"""Field-equation and supersymmetry verifiers.

Covers d=11, the constant axi-dilaton sector of IIB, d=6 (1,0), and the
type-II common sector.  Every check is exact; each verifier emits a
VerificationReport listing all conditions it owes (passes, failures with
witnesses, and structural facts that hold by construction on symmetric
products, which are reported as such rather than silently skipped).
"""

from dataclasses import dataclass, field
import json

from .exactnum import Scalar, Polynomial
from .multilinear import (KForm, wedge, interior, hodge, form_inner,
                          kulkarni_nomizu, plucker_check, lambda_action)
from .clifford import (ComplexScalar, build_gamma, FrameAlgebra,
                       clifford_action, omega_xf, kernel_dim, chiral_basis,
                       spinor_to_vector)
from .liealg import canonical_three_form, ce_differential, \
    biinvariant_ricci
from .geometry import (cw_patch, riemann, ricci, exterior_derivative,
                       covariant_derivative_form, curvature_with_torsion,
                       lightcone_coframe, spin_connection, killing_check)

__all__ = ["BackgroundSpec", "VerificationReport", "verify_d11",
           "verify_d11_maxsusy", "supercovariant_flatness",
           "verify_iib_maxsusy", "verify_d6", "verify_typeII_common",
           "dilatino_kernel", "OUT_OF_SCOPE"]

_Z = Scalar(0)

OUT_OF_SCOPE = [
    "enhanced plane-wave supersymmetry counts (18-28 of the summary table): "
    "require x^- dependent spinors, not computed",
    "quadric embeddings of the symmetric spaces: existence cited, no "
    "verification operation",
    "full IIB SU(1,1) bundle sector (varying axi-dilaton, B and G fluxes): "
    "only the constant axi-dilaton, F-only sector is verified",
]


@dataclass
class Condition:
    name: str
    passed: bool
    witness: str = ""
    note: str = ""


@dataclass
class VerificationReport:
    background: str
    theory: str
    conditions: list = field(default_factory=list)
    invariants: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    out_of_scope: list = field(default_factory=lambda: list(OUT_OF_SCOPE))

    def add(self, name, passed, witness="", note=""):
        self.conditions.append(Condition(name, bool(passed), witness, note))

    @property
    def passed(self):
        return all(c.passed for c in self.conditions)

    def to_json(self):
        return json.dumps({
            "background": self.background,
            "theory": self.theory,
            "conditions": [{"name": c.name, "passed": c.passed,
                            "witness": c.witness, "note": c.note}
                           for c in self.conditions],
            "invariants": self.invariants,
            "notes": self.notes,
            "out_of_scope": self.out_of_scope,
            "passed": self.passed,
        }, indent=2, sort_keys=True)

    @staticmethod
    def from_json(text):
        d = json.loads(text)
        rep = VerificationReport(d["background"], d["theory"])
        for c in d["conditions"]:
            rep.add(c["name"], c["passed"], c["witness"], c["note"])
        rep.invariants = d["invariants"]
        rep.notes = d["notes"]
        rep.out_of_scope = d["out_of_scope"]
        return rep

    def to_text(self):
        lines = [f"background: {self.background}   theory: {self.theory}"]
        for c in self.conditions:
            status = "PASS" if c.passed else "FAIL"
            extra = f"  [{c.witness}]" if c.witness else ""
            note = f"  ({c.note})" if c.note else ""
            lines.append(f"  {status}  {c.name}{extra}{note}")
        for k in sorted(self.invariants):
            lines.append(f"  info  {k} = {self.invariants[k]}")
        for n in self.notes:
            lines.append(f"  note  {n}")
        lines.append("  not checked (out of scope):")
        for o in self.out_of_scope:
            lines.append(f"    - {o}")
        lines.append(f"  overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def __eq__(self, other):
        return isinstance(other, VerificationReport) and \
            self.to_json() == other.to_json()


@dataclass
class BackgroundSpec:
    """Concrete background: geometry + fluxes + parameter bindings.

    kind selects the geometry payload: "cw" (plane-wave chart from cw_data),
    "product" (constant-curvature blocks), "algebra" (a metric Lie algebra),
    or "parallelisable" (type-II frame data assembled by the catalog).
    """
    theory: str
    name: str
    kind: str
    cw_data: object = None
    product: object = None
    algebra: object = None
    flux_builder: object = None          # space -> dict of named KForms
    dilaton: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    frame_data: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def patch(self):
        assert self.kind == "cw"
        return cw_patch(self.cw_data)


# ---------------------------------------------------------------------------
# d = 11
# ---------------------------------------------------------------------------

def _einstein_tensor(space, F):
    """T(X,Y) = 1/2 <iota_X F, iota_Y F> - 1/6 g(X,Y) |F|^2 componentwise."""
    n = space.dim
    half = Scalar.from_rational(1, 2)
    sixth = Scalar.from_rational(1, 6)
    F2 = form_inner(F, F)
    iotas = [interior(_basis_vec(n, i), F) for i in range(n)]
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = half * form_inner(iotas[i], iotas[j]) \
                - sixth * space.metric[i][j] * F2
            out[i][j] = out[j][i] = t
    return out


def _basis_vec(n, i):
    v = [_Z] * n
    v[i] = Scalar(1)
    return v


def _tensor_eq(a, b, n):
    """First witness where two symmetric matrices differ, else None."""
    for i in range(n):
        for j in range(n):
            d = a[i][j] - b[i][j]
            if not d.is_zero():
                return (i, j, str(d))
    return None


def verify_d11(b):
    """Closedness dF = 0, the nonlinear Maxwell equation
    d*F = -1/2 F ^ F, and the Einstein equation, all exact."""
    rep = VerificationReport(b.name, "d11")
    if b.kind == "cw":
        p = b.patch()
        F = b.flux_builder(p.space)["F4"]
        rep.add("dF=0", exterior_derivative(F, p).is_zero())
        starF = hodge(F)
        lhs = exterior_derivative(starF, p)
        rhs = wedge(F, F) * Scalar.from_rational(-1, 2)
        diff = lhs - rhs
        rep.add("maxwell d*F=-1/2 F^F", diff.is_zero(),
                witness="" if diff.is_zero() else str(diff))
        ric = ricci(p)
        T = _einstein_tensor(p.space, F)
        w = _tensor_eq(ric, T, p.dim)
        rep.add("einstein Ric=T(g,F)", w is None,
                witness="" if w is None else f"component {w[0]},{w[1]}: {w[2]}")
        rep.invariants["|F|^2"] = str(_poly_str(form_inner(F, F)))
        rep.invariants["tr A"] = str(_trace(b.cw_data.A))
    elif b.kind == "product":
        prod = b.product
        F = b.flux_builder(prod.space)["F4"]
        rep.add("dF=0", True,
                note="structural: F is a constant multiple of a block "
                     "volume form, parallel hence closed")
        rhs = wedge(F, F) * Scalar.from_rational(-1, 2)
        rep.add("maxwell d*F=-1/2 F^F", rhs.is_zero(),
                note="d*F = 0 structurally (parallel form); F^F computed "
                     "exactly")
        ric = prod.ricci()
        T = _einstein_tensor(prod.space, F)
        w = _tensor_eq(ric, T, prod.dim)
        rep.add("einstein Ric=T(g,F)", w is None,
                witness="" if w is None else f"component {w[0]},{w[1]}: {w[2]}")
        rep.invariants["|F|^2"] = str(form_inner(F, F))
    else:
        raise ValueError(f"verify_d11 cannot handle geometry kind {b.kind}")
    for n in b.notes:
        rep.notes.append(n)
    return rep


def _poly_str(x):
    if isinstance(x, Polynomial):
        return x.constant_value() if x.is_constant() else x
    return x


def _trace(A):
    t = _Z
    for i in range(len(A)):
        t = t + A[i][i]
    return t


def _riemann_flux_identity(space, riem, F):
    """The maximal-supersymmetry Riemann identity of d=11:
    Riem(X,Y,Z,W) = 1/12 <iota_X iota_Y F, iota_W iota_Z F>
                    + 1/36 (g . T2)(X,Y,Z,W) - 1/72 |F|^2 (g . g)(X,Y,Z,W).
    Returns the first failing component or None."""
    n = space.dim
    F2 = form_inner(F, F)
    iotas = [interior(_basis_vec(n, i), F) for i in range(n)]
    iotas2 = {}
    for i in range(n):
        for j in range(n):
            if i != j:
                iotas2[(i, j)] = interior(_basis_vec(n, i), iotas[j])

    T2 = [[form_inner(iotas[i], iotas[j]) for j in range(n)] for i in range(n)]
    gT2 = kulkarni_nomizu(space.metric, T2, space)
    gg = kulkarni_nomizu(space.metric, space.metric, space)
    c12 = Scalar.from_rational(1, 12)
    c36 = Scalar.from_rational(1, 36)
    c72 = Scalar.from_rational(-1, 72)
    from itertools import combinations
    pairs = list(combinations(range(n), 2))
    for pi, (x, y) in enumerate(pairs):
        for (z, w) in pairs[pi:]:
            # T4 term with the slot pairing (X,Y),(W,Z)
            t4 = form_inner(iotas2[(x, y)], iotas2[(w, z)]) \
                if (x, y) in iotas2 and (w, z) in iotas2 else _Z
            want = c12 * t4 + c36 * gT2.get(x, y, z, w) \
                + c72 * F2 * gg.get(x, y, z, w)
            got = riem.get(x, y, z, w)
            d = got - want
            if not d.is_zero():
                return (x, y, z, w, str(d))
    return None


def verify_d11_maxsusy(b):
    """nabla F = 0, the Riemann-flux identity, and the Plucker identity;
    the underlying field equations are re-verified first (no silent skips)."""
    rep = verify_d11(b)
    if b.kind == "cw":
        p = b.patch()
        space = p.space
        F = b.flux_builder(space)["F4"]
        nF = covariant_derivative_form(F, p)
        ok = all(f.is_zero() for f in nF.values())
        rep.add("nabla F=0", ok)
        riem = riemann(p)
        w = _riemann_flux_identity(space, riem, F)
        rep.add("riemann-flux identity", w is None,
                witness="" if w is None else f"component {w[:4]}: {w[4]}")
        Fs = _scalarize(F)
        status, witness = plucker_check(Fs)
        rep.add("plucker", status == "decomposable",
                witness="" if status == "decomposable" else str(witness))
    elif b.kind == "product":
        prod = b.product
        space = prod.space
        F = b.flux_builder(space)["F4"]
        rep.add("nabla F=0", True,
                note="structural: constant multiple of a block volume form "
                     "on a symmetric product")
        riem = prod.riemann()
        w = _riemann_flux_identity(space, riem, F)
        rep.add("riemann-flux identity", w is None,
                witness="" if w is None else f"component {w[:4]}: {w[4]}")
        status, witness = plucker_check(F)
        rep.add("plucker", status == "decomposable",
                witness="" if status == "decomposable" else str(witness))
        rep.notes.append(
            "supercovariant flatness on the Freund-Rubin product is invoked "
            "through the equivalence with the three curvature conditions; "
            "it is not recomputed in trigonometric coordinates")
    return rep


def _scalarize(F):
    comps = {}
    for idx, c in F.components.items():
        comps[idx] = c.constant_value() if isinstance(c, Polynomial) else c
    return KForm(F.space, F.degree, comps)


# ---------------------------------------------------------------------------
# supercovariant flatness on plane-wave charts
# ---------------------------------------------------------------------------

def _frame_form(F, frm, frame_space):
    """Convert a coordinate KForm to frame components: F(E_{a1},...)."""
    n = frame_space.dim
    comps = {}
    for idx, c in F.components.items():
        # expand each coordinate slot over frame vectors
        terms = [((), c)]
        for mu in idx:
            new = []
            for (done, coeff) in terms:
                for a in range(n):
                    e = frm[a][mu]
                    if e.is_zero():
                        continue
                    new.append((done + (a,), coeff * e))
            terms = new
        for (word, coeff) in terms:
            sign, srt = _sort_idx_local(word)
            if sign == 0:
                continue
            val = coeff if sign > 0 else -coeff
            if srt in comps:
                val = comps[srt] + val
            if val.is_zero():
                comps.pop(srt, None)
            else:
                comps[srt] = val
    return KForm(frame_space, F.degree, comps)


def _sort_idx_local(idx):
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


def supercovariant_connection(b):
    """Assemble the coordinate components Theta_mu of the supercovariant
    connection on a plane-wave chart.  Returns (patch, alg, [Theta_mu])."""
    p = b.patch()
    n = p.dim
    cof, frm, gram = lightcone_coframe(p)
    om = spin_connection(p, cof, frm, gram)
    rep = build_gamma((1, n - 1))
    alg = FrameAlgebra.lightcone(rep)
    quarter = Scalar.from_rational(1, 4)
    fluxes = b.flux_builder(p.space)
    thetas = []
    if b.theory == "d11":
        F = fluxes["F4"]
        F_frame = _frame_form(F, frm, alg.space)
        for mu in range(n):
            th = alg.element()
            for (a, bb), w in om[mu].items():
                th = th + (alg.raised_gamma(a) * alg.raised_gamma(bb)) \
                    .scale(w * quarter)
            X = [cof[a][mu] for a in range(n)]       # d_mu in frame comps
            th = th + omega_xf(X, F_frame, alg)
            thetas.append(th)
    elif b.theory == "iib":
        F = fluxes["F5"]
        F_frame = _frame_form(F, frm, alg.space)
        cF = clifford_action(F_frame, alg)
        iq = ComplexScalar(_Z, Scalar.from_rational(1, 4))
        for mu in range(n):
            th = alg.element()
            for (a, bb), w in om[mu].items():
                th = th + (alg.raised_gamma(a) * alg.raised_gamma(bb)) \
                    .scale(w * quarter)
            X = [cof[a][mu] for a in range(n)]
            low = alg.space.lower_vector(X)
            xflat = KForm(alg.space, 1,
                          {(i,): low[i] for i in range(n)
                           if not low[i].is_zero()})
            th = th + (cF * clifford_action(xflat, alg)).scale(iq)
            thetas.append(th)
    else:
        raise ValueError("supercovariant connection only for d11/iib")
    return p, alg, thetas


def supercovariant_flatness(b):
    """Curvature of the supercovariant connection on a plane-wave chart,
    its joint kernel, and the supersymmetry fraction nu.

    Also asserts (for d11) that every curvature value is traceless (the
    sl(32) property) and that the Clifford-trace field-equation identity
    sum_a c(e^a) R_{X, E_a} = 0 holds."""
    p, alg, thetas = supercovariant_connection(b)
    n = p.dim
    curv = {}
    for mu in range(n):
        for nu in range(mu + 1, n):
            r = thetas[nu].partial(p.coords[mu]) \
                - thetas[mu].partial(p.coords[nu]) \
                + thetas[mu].commutator(thetas[nu])
            curv[(mu, nu)] = r
    rep = VerificationReport(b.name, b.theory)
    N = alg.rep.spinor_dim
    if b.theory == "d11":
        flat = all(r.is_zero() for r in curv.values())
        rep.add("supercovariant curvature R^D = 0", flat,
                witness="" if flat else str(_first_nonzero_curv(curv)))
        # sl(32): tracelessness of every curvature value
        traceless = True
        for r in curv.values():
            t = r.trace()
            if isinstance(t, Polynomial):
                t_ok = t.is_zero()
            else:
                t_ok = t.is_zero()
            if not t_ok:
                traceless = False
        rep.add("sl(32) tracelessness", traceless)
        # field-equation identity: sum_a c(e^a) R_{d_mu, E_a} = 0
        cof, frm, gram = lightcone_coframe(p)
        ok = True
        for mu in range(n):
            total = alg.element()
            for a in range(n):
                acc = alg.element()
                for nu in range(n):
                    if frm[a][nu].is_zero():
                        continue
                    r = _curv_lookup(curv, mu, nu)
                    if r is None:
                        continue
                    acc = acc + r.scale(frm[a][nu])
                total = total + alg.raised_gamma(a) * acc
            if not total.is_zero():
                ok = False
        rep.add("clifford-trace field equation identity", ok)
        ops = list(curv.values())
        dim, basis = kernel_dim(ops, alg)
        rep.invariants["kernel dimension"] = str(dim)
        rep.invariants["nu"] = f"{dim}/{N}"
        rep.add("nu = 1", dim == N)
        return rep, dim, basis, alg
    else:
        # IIB: complex Weyl spinors; the curvature must annihilate the
        # chiral half carrying the supersymmetry.  Both halves are tried
        # and the realized chirality is recorded.
        results = {}
        for sign in (1, -1):
            cols = chiral_basis(alg, sign)
            dim, basis = kernel_dim(list(curv.values()), alg, columns=cols)
            results[sign] = (dim, basis)
        best = max(results, key=lambda s: results[s][0])
        dim, basis = results[best]
        rep.add("supercovariant curvature R^D = 0 on the Weyl bundle",
                2 * dim == N,
                witness="" if 2 * dim == N else
                f"chiral kernel only {dim}-dimensional (complex)")
        rep.invariants["kernel dimension (complex)"] = str(dim)
        rep.invariants["chirality"] = f"{best:+d}"
        rep.invariants["nu"] = f"{2 * dim}/{N}"
        rep.add("nu = 1", 2 * dim == N,
                note=f"complex Weyl kernel on the chirality {best:+d} half")
        return rep, dim, basis, alg


def _first_nonzero_curv(curv):
    for key in sorted(curv):
        if not curv[key].is_zero():
            return (key, str(curv[key])[:120])
    return None


def _curv_lookup(curv, mu, nu):
    if mu == nu:
        return None
    if mu < nu:
        return curv[(mu, nu)]
    return curv[(nu, mu)].scale(Scalar(-1))


# ---------------------------------------------------------------------------
# IIB (constant axi-dilaton sector)
# ---------------------------------------------------------------------------

def _riemann_iib_identity(space, riem, F):
    """R(X,Y,Z,W) = <iota_X iota_W F, iota_Y iota_Z F>
                  - <iota_X iota_Z F, iota_Y iota_W F>   (this module's
    Riemann sign); returns the first failing component or None."""
    n = space.dim
    iotas = [interior(_basis_vec(n, i), F) for i in range(n)]
    cache = {}

    def i2(a, b):
        if a == b:
            return None
        if (a, b) not in cache:
            cache[(a, b)] = interior(_basis_vec(n, a), iotas[b])
        return cache[(a, b)]

    from itertools import combinations
    pairs = list(combinations(range(n), 2))
    for pi, (x, y) in enumerate(pairs):
        for (z, w) in pairs[pi:]:
            t1 = _inner_or_zero(i2(x, w), i2(y, z))
            t2 = _inner_or_zero(i2(x, z), i2(y, w))
            want = t1 - t2
            got = riem.get(x, y, z, w)
            d = got - want
            if not d.is_zero():
                return (x, y, z, w, str(d))
    return None


def _inner_or_zero(a, b):
    if a is None or b is None:
        return _Z
    return form_inner(a, b)


def verify_iib_maxsusy(b):
    """Self-duality (an error if absent), closedness, nabla F = 0, the IIB
    Riemann identity, the 2-form/5-form identity, and the decomposition
    F = G + *G with G decomposable."""
    if b.kind == "cw":
        p = b.patch()
        space = p.space
        F = b.flux_builder(space)["F5"]
        sd = hodge(F) - F
        if not sd.is_zero():
            raise ValueError("F5 is not self-dual in the chart orientation")
        rep = VerificationReport(b.name, "iib")
        rep.add("self-duality *F=F", True)
        rep.add("dF=0", exterior_derivative(F, p).is_zero())
        nF = covariant_derivative_form(F, p)
        rep.add("nabla F=0", all(f.is_zero() for f in nF.values()))
        riem = riemann(p)
        w = _riemann_iib_identity(space, riem, F)
        rep.add("riemann-flux identity (IIB)", w is None,
                witness="" if w is None else f"component {w[:4]}: {w[4]}")
        Fs = _scalarize(F)
        rep.add("plucker-jacobi identity", _plujac_holds(Fs),
                note="lambda(iota^3 F) F = 0 over all frame triples")
        G = b.flux_builder(space).get("G5")
        if G is not None:
            Gs = _scalarize(G)
            rt = _scalarize(F) - (Gs + hodge(Gs))
            rep.add("F = G + *G", rt.is_zero())
            status, witness = plucker_check(Gs)
            rep.add("G decomposable", status == "decomposable",
                    witness="" if status == "decomposable" else str(witness))
        fl_rep, dim, basis, alg = supercovariant_flatness(b)
        for c in fl_rep.conditions:
            rep.add(c.name, c.passed, c.witness, c.note)
        rep.invariants.update(fl_rep.invariants)
        return rep
    elif b.kind == "product":
        prod = b.product
        space = prod.space
        F = b.flux_builder(space)["F5"]
        sd = hodge(F) - F
        if not sd.is_zero():
            raise ValueError("F5 is not self-dual in the product orientation")
        rep = VerificationReport(b.name, "iib")
        rep.add("self-duality *F=F", True,
                note=f"orientation {space.orientation:+d} of the ordered "
                     "frame realizes self-duality (recorded)")
        rep.add("dF=0", True, note="structural: parallel block volume forms")
        rep.add("nabla F=0", True,
                note="structural: constant multiples of block volume forms")
        riem = prod.riemann()
        w = _riemann_iib_identity(space, riem, F)
        rep.add("riemann-flux identity (IIB)", w is None,
                witness="" if w is None else f"component {w[:4]}: {w[4]}")
        rep.add("plucker-jacobi identity", _plujac_holds(F))
        G = b.flux_builder(space).get("G5")
        if G is not None:
            rt = F - (G + hodge(G))
            rep.add("F = G + *G", rt.is_zero())
            status, witness = plucker_check(G)
            rep.add("G decomposable", status == "decomposable")
        rep.notes.append(
            "supercovariant flatness on the Freund-Rubin product is invoked "
            "through the equivalence with the curvature conditions")
        return rep
    raise ValueError(f"verify_iib_maxsusy cannot handle kind {b.kind}")


def _plujac_holds(F):
    from itertools import combinations
    space = F.space
    n = space.dim
    for tri in combinations(range(n), 3):
        g = F
        for i in reversed(tri):
            g = interior(_basis_vec(n, i), g)
        if g.is_zero():
            continue
        if not lambda_action(g, F).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# d = 6 (1,0)
# ---------------------------------------------------------------------------

def verify_d6(b):
    """dH = 0, anti-selfduality *H = -H, the Einstein equation
    Ric = 1/2 <iota_X H, iota_Y H> (this module's Ricci sign), and flatness
    of the parallelising connection.  Geometry may be a metric Lie algebra
    or a plane-wave chart."""
    rep = VerificationReport(b.name, "d6-(1,0)")
    n = None
    if b.kind == "algebra":
        g = b.algebra
        H = b.flux_builder(g.space())["H3"] if b.flux_builder \
            else canonical_three_form(g)
        rep.add("dH=0", ce_differential(H, g).is_zero())
        ric = biinvariant_ricci(g)
        n = g.dim
        carrier = g
        space = g.space()
    elif b.kind == "cw":
        p = cw_patch(b.cw_data, orientation=b.frame_data.get("orientation", 1))
        H = b.flux_builder(p.space)["H3"]
        rep.add("dH=0", exterior_derivative(H, p).is_zero())
        ric = ricci(p)
        n = p.dim
        carrier = p
        space = p.space
    else:
        raise ValueError("d6 verifier expects a metric Lie algebra or a "
                         "plane-wave chart")
    asd = hodge(H) + H
    rep.add("*H=-H", asd.is_zero(),
            witness="" if asd.is_zero() else str(asd))
    half = Scalar.from_rational(1, 2)
    w = None
    for i in range(n):
        for j in range(n):
            want = half * form_inner(interior(_basis_vec(n, i), H),
                                     interior(_basis_vec(n, j), H))
            d = ric[i][j] - want
            if not d.is_zero():
                w = (i, j, str(d))
                break
        if w:
            break
    rep.add("einstein Ric = 1/2 <iH,iH>", w is None,
            witness="" if w is None else f"component {w[0]},{w[1]}: {w[2]}")
    rd = curvature_with_torsion(carrier, H)
    rep.add("parallelising connection flat (R^D = 0)", rd.is_zero(),
            witness="" if rd.is_zero() else str(rd.first_nonzero()))
    rep.add("maximally supersymmetric", rd.is_zero(),
            note="flat D with anti-selfdual closed torsion carries the full "
                 "spinor space")
    rep.invariants["|H|^2"] = str(_poly_str(form_inner(H, H)))
    for nnote in b.notes:
        rep.notes.append(nnote)
    return rep


# ---------------------------------------------------------------------------
# type-II common sector
# ---------------------------------------------------------------------------

def verify_typeII_common(b):
    """The parallelisable equations of motion: nabla d phi = 0,
    d phi ^ *H = 0, |d phi|^2 - 1/4 |H|^2 = 0, on an assembled frame."""
    rep = VerificationReport(b.name, "typeII-common")
    space = b.frame_data["space"]
    H = b.frame_data["H"]
    dphi = b.frame_data["dphi"]          # 1-form on the frame
    n = space.dim
    # nabla d phi: the only nonflat directions carrying dphi would be the
    # plane-wave x^-; the chart computation shows Gamma^-_{mu nu} = 0 there,
    # so affine dilatons are parallel.  Verified on the chart when a CW
    # factor is present, structural otherwise.
    if b.frame_data.get("cw_patch") is not None:
        p = b.frame_data["cw_patch"]
        phi_poly = b.frame_data["phi_poly"]
        ok = _nabla_dphi_zero(p, phi_poly)
        rep.add("nabla d phi = 0", ok, note="verified on the plane-wave chart")
    else:
        rep.add("nabla d phi = 0", True,
                note="structural: affine dilaton along flat directions")
    sH = hodge(H)
    rep.add("dphi ^ *H = 0", wedge(dphi, sH).is_zero())
    bal = form_inner(dphi, dphi) - Scalar.from_rational(1, 4) * form_inner(H, H)
    rep.add("|dphi|^2 = 1/4 |H|^2", bal.is_zero(),
            witness="" if bal.is_zero() else str(bal))
    rep.invariants["|H|^2"] = str(form_inner(H, H))
    rep.invariants["|dphi|^2"] = str(form_inner(dphi, dphi))
    for nnote in b.notes:
        rep.notes.append(nnote)
    return rep


def _nabla_dphi_zero(p, phi_poly):
    n = p.dim
    dphi_comps = {}
    for mu in range(n):
        if p.coords[mu] in phi_poly.vars:
            d = phi_poly.partial(p.coords[mu])
            if not d.is_zero():
                dphi_comps[(mu,)] = d
    dphi = KForm(p.space, 1, dphi_comps)
    nd = covariant_derivative_form(dphi, p)
    return all(f.is_zero() for f in nd.values())


def dilatino_kernel(b):
    """Kernel of the algebraic dilatino operator c(dphi + 1/2 H) on the
    32-dimensional type-II spinor space, frame-constant sector.  Returns
    (iia_count, iib_count): IIA counts the kernel on S+ + S-, IIB twice the
    kernel on S+."""
    space = b.frame_data["space"]
    H = b.frame_data["H"]
    dphi = b.frame_data["dphi"]
    alg = b.frame_data["alg"]
    op = clifford_action(dphi, alg) + \
        clifford_action(H, alg).scale(Scalar.from_rational(1, 2))
    dim_full, _ = kernel_dim([op], alg)
    plus = chiral_basis(alg, 1)
    dim_plus, _ = kernel_dim([op], alg, columns=plus)
    minus = chiral_basis(alg, -1)
    dim_minus, _ = kernel_dim([op], alg, columns=minus)
    assert dim_plus + dim_minus == dim_full
    return dim_full, 2 * dim_plus


def killing_vectors_from_kernel(b, basis, alg):
    """Spinor bilinears of kernel spinors, with the exact coordinate Killing
    check on the chart.  Returns the list of (vector components, is_killing).
    Lightcone-annihilated constant spinors give vectors along d+ only."""
    p = b.patch()
    out = []
    for i in range(min(4, len(basis))):
        for j in range(min(4, len(basis))):
            V = spinor_to_vector(basis[i], basis[j], alg)
            # frame components -> coordinate components via E_a
            cof, frm, gram = lightcone_coframe(p)
            n = p.dim
            Vc = []
            for mu in range(n):
                s = None
                for a in range(n):
                    if V[a].is_zero() or frm[a][mu].is_zero():
                        continue
                    t = frm[a][mu] * V[a]
                    s = t if s is None else s + t
                Vc.append(Polynomial.constant(0) if s is None else s)
            ok, _ = killing_check(p, Vc)
            out.append((V, ok))
    return out
