"""Exterior algebra over a fixed quadratic space.

KForms live on a QuadraticSpace: a finite-dimensional real vector space with
an exact symmetric invertible Gram matrix (not necessarily diagonal -- the
lightcone frames used for plane waves pair e+ with e-) and an orientation.
Coefficients may be Scalar or Polynomial; the same code serves algebraic
frames and coordinate patches.

Conventions (see docs/conventions.md):
  * interior product iota_v pairs a vector (given in frame components)
    against the first slot, no metric involved;
  * <a,b> on k-forms is the sum over increasing index tuples with indices
    raised by the inverse Gram (Gram determinants for non-diagonal frames);
  * hodge(a) is defined by  b ^ *a = <b,a> vol  with
    vol = sqrt(|det g|) e^1^...^e^n in the oriented frame order;
  * Kulkarni-Nomizu: (h . k)(X,Y,Z,W) = h(X,W)k(Y,Z) + h(Y,Z)k(X,W)
    - h(X,Z)k(Y,W) - h(Y,W)k(X,Z), so the unit round sphere has
    Riem = 1/2 g . g with sectional curvature +1.
"""

from itertools import combinations

from .exactnum import Scalar, sqrt_scalar
from . import linalg

__all__ = ["QuadraticSpace", "KForm", "BiSymTensor", "wedge", "interior",
           "hodge", "form_inner", "kulkarni_nomizu", "plucker_check",
           "lambda_action"]

_Z = Scalar(0)


class QuadraticSpace:
    """Frame data: dimension, exact Gram matrix, orientation sign.

    Entries are usually Scalars; a coordinate patch may carry Polynomial
    entries, in which case the exact inverse must be supplied (and is
    verified)."""

    def __init__(self, metric, orientation=1, names=None, inverse=None):
        self.dim = len(metric)
        if not (1 <= self.dim <= 13):
            raise ValueError("quadratic spaces support dimensions 1..13")
        self.metric = [list(row) for row in metric]
        for i in range(self.dim):
            for j in range(self.dim):
                if not (self.metric[i][j] - self.metric[j][i]).is_zero():
                    raise ValueError("metric must be symmetric")
        if inverse is None:
            self.metric_inv = linalg.inverse(self.metric)
        else:
            self.metric_inv = [list(row) for row in inverse]
            prod = linalg.mat_mul(self.metric, self.metric_inv)
            for i in range(self.dim):
                for j in range(self.dim):
                    want = 1 if i == j else 0
                    if not (prod[i][j] - want if want else prod[i][j]).is_zero():
                        raise ValueError("supplied inverse is not exact")
        if orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")
        self.orientation = orientation
        self.names = tuple(names) if names else tuple(f"e{i}" for i in range(self.dim))
        self._signature = None
        self._volume_coeff = None
        self._gram_cache = {}

    @staticmethod
    def euclidean(n, orientation=1):
        return QuadraticSpace(linalg.eye(n), orientation)

    @staticmethod
    def minkowski(n, orientation=1):
        """Mostly-plus frame (-,+,...,+) with the timelike leg first."""
        g = linalg.eye(n)
        g[0][0] = Scalar(-1)
        return QuadraticSpace(g, orientation)

    @staticmethod
    def lightcone(n_transverse, extra=None, orientation=1):
        """Frame (e+, e-, e1..ek, [extra diagonal legs]) with B(e+,e-) = 1."""
        n = 2 + n_transverse + (len(extra) if extra else 0)
        g = linalg.zeros(n, n)
        g[0][1] = g[1][0] = Scalar(1)
        for i in range(n_transverse):
            g[2 + i][2 + i] = Scalar(1)
        if extra:
            for i, s in enumerate(extra):
                g[2 + n_transverse + i][2 + n_transverse + i] = Scalar(s)
        names = ["e+", "e-"] + [f"e{i+1}" for i in range(n_transverse)]
        if extra:
            names += [f"f{i+1}" for i in range(len(extra))]
        return QuadraticSpace(g, orientation, names)

    def signature(self):
        """(t, s) with t timelike directions, computed exactly by recursive
        congruence diagonalization."""
        if self._signature is None:
            g = [list(r) for r in self.metric]
            n = self.dim
            t = s = 0
            idx = list(range(n))
            while idx:
                # find a nonzero diagonal entry, else create one
                d = next((i for i in idx if not g[i][i].is_zero()), None)
                if d is None:
                    i = idx[0]
                    j = next(j for j in idx if not g[i][j].is_zero())
                    for k in range(n):          # row/col op: e_i -> e_i + e_j
                        g[i][k] = g[i][k] + g[j][k]
                    for k in range(n):
                        g[k][i] = g[k][i] + g[k][j]
                    d = i
                if g[d][d].sign() > 0:
                    s += 1
                else:
                    t += 1
                idx.remove(d)
                inv = g[d][d].inverse()
                for i in list(idx):
                    if g[i][d].is_zero():
                        continue
                    f = g[i][d] * inv
                    for k in range(n):
                        g[i][k] = g[i][k] - f * g[d][k]
                    for k in range(n):
                        g[k][i] = g[k][i] - f * g[k][d]
            self._signature = (t, s)
        return self._signature

    def volume_coeff(self):
        """sqrt(|det g|) as an exact Scalar (must lie in the flat tower;
        polynomial metrics must have constant determinant)."""
        if self._volume_coeff is None:
            d = linalg.det_nodiv(self.metric)
            if not isinstance(d, Scalar):
                d = d.constant_value()
            if d.sign() < 0:
                d = -d
            self._volume_coeff = sqrt_scalar(d)
        return self._volume_coeff

    def volume_form(self):
        c = self.volume_coeff()
        if self.orientation < 0:
            c = -c
        return KForm(self, self.dim, {tuple(range(self.dim)): c})

    def gram_minor(self, rows, cols):
        """det of the inverse-metric minor <e^rows, e^cols> (cached;
        division-free so polynomial inverse metrics work)."""
        key = (rows, cols)
        if key not in self._gram_cache:
            m = [[self.metric_inv[i][j] for j in cols] for i in rows]
            self._gram_cache[key] = linalg.det_nodiv(m) if m else Scalar(1)
        return self._gram_cache[key]

    def raise_vector(self, covector):
        """Components of the metric dual of a coframe covector."""
        return [sum_nonzero([self.metric_inv[a][b] * covector[b]
                             for b in range(self.dim)]) for a in range(self.dim)]

    def lower_vector(self, vector):
        return [sum_nonzero([self.metric[a][b] * vector[b]
                             for b in range(self.dim)]) for a in range(self.dim)]

    def __repr__(self):
        t, s = self.signature()
        return f"QuadraticSpace(dim={self.dim}, signature=({t},{s}))"


def sum_nonzero(items, zero=_Z):
    s = None
    for x in items:
        if isinstance(x, Scalar) and x.is_zero():
            continue
        s = x if s is None else s + x
    return zero if s is None else s


class KForm:
    """Exterior form of fixed degree with components on increasing tuples."""

    __slots__ = ("space", "degree", "components")

    def __init__(self, space, degree, components=None):
        if not (0 <= degree <= space.dim):
            raise ValueError(f"degree {degree} out of range for dim {space.dim}")
        self.space = space
        self.degree = degree
        self.components = {}
        if components:
            for idx, c in components.items():
                if _nz(c):
                    if len(idx) != degree or list(idx) != sorted(set(idx)):
                        raise ValueError(f"bad index tuple {idx}")
                    self.components[tuple(idx)] = c

    @staticmethod
    def zero(space, degree):
        return KForm(space, degree, {})

    @staticmethod
    def basis(space, *indices, coeff=None):
        """coeff * e^{i1} ^ ... ^ e^{ik} for strictly increasing indices."""
        c = Scalar(1) if coeff is None else coeff
        return KForm(space, len(indices), {tuple(indices): c})

    @staticmethod
    def scalar(space, value):
        c = value if not isinstance(value, int) else Scalar(value)
        return KForm(space, 0, {(): c})

    def is_zero(self):
        return not self.components

    def __add__(self, other):
        if not isinstance(other, KForm) or other.space is not self.space \
                or other.degree != self.degree:
            raise ValueError("can only add forms of equal degree on one space")
        comps = dict(self.components)
        for idx, c in other.components.items():
            s = comps.get(idx)
            s = c if s is None else s + c
            if _nz(s):
                comps[idx] = s
            else:
                comps.pop(idx, None)
        return KForm(self.space, self.degree, comps)

    def __neg__(self):
        return KForm(self.space, self.degree,
                     {i: -c for i, c in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, KForm):
            return NotImplemented
        return KForm(self.space, self.degree,
                     {i: v * c for i, v in self.components.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return (self.space is other.space and self.degree == other.degree
                and (self - other).is_zero())

    def __hash__(self):
        return hash((id(self.space), self.degree,
                     frozenset(self.components.keys())))

    def map_coeff(self, f):
        return KForm(self.space, self.degree,
                     {i: f(c) for i, c in self.components.items()})

    def __str__(self):
        if not self.components:
            return "0"
        names = self.space.names
        parts = []
        for idx in sorted(self.components):
            mono = "^".join(names[i] for i in idx) if idx else "1"
            parts.append(f"({self.components[idx]}) {mono}")
        return " + ".join(parts)

    __repr__ = __str__


def _nz(c):
    return not c.is_zero() if hasattr(c, "is_zero") else bool(c)


def _merge_sign(a, b):
    """Merge two increasing tuples; returns (sign, merged) or (0, None)."""
    out = []
    i = j = 0
    sign = 1
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return 0, None
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            if (len(a) - i) % 2:
                sign = -sign
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return sign, tuple(out)


def wedge(a, b):
    """Graded-commutative product; degree overflow gives the zero form."""
    if a.space is not b.space:
        raise ValueError("forms on different spaces")
    deg = a.degree + b.degree
    if deg > a.space.dim:
        return KForm.zero(a.space, a.space.dim)
    comps = {}
    for ia, ca in a.components.items():
        for ib, cb in b.components.items():
            sign, idx = _merge_sign(ia, ib)
            if sign == 0:
                continue
            c = ca * cb
            if sign < 0:
                c = -c
            s = comps.get(idx)
            s = c if s is None else s + c
            if _nz(s):
                comps[idx] = s
            else:
                comps.pop(idx, None)
    return KForm(a.space, deg, comps)


def interior(v, a):
    """iota_v a for a vector v given by frame components (antiderivation)."""
    if a.degree == 0:
        return KForm.zero(a.space, 0)
    comps = {}
    for idx, c in a.components.items():
        for pos, i in enumerate(idx):
            vi = v[i]
            if not _nz(vi):
                continue
            rest = idx[:pos] + idx[pos + 1:]
            term = c * vi
            if pos % 2:
                term = -term
            s = comps.get(rest)
            s = term if s is None else s + term
            if _nz(s):
                comps[rest] = s
            else:
                comps.pop(rest, None)
    return KForm(a.space, a.degree - 1, comps)


def interior_frame(space, i, a):
    """iota against the i-th frame vector."""
    v = [Scalar(0)] * space.dim
    v[i] = Scalar(1)
    return interior(v, a)


def form_inner(a, b):
    """<a,b> over increasing index tuples, indices raised with the inverse
    Gram; the general (non-diagonal) case contracts with Gram minors."""
    if a.space is not b.space:
        raise ValueError("forms on different spaces")
    if a.degree != b.degree:
        raise ValueError("degree mismatch in form inner product")
    space = a.space
    total = None
    for ia, ca in a.components.items():
        for ib, cb in b.components.items():
            g = space.gram_minor(ia, ib)
            if g.is_zero():
                continue
            term = ca * cb * g
            total = term if total is None else total + term
    return Scalar(0) if total is None else total


def hodge(a):
    """Hodge dual with respect to the space's orientation."""
    space = a.space
    n = space.dim
    k = a.degree
    volc = space.volume_coeff()
    if space.orientation < 0:
        volc = -volc
    comps = {}
    all_idx = tuple(range(n))
    for J in combinations(all_idx, n - k):
        # coefficient of e^J in *a:  (*a)_J such that  b ^ *a = <b,a> vol
        comp = tuple(i for i in all_idx if i not in J)   # complement, increasing
        sign, merged = _merge_sign(comp, J)
        assert merged == all_idx
        total = None
        for ia, ca in a.components.items():
            g = space.gram_minor(comp, ia)
            if g.is_zero():
                continue
            term = ca * g
            total = term if total is None else total + term
        if total is None:
            continue
        c = total * volc
        if sign < 0:
            c = -c
        if _nz(c):
            comps[J] = c
    return KForm(space, n - k, comps)


def kulkarni_nomizu(h, k, space):
    """KN product of two symmetric 2-tensors (given as matrices)."""
    return BiSymTensor.from_function(
        space,
        lambda x, y, z, w: h[x][w] * k[y][z] + h[y][z] * k[x][w]
        - h[x][z] * k[y][w] - h[y][w] * k[x][z])


class BiSymTensor:
    """4-tensor skew in (1,2) and (3,4), symmetric under pair exchange.

    Stored on canonical keys (i<j, k<l, (i,j) <= (k,l)).  The first Bianchi
    identity is NOT part of the symmetries (torsion curvatures violate it).
    """

    __slots__ = ("space", "components")

    def __init__(self, space, components=None):
        self.space = space
        self.components = {}
        if components:
            for key, c in components.items():
                if _nz(c):
                    i, j, k, l = key
                    assert i < j and k < l and (i, j) <= (k, l), key
                    self.components[key] = c

    @staticmethod
    def from_function(space, f):
        n = space.dim
        comps = {}
        pairs = list(combinations(range(n), 2))
        for pi, (i, j) in enumerate(pairs):
            for (k, l) in pairs[pi:]:
                c = f(i, j, k, l)
                if _nz(c):
                    comps[(i, j, k, l)] = c
        return BiSymTensor(space, comps)

    def get(self, i, j, k, l):
        """Component with arbitrary index order, via the symmetries."""
        zero = Scalar(0)
        if i == j or k == l:
            return zero
        sign = 1
        if i > j:
            i, j, sign = j, i, -sign
        if k > l:
            k, l, sign = l, k, -sign
        if (i, j) > (k, l):
            i, j, k, l = k, l, i, j
        c = self.components.get((i, j, k, l))
        if c is None:
            return zero
        return c if sign > 0 else -c

    def is_zero(self):
        return not self.components

    def __add__(self, other):
        comps = dict(self.components)
        for key, c in other.components.items():
            s = comps.get(key)
            s = c if s is None else s + c
            if _nz(s):
                comps[key] = s
            else:
                comps.pop(key, None)
        return BiSymTensor(self.space, comps)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return BiSymTensor(self.space,
                           {k: v * c for k, v in self.components.items()})

    def map_coeff(self, f):
        return BiSymTensor(self.space,
                           {k: f(c) for k, c in self.components.items()})

    def first_nonzero(self):
        for key in sorted(self.components):
            return key, self.components[key]
        return None

    def ricci(self):
        """Ric(Y,Z) = sum_a g^{ab} R(e_a, Y, Z, e_b) (positive on spheres)."""
        n = self.space.dim
        ginv = self.space.metric_inv
        out = [[Scalar(0)] * n for _ in range(n)]
        for y in range(n):
            for z in range(y, n):
                total = None
                for a in range(n):
                    for b in range(n):
                        if ginv[a][b].is_zero():
                            continue
                        c = self.get(a, y, z, b)
                        if not _nz(c):
                            continue
                        term = ginv[a][b] * c
                        total = term if total is None else total + term
                if total is not None:
                    out[y][z] = total
                    out[z][y] = total
        return out

    def cyclic_violation(self):
        """First witness of a first Bianchi identity failure (cyclic sum over
        the first three slots, every choice of fourth slot), or None."""
        n = self.space.dim
        for quad in combinations(range(n), 4):
            for w in range(4):
                l = quad[w]
                i, j, k = (quad[x] for x in range(4) if x != w)
                s = self.get(i, j, k, l) + self.get(j, k, i, l) \
                    + self.get(k, i, j, l)
                if _nz(s):
                    return (i, j, k, l), s
        return None


def plucker_check(F):
    """Plucker decomposability test for a 4- or 5-form with Scalar entries.

    Contracts down to a 1-form with basis vectors and wedges back against F;
    decomposable iff every contraction wedge vanishes.  Returns
    ("decomposable", None) or ("witness", index_tuple).
    """
    if F.degree not in (4, 5):
        raise ValueError("plucker_check expects a 4- or 5-form")
    space = F.space
    n = space.dim
    depth = F.degree - 1
    for idx in combinations(range(n), depth):
        g = F
        for i in reversed(idx):
            g = interior_frame(space, i, g)
        if g.is_zero():
            continue
        if not wedge(g, F).is_zero():
            return "witness", idx
    return "decomposable", None


def plucker_rank_oracle(F):
    """Independent decomposability test: F (degree k) is decomposable iff the
    span of all (k-1)-fold basis contractions has dimension <= k."""
    space = F.space
    n = space.dim
    k = F.degree
    rows = []
    for idx in combinations(range(n), k - 1):
        g = F
        for i in reversed(idx):
            g = interior_frame(space, i, g)
        if not g.is_zero():
            rows.append([g.components.get((j,), _Z) for j in range(n)])
    if not rows:
        return True         # zero form: trivially a (degenerate) wedge
    return linalg.rank(rows) <= k


def lambda_action(omega, F):
    """Action on F of the skew endomorphism associated to the 2-form omega,
    extended to forms as a derivation (acting on covectors by -A^T)."""
    space = omega.space
    if omega.degree != 2:
        raise ValueError("omega must be a 2-form")
    n = space.dim
    # A^a_b = g^{ac} omega_{cb}; covector action (A.theta)_b = -theta_a A^a_b
    A = [[Scalar(0)] * n for _ in range(n)]
    for (c, b), v in omega.components.items():
        for a in range(n):
            gac = space.metric_inv[a][c]
            gab = space.metric_inv[a][b]
            if not gac.is_zero():
                A[a][b] = A[a][b] + gac * v
            if not gab.is_zero():
                A[a][c] = A[a][c] - gab * v
    comps = {}
    for idx, coeff in F.components.items():
        for pos, i in enumerate(idx):
            # derivation: slot covector e^i -> -A^i_a e^a
            for a in range(n):
                if A[i][a].is_zero():
                    continue
                c = coeff * (-A[i][a])
                new = idx[:pos] + (a,) + idx[pos + 1:]
                # re-sort with sign
                sign, srt = _sort_sign(new)
                if sign == 0:
                    continue
                if sign < 0:
                    c = -c
                s = comps.get(srt)
                s = c if s is None else s + c
                if _nz(s):
                    comps[srt] = s
                else:
                    comps.pop(srt, None)
    return KForm(space, F.degree, comps)


def _sort_sign(idx):
    lst = list(idx)
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            if lst[j - 1] == lst[j]:
                return 0, None
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(lst, lst[1:]):
        if a == b:
            return 0, None
    return sign, tuple(lst)
