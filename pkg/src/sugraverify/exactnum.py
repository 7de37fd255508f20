"""Exact scalars (rationals with adjoined square roots) and sparse polynomials.

A Scalar is a finite sum  sum_r  c_r * sqrt(r)  where each radicand r is a
positive square-free integer (r = 1 for the rational part) and each c_r is an
exact rational.  The representation is canonical: zero coefficients are never
stored, so equality is dictionary equality.  The tower is flat by design --
sqrt of a non-rational Scalar is rejected rather than nested.

Polynomials are multivariate over Scalar with a sparse exponent-tuple
representation and are used for coordinate-dependent tensor components.
"""

from math import isqrt

from ._backend import RAT, RAT_ZERO, rat

__all__ = ["Scalar", "Polynomial", "parse_scalar", "sqrt_scalar"]


def _squarefree_split(n):
    """n = m*m*r with r square-free; returns (m, r).  n must be positive."""
    m, r, d = 1, 1, 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            m *= d ** (e // 2)
            if e % 2:
                r *= d
        d += 1 if d == 2 else 2
    return m, r * n


def _prime_factors(n):
    fs, d = [], 2
    while d * d <= n:
        if n % d == 0:
            fs.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        fs.append(n)
    return fs


_SQRT_CACHE = {}


def _sqrt_bounds(r, digits):
    """Rational lower/upper bounds for sqrt(r) with 10**-digits spacing."""
    key = (r, digits)
    if key not in _SQRT_CACHE:
        scale = 10 ** digits
        lo = isqrt(r * scale * scale)
        _SQRT_CACHE[key] = (rat(lo, scale), rat(lo + 1, scale))
    return _SQRT_CACHE[key]


class Scalar:
    """Element of Q(sqrt(p1), sqrt(p2), ...), canonically represented."""

    __slots__ = ("_terms",)

    def __init__(self, value=0, _terms=None):
        if _terms is not None:
            self._terms = _terms
        elif isinstance(value, Scalar):
            self._terms = dict(value._terms)
        else:
            q = rat(value) if not isinstance(value, (int,)) else RAT(value)
            self._terms = {1: q} if q != RAT_ZERO else {}

    @staticmethod
    def _make(terms):
        return Scalar(_terms={r: c for r, c in terms.items() if c != RAT_ZERO})

    @staticmethod
    def from_rational(n, d=1):
        return Scalar._make({1: rat(n, d)})

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self._terms

    def is_rational(self):
        return all(r == 1 for r in self._terms)

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return self._terms.get(1, RAT_ZERO)

    @property
    def radicands(self):
        return sorted(r for r in self._terms if r != 1)

    def coefficient(self, radicand):
        return self._terms.get(radicand, RAT_ZERO)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, int):
            return Scalar(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for r, c in o._terms.items():
            terms[r] = terms.get(r, RAT_ZERO) + c
        return Scalar._make(terms)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(_terms={r: -c for r, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms = {}
        for r1, c1 in self._terms.items():
            for r2, c2 in o._terms.items():
                # sqrt(r1)*sqrt(r2) = g*sqrt(r1'*r2') with g = gcd, coprime parts
                if r1 == r2:
                    r, m = 1, r1
                elif r1 == 1:
                    r, m = r2, 1
                elif r2 == 1:
                    r, m = r1, 1
                else:
                    g = _gcd(r1, r2)
                    r, m = (r1 // g) * (r2 // g), g
                c = c1 * c2 * m
                if r in terms:
                    terms[r] += c
                else:
                    terms[r] = c
        return Scalar._make(terms)

    __rmul__ = __mul__

    def inverse(self):
        """Exact inverse by iterated conjugate multiplication (field inverse)."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero Scalar")
        if self.is_rational():
            return Scalar._make({1: 1 / self._terms[1]})
        # conjugate over one prime appearing in some radicand
        p = _prime_factors(next(r for r in self._terms if r != 1))[0]
        conj = Scalar(_terms={r: (-c if r % p == 0 else c)
                              for r, c in self._terms.items()})
        norm = self * conj          # invariant under the conjugation => fewer primes
        return conj * norm.inverse()

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        out = Scalar(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def sign(self):
        """Exact sign (-1, 0, +1).  Zero is decided by canonical form; the
        sign of a nonzero element by interval refinement, which terminates."""
        if self.is_zero():
            return 0
        digits = 20
        while True:
            lo = hi = RAT_ZERO
            for r, c in self._terms.items():
                if r == 1:
                    lo += c
                    hi += c
                else:
                    bl, bh = _sqrt_bounds(r, digits)
                    if c >= 0:
                        lo += c * bl
                        hi += c * bh
                    else:
                        lo += c * bh
                        hi += c * bl
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            digits *= 2

    def __lt__(self, other):
        o = self._coerce(other)
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        return (self - o).sign() <= 0

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    def __float__(self):
        out = 0.0
        for r, c in self._terms.items():
            out += float(c.numerator) / float(c.denominator) * \
                (r ** 0.5 if r != 1 else 1.0)
        return out

    def __bool__(self):
        return not self.is_zero()

    # -- formatting ---------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for r in sorted(self._terms):
            c = self._terms[r]
            n, d = c.numerator, c.denominator
            if r == 1:
                body = f"{abs(n)}" if d == 1 else f"{abs(n)}/{d}"
            else:
                head = "" if abs(n) == 1 else f"{abs(n)}*"
                body = f"{head}sqrt({r})" if d == 1 else f"{head}sqrt({r})/{d}"
            if not parts:
                parts.append(("-" if n < 0 else "") + body)
            else:
                parts.append((" - " if n < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Scalar({self})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def sqrt_scalar(x):
    """Exact square root of a non-negative *rational* Scalar (flat tower:
    sqrt of anything else is rejected)."""
    if isinstance(x, int):
        x = Scalar(x)
    if not x.is_rational():
        raise ValueError(f"sqrt({x}) leaves the flat radical tower")
    q = x.rational_value()
    if q < 0:
        raise ValueError(f"sqrt of negative value {q}")
    if q == 0:
        return Scalar(0)
    n, d = int(q.numerator), int(q.denominator)
    m, r = _squarefree_split(n * d)     # sqrt(n/d) = sqrt(n d)/d
    return Scalar._make({int(r): rat(m, d)})


ZERO = Scalar(0)
ONE = Scalar(1)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Sparse multivariate polynomial over Scalar.

    terms maps exponent tuples (aligned with .vars, a sorted tuple of names)
    to Scalar coefficients; zero coefficients are never stored.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        self.vars = tuple(vars)
        self.terms = {} if terms is None else terms

    @staticmethod
    def constant(value, vars=()):
        c = value if isinstance(value, Scalar) else Scalar(value)
        if c.is_zero():
            return Polynomial(vars, {})
        return Polynomial(tuple(vars), {(0,) * len(vars): c})

    @staticmethod
    def variable(name):
        return Polynomial((name,), {(1,): Scalar(1)})

    @staticmethod
    def _promote(x, vars=()):
        if isinstance(x, Polynomial):
            return x
        return Polynomial.constant(x, vars)

    def _aligned(self, other):
        other = Polynomial._promote(other)
        if self.vars == other.vars:
            return self, other
        allvars = tuple(sorted(set(self.vars) | set(other.vars)))
        return self._on_vars(allvars), other._on_vars(allvars)

    def _on_vars(self, allvars):
        if self.vars == allvars:
            return self
        pos = [allvars.index(v) for v in self.vars]
        terms = {}
        for exp, c in self.terms.items():
            e = [0] * len(allvars)
            for p, k in zip(pos, exp):
                e[p] = k
            terms[tuple(e)] = c
        return Polynomial(allvars, terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_value(self):
        """The value as a Scalar; raises if genuinely coordinate-dependent."""
        val = Scalar(0)
        for exp, c in self.terms.items():
            if any(exp):
                raise ValueError(f"not constant: {self}")
            val = val + c
        return val

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def __add__(self, other):
        if isinstance(other, (int, Scalar)):
            other = Polynomial.constant(other, self.vars)
        elif not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for exp, c in b.terms.items():
            s = terms.get(exp, ZERO) + c
            if s.is_zero():
                terms.pop(exp, None)
            else:
                terms[exp] = s
        return Polynomial(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Scalar, Polynomial)):
            return self + (-Polynomial._promote(other, self.vars))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            c0 = other if isinstance(other, Scalar) else Scalar(other)
            if c0.is_zero():
                return Polynomial(self.vars, {})
            return Polynomial(self.vars,
                              {e: c * c0 for e, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._aligned(other)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                if e in terms:
                    c = terms[e] + c
                if c.is_zero():
                    terms.pop(e, None)
                else:
                    terms[e] = c
        return Polynomial(a.vars, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Scalar)):
            other = Polynomial.constant(other, self.vars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return not self.is_zero()

    def partial(self, var):
        """Formal partial derivative; unknown variable is an error."""
        if var not in self.vars:
            raise KeyError(f"unknown variable {var!r}; have {self.vars}")
        i = self.vars.index(var)
        terms = {}
        for exp, c in self.terms.items():
            k = exp[i]
            if k == 0:
                continue
            e = exp[:i] + (k - 1,) + exp[i + 1:]
            c2 = c * k
            terms[e] = terms.get(e, ZERO) + c2
        return Polynomial(self.vars, {e: c for e, c in terms.items()
                                      if not c.is_zero()})

    def subs(self, values):
        """Substitute Scalars for a subset of the variables."""
        keep = [i for i, v in enumerate(self.vars) if v not in values]
        newvars = tuple(self.vars[i] for i in keep)
        out = Polynomial(newvars, {})
        for exp, c in self.terms.items():
            coef = c
            for i, v in enumerate(self.vars):
                if v in values:
                    val = values[v]
                    if not isinstance(val, Scalar):
                        val = Scalar(val)
                    coef = coef * val ** exp[i]
            term = Polynomial(newvars, {tuple(exp[i] for i in keep): coef})
            if not coef.is_zero():
                out = out + term
        return out

    def eval(self, values):
        """Full evaluation to a Scalar."""
        return self.subs(values).constant_value()

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(f"{v}^{k}" if k > 1 else v
                            for v, k in zip(self.vars, exp) if k)
            cs = str(c)
            if mono:
                cs = f"({cs})*{mono}" if ("+" in cs or " - " in cs) else \
                     (mono if cs == "1" else f"-{mono}" if cs == "-1"
                      else f"{cs}*{mono}")
            parts.append(cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


# ---------------------------------------------------------------------------
# parsing of exact scalar strings ("5/6", "2*sqrt(5)/5", "-1/36*mu^2", ...)
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text, params):
        self.toks = self._lex(text)
        self.pos = 0
        self.params = params

    @staticmethod
    def _lex(text):
        toks, i = [], 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                toks.append(("int", int(text[i:j])))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                toks.append(("name", text[i:j]))
                i = j
            elif ch in "+-*/^()":
                toks.append((ch, ch))
                i += 1
            else:
                raise ValueError(f"bad character {ch!r} in scalar expression")
        toks.append(("end", None))
        return toks

    def peek(self):
        return self.toks[self.pos][0]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ValueError(f"expected {kind}, got {tok[0]}")
        self.pos += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek() in "+-":
            op = self.take()[0]
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self):
        node = self.power()
        while self.peek() in "*/":
            op = self.take()[0]
            rhs = self.power()
            node = node * rhs if op == "*" else node / rhs
        return node

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            k = self.take("int")[1]
            return base ** k
        return base

    def atom(self):
        kind = self.peek()
        if kind == "-":
            self.take()
            return -self.atom()
        if kind == "+":
            self.take()
            return self.atom()
        if kind == "int":
            return Scalar(self.take()[1])
        if kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if kind == "name":
            name = self.take()[1]
            if name == "sqrt":
                self.take("(")
                arg = self.expr()
                self.take(")")
                return sqrt_scalar(arg)
            if name in self.params:
                v = self.params[name]
                return v if isinstance(v, Scalar) else Scalar(v)
            raise ValueError(f"unbound parameter {name!r}")
        raise ValueError(f"unexpected token {kind}")


def parse_scalar(text, params=None):
    """Parse an exact scalar string, e.g. "2*sqrt(5)/5" or "-1/36*mu^2".

    Parameter names are resolved against `params` (a mapping to Scalars);
    an unbound name is an error -- verification runs are always numeric.
    """
    p = _Parser(text, params or {})
    out = p.expr()
    p.take("end")
    return out
