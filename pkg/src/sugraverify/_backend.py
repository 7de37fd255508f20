"""Rational arithmetic backend.

Every scalar in the package bottoms out in exact rational arithmetic.  Two
interchangeable backends are supported: gmpy2.mpq (compiled, fast) and
fractions.Fraction (pure Python).  The choice is made once at import time;
set SUGRAVERIFY_RATIONAL_BACKEND=fractions|gmpy2 to force one.  Both expose
.numerator/.denominator and print as "p/q", which the rest of the package
relies on.
"""

import os

_requested = os.environ.get("SUGRAVERIFY_RATIONAL_BACKEND", "auto")

if _requested in ("auto", "gmpy2"):
    try:
        from gmpy2 import mpq as RAT
        BACKEND_NAME = "gmpy2"
    except ImportError:
        if _requested == "gmpy2":
            raise
        from fractions import Fraction as RAT
        BACKEND_NAME = "fractions"
elif _requested == "fractions":
    from fractions import Fraction as RAT
    BACKEND_NAME = "fractions"
else:
    raise ValueError(f"unknown rational backend {_requested!r}")

RAT_ZERO = RAT(0)
RAT_ONE = RAT(1)


def rat(n, d=1):
    """Exact rational from integers (or from another rational)."""
    return RAT(n, d) if d != 1 else RAT(n)
