"""Backend benchmark: the same exact workloads under gmpy2 and fractions.

The hot kernels are rational arithmetic inside polynomial curvature and
sparse Clifford products; gmpy2.mpq is the compiled fast path and
fractions.Fraction the pure-Python fallback, selected at import time,
so the comparison runs each backend in a subprocess.
"""

import os
import subprocess
import sys
import time


def workload():
    from .catalog import get_background, verify_background, susy_count, \
        enumerate_parallelisable
    from .sugra import supercovariant_flatness
    t0 = time.time()
    b = get_background("cw11")
    verify_background(b)
    t1 = time.time()
    rep, dim, basis, alg = supercovariant_flatness(get_background("cw10"))
    t2 = time.time()
    prods = [p for p in enumerate_parallelisable(10)]
    for p in prods[:4]:
        from .catalog import solve_dilaton
        if solve_dilaton(p).accepted:
            susy_count(p, "nonconstant")
    t3 = time.time()
    return {"cw11 full verification": t1 - t0,
            "cw10 supercovariant flatness": t2 - t1,
            "susy counts (4 products)": t3 - t2}


def run(args=None):
    results = {}
    for backend in ("gmpy2", "fractions"):
        env = dict(os.environ)
        env["SUGRAVERIFY_RATIONAL_BACKEND"] = backend
        out = subprocess.run(
            [sys.executable, "-c",
             "from sugraverify._bench import workload; import json; "
             "print(json.dumps(workload()))"],
            env=env, capture_output=True, text=True)
        if out.returncode != 0:
            print(f"{backend}: failed\n{out.stderr}", file=sys.stderr)
            return 1
        import json
        results[backend] = json.loads(out.stdout.strip().splitlines()[-1])
    names = list(next(iter(results.values())))
    width = max(len(n) for n in names)
    print(f"{'workload'.ljust(width)}  {'gmpy2':>10}  {'fractions':>10}")
    for n in names:
        print(f"{n.ljust(width)}  {results['gmpy2'][n]:>9.3f}s "
              f"{results['fractions'][n]:>9.3f}s")
    return 0
