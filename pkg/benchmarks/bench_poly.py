"""Benchmark the compiled polynomial kernel against the pure-Python fallback.

Two views:
  * microbenchmarks of poly_mulmod at the coefficient sizes the Haagerup
    computations actually use (phi(13) = 12, phi(39) = 24, phi(156) = 48);
  * an end-to-end run (Verlinde + braid-generator report for the rank-12
    fixture) in a subprocess per backend, since the kernel is chosen at
    import time.

Usage: python benchmarks/bench_poly.py
"""

import os
import random
import subprocess
import sys
import time

from mtckit import _poly_py
from mtckit.cyclo import cyclotomic_polynomial

try:
    from mtckit import _speedups
except ImportError:
    _speedups = None

END_TO_END = """
import time
import mtckit
from mtckit import dataio, spectra
t0 = time.monotonic()
md = dataio.catalog("haagerup-center")
fr = dataio.catalog_ring("haagerup-center")
rep = spectra.sigma_spectrum_n2(md, fr, md.index_of("x6"))
t1 = time.monotonic()
print(f"{mtckit.kernel_backend}: catalog+verlinde+sigma report {t1-t0:.3f}s")
"""


def micro(order: int, reps: int, rng: random.Random):
    mod = cyclotomic_polynomial(order)
    deg = len(mod) - 1
    pairs = [
        (
            [rng.randint(-999, 999) for _ in range(deg)],
            [rng.randint(-999, 999) for _ in range(deg)],
        )
        for _ in range(reps)
    ]
    rows = []
    for name, impl in (("python", _poly_py), ("compiled", _speedups)):
        if impl is None:
            continue
        start = time.perf_counter()
        for a, b in pairs:
            impl.poly_mulmod(list(a), list(b), mod)
        elapsed = time.perf_counter() - start
        rows.append((name, elapsed))
    base = rows[0][1]
    for name, elapsed in rows:
        speedup = f"  ({base / elapsed:.1f}x)" if name != "python" else ""
        print(f"  phi({order})={deg:3d}  {name:9s} {elapsed * 1e6 / reps:9.1f} us/op{speedup}")


def main():
    rng = random.Random(0)
    print("poly_mulmod microbenchmark")
    for order, reps in ((13, 4000), (39, 2000), (156, 600)):
        micro(order, reps, rng)
    print("\nend to end (fresh process per backend)", flush=True)
    for pure in ("1", ""):
        env = dict(os.environ)
        if pure:
            env["MTCKIT_PURE"] = pure
        else:
            env.pop("MTCKIT_PURE", None)
        subprocess.run([sys.executable, "-c", END_TO_END], env=env, check=True)


if __name__ == "__main__":
    main()
