"""Compare the compiled and pure-Python word kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--end-to-end]

Each kernel runs on the same inputs under every importable backend; the
outputs are checked for equality before timings are reported.  With
``--end-to-end`` the Nichols dimension computation is also timed in two
subprocesses, one of them forced onto the fallback.
"""

import argparse
import os
import subprocess
import sys
import timeit

from pointedq.kernels import backends

CASES = [
    ("pairing A2 len 6", "pairing_table", ((0, 0, 0, 1, 1, 1), (1, 0, 1, 0, 1, 0), 2)),
    ("pairing A2 len 8", "pairing_table", ((0, 0, 0, 0, 1, 1, 1, 1), (1, 0, 1, 0, 1, 0, 1, 0), 2)),
    ("pairing rank3 len 8", "pairing_table", ((0, 0, 1, 1, 2, 2, 0, 1), (2, 1, 0, 2, 1, 0, 1, 0), 3)),
    ("shuffle len 8 m=4", "shuffle_splits", ((0, 1, 0, 1, 1, 0, 0, 1), 4, 2)),
    ("shuffle len 10 m=5", "shuffle_splits", ((0, 1, 2, 0, 1, 2, 0, 1, 2, 0), 5, 3)),
]

END_TO_END = "from pointedq.braiding import BraidingMatrix as B; from pointedq.freealg import nichols_dims; " \
    "print(nichols_dims(B.parse([['q','q^-1'],['q^-1','q^2']], ['q']), {N}))"


def bench(repeat: int) -> None:
    found = backends()
    names = sorted(found)
    print(f"{'case':<22}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn, args in CASES:
        results = {n: getattr(found[n], fn)(*args) for n in names}
        first = results[names[0]]
        if any(r != first for r in results.values()):
            raise SystemExit(f"backends disagree on {label}")
        times = {}
        for n in names:
            f = getattr(found[n], fn)
            loops, _ = timeit.Timer(lambda: f(*args)).autorange()
            best = min(timeit.repeat(lambda: f(*args), number=loops, repeat=repeat))
            times[n] = best / loops
        row = f"{label:<22}" + "".join(f"{times[n] * 1e3:>10.3f}ms" for n in names)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:>11.1f}x"
        print(row)


def end_to_end(N: int) -> None:
    code = END_TO_END.format(N=N)
    for label, extra in (("default", {}), ("pure-python", {"POINTEDQ_PURE_PYTHON": "1"})):
        env = dict(os.environ, **extra)
        start = timeit.default_timer()
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        print(f"nichols_dims(B2, {N}) {label:<12} {timeit.default_timer() - start:7.2f} s  {out.stdout.strip()}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--end-to-end", action="store_true")
    p.add_argument("--degree", type=int, default=6)
    args = p.parse_args()
    bench(args.repeat)
    if args.end_to_end:
        end_to_end(args.degree)


if __name__ == "__main__":
    main()
