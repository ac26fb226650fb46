"""Compiled kernel vs pure-Python fallback: coupling-sampler throughput.

Run with ``python3 benchmarks/bench_kernels.py [--samples N]``.  Both
backends draw from the same streams, so the benchmark also checks that
they return identical records.
"""

import argparse
import time

from coupling_barrier import engine
from coupling_barrier import potentials as pot

CASES = [
    ("double_well_1d", pot.DoubleWell1D(), engine.InitCondition(x0=(1.0,), y0=(-1.0,)), 1.0),
    ("lehmer k=4", pot.LehmerQuadratic(4), engine.InitCondition(x0=(1.0,) * 4, y0=(-1.0,) * 4), 1.0),
    ("particles sigma=0.05", pot.InteractingParticles(3, 0.05),
     engine.InitCondition(x0=(1.0,) * 3, y0=(-1.0,) * 3), 1.0),
]


def _time(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--max-time", type=float, default=20.0)
    args = ap.parse_args(argv)
    if engine.backend() != "compiled":
        raise SystemExit("compiled kernel not built; run `pip install --no-build-isolation -e .`")
    print(f"{'case':<22}{'steps':>10}{'compiled ns/step':>18}{'python ns/step':>16}{'speed-up':>10}")
    for name, spec, init, eps in CASES:
        params = engine.SimParams(epsilon=eps, max_time=args.max_time, seed=1)
        fast, tf = _time(lambda: [engine.sample_coupling_time(spec, params, init, index=i)
                                  for i in range(args.samples)])
        slow, ts = _time(lambda: [engine.sample_coupling_time(spec, params, init, index=i,
                                                              force_python=True)
                                  for i in range(args.samples)])
        if fast != slow:
            raise SystemExit(f"{name}: backends disagree")
        steps = sum(r.steps for r in fast)
        print(f"{name:<22}{steps:>10}{1e9 * tf / steps:>18.1f}{1e9 * ts / steps:>16.1f}"
              f"{ts / tf:>10.1f}")


if __name__ == "__main__":
    main()
