"""Time the numba lane against the numpy fallback for the hot kernels.

The spectral transforms always run in numpy.fft, so the interesting
comparison is the fused element-wise work (phase/decay application, density,
moments) plus a composed split step at realistic grid sizes.

Usage:
    python3 benchmarks/bench_kernels.py [--sizes 4096,16384,65536] [--repeats 200]
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from sncausal import accel


def state(n: int, seed: int = 1):
    rng = np.random.default_rng(seed)
    psi = (rng.standard_normal(n) + 1j * rng.standard_normal(n)).astype(np.complex128)
    pot = rng.standard_normal(n)
    rho = np.abs(psi) ** 2
    return psi, pot, rho


def composed_step(impl, psi, pot, kin, dt):
    """The element-wise + FFT shape of one Strang step (no self-potential)."""
    out = impl["phase_apply"](psi, pot, -0.5 * dt)
    out = np.fft.ifft(kin * np.fft.fft(out))
    rho = impl["density"](out)
    out = impl["phase_apply"](out, pot, -0.5 * dt)
    return out, rho


def best_of(fn, repeats: int) -> float:
    """Median of per-call times over `repeats` calls (seconds)."""
    times = timeit.repeat(fn, number=1, repeat=repeats)
    return float(np.median(times))


def bench(sizes, repeats):
    lanes = {"numpy": accel.NUMPY_IMPL}
    if accel.NUMBA_AVAILABLE:
        lanes["numba"] = accel.NUMBA_IMPL
    else:
        print("numba not importable; benchmarking the numpy lane only\n")

    header = f"{'kernel':<14}{'n':>8}" + "".join(f"{lane:>12}" for lane in lanes)
    if len(lanes) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for n in sizes:
        psi, pot, rho = state(n)
        kin = np.exp(-0.5j * np.linspace(-3, 3, n) ** 2 * 0.005)
        cases = {
            "phase_apply": lambda impl: impl["phase_apply"](psi, pot, -0.0025),
            "decay_apply": lambda impl: impl["decay_apply"](psi, pot, -0.005),
            "density": lambda impl: impl["density"](psi),
            "moments": lambda impl: impl["moments"](rho, -30.0, 0.01),
            "composed_step": lambda impl: composed_step(impl, psi, pot, kin, 0.005),
        }
        for name, call in cases.items():
            per_lane = {}
            for lane, impl in lanes.items():
                call(impl)  # warm up (JIT compile on the numba lane)
                per_lane[lane] = best_of(lambda: call(impl), repeats)
            row = f"{name:<14}{n:>8}"
            for lane in lanes:
                row += f"{per_lane[lane] * 1e6:>10.1f}us"
            if len(per_lane) == 2:
                row += f"{per_lane['numpy'] / per_lane['numba']:>9.2f}x"
            print(row)
        print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="4096,16384,65536",
                        help="comma-separated grid sizes")
    parser.add_argument("--repeats", type=int, default=200,
                        help="calls per timing (median reported)")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    print(f"active backend: {accel.active_backend()}\n")
    bench(sizes, args.repeats)


if __name__ == "__main__":
    main()
