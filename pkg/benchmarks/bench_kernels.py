"""Time the compiled and pure-Python oracle kernels on the same inputs.

The compiled box scan walks every point of the box; the Python one only visits
the sphere a^2 + 1 = sum m_i^2. The compiled character scan is a plain DFS over
all sequences, while the Python one prunes dead branches and counts them in bulk.
Both report the same instance counts and solutions.
"""
import argparse
import time

from acmgon import _pykernels, kernels
from acmgon import lattice as lat
from acmgon.lattice import SurfaceKind


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bounds", type=int, nargs="+", default=[4, 5, 6])
    ap.add_argument("--lengths", type=int, nargs="+", default=[8, 10, 12])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    H = lat.hyperplane_class(SurfaceKind.CUBIC).as_tuple()
    K = lat.canonical_class(SurfaceKind.CUBIC).as_tuple()
    backends = [("python", _pykernels)]
    if kernels.compiled_backend is not None:
        backends.insert(0, ("compiled", kernels.compiled_backend))
    else:
        print("compiled kernels not built; timing the Python backend only")

    print(f"{'kernel':<22}{'size':>6}{'instances':>14}  " + "".join(f"{n:>12}" for n, _ in backends))
    for b in args.bounds:
        row, counts = [], set()
        for _, mod in backends:
            dt, (n, sols) = best_of(lambda: mod.exceptional_classes(b, H, K), args.repeat)
            row.append(dt)
            counts.add((n, len(sols)))
        assert len(counts) == 1, counts
        n = counts.pop()[0]
        print(f"{'exceptional_classes':<22}{b:>6}{n:>14}  " + "".join(f"{t:>11.4f}s" for t in row))
    for m in args.lengths:
        row, counts = [], set()
        for _, mod in backends:
            dt, (n, seqs) = best_of(lambda: mod.s0_characters(m, -1, 3, 3), args.repeat)
            row.append(dt)
            counts.add((n, len(seqs)))
        assert len(counts) == 1, counts
        n = counts.pop()[0]
        print(f"{'s0_characters':<22}{m:>6}{n:>14}  " + "".join(f"{t:>11.4f}s" for t in row))


if __name__ == "__main__":
    main()
