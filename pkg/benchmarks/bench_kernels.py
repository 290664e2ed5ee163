"""Time the numba and numpy paths of each hot kernel on representative inputs.

    python benchmarks/bench_kernels.py [--repeat 5]

The numba path is warmed up once before timing so compilation is excluded.
"""
import argparse
import time

import numpy as np

from ganseg import kernels as K


def bench(fn, args, repeat):
    fn(*args)
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t)
    return best


def cases(rng):
    grids = (rng.random((100, 9, 9)) < 0.5).astype(np.uint8)
    offsets = rng.random((100, 2))
    masks = rng.random((100, 128, 128)).astype(np.float32)
    weights = rng.random(100)
    binary = (rng.random((128, 128)) < 0.3).astype(np.uint8)
    img = rng.random((240, 240)).astype(np.float32)
    patches = rng.random((9, 128, 128))
    origins = np.array([(y, x) for y in (0, 64, 112) for x in (0, 64, 112)], dtype=np.int64)
    fp = K.disk(3)
    return [
        ("rise_masks 100x128^2", K._rise_masks_numba, K._rise_masks_numpy, (grids, offsets, 128 / 7, 128, 128)),
        ("weighted_mask_sum 100x128^2", K._weighted_mask_sum_numba, K._weighted_mask_sum_numpy, (masks, weights)),
        ("dilate r=3 128^2", K._dilate_numba, K._dilate_numpy, (binary, fp)),
        ("erode r=3 128^2", K._erode_numba, K._erode_numpy, (binary, fp)),
        ("label 8-conn 128^2", K._label_numba, K._label_numpy, (binary, True)),
        ("median 5x5 240^2", K._median_numba, K._median_numpy, (img, 5)),
        ("accumulate 9 patches", K._accumulate_patches_numba, K._accumulate_patches_numpy, (patches, origins, 240, 240)),
    ]


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    rng = np.random.default_rng(0)
    print(f"{'kernel':32s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}")
    for name, fast, slow, a in cases(rng):
        tf, ts = bench(fast, a, args.repeat), bench(slow, a, args.repeat)
        print(f"{name:32s} {tf * 1e3:10.3f} {ts * 1e3:10.3f} {ts / tf:8.2f}")


if __name__ == "__main__":
    main()
