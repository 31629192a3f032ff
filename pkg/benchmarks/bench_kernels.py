"""Time the numba kernels against their pure-numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Shapes follow the default models: a 16-channel 3x3 conv block on a batch of
256 MNIST digits, 2x2 pooling on its output, Adam on the 4.0M-entry W2 of
FC-IFFNN-MC, and INBEN pattern matching on 4096 x 1000 bits.  Each result is
checked bit for bit against the other path before timing.
"""

import argparse
import time

import numpy as np

from iffnn import _kernels as K


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(rng):
    x = rng.normal(size=(256, 1, 28, 28))
    col = K.NUMPY_KERNELS["im2col"](x, 3, 3, 1, 1)
    conv_out = rng.normal(size=(256, 16, 28, 28))
    pooled, arg = K.NUMPY_KERNELS["maxpool"](conv_out, 2, 2)
    gpool = rng.normal(size=pooled.shape)
    n = 7840 * 512
    adam = [rng.normal(size=n), rng.normal(size=n), rng.normal(size=n), np.abs(rng.normal(size=n))]
    bits = (rng.random((4096, 1000)) < 0.06).astype(np.uint8)
    lengths = rng.integers(2, 6, size=45)
    indptr = np.concatenate([[0], np.cumsum(lengths)])
    indices = np.concatenate([np.sort(rng.choice(1000, size=k, replace=False)) for k in lengths])
    gcol = rng.normal(size=col.shape)

    def adam_call(kernels):
        p, g, m, v = (a.copy() for a in adam)
        kernels["adam_update"](p, g, m, v, 1e-3, 0.9, 0.999, 0.1, 0.001, 1e-8)
        return p, m, v

    return {
        "im2col (256,1,28,28) k3": lambda k: k["im2col"](x, 3, 3, 1, 1),
        "col2im (256,1,28,28) k3": lambda k: k["col2im"](gcol, x.shape, 3, 3, 1, 1),
        "maxpool 2x2 (256,16,28,28)": lambda k: k["maxpool"](conv_out, 2, 2),
        "maxpool backward": lambda k: k["maxpool_backward"](gpool, arg, conv_out.shape),
        "adam update 4.0M": adam_call,
        "match patterns 4096x1000": lambda k: k["match_patterns"](bits, indptr, indices),
    }


def _bytes(result):
    if isinstance(result, tuple):
        return b"".join(np.ascontiguousarray(r).tobytes() for r in result)
    return np.ascontiguousarray(result).tobytes()


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if not K.NUMBA_KERNELS:
        raise SystemExit("numba is not importable; nothing to compare")
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':30s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}  identical")
    for name, call in cases(rng).items():
        same = _bytes(call(K.NUMPY_KERNELS)) == _bytes(call(K.NUMBA_KERNELS))  # also warms the jit
        t_np = _best(lambda: call(K.NUMPY_KERNELS), args.repeat)
        t_nb = _best(lambda: call(K.NUMBA_KERNELS), args.repeat)
        print(f"{name:30s} {1e3 * t_np:10.2f} {1e3 * t_nb:10.2f} {t_np / t_nb:8.2f}  {same}")


if __name__ == "__main__":
    main()
