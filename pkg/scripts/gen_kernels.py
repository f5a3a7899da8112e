"""Generate the GEMM loop variants and the unrolled blocked sub-kernels.

Writing 18 loop nests and a 64-accumulator tile by hand invites typos, so the
source is produced here and committed.  Regenerate with::

    python scripts/gen_kernels.py > src/jnt/kernels/_gemm_variants.py
"""
import sys

ORDERS = ("ijk", "kij", "ikj")
INDEXINGS = ("nested", "1d")
UNROLLS = (1, 4, 8)
TILES = (2, 4, 8)
BOUNDS = {"i": "l", "j": "m", "k": "n"}


def _indent(lines, depth):
    return ["    " * depth + line for line in lines]


def _unrolled(var, lo, hi, unroll, body, depth, tail_first=False):
    """Loop over ``var`` in [lo, hi) with ``body(offset_expr)`` replicated ``unroll`` times."""
    if unroll == 1:
        head = f"range({hi})" if lo == "0" else f"range({lo}, {hi})"
        return _indent([f"for {var} in {head}:"], depth) + _indent(body(var), depth + 1)
    span = hi if lo == "0" else f"({hi} - {lo})"
    out = _indent([f"body = {hi} - {span} % {unroll}"], depth)
    main = _indent([f"for {var} in range({lo}, body, {unroll}):"], depth)
    for u in range(unroll):
        expr = var if u == 0 else f"{var} + {u}"
        main += _indent(body(expr), depth + 1)
    tail = _indent([f"for {var} in range(body, {hi}):"], depth) + _indent(body(var), depth + 1)
    return out + (tail + main if tail_first else main + tail)


def _paren(expr):
    return f"({expr})" if "+" in expr else expr


def gemm_variant(order, indexing, unroll):
    name = f"gemm_{order}_{indexing}_u{unroll}"
    lines = ["@njit(cache=True)", f"def {name}(a, b, c, l, m, n):"]
    body = []
    if indexing == "nested":
        body += [
            "a2 = a.reshape((l, n))",
            "b2 = b.reshape((n, m))",
            "c2 = c.reshape((l, m))",
        ]

        def stmt(i, j, k):
            return [f"c2[{i}, {j}] += a2[{i}, {k}] * b2[{k}, {j}]"]

        outer, middle, inner = order
        body += [f"for {outer} in range({BOUNDS[outer]}):"]
        body += _indent([f"for {middle} in range({BOUNDS[middle]}):"], 1)
        body += _unrolled(
            inner,
            "0",
            BOUNDS[inner],
            unroll,
            lambda e: stmt(*(e if v == inner else v for v in "ijk")),
            2,
        )
    elif order == "ijk":
        body += ["for i in range(l):"]
        body += _indent(["ai = i * n", "ci = i * m", "for j in range(m):"], 1)
        body += _indent(["s = c[ci + j]"], 2)
        body += _unrolled("k", "0", "n", unroll, lambda e: [f"s += a[ai + {e}] * b[{_paren(e)} * m + j]"], 2)
        body += _indent(["c[ci + j] = s"], 2)
    else:
        row = ["ci = i * m", "aik = a[i * n + k]"]
        inner = _unrolled("j", "0", "m", unroll, lambda e: [f"c[ci + {e}] += aik * b[bk + {e}]"], 0)
        if order == "kij":
            body += ["for k in range(n):"]
            body += _indent(["bk = k * m", "for i in range(l):"], 1)
            body += _indent(row + inner, 2)
        else:
            body += ["for i in range(l):"]
            body += _indent(["ci = i * m", "for k in range(n):"], 1)
            body += _indent(["aik = a[i * n + k]", "bk = k * m"] + inner, 2)
    return lines + _indent(body, 1)


def tile_kernel(size):
    """Fully unrolled size x size sub-block with one local accumulator per C entry."""
    cells = [(r, s) for r in range(size) for s in range(size)]
    lines = ["@njit(cache=True)", f"def tile{size}(a, b, c, n, m, i0, j0, k0, k1):"]
    body = []
    for r in range(size):
        body.append(f"r{r} = (i0 + {r}) * m + j0")
    for r, s in cells:
        body.append(f"c{r}_{s} = c[r{r} + {s}]")
    for r in range(size):
        body.append(f"ar{r} = (i0 + {r}) * n")
    body.append("for k in range(k0, k1):")
    inner = ["bk = k * m + j0"]
    inner += [f"a{r} = a[ar{r} + k]" for r in range(size)]
    inner += [f"b{s} = b[bk + {s}]" for s in range(size)]
    inner += [f"c{r}_{s} += a{r} * b{s}" for r, s in cells]
    body += _indent(inner, 1)
    for r, s in cells:
        body.append(f"c[r{r} + {s}] = c{r}_{s}")
    return lines + _indent(body, 1)


HEADER = '''"""GEMM loop-order variants and unrolled tiles (generated by scripts/gen_kernels.py).

Arrays are flat row-major: A is l x n, B is n x m, C is l x m; every kernel
computes C += A*B.  Each C entry receives its n addends in increasing k order.
"""
from numba import njit
'''


def main(out=sys.stdout):
    out.write(HEADER)
    names = []
    for order in ORDERS:
        for indexing in INDEXINGS:
            for unroll in UNROLLS:
                names.append((order, indexing, unroll))
                out.write("\n\n" + "\n".join(gemm_variant(order, indexing, unroll)) + "\n")
    for size in TILES:
        out.write("\n\n" + "\n".join(tile_kernel(size)) + "\n")
    out.write("\n\nVARIANTS = {\n")
    for order, indexing, unroll in names:
        out.write(f'    ("{order}", "{indexing}", {unroll}): gemm_{order}_{indexing}_u{unroll},\n')
    out.write("}\n")
    out.write("\nTILES = {" + ", ".join(f"{s}: tile{s}" for s in TILES) + "}\n")


if __name__ == "__main__":
    main()
