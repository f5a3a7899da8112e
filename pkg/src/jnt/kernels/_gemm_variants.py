"""GEMM loop-order variants and unrolled tiles (generated by scripts/gen_kernels.py).

Arrays are flat row-major: A is l x n, B is n x m, C is l x m; every kernel
computes C += A*B.  Each C entry receives its n addends in increasing k order.
"""
from numba import njit


@njit(cache=True)
def gemm_ijk_nested_u1(a, b, c, l, m, n):
    a2 = a.reshape((l, n))
    b2 = b.reshape((n, m))
    c2 = c.reshape((l, m))
    for i in range(l):
        for j in range(m):
            for k in range(n):
                c2[i, j] += a2[i, k] * b2[k, j]


@njit(cache=True)
def gemm_ijk_nested_u4(a, b, c, l, m, n):
    a2 = a.reshape((l, n))
    b2 = b.reshape((n, m))
    c2 = c.reshape((l, m))
    for i in range(l):
        for j in range(m):
            body = n - n % 4
            for k in range(0, body, 4):
                c2[i, j] += a2[i, k] * b2[k, j]
                c2[i, j] += a2[i, k + 1] * b2[k + 1, j]
                c2[i, j] += a2[i, k + 2] * b2[k + 2, j]
                c2[i, j] += a2[i, k + 3] * b2[k + 3, j]
            for k in range(body, n):
                c2[i, j] += a2[i, k] * b2[k, j]


@njit(cache=True)
def gemm_ijk_nested_u8(a, b, c, l, m, n):
    a2 = a.reshape((l, n))
    b2 = b.reshape((n, m))
    c2 = c.reshape((l, m))
    for i in range(l):
        for j in range(m):
            body = n - n % 8
            for k in range(0, body, 8):
                c2[i, j] += a2[i, k] * b2[k, j]
                c2[i, j] += a2[i, k + 1] * b2[k + 1, j]
                c2[i, j] += a2[i, k + 2] * b2[k + 2, j]
                c2[i, j] += a2[i, k + 3] * b2[k + 3, j]
                c2[i, j] += a2[i, k + 4] * b2[k + 4, j]
                c2[i, j] += a2[i, k + 5] * b2[k + 5, j]
                c2[i, j] += a2[i, k + 6] * b2[k + 6, j]
                c2[i, j] += a2[i, k + 7] * b2[k + 7, j]
            for k in range(body, n):
                c2[i, j] += a2[i, k] * b2[k, j]


@njit(cache=True)
def gemm_ijk_1d_u1(a, b, c, l, m, n):
    for i in range(l):
        ai = i * n
        ci = i * m
        for j in range(m):
            s = c[ci + j]
            for k in range(n):
                s += a[ai + k] * b[k * m + j]
            c[ci + j] = s


@njit(cache=True)
def gemm_ijk_1d_u4(a, b, c, l, m, n):
    for i in range(l):
        ai = i * n
        ci = i * m
        for j in range(m):
            s = c[ci + j]
            body = n - n % 4
            for k in range(0, body, 4):
                s += a[ai + k] * b[k * m + j]
                s += a[ai + k + 1] * b[(k + 1) * m + j]
                s += a[ai + k + 2] * b[(k + 2) * m + j]
                s += a[ai + k + 3] * b[(k + 3) * m + j]
            for k in range(body, n):
                s += a[ai + k] * b[k * m + j]
            c[ci + j] = s


@njit(cache=True)
def gemm_ijk_1d_u8(a, b, c, l, m, n):
    for i in range(l):
        ai = i * n
        ci = i * m
        for j in range(m):
            s = c[ci + j]
            body = n - n % 8
            for k in range(0, body, 8):
                s += a[ai + k] * b[k * m + j]
                s += a[ai + k + 1] * b[(k + 1) * m + j]
                s += a[ai + k + 2] * b[(k + 2) * m + j]
                s += a[ai + k + 3] * b[(k + 3) * m + j]
                s += a[ai + k + 4] * b[(k + 4) * m + j]
                s += a[ai + k + 5] * b[(k + 5) * m + j]
                s += a[ai + k + 6] * b[(k + 6) * m + j]
                s += a[ai + k + 7] * b[(k + 7) * m + j]
            for k in range(body, n):
                s += a[ai + k] * b[k * m + j]
            c[ci + j] = s


@njit(cache=True)
def gemm_kij_nested_u1(a, b, c, l, m, n):
    a2 = a.reshape((l, n))
    b2 = b.reshape((n, m))
    c2 = c.reshape((l, m))
    for k in range(n):
        for i in range(l):
            for j in range(m):
                c2[i, j] += a2[i, k] * b2[k, j]


@njit(cache=True)
def gemm_kij_nested_u4(a, b, c, l, m, n):
    a2 = a.reshape((l, n))
    b2 = b.reshape((n, m))
    c2 = c.reshape((l, m))
    for k in range(n):
        for i in range(l):
            body = m - m % 4
            for j in range(0, body, 4):
                c2[i, j] += a2[i, k] * b2[k, j]
                c2[i, j + 1] += a2[i, k] * b2[k, j + 1]
                c2[i, j + 2] += a2[i, k] * b2[k, j + 2]
                c2[i, j + 3] += a2[i, k] * b2[k, j + 3]
            for j in range(body, m):
                c2[i, j] += a2[i, k] * b2[k, j]


@njit(cache=True)
def gemm_kij_nested_u8(a, b, c, l, m, n):
    a2 = a.reshape((l, n))
    b2 = b.reshape((n, m))
    c2 = c.reshape((l, m))
    for k in range(n):
        for i in range(l):
            body = m - m % 8
            for j in range(0, body, 8):
                c2[i, j] += a2[i, k] * b2[k, j]
                c2[i, j + 1] += a2[i, k] * b2[k, j + 1]
                c2[i, j + 2] += a2[i, k] * b2[k, j + 2]
                c2[i, j + 3] += a2[i, k] * b2[k, j + 3]
                c2[i, j + 4] += a2[i, k] * b2[k, j + 4]
                c2[i, j + 5] += a2[i, k] * b2[k, j + 5]
                c2[i, j + 6] += a2[i, k] * b2[k, j + 6]
                c2[i, j + 7] += a2[i, k] * b2[k, j + 7]
            for j in range(body, m):
                c2[i, j] += a2[i, k] * b2[k, j]


@njit(cache=True)
def gemm_kij_1d_u1(a, b, c, l, m, n):
    for k in range(n):
        bk = k * m
        for i in range(l):
            ci = i * m
            aik = a[i * n + k]
            for j in range(m):
                c[ci + j] += aik * b[bk + j]


@njit(cache=True)
def gemm_kij_1d_u4(a, b, c, l, m, n):
    for k in range(n):
        bk = k * m
        for i in range(l):
            ci = i * m
            aik = a[i * n + k]
            body = m - m % 4
            for j in range(0, body, 4):
                c[ci + j] += aik * b[bk + j]
                c[ci + j + 1] += aik * b[bk + j + 1]
                c[ci + j + 2] += aik * b[bk + j + 2]
                c[ci + j + 3] += aik * b[bk + j + 3]
            for j in range(body, m):
                c[ci + j] += aik * b[bk + j]


@njit(cache=True)
def gemm_kij_1d_u8(a, b, c, l, m, n):
    for k in range(n):
        bk = k * m
        for i in range(l):
            ci = i * m
            aik = a[i * n + k]
            body = m - m % 8
            for j in range(0, body, 8):
                c[ci + j] += aik * b[bk + j]
                c[ci + j + 1] += aik * b[bk + j + 1]
                c[ci + j + 2] += aik * b[bk + j + 2]
                c[ci + j + 3] += aik * b[bk + j + 3]
                c[ci + j + 4] += aik * b[bk + j + 4]
                c[ci + j + 5] += aik * b[bk + j + 5]
                c[ci + j + 6] += aik * b[bk + j + 6]
                c[ci + j + 7] += aik * b[bk + j + 7]
            for j in range(body, m):
                c[ci + j] += aik * b[bk + j]


@njit(cache=True)
def gemm_ikj_nested_u1(a, b, c, l, m, n):
    a2 = a.reshape((l, n))
    b2 = b.reshape((n, m))
    c2 = c.reshape((l, m))
    for i in range(l):
        for k in range(n):
            for j in range(m):
                c2[i, j] += a2[i, k] * b2[k, j]


@njit(cache=True)
def gemm_ikj_nested_u4(a, b, c, l, m, n):
    a2 = a.reshape((l, n))
    b2 = b.reshape((n, m))
    c2 = c.reshape((l, m))
    for i in range(l):
        for k in range(n):
            body = m - m % 4
            for j in range(0, body, 4):
                c2[i, j] += a2[i, k] * b2[k, j]
                c2[i, j + 1] += a2[i, k] * b2[k, j + 1]
                c2[i, j + 2] += a2[i, k] * b2[k, j + 2]
                c2[i, j + 3] += a2[i, k] * b2[k, j + 3]
            for j in range(body, m):
                c2[i, j] += a2[i, k] * b2[k, j]


@njit(cache=True)
def gemm_ikj_nested_u8(a, b, c, l, m, n):
    a2 = a.reshape((l, n))
    b2 = b.reshape((n, m))
    c2 = c.reshape((l, m))
    for i in range(l):
        for k in range(n):
            body = m - m % 8
            for j in range(0, body, 8):
                c2[i, j] += a2[i, k] * b2[k, j]
                c2[i, j + 1] += a2[i, k] * b2[k, j + 1]
                c2[i, j + 2] += a2[i, k] * b2[k, j + 2]
                c2[i, j + 3] += a2[i, k] * b2[k, j + 3]
                c2[i, j + 4] += a2[i, k] * b2[k, j + 4]
                c2[i, j + 5] += a2[i, k] * b2[k, j + 5]
                c2[i, j + 6] += a2[i, k] * b2[k, j + 6]
                c2[i, j + 7] += a2[i, k] * b2[k, j + 7]
            for j in range(body, m):
                c2[i, j] += a2[i, k] * b2[k, j]


@njit(cache=True)
def gemm_ikj_1d_u1(a, b, c, l, m, n):
    for i in range(l):
        ci = i * m
        for k in range(n):
            aik = a[i * n + k]
            bk = k * m
            for j in range(m):
                c[ci + j] += aik * b[bk + j]


@njit(cache=True)
def gemm_ikj_1d_u4(a, b, c, l, m, n):
    for i in range(l):
        ci = i * m
        for k in range(n):
            aik = a[i * n + k]
            bk = k * m
            body = m - m % 4
            for j in range(0, body, 4):
                c[ci + j] += aik * b[bk + j]
                c[ci + j + 1] += aik * b[bk + j + 1]
                c[ci + j + 2] += aik * b[bk + j + 2]
                c[ci + j + 3] += aik * b[bk + j + 3]
            for j in range(body, m):
                c[ci + j] += aik * b[bk + j]


@njit(cache=True)
def gemm_ikj_1d_u8(a, b, c, l, m, n):
    for i in range(l):
        ci = i * m
        for k in range(n):
            aik = a[i * n + k]
            bk = k * m
            body = m - m % 8
            for j in range(0, body, 8):
                c[ci + j] += aik * b[bk + j]
                c[ci + j + 1] += aik * b[bk + j + 1]
                c[ci + j + 2] += aik * b[bk + j + 2]
                c[ci + j + 3] += aik * b[bk + j + 3]
                c[ci + j + 4] += aik * b[bk + j + 4]
                c[ci + j + 5] += aik * b[bk + j + 5]
                c[ci + j + 6] += aik * b[bk + j + 6]
                c[ci + j + 7] += aik * b[bk + j + 7]
            for j in range(body, m):
                c[ci + j] += aik * b[bk + j]


@njit(cache=True)
def tile2(a, b, c, n, m, i0, j0, k0, k1):
    r0 = (i0 + 0) * m + j0
    r1 = (i0 + 1) * m + j0
    c0_0 = c[r0 + 0]
    c0_1 = c[r0 + 1]
    c1_0 = c[r1 + 0]
    c1_1 = c[r1 + 1]
    ar0 = (i0 + 0) * n
    ar1 = (i0 + 1) * n
    for k in range(k0, k1):
        bk = k * m + j0
        a0 = a[ar0 + k]
        a1 = a[ar1 + k]
        b0 = b[bk + 0]
        b1 = b[bk + 1]
        c0_0 += a0 * b0
        c0_1 += a0 * b1
        c1_0 += a1 * b0
        c1_1 += a1 * b1
    c[r0 + 0] = c0_0
    c[r0 + 1] = c0_1
    c[r1 + 0] = c1_0
    c[r1 + 1] = c1_1


@njit(cache=True)
def tile4(a, b, c, n, m, i0, j0, k0, k1):
    r0 = (i0 + 0) * m + j0
    r1 = (i0 + 1) * m + j0
    r2 = (i0 + 2) * m + j0
    r3 = (i0 + 3) * m + j0
    c0_0 = c[r0 + 0]
    c0_1 = c[r0 + 1]
    c0_2 = c[r0 + 2]
    c0_3 = c[r0 + 3]
    c1_0 = c[r1 + 0]
    c1_1 = c[r1 + 1]
    c1_2 = c[r1 + 2]
    c1_3 = c[r1 + 3]
    c2_0 = c[r2 + 0]
    c2_1 = c[r2 + 1]
    c2_2 = c[r2 + 2]
    c2_3 = c[r2 + 3]
    c3_0 = c[r3 + 0]
    c3_1 = c[r3 + 1]
    c3_2 = c[r3 + 2]
    c3_3 = c[r3 + 3]
    ar0 = (i0 + 0) * n
    ar1 = (i0 + 1) * n
    ar2 = (i0 + 2) * n
    ar3 = (i0 + 3) * n
    for k in range(k0, k1):
        bk = k * m + j0
        a0 = a[ar0 + k]
        a1 = a[ar1 + k]
        a2 = a[ar2 + k]
        a3 = a[ar3 + k]
        b0 = b[bk + 0]
        b1 = b[bk + 1]
        b2 = b[bk + 2]
        b3 = b[bk + 3]
        c0_0 += a0 * b0
        c0_1 += a0 * b1
        c0_2 += a0 * b2
        c0_3 += a0 * b3
        c1_0 += a1 * b0
        c1_1 += a1 * b1
        c1_2 += a1 * b2
        c1_3 += a1 * b3
        c2_0 += a2 * b0
        c2_1 += a2 * b1
        c2_2 += a2 * b2
        c2_3 += a2 * b3
        c3_0 += a3 * b0
        c3_1 += a3 * b1
        c3_2 += a3 * b2
        c3_3 += a3 * b3
    c[r0 + 0] = c0_0
    c[r0 + 1] = c0_1
    c[r0 + 2] = c0_2
    c[r0 + 3] = c0_3
    c[r1 + 0] = c1_0
    c[r1 + 1] = c1_1
    c[r1 + 2] = c1_2
    c[r1 + 3] = c1_3
    c[r2 + 0] = c2_0
    c[r2 + 1] = c2_1
    c[r2 + 2] = c2_2
    c[r2 + 3] = c2_3
    c[r3 + 0] = c3_0
    c[r3 + 1] = c3_1
    c[r3 + 2] = c3_2
    c[r3 + 3] = c3_3


@njit(cache=True)
def tile8(a, b, c, n, m, i0, j0, k0, k1):
    r0 = (i0 + 0) * m + j0
    r1 = (i0 + 1) * m + j0
    r2 = (i0 + 2) * m + j0
    r3 = (i0 + 3) * m + j0
    r4 = (i0 + 4) * m + j0
    r5 = (i0 + 5) * m + j0
    r6 = (i0 + 6) * m + j0
    r7 = (i0 + 7) * m + j0
    c0_0 = c[r0 + 0]
    c0_1 = c[r0 + 1]
    c0_2 = c[r0 + 2]
    c0_3 = c[r0 + 3]
    c0_4 = c[r0 + 4]
    c0_5 = c[r0 + 5]
    c0_6 = c[r0 + 6]
    c0_7 = c[r0 + 7]
    c1_0 = c[r1 + 0]
    c1_1 = c[r1 + 1]
    c1_2 = c[r1 + 2]
    c1_3 = c[r1 + 3]
    c1_4 = c[r1 + 4]
    c1_5 = c[r1 + 5]
    c1_6 = c[r1 + 6]
    c1_7 = c[r1 + 7]
    c2_0 = c[r2 + 0]
    c2_1 = c[r2 + 1]
    c2_2 = c[r2 + 2]
    c2_3 = c[r2 + 3]
    c2_4 = c[r2 + 4]
    c2_5 = c[r2 + 5]
    c2_6 = c[r2 + 6]
    c2_7 = c[r2 + 7]
    c3_0 = c[r3 + 0]
    c3_1 = c[r3 + 1]
    c3_2 = c[r3 + 2]
    c3_3 = c[r3 + 3]
    c3_4 = c[r3 + 4]
    c3_5 = c[r3 + 5]
    c3_6 = c[r3 + 6]
    c3_7 = c[r3 + 7]
    c4_0 = c[r4 + 0]
    c4_1 = c[r4 + 1]
    c4_2 = c[r4 + 2]
    c4_3 = c[r4 + 3]
    c4_4 = c[r4 + 4]
    c4_5 = c[r4 + 5]
    c4_6 = c[r4 + 6]
    c4_7 = c[r4 + 7]
    c5_0 = c[r5 + 0]
    c5_1 = c[r5 + 1]
    c5_2 = c[r5 + 2]
    c5_3 = c[r5 + 3]
    c5_4 = c[r5 + 4]
    c5_5 = c[r5 + 5]
    c5_6 = c[r5 + 6]
    c5_7 = c[r5 + 7]
    c6_0 = c[r6 + 0]
    c6_1 = c[r6 + 1]
    c6_2 = c[r6 + 2]
    c6_3 = c[r6 + 3]
    c6_4 = c[r6 + 4]
    c6_5 = c[r6 + 5]
    c6_6 = c[r6 + 6]
    c6_7 = c[r6 + 7]
    c7_0 = c[r7 + 0]
    c7_1 = c[r7 + 1]
    c7_2 = c[r7 + 2]
    c7_3 = c[r7 + 3]
    c7_4 = c[r7 + 4]
    c7_5 = c[r7 + 5]
    c7_6 = c[r7 + 6]
    c7_7 = c[r7 + 7]
    ar0 = (i0 + 0) * n
    ar1 = (i0 + 1) * n
    ar2 = (i0 + 2) * n
    ar3 = (i0 + 3) * n
    ar4 = (i0 + 4) * n
    ar5 = (i0 + 5) * n
    ar6 = (i0 + 6) * n
    ar7 = (i0 + 7) * n
    for k in range(k0, k1):
        bk = k * m + j0
        a0 = a[ar0 + k]
        a1 = a[ar1 + k]
        a2 = a[ar2 + k]
        a3 = a[ar3 + k]
        a4 = a[ar4 + k]
        a5 = a[ar5 + k]
        a6 = a[ar6 + k]
        a7 = a[ar7 + k]
        b0 = b[bk + 0]
        b1 = b[bk + 1]
        b2 = b[bk + 2]
        b3 = b[bk + 3]
        b4 = b[bk + 4]
        b5 = b[bk + 5]
        b6 = b[bk + 6]
        b7 = b[bk + 7]
        c0_0 += a0 * b0
        c0_1 += a0 * b1
        c0_2 += a0 * b2
        c0_3 += a0 * b3
        c0_4 += a0 * b4
        c0_5 += a0 * b5
        c0_6 += a0 * b6
        c0_7 += a0 * b7
        c1_0 += a1 * b0
        c1_1 += a1 * b1
        c1_2 += a1 * b2
        c1_3 += a1 * b3
        c1_4 += a1 * b4
        c1_5 += a1 * b5
        c1_6 += a1 * b6
        c1_7 += a1 * b7
        c2_0 += a2 * b0
        c2_1 += a2 * b1
        c2_2 += a2 * b2
        c2_3 += a2 * b3
        c2_4 += a2 * b4
        c2_5 += a2 * b5
        c2_6 += a2 * b6
        c2_7 += a2 * b7
        c3_0 += a3 * b0
        c3_1 += a3 * b1
        c3_2 += a3 * b2
        c3_3 += a3 * b3
        c3_4 += a3 * b4
        c3_5 += a3 * b5
        c3_6 += a3 * b6
        c3_7 += a3 * b7
        c4_0 += a4 * b0
        c4_1 += a4 * b1
        c4_2 += a4 * b2
        c4_3 += a4 * b3
        c4_4 += a4 * b4
        c4_5 += a4 * b5
        c4_6 += a4 * b6
        c4_7 += a4 * b7
        c5_0 += a5 * b0
        c5_1 += a5 * b1
        c5_2 += a5 * b2
        c5_3 += a5 * b3
        c5_4 += a5 * b4
        c5_5 += a5 * b5
        c5_6 += a5 * b6
        c5_7 += a5 * b7
        c6_0 += a6 * b0
        c6_1 += a6 * b1
        c6_2 += a6 * b2
        c6_3 += a6 * b3
        c6_4 += a6 * b4
        c6_5 += a6 * b5
        c6_6 += a6 * b6
        c6_7 += a6 * b7
        c7_0 += a7 * b0
        c7_1 += a7 * b1
        c7_2 += a7 * b2
        c7_3 += a7 * b3
        c7_4 += a7 * b4
        c7_5 += a7 * b5
        c7_6 += a7 * b6
        c7_7 += a7 * b7
    c[r0 + 0] = c0_0
    c[r0 + 1] = c0_1
    c[r0 + 2] = c0_2
    c[r0 + 3] = c0_3
    c[r0 + 4] = c0_4
    c[r0 + 5] = c0_5
    c[r0 + 6] = c0_6
    c[r0 + 7] = c0_7
    c[r1 + 0] = c1_0
    c[r1 + 1] = c1_1
    c[r1 + 2] = c1_2
    c[r1 + 3] = c1_3
    c[r1 + 4] = c1_4
    c[r1 + 5] = c1_5
    c[r1 + 6] = c1_6
    c[r1 + 7] = c1_7
    c[r2 + 0] = c2_0
    c[r2 + 1] = c2_1
    c[r2 + 2] = c2_2
    c[r2 + 3] = c2_3
    c[r2 + 4] = c2_4
    c[r2 + 5] = c2_5
    c[r2 + 6] = c2_6
    c[r2 + 7] = c2_7
    c[r3 + 0] = c3_0
    c[r3 + 1] = c3_1
    c[r3 + 2] = c3_2
    c[r3 + 3] = c3_3
    c[r3 + 4] = c3_4
    c[r3 + 5] = c3_5
    c[r3 + 6] = c3_6
    c[r3 + 7] = c3_7
    c[r4 + 0] = c4_0
    c[r4 + 1] = c4_1
    c[r4 + 2] = c4_2
    c[r4 + 3] = c4_3
    c[r4 + 4] = c4_4
    c[r4 + 5] = c4_5
    c[r4 + 6] = c4_6
    c[r4 + 7] = c4_7
    c[r5 + 0] = c5_0
    c[r5 + 1] = c5_1
    c[r5 + 2] = c5_2
    c[r5 + 3] = c5_3
    c[r5 + 4] = c5_4
    c[r5 + 5] = c5_5
    c[r5 + 6] = c5_6
    c[r5 + 7] = c5_7
    c[r6 + 0] = c6_0
    c[r6 + 1] = c6_1
    c[r6 + 2] = c6_2
    c[r6 + 3] = c6_3
    c[r6 + 4] = c6_4
    c[r6 + 5] = c6_5
    c[r6 + 6] = c6_6
    c[r6 + 7] = c6_7
    c[r7 + 0] = c7_0
    c[r7 + 1] = c7_1
    c[r7 + 2] = c7_2
    c[r7 + 3] = c7_3
    c[r7 + 4] = c7_4
    c[r7 + 5] = c7_5
    c[r7 + 6] = c7_6
    c[r7 + 7] = c7_7


VARIANTS = {
    ("ijk", "nested", 1): gemm_ijk_nested_u1,
    ("ijk", "nested", 4): gemm_ijk_nested_u4,
    ("ijk", "nested", 8): gemm_ijk_nested_u8,
    ("ijk", "1d", 1): gemm_ijk_1d_u1,
    ("ijk", "1d", 4): gemm_ijk_1d_u4,
    ("ijk", "1d", 8): gemm_ijk_1d_u8,
    ("kij", "nested", 1): gemm_kij_nested_u1,
    ("kij", "nested", 4): gemm_kij_nested_u4,
    ("kij", "nested", 8): gemm_kij_nested_u8,
    ("kij", "1d", 1): gemm_kij_1d_u1,
    ("kij", "1d", 4): gemm_kij_1d_u4,
    ("kij", "1d", 8): gemm_kij_1d_u8,
    ("ikj", "nested", 1): gemm_ikj_nested_u1,
    ("ikj", "nested", 4): gemm_ikj_nested_u4,
    ("ikj", "nested", 8): gemm_ikj_nested_u8,
    ("ikj", "1d", 1): gemm_ikj_1d_u1,
    ("ikj", "1d", 4): gemm_ikj_1d_u4,
    ("ikj", "1d", 8): gemm_ikj_1d_u8,
}

TILES = {2: tile2, 4: tile4, 8: tile8}
