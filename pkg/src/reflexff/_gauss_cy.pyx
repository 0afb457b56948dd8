# cython: boundscheck=False, wraparound=False, cdivision=True
"""Row-reduction kernel, compiled backend.

Same algorithm and pivot choices as reflexff._gauss_py, so both backends
produce identical reduced row echelon forms.
"""


def row_reduce(int[::1] a, int rows, int cols, int q,
               int[::1] add_t, int[::1] mul_t, int[::1] neg_t, int[::1] inv_t):
    cdef int r = 0, c, i, j, pr, rb, ib, piv, inv, f, nf, v, tmp
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if a[i * cols + c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        rb = r * cols
        if pr != r:
            ib = pr * cols
            for j in range(c, cols):
                tmp = a[rb + j]
                a[rb + j] = a[ib + j]
                a[ib + j] = tmp
        piv = a[rb + c]
        if piv != 1:
            inv = inv_t[piv]
            for j in range(c, cols):
                v = a[rb + j]
                if v != 0:
                    a[rb + j] = mul_t[v * q + inv]
        for i in range(rows):
            if i == r:
                continue
            f = a[i * cols + c]
            if f != 0:
                ib = i * cols
                nf = neg_t[f] * q
                for j in range(c, cols):
                    v = a[rb + j]
                    if v != 0:
                        a[ib + j] = add_t[a[ib + j] * q + mul_t[nf + v]]
        pivots.append(c)
        r += 1
    return pivots
