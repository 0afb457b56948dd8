"""Row-reduction kernels, pure-Python backend.

All kernels reduce a flat row-major list in place to reduced row echelon
form and return the pivot column list.  The three code paths (generic
tables, GF(2) bit-packed, per-call field arithmetic) make identical pivot
choices in the same order, so they produce identical output.
"""


def row_reduce(a, rows, cols, q, add_t, mul_t, neg_t, inv_t):
    if q == 2:
        return _row_reduce_gf2(a, rows, cols)
    return _row_reduce_tables(a, rows, cols, q, add_t, mul_t, neg_t, inv_t)


def _row_reduce_tables(a, rows, cols, q, add_t, mul_t, neg_t, inv_t):
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if a[i * cols + c]:
                pr = i
                break
        if pr < 0:
            continue
        rb = r * cols
        if pr != r:
            ib = pr * cols
            for j in range(c, cols):
                a[rb + j], a[ib + j] = a[ib + j], a[rb + j]
        piv = a[rb + c]
        if piv != 1:
            inv = inv_t[piv]
            for j in range(c, cols):
                v = a[rb + j]
                if v:
                    a[rb + j] = mul_t[v * q + inv]
        for i in range(rows):
            if i == r:
                continue
            f = a[i * cols + c]
            if f:
                ib = i * cols
                nf = neg_t[f] * q
                for j in range(c, cols):
                    v = a[rb + j]
                    if v:
                        a[ib + j] = add_t[a[ib + j] * q + mul_t[nf + v]]
        pivots.append(c)
        r += 1
    return pivots


def _row_reduce_gf2(a, rows, cols):
    # rows as machine integers: bit j = column j, elimination is XOR
    packed = []
    for i in range(rows):
        base = i * cols
        v = 0
        for j in range(cols):
            if a[base + j]:
                v |= 1 << j
        packed.append(v)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        bit = 1 << c
        pr = -1
        for i in range(r, rows):
            if packed[i] & bit:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            packed[r], packed[pr] = packed[pr], packed[r]
        prow = packed[r]
        for i in range(rows):
            if i != r and packed[i] & bit:
                packed[i] ^= prow
        pivots.append(c)
        r += 1
    for i in range(rows):
        base = i * cols
        v = packed[i]
        for j in range(cols):
            a[base + j] = (v >> j) & 1
    return pivots


def row_reduce_obj(a, rows, cols, field):
    """Table-free variant for fields too large for full q*q tables."""
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if a[i * cols + c]:
                pr = i
                break
        if pr < 0:
            continue
        rb = r * cols
        if pr != r:
            ib = pr * cols
            for j in range(c, cols):
                a[rb + j], a[ib + j] = a[ib + j], a[rb + j]
        piv = a[rb + c]
        if piv != 1:
            pinv = inv(piv)
            for j in range(c, cols):
                if a[rb + j]:
                    a[rb + j] = mul(a[rb + j], pinv)
        for i in range(rows):
            if i == r:
                continue
            f = a[i * cols + c]
            if f:
                ib = i * cols
                nf = neg(f)
                for j in range(c, cols):
                    v = a[rb + j]
                    if v:
                        a[ib + j] = add(a[ib + j], mul(nf, v))
        pivots.append(c)
        r += 1
    return pivots
