"""Brute-force oracles used to pin expected values independently.

Everything here enumerates; nothing uses row reduction, so these results
stay independent of the code paths they check.
"""

from itertools import product

from reflexff import Matrix


def vec_add(f, u, v):
    return tuple(f.add(a, b) for a, b in zip(u, v))


def vec_scale(f, c, u):
    return tuple(f.mul(c, a) for a in u)


def combine(f, vectors, coeffs, width):
    out = (0,) * width
    for c, v in zip(coeffs, vectors):
        if c:
            out = vec_add(f, out, vec_scale(f, c, v))
    return out


def span_set(f, vectors, width):
    """Every element of the span, by full coefficient enumeration."""
    q = f.q
    return {combine(f, vectors, coeffs, width)
            for coeffs in product(range(q), repeat=len(vectors))}


def brute_kernel_count(m: Matrix) -> int:
    """Number of solutions of m @ x = 0, by enumerating all vectors."""
    q = m.field.q
    zero = (0,) * m.rows
    return sum(1 for x in product(range(q), repeat=m.cols)
               if m.apply(x) == zero)


def brute_rank(m: Matrix) -> int:
    """Rank via the solution count of m @ x = 0 (rank-nullity, exactly)."""
    count = brute_kernel_count(m)
    q = m.field.q
    nullity = 0
    while q**nullity < count:
        nullity += 1
    assert q**nullity == count
    return m.cols - nullity


def brute_closure_set(space):
    """All g with g(x) in {f(x) : f in S} for every x, fully enumerated.

    Returns the set of flattened entry tuples; feasible for
    q^(dim_u * dim_v) enumeration sizes only.
    """
    f = space.field
    q = f.q
    p, v, n = space.dim_u, space.dim_v, space.n
    from reflexff import iter_projective

    points = list(iter_projective(q, p))
    targets = []
    for x in points:
        values = [m.apply(x) for m in space.basis]
        targets.append(span_set(f, values, v))
    members = set()
    for g_entries in product(range(q), repeat=v * p):
        g = Matrix(f, v, p, g_entries)
        if all(g.apply(x) in targets[i] for i, x in enumerate(points)):
            members.add(g_entries)
    return members


def space_element_set(space):
    """Flattened entries of every member of the space."""
    f = space.field
    width = space.dim_u * space.dim_v
    return span_set(f, [m.entries for m in space.basis], width)
