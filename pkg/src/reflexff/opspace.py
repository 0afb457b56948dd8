"""Operator spaces S of linear maps GF(q)^p -> GF(q)^dim_v.

A space is an n-dimensional subspace of the dim_v x p matrices, given by
an independent basis.  This module computes the objects attached to S:

* evaluation spaces S(x) = {f(x) : f in S},
* the reflexive closure R(S) = {g : g(x) in S(x) for every x},
* the reflexivity test R(S) = S,
* the minimal rank over the nonzero members of S with a witness,
* the rank distribution over projective classes of S,
* local linear dependence (every x killed by some nonzero member),
* the reduced space on the quotient by the common kernel of S.

Everything is exact and deterministic: projective representatives are
scanned in lexicographic order and returned bases are RREF-canonical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DependentBasisError, MembershipError
from .matrix import (
    Matrix,
    iter_projective,
    mat_kernel,
    mat_rank,
    quotient_setup,
    rref_rows,
    solve,
    solve_membership,
    vstack,
)


class OperatorSpace:
    """An n-dimensional space of dim_v x dim_u matrices over GF(q)."""

    __slots__ = ("field", "dim_u", "dim_v", "basis", "_cache")

    def __init__(self, field, dim_u, dim_v, basis):
        if dim_u < 1 or dim_v < 1:
            raise ValueError("dim_u and dim_v must be >= 1")
        basis = tuple(basis)
        for m in basis:
            if not isinstance(m, Matrix):
                raise TypeError("basis members must be Matrix values")
            if m.field != field:
                raise ValueError("basis matrix field disagrees with the space field")
            if m.rows != dim_v or m.cols != dim_u:
                raise ValueError(
                    f"basis matrix is {m.rows}x{m.cols}, expected {dim_v}x{dim_u}")
        flats = [m.entries for m in basis]
        rows, _ = rref_rows(field, flats, width=dim_u * dim_v)
        if len(rows) != len(basis):
            raise DependentBasisError(
                "basis matrices are linearly dependent; pass an independent basis")
        self.field = field
        self.dim_u = dim_u
        self.dim_v = dim_v
        self.basis = basis
        self._cache = {"canon": rows}

    @property
    def n(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        """Equality as subspaces (same span), not as basis lists."""
        return (isinstance(other, OperatorSpace)
                and self.field == other.field
                and self.dim_u == other.dim_u and self.dim_v == other.dim_v
                and self._cache["canon"] == other._cache["canon"])

    def __hash__(self):
        return hash((self.dim_u, self.dim_v, self._cache["canon"]))

    def __repr__(self):
        return (f"OperatorSpace({self.field!r}, dim_u={self.dim_u}, "
                f"dim_v={self.dim_v}, n={self.n})")

    def __reduce__(self):
        return (OperatorSpace, (self.field, self.dim_u, self.dim_v, self.basis))

    def canonical_basis(self) -> tuple:
        """RREF rows of the flattened basis; identifies the space uniquely."""
        return self._cache["canon"]

    def element(self, coeffs) -> Matrix:
        """The member with the given coefficients on the basis."""
        if len(coeffs) != self.n:
            raise ValueError("coefficient count disagrees with dimension")
        f = self.field
        ent = [0] * (self.dim_u * self.dim_v)
        for c, m in zip(coeffs, self.basis):
            if c:
                me = m.entries
                for i in range(len(ent)):
                    v = me[i]
                    if v:
                        ent[i] = f.add(ent[i], f.mul(c, v))
        return Matrix(f, self.dim_v, self.dim_u, ent)

    def coords_of(self, m: Matrix) -> tuple | None:
        """Coefficients of m on the basis, or None when m is outside S."""
        if m.field != self.field or m.rows != self.dim_v or m.cols != self.dim_u:
            raise ValueError("matrix shape or field disagrees with the space")
        ok, coeffs = solve_membership(
            self.field, [b.entries for b in self.basis], m.entries)
        return coeffs if ok else None

    def contains(self, m: Matrix) -> bool:
        return self.coords_of(m) is not None

    # -- evaluation and closure --

    def eval_rows(self, x) -> list:
        return [m.apply(x) for m in self.basis]

    def eval_space(self, x) -> tuple:
        """Canonical basis of S(x) = {f(x) : f in S}."""
        if len(x) != self.dim_u:
            raise ValueError("vector length disagrees with dim_u")
        rows, _ = rref_rows(self.field, self.eval_rows(x), width=self.dim_v)
        return rows

    def reflexive_closure(self) -> "OperatorSpace":
        """R(S): all g with g(x) in S(x) for every x, as one kernel solve.

        Each projective representative x contributes dim_v - dim S(x)
        linear conditions on the dim_v*dim_u unknowns of g; the joint
        solution space is returned with an RREF-canonical basis.
        """
        cached = self._cache.get("closure")
        if cached is not None:
            return cached
        f = self.field
        p, v, q = self.dim_u, self.dim_v, f.q
        unknowns = v * p
        mul = f.mul
        rows = []
        for x in iter_projective(q, p):
            ev = self.eval_space(x)
            d = len(ev)
            if d == v:
                continue
            if d == 0:
                # g(x) must vanish: one condition per output coordinate
                normals = tuple(
                    tuple(1 if t == i else 0 for t in range(v)) for i in range(v))
            else:
                normals = mat_kernel(Matrix.from_rows(f, ev))
            for c in normals:
                row = [0] * unknowns
                for i in range(v):
                    ci = c[i]
                    if ci:
                        base = i * p
                        for j in range(p):
                            if x[j]:
                                row[base + j] = mul(ci, x[j])
                rows.append(row)
        if not rows:
            sol = tuple(
                tuple(1 if t == i else 0 for t in range(unknowns))
                for i in range(unknowns))
        else:
            flat = [e for r in rows for e in r]
            constraint = Matrix(f, len(rows), unknowns, flat)
            sol = mat_kernel(constraint)
        canon, _ = rref_rows(f, sol, width=unknowns)
        basis = tuple(Matrix(f, v, p, g) for g in canon)
        closure = OperatorSpace(f, p, v, basis)
        self._cache["closure"] = closure
        return closure

    def is_reflexive(self) -> bool:
        return self.reflexive_closure().n == self.n

    # -- rank structure --

    def _rank_scan(self):
        cached = self._cache.get("rank_scan")
        if cached is not None:
            return cached
        if self.n == 0:
            raise ValueError("rank scan requires a nonzero space")
        dist: dict[int, int] = {}
        best = None
        witness = None
        for coeffs in iter_projective(self.field.q, self.n):
            r = mat_rank(self.element(coeffs))
            dist[r] = dist.get(r, 0) + 1
            if best is None or r < best:
                best = r
                witness = coeffs
        result = (dist, best, witness)
        self._cache["rank_scan"] = result
        return result

    def mrk(self):
        """(minimal rank over S \\ {0}, lexicographically first witness)."""
        _, best, witness = self._rank_scan()
        return best, witness

    def rank_distribution(self) -> dict:
        """rank -> number of projective classes of S attaining it."""
        dist, _, _ = self._rank_scan()
        return dict(dist)

    def is_lld(self) -> bool:
        """Whether every vector is annihilated by some nonzero member."""
        n = self.n
        for x in iter_projective(self.field.q, self.dim_u):
            if len(self.eval_space(x)) >= n:
                return False
        return True

    # -- quotient by the common kernel --

    def common_kernel(self) -> tuple:
        """Basis of the intersection of the kernels of all members."""
        if self.n == 0:
            raise ValueError("common kernel of the zero space is everything")
        return mat_kernel(vstack(list(self.basis)))

    def reduced(self):
        """(space induced on the quotient by the common kernel, map Q).

        Each basis matrix f factors uniquely as fbar @ Q; ranks of all
        members (same coefficients) are preserved.
        """
        if self.n == 0:
            raise ValueError("reduction requires a nonzero space")
        f = self.field
        u0 = self.common_kernel()
        qmap = quotient_setup(f, u0, self.dim_u)
        if not u0:
            return self, qmap
        qt = qmap.transpose()
        reduced_basis = []
        for m in self.basis:
            rows = []
            for i in range(self.dim_v):
                sol = solve(qt, m.row(i))
                assert sol is not None, "member does not vanish on the common kernel"
                rows.append(sol)
            reduced_basis.append(Matrix.from_rows(f, rows))
        return OperatorSpace(f, qmap.rows, self.dim_v, reduced_basis), qmap


def opspace_make(field, dim_u, dim_v, basis) -> OperatorSpace:
    """Validated operator space; rejects dependent basis lists."""
    return OperatorSpace(field, dim_u, dim_v, basis)


def hyperplane_lld_check(space: OperatorSpace, g: Matrix) -> bool:
    """Whether S + span{g} is locally linearly dependent; requires g not in S."""
    if space.contains(g):
        raise MembershipError("g lies in the space", "in_space")
    extended = OperatorSpace(space.field, space.dim_u, space.dim_v,
                             space.basis + (g,))
    return extended.is_lld()


@dataclass
class AnalysisReport:
    """Full analysis of one operator space."""

    q: int
    p: int
    dim_v: int
    n: int
    reflexive: bool
    closure_dim: int
    mrk: int | None
    mrk_witness: tuple | None
    rank_distribution: dict
    lld: bool

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "p": self.p,
            "dim_v": self.dim_v,
            "n": self.n,
            "reflexive": self.reflexive,
            "closure_dim": self.closure_dim,
            "mrk": self.mrk,
            "mrk_witness": list(self.mrk_witness) if self.mrk_witness is not None else None,
            "rank_distribution": {str(r): c for r, c in sorted(self.rank_distribution.items())},
            "lld": self.lld,
        }


def analyze(space: OperatorSpace) -> AnalysisReport:
    closure = space.reflexive_closure()
    if space.n:
        dist, best, witness = space._rank_scan()
    else:
        dist, best, witness = {}, None, None
    return AnalysisReport(
        q=space.field.q,
        p=space.dim_u,
        dim_v=space.dim_v,
        n=space.n,
        reflexive=closure.n == space.n,
        closure_dim=closure.n,
        mrk=best,
        mrk_witness=witness,
        rank_distribution=dist,
        lld=space.is_lld(),
    )
