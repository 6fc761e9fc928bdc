"""Hom cochain complexes in explicit coordinates.

A complex of modules is turned into a complex of F_p coordinate spaces by
fixing a basis of each Hom-space; differentials act by pre- or
post-composition.  Cohomology dimensions, cocycle representatives, and class
membership tests all reduce to rank computations here.
"""

from __future__ import annotations

import numpy as np

from .errors import ContractViolation
from .linalg import column_space_basis, in_column_space, kernel_array, mat_mul, rank
from .modules import ModuleRep, _hom_basis_array, hom_coordinates


class CochainComplex:
    """Coordinate complex V^0 -> V^1 -> ... with diffs[i]: V^i -> V^(i+1).

    bases[i] is the hom basis array backing V^i (shape (h_i, rows, cols)); it
    is carried along so cocycles can be rendered back as matrices.
    """

    def __init__(self, bases, diffs, p):
        self.bases = bases
        self.diffs = diffs
        self.p = p
        self.dims = [b.shape[0] for b in bases]
        for i, d in enumerate(diffs):
            if d.shape != (self.dims[i + 1], self.dims[i]):
                raise ContractViolation("differential shape mismatch")
        for i in range(len(diffs) - 1):
            if mat_mul(diffs[i + 1], diffs[i], p).any():
                raise ContractViolation(f"d^2 != 0 at level {i}")

    def diff(self, i):
        if i < len(self.diffs):
            return self.diffs[i]
        return np.zeros((0, self.dims[i] if i < len(self.dims) else 0), dtype=np.int64)

    def cocycles(self, i):
        """Columns span ker(d_i) inside V^i coordinates."""
        d = self.diff(i)
        if d.shape[0] == 0:
            return np.eye(self.dims[i], dtype=np.int64)
        return kernel_array(d, self.p)

    def coboundaries(self, i):
        """Columns span im(d_{i-1}) inside V^i coordinates."""
        if i == 0:
            return np.zeros((self.dims[0], 0), dtype=np.int64)
        return column_space_basis(self.diffs[i - 1], self.p)

    def cohomology_dim(self, i) -> int:
        z = self.cocycles(i)
        b = self.coboundaries(i)
        return z.shape[1] - rank(b, self.p)

    def cohomology_dims(self, imax):
        return [self.cohomology_dim(i) for i in range(imax + 1)]

    def cohomology_reps(self, i):
        """Coordinate vectors whose classes form a basis of H^i."""
        z = self.cocycles(i)
        b = self.coboundaries(i)
        reps = []
        span = b
        for j in range(z.shape[1]):
            v = z[:, j]
            if span.shape[1] and in_column_space(span, v, self.p):
                continue
            reps.append(v)
            span = np.hstack([span, v[:, None]])
        return reps

    def is_coboundary(self, i, vec) -> bool:
        b = self.coboundaries(i)
        if b.shape[1] == 0:
            return not (np.asarray(vec) % self.p).any()
        return in_column_space(b, np.asarray(vec, dtype=np.int64), self.p)

    def element_matrix(self, i, vec):
        """Render a coordinate vector at level i as a concrete hom matrix."""
        basis = self.bases[i]
        return np.einsum("t,tab->ab", np.asarray(vec, dtype=np.int64), basis) % self.p


def post_hom_complex(m: ModuleRep, objs, maps, length) -> CochainComplex:
    """Hom(m, objs[0]) -> Hom(m, objs[1]) -> ... via postcomposition.

    maps[i] : objs[i] -> objs[i+1]; levels 0..length are materialized.
    """
    p = m.algebra.char
    bases = [_hom_basis_array(m, objs[i]) for i in range(length + 1)]
    diffs = []
    for i in range(min(length, len(maps))):
        diffs.append(_composition_matrix(bases[i], bases[i + 1], maps[i].matrix, p, post=True))
    return CochainComplex(bases, diffs, p)


def pre_hom_complex(objs, maps_down, n: ModuleRep, length) -> CochainComplex:
    """Hom(objs[0], n) -> Hom(objs[1], n) -> ... via precomposition.

    maps_down[i] : objs[i+1] -> objs[i]; levels 0..length are materialized.
    """
    p = n.algebra.char
    bases = [_hom_basis_array(objs[i], n) for i in range(length + 1)]
    diffs = []
    for i in range(min(length, len(maps_down))):
        diffs.append(_composition_matrix(bases[i], bases[i + 1], maps_down[i].matrix, p, post=False))
    return CochainComplex(bases, diffs, p)


def _composition_matrix(src_basis, tgt_basis, f, p, post):
    """Coordinate matrix of phi -> f.phi (post) or phi -> phi.f (pre)."""
    h = src_basis.shape[0]
    if h == 0 or tgt_basis.shape[0] == 0:
        out = np.zeros((tgt_basis.shape[0], h), dtype=np.int64)
        if h and tgt_basis.shape[0] == 0:
            # composites must literally vanish for the zero matrix to be valid
            for t in range(h):
                comp = mat_mul(f, src_basis[t], p) if post else mat_mul(src_basis[t], f, p)
                if comp.any():
                    raise ContractViolation("composite leaves the zero hom space")
        return out
    comps = np.stack([
        mat_mul(f, src_basis[t], p) if post else mat_mul(src_basis[t], f, p)
        for t in range(h)
    ])
    coords = hom_coordinates(tgt_basis, comps, p)
    if coords is None:
        raise ContractViolation("composite is not in the target hom space")
    return coords % p


def hom_cochain_dims(m: ModuleRep, objs, maps, imax):
    """Cohomology dims of Hom(m, objs) in degrees 0..imax (postcomposition)."""
    cx = post_hom_complex(m, objs, maps, imax + 1)
    return cx.cohomology_dims(imax)
