"""Modules as representations, module maps, and the diagram toolbox.

A module is a list of action matrices, one per algebra basis element; a map is
an intertwining matrix.  Kernels, cokernels, pushouts, pullbacks and duality
are all plain linear algebra over F_p.
"""

from __future__ import annotations

import itertools

import numpy as np

from .algebra import Algebra
from .errors import ContractViolation
from .linalg import (column_space_basis, kernel_array, mat_mul, rank,
                     rref_array, solve_array)

_module_serial = itertools.count()


class ModuleRep:
    """A finite-dimensional left module given by its action matrices."""

    __slots__ = ("algebra", "dim", "action", "name", "_cache", "_uid")

    def __init__(self, algebra: Algebra, action, name="M", check=True):
        action = np.asarray(action, dtype=np.int64) % algebra.char
        m = action.shape[1] if action.ndim == 3 else 0
        if action.shape != (algebra.dim, m, m):
            raise ContractViolation("action must be one m x m matrix per algebra basis element")
        self.algebra = algebra
        self.dim = m
        self.action = action
        self.action.flags.writeable = False
        self.name = name
        self._cache = {}
        # stable identity for caches: never reused, unlike id() after gc
        self._uid = next(_module_serial)
        if check:
            self.verify()

    def verify(self):
        a, p = self.algebra, self.algebra.char
        rho = self.action
        # rho(e_i) rho(e_j) = sum_k c_ijk rho(e_k)
        lhs = np.einsum("iab,jbc->ijac", rho, rho) % p
        rhs = np.einsum("ijk,kac->ijac", a.mul, rho) % p
        if not np.array_equal(lhs, rhs):
            raise ContractViolation(f"action of {self.name} is not an algebra homomorphism")
        unit_act = np.einsum("i,iab->ab", a.unit, rho) % p
        if not np.array_equal(unit_act, np.eye(self.dim, dtype=np.int64)):
            raise ContractViolation(f"unit does not act as identity on {self.name}")

    def act(self, coeffs) -> np.ndarray:
        """Action matrix of the algebra element with the given coordinates."""
        return np.einsum("i,iab->ab", np.asarray(coeffs) % self.algebra.char, self.action) \
            % self.algebra.char

    def is_zero(self) -> bool:
        return self.dim == 0

    def __repr__(self):
        return f"ModuleRep({self.name}, dim={self.dim})"


class ModuleMap:
    """Intertwining linear map between modules over the same algebra."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: ModuleRep, target: ModuleRep, matrix, check=True):
        if source.algebra is not target.algebra:
            raise ContractViolation("source and target live over different algebras")
        p = source.algebra.char
        matrix = np.asarray(matrix, dtype=np.int64).reshape(target.dim, source.dim) % p
        self.source = source
        self.target = target
        self.matrix = matrix
        self.matrix.flags.writeable = False
        if check:
            self.verify()

    def verify(self):
        p = self.source.algebra.char
        for i in self.source.algebra.generator_indices():
            lhs = mat_mul(self.matrix, self.source.action[i], p)
            rhs = mat_mul(self.target.action[i], self.matrix, p)
            if not np.array_equal(lhs, rhs):
                raise ContractViolation("matrix does not intertwine the actions")

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self after other."""
        if not same_module(other.target, self.source):
            raise ContractViolation("maps are not composable")
        p = self.source.algebra.char
        return ModuleMap(other.source, self.target,
                         mat_mul(self.matrix, other.matrix, p), check=False)

    def is_mono(self) -> bool:
        return rank(self.matrix, self.source.algebra.char) == self.source.dim

    def is_epi(self) -> bool:
        return rank(self.matrix, self.source.algebra.char) == self.target.dim

    def is_zero(self) -> bool:
        return not self.matrix.any()

    def __add__(self, other):
        p = self.source.algebra.char
        return ModuleMap(self.source, self.target, (self.matrix + other.matrix) % p, check=False)

    def __sub__(self, other):
        p = self.source.algebra.char
        return ModuleMap(self.source, self.target, (self.matrix - other.matrix) % p, check=False)

    def __neg__(self):
        p = self.source.algebra.char
        return ModuleMap(self.source, self.target, (-self.matrix) % p, check=False)

    def __repr__(self):
        return f"ModuleMap({self.source.name} -> {self.target.name})"


def identity_map(m: ModuleRep) -> ModuleMap:
    return ModuleMap(m, m, np.eye(m.dim, dtype=np.int64), check=False)


def zero_map(source: ModuleRep, target: ModuleRep) -> ModuleMap:
    return ModuleMap(source, target, np.zeros((target.dim, source.dim), dtype=np.int64),
                     check=False)


def zero_module(algebra: Algebra) -> ModuleRep:
    return ModuleRep(algebra, np.zeros((algebra.dim, 0, 0), dtype=np.int64),
                     name="0", check=False)


def regular_module(algebra: Algebra) -> ModuleRep:
    key = "regular_module"
    if key not in algebra._cache:
        reg = ModuleRep(algebra, algebra.left_regular_action, name="A", check=False)
        reg._cache["free_rank"] = 1
        algebra._cache[key] = reg
    return algebra._cache[key]


class ShortExactSeq:
    """0 -> left.source -> mid -> right.target -> 0."""

    __slots__ = ("left", "right")

    def __init__(self, left: ModuleMap, right: ModuleMap, check=True):
        if not same_module(left.target, right.source):
            raise ContractViolation("inner objects of the two maps differ")
        self.left = left
        self.right = right
        if check and not self.is_exact():
            raise ContractViolation("sequence is not short exact")

    @property
    def sub(self):
        return self.left.source

    @property
    def mid(self):
        return self.left.target

    @property
    def quot(self):
        return self.right.target

    def is_exact(self) -> bool:
        p = self.mid.algebra.char
        if not self.left.is_mono() or not self.right.is_epi():
            return False
        if mat_mul(self.right.matrix, self.left.matrix, p).any():
            return False
        return self.sub.dim + self.quot.dim == self.mid.dim

    def __repr__(self):
        return f"SES(0 -> {self.sub.name} -> {self.mid.name} -> {self.quot.name} -> 0)"


# --- hom spaces --------------------------------------------------------------

def hom_space(m: ModuleRep, n: ModuleRep):
    """Basis of Hom_A(m, n) as a list of ModuleMap."""
    if m.algebra is not n.algebra:
        raise ContractViolation("hom_space needs modules over the same algebra")
    basis = _hom_basis_array(m, n)
    return [ModuleMap(m, n, basis[t], check=False) for t in range(basis.shape[0])]


def hom_dim(m: ModuleRep, n: ModuleRep) -> int:
    return _hom_basis_array(m, n).shape[0]


def _hom_basis_array(m: ModuleRep, n: ModuleRep) -> np.ndarray:
    """Array of shape (h, dim n, dim m) whose slices form a basis of Hom(m, n).

    Cached on the source module; the intertwining constraints are imposed one
    algebra generator at a time, which keeps the eliminations small.
    """
    key = ("hom", n._uid)
    hit = m._cache.get(key)
    if hit is not None:
        return hit
    p = m.algebra.char
    if m.dim == 0 or n.dim == 0:
        basis = np.zeros((0, n.dim, m.dim), dtype=np.int64)
    else:
        k = m.dim * n.dim
        basis = np.eye(k, dtype=np.int64).reshape(k, n.dim, m.dim)
        for g in m.algebra.generator_indices():
            if basis.shape[0] == 0:
                break
            viol = (np.einsum("tab,bc->tac", basis, m.action[g])
                    - np.einsum("ab,tbc->tac", n.action[g], basis)) % p
            flat = viol.reshape(basis.shape[0], -1).T
            coeffs = kernel_array(flat, p)
            basis = np.einsum("tk,tab->kab", coeffs, basis) % p
    basis.flags.writeable = False
    m._cache[key] = basis
    return basis


def hom_coordinates(basis: np.ndarray, mats: np.ndarray, p: int):
    """Coordinates of each matrix in mats w.r.t. a hom basis array, or None."""
    h = basis.shape[0]
    if mats.ndim == 2:
        mats = mats[None]
    if h == 0:
        return None if mats.any() else np.zeros((basis.shape[0], mats.shape[0]), dtype=np.int64)
    return solve_array(basis.reshape(h, -1).T, mats.reshape(mats.shape[0], -1).T, p)


# --- kernels, cokernels, images ----------------------------------------------

def _submodule_from_basis(parent: ModuleRep, basis: np.ndarray, name: str):
    """Module structure on an action-stable subspace plus its inclusion."""
    alg, p = parent.algebra, parent.algebra.char
    k = basis.shape[1]
    act = np.zeros((alg.dim, k, k), dtype=np.int64)
    for i in range(alg.dim):
        img = mat_mul(parent.action[i], basis, p)
        coords = solve_array(basis, img, p)
        if coords is None:
            raise ContractViolation("subspace is not action-stable")
        act[i] = coords.reshape(k, k) if k else coords
    sub = ModuleRep(alg, act, name=name, check=False)
    incl = ModuleMap(sub, parent, basis, check=False)
    return sub, incl


def kernel_of(f: ModuleMap):
    """(kernel module, inclusion into source)."""
    basis = kernel_array(f.matrix, f.source.algebra.char)
    return _submodule_from_basis(f.source, basis, f"ker({f.source.name}->{f.target.name})")


def image_of(f: ModuleMap):
    """(image module, inclusion into target)."""
    basis = column_space_basis(f.matrix, f.source.algebra.char)
    return _submodule_from_basis(f.target, basis, f"im({f.source.name}->{f.target.name})")


def cokernel_of(f: ModuleMap):
    """(cokernel module, projection from target)."""
    alg, p = f.target.algebra, f.target.algebra.char
    n = f.target.dim
    c = column_space_basis(f.matrix, p)
    r = c.shape[1]
    stacked = np.hstack([c, np.eye(n, dtype=np.int64)])
    _, pivots = rref_array(stacked, p)
    full = stacked[:, pivots]          # invertible: image basis then complement
    inv = solve_array(full, np.eye(n, dtype=np.int64), p)
    proj = inv[r:, :]                  # coordinates along the complement
    section = full[:, r:]
    k = n - r
    act = np.zeros((alg.dim, k, k), dtype=np.int64)
    for i in range(alg.dim):
        act[i] = mat_mul(proj, mat_mul(f.target.action[i], section, p), p)
    quot = ModuleRep(alg, act, name=f"coker({f.source.name}->{f.target.name})", check=False)
    return quot, ModuleMap(f.target, quot, proj, check=False)


# --- sums, pushouts, pullbacks ----------------------------------------------

def same_module(x: ModuleRep, y: ModuleRep) -> bool:
    """Identical presentation: same algebra and the same action matrices."""
    return x is y or (x.algebra is y.algebra and x.dim == y.dim
                      and bool(np.array_equal(x.action, y.action)))


def direct_sum(summands):
    """(sum module, inclusions, projections)."""
    summands = list(summands)
    if not summands:
        raise ContractViolation("direct_sum of nothing")
    alg = summands[0].algebra
    dims = [m.dim for m in summands]
    total = sum(dims)
    act = np.zeros((alg.dim, total, total), dtype=np.int64)
    offs = np.concatenate([[0], np.cumsum(dims)])
    for s, m in enumerate(summands):
        act[:, offs[s]:offs[s + 1], offs[s]:offs[s + 1]] = m.action
    name = "+".join(m.name for m in summands)
    tot = ModuleRep(alg, act, name=name, check=False)
    incls, projs = [], []
    for s, m in enumerate(summands):
        mat = np.zeros((total, m.dim), dtype=np.int64)
        mat[offs[s]:offs[s + 1]] = np.eye(m.dim, dtype=np.int64)
        incls.append(ModuleMap(m, tot, mat, check=False))
        projs.append(ModuleMap(tot, m, mat.T, check=False))
    return tot, incls, projs


def pushout(f: ModuleMap, g: ModuleMap):
    """Pushout of f: K->A and g: K->B; returns (Q, A->Q, B->Q)."""
    if not same_module(f.source, g.source):
        raise ContractViolation("pushout legs must share their source")
    p = f.source.algebra.char
    tot, incls, _ = direct_sum([f.target, g.target])
    glue = ModuleMap(f.source, tot,
                     np.vstack([f.matrix, (-g.matrix) % p]), check=False)
    q, proj = cokernel_of(glue)
    q.name = f"po({f.target.name},{g.target.name})"
    return q, proj.compose(incls[0]), proj.compose(incls[1])


def pullback(f: ModuleMap, g: ModuleMap):
    """Pullback of f: A->L and g: B->L; returns (P, P->A, P->B)."""
    if not same_module(f.target, g.target):
        raise ContractViolation("pullback legs must share their target")
    p = f.target.algebra.char
    tot, _, projs = direct_sum([f.source, g.source])
    diff = ModuleMap(tot, f.target,
                     np.hstack([f.matrix, (-g.matrix) % p]), check=False)
    pb, incl = kernel_of(diff)
    pb.name = f"pb({f.source.name},{g.source.name})"
    return pb, projs[0].compose(incl), projs[1].compose(incl)


# --- duality -----------------------------------------------------------------

def dual_module(m: ModuleRep) -> ModuleRep:
    """k-dual as a module over the opposite algebra; D(D(M)) equals M on the nose."""
    key = "dual"
    if key not in m._cache:
        d = ModuleRep(m.algebra.opposite(),
                      np.transpose(m.action, (0, 2, 1)),
                      name=f"D({m.name})", check=False)
        d._cache["dual"] = m
        m._cache[key] = d
    return m._cache[key]


def dual_map(f: ModuleMap) -> ModuleMap:
    return ModuleMap(dual_module(f.target), dual_module(f.source), f.matrix.T, check=False)


def dual_ses(s: ShortExactSeq) -> ShortExactSeq:
    return ShortExactSeq(dual_map(s.right), dual_map(s.left), check=False)


# --- submodules and isomorphism ----------------------------------------------

def submodule_generated(m: ModuleRep, vectors):
    """Smallest action-closed subspace containing the vectors, with inclusion."""
    p = m.algebra.char
    vectors = [np.asarray(v, dtype=np.int64) % p for v in vectors]
    if not vectors:
        basis = np.zeros((m.dim, 0), dtype=np.int64)
    else:
        basis = column_space_basis(np.array(vectors).T, p)
        while True:
            imgs = [mat_mul(m.action[i], basis, p) for i in m.algebra.generator_indices()]
            cand = column_space_basis(np.hstack([basis] + imgs), p)
            if cand.shape[1] == basis.shape[1]:
                break
            basis = cand
    return _submodule_from_basis(m, basis, f"<{len(vectors)} gens of {m.name}>")


ISO_ENUM_BUDGET = 2 ** 16
ISO_SAMPLE_BUDGET = 2 ** 12


def is_isomorphic(m: ModuleRep, n: ModuleRep, test_modules=(), seed=0):
    """Tri-state isomorphism test.

    Returns ("yes", certificate ModuleMap), ("no", reason string) or
    ("unknown", reason).  Positive answers come from finding an invertible
    element of Hom(m, n); negatives from an invariant mismatch or from an
    exhausted exhaustive search.
    """
    p = m.algebra.char
    if m.dim != n.dim:
        return "no", f"dimension mismatch {m.dim} != {n.dim}"
    if m.dim == 0:
        return "yes", zero_map(m, n)
    for t in test_modules:
        if hom_dim(t, m) != hom_dim(t, n):
            return "no", f"hom-dimension from {t.name} differs"
        if hom_dim(m, t) != hom_dim(n, t):
            return "no", f"hom-dimension into {t.name} differs"
    basis = _hom_basis_array(m, n)
    h = basis.shape[0]
    if h == 0:
        return "no", "Hom(m, n) = 0"
    if p ** h <= ISO_ENUM_BUDGET:
        for code in range(1, p ** h):
            coeffs = np.array([(code // p ** t) % p for t in range(h)], dtype=np.int64)
            cand = np.einsum("t,tab->ab", coeffs, basis) % p
            if rank(cand, p) == m.dim:
                return "yes", ModuleMap(m, n, cand, check=False)
        return "no", "exhaustive search of Hom(m, n) found no invertible map"
    rng = np.random.default_rng(seed)
    for _ in range(ISO_SAMPLE_BUDGET):
        coeffs = rng.integers(0, p, size=h)
        cand = np.einsum("t,tab->ab", coeffs, basis) % p
        if rank(cand, p) == m.dim:
            return "yes", ModuleMap(m, n, cand, check=False)
    return "unknown", f"sampling budget {ISO_SAMPLE_BUDGET} exhausted"
