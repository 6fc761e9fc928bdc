"""Finite-dimensional associative unital algebras given by structure constants.

The constant table ``mul[i][j][k]`` encodes e_i * e_j = sum_k mul[i][j][k] e_k
over F_p.  Builders for the three testbed families live here, together with
the JSON spec format the CLI reads and writes.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import AssociativityViolation, ContractViolation, UnitViolation, UnsupportedQuiver
from .linalg import column_space_basis, in_column_space, mat_mul


class Algebra:
    """Validated structure-constant algebra over F_p.

    Immutable; construct through :func:`check_algebra` or a builder.
    """

    __slots__ = ("dim", "mul", "unit", "char", "name", "basis_names",
                 "_left_mult", "_right_mult", "_opposite", "_gens", "_cache")

    def __init__(self, mul, unit, char, name="algebra", basis_names=None, _validated=False):
        mul = np.asarray(mul, dtype=np.int64) % char
        unit = np.asarray(unit, dtype=np.int64) % char
        n = mul.shape[0]
        if mul.shape != (n, n, n) or unit.shape != (n,):
            raise ContractViolation("structure constant table must be n x n x n with an n-vector unit")
        self.dim = n
        self.mul = mul
        self.mul.flags.writeable = False
        self.unit = unit
        self.unit.flags.writeable = False
        self.char = char
        self.name = name
        self.basis_names = list(basis_names) if basis_names else [f"e{i}" for i in range(n)]
        # left_mult[i] = matrix of x -> e_i * x; column j is e_i * e_j
        self._left_mult = np.transpose(mul, (0, 2, 1)).copy()
        self._left_mult.flags.writeable = False
        # right_mult[i] = matrix of x -> x * e_i; column j is e_j * e_i
        self._right_mult = np.transpose(mul, (1, 2, 0)).copy()
        self._right_mult.flags.writeable = False
        self._opposite = None
        self._gens = None
        self._cache = {}
        if not _validated:
            self.validate()

    # -- validation -----------------------------------------------------

    def validate(self):
        n, p, c = self.dim, self.char, self.mul
        # (e_i e_j) e_k vs e_i (e_j e_k), checked exhaustively
        left = np.einsum("ijm,mkl->ijkl", c, c) % p
        right = np.einsum("jkm,iml->ijkl", c, c) % p
        if not np.array_equal(left, right):
            i, j, k, l = np.argwhere(left != right)[0]
            raise AssociativityViolation(int(i), int(j), int(k), int(l))
        lm = self.left_mult_matrix(self.unit)
        rm = self.right_mult_matrix(self.unit)
        eye = np.eye(n, dtype=np.int64)
        if not np.array_equal(lm, eye):
            raise UnitViolation(int(np.argwhere((lm - eye) % p)[0][1]))
        if not np.array_equal(rm, eye):
            raise UnitViolation(int(np.argwhere((rm - eye) % p)[0][1]))

    # -- multiplication -------------------------------------------------

    def multiply(self, a, b):
        """Product of two coordinate vectors."""
        return np.einsum("i,j,ijk->k", a, b, self.mul) % self.char

    def left_mult_matrix(self, a):
        """Matrix of x -> a*x in the basis."""
        return np.einsum("i,ikj->kj", a % self.char, self._left_mult) % self.char

    def right_mult_matrix(self, a):
        """Matrix of x -> x*a in the basis."""
        return np.einsum("i,ikj->kj", a % self.char, self._right_mult) % self.char

    @property
    def left_regular_action(self):
        """Action matrices of the left regular module."""
        return self._left_mult

    def opposite(self) -> "Algebra":
        """The opposite algebra; (A^op)^op is A itself."""
        if self._opposite is None:
            op = Algebra(np.transpose(self.mul, (1, 0, 2)), self.unit, self.char,
                         name=self.name + "^op", basis_names=self.basis_names,
                         _validated=True)
            op._opposite = self
            self._opposite = op
        return self._opposite

    def generator_indices(self):
        """A small basis subset that generates the algebra (with the unit).

        Used to cut down intertwiner systems: a linear map commuting with the
        generators' action commutes with everything.
        """
        if self._gens is not None:
            return self._gens
        p, n = self.char, self.dim
        span = column_space_basis(self.unit[:, None], p)
        gens = []
        for i in range(n):
            e = np.zeros(n, dtype=np.int64)
            e[i] = 1
            if in_column_space(span, e, p):
                continue
            gens.append(i)
            span = column_space_basis(np.hstack([span, e[:, None]]), p)
            # close the span under multiplication by current span elements
            while True:
                prods = []
                for a in span.T:
                    for b in span.T:
                        prods.append(self.multiply(a, b))
                cand = np.hstack([span] + [np.array(prods).T]) if prods else span
                new = column_space_basis(cand, p)
                if new.shape[1] == span.shape[1]:
                    break
                span = new
            if span.shape[1] == n:
                break
        self._gens = tuple(gens)
        return self._gens

    # -- JSON spec format -------------------------------------------------

    def to_spec(self) -> dict:
        return {
            "char": int(self.char),
            "dim": int(self.dim),
            "basis": list(self.basis_names),
            "unit": [int(x) for x in self.unit],
            "mul": self.mul.tolist(),
        }

    @classmethod
    def from_spec(cls, spec: dict, name="algebra") -> "Algebra":
        return check_algebra(spec["mul"], spec["unit"], spec["char"],
                             name=name, basis_names=spec.get("basis"))

    def dump(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_spec(), fh, indent=2, sort_keys=True)
            fh.write("\n")

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.dim}, p={self.char})"


def check_algebra(mul, unit, p, name="algebra", basis_names=None) -> Algebra:
    """Validate a raw structure-constant table and return the Algebra."""
    return Algebra(mul, unit, p, name=name, basis_names=basis_names)


# --- builders ---------------------------------------------------------------

def truncated_poly(p: int, n: int) -> Algebra:
    """k[x]/(x^n) over F_p, basis 1, x, ..., x^(n-1)."""
    if n < 1:
        raise ContractViolation("n must be >= 1")
    mul = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i + j < n:
                mul[i, j, i + j] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[0] = 1
    names = ["1"] + [f"x^{i}" if i > 1 else "x" for i in range(1, n)]
    return Algebra(mul, unit, p, name=f"k[x]/(x^{n})", basis_names=names)


def path_algebra_acyclic(vertices: int, arrows, p: int) -> Algebra:
    """Path algebra of an acyclic quiver; basis all paths, trivial ones included.

    Vertices are 1..vertices; arrows is a list of (source, target) pairs.
    Products compose like functions: paths q then p give p*q.
    """
    arrows = list(arrows)
    for (s, t) in arrows:
        if not (1 <= s <= vertices and 1 <= t <= vertices):
            raise ContractViolation(f"arrow ({s},{t}) out of range")
    # cycle check on the arrow digraph
    adj = {v: [] for v in range(1, vertices + 1)}
    for (s, t) in arrows:
        adj[s].append(t)
    state = {v: 0 for v in adj}

    def dfs(v):
        state[v] = 1
        for w in adj[v]:
            if state[w] == 1 or (state[w] == 0 and dfs(w)):
                return True
        state[v] = 2
        return False

    for v in adj:
        if state[v] == 0 and dfs(v):
            raise UnsupportedQuiver("quiver has a directed cycle")

    # enumerate paths: (source, target, arrow index tuple), trivial = empty tuple
    paths = [(v, v, ()) for v in range(1, vertices + 1)]
    frontier = [(s, t, (k,)) for k, (s, t) in enumerate(arrows)]
    while frontier:
        paths.extend(frontier)
        nxt = []
        for (s, t, word) in frontier:
            for k, (s2, t2) in enumerate(arrows):
                if s2 == t:
                    nxt.append((s, t2, word + (k,)))
        frontier = nxt
    index = {pth: i for i, pth in enumerate(paths)}
    n = len(paths)
    mul = np.zeros((n, n, n), dtype=np.int64)
    for i, (s1, t1, w1) in enumerate(paths):
        for j, (s2, t2, w2) in enumerate(paths):
            if s1 == t2:  # p * q defined when q ends where p starts
                mul[i, j, index[(s2, t1, w2 + w1)]] = 1
    unit = np.zeros(n, dtype=np.int64)
    for v in range(1, vertices + 1):
        unit[index[(v, v, ())]] = 1

    def path_name(s, t, word):
        if not word:
            return f"e{s}"
        return "*".join(f"a{k + 1}" for k in reversed(word))

    names = [path_name(*pth) for pth in paths]
    return Algebra(mul, unit, p, name=f"kQ({vertices}v,{len(arrows)}a)", basis_names=names)


def triangular2(r: Algebra) -> Algebra:
    """Upper-triangular 2x2 matrices over r; dimension 3*dim(r).

    Basis ordering: r-basis scaled E11 block, then E12, then E22.
    """
    m, p = r.dim, r.char
    n = 3 * m
    blocks = [(0, 0), (0, 1), (1, 1)]  # E11, E12, E22
    pos = {b: bi for bi, b in enumerate(blocks)}
    mul = np.zeros((n, n, n), dtype=np.int64)
    for bi, (a1, b1) in enumerate(blocks):
        for bj, (a2, b2) in enumerate(blocks):
            if b1 != a2:
                continue
            bk = pos[(a1, b2)]
            for i in range(m):
                for j in range(m):
                    prod = r.multiply(_unit_vec(m, i), _unit_vec(m, j))
                    for k in np.nonzero(prod)[0]:
                        mul[bi * m + i, bj * m + j, bk * m + int(k)] = prod[k]
    unit = np.zeros(n, dtype=np.int64)
    unit[0 * m: 1 * m] = r.unit
    unit[2 * m: 3 * m] = r.unit
    names = []
    for bname in ("E11", "E12", "E22"):
        names.extend(f"{rb}.{bname}" for rb in r.basis_names)
    return Algebra(mul, unit, p, name=f"T2({r.name})", basis_names=names)


def _unit_vec(n, i):
    v = np.zeros(n, dtype=np.int64)
    v[i] = 1
    return v


def builtin_algebra(key: str, p: int = 2) -> Algebra:
    """The three built-in testbed algebras: A1, A2, A3."""
    key = key.upper()
    if key == "A1":
        a = truncated_poly(p, 2)
        a.name = "A1"
        return a
    if key == "A2":
        a = path_algebra_acyclic(2, [(1, 2)], p)
        a.name = "A2"
        return a
    if key == "A3":
        a = triangular2(truncated_poly(p, 2))
        a.name = "A3"
        return a
    raise ContractViolation(f"unknown builtin algebra {key!r}")
