"""Named test-module registries and seeded samplers.

Every property suite quantifies over a per-algebra registry of modules with
stable human-readable names.  For the two small built-in algebras the registry
carries the full indecomposable list plus direct sums; for larger algebras a
curated set is generated: projective summands of the regular module, simple
tops, their syzygies, the injective cogenerator, and cyclic submodules and
quotients of the regular module deduplicated up to isomorphism.
"""

from __future__ import annotations

import numpy as np

from .algebra import Algebra
from .errors import UnknownModuleName
from .modules import (ModuleMap, ModuleRep, ShortExactSeq, _hom_basis_array,
                      cokernel_of, direct_sum, dual_module, is_isomorphic,
                      kernel_of, regular_module, submodule_generated,
                      zero_module)
from .resolutions import syzygy

GENERIC_CAP = 10


def _basis_vector(n, i):
    v = np.zeros(n, dtype=np.int64)
    v[i] = 1
    return v


def _named(module: ModuleRep, name: str) -> ModuleRep:
    module.name = name
    return module


def _cyclic_candidates(algebra: Algebra):
    """Cyclic submodules and quotients of the regular module, deduplicated."""
    reg = regular_module(algebra)
    found = []
    for i in range(algebra.dim):
        sub, incl = submodule_generated(reg, [_basis_vector(algebra.dim, i)])
        if 0 < sub.dim < reg.dim:
            found.append(sub)
            quot, _ = cokernel_of(incl)
            if quot.dim:
                found.append(quot)
    out = []
    for cand in found:
        if any(is_isomorphic(cand, prev)[0] == "yes" for prev in out):
            continue
        out.append(cand)
    return out


def _projective_summands(algebra: Algebra):
    """The modules A*e for the primitive-looking idempotent basis positions.

    Uses the basis elements whose coefficient in the unit is nonzero; for the
    built-in algebras these are exactly the primitive idempotents.
    """
    reg = regular_module(algebra)
    out = []
    for i in np.nonzero(algebra.unit)[0]:
        sub, _ = submodule_generated(reg, [_basis_vector(algebra.dim, int(i))])
        out.append(sub)
    return out


def _simple_tops(algebra: Algebra):
    """One-dimensional modules where a single unit-supported idempotent acts."""
    out = []
    for i in np.nonzero(algebra.unit)[0]:
        act = np.zeros((algebra.dim, 1, 1), dtype=np.int64)
        act[int(i), 0, 0] = 1
        try:
            out.append(ModuleRep(algebra, act))
        except Exception:
            continue
    return out


def build_registry(algebra: Algebra) -> dict:
    """Ordered name -> module registry for an algebra."""
    key = "registry"
    if key in algebra._cache:
        return algebra._cache[key]
    reg = {}
    if algebra.name == "A1":
        reg = _registry_a1(algebra)
    elif algebra.name == "A2":
        reg = _registry_a2(algebra)
    else:
        reg = _registry_generic(algebra)
    algebra._cache[key] = reg
    return reg


def _registry_a1(algebra) -> dict:
    a = regular_module(algebra)
    k = _simple_tops(algebra)[0]
    k.name = "k"
    reg = {"0": zero_module(algebra), "k": k, "A": a}
    reg["k+k"] = _named(direct_sum([k, k])[0], "k+k")
    reg["k+A"] = _named(direct_sum([k, a])[0], "k+A")
    reg["I"] = _named(dual_module(regular_module(algebra.opposite())), "I")
    return reg


def _registry_a2(algebra) -> dict:
    a = regular_module(algebra)
    tops = _simple_tops(algebra)
    s1, s2 = tops[0], tops[1]
    s1.name, s2.name = "S1", "S2"
    projs = _projective_summands(algebra)
    p1 = max(projs, key=lambda m: m.dim)
    p1.name = "P1"
    reg = {"0": zero_module(algebra), "S1": s1, "S2": s2, "P1": p1, "A": a}
    reg["S1+S2"] = _named(direct_sum([s1, s2])[0], "S1+S2")
    reg["P1+S1"] = _named(direct_sum([p1, s1])[0], "P1+S1")
    reg["I"] = _named(dual_module(regular_module(algebra.opposite())), "I")
    return reg


def _registry_generic(algebra) -> dict:
    reg = {"0": zero_module(algebra), "A": regular_module(algebra)}
    projs = _projective_summands(algebra)
    for n, m in enumerate(projs, start=1):
        reg[f"P{n}"] = _named(m, f"P{n}")
    tops = _simple_tops(algebra)
    for n, m in enumerate(tops, start=1):
        reg[f"S{n}"] = _named(m, f"S{n}")
        s = syzygy(m, 1)
        if s.dim:
            reg[f"syz(S{n})"] = _named(s, f"syz(S{n})")
    reg["I"] = _named(dual_module(regular_module(algebra.opposite())), "I")
    known = list(reg.values())
    extra = 0
    for cand in _cyclic_candidates(algebra):
        if len(reg) >= GENERIC_CAP + 2:
            break
        if any(is_isomorphic(cand, prev)[0] == "yes" for prev in known):
            continue
        extra += 1
        reg[f"M{extra}"] = _named(cand, f"M{extra}")
        known.append(cand)
    return reg


def lookup(registry: dict, name: str) -> ModuleRep:
    if name not in registry:
        raise UnknownModuleName(name, registry.keys())
    return registry[name]


# --- seeded samplers ----------------------------------------------------------

def sample_module(registry: dict, rng) -> ModuleRep:
    names = sorted(registry)
    return registry[names[rng.integers(len(names))]]


def sample_nonzero_module(registry: dict, rng) -> ModuleRep:
    names = sorted(n for n in registry if registry[n].dim)
    return registry[names[rng.integers(len(names))]]


def sample_map(registry: dict, rng) -> ModuleMap:
    """A random homomorphism between two randomly chosen registered modules."""
    m = sample_module(registry, rng)
    n = sample_module(registry, rng)
    return random_hom(m, n, rng)


def random_hom(m: ModuleRep, n: ModuleRep, rng) -> ModuleMap:
    p = m.algebra.char
    basis = _hom_basis_array(m, n)
    if basis.shape[0] == 0:
        return ModuleMap(m, n, np.zeros((n.dim, m.dim), dtype=np.int64), check=False)
    coeffs = rng.integers(0, p, size=basis.shape[0])
    mat = np.einsum("t,tab->ab", coeffs, basis) % p
    return ModuleMap(m, n, mat, check=False)


def sample_ses(registry: dict, rng) -> ShortExactSeq:
    """A random short exact sequence built from registered modules.

    Alternates between submodule/quotient sequences of a registered module
    and pushout extensions of one registered module by another.
    """
    from .resolutions import free_cover
    from .linalg import solve_array
    from .modules import direct_sum as dsum
    if rng.integers(2) == 0:
        # random submodule sequence inside a registered module
        mid = sample_nonzero_module(registry, rng)
        p = mid.algebra.char
        count = int(rng.integers(1, 3))
        vecs = [rng.integers(0, p, size=mid.dim) for _ in range(count)]
        sub, incl = submodule_generated(mid, vecs)
        quot, proj = cokernel_of(incl)
        return ShortExactSeq(incl, proj, check=False)
    # extension of quot by sub via a pushout of the syzygy sequence
    quot = sample_nonzero_module(registry, rng)
    sub = sample_nonzero_module(registry, rng)
    p = quot.algebra.char
    cover = free_cover(quot)
    h = random_hom(cover.sub, sub, rng)
    tot, incls, _ = dsum([cover.mid, sub])
    glue = ModuleMap(cover.sub, tot,
                     np.vstack([cover.left.matrix, (-h.matrix) % p]), check=False)
    mid, proj = cokernel_of(glue)
    left = proj.compose(incls[1])
    target = np.hstack([cover.right.matrix,
                        np.zeros((quot.dim, sub.dim), dtype=np.int64)])
    right_mat = solve_array(proj.matrix.T, target.T, p)
    right = ModuleMap(mid, quot, right_mat.T, check=False)
    return ShortExactSeq(left, right, check=False)
