import numpy as np
import pytest

from cotriple.algebra import builtin_algebra
from cotriple.modules import direct_sum, dual_module, regular_module
from cotriple.registry import build_registry
from cotriple.resolutions import (ExceedsBound, ext_dim, ext_dims,
                                  ext_dims_via_injective, free_cover,
                                  free_module, free_resolution, inj_dim,
                                  injective_coresolution, is_injective,
                                  is_projective, proj_dim, syzygy)


@pytest.fixture(scope="module", params=["A1", "A2", "A3"])
def reg(request):
    return build_registry(builtin_algebra(request.param))


def test_free_cover_is_exact_and_minimal_enough(reg):
    for m in reg.values():
        if m.dim == 0:
            continue
        cov = free_cover(m)
        assert cov.is_exact()
        assert cov.mid._cache["free_rank"] * m.algebra.dim == cov.mid.dim
        # unreduced covers use one generator per basis vector
        full = free_cover(m, reduce=False)
        assert full.is_exact()
        assert full.mid.dim == m.dim * m.algebra.dim


def test_projectivity_oracle_against_ext(reg):
    # split test vs Ext^1(m, syzygy) vanishing: two independent criteria
    for m in reg.values():
        if m.dim == 0:
            continue
        split = is_projective(m)
        cov = free_cover(m)
        via_ext = ext_dim(m, cov.sub, 1) == 0 if cov.sub.dim else True
        assert split == via_ext, m.name


def test_free_modules_are_projective(reg):
    alg = next(iter(reg.values())).algebra
    f = free_module(alg, 2)
    assert is_projective(f)
    assert proj_dim(f, 5) == 0
    assert is_injective(dual_module(f))


def test_ext_agrees_between_projective_and_injective_routes(reg):
    names = [n for n, m in reg.items() if m.dim][:4]
    for a in names:
        for b in names:
            via_p = ext_dims(reg[a], reg[b], 3)
            via_i = ext_dims_via_injective(reg[a], reg[b], 3)
            assert via_p == via_i, (a, b)


def test_ext_dims_reduce_invariance(reg):
    # unreduced covers grow multiplicatively in the algebra dimension, so
    # keep the degree shallow on the six-dimensional testbed
    mods = sorted((m for m in reg.values() if m.dim), key=lambda m: m.dim)[:3]
    imax = 3 if mods[0].algebra.dim < 6 else 1
    for a in mods:
        for b in mods:
            assert ext_dims(a, b, imax, reduce=True) == \
                ext_dims(a, b, imax, reduce=False), (a.name, b.name)


def test_ext_additivity_in_direct_sums(reg):
    names = [n for n, m in reg.items() if m.dim][:3]
    m, n = reg[names[0]], reg[names[1]]
    s, _, _ = direct_sum([m, n])
    fixed = reg[names[2]]
    for i in range(1, 4):
        assert ext_dim(s, fixed, i) == ext_dim(m, fixed, i) + ext_dim(n, fixed, i)


def test_syzygy_shifts_ext(reg):
    names = [n for n, m in reg.items() if m.dim][:3]
    m, fixed = reg[names[0]], reg[names[1]]
    s1 = syzygy(m, 1)
    for i in range(1, 3):
        # Ext^{i+1}(m, -) = Ext^i(syzygy m, -) in positive degrees
        assert ext_dim(m, fixed, i + 1) == ext_dim(s1, fixed, i)


def test_dimension_duality(reg):
    for m in reg.values():
        if m.dim == 0:
            continue
        pd = proj_dim(m, 6)
        idd = inj_dim(dual_module(m), 6)
        assert pd == idd, m.name


def test_regular_module_dimensions():
    # k[x]/(x^2) is self-injective; the triangular testbed has dimension 1
    a1 = regular_module(builtin_algebra("A1"))
    assert proj_dim(a1, 5) == 0 and inj_dim(a1, 5) == 0
    a3 = regular_module(builtin_algebra("A3"))
    assert proj_dim(a3, 5) == 0 and inj_dim(a3, 5) == 1


def test_exceeds_bound_semantics():
    a1 = builtin_algebra("A1")
    reg1 = build_registry(a1)
    k = reg1["k"]
    assert proj_dim(k, 4) == ExceedsBound(4)
    assert isinstance(proj_dim(k, 4), ExceedsBound)
    assert ExceedsBound(3) == ExceedsBound(9)      # bound is informational


def test_free_resolution_and_coresolution_shapes(reg):
    m = next(m for m in reg.values() if m.dim and not is_projective(m))
    res = free_resolution(m, 3)
    assert len(res.steps) >= 3
    for step in res.steps:
        assert step.is_exact()
    aug, objs, maps = injective_coresolution(m, 3)
    assert aug.is_mono() and aug.target is objs[0]
    assert len(objs) >= 3
    if maps:
        assert not maps[0].compose(aug).matrix.any()
    for f, g in zip(maps, maps[1:]):
        assert not g.compose(f).matrix.any()
