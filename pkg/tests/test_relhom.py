import numpy as np
import pytest

from cotriple.algebra import builtin_algebra
from cotriple.errors import ContractViolation, ProperNessViolation
from cotriple.registry import build_registry, sample_ses
from cotriple.relhom import (ext_xy, global_dims, les_check,
                             proper_x_resolution, proper_y_coresolution,
                             xy_degenerate_dims, z_id, z_pd)
from cotriple.resolutions import ExceedsBound, ext_dims
from cotriple.triples import gorenstein_triple, trivial_triple

ALGS = ["A1", "A2", "A3"]


@pytest.fixture(scope="module", params=ALGS)
def setup(request):
    alg = builtin_algebra(request.param)
    return alg, build_registry(alg)


def test_proper_resolutions_consist_of_members(setup):
    alg, reg = setup
    for triple in (trivial_triple(alg), gorenstein_triple(alg)):
        for m in list(reg.values())[:4]:
            res = proper_x_resolution(triple, m, 2)
            for obj in res.objs:
                assert triple.in_X(obj)
            for step in res.steps:
                assert step.seq.is_exact()
            cores = proper_y_coresolution(triple, m, 2)
            for obj in cores.objs:
                assert triple.in_Y(obj)
            # consecutive resolution maps compose to zero
            for f, g in zip(res.maps, res.maps[1:]):
                assert not f.compose(g).matrix.any()
            for f, g in zip(cores.maps, cores.maps[1:]):
                assert not g.compose(f).matrix.any()


def test_ext_xy_balance_and_degree_zero(setup):
    alg, reg = setup
    triple = gorenstein_triple(alg)
    mods = [m for m in reg.values() if m.dim][:4]
    from cotriple.modules import hom_dim
    for m in mods:
        for n in mods:
            table = ext_xy(triple, m, n, imax=3)    # raises on any imbalance
            assert table.via_x == table.via_y
            assert table.via_x[0] == hom_dim(m, n)
            assert all(d >= 0 for d in table.via_x)


def test_ext_xy_reduces_to_absolute_on_trivial_triple(setup):
    alg, reg = setup
    triple = trivial_triple(alg)
    mods = [m for m in reg.values() if m.dim][:4]
    for m in mods:
        for n in mods:
            table = ext_xy(triple, m, n, imax=3)
            assert table.via_x[1:] == ext_dims(m, n, 3)[1:], (m.name, n.name)


def test_ext_xy_matches_absolute_when_one_member_in_z(setup):
    alg, reg = setup
    triple = gorenstein_triple(alg)
    mods = [m for m in reg.values() if m.dim]
    zs = [m for m in mods if triple.in_Z(m)][:3]
    for z in zs:
        for other in mods[:3]:
            for m, n in ((z, other), (other, z)):
                table = ext_xy(triple, m, n, imax=3)
                assert table.via_x[1:] == table.absolute[1:], (m.name, n.name)


def test_relative_dimensions_known_values():
    a1 = builtin_algebra("A1")
    reg1 = build_registry(a1)
    # trivial triple over k[x]/(x^2): k has infinite projective dimension
    triv = trivial_triple(a1)
    assert isinstance(z_pd(triv, reg1["k"], bound=6, registry=reg1), ExceedsBound)
    assert isinstance(z_id(triv, reg1["k"], bound=6, registry=reg1), ExceedsBound)
    assert z_pd(triv, reg1["A"], bound=6, registry=reg1) == 0
    # Gorenstein triple: k is Gorenstein projective and injective, so both are 0
    gor = gorenstein_triple(a1)
    assert z_pd(gor, reg1["k"], bound=6, registry=reg1) == 0
    assert z_id(gor, reg1["k"], bound=6, registry=reg1) == 0


def test_relative_dimensions_bounded_on_gorenstein_testbed():
    a3 = builtin_algebra("A3")
    reg3 = build_registry(a3)
    gor = gorenstein_triple(a3)
    for m in reg3.values():
        if m.dim == 0:
            continue
        pd = z_pd(gor, m, bound=6, registry=reg3)
        idd = z_id(gor, m, bound=6, registry=reg3)
        assert not isinstance(pd, ExceedsBound) and pd <= 1, m.name
        assert not isinstance(idd, ExceedsBound) and idd <= 1, m.name


def test_degenerate_dimension_dichotomy(setup):
    alg, reg = setup
    for triple in (trivial_triple(alg), gorenstein_triple(alg)):
        for m in reg.values():
            if m.dim == 0:
                continue
            horns = xy_degenerate_dims(triple, m, 6, reg)
            assert horns["x_id"] in ("0", "inf within bound")
            assert horns["y_pd"] in ("0", "inf within bound")


def test_les_on_proper_sequences(setup):
    alg, reg = setup
    triple = gorenstein_triple(alg)
    rng = np.random.default_rng(21)
    fixed = next(m for m in reg.values() if m.dim)
    done = 0
    attempts = 0
    while done < 3 and attempts < 60:
        attempts += 1
        ses = sample_ses(reg, rng)
        side = "first" if done % 2 == 0 else "second"
        try:
            rep = les_check(triple, ses, fixed, side, imax=3, registry=reg)
        except ProperNessViolation:
            continue
        assert rep.nodes_checked > 0
        done += 1
    assert done == 3


def test_les_rejects_bad_variable_side(setup):
    alg, reg = setup
    triple = trivial_triple(alg)
    rng = np.random.default_rng(22)
    ses = sample_ses(reg, rng)
    fixed = next(m for m in reg.values() if m.dim)
    with pytest.raises(ContractViolation):
        les_check(triple, ses, fixed, "sideways")


def test_global_dims_suprema():
    cases = [("A1", "gorenstein", 0), ("A2", "trivial", 1), ("A3", "gorenstein", 1)]
    for key, kind, expected in cases:
        alg = builtin_algebra(key)
        reg = build_registry(alg)
        triple = gorenstein_triple(alg) if kind == "gorenstein" else trivial_triple(alg)
        report = global_dims(triple, 6, reg)
        assert report["z_pd_sup"] == expected, (key, kind)
        assert report["z_id_sup"] == expected, (key, kind)
