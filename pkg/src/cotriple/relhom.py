"""Proper resolutions, relative Ext with balance, relative dimensions, and
long exact sequences with explicitly computed connecting maps."""

from __future__ import annotations

import numpy as np

from .errors import (BalanceViolation, ContractViolation, CrossCheckViolation,
                     ExactnessViolation, ProperNessViolation, PropertyViolation)
from .homcomplex import (CochainComplex, _composition_matrix, post_hom_complex,
                         pre_hom_complex)
from .linalg import column_space_basis, in_column_space, kernel_array, mat_mul, rank, solve_array
from .modules import (ModuleMap, ModuleRep, ShortExactSeq, _hom_basis_array,
                      hom_coordinates, hom_dim, zero_map, zero_module)
from .resolutions import ExceedsBound, ext_dim, ext_dims
from .triples import ApproxSeq, CotorsionTriple


class ProperResolution:
    """A proper X-resolution ... -> X_1 -> X_0 -> M -> 0 (or its dual).

    For kind "proper-X": objs[i] = X_i, maps[i]: X_{i+1} -> X_i, and
    kernels[i] is the kernel of the comparison X_i -> kernels[i-1]
    (kernels[-1] meaning M).  For kind "proper-Y" the arrows point the other
    way: objs[j] = Y^j, maps[j]: Y^j -> Y^{j+1}, cokernels tracked instead.
    """

    __slots__ = ("kind", "module", "objs", "maps", "steps")

    def __init__(self, kind, module, objs, maps, steps):
        self.kind = kind
        self.module = module
        self.objs = objs
        self.maps = maps
        self.steps = steps

    def syzygy(self, n):
        """K_n (kind proper-X) or the n-th cosyzygy L^n (kind proper-Y); n >= 0."""
        if n == 0:
            return self.module
        if n - 1 < len(self.steps):
            seq = self.steps[n - 1].seq
            return seq.sub if self.kind == "proper-X" else seq.quot
        return zero_module(self.module.algebra)


def proper_x_resolution(triple: CotorsionTriple, m: ModuleRep, n: int) -> ProperResolution:
    key = ("proper_x", triple._tag)
    hit = m._cache.get(key)
    if hit is not None and len(hit.objs) >= n + 1:
        return hit
    objs, maps, steps = [], [], []
    cur = m
    prev_left = None
    for i in range(n + 1):
        ax = triple.right_X_approx(cur)
        steps.append(ax)
        objs.append(ax.seq.mid)
        if prev_left is not None:
            maps.append(prev_left.compose(ax.seq.right))
        prev_left = ax.seq.left
        cur = ax.seq.sub
    res = ProperResolution("proper-X", m, objs, maps, steps)
    m._cache[key] = res
    return res


def proper_y_coresolution(triple: CotorsionTriple, n_mod: ModuleRep, n: int) -> ProperResolution:
    key = ("proper_y", triple._tag)
    hit = n_mod._cache.get(key)
    if hit is not None and len(hit.objs) >= n + 1:
        return hit
    objs, maps, steps = [], [], []
    cur = n_mod
    prev_right = None
    for i in range(n + 1):
        ay = triple.left_Y_approx(cur)
        steps.append(ay)
        objs.append(ay.seq.mid)
        if prev_right is not None:
            maps.append(ay.seq.left.compose(prev_right))
        prev_right = ay.seq.right
        cur = ay.seq.quot
    res = ProperResolution("proper-Y", n_mod, objs, maps, steps)
    n_mod._cache[key] = res
    return res


class ExtTable:
    """Relative Ext dimensions of a pair by both routes, plus absolute Ext."""

    __slots__ = ("triple_name", "pair", "via_x", "via_y", "absolute")

    def __init__(self, triple_name, pair, via_x, via_y, absolute):
        self.triple_name = triple_name
        self.pair = pair
        self.via_x = via_x
        self.via_y = via_y
        self.absolute = absolute

    @property
    def dims(self):
        return self.via_x

    def to_dict(self):
        return {
            "triple": self.triple_name,
            "pair": list(self.pair),
            "ext_xy_via_x_resolution": self.via_x,
            "ext_xy_via_y_coresolution": self.via_y,
            "ext_absolute": self.absolute,
        }


def ext_xy(triple: CotorsionTriple, m: ModuleRep, n: ModuleRep, imax: int = 4) -> ExtTable:
    """Relative Ext table; raises BalanceViolation if the two routes differ."""
    if m.dim == 0 or n.dim == 0:
        zeros = [0] * (imax + 1)
        return ExtTable(triple.name, (m.name, n.name), zeros, list(zeros),
                        ext_dims(m, n, imax))
    resx = proper_x_resolution(triple, m, imax + 1)
    cx = pre_hom_complex(resx.objs, resx.maps, n, imax + 1)
    via_x = cx.cohomology_dims(imax)
    resy = proper_y_coresolution(triple, n, imax + 1)
    cy = post_hom_complex(m, resy.objs, resy.maps, imax + 1)
    via_y = cy.cohomology_dims(imax)
    for i in range(imax + 1):
        if via_x[i] != via_y[i]:
            raise BalanceViolation(i, f"({m.name},{n.name}): {via_x[i]} vs {via_y[i]}")
    if via_x[0] != hom_dim(m, n):
        raise BalanceViolation(0, "degree 0 does not equal dim Hom")
    return ExtTable(triple.name, (m.name, n.name), via_x, via_y,
                    ext_dims(m, n, imax))


# --- relative dimensions -------------------------------------------------------

def z_pd(triple: CotorsionTriple, m: ModuleRep, bound: int = 10, registry=None):
    """Z-projective dimension: smallest n with the n-th proper-X syzygy in X.

    When a registry is supplied, the answer is cross-checked against the
    Ext-vanishing criterion over its Z-members.
    """
    result = ExceedsBound(bound)
    res = None
    for n in range(bound + 1):
        res = proper_x_resolution(triple, m, n)
        if triple.in_X(res.syzygy(n)):
            result = n
            break
    if registry is not None:
        other = _z_pd_by_ext(triple, m, bound, registry)
        if not _dims_compatible(result, other, bound):
            raise CrossCheckViolation(
                f"z_pd({m.name}): syzygy criterion {result} vs registry Ext criterion {other}")
    return result


def z_id(triple: CotorsionTriple, n_mod: ModuleRep, bound: int = 10, registry=None):
    """Z-injective dimension via proper-Y cosyzygies, dual to z_pd."""
    result = ExceedsBound(bound)
    for n in range(bound + 1):
        res = proper_y_coresolution(triple, n_mod, n)
        if triple.in_Y(res.syzygy(n)):
            result = n
            break
    if registry is not None:
        other = _z_id_by_ext(triple, n_mod, bound, registry)
        if not _dims_compatible(result, other, bound):
            raise CrossCheckViolation(
                f"z_id({n_mod.name}): cosyzygy criterion {result} vs registry Ext criterion {other}")
    return result


def _z_members(triple, registry):
    return [m for m in registry.values() if m.dim and triple.in_Z(m)]


def _z_pd_by_ext(triple, m, bound, registry):
    zs = _z_members(triple, registry)
    for n in range(bound + 1):
        if all(ext_dim(m, z, n + i) == 0 for z in zs for i in (1, 2, 3)):
            return n
    return ExceedsBound(bound)


def _z_id_by_ext(triple, n_mod, bound, registry):
    zs = _z_members(triple, registry)
    for n in range(bound + 1):
        if all(ext_dim(z, n_mod, n + i) == 0 for z in zs for i in (1, 2, 3)):
            return n
    return ExceedsBound(bound)


def _dims_compatible(exact, registry_bounded, bound):
    """The registry criterion is a lower bound; it may undershoot but not exceed."""
    if isinstance(exact, ExceedsBound):
        return True  # registry members may simply not witness the obstruction
    if isinstance(registry_bounded, ExceedsBound):
        return False
    return registry_bounded <= exact


def xy_degenerate_dims(triple: CotorsionTriple, m: ModuleRep, bound: int,
                       registry) -> dict:
    """The 0-or-infinity dichotomy of the degenerate relative dimensions.

    X-id(m) over the registry: if Ext^{n+1}(X, m) vanishes for all registered
    X-members for some n <= bound, then Ext^1(X, m) must vanish too (horn
    "0"); otherwise the horn is "inf within bound".  Dually for Y-pd.
    """
    xs = [x for x in registry.values() if x.dim and triple.in_X(x)]
    ys = [y for y in registry.values() if y.dim and triple.in_Y(y)]

    def horn(members, ext_of):
        finite_n = None
        for n in range(bound + 1):
            if all(ext_of(t, n + 1) == 0 for t in members):
                finite_n = n
                break
        if finite_n is None:
            return "inf within bound"
        bad = [t.name for t in members if ext_of(t, 1) != 0]
        if bad:
            raise PropertyViolation(
                f"{m.name}: dichotomy fails, vanishing from degree {finite_n + 1} "
                f"but degree 1 obstruction at {bad}", witness=(bad, finite_n))
        return "0"

    return {
        "x_id": horn(xs, lambda x, i: ext_dim(x, m, i)),
        "y_pd": horn(ys, lambda y, i: ext_dim(m, y, i)),
    }


# --- long exact sequences -------------------------------------------------------

class LongExactReport:
    __slots__ = ("variant", "dims", "nodes_checked", "connecting_ranks")

    def __init__(self, variant, dims, nodes_checked, connecting_ranks):
        self.variant = variant
        self.dims = dims
        self.nodes_checked = nodes_checked
        self.connecting_ranks = connecting_ranks


def _levelwise_hom_ses(complexes, level_maps, p):
    """Verify 0 -> C'^i -> C^i -> C''^i -> 0 exact at every level."""
    cx0, cx1, cx2 = complexes
    f01, f12 = level_maps
    for i, (a, b) in enumerate(zip(f01, f12)):
        if rank(a, p) != cx0.dims[i]:
            raise ProperNessViolation(f"level {i}: first map not injective")
        if rank(b, p) != cx2.dims[i]:
            raise ProperNessViolation(f"level {i}: second map not surjective")
        if mat_mul(b, a, p).any():
            raise ProperNessViolation(f"level {i}: composite nonzero")
        if cx0.dims[i] + cx2.dims[i] != cx1.dims[i]:
            raise ProperNessViolation(f"level {i}: dimensions do not add up")


def _induced_on_cohomology(src: CochainComplex, tgt: CochainComplex, level_maps, i, p):
    """Matrix of H^i(src) -> H^i(tgt) on chosen cohomology representatives."""
    reps = src.cohomology_reps(i)
    tgt_reps = tgt.cohomology_reps(i)
    return _classes_matrix([mat_mul(level_maps[i], r[:, None], p)[:, 0] for r in reps],
                           tgt, i, tgt_reps, p), reps, tgt_reps


def _classes_matrix(images, cx: CochainComplex, i, reps, p):
    """Coordinates of cocycle images in the basis (reps + coboundaries)."""
    b = cx.coboundaries(i)
    basis = np.hstack([np.array(reps).T, b]) if reps else b
    out = np.zeros((len(reps), len(images)), dtype=np.int64)
    for j, img in enumerate(images):
        if basis.shape[1] == 0:
            if img.any():
                raise ExactnessViolation(i, "image not a cocycle class")
            continue
        sol = solve_array(basis, img, p)
        if sol is None:
            raise ExactnessViolation(i, "image class outside cohomology")
        out[:, j] = sol[:len(reps)]
    return out


def _connecting_matrix(cx0, cx1, cx2, level_maps, i, p):
    """Snake connecting map H^i(C'') -> H^{i+1}(C') on representatives.

    level_maps = (incl per level, proj per level) of the levelwise SES
    0 -> C' -> C -> C'' -> 0.
    """
    incl, proj = level_maps
    reps2 = cx2.cohomology_reps(i)
    reps0 = cx0.cohomology_reps(i + 1)
    images = []
    for r in reps2:
        # lift the C''-cocycle to C at level i
        lift = solve_array(proj[i], r, p)
        if lift is None:
            raise ExactnessViolation(i, "cocycle does not lift levelwise")
        db = mat_mul(cx1.diff(i), lift[:, None], p)[:, 0]
        # d(lift) maps to zero in C'' (r is a cocycle), so pull back to C'
        back = solve_array(incl[i + 1], db, p)
        if back is None:
            raise ExactnessViolation(i, "differential of lift not in the subcomplex")
        images.append(back)
    return _classes_matrix(images, cx0, i + 1, reps0, p), reps2, reps0


def les_check(triple: CotorsionTriple, ses: ShortExactSeq, fixed: ModuleRep,
              variable_side: str, imax: int = 4, registry=None) -> LongExactReport:
    """Assemble and verify the relative-Ext long exact sequence of a proper SES.

    variable_side "first": the SES feeds the contravariant argument and the
    fixed module is coresolved (0 -> Ext(C,N) -> Ext(B,N) -> Ext(A,N) -> ...).
    variable_side "second": the fixed module is resolved and the SES feeds the
    covariant argument.
    """
    p = triple.algebra.char
    if variable_side not in ("first", "second"):
        raise ContractViolation("variable_side must be 'first' or 'second'")
    if variable_side == "first":
        resy = proper_y_coresolution(triple, fixed, imax + 1)
        objs, maps = resy.objs, resy.maps
        # contravariant: the SES reverses
        cx0 = pre_hom_complex_fixed_targets(ses.quot, objs, maps, imax + 1, p)
        cx1 = pre_hom_complex_fixed_targets(ses.mid, objs, maps, imax + 1, p)
        cx2 = pre_hom_complex_fixed_targets(ses.sub, objs, maps, imax + 1, p)
        incl = [_composition_matrix(cx0.bases[i], cx1.bases[i], ses.right.matrix, p, post=False)
                for i in range(imax + 2)]
        proj = [_composition_matrix(cx1.bases[i], cx2.bases[i], ses.left.matrix, p, post=False)
                for i in range(imax + 2)]
    else:
        resx = proper_x_resolution(triple, fixed, imax + 1)
        objs, maps = resx.objs, resx.maps
        cx0 = pre_hom_complex(objs, maps, ses.sub, imax + 1)
        cx1 = pre_hom_complex(objs, maps, ses.mid, imax + 1)
        cx2 = pre_hom_complex(objs, maps, ses.quot, imax + 1)
        incl = [_composition_matrix(cx0.bases[i], cx1.bases[i], ses.left.matrix, p, post=True)
                for i in range(imax + 2)]
        proj = [_composition_matrix(cx1.bases[i], cx2.bases[i], ses.right.matrix, p, post=True)
                for i in range(imax + 2)]
    _levelwise_hom_ses((cx0, cx1, cx2), (incl, proj), p)

    # assemble ... -> H^i(cx0) -f-> H^i(cx1) -g-> H^i(cx2) -delta-> H^{i+1}(cx0) -> ...
    segments = []
    dims = []
    connecting_ranks = []
    for i in range(imax + 1):
        f, _, _ = _induced_on_cohomology(cx0, cx1, incl, i, p)
        g, _, _ = _induced_on_cohomology(cx1, cx2, proj, i, p)
        segments.append(("f", i, f))
        segments.append(("g", i, g))
        dims.append((cx0.cohomology_dim(i), cx1.cohomology_dim(i), cx2.cohomology_dim(i)))
        if i < imax:
            delta, _, _ = _connecting_matrix(cx0, cx1, cx2, (incl, proj), i, p)
            segments.append(("delta", i, delta))
            connecting_ranks.append(rank(delta, p))
    # exactness: composite zero and rank(ker) = rank(im) at every interior node
    nodes = 0
    for (n1, i1, m1), (n2, i2, m2) in zip(segments, segments[1:]):
        if mat_mul(m2, m1, p).any():
            raise ExactnessViolation(f"{n1}{i1}->{n2}{i2}", "composite nonzero")
        # exact at the middle: rank m1 = nullity m2
        nullity = m2.shape[1] - rank(m2, p)
        if rank(m1, p) != nullity:
            raise ExactnessViolation(f"{n1}{i1}->{n2}{i2}",
                                     f"rank {rank(m1, p)} vs nullity {nullity}")
        nodes += 1
    # exactness at the very first node: H^0(cx0) -> H^0(cx1) injective
    first = segments[0][2]
    if rank(first, p) != first.shape[1]:
        raise ExactnessViolation("start", "left end not injective")
    variant = "first" if variable_side == "first" else "second"
    return LongExactReport(variant, dims, nodes, connecting_ranks)


def pre_hom_complex_fixed_targets(m: ModuleRep, objs, maps, length, p) -> CochainComplex:
    """Hom(m, objs[0]) -> Hom(m, objs[1]) -> ... (postcomposition), alias.

    Separate name only to mirror the two LES variants symmetrically.
    """
    return post_hom_complex(m, objs, maps, length)


# --- global dimensions -----------------------------------------------------------

def global_dims(triple: CotorsionTriple, bound: int, registry) -> dict:
    """Suprema of z_pd / z_id over the registry plus the finiteness equivalences.

    Verifies that the two suprema agree and that, when the common value is n,
    every registered Z-member has projective and injective dimension <= n.
    """
    from .resolutions import proj_dim, inj_dim
    pds, ids_ = {}, {}
    for name, m in registry.items():
        if m.dim == 0:
            continue
        pds[name] = z_pd(triple, m, bound, registry=registry)
        ids_[name] = z_id(triple, m, bound, registry=registry)
    sup_pd = _sup(pds.values(), bound)
    sup_id = _sup(ids_.values(), bound)
    report = {"z_pd": {k: _dim_str(v) for k, v in pds.items()},
              "z_id": {k: _dim_str(v) for k, v in ids_.items()},
              "z_pd_sup": _dim_str(sup_pd), "z_id_sup": _dim_str(sup_id)}
    if _dim_str(sup_pd) != _dim_str(sup_id):
        raise PropertyViolation(
            f"z_pd_sup {sup_pd} differs from z_id_sup {sup_id}", witness=report)
    if not isinstance(sup_pd, ExceedsBound):
        n = sup_pd
        for name, m in registry.items():
            if m.dim == 0 or not triple.in_Z(m):
                continue
            pd = proj_dim(m, bound)
            idim = inj_dim(m, bound)
            if isinstance(pd, ExceedsBound) or pd > n or \
               isinstance(idim, ExceedsBound) or idim > n:
                raise PropertyViolation(
                    f"Z-member {name} has pd {pd} / id {idim} above the supremum {n}",
                    witness=(name, _dim_str(pd), _dim_str(idim)))
    return report


def _sup(values, bound):
    out = 0
    for v in values:
        if isinstance(v, ExceedsBound):
            return ExceedsBound(bound)
        out = max(out, v)
    return out


def _dim_str(v):
    return f"ExceedsBound({v.bound})" if isinstance(v, ExceedsBound) else int(v)
