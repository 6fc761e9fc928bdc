"""The two abelian model structures attached to a cotorsion triple.

A complete hereditary triple (X, Z, Y) induces a projective-flavoured and an
injective-flavoured model structure sharing Z as the class of trivial
objects.  This module classifies maps against both structures, produces the
two certified factorizations, decides weak equivalence, computes
homotopy-category hom-sets by two independent formulas, tests the cylinder
homotopy relation and stable equivalence, and solves lifting squares.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import (CertificateViolation, ContractViolation, FormulaMismatch,
                     PreconditionViolation)
from .linalg import IncrementalSpan, solve_array
from .modules import (ModuleMap, ModuleRep, _hom_basis_array, cokernel_of,
                      direct_sum, dual_map, dual_module, is_isomorphic,
                      kernel_of, pushout, regular_module)
from .resolutions import free_cover, free_module, is_injective, is_projective
from .triples import CotorsionTriple, factor_through_mono, injective_embedding

STRUCTURES = ("projective", "injective")

STABLE_ENUM_BUDGET = 2 ** 16
STABLE_SAMPLE_BUDGET = 512
PAD_SEARCH_MAX = 4


def _check_structure(structure: str):
    if structure not in STRUCTURES:
        raise ContractViolation(f"unknown model structure {structure!r}")


class MapClassification:
    """Computed (co)fibration flags of one map in one model structure."""

    __slots__ = ("map", "structure", "flags", "witnesses")

    def __init__(self, map: ModuleMap, structure: str, flags: dict, witnesses: dict):
        self.map = map
        self.structure = structure
        self.flags = flags
        self.witnesses = witnesses

    cofibration = property(lambda s: s.flags["cofibration"])
    trivial_cofibration = property(lambda s: s.flags["trivial_cofibration"])
    fibration = property(lambda s: s.flags["fibration"])
    trivial_fibration = property(lambda s: s.flags["trivial_fibration"])
    weak_equivalence = property(lambda s: s.flags["weak_equivalence"])

    def __repr__(self):
        on = ",".join(k for k, v in sorted(self.flags.items()) if v)
        return f"MapClassification({self.structure}: {on or 'none'})"


class Factorization:
    """A certified two-step factorization f = p o i."""

    KINDS = ("trivcofib-then-fib", "cofib-then-trivfib")

    __slots__ = ("map", "middle", "i", "p", "kind", "structure")

    def __init__(self, map: ModuleMap, middle: ModuleRep, i: ModuleMap,
                 p: ModuleMap, kind: str, structure: str):
        if kind not in self.KINDS:
            raise ContractViolation(f"unknown factorization kind {kind!r}")
        _check_structure(structure)
        if not np.array_equal(p.compose(i).matrix, map.matrix):
            raise CertificateViolation("factorization does not compose to the map")
        if not i.is_mono():
            raise CertificateViolation("monic part of factorization is not monic")
        if not p.is_epi():
            raise CertificateViolation("epic part of factorization is not epic")
        self.map = map
        self.middle = middle
        self.i = i
        self.p = p
        self.kind = kind
        self.structure = structure

    def __repr__(self):
        return f"Factorization({self.kind}, {self.structure}, mid dim {self.middle.dim})"


# --- factorizations -----------------------------------------------------------

def _proj_trivcofib_fib(triple: CotorsionTriple, f: ModuleMap) -> Factorization:
    """Mapping-cylinder factorization M >-> M + F ->> N through a free cover of N."""
    m, n = f.source, f.target
    cover = free_cover(n)
    mid, incls, _ = direct_sum([m, cover.mid])
    mid.name = f"cyl({m.name},{n.name})"
    i = incls[0]
    p = ModuleMap(mid, n, np.hstack([f.matrix, cover.right.matrix]), check=False)
    return Factorization(f, mid, i, p, "trivcofib-then-fib", "projective")


def _induced_on_pushout(q: ModuleRep, legs, pieces) -> ModuleMap:
    """The unique map q -> target agreeing with the given pieces on each leg."""
    p = q.algebra.char
    target = pieces[0].target
    onto = np.hstack([leg.matrix for leg in legs])
    want = np.hstack([piece.matrix for piece in pieces])
    mat = solve_array(onto.T, want.T, p)
    if mat is None:
        raise CertificateViolation("map does not descend to the pushout")
    return ModuleMap(q, target, mat.T, check=False)


def _proj_cofib_trivfib(triple: CotorsionTriple, f: ModuleMap) -> Factorization:
    """Upgrade the cylinder factorization: push the kernel out along its
    special left Z-approximation so the epic part acquires a Z-kernel."""
    base = _proj_trivcofib_fib(triple, f)
    k, kincl = kernel_of(base.p)
    if k.dim == 0:
        return Factorization(f, base.middle, base.i, base.p,
                             "cofib-then-trivfib", "projective")
    appr = triple.salce_left_Z_approx(k, full_certificates=False)
    zprime, xprime = appr.seq.mid, appr.seq.quot     # 0 -> K -> Z' -> X' -> 0
    q, jc, jz = pushout(kincl, appr.seq.left)
    i2 = jc.compose(base.i)
    zero_piece = ModuleMap(zprime, f.target,
                           np.zeros((f.target.dim, zprime.dim), dtype=np.int64),
                           check=False)
    p2 = _induced_on_pushout(q, (jc, jz), (base.p, zero_piece))
    # ker p2 is the isomorphic image of the certified Z' (jz monic, p2 jz = 0,
    # dimensions match), so it stays in Z without re-running the oracle
    if not (jz.is_mono() and not p2.compose(jz).matrix.any()
            and q.dim == f.target.dim + zprime.dim):
        raise CertificateViolation("pushout kernel left the Z-class")
    # coker i2 is an extension of X' by the free coker of the cylinder mono:
    # jc is monic with coker X' (pushouts preserve cokernels), which pins
    # 0 -> coker(base.i) -> coker(i2) -> X' -> 0 with both ends in X
    zero_cyl = ModuleMap(base.middle, xprime,
                         np.zeros((xprime.dim, base.middle.dim), dtype=np.int64),
                         check=False)
    t = _induced_on_pushout(q, (jc, jz), (zero_cyl, appr.seq.right))
    if not (jc.is_mono() and t.is_epi()
            and q.dim == base.middle.dim + xprime.dim):
        raise CertificateViolation("pushout cokernel left the X-class")
    return Factorization(f, q, i2, p2, "cofib-then-trivfib", "projective")


def _dualized(fac: Factorization, f: ModuleMap, kind: str) -> Factorization:
    """Reread a factorization of D(f) over the opposite triple as an
    injective-structure factorization of f (double duals carry f's own data)."""
    mid = dual_module(fac.middle)
    i = ModuleMap(f.source, mid, dual_map(fac.p).matrix, check=False)
    p = ModuleMap(mid, f.target, dual_map(fac.i).matrix, check=False)
    return Factorization(f, mid, i, p, kind, "injective")


def factor_trivcofib_fib(triple: CotorsionTriple, f: ModuleMap,
                         structure: str = "projective") -> Factorization:
    """f = p o i with i a trivial cofibration and p a fibration."""
    _check_structure(structure)
    if structure == "projective":
        return _proj_trivcofib_fib(triple, f)
    inner = _proj_cofib_trivfib(triple.opposite(), dual_map(f))
    return _dualized(inner, f, "trivcofib-then-fib")


def factor_cofib_trivfib(triple: CotorsionTriple, f: ModuleMap,
                         structure: str = "projective") -> Factorization:
    """f = p o i with i a cofibration and p a trivial fibration."""
    _check_structure(structure)
    if structure == "projective":
        return _proj_cofib_trivfib(triple, f)
    inner = _proj_trivcofib_fib(triple.opposite(), dual_map(f))
    return _dualized(inner, f, "cofib-then-trivfib")


# --- weak equivalences and classification --------------------------------------

def is_weak_equivalence(triple: CotorsionTriple, f: ModuleMap,
                        structure: str = "projective") -> bool:
    """Factor through the canonical cylinder and test one Z-membership.

    In an abelian model structure an epi weak equivalence is a trivial
    fibration (and a mono one a trivial cofibration), so the verdict reduces
    to the kernel of the epic part (projective flavour) or the cokernel of
    the monic part (injective flavour) lying in Z.
    """
    _check_structure(structure)
    # the trivial objects form a thick class, so a mono is a weak
    # equivalence iff its cokernel is trivial, and dually for an epi;
    # only genuinely mixed maps need the cylinder
    if f.is_mono():
        return triple.in_Z(cokernel_of(f)[0])
    if f.is_epi():
        return triple.in_Z(kernel_of(f)[0])
    if structure == "projective":
        fac = factor_trivcofib_fib(triple, f, "projective")
        ker, _ = kernel_of(fac.p)
        return triple.in_Z(ker)
    fac = factor_cofib_trivfib(triple, f, "injective")
    cok, _ = cokernel_of(fac.i)
    return triple.in_Z(cok)


def classify_map(triple: CotorsionTriple, f: ModuleMap,
                 structure: str = "projective") -> MapClassification:
    """All five model-structure flags for one map."""
    _check_structure(structure)
    mono, epi = f.is_mono(), f.is_epi()
    ker, _ = kernel_of(f)
    cok, _ = cokernel_of(f)
    if structure == "projective":
        flags = {
            "cofibration": mono and triple.in_X(cok),
            "trivial_cofibration": mono and is_projective(cok),
            "fibration": epi,
            "trivial_fibration": epi and triple.in_Z(ker),
        }
    else:
        flags = {
            "cofibration": mono,
            "trivial_cofibration": mono and triple.in_Z(cok),
            "fibration": epi and triple.in_Y(ker),
            "trivial_fibration": epi and is_injective(ker),
        }
    flags["weak_equivalence"] = is_weak_equivalence(triple, f, structure)
    witnesses = {"kernel": ker, "cokernel": cok, "mono": mono, "epi": epi}
    return MapClassification(f, structure, flags, witnesses)


def cofibrant_replacement(triple: CotorsionTriple, m: ModuleRep) -> ModuleMap:
    """The epi X_M ->> M from the special right X-approximation."""
    return triple.right_X_approx(m).seq.right


def fibrant_replacement(triple: CotorsionTriple, m: ModuleRep) -> ModuleMap:
    """The mono M >-> Y_M from the special left Y-approximation."""
    return triple.left_Y_approx(m).seq.left


def upgrade_factorization_lemma_3_2(triple: CotorsionTriple,
                                    f: ModuleMap) -> Factorization:
    """From a projective-structure weak equivalence X -> Y, build the
    injective-structure witness: push the cylinder out along a left
    Y-approximation of the kernel, yielding an epi with injective kernel
    after a mono with Z-cokernel.
    """
    if not triple.in_X(f.source):
        raise PreconditionViolation("source must lie in X")
    if not triple.in_Y(f.target):
        raise PreconditionViolation("target must lie in Y")
    if not is_weak_equivalence(triple, f, "projective"):
        raise PreconditionViolation("map is not a projective-structure weak equivalence")
    base = _proj_trivcofib_fib(triple, f)
    k, kincl = kernel_of(base.p)
    ya = triple.left_Y_approx(k)  # 0 -> K -> Y' -> Z' -> 0
    q, jc, jy = pushout(kincl, ya.seq.left)
    i2 = jc.compose(base.i)
    zero_piece = ModuleMap(ya.seq.mid, f.target,
                           np.zeros((f.target.dim, ya.seq.mid.dim), dtype=np.int64),
                           check=False)
    p2 = _induced_on_pushout(q, (jc, jy), (base.p, zero_piece))
    ker2, _ = kernel_of(p2)
    if not is_injective(ker2):
        raise CertificateViolation("upgraded kernel is not injective")
    cok2, _ = cokernel_of(i2)
    if not triple.in_Z(cok2):
        raise CertificateViolation("upgraded cokernel left the Z-class")
    return Factorization(f, q, i2, p2, "trivcofib-then-fib", "injective")


# --- homotopy-category hom-sets -------------------------------------------------

def _through_injective(src: ModuleRep, tgt: ModuleRep) -> np.ndarray:
    """Spanning matrices for the maps src -> tgt factoring through an injective.

    One fixed mono src >-> E into an injective suffices: any factorization
    through an injective extends over E by injectivity.
    """
    p = src.algebra.char
    emb = injective_embedding(src)
    basis = _hom_basis_array(emb.mid, tgt)
    if basis.shape[0] == 0:
        return np.zeros((0, tgt.dim, src.dim), dtype=np.int64)
    return np.matmul(basis, emb.left.matrix) % p


def _through_projective(src: ModuleRep, tgt: ModuleRep) -> np.ndarray:
    """Spanning matrices for the maps src -> tgt factoring through a projective."""
    p = src.algebra.char
    cover = free_cover(tgt)
    basis = _hom_basis_array(src, cover.mid)
    if basis.shape[0] == 0:
        return np.zeros((0, tgt.dim, src.dim), dtype=np.int64)
    return np.matmul(cover.right.matrix, basis) % p


def _quotient_data(src: ModuleRep, tgt: ModuleRep, sub: np.ndarray):
    """(quotient dim, coset representative matrices) of Hom(src,tgt)/span(sub)."""
    p = src.algebra.char
    basis = _hom_basis_array(src, tgt)
    span = IncrementalSpan(tgt.dim * src.dim, p)
    if sub.shape[0] and sub.size:
        span.add(sub.reshape(sub.shape[0], -1))
    reps = []
    for j in range(basis.shape[0]):
        if span.add(basis[j].reshape(1, -1)):
            reps.append(basis[j])
    return len(reps), reps


def ho_hom(triple: CotorsionTriple, m: ModuleRep, n: ModuleRep) -> dict:
    """Hom in the homotopy category by both stable-hom formulas.

    Formula 1 uses the fibrant replacement: Hom(M, Y_N) modulo maps through
    an injective.  Formula 2 uses the cofibrant replacement: Hom(X_M, N)
    modulo maps through a projective.  Both must agree.
    """
    yn = triple.left_Y_approx(n).seq.mid
    d1, _ = _quotient_data(m, yn, _through_injective(m, yn))
    xm = triple.right_X_approx(m).seq.mid
    d2, reps = _quotient_data(xm, n, _through_projective(xm, n))
    if d1 != d2:
        raise FormulaMismatch(
            f"stable hom formulas disagree: {d1} (injective) vs {d2} (projective)")
    return {
        "dim": d1,
        "dim_via_injective_formula": d1,
        "dim_via_projective_formula": d2,
        "representatives": [ModuleMap(xm, n, r, check=False) for r in reps],
        "cofibrant_replacement": xm,
        "fibrant_replacement": yn,
    }


def homotopic(triple: CotorsionTriple, f: ModuleMap, g: ModuleMap) -> bool:
    """Whether f and g (same source/target, fibrant target) are homotopic.

    For maps into a fibrant object of the injective structure, homotopy is
    the difference factoring through an injective; one fixed embedding of
    the source into an injective decides it.
    """
    if f.source is not g.source and f.source.dim != g.source.dim:
        raise ContractViolation("maps must share a source")
    if f.target is not g.target and f.target.dim != g.target.dim:
        raise ContractViolation("maps must share a target")
    emb = injective_embedding(f.source)
    return factor_through_mono(emb.left, g - f) is not None


# --- stable equivalence ---------------------------------------------------------

def _solve_stable_inverse(a: ModuleRep, b: ModuleRep, f_mat: np.ndarray,
                          sub_aa: np.ndarray, sub_bb: np.ndarray):
    """g: b -> a with g f = id_a and f g = id_b modulo the given subspaces."""
    p = a.algebra.char
    basis_ba = _hom_basis_array(b, a)
    h = basis_ba.shape[0]
    gf = np.matmul(basis_ba, f_mat) % p             # (h, a.dim, a.dim)
    fg = np.matmul(f_mat, basis_ba) % p             # (h, b.dim, b.dim)
    ta, tb = sub_aa.shape[0], sub_bb.shape[0]
    rows_a, rows_b = a.dim * a.dim, b.dim * b.dim
    cols = np.zeros((rows_a + rows_b, h + ta + tb), dtype=np.int64)
    if h:
        cols[:rows_a, :h] = gf.reshape(h, -1).T
        cols[rows_a:, :h] = fg.reshape(h, -1).T
    if ta:
        cols[:rows_a, h:h + ta] = sub_aa.reshape(ta, -1).T
    if tb:
        cols[rows_a:, h + ta:] = sub_bb.reshape(tb, -1).T
    want = np.concatenate([np.eye(a.dim, dtype=np.int64).reshape(-1),
                           np.eye(b.dim, dtype=np.int64).reshape(-1)])
    x = solve_array(cols, want, p)
    if x is None:
        return None
    if h == 0:
        g_mat = np.zeros((a.dim, b.dim), dtype=np.int64)
    else:
        g_mat = np.einsum("t,tab->ab", x[:h], basis_ba) % p
    return ModuleMap(b, a, g_mat, check=False)


def _padded_iso(a: ModuleRep, b: ModuleRep, seed: int):
    """Search small free paddings with a + A^s isomorphic to b + A^t."""
    alg = a.algebra
    d = alg.dim
    for s, t in itertools.product(range(PAD_SEARCH_MAX), repeat=2):
        if a.dim + s * d != b.dim + t * d:
            continue
        left = a if s == 0 else direct_sum([a, free_module(alg, s)])[0]
        right = b if t == 0 else direct_sum([b, free_module(alg, t)])[0]
        verdict, cert = is_isomorphic(left, right, seed=seed)
        if verdict == "yes":
            return {"pad_left": s, "pad_right": t, "iso": cert}
    return None


def stable_equivalent(triple: CotorsionTriple, m: ModuleRep, n: ModuleRep,
                      side: str = "X", seed: int = 0) -> dict:
    """Decide whether the (co)fibrant replacements agree in the stable category.

    X-side: search f: X_M -> X_N, g back, mutually inverse modulo maps
    through projectives.  Y-side is the injective-flavoured dual.  The
    search enumerates coset representatives exhaustively when the class
    count is small and samples otherwise; only an exhaustive miss yields
    "no".
    """
    if side not in ("X", "Y"):
        raise ContractViolation("side must be 'X' or 'Y'")
    p = triple.algebra.char
    if side == "X":
        a = triple.right_X_approx(m).seq.mid
        b = triple.right_X_approx(n).seq.mid
        through = _through_projective
    else:
        a = triple.left_Y_approx(m).seq.mid
        b = triple.left_Y_approx(n).seq.mid
        through = _through_injective
    sub_ab = through(a, b)
    sub_aa = through(a, a)
    sub_bb = through(b, b)
    q, reps = _quotient_data(a, b, sub_ab)
    out = {"side": side, "objects": (a, b), "maps": None,
           "padded_iso": None, "complete_search": False, "classes_searched": 0}
    if p ** q <= STABLE_ENUM_BUDGET:
        coeff_iter = itertools.product(range(p), repeat=q)
        out["complete_search"] = True
    else:
        rng = np.random.default_rng(seed)
        coeff_iter = (tuple(rng.integers(0, p, size=q))
                      for _ in range(STABLE_SAMPLE_BUDGET))
    zero_f = np.zeros((b.dim, a.dim), dtype=np.int64)
    for coeffs in coeff_iter:
        out["classes_searched"] += 1
        f_mat = zero_f if q == 0 else (
            np.einsum("t,tab->ab", np.asarray(coeffs, dtype=np.int64),
                      np.stack(reps)) if any(coeffs) else zero_f) % p
        g = _solve_stable_inverse(a, b, f_mat, sub_aa, sub_bb)
        if g is not None:
            out["verdict"] = "yes"
            out["maps"] = (ModuleMap(a, b, f_mat, check=False), g)
            out["padded_iso"] = _padded_iso(a, b, seed)
            return out
    out["verdict"] = "no" if out["complete_search"] else "unknown"
    return out


# --- lifting problems -----------------------------------------------------------

def solve_lifting(triple: CotorsionTriple, i: ModuleMap, p_map: ModuleMap,
                  top: ModuleMap, bottom: ModuleMap,
                  structure: str = "projective") -> ModuleMap:
    """A lift h for the square top o ? = ? with h i = top and p h = bottom.

    Preconditions (checked): i is a cofibration, p a fibration, and at least
    one of the two is trivial; the square commutes.  Existence is then a
    model-category axiom, so a missing solution is a bug signal.
    """
    _check_structure(structure)
    ci = classify_map(triple, i, structure)
    cp = classify_map(triple, p_map, structure)
    if not ci.cofibration:
        raise PreconditionViolation("left edge is not a cofibration")
    if not cp.fibration:
        raise PreconditionViolation("right edge is not a fibration")
    if not (ci.trivial_cofibration or cp.trivial_fibration):
        raise PreconditionViolation("neither edge is trivial")
    p = triple.algebra.char
    if not np.array_equal(p_map.compose(top).matrix, bottom.compose(i).matrix):
        raise ContractViolation("square does not commute")
    basis = _hom_basis_array(i.target, p_map.source)
    h = basis.shape[0]
    against_i = np.matmul(basis, i.matrix) % p        # (h, X.dim, A.dim)
    under_p = np.matmul(p_map.matrix, basis) % p      # (h, Y.dim, B.dim)
    cols = np.vstack([against_i.reshape(h, -1).T if h else
                      np.zeros((top.matrix.size, 0), dtype=np.int64),
                      under_p.reshape(h, -1).T if h else
                      np.zeros((bottom.matrix.size, 0), dtype=np.int64)])
    want = np.concatenate([top.matrix.reshape(-1), bottom.matrix.reshape(-1)])
    x = solve_array(cols, want, p)
    if x is None:
        raise CertificateViolation("no lift despite certified preconditions")
    if h == 0:
        mat = np.zeros((p_map.source.dim, i.target.dim), dtype=np.int64)
    else:
        mat = np.einsum("t,tab->ab", x, basis) % p
    return ModuleMap(i.target, p_map.source, mat, check=False)
