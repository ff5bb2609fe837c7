"""Degree-1 specialization: anticanonical model w^2 = z^3 + f4 z + f6,
singular-fiber classification over the real line, the connectedness
heuristic from fiber Euler characteristics, certification of the minimal
rows of the degree-1 classification, and star-of-David configurations of
(-1)-classes for order-3 elements of type A_2^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import realroots
from .invforms import BinaryForm, PointGroup2D, group_from_label, in_span, invariant_subspace
from .picard import LatticeClass, PicardLattice, enumerate_exceptional
from .weyl import Isometry, fingerprint, minus_on_kperp, reflection


class NonSquarefreeDiscriminant(ValueError):
    pass


class NotTypeA2Squared(ValueError):
    pass


@dataclass(frozen=True)
class DP1Surface:
    """Coefficients of the reduced model w^2 = z^3 + f4(x,y) z + f6(x,y)."""

    f4: BinaryForm
    f6: BinaryForm

    def __post_init__(self):
        if self.f4.degree != 4 or self.f6.degree != 6:
            raise ValueError("need forms of degrees 4 and 6")
        if not (self.f4.is_rational() and self.f6.is_rational()):
            raise ValueError("coefficients must be rational")
        if discriminant(self).is_zero():
            raise ValueError("identically-zero discriminant: every fiber is singular")

    def is_smooth_proxy(self) -> bool:
        """Squarefreeness of the discriminant form (the smoothness proxy)."""
        dehom, inf_mult = _dehomogenize(discriminant(self))
        return realroots.is_squarefree(dehom) and inf_mult <= 1


def discriminant(s: DP1Surface) -> BinaryForm:
    """The degree-12 form 4 f4^3 + 27 f6^2."""
    return 4 * (s.f4 ** 3) + 27 * (s.f6 ** 2)


def _dehomogenize(form: BinaryForm) -> tuple[list[Fraction], int]:
    """(coeffs of F(t, 1) ascending, multiplicity of the root at infinity)."""
    coeffs = form.rational_coeffs()  # x^k, ..., y^k
    asc = list(reversed(coeffs))  # t^0 ... t^k with t = x/y
    poly = realroots.poly_trim(asc)
    inf_mult = form.degree - realroots.poly_degree(poly) if poly else form.degree
    return poly, inf_mult


@dataclass(frozen=True)
class FiberReport:
    location: tuple[Fraction, Fraction] | str  # isolating interval or "infinity"
    kind: str  # "acnode", "crunode", "cusp"


def classify_fibers(s: DP1Surface) -> list[FiberReport]:
    """Real singular fibers with exact kinds.

    A root t of the discriminant gives z^3 + pz + q = (z - r)^2 (z + 2r)
    with q = 2r^3, so the node has two real branches iff r > 0: the kind is
    crunode for f6(t) > 0, acnode for f6(t) < 0, cusp when f4 and f6 share
    the root.  Cusp roots are allowed (the discriminant vanishes there to
    order exactly two); any other multiple root raises.
    """
    disc, inf_mult = _dehomogenize(discriminant(s))
    f4d, f4_inf = _dehomogenize(s.f4)
    f6d, f6_inf = _dehomogenize(s.f6)
    cusp = realroots.squarefree_part(realroots.poly_gcd(f4d, f6d))
    reports: list[FiberReport] = []
    # finite cusp roots
    cusp_intervals = realroots.isolate_real_roots(cusp) if realroots.poly_degree(cusp) >= 1 else []
    residual = disc
    if realroots.poly_degree(cusp) >= 1:
        for _ in range(2):
            q, r = realroots.poly_divmod(residual, cusp)
            if r:
                raise NonSquarefreeDiscriminant(
                    "cusp root of unexpected multiplicity in the discriminant"
                )
            residual = q
    if not realroots.is_squarefree(residual):
        raise NonSquarefreeDiscriminant("discriminant has a non-cusp multiple root")
    if realroots.poly_degree(realroots.poly_gcd(residual, cusp)) >= 1:
        raise NonSquarefreeDiscriminant("cusp root of unexpected multiplicity")
    located: list[tuple[list[Fraction], tuple[Fraction, Fraction], str]] = []
    for interval in cusp_intervals:
        located.append((cusp, interval, "cusp"))
    for interval in realroots.isolate_real_roots(residual):
        sign = realroots.sign_at_root(residual, interval, f6d)
        located.append((residual, interval, "crunode" if sign > 0 else "acnode"))
    # shrink until the reported intervals are pairwise disjoint
    changed = True
    while changed:
        changed = False
        for i in range(len(located)):
            for j in range(i + 1, len(located)):
                (pi, (alo, ahi), ki), (pj, (blo, bhi), kj) = located[i], located[j]
                if ahi > blo and bhi > alo:
                    located[i] = (pi, realroots.tighten_interval(pi, (alo, ahi), (ahi - alo) / 4), ki)
                    located[j] = (pj, realroots.tighten_interval(pj, (blo, bhi), (bhi - blo) / 4), kj)
                    changed = True
    located.sort(key=lambda t: t[1])
    reports.extend(FiberReport(interval, kind) for _, interval, kind in located)
    # the point at infinity [1:0]
    if inf_mult == 0:
        pass
    elif f4_inf >= 1 and f6_inf >= 1:
        if inf_mult != 2:
            raise NonSquarefreeDiscriminant("cusp at infinity of unexpected multiplicity")
        reports.append(FiberReport("infinity", "cusp"))
    elif inf_mult == 1:
        lead = s.f6.rational_coeffs()[0]  # f6(1, 0)
        reports.append(FiberReport("infinity", "crunode" if lead > 0 else "acnode"))
    else:
        raise NonSquarefreeDiscriminant("multiple discriminant root at infinity")
    return reports


def euler_heuristic(s: DP1Surface) -> tuple[int, str]:
    """(acnodes - crunodes, verdict); negative Euler number certifies a
    connected real locus (hence rationality), anything else is inconclusive."""
    reports = classify_fibers(s)
    euler = sum(1 for r in reports if r.kind == "acnode") - sum(
        1 for r in reports if r.kind == "crunode"
    )
    return euler, ("rational" if euler < 0 else "inconclusive")


# ---------------------------------------------------------------------------
# minimal rows of the degree-1 classification table

TABLE8_ROWS = {
    # label: (2D point group acting on (x, y), Bertini present in the lift a
    # priori; for nontrivial groups the lift contains it iff -id is present)
    "Z/2": None,
    "Z/4": "z4",
    "Z/6": "z6",
    "(Z/2)^2": "d2",
    "D_4": "d4",
    "D_6": "d6",
}


def table8_certify(group: PointGroup2D | None, s: DP1Surface, bertini_in_lift: bool = False) -> bool:
    """True iff (f4, f6) lie in the group's invariant families and the lifted
    group contains the Bertini involution (via -id, or the explicit flag for
    the group generated by the Bertini involution alone)."""
    if group is None:
        return bool(bertini_in_lift)
    has_bertini = bertini_in_lift or group.contains_minus_identity()
    if not has_bertini:
        return False
    fam4 = invariant_subspace(group, 4)
    fam6 = invariant_subspace(group, 6)
    return in_span(s.f4, fam4) and in_span(s.f6, fam6)


def table8_certify_row(label: str, s: DP1Surface) -> bool:
    if label not in TABLE8_ROWS:
        raise ValueError(f"unknown table row {label!r}")
    key = TABLE8_ROWS[label]
    if key is None:
        return table8_certify(None, s, bertini_in_lift=True)
    return table8_certify(group_from_label(key), s)


# ---------------------------------------------------------------------------
# star configurations for type A_2^2 elements


@dataclass(frozen=True)
class StarConfiguration:
    """Six (-1)-classes H_1..H_6 with H_i.H_(i+1) = 0, H_i.H_(i+2) = 2,
    H_i.H_(i+3) = 3 and H_i + H_(i+3) = -2K."""

    classes: tuple[LatticeClass, ...]
    pointwise_fixed: bool

    def validate(self, lat: PicardLattice) -> None:
        h = self.classes
        if len(h) != 6:
            raise ValueError("a star configuration has six classes")
        minus2k = -2 * lat.canonical
        for i in range(6):
            if lat.intersection(h[i], h[(i + 1) % 6]) != 0:
                raise ValueError("adjacent classes must be disjoint")
            if lat.intersection(h[i], h[(i + 2) % 6]) != 2:
                raise ValueError("next-nearest classes must meet twice")
            if lat.intersection(h[i], h[(i + 3) % 6]) != 3:
                raise ValueError("opposite classes must meet three times")
            if (h[i] + h[(i + 3) % 6]).coords != minus2k.coords:
                raise ValueError("opposite classes must sum to -2K")


def a22_element(lat: PicardLattice) -> Isometry:
    """A reference order-3 element of type A_2^2: the product of Coxeter
    rotations of two orthogonal A_2 root subsystems e_1-e_2, e_2-e_3 and
    e_4-e_5, e_5-e_6."""
    if lat.degree != 1:
        raise ValueError("the reference element lives on degree 1")

    def root(i, j):
        c = [0] * 9
        c[i], c[j] = 1, -1
        return LatticeClass(tuple(c))

    r1 = reflection(lat, root(1, 2))
    r2 = reflection(lat, root(2, 3))
    r3 = reflection(lat, root(4, 5))
    r4 = reflection(lat, root(5, 6))
    return r1 * r2 * r3 * r4


def _is_a22(lat: PicardLattice, g: Isometry) -> bool:
    fp = fingerprint(lat, g)
    if fp.order != 3 or fp.trace_kperp != 2:
        return False
    # charpoly on K-perp must be (x^2+x+1)^2 (x-1)^4
    want = _poly_mul((1, 1, 1), (1, 1, 1))
    for _ in range(4):
        want = _poly_mul(want, (-1, 1))
    return fp.charpoly_kperp == tuple(want)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def find_star_configurations(g: Isometry) -> list[StarConfiguration]:
    """For an order-3 element of type A_2^2: the two pointwise-fixed stars
    and the two stars rotated by g, pairwise asynchronized; also verifies
    the block form I_4 + [[-1,-1],[1,0]] + [[-1,-1],[1,0]] of g on the basis
    built from adjacent star classes."""
    lat = g.lattice
    if lat.degree != 1:
        raise NotTypeA2Squared("star configurations live on degree 1")
    if not _is_a22(lat, g):
        raise NotTypeA2Squared("element is not of type A_2^2 with trace 2")
    lines = enumerate_exceptional(lat)
    arr = np.array([e.coords for e in lines], dtype=np.int64)
    index = {e.coords: i for i, e in enumerate(lines)}
    perm = [index[tuple(int(x) for x in row)] for row in arr @ g.np.T]
    beta = minus_on_kperp(lat)
    beta_perm = [index[tuple(int(x) for x in row)] for row in arr @ beta.np.T]
    gram = arr @ lat.gram @ arr.T
    fixed = [i for i in range(len(lines)) if perm[i] == i]
    if len(fixed) != 12:
        raise NotTypeA2Squared(f"expected 12 fixed classes, found {len(fixed)}")

    def order_star(six: list[int]) -> list[int]:
        start = min(six)
        cycle = [start]
        prev = None
        while len(cycle) < 6:
            nxt = [
                j
                for j in six
                if j != cycle[-1] and j != prev and gram[cycle[-1], j] == 0
            ]
            prev = cycle[-1]
            cycle.append(nxt[0])
        return cycle

    stars: list[StarConfiguration] = []
    # pointwise-fixed stars: components of the disjointness graph on the 12
    remaining = set(fixed)
    while remaining:
        start = min(remaining)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in list(remaining):
                if w not in comp and gram[v, w] == 0:
                    comp.add(w)
                    stack.append(w)
        remaining -= comp
        if len(comp) != 6:
            raise NotTypeA2Squared("fixed classes do not split into two stars")
        stars.append(
            StarConfiguration(
                tuple(lines[i] for i in order_star(sorted(comp))), pointwise_fixed=True
            )
        )
    # faithful stars: g-orbits {e, ge, g^2 e} of mutually twice-meeting
    # classes; a star is an orbit together with its Bertini image, so each
    # star arises from two orbits and is deduplicated by its index set
    seen: set[int] = set()
    star_sets: set[frozenset[int]] = set()
    for i in range(len(lines)):
        if i in seen or perm[i] == i:
            continue
        orbit = [i, perm[i], perm[perm[i]]]
        seen.update(orbit)
        if gram[orbit[0], orbit[1]] == 2 and gram[orbit[0], orbit[2]] == 2 and gram[orbit[1], orbit[2]] == 2:
            e, ge, gge = orbit
            ordered = [e, beta_perm[gge], ge, beta_perm[e], gge, beta_perm[ge]]
            key = frozenset(ordered)
            if key in star_sets:
                continue
            star_sets.add(key)
            stars.append(
                StarConfiguration(tuple(lines[j] for j in ordered), pointwise_fixed=False)
            )
    if sum(1 for s in stars if not s.pointwise_fixed) != 2 or len(stars) != 4:
        raise NotTypeA2Squared("expected exactly two fixed and two rotated stars")
    for s in stars:
        s.validate(lat)
    # pairwise asynchronized: every cross intersection is 1
    for a in range(4):
        for b in range(a + 1, 4):
            for ha in stars[a].classes:
                for hb in stars[b].classes:
                    if lat.intersection(ha, hb) != 1:
                        raise NotTypeA2Squared("stars are not pairwise asynchronized")
    _verify_block_matrix(lat, g, stars)
    return stars


def star_basis(lat: PicardLattice, stars: list[StarConfiguration]) -> np.ndarray:
    """Rows: H_1 + K and H_2 + K for each star (a basis of K-perp over Q)."""
    k = np.array(lat.canonical.coords, dtype=np.int64)
    rows = []
    for s in stars:
        for i in range(2):
            rows.append(np.array(s.classes[i].coords, dtype=np.int64) + k)
    return np.stack(rows)


def star_block_matrix(lat: PicardLattice, g: Isometry, stars) -> np.ndarray:
    """Matrix of g on the star basis, columns = images of basis vectors."""
    basis = star_basis(lat, stars)  # 8 x 9, rows span K-perp
    images = basis @ g.np.T
    coeffs, *_ = np.linalg.lstsq(basis.T.astype(float), images.T.astype(float), rcond=None)
    mat = np.rint(coeffs.T).astype(np.int64)
    if not np.array_equal(mat @ basis, images):
        raise NotTypeA2Squared("star classes do not span K-perp integrally")
    return mat.T  # column convention: g(b_j) = sum_i mat[i, j] b_i


def _verify_block_matrix(lat: PicardLattice, g: Isometry, stars) -> None:
    mat = star_block_matrix(lat, g, stars)
    rot = np.array([[-1, -1], [1, 0]], dtype=np.int64)
    expected = np.zeros((8, 8), dtype=np.int64)
    expected[:4, :4] = np.eye(4, dtype=np.int64)
    expected[4:6, 4:6] = rot
    expected[6:8, 6:8] = rot
    if not np.array_equal(mat, expected):
        raise NotTypeA2Squared("block matrix of g on the star basis is unexpected")


def bertini_twist_trace_identity(lat: PicardLattice, sigma: Isometry) -> bool:
    """tr of (Bertini o sigma) on K-perp equals minus the trace of sigma."""
    beta = minus_on_kperp(lat)
    lhs = int(np.trace((beta * sigma).np)) - 1
    rhs = -(int(np.trace(sigma.np)) - 1)
    return lhs == rhs
