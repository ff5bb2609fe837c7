"""Degree-4 specialization: the sign-vector group A, the five real forms and
their Galois patterns on conic-bundle pairs, 6x6 lattice matrices, minimality
criteria (star condition, delta/epsilon counts), subgroup enumeration, and
the cyclic block characteristic of a real pencil of quadrics.

Conventions.  An automorphism is a pair (a, tau) with a in
A = {a in (Z/2)^5 : sum a_i = 0} and tau a permutation of the five pairs of
conic bundles; the product is (a, tau)(b, ups) = (a + tau.b, tau ups) with
(tau.b)_i = b_{tau^{-1}(i)}.  On the basis e_0 = -K, e_i = C_i the matrix
sends e_j to a_{tau(j)} e_0 + (-1)^{a_{tau(j)}} e_{tau(j)}, which makes the
matrix map a homomorphism and reproduces the published order-4 matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

import numpy as np


class NotAGroup(ValueError):
    pass


class UnsupportedForm(ValueError):
    pass


class DegeneratePencil(ValueError):
    pass


# ---------------------------------------------------------------------------
# the group A rtimes S_5


def _check_sign(bits) -> tuple[int, ...]:
    bits = tuple(int(b) % 2 for b in bits)
    if len(bits) != 5:
        raise ValueError("sign vectors have five components")
    if sum(bits) % 2 != 0:
        raise ValueError(f"sign vector {bits} has odd weight (not in A)")
    return bits


def _perm_inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def _perm_act(p: tuple[int, ...], bits: tuple[int, ...]) -> tuple[int, ...]:
    """(p.b)_i = b_{p^{-1}(i)}: move the entry at slot j to slot p(j)."""
    out = [0] * 5
    for j in range(5):
        out[p[j]] = bits[j]
    return tuple(out)


@dataclass(frozen=True)
class DP4Element:
    """Pair (sign, perm); perm maps pair index i (0-based) to perm[i]."""

    sign: tuple[int, ...]
    perm: tuple[int, ...] = (0, 1, 2, 3, 4)

    def __post_init__(self):
        object.__setattr__(self, "sign", tuple(int(b) % 2 for b in self.sign))
        object.__setattr__(self, "perm", tuple(self.perm))
        if len(self.sign) != 5 or sorted(self.perm) != [0, 1, 2, 3, 4]:
            raise ValueError("need five sign bits and a permutation of 0..4")

    def __mul__(self, other: "DP4Element") -> "DP4Element":
        sign = tuple(
            (a + b) % 2 for a, b in zip(self.sign, _perm_act(self.perm, other.sign))
        )
        perm = tuple(self.perm[other.perm[i]] for i in range(5))
        return DP4Element(sign, perm)

    def inverse(self) -> "DP4Element":
        pinv = _perm_inverse(self.perm)
        return DP4Element(_perm_act(pinv, self.sign), pinv)

    def is_identity(self) -> bool:
        return self.sign == (0, 0, 0, 0, 0) and self.perm == (0, 1, 2, 3, 4)

    def order(self) -> int:
        g, n = self, 1
        while not g.is_identity():
            g, n = g * self, n + 1
        return n

    def in_a(self) -> bool:
        return self.perm == (0, 1, 2, 3, 4)


IDENTITY = DP4Element((0, 0, 0, 0, 0))


def sign_vector(bits) -> DP4Element:
    return DP4Element(_check_sign(bits))


def perm_element(images_1based) -> DP4Element:
    """Element (0, tau) from 1-based images, e.g. (1,3,2,5,4) for (23)(45)."""
    return DP4Element((0, 0, 0, 0, 0), tuple(i - 1 for i in images_1based))


# ---------------------------------------------------------------------------
# real forms: Galois action on the ten conic bundles, in the same encoding


@dataclass(frozen=True)
class DP4RealForm:
    label: str
    flips: tuple[int, ...]  # flip bit per pair, indexed by target slot
    pair_perm: tuple[int, ...]

    def sigma_matrix(self) -> np.ndarray:
        return _element_matrix(self.flips, self.pair_perm)


REAL_FORMS = {
    "split": DP4RealForm("split", (0, 0, 0, 0, 0), (0, 1, 2, 3, 4)),
    "q31_02": DP4RealForm("q31_02", (0, 1, 1, 0, 0), (0, 1, 2, 4, 3)),
    "p2_12": DP4RealForm("p2_12", (0, 0, 0, 0, 0), (0, 2, 1, 4, 3)),
    "p2_31": DP4RealForm("p2_31", (0, 0, 0, 0, 0), (0, 1, 2, 4, 3)),
    "q22_02": DP4RealForm("q22_02", (0, 0, 0, 1, 1), (0, 1, 2, 3, 4)),
}


def get_form(label: str) -> DP4RealForm:
    key = label.lower().replace("-", "_").replace("__", "_")
    aliases = {
        "q31_0_2": "q31_02",
        "p2_1_2": "p2_12",
        "p2_3_1": "p2_31",
        "q22_0_2": "q22_02",
    }
    key = aliases.get(key, key)
    if key not in REAL_FORMS:
        raise UnsupportedForm(f"unknown degree-4 real form {label!r}")
    return REAL_FORMS[key]


def _element_matrix(sign: tuple[int, ...], perm: tuple[int, ...]) -> np.ndarray:
    """Matrix on the basis e_0 = -K, e_1..e_5 = C_1..C_5 (columns = images)."""
    mat = np.zeros((6, 6), dtype=np.int64)
    mat[0, 0] = 1
    for j in range(5):
        t = perm[j]
        a = sign[t]
        mat[0, j + 1] = a
        mat[t + 1, j + 1] = 1 - 2 * a
    return mat


def dp4_matrix(el: DP4Element, form: DP4RealForm, with_sigma: bool = False) -> np.ndarray:
    """Lattice matrix of el (optionally composed with the form's sigma)."""
    mat = _element_matrix(el.sign, el.perm)
    if with_sigma:
        mat = form.sigma_matrix() @ mat
    return mat


# the Q_{3,1}(0,2) geometric basis (F, Fbar, E_p, E_pbar, E_q, E_qbar):
# integer coordinates of e_0 = -K and e_i = C_i
_Q31_BASIS = np.array(
    [
        [2, 1, 1, 1, 1, 0],
        [2, 1, 1, 1, 0, 1],
        [-1, -1, -1, -1, 0, 0],
        [-1, -1, 0, 0, 0, 0],
        [-1, 0, -1, 0, 0, 0],
        [-1, 0, 0, -1, 0, 0],
    ],
    dtype=np.int64,
)


def dp4_matrix_geometric(el: DP4Element, with_sigma: bool = False) -> np.ndarray:
    """Matrix of el on Q_{3,1}(0,2) in the basis (F, Fbar, E_p, E_pbar, E_q, E_qbar)."""
    m = dp4_matrix(el, REAL_FORMS["q31_02"], with_sigma)
    t = _Q31_BASIS.astype(float)
    out = t @ m @ np.linalg.inv(t)
    out_int = np.rint(out).astype(np.int64)
    if not np.allclose(out, out_int, atol=1e-9):
        raise ArithmeticError("geometric change of basis is not integral")
    return out_int


# ---------------------------------------------------------------------------
# invariant rank and the counting shortcuts


def _check_closed(subgroup) -> list[DP4Element]:
    elems = list(subgroup)
    eset = set(elems)
    if IDENTITY not in eset:
        raise NotAGroup("subgroup must contain the identity")
    for g in elems:
        for h in elems:
            if g * h not in eset:
                raise NotAGroup(f"set is not closed: {g} * {h} missing")
    return elems


def dp4_invariant_rank(subgroup, form: DP4RealForm):
    """Character-formula rank over {1, sigma} x subgroup; exact Fraction."""
    elems = _check_closed(subgroup)
    total = 0
    for g in elems:
        total += int(np.trace(dp4_matrix(g, form))) - 1
        total += int(np.trace(dp4_matrix(g, form, with_sigma=True))) - 1
    rank = 1 + Fraction(total, 2 * len(elems))
    return int(rank) if rank.denominator == 1 else rank


def delta_criterion(subgroup, form: DP4RealForm) -> bool:
    """The published counting shortcut for strong minimality on P^2_R(3,1)
    and Q_{2,2}(0,2): delta_i / epsilon_i count bit values at positions 1-3
    and 4-5 over all elements."""
    if form.label not in ("p2_31", "q22_02"):
        raise UnsupportedForm("delta criterion applies to p2_31 and q22_02")
    vecs = [g.sign if isinstance(g, DP4Element) else _check_sign(g) for g in subgroup]
    for v in vecs:
        _check_sign(v)
    delta0 = sum(1 for v in vecs for i in range(3) if v[i] == 0)
    delta1 = sum(1 for v in vecs for i in range(3) if v[i] == 1)
    eps0 = sum(1 for v in vecs for i in range(3, 5) if v[i] == 0)
    eps1 = sum(1 for v in vecs for i in range(3, 5) if v[i] == 1)
    if form.label == "p2_31":
        return 2 * (delta0 - delta1) + (eps0 - eps1) == 0
    return delta0 == delta1


def star_condition(subgroup) -> bool:
    """True when all elements have a_1 = 0, or all have a_4 = a_5 = 0;
    either clause certifies non-minimality on the sphere form."""
    vecs = [g.sign if isinstance(g, DP4Element) else _check_sign(g) for g in subgroup]
    return all(v[0] == 0 for v in vecs) or all(v[3] == 0 and v[4] == 0 for v in vecs)


# ---------------------------------------------------------------------------
# subgroup enumeration


def _close_set(gens: frozenset[DP4Element]) -> frozenset[DP4Element]:
    span = {IDENTITY}
    queue = [IDENTITY]
    while queue:
        cur = queue.pop()
        for g in gens:
            nxt = g * cur
            if nxt not in span:
                span.add(nxt)
                queue.append(nxt)
    return frozenset(span)


def ambient_group(form: DP4RealForm) -> list[DP4Element]:
    """Elements whose lattice matrix commutes with the form's sigma, with the
    permutation part restricted to the form's published constraint."""
    allowed_perms = {
        "split": [tuple(p) for p in permutations(range(5))],
        "q31_02": [(0, 1, 2, 3, 4), (0, 2, 1, 4, 3)],
        # S_3 on pairs {1,2,3} x S_2 on {4,5}
        "p2_12": None,
        "p2_31": None,
        "q22_02": None,
    }[form.label]
    if allowed_perms is None:
        allowed_perms = []
        for p3 in permutations(range(3)):
            for p2 in permutations((3, 4)):
                allowed_perms.append(tuple(p3) + tuple(p2))
    sigma = form.sigma_matrix()
    out = []
    for perm in allowed_perms:
        for bits in range(32):
            sign = tuple((bits >> i) & 1 for i in range(5))
            if sum(sign) % 2:
                continue
            el = DP4Element(sign, perm)
            m = _element_matrix(el.sign, el.perm)
            if np.array_equal(sigma @ m, m @ sigma):
                out.append(el)
    return out


def all_subgroups(elements: list[DP4Element]) -> list[frozenset[DP4Element]]:
    """Every subgroup of the (small) group given by its element list."""
    eset = frozenset(elements)
    trivial = frozenset([IDENTITY])
    found = {trivial}
    frontier = [trivial]
    while frontier:
        h = frontier.pop()
        for g in eset:
            if g in h:
                continue
            bigger = _close_set(frozenset(h | {g}))
            if bigger <= eset and bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    return sorted(found, key=lambda s: (len(s), sorted((g.sign, g.perm) for g in s)))


def _conjugate(sub: frozenset[DP4Element], h: DP4Element) -> frozenset[DP4Element]:
    hinv = h.inverse()
    return frozenset(h * g * hinv for g in sub)


def isomorphism_label(sub) -> str:
    """Coarse isomorphism type from order statistics (enough for 2-groups
    of order <= 16 and the small extensions met here)."""
    elems = list(sub)
    n = len(elems)
    orders = sorted(g.order() for g in elems)
    eset = set(elems)
    abelian = all(g * h == h * g for g in elems for h in elems)
    center = sum(1 for g in elems if all(g * h == h * g for h in elems))
    key = (n, tuple(orders), abelian)
    named = {
        (1, (1,), True): "1",
        (2, (1, 2), True): "Z/2",
        (3, (1, 3, 3), True): "Z/3",
        (4, (1, 2, 2, 2), True): "(Z/2)^2",
        (4, (1, 2, 4, 4), True): "Z/4",
        (6, (1, 2, 2, 2, 3, 3), False): "S_3",
        (6, (1, 2, 3, 3, 6, 6), True): "Z/6",
        (8, tuple([1] + [2] * 7), True): "(Z/2)^3",
        (8, (1, 2, 2, 2, 4, 4, 4, 4), True): "Z/4xZ/2",
        (8, (1, 2, 2, 2, 2, 2, 4, 4), False): "D_4",
        (8, (1, 2, 4, 4, 4, 4, 4, 4), False): "Q_8",
        (16, tuple([1] + [2] * 15), True): "(Z/2)^4",
    }
    if key in named:
        return named[key]
    if n == 16 and not abelian and max(orders) == 4 and center == 4:
        return "(Z/2)^3:Z/2"
    kind = "abelian" if abelian else "nonabelian"
    return f"{kind} order {n}"


@dataclass(frozen=True)
class MinimalSubgroupReport:
    form: str
    elements: tuple[DP4Element, ...]
    label: str

    @property
    def order(self) -> int:
        return len(self.elements)


def enumerate_strongly_minimal(form: DP4RealForm, ambient=None) -> list[MinimalSubgroupReport]:
    """All strongly minimal subgroups of the ambient, up to ambient conjugacy."""
    ambient = list(ambient) if ambient is not None else ambient_group(form)
    subs = all_subgroups(ambient)
    minimal = [s for s in subs if dp4_invariant_rank(s, form) == 1]
    reps: list[frozenset[DP4Element]] = []
    seen: set[frozenset[DP4Element]] = set()
    for s in minimal:
        if s in seen:
            continue
        reps.append(s)
        for h in ambient:
            seen.add(_conjugate(s, h))
    out = []
    for s in reps:
        elems = tuple(sorted(s, key=lambda g: (g.perm, g.sign)))
        out.append(MinimalSubgroupReport(form.label, elems, isomorphism_label(s)))
    out.sort(key=lambda r: (r.order, r.label, [(g.perm, g.sign) for g in r.elements]))
    return out


# ---------------------------------------------------------------------------
# Wall characteristic of a real pencil of quadrics


@dataclass(frozen=True)
class PencilSpec:
    """Diagonal part of a nonsingular real pencil: rational pairs (a_k, b_k)."""

    real_eigen_pairs: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        pairs = tuple(
            (Fraction(a), Fraction(b)) for a, b in self.real_eigen_pairs
        )
        if any(a == 0 and b == 0 for a, b in pairs):
            raise ValueError("pencil pairs must be nonzero")
        object.__setattr__(self, "real_eigen_pairs", pairs)


def _primitive(a: Fraction, b: Fraction) -> tuple[int, int]:
    den = math.lcm(a.denominator, b.denominator)
    p, q = int(a * den), int(b * den)
    g = math.gcd(abs(p), abs(q))
    return p // g, q // g


def _half(v: tuple[int, int]) -> int:
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_cmp(u: tuple[int, int], v: tuple[int, int]) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    cross = u[0] * v[1] - u[1] * v[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def wall_characteristic(p: PencilSpec) -> tuple[int, ...]:
    """Cyclic block sizes of the points P_k (and antipodes) around the circle.

    P_k is the direction of (a_k, b_k); blocks are maximal runs of P's
    between runs of antipodes.  The cyclic sequence of P-block sizes is
    normalized to its lexicographically maximal rotation, matching the
    published table strings; its entries sum to the number of real pairs
    and their count 2g+1 determines the genus g.
    """
    import functools

    pairs = p.real_eigen_pairs
    if not pairs:
        raise DegeneratePencil("need at least one real eigenvalue pair")
    pts: list[tuple[tuple[int, int], int]] = []
    for a, b in pairs:
        d = _primitive(a, b)
        pts.append((d, 0))  # P point
        pts.append(((-d[0], -d[1]), 1))  # antipode Q
    seen = set()
    for v, _ in pts:
        if v in seen:
            raise DegeneratePencil("coincident or antipodal pencil points")
        seen.add(v)
    pts.sort(key=functools.cmp_to_key(lambda s, t: _angle_cmp(s[0], t[0])))
    labels = [lab for _, lab in pts]
    n = len(labels)
    # rotate so a block boundary sits at position 0
    start = next(i for i in range(n) if labels[i] != labels[(i - 1) % n])
    labels = labels[start:] + labels[:start]
    runs: list[tuple[int, int]] = []
    for lab in labels:
        if runs and runs[-1][0] == lab:
            runs[-1] = (lab, runs[-1][1] + 1)
        else:
            runs.append((lab, 1))
    p_sizes = [size for lab, size in runs if lab == 0]
    if len(p_sizes) % 2 != 1:
        raise DegeneratePencil("antipodal symmetry violated (degenerate input)")
    rotations = [
        tuple(p_sizes[i:] + p_sizes[:i]) for i in range(len(p_sizes))
    ]
    return max(rotations)
