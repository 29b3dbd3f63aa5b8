"""Dynamical-plane combinatorics of one polynomial: co-landing periodic rays.

Two periodic angles are declared to co-land when their itineraries agree,
with the boundary symbol matching anything, with respect to both
characteristic angles. Classes are connected components of that relation,
restricted to angles of one exact period (rays landing at a common periodic
point share their period). Every table is validated: classes must be
pairwise unlinked and mapped into single classes by ``t -> d*t``, and the
characteristic pair must share a class.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import angles as ang
from . import kernels
from .errors import InvalidInputError, LandingCriterionError, StructuralError

__all__ = [
    "Itinerary",
    "LandingLayer",
    "LandingTable",
    "LandingCriterionError",
    "itinerary",
    "build_layer",
    "landing_table",
    "check_unlinked",
    "class_period",
    "class_rotation_number",
    "fixed_classes",
    "alpha_class",
    "critical_value_root_class",
    "biaccessible_census",
]

LANDING_FORMAT = "raymate-landing/1"


@dataclass(frozen=True)
class Itinerary:
    """Symbols over ``0..d-1``; ``None`` is the boundary symbol."""

    reference: Fraction
    symbols: tuple

    def __str__(self):
        return "(" + ",".join("*" if s is None else str(s) for s in self.symbols) + ")"

    def compatible(self, other):
        return len(self.symbols) == len(other.symbols) and all(
            a is None or b is None or a == b for a, b in zip(self.symbols, other.symbols)
        )


def _is_centre(p):
    return p.lower == p.upper == 0


def itinerary(p, t, reference):
    """Itinerary of ``t`` against the partition points ``(reference + j)/d``.

    The arc ending at ``(reference + j)/d`` carries label ``j`` (mod d).
    """
    t, reference = Fraction(t) % 1, Fraction(reference) % 1
    if reference not in p.pair:
        raise InvalidInputError("reference must be a characteristic angle")
    d = p.degree
    r = ang.period(d, t)
    m = d**r - 1
    row = kernels.itinerary_codes([int(t * m)], r, d, reference.numerator, reference.denominator)[0]
    return Itinerary(reference, tuple(None if s == kernels.STAR else s for s in row))


class LandingLayer:
    """Co-landing classes among the angles of one exact period ``r``.

    ``label[a]`` is the index in ``classes`` of the angle ``a / (d**r - 1)``
    (``-1`` for numerators of smaller exact period).
    """

    def __init__(self, descriptor, r, classes):
        self.descriptor = descriptor
        self.period = r
        self.modulus = descriptor.degree**r - 1
        self.classes = tuple(sorted(classes))
        m = max(self.modulus, 1)
        label = [-1] * m
        for i, c in enumerate(self.classes):
            for t in c:
                label[t.numerator * (m // t.denominator)] = i
        self.label = label

    def index_of(self, t):
        t = Fraction(t) % 1
        m = max(self.modulus, 1)
        q, rem = divmod(m, t.denominator)
        i = self.label[t.numerator * q] if rem == 0 else -1
        if i < 0:
            raise KeyError(t)
        return i

    def class_of(self, t):
        return self.classes[self.index_of(t)]

    def nontrivial(self):
        return [c for c in self.classes if len(c) > 1]

    def __contains__(self, t):
        try:
            self.index_of(t)
        except KeyError:
            return False
        return True


def _compute_classes(p, r):
    d = p.degree
    m = d**r - 1
    nums = ang.layer_numerators(d, r)
    if _is_centre(p):
        return [(Fraction(a, m),) for a in nums]
    lo = kernels.itinerary_codes(nums, r, d, p.lower.numerator, p.lower.denominator)
    hi = kernels.itinerary_codes(nums, r, d, p.upper.numerator, p.upper.denominator)
    star = kernels.STAR
    us, vs = [], []
    first = {}
    starred = []
    for i, (a, b) in enumerate(zip(lo, hi)):
        if star in a or star in b:
            starred.append(i)
            continue
        key = tuple(a) + tuple(b)
        j = first.setdefault(key, i)
        if j != i:
            us.append(i)
            vs.append(j)
    for i, j in kernels.star_matches(lo, hi, starred):
        us.append(i)
        vs.append(j)
    labels, _, _ = kernels.components(len(nums), us, vs)
    groups = {}
    for a, lab in zip(nums, labels):
        groups.setdefault(lab, []).append(Fraction(a, m))
    return [tuple(sorted(g)) for g in groups.values()]


def check_unlinked(classes):
    """Raise :class:`LandingCriterionError` if two classes interleave."""
    points = []
    owner = {}
    for c in classes:
        if len(c) < 2:
            continue
        for t in c:
            if t in owner:
                raise LandingCriterionError(
                    f"angle {ang.format_angle(t)} in two classes", (owner[t], c)
                )
            owner[t] = c
            points.append(t)
    points.sort()
    seen = {}
    stack = []
    for t in points:
        c = owner[t]
        k = seen.get(c, 0)
        if k == 0:
            stack.append(c)
        elif stack[-1] is not c:
            raise LandingCriterionError("linked classes", (stack[-1], c))
        seen[c] = k + 1
        if k + 1 == len(c):
            stack.pop()


def _check_equivariant(lay):
    d = lay.descriptor.degree
    m = max(lay.modulus, 1)
    label = lay.label
    images = {}
    for a in range(m):
        i = label[a]
        if i < 0:
            continue
        j = label[a * d % m]
        k = images.setdefault(i, j)
        if k != j:
            raise LandingCriterionError(
                "class image meets two classes", (lay.classes[k], lay.classes[j])
            )


_PRIMED = {}


def validate_layer(lay):
    """Run the structural checks on a layer; raises on failure."""
    p, r = lay.descriptor, lay.period
    check_unlinked(lay.classes)
    _check_equivariant(lay)
    if not _is_centre(p) and p.period == r and lay.class_of(p.lower) is not lay.class_of(p.upper):
        raise LandingCriterionError(
            "characteristic angles in different classes",
            (lay.class_of(p.lower), lay.class_of(p.upper)),
        )
    return lay


def prime_layer(lay):
    """Install a layer loaded from elsewhere (after validating it)."""
    validate_layer(lay)
    _PRIMED[(lay.descriptor, lay.period)] = lay


def build_layer(p, r):
    """Validated co-landing classes of the period-``r`` angles for ``p``."""
    lay = _PRIMED.get((p, r))
    if lay is not None:
        return lay
    return _build_layer(p, r)


@lru_cache(maxsize=None)
def _build_layer(p, r):
    if r < 1:
        raise InvalidInputError("period must be positive")
    return validate_layer(LandingLayer(p, r, _compute_classes(p, r)))


def _divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


class LandingTable:
    """Co-landing partition of all angles whose period divides ``bound``.

    ``layers`` maps each exact period to its :class:`LandingLayer`. A table
    may carry only a subset of the divisor layers (``partial``).
    """

    def __init__(self, descriptor, bound, layers):
        self.descriptor = descriptor
        self.bound = bound
        self.layers = dict(sorted(layers.items()))
        self.partial = set(self.layers) != set(_divisors(bound))

    @property
    def classes(self):
        return [c for lay in self.layers.values() for c in lay.classes]

    def nontrivial(self):
        return [c for lay in self.layers.values() for c in lay.nontrivial()]

    def class_of(self, t):
        t = Fraction(t) % 1
        r = ang.period(self.descriptor.degree, t)
        lay = self.layers.get(r)
        if lay is None:
            raise InvalidInputError(f"{ang.format_angle(t)} outside the table universe")
        return lay.class_of(t)

    def __contains__(self, t):
        t = Fraction(t) % 1
        if not ang.is_periodic(self.descriptor.degree, t):
            return False
        return ang.period(self.descriptor.degree, t) in self.layers

    def to_records(self):
        p = self.descriptor
        return {
            "format": LANDING_FORMAT,
            "degree": p.degree,
            "lower": ang.format_angle(p.lower),
            "upper": ang.format_angle(p.upper),
            "bound": self.bound,
            "layers": list(self.layers),
            "classes": [[ang.format_angle(t) for t in c] for c in self.nontrivial()],
        }

    @classmethod
    def from_records(cls, rec, descriptor):
        if rec.get("format") != LANDING_FORMAT:
            raise InvalidInputError("unsupported landing table format")
        d = descriptor.degree
        big = {}
        for c in rec["classes"]:
            cl = tuple(sorted(ang.parse_angle(s) for s in c))
            big.setdefault(ang.period(d, cl[0]), []).append(cl)
        layers = {}
        for r in rec["layers"]:
            got = big.get(r, [])
            covered = {t for c in got for t in c}
            single = [(t,) for t in ang.layer(d, r) if t not in covered]
            layers[r] = LandingLayer(descriptor, r, got + single)
        return cls(descriptor, rec["bound"], layers)


def landing_table(p, N, layers=None):
    """Validated landing table for ``p`` over angles of period dividing ``N``.

    ``layers`` optionally restricts the table to some divisors of ``N``.
    """
    if N < 1:
        raise InvalidInputError("bound must be positive")
    divs = _divisors(N)
    if layers is not None:
        bad = [r for r in layers if r not in divs]
        if bad:
            raise InvalidInputError(f"layers {bad} do not divide {N}")
        divs = sorted(set(layers))
    tab = LandingTable(p, N, {r: build_layer(p, r) for r in divs})
    check_unlinked(tab.nontrivial())
    return tab


def class_period(c, d):
    """Least ``k >= 1`` with ``d**k`` mapping the class into itself."""
    members = set(c)
    t = c[0]
    k, x = 1, t * d % 1
    while x not in members:
        x = x * d % 1
        k += 1
    return k


def class_rotation_number(c, d):
    """Rotation number of the first return map on the cyclic order of ``c``."""
    c = tuple(sorted(c))
    q = len(c)
    if q == 1:
        return Fraction(0)
    k = class_period(c, d)
    index = {t: i for i, t in enumerate(c)}
    shifts = set()
    for i, t in enumerate(c):
        j = index.get(t * d**k % 1)
        if j is None:
            raise StructuralError("class not invariant under first return")
        shifts.add((j - i) % q)
    if len(shifts) != 1:
        raise StructuralError("first return does not rotate the class")
    return Fraction(shifts.pop(), q)


def _beta_angles(d):
    return [Fraction(k, d - 1) for k in range(d - 1)]


def alpha_class(p, max_period=None):
    """The non-beta fixed class: fixed by ``t -> d*t`` with nonzero rotation.

    Layers up to ``max_period`` (default: the descriptor period) are
    scanned; returns None if no such class is found.
    """
    d = p.degree
    top = max_period or max(p.period, 2)
    for r in range(2, top + 1):
        lay = build_layer(p, r)
        for c in lay.nontrivial():
            if class_period(c, d) == 1 and class_rotation_number(c, d) != 0:
                return c
    return None


def fixed_classes(p, table):
    """``(alpha, beta)`` for the table; ``alpha`` is None when outside it."""
    d = p.degree
    beta = []
    for t in _beta_angles(d):
        c = table.class_of(t) if t in table else (t,)
        if c not in beta:
            beta.append(c)
    alpha = None
    for r, lay in table.layers.items():
        if r == 1:
            continue
        for c in lay.nontrivial():
            if class_period(c, d) == 1 and class_rotation_number(c, d) != 0:
                alpha = c
                break
        if alpha is not None:
            break
    return alpha, beta


def critical_value_root_class(p, table, k):
    """Class of ``d**k * lower``: root of the Fatou component of iterate ``k+1``."""
    if not 0 <= k < p.period:
        raise InvalidInputError("iterate index out of range")
    return table.class_of(ang.times(p.degree, p.lower, k))


def biaccessible_census(p, N):
    """All classes with at least two angles among periods dividing ``N``."""
    return landing_table(p, N).nontrivial()


# ---------------------------------------------------------------------------
# Independent oracles
# ---------------------------------------------------------------------------


def leaf_classes(leaves):
    """Non-singleton connected components of a set of chords, sorted."""
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in leaves:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups = {}
    for x in list(parent):
        groups.setdefault(find(x), []).append(x)
    return sorted(tuple(sorted(g)) for g in groups.values() if len(g) > 1)


def _chord_survivors(p, r, depth):
    import numpy as np
    from math import lcm

    d = p.degree
    m = d**r - 1
    nums = np.array(ang.layer_numerators(d, r), dtype=object)
    den = lcm(p.lower.denominator, p.upper.denominator)
    L = lcm(m, d * den)
    if d * L >= 2**62:
        raise InvalidInputError("chord oracle coordinates exceed int64")
    lo_n, hi_n = int(p.lower * den), int(p.upper * den)
    scale = L // (d * den)
    # closed short arcs [(lo+j)/d, (hi+j)/d] and major chords {(hi+j)/d, (lo+j+1)/d}
    s_lo = np.array([(lo_n + j * den) * scale for j in range(d)], dtype=np.int64)
    s_hi = np.array([(hi_n + j * den) * scale for j in range(d)], dtype=np.int64)
    majors = [(int(s_hi[j]), int((lo_n + (j + 1) * den) * scale % L)) for j in range(d)]
    step = L // m
    rows = []
    x = [int(a) for a in nums]
    for _ in range(depth):
        rows.append([a * step for a in x])
        x = [a * d % m for a in x]
    C = np.array(rows, dtype=np.int64)  # (depth, n)
    S = np.full(C.shape, -1, dtype=np.int64)
    for j in range(d):
        S[(C >= s_lo[j]) & (C <= s_hi[j])] = j
    n = C.shape[1]
    out = []
    block = max(1, 200000 // max(1, n * depth))
    for i0 in range(0, n, block):
        i1 = min(n, i0 + block)
        X = C[:, i0:i1, None]
        Y = C[:, None, :]
        lo = np.minimum(X, Y)
        hi = np.maximum(X, Y)
        bad = np.zeros((depth, i1 - i0, n), dtype=bool)
        is_major = np.zeros_like(bad)
        for u, v in majors:
            inside_u = (lo < u) & (u < hi)
            inside_v = (lo < v) & (v < hi)
            distinct = (X != u) & (X != v) & (Y != u) & (Y != v)
            bad |= distinct & (inside_u != inside_v)
            is_major |= ((X == u) & (Y == v)) | ((X == v) & (Y == u))
        SX = S[:, i0:i1, None]
        SY = S[:, None, :]
        bad |= (SX >= 0) & (SY >= 0) & (SX != SY) & ~is_major
        alive = ~bad.any(axis=0)
        ii, jj = np.nonzero(alive)
        for a, b in zip(ii.tolist(), jj.tolist()):
            i = a + i0
            if i < b:
                out.append((Fraction(int(nums[i]), m), Fraction(int(nums[b]), m)))
    return out


def pullback_leaves(p, N, depth=None):
    """Periodic leaves of the lamination of ``p`` by forward-orbit pruning.

    A chord joining two angles of the same period dividing ``N`` is kept
    when none of its first ``depth`` images (default: a full period) crosses
    a major leaf or joins two distinct closed short arcs of the critical
    gap (a major leaf itself is allowed). The survivors must be pairwise
    unlinked as classes; otherwise :class:`OracleAmbiguityError` is raised.
    """
    from .errors import OracleAmbiguityError

    leaves = set()
    if _is_centre(p):
        return leaves
    for r in _divisors(N):
        if r == 1:
            continue
        leaves.update(_chord_survivors(p, r, depth or r))
    try:
        check_unlinked(leaf_classes(leaves))
    except LandingCriterionError as exc:
        raise OracleAmbiguityError(f"pruned leaves are linked: {exc.classes}") from exc
    return leaves


def portrait_leaves(p, N):
    """Quadratic orbit-portrait leaves present in the plane of ``p``.

    A period-``r`` characteristic pair ``(a, b)`` contributes the orbit of
    the leaf ``{a, b}`` exactly when its closed wake contains the wake of
    ``p``. Built from the parameter-side pairing, so it is independent of
    the itinerary criterion.
    """
    from .parameter import lavaurs_table

    if p.degree != 2:
        raise InvalidInputError("orbit portraits are computed in degree 2 only")
    leaves = set()
    if _is_centre(p):
        return leaves
    divs = [r for r in _divisors(N) if r > 1]
    if not divs:
        return leaves
    tab = lavaurs_table(max(divs))
    for a, b in tab.pairs:
        if N % ang.period(2, a):
            continue
        if a <= p.lower and p.upper <= b:
            x, y = a, b
            for _ in range(ang.period(2, a)):
                leaves.add((min(x, y), max(x, y)))
                x, y = 2 * x % 1, 2 * y % 1
    return leaves


def chord_admissible(p, x, y):
    """Scalar form of the pruning rule used by :func:`pullback_leaves`.

    True iff the chord ``{x, y}`` crosses no major leaf of ``p`` and does
    not join two distinct closed short arcs of the critical gap (unless it
    is itself a major leaf).
    """
    d = p.degree
    lo, hi = p.lower, p.upper
    majors = [((hi + j) / d, ((lo + j + 1) / d) % 1) for j in range(d)]
    for u, v in majors:
        if {x, y} == {u, v}:
            return True
    for leaf in majors:
        if ang.circular_cross((x, y), leaf):
            return False

    def short(z):
        for j in range(d):
            if (lo + j) / d <= z <= (hi + j) / d:
                return j
        return None

    sx, sy = short(x), short(y)
    return sx is None or sy is None or sx == sy


def minor_orbit_admissible(p):
    """True iff every forward image of the minor leaf passes the chord rule."""
    d = p.degree
    x, y = p.lower, p.upper
    for _ in range(p.period):
        if not chord_admissible(p, x, y):
            return False
        x, y = x * d % 1, y * d % 1
    return True
