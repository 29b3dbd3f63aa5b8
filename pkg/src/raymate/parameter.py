"""Parameter-plane combinatorics of the Mandelbrot set.

Hyperbolic components are represented by the characteristic pair of
parameter angles landing at their root. For degree 2 the pairs come from
Lavaurs' algorithm; :func:`characteristic_partner` extends the pairing to
higher degree through the dynamical co-landing criterion.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import angles as ang
from .errors import IndeterminateLimbError, InternalConsistencyError, InvalidDescriptorError, InvalidInputError

LAVAURS_FORMAT = "raymate-lavaurs/1"


@dataclass(frozen=True, order=True)
class PolynomialDescriptor:
    """A hyperbolic PCF unicritical polynomial ``z**d + c``.

    ``lower`` and ``upper`` are the external angles landing at the root of
    the critical value component; the characteristic arc runs anticlockwise
    from ``lower`` to ``upper``. The centre ``c = 0`` is ``(0, 0)``.
    """

    degree: int
    lower: Fraction
    upper: Fraction

    @property
    def pair(self):
        return (self.lower, self.upper)

    @property
    def period(self):
        return ang.period(self.degree, self.lower)

    def __str__(self):
        return f"({ang.format_angle(self.lower)},{ang.format_angle(self.upper)})"

    def __repr__(self):
        d = "" if self.degree == 2 else f", d={self.degree}"
        return f"PolynomialDescriptor{self}{d}"


@dataclass(frozen=True)
class WakeInterval:
    low: Fraction
    high: Fraction

    def __contains__(self, t):
        return ang.in_open_arc(t, self.low, self.high)

    def contains_interval(self, other):
        """True iff ``other`` lies strictly inside this wake."""
        return other.low in self and other.high in self and (
            ang.arc_length(self.low, other.low) < ang.arc_length(self.low, other.high)
        )


class LavaursTable:
    """Characteristic pairs of all quadratic periods ``2..bound``."""

    def __init__(self, bound, pairs):
        self.bound = bound
        self.pairs = tuple(pairs)
        self._partner = {}
        for lo, hi in self.pairs:
            self._partner[lo] = hi
            self._partner[hi] = lo

    def by_period(self, n):
        return [p for p in self.pairs if ang.period(2, p[0]) == n]

    def partner(self, t):
        return self._partner.get(t)

    def pair_containing(self, t):
        other = self._partner.get(t)
        if other is None:
            return None
        return (t, other) if t < other else (other, t)

    def __contains__(self, pair):
        lo, hi = pair
        return self._partner.get(lo) == hi

    def to_records(self):
        return {
            "format": LAVAURS_FORMAT,
            "bound": self.bound,
            "pairs": [
                [ang.period(2, lo), ang.format_angle(lo), ang.format_angle(hi)] for lo, hi in self.pairs
            ],
        }

    @classmethod
    def from_records(cls, rec):
        if rec.get("format") != LAVAURS_FORMAT:
            raise InvalidInputError("unsupported Lavaurs table format")
        pairs = [(ang.parse_angle(lo), ang.parse_angle(hi)) for _, lo, hi in rec["pairs"]]
        return cls(rec["bound"], pairs)


class _LavaursState:
    """Incremental Lavaurs pairing: period ``k`` only depends on periods below it."""

    def __init__(self):
        self.done = 1
        self.chord = {}
        self.pairs = []

    def extend(self, bound):
        for k in range(self.done + 1, bound + 1):
            pts = []
            for j in range(1, k + 1):
                pts.extend((t, j) for t in ang.layer(2, j))
            pts.sort()
            order = [t for t, _ in pts]
            per = dict(pts)
            pos = {t: i for i, t in enumerate(order)}
            for x in ang.layer(2, k):
                if x in self.chord:
                    continue
                y = _first_reachable(x, k, order, pos, per, self.chord)
                if y is None:
                    raise InternalConsistencyError(f"Lavaurs: no partner for {ang.format_angle(x)}")
                self.chord[x] = y
                self.chord[y] = x
                self.pairs.append((x, y))
            self.done = k


_LAVAURS = _LavaursState()


@lru_cache(maxsize=None)
def _lavaurs_pairs(bound):
    _LAVAURS.extend(bound)
    return tuple(p for p in _LAVAURS.pairs if ang.period(2, p[0]) <= bound)


def _first_reachable(x, k, order, pos, per, chord):
    # scan anticlockwise from x; stop at a chord endpoint whose partner lies behind x
    open_ends = set()
    for z in order[pos[x] + 1:]:
        w = chord.get(z)
        if w is not None:
            if w in open_ends:
                open_ends.discard(w)
            elif w > z:
                open_ends.add(z)
            else:
                return None
        elif per[z] == k and not open_ends:
            return z
    return None


def lavaurs_table(bound):
    """Lavaurs' pairing of periodic angles of every period up to ``bound``."""
    if bound < 1:
        raise InvalidInputError("bound must be >= 1")
    return LavaursTable(bound, _lavaurs_pairs(bound))


@lru_cache(maxsize=None)
def _lavaurs_for(n):
    return lavaurs_table(max(n, 2))


def descriptor(lower, upper, degree=2, validate=True):
    """Build a descriptor from a characteristic pair, checking it when possible."""
    lower, upper = Fraction(lower) % 1, Fraction(upper) % 1
    if lower == upper == 0:
        return PolynomialDescriptor(degree, lower, upper)
    try:
        n1, n2 = ang.period(degree, lower), ang.period(degree, upper)
    except ang.NotPeriodicError as exc:
        raise InvalidDescriptorError(str(exc)) from exc
    if n1 != n2 or lower == upper:
        raise InvalidDescriptorError(f"({lower}, {upper}) is not a characteristic pair")
    if validate:
        if degree == 2:
            if (lower, upper) not in _lavaurs_for(n1):
                raise InvalidDescriptorError(
                    f"({ang.format_angle(lower)}, {ang.format_angle(upper)}) is not a Lavaurs pair"
                )
        elif characteristic_partner(degree, lower) != upper:
            raise InvalidDescriptorError(
                f"({ang.format_angle(lower)}, {ang.format_angle(upper)}) is not a characteristic pair"
            )
    return PolynomialDescriptor(degree, lower, upper)


def descriptor_for_angle(t, degree=2):
    """The component whose root is the landing point of parameter angle ``t``."""
    n = ang.period(degree, t)
    if degree == 2:
        pair = _lavaurs_for(n).pair_containing(t)
        if pair is None:
            return None
        return PolynomialDescriptor(2, *pair)
    other = characteristic_partner(degree, t)
    if other is None:
        return None
    lo, hi = (t, other) if ang.arc_length(t, other) < ang.arc_length(other, t) else (other, t)
    return PolynomialDescriptor(degree, lo, hi)


def all_descriptors(max_period, min_period=2):
    """All quadratic descriptors with period in ``[min_period, max_period]``."""
    tab = lavaurs_table(max_period)
    return [
        PolynomialDescriptor(2, lo, hi)
        for lo, hi in tab.pairs
        if min_period <= ang.period(2, lo) <= max_period
    ]


def wake_interval(p):
    return WakeInterval(p.lower, p.upper)


@lru_cache(maxsize=None)
def rabbit_pair(rho, degree=2, arc=0):
    """Characteristic pair of the ``rho``-rabbit (satellite of the main component).

    In degree ``d`` the rabbit is the one whose alpha rays lie in arc ``A_arc``.
    """
    rho = Fraction(rho)
    if rho.denominator < 2:
        raise InvalidInputError("rabbit needs a rotation number p/q with q >= 2")
    orbits = ang.enumerate_rotation_orbits(degree, rho)
    orb = [o for o in orbits if ang.arc_index(degree, o.base) == arc]
    if len(orb) != 1:
        raise InternalConsistencyError(f"expected one {rho} orbit in arc {arc}, found {len(orb)}")
    pts = orb[0].sorted()
    q = len(pts)
    gaps = [(ang.arc_length(pts[i], pts[(i + 1) % q]), pts[i], pts[(i + 1) % q]) for i in range(q)]
    _, lo, hi = min(gaps)
    return PolynomialDescriptor(degree, lo, hi)


BASILICA = PolynomialDescriptor(2, Fraction(1, 3), Fraction(2, 3))
MAIN = PolynomialDescriptor(2, Fraction(0), Fraction(0))


def double_rabbit(rho):
    """The basilica tuned by the ``rho``-rabbit."""
    inner = rabbit_pair(rho)
    return PolynomialDescriptor(2, *ang.tune(BASILICA.pair, inner.pair))


@lru_cache(maxsize=None)
def secondary_pair(rho):
    """The unique other period-``2q`` component in the wake of the double rabbit."""
    rho = Fraction(rho)
    f = double_rabbit(rho)
    n = 2 * rho.denominator
    wake = wake_interval(f)
    found = [
        pair
        for pair in _lavaurs_for(n).by_period(n)
        if pair != f.pair and pair[0] in wake and pair[1] in wake
    ]
    if len(found) != 1:
        raise InternalConsistencyError(f"secondary map for {rho}: {len(found)} candidates")
    return PolynomialDescriptor(2, *found[0])


def limb_of(t):
    """Rotation number ``p/q`` of the main-cardioid limb whose wake contains ``t``."""
    n = ang.period(2, t)
    for q in range(2, n + 1):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            if t in wake_interval(rabbit_pair(Fraction(p, q))):
                return Fraction(p, q)
    return None


@lru_cache(maxsize=None)
def descriptor_limb(p):
    """Limb whose closed wake contains the wake of ``p``.

    Unlike :func:`limb_of` this covers the satellite roots themselves: the
    ``p/q``-rabbit belongs to the ``p/q``-limb.
    """
    if p.lower == p.upper == 0:
        return None
    n = p.period
    for q in range(2, n + 1):
        for k in range(1, q):
            if gcd(k, q) != 1:
                continue
            w = rabbit_pair(Fraction(k, q))
            if w.lower <= p.lower and p.upper <= w.upper:
                return Fraction(k, q)
    return None


def conjugate_limbs(f1, f2):
    if f1.degree != 2 or f2.degree != 2:
        raise InvalidInputError("limb test is quadratic only")
    l1, l2 = descriptor_limb(f1), descriptor_limb(f2)
    if l1 is None or l2 is None:
        raise IndeterminateLimbError("descriptor lies in no limb")
    return l1 + l2 == 1


def characteristic_partner(d, t):
    """Angle co-landing with ``t`` at the critical value root, or None.

    Searches the period-n angles ``s`` for which ``(t, s)`` is a
    self-consistent characteristic pair: the characteristic arc contains no
    point of either orbit, no forward image of the minor leaf crosses a
    major leaf or cuts through the critical gap, and the two rays co-land
    in the dynamical plane defined by the pair with a table that validates.
    In degree 2 this reproduces Lavaurs' pairing.
    """
    return _characteristic_partner(d, Fraction(t))


@lru_cache(maxsize=None)
def _characteristic_partner(d, t):
    from .landing import LandingCriterionError, build_layer, minor_orbit_admissible

    n = ang.period(d, t)
    found = []
    for s in ang.layer(d, n):
        if s == t:
            continue
        lo, hi = (t, s) if ang.arc_length(t, s) < ang.arc_length(s, t) else (s, t)
        # characteristic arcs are shorter than a half and avoid the fixed angles
        if not lo < hi or hi - lo >= Fraction(1, 2):
            continue
        if any(ang.in_open_arc(Fraction(k, d - 1), lo, hi) for k in range(d - 1)):
            continue
        orbits = set(ang.orbit(d, lo)) | set(ang.orbit(d, hi))
        if any(ang.in_open_arc(x, lo, hi) for x in orbits):
            continue
        cand = PolynomialDescriptor(d, lo, hi)
        if not minor_orbit_admissible(cand):
            continue
        try:
            lay = build_layer(cand, n)
        except LandingCriterionError:
            continue
        if lay.class_of(lo) is lay.class_of(hi):
            found.append(s)
    if len(found) > 1:
        raise InternalConsistencyError(
            f"several characteristic partners for {ang.format_angle(t)}: {found}"
        )
    return found[0] if found else None
