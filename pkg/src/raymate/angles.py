"""Exact arithmetic on the circle R/Z under t -> d*t.

Angles are :class:`fractions.Fraction` values reduced into [0, 1). Rotation
numbers are also Fractions, with ``Fraction(0)`` the convention for fixed
angles.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidDescriptorError, InvalidInputError, NotPeriodicError, ShapeError

Angle = Fraction
RotationNumber = Fraction


def make_angle(a, b=1):
    """Return ``a/b`` reduced modulo 1."""
    if b == 0:
        raise InvalidInputError("zero denominator")
    return Fraction(a, b) % 1


def parse_angle(text):
    """Parse ``"a/b"`` (or a bare integer) into an angle."""
    text = text.strip()
    try:
        if "/" in text:
            a, b = text.split("/")
            return make_angle(int(a), int(b))
        return make_angle(int(text))
    except ValueError as exc:
        raise InvalidInputError(f"malformed angle {text!r}") from exc


def parse_rotation(text):
    """Parse ``"p/q"`` into a rotation number in [0, 1)."""
    rho = parse_angle(text)
    return rho


def format_angle(t):
    return f"{t.numerator}/{t.denominator}"


def negate(t):
    return (-t) % 1


def times(d, t, k=1):
    return (t * d**k) % 1


def is_periodic(d, t):
    return gcd(t.denominator, d) == 1


def period(d, t):
    """Exact period of ``t`` under multiplication by ``d``."""
    den = t.denominator
    if gcd(den, d) != 1:
        raise NotPeriodicError(f"{format_angle(t)} is not periodic under x{d}")
    if den == 1:
        return 1
    k, r = 1, d % den
    while r != 1:
        r = (r * d) % den
        k += 1
    return k


@dataclass(frozen=True)
class AngleOrbit:
    degree: int
    base: Fraction
    iterates: tuple
    period: int

    def __iter__(self):
        return iter(self.iterates)

    def __len__(self):
        return self.period

    def __contains__(self, t):
        return t in self.iterates

    def sorted(self):
        return tuple(sorted(self.iterates))


def orbit(d, t):
    n = period(d, t)
    its = [t]
    for _ in range(n - 1):
        its.append((its[-1] * d) % 1)
    return AngleOrbit(d, t, tuple(its), n)


def layer_numerators(d, r):
    """Numerators ``a`` such that ``a/(d**r - 1)`` has exact period ``r``."""
    m = d**r - 1
    proper = [k for k in range(1, r) if r % k == 0]
    out = []
    for a in range(m):
        if any((a * d**k) % m == a for k in proper):
            continue
        out.append(a)
    return out


def layer(d, r):
    """All angles of exact period ``r`` under ``x d``, in increasing order."""
    m = d**r - 1
    return [Fraction(a, m) for a in layer_numerators(d, r)]


def in_open_arc(x, a, b):
    """True iff ``x`` lies in the open anticlockwise arc from ``a`` to ``b``."""
    if a == b:
        return x != a
    if a < b:
        return a < x < b
    return x > a or x < b


def arc_length(a, b):
    """Length of the anticlockwise arc from ``a`` to ``b``."""
    return (b - a) % 1


def circular_cross(leaf1, leaf2):
    """True iff the chords ``leaf1`` and ``leaf2`` cross inside the disc.

    Chords sharing an endpoint do not cross.
    """
    a, b = leaf1
    c, e = leaf2
    if len({a, b, c, e}) < 4:
        return False
    return in_open_arc(c, a, b) != in_open_arc(e, a, b)


def cyclic_rotation(points, image):
    """Rotation number of ``image`` acting on a finite cyclically ordered set.

    ``points`` is any iterable of angles; ``image`` maps each point to a
    point of the same set. Returns ``p/q`` if ``image`` shifts the cyclic
    order by ``p`` steps, ``None`` if it does not act as a rotation.
    """
    pts = sorted(points)
    q = len(pts)
    if q == 1:
        return Fraction(0)
    index = {t: i for i, t in enumerate(pts)}
    try:
        shift = (index[image(pts[0])]) % q
        for i, t in enumerate(pts):
            if index[image(t)] != (i + shift) % q:
                return None
    except KeyError:
        return None
    if shift == 0:
        return None
    return Fraction(shift, q)


def rotation_number(d, t):
    """Angular rotation number of the ``x d`` orbit of ``t`` (or ``None``)."""
    orb = orbit(d, t)
    return cyclic_rotation(orb.iterates, lambda s: (s * d) % 1)


def two_rotation_number(t):
    """2-angular rotation number of a period-``2q`` angle under doubling.

    The even and odd iterates must occupy disjoint arcs and both rotate by
    the same ``p/q`` under quadrupling.
    """
    orb = orbit(2, t)
    if orb.period % 2:
        raise ShapeError(f"{format_angle(t)} has odd period {orb.period}")
    evens = orb.iterates[0::2]
    odds = orb.iterates[1::2]
    if not _separated(evens, odds):
        return None
    quad = lambda s: (4 * s) % 1
    r0 = cyclic_rotation(evens, quad)
    r1 = cyclic_rotation(odds, quad)
    if r0 is None or r0 != r1:
        return None
    return r0


def _separated(a, b):
    """True iff the point sets lie in disjoint arcs of the circle."""
    marks = [x in set(a) for x in sorted(set(a) | set(b))]
    changes = sum(marks[i] != marks[i - 1] for i in range(len(marks)))
    return changes <= 2


def arc_index(d, t):
    """Index ``k`` with ``t`` in ``(k/(d-1), (k+1)/(d-1))``, or None."""
    if d < 2:
        raise InvalidInputError("degree must be at least 2")
    x = t * (d - 1)
    if x.denominator == 1:
        return None
    return int(x)


def orbit_in_single_arc(d, t):
    ks = {arc_index(d, s) for s in orbit(d, t)}
    return len(ks) == 1 and None not in ks


def binary_word(t, n, top=False):
    """The ``n``-digit repeating binary word of a period-dividing-``n`` angle.

    ``top=True`` writes the angle 0 as the all-ones word (it is then read as
    1 = 0.111...), as needed for the upper endpoint of the degenerate pair.
    """
    m = 2**n - 1
    a = t * m
    if a.denominator != 1:
        raise ShapeError(f"{format_angle(t)} does not have period dividing {n}")
    a = int(a)
    if top and a == 0:
        a = m
    return format(a, f"0{n}b")


def word_angle(word):
    m = 2 ** len(word) - 1
    return make_angle(int(word, 2), m)


def _pair_period(pair, d=2):
    lo, hi = pair
    n1, n2 = period(d, lo), period(d, hi)
    if n1 != n2:
        raise InvalidDescriptorError("pair angles have different periods")
    return n1


def tune(outer, inner):
    """Douady-Hubbard tuning of quadratic characteristic pairs.

    Every binary digit of the inner angles' repeating words is replaced by
    the repeating word of the outer pair's lower (digit 0) or upper
    (digit 1) angle.
    """
    lo, hi = outer
    if not (lo < hi or (lo == hi == 0)):
        raise InvalidDescriptorError("outer pair must satisfy lower < upper")
    try:
        m = _pair_period(outer)
        n = _pair_period(inner)
    except NotPeriodicError as exc:
        raise InvalidDescriptorError(str(exc)) from exc
    w0 = binary_word(lo, m)
    w1 = binary_word(hi, m, top=True)
    subst = {"0": w0, "1": w1}
    ilo, ihi = inner
    out = []
    for t, top in ((ilo, False), (ihi, True)):
        word = binary_word(t, n, top=top)
        out.append(word_angle("".join(subst[c] for c in word)))
    return tuple(out)


def enumerate_rotation_orbits(d, rho):
    """All ``x d`` orbits of rotation number ``rho`` contained in one arc A_k.

    Orbits are returned sorted by arc index; each has exactly ``q`` points.
    """
    rho = Fraction(rho)
    q = rho.denominator
    if q < 2:
        raise InvalidInputError("rotation number must have denominator >= 2")
    m = d**q - 1
    seen = set()
    found = []
    for a in range(1, m):
        t = Fraction(a, m)
        if t in seen:
            continue
        if period(d, t) != q:
            continue
        orb = orbit(d, t)
        seen.update(orb.iterates)
        if not orbit_in_single_arc(d, t):
            continue
        if rotation_number(d, t) != rho:
            continue
        found.append(orbit(d, min(orb.iterates)))
    found.sort(key=lambda o: arc_index(d, o.base))
    return found
