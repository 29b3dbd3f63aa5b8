"""Cluster cycles of unobstructed matings and their data ``(rho, delta)``.

A cluster is a periodic ray-class component carrying the roots of critical
orbit Fatou components of both planes. Collapsing the component tree to a
point, the Fatou components attached at its corners form a cyclic star.
The star is read off by an Euler walk of the tree: arriving at a node by
one ray, leave by the next ray anticlockwise (increasing own angle in
either plane, both charts being orientation preserving on the sphere).
A corner from ray ``x`` to ray ``y`` at a node of plane ``i`` holds the
Fatou component of critical-orbit iterate ``k + 1`` exactly when
``(x, y) = (d**k * lower, d**k * upper)``; iterate ``n`` is the critical
point component.
"""

from dataclasses import dataclass, replace
from fractions import Fraction

from . import angles as ang
from . import landing as land
from .errors import InvalidInputError, StructuralError


@dataclass(frozen=True)
class ClusterReport:
    """Combinatorial data of a fixed or period-two cluster cycle.

    ``stars[0]`` is the star of the cluster containing the first-labelled
    critical value; for period 2, ``stars[1]`` is the other cluster. Slots
    are ``(plane, iterate)`` with iterate ``n`` the critical point.
    """

    period: int
    rho: Fraction
    delta: int
    stars: tuple
    labeling: int = 1
    central: tuple = ()
    periods: tuple = ()

    @property
    def q(self):
        return self.rho.denominator

    @property
    def star(self):
        return self.stars[0]

    def to_record(self):
        return {
            "period": self.period,
            "rho": ang.format_angle(self.rho),
            "delta": self.delta,
            "labeling": self.labeling,
            "star": [f"P{p}:{k}" for p, k in self.star],
        }


def admissible(period, q, delta):
    """Whether ``delta`` can occur as critical displacement for ``(period, q)``."""
    if q < 2:
        raise InvalidInputError("q must be at least 2")
    if delta % 2 == 0:
        return False
    if period == 1:
        return 3 <= delta <= 2 * q - 3
    if period == 2:
        return 1 <= delta <= 2 * q - 1
    raise InvalidInputError("period must be 1 or 2")


def _corner_slots(f, plane):
    """Map ``(x, y)`` corners to slots ``(plane, iterate)`` for polynomial ``f``."""
    d, n = f.degree, f.period
    out = {}
    for k in range(n):
        out[(ang.times(d, f.lower, k), ang.times(d, f.upper, k))] = (plane, k + 1)
    return out


def _successor(cls, x):
    i = cls.index(x)
    return cls[(i + 1) % len(cls)]


def euler_star(g, component):
    """Cyclic list of slots met by the anticlockwise Euler walk of ``component``."""
    if component.has_loop:
        raise StructuralError("component is not a tree")
    corners = {1: _corner_slots(g.f1, 1), 2: _corner_slots(g.f2, 2)}
    t0 = component.edges[0]
    # state: (plane, class, own angle of the arrival ray)
    start = (1, g.class_of(1, t0), t0)
    state = start
    slots = []
    steps = 0
    limit = 2 * len(component.edge_nums) + 1
    while True:
        plane, cls, x = state
        y = _successor(cls, x)
        slot = corners[plane].get((x, y))
        if slot is not None:
            slots.append(slot)
        other = 2 if plane == 1 else 1
        z = ang.negate(y)
        state = (other, g.class_of(other, z), z)
        steps += 1
        if state == start:
            break
        if steps > limit:
            raise StructuralError("Euler walk did not close")
    return slots


def _rotate_to(star, slot):
    i = star.index(slot)
    return tuple(star[i:] + star[:i])


def _root_components(g, f, plane):
    d, n = f.degree, f.period
    out = {}
    for k in range(n):
        t = ang.times(d, f.lower, k)
        if ang.period(d, t) not in g.layers:
            return None
        c = g.component_of_class(plane, g.class_of(plane, t))
        out.setdefault(c.index, []).append(k + 1)
    return out


def _central_class(g, component):
    d = g.degree
    found = []
    for node in component.nodes:
        c = node.angles
        if len(c) > 1 and land.class_rotation_number(c, d) != 0:
            found.append((node.plane, c))
    return found


def find_cluster_cycle(g):
    """The fixed or period-two cluster cycle of an unobstructed mating, or None."""
    f1, f2 = g.f1, g.f2
    if land._is_centre(f1) or land._is_centre(f2):
        return None
    r1 = _root_components(g, f1, 1)
    r2 = _root_components(g, f2, 2)
    if r1 is None or r2 is None:
        return None
    n1, n2 = f1.period, f2.period
    if n1 != n2:
        return None
    shared = sorted(set(r1) & set(r2))
    if not shared:
        return None
    comp = g.components
    P = comp[shared[0]].period
    if P not in (1, 2) or n1 % P or n1 // P < 2:
        return None
    q = n1 // P
    cycle = [i for i in shared if comp[i].period == P]
    if len(cycle) != P or any(len(r1[i]) != q or len(r2[i]) != q for i in cycle):
        return None
    stars = {}
    for i in cycle:
        star = euler_star(g, comp[i])
        planes = [p for p, _ in star]
        if planes.count(1) != q or planes.count(2) != q:
            raise StructuralError(f"star of component {i} has wrong slot counts: {star}")
        if any(planes[j] == planes[(j + 1) % len(planes)] for j in range(len(planes))):
            raise StructuralError(f"star of component {i} does not alternate: {star}")
        stars[i] = star
    host = next(i for i in cycle if (1, 1) in stars[i])
    first = _rotate_to(stars[host], (1, 1))
    ordered = [first]
    for i in cycle:
        if i != host:
            ordered.append(_rotate_to(stars[i], (2, 1)))
    centrals = _central_class(g, comp[host])
    if len(centrals) != 1:
        raise StructuralError(f"expected one central class, found {len(centrals)}")
    plane, central = centrals[0]
    rho = _star_rotation(first, P, n1, q)
    crn = land.class_rotation_number(central, g.degree)
    if rho != crn:
        raise StructuralError(f"star rotation {rho} disagrees with class rotation {crn}")
    rep = ClusterReport(P, rho, 0, tuple(ordered), 1, (plane, central), (n1, n2))
    return replace(rep, delta=critical_displacement(rep))


def _star_rotation(star, P, n, q):
    pos = {s: i for i, s in enumerate(star)}
    a = pos[(1, 1)]
    b = pos[(1, 1 + P if 1 + P <= n else 1 + P - n)]
    shift = (b - a) % (2 * q)
    if shift % 2:
        raise StructuralError("first return moves a slot to the other plane")
    return Fraction(shift // 2, q)


def critical_displacement(report):
    """Anticlockwise slot steps between the critical value slots.

    Period 1: from the first plane's critical value to the second's.
    Period 2: from the first plane's critical value to the second iterate
    of the second plane's critical point, in their common cluster.
    """
    first = report.labeling
    second = 2 if first == 1 else 1
    target = (second, 1) if report.period == 1 else (second, 2)
    for star in report.stars:
        if (first, 1) in star and target in star:
            pos = {s: i for i, s in enumerate(star)}
            return (pos[target] - pos[(first, 1)]) % len(star)
    raise StructuralError("critical value slots are not in one cluster")


def relabel(report):
    """Swap which plane holds the first critical point."""
    q, p = report.q, report.rho.numerator
    if report.period == 1:
        delta = (2 * q - report.delta) % (2 * q)
    else:
        delta = (2 * p - report.delta) % (2 * q)
    first = 2 if report.labeling == 1 else 1
    stars = report.stars
    if report.period == 2:
        stars = tuple(reversed(stars))
    return replace(report, delta=delta, labeling=first, stars=stars)
