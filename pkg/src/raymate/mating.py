"""Ray-equivalence graph of a formal mating and Levy-loop obstructions.

Nodes are co-landing classes of both planes; each universe angle ``t``
contributes one edge joining ``class1(t)`` to ``class2(-t)``. Rays of one
class share their period and negation preserves it, so every component
lives in a single period layer; the graph is assembled layer by layer.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from . import angles as ang
from . import kernels
from . import landing as land
from . import parameter as par
from .errors import IndeterminateLimbError, InvalidInputError, TheoremViolation

DEFAULT_MAX_LAYER = 12


@dataclass(frozen=True)
class Node:
    plane: int
    angles: tuple

    @property
    def id(self):
        return f"P{self.plane}:" + "|".join(ang.format_angle(t) for t in self.angles)

    def __str__(self):
        return self.id


class Component:
    """One connected component of a single layer.

    Nodes are stored as ``(plane, class index)`` pairs and edges as angle
    numerators over ``d**layer - 1``; :attr:`nodes` and :attr:`edges` give
    the readable forms.
    """

    def __init__(self, index, layer, modulus, lay1, lay2):
        self.index = index
        self.layer = layer
        self.modulus = modulus
        self._lays = (lay1, lay2)
        self.members = []
        self.edge_nums = []
        self.period = 0

    @property
    def nodes(self):
        return [Node(p, self._lays[p - 1].classes[i]) for p, i in self.members]

    @property
    def edges(self):
        m = max(self.modulus, 1)
        return [Fraction(a, m) for a in self.edge_nums]

    @property
    def has_loop(self):
        return len(self.edge_nums) >= len(self.members)

    def node_ids(self):
        return [n.id for n in self.nodes]

    def __repr__(self):
        return f"Component({self.index}, layer={self.layer}, nodes={len(self.members)}, edges={len(self.edge_nums)})"


def default_layers(f1, f2, N=None, max_layer=DEFAULT_MAX_LAYER):
    """Divisors of ``N`` up to ``max_layer`` plus the alpha layers.

    ``N`` defaults to the lcm of the two periods.
    """
    n1, n2 = max(f1.period, 1), max(f2.period, 1)
    N = N or lcm(n1, n2)
    out = {r for r in range(1, min(N, max_layer) + 1) if N % r == 0}
    for f in (f1, f2):
        if land._is_centre(f):
            continue
        a = land.alpha_class(f)
        if a is not None:
            out.add(ang.period(f.degree, a[0]))
    return sorted(out)


class RayClassGraph:
    def __init__(self, f1, f2, layers):
        if f1.degree != f2.degree:
            raise InvalidInputError("polynomials must have the same degree")
        self.f1, self.f2 = f1, f2
        self.degree = f1.degree
        self.layers = tuple(sorted(set(layers)))
        self.components = []
        self._layer_data = {}
        for r in self.layers:
            self._add_layer(r)
        self._assign_periods()

    def _add_layer(self, r):
        d = self.degree
        lay1, lay2 = land.build_layer(self.f1, r), land.build_layer(self.f2, r)
        m = d**r - 1
        mm = max(m, 1)
        n1 = len(lay1.classes)
        lab1, lab2 = lay1.label, lay2.label
        nums = [a for a in range(mm) if lab1[a] >= 0]
        us = [lab1[a] for a in nums]
        vs = [n1 + lab2[(mm - a) % mm] for a in nums]
        total = n1 + len(lay2.classes)
        labels, _, _ = kernels.components(total, us, vs)
        base = len(self.components)
        count = max(labels) + 1 if labels else 0
        comps = [Component(base + k, r, m, lay1, lay2) for k in range(count)]
        for x, lab in enumerate(labels):
            comps[lab].members.append((1, x) if x < n1 else (2, x - n1))
        edge_comp = [None] * mm
        for a, u in zip(nums, us):
            c = comps[labels[u]]
            c.edge_nums.append(a)
            edge_comp[a] = c
        self._layer_data[r] = (lay1, lay2, labels, n1, edge_comp, base)
        self.components.extend(comps)

    def _assign_periods(self):
        d = self.degree
        image = {}
        for c in self.components:
            mm = max(c.modulus, 1)
            image[c.index] = self._layer_data[c.layer][4][c.edge_nums[0] * d % mm].index
        for c in self.components:
            k, x = 1, image[c.index]
            while x != c.index:
                x = image[x]
                k += 1
            c.period = k

    # queries -------------------------------------------------------------

    def component_of_angle(self, t):
        t = Fraction(t) % 1
        r = ang.period(self.degree, t)
        mm = max(self.degree**r - 1, 1)
        return self._layer_data[r][4][t.numerator * (mm // t.denominator)]

    def component_of_class(self, plane, cls):
        r = ang.period(self.degree, cls[0])
        lay1, lay2, labels, n1, _, base = self._layer_data[r]
        if plane == 1:
            x = lay1.index_of(cls[0])
        else:
            x = n1 + lay2.index_of(cls[0])
        return self.components[base + labels[x]]

    def class_of(self, plane, t):
        f = self.f1 if plane == 1 else self.f2
        return land.build_layer(f, ang.period(self.degree, t)).class_of(t)

    @property
    def edge_count(self):
        return sum(len(c.edge_nums) for c in self.components)

    @property
    def node_count(self):
        return sum(len(c.members) for c in self.components)

    def loops(self):
        return [c for c in self.components if c.has_loop]

    def to_dot(self, component=None):
        """DOT text of one component (or all), in a deterministic order."""
        comps = self.components if component is None else [component]
        lines = ["graph raymate {"]
        for c in comps:
            for n in sorted(c.nodes, key=lambda n: (n.plane, n.angles)):
                lines.append(f'  "{n.id}";')
            for t in sorted(c.edges):
                a = Node(1, self.class_of(1, t)).id
                b = Node(2, self.class_of(2, ang.negate(t))).id
                lines.append(f'  "{a}" -- "{b}" [label="{ang.format_angle(t)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_ray_graph(f1, f2, N=None, layers=None, max_layer=DEFAULT_MAX_LAYER):
    """Ray-class graph over the given layers (default: :func:`default_layers`)."""
    if f1.degree != f2.degree:
        raise InvalidInputError("polynomials must have the same degree")
    if layers is None:
        layers = default_layers(f1, f2, N, max_layer)
    return RayClassGraph(f1, f2, layers)


@dataclass
class MatingReport:
    obstructed: bool
    loop_witness: object
    conjugate_limb_verdict: object
    alpha_merge_verdict: object
    cluster: object = None
    graph: object = field(default=None, repr=False)


def alpha_merge(g):
    """True iff the alpha classes of the two planes share a component."""
    a1, a2 = land.alpha_class(g.f1), land.alpha_class(g.f2)
    if a1 is None or a2 is None:
        return None
    return g.component_of_class(1, a1) is g.component_of_class(2, a2)


def obstruction_report(f1, f2, N=None, layers=None, with_cluster=True, check=True):
    """Loop, alpha-merge and limb verdicts; they must agree when all defined."""
    g = build_ray_graph(f1, f2, N, layers)
    loops = g.loops()
    obstructed = bool(loops)
    try:
        limb = par.conjugate_limbs(f1, f2) if f1.degree == 2 else None
    except IndeterminateLimbError:
        limb = None
    merge = alpha_merge(g)
    rep = MatingReport(obstructed, loops[0] if loops else None, limb, merge, graph=g)
    if check:
        verdicts = [v for v in (limb, merge) if v is not None]
        if any(v != obstructed for v in verdicts):
            raise TheoremViolation(
                f"verdicts disagree for {f1} and {f2}: loop={obstructed} limb={limb} alpha={merge}",
                rep,
            )
    if with_cluster and not obstructed:
        from .cluster import find_cluster_cycle

        rep.cluster = find_cluster_cycle(g)
    return rep


@dataclass
class RayClassDiagnostics:
    """Outcome of :func:`ray_class_checks`; ``arms`` maps branch node ids to arm counts."""

    orbit_components_distinct: bool = True
    single_rotating_class: bool = True
    arms_hold_one_orbit_point: bool = True
    arms: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def _class_orbit(g, plane, c):
    d = g.degree
    orbit = [c]
    x = g.class_of(plane, c[0] * d % 1)
    while x != c:
        orbit.append(x)
        x = g.class_of(plane, x[0] * d % 1)
    return orbit


def _adjacency(g, comp):
    adj = {}
    for t in comp.edges:
        a = Node(1, g.class_of(1, t))
        b = Node(2, g.class_of(2, ang.negate(t)))
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    return adj


def _arms(adj, centre):
    """Arm index for every node other than ``centre``."""
    arm = {}
    for k, start in enumerate(adj[centre]):
        stack = [start]
        arm[start] = k
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w != centre and w not in arm:
                    arm[w] = k
                    stack.append(w)
    return arm


def ray_class_checks(g, raise_on_failure=True):
    """Structural checks on the periodic components of an unobstructed graph."""
    if g.loops():
        raise InvalidInputError("ray-class checks need an unobstructed mating")
    d = g.degree
    diag = RayClassDiagnostics()
    for comp in g.components:
        rotating = [
            n for n in comp.nodes if len(n.angles) > 1 and land.class_rotation_number(n.angles, d) != 0
        ]
        if len(rotating) > 1:
            diag.single_rotating_class = False
            diag.failures.append(("rotating classes", comp.index, [n.id for n in rotating]))
        for n in rotating:
            orbit = _class_orbit(g, n.plane, n.angles)
            comps = [g.component_of_class(n.plane, c).index for c in orbit]
            if len(set(comps)) != len(comps):
                diag.orbit_components_distinct = False
                diag.failures.append(("orbit components", n.id, comps))
        branch = [n for n in comp.nodes if len(n.angles) >= 3]
        if not branch:
            continue
        adj = _adjacency(g, comp)
        for b in branch:
            arm = _arms(adj, b)
            diag.arms[b.id] = len(adj[b])
            seen = set()
            for v in comp.nodes:
                if v.plane != 2 or v == b or v.angles in seen:
                    continue
                orbit = _class_orbit(g, 2, v.angles)
                seen.update(orbit)
                counts = {}
                for c in orbit:
                    w = Node(2, c)
                    if w in arm:
                        counts[arm[w]] = counts.get(arm[w], 0) + 1
                if any(k > 1 for k in counts.values()):
                    diag.arms_hold_one_orbit_point = False
                    diag.failures.append(("arm", b.id, v.id))
    if raise_on_failure and diag.failures:
        raise TheoremViolation(f"ray-class checks failed for {g.f1} and {g.f2}", diag.failures)
    return diag
