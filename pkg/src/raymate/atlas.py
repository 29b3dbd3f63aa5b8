"""Realization of combinatorial data by matings, and shared-mating tables.

Candidates are produced by constructive recipes and every candidate is
verified through the full pipeline (ray graph, obstruction verdicts,
cluster star); only verified records are returned.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import angles as ang
from . import cluster as clu
from . import landing as land
from . import mating as mat
from . import parameter as par
from .errors import InvalidInputError, TheoremViolation


@dataclass(frozen=True)
class RealizationRecord:
    first: object
    second: object
    report: object

    @property
    def pair(self):
        return (self.first, self.second)

    def to_record(self):
        return {
            "first": str(self.first),
            "second": str(self.second),
            "cluster": self.report.to_record(),
        }


@lru_cache(maxsize=None)
def _cluster(f1, f2):
    rep = mat.obstruction_report(f1, f2)
    return None if rep.obstructed else rep.cluster


def _matches(report, period, rho, delta):
    return (
        report is not None
        and report.period == period
        and report.rho == rho
        and (delta is None or report.delta == delta)
    )


def _check_rho(rho):
    rho = Fraction(rho)
    if not 0 < rho < 1 or rho.denominator < 2:
        raise InvalidInputError("rotation number must be p/q with 0 < p < q")
    return rho


# ---------------------------------------------------------------------------
# fixed clusters
# ---------------------------------------------------------------------------


def alpha_labels(rabbit):
    """Alpha angles of a rabbit, starting at the upper characteristic angle.

    ``theta_1`` is the ray immediately anticlockwise of the critical value
    sector; the others follow anticlockwise.
    """
    a = land.alpha_class(rabbit)
    i = a.index(rabbit.upper)
    return [a[(i + j) % len(a)] for j in range(len(a))]


def associated_descriptor(d, t):
    """Component whose root carries the parameter angle ``t``, or None."""
    return par.descriptor_for_angle(t, d)


def fixed_partner(d, rho, delta, arc=0):
    """Recipe partner ``h`` with ``rabbit ⊥⊥ h`` of data ``(rho, delta)``."""
    rabbit = par.rabbit_pair(rho, d, arc)
    k = (delta + 1) // 2
    theta = alpha_labels(rabbit)[k - 1]
    return rabbit, associated_descriptor(d, ang.negate(theta))


def realizations_fixed(d, rho, delta):
    """All recipe realizations of fixed-cluster data ``(rho, delta)``, verified."""
    rho = _check_rho(rho)
    q = rho.denominator
    if not clu.admissible(1, q, delta):
        return []
    out = []
    for arc in range(d - 1):
        rabbit, h = fixed_partner(d, rho, delta, arc)
        if h is not None:
            out.append((rabbit, h))
        rabbit, h2 = fixed_partner(d, rho, 2 * q - delta, arc)
        if h2 is not None:
            out.append((h2, rabbit))
    records = []
    seen = set()
    for f1, f2 in out:
        if (f1, f2) in seen:
            continue
        seen.add((f1, f2))
        rep = _cluster(f1, f2)
        if not _matches(rep, 1, rho, delta):
            raise TheoremViolation(f"recipe mating {f1} ⊥⊥ {f2} does not realize ({rho}, {delta})", rep)
        records.append(RealizationRecord(f1, f2, rep))
    return records


# ---------------------------------------------------------------------------
# period-two clusters
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def period2_classes(rho):
    """The two period-2 classes of ``f_{p/q}``, the one in ``(2/3, 1/3)`` first."""
    f = par.double_rabbit(rho)
    tab = land.landing_table(f, 2 * Fraction(rho).denominator)
    cls = [c for c in tab.nontrivial() if land.class_period(c, 2) == 2]
    if len(cls) != 2:
        raise TheoremViolation(f"f_{rho} has {len(cls)} period-2 classes", cls)
    third = Fraction(1, 3)
    cls.sort(key=lambda c: not all(not third <= t <= 2 * third for t in c))
    return tuple(cls)


def period2_labels(rho):
    """``theta_0 .. theta_{q-1}`` at the class lying in ``(2/3, 1/3)``.

    ``theta_0`` closes the sector of the critical point component; the
    others follow anticlockwise.
    """
    f = par.double_rabbit(rho)
    n = f.period
    p0 = period2_classes(rho)[0]
    end = ang.times(2, f.upper, n - 1)
    if end not in p0:
        raise TheoremViolation("critical point component is not at the expected class", p0)
    i = p0.index(end)
    return [p0[(i + j) % len(p0)] for j in range(len(p0))]


def period2_partner(rho, delta):
    """Recipe partner ``h_delta``: the Lavaurs pair containing ``-theta_k``."""
    k = (delta - 1) // 2
    return associated_descriptor(2, ang.negate(period2_labels(rho)[k]))


@lru_cache(maxsize=None)
def period2_pool(rho):
    """Candidate ordered pairs: f and g against every recipe partner."""
    f, g = par.double_rabbit(rho), par.secondary_pair(rho)
    partners = []
    for c in period2_classes(rho):
        for t in c:
            h = associated_descriptor(2, ang.negate(t))
            if h is not None and h not in partners:
                partners.append(h)
    pool = []
    for base in (f, g):
        for h in partners:
            pool.extend([(base, h), (h, base)])
    return tuple(pool)


def _verified_period2(pairs, rho, delta):
    out = []
    for f1, f2 in pairs:
        rep = _cluster(f1, f2)
        if _matches(rep, 2, rho, delta):
            out.append(RealizationRecord(f1, f2, rep))
    return out


def realizations_period2(rho, delta, exhaustive=False):
    """All matings in the pool (or all pairs) with period-2 data ``(rho, delta)``."""
    rho = _check_rho(rho)
    q = rho.denominator
    if not clu.admissible(2, q, delta):
        return []
    if exhaustive:
        pairs = exhaustive_pairs(rho)
    else:
        pairs = period2_pool(rho)
    records = _verified_period2(pairs, rho, delta)
    if len(records) not in (2, 3, 4):
        raise TheoremViolation(f"({rho}, {delta}) realized {len(records)} times", records)
    return records


def exhaustive_pairs(rho):
    """Every ordered pair of period-2q quadratic descriptors (small q only)."""
    q = Fraction(rho).denominator
    if q > 4:
        raise InvalidInputError("exhaustive mode is limited to q <= 4")
    ds = par.all_descriptors(2 * q, 2 * q)
    return [(a, b) for a in ds for b in ds]


def shared_mating_table(rho, exhaustive=False):
    """``{delta: [records]}`` for every admissible period-2 ``delta``."""
    rho = _check_rho(rho)
    q = rho.denominator
    return {
        delta: realizations_period2(rho, delta, exhaustive)
        for delta in range(1, 2 * q, 2)
        if clu.admissible(2, q, delta)
    }


def name_map(rho):
    """Readable names: f, g and h_delta for the recipe partners."""
    rho = Fraction(rho)
    names = {par.double_rabbit(rho): "f", par.secondary_pair(rho): "g"}
    q = rho.denominator
    for delta in range(1, 2 * q, 2):
        h = period2_partner(rho, delta)
        if h is not None:
            names.setdefault(h, f"h{delta}")
    return names


def format_table(rho, table=None):
    """Text rendering of a shared-mating table."""
    rho = Fraction(rho)
    table = table if table is not None else shared_mating_table(rho)
    names = name_map(rho)
    lines = [
        f"period {2 * rho.denominator}, rotation number {ang.format_angle(rho)}",
    ]
    for desc, nm in sorted(names.items(), key=lambda kv: (kv[1][0], len(kv[1]), kv[1])):
        lines.append(f"  {nm} = {desc}")
    for delta, recs in table.items():
        items = " ≅ ".join(f"{names.get(r.first, str(r.first))} ⊥⊥ {names.get(r.second, str(r.second))}" for r in recs)
        lines.append(f"  (delta = {delta})  {items}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# g versus f
# ---------------------------------------------------------------------------


@dataclass
class GSweepReport:
    rho: Fraction
    checked: int
    g_clusters: list
    f_clusters: list
    converse_witnesses: list


def _has_associated_rotation(h, rho):
    """True iff an angle of ``h``'s pair has 2-angular rotation ``1 - rho``."""
    return any(ang.two_rotation_number(t) == 1 - rho for t in h.pair)


def g_consistency_sweep(rho, N=None):
    """Compare ``g ⊥⊥ h`` and ``f ⊥⊥ h`` over all period-2q partners ``h``.

    Asserts: a g-cluster forces an f-cluster and has delta in {1, 2q-1};
    every clustering h has an associated angle of 2-angular rotation
    ``(q-p)/q``; every h with such an angle inside ``(2/3, 1/3)`` clusters
    with f.
    """
    rho = _check_rho(rho)
    q = rho.denominator
    n = N or 2 * q
    f, g = par.double_rabbit(rho), par.secondary_pair(rho)
    g_cl, f_cl, witnesses = [], [], []
    hs = par.all_descriptors(n, n)
    for h in hs:
        rf, rg = _cluster(f, h), _cluster(g, h)
        fc = _matches(rf, 2, rho, None)
        gc = _matches(rg, 2, rho, None)
        if fc:
            f_cl.append((h, rf))
            if not _has_associated_rotation(h, rho):
                raise TheoremViolation(f"{h} clusters with f but has no associated angle", h)
        if gc:
            g_cl.append((h, rg))
            if not fc:
                raise TheoremViolation(f"{h} clusters with g but not with f", h)
            if rg.delta not in (1, 2 * q - 1):
                raise TheoremViolation(f"g ⊥⊥ {h} has delta {rg.delta}", rg)
        elif fc:
            witnesses.append((h, rf, rg))
        third = Fraction(1, 3)
        inside = [
            t for t in h.pair
            if (t > 2 * third or t < third) and ang.two_rotation_number(t) == 1 - rho
        ]
        if inside and not fc:
            raise TheoremViolation(f"{h} has an associated angle in (2/3, 1/3) but no f-cluster", h)
    return GSweepReport(rho, len(hs), g_cl, f_cl, witnesses)


def multiplicity_census(max_q):
    """``{(rho, delta): count}`` of period-2 realizations for all q <= max_q."""
    out = {}
    for q in range(2, max_q + 1):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            rho = Fraction(p, q)
            for delta, recs in shared_mating_table(rho).items():
                out[(rho, delta)] = len(recs)
    return out


def fixed_census(d, max_q):
    """``{(rho, delta): count}`` of fixed-case realizations for q <= max_q."""
    out = Counter()
    for q in range(2, max_q + 1):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            rho = Fraction(p, q)
            for delta in range(1, 2 * q, 2):
                out[(rho, delta)] = len(realizations_fixed(d, rho, delta))
    return dict(out)
