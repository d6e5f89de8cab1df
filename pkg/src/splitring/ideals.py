"""Two-sided ideal closure and the central quotient T = R/L for finite rings.

L is the ideal generated by all commutators [x, a] = x*a - a*x with x in R
and a among the given generators; quotienting by it makes the generators
central without changing the splitting ring that is built afterwards.

Closure is a breadth-first fixed point over the finite additive group: the
rings involved are small enough that exhaustion is cheap and certain, so no
Groebner-style machinery is used.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import InfiniteRing, RingMismatch
from .rings import FiniteTableRing, Poly, Ring, RingElem, ZeroRing


@dataclass(frozen=True)
class IdealHandle:
    """An explicit additive subgroup that happens to be a two-sided ideal."""

    ring: Ring
    members: frozenset

    def __contains__(self, x):
        if isinstance(x, RingElem):
            if x.ring != self.ring:
                raise RingMismatch("membership test across rings")
            x = x.value
        return x in self.members

    def __len__(self):
        return len(self.members)

    def is_whole_ring(self):
        return len(self.members) == self.ring.order()


def commutator_ideal(ring: Ring, gens) -> IdealHandle:
    """The two-sided ideal of a finite ring generated by {x*a - a*x}."""
    if not ring.is_finite:
        raise InfiniteRing("commutator ideals are only computed for finite rings")
    all_elems = list(ring.elements())
    seeds = set()
    for g in gens:
        gv = g.value if isinstance(g, RingElem) else ring.canon(g)
        for x in all_elems:
            seeds.add(ring.sub(ring.mul(x, gv), ring.mul(gv, x)))
    return IdealHandle(ring, frozenset(_close_ideal(ring, seeds, all_elems)))


def _close_ideal(ring, seeds, all_elems):
    members = {ring.zero_value}
    frontier = set(seeds) - members
    while frontier:
        new = set()
        for g in frontier:
            members.add(g)
        for g in frontier:
            for h in members:
                s = ring.add(g, h)
                if s not in members:
                    new.add(s)
            n = ring.neg(g)
            if n not in members:
                new.add(n)
            for x in all_elems:
                for p in (ring.mul(x, g), ring.mul(g, x)):
                    if p not in members:
                        new.add(p)
        frontier = new - members
    return members


@dataclass
class CentralQuotient:
    """Result of central_quotient: T = R/L_f with the projection map."""

    source: Ring
    ring: Ring
    ideal: IdealHandle
    is_zero: bool
    _rep_of: dict = field(repr=False, default_factory=dict)

    def pi(self, x) -> RingElem:
        """Project an element of R to T."""
        if isinstance(x, RingElem):
            if x.ring != self.source:
                raise RingMismatch("pi applied to an element of the wrong ring")
            x = x.value
        if self.is_zero:
            return self.ring.zero
        return RingElem(self.ring, self._rep_of[x])

    def pi_poly(self, f: Poly) -> Poly:
        return Poly(self.ring, [self.pi(c).value for c in f.coeffs])


def central_quotient(ring: Ring, f: Poly) -> CentralQuotient:
    """T_f = R/L_f where L_f is generated by commutators with the coefficients of f.

    Returns the quotient as a table ring together with the projection; the
    coefficients of the projected polynomial are central in T_f (asserted).
    When L_f is the whole ring the quotient is the zero ring, flagged rather
    than raised.
    """
    if not ring.is_finite:
        raise InfiniteRing("central_quotient requires a finite ring")
    if f.ring != ring:
        raise RingMismatch("f must be a polynomial over the ring being quotiented")
    ideal = commutator_ideal(ring, [RingElem(ring, c) for c in f.coeffs])
    if ideal.is_whole_ring():
        zero = ZeroRing()
        return CentralQuotient(ring, zero, ideal, True)

    all_elems = list(ring.elements())
    # cosets x + L; canonical representative = first element seen
    rep_of, reps = {}, []
    for x in all_elems:
        if x in rep_of:
            continue
        idx = len(reps)
        reps.append(x)
        for l in ideal.members:
            rep_of[ring.add(x, l)] = idx
    k = len(reps)
    add = [[rep_of[ring.add(reps[i], reps[j])] for j in range(k)] for i in range(k)]
    mul = [[rep_of[ring.mul(reps[i], reps[j])] for j in range(k)] for i in range(k)]
    labels = [ring.render(r) for r in reps]
    quotient = FiniteTableRing(
        add, mul, zero=rep_of[ring.zero_value], one=rep_of[ring.one_value],
        labels=labels, verify=False,  # ring axioms inherited from R
    )
    result = CentralQuotient(ring, quotient, ideal, False, rep_of)
    for c in result.pi_poly(f).coeffs:
        assert quotient.is_central(c), "projected coefficients must be central"
    return result


# ---------------------------------------------------------------------------
# table-ring construction helpers
# ---------------------------------------------------------------------------


def as_table_ring(ring: Ring, verify=False) -> FiniteTableRing:
    """Re-present any finite ring by explicit tables (mainly for tests)."""
    elems = list(ring.elements())
    index = {v: i for i, v in enumerate(elems)}
    k = len(elems)
    add = [[index[ring.add(elems[i], elems[j])] for j in range(k)] for i in range(k)]
    mul = [[index[ring.mul(elems[i], elems[j])] for j in range(k)] for i in range(k)]
    return FiniteTableRing(
        add, mul, zero=index[ring.zero_value], one=index[ring.one_value],
        labels=[ring.render(v) for v in elems], verify=verify,
    )


def table_ring_from_subset(ambient: Ring, values, spec_label=None) -> FiniteTableRing:
    """Build a table ring from a subset of a finite ring closed under the
    operations and containing 0 and 1 (closure is verified)."""
    elems = []
    seen = set()
    for v in values:
        cv = ambient.canon(v.value if isinstance(v, RingElem) else v)
        if cv not in seen:
            seen.add(cv)
            elems.append(cv)
    for needed in (ambient.zero_value, ambient.one_value):
        if needed not in seen:
            raise ValueError("subset must contain 0 and 1")
    index = {v: i for i, v in enumerate(elems)}
    k = len(elems)

    def look(v):
        if v not in index:
            raise ValueError("subset is not closed under the ring operations")
        return index[v]

    add = [[look(ambient.add(elems[i], elems[j])) for j in range(k)] for i in range(k)]
    mul = [[look(ambient.mul(elems[i], elems[j])) for j in range(k)] for i in range(k)]
    ring = FiniteTableRing(
        add, mul, zero=index[ambient.zero_value], one=index[ambient.one_value],
        labels=[ambient.render(v) for v in elems], verify=False,
    )
    if spec_label:
        ring.spec_label = spec_label
    return ring


def upper_triangular_ring(k: int, base: Ring) -> FiniteTableRing:
    """Upper-triangular k x k matrices over a finite ring, as a table ring."""
    from .rings import MatrixRing

    ambient = MatrixRing(k, base)
    base_elems = list(base.elements())
    z = base.zero_value
    positions = [(i, j) for i in range(k) for j in range(i, k)]
    values = []
    for combo in itertools.product(base_elems, repeat=len(positions)):
        entries = dict(zip(positions, combo))
        values.append(
            tuple(
                tuple(entries.get((i, j), z) if j >= i else z for j in range(k))
                for i in range(k)
            )
        )
    return table_ring_from_subset(
        ambient, values, spec_label=f"UT:{k}:{base.spec_string()}"
    )
