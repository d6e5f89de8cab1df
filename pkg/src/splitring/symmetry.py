"""Automorphisms of the splitting ring over the base: the permutation action
and the scaling systems available when the coefficient pattern allows them.

A candidate root system t_1..t_n induces the map p(r_1..r_n) -> p(t_1..t_n);
it is an automorphism over the base exactly when the t_i commute with each
other and with the base, the factorization f(Z) = (Z-t_1)...(Z-t_n) holds,
and the monomials t^alpha (0 <= alpha_i <= n-i) form a module basis.  The
last condition is decided by the change-of-basis determinant being a unit
(over Z that means +-1; mere independence is not enough for a basis).

Automorphisms are represented extensionally by their images on (r_1..r_n),
so composing and comparing maps reduces to comparing image tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import IndexOutOfRange, PreconditionViolated
from .matrices import SqMatrix, det
from .multipoly import alternating_coeffs
from .rings import IntegerRing, ModularRing, PolyCoefRing, RationalRing, RingElem
from .splitting import SplitElem, SplitRing


class Perm:
    """A permutation of {1..n}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise IndexOutOfRange(f"not a permutation of 1..{n}: {images}")
        self.images = images

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n, i, j):
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    def compose(self, other):
        """self after other: (self*other)(i) = self(other(i))."""
        return Perm(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self):
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Perm(inv)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm{self.images}"


def all_perms(n):
    return [Perm(p) for p in itertools.permutations(range(1, n + 1))]


@dataclass
class RootSystem:
    """Candidate roots t_1..t_n; validity is what is_automorphism_system decides."""

    ring: SplitRing
    roots: list
    label: str = "custom"


def apply_perm(ring: SplitRing, p: Perm, x: SplitElem) -> SplitElem:
    """Image of x under the automorphism induced by X_i -> X_{p(i)}."""
    base = ring.base
    z = base.zero_value
    coords = [z] * ring.size
    index = ring.basis_index
    for pos, c in enumerate(x.coords):
        if c == z:
            continue
        alpha = ring.basis[pos]
        beta = [0] * ring.n
        for i in range(1, ring.n + 1):
            beta[p(i) - 1] = alpha[i - 1]
        for gamma, c2 in ring.reduce_monomial(tuple(beta)).items():
            k = index[gamma]
            coords[k] = base.add(coords[k], base.mul(c, c2))
    return SplitElem(ring, tuple(coords))


def permutation_system(ring: SplitRing, p: Perm) -> RootSystem:
    return RootSystem(
        ring,
        [ring.root(p(i)) for i in range(1, ring.n + 1)],
        label=f"perm:{p.images}",
    )


def scaling_system(ring: SplitRing, u: RingElem, d: int) -> RootSystem:
    """t_i = u * r_i for a central unit u with u^d = 1, valid when d | n and
    a_i = 0 whenever d does not divide i."""
    base = ring.base
    n = ring.n
    uv = u.value if isinstance(u, RingElem) else base.canon(u)
    if not base.is_central(uv):
        raise PreconditionViolated("u is not central")
    if not base.is_unit(uv):
        raise PreconditionViolated("u is not a unit")
    if d < 1 or n % d != 0:
        raise PreconditionViolated(f"d = {d} does not divide n = {n}")
    acc = base.one_value
    for _ in range(d):
        acc = base.mul(acc, uv)
    if acc != base.one_value:
        raise PreconditionViolated(f"u^{d} != 1")
    a = alternating_coeffs(ring.f)
    for i in range(1, n + 1):
        if i % d != 0 and a[i - 1] != base.zero_value:
            raise PreconditionViolated(
                f"a_{i} != 0 although {d} does not divide {i}"
            )
    roots = [ring.root(i).scale(RingElem(base, uv)) for i in range(1, n + 1)]
    return RootSystem(ring, roots, label=f"scaling:u={base.render(uv)},d={d}")


def is_automorphism_system(ring: SplitRing, ts: RootSystem):
    """Decide the three conditions; returns (verdict, report dict)."""
    base = ring.base
    roots = ts.roots
    report = {"system": ts.label}

    commute = all(
        roots[i] * roots[j] == roots[j] * roots[i]
        for i in range(len(roots))
        for j in range(i + 1, len(roots))
    )
    if commute and not base.is_commutative and base.is_finite:
        # scalars must commute with each t_i as well
        for x in base.elements():
            xe = RingElem(base, x)
            if any(t.scale(xe) != _scale_right(t, xe) for t in roots):
                commute = False
                break
    report["commute"] = commute

    # factorization (Z - t_1)...(Z - t_n) = f(Z) in ring[Z]
    coeffs = [ring.one_elem]
    for t in roots:
        shifted = [ring.zero_elem] + coeffs
        scaled = [c * t for c in coeffs] + [ring.zero_elem]
        coeffs = [x - y for x, y in zip(shifted, scaled)]
    expected = [ring.gamma(c) for c in ring.f.coeffs]
    report["factorization"] = coeffs == expected

    report["basis_unit_det"] = _basis_is_unit(ring, roots)
    verdict = report["commute"] and report["factorization"] and report["basis_unit_det"]
    report["verdict"] = verdict
    return verdict, report


def _scale_right(t: SplitElem, xe: RingElem):
    base = t.ring.base
    return SplitElem(t.ring, tuple(base.mul(c, xe.value) for c in t.coords))


def _basis_is_unit(ring: SplitRing, roots):
    """Change of basis from t-monomials to r-monomials must be invertible."""
    monos = [ring.one_elem]
    index = ring.basis_index
    for e in ring.basis[1:]:
        i = next(j for j, v in enumerate(e) if v)
        prev = tuple(v - 1 if j == i else v for j, v in enumerate(e))
        monos.append(monos[index[prev]] * roots[i])
    matrix = SqMatrix(ring.base, [list(m.coords) for m in monos])  # rows = t^alpha
    base = ring.base
    if isinstance(base, (PolyCoefRing, IntegerRing, ModularRing, RationalRing)):
        d = det(matrix)
        return base.is_unit(d.value)
    if base.is_finite:
        # small table rings: brute-force invertibility of the linear map
        return _table_ring_invertible(ring, matrix)
    return False


def _table_ring_invertible(ring: SplitRing, matrix: SqMatrix):
    """Surjectivity of the coordinate map over a finite base, by enumeration.

    Only used for tiny rings (order^size bounded); a free module map over a
    finite ring is bijective iff surjective."""
    base = ring.base
    size = matrix.size
    if base.order() ** size > 4096:
        return None
    targets = set()
    rows = matrix.rows
    for combo in itertools.product(list(base.elements()), repeat=size):
        acc = [base.zero_value] * size
        for c, row in zip(combo, rows):
            for idx, e in enumerate(row):
                acc[idx] = base.add(acc[idx], base.mul(c, e))
        targets.add(tuple(acc))
    return len(targets) == base.order() ** size


def theta_injectivity(ring: SplitRing) -> bool:
    """All n! permutations induce pairwise distinct automorphisms, decided by
    their images on (r_1..r_n)."""
    seen = set()
    for p in all_perms(ring.n):
        image = tuple(
            apply_perm(ring, p, ring.root(i)).coords for i in range(1, ring.n + 1)
        )
        if image in seen:
            return False
        seen.add(image)
    return True
