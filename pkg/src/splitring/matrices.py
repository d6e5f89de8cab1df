"""Dense square matrices over an exact ring, plus exact rank/determinant.

Sizes stay at or below 6! = 720, so everything is dense and pure Python.
Rank and determinant dispatch on the coefficient ring:

  * fields (Q, Z/p)               -> Gaussian elimination
  * Z                              -> Gaussian elimination over Q
  * polynomial coefficient rings   -> fraction-free Bareiss elimination,
                                      using exact division in the domain
  * Z/m, m composite               -> determinant by lifting to Z; rank is
                                      reported per prime divisor of m
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RingMismatch, SplitRingError
from .rings import (
    INTEGERS,
    IntegerRing,
    ModularRing,
    PolyCoefRing,
    Poly,
    RationalRing,
    Ring,
    RingElem,
)


class SqMatrix:
    __slots__ = ("ring", "size", "rows")

    def __init__(self, ring: Ring, rows):
        self.ring = ring
        self.rows = tuple(tuple(ring.canon(e) for e in row) for row in rows)
        self.size = len(self.rows)
        if any(len(r) != self.size for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, ring, size):
        z, o = ring.zero_value, ring.one_value
        return cls(ring, [[o if i == j else z for j in range(size)] for i in range(size)])

    @classmethod
    def zero(cls, ring, size):
        z = ring.zero_value
        return cls(ring, [[z] * size for _ in range(size)])

    @classmethod
    def scalar(cls, ring, size, c):
        return cls.identity(ring, size).scale(c)

    def entry(self, i, j) -> RingElem:
        return RingElem(self.ring, self.rows[i][j])

    def _check(self, other):
        if not isinstance(other, SqMatrix) or other.ring != self.ring:
            raise RingMismatch("matrices over different rings")
        if other.size != self.size:
            raise ValueError("size mismatch")

    def __add__(self, other):
        self._check(other)
        ring = self.ring
        return self._raw(
            [
                [ring.add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        self._check(other)
        ring = self.ring
        return self._raw(
            [
                [ring.sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self):
        ring = self.ring
        return self._raw([[ring.neg(a) for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, (RingElem, int)):
            return self.scale(other)
        self._check(other)
        ring = self.ring
        cols = tuple(zip(*other.rows))
        return self._raw(
            [[ring.dot(row, col) for col in cols] for row in self.rows]
        )

    def __rmul__(self, other):
        if isinstance(other, (RingElem, int)):
            return self.scale(other)  # scalars are central in use
        return NotImplemented

    def scale(self, c):
        ring = self.ring
        cv = ring.from_int(c) if isinstance(c, int) else ring.canon(c)
        return self._raw([[ring.mul(cv, a) for a in row] for row in self.rows])

    def _raw(self, rows):
        m = SqMatrix.__new__(SqMatrix)
        m.ring = self.ring
        m.size = self.size
        m.rows = tuple(tuple(row) for row in rows)
        return m

    def __eq__(self, other):
        return (
            isinstance(other, SqMatrix)
            and self.ring == other.ring
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ring, self.rows))

    def is_zero(self):
        z = self.ring.zero_value
        return all(e == z for row in self.rows for e in row)

    def commutes_with(self, other):
        return self * other == other * self

    def flatten(self):
        """Entries in row-major order (raw values)."""
        return [e for row in self.rows for e in row]

    # --- structure -----------------------------------------------------------

    @classmethod
    def direct_sum(cls, blocks):
        ring = blocks[0].ring
        size = sum(b.size for b in blocks)
        z = ring.zero_value
        rows = [[z] * size for _ in range(size)]
        at = 0
        for b in blocks:
            for i in range(b.size):
                rows[at + i][at : at + b.size] = b.rows[i]
            at += b.size
        return cls(ring, rows)

    @classmethod
    def from_blocks(cls, grid):
        """Assemble from a 2-D list of equally sized square blocks."""
        inner = grid[0][0].size
        ring = grid[0][0].ring
        rows = []
        for brow in grid:
            for i in range(inner):
                rows.append([e for block in brow for e in block.rows[i]])
        return cls(ring, rows)

    # --- rendering -----------------------------------------------------------

    def pretty(self):
        texts = [[self.ring.render(e) for e in row] for row in self.rows]
        widths = [max(len(texts[i][j]) for i in range(self.size)) for j in range(self.size)]
        return "\n".join(
            "[ " + "  ".join(t.rjust(w) for t, w in zip(row, widths)) + " ]"
            for row in texts
        )

    def to_json(self):
        return {
            "size": self.size,
            "ring": self.ring.spec_string(),
            "rows": [[self.ring.render(e) for e in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data, ring=None):
        from .rings import parse_ring

        if ring is None:
            ring = parse_ring(data["ring"])
        return cls(ring, [[ring.parse(e) for e in row] for row in data["rows"]])

    def __repr__(self):
        return self.pretty()


def poly_at_matrix(g: Poly, m: SqMatrix) -> SqMatrix:
    """Horner evaluation of g at a square matrix."""
    acc = SqMatrix.zero(m.ring, m.size)
    for c in reversed(g.coeffs):
        acc = acc * m + SqMatrix.scalar(m.ring, m.size, c)
    return acc


# ---------------------------------------------------------------------------
# exact rank and determinant
# ---------------------------------------------------------------------------


def _gauss_rank_field(rows, ring):
    """Row reduction over a field given by ring ops; consumes a list of lists."""
    if not rows:
        return 0
    ncols = len(rows[0])
    z = ring.zero_value
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != z), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = ring.invert(rows[r][c])
        rows[r] = [ring.mul(inv, e) for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != z:
                f = rows[i][c]
                rows[i] = [ring.sub(a, ring.mul(f, b)) for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def _bareiss_rank(rows, ring):
    """Fraction-free elimination over an integral domain with exact_div."""
    if not rows:
        return 0
    m, n = len(rows), len(rows[0])
    z = ring.zero_value
    prev = ring.one_value
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if rows[i][c] != z), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, m):
            ric = rows[i][c]
            for j in range(n):
                num = ring.sub(ring.mul(pv, rows[i][j]), ring.mul(ric, rows[r][j]))
                rows[i][j] = ring.exact_div(num, prev)
        prev = pv
        r += 1
        if r == m:
            break
    return r


def rank(matrix_rows, ring: Ring) -> int:
    """Exact rank of a (possibly rectangular) list of rows of raw values.

    Over Z the rank is taken over Q; over a polynomial coefficient ring the
    rank is over the fraction field (via fraction-free elimination).
    Composite moduli are rejected here; use rank_profile_mod.
    """
    rows = [list(r) for r in matrix_rows]
    if isinstance(ring, (RationalRing,)):
        return _gauss_rank_field(rows, ring)
    if isinstance(ring, ModularRing):
        if not ring.is_field():
            raise SplitRingError(
                "rank over a composite modulus is prime-by-prime; use rank_profile_mod"
            )
        return _gauss_rank_field(rows, ring)
    if isinstance(ring, IntegerRing):
        frac_rows = [[Fraction(e) for e in r] for r in rows]
        return _gauss_rank_field(frac_rows, RationalRing())
    if isinstance(ring, PolyCoefRing):
        return _bareiss_rank(rows, ring)
    raise SplitRingError(f"no exact rank routine for {ring}")


def rank_profile_mod(matrix_rows, modulus: int):
    """Rank of an integer-entry matrix over Z/p for every prime p | modulus."""
    out = {}
    for p in _prime_divisors(modulus):
        ring = ModularRing(p)
        rows = [[e % p for e in r] for r in matrix_rows]
        out[p] = _gauss_rank_field(rows, ring)
    return out


def _prime_divisors(m):
    out, d = [], 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def det(matrix: SqMatrix) -> RingElem:
    """Exact determinant.  Z/m values are computed by lifting to Z."""
    ring = matrix.ring
    if isinstance(ring, ModularRing):
        lifted = [[int(e) for e in row] for row in matrix.rows]
        d = _bareiss_det(lifted, INTEGERS)
        return RingElem(ring, d % ring.modulus)
    if isinstance(ring, RationalRing):
        rows = [list(r) for r in matrix.rows]
        return RingElem(ring, _gauss_det_field(rows, ring))
    if isinstance(ring, (IntegerRing, PolyCoefRing)):
        rows = [list(r) for r in matrix.rows]
        return RingElem(ring, _bareiss_det(rows, ring))
    raise SplitRingError(f"no exact determinant routine for {ring}")


def _bareiss_det(rows, ring):
    n = len(rows)
    if n == 0:
        return ring.one_value
    z = ring.zero_value
    prev = ring.one_value
    sign = 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != z), None)
        if pivot is None:
            return z
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            sign = -sign
        pv = rows[c][c]
        for i in range(c + 1, n):
            ric = rows[i][c]
            for j in range(n):
                num = ring.sub(ring.mul(pv, rows[i][j]), ring.mul(ric, rows[c][j]))
                rows[i][j] = ring.exact_div(num, prev)
        prev = pv
    d = rows[n - 1][n - 1]
    return ring.neg(d) if sign < 0 else d


def _gauss_det_field(rows, ring):
    n = len(rows)
    z = ring.zero_value
    acc = ring.one_value
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != z), None)
        if pivot is None:
            return z
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            acc = ring.neg(acc)
        pv = rows[c][c]
        acc = ring.mul(acc, pv)
        inv = ring.invert(pv)
        for i in range(c + 1, n):
            if rows[i][c] != z:
                f = ring.mul(rows[i][c], inv)
                rows[i] = [ring.sub(a, ring.mul(f, b)) for a, b in zip(rows[i], rows[c])]
    return acc
