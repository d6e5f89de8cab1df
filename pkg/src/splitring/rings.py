"""Exact arithmetic over pluggable base rings.

A ring is a `Ring` descriptor (immutable after construction); elements are
`RingElem` wrappers around a kind-specific canonical value:

    IntegerRing          -> int
    RationalRing         -> fractions.Fraction (reduced, positive denominator)
    ModularRing(m)       -> int in [0, m)
    MatrixRing(k, base)  -> k-tuple of k-tuples of base values
    QuotientRing(base,m) -> tuple of base values, length deg(m), low degree first
    PolyCoefRing(base,t) -> sorted tuple of (exponent-tuple, base value) pairs
    FiniteTableRing      -> int index into addition/multiplication tables
    ZeroRing             -> 0 (the ring with 1 = 0)

Operations keep values canonical, so `==` on values is semantic equality.
Descriptors compare structurally; it is safe to build the "same" ring twice.
Everything here is a pure function of immutable data and may be shared
freely across threads.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction

from .errors import (
    InexactDivision,
    InfiniteRing,
    LengthMismatch,
    NonMonic,
    NotAUnit,
    ParseError,
    RingMismatch,
)


class Ring:
    """Common interface; concrete kinds override the raw-value methods."""

    kind = "abstract"
    is_commutative = True
    is_finite = False
    is_zero = False

    # --- raw value protocol -------------------------------------------------

    def canon(self, a):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def invert(self, a):
        raise NotAUnit(f"inversion not supported in {self}")

    def dot(self, xs, ys):
        """Sum of pairwise products; hot path for matrix multiplication."""
        acc = self.zero_value
        for x, y in zip(xs, ys):
            acc = self.add(acc, self.mul(x, y))
        return acc

    def exact_div(self, a, b):
        """a / b when the quotient exists in the ring; used by Bareiss elimination."""
        raise InexactDivision(f"exact division not supported in {self}")

    def is_unit(self, a):
        try:
            self.invert(a)
            return True
        except NotAUnit:
            return False

    def is_central(self, a):
        return True if self.is_commutative else self._is_central(a)

    def _is_central(self, a):
        raise NotImplementedError

    def from_int(self, k):
        raise NotImplementedError

    def elements(self):
        """Iterate all raw values; only for finite rings."""
        raise InfiniteRing(f"{self} is not finite")

    def order(self):
        raise InfiniteRing(f"{self} is not finite")

    def render(self, a) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        raise ParseError(f"no element syntax for {self}", text, 0)

    def spec_string(self) -> str:
        raise NotImplementedError

    def _key(self):
        raise NotImplementedError

    # --- wrappers -----------------------------------------------------------

    @property
    def zero(self):
        return RingElem(self, self.zero_value)

    @property
    def one(self):
        return RingElem(self, self.one_value)

    def elem(self, value):
        return RingElem(self, self.canon(value))

    def __eq__(self, other):
        return self is other or (isinstance(other, Ring) and self._key() == other._key())

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return self.spec_string()


class RingElem:
    """An element of a `Ring`, value kept in canonical form."""

    __slots__ = ("ring", "value")

    def __init__(self, ring, value):
        self.ring = ring
        self.value = value

    def _coerce(self, other):
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other.value
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElem(self.ring, self.ring.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElem(self.ring, self.ring.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElem(self.ring, self.ring.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElem(self.ring, self.ring.mul(self.value, v))

    def __rmul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElem(self.ring, self.ring.mul(v, self.value))

    def __neg__(self):
        return RingElem(self.ring, self.ring.neg(self.value))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one_value
        base = self.value
        while n:
            if n & 1:
                result = self.ring.mul(result, base)
            base = self.ring.mul(base, base)
            n >>= 1
        return RingElem(self.ring, result)

    def invert(self):
        return RingElem(self.ring, self.ring.invert(self.value))

    def is_unit(self):
        return self.ring.is_unit(self.value)

    def is_central(self):
        return self.ring.is_central(self.value)

    def is_zero(self):
        return self.value == self.ring.zero_value

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == self.ring.from_int(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.ring == other.ring and self.value == other.value

    def __hash__(self):
        return hash((self.ring, self.value))

    def __repr__(self):
        return self.ring.render(self.value)


# ---------------------------------------------------------------------------
# concrete kinds
# ---------------------------------------------------------------------------


class IntegerRing(Ring):
    kind = "Integers"
    zero_value = 0
    one_value = 1

    def canon(self, a):
        if isinstance(a, RingElem):
            a = a.value
        if not isinstance(a, int):
            raise TypeError(f"integer expected, got {a!r}")
        return a

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def invert(self, a):
        if a in (1, -1):
            return a
        raise NotAUnit(f"{a} is not a unit in Z")

    def dot(self, xs, ys):
        return sum(map(int.__mul__, xs, ys))

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise InexactDivision(f"{a} not divisible by {b} in Z")
        return q

    def from_int(self, k):
        return k

    def render(self, a):
        return str(a)

    def parse(self, text):
        try:
            return int(text.strip())
        except ValueError:
            raise ParseError("expected an integer", text, 0) from None

    def spec_string(self):
        return "Z"

    def _key(self):
        return ("Z",)


class RationalRing(Ring):
    kind = "Rationals"
    zero_value = Fraction(0)
    one_value = Fraction(1)

    def canon(self, a):
        if isinstance(a, RingElem):
            a = a.value
        return Fraction(a)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def invert(self, a):
        if a == 0:
            raise NotAUnit("0 is not a unit in Q")
        return 1 / a

    def exact_div(self, a, b):
        if b == 0:
            raise InexactDivision("division by zero in Q")
        return a / b

    def from_int(self, k):
        return Fraction(k)

    def render(self, a):
        return str(a)

    def parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError("expected a rational like 2 or -3/4", text, 0) from None

    def spec_string(self):
        return "Q"

    def _key(self):
        return ("Q",)


class ModularRing(Ring):
    """Z/m with residues stored in [0, m)."""

    kind = "ModularIntegers"
    is_finite = True

    def __init__(self, modulus: int):
        if modulus < 2:
            raise ValueError("modulus must be >= 2")
        self.modulus = modulus
        self.zero_value = 0
        self.one_value = 1 % modulus

    def canon(self, a):
        if isinstance(a, RingElem):
            a = a.value
        return a % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def invert(self, a):
        try:
            return pow(a, -1, self.modulus)
        except ValueError:
            raise NotAUnit(f"{a} is not a unit mod {self.modulus}") from None

    def dot(self, xs, ys):
        return sum(map(int.__mul__, xs, ys)) % self.modulus

    def exact_div(self, a, b):
        return self.mul(a, self.invert(b))

    def from_int(self, k):
        return k % self.modulus

    def elements(self):
        return range(self.modulus)

    def order(self):
        return self.modulus

    def is_field(self):
        m = self.modulus
        if m < 2:
            return False
        return all(m % d for d in range(2, math.isqrt(m) + 1))

    def render(self, a):
        return str(a)

    def parse(self, text):
        try:
            return int(text.strip()) % self.modulus
        except ValueError:
            raise ParseError("expected an integer residue", text, 0) from None

    def spec_string(self):
        return f"Zmod:{self.modulus}"

    def _key(self):
        return ("Zmod", self.modulus)


class MatrixRing(Ring):
    """k-by-k matrices over a base ring; noncommutative for k >= 2."""

    kind = "MatrixRing"

    def __init__(self, size: int, base: Ring):
        if size < 1:
            raise ValueError("matrix size must be >= 1")
        self.size = size
        self.base = base
        self.is_commutative = size == 1 and base.is_commutative
        self.is_finite = base.is_finite
        z, o = base.zero_value, base.one_value
        self.zero_value = tuple(tuple(z for _ in range(size)) for _ in range(size))
        self.one_value = tuple(
            tuple(o if i == j else z for j in range(size)) for i in range(size)
        )

    def canon(self, a):
        if isinstance(a, RingElem):
            a = a.value
        rows = tuple(tuple(self.base.canon(e) for e in row) for row in a)
        if len(rows) != self.size or any(len(r) != self.size for r in rows):
            raise ValueError(f"expected a {self.size}x{self.size} matrix")
        return rows

    def add(self, a, b):
        base = self.base
        return tuple(
            tuple(base.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
        )

    def neg(self, a):
        base = self.base
        return tuple(tuple(base.neg(x) for x in row) for row in a)

    def mul(self, a, b):
        base = self.base
        cols = tuple(zip(*b))
        return tuple(tuple(base.dot(row, col) for col in cols) for row in a)

    def invert(self, a):
        # brute force; only sensible for small finite base rings
        if not self.is_finite:
            raise NotAUnit("matrix inversion over an infinite base is not supported")
        for b in self.elements():
            if self.mul(a, b) == self.one_value and self.mul(b, a) == self.one_value:
                return b
        raise NotAUnit("matrix is not invertible")

    def _is_central(self, a):
        z = self.base.zero_value
        d = a[0][0]
        for i in range(self.size):
            for j in range(self.size):
                if i == j:
                    if a[i][j] != d:
                        return False
                elif a[i][j] != z:
                    return False
        return self.base.is_central(d)

    def from_int(self, k):
        d = self.base.from_int(k)
        z = self.base.zero_value
        return tuple(
            tuple(d if i == j else z for j in range(self.size)) for i in range(self.size)
        )

    def elements(self):
        flat = list(self.base.elements())
        n2 = self.size * self.size
        for combo in itertools.product(flat, repeat=n2):
            yield tuple(
                combo[i * self.size : (i + 1) * self.size] for i in range(self.size)
            )

    def order(self):
        return self.base.order() ** (self.size * self.size)

    def matrix_unit(self, i, j):
        """E_ij as an element (1-based indices)."""
        z, o = self.base.zero_value, self.base.one_value
        return RingElem(
            self,
            tuple(
                tuple(o if (r, c) == (i - 1, j - 1) else z for c in range(self.size))
                for r in range(self.size)
            ),
        )

    def render(self, a):
        return "[" + ",".join(
            "[" + ",".join(self.base.render(e) for e in row) + "]" for row in a
        ) + "]"

    def parse(self, text):
        rows = _parse_nested_list(text)
        try:
            return self.canon([[self.base.parse(e) for e in row] for row in rows])
        except ValueError as exc:
            raise ParseError(str(exc), text, 0) from None

    def spec_string(self):
        return f"Mat:{self.size}:{self.base.spec_string()}"

    def _key(self):
        return ("Mat", self.size, self.base._key())


def _parse_nested_list(text):
    """Parse '[[a,b],[c,d]]' into [['a','b'],['c','d']] without touching entries."""
    s = text.strip()
    if not (s.startswith("[[") and s.endswith("]]")):
        raise ParseError("matrix literal must look like [[a,b],[c,d]]", text, 0)
    inner = s[1:-1]
    rows, depth, start = [], 0, 0
    chunks = []
    for i, ch in enumerate(inner):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced brackets", text, i + 1)
        elif ch == "," and depth == 0:
            chunks.append(inner[start:i])
            start = i + 1
    chunks.append(inner[start:])
    for chunk in chunks:
        chunk = chunk.strip()
        if not (chunk.startswith("[") and chunk.endswith("]")):
            raise ParseError("matrix row must look like [a,b]", text, 0)
        rows.append(split_top_level(chunk[1:-1]))
    return rows


def split_top_level(text, sep=","):
    """Split on `sep` occurring outside any bracket nesting."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i].strip())
            start = i + 1
    parts.append(text[start:].strip())
    return parts


class FiniteTableRing(Ring):
    """A finite ring given by explicit addition and multiplication tables.

    Elements are indices 0..k-1; `labels` are display names.  Construction
    verifies the ring axioms: exhaustively for order <= 64, on random
    triples beyond that (full exhaustion at order 256 would be ~50M checks).
    """

    kind = "FiniteTableRing"
    is_finite = True

    def __init__(self, add_table, mul_table, zero=0, one=1, labels=None, verify=True):
        self.add_table = tuple(tuple(row) for row in add_table)
        self.mul_table = tuple(tuple(row) for row in mul_table)
        self.zero_value = zero
        self.one_value = one
        k = len(self.add_table)
        self.labels = tuple(labels) if labels else tuple(f"#{i}" for i in range(k))
        if one == zero:
            raise ValueError("table ring requires 1 != 0 (use ZeroRing for the zero ring)")
        self._neg = self._negation_table()
        if verify:
            self._verify_axioms()
        self.is_commutative = all(
            self.mul_table[i][j] == self.mul_table[j][i]
            for i in range(k)
            for j in range(i)
        )

    def _negation_table(self):
        k = len(self.add_table)
        neg = [None] * k
        for i in range(k):
            for j in range(k):
                if self.add_table[i][j] == self.zero_value:
                    neg[i] = j
                    break
            if neg[i] is None:
                raise ValueError(f"element {i} has no additive inverse")
        return tuple(neg)

    def _verify_axioms(self):
        k = len(self.add_table)
        add, mul, z, o = self.add_table, self.mul_table, self.zero_value, self.one_value
        if any(len(row) != k for row in add) or len(mul) != k or any(
            len(row) != k for row in mul
        ):
            raise ValueError("tables must be square and the same size")
        for i in range(k):
            if add[i][z] != i or add[z][i] != i:
                raise ValueError("0 is not an additive identity")
            if mul[i][o] != i or mul[o][i] != i:
                raise ValueError("1 is not a multiplicative identity")
            for j in range(k):
                if add[i][j] != add[j][i]:
                    raise ValueError("addition is not commutative")
        if k <= 64:
            triples = itertools.product(range(k), repeat=3)
        else:
            import random

            rng = random.Random(0)
            triples = (
                tuple(rng.randrange(k) for _ in range(3)) for _ in range(4000)
            )
        for a, b, c in triples:
            if add[add[a][b]][c] != add[a][add[b][c]]:
                raise ValueError("addition is not associative")
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise ValueError("multiplication is not associative")
            if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                raise ValueError("left distributivity fails")
            if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                raise ValueError("right distributivity fails")

    def canon(self, a):
        if isinstance(a, RingElem):
            a = a.value
        if not isinstance(a, int) or not 0 <= a < len(self.add_table):
            raise ValueError(f"table index expected, got {a!r}")
        return a

    def add(self, a, b):
        return self.add_table[a][b]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def invert(self, a):
        for b in range(len(self.add_table)):
            if (
                self.mul_table[a][b] == self.one_value
                and self.mul_table[b][a] == self.one_value
            ):
                return b
        raise NotAUnit(f"{self.render(a)} is not a unit")

    def _is_central(self, a):
        return all(
            self.mul_table[a][x] == self.mul_table[x][a]
            for x in range(len(self.add_table))
        )

    def from_int(self, k):
        # characteristic-aware repeated addition of 1
        if k < 0:
            return self._neg[self.from_int(-k)]
        acc = self.zero_value
        one = self.one_value
        for _ in range(k % self.characteristic()):
            acc = self.add_table[acc][one]
        return acc

    def characteristic(self):
        acc, count = self.one_value, 1
        while acc != self.zero_value:
            acc = self.add_table[acc][self.one_value]
            count += 1
        return count

    def elements(self):
        return range(len(self.add_table))

    def order(self):
        return len(self.add_table)

    def render(self, a):
        return self.labels[a]

    def parse(self, text):
        text = text.strip()
        if text in self.labels:
            return self.labels.index(text)
        if text.startswith("#"):
            try:
                return self.canon(int(text[1:]))
            except ValueError:
                pass
        raise ParseError("unknown table-ring element", text, 0)

    def spec_string(self):
        return getattr(self, "spec_label", f"Table[{len(self.add_table)}]")

    def _key(self):
        return ("Table", self.add_table, self.mul_table, self.zero_value, self.one_value)


class ZeroRing(Ring):
    """The one-element ring (1 = 0); the collapse target of central_quotient."""

    kind = "ZeroRing"
    is_finite = True
    is_zero = True
    zero_value = 0
    one_value = 0

    def canon(self, a):
        return 0

    def add(self, a, b):
        return 0

    def neg(self, a):
        return 0

    def mul(self, a, b):
        return 0

    def invert(self, a):
        return 0

    def from_int(self, k):
        return 0

    def elements(self):
        return (0,)

    def order(self):
        return 1

    def render(self, a):
        return "0"

    def spec_string(self):
        return "ZeroRing"

    def _key(self):
        return ("Zero",)


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Univariate polynomial, coefficients stored low degree first.

    The leading coefficient is nonzero unless the polynomial is zero
    (over the zero ring everything is the zero polynomial).  Evaluation
    uses the left-substitution convention: coefficients multiply powers
    of the point on the left.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        vals = [ring.canon(c) for c in coeffs]
        while vals and vals[-1] == ring.zero_value:
            vals.pop()
        self.ring = ring
        self.coeffs = tuple(vals)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return RingElem(self.ring, self.coeffs[i])
        return self.ring.zero

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one_value

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __add__(self, other):
        self._check(other)
        r = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [r.zero_value] * (n - len(self.coeffs))
        b = list(other.coeffs) + [r.zero_value] * (n - len(other.coeffs))
        return Poly(r, [r.add(x, y) for x, y in zip(a, b)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        r = self.ring
        return Poly(r, [r.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, RingElem):
            return self.scale(other)
        self._check(other)
        r = self.ring
        if self.is_zero() or other.is_zero():
            return Poly(r, [])
        out = [r.zero_value] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = r.add(out[i + j], r.mul(a, b))
        return Poly(r, out)

    def scale(self, c):
        r = self.ring
        cv = r.canon(c)
        return Poly(r, [r.mul(cv, x) for x in self.coeffs])

    def shift(self, k):
        """Multiply by Z^k."""
        if self.is_zero():
            return self
        return Poly(self.ring, (self.ring.zero_value,) * k + self.coeffs)

    def _check(self, other):
        if not isinstance(other, Poly) or other.ring != self.ring:
            raise RingMismatch("polynomials over different rings")

    def eval(self, x):
        """Evaluate at x, coefficients kept on the left of powers of x."""
        r = self.ring
        if isinstance(x, RingElem):
            if x.ring != r:
                raise RingMismatch("evaluation point in a different ring")
            xv = x.value
        else:
            xv = r.canon(x)
        acc = r.zero_value
        for c in reversed(self.coeffs):
            acc = r.add(r.mul(acc, xv), c)
        return RingElem(r, acc)

    def divmod_monic(self, divisor):
        """Quotient and remainder by a monic divisor."""
        if not divisor.is_monic():
            raise NonMonic("division requires a monic divisor")
        r = self.ring
        d = divisor.degree
        rem = list(self.coeffs)
        quo = [r.zero_value] * max(0, len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c == r.zero_value:
                continue
            quo[k - d] = c
            for j, m in enumerate(divisor.coeffs):
                rem[k - d + j] = r.sub(rem[k - d + j], r.mul(c, m))
        return Poly(r, quo), Poly(r, rem[:d])

    def derived(self, j):
        """Drop the j+1 lowest coefficients: the iterated (g - g(0))/Z transform."""
        return Poly(self.ring, self.coeffs[j + 1 :])

    def render(self, var="Z"):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == self.ring.zero_value:
                continue
            s = self.ring.render(c)
            if k == 0:
                term = s
            else:
                power = var if k == 1 else f"{var}^{k}"
                if s == "1":
                    term = power
                elif s == "-1":
                    term = f"-{power}"
                elif re.fullmatch(r"-?[A-Za-z0-9_/#.]+", s):
                    term = f"{s}*{power}"
                else:
                    term = f"({s})*{power}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return self.render()


def poly_eval(p: Poly, x) -> RingElem:
    return p.eval(x)


def poly_from_ints(ring, ints):
    return Poly(ring, [ring.from_int(k) for k in ints])


# ---------------------------------------------------------------------------
# quotient rings R[Z]/(m)
# ---------------------------------------------------------------------------


class QuotientRing(Ring):
    """base[Z]/(m) for monic m with central coefficients.

    Values are coefficient tuples of length deg(m); the class of Z (the
    adjoined root) is `root_value`.  Towers nest to any depth.
    """

    kind = "UnivariateQuotient"

    def __init__(self, base: Ring, modulus: Poly):
        if modulus.ring != base:
            raise RingMismatch("modulus must be a polynomial over the base ring")
        if not modulus.is_monic() or modulus.degree < 1:
            raise NonMonic("modulus must be monic of degree >= 1")
        for c in modulus.coeffs:
            if not base.is_central(c):
                raise NonMonic("modulus coefficients must be central in the base")
        self.base = base
        self.modulus = modulus
        self.deg = modulus.degree
        self.is_commutative = base.is_commutative
        self.is_finite = base.is_finite
        z = base.zero_value
        self.zero_value = (z,) * self.deg
        self.one_value = self._pad([base.one_value])
        self.root_value = self._pad([z, base.one_value]) if self.deg >= 2 else (
            (base.neg(modulus.coeffs[0]),)
        )

    def _pad(self, vals):
        z = self.base.zero_value
        vals = list(vals[: self.deg])
        return tuple(vals + [z] * (self.deg - len(vals)))

    def _reduce(self, vals):
        """Reduce a raw coefficient list mod the monic modulus."""
        base, d = self.base, self.deg
        vals = list(vals)
        m = self.modulus.coeffs
        for k in range(len(vals) - 1, d - 1, -1):
            c = vals[k]
            vals[k] = base.zero_value
            if c == base.zero_value:
                continue
            for j in range(d):
                vals[k - d + j] = base.sub(vals[k - d + j], base.mul(c, m[j]))
        return self._pad(vals)

    @property
    def root(self):
        """The class of Z: the adjoined root of the modulus."""
        return RingElem(self, self.root_value)

    def canon(self, a):
        if isinstance(a, RingElem):
            if a.ring == self:
                return a.value
            if a.ring == self.base:
                return self._pad([a.value])
            a = a.value
        if isinstance(a, int):
            return self.from_int(a)
        if isinstance(a, Poly):
            a = a.coeffs
        return self._reduce([self.base.canon(c) for c in a])

    def add(self, a, b):
        base = self.base
        return tuple(base.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        base = self.base
        return tuple(base.neg(x) for x in a)

    def mul(self, a, b):
        base, d = self.base, self.deg
        out = [base.zero_value] * (2 * d - 1)
        for i, x in enumerate(a):
            if x == base.zero_value:
                continue
            for j, y in enumerate(b):
                if y == base.zero_value:
                    continue
                out[i + j] = base.add(out[i + j], base.mul(x, y))
        return self._reduce(out)

    def _is_central(self, a):
        # the root is central, so an element is central iff its coords are
        return all(self.base.is_central(c) for c in a)

    def from_int(self, k):
        return self._pad([self.base.from_int(k)])

    def lift(self, a) -> Poly:
        """Canonical representative of degree < deg(m), as a Poly over the base."""
        if isinstance(a, RingElem):
            a = a.value
        return Poly(self.base, a)

    def elements(self):
        for combo in itertools.product(list(self.base.elements()), repeat=self.deg):
            yield combo

    def order(self):
        return self.base.order() ** self.deg

    def render(self, a):
        return "(" + Poly(self.base, a).render(var="t") + ")"

    def spec_string(self):
        mod = ",".join(self.base.render(c) for c in self.modulus.coeffs)
        return f"Quot({self.base.spec_string()};{mod})"

    def _key(self):
        return ("Quot", self.base._key(), self.modulus.coeffs)


def quotient_ring(base: Ring, m: Poly) -> QuotientRing:
    """The tower step base[Z]/(m): adjoin one root of a monic polynomial."""
    return QuotientRing(base, m)


# ---------------------------------------------------------------------------
# polynomial coefficient rings (commuting indeterminates)
# ---------------------------------------------------------------------------


class PolyCoefRing(Ring):
    """base[c_1,...,c_t]: polynomials in t commuting indeterminates, used as
    a coefficient ring so identities can be checked symbolically.

    Values are sorted tuples of (exponent tuple, base value) with no zero
    coefficients; term order for storage and display is lexicographic.
    """

    kind = "PolynomialCoefficients"

    def __init__(self, base: Ring, num_indeterminates: int, names=None):
        if num_indeterminates < 1:
            raise ValueError("need at least one indeterminate")
        self.base = base
        self.t = num_indeterminates
        if names is None:
            names = tuple(f"a{i}" for i in range(1, num_indeterminates + 1))
        if len(names) != num_indeterminates:
            raise ValueError("one name per indeterminate")
        self.names = tuple(names)
        self.is_commutative = base.is_commutative
        self.zero_value = ()
        self.one_value = (((0,) * self.t, base.one_value),)

    def generator(self, i):
        """The i-th indeterminate (1-based) as an element."""
        exp = tuple(1 if j == i - 1 else 0 for j in range(self.t))
        return RingElem(self, ((exp, self.base.one_value),))

    def generators(self):
        return [self.generator(i) for i in range(1, self.t + 1)]

    def _from_dict(self, d):
        items = [(e, c) for e, c in d.items() if c != self.base.zero_value]
        items.sort(key=lambda item: item[0], reverse=True)
        return tuple(items)

    def canon(self, a):
        if isinstance(a, RingElem):
            if a.ring == self:
                return a.value
            if a.ring == self.base:
                return self.constant(a.value).value
            a = a.value
        if isinstance(a, int):
            return self.from_int(a)
        if isinstance(a, dict):
            return self._from_dict(
                {tuple(e): self.base.canon(c) for e, c in a.items()}
            )
        # tuple-of-pairs form
        return self._from_dict({tuple(e): self.base.canon(c) for e, c in a})

    def add(self, a, b):
        base = self.base
        d = dict(a)
        for e, c in b:
            cur = d.get(e)
            if cur is None:
                d[e] = c
            else:
                s = base.add(cur, c)
                if s == base.zero_value:
                    del d[e]
                else:
                    d[e] = s
        return self._from_dict(d)

    def neg(self, a):
        base = self.base
        return tuple((e, base.neg(c)) for e, c in a)

    def mul(self, a, b):
        base = self.base
        d = {}
        for e1, c1 in a:
            for e2, c2 in b:
                e = tuple(x + y for x, y in zip(e1, e2))
                p = base.mul(c1, c2)
                cur = d.get(e)
                if cur is None:
                    d[e] = p
                else:
                    d[e] = base.add(cur, p)
        return self._from_dict(d)

    def invert(self, a):
        # units of a polynomial ring over a domain are the constant units
        if len(a) == 1 and a[0][0] == (0,) * self.t:
            return (((0,) * self.t, self.base.invert(a[0][1])),)
        raise NotAUnit("nonconstant polynomials are not units")

    def exact_div(self, a, b):
        """Exact multivariate division (base must be a domain)."""
        if not b:
            raise InexactDivision("division by zero polynomial")
        base = self.base
        rem = dict(a)
        quo = {}
        lead_e, lead_c = b[0]
        while rem:
            e = max(rem)
            c = rem[e]
            qe = tuple(x - y for x, y in zip(e, lead_e))
            if any(x < 0 for x in qe):
                raise InexactDivision("multivariate division left a remainder")
            qc = base.exact_div(c, lead_c)
            quo[qe] = qc
            for be, bc in b:
                te = tuple(x + y for x, y in zip(qe, be))
                cur = rem.get(te, base.zero_value)
                nv = base.sub(cur, base.mul(qc, bc))
                if nv == base.zero_value:
                    rem.pop(te, None)
                else:
                    rem[te] = nv
        return self._from_dict(quo)

    def _is_central(self, a):
        return all(self.base.is_central(c) for _, c in a)

    def from_int(self, k):
        c = self.base.from_int(k)
        if c == self.base.zero_value:
            return ()
        return (((0,) * self.t, c),)

    def constant(self, a):
        """View a base-ring element as a constant polynomial."""
        c = self.base.canon(a)
        if c == self.base.zero_value:
            return self.zero
        return RingElem(self, (((0,) * self.t, c),))

    def render(self, a):
        if not a:
            return "0"
        parts = []
        for e, c in a:
            mono = "*".join(
                self.names[i] if k == 1 else f"{self.names[i]}^{k}"
                for i, k in enumerate(e)
                if k
            )
            cs = self.base.render(c)
            if not mono:
                term = cs
            elif cs == "1":
                term = mono
            elif cs == "-1":
                term = f"-{mono}"
            else:
                term = f"{cs}*{mono}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def parse(self, text):
        return _PolyCoefParser(self, text).parse()

    def spec_string(self):
        return f"PolyCoef:{self.t}:{self.base.spec_string()}"

    def _key(self):
        return ("PolyCoef", self.t, self.names, self.base._key())


class _PolyCoefParser:
    """Recursive-descent parser for expressions over a PolyCoefRing:
    integers, generator names, + - * ^ and parentheses."""

    _token_re = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z0-9_]*|[-+*^()])")

    def __init__(self, ring, text):
        self.ring = ring
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = self._token_re.match(text, pos)
            if not m:
                raise ParseError("unexpected character", text, pos)
            self.tokens.append((m.group(1), m.start(1)))
            pos = m.end()
        self.i = 0

    def _peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def _next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self):
        v = self._expr()
        if self.i != len(self.tokens):
            raise ParseError("trailing input", self.text, self.tokens[self.i][1])
        return v.value

    def _expr(self):
        if self._peek() == "-":
            self._next()
            acc = -self._term()
        else:
            if self._peek() == "+":
                self._next()
            acc = self._term()
        while self._peek() in ("+", "-"):
            op, _ = self._next()
            term = self._term()
            acc = acc + term if op == "+" else acc - term
        return acc

    def _term(self):
        acc = self._factor()
        while self._peek() == "*":
            self._next()
            acc = acc * self._factor()
        return acc

    def _factor(self):
        base = self._atom()
        if self._peek() == "^":
            self._next()
            tok, pos = self._next() if self.i < len(self.tokens) else (None, len(self.text))
            if tok is None or not tok.isdigit():
                raise ParseError("exponent must be a nonnegative integer", self.text, pos)
            return base ** int(tok)
        return base

    def _atom(self):
        if self._peek() is None:
            raise ParseError("unexpected end of input", self.text, len(self.text))
        tok, pos = self._next()
        if tok == "(":
            v = self._expr()
            if self._peek() != ")":
                raise ParseError("expected ')'", self.text, pos)
            self._next()
            return v
        if tok == "-":
            return -self._atom()
        if tok.isdigit():
            return RingElem(self.ring, self.ring.from_int(int(tok)))
        if tok in self.ring.names:
            return self.ring.generator(self.ring.names.index(tok) + 1)
        raise ParseError(f"unknown name {tok!r}", self.text, pos)


# ---------------------------------------------------------------------------
# ring-spec grammar
# ---------------------------------------------------------------------------

INTEGERS = IntegerRing()
RATIONALS = RationalRing()


def parse_ring(spec: str, names=None) -> Ring:
    """Parse the CLI ring grammar: Z | Q | Zmod:<m> | Mat:<k>:<spec>
    | PolyCoef:<t>:<spec> | UT:<k>:Zmod:<m>.

    `names` supplies indeterminate names for the outermost PolyCoef level.
    """
    tokens = spec.split(":")
    ring, used = _parse_ring_tokens(spec, tokens, 0, names)
    if used != len(tokens):
        raise ParseError("trailing ring-spec tokens", spec, len(":".join(tokens[:used])))
    return ring


def _parse_ring_tokens(spec, tokens, i, names=None):
    def offset(j):
        return len(":".join(tokens[:j])) + (1 if j else 0)

    if i >= len(tokens):
        raise ParseError("incomplete ring spec", spec, len(spec))
    head = tokens[i]
    if head == "Z":
        return INTEGERS, i + 1
    if head == "Q":
        return RATIONALS, i + 1
    if head == "Zmod":
        m = _int_token(spec, tokens, i + 1, offset)
        if m < 2:
            raise ParseError("modulus must be >= 2", spec, offset(i + 1))
        return ModularRing(m), i + 2
    if head == "Mat":
        k = _int_token(spec, tokens, i + 1, offset)
        base, j = _parse_ring_tokens(spec, tokens, i + 2)
        return MatrixRing(k, base), j
    if head == "PolyCoef":
        t = _int_token(spec, tokens, i + 1, offset)
        base, j = _parse_ring_tokens(spec, tokens, i + 2)
        return PolyCoefRing(base, t, names=names), j
    if head == "UT":
        # upper-triangular k x k matrices over a finite ring, as a table ring
        from .ideals import upper_triangular_ring

        k = _int_token(spec, tokens, i + 1, offset)
        base, j = _parse_ring_tokens(spec, tokens, i + 2)
        if not base.is_finite:
            raise ParseError("UT requires a finite base ring", spec, offset(i + 2))
        ring = upper_triangular_ring(k, base)
        return ring, j
    raise ParseError(f"unknown ring kind {head!r}", spec, offset(i))


def _int_token(spec, tokens, i, offset):
    if i >= len(tokens):
        raise ParseError("expected an integer parameter", spec, len(spec))
    try:
        return int(tokens[i])
    except ValueError:
        raise ParseError("expected an integer parameter", spec, offset(i)) from None
