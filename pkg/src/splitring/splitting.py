"""The universal splitting ring of a monic polynomial, as concrete data.

Elements are coordinate vectors on the n! monomials r_1^a1 ... r_n^an with
0 <= a_i <= n-i, ordered mixed-radix little-endian:

    index(a) = a_1 + n*(a_2 + (n-1)*(a_3 + ...))

which lists 1, r_1, ..., r_1^{n-1}, then that block times r_2, and so on.
Multiplication rewrites any out-of-range power using the triangular
generators: X_i^{n-i+1} is replaced by X_i^{n-i+1} - f_i(X_1..X_i), which
lowers the X_i-degree to at most n-i and only raises degrees of earlier
variables.  Comparing exponent vectors (a_n,...,a_1) lexicographically,
every rewrite strictly decreases, so the reduction terminates; monomial
normal forms are memoized per ring (idempotent inserts, so concurrent use
can at worst duplicate work).
"""

from __future__ import annotations

import math

from .errors import CapExceeded, NonCentralCoefficients, NonMonic, RingMismatch
from .matrices import SqMatrix
from .multipoly import MPoly, build_relations_recursive
from .rings import Poly, Ring, RingElem

DEFAULT_CAP = 6


class SplitRing:
    def __init__(self, base: Ring, f: Poly, cap: int = DEFAULT_CAP):
        if base.is_zero:
            # collapsed central quotient: everything is zero but the shape survives
            self.base = base
            self.f = f
            self.n = max(len(f.coeffs) - 1, 1)
            self.relations = []
        else:
            if f.ring != base:
                raise RingMismatch("f must be a polynomial over the base ring")
            if not f.is_monic() or f.degree < 1:
                raise NonMonic("f must be monic of degree >= 1")
            for c in f.coeffs:
                if not base.is_central(c):
                    raise NonCentralCoefficients(
                        "coefficients of f must be central; apply central_quotient first"
                    )
            self.base = base
            self.f = f
            self.n = f.degree
            self.relations = build_relations_recursive(f, self.n)
        n = self.n
        if cap is not None and n > cap:
            raise CapExceeded(f"n = {n} exceeds the n! size cap (cap = {cap})")
        self.size = math.factorial(n)
        self.radices = tuple(n - i + 1 for i in range(1, n + 1))
        self.basis = tuple(self._decode(k) for k in range(self.size))
        self.basis_index = {e: k for k, e in enumerate(self.basis)}
        # rewrite rule for X_i: X_i^{n-i+1} -> X_i^{n-i+1} - f_i, as a term dict
        self._rules = {}
        for i, rel in enumerate(self.relations, start=1):
            head = tuple(n - i + 1 if j == i - 1 else 0 for j in range(n))
            rule = dict(
                MPoly(base, n, {head: base.one_value}).terms
            )
            for e, c in rel.terms.items():
                cur = rule.get(e, base.zero_value)
                s = base.sub(cur, c)
                if s == base.zero_value:
                    rule.pop(e, None)
                else:
                    rule[e] = s
            assert head not in rule  # f_i is monic in X_i of degree n-i+1
            self._rules[i] = tuple(rule.items())
        self._nf_memo = {}
        self._roots = None

    def _decode(self, k):
        exps = []
        for radix in self.radices:
            exps.append(k % radix)
            k //= radix
        return tuple(exps)

    # --- normal forms ---------------------------------------------------------

    def _offending(self, alpha):
        """Largest i whose exponent is out of range, or None."""
        n = self.n
        for i in range(n, 0, -1):
            if alpha[i - 1] > n - i:
                return i
        return None

    def reduce_monomial(self, alpha):
        """Normal form of the monomial X^alpha as {in-range exponent: coeff}."""
        memo = self._nf_memo
        cached = memo.get(alpha)
        if cached is not None:
            return cached
        base = self.base
        if base.is_zero:
            memo[tuple(alpha)] = {}
            return memo[tuple(alpha)]
        one, z = base.one_value, base.zero_value
        stack = [tuple(alpha)]
        while stack:
            cur = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            i = self._offending(cur)
            if i is None:
                memo[cur] = {cur: one}
                stack.pop()
                continue
            drop = self.n - i + 1
            rest = tuple(
                a - drop if j == i - 1 else a for j, a in enumerate(cur)
            )
            children = [
                (tuple(x + y for x, y in zip(rest, e)), c)
                for e, c in self._rules[i]
            ]
            missing = [ch for ch, _ in children if ch not in memo]
            if missing:
                stack.extend(missing)
                continue
            acc = {}
            for ch, c in children:
                for gamma, c2 in memo[ch].items():
                    prod = base.mul(c, c2)
                    curv = acc.get(gamma)
                    if curv is None:
                        acc[gamma] = prod
                    else:
                        s = base.add(curv, prod)
                        if s == z:
                            del acc[gamma]
                        else:
                            acc[gamma] = s
            memo[cur] = acc
            stack.pop()
        return memo[alpha]

    def normal_form(self, m: MPoly) -> SplitElem:
        """The unique coordinate vector congruent to m modulo the relations."""
        if m.ring != self.base or m.num_vars != self.n:
            raise RingMismatch("polynomial over the wrong ring or variable count")
        base = self.base
        z = base.zero_value
        coords = [z] * self.size
        index = self.basis_index
        for alpha, c in m.terms.items():
            for gamma, c2 in self.reduce_monomial(alpha).items():
                k = index[gamma]
                coords[k] = base.add(coords[k], base.mul(c, c2))
        return SplitElem(self, tuple(coords))

    # --- elements ---------------------------------------------------------------

    @property
    def zero_elem(self):
        return SplitElem(self, (self.base.zero_value,) * self.size)

    @property
    def one_elem(self):
        return self.monomial_elem((0,) * self.n)

    def monomial_elem(self, alpha):
        base = self.base
        coords = [base.zero_value] * self.size
        for gamma, c in self.reduce_monomial(tuple(alpha)).items():
            k = self.basis_index[gamma]
            coords[k] = base.add(coords[k], c)
        return SplitElem(self, tuple(coords))

    def root(self, i):
        """r_i = the class of X_i."""
        if self._roots is None:
            self._roots = [None] * self.n
        if self._roots[i - 1] is None:
            alpha = tuple(1 if j == i - 1 else 0 for j in range(self.n))
            self._roots[i - 1] = self.monomial_elem(alpha)
        return self._roots[i - 1]

    def roots(self):
        return [self.root(i) for i in range(1, self.n + 1)]

    def gamma(self, x) -> SplitElem:
        """The structural map R -> R_f sending x to x * 1."""
        base = self.base
        xv = x.value if isinstance(x, RingElem) else base.canon(x)
        coords = [base.zero_value] * self.size
        coords[0] = xv
        return SplitElem(self, tuple(coords))

    def scalar_coeff(self, elem):
        """Coefficient on the basis element 1."""
        return RingElem(self.base, elem.coords[0])

    def __eq__(self, other):
        return (
            isinstance(other, SplitRing)
            and self.base == other.base
            and self.f.coeffs == other.f.coeffs
            and self.n == other.n
        )

    def __hash__(self):
        return hash((self.base, self.f.coeffs, self.n))

    def __repr__(self):
        return f"SplitRing(n={self.n}, base={self.base!r})"


class SplitElem:
    __slots__ = ("ring", "coords")

    def __init__(self, ring: SplitRing, coords):
        self.ring = ring
        self.coords = tuple(coords)

    def _check(self, other):
        if not isinstance(other, SplitElem) or other.ring != self.ring:
            raise RingMismatch("elements of different splitting rings")

    def __add__(self, other):
        self._check(other)
        base = self.ring.base
        return SplitElem(
            self.ring, tuple(base.add(a, b) for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other):
        self._check(other)
        base = self.ring.base
        return SplitElem(
            self.ring, tuple(base.sub(a, b) for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self):
        base = self.ring.base
        return SplitElem(self.ring, tuple(base.neg(a) for a in self.coords))

    def scale(self, c):
        """Left multiplication by a base-ring scalar."""
        base = self.ring.base
        cv = base.from_int(c) if isinstance(c, int) else base.canon(c)
        return SplitElem(self.ring, tuple(base.mul(cv, a) for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (RingElem, int)):
            return self.scale(other)
        self._check(other)
        ring = self.ring
        base = ring.base
        z = base.zero_value
        coords = [z] * ring.size
        basis = ring.basis
        index = ring.basis_index
        for i, a in enumerate(self.coords):
            if a == z:
                continue
            bi = basis[i]
            for j, b in enumerate(other.coords):
                if b == z:
                    continue
                c = base.mul(a, b)
                combined = tuple(x + y for x, y in zip(bi, basis[j]))
                for gamma, c2 in ring.reduce_monomial(combined).items():
                    k = index[gamma]
                    coords[k] = base.add(coords[k], base.mul(c, c2))
        return SplitElem(ring, tuple(coords))

    def __rmul__(self, other):
        if isinstance(other, (RingElem, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        acc = self.ring.one_elem
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def is_zero(self):
        z = self.ring.base.zero_value
        return all(c == z for c in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, SplitElem)
            and self.ring == other.ring
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash(self.coords)

    def to_json(self):
        return {
            "basis": [list(e) for e in self.ring.basis],
            "coords": [self.ring.base.render(c) for c in self.coords],
        }

    def __repr__(self):
        base = self.ring.base
        parts = []
        for e, c in zip(self.ring.basis, self.coords):
            if c == base.zero_value:
                continue
            mono = "*".join(
                f"r{i + 1}" if k == 1 else f"r{i + 1}^{k}"
                for i, k in enumerate(e)
                if k
            )
            cs = base.render(c)
            if not mono:
                term = cs
            elif cs == "1":
                term = mono
            elif cs == "-1":
                term = f"-{mono}"
            else:
                term = f"{cs}*{mono}"
            parts.append(term)
        if not parts:
            return "0"
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


def new_split_ring(base: Ring, f: Poly, cap: int = DEFAULT_CAP) -> SplitRing:
    return SplitRing(base, f, cap=cap)


def normal_form(ring: SplitRing, m: MPoly) -> SplitElem:
    return ring.normal_form(m)


def universal_factorization_check(ring: SplitRing) -> bool:
    """Expand (Z - r_1)...(Z - r_n) in ring[Z] and compare with f."""
    if ring.base.is_zero:
        return True
    coeffs = [ring.one_elem]  # polynomial with SplitElem coefficients, low first
    for i in range(1, ring.n + 1):
        ri = ring.root(i)
        shifted = [ring.zero_elem] + coeffs
        scaled = [c * ri for c in coeffs] + [ring.zero_elem]
        coeffs = [a - b for a, b in zip(shifted, scaled)]
    expected = [ring.gamma(c) for c in ring.f.coeffs]
    return coeffs == expected


def regular_representation(ring: SplitRing, x: SplitElem) -> SqMatrix:
    """The n! x n! matrix of left multiplication by x; column k holds the
    coordinates of x * (basis element k)."""
    base = ring.base
    z = base.zero_value
    size = ring.size
    cols = []
    basis = ring.basis
    index = ring.basis_index
    for k in range(size):
        col = [z] * size
        bk = basis[k]
        for i, a in enumerate(x.coords):
            if a == z:
                continue
            combined = tuple(p + q for p, q in zip(basis[i], bk))
            for gamma, c2 in ring.reduce_monomial(combined).items():
                j = index[gamma]
                col[j] = base.add(col[j], base.mul(a, c2))
        cols.append(col)
    rows = [[cols[c][r] for c in range(size)] for r in range(size)]
    return SqMatrix(base, rows)


def gamma_injectivity_check(ring: SplitRing, samples=None) -> bool:
    """x -> x*1 must not kill nonzero scalars: exhaustive over a finite base,
    sampled otherwise."""
    base = ring.base
    if base.is_zero:
        return True
    if base.is_finite:
        candidates = base.elements()
    else:
        if samples is None:
            samples = [1, -1, 2]
        candidates = [
            s.value if isinstance(s, RingElem) else base.canon(s) for s in samples
        ]
    for x in candidates:
        if x == base.zero_value:
            continue
        if ring.gamma(x).is_zero():
            return False
    return True
