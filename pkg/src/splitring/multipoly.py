"""Sparse multivariate polynomials and the triangular generators f_1..f_n.

MPoly stores a map from dense exponent vectors (length = num_vars) to
nonzero coefficients in a base ring.  Variables commute with each other and
with coefficients; coefficient multiplication follows the base ring, so the
arithmetic agrees with the commutative polynomial ring whenever the
coefficients are central.

The generator polynomials of a monic f of degree n are produced two ways:

  * recursively, as iterated divided differences
        f_1(X_1) = f(X_1),   f_{i+1} = (f_i with X_i -> X_{i+1}  minus  f_i)
                                        divided exactly by (X_{i+1} - X_i);
  * in closed form, as the alternating sum
        f_i = sum_k (-1)^k a_k S_i^{n-i+1-k}    (a_0 = 1),

and the two must agree term for term.  Here S_j^i is the sum of all degree-i
monomials in the first j variables, and a_k are the coefficients of f in the
alternating-sign convention f = Z^n - a_1 Z^{n-1} + ... + (-1)^n a_n.
"""

from __future__ import annotations

import itertools

from .errors import (
    IndexOutOfRange,
    InexactDivision,
    NonMonic,
    RingMismatch,
)
from .rings import Poly, Ring, RingElem


class MPoly:
    __slots__ = ("ring", "num_vars", "terms")

    def __init__(self, ring: Ring, num_vars: int, terms=None):
        self.ring = ring
        self.num_vars = num_vars
        clean = {}
        if terms:
            z = ring.zero_value
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                e = tuple(e)
                if len(e) != num_vars:
                    raise ValueError("exponent vector has the wrong length")
                cv = ring.canon(c)
                if cv != z:
                    cur = clean.get(e)
                    if cur is None:
                        clean[e] = cv
                    else:
                        s = ring.add(cur, cv)
                        if s == z:
                            del clean[e]
                        else:
                            clean[e] = s
        self.terms = clean

    # --- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring, n):
        return cls(ring, n)

    @classmethod
    def constant(cls, ring, n, c):
        return cls(ring, n, {(0,) * n: c})

    @classmethod
    def variable(cls, ring, n, i):
        """X_i (1-based) in n variables."""
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"variable index {i} not in 1..{n}")
        e = tuple(1 if j == i - 1 else 0 for j in range(n))
        return cls(ring, n, {e: ring.one_value})

    @classmethod
    def from_univariate(cls, f: Poly, n: int, i: int = 1):
        """Embed a univariate polynomial as a polynomial in X_i."""
        terms = {}
        for k, c in enumerate(f.coeffs):
            e = tuple(k if j == i - 1 else 0 for j in range(n))
            terms[e] = c
        return cls(f.ring, n, terms)

    # --- arithmetic -----------------------------------------------------------

    def _check(self, other):
        if (
            not isinstance(other, MPoly)
            or other.ring != self.ring
            or other.num_vars != self.num_vars
        ):
            raise RingMismatch("polynomials over different rings or variable counts")

    def __add__(self, other):
        self._check(other)
        ring, z = self.ring, self.ring.zero_value
        d = dict(self.terms)
        for e, c in other.terms.items():
            cur = d.get(e)
            if cur is None:
                d[e] = c
            else:
                s = ring.add(cur, c)
                if s == z:
                    del d[e]
                else:
                    d[e] = s
        return self._raw(d)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        ring = self.ring
        return self._raw({e: ring.neg(c) for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (RingElem, int)):
            return self.scale(other)
        self._check(other)
        ring, z = self.ring, self.ring.zero_value
        d = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                p = ring.mul(c1, c2)
                cur = d.get(e)
                if cur is None:
                    d[e] = p
                else:
                    d[e] = ring.add(cur, p)
        return self._raw({e: c for e, c in d.items() if c != z})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        acc = MPoly.constant(self.ring, self.num_vars, self.ring.one_value)
        for _ in range(n):
            acc = acc * self
        return acc

    def scale(self, c):
        ring, z = self.ring, self.ring.zero_value
        cv = ring.from_int(c) if isinstance(c, int) else ring.canon(c)
        if cv == z:
            return MPoly(ring, self.num_vars)
        return self._raw(
            {
                e: v
                for e, v in ((e, ring.mul(cv, x)) for e, x in self.terms.items())
                if v != z
            }
        )

    def _raw(self, terms):
        p = MPoly.__new__(MPoly)
        p.ring = self.ring
        p.num_vars = self.num_vars
        p.terms = terms
        return p

    def __eq__(self, other):
        return (
            isinstance(other, MPoly)
            and self.ring == other.ring
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.num_vars, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def coeff(self, exponents):
        return RingElem(
            self.ring, self.terms.get(tuple(exponents), self.ring.zero_value)
        )

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, i):
        return max((e[i - 1] for e in self.terms), default=0)

    def variables_used(self):
        used = set()
        for e in self.terms:
            used.update(j + 1 for j, k in enumerate(e) if k)
        return used

    def swap_vars(self, i, j):
        """Exchange X_i and X_j (1-based)."""
        i -= 1
        j -= 1
        d = {}
        for e, c in self.terms.items():
            le = list(e)
            le[i], le[j] = le[j], le[i]
            d[tuple(le)] = c
        return self._raw(d)

    # --- rendering and JSON -----------------------------------------------------

    def render(self):
        """Paper-style text: terms grouped by coefficient, e.g.
        'X1^2 + X1*X2 - a1*(X1 + X2) + a2'."""
        if not self.terms:
            return "0"
        groups = {}
        for e, c in sorted(self.terms.items(), reverse=True):
            groups.setdefault(c, []).append(e)
        ordered = sorted(
            groups.items(),
            key=lambda item: (max(sum(e) for e in item[1]), max(item[1])),
            reverse=True,
        )
        parts = []
        for c, exps in ordered:
            monos = [self._mono(e) for e in exps]
            cs = self.ring.render(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            body = " + ".join(m for m in monos if m) or ""
            if not body:  # constant group
                term = cs
            elif cs == "1":
                term = body if len(monos) == 1 else " + ".join(monos)
            elif _is_atomic(cs):
                term = f"{cs}*({body})" if len(monos) > 1 else f"{cs}*{monos[0]}"
            else:
                term = f"({cs})*({body})"
            parts.append(("-" if neg else "+", term))
        sign, term = parts[0]
        out = term if sign == "+" else f"-{term}"
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    @staticmethod
    def _mono(e):
        return "*".join(
            f"X{i + 1}" if k == 1 else f"X{i + 1}^{k}" for i, k in enumerate(e) if k
        )

    def to_json(self):
        return [
            {"exponents": list(e), "coeff": self.ring.render(c)}
            for e, c in sorted(self.terms.items(), reverse=True)
        ]

    def __repr__(self):
        return self.render()


def _is_atomic(s):
    return all(ch.isalnum() or ch in "_/." for ch in s)


# ---------------------------------------------------------------------------
# symmetric building blocks
# ---------------------------------------------------------------------------


def elementary_symmetric(n: int, i: int, ring: Ring) -> MPoly:
    """sigma_i in n variables: the sum of all products of i distinct variables."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"sigma index {i} not in 1..{n}")
    one = ring.one_value
    terms = {}
    for combo in itertools.combinations(range(n), i):
        e = [0] * n
        for j in combo:
            e[j] = 1
        terms[tuple(e)] = one
    return MPoly(ring, n, terms)


def complete_homogeneous_prefix(n: int, j: int, i: int, ring: Ring) -> MPoly:
    """S_j^i: the sum of all monomials of total degree i in X_1..X_j,
    embedded in n variables.  S_j^0 = 1."""
    if not 1 <= j <= n:
        raise IndexOutOfRange(f"prefix length {j} not in 1..{n}")
    if i < 0:
        raise IndexOutOfRange("degree must be nonnegative")
    one = ring.one_value
    terms = {}
    for exps in _compositions(i, j):
        terms[tuple(exps) + (0,) * (n - j)] = one
    return MPoly(ring, n, terms)


def _compositions(total, parts):
    """All ways to write `total` as an ordered sum of `parts` nonnegative ints."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def delta(p: MPoly, i: int, j: int) -> MPoly:
    """Divided difference: (p with X_i,X_j swapped, minus p) / (X_j - X_i).

    The numerator is antisymmetric in X_i, X_j, so the division is exact;
    a nonzero remainder indicates a bug and raises InexactDivision.
    """
    n = p.num_vars
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"need distinct indices in 1..{n}, got ({i}, {j})")
    numerator = p.swap_vars(i, j) - p
    return _exact_div_linear(numerator, i, j)


def _exact_div_linear(q: MPoly, i: int, j: int) -> MPoly:
    """Exact quotient of q by (X_j - X_i), by synthetic division in X_j."""
    ring, n = q.ring, q.num_vars
    if q.is_zero():
        return q
    ji = j - 1
    ii = i - 1
    # coefficients of q as a polynomial in X_j (exponent of X_j zeroed out)
    by_deg = {}
    for e, c in q.terms.items():
        k = e[ji]
        stripped = e[:ji] + (0,) + e[ji + 1 :]
        by_deg.setdefault(k, {})[stripped] = c
    d = max(by_deg)
    z = ring.zero_value
    quotient = {}
    carry = {}  # running quotient coefficient, as a term dict
    for k in range(d, 0, -1):
        level = by_deg.get(k, {})
        new_carry = dict(level)
        # add X_i * carry
        for e, c in carry.items():
            e2 = e[:ii] + (e[ii] + 1,) + e[ii + 1 :]
            cur = new_carry.get(e2)
            if cur is None:
                new_carry[e2] = c
            else:
                s = ring.add(cur, c)
                if s == z:
                    del new_carry[e2]
                else:
                    new_carry[e2] = s
        carry = new_carry
        for e, c in carry.items():
            quotient[e[:ji] + (k - 1,) + e[ji + 1 :]] = c
    # remainder = q_0 + X_i * carry must vanish
    rem = dict(by_deg.get(0, {}))
    for e, c in carry.items():
        e2 = e[:ii] + (e[ii] + 1,) + e[ii + 1 :]
        cur = rem.get(e2, z)
        s = ring.add(cur, c)
        if s == z:
            rem.pop(e2, None)
        else:
            rem[e2] = s
    if rem:
        raise InexactDivision("division by (X_j - X_i) left a remainder")
    return MPoly(ring, n, quotient)


# ---------------------------------------------------------------------------
# the generator polynomials of f
# ---------------------------------------------------------------------------


def alternating_coeffs(f: Poly):
    """Coefficients a_1..a_n with f = Z^n - a_1 Z^{n-1} + ... + (-1)^n a_n."""
    ring, n = f.ring, f.degree
    out = []
    for k in range(1, n + 1):
        b = f.coeffs[n - k]  # coefficient of Z^{n-k}
        out.append(b if k % 2 == 0 else ring.neg(b))
    return out


def _require_monic(f: Poly):
    if not f.is_monic() or f.degree < 1:
        raise NonMonic("f must be monic of degree >= 1")


def build_relations_recursive(f: Poly, n: int | None = None):
    """[f_1..f_n] by iterated divided differences."""
    _require_monic(f)
    if n is None:
        n = f.degree
    if n != f.degree:
        raise ValueError("n must equal deg f")
    rels = [MPoly.from_univariate(f, n, 1)]
    for i in range(1, n):
        rels.append(delta(rels[-1], i, i + 1))
    return rels


def build_relations_closed(f: Poly, n: int | None = None):
    """[f_1..f_n] from the closed alternating-sum formula."""
    _require_monic(f)
    if n is None:
        n = f.degree
    if n != f.degree:
        raise ValueError("n must equal deg f")
    ring = f.ring
    a = [ring.one_value] + alternating_coeffs(f)  # a[0] = 1
    rels = []
    for i in range(1, n + 1):
        total = MPoly.zero(ring, n)
        for k in range(0, n - i + 2):
            s = complete_homogeneous_prefix(n, i, n - i + 1 - k, ring)
            term = s.scale(RingElem(ring, a[k]))
            total = total + term if k % 2 == 0 else total - term
        rels.append(total)
    return rels


def verify_magia2(f: Poly, n: int | None = None):
    """Check f_i = sum_k (-1)^{k-1} (sigma_k - a_k) S_i^{n-i+1-k} for all i.

    Returns (ok, witness); witness is None on success, otherwise the first
    failing index i together with the difference polynomial.
    """
    _require_monic(f)
    if n is None:
        n = f.degree
    ring = f.ring
    a = alternating_coeffs(f)
    reference = build_relations_recursive(f, n)
    for i in range(1, n + 1):
        rhs = MPoly.zero(ring, n)
        for k in range(1, n - i + 2):
            factor = elementary_symmetric(n, k, ring) - MPoly.constant(
                ring, n, a[k - 1]
            )
            term = factor * complete_homogeneous_prefix(n, i, n - i + 1 - k, ring)
            rhs = rhs + term if k % 2 == 1 else rhs - term
        diff = rhs - reference[i - 1]
        if not diff.is_zero():
            return False, (i, diff)
    return True, None


def symmetrize_check(p: MPoly, k: int) -> bool:
    """True iff p, supported on X_1..X_k, is fixed by all adjacent swaps."""
    if any(v > k for v in p.variables_used()):
        raise IndexOutOfRange(f"p uses variables beyond X_{k}")
    return all(p.swap_vars(j, j + 1) == p for j in range(1, k))
