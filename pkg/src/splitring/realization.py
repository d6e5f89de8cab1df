"""Companion matrices and the recursive n! x n! realization A_1..A_n.

For monic f = Z^n + b_{n-1}Z^{n-1} + ... + b_0 with central coefficients the
construction produces commuting matrices A_1..A_n over the base ring whose
elementary symmetric combinations reproduce the coefficients of f, and whose
generated ring is the universal splitting ring.  The recursion runs over an
actual quotient-ring tower: S = base[Z]/(f) with root rho, then

    g(Z) = Z^{n-1} + f^{[n-2]}(rho) Z^{n-2} + ... + f^{[0]}(rho)

is realized over S by the recursive call, and every S-entry p(rho) of the
resulting matrices is blown up to the n x n block p(C_f).  Blocks are
evaluated column-by-column via the closed form

    g(C_f) = ( [g]  [Z g]  ...  [Z^{n-1} g] )

where [h] is the coordinate column of h mod f.  The banded shapes of the
f^{[j]}(C_f) blocks are also constructed directly from their description and
checked against the column closed form, so the sign/index bookkeeping is a
verified property rather than a trusted construction step.

f^{[j]} is the iterated "drop the constant term and divide by Z" transform;
for monic f of degree n it equals Z^{n-1-j} + b_{n-1}Z^{n-2-j} + ... + b_{j+1},
with f^{[n-1]} = 1 and f^{[j]} = 0 for j >= n.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from .errors import CapExceeded, LengthMismatch, NonCentralCoefficients, NonMonic
from .matrices import (
    SqMatrix,
    det,
    poly_at_matrix,
    rank,
    rank_profile_mod,
)
from .rings import (
    IntegerRing,
    ModularRing,
    Poly,
    PolyCoefRing,
    QuotientRing,
    RationalRing,
    Ring,
    RingElem,
    quotient_ring,
)
from .splitting import DEFAULT_CAP, SplitRing, regular_representation

CHECK_NAMES = (
    "commutation",
    "centrality",
    "sigma_identities",
    "factorization",
    "independence_rank",
    "entry_pattern",
    "regular_rep_agreement",
)


def companion(f: Poly) -> SqMatrix:
    """The companion matrix: subdiagonal ones, last column -b_0..-b_{n-1}."""
    if not f.is_monic() or f.degree < 1:
        raise NonMonic("companion matrix requires a monic polynomial of degree >= 1")
    ring, n = f.ring, f.degree
    z, o = ring.zero_value, ring.one_value
    rows = []
    for i in range(n):
        row = [z] * n
        if i > 0:
            row[i - 1] = o
        row[n - 1] = ring.neg(f.coeffs[i])
        rows.append(row)
    return SqMatrix(ring, rows)


def a_to_b(a_coeffs, ring: Ring | None = None):
    """Convert a_1..a_n (f = Z^n - a_1 Z^{n-1} + ... + (-1)^n a_n) to b_0..b_{n-1}."""
    n = len(a_coeffs)
    vals = [
        c.value if isinstance(c, RingElem) else c for c in a_coeffs
    ]
    if ring is None:
        ring = a_coeffs[0].ring if isinstance(a_coeffs[0], RingElem) else IntegerRing()
    out = [None] * n
    for j in range(1, n + 1):
        v = ring.canon(vals[j - 1])
        out[n - j] = v if j % 2 == 0 else ring.neg(v)
    return out


def b_to_a(b_coeffs, ring: Ring | None = None):
    """Inverse of a_to_b (the conversion is an involution up to reindexing)."""
    n = len(b_coeffs)
    vals = [c.value if isinstance(c, RingElem) else c for c in b_coeffs]
    if ring is None:
        ring = b_coeffs[0].ring if isinstance(b_coeffs[0], RingElem) else IntegerRing()
    out = [None] * n
    for j in range(1, n + 1):
        v = ring.canon(vals[n - j])
        out[j - 1] = v if j % 2 == 0 else ring.neg(v)
    return out


def ab_convert(coeffs, direction: str, ring: Ring | None = None):
    """Sign bookkeeping between the two coefficient conventions.

    direction 'a->b' maps a_1..a_n to b_0..b_{n-1}; 'b->a' the reverse.
    """
    if direction == "a->b":
        return a_to_b(coeffs, ring)
    if direction == "b->a":
        return b_to_a(coeffs, ring)
    raise ValueError("direction must be 'a->b' or 'b->a'")


def poly_from_b(ring: Ring, b_coeffs) -> Poly:
    """Monic polynomial with low coefficients b_0..b_{n-1}."""
    return Poly(ring, list(b_coeffs) + [ring.one_value])


def poly_from_a(ring: Ring, a_coeffs) -> Poly:
    return poly_from_b(ring, a_to_b([ring.canon(c) for c in a_coeffs], ring))


def check_length(coeffs, n):
    if len(coeffs) != n:
        raise LengthMismatch(f"expected {n} coefficients, got {len(coeffs)}")


def derived_poly(g: Poly, j: int) -> Poly:
    """The j-th iterate of g -> (g - g(0))/Z; zero once j reaches deg g."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    return g.derived(j)


def eval_at_companion(g: Poly, f: Poly) -> SqMatrix:
    """g(C_f), assembled column-by-column as [Z^k g mod f] for k = 0..n-1.

    This is the closed form; it must (and is tested to) agree with Horner
    evaluation of g at the companion matrix.
    """
    if not f.is_monic() or f.degree < 1:
        raise NonMonic("f must be monic of degree >= 1")
    if g.ring != f.ring:
        raise ValueError("g and f must share a coefficient ring")
    ring, n = f.ring, f.degree
    z = ring.zero_value
    _, h = g.divmod_monic(f)
    col = list(h.coeffs) + [z] * (n - len(h.coeffs))
    cols = [col]
    for _ in range(n - 1):
        nxt = [z] + col[: n - 1]
        lead = col[n - 1]
        if lead != z:
            for idx in range(n):
                nxt[idx] = ring.sub(nxt[idx], ring.mul(lead, f.coeffs[idx]))
        cols.append(nxt)
        col = nxt
    rows = [[cols[c][r] for c in range(n)] for r in range(n)]
    return SqMatrix(ring, rows)


def derived_at_companion_pattern(f: Poly, j: int) -> SqMatrix:
    """The banded shape of f^{[j]}(C_f), built directly from its description.

    Column k <= j carries the shifted tail b_{j+1}, ..., b_{n-1}, 1 starting
    at row k; column k > j carries the band -b_0, ..., -b_j starting at row
    k-j-1.  j = n-1 gives the identity and j >= n the zero matrix.
    """
    if not f.is_monic() or f.degree < 1:
        raise NonMonic("f must be monic of degree >= 1")
    ring, n = f.ring, f.degree
    z, o = ring.zero_value, ring.one_value
    if j >= n:
        return SqMatrix.zero(ring, n)
    rows = [[z] * n for _ in range(n)]
    b = f.coeffs
    for k in range(n):
        if k <= j:
            for t in range(n - 1 - j):
                rows[k + t][k] = b[j + 1 + t]
            rows[k + n - 1 - j][k] = o
        else:
            for t in range(j + 1):
                rows[k - j - 1 + t][k] = ring.neg(b[t])
    return SqMatrix(ring, rows)


# ---------------------------------------------------------------------------
# the recursive construction
# ---------------------------------------------------------------------------


def reduced_quotient_poly(f: Poly, tower: QuotientRing) -> Poly:
    """g(Z) = Z^{n-1} + f^{[n-2]}(rho) Z^{n-2} + ... + f^{[0]}(rho) over S,
    the minimal polynomial of the remaining roots once rho is split off."""
    n = f.degree
    rho = tower.root
    coeffs = []
    for j in range(n - 1):
        fj = derived_poly(f, j)
        lifted = Poly(tower, [RingElem(f.ring, c) for c in fj.coeffs])
        coeffs.append(lifted.eval(rho).value)
    coeffs.append(tower.one_value)
    return Poly(tower, coeffs)


def build_realization(f: Poly, cap: int = DEFAULT_CAP):
    """The matrices A_1..A_n in M_{n!}(base) for monic f of degree n.

    A_1 is the direct sum of (n-1)! companion blocks; A_2..A_n come from the
    realization of the reduced polynomial g over S = base[Z]/(f), with every
    S-entry p(rho) replaced by the n x n block p(C_f).
    """
    ring, n = f.ring, f.degree
    if not f.is_monic() or n < 1:
        raise NonMonic("f must be monic of degree >= 1")
    for c in f.coeffs:
        if not ring.is_central(c):
            raise NonCentralCoefficients(
                "coefficients of f must be central; apply central_quotient first"
            )
    if cap is not None and n > cap:
        raise CapExceeded(f"n = {n} exceeds the n! size cap (cap = {cap})")
    if n == 1:
        return [SqMatrix(ring, [[ring.neg(f.coeffs[0])]])]
    tower = quotient_ring(ring, f)
    g = reduced_quotient_poly(f, tower)
    inner = build_realization(g, cap=None)  # cap applies to the outer degree only
    cf = companion(f)
    a1 = SqMatrix.direct_sum([cf] * math.factorial(n - 1))
    out = [a1]
    for m in inner:
        blocks = [
            [eval_at_companion(tower.lift(m.rows[u][v]), f) for v in range(m.size)]
            for u in range(m.size)
        ]
        out.append(SqMatrix.from_blocks(blocks))
    return out


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass
class RealizationReport:
    n: int
    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in CHECK_NAMES:
            self.checks.setdefault(name, None)

    @property
    def ok(self):
        return all(v is not False for v in self.checks.values())

    def to_json(self):
        return {"n": self.n, "checks": dict(self.checks), "details": dict(self.details)}


def _basis_exponents(n):
    radices = [n - i + 1 for i in range(1, n + 1)]
    out = []
    for k in range(math.factorial(n)):
        exps, t = [], k
        for radix in radices:
            exps.append(t % radix)
            t //= radix
        out.append(tuple(exps))
    return out


def monomial_matrices(mats):
    """All products A^alpha with 0 <= alpha_i <= n-i, in basis order."""
    n = len(mats)
    exps = _basis_exponents(n)
    index = {e: k for k, e in enumerate(exps)}
    out = [SqMatrix.identity(mats[0].ring, mats[0].size)]
    for e in exps[1:]:
        i = next(j for j, v in enumerate(e) if v)
        prev = tuple(v - 1 if j == i else v for j, v in enumerate(e))
        out.append(out[index[prev]] * mats[i])
    return out


def sigma_of_matrices(mats):
    """Elementary symmetric polynomials of commuting matrices, by the
    one-at-a-time recurrence (independent of the product expansion)."""
    ring, size = mats[0].ring, mats[0].size
    n = len(mats)
    e = [SqMatrix.identity(ring, size)] + [SqMatrix.zero(ring, size)] * n
    for m in mats:
        for i in range(n, 0, -1):
            e[i] = e[i] + e[i - 1] * m
    return e[1:]


def product_poly(mats, f: Poly):
    """Coefficients of (Z - A_1)...(Z - A_n), low degree first."""
    ring, size = mats[0].ring, mats[0].size
    coeffs = [SqMatrix.identity(ring, size)]
    for m in mats:
        shifted = [SqMatrix.zero(ring, size)] + coeffs
        scaled = [c * m for c in coeffs] + [SqMatrix.zero(ring, size)]
        coeffs = [a - b for a, b in zip(shifted, scaled)]
    return coeffs


def verify_realization(
    f: Poly,
    mats,
    checks=None,
    seed: int = 0,
    split_ring: SplitRing | None = None,
) -> RealizationReport:
    """Run the named verification checks on candidate matrices A_1..A_n.

    `checks` limits the run (None = all).  Failures land in the report, not
    in exceptions.
    """
    ring, n = f.ring, f.degree
    selected = set(CHECK_NAMES if checks is None else checks)
    report = RealizationReport(n=n)

    if "commutation" in selected:
        ok = True
        for i in range(n):
            for j in range(i + 1, n):
                if not mats[i].commutes_with(mats[j]):
                    ok = False
                    report.details["commutation"] = f"A_{i + 1} and A_{j + 1} do not commute"
                    break
            if not ok:
                break
        report.checks["commutation"] = ok

    if "centrality" in selected:
        ok = all(ring.is_central(e) for m in mats for row in m.rows for e in row)
        report.checks["centrality"] = ok
        if not ok:
            report.details["centrality"] = "some entry is not central in the base ring"

    if "sigma_identities" in selected:
        from .multipoly import alternating_coeffs

        a = alternating_coeffs(f)
        sig = sigma_of_matrices(mats)
        ok = all(
            sig[i] == SqMatrix.scalar(ring, mats[0].size, a[i]) for i in range(n)
        )
        report.checks["sigma_identities"] = ok
        if not ok:
            bad = next(
                i + 1
                for i in range(n)
                if sig[i] != SqMatrix.scalar(ring, mats[0].size, a[i])
            )
            report.details["sigma_identities"] = f"sigma_{bad}(A) != a_{bad} * I"

    if "factorization" in selected:
        coeffs = product_poly(mats, f)
        expect = [SqMatrix.scalar(ring, mats[0].size, c) for c in f.coeffs]
        ok = len(coeffs) == len(expect) and all(
            a == b for a, b in zip(coeffs, expect)
        )
        report.checks["factorization"] = ok
        if not ok:
            report.details["factorization"] = "(Z - A_1)...(Z - A_n) != f(Z) * I"

    if "independence_rank" in selected:
        report.checks["independence_rank"] = _independence_rank(mats, ring, report)

    if "entry_pattern" in selected:
        allowed = {ring.one_value, ring.neg(ring.one_value)}
        for b in f.coeffs[:-1]:
            allowed.add(b)
            allowed.add(ring.neg(b))
        z = ring.zero_value
        bad = next(
            (
                (i, r, c)
                for i, m in enumerate(mats)
                for r, row in enumerate(m.rows)
                for c, e in enumerate(row)
                if e != z and e not in allowed
            ),
            None,
        )
        report.checks["entry_pattern"] = bad is None
        if bad is not None:
            i, r, c = bad
            report.details["entry_pattern"] = (
                f"entry ({r},{c}) of A_{i + 1} is not a coefficient of f up to sign"
            )

    if "regular_rep_agreement" in selected:
        sr = split_ring or SplitRing(ring, f, cap=None)
        ok = all(
            regular_representation(sr, sr.root(i + 1)) == mats[i] for i in range(n)
        )
        report.checks["regular_rep_agreement"] = ok
        if not ok:
            report.details["regular_rep_agreement"] = (
                "A_i differs from the regular representation of r_i"
            )

    return report


def _independence_rank(mats, ring, report):
    size = mats[0].size
    target = math.factorial(len(mats))
    rows = [m.flatten() for m in monomial_matrices(mats)]
    if isinstance(ring, (IntegerRing, RationalRing, PolyCoefRing)):
        got = rank(rows, ring)
        report.details["independence_rank"] = f"rank {got} of {target}"
        return got == target
    if isinstance(ring, ModularRing):
        if ring.is_field():
            got = rank(rows, ring)
            report.details["independence_rank"] = f"rank {got} of {target}"
            return got == target
        profile = rank_profile_mod([[int(e) for e in r] for r in rows], ring.modulus)
        report.details["independence_rank"] = (
            "rank per prime divisor: "
            + ", ".join(f"p={p}: {r}" for p, r in sorted(profile.items()))
        )
        return all(r == target for r in profile.values())
    if ring.is_finite:
        # tiny table rings: exhaustive scalar combinations
        if ring.order() ** target <= 4096:
            z = [ring.zero_value] * (size * size)
            for combo in itertools.product(list(ring.elements()), repeat=target):
                if all(c == ring.zero_value for c in combo):
                    continue
                acc = list(z)
                for c, row in zip(combo, rows):
                    for idx, e in enumerate(row):
                        acc[idx] = ring.add(acc[idx], ring.mul(c, e))
                if all(v == ring.zero_value for v in acc):
                    report.details["independence_rank"] = "nontrivial relation found"
                    return False
            report.details["independence_rank"] = "exhaustive: no nontrivial relation"
            return True
    report.details["independence_rank"] = "no rank routine for this base ring"
    return None


def krylov_min_poly_degree(ring: SplitRing, x) -> int:
    """Degree of the minimal polynomial of x over the base, as the rank of
    the stacked coordinate vectors of 1, x, x^2, ..."""
    rows = []
    acc = ring.one_elem
    for _ in range(ring.size + 1):
        rows.append(list(acc.coords))
        acc = acc * x
    return rank(rows, ring.base)


def random_poly(ring: Ring, degree: int, rng: random.Random, span: int = 9) -> Poly:
    """Random polynomial of exactly the given degree (leading coeff 1)."""
    coeffs = [ring.from_int(rng.randint(-span, span)) for _ in range(degree)]
    coeffs.append(ring.one_value)
    return Poly(ring, coeffs)
