import random

import pytest

from splitring import (
    INTEGERS,
    RATIONALS,
    FiniteTableRing,
    MatrixRing,
    ModularRing,
    NonMonic,
    NotAUnit,
    ParseError,
    Poly,
    PolyCoefRing,
    QuotientRing,
    RingElem,
    RingMismatch,
    as_table_ring,
    parse_ring,
    poly_eval,
    poly_from_ints,
    quotient_ring,
)


def test_modular_mul():
    R = ModularRing(12)
    assert (R.elem(7) * R.elem(5)).value == 11


def test_rational_add():
    Q = RATIONALS
    total = Q.elem(Q.parse("2/3")) + Q.elem(Q.parse("1/6"))
    assert repr(total) == "5/6"


def test_matrix_mul_mod2():
    M = MatrixRing(2, ModularRing(2))
    a = M.elem([[1, 1], [0, 1]])
    b = M.elem([[1, 0], [1, 1]])
    assert (a * b).value == ((0, 1), (1, 1))


def test_matrix_ring_noncommutative():
    M = MatrixRing(2, ModularRing(2))
    a = M.matrix_unit(1, 2)
    b = M.matrix_unit(2, 1)
    assert a * b != b * a


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        ModularRing(5).elem(1) + ModularRing(7).elem(1)


def test_invert():
    R = ModularRing(12)
    assert R.elem(5).invert().value == 5  # 5*5 = 25 = 1 mod 12
    with pytest.raises(NotAUnit):
        R.elem(4).invert()
    with pytest.raises(NotAUnit):
        INTEGERS.elem(3).invert()
    assert repr(RATIONALS.elem(RATIONALS.parse("-3/4")).invert()) == "-4/3"


def test_poly_eval_examples():
    p = poly_from_ints(INTEGERS, [2, -3, 1])  # Z^2 - 3Z + 2
    assert poly_eval(p, INTEGERS.elem(1)).value == 0
    R5 = ModularRing(5)
    cube = poly_from_ints(R5, [0, 0, 0, 1])
    assert poly_eval(cube, R5.elem(2)).value == 3
    P = PolyCoefRing(INTEGERS, 2, names=("b0", "b1"))
    b0, b1 = P.generators()
    q = Poly(P, [b1, P.one_value])  # Z + b1
    assert poly_eval(q, b0) == b0 + b1


def test_poly_divmod_monic():
    p = poly_from_ints(INTEGERS, [1, 2, 3, 4, 5])
    d = poly_from_ints(INTEGERS, [2, -3, 1])
    q, r = p.divmod_monic(d)
    assert q * d + r == p
    assert r.degree < d.degree


# --- quotient rings ---------------------------------------------------------


def _naive_divmod(coeffs, mod_coeffs):
    """Independent long-division oracle over Z, low-degree-first lists."""
    rem = list(coeffs)
    d = len(mod_coeffs) - 1
    while len(rem) > d:
        lead = rem.pop()
        if lead:
            for j in range(d):
                rem[len(rem) - d + j] -= lead * mod_coeffs[j]
    rem += [0] * (d - len(rem))
    return rem


def test_quotient_root_square():
    m = poly_from_ints(INTEGERS, [2, -3, 1])  # Z^2 - 3Z + 2
    S = quotient_ring(INTEGERS, m)
    expected = _naive_divmod([0, 0, 1], [2, -3, 1])  # Z^2 mod m
    assert (S.root * S.root).value == tuple(expected)
    assert (S.root * S.root).value == (-2, 3)  # 3*root - 2


def test_quotient_degree_one():
    m = poly_from_ints(INTEGERS, [-5, 1])  # Z - 5
    S = quotient_ring(INTEGERS, m)
    assert S.root.value == (5,)


def test_quotient_mod7():
    R7 = ModularRing(7)
    m = poly_from_ints(R7, [1, 0, 1])  # Z^2 + 1
    S = quotient_ring(R7, m)
    assert (S.root * S.root).value == (6, 0)  # -1 mod 7


def test_quotient_requires_monic():
    with pytest.raises(NonMonic):
        quotient_ring(INTEGERS, poly_from_ints(INTEGERS, [1, 2]))


def test_root_satisfies_modulus():
    rng = random.Random(1)
    for base in (INTEGERS, RATIONALS, ModularRing(9)):
        coeffs = [base.from_int(rng.randint(-4, 4)) for _ in range(3)] + [base.one_value]
        m = Poly(base, coeffs)
        S = quotient_ring(base, m)
        lifted = Poly(S, [RingElem(base, c) for c in m.coeffs])
        assert lifted.eval(S.root).value == S.zero_value
    # depth-2 tower
    m1 = poly_from_ints(INTEGERS, [1, 1, 1])
    S1 = quotient_ring(INTEGERS, m1)
    m2 = Poly(S1, [S1.root.value, S1.one_value])
    S2 = quotient_ring(S1, m2)
    lifted = Poly(S2, [RingElem(S1, c) for c in m2.coeffs])
    assert lifted.eval(S2.root).value == S2.zero_value


# --- canonical forms and axioms ----------------------------------------------


def _sample(ring, rng):
    if ring.is_finite:
        elems = list(ring.elements())
        return elems[rng.randrange(len(elems))]
    return ring.from_int(rng.randint(-20, 20))


@pytest.mark.parametrize(
    "ring",
    [
        INTEGERS,
        RATIONALS,
        ModularRing(12),
        MatrixRing(2, ModularRing(3)),
        QuotientRing(INTEGERS, poly_from_ints(INTEGERS, [2, -3, 1])),
        PolyCoefRing(INTEGERS, 2),
    ],
    ids=lambda r: r.spec_string(),
)
def test_canonical_idempotence_and_axioms(ring):
    rng = random.Random(7)
    for _ in range(25):
        a, b, c = (_sample(ring, rng) for _ in range(3))
        assert ring.canon(a) == a  # values from the ring are already canonical
        assert ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c))
        assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
        assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
        assert ring.mul(ring.add(a, b), c) == ring.add(ring.mul(a, c), ring.mul(b, c))
        assert ring.mul(a, ring.one_value) == a
        assert ring.mul(ring.one_value, a) == a
        assert ring.add(a, ring.neg(a)) == ring.zero_value


def test_table_ring_axioms_exhaustive():
    # order <= 16: exhaustive verification happens inside the constructor
    table = as_table_ring(ModularRing(6), verify=True)
    assert table.order() == 6
    assert table.is_commutative
    for a in table.elements():
        for b in table.elements():
            for c in table.elements():
                assert table.mul(table.mul(a, b), c) == table.mul(a, table.mul(b, c))
                assert table.mul(a, table.add(b, c)) == table.add(
                    table.mul(a, b), table.mul(a, c)
                )


def test_table_ring_rejects_broken_tables():
    # 2-element "ring" with a non-associative multiplication
    add = [[0, 1], [1, 0]]
    mul = [[0, 0], [0, 0]]  # kills the identity
    with pytest.raises(ValueError):
        FiniteTableRing(add, mul, zero=0, one=1)


def test_central_elements():
    M = MatrixRing(2, ModularRing(2))
    assert M.is_central(M.one_value)
    assert not M.is_central(M.matrix_unit(1, 2).value)


# --- parsing -----------------------------------------------------------------


def test_parse_ring_round_trip():
    for spec in ("Z", "Q", "Zmod:7", "Mat:2:Zmod:2", "PolyCoef:3:Z", "Mat:2:Mat:2:Zmod:2"):
        assert parse_ring(spec).spec_string() == spec


def test_parse_ring_errors():
    with pytest.raises(ParseError):
        parse_ring("Zmod")
    with pytest.raises(ParseError):
        parse_ring("Zmod:x")
    with pytest.raises(ParseError):
        parse_ring("Z:extra")
    with pytest.raises(ParseError):
        parse_ring("Frob:3")


def test_element_parse_round_trip():
    M = MatrixRing(2, ModularRing(5))
    v = M.parse("[[1,2],[3,4]]")
    assert M.parse(M.render(v)) == v
    P = PolyCoefRing(INTEGERS, 2, names=("b0", "b1"))
    for text in ("b0*b1 - 2", "-b1^2 + 3*b0", "(b0 + 1)*(b0 - 1)", "0"):
        v = P.parse(text)
        assert P.parse(P.render(v)) == v
    with pytest.raises(ParseError):
        P.parse("c9 + 1")


def test_polycoef_arithmetic():
    P = PolyCoefRing(INTEGERS, 2, names=("x", "y"))
    x, y = P.generators()
    assert (x + y) * (x - y) == x * x - y * y
    assert P.render((x + y).value) == "x + y"
    assert P.render((-x).value) == "-x"


def test_zero_ring():
    from splitring import ZeroRing

    Z0 = ZeroRing()
    assert Z0.order() == 1
    assert Z0.one_value == Z0.zero_value
