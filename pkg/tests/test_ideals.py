import pytest

from splitring import (
    InfiniteRing,
    INTEGERS,
    MatrixRing,
    ModularRing,
    Poly,
    RingElem,
    as_table_ring,
    central_quotient,
    commutator_ideal,
    poly_from_ints,
    upper_triangular_ring,
)


def mat2z2():
    return MatrixRing(2, ModularRing(2))


def test_simple_ring_noncentral_generator_gives_whole_ring():
    # M_2(Z/2) is simple, so the ideal generated by a noncentral element is everything
    M = mat2z2()
    L = commutator_ideal(M, [M.matrix_unit(1, 1)])
    assert len(L) == M.order() == 16
    assert L.is_whole_ring()


def test_central_generator_gives_zero_ideal():
    M = mat2z2()
    L = commutator_ideal(M, [M.one])
    assert len(L) == 1
    assert M.zero_value in L


def test_upper_triangular_ideal():
    UT = upper_triangular_ring(2, ModularRing(2))
    e12 = RingElem(UT, UT.parse("[[0,1],[0,0]]"))
    L = commutator_ideal(UT, [e12])
    assert len(L) == 2
    assert e12.value in L
    assert UT.zero_value in L


def test_ideal_closure_properties():
    # closure under +, -, and two-sided multiplication, exhaustively
    UT = upper_triangular_ring(2, ModularRing(2))
    e12 = RingElem(UT, UT.parse("[[0,1],[0,0]]"))
    for ring, gens in (
        (UT, [e12]),
        (mat2z2(), [mat2z2().matrix_unit(1, 1)]),
    ):
        L = commutator_ideal(ring, gens)
        for g in L.members:
            assert ring.neg(g) in L
            for h in L.members:
                assert ring.add(g, h) in L
            for x in ring.elements():
                assert ring.mul(x, g) in L
                assert ring.mul(g, x) in L


def test_commutator_ideal_rejects_infinite_rings():
    with pytest.raises(InfiniteRing):
        commutator_ideal(INTEGERS, [INTEGERS.one])


def test_central_quotient_commutative_passthrough():
    R = as_table_ring(ModularRing(6))
    f = Poly(R, [R.from_int(5), R.one_value])
    cq = central_quotient(R, f)
    assert not cq.is_zero
    assert cq.ring.order() == 6
    # pi is a bijection here
    images = {cq.pi(RingElem(R, x)).value for x in R.elements()}
    assert len(images) == 6


def test_central_quotient_collapse_to_zero():
    M = mat2z2()
    f = Poly(M, [(-M.matrix_unit(1, 1)).value, M.one_value])  # Z - E11
    cq = central_quotient(M, f)
    assert cq.is_zero
    assert cq.ring.is_zero
    assert cq.pi(M.matrix_unit(2, 1)).value == 0


def test_central_quotient_upper_triangular():
    UT = upper_triangular_ring(2, ModularRing(2))
    e12 = UT.parse("[[0,1],[0,0]]")
    f = Poly(UT, [UT.neg(e12), UT.one_value])  # Z - E12
    cq = central_quotient(UT, f)
    assert not cq.is_zero
    T = cq.ring
    assert T.order() == 4
    # T is (Z/2)^2: commutative, characteristic 2
    assert T.is_commutative
    for x in T.elements():
        assert T.add(x, x) == T.zero_value
    # every coefficient of pi(f) is central (exhaustive)
    for c in cq.pi_poly(f).coeffs:
        for x in T.elements():
            assert T.mul(c, x) == T.mul(x, c)


def test_central_quotient_preserves_identities():
    UT = upper_triangular_ring(2, ModularRing(2))
    e12 = UT.parse("[[0,1],[0,0]]")
    f = Poly(UT, [UT.neg(e12), UT.one_value])
    cq = central_quotient(UT, f)
    T = cq.ring
    assert cq.pi(RingElem(UT, UT.one_value)).value == T.one_value
    assert cq.pi(RingElem(UT, UT.zero_value)).value == T.zero_value
    # pi is a ring homomorphism
    elems = [RingElem(UT, v) for v in UT.elements()]
    for x in elems:
        for y in elems:
            assert cq.pi(x * y) == cq.pi(x) * cq.pi(y)
            assert cq.pi(x + y) == cq.pi(x) + cq.pi(y)
