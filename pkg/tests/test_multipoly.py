import pytest

from splitring import (
    IndexOutOfRange,
    INTEGERS,
    MPoly,
    Poly,
    PolyCoefRing,
    build_relations_closed,
    build_relations_recursive,
    complete_homogeneous_prefix,
    delta,
    elementary_symmetric,
    poly_from_a,
    poly_from_ints,
    symmetrize_check,
    verify_magia2,
)

Z = INTEGERS


def X(n, i):
    return MPoly.variable(Z, n, i)


def test_elementary_symmetric_examples():
    assert elementary_symmetric(3, 2, Z) == X(3, 1) * X(3, 2) + X(3, 1) * X(3, 3) + X(
        3, 2
    ) * X(3, 3)
    assert elementary_symmetric(2, 1, Z) == X(2, 1) + X(2, 2)
    assert elementary_symmetric(4, 4, Z) == X(4, 1) * X(4, 2) * X(4, 3) * X(4, 4)
    with pytest.raises(IndexOutOfRange):
        elementary_symmetric(3, 4, Z)


def test_prefix_sums_examples():
    n = 3
    x1, x2, x3 = (X(n, i) for i in (1, 2, 3))
    assert complete_homogeneous_prefix(n, 2, 2, Z) == x1 * x1 + x1 * x2 + x2 * x2
    assert complete_homogeneous_prefix(n, 1, 3, Z) == x1 ** 3
    assert complete_homogeneous_prefix(n, 3, 1, Z) == x1 + x2 + x3
    assert complete_homogeneous_prefix(n, 2, 0, Z) == MPoly.constant(Z, n, 1)


def test_delta_examples():
    n = 2
    x1, x2 = X(n, 1), X(n, 2)
    assert delta(x1 * x1, 1, 2) == x1 + x2
    assert delta(x1 + x2, 1, 2).is_zero()
    with pytest.raises(IndexOutOfRange):
        delta(x1, 1, 1)


def test_delta_prefix_identity():
    # applying the adjacent divided difference to S_j^i gives S_{j+1}^{i-1}
    for n in range(2, 7):
        for j in range(1, n):
            for i in range(0, 7):
                lhs = delta(complete_homogeneous_prefix(n, j, i, Z), j, j + 1)
                if i == 0:
                    assert lhs.is_zero()
                else:
                    assert lhs == complete_homogeneous_prefix(n, j + 1, i - 1, Z)


def symbolic_f(n):
    P = PolyCoefRing(INTEGERS, n)
    return poly_from_a(P, P.generators()), P


def test_relations_match_displayed_n4():
    f, P = symbolic_f(4)
    a1, a2, a3, a4 = (MPoly.constant(P, 4, g.value) for g in P.generators())
    x1, x2, x3, x4 = (MPoly.variable(P, 4, i) for i in (1, 2, 3, 4))
    expected = [
        x1 ** 4 - a1 * x1 ** 3 + a2 * x1 ** 2 - a3 * x1 + a4,
        x1 ** 3 + x2 ** 3 + x1 * x2 ** 2 + x2 * x1 ** 2
        - a1 * (x1 ** 2 + x2 ** 2 + x1 * x2)
        + a2 * (x1 + x2)
        - a3,
        x1 ** 2 + x2 ** 2 + x3 ** 2 + x1 * x2 + x2 * x3 + x1 * x3
        - a1 * (x1 + x2 + x3)
        + a2,
        x1 + x2 + x3 + x4 - a1,
    ]
    for route in (build_relations_recursive, build_relations_closed):
        assert route(f, 4) == expected


def test_relations_sigma_form_n4():
    # the same four polynomials written through sigma_i - a_i
    f, P = symbolic_f(4)
    a = [MPoly.constant(P, 4, g.value) for g in P.generators()]
    s = [elementary_symmetric(4, i, P) for i in range(1, 5)]
    g = [s[i] - a[i] for i in range(4)]
    x1, x2, x3 = (MPoly.variable(P, 4, i) for i in (1, 2, 3))
    expected = [
        g[0] * x1 ** 3 - g[1] * x1 ** 2 + g[2] * x1 - g[3],
        g[0] * (x1 ** 2 + x2 ** 2 + x1 * x2) - g[1] * (x1 + x2) + g[2],
        g[0] * (x1 + x2 + x3) - g[1],
        g[0],
    ]
    assert build_relations_recursive(f, 4) == expected


def test_relations_last_and_first():
    for n in range(1, 6):
        f, P = symbolic_f(n)
        rels = build_relations_recursive(f, n)
        assert rels[0] == MPoly.from_univariate(f, n, 1)
        sigma1 = elementary_symmetric(n, 1, P)
        a1 = MPoly.constant(P, n, P.generator(1).value)
        assert rels[-1] == sigma1 - a1


def test_relations_n2_closed():
    f, P = symbolic_f(2)
    rels = build_relations_closed(f, 2)
    x1, x2 = MPoly.variable(P, 2, 1), MPoly.variable(P, 2, 2)
    a1 = MPoly.constant(P, 2, P.generator(1).value)
    assert rels[1] == x1 + x2 - a1


def test_relations_numeric_n3():
    # f = Z^3 - 1, i.e. a = (0, 0, 1): f_2 = X1^2 + X1 X2 + X2^2 by hand
    f = poly_from_a(INTEGERS, [0, 0, 1])
    assert f == poly_from_ints(INTEGERS, [-1, 0, 0, 1])
    rels = build_relations_closed(f, 3)
    x1, x2 = X(3, 1), X(3, 2)
    assert rels[1] == x1 * x1 + x1 * x2 + x2 * x2


def test_recursive_equals_closed_symbolic():
    for n in range(1, 7):
        f, _ = symbolic_f(n)
        assert build_relations_recursive(f, n) == build_relations_closed(f, n)


def test_magia2():
    for n in range(1, 5):
        f, _ = symbolic_f(n)
        ok, witness = verify_magia2(f, n)
        assert ok and witness is None
    ok, _ = verify_magia2(poly_from_a(INTEGERS, [1, 2, 3]), 3)
    assert ok


def test_magia2_expand_by_hand_n3():
    # independent expansion of the right-hand side for n=3, a=(1,2,3)
    f = poly_from_a(INTEGERS, [1, 2, 3])
    a = [1, 2, 3]
    n = 3
    rels = build_relations_recursive(f, n)
    for i in range(1, n + 1):
        rhs = MPoly.zero(INTEGERS, n)
        sign = 1
        for k in range(1, n - i + 2):
            factor = elementary_symmetric(n, k, INTEGERS) - MPoly.constant(
                INTEGERS, n, a[k - 1]
            )
            rhs = rhs + factor * complete_homogeneous_prefix(
                n, i, n - i + 1 - k, INTEGERS
            ).scale(sign)
            sign = -sign
        assert rhs == rels[i - 1]


def test_gener_identity():
    # X1^n - sigma_1 X1^{n-1} + ... + (-1)^n sigma_n = 0
    for n in range(1, 7):
        total = MPoly.variable(Z, n, 1) ** n
        sign = -1
        for i in range(1, n + 1):
            term = elementary_symmetric(n, i, Z) * (MPoly.variable(Z, n, 1) ** (n - i))
            total = total + term.scale(sign)
            sign = -sign
        assert total.is_zero()


def test_gendel_identity():
    # S_i^{n-i+1} - sigma_1 S_i^{n-i} + ... + (-1)^{n-i+1} sigma_{n-i+1} = 0
    for n in range(1, 6):
        for i in range(1, n + 1):
            total = MPoly.zero(Z, n)
            sign = 1
            for k in range(0, n - i + 2):
                s = complete_homogeneous_prefix(n, i, n - i + 1 - k, Z)
                factor = (
                    MPoly.constant(Z, n, 1)
                    if k == 0
                    else elementary_symmetric(n, k, Z)
                )
                total = total + (factor * s).scale(sign)
                sign = -sign
            assert total.is_zero()


def test_symmetry_and_degrees():
    for n in range(1, 6):
        f, _ = symbolic_f(n)
        for i, rel in enumerate(build_relations_recursive(f, n), start=1):
            assert symmetrize_check(rel, i)
            assert rel.degree_in(i) == n - i + 1
            assert rel.total_degree() == n - i + 1
            assert rel.coeff(
                tuple(n - i + 1 if j == i - 1 else 0 for j in range(n))
            ).value == f.ring.one_value
            assert max(rel.variables_used()) == i


def test_symmetrize_check_negative():
    x1, x2 = X(2, 1), X(2, 2)
    assert not symmetrize_check(x1 - x2, 2)
    assert symmetrize_check(x1, 1)
    with pytest.raises(IndexOutOfRange):
        symmetrize_check(x2, 1)


def test_render_grouped():
    f, _ = symbolic_f(4)
    rels = build_relations_closed(f, 4)
    assert rels[2].render() == (
        "X1^2 + X1*X2 + X1*X3 + X2^2 + X2*X3 + X3^2 - a1*(X1 + X2 + X3) + a2"
    )
    assert rels[3].render() == "X1 + X2 + X3 + X4 - a1"


def test_mpoly_json():
    p = X(2, 1) * X(2, 1) - X(2, 2)
    data = p.to_json()
    assert {"exponents": [2, 0], "coeff": "1"} in data
    assert {"exponents": [0, 1], "coeff": "-1"} in data
