import random

import pytest

from skewinv.errors import InvalidAutomorphismError
from skewinv.scalars import Cyclo
from skewinv.skew_algebra import (
    AlgebraElt,
    AlgebraSpec,
    Mat2,
    Monomial,
    apply_aut,
    is_valid_automorphism,
    mul,
    power,
    relation_image_scalar,
    reorder,
    to_text,
)

QM1 = AlgebraSpec.quantum(Cyclo.from_rational(-1))
JORDAN = AlgebraSpec.jordan()
COMM = AlgebraSpec.commutative()


def brute_normal_form(spec, word, coeff=None):
    """Single-step rewriting oracle: words are strings over 'u', 'v'."""
    coeff = coeff if coeff is not None else Cyclo.one()
    acc = AlgebraElt.zero()
    stack = [(word, coeff)]
    while stack:
        w, c = stack.pop()
        k = w.find("vu")
        if k < 0:
            acc = acc + AlgebraElt.monomial(c, w.count("u"), w.count("v"))
            continue
        head, tail = w[:k], w[k + 2:]
        if spec.is_quantum:
            stack.append((head + "uv" + tail, c * spec.q))
        else:
            stack.append((head + "uv" + tail, c))
            stack.append((head + "uu" + tail, c))
    return acc


def elt_from_word(word):
    return AlgebraElt.monomial(1, word.count("u"), 0) if set(word) <= {"u"} else None


@pytest.mark.parametrize("spec", [QM1, JORDAN, COMM, AlgebraSpec.quantum(Cyclo.root(5))])
@pytest.mark.parametrize("i,j", [(i, j) for i in range(7) for j in range(7)])
def test_reorder_matches_single_step_oracle(spec, i, j):
    assert reorder(spec, i, j) == brute_normal_form(spec, "v" * i + "u" * j)


def test_reorder_quantum_basic():
    q = Cyclo.root(5)
    spec = AlgebraSpec.quantum(q)
    assert reorder(spec, 1, 1) == AlgebraElt.monomial(q, 1, 1)


def test_reorder_jordan_basic():
    assert reorder(JORDAN, 1, 1) == AlgebraElt({(1, 1): 1, (2, 0): 1})


def test_reorder_jordan_21():
    # v^2 u = u v^2 + 2 u^2 v + 2 u^3
    assert reorder(JORDAN, 2, 1) == AlgebraElt({(1, 2): 1, (2, 1): 2, (3, 0): 2})


def test_mul_ordered_pair():
    u = AlgebraElt.monomial(1, 1, 0)
    v = AlgebraElt.monomial(1, 0, 1)
    assert mul(QM1, u, v) == AlgebraElt.monomial(1, 1, 1)


def test_mul_uv_squared_quantum():
    q = Cyclo.root(7)
    spec = AlgebraSpec.quantum(q)
    uv = AlgebraElt.monomial(1, 1, 1)
    assert mul(spec, uv, uv) == AlgebraElt.monomial(q, 2, 2)


def test_mul_against_expansion_oracle_qminus1():
    # (u^7 - v^7)(uv) squared, against brute single-step rewriting
    f = mul(QM1, AlgebraElt({(7, 0): 1, (0, 7): -1}), AlgebraElt.monomial(1, 1, 1))
    lhs = mul(QM1, f, f)
    oracle = AlgebraElt.zero()
    for w1, c1 in (("uuuuuuuuv", 1), ("vvvvvvvuv", -1)):
        for w2, c2 in (("uuuuuuuuv", 1), ("vvvvvvvuv", -1)):
            oracle = oracle + brute_normal_form(QM1, w1 + w2, Cyclo.from_rational(c1 * c2))
    assert lhs == oracle


@pytest.mark.parametrize("spec", [QM1, JORDAN, AlgebraSpec.quantum(Cyclo.root(3))])
def test_mul_associative_random(spec):
    rng = random.Random(11)
    for _ in range(12):
        elts = []
        for _ in range(3):
            e = AlgebraElt.zero()
            for _ in range(3):
                e = e + AlgebraElt.monomial(rng.randint(-3, 3), rng.randint(0, 4), rng.randint(0, 4))
            elts.append(e)
        a, b, c = elts
        assert mul(spec, mul(spec, a, b), c) == mul(spec, a, mul(spec, b, c))


def test_grading_additive():
    rng = random.Random(3)
    for spec in (QM1, JORDAN):
        for _ in range(10):
            a = AlgebraElt.monomial(1, rng.randint(0, 3), rng.randint(0, 3))
            b = AlgebraElt.monomial(1, rng.randint(0, 3), rng.randint(0, 3))
            assert mul(spec, a, b).degree() == a.degree() + b.degree()


def test_lemma_power_identity_quantum():
    # (u^a v^b)^c == q^(abc(c-1)/2) u^(ac) v^(bc), q = w_5
    q = Cyclo.root(5)
    spec = AlgebraSpec.quantum(q)
    for a in range(4):
        for b in range(4):
            for c in range(5):
                lhs = power(spec, AlgebraElt.monomial(1, a, b), c)
                e = a * b * c * (c - 1) // 2
                assert lhs == AlgebraElt.monomial(q ** e, a * c, b * c)


def test_lemma_multifactor_identity_quantum():
    q = Cyclo.root(5)
    spec = AlgebraSpec.quantum(q)
    rng = random.Random(5)
    for _ in range(20):
        m = rng.randint(1, 3)
        ab = [(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(m)]
        prod = AlgebraElt.one()
        for a, b in ab:
            prod = mul(spec, prod, AlgebraElt.monomial(1, a, b))
        r = sum(ab[i][0] * ab[j][1] for i in range(m) for j in range(i))
        assert prod == AlgebraElt.monomial(q ** r, sum(a for a, _ in ab), sum(b for _, b in ab))


def test_apply_aut_diagonal():
    a = Cyclo.root(3)
    d = Cyclo.root(3, 2)
    M = Mat2.diagonal(a, d)
    elt = AlgebraElt.monomial(1, 2, 3)
    out = apply_aut(QM1, M, elt)
    assert out == AlgebraElt.monomial((a ** 2) * (d ** 3), 2, 3)


def test_apply_aut_antidiagonal_qminus1():
    b = Cyclo.root(8)
    c = Cyclo.root(8, 3)
    M = Mat2.antidiagonal(b, c)
    uv = AlgebraElt.monomial(1, 1, 1)
    # u -> c v, v -> b u gives uv -> cb * vu = -bc * uv
    assert apply_aut(QM1, M, uv) == AlgebraElt.monomial(-(b * c), 1, 1)


def test_automorphism_validity_rules():
    w = Cyclo.root(5)
    q5 = AlgebraSpec.quantum(w)
    assert is_valid_automorphism(q5, Mat2.diagonal(w, w ** 2))
    assert not is_valid_automorphism(q5, Mat2.antidiagonal(1, 1))
    assert not is_valid_automorphism(q5, Mat2(1, 1, 0, 1))
    assert is_valid_automorphism(QM1, Mat2.antidiagonal(w, w))
    assert not is_valid_automorphism(QM1, Mat2(1, 1, 0, 1))
    assert is_valid_automorphism(JORDAN, Mat2(w, 17, 0, w))
    assert not is_valid_automorphism(JORDAN, Mat2.diagonal(w, w ** 2))
    assert not is_valid_automorphism(JORDAN, Mat2.antidiagonal(1, 1))
    # q = 1: everything invertible passes
    assert is_valid_automorphism(COMM, Mat2(1, 2, 3, 4))
    assert not is_valid_automorphism(COMM, Mat2(1, 2, 2, 4))


def test_apply_aut_rejects_invalid():
    with pytest.raises(InvalidAutomorphismError):
        apply_aut(JORDAN, Mat2.diagonal(1, -1), AlgebraElt.one())


def test_apply_aut_is_homomorphism():
    rng = random.Random(9)
    cases = [
        (QM1, Mat2.antidiagonal(Cyclo.root(12), Cyclo.root(12, 7))),
        (QM1, Mat2.diagonal(Cyclo.root(6), Cyclo.root(6, 5))),
        (AlgebraSpec.quantum(Cyclo.root(5)), Mat2.diagonal(Cyclo.root(4), Cyclo.root(4, 3))),
        (JORDAN, Mat2(Cyclo.root(6), Cyclo.from_rational(2), Cyclo.zero(), Cyclo.root(6))),
        (COMM, Mat2(1, 2, 1, 3)),
    ]
    for spec, M in cases:
        for _ in range(6):
            a = AlgebraElt.zero()
            b = AlgebraElt.zero()
            for _ in range(2):
                a = a + AlgebraElt.monomial(rng.randint(-2, 2), rng.randint(0, 3), rng.randint(0, 3))
                b = b + AlgebraElt.monomial(rng.randint(-2, 2), rng.randint(0, 3), rng.randint(0, 3))
            assert apply_aut(spec, M, mul(spec, a, b)) == mul(
                spec, apply_aut(spec, M, a), apply_aut(spec, M, b)
            )


def test_apply_aut_homomorphism_all_group_generators():
    from math import gcd

    from skewinv.group_actions import GroupSpec

    rng = random.Random(23)
    groups = []
    for n in range(1, 7):
        for k in range(1, 7):
            groups.append(GroupSpec.gnk(n, k))
    for n in range(2, 7):
        for a in range(1, n):
            if gcd(a, n) == 1:
                groups.append(GroupSpec.cyclic(n, a, AlgebraSpec.quantum(Cyclo.root(5))))
        groups.append(GroupSpec.cyclic(n, 1, JORDAN))
    for G in groups:
        spec = G.ambient
        for M in G.generators():
            a = AlgebraElt.zero()
            b = AlgebraElt.zero()
            for _ in range(2):
                a = a + AlgebraElt.monomial(rng.randint(-2, 2), rng.randint(0, 3), rng.randint(0, 3))
                b = b + AlgebraElt.monomial(rng.randint(-2, 2), rng.randint(0, 3), rng.randint(0, 3))
            assert apply_aut(spec, M, mul(spec, a, b)) == mul(
                spec, apply_aut(spec, M, a), apply_aut(spec, M, b)
            )


def test_relation_image_scalar_values():
    q = Cyclo.root(5)
    assert relation_image_scalar(AlgebraSpec.quantum(q), Mat2.diagonal(2, 3)) == 6
    assert relation_image_scalar(QM1, Mat2.antidiagonal(2, 3)) == 6
    w = Cyclo.root(6)
    assert relation_image_scalar(JORDAN, Mat2(w, 5, 0, w)) == w ** 2


def test_to_text_canonical_order():
    e = AlgebraElt({(0, 2): 3, (2, 0): 1, (1, 1): -2})
    assert to_text(e) == "3 * u^0 * v^2 + -2 * u^1 * v^1 + 1 * u^2 * v^0"
    assert to_text(AlgebraElt.zero()) == "0"


def test_monomial_degree():
    assert Monomial(2, 3).degree == 5
