"""Exact linear algebra: oracle-backed signature tests, elimination
routines, serialization round-trips, and the sparse span builder.

The signature oracle is independent of the library: it computes the
characteristic polynomial by a Leibniz permutation sum over Fraction
polynomials and counts positive/negative eigenvalues with a Sturm chain.
"""

import itertools
import random
from fractions import Fraction

import pytest

from nilforge.errors import (
    DependentBasisError,
    DimensionMismatchError,
    SingularMatrixError,
)
from nilforge.exactlin import (
    MatrixSubspace,
    RationalMatrix,
    SignatureForm,
    SpanBuilder,
    char_poly,
    commutator,
    eta,
    inverse,
    kernel_basis,
    matrix_to_sparse,
    rank,
    rat,
    rat_from_str,
    rat_to_str,
    rational_roots,
    rref,
    signature,
    solve,
    trace_gram,
)

# ---------------------------------------------------------------------------
# oracle: Sturm-sequence eigenvalue signs, built from scratch


def _poly_add(a, b):
    n = max(len(a), len(b))
    a = [Fraction(0)] * (n - len(a)) + list(a)
    b = [Fraction(0)] * (n - len(b)) + list(b)
    return [x + y for x, y in zip(a, b)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_trim(a):
    i = 0
    while i < len(a) - 1 and a[i] == 0:
        i += 1
    return a[i:]


def _poly_rem(a, b):
    """Remainder of a / b, coefficients descending."""
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    while len(a) >= len(b) and any(x != 0 for x in a):
        coef = a[0] / b[0]
        shift = len(a) - len(b)
        sub = [coef * x for x in b] + [Fraction(0)] * shift
        a = _poly_trim([x - y for x, y in zip(a, sub)])
        if all(x == 0 for x in a):
            return [Fraction(0)]
    return a


def _poly_eval(a, x):
    acc = Fraction(0)
    for c in a:
        acc = acc * x + c
    return acc


def _oracle_char_poly(m):
    """det(tI - M) via the Leibniz permutation sum over polynomials."""
    n = m.rows
    total = [Fraction(0)]
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if not seen[i]:
                j, length = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    length += 1
                if length % 2 == 0:
                    sign = -sign
        term = [Fraction(sign)]
        for i in range(n):
            entry = m.entry(i, perm[i])
            if perm[i] == i:
                term = _poly_mul(term, [Fraction(1), -entry])
            else:
                term = _poly_mul(term, [-entry])
        total = _poly_add(total, term)
    return _poly_trim(total)


def _sign_changes(chain, x=None, at="value"):
    signs = []
    for p in chain:
        if at == "value":
            v = _poly_eval(p, x)
            s = (v > 0) - (v < 0)
        elif at == "+inf":
            s = (p[0] > 0) - (p[0] < 0)
        else:  # -inf
            lead = p[0] * (-1) ** (len(p) - 1)
            s = (lead > 0) - (lead < 0)
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def oracle_signature(m):
    """(p, q, nullity) of a symmetric rational matrix via Sturm counting."""
    assert m.is_symmetric()
    cp = _oracle_char_poly(m)
    nullity = 0
    while cp[-1] == 0 and len(cp) > 1:
        nullity += 1
        cp = cp[:-1]
    # Sturm chain of the zero-root-free part
    deriv = [c * (len(cp) - 1 - i) for i, c in enumerate(cp[:-1])]
    chain = [cp]
    if deriv:
        chain.append(_poly_trim(deriv))
        while len(chain[-1]) > 1:
            r = _poly_rem(chain[-2], chain[-1])
            if all(x == 0 for x in r):
                break
            chain.append([-x for x in r])
    zero = Fraction(0)
    pos = _sign_changes(chain, zero) - _sign_changes(chain, at="+inf")
    neg = _sign_changes(chain, at="-inf") - _sign_changes(chain, zero)
    return pos, neg, nullity


def _random_symmetric(rng, n, denom=3):
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = Fraction(rng.randint(-4, 4), rng.randint(1, denom))
            rows[i][j] = v
            rows[j][i] = v
    return RationalMatrix(rows)


def _random_invertible(rng, n):
    while True:
        m = RationalMatrix(
            [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        )
        if rank(m) == n:
            return m


# ---------------------------------------------------------------------------
# signature against the oracle, and Sylvester invariance


def test_signature_matches_sturm_oracle():
    rng = random.Random(20260824)
    for _ in range(60):
        n = rng.randint(1, 5)
        m = _random_symmetric(rng, n)
        assert signature(m) == oracle_signature(m)


def test_signature_known_values():
    assert signature(eta(2, 3)) == (2, 3, 0)
    assert signature(RationalMatrix.zeros(3, 3)) == (0, 0, 3)
    # hyperbolic plane: zero diagonal, needs the off-diagonal pivot step
    h = RationalMatrix(((0, 1), (1, 0)))
    assert signature(h) == (1, 1, 0)
    assert oracle_signature(h) == (1, 1, 0)


def test_sylvester_invariance_100_congruences():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 4)
        a = _random_symmetric(rng, n)
        s = _random_invertible(rng, n)
        congruent = s.transpose() * a * s
        assert signature(congruent) == signature(a)


# ---------------------------------------------------------------------------
# elimination routines


def test_rref_rank_kernel():
    m = RationalMatrix(((1, 2, 3), (2, 4, 6), (1, 0, 1)))
    r, pivots = rref(m)
    assert rank(m) == 2
    assert len(pivots) == 2
    for v in kernel_basis(m):
        assert all(x == 0 for x in m.apply(v))
    assert len(kernel_basis(m)) == 1


def test_solve_and_inverse():
    rng = random.Random(99)
    for _ in range(25):
        n = rng.randint(1, 4)
        a = _random_invertible(rng, n)
        x = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)]
        b = a.apply(x)
        assert list(solve(a, b)) == list(x)
        assert a * inverse(a) == RationalMatrix.identity(n)
    with pytest.raises(SingularMatrixError):
        inverse(RationalMatrix(((1, 2), (2, 4))))


def test_char_poly_and_rational_roots():
    m = RationalMatrix.diag([2, 2, -3])
    cp = char_poly(m)
    # (t-2)^2 (t+3) = t^3 - t^2 - 8t + 12
    assert cp == [Fraction(1), Fraction(-1), Fraction(-8), Fraction(12)]
    roots, remainder = rational_roots(cp)
    assert roots == {Fraction(2): 2, Fraction(-3): 1}
    assert remainder == 0
    # x^2 - 2 has no rational roots
    roots, remainder = rational_roots([Fraction(1), Fraction(0), Fraction(-2)])
    assert roots == {}
    assert remainder == 2


def test_char_poly_matches_oracle():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = RationalMatrix(
            [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        )
        assert list(char_poly(m)) == _oracle_char_poly(m)


# ---------------------------------------------------------------------------
# matrix algebra basics


def test_matrix_ops_and_commutator():
    a = RationalMatrix(((1, 2), (3, 4)))
    b = RationalMatrix(((0, 1), (-1, 0)))
    assert (a * b - b * a) == commutator(a, b)
    assert a.transpose().transpose() == a
    assert (a + b) - b == a
    assert a.scale(rat("1/2")).scale(2) == a
    with pytest.raises(DimensionMismatchError):
        a * RationalMatrix(((1, 2, 3),))


def test_commutator_fast_path_matches_slow_path():
    rng = random.Random(13)
    for _ in range(30):
        n = rng.randint(1, 5)
        a = RationalMatrix(
            [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        )
        b = RationalMatrix(
            [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        )
        slow = a * b - b * a
        assert commutator(a, b) == slow
        # non-integer entries force the generic route
        af = a.scale(rat("1/3"))
        assert commutator(af, b) == af * b - b * af


def test_huge_entries_avoid_int64_overflow():
    big = 2**40
    a = RationalMatrix(((big, 0), (0, big)))
    assert a * a == RationalMatrix(((big * big, 0), (0, big * big)))
    assert commutator(a, RationalMatrix(((0, big), (0, 0)))) == RationalMatrix(
        ((0, 0), (0, 0))
    )


# ---------------------------------------------------------------------------
# serialization


def test_rational_string_round_trip():
    rng = random.Random(3)
    for _ in range(100):
        x = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        assert rat_from_str(rat_to_str(x)) == x
    assert rat_to_str(Fraction(3, 1)) == "3"
    assert rat_to_str(Fraction(-1, 2)) == "-1/2"


def test_matrix_json_round_trip():
    rng = random.Random(4)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = _random_symmetric(rng, n)
        assert RationalMatrix.from_json(m.to_json()) == m
    f = SignatureForm(eta(1, 2))
    assert SignatureForm.from_json(f.to_json()) == f


# ---------------------------------------------------------------------------
# span builder and matrix subspaces


def test_span_builder_full_rref_coords():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(2, 4)
        mats = [
            RationalMatrix(
                [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
            )
            for _ in range(rng.randint(1, 5))
        ]
        span = SpanBuilder()
        kept = []
        for m in mats:
            if span.add(matrix_to_sparse(m)):
                kept.append(m)
        # every original matrix must be an exact combination of kept ones
        for m in mats:
            coords = span.coords(matrix_to_sparse(m))
            assert coords is not None
            rebuilt = RationalMatrix.zeros(n, n)
            for idx, c in coords.items():
                rebuilt = rebuilt + kept[idx].scale(c)
            assert rebuilt == m


def test_matrix_subspace_membership_and_coords():
    b1 = RationalMatrix(((0, 1), (-1, 0)))
    b2 = RationalMatrix(((1, 0), (0, -1)))
    s = MatrixSubspace(2, [b1, b2])
    elem = b1.scale(rat("2/3")) - b2.scale(5)
    assert s.contains(elem)
    assert list(s.coords(elem)) == [rat("2/3"), rat(-5)]
    assert not s.contains(RationalMatrix.identity(2))
    with pytest.raises(DependentBasisError):
        MatrixSubspace(2, [b1, b1.scale(2)])


def test_trace_gram_is_minus_trace():
    b1 = RationalMatrix(((0, 1), (-1, 0)))
    s = MatrixSubspace(2, [b1])
    assert trace_gram(s).entry(0, 0) == -(b1 * b1).trace() == 2
