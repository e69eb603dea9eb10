"""Exact linear algebra: canonical solves, kernels, Kronecker products, swaps."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import FIELDS, rand_matrix, rng_for
from relspan import GF, QQ, Matrix
from relspan.errors import FieldMismatch, ShapeMismatch
from relspan.linalg import (
    column_span_equal,
    is_injective,
    is_surjective,
    kernel_basis,
    kernel_basis_sparse,
    kron,
    kron_apply,
    left_inverse,
    solve,
    swap_map,
    swap_sparse,
)

F5 = GF(5)


def mat(field, rows):
    return Matrix.from_rows(field, rows)


# -- solve -------------------------------------------------------------------


def test_solve_identity():
    i3 = Matrix.identity(QQ, 3)
    assert solve(i3, i3) == i3


def test_solve_f5_scalar_matches_enumeration():
    a = mat(F5, [[2]])
    b = mat(F5, [[3]])
    x = solve(a, b)
    # oracle: the unique residue r with 2r = 3 mod 5
    expected = [r for r in range(5) if (2 * r) % 5 == 3]
    assert expected == [4]
    assert x == mat(F5, [[4]])


def test_solve_zeroes_free_variables_and_is_deterministic():
    a = mat(QQ, [[1, 1]])
    b = mat(QQ, [[0]])
    x = solve(a, b)
    assert a @ x == b
    assert x == Matrix.zeros(QQ, 2, 1)
    assert solve(a, b) == x  # re-run, bit-for-bit


def test_solve_inconsistent_returns_none():
    a = mat(QQ, [[1], [1]])
    b = mat(QQ, [[0], [1]])
    assert solve(a, b) is None


def test_solve_shape_and_field_errors():
    with pytest.raises(ShapeMismatch):
        solve(mat(QQ, [[1]]), mat(QQ, [[1], [2]]))
    with pytest.raises(FieldMismatch):
        solve(mat(QQ, [[1]]), mat(F5, [[1]]))


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 4),
    st.integers(1, 4),
    st.integers(1, 3),
    st.randoms(use_true_random=False),
)
def test_solve_random_consistency(n, m, k, rh):
    for field in FIELDS:
        a = rand_matrix(rh, field, n, m)
        b = rand_matrix(rh, field, n, k)
        x = solve(a, b)
        if x is not None:
            assert a @ x == b
        else:
            # brute-force oracle: inconsistency means some augmented column
            # raises the rank
            assert any(
                a.hstack(Matrix(field, [[row[j]] for row in b.data])).rank() > a.rank()
                for j in range(k)
            )


# -- kernels -----------------------------------------------------------------


def test_kernel_zero_map_is_identity_basis():
    assert kernel_basis(Matrix.zeros(QQ, 2, 2)) == Matrix.identity(QQ, 2)


def test_kernel_injective_is_empty():
    k = kernel_basis(Matrix.identity(QQ, 2))
    assert (k.rows, k.cols) == (2, 0)


def test_kernel_one_relation():
    k = kernel_basis(mat(QQ, [[1, 1]]))
    assert k == mat(QQ, [[-1], [1]])
    assert k.rank() == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.randoms(use_true_random=False))
def test_kernel_rank_nullity_and_annihilation(n, m, rh):
    for field in FIELDS:
        a = rand_matrix(rh, field, n, m)
        k = kernel_basis(a)
        assert (a @ k).is_zero()
        assert k.rank() == k.cols  # independent columns
        assert a.rank() + k.cols == a.cols


def test_kernel_sparse_agrees_with_dense():
    rng = rng_for("kernel-sparse")
    for _ in range(25):
        for field in FIELDS:
            a = rand_matrix(rng, field, rng.randint(1, 5), rng.randint(1, 5))
            cols = [a.col_sparse(j) for j in range(a.cols)]
            assert kernel_basis_sparse(field, a.cols, cols) == kernel_basis(a)


# -- kron and swap -----------------------------------------------------------


def test_kron_identities():
    assert kron(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)) == Matrix.identity(QQ, 6)
    assert kron(mat(QQ, [[2]]), mat(QQ, [[3]])) == mat(QQ, [[6]])


def kron_oracle(a, b):
    """Direct basis-by-basis expansion, independent of the library kron."""
    f = a.field
    out = Matrix.zeros(f, a.rows * b.rows, a.cols * b.cols)
    for i1 in range(a.rows):
        for j1 in range(a.cols):
            for i2 in range(b.rows):
                for j2 in range(b.cols):
                    out.data[i1 * b.rows + i2][j1 * b.cols + j2] = f.normalize(
                        a.data[i1][j1] * b.data[i2][j2]
                    )
    return out


def test_kron_matches_expansion_oracle_and_mixed_product():
    rng = rng_for("kron")
    for _ in range(20):
        for field in FIELDS:
            a = rand_matrix(rng, field, 2, 2)
            b = rand_matrix(rng, field, 2, 2)
            c = rand_matrix(rng, field, 2, 2)
            d = rand_matrix(rng, field, 2, 2)
            assert kron(a, b) == kron_oracle(a, b)
            assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


def test_kron_associativity():
    rng = rng_for("kron-assoc")
    for field in FIELDS:
        a = rand_matrix(rng, field, 2, 3)
        b = rand_matrix(rng, field, 1, 2)
        c = rand_matrix(rng, field, 3, 2)
        assert kron(kron(a, b), c) == kron(a, kron(b, c))


def test_kron_apply_matches_kron():
    rng = rng_for("kron-apply")
    for field in FIELDS:
        a = rand_matrix(rng, field, 2, 3)
        b = rand_matrix(rng, field, 3, 2)
        m = rand_matrix(rng, field, 6, 4)
        assert kron_apply(a, b, m) == kron(a, b) @ m


def test_swap_basics():
    assert swap_map(QQ, 1, 1) == Matrix.identity(QQ, 1)
    s22 = swap_map(QQ, 2, 2)
    assert s22 @ s22 == Matrix.identity(QQ, 4)


def test_swap_2_3_is_a_permutation():
    s = swap_map(QQ, 2, 3)
    assert s.rows == s.cols == 6
    for i in range(2):
        for j in range(3):
            col = s.col(i * 3 + j)
            assert col.count(QQ.one) == 1 and col[j * 2 + i] == QQ.one
    for row in s.data:
        assert row.count(QQ.one) == 1
    assert swap_map(QQ, 3, 2) @ s == Matrix.identity(QQ, 6)


def test_swap_naturality():
    rng = rng_for("swap-nat")
    for field in FIELDS:
        f = rand_matrix(rng, field, 3, 2)
        g = rand_matrix(rng, field, 2, 4)
        # c∘(f⊗g) = (g⊗f)∘c
        assert swap_map(field, f.rows, g.rows) @ kron(f, g) == kron(g, f) @ swap_map(
            field, f.cols, g.cols
        )


def test_swap_sparse_matches_matrix():
    vec = {0 * 3 + 1: QQ.of(2), 1 * 3 + 2: QQ.of(5)}
    out = swap_sparse(vec, 2, 3)
    assert out == {1 * 2 + 0: QQ.of(2), 2 * 2 + 1: QQ.of(5)}


# -- rank predicates and span comparison ---------------------------------------


def test_rank_predicates():
    i3 = Matrix.identity(QQ, 3)
    assert is_surjective(i3) and is_injective(i3)
    a = mat(QQ, [[1, 0]])
    assert is_surjective(a) and not is_injective(a)
    z = Matrix.zeros(QQ, 1, 1)
    assert not is_surjective(z) and not is_injective(z)


def test_column_span_equal():
    i2 = Matrix.identity(QQ, 2)
    assert column_span_equal(i2, i2)
    assert column_span_equal(mat(QQ, [[1], [1]]), mat(QQ, [[2], [2]]))
    assert not column_span_equal(mat(QQ, [[1], [0]]), i2)
    with pytest.raises(ShapeMismatch):
        column_span_equal(i2, mat(QQ, [[1]]))


def test_left_inverse():
    a = mat(QQ, [[1, 0], [2, 1], [3, 3]])
    l = left_inverse(a)
    assert l @ a == Matrix.identity(QQ, 2)


def test_zero_dimensional_edge_cases():
    z = Matrix.zeros(QQ, 0, 3)
    assert kernel_basis(z) == Matrix.identity(QQ, 3)
    n = Matrix.zeros(QQ, 3, 0)
    assert (kernel_basis(n).rows, kernel_basis(n).cols) == (0, 0)
    assert kron(z, Matrix.identity(QQ, 2)).rows == 0
    assert is_injective(n) and not is_surjective(n)
