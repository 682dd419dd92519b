import random

from hypothesis import given, settings, strategies as st

from picalg import intmat


def check_snf(a):
    res = intmat.snf(a)
    rows = len(a)
    cols = len(a[0]) if a else 0
    assert intmat.mat_eq(intmat.matmul(intmat.matmul(res.U, a), res.V), res.D)
    assert abs(intmat.det(res.U)) == 1
    assert abs(intmat.det(res.V)) == 1
    assert intmat.mat_eq(intmat.matmul(res.U, res.Uinv), intmat.identity(rows))
    assert intmat.mat_eq(intmat.matmul(res.V, res.Vinv), intmat.identity(cols))
    diag = [abs(d) for d in res.diagonal]
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert res.D[i][j] == 0
    nz = [d for d in diag if d]
    for a1, a2 in zip(nz, nz[1:]):
        assert a2 % a1 == 0
    assert all(d >= 0 for d in res.diagonal)
    return res


def test_snf_small_example():
    res = check_snf([[2, 4], [6, 8]])
    assert res.diagonal == [2, 4]


def test_snf_identity_and_zero():
    assert check_snf(intmat.identity(3)).diagonal == [1, 1, 1]
    assert check_snf([[0]]).diagonal == [0]


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 8),
    st.integers(1, 8),
    st.integers(0, 2 ** 31),
)
def test_snf_random(rows, cols, seed):
    rng = random.Random(seed)
    a = [[rng.randint(-20, 20) for _ in range(cols)] for _ in range(rows)]
    check_snf(a)


def test_kernel_basis_example():
    basis = intmat.kernel_basis([[2, -1]])
    assert len(basis) == 2 and len(basis[0]) == 1
    x = [basis[0][0], basis[1][0]]
    assert 2 * x[0] - x[1] == 0
    # saturation: invariant factors of the basis matrix are all 1
    res = intmat.snf(basis)
    assert all(d == 1 for d in res.diagonal if d)


def test_kernel_basis_trivial_cases():
    assert intmat.kernel_basis([[1, 0], [0, 1]]) == [[], []]
    basis = intmat.kernel_basis([[0, 0]])
    assert len(basis[0]) == 2


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2 ** 31))
def test_kernel_random(rows, cols, seed):
    rng = random.Random(seed)
    a = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
    basis = intmat.kernel_basis(a)
    k = len(basis[0]) if basis else 0
    for j in range(k):
        x = [basis[i][j] for i in range(cols)]
        assert all(v == 0 for v in intmat.matvec(a, x))
    if k:
        res = intmat.snf(basis)
        assert all(d == 1 for d in res.diagonal if d)


def test_solve_examples():
    assert intmat.solve([[2]], [4]) == [2]
    assert intmat.solve([[2]], [3]) is None
    assert intmat.solve([[1, 1], [0, 2]], [3, 4]) == [1, 2]


def test_solve_rational_but_not_integral():
    # x = 3/2 solves rationally, not integrally
    assert intmat.solve([[2]], [3]) is None
    assert intmat.solve([[2, 0], [0, 3]], [1, 3]) is None


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2 ** 31))
def test_solve_random_roundtrip(rows, cols, seed):
    rng = random.Random(seed)
    a = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
    x = [rng.randint(-5, 5) for _ in range(cols)]
    b = intmat.matvec(a, x)
    sol = intmat.solve(a, b)
    assert sol is not None
    assert intmat.matvec(a, sol) == b
