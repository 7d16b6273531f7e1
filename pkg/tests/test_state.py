import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mapent import override
from mapent.errors import (
    BudgetExceededError,
    DigitOutOfRangeError,
    IndexOutOfRangeError,
    InvalidBipartitionError,
    InvalidDimsError,
    InvalidPermutationError,
    LengthMismatchError,
    NotNormalizedError,
    StateParseError,
    ZeroVectorError,
)
from mapent.gallery import basis_state, random_state
from mapent.state import (
    Bipartition,
    DimsProfile,
    all_digits,
    format_state_text,
    index_decode,
    index_encode,
    make_state,
    parse_state_text,
    permute_parties,
    read_state,
    tensor_product,
    write_state,
)

R = 1 / math.sqrt(2)
dims_strategy = st.lists(st.integers(2, 4), min_size=1, max_size=5)


def test_bell_state_is_normalized():
    s = make_state((2, 2), [R, 0, 0, R])
    assert s.n == 2 and s.total_dim == 4
    assert np.linalg.norm(s.amplitudes) == pytest.approx(1.0, abs=1e-15)


def test_normalize_flag_rescales():
    s = make_state((2, 2), [1, 0, 0, 1], normalize=True)
    np.testing.assert_allclose(s.amplitudes, [R, 0, 0, R], atol=1e-15)


def test_make_state_errors():
    with pytest.raises(LengthMismatchError):
        make_state((2, 3), [1, 0, 0, 0, 0])
    with pytest.raises(ZeroVectorError):
        make_state((2,), [0, 0], normalize=True)
    with pytest.raises(NotNormalizedError):
        make_state((2, 2), [1, 0, 0, 1])
    with pytest.raises(InvalidDimsError):
        DimsProfile((2, 1))


def test_amplitudes_are_read_only():
    s = make_state((2,), [1, 0])
    with pytest.raises(ValueError):
        s.amplitudes[0] = 0


def test_budget_is_configurable():
    with override(max_total_dim=16):
        random_state((2, 2, 2, 2))
        with pytest.raises(BudgetExceededError):
            random_state((2, 2, 2, 2, 2))
    random_state((2, 2, 2, 2, 2))


@pytest.mark.parametrize(
    "dims, digits, index",
    [((2, 2, 2), (0, 0, 0), 0), ((2, 2, 2), (1, 0, 1), 5), ((2, 3), (1, 2), 5)],
)
def test_index_encode_examples(dims, digits, index):
    assert index_encode(digits, dims) == index


@pytest.mark.parametrize(
    "dims, index, digits",
    [((2, 2, 2), 0, (0, 0, 0)), ((2, 2, 2), 6, (1, 1, 0)), ((3, 3), 7, (2, 1))],
)
def test_index_decode_examples(dims, index, digits):
    assert index_decode(index, dims) == digits


def test_index_errors():
    with pytest.raises(DigitOutOfRangeError):
        index_encode((0, 3), (2, 3))
    with pytest.raises(IndexOutOfRangeError):
        index_decode(6, (2, 3))
    with pytest.raises(IndexOutOfRangeError):
        index_decode(-1, (2, 3))


@pytest.mark.parametrize("dims", [(2,) * 12, (4, 4, 4, 4, 4, 4), (3, 2, 4, 2, 3, 2, 2, 2), (5, 7, 3)])
def test_round_trip_exhaustive(dims):
    assert math.prod(dims) <= 4096
    for i in range(math.prod(dims)):
        assert index_encode(index_decode(i, dims), dims) == i


def test_all_digits_matches_decode():
    dims = (2, 3, 2)
    table = all_digits(dims)
    assert [tuple(r) for r in table] == [index_decode(i, dims) for i in range(12)]


def test_tensor_product_examples():
    zero = basis_state(2, 0)
    np.testing.assert_array_equal(tensor_product(zero, zero).amplitudes, [1, 0, 0, 0])
    plus = make_state((2,), [R, R])
    np.testing.assert_allclose(tensor_product(plus, plus).amplitudes, [0.5] * 4, atol=1e-15)


def test_bell_times_zero_matches_kron():
    bell = make_state((2, 2), [R, 0, 0, R])
    out = tensor_product(bell, basis_state(2, 0))
    assert out.dims == (2, 2, 2)
    expected = np.kron(bell.amplitudes, [1, 0])
    np.testing.assert_allclose(out.amplitudes, expected, atol=1e-15)
    assert np.flatnonzero(np.abs(out.amplitudes) > 0).tolist() == [0, 6]


def test_tensor_product_mixed_dims_matches_kron():
    a, b = random_state((2, 3), 1), random_state((3,), 2)
    out = tensor_product(a, b)
    assert out.dims == (2, 3, 3)
    np.testing.assert_allclose(out.amplitudes, np.kron(a.amplitudes, b.amplitudes), atol=1e-15)


def test_permute_identity_and_symmetric():
    s = random_state((2, 3, 2), 5)
    np.testing.assert_array_equal(permute_parties(s, (1, 2, 3)).amplitudes, s.amplitudes)
    bell = make_state((2, 2), [R, 0, 0, R])
    np.testing.assert_array_equal(permute_parties(bell, (2, 1)).amplitudes, bell.amplitudes)


def test_permute_swap_is_transpose_by_index_remap():
    s = random_state((2, 3), 7)
    out = permute_parties(s, (2, 1))
    assert out.dims == (3, 2)
    # explicit oracle: out[(s2, s1)] == in[(s1, s2)]
    for s1, s2 in itertools.product(range(2), range(3)):
        assert out.amplitudes[index_encode((s2, s1), (3, 2))] == s.amplitudes[index_encode((s1, s2), (2, 3))]
    np.testing.assert_array_equal(out.amplitudes.reshape(3, 2), s.amplitudes.reshape(2, 3).T)


def test_permute_general_by_index_remap():
    s = random_state((2, 3, 4), 3)
    perm = (3, 1, 2)
    out = permute_parties(s, perm)
    assert out.dims == (4, 2, 3)
    for dig in itertools.product(range(2), range(3), range(4)):
        new = tuple(dig[p - 1] for p in perm)
        assert out.amplitudes[index_encode(new, out.dims)] == s.amplitudes[index_encode(dig, s.dims)]


def test_invalid_permutation():
    s = random_state((2, 2), 0)
    with pytest.raises(InvalidPermutationError):
        permute_parties(s, (1, 1))
    with pytest.raises(InvalidPermutationError):
        permute_parties(s, (0, 1))


def test_bipartition_validation():
    b = Bipartition((3, 1), 4)
    assert b.rows == (1, 3) and b.cols == (2, 4) and b.l == 2
    assert b.complement().rows == (2, 4)
    for rows in [(), (1, 2, 3, 4), (1, 1), (5,)]:
        with pytest.raises(InvalidBipartitionError):
            Bipartition(rows, 4)


@settings(max_examples=60, deadline=None)
@given(dims=dims_strategy, data=st.data())
def test_permutation_inverse_is_identity(dims, data):
    n = len(dims)
    perm = data.draw(st.permutations(range(1, n + 1)))
    inv = [0] * n
    for j, p in enumerate(perm):
        inv[p - 1] = j + 1
    s = random_state(dims, data.draw(st.integers(0, 2**31)))
    back = permute_parties(permute_parties(s, perm), inv)
    assert back.dims == s.dims
    np.testing.assert_array_equal(back.amplitudes, s.amplitudes)


@settings(max_examples=60, deadline=None)
@given(d1=dims_strategy, d2=dims_strategy, seed=st.integers(0, 2**31))
def test_tensor_product_preserves_norm(d1, d2, seed):
    a, b = random_state(d1, seed), random_state(d2, seed + 1)
    out = tensor_product(a, b)
    assert abs(np.linalg.norm(out.amplitudes) - 1.0) < 1e-12
    assert out.dims == tuple(d1) + tuple(d2)


# --- file format --------------------------------------------------------------


def test_state_file_round_trip(tmp_path):
    s = random_state((2, 3), 11)
    path = tmp_path / "s.state"
    write_state(s, path)
    back = read_state(path)
    assert back.dims == s.dims
    np.testing.assert_array_equal(back.amplitudes, s.amplitudes)


def test_parse_with_comments():
    text = f"# Bell pair\ndims: 2 2\n{R} 0\n0 0\n# middle\n0 0\n{R} 0\n"
    s = parse_state_text(text)
    np.testing.assert_allclose(s.amplitudes, [R, 0, 0, R])


@pytest.mark.parametrize(
    "text",
    [
        "dims: 2 2\n1 0\n0 0\n0 0\n",  # too few
        "dims: 2\n1 0\n0 0\n0 0\n",  # too many
        "1 0\n0 0\n",  # no header
        "dims: 2\n1\n0 0\n",  # malformed line
        "dims: 2 x\n1 0\n0 0\n",
        "dims: 2\n1 0\n1 0\n",  # not normalized
    ],
)
def test_parse_rejects(text):
    with pytest.raises(StateParseError):
        parse_state_text(text)


def test_format_is_parseable():
    s = random_state((3,), 4)
    assert format_state_text(s).startswith("dims: 3\n")
    np.testing.assert_array_equal(parse_state_text(format_state_text(s)).amplitudes, s.amplitudes)
