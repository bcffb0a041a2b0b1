import pytest
from hypothesis import given, strategies as st

from conftest import small_boxes
from schubcon.partitions import (
    Box,
    BoxedPartition,
    complement,
    conjugate,
    delta,
    delta_j,
    delta_j_alternate,
    descent_set,
    enumerate_partitions,
    leq,
    lt,
    mu_j,
    pair_condition_A,
    pair_condition_B,
    parse_box,
    parse_partition,
)


@st.composite
def boxed(draw, max_d=5, max_w=6):
    box = Box(draw(st.integers(0, max_d)), draw(st.integers(1, max_w)))
    parts = sorted(draw(st.lists(st.integers(0, box.w), min_size=box.rows, max_size=box.rows)), reverse=True)
    return BoxedPartition(tuple(parts), box)


@st.composite
def boxed_pair(draw):
    lam = draw(boxed())
    parts = sorted(draw(st.lists(st.integers(0, lam.box.w), min_size=lam.box.rows, max_size=lam.box.rows)), reverse=True)
    return lam, BoxedPartition(tuple(parts), lam.box)


def test_parse_box_and_padding():
    box = parse_box("d=3,n=9")
    assert (box.d, box.w, box.n, box.cells) == (3, 6, 9, 24)
    assert parse_box("n=9, d=3") == box
    assert parse_partition("5,2", box).parts == (5, 2, 0, 0)
    assert parse_partition("", box) == box.empty()
    assert parse_partition("(5,2,2,1)", box).parts == (5, 2, 2, 1)


@pytest.mark.parametrize("text", ["d=3", "d=3,n=x", "d=3,n=2", "k=1,n=3", "d3,n9"])
def test_parse_box_rejects(text):
    with pytest.raises(ValueError):
        parse_box(text)


@pytest.mark.parametrize("text", ["7", "1,2", "1,1,1,1,1", "a,b", "-1"])
def test_parse_partition_rejects(text):
    with pytest.raises(ValueError):
        parse_partition(text, Box(3, 6))


def test_complement_and_conjugate_examples():
    box = Box(3, 4)
    assert complement(BoxedPartition((4, 3, 2, 2), box)).parts == (2, 2, 1, 0)
    assert conjugate(BoxedPartition((4, 3, 2, 2), box)).parts == (4, 4, 2, 1)
    wide = Box(3, 5)
    assert conjugate(BoxedPartition((4, 3, 2, 2), wide)).parts == (4, 4, 2, 1, 0)
    assert conjugate(box.empty()) == box.transpose().empty()


def test_orders():
    box = Box(1, 3)
    a, b = BoxedPartition((1, 0), box), BoxedPartition((2, 1), box)
    assert leq(a, b) and lt(a, b) and not lt(a, a) and leq(a, a)
    with pytest.raises(ValueError):
        leq(a, BoxedPartition((1, 0), Box(1, 4)))


def test_pair_conditions_examples():
    box = Box(1, 2)
    p = lambda *x: BoxedPartition(x, box)
    assert pair_condition_A(p(1, 0), p(0, 0))
    assert not pair_condition_B(p(2, 0), p(2, 0))
    assert pair_condition_B(p(1, 0), p(1, 0))
    wide = Box(1, 4)
    assert not pair_condition_A(BoxedPartition((2, 1), wide), BoxedPartition((2, 2), wide))
    assert not pair_condition_B(BoxedPartition((2, 1), wide), BoxedPartition((2, 2), wide))


@given(boxed())
def test_involutions(lam):
    assert complement(complement(lam)) == lam
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(complement(lam)) == complement(conjugate(lam))
    assert lam.weight + complement(lam).weight == lam.box.cells
    assert conjugate(lam).weight == lam.weight


@given(boxed_pair())
def test_pair_condition_symmetries(pair):
    lam, mu = pair
    assert pair_condition_A(lam, mu) == lt(lam, complement(mu)) == pair_condition_A(mu, lam)
    assert pair_condition_B(lam, mu) == pair_condition_A(conjugate(lam), conjugate(mu))


def test_enumeration_counts_and_order():
    from math import comb

    for box in small_boxes():
        parts = enumerate_partitions(box)
        assert len(parts) == comb(box.rows + box.w, box.w)
        assert [p.parts for p in parts] == sorted((p.parts for p in parts), reverse=True)
        for k in range(box.cells + 1):
            assert all(p.weight == k for p in enumerate_partitions(box, k))
        assert sum(len(enumerate_partitions(box, k)) for k in range(box.cells + 1)) == len(parts)


def test_mu_j_examples():
    mu = BoxedPartition((5, 2, 2, 1), Box(3, 6))
    assert descent_set(mu) == {0, 2, 3}
    assert mu_j(mu, 0).parts == (6, 2, 2, 1)
    assert mu_j(mu, 2).parts == (3, 3, 3, 1)
    assert mu_j(mu, 3).parts == (2, 2, 2, 2)
    with pytest.raises(ValueError):
        mu_j(mu, 1)
    with pytest.raises(ValueError):
        mu_j(Box(1, 2).full(), 1)


def test_mu_j_is_not_monotone():
    # the enlargement raises row j but may shorten the rows above it
    mu = BoxedPartition((5, 2, 2, 1), Box(3, 6))
    enlarged = mu_j(mu, 3)
    assert not leq(mu, enlarged)
    assert enlarged.weight < mu.weight


@given(boxed())
def test_mu_j_valid_and_grows_one_row(mu):
    box = mu.box
    if mu[box.d] >= box.w:
        return
    for j in descent_set(mu):
        enlarged = mu_j(mu, j)
        assert enlarged.box == box
        row = j if mu[j] < box.w else j + 1
        assert enlarged[row] > mu[row]
        assert all(enlarged[i] == mu[i] for i in range(j + 2, box.rows))


def test_delta_examples():
    box = Box(3, 6)
    mu = BoxedPartition((5, 2, 2, 1), box)
    assert [delta_j(mu, j) for j in sorted(descent_set(mu))] == [0, -1, -3]
    assert delta(mu) == 0
    m = BoxedPartition((3, 3, 1, 1), Box(3, 4))
    assert delta(m) == 1
    assert delta(conjugate(m)) == 1
    big = BoxedPartition.padded((3, 3, 1, 1), Box(4, 4))
    assert (delta(big), delta(conjugate(big))) == (1, 0)


@given(boxed())
def test_delta_alternate_and_range(mu):
    box = mu.box
    if mu[box.d] >= box.w:
        with pytest.raises(ValueError):
            delta(mu)
        return
    for j in descent_set(mu):
        if mu[j] < box.w:
            assert delta_j(mu, j) == delta_j_alternate(mu, j)
    assert 0 <= delta(mu) <= max(box.d, box.w - 1)


def test_delta_attains_every_value():
    for box in small_boxes():
        if box.d < 1 or box.w < 2:
            continue
        values = {delta(mu) for mu in enumerate_partitions(box) if mu[box.d] < box.w}
        assert values == set(range(max(box.d, box.w - 1) + 1)), box


def test_box_validation():
    with pytest.raises(ValueError):
        Box(-1, 2)
    with pytest.raises(ValueError):
        Box(2, 0).transpose()
    with pytest.raises(ValueError):
        BoxedPartition((1, 2), Box(1, 3))
    with pytest.raises(ValueError):
        BoxedPartition((4, 0), Box(1, 3))
    with pytest.raises(ValueError):
        BoxedPartition((1,), Box(1, 3))
