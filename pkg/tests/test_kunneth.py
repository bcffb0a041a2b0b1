import pytest
from hypothesis import given, settings, strategies as st

from schubcon.kunneth_ring import (
    MAX_FACTORS,
    MultiProjClass,
    ProductSpace,
    encombrante_mp,
    hodge_check,
    is_bonne,
    proj_codim,
    proj_dim,
    projection_codims,
    support_admissible,
)

P1P1 = ProductSpace((1, 1))


def H(space, i):
    return MultiProjClass.hyperplane(space, i)


def test_space_basics():
    space = ProductSpace((2, 3, 1))
    assert space.dim == 6 and space.r == 3
    assert space.n_I((1, 3)) == 3
    assert list(space.subsets())[:4] == [(1,), (2,), (3,), (1, 2)]
    assert space.slab(1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert space.slab(6) == [(2, 3, 1)]
    assert space.slab(7) == []


@pytest.mark.parametrize("dims", [(), (0, 2), (-1,), (1,) * (MAX_FACTORS + 1)])
def test_space_validation(dims):
    with pytest.raises(ValueError):
        ProductSpace(dims)


def test_multiplication_truncates():
    h1 = H(P1P1, 1)
    assert h1 * h1 == MultiProjClass(P1P1, {})
    bideg = H(P1P1, 1) + H(P1P1, 2)
    assert bideg * bideg == MultiProjClass.monomial(P1P1, (1, 1), 2)
    assert bideg ** 3 == MultiProjClass(P1P1, {})


def test_term_validation():
    with pytest.raises(ValueError):
        MultiProjClass(P1P1, {(2, 0): 1})
    with pytest.raises(ValueError):
        MultiProjClass(P1P1, {(1,): 1})
    with pytest.raises(ValueError):
        H(P1P1, 1) + H(ProductSpace((1, 2)), 1)


def test_projection_codims_diagonal():
    # diagonal of P^2 x P^2 has class H1^2 + H1 H2 + H2^2
    space = ProductSpace((2, 2))
    diag = MultiProjClass(space, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert projection_codims(diag) == {(1,): 0, (2,): 0, (1, 2): 2}
    assert proj_dim(diag, (1,)) == 2 and proj_dim(diag, (1, 2)) == 2
    assert support_admissible(diag).holds
    assert encombrante_mp(diag)
    assert is_bonne(diag, 2)


def test_point_fibre_class():
    # P^1 x {pt} in P^1 x P^1
    fibre = H(P1P1, 2)
    assert proj_dim(fibre, (1,)) == 1 and proj_dim(fibre, (2,)) == 0
    assert not is_bonne(fibre, 1)
    assert not encombrante_mp(fibre)
    assert support_admissible(fibre).holds


def test_proj_codim_errors():
    with pytest.raises(ValueError):
        proj_codim(MultiProjClass(P1P1, {}), (1,))
    with pytest.raises(ValueError):
        proj_codim(H(P1P1, 1), ())
    with pytest.raises(ValueError):
        proj_codim(H(P1P1, 1), (3,))


def test_support_with_hole_is_not_admissible():
    space = ProductSpace((2, 2))
    holed = MultiProjClass(space, {(2, 0): 1, (0, 2): 1})
    cert = support_admissible(holed)
    assert not cert.holds
    assert {"missing": [1, 1]} in cert.witnesses


def test_hodge_inequalities():
    space = ProductSpace((2, 2))
    assert hodge_check(MultiProjClass(space, {(2, 0): 1, (1, 1): 2, (0, 2): 4})).holds
    bad = hodge_check(MultiProjClass(space, {(2, 0): 1, (1, 1): 1, (0, 2): 4}))
    assert not bad.holds
    assert bad.witnesses[0]["m"] == [1, 1]
    hole = hodge_check(MultiProjClass(space, {(2, 0): 1, (0, 2): 1}))
    assert not hole.holds
    with pytest.raises(ValueError):
        hodge_check(MultiProjClass(space, {(2, 0): -1}))


def test_bonne_mismatch_raises():
    with pytest.raises(ValueError):
        is_bonne(H(P1P1, 1), 0)


@st.composite
def product_class(draw):
    dims = tuple(draw(st.lists(st.integers(1, 3), min_size=1, max_size=3)))
    space = ProductSpace(dims)
    k = draw(st.integers(0, space.dim))
    slab = space.slab(k)
    support = draw(st.sets(st.sampled_from(slab), min_size=1))
    return MultiProjClass(space, {m: draw(st.integers(1, 5)) for m in sorted(support)})


@settings(max_examples=80, deadline=None)
@given(product_class())
def test_admissible_supports_contain_the_full_slab_case(c):
    full = MultiProjClass(c.space, {m: 1 for m in c.space.slab(c.codim())})
    assert encombrante_mp(full)
    assert support_admissible(full).holds
    # projection dimensions never exceed the class dimension
    dim = c.space.dim - c.codim()
    for I in c.space.subsets():
        assert 0 <= proj_dim(c, I) <= min(dim, c.space.n_I(I))


@settings(max_examples=80, deadline=None)
@given(product_class(), product_class())
def test_product_is_commutative(a, b):
    if a.space != b.space:
        return
    assert a * b == b * a


def test_admissible_supports_three_factors_are_convex():
    space = ProductSpace((1, 2, 1))
    for k in range(space.dim + 1):
        slab = space.slab(k)
        for mask in range(1, 1 << len(slab)):
            support = {m for i, m in enumerate(slab) if mask >> i & 1}
            if not support_admissible(MultiProjClass(space, {m: 1 for m in support})).holds:
                continue
            for p in support:
                for q in support:
                    mid = [x + y for x, y in zip(p, q)]
                    if all(v % 2 == 0 for v in mid):
                        assert tuple(v // 2 for v in mid) in support
