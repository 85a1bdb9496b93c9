import json

import pytest
from hypothesis import given, strategies as st

from condrev.logic import Alphabet, parse_conditional, parse_formula
from condrev.preorder import (
    CoverageError,
    EmptySetError,
    FALSIFIES,
    INDIFFERENT,
    Order,
    OrderError,
    OverlapError,
    VERIFIES,
    classify,
    conditional_masks,
    downset,
    flat,
    max_idx,
    min_idx,
    min_models,
    normalize,
    order_from_json,
    order_to_json,
    positive,
    render_order,
    render_order_json,
    satisfies,
    satisfies_masks,
)

AB = Alphabet(("x", "y"))
AB1 = Alphabet(("x",))


def c_x():
    """Two classes: x-models on top."""
    return positive(AB, parse_formula("x", AB))


def test_flat_and_positive():
    assert flat(AB).classes == (0b1111,)
    assert c_x().classes == (0b1010, 0b0101)
    # tautology and contradiction both give the flat order
    assert positive(AB, parse_formula("true", AB)) == flat(AB)
    assert positive(AB, parse_formula("x & !x", AB)) == flat(AB)


def test_order_validation():
    with pytest.raises(OrderError):
        Order(AB, (0b1010, 0, 0b0101))
    with pytest.raises(OverlapError):
        Order(AB, (0b1010, 0b1101))
    with pytest.raises(CoverageError):
        Order(AB, (0b1010,))


def test_normalize_drops_empty_classes():
    assert normalize(AB, [0, 0b1010, 0, 0b0101, 0]).classes == (0b1010, 0b0101)
    assert normalize(AB, [0b1010, 0b0101]) == normalize(AB, [0, 0b1010, 0b0101])


def test_levels_and_relation():
    c = c_x()
    assert c.levels == (1, 0, 1, 0)
    assert c.leq(1, 0) and not c.leq(0, 1)
    assert c.less(3, 2)
    assert (1, 0) in c.relation and (0, 1) not in c.relation
    assert (0, 0) not in c.relation  # reflexive pairs excluded


def test_relation_is_connected_and_transitive():
    c = Order(AB, (0b1000, 0b0110, 0b0001))
    for i in range(4):
        for j in range(4):
            if i != j:
                assert (i, j) in c.relation or (j, i) in c.relation
            for k in range(4):
                if len({i, j, k}) == 3:
                    if (i, j) in c.relation and (j, k) in c.relation:
                        assert (i, k) in c.relation


def test_min_max_downset():
    c = Order(AB, (0b1000, 0b0110, 0b0001))
    assert min_idx(c, 0b0111) == 1
    assert max_idx(c, 0b0111) == 2
    assert min_models(c, 0b0111) == 0b0110
    assert downset(c, 0b0001) == 0b1111
    assert downset(c, 0b1000) == 0b1000
    with pytest.raises(EmptySetError):
        min_idx(c, 0)
    with pytest.raises(EmptySetError):
        downset(c, 0)


def test_classify():
    cond = parse_conditional("x > y", AB)
    assert classify(AB.models()[3], cond) == VERIFIES
    assert classify(AB.models()[1], cond) == FALSIFIES
    assert classify(AB.models()[0], cond) == INDIFFERENT


def test_satisfies():
    c = c_x()
    assert satisfies(c, parse_conditional("true > x", AB))
    assert not satisfies(c, parse_conditional("true > y", AB))
    assert not satisfies(c, parse_conditional("x > y", AB))
    # vacuous premise is satisfied by convention
    assert satisfies(c, parse_conditional("x & !x > y", AB))
    p, a = conditional_masks(parse_conditional("x > y", AB), AB)
    assert satisfies_masks(c, p, p & a) == satisfies(c, parse_conditional("x > y", AB))


def test_satisfies_unsatisfiable_conditional():
    # consistent premise, inconsistent with the conclusion: never satisfied
    assert not satisfies(c_x(), parse_conditional("x > !x", AB))


def test_render_order():
    assert render_order(flat(AB1)) == "-x x"
    assert render_order(c_x()) == "x -y x y\n-x -y -x y"
    assert render_order(Order(AB, (0b1000, 0b0110, 0b0001))) == (
        "x y\nx -y -x y\n-x -y"
    )


def test_json_round_trip():
    c = c_x()
    data = order_to_json(c)
    assert data == {"classes": [["x -y", "x y"], ["-x -y", "-x y"]]}
    assert order_from_json(data, AB) == c
    assert order_from_json(render_order_json(c), AB) == c
    assert json.loads(render_order_json(c)) == data


@given(st.permutations(range(4)), st.integers(min_value=0, max_value=2))
def test_normalize_idempotent(perm, splits):
    raw = []
    for i in perm:
        raw.append(1 << i)
    c = normalize(AB, raw)
    assert normalize(AB, c.classes) == c


def orders_st(alphabet):
    size = alphabet.size

    def build(levels):
        k = max(levels) + 1
        raw = [0] * k
        for i, lv in enumerate(levels):
            raw[lv] |= 1 << i
        return normalize(alphabet, raw)

    return st.lists(
        st.integers(min_value=0, max_value=size - 1), min_size=size, max_size=size
    ).map(build)


@given(orders_st(AB), st.integers(0, 15), st.integers(0, 15))
def test_satisfies_matches_minimal_model_check(c, p, a):
    pa = p & a
    expected = p == 0 or (pa != 0 and min_models(c, p) & ~pa == 0)
    assert satisfies_masks(c, p, pa) == expected
