import pytest
from hypothesis import given, strategies as st

from condrev.logic import Alphabet, parse_conditional, parse_formula
from condrev.preorder import Order, flat, positive, satisfies
from condrev.revision import (
    OPERATOR_KINDS,
    UnsatisfiableConditionalError,
    contingent_context,
    dow,
    lex,
    lex_prop,
    nat,
    nat_prop,
    revise,
    unc,
)

AB = Alphabet(("x", "y"))


def c_x():
    return positive(AB, parse_formula("x", AB))


def cond(text, ab=AB):
    return parse_conditional(text, ab)


# masks over {x, y}: -x-y=1, x-y=2, -xy=4, xy=8


def test_nat_prop():
    c = nat_prop(c_x(), parse_formula("y", AB))
    assert c.classes == (0b1000, 0b0010, 0b0101)


def test_nat_conditional_and_unconditional_agree():
    y = parse_formula("y", AB)
    assert nat(c_x(), cond("true > y")) == nat_prop(c_x(), y)
    assert nat(c_x(), cond("x > y")) == nat_prop(c_x(), y)


def test_unc():
    assert unc(c_x(), cond("true > y")).classes == (0b1000, 0b0100, 0b0010, 0b0001)
    assert unc(c_x(), cond("x > y")).classes == (0b1000, 0b0010, 0b0101)


def test_lex():
    assert lex_prop(c_x(), parse_formula("x -> y", AB)).classes == (
        0b1000,
        0b0101,
        0b0010,
    )
    assert lex(c_x(), cond("x > y")) == lex_prop(c_x(), parse_formula("x -> y", AB))


def test_dow():
    fl = flat(AB)
    assert dow(fl, cond("x > y")).classes == (0b1000, 0b0111)
    assert dow(fl, cond("true > y")).classes == (0b1100, 0b0011)
    # no falsifier anywhere: identity
    assert dow(c_x(), cond("true > x")) == c_x()


def test_success():
    for kind in OPERATOR_KINDS:
        for text in ("x > y", "true > y", "!x > !y"):
            assert satisfies(revise(c_x(), kind, cond(text)), cond(text))


def test_satisfying_order_unchanged():
    c = c_x()
    assert nat(c, cond("true > x")) == c
    assert dow(c, cond("true > x")) == c


def test_vacuous_premise_is_identity():
    for kind in OPERATOR_KINDS:
        assert revise(c_x(), kind, cond("x & !x > y")) == c_x()


def test_unsatisfiable_conditional_raises():
    for kind in ("nat", "dow", "unc"):
        with pytest.raises(UnsatisfiableConditionalError):
            revise(c_x(), kind, cond("x > !x"))
    # lex revises by the material conditional x -> !x = !x, which is satisfiable
    assert lex(c_x(), cond("x > !x")).classes == (0b0101, 0b1010)
    # ...and raises only when even that is contradictory
    from condrev.revision import InconsistentFormulaError

    with pytest.raises(InconsistentFormulaError):
        lex_prop(c_x(), parse_formula("x & !x", AB))


def test_contingent_context():
    from condrev.logic import Conditional, models_of

    c = c_x()
    q = contingent_context(c, cond("x > y"))
    # P = x, min(PA) = {xy} in the top class, so Q = x & (top class) = x
    assert models_of(q, AB) == 0b1010
    assert nat(c, cond("x > y")) == unc(c, Conditional(q, parse_formula("y", AB)))


def test_revise_dispatch_rejects_unknown_kind():
    from condrev.revision import RevisionError

    with pytest.raises(RevisionError):
        revise(c_x(), "bogus", cond("x > y"))


AB3 = Alphabet(("x", "y", "z"))


def orders_st(alphabet):
    size = alphabet.size

    def build(levels):
        k = max(levels) + 1
        raw = [0] * k
        for i, lv in enumerate(levels):
            raw[lv] |= 1 << i
        raw = [m for m in raw if m]
        return Order(alphabet, raw)

    return st.lists(
        st.integers(min_value=0, max_value=size - 1), min_size=size, max_size=size
    ).map(build)


conds = st.tuples(st.integers(1, 255), st.integers(0, 255)).map(
    lambda t: (t[0], t[0] & t[1])
)


@given(orders_st(AB3), conds)
def test_operators_permute_no_models(c, pm):
    from condrev.revision import revise_masks

    p, pa = pm
    if pa == 0:
        return
    for kind in OPERATOR_KINDS:
        revised = revise_masks(c, kind, p, pa)
        union = 0
        for cls in revised.classes:
            assert cls & union == 0
            union |= cls
        assert union == AB3.universe


@given(orders_st(AB3), conds)
def test_nat_reduces_to_unc_via_context(c, pm):
    from condrev.revision import contingent_context_masks, nat_masks, unc_masks

    p, pa = pm
    if pa == 0:
        return
    q = contingent_context_masks(c, p, pa)
    assert nat_masks(c, p, pa) == unc_masks(c, q, pa)
