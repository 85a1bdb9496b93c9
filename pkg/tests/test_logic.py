import pytest
from hypothesis import given, strategies as st

from condrev.logic import (
    Alphabet,
    And,
    Conditional,
    LogicError,
    Not,
    Or,
    ParseError,
    TRUE,
    UnknownVariableError,
    Var,
    eval_formula,
    formula_from_models,
    model_set_names,
    models_of,
    parse_conditional,
    parse_formula,
)

AB = Alphabet(("x", "y"))
AB3 = Alphabet(("x", "y", "z"))


def test_alphabet_basics():
    assert AB.n == 2
    assert AB.size == 4
    assert AB.universe == 0b1111
    assert AB.model_name(0) == "-x -y"
    assert AB.model_name(3) == "x y"
    assert AB.parse_model("x -y") == 1
    assert AB.parse_model("-y x") == 1


def test_alphabet_validation():
    with pytest.raises(LogicError):
        Alphabet(())
    with pytest.raises(LogicError):
        Alphabet(("x", "x"))
    with pytest.raises(LogicError):
        Alphabet(("3bad",))
    with pytest.raises(LogicError):
        Alphabet(tuple(f"v{i}" for i in range(11)))


def test_parse_model_errors():
    with pytest.raises(LogicError):
        AB.parse_model("x")  # y unassigned
    with pytest.raises(LogicError):
        AB.parse_model("x -x")
    with pytest.raises(UnknownVariableError):
        AB.parse_model("x -q")


@pytest.mark.parametrize(
    "text,mask",
    [
        ("x", 0b1010),
        ("!x", 0b0101),
        ("x & y", 0b1000),
        ("x | y", 0b1110),
        ("x -> y", 0b1101),
        ("true", 0b1111),
        ("false", 0b0000),
        ("!x & !y", 0b0001),
        ("x -> y -> x", 0b1111),  # right-associative
        ("!(x | y)", 0b0001),
    ],
)
def test_models_of(text, mask):
    assert models_of(parse_formula(text, AB), AB) == mask


def test_precedence():
    # ! binds tighter than &, & tighter than |, | tighter than ->
    f = parse_formula("!x & y | y -> x", AB)
    assert models_of(f, AB) == models_of(
        parse_formula("((( !x) & y) | y) -> x", AB), AB
    )


def test_parse_errors_report_position():
    with pytest.raises(ParseError) as exc:
        parse_formula("x & ", AB)
    assert exc.value.position is not None
    with pytest.raises(ParseError):
        parse_formula("x y", AB)
    with pytest.raises(UnknownVariableError):
        parse_formula("x & q", AB)


def test_parse_conditional_and_sugar():
    c = parse_conditional("x > y", AB)
    assert models_of(c.premise, AB) == 0b1010
    assert models_of(c.conclusion, AB) == 0b1100
    bare = parse_conditional("y", AB)
    assert bare.premise == TRUE
    assert str(bare) == "true > y"


def test_formula_str_round_trip():
    for text in ("x & !y | y", "x -> (y | z) & x", "!(x & y)"):
        f = parse_formula(text, AB3)
        assert models_of(parse_formula(str(f), AB3), AB3) == models_of(f, AB3)


def test_model_set_names():
    assert model_set_names(0b1001, AB) == ["-x -y", "x y"]
    assert model_set_names(0, AB) == []


formulas = st.recursive(
    st.sampled_from([Var("x"), Var("y"), Var("z"), TRUE]),
    lambda sub: st.one_of(
        sub.map(Not),
        st.tuples(sub, sub).map(lambda t: And(*t)),
        st.tuples(sub, sub).map(lambda t: Or(*t)),
    ),
    max_leaves=8,
)


@given(formulas)
def test_models_of_agrees_with_eval(f):
    mask = models_of(f, AB3)
    for model in AB3.models():
        assert bool(mask >> model.index & 1) == eval_formula(f, model)


@given(formulas)
def test_negation_complements(f):
    assert models_of(Not(f), AB3) == AB3.universe & ~models_of(f, AB3)


@given(formulas, formulas)
def test_connectives_are_set_operations(f, g):
    mf, mg = models_of(f, AB3), models_of(g, AB3)
    assert models_of(And(f, g), AB3) == mf & mg
    assert models_of(Or(f, g), AB3) == mf | mg


@given(st.integers(min_value=0, max_value=255))
def test_formula_from_models_round_trip(mask):
    assert models_of(formula_from_models(mask, AB3), AB3) == mask


def test_conditional_str():
    c = Conditional(parse_formula("x", AB), parse_formula("y", AB))
    assert str(c) == "x > y"
