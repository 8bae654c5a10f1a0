"""Parser, printer, truth tables and formula enumeration."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from malgebra.errors import BudgetError, InputError
from malgebra.formulas import (
    And,
    Implies,
    Not,
    Or,
    ParseError,
    Slot,
    entails,
    enumerate_formulas,
    essential_function,
    evaluate,
    format_formula,
    is_tautology,
    minimal_formula_names,
    parse_formula,
    slots_of,
    truth_mask,
)


def test_implication_is_right_associative():
    assert parse_formula("a -> b -> c") == Implies(
        Slot("a"), Implies(Slot("b"), Slot("c"))
    )


def test_negation_and_parens():
    assert parse_formula("~(a & ~b)") == Not(And(Slot("a"), Not(Slot("b"))))


def test_and_binds_tighter_than_or():
    assert parse_formula("a | b & c") == Or(Slot("a"), And(Slot("b"), Slot("c")))


def test_not_binds_tightest():
    assert parse_formula("~a & b") == And(Not(Slot("a")), Slot("b"))
    assert parse_formula("~~a") == Not(Not(Slot("a")))


def test_left_associativity_of_and_or():
    assert parse_formula("a & b & c") == And(And(Slot("a"), Slot("b")), Slot("c"))
    assert parse_formula("a | b | c") == Or(Or(Slot("a"), Slot("b")), Slot("c"))


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_formula("a &")
    assert err.value.position == 3
    with pytest.raises(ParseError):
        parse_formula("(a")
    with pytest.raises(ParseError) as err:
        parse_formula("a $ b")
    assert "$" in str(err.value)
    with pytest.raises(ParseError):
        parse_formula("")
    with pytest.raises(ParseError):
        parse_formula("a b")


def test_whitespace_is_insignificant():
    assert parse_formula("a->b") == parse_formula("  a  ->  b ")


formula_strategy = st.recursive(
    st.sampled_from(["a", "b", "c", "x1"]).map(Slot),
    lambda children: st.one_of(
        children.map(Not),
        st.tuples(children, children).map(lambda p: And(*p)),
        st.tuples(children, children).map(lambda p: Or(*p)),
        st.tuples(children, children).map(lambda p: Implies(*p)),
    ),
    max_leaves=12,
)


@settings(max_examples=150, deadline=None)
@given(formula_strategy)
def test_printer_parser_round_trip(f):
    assert parse_formula(format_formula(f)) == f
    assert parse_formula(format_formula(f, compact=True)) == f


def test_tautology_verdicts():
    assert is_tautology("a -> (b -> a)").is_tautology
    assert is_tautology("(~b -> ~a) -> ((~b -> a) -> b)").is_tautology
    verdict = is_tautology("a -> b")
    assert not verdict.is_tautology
    assert verdict.falsifying == {"a": True, "b": False}
    assert evaluate(verdict.formula, verdict.falsifying) is False


def test_tautology_slot_cap():
    big = " | ".join(f"s{i}" for i in range(21))
    with pytest.raises(BudgetError):
        is_tautology(big)


def test_truth_mask_convention():
    # rows count assignments in binary, first slot is the most significant bit
    assert truth_mask(Slot("a"), ("a", "b")) == 0b1100
    assert truth_mask(Slot("b"), ("a", "b")) == 0b1010


def test_essential_function_drops_irrelevant_slots():
    f = parse_formula("(a & b) | (a & ~b)")
    assert essential_function(f) == (("a",), 0b10)
    assert essential_function(parse_formula("a | ~a")) == ((), 1)
    assert essential_function(parse_formula("a & ~a")) == ((), 0)
    g = parse_formula("a & b")
    assert essential_function(g) == (("a", "b"), 0b1000)


def test_entailment_oracle():
    a_and_b = essential_function(parse_formula("a & b"))
    a = essential_function(parse_formula("a"))
    a_or_b = essential_function(parse_formula("a | b"))
    c = essential_function(parse_formula("c"))
    top = essential_function(parse_formula("a -> a"))
    bot = essential_function(parse_formula("a & ~a"))
    assert entails(a_and_b, a)
    assert not entails(a, a_and_b)
    assert entails(a, a_or_b)
    assert entails(bot, c)
    assert entails(c, top)
    assert not entails(a, c)


def test_enumeration_counts_and_canonical_order():
    fs = enumerate_formulas(("a", "b"), max_depth=2, max_slots=2)
    texts = {format_formula(f, compact=True) for f in fs}
    assert texts == {
        "a", "b", "~a", "~b", "a&a", "a&b", "b&b", "a|a", "a|b", "b|b",
        "a->a", "a->b", "b->a", "b->b",
    }
    # commutative operands are sorted, so b&a never appears
    assert "b&a" not in texts


def test_enumeration_respects_slot_bound():
    fs = enumerate_formulas(("a", "b", "c"), max_depth=3, max_slots=2)
    assert all(len(slots_of(f)) <= 2 for f in fs)


def test_enumeration_budget():
    with pytest.raises(BudgetError):
        enumerate_formulas(tuple("abcdef"), max_depth=4, max_slots=6, cap=2000)
    with pytest.raises(InputError):
        enumerate_formulas(("a",), max_depth=0, max_slots=1)


def test_minimal_formula_names_cover_everything():
    names = minimal_formula_names(("p", "q"))
    assert len(names) == 16
    assert format_formula(names[0b1100], compact=True) == "p"
    assert format_formula(names[0b1010], compact=True) == "q"
    assert format_formula(names[0b1000], compact=True) == "p&q"
    assert format_formula(names[0b0011], compact=True) == "~p"
    # every mask really computes its own truth table
    for mask, formula in names.items():
        assert truth_mask(formula, ("p", "q")) == mask


def test_minimal_formula_names_three_atoms():
    names = minimal_formula_names(("p", "q", "r"))
    assert len(names) == 256
    for mask, formula in names.items():
        assert truth_mask(formula, ("p", "q", "r")) == mask


def _joint_masks(f, g):
    union = tuple(sorted(set(slots_of(f)) | set(slots_of(g))))
    return truth_mask(f, union), truth_mask(g, union), union


@settings(max_examples=120, deadline=None)
@given(formula_strategy, formula_strategy)
def test_essential_function_matches_joint_truth_tables(f, g):
    # equivalence and entailment through the reduced functions must agree
    # with the direct joint-table computation
    mf, mg, union = _joint_masks(f, g)
    fn_f, fn_g = essential_function(f), essential_function(g)
    assert (fn_f == fn_g) == (mf == mg)
    assert entails(fn_f, fn_g) == (mf & ~mg == 0)
