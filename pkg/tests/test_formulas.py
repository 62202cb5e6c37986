import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from proofburst import (
    All,
    And,
    Atom,
    Ex,
    Fun,
    Imp,
    Neg,
    Or,
    Var,
    alpha_eq,
    format_formula,
    free_vars,
    substitute,
)
from textparse import parse_formula

P_x = Atom("P", (Var("x"),))
P_y = Atom("P", (Var("y"),))
c = Fun("c")


class TestAlphaEq:
    def test_bound_renaming(self):
        assert alpha_eq(All("x", P_x), All("y", P_y))

    def test_free_variables_matter(self):
        assert not alpha_eq(P_x, P_y)

    def test_swapped_nested_binders(self):
        # forall x. exists y. R(x,y)  ==  forall y. exists x. R(y,x)
        a = All("x", Ex("y", Atom("R", (Var("x"), Var("y")))))
        b = All("y", Ex("x", Atom("R", (Var("y"), Var("x")))))
        assert alpha_eq(a, b)

    def test_binder_kind_matters(self):
        assert not alpha_eq(All("x", P_x), Ex("x", P_x))

    def test_bound_vs_free_mismatch(self):
        # x bound on one side, same-named free on the other
        assert not alpha_eq(All("x", P_x), All("y", P_x))

    def test_var_is_not_constant(self):
        assert not alpha_eq(Atom("P", (Var("c"),)), Atom("P", (Fun("c"),)))


# random formula strategy, depth-bounded
_names = st.sampled_from(["x", "y", "z"])
_preds = st.sampled_from(["P", "Q", "R"])


def _formulas(depth: int):
    if depth <= 0:
        return st.builds(Atom, _preds, st.tuples(st.builds(Var, _names)))
    sub = _formulas(depth - 1)
    return st.one_of(
        st.builds(Atom, _preds, st.tuples(st.builds(Var, _names))),
        st.builds(Neg, sub),
        st.builds(And, sub, sub),
        st.builds(Or, sub, sub),
        st.builds(Imp, sub, sub),
        st.builds(All, _names, sub),
        st.builds(Ex, _names, sub),
    )


formulas = _formulas(4)


class TestAlphaEqIsEquivalence:
    @given(formulas)
    @settings(max_examples=150)
    def test_reflexive(self, f):
        assert alpha_eq(f, f)

    @given(formulas, formulas)
    @settings(max_examples=150)
    def test_symmetric(self, f, g):
        assert alpha_eq(f, g) == alpha_eq(g, f)

    @given(formulas, st.sampled_from(["u", "v"]))
    @settings(max_examples=150)
    def test_invariant_under_bound_rename(self, f, fresh):
        def rename_binders(g):
            match g:
                case All(v, body):
                    return All(fresh, substitute(rename_binders(body), v, Var(fresh)))
                case Ex(v, body):
                    return Ex(fresh, substitute(rename_binders(body), v, Var(fresh)))
                case Neg(s):
                    return Neg(rename_binders(s))
                case And(l, r):
                    return And(rename_binders(l), rename_binders(r))
                case Or(l, r):
                    return Or(rename_binders(l), rename_binders(r))
                case Imp(l, r):
                    return Imp(rename_binders(l), rename_binders(r))
                case _:
                    return g

        assert alpha_eq(f, rename_binders(f))


class TestSubstitute:
    def test_plain(self):
        assert substitute(P_x, "x", c) == Atom("P", (c,))

    def test_bound_occurrence_untouched(self):
        assert substitute(All("x", P_x), "x", c) == All("x", P_x)

    def test_capture_avoided(self):
        # (exists y. R(x,y))[x := f(y)] must rename the binder
        f = Ex("y", Atom("R", (Var("x"), Var("y"))))
        got = substitute(f, "x", Fun("f", (Var("y"),)))
        expected = Ex("y'", Atom("R", (Fun("f", (Var("y"),)), Var("y'"))))
        assert alpha_eq(got, expected)
        # the free y of the substituted term must remain free
        assert "y" in free_vars(got)

    @given(formulas, _names)
    @settings(max_examples=150)
    def test_noop_when_not_free(self, f, v):
        if v not in free_vars(f):
            assert substitute(f, v, c) == f

    def test_nested_capture_chain(self):
        # [x := y] under a forall y: binder renamed, inner atom follows
        f = All("y", Or(P_x, P_y))
        got = substitute(f, "x", Var("y"))
        assert alpha_eq(got, All("z", Or(P_y, Atom("P", (Var("z"),)))))


class TestPrinter:
    @pytest.mark.parametrize(
        "f,expected",
        [
            (Imp(Atom("A"), Imp(Atom("B"), Atom("A"))), "A → B → A"),
            (Imp(Imp(Atom("A"), Atom("B")), Atom("A")), "(A → B) → A"),
            (And(Atom("A"), Or(Atom("B"), Atom("C"))), "A ∧ (B ∨ C)"),
            (Or(And(Atom("A"), Atom("B")), Atom("C")), "A ∧ B ∨ C"),
            (Neg(Neg(Atom("A"))), "¬¬A"),
            (Neg(And(Atom("A"), Atom("B"))), "¬(A ∧ B)"),
            (All("x", Imp(P_x, P_x)), "∀x.P(x) → P(x)"),
            (And(All("x", P_x), Atom("B")), "(∀x.P(x)) ∧ B"),
            (Neg(Atom("=", (Fun("a"), Fun("b")))), "¬(a = b)"),
            (And(Atom("=", (Fun("a"), Fun("b"))), Atom("C")), "a = b ∧ C"),
        ],
    )
    def test_minimal_parens_unicode(self, f, expected):
        assert format_formula(f) == expected

    def test_ascii(self):
        f = All("x", Imp(P_x, Ex("y", Neg(P_y))))
        assert format_formula(f, "ascii") == "!x.P(x) -> ?y.~P(y)"

    @given(formulas)
    @settings(max_examples=300)
    def test_roundtrip_unicode(self, f):
        text = format_formula(f)
        assert alpha_eq(parse_formula(text, free_vars(f)), f)

    @given(formulas)
    @settings(max_examples=200)
    def test_roundtrip_ascii(self, f):
        text = format_formula(f, "ascii")
        assert alpha_eq(parse_formula(text, free_vars(f)), f)
