from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qrank.cyclotomic import cyclotomic_field
from qrank.lambert import E_series, P_series, lambert_t
from qrank.qexpr import (Add, Call, Div, EvalCtx, IntLit, Mul, Pow, Q,
                         QExprEvalError, QExprSyntaxError, RatLit, Sub, Zeta,
                         evaluate, parse, render)
from qrank.rankgen import ru_at_root, u_series


def strip(node):
    """Positions aside, the structural content of an AST node."""
    if isinstance(node, (Add, Sub, Mul, Div)):
        return (type(node).__name__, strip(node.left), strip(node.right))
    if isinstance(node, Pow):
        return ("Pow", strip(node.base), node.exponent)
    if isinstance(node, Call):
        return ("Call", node.name, node.args)
    if isinstance(node, IntLit):
        return ("Int", node.value)
    if isinstance(node, RatLit):
        return ("Rat", node.num, node.den)
    if isinstance(node, Q):
        return ("q",)
    if isinstance(node, Zeta):
        return ("zeta", node.power)
    raise TypeError(node)


def test_parse_example_expression():
    ast = parse("q*E(25)/P(1)^2")
    assert strip(ast) == ("Div", ("Mul", ("q",), ("Call", "E", (25,))),
                          ("Pow", ("Call", "P", (1,)), 2))


def test_parse_rhs_minus_ru():
    ast = parse("RHS(RU5) - RU(5)")
    assert strip(ast) == ("Sub", ("Call", "RHS", ("RU5",)), ("Call", "RU", (5,)))


def test_parse_error_positions():
    with pytest.raises(QExprSyntaxError) as info:
        parse("P(")
    assert info.value.pos == 2
    with pytest.raises(QExprSyntaxError):
        parse("frob(3)")
    with pytest.raises(QExprSyntaxError):
        parse("E(1,2)")
    with pytest.raises(QExprSyntaxError):
        parse("q +")
    with pytest.raises(QExprSyntaxError):
        parse("q $ 2")
    with pytest.raises(QExprSyntaxError):
        parse("3/0")


def test_rational_literal_lexing():
    assert strip(parse("3/4")) == ("Rat", 3, 4)
    assert strip(parse("3 / 4")) == ("Div", ("Int", 3), ("Int", 4))
    ctx = EvalCtx(ell=5, prec=10)
    a = evaluate("3/4", ctx)
    b = evaluate("3 / 4", ctx)
    assert a.equal_upto(b) is None
    assert a.coefficient(0).rational_value() == Fraction(3, 4)


def test_negative_arguments_parse():
    ast = parse("T(-2,1,5)")
    assert strip(ast) == ("Call", "T", (-2, 1, 5))


def test_eval_example_rhs_term():
    ctx = EvalCtx(ell=5, prec=30)
    got = evaluate("q*E(25)/P(1)^2", ctx)
    p1 = P_series(1, 5, 30)
    expected = (E_series(25, 30) * (p1 * p1).inverse()).shift(1)
    assert got.equal_upto(expected, 30) is None


def test_eval_u_coefficients():
    ctx = EvalCtx(ell=5, prec=11)
    got = evaluate("U()", ctx)
    u = u_series(11)
    for e in range(1, 11):
        assert got.coefficient(e) == u.coefficient(e)


def test_eval_algebraic_noop():
    ctx = EvalCtx(ell=5, prec=25)
    lhs = evaluate("T(2,1,5) + q^10 * T(2,1,5)*0", ctx)
    rhs = evaluate("T(2,1,5)", ctx)
    assert lhs.equal_upto(rhs) is None


def test_eval_identity_residual_is_zero():
    ctx = EvalCtx(ell=5, prec=40)
    residual = evaluate("RHS(RU5) - RU(5)", ctx)
    assert residual.first_nonzero_below(40) is None


def test_eval_zeta_and_division():
    ctx = EvalCtx(ell=7, prec=12)
    s = evaluate("zeta^3 * q^2 / (1 - q)", ctx)
    f7 = cyclotomic_field(7)
    for e in range(2, 12):
        assert s.coefficient(e) == f7.zeta(3)
    assert s.coefficient(1).is_zero()


def test_eval_poch_and_jac():
    ctx = EvalCtx(ell=5, prec=27)
    got = evaluate("jac(0, 5, 25)", ctx)
    direct = P_series(1, 5, 27)
    assert got.equal_upto(direct, 27) is None
    got = evaluate("poch(0, 1, 1, inf)", ctx)
    direct = E_series(1, 27)
    assert got.equal_upto(direct, 27) is None
    got = evaluate("poch(0, 1, 1, 2)", ctx)
    assert [got.coefficient(e) for e in range(4)] == [1, -1, -1, 1]


def test_eval_t_matches_library():
    ctx = EvalCtx(ell=5, prec=30)
    got = evaluate("T(2,1,5)", ctx)
    assert got.equal_upto(lambert_t(2, 1, 5, 30), 30) is None


def test_eval_ru_requires_matching_ell():
    with pytest.raises(QExprEvalError):
        evaluate("RU(3)", EvalCtx(ell=5, prec=10))
    with pytest.raises(QExprEvalError):
        evaluate("RHS(RU7)", EvalCtx(ell=5, prec=10))
    got = evaluate("RU(3)", EvalCtx(ell=3, prec=10))
    assert got.equal_upto(ru_at_root(3, 10)) is None


def test_eval_rhs_unknown_identity():
    with pytest.raises(QExprEvalError):
        evaluate("RHS(RU11)", EvalCtx(ell=11, prec=10))


def test_eval_division_by_zero_reports_position():
    with pytest.raises(QExprEvalError):
        evaluate("1 / (U() - U())", EvalCtx(ell=5, prec=10))


def test_eval_f_call():
    ctx = EvalCtx(ell=5, prec=15)
    got = evaluate("F(2, -2, 1, 5)", ctx)
    assert got.equal_upto(ru_at_root(5, 15), 15) is None
    with pytest.raises(QExprEvalError):
        evaluate("F(0, 1, 1, 5)", ctx)


# -- round-trip and compositionality -------------------------------------------

atoms = st.one_of(
    st.integers(min_value=0, max_value=9).map(lambda v: IntLit(v)),
    st.tuples(st.integers(1, 9), st.integers(1, 9)).map(lambda t: RatLit(*t)),
    st.just(Q()),
    st.integers(min_value=-6, max_value=6).map(lambda p: Zeta(p)),
    st.sampled_from([Call("E", (1,)), Call("P", (1,)), Call("P", (2,)),
                     Call("T", (2, 1, 5)), Call("U", ()), Call("V", ())]),
)


def combos(children):
    return st.one_of(
        st.tuples(children, children).map(lambda t: Add(*t)),
        st.tuples(children, children).map(lambda t: Sub(*t)),
        st.tuples(children, children).map(lambda t: Mul(*t)),
        st.tuples(children, st.integers(1, 3)).map(lambda t: Pow(t[0], t[1])),
    )


asts = st.recursive(atoms, combos, max_leaves=8)


@given(asts)
def test_render_parse_roundtrip(ast):
    assert strip(parse(render(ast))) == strip(ast)


@given(asts)
def test_eval_is_compositional(ast):
    ctx = EvalCtx(ell=5, prec=12)
    direct = evaluate(ast, ctx)
    if isinstance(ast, (Add, Sub, Mul)):
        left = evaluate(ast.left, ctx)
        right = evaluate(ast.right, ctx)
        op = {Add: lambda a, b: a + b, Sub: lambda a, b: a - b,
              Mul: lambda a, b: a * b}[type(ast)]
        assert direct.equal_upto(op(left, right), 12) is None


def test_evalctx_validation():
    with pytest.raises(ValueError):
        EvalCtx(ell=4, prec=10)
    with pytest.raises(ValueError):
        EvalCtx(ell=5, prec=0)
