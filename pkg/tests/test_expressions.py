import math

import numpy as np
import pytest

from choqmc.expressions import (
    BinOp,
    EvaluationError,
    Lit,
    ParseError,
    Var,
    evaluate,
    evaluate_scalar,
    parse_expression,
    to_text,
)


def test_simple_ast_shape():
    ast = parse_expression("u1 + 2*u2", dim=2)
    assert ast == BinOp("+", Var(1), BinOp("*", Lit(2.0), Var(2)))


def test_paper_example_expression():
    ast = parse_expression("exp(-(u1*u2*u3 + sin(u3*u4*u5)))", dim=5)
    value = evaluate(ast, np.ones((1, 5)) * (1 - 1e-16))
    assert value[0] == pytest.approx(math.exp(-(1 + math.sin(1))), rel=1e-12)


def test_variable_out_of_range():
    with pytest.raises(ParseError):
        parse_expression("u3", dim=2)


def test_precedence_and_associativity():
    u = [2.0]
    assert evaluate_scalar(parse_expression("2 + 3 * 4", 1), u) == 14.0
    assert evaluate_scalar(parse_expression("2 ^ 3 ^ 2", 1), u) == 512.0  # right-assoc
    assert evaluate_scalar(parse_expression("-2 ^ 2", 1), u) == -4.0  # ^ binds tighter
    assert evaluate_scalar(parse_expression("10 - 4 - 3", 1), u) == 3.0  # left-assoc
    assert evaluate_scalar(parse_expression("2 ^ -1", 1), u) == 0.5
    assert evaluate_scalar(parse_expression("min(u1, 1.5)", 1), u) == 1.5


def test_syntax_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_expression("u1 + ", 1)
    assert err.value.position == 5
    with pytest.raises(ParseError):
        parse_expression("sin(u1, u1)", 1)  # arity
    with pytest.raises(ParseError):
        parse_expression("foo(u1)", 1)  # unknown identifier
    with pytest.raises(ParseError):
        parse_expression("u1 @ u1", 1)  # bad character
    with pytest.raises(ParseError):
        parse_expression("(u1", 1)  # unbalanced


def test_print_parse_round_trip():
    sources = [
        "u1 + 2*u2",
        "exp(-(u1*u2 + sin(u2)))",
        "min(u1, max(u2, 0.5)) / (1 + u1^2)",
        "-u1 ^ 2 - -u2",
        "sqrt(abs(u1 - u2)) * log(u1 + 1)",
    ]
    for src in sources:
        ast = parse_expression(src, dim=2)
        assert parse_expression(to_text(ast), dim=2) == ast


def test_vectorized_matches_scalar_tree_walk():
    sources = [
        "exp(-(u1*u2*u3 + sin(u3*u1*u2)))",
        "min(u1, u2) + max(u2, u3) * cos(u1)",
        "sqrt(u1) + log(u2 + 0.5) - u3^3",
    ]
    rng = np.random.default_rng(17)
    pts = rng.random((1000, 3))
    for src in sources:
        ast = parse_expression(src, dim=3)
        vec = evaluate(ast, pts)
        scalars = np.array([evaluate_scalar(ast, u) for u in pts])
        np.testing.assert_allclose(vec, scalars, atol=1e-15)


def test_log_of_nonpositive_is_an_error():
    ast = parse_expression("log(u1 - 0.5)", dim=1)
    with pytest.raises(EvaluationError):
        evaluate(ast, np.array([[0.25]]))
    with pytest.raises(EvaluationError):
        evaluate_scalar(ast, [0.25])


def test_division_by_zero_is_an_error():
    ast = parse_expression("1 / u1", dim=1)
    with pytest.raises(EvaluationError):
        evaluate(ast, np.array([[0.0]]))
