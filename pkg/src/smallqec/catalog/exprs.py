"""Tiny AST-whitelisted evaluator for the registry's amplitude, layer, and
expectation expressions. Keeps the catalog declarative: entries are strings
like "i*s2*sqrt(6-32*theta**2)" or "zrot(4*pi/16)" over a fixed namespace.
"""
from __future__ import annotations

import ast

import numpy as np

from .. import gates


class ExprError(ValueError):
    pass


def _safe_sqrt(x):
    if isinstance(x, complex) or np.iscomplexobj(x):
        return np.sqrt(x)
    if x < -1e-12:
        raise ExprError(f"sqrt of negative value {x}")
    return np.sqrt(max(x, 0.0))


_FUNCS = {
    "sqrt": _safe_sqrt,
    "exp": np.exp,
    "cos": np.cos,
    "sin": np.sin,
    "conj": np.conj,
    "abs": abs,
    "zrot": gates.zrot,
    "yrot": gates.yrot,
    "R": gates.r_rotation,
}

_CONSTS = {
    "pi": np.pi,
    "i": 1j,
    "I": gates.I2,
    "X": gates.X,
    "Y": gates.Y,
    "Z": gates.Z,
    "H": gates.H,
    "S": gates.S,
    "F": gates.F,
    "Phi": gates.PHI,
    "PhiStar": gates.PHI_STAR,
    "Xhat": gates.XHAT,
    "Yhat": gates.YHAT,
    "Zhat": gates.ZHAT,
    "Hhat": gates.HHAT,
    "Shat": gates.SHAT,
}

_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
    ast.MatMult: lambda a, b: a @ b,
}


def _eval_node(node, env):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body, env)
    if isinstance(node, ast.Constant):
        if isinstance(node.value, (int, float, complex)):
            return node.value
        raise ExprError(f"bad literal {node.value!r}")
    if isinstance(node, ast.Name):
        for scope in (env, _CONSTS):
            if node.id in scope:
                return scope[node.id]
        raise ExprError(f"unknown name {node.id!r}")
    if isinstance(node, ast.UnaryOp):
        value = _eval_node(node.operand, env)
        if isinstance(node.op, ast.USub):
            return -value
        if isinstance(node.op, ast.UAdd):
            return value
        raise ExprError("unary operator not allowed")
    if isinstance(node, ast.BinOp):
        op = type(node.op)
        left = _eval_node(node.left, env)
        right = _eval_node(node.right, env)
        if op in _BINOPS:
            return _BINOPS[op](left, right)
        if op is ast.Pow:
            if isinstance(left, np.ndarray) and left.ndim == 2:
                return np.linalg.matrix_power(left, int(right))
            return left**right
        raise ExprError(f"operator {op.__name__} not allowed")
    if isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.keywords:
            raise ExprError("only plain calls to whitelisted functions")
        fn = _FUNCS.get(node.func.id)
        if fn is None:
            raise ExprError(f"unknown function {node.func.id!r}")
        return fn(*[_eval_node(a, env) for a in node.args])
    if isinstance(node, ast.Compare):
        left = _eval_node(node.left, env)
        for op, comparator in zip(node.ops, node.comparators):
            right = _eval_node(comparator, env)
            ok = _COMPARES.get(type(op))
            if ok is None:
                raise ExprError("comparison operator not allowed")
            if not ok(left, right):
                return False
            left = right
        return True
    if isinstance(node, ast.BoolOp):
        values = [_eval_node(v, env) for v in node.values]
        return all(values) if isinstance(node.op, ast.And) else any(values)
    raise ExprError(f"disallowed syntax: {type(node).__name__}")


_COMPARES = {
    ast.Lt: lambda a, b: a < b,
    ast.LtE: lambda a, b: a <= b,
    ast.Gt: lambda a, b: a > b,
    ast.GtE: lambda a, b: a >= b,
    ast.Eq: lambda a, b: a == b,
    ast.NotEq: lambda a, b: a != b,
}


def evaluate(expr: str, env: dict | None = None):
    """Evaluate a whitelisted arithmetic / gate expression."""
    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise ExprError(f"cannot parse {expr!r}: {exc}") from exc
    return _eval_node(tree, env or {})
