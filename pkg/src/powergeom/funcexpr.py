"""Tiny expression language for complex test functions of ``z``.

Supports numbers, ``z``, ``+ - * /``, powers (``^`` or ``**``) and the
functions sin, cos, exp, ln (alias log) and sqrt.  Parsed with :mod:`ast`
against a whitelist, then evaluated with :mod:`cmath`.
"""

from __future__ import annotations

import ast
import cmath
import math
from typing import Callable

FUNCTIONS: dict[str, Callable[[complex], complex]] = {
    "sin": cmath.sin,
    "cos": cmath.cos,
    "exp": cmath.exp,
    "ln": cmath.log,
    "log": cmath.log,
    "sqrt": cmath.sqrt,
}
CONSTANTS = {"pi": math.pi, "e": math.e, "i": 1j}

_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
    ast.Pow: lambda a, b: a ** b,
}


class FunctionSyntaxError(ValueError):
    pass


def _compile(node: ast.AST, source: str) -> Callable[[complex], complex]:
    if isinstance(node, ast.Expression):
        return _compile(node.body, source)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float, complex)):
        value = node.value
        return lambda z: value
    if isinstance(node, ast.Name):
        if node.id == "z":
            return lambda z: z
        if node.id in CONSTANTS:
            value = CONSTANTS[node.id]
            return lambda z: value
        raise FunctionSyntaxError(f"unknown name {node.id!r} in {source!r}")
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        op = _BINOPS[type(node.op)]
        left, right = _compile(node.left, source), _compile(node.right, source)
        return lambda z: op(left(z), right(z))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _compile(node.operand, source)
        if isinstance(node.op, ast.USub):
            return lambda z: -inner(z)
        return inner
    if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
            and node.func.id in FUNCTIONS and len(node.args) == 1 and not node.keywords):
        fn = FUNCTIONS[node.func.id]
        arg = _compile(node.args[0], source)
        return lambda z: fn(arg(z))
    raise FunctionSyntaxError(f"unsupported construct in {source!r}: {ast.dump(node)[:60]}")


def compile_function(source: str) -> Callable[[complex], complex]:
    """``"z + z^2.5"`` -> callable evaluating it at a complex point."""
    try:
        tree = ast.parse(source.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise FunctionSyntaxError(f"cannot parse {source!r}: {exc.msg}") from None
    fn = _compile(tree, source)

    def evaluate(z: complex) -> complex:
        return complex(fn(complex(z)))

    evaluate.__doc__ = source
    return evaluate
