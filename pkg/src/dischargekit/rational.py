"""Exact rational helpers: parsing, formatting and a small expression evaluator."""
import ast
import operator
from fractions import Fraction


def fmt(x):
    """Render an int/Fraction as `p/q` in lowest terms, integers without slash."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text):
    text = text.strip()
    if "/" in text:
        p, q = text.split("/", 1)
        p, q = int(p), int(q)
        if q == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(p, q)
    return Fraction(int(text))


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}


def eval_expr(text, names=None):
    """Evaluate an arithmetic expression over Fractions.

    Only + - * /, parentheses, integer literals and the given names are
    accepted. Division by zero raises ZeroDivisionError.
    """
    names = names or {}
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"bad expression {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id not in names:
                raise ValueError(f"unknown name {node.id!r} in {text!r}")
            return Fraction(names[node.id])
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Div) and right == 0:
                raise ZeroDivisionError(f"division by zero in {text!r}")
            return _BINOPS[type(node.op)](left, right)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        raise ValueError(f"unsupported syntax in {text!r}")

    return ev(tree)


def expr_names(text):
    """Names referenced by an expression."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError:
        raise ValueError(f"cannot parse expression {text!r}") from None
    return {n.id for n in ast.walk(tree) if isinstance(n, ast.Name)}
