"""Parsing of linear expressions and the one-constraint-per-line text form."""

import re
from fractions import Fraction

from .system import Constraint, ConstraintError, ConstraintSystem, LinExpr, Relation

_NUMBER = r"\d+(?:/\d+)?"
_TERM_RE = re.compile(rf"^(?:(?P<coef>{_NUMBER})\*)?(?P<name>[A-Za-z_][A-Za-z0-9_]*)$")
_CONST_RE = re.compile(rf"^{_NUMBER}$")
_SIGNED_RE = re.compile(r"[+-]?[^+-]+")

# longest first so ">=" wins over ">"
_RELATIONS = (">=", "<=", "=", ">", "<")


def parse_rational(token: str) -> Fraction:
    """Parse ``p``, ``-p`` or ``p/q``; decimals are rejected."""
    text = token.strip()
    if not re.fullmatch(rf"[+-]?{_NUMBER}", text):
        raise ConstraintError(f"malformed rational {token!r}", token=token)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ConstraintError(f"zero denominator in {token!r}", token=token) from None


def parse_linear(text: str) -> tuple[dict[str, Fraction], Fraction]:
    """Parse ``2*H - E1 + 1/2`` into ({"H": 2, "E1": -1}, 1/2).

    Repeated names are summed. Raises :class:`ConstraintError` naming the
    offending token.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ConstraintError("empty expression", token=text)
    pieces = _SIGNED_RE.findall(compact)
    if "".join(pieces) != compact:
        raise ConstraintError(f"malformed expression {text!r}", token=text)

    coeffs: dict[str, Fraction] = {}
    constant = Fraction(0)
    for piece in pieces:
        sign = -1 if piece[0] == "-" else 1
        body = piece.lstrip("+-")
        if m := _TERM_RE.match(body):
            coef = parse_rational(m["coef"]) if m["coef"] else Fraction(1)
            coeffs[m["name"]] = coeffs.get(m["name"], Fraction(0)) + sign * coef
        elif _CONST_RE.match(body):
            constant += sign * parse_rational(body)
        else:
            raise ConstraintError(f"malformed term {piece!r}", token=piece)
    return coeffs, constant


def parse_expr(text: str) -> LinExpr:
    coeffs, constant = parse_linear(text)
    return LinExpr.of(coeffs, constant)


def parse_constraint(line: str) -> Constraint:
    """Parse ``lhs REL rhs  # label``. ``<=`` and ``<`` are flipped to ``>=`` and ``>``."""
    body, _, label = line.partition("#")
    for symbol in _RELATIONS:
        if symbol in body:
            lhs, rhs = body.split(symbol, 1)
            break
    else:
        raise ConstraintError(f"no relation in {line.strip()!r}", token=line.strip())
    if any(s in rhs for s in _RELATIONS):
        raise ConstraintError(f"more than one relation in {line.strip()!r}", token=line.strip())

    left, right = parse_expr(lhs), parse_expr(rhs)
    label = label.strip()
    match symbol:
        case "=":
            return Constraint(left - right, Relation.EQ, label)
        case ">=":
            return Constraint(left - right, Relation.GE, label)
        case ">":
            return Constraint(left - right, Relation.GT, label)
        case "<=":
            return Constraint(right - left, Relation.GE, label)
        case _:
            return Constraint(right - left, Relation.GT, label)


def parse_system(text: str) -> ConstraintSystem:
    """Inverse of :meth:`ConstraintSystem.to_text`; blank lines are skipped."""
    constraints = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.split("#", 1)[0].strip():
            continue
        try:
            constraints.append(parse_constraint(line))
        except ConstraintError as e:
            raise ConstraintError(f"line {number}: {e}", token=e.token) from e
    return ConstraintSystem(tuple(constraints))
