"""Line-oriented scenario parser.

Grammar, one directive per line, ``#`` starts a comment::

    base p3
    blowup point
    blowup curve class=<curve-expr> genus=<g> [decomposable|indecomposable] [tau=<int>] [mult-with-prior=<m>,...]
    class <name> = <divisor-expr>
    curve <name> = <curve-expr>
    query <kind> <operands> [key=value ...] [flags]

Basis names are generated by the blowups: ``H``, ``L``, then ``E<k>`` with
``l<k>`` (point) or ``f<k>`` (curve) for the k-th blowup.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from loguru import logger
from threefold_chow import format_rational
from threefold_feasibility import ConstraintError, parse_linear, parse_rational

from .exceptions import ScenarioParseError
from .statements import (
    BlowupCurve,
    BlowupPoint,
    ClassKind,
    Definition,
    LinearForm,
    Query,
    QueryKind,
    Scenario,
    Statement,
)

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_INT_RE = re.compile(r"^[+-]?\d+$")
_OPTION_RE = re.compile(r"^([a-z][a-z0-9-]*)=(.*)$")
_RESERVED_RE = re.compile(r"^(H|L|[Elf][0-9]+)$")


@dataclass(frozen=True)
class _QueryGrammar:
    operands: tuple[int, int]  # min, max positional operands
    keys: frozenset[str] = frozenset()
    required: frozenset[str] = frozenset()
    flags: frozenset[str] = frozenset()
    expect: frozenset[str] | None = None  # allowed expect= words; None for a rational
    operand_kind: ClassKind | None = None
    on_parent: bool = False  # operands and xi= live on the model before the last blowup
    needs_blowup: bool = False


_QUERIES: dict[QueryKind, _QueryGrammar] = {
    QueryKind.INTERSECT: _QueryGrammar((2, 3), frozenset({"expect"})),
    QueryKind.CHERN: _QueryGrammar((1, 1)),
    QueryKind.PROPERTY_A: _QueryGrammar(
        (1, 1), frozenset({"expect"}), expect=frozenset({"met", "unmet"}), operand_kind=ClassKind.DIVISOR
    ),
    QueryKind.THEOREM1: _QueryGrammar(
        (0, 1),
        frozenset({"class", "genus", "expect"}),
        flags=frozenset({"decomposable", "indecomposable"}),
        expect=frozenset({"applicable", "inapplicable"}),
    ),
    QueryKind.SUBCASE22: _QueryGrammar(
        (0, 0),
        frozenset({"xi", "alpha", "tau", "expect"}),
        required=frozenset({"xi", "alpha", "tau"}),
        expect=frozenset({"contradiction", "consistent"}),
        on_parent=True,
        needs_blowup=True,
    ),
    QueryKind.THEOREM2: _QueryGrammar(
        (0, 0),
        frozenset({"xi", "curves", "genus", "alphas", "part"}),
        required=frozenset({"xi", "curves", "genus", "alphas"}),
    ),
    QueryKind.STRICT: _QueryGrammar(
        (1, 1), frozenset({"m"}), required=frozenset({"m"}),
        operand_kind=ClassKind.CURVE, on_parent=True, needs_blowup=True,
    ),
    QueryKind.MODEL: _QueryGrammar((0, 0)),
    QueryKind.GAMMA: _QueryGrammar(
        (1, 1), frozenset({"genus"}), required=frozenset({"genus"}), operand_kind=ClassKind.CURVE
    ),
    QueryKind.PUSHFORWARD: _QueryGrammar((1, 1), needs_blowup=True),
    QueryKind.THEOREM1_TRACE: _QueryGrammar(
        (1, 1), frozenset({"tau"}), operand_kind=ClassKind.DIVISOR, needs_blowup=True
    ),
}

_CENTER_WORDS = ("point", "last")


@dataclass
class _Symbols:
    """Names visible at the current point of the scenario, with the depth they appeared at."""

    depth: int = 0
    divisors: dict[str, int] = field(default_factory=lambda: {"H": 0})
    curves: dict[str, int] = field(default_factory=lambda: {"L": 0})

    def blow_up(self, point: bool) -> None:
        self.depth += 1
        self.divisors[f"E{self.depth}"] = self.depth
        self.curves[f"{'l' if point else 'f'}{self.depth}"] = self.depth

    def kind_of(self, name: str, depth: int) -> ClassKind | None:
        if self.divisors.get(name, depth + 1) <= depth:
            return ClassKind.DIVISOR
        if self.curves.get(name, depth + 1) <= depth:
            return ClassKind.CURVE
        return None


def _int(line: int, token: str, what: str) -> int:
    if not _INT_RE.match(token):
        raise ScenarioParseError(line, token, f"{what} must be an integer")
    return int(token)


def _rational(line: int, token: str) -> Fraction:
    try:
        return parse_rational(token)
    except ConstraintError as e:
        raise ScenarioParseError(line, token, str(e)) from None


def _form(
    line: int,
    text: str,
    symbols: _Symbols,
    kind: ClassKind | None = None,
    depth: int | None = None,
) -> tuple[LinearForm, ClassKind]:
    """Parse an expression and check that its names exist and share one kind."""
    depth = symbols.depth if depth is None else depth
    try:
        coeffs, constant = parse_linear(text)
    except ConstraintError as e:
        raise ScenarioParseError(line, e.token or text, str(e)) from None
    if constant:
        raise ScenarioParseError(line, text, "class expressions cannot have a constant term")
    for name in coeffs:
        found = symbols.kind_of(name, depth)
        if found is None:
            raise ScenarioParseError(line, name, "unknown name")
        if kind is None:
            kind = found
        elif found is not kind:
            expected = "divisor" if kind is ClassKind.DIVISOR else "curve"
            raise ScenarioParseError(line, name, f"expected a {expected} name")
    if kind is None:
        raise ScenarioParseError(line, text, "empty expression")
    return LinearForm(tuple(coeffs.items())), kind


def _split_options(
    line: int, tokens: list[str], keys: frozenset[str], flags: frozenset[str]
) -> tuple[list[str], list[tuple[str, str]]]:
    """Positional tokens, then ``key=value`` pairs whose values may span several tokens."""
    positional: list[str] = []
    options: list[list[str]] = []
    for token in tokens:
        match = _OPTION_RE.match(token)
        if match and match[1] in keys:
            if not match[2]:
                raise ScenarioParseError(line, token, f"empty value for {match[1]!r}")
            if any(key == match[1] for key, _ in options):
                raise ScenarioParseError(line, token, f"duplicate option {match[1]!r}")
            options.append([match[1], match[2]])
        elif token in flags:
            options.append([token, ""])
        elif match:
            raise ScenarioParseError(line, token, f"unknown option {match[1]!r}")
        elif options and options[-1][1] != "":
            options[-1][1] += " " + token
        elif options:
            raise ScenarioParseError(line, token, "unexpected token after a flag")
        else:
            positional.append(token)
    return positional, [(key, value) for key, value in options]


def _parse_blowup(line: int, tokens: list[str], symbols: _Symbols) -> Statement:
    if tokens == ["point"]:
        symbols.blow_up(point=True)
        return BlowupPoint(line=line)
    if not tokens or tokens[0] != "curve":
        raise ScenarioParseError(line, tokens[0] if tokens else "blowup", "expected 'point' or 'curve'")
    positional, options = _split_options(
        line, tokens[1:], frozenset({"class", "genus", "tau", "mult-with-prior"}),
        frozenset({"decomposable", "indecomposable"}),
    )
    if positional:
        raise ScenarioParseError(line, positional[0], "unexpected token")
    values = dict(options)
    for key in ("class", "genus"):
        if key not in values:
            raise ScenarioParseError(line, "curve", f"missing {key}=")
    if "decomposable" in values and "indecomposable" in values:
        raise ScenarioParseError(line, "indecomposable", "conflicting decomposability flags")
    curve, _ = _form(line, values["class"], symbols, ClassKind.CURVE)
    decomposable = True if "decomposable" in values else False if "indecomposable" in values else None
    tau = _int(line, values["tau"], "tau") if "tau" in values else None
    mult = ()
    if "mult-with-prior" in values:
        mult = tuple(_int(line, m, "mult-with-prior") for m in values["mult-with-prior"].split(","))
    statement = BlowupCurve(
        curve=curve,
        genus=_int(line, values["genus"], "genus"),
        decomposable=decomposable,
        tau=tau,
        mult_with_prior=mult,
        line=line,
    )
    symbols.blow_up(point=False)
    return statement


def _parse_definition(line: int, kind: ClassKind, rest: str, symbols: _Symbols) -> Definition:
    name, sep, expr = rest.partition("=")
    name = name.strip()
    if not sep:
        raise ScenarioParseError(line, rest.strip() or str(kind), "expected '<name> = <expression>'")
    if not _NAME_RE.match(name):
        raise ScenarioParseError(line, name, "invalid name")
    if name in symbols.divisors or name in symbols.curves or _RESERVED_RE.match(name):
        raise ScenarioParseError(line, name, "name is already taken")
    form, _ = _form(line, expr.strip(), symbols, kind)
    table = symbols.divisors if kind is ClassKind.DIVISOR else symbols.curves
    table[name] = symbols.depth
    return Definition(kind=kind, name=name, expr=form, line=line)


def _normalize_option(line: int, key: str, value: str, symbols: _Symbols, depth: int) -> str:
    match key:
        case "alpha":
            return format_rational(_rational(line, value))
        case "alphas":
            return ",".join(format_rational(_rational(line, v)) for v in value.split(","))
        case "genus" | "tau" | "m" | "part":
            return ",".join(str(_int(line, v.strip(), key)) for v in value.split(","))
        case "xi":
            return _form(line, value, symbols, ClassKind.DIVISOR, depth)[0].format()
        case "curves":
            names = [name.strip() for name in value.split(",")]
            for name in names:
                if symbols.kind_of(name, depth) is not ClassKind.CURVE:
                    raise ScenarioParseError(line, name, "expected a curve name")
            return ",".join(names)
        case "class":
            return _form(line, value, symbols, ClassKind.CURVE, depth)[0].format()
        case _:
            return value


def _parse_query(line: int, tokens: list[str], symbols: _Symbols) -> Query:
    if not tokens:
        raise ScenarioParseError(line, "query", "missing query kind")
    try:
        kind = QueryKind(tokens[0])
    except ValueError:
        raise ScenarioParseError(line, tokens[0], "unknown query") from None
    grammar = _QUERIES[kind]
    if grammar.needs_blowup and symbols.depth == 0:
        raise ScenarioParseError(line, tokens[0], f"{kind} needs a preceding blowup")
    depth = symbols.depth - 1 if grammar.on_parent else symbols.depth
    positional, options = _split_options(line, tokens[1:], grammar.keys, grammar.flags)
    low, high = grammar.operands
    if not low <= len(positional) <= high:
        token = positional[high] if len(positional) > high else tokens[0]
        raise ScenarioParseError(line, token, f"{kind} takes {low}..{high} operands, got {len(positional)}")
    present = {key for key, _ in options}
    missing = sorted(grammar.required - present)
    if missing:
        raise ScenarioParseError(line, tokens[0], f"missing {missing[0]}=")

    operands: list[LinearForm] = []
    degree = 0
    for token in positional:
        if kind is QueryKind.CHERN:
            if token not in ("1", "2"):
                raise ScenarioParseError(line, token, "chern takes 1 or 2")
            operands.append(LinearForm(((token, Fraction(1)),)))
        elif kind is QueryKind.THEOREM1 and token in _CENTER_WORDS:
            if token == "last" and symbols.depth == 0:
                raise ScenarioParseError(line, token, "no blowup yet")
            operands.append(LinearForm(((token, Fraction(1)),)))
        elif kind is QueryKind.THEOREM1:
            raise ScenarioParseError(line, token, "expected 'point' or 'last'")
        else:
            form, found = _form(line, token, symbols, grammar.operand_kind, depth)
            operands.append(form)
            degree += 2 if found is ClassKind.DIVISOR else 4
    if kind is QueryKind.INTERSECT and degree != 6:
        raise ScenarioParseError(line, positional[-1], f"factors have total degree {degree}, expected 6")
    if kind is QueryKind.THEOREM1:
        if bool(operands) == ("class" in present):
            raise ScenarioParseError(line, tokens[0], "theorem1 takes 'point', 'last' or class=<curve> genus=<g>")
        if "class" in present and "genus" not in present:
            raise ScenarioParseError(line, tokens[0], "missing genus=")

    normalized: list[tuple[str, str]] = []
    for key, value in options:
        if key == "expect":
            if grammar.expect is None:
                value = format_rational(_rational(line, value))
            elif value not in grammar.expect:
                raise ScenarioParseError(line, value, f"expect= takes one of {sorted(grammar.expect)}")
        elif value != "":
            value = _normalize_option(line, key, value, symbols, depth)
        normalized.append((key, value))

    if kind is QueryKind.THEOREM2:
        values = dict(normalized)
        sizes = {key: len(values[key].split(",")) for key in ("curves", "genus", "alphas")}
        if len(set(sizes.values())) != 1:
            raise ScenarioParseError(line, values["curves"], f"list lengths differ: {sizes}")
        if values.get("part", "1") not in ("1", "2"):
            raise ScenarioParseError(line, values["part"], "part must be 1 or 2")
    return Query(kind=kind, operands=tuple(operands), options=tuple(normalized), line=line)


def parse_scenario(text: str) -> Scenario:
    """Parse scenario text; every error names its line and token.

    Raises:
        ScenarioParseError: On any grammar, name or number error.
    """
    symbols = _Symbols()
    base: str | None = None
    statements: list[Statement] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        keyword, *remainder = body.split(None, 1)
        rest = remainder[0] if remainder else ""
        tokens = rest.split()
        if keyword == "base":
            if base is not None:
                raise ScenarioParseError(number, keyword, "base declared twice")
            if tokens != ["p3"]:
                raise ScenarioParseError(number, rest or keyword, "only 'base p3' is supported")
            base = "p3"
            continue
        if base is None:
            raise ScenarioParseError(number, keyword, "scenario must start with 'base p3'")
        match keyword:
            case "blowup":
                statements.append(_parse_blowup(number, tokens, symbols))
            case "class":
                statements.append(_parse_definition(number, ClassKind.DIVISOR, rest, symbols))
            case "curve":
                statements.append(_parse_definition(number, ClassKind.CURVE, rest, symbols))
            case "query":
                statements.append(_parse_query(number, tokens, symbols))
            case _:
                raise ScenarioParseError(number, keyword, "unknown directive")
    if base is None:
        raise ScenarioParseError(1, "", "missing 'base p3'")
    logger.debug("parsed scenario: {} statements", len(statements))
    return Scenario(base=base, statements=tuple(statements))
