"""Sequential evaluation of a parsed scenario.

Blowups replace the current model; definitions are stored on the model they
were written against and transferred on use. Engine errors stop the run and
are reported with the line that triggered them.
"""

from fractions import Fraction
from typing import Any

from loguru import logger
from threefold_chow import (
    BlowupKind,
    ChowError,
    CurveCenterSpec,
    CurveClass,
    DivisorClass,
    ThreefoldModel,
    blow_up_curve,
    blow_up_point,
    center_gamma,
    describe_model,
    format_rational,
    intersect,
    p3_model,
    pushforward,
    render_model,
    strict_transform,
    transfer,
)
from threefold_feasibility import parse_linear
from threefold_property import (
    DeductionTrace,
    PreconditionError,
    property_a_report,
    subcase22_certificate,
    theorem1_check,
    theorem1_trace,
    theorem2_chain,
)

from .exceptions import ScenarioRuntimeError
from .reports import QueryRecord, RunReport
from .statements import (
    BlowupCurve,
    BlowupPoint,
    Definition,
    LinearForm,
    Query,
    Scenario,
    Statement,
)

_Class = DivisorClass | CurveClass


def _q(value: Fraction | int) -> dict[str, int]:
    value = Fraction(value)
    return {"numerator": value.numerator, "denominator": value.denominator}


def _class_data(value: _Class) -> dict[str, Any]:
    return {"class": value.format(), "coordinates": {name: _q(c) for name, c in value.as_dict().items()}}


def _trace_record(trace: DeductionTrace) -> tuple[list[str], dict[str, Any]]:
    lines = trace.render()
    if trace.contradiction:
        lines.append("  result: contradiction")
    return lines, trace.model_dump(mode="json")


class ScenarioRunner:
    """Holds the current model and the named classes while a scenario runs."""

    def __init__(self) -> None:
        self.model: ThreefoldModel = p3_model()
        self.classes: dict[str, _Class] = {}

    def resolve(self, form: LinearForm, model: ThreefoldModel | None = None) -> _Class:
        """Evaluate a linear form on ``model`` (default: the current model)."""
        model = model or self.model
        total: _Class | None = None
        for name, coeff in form.terms:
            if name in model.divisor_basis:
                value = model.divisor(name)
            elif name in model.curve_basis:
                value = model.curve(name)
            elif name in self.classes:
                value = transfer(model, self.classes[name])
            else:
                raise ScenarioRuntimeError(0, "unknown name", name)
            total = coeff * value if total is None else total + coeff * value
        if total is None:
            raise ScenarioRuntimeError(0, "empty expression", form.format())
        return total

    def _divisor(self, text: str, model: ThreefoldModel | None = None) -> DivisorClass:
        model = model or self.model
        value = self.resolve(_parse_option_form(text), model)
        if not isinstance(value, DivisorClass):
            raise ScenarioRuntimeError(0, "expected a divisor class", text)
        return value

    @property
    def parent(self) -> ThreefoldModel:
        if self.model.parent is None:
            raise ScenarioRuntimeError(0, "no blowup has been performed")
        return self.model.parent

    def execute(self, statement: Statement) -> QueryRecord | None:
        match statement:
            case BlowupPoint():
                self.model = blow_up_point(self.model)
                logger.debug("line {}: blew up a point (depth {})", statement.line, self.model.depth)
            case BlowupCurve():
                center = CurveCenterSpec(
                    curve=self.resolve(statement.curve),
                    genus=statement.genus,
                    decomposable=statement.decomposable,
                    tau=statement.tau,
                )
                self.model = blow_up_curve(self.model, center, statement.mult_with_prior)
                logger.debug(
                    "line {}: blew up {} (gamma {})", statement.line, center.curve, self.model.last_record.gamma
                )
            case Definition():
                self.classes[statement.name] = self.resolve(statement.expr)
            case Query():
                return self.query(statement)
        return None

    def query(self, query: Query) -> QueryRecord:
        handler = getattr(self, "_" + str(query.kind).replace("-", "_"))
        lines, data, passed = handler(query)
        record = QueryRecord(
            line=query.line,
            query=query.to_text(),
            kind=query.kind,
            lines=lines,
            data=data,
            expect=query.option("expect"),
            passed=passed,
        )
        logger.debug("line {}: {} -> {}", query.line, query.kind, "ok" if passed is not False else "FAILED")
        return record

    # handlers return (text lines, JSON-ready data, expectation outcome)

    def _intersect(self, query: Query):
        factors = [self.resolve(operand) for operand in query.operands]
        value = intersect(self.model, factors)
        expect = query.option("expect")
        passed = None if expect is None else value == Fraction(expect)
        label = ".".join(f"({op.compact()})" if len(op.terms) > 1 else op.compact() for op in query.operands)
        return [f"{label} = {format_rational(value)}"], {"value": _q(value)}, passed

    def _chern(self, query: Query):
        k = query.operands[0].terms[0][0]
        cls = self.model.c1 if k == "1" else self.model.c2
        return [f"c{k} = {cls}"], _class_data(cls), None

    def _property_a(self, query: Query):
        report = property_a_report(self.model, self.resolve(query.operands[0]))
        lines = [
            f"zeta^2 = {report.zeta_sq_text}",
            f"zeta.c1^2 = {format_rational(report.zeta_c1_sq)}",
            f"zeta.c2 = {format_rational(report.zeta_c2)}",
            f"hypotheses: {'met' if report.hypotheses_met else 'unmet'}",
        ]
        expect = query.option("expect")
        passed = None if expect is None else (expect == "met") == report.hypotheses_met
        return lines, report.model_dump(mode="json"), passed

    def _theorem1(self, query: Query):
        if query.operands:
            word = query.operands[0].terms[0][0]
            if word == "point":
                model, center = self.model, BlowupKind.POINT
            else:
                record = self.model.last_record
                model = self.parent
                center = record.center if record.kind is BlowupKind.CURVE else BlowupKind.POINT
        else:
            decomposable = None
            if query.has_flag("decomposable") or query.has_flag("indecomposable"):
                decomposable = query.has_flag("decomposable")
            model = self.model
            center = CurveCenterSpec(
                curve=self.resolve(_parse_option_form(query.option("class"))),
                genus=int(query.option("genus")),
                decomposable=decomposable,
            )
        verdict = theorem1_check(model, center)
        lines = [f"applicable: {'yes' if verdict.applicable else 'no'}", f"reason: {verdict.reason}"]
        if verdict.c1_degree is not None:
            lines.append(f"c1.C = {verdict.c1_degree}, gamma = {verdict.gamma}")
        expect = query.option("expect")
        passed = None if expect is None else (expect == "applicable") == verdict.applicable
        return lines, verdict.model_dump(mode="json"), passed

    def _subcase22(self, query: Query):
        xi = self._divisor(query.option("xi"), self.parent)
        trace = subcase22_certificate(self.model, xi, query.option("alpha"), int(query.option("tau")))
        lines, data = _trace_record(trace)
        if not trace.contradiction:
            lines.append("  result: consistent")
        expect = query.option("expect")
        passed = None if expect is None else (expect == "contradiction") == trace.contradiction
        return lines, data, passed

    def _theorem2(self, query: Query):
        names = query.option("curves").split(",")
        genera = [int(g) for g in query.option("genus").split(",")]
        curves = [
            CurveCenterSpec(curve=self.resolve(LinearForm(((name, Fraction(1)),))), genus=genus)
            for name, genus in zip(names, genera)
        ]
        trace = theorem2_chain(
            self.model,
            curves,
            self._divisor(query.option("xi")),
            query.option("alphas").split(","),
            part=int(query.option("part") or 1),
        )
        lines, data = _trace_record(trace)
        return lines, data, None

    def _strict(self, query: Query):
        operand = query.operands[0]
        curve = self.resolve(operand, self.parent)
        m = int(query.option("m"))
        value = strict_transform(self.model, curve, m)
        return [f"strict({operand.compact()}, m={m}) = {value}"], _class_data(value), None

    def _model(self, query: Query):
        summary = describe_model(self.model)
        return render_model(summary), summary.model_dump(mode="json"), None

    def _gamma(self, query: Query):
        operand = query.operands[0]
        genus = int(query.option("genus"))
        gamma = center_gamma(self.model, CurveCenterSpec(curve=self.resolve(operand), genus=genus))
        return [f"gamma({operand.compact()}, g={genus}) = {gamma}"], {"gamma": gamma}, None

    def _pushforward(self, query: Query):
        operand = query.operands[0]
        value = pushforward(self.model, self.resolve(operand))
        return [f"pi_*({operand.compact()}) = {value}"], _class_data(value), None

    def _theorem1_trace(self, query: Query):
        tau = query.option("tau")
        trace = theorem1_trace(self.model, self.resolve(query.operands[0]), int(tau) if tau is not None else None)
        lines, data = _trace_record(trace)
        return lines, data, None


def _parse_option_form(text: str) -> LinearForm:
    # option values were validated and normalized by the parser
    coeffs, _ = parse_linear(text)
    return LinearForm(tuple(coeffs.items()))


def run_scenario(scenario: Scenario) -> RunReport:
    """Execute every directive in order and collect one record per query.

    The run stops at the first engine error; the report then carries the
    error with its line and ``ok`` is False.
    """
    runner = ScenarioRunner()
    report = RunReport()
    for statement in scenario.statements:
        try:
            record = runner.execute(statement)
        except ScenarioRuntimeError as e:
            error = ScenarioRuntimeError(statement.line, e.message, e.token or statement.to_text())
        except (ChowError, PreconditionError, ValueError) as e:
            error = ScenarioRuntimeError(statement.line, str(e), statement.to_text())
        else:
            if record is not None:
                report.records.append(record)
            continue
        logger.warning("scenario stopped: {}", error)
        report.error = str(error)
        report.error_line = statement.line
        break
    return report
