"""Commands a session can run, and running a session in file order."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Callable, NamedTuple, Optional, overload

from tac_approx.approximation import (
    cone_of_counit,
    left_approximation,
    minimality_witness,
    right_approximation,
    triangle_checks,
    triangle_resolution,
)
from tac_approx.complexes import (
    ChainComplex,
    ChainMap,
    NotHomotopic,
    Window,
    cone,
    dualize,
    shift,
    total_acyclicity_check,
    truncated_cone,
    validate_complex,
)
from tac_approx.functors import (
    Adjunction,
    CheckReport,
    compose_functors_check,
    functoriality_check,
    homotopy_report,
    naturality_check,
    shift_compatibility,
    triangle_identities,
)
from tac_approx.resolution import (
    Equivalence,
    ResolutionPath,
    complete_resolution,
    find_homotopy,
    minimal_free_resolution,
    projective_dimension,
)
from tac_approx.settings import Settings

from .errors import SessionSemanticError
from .models import CommandStatement
from .render import SessionRenderer, format_matrix, matrix_spec
from .workspace import SessionObject, Workspace, at_line

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

    from .models import Session

logger = logging.getLogger(__name__)


class CommandResult(NamedTuple):
    """Report of one command."""

    command: str
    """The command line as written, without `run`."""

    passed: bool
    """Whether every verification the command performed succeeded."""

    lines: list[str]
    """Human readable report."""

    machine: dict[str, str]
    """Key/value block for test harnesses."""

    value: Optional[SessionObject] = None
    """The object the command computed, which `as NAME` binds."""


@dataclass
class Arguments:
    """Positional words and `--option value...` groups of a command."""

    command: str
    positional: list[str] = field(default_factory=list)
    options: dict[str, list[str]] = field(default_factory=dict)

    @classmethod
    def parse(cls, command: str, words: Iterable[str], arities: dict[str, int]) -> Arguments:
        """Split words into positional arguments and options with a fixed number of values.

        Raises:
            SessionSemanticError: On an unknown option or a missing option value.
        """
        arguments = cls(command)
        words = list(words)
        while words:
            word = words.pop(0)
            if not word.startswith("--"):
                arguments.positional.append(word)
                continue

            option = word[2:]
            if option not in arities:
                allowed = ", ".join(f"--{name}" for name in arities) or "none"
                msg = f"Unknown option {word} for {command}; options: {allowed}"
                raise SessionSemanticError(msg)

            count = arities[option]
            if len(words) < count:
                msg = f"Option {word} of {command} takes {count} values"
                raise SessionSemanticError(msg)

            arguments.options[option] = words[:count]
            del words[:count]

        return arguments

    def expect(self, low: int, high: int | None = None) -> list[str]:
        """The positional arguments, checked against an allowed count."""
        high = low if high is None else high
        if not low <= len(self.positional) <= high:
            count = str(low) if low == high else f"{low} to {high}"
            msg = f"{self.command} takes {count} arguments, got {len(self.positional)}"
            raise SessionSemanticError(msg)

        return self.positional

    def integer(self, text: str, what: str) -> int:
        try:
            return int(text)
        except ValueError:
            msg = f"{what} of {self.command} must be an integer, got {text!r}"
            raise SessionSemanticError(msg) from None

    @overload
    def int_option(self, name: str, default: int) -> int: ...

    @overload
    def int_option(self, name: str, default: None = None) -> int | None: ...

    def int_option(self, name: str, default: int | None = None) -> int | None:
        values = self.options.get(name)
        return default if values is None else self.integer(values[0], f"--{name}")

    def window_option(self) -> Window | None:
        values = self.options.get("window")
        if values is None:
            return None

        lo, hi = (self.integer(v, "--window") for v in values)
        if lo > hi:
            msg = f"Empty window {lo}..{hi}"
            raise SessionSemanticError(msg)

        return Window(lo, hi)

    def text_option(self, name: str) -> str | None:
        values = self.options.get(name)
        return values[0] if values else None


@dataclass
class CommandContext:
    workspace: Workspace
    renderer: SessionRenderer
    statement: CommandStatement

    @property
    def settings(self) -> Settings:
        return self.workspace.settings

    @property
    def label(self) -> str:
        """Name printed for the command's result."""
        return self.statement.bind or "result"

    def quotient_adjunction(self, complex_: ChainComplex) -> Adjunction:
        return self.workspace.adjunction(complex_.ring)

    def rendered(self, value: ChainComplex | ChainMap, name: str | None = None) -> list[str]:
        return self.renderer.render(value, name or self.label).splitlines()

    def result(
        self,
        lines: list[str],
        value: SessionObject | None = None,
        *,
        passed: bool = True,
        machine: dict[str, str] | None = None,
    ) -> CommandResult:
        data = {"command": self.statement.command, "passed": "yes" if passed else "no"}
        if isinstance(value, (ChainComplex, ChainMap)):
            data.update(self.renderer.machine(value, self.label))

        data.update(machine or {})
        return CommandResult(self.statement.text, passed, lines, data, value)


Handler = Callable[[CommandContext, Arguments], CommandResult]


class _Command(NamedTuple):
    handler: Handler
    options: dict[str, int]
    summary: str


COMMANDS: dict[str, _Command] = {}


def command(name: str, summary: str, **options: int) -> Callable[[Handler], Handler]:
    """Register a command handler; keyword arguments name its options and their number of values."""

    def decorator(handler: Handler) -> Handler:
        COMMANDS[name] = _Command(handler, {key.replace("_", "-"): count for key, count in options.items()}, summary)
        return handler

    return decorator


def _report_lines(reports: Iterable[CheckReport]) -> list[str]:
    return [report.describe() for report in reports]


def _default_window(context: CommandContext, complex_: ChainComplex) -> Window:
    return Window(*context.settings.default_window) if complex_.periodicity is not None else complex_.window


# Complexes
# ----------------------------------------------------------------------------
@command("check", "Validate a complex and check total acyclicity", window=2)
def _check(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    complex_ = context.workspace.complex(name)
    window = arguments.window_option() or _default_window(context, complex_)
    validation = validate_complex(complex_)
    acyclicity = total_acyclicity_check(complex_, window)
    lines = [
        f"{name}: differentials compose to zero"
        if validation
        else f"{name}: differentials do not compose to zero in degree {validation.failing_degree}",
        f"{name}: {acyclicity.describe()} on {window}",
    ]
    machine = {"valid": "yes" if validation else "no", "acyclic": "yes" if acyclicity else "no"}
    if acyclicity.failing_degree is not None:
        machine["failing_degree"] = str(acyclicity.failing_degree)

    return context.result(lines, passed=bool(validation) and bool(acyclicity), machine=machine)


@command("dual", "Dual complex Hom(C, R)")
def _dual(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    dual = dualize(context.workspace.complex(name))
    return context.result(context.rendered(dual), dual)


@command("shift", "Shifted complex")
def _shift(context: CommandContext, arguments: Arguments) -> CommandResult:
    name, amount = arguments.expect(2)
    shifted = shift(context.workspace.complex(name), arguments.integer(amount, "The shift"))
    return context.result(context.rendered(shifted), shifted)


@command("cone", "Mapping cone of a chain map")
def _cone(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    result = cone(context.workspace.map(name))
    return context.result(context.rendered(result), result)


@command("trcone", "Truncated mapping cone of a lift of a surjection")
def _trcone(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    result = truncated_cone(context.workspace.map(name))
    return context.result(context.rendered(result), result)


@command("homotopic", "Search for a homotopy between two chain maps", window=2)
def _homotopic(context: CommandContext, arguments: Arguments) -> CommandResult:
    first, second = arguments.expect(2)
    f, g = context.workspace.map(first), context.workspace.map(second)
    if f == g:
        return context.result(["homotopic, witness 0"], machine={"homotopic": "yes", "witness": "0"})

    result = find_homotopy(f, g, arguments.window_option())
    if isinstance(result, NotHomotopic):
        lines = [f"not homotopic in degree {result.degree}: {result.reason}"]
        return context.result(lines, passed=False, machine={"homotopic": "no", "degree": str(result.degree)})

    lines = ["homotopic, witness:"]
    lines += [f"    s {n}: {format_matrix(matrix_spec(result.component(n)))}" for n in result.window.degrees()]
    return context.result(lines, machine={"homotopic": "yes", "witness": str(result.window)})


# Resolutions
# ----------------------------------------------------------------------------
@command("resolve", "Minimal free resolution of a module", length=1)
def _resolve(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    module = context.workspace.module(name)
    length = arguments.int_option("length", context.settings.max_resolution_length)
    resolution = minimal_free_resolution(module, length, progress=context.settings.progress)
    dimension = projective_dimension(resolution)
    ranks = [resolution.rank(n) for n in resolution.window.degrees()]
    lines = [f"ranks: {' '.join(map(str, ranks))}"]
    lines.append(f"projective dimension {dimension}" if dimension is not None else "no finite resolution found")
    lines += context.rendered(resolution)
    machine = {"projective_dimension": str(dimension) if dimension is not None else "infinite"}
    return context.result(lines, resolution, machine=machine)


@command("complete-res", "Complete resolution of a module", window=2)
def _complete_res(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    module = context.workspace.module(name)
    window = arguments.window_option() or Window(*context.settings.default_window)
    completion = complete_resolution(module, context.settings, window=window)
    lines = [f"path: {completion.path.value}"]
    machine = {"path": completion.path.value}
    if completion.path == ResolutionPath.FINITE:
        lines.append(f"finite projective dimension {completion.projective_dimension}; the complex is zero")
        machine["projective_dimension"] = str(completion.projective_dimension)
    elif completion.tail is not None:
        lines.append(f"period {completion.tail.period} from degree {completion.tail.onset}")

    acyclicity = total_acyclicity_check(completion.complex, window)
    lines.append(f"{acyclicity.describe()} on {window}")
    lines += context.rendered(completion.complex)
    return context.result(lines, completion.complex, passed=bool(acyclicity), machine=machine)


# Functors
# ----------------------------------------------------------------------------
@command("apply-s", "Base change of a complex over the base ring", to=1)
def _apply_s(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    complex_ = context.workspace.complex(name)
    adjunction = context.workspace.adjunction_over(complex_.ring, arguments.text_option("to"))
    reduced = adjunction.apply_S(complex_)
    return context.result(context.rendered(reduced), reduced)


@command("apply-t", "Complete resolution over the base ring of the degree zero image")
def _apply_t(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    complex_ = context.workspace.complex(name)
    image = context.quotient_adjunction(complex_).apply_T(complex_)
    lines: list[str] = []
    machine = {"path": image.completion.path.value}
    if image.completion.path == ResolutionPath.FINITE:
        dimension = image.completion.projective_dimension
        lines.append(f"T {name} is the zero complex; pd_Q(Im d0) = {dimension}")
        machine["projective_dimension"] = str(dimension)

    lines += context.rendered(image.complex)
    return context.result(lines, image.complex, machine=machine)


def _against(context: CommandContext, arguments: Arguments, f: ChainMap, what: str) -> tuple[list[str], bool]:
    other = arguments.text_option("against")
    if other is None:
        return [], True

    g = context.workspace.map(other)
    report = homotopy_report(f"{what} against {other}", f, g, f.common_support(g)[0].shrink())
    return [report.describe()], bool(report)


@command("unit", "Unit of the adjunction on a complex over the base ring", to=1, against=1)
def _unit(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    complex_ = context.workspace.complex(name)
    adjunction = context.workspace.adjunction_over(complex_.ring, arguments.text_option("to"))
    eta = adjunction.unit(complex_)
    lines, passed = _against(context, arguments, eta, "unit")
    return context.result([*context.rendered(eta), *lines], eta, passed=passed)


@command("counit", "Counit of the adjunction, the right approximation map", against=1)
def _counit(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    complex_ = context.workspace.complex(name)
    epsilon = context.quotient_adjunction(complex_).counit(complex_)
    lines, passed = _against(context, arguments, epsilon, "counit")
    return context.result([*context.rendered(epsilon), *lines], epsilon, passed=passed)


@command("triangle-id", "Both triangle identities of the adjunction on C and TC")
def _triangle_id(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    complex_ = context.workspace.complex(name)
    adjunction = context.quotient_adjunction(complex_)
    reports = triangle_identities(adjunction, complex_, adjunction.apply_T(complex_).complex)
    return context.result(_report_lines(reports), passed=all(reports))


@command("naturality", "Naturality square of the unit or counit along a map")
def _naturality(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    f = context.workspace.map(name)
    adjunction = _adjunction_for_map(context, f)
    report = naturality_check(adjunction, f)
    return context.result(_report_lines([report]), passed=bool(report))


@command("functoriality", "Composition of maps against the composition of their images")
def _functoriality(context: CommandContext, arguments: Arguments) -> CommandResult:
    first, second = arguments.expect(2)
    f, g = context.workspace.map(first), context.workspace.map(second)
    report = functoriality_check(_adjunction_for_map(context, f), f, g)
    return context.result(_report_lines([report]), passed=bool(report))


@command("shift-compat", "T against the shift")
def _shift_compat(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    complex_ = context.workspace.complex(name)
    report = shift_compatibility(context.quotient_adjunction(complex_), complex_)
    return context.result(_report_lines([report]), passed=bool(report))


@command("compose-check", "Functors of a composite quotient against the composites of its steps")
def _compose_check(context: CommandContext, arguments: Arguments) -> CommandResult:
    names = arguments.expect(4, 5)
    base, middle, top = (context.workspace.ring(n) for n in names[:3])
    complex_ = context.workspace.complex(names[3])
    if len(names) == 5:  # noqa: PLR2004
        base_complex = context.workspace.complex(names[4])
    else:
        base_complex = Adjunction(base, top, context.settings).apply_T(complex_).complex

    reports = compose_functors_check((base, middle, top), base_complex, complex_, context.settings)
    return context.result(_report_lines(reports), passed=all(reports))


def _adjunction_for_map(context: CommandContext, f: ChainMap) -> Adjunction:
    try:
        return context.workspace.adjunction(f.ring)
    except SessionSemanticError:
        return context.workspace.adjunction_over(f.ring)


# Approximations
# ----------------------------------------------------------------------------
@command("approx-right", "Right approximation of a complex")
def _approx_right(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    complex_ = context.workspace.complex(name)
    approximation = right_approximation(context.quotient_adjunction(complex_), complex_)
    machine = {"trivial": "yes" if approximation.is_trivial else "no"}
    if approximation.is_trivial:
        dimension = approximation.image.completion.projective_dimension
        machine["projective_dimension"] = str(dimension)
        lines = [f"source is the zero complex; pd_Q(Im d0) = {dimension}"]
    else:
        lines = context.rendered(approximation.complex, f"S_T_{name}")

    return context.result([*lines, *context.rendered(approximation.map)], approximation.map, machine=machine)


@command("approx-left", "Left approximation of a complex")
def _approx_left(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    complex_ = context.workspace.complex(name)
    approximation = left_approximation(context.quotient_adjunction(complex_), complex_)
    lines = context.rendered(approximation.complex, f"left_{name}")
    return context.result([*lines, *context.rendered(approximation.map)], approximation.map)


@command("minimality", "Whether an endomorphism witnesses that an approximation is not right minimal", window=2)
def _minimality(context: CommandContext, arguments: Arguments) -> CommandResult:
    first, second = arguments.expect(2)
    epsilon, f = context.workspace.map(first), context.workspace.map(second)
    verdict = minimality_witness(epsilon, f, arguments.window_option())
    machine = {
        "factors": "yes" if verdict.factors else "no",
        "equivalence": "yes" if verdict.equivalence else "no",
        "witness": "yes" if verdict.witness else "no",
    }
    if verdict.degree is not None:
        machine["degree"] = str(verdict.degree)

    return context.result([verdict.describe()], machine=machine)


@command("cone-counit", "Cone of the counit, compared with the double shift when pd_Q R = 1")
def _cone_counit(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    complex_ = context.workspace.complex(name)
    result = cone_of_counit(context.quotient_adjunction(complex_), complex_)
    lines = context.rendered(result.model.complex)
    passed = True
    if result.equivalence is None:
        lines.append("no comparison: the projective dimension is not one")
    elif isinstance(result.equivalence, Equivalence):
        lines.append(f"cone of the counit is homotopy equivalent to the double shift of {name}")
    else:
        passed = False
        lines.append(f"cone of the counit is not equivalent to the double shift: {result.equivalence.reason}")

    return context.result(lines, result.complex, passed=passed)


@command("triangle-res", "Tower of iterated right approximations", depth=1)
def _triangle_res(context: CommandContext, arguments: Arguments) -> CommandResult:
    (name,) = arguments.expect(1)
    complex_ = context.workspace.complex(name)
    adjunction = context.quotient_adjunction(complex_)
    depth = arguments.int_option("depth", 1)
    steps = triangle_resolution(adjunction, complex_, depth)
    lines: list[str] = []
    for level, step in enumerate(steps):
        ranks = " ".join(str(step.complex.rank(n)) for n in step.map.window.degrees())
        lines.append(f"B{level}: ranks {ranks} on {step.map.window}")

    reports = triangle_checks(adjunction, steps)
    lines += _report_lines(reports)
    return context.result(lines, steps[-1].map, passed=all(reports), machine={"depth": str(depth)})


# Running
# ----------------------------------------------------------------------------
def run_command(workspace: Workspace, statement: CommandStatement) -> CommandResult:
    """Run one command and bind its result when the statement names one.

    Raises:
        SessionSemanticError: On an unknown command, bad arguments or undefined names.
    """
    with at_line(statement.line, library=False):
        entry = COMMANDS.get(statement.command)
        if entry is None:
            msg = f"Unknown command {statement.command!r}; commands: {', '.join(sorted(COMMANDS))}"
            raise SessionSemanticError(msg)

        arguments = Arguments.parse(statement.command, statement.arguments, entry.options)
        context = CommandContext(workspace, SessionRenderer(workspace), statement)
        logger.info("Running %s", statement.text)
        result = entry.handler(context, arguments)
        if statement.bind:
            if result.value is None:
                msg = f"{statement.command} has no result to bind to {statement.bind!r}"
                raise SessionSemanticError(msg)

            workspace.bind(statement.bind, result.value)

    return result


def run_session(
    session: Session,
    settings: Settings | None = None,
    *,
    commands: Iterable[str] | None = None,
) -> Iterator[CommandResult]:
    """Build declarations and run commands in file order.

    Args:
        session: Parsed session.
        settings: Computation settings.
        commands: Names of the commands to run; all commands run when omitted.

    Yields:
        One result per command that was run.
    """
    selected = set(commands) if commands is not None else None
    workspace = Workspace(settings or Settings.from_session(session))
    for statement in session.statements:
        if not isinstance(statement, CommandStatement):
            workspace.declare(statement)
            continue

        if selected is not None and statement.command not in selected:
            if statement.bind:
                workspace.deferred.add(statement.bind)

            continue

        yield run_command(workspace, statement)
