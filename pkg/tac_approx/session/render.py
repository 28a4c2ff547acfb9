"""Printing sessions and computed objects back in the session grammar."""

from __future__ import annotations

from typing import TYPE_CHECKING, Union

from tac_approx.complexes import ChainComplex, ChainMap, Periodicity

from .models import (
    CommandStatement,
    ComplexStatement,
    MapStatement,
    MatrixSpec,
    ModuleStatement,
    PeriodSpec,
    RingStatement,
)

if TYPE_CHECKING:
    from tac_approx.algebra import FreeMap, ModulePresentation, QuotientRing

    from .models import Session
    from .workspace import Workspace

INDENT = "    "

_Renderable = Union[RingStatement, ModuleStatement, ComplexStatement, MapStatement, CommandStatement]


def matrix_spec(m: FreeMap) -> MatrixSpec:
    if m.target_rank == 0 or m.source_rank == 0 or m.is_zero():
        return MatrixSpec(shape=m.shape)

    return MatrixSpec(shape=m.shape, rows=tuple(tuple(m.ring.format(e) for e in row) for row in m.entries))


def period_spec(periodicity: Periodicity | None) -> PeriodSpec | None:
    if periodicity is None or not (periodicity.below or periodicity.above):
        return None

    return PeriodSpec(period=periodicity.period, below=periodicity.below, above=periodicity.above)


def format_matrix(spec: MatrixSpec) -> str:
    if not spec.rows:
        return f"zero({spec.shape[0]}x{spec.shape[1]})"

    return "[" + ", ".join("[" + ", ".join(row) + "]" for row in spec.rows) + "]"


def _format_period(spec: PeriodSpec | None) -> str:
    if spec is None:
        return ""

    side = "" if spec.below == spec.above else (" below" if spec.below else " above")
    return f" period {spec.period}{side}"


def _format_block(entries: list[tuple[str, int, str]]) -> str:
    if not entries:
        return "{ }"

    lines = [f"{INDENT}{kind} {degree}: {value}" for kind, degree, value in entries]
    return "{\n" + ",\n".join(lines) + "\n}"


def render_statement(statement: _Renderable) -> str:
    """One statement in the session grammar; parsing the text gives the statement back."""
    if isinstance(statement, RingStatement):
        if statement.parent is None:
            text = f"ring {statement.name} = poly {','.join(statement.variables)}"
            return text + (f" | ideal {', '.join(statement.ideal)}" if statement.ideal else "")

        text = f"ring {statement.name} = {statement.parent}"
        return text + (f" | extra {', '.join(statement.extra)}" if statement.extra else "")

    if isinstance(statement, ModuleStatement):
        return f"module {statement.name} over {statement.ring} = coker {format_matrix(statement.relations)}"

    if isinstance(statement, ComplexStatement):
        lo, hi = statement.window
        entries = [("deg", n, format_matrix(spec)) for n, spec in sorted(statement.differentials.items())]
        entries += [("rank", n, str(r)) for n, r in sorted(statement.ranks.items())]
        head = f"complex {statement.name} over {statement.ring} = window {lo}..{hi} "
        return head + _format_block(entries) + _format_period(statement.period)

    if isinstance(statement, MapStatement):
        head = f"map {statement.name}: {statement.source} -> {statement.target} = "
        if statement.window is not None:
            head += f"window {statement.window[0]}..{statement.window[1]} "

        entries = [("deg", n, format_matrix(spec)) for n, spec in sorted(statement.components.items())]
        return head + _format_block(entries) + _format_period(statement.period)

    return f"run {statement.text}"


def render_session(session: Session) -> str:
    lines = [f"field {session.modulus}"] if session.modulus is not None else []
    lines += [render_statement(statement) for statement in session.statements]
    return "\n".join(lines) + "\n" if lines else ""


class SessionRenderer:
    """Turns computed objects into statements named after the objects of a workspace."""

    def __init__(self, workspace: Workspace) -> None:  # noqa: D107
        self.workspace = workspace

    def name_for(self, value: QuotientRing | ChainComplex | ChainMap, default: str) -> str:
        name = self.workspace.name_of(value)
        if name is not None:
            return name

        return value.name or default

    # Statements
    # ------------------------------------------------------------------------
    def ring_statement(self, ring: QuotientRing, name: str) -> RingStatement:
        parent = self.workspace.name_of(ring.parent) if ring.parent is not None else None
        if parent is not None and ring.parent is not None:
            extra = tuple(ring.parent.format(g) for g in ring.extra)
            return RingStatement(name=name, parent=parent, extra=extra)

        return RingStatement(name=name, variables=ring.variables, ideal=tuple(ring.format(g) for g in ring.ideal))

    def module_statement(self, module: ModulePresentation, name: str) -> ModuleStatement:
        ring = self.name_for(module.ring, "R")
        return ModuleStatement(name=name, ring=ring, relations=matrix_spec(module.relations))

    def complex_statement(self, complex_: ChainComplex, name: str) -> ComplexStatement:
        """Statement of a complex; ranks are written only where no differential records them."""
        lo, hi = complex_.window
        return ComplexStatement(
            name=name,
            ring=self.name_for(complex_.ring, "R"),
            window=(lo, hi),
            differentials={n: matrix_spec(d) for n, d in complex_.items()},
            ranks={lo: complex_.rank(lo)} if lo == hi else {},
            period=period_spec(complex_.periodicity),
        )

    def map_statement(self, f: ChainMap, name: str) -> MapStatement:
        return MapStatement(
            name=name,
            source=self.name_for(f.source, f"{name}_source"),
            target=self.name_for(f.target, f"{name}_target"),
            window=(f.window.lo, f.window.hi),
            components={n: matrix_spec(m) for n, m in f.items()},
            period=period_spec(f.periodicity),
        )

    def render(self, value: ChainComplex | ChainMap, name: str) -> str:
        if isinstance(value, ChainComplex):
            return render_statement(self.complex_statement(value, name))

        return render_statement(self.map_statement(value, name))

    # Machine readable block
    # ------------------------------------------------------------------------
    def machine(self, value: ChainComplex | ChainMap, name: str) -> dict[str, str]:
        """Key/value description of a complex or map for test harnesses."""
        if isinstance(value, ChainComplex):
            window = value.window
            data = {
                "kind": "complex",
                "name": name,
                "ring": self.name_for(value.ring, "R"),
                "window": str(window),
                "ranks": ",".join(str(value.rank(n)) for n in window.degrees()),
                "minimal": _yes_no(value.is_minimal()),
            }
            if value.periodicity is not None:
                data["period"] = str(value.periodicity.period)

            return data

        return {
            "kind": "map",
            "name": name,
            "source": self.name_for(value.source, f"{name}_source"),
            "target": self.name_for(value.target, f"{name}_target"),
            "window": str(value.window),
            "chain_map": _yes_no(value.is_chain_map()),
        }


def _yes_no(flag: bool) -> str:  # noqa: FBT001
    return "yes" if flag else "no"
