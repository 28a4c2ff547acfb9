"""Statements of a session file, as written and before any algebra is done with them."""

from __future__ import annotations

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator


class MatrixSpec(BaseModel):
    """Matrix as polynomial text, row by row; no rows stands for the zero matrix of the shape."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    shape: tuple[int, int]
    rows: tuple[tuple[str, ...], ...] = ()

    @model_validator(mode="after")
    def _check_shape(self) -> MatrixSpec:
        target, source = self.shape
        if not self.rows:
            return self

        if target == 0 or source == 0:
            msg = "An empty matrix has no rows"
            raise ValueError(msg)

        if len(self.rows) != target or any(len(row) != source for row in self.rows):
            msg = f"Rows do not form a {target}x{source} matrix"
            raise ValueError(msg)

        return self

    @classmethod
    def from_rows(cls, rows: list[list[str]]) -> MatrixSpec:
        return cls(shape=(len(rows), len(rows[0])), rows=tuple(tuple(row) for row in rows))


class PeriodSpec(BaseModel):
    """Periodic extension beyond a window."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    period: int = Field(gt=0)
    below: bool = True
    above: bool = True


class _Statement(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    line: int = Field(default=0, exclude=True, repr=False)
    """One-based line where the statement starts; not part of the statement's identity."""

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _Statement):
            return NotImplemented

        return type(self) is type(other) and self.model_dump() == other.model_dump()

    def __hash__(self) -> int:
        return hash((type(self), self.model_dump_json()))


class RingStatement(_Statement):
    """`ring Q = poly x,y | ideal x^2` or `ring R = Q | extra y^2`."""

    kind: Literal["ring"] = "ring"
    name: str
    variables: tuple[str, ...] = ()
    ideal: tuple[str, ...] = ()
    parent: Optional[str] = None
    extra: tuple[str, ...] = ()

    @model_validator(mode="after")
    def _check_form(self) -> RingStatement:
        if (self.parent is None) == (not self.variables):
            msg = "A ring is declared either over variables or as a quotient of another ring"
            raise ValueError(msg)

        return self


class ModuleStatement(_Statement):
    """`module M over R = coker [[x, y]]`."""

    kind: Literal["module"] = "module"
    name: str
    ring: str
    relations: MatrixSpec


class ComplexStatement(_Statement):
    """`complex C over R = window -2..2 { deg 0: [[x]], ... } period 1`."""

    kind: Literal["complex"] = "complex"
    name: str
    ring: str
    window: tuple[int, int]
    differentials: dict[int, MatrixSpec] = Field(default_factory=dict)
    ranks: dict[int, int] = Field(default_factory=dict)
    period: Optional[PeriodSpec] = None


class MapStatement(_Statement):
    """`map f: C -> D = window -2..2 { deg 0: [[y]] } period 1`; the window is optional."""

    kind: Literal["map"] = "map"
    name: str
    source: str
    target: str
    window: Optional[tuple[int, int]] = None
    components: dict[int, MatrixSpec] = Field(default_factory=dict)
    period: Optional[PeriodSpec] = None


class CommandStatement(_Statement):
    """`run counit C as eps`."""

    kind: Literal["run"] = "run"
    command: str
    arguments: tuple[str, ...] = ()
    bind: Optional[str] = None
    """Name the command's result is registered under."""

    @property
    def text(self) -> str:
        words = [self.command, *self.arguments]
        if self.bind:
            words += ["as", self.bind]

        return " ".join(words)


Statement = Annotated[
    Union[RingStatement, ModuleStatement, ComplexStatement, MapStatement, CommandStatement],
    Field(discriminator="kind"),
]


class Session(BaseModel):
    """A parsed session file: the field, then declarations and commands in file order."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    modulus: Optional[int] = None
    statements: tuple[Statement, ...] = ()

    @property
    def commands(self) -> list[CommandStatement]:
        return [s for s in self.statements if isinstance(s, CommandStatement)]

    @property
    def declarations(self) -> list[Union[RingStatement, ModuleStatement, ComplexStatement, MapStatement]]:
        return [s for s in self.statements if not isinstance(s, CommandStatement)]
