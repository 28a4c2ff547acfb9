"""Line-oriented parser for session files.

A session is a sequence of statements, one per line except for brace blocks, which may span lines:

```
field 32003
ring Q = poly x,y | ideal x^2
ring R = Q | extra y^2
module M over R = coker [[x*y]]
complex C over R = window -2..2 {
    deg -1: [[x]], deg 0: [[x]], deg 1: [[x]], deg 2: [[x]]
} period 1
map f: C -> C = { deg 0: [[y]] } period 1
run counit C as eps
```

Text after `#` is a comment. Matrix entries are polynomials in the ring's variables; `zero(2x3)` is the
zero matrix of that shape.
"""

from __future__ import annotations

import logging
import re
from typing import TYPE_CHECKING, Any, Callable, NamedTuple

from pydantic import ValidationError

from .errors import SessionSyntaxError
from .models import (
    CommandStatement,
    ComplexStatement,
    MapStatement,
    MatrixSpec,
    ModuleStatement,
    PeriodSpec,
    RingStatement,
    Session,
)

if TYPE_CHECKING:
    from pydantic import BaseModel

logger = logging.getLogger(__name__)

_NAME = r"[A-Za-z_]\w*"
_INT = r"-?\d+"

_FIELD = re.compile(rf"field\s+({_INT})")
_POLY_RING = re.compile(rf"ring\s+({_NAME})\s*=\s*poly\s+([^|]+?)(?:\s*\|\s*ideal\s+(.+))?")
_QUOTIENT_RING = re.compile(rf"ring\s+({_NAME})\s*=\s*({_NAME})(?:\s*\|\s*extra\s+(.+))?")
_MODULE = re.compile(rf"module\s+({_NAME})\s+over\s+({_NAME})\s*=\s*coker\s+(.+)")
_COMPLEX = re.compile(
    rf"complex\s+({_NAME})\s+over\s+({_NAME})\s*=\s*window\s+({_INT})\s*\.\.\s*({_INT})\s*\{{(.*)\}}\s*(.*)",
    re.DOTALL,
)
_MAP = re.compile(
    rf"map\s+({_NAME})\s*:\s*({_NAME})\s*->\s*({_NAME})\s*=\s*"
    rf"(?:window\s+({_INT})\s*\.\.\s*({_INT})\s*)?\{{(.*)\}}\s*(.*)",
    re.DOTALL,
)
_RUN = re.compile(r"run\s+(.+)")
_PERIOD = re.compile(r"period\s+(\d+)(?:\s+(below|above))?")
_ENTRY = re.compile(rf"\b(deg|rank)\s+({_INT})\s*:\s*")
_ZERO = re.compile(r"zero\(\s*(\d+)\s*x\s*(\d+)\s*\)")
_ROW = re.compile(r"\[([^\[\]]*)\]")


class _Chunk(NamedTuple):
    """Text of one statement with the line numbers of its physical lines."""

    text: str
    lines: list[tuple[int, str]]

    @property
    def line(self) -> int:
        return self.lines[0][0]

    def locate(self, offset: int) -> tuple[int, int]:
        """Line and column of an offset into the joined text."""
        for number, text in self.lines:
            if offset <= len(text):
                return number, offset + 1

            offset -= len(text) + 1

        number, text = self.lines[-1]
        return number, len(text) + 1

    def error(self, message: str, offset: int = 0) -> SessionSyntaxError:
        line, column = self.locate(offset)
        return SessionSyntaxError(message, line=line, column=column)


def _strip_comment(text: str) -> str:
    return text.split("#", 1)[0].rstrip()


def _chunks(text: str) -> list[_Chunk]:
    chunks: list[_Chunk] = []
    pending: list[tuple[int, str]] = []
    depth = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip() and not pending:
            continue

        pending.append((number, line))
        depth += line.count("{") - line.count("}")
        if depth < 0:
            raise SessionSyntaxError("Unmatched '}'", line=number, column=line.index("}") + 1)

        if depth == 0:
            chunks.append(_Chunk("\n".join(t for _, t in pending), pending))
            pending = []

    if pending:
        first, body = pending[0]
        raise SessionSyntaxError("Unclosed '{'", line=first, column=body.index("{") + 1)

    return chunks


def _split_list(chunk: _Chunk, text: str, what: str) -> tuple[str, ...]:
    items = tuple(item.strip() for item in text.split(","))
    if any(not item for item in items):
        raise chunk.error(f"Empty entry in the list of {what}", chunk.text.find(text))

    return items


def parse_matrix(text: str) -> MatrixSpec:
    """Parse `[[a, b], [c, d]]` or `zero(2x3)`.

    Raises:
        ValueError: If the text is not a matrix.
    """
    text = text.strip()
    if zero := _ZERO.fullmatch(text):
        return MatrixSpec(shape=(int(zero.group(1)), int(zero.group(2))))

    if not (text.startswith("[") and text.endswith("]")):
        msg = f"Expected a matrix such as [[x, y]], got {text!r}"
        raise ValueError(msg)

    inner = text[1:-1]
    if _ROW.sub("", inner).replace(",", "").strip():
        msg = f"Unexpected text between the rows of {text!r}"
        raise ValueError(msg)

    rows = [[entry.strip() for entry in row.split(",")] for row in _ROW.findall(inner)]
    if not rows or any(not entry for row in rows for entry in row):
        msg = f"Empty matrix entry in {text!r}"
        raise ValueError(msg)

    if len({len(row) for row in rows}) != 1:
        msg = f"Rows of {text!r} have different lengths"
        raise ValueError(msg)

    return MatrixSpec.from_rows(rows)


def _matrix(chunk: _Chunk, text: str, offset: int) -> MatrixSpec:
    try:
        return parse_matrix(text)
    except ValueError as err:
        raise chunk.error(str(err), offset) from None


def _period(chunk: _Chunk, text: str, offset: int) -> PeriodSpec | None:
    text = text.strip()
    if not text:
        return None

    if not (match := _PERIOD.fullmatch(text)):
        raise chunk.error(f"Expected 'period p [below|above]' after the block, got {text!r}", offset)

    side = match.group(2)
    return PeriodSpec(period=int(match.group(1)), below=side != "above", above=side != "below")


def _block(chunk: _Chunk, body: str, offset: int, *, ranks: bool) -> tuple[dict[int, MatrixSpec], dict[int, int]]:
    """Entries `deg n: MATRIX` (and `rank n: r` when allowed), separated by commas or line breaks."""
    matrices: dict[int, MatrixSpec] = {}
    rank_entries: dict[int, int] = {}
    entries = list(_ENTRY.finditer(body))
    leading = body[: entries[0].start()] if entries else body
    if leading.replace(",", "").strip():
        where = offset + len(leading) - len(leading.lstrip())
        raise chunk.error("Expected 'deg n: MATRIX' entries in the block", where)

    for i, entry in enumerate(entries):
        end = entries[i + 1].start() if i + 1 < len(entries) else len(body)
        value = body[entry.end() : end].strip().rstrip(",").strip()
        degree = int(entry.group(2))
        where = offset + entry.start()
        if degree in matrices or degree in rank_entries:
            raise chunk.error(f"Degree {degree} is given twice", where)

        if entry.group(1) == "rank":
            if not ranks:
                raise chunk.error("Ranks can only be given for complexes", where)

            if not value.isdigit():
                raise chunk.error(f"Expected a rank, got {value!r}", where)

            rank_entries[degree] = int(value)
        else:
            matrices[degree] = _matrix(chunk, value, offset + entry.end())

    return matrices, rank_entries


def _field(chunk: _Chunk, match: re.Match[str]) -> int:
    del chunk
    return int(match.group(1))


def _ring(chunk: _Chunk, match: re.Match[str]) -> RingStatement:
    if match.re is _POLY_RING:
        ideal = _split_list(chunk, match.group(3), "ideal generators") if match.group(3) else ()
        variables = _split_list(chunk, match.group(2), "variables")
        return RingStatement(name=match.group(1), variables=variables, ideal=ideal, line=chunk.line)

    extra = _split_list(chunk, match.group(3), "extra generators") if match.group(3) else ()
    return RingStatement(name=match.group(1), parent=match.group(2), extra=extra, line=chunk.line)


def _module(chunk: _Chunk, match: re.Match[str]) -> ModuleStatement:
    relations = _matrix(chunk, match.group(3), match.start(3))
    return ModuleStatement(name=match.group(1), ring=match.group(2), relations=relations, line=chunk.line)


def _complex(chunk: _Chunk, match: re.Match[str]) -> ComplexStatement:
    differentials, ranks = _block(chunk, match.group(5), match.start(5), ranks=True)
    return ComplexStatement(
        name=match.group(1),
        ring=match.group(2),
        window=(int(match.group(3)), int(match.group(4))),
        differentials=differentials,
        ranks=ranks,
        period=_period(chunk, match.group(6), match.start(6)),
        line=chunk.line,
    )


def _map(chunk: _Chunk, match: re.Match[str]) -> MapStatement:
    components, _ = _block(chunk, match.group(6), match.start(6), ranks=False)
    window = (int(match.group(4)), int(match.group(5))) if match.group(4) is not None else None
    return MapStatement(
        name=match.group(1),
        source=match.group(2),
        target=match.group(3),
        window=window,
        components=components,
        period=_period(chunk, match.group(7), match.start(7)),
        line=chunk.line,
    )


def _run(chunk: _Chunk, match: re.Match[str]) -> CommandStatement:
    words = match.group(1).split()
    bind = None
    if len(words) >= 2 and words[-2] == "as":  # noqa: PLR2004
        bind = words[-1]
        words = words[:-2]
        if not re.fullmatch(_NAME, bind):
            raise chunk.error(f"Cannot bind a result to {bind!r}", chunk.text.rfind(bind))

    if not words:
        raise chunk.error("Expected a command after 'run'", len("run"))

    return CommandStatement(command=words[0], arguments=tuple(words[1:]), bind=bind, line=chunk.line)


_RULES: tuple[tuple[re.Pattern[str], Callable[[_Chunk, re.Match[str]], Any]], ...] = (
    (_FIELD, _field),
    (_POLY_RING, _ring),
    (_QUOTIENT_RING, _ring),
    (_MODULE, _module),
    (_COMPLEX, _complex),
    (_MAP, _map),
    (_RUN, _run),
)


def _statement(chunk: _Chunk) -> int | BaseModel:
    text = chunk.text.strip()
    indent = len(chunk.text) - len(chunk.text.lstrip())
    for pattern, build in _RULES:
        if match := pattern.fullmatch(text):
            shifted = _Chunk(text, [(chunk.lines[0][0], chunk.lines[0][1].lstrip()), *chunk.lines[1:]])
            try:
                return build(shifted, match)  # type: ignore[no-any-return]
            except ValidationError as err:
                message = err.errors()[0]["msg"]
                raise chunk.error(message, indent) from None

    keyword = text.split(maxsplit=1)[0]
    known = ("field", "ring", "module", "complex", "map", "run")
    if keyword in known:
        raise chunk.error(f"Malformed '{keyword}' statement", indent)

    raise chunk.error(f"Unknown statement {keyword!r}; expected one of {', '.join(known)}", indent)


def parse_session(text: str) -> Session:
    """Parse a session file.

    Raises:
        SessionSyntaxError: With the line and column of the first statement that does not parse.
    """
    modulus = None
    statements = []
    for chunk in _chunks(text):
        result = _statement(chunk)
        if isinstance(result, int):
            if modulus is not None or statements:
                raise chunk.error("'field' must be the first statement and appear once")

            modulus = result
        else:
            statements.append(result)

    logger.debug("Parsed %d statements", len(statements))
    return Session(modulus=modulus, statements=tuple(statements))
