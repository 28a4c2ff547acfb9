"""Named objects of a session, built from its declarations."""

from __future__ import annotations

import logging
from contextlib import contextmanager
from typing import TYPE_CHECKING, TypeVar, Union

from tac_approx.algebra import AlgebraError, FreeMap, ModulePresentation, QuotientRing, RingClass
from tac_approx.complexes import ChainComplex, ChainMap, ComplexError, Periodicity, validated
from tac_approx.functors import Adjunction, FunctorError
from tac_approx.settings import Settings

from .errors import SessionSemanticError, UndefinedNameError
from .models import CommandStatement, ComplexStatement, MapStatement, ModuleStatement, RingStatement

if TYPE_CHECKING:
    from collections.abc import Iterator

    from .models import MatrixSpec, PeriodSpec, Session

logger = logging.getLogger(__name__)

SessionObject = Union[QuotientRing, ModulePresentation, ChainComplex, ChainMap]
Declaration = Union[RingStatement, ModuleStatement, ComplexStatement, MapStatement]

_T = TypeVar("_T", QuotientRing, ModulePresentation, ChainComplex, ChainMap)

_KINDS: dict[type, str] = {
    QuotientRing: "ring",
    ModulePresentation: "module",
    ChainComplex: "complex",
    ChainMap: "map",
}


@contextmanager
def at_line(line: int, *, library: bool = True) -> Iterator[None]:
    """Prefix session errors with the statement's line, and turn library errors into session errors when asked."""
    try:
        yield
    except UndefinedNameError as err:
        if line and not str(err).startswith("line "):
            raise UndefinedNameError(f"line {line}: {err}") from None

        raise
    except SessionSemanticError as err:
        if line and not str(err).startswith("line "):
            raise SessionSemanticError(f"line {line}: {err}") from None

        raise
    except (AlgebraError, ComplexError, FunctorError) as err:
        if not library:
            raise

        prefix = f"line {line}: " if line else ""
        raise SessionSemanticError(f"{prefix}{err}") from err


def matrix_from_spec(ring: QuotientRing, spec: MatrixSpec) -> FreeMap:
    target, source = spec.shape
    if not spec.rows:
        return FreeMap.zero(ring, target, source)

    return FreeMap(ring, spec.rows, source_rank=source, target_rank=target)


def _references(statement: Declaration) -> set[str | None]:
    if isinstance(statement, RingStatement):
        return {statement.parent}

    if isinstance(statement, MapStatement):
        return {statement.source, statement.target}

    return {statement.ring}


def periodicity_from_spec(spec: PeriodSpec | None) -> Periodicity | None:
    if spec is None:
        return None

    return Periodicity(spec.period, below=spec.below, above=spec.above)


class Workspace:
    """Rings, modules, complexes and maps of a session, by name, with one adjunction per quotient ring."""

    def __init__(self, settings: Settings | None = None) -> None:  # noqa: D107
        self.settings = settings or Settings()
        self.objects: dict[str, SessionObject] = {}
        self.deferred: set[str] = set()
        """Names that only a command which was not run would bind."""

        self._adjunctions: dict[QuotientRing, Adjunction] = {}

    @classmethod
    def from_session(cls, session: Session, settings: Settings | None = None) -> Workspace:
        """Build every declaration of a session in file order without running its commands.

        Declarations that use results of commands are skipped.

        Raises:
            SessionSemanticError: If a declaration does not describe a valid object.
            UndefinedNameError: If a declaration refers to a name declared nowhere before it.
        """
        workspace = cls(settings)
        for statement in session.statements:
            if isinstance(statement, CommandStatement):
                if statement.bind:
                    workspace.deferred.add(statement.bind)
            else:
                workspace.declare(statement)

        logger.info("Session declares %d objects", len(workspace.objects))
        return workspace

    def declare(self, statement: Declaration) -> bool:
        """Build one declaration and register it under its name.

        Returns:
            Whether the declaration was built; it is skipped when it uses a deferred name.
        """
        if _references(statement) & self.deferred:
            logger.debug("Skipping %s, which uses the result of a command", statement.name)
            self.deferred.add(statement.name)
            return False

        with at_line(statement.line):
            if isinstance(statement, RingStatement):
                self.add_ring(statement)
            elif isinstance(statement, ModuleStatement):
                self.add_module(statement)
            elif isinstance(statement, ComplexStatement):
                self.add_complex(statement)
            else:
                self.add_map(statement)

        return True

    # Names
    # ------------------------------------------------------------------------
    def bind(self, name: str, value: SessionObject) -> None:
        """Register an object under a new name.

        Raises:
            SessionSemanticError: If the name is taken.
        """
        if name in self.objects:
            msg = f"Name {name!r} is already defined as a {_KINDS[type(self.objects[name])]}"
            raise SessionSemanticError(msg)

        if isinstance(value, (ChainComplex, ChainMap)) and value.name is None:
            value.name = name

        self.objects[name] = value

    def lookup(self, name: str, kind: type[_T]) -> _T:
        """The object of a kind registered under a name.

        Raises:
            UndefinedNameError: If nothing of that kind has the name.
        """
        value = self.objects.get(name)
        if value is None:
            msg = f"Undefined {_KINDS[kind]} {name!r}"
            raise UndefinedNameError(msg)

        if not isinstance(value, kind):
            msg = f"{name!r} is a {_KINDS[type(value)]}, not a {_KINDS[kind]}"
            raise SessionSemanticError(msg)

        return value

    def ring(self, name: str) -> QuotientRing:
        return self.lookup(name, QuotientRing)

    def module(self, name: str) -> ModulePresentation:
        return self.lookup(name, ModulePresentation)

    def complex(self, name: str) -> ChainComplex:
        return self.lookup(name, ChainComplex)

    def map(self, name: str) -> ChainMap:
        return self.lookup(name, ChainMap)

    def name_of(self, value: SessionObject) -> str | None:
        """Name of a registered object, compared by equality over the same ring."""
        ring = getattr(value, "ring", None)
        for name, candidate in self.objects.items():
            if type(candidate) is type(value) and candidate == value and getattr(candidate, "ring", None) == ring:
                return name

        return None

    # Adjunctions
    # ------------------------------------------------------------------------
    def adjunction(self, ring: QuotientRing) -> Adjunction:
        """The adjunction between a declared quotient ring and its parent.

        Raises:
            SessionSemanticError: If the ring was not declared as a quotient.
        """
        for candidate, adjunction in self._adjunctions.items():
            if candidate == ring:
                return adjunction

        msg = f"{ring.describe()} was not declared as a quotient of another ring"
        raise SessionSemanticError(msg)

    def adjunction_over(self, base: QuotientRing, target: str | None = None) -> Adjunction:
        """The adjunction from a base ring, to a named quotient or to its only declared quotient.

        Raises:
            SessionSemanticError: If no quotient, or more than one without a name, is declared.
        """
        if target is not None:
            adjunction = self.adjunction(self.ring(target))
            if adjunction.base != base:
                msg = f"{target!r} is not declared as a quotient of {base.describe()}"
                raise SessionSemanticError(msg)

            return adjunction

        found = [adjunction for adjunction in self._adjunctions.values() if adjunction.base == base]
        if len(found) != 1:
            names = ", ".join(self.name_of(a.ring) or "?" for a in found) or "none"
            msg = f"Name the quotient of {base.describe()} to use; declared quotients: {names}"
            raise SessionSemanticError(msg)

        return found[0]

    # Declarations
    # ------------------------------------------------------------------------
    def add_ring(self, statement: RingStatement) -> QuotientRing:
        """Build a polynomial ring modulo an ideal, or a quotient of a declared ring with its adjunction."""
        if statement.parent is None:
            ring = QuotientRing(
                statement.variables,
                statement.ideal,
                modulus=self.settings.modulus,
                name=statement.name,
            )
            self._check_nonzero(ring, statement.name)
            self.bind(statement.name, ring)
            return ring

        parent = self.ring(statement.parent)
        ring = parent.quotient(statement.extra, name=statement.name)
        self._check_nonzero(ring, statement.name)
        if statement.extra and not ring.extra:
            msg = (
                f"Ring {statement.name!r} is declared with the kernel ({', '.join(statement.extra)}), "
                f"which vanishes in {statement.parent!r}; the two rings are equal"
            )
            raise SessionSemanticError(msg)

        if parent.classification == RingClass.UNSUPPORTED:
            logger.warning("Complete resolutions over %s are not supported", parent.describe())

        try:
            adjunction = Adjunction(parent, ring, self.settings)
        except FunctorError as err:
            msg = f"Ring {statement.name!r} cannot be used over {statement.parent!r}: {err}"
            raise SessionSemanticError(msg) from err

        self.bind(statement.name, ring)
        self._adjunctions[ring] = adjunction
        dimension = adjunction.projective_dimension
        logger.info("Ring %s has projective dimension %d over %s", statement.name, dimension, statement.parent)
        return ring

    @staticmethod
    def _check_nonzero(ring: QuotientRing, name: str) -> None:
        if ring.is_zero(1):
            msg = f"Ring {name!r} is the zero ring; its ideal contains a unit"
            raise SessionSemanticError(msg)

    def add_module(self, statement: ModuleStatement) -> ModulePresentation:
        ring = self.ring(statement.ring)
        module = ModulePresentation(matrix_from_spec(ring, statement.relations))
        self.bind(statement.name, module)
        return module

    def add_complex(self, statement: ComplexStatement) -> ChainComplex:
        """Build a complex and check that its differentials compose to zero."""
        ring = self.ring(statement.ring)
        complex_ = ChainComplex(
            ring,
            statement.window,
            {n: matrix_from_spec(ring, spec) for n, spec in statement.differentials.items()},
            ranks=statement.ranks or None,
            periodicity=periodicity_from_spec(statement.period),
            name=statement.name,
        )
        self.bind(statement.name, validated(complex_))
        return complex_

    def add_map(self, statement: MapStatement) -> ChainMap:
        """Build a map and check that it commutes with the differentials."""
        source, target = self.complex(statement.source), self.complex(statement.target)
        if source.ring != target.ring:
            msg = f"Complexes {statement.source!r} and {statement.target!r} live over different rings"
            raise SessionSemanticError(msg)

        f = ChainMap(
            source,
            target,
            {n: matrix_from_spec(source.ring, spec) for n, spec in statement.components.items()},
            window=statement.window,
            periodicity=periodicity_from_spec(statement.period),
            name=statement.name,
        )
        degree = f.failing_degree()
        if degree is not None:
            msg = f"Map {statement.name!r} does not commute with the differentials in degree {degree}"
            raise SessionSemanticError(msg)

        self.bind(statement.name, f)
        return f
