"""Exception types shared across the package."""


class DefcolorError(Exception):
    """Base class for all errors raised by this package."""


# -- graph construction / representation ------------------------------------

class SelfLoop(DefcolorError):
    pass


class DuplicateNeighbor(DefcolorError):
    pass


class AsymmetricAdjacency(DefcolorError):
    pass


class Disconnected(DefcolorError):
    pass


class NoEmbedding(DefcolorError):
    """Face-dependent operation requested on a graph without a rotation system."""


class NotEmbedded(NoEmbedding):
    """Alias kept for operations that demand an Euler-certified plane graph."""


class NotPlanar(DefcolorError):
    """Rotation system fails the Euler check V - E + F = 2."""


class MalformedInput(DefcolorError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(message + where)


# -- search budgets ----------------------------------------------------------

class BudgetExceeded(DefcolorError):
    """A bounded search ran out of budget.  Never means "infeasible".

    `partial` optionally carries whatever incomplete result was gathered.
    """

    def __init__(self, message: str = "search budget exhausted", partial=None):
        self.partial = partial
        super().__init__(message)


# -- coloring ----------------------------------------------------------------

class PartialColoring(DefcolorError):
    pass


class ClassOutOfRange(DefcolorError):
    pass


class InvalidParam(DefcolorError):
    pass


# -- discharging -------------------------------------------------------------

class CycleRestrictionViolated(DefcolorError):
    pass


class GroupingConflict(DefcolorError):
    """A degree-3 vertex lies on two triangular faces; the input contains a 4-cycle."""


# -- constructive colorer ----------------------------------------------------

class ContainsC4(DefcolorError):
    pass


class IrreducibleGraph(DefcolorError):
    """No reduction step applies to a nonempty graph with edges.

    This cannot happen for a valid C4-free plane input; it signals either an
    implementation bug or an invalid input, and carries the offending graph
    for triage.
    """

    def __init__(self, message: str, graph=None):
        self.graph = graph
        super().__init__(message)


class ExtensionWitnessMissing(DefcolorError):
    """The counting guarantee behind a coloring-extension step failed."""
