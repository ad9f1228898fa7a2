"""Exception types. Every error carries a stable ``code`` and a ``details`` dict
so the CLI can emit machine-readable failures."""


class QuandloidError(Exception):
    code = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details

    def to_dict(self):
        return {"error": self.code, "message": str(self), **self.details}


class AxiomError(QuandloidError):
    """Base for operation tables that fail a quandle axiom."""

    code = "axiom"


class OutOfRangeEntry(AxiomError):
    code = "out_of_range_entry"

    def __init__(self, x, y, value):
        super().__init__(f"table[{x}][{y}] = {value!r} is out of range", x=x, y=y, value=value)
        self.witness = (x, y)


class IdempotenceViolation(AxiomError):
    code = "idempotence_violation"

    def __init__(self, x, value):
        super().__init__(f"{x} <| {x} = {value}, expected {x}", x=x, value=value)
        self.witness = (x,)


class ColumnNotBijective(AxiomError):
    code = "column_not_bijective"

    def __init__(self, y, x1, x2):
        super().__init__(f"column {y} sends both {x1} and {x2} to the same element", y=y, x1=x1, x2=x2)
        self.witness = (y,)


class DistributivityViolation(AxiomError):
    code = "distributivity_violation"

    def __init__(self, x, y, z):
        super().__init__(f"(x<|y)<|z != (x<|z)<|(y<|z) at x={x}, y={y}, z={z}", x=x, y=y, z=z)
        self.witness = (x, y, z)


class MalformedTable(AxiomError):
    code = "malformed_table"


class OutOfRange(QuandloidError):
    code = "out_of_range"


class SizeCapExceeded(QuandloidError):
    code = "size_cap_exceeded"


class ArityMismatch(QuandloidError):
    code = "arity_mismatch"


class LengthMismatch(QuandloidError):
    code = "length_mismatch"


class InvalidArgument(QuandloidError):
    code = "invalid_argument"


class DiagramSyntaxError(QuandloidError):
    code = "syntax_error"

    def __init__(self, message, line, col):
        super().__init__(f"{message} (line {line}, column {col})", line=line, col=col)
        self.line = line
        self.col = col


class CrossingParity(QuandloidError):
    code = "crossing_parity"

    def __init__(self, crossing, count):
        super().__init__(f"crossing {crossing!r} occurs {count} time(s), expected 2",
                         crossing=crossing, count=count)


class RoleConflict(QuandloidError):
    code = "role_conflict"

    def __init__(self, crossing):
        super().__init__(f"crossing {crossing!r} needs one over and one under passage", crossing=crossing)


class SignConflict(QuandloidError):
    code = "sign_conflict"

    def __init__(self, crossing):
        super().__init__(f"crossing {crossing!r} has passages of different sign", crossing=crossing)


class NotOpenComponent(QuandloidError):
    code = "not_open_component"


class UnknownArc(QuandloidError):
    code = "unknown_arc"


class InvalidPosition(QuandloidError):
    code = "invalid_position"


class UnknownGenerator(QuandloidError):
    code = "unknown_generator"


class UnassignedGenerator(QuandloidError):
    code = "unassigned_generator"


class UnknownPinnedGenerator(QuandloidError):
    code = "unknown_pinned_generator"


class PinOutOfRange(QuandloidError):
    code = "pin_out_of_range"
