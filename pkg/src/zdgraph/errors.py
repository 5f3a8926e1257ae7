"""Exception hierarchy shared by every module."""


class ZDGError(Exception):
    """Base class for all errors raised by zdgraph."""


class ValidationError(ZDGError):
    """A Cayley table fails one of the semigroup-with-zero axioms."""

    witness: tuple[int, ...] = ()


class MalformedTable(ValidationError):
    def __init__(self, message: str):
        super().__init__(message)


class NotCommutative(ValidationError):
    def __init__(self, i: int, j: int):
        self.witness = (i, j)
        super().__init__(f"not commutative: {i}*{j} != {j}*{i}")


class NotAssociative(ValidationError):
    def __init__(self, i: int, j: int, k: int):
        self.witness = (i, j, k)
        super().__init__(f"not associative: ({i}*{j})*{k} != {i}*({j}*{k})")


class ZeroNotAbsorbing(ValidationError):
    def __init__(self, i: int):
        self.witness = (i,)
        super().__init__(f"zero is not absorbing: zero*{i} != zero")


class ParseError(ZDGError):
    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class SizeLimitExceeded(ZDGError):
    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class UnknownVertex(ZDGError, KeyError):
    def __str__(self):
        return f"unknown vertex {self.args[0]!r}"


class SameVertex(ZDGError, ValueError):
    pass


class NoVertices(ZDGError, ValueError):
    pass
