"""Exception hierarchy.

Every error raised on purpose by the library derives from ``QuiverStabError``.
The CLI maps ``ParseError`` to exit code 2, ``SearchBudgetExceeded`` (and its
subclass for isomorphism tests) to 3, and everything else to 1.
"""


class QuiverStabError(Exception):
    pass


class ParseError(QuiverStabError):
    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        where = ""
        if line is not None:
            where = f"{source or '<input>'}:{line}:{column or 1}: "
        super().__init__(where + message)


class InvalidPresentation(QuiverStabError):
    pass


class ShapeMismatch(QuiverStabError):
    pass


class RelationViolated(QuiverStabError):
    def __init__(self, relation_index, source, target):
        self.relation_index = relation_index
        self.vertex_pair = (source, target)
        super().__init__(
            f"relation {relation_index} ({source} -> {target}) does not vanish"
        )


class AlgebraMismatch(QuiverStabError):
    pass


class FieldMismatch(QuiverStabError):
    pass


class NotASubrep(QuiverStabError):
    pass


class NotIntertwining(QuiverStabError):
    pass


class IndexMismatch(QuiverStabError):
    pass


class NegativeClass(QuiverStabError):
    pass


class NegativeGamma(QuiverStabError):
    pass


class DegenerateGamma(QuiverStabError):
    pass


class ClassMismatch(QuiverStabError):
    pass


class NotDiagonal(QuiverStabError):
    pass


class ZeroGammaLength(QuiverStabError):
    pass


class ZeroNorm(QuiverStabError):
    pass


class NotPrimeField(QuiverStabError):
    pass


class InvalidFiltration(QuiverStabError):
    pass


class SearchBudgetExceeded(QuiverStabError):
    def __init__(self, required, budget, what="search"):
        self.required = required
        self.budget = budget
        self.what = what
        super().__init__(f"{what} needs {required} candidates, budget is {budget}")


class IsoTestBudgetExceeded(SearchBudgetExceeded):
    pass
