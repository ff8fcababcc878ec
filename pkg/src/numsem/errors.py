"""Exception types shared across the package.

Two families. Validation errors mean the caller handed us bad input and map
to CLI exit code 2. Defect errors mean an internal law failed -- something
that is provably impossible for genuine semigroup data -- and map to CLI
exit code 3; they indicate a bug and are never caught silently.
"""


class ValidationError(Exception):
    """Caller input rejected."""


class EmptyInput(ValidationError):
    pass


class DuplicateGenerator(ValidationError):
    def __init__(self, value):
        super().__init__(f"duplicate generator {value}")
        self.value = value


class GeneratorBelowTwo(ValidationError):
    def __init__(self, value):
        super().__init__(f"generator {value} is below 2")
        self.value = value


class GcdNotOne(ValidationError):
    def __init__(self, gcd_value):
        super().__init__(f"gcd is {gcd_value}, must be 1")
        self.gcd = gcd_value


class NotFourGenerators(ValidationError):
    def __init__(self, count):
        super().__init__(f"expected exactly 4 generators, got {count}")
        self.count = count


class NotThreeGenerators(ValidationError):
    def __init__(self, count):
        super().__init__(f"expected exactly 3 generators, got {count}")
        self.count = count


class NotMinimal(ValidationError):
    def __init__(self, redundant):
        super().__init__(
            f"generator {redundant} is representable by the others"
        )
        self.redundant = redundant


class ConfigInvalid(ValidationError):
    pass


class DefectError(Exception):
    """An internal consistency law failed: a bug, not bad input."""


class ClassificationContradiction(DefectError):
    pass


class TruncationInconsistency(DefectError):
    pass


class SurveyDefect(DefectError):
    pass
