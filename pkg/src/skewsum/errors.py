"""Exception hierarchy.

Every error raised by the library carries a stable machine-readable ``code``
so callers (and the CLI) can branch on it without parsing messages.
"""


class SkewSumError(Exception):
    code = "SKEWSUM_ERROR"


class EncodingError(SkewSumError, ValueError):
    code = "ENCODING_ERROR"


class ResourceMissing(SkewSumError, FileNotFoundError):
    code = "RESOURCE_MISSING"


class MalformedEntry(SkewSumError, ValueError):
    code = "MALFORMED_ENTRY"

    def __init__(self, path, line, reason):
        self.path = str(path)
        self.line = line
        self.reason = reason
        super().__init__(f"{self.path}:{line}: {reason}")


class EmptyCorpus(SkewSumError, ValueError):
    code = "EMPTY_CORPUS"


class IndexVersionError(SkewSumError, ValueError):
    code = "INDEX_VERSION"


class IndexCorrupt(SkewSumError, ValueError):
    code = "INDEX_CORRUPT"


class EmptyInput(SkewSumError, ValueError):
    code = "EMPTY_INPUT"


class EmptyAfterFiltering(EmptyInput):
    code = "EMPTY_AFTER_FILTERING"


class DegenerateDistribution(SkewSumError, ArithmeticError):
    code = "DEGENERATE_DISTRIBUTION"


class BoundaryOutOfRange(SkewSumError, IndexError):
    code = "BOUNDARY_OUT_OF_RANGE"


class InvalidConfig(SkewSumError, ValueError):
    code = "INVALID_CONFIG"
