"""Input and parameter checks shared by the pipeline, the estimator and the CLI."""

from __future__ import annotations

import math
import numbers
from collections.abc import Iterable

from .errors import InvalidConfig


def check_choice(value, choices, name):
    if value not in choices:
        raise InvalidConfig(f"{name} must be one of {', '.join(map(str, choices))}; got {value!r}")
    return value


def check_order(n):
    if isinstance(n, bool) or not isinstance(n, numbers.Integral) or n < 1:
        raise InvalidConfig(f"n must be an integer >= 1; got {n!r}")
    return int(n)


def check_ratio(ratio):
    if isinstance(ratio, bool) or not isinstance(ratio, numbers.Real):
        raise InvalidConfig(f"ratio must be a number; got {ratio!r}")
    ratio = float(ratio)
    if not (0.0 < ratio <= 1.0):
        raise InvalidConfig(f"ratio must lie in (0, 1]; got {ratio!r}")
    return ratio


def check_epsilon(eps):
    if isinstance(eps, bool) or not isinstance(eps, numbers.Real):
        raise InvalidConfig(f"epsilon must be a number; got {eps!r}")
    eps = float(eps)
    if not math.isfinite(eps) or eps < 0:
        raise InvalidConfig(f"epsilon must be finite and >= 0; got {eps!r}")
    return eps


def check_documents(X, *, allow_empty=False) -> list[str]:
    """Coerce ``X`` to a list of strings.

    A bare string is rejected: iterating it would silently treat every
    character as a document.
    """
    if isinstance(X, (str, bytes)):
        raise ValueError("expected an iterable of documents, got a single string; "
                         "wrap it in a list")
    if not isinstance(X, Iterable):
        raise TypeError(f"expected an iterable of documents, got {type(X).__name__}")
    docs = []
    for i, doc in enumerate(X):
        if isinstance(doc, bytes):
            doc = doc.decode("utf-8")
        if not isinstance(doc, str):
            raise TypeError(f"document {i} is {type(doc).__name__}, expected str")
        docs.append(doc)
    if not docs and not allow_empty:
        raise ValueError("expected at least one document")
    return docs
