"""String-level path predicates used by the property-test suites.

These are deliberately literal: ``is_char_prefix`` compares characters, so
"/ab" is a prefix of "/abc" even across a component boundary, and
``are_equivalent`` is plain string equality. ``is_component_prefix`` is the
component-boundary variant the trace-invariant tests rely on.
"""

from __future__ import annotations

from .model import CanonicalPath, InvalidName


def is_char_prefix(p1: str, p2: str) -> bool:
    """True iff p1 is a character-level prefix of p2."""
    return p2.startswith(p1)


def is_component_prefix(p1: CanonicalPath, p2: CanonicalPath) -> bool:
    """True iff p1's component sequence leads p2's. "/" prefixes everything."""
    c1 = p1.components
    return c1 == p2.components[: len(c1)]


def are_equivalent(p1: str, p2: str) -> bool:
    """Mutual prefix with equal length, i.e. exact string equality."""
    return len(p1) == len(p2) and is_char_prefix(p1, p2) and is_char_prefix(p2, p1)


def contains_component(path: str, name: str) -> bool:
    """True iff ``name`` occurs as a whole component of ``path``.

    The test is a substring match of "/name/" against the path with one
    "/" appended, so the final component counts while partial-name matches
    (e.g. "my_dir" inside "/my_dir1/") do not.

    Raises:
        InvalidName: ``name`` is empty or contains "/".
    """
    if not name or "/" in name:
        raise InvalidName(f"invalid component name: {name!r}")
    return f"/{name}/" in path + "/"
