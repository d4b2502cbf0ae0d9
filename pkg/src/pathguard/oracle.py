"""Independent canonicalization oracle built on fixpoint string rewriting.

This module must share no tokenizer or stack code with ``canonical``; its
whole value is that it reaches the same answers by a structurally different
route, so any divergence between the two is a bug in one of them. It is
allowed to be slow.
"""

from __future__ import annotations

import re

from .model import CanonicalPath, RawPathString

# "/T/../" where T is any component other than "." and "..".
_POP_PAIR = re.compile(r"/(?!\.{1,2}/)[^/]+/\.\./")


def rewrite_canonicalize(raw: RawPathString) -> CanonicalPath:
    """Canonicalize by rewriting to a fixpoint.

    The text is anchored with a leading and trailing "/", then the first
    applicable rule from this ordered list is applied repeatedly until none
    matches: collapse "//", drop "/./", absorb a leading "/../", and cancel
    "/T/../" for any ordinary component T. Every rule strictly shrinks the
    string, so the loop terminates. Finally the trailing "/" is stripped
    unless the result is the root itself.
    """
    text = raw.text
    if not text.startswith("/"):
        text = "/" + text
    text = text + "/"
    while True:
        i = text.find("//")
        if i >= 0:
            text = text[:i] + text[i + 1 :]
            continue
        i = text.find("/./")
        if i >= 0:
            text = text[:i] + text[i + 2 :]
            continue
        if text.startswith("/../"):
            text = text[3:]
            continue
        match = _POP_PAIR.search(text)
        if match:
            text = text[: match.start()] + "/" + text[match.end() :]
            continue
        break
    if len(text) > 1:
        text = text[:-1]
    return CanonicalPath(text)
