import itertools

import pytest

from pathguard import canonicalize, rewrite_canonicalize, validate_raw


class TestRewriteCanonicalize:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("//a//b/c", "/a/b/c"),
            ("/", "/"),
            ("/a/../", "/"),
            ("/a/b/../../..", "/"),
            ("", "/"),
            ("a/b", "/a/b"),
            ("/etc../", "/etc.."),
            ("/..a/../b", "/b"),
            ("/.x/./y", "/.x/y"),
            ("../../x", "/x"),
        ],
    )
    def test_examples(self, text, expected):
        assert rewrite_canonicalize(validate_raw(text)).text == expected

    def test_slash_collapse_happens_before_dot_resolution(self):
        # "/a//../" must reduce deterministically: "//" first, then "/a/../".
        assert rewrite_canonicalize(validate_raw("/a//../")).text == "/"

    def test_idempotent_on_own_output(self):
        for k in range(0, 7):
            for chars in itertools.product("/.ab", repeat=k):
                out = rewrite_canonicalize(validate_raw("".join(chars)))
                assert rewrite_canonicalize(validate_raw(out.text)) == out

    def test_agrees_with_stack_canonicalizer_small_sweep(self):
        for k in range(0, 8):
            for chars in itertools.product("/.ab", repeat=k):
                raw = validate_raw("".join(chars))
                assert rewrite_canonicalize(raw) == canonicalize(raw)

    def test_shares_no_code_with_canonicalizer(self):
        # Independence guard: the oracle module must not import the stack
        # implementation.
        import ast

        import pathguard.oracle as oracle

        with open(oracle.__file__) as fh:
            tree = ast.parse(fh.read())
        imported = set()
        for node in ast.walk(tree):
            if isinstance(node, ast.Import):
                imported.update(alias.name for alias in node.names)
            elif isinstance(node, ast.ImportFrom):
                imported.add(node.module or "")
        assert "canonical" not in imported
        assert "pathguard.canonical" not in imported
