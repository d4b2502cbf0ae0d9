import pytest

from pathguard import (
    canonicalize,
    de_dotdot,
    load_corpus,
    run_differential,
    validate_raw,
)

# Behavior of the ported upstream routine, frozen at port time. Any change
# to these outputs means the port drifted from the original.
GOLDEN = {
    "/etc../": "/etc../",
    "/etc/passwd": "/etc/passwd",
    "./a": "a",
    "../a/b/c": "a/b/c",
    "//a//b///c": "/a/b/c",
    "/a/./b": "/a/b",
    "/a//b": "/a/b",
    "a/b/../c": "a/c",
    "/a/b/..": "/a",
    "/..": "/..",
    "/a/..": "",
    ".": ".",
    "..": "..",
    "": "",
    "/": "/",
    "x/../../etc/passwd": "etc/passwd",
    "/a/b/c/../../d": "/a/d",
    ".../a": ".../a",
    "/a/.../b": "/a/.../b",
    "/....//": "/..../",
}


class TestDeDotdot:
    @pytest.mark.parametrize("text,expected", sorted(GOLDEN.items()))
    def test_golden_snapshots(self, text, expected):
        assert de_dotdot(validate_raw(text)) == expected

    def test_documented_flaw_trailing_dots_untouched(self):
        assert de_dotdot(validate_raw("/etc../")) == "/etc../"

    def test_documented_flaw_absolute_paths_untouched(self):
        assert de_dotdot(validate_raw("/etc/passwd")) == "/etc/passwd"


class TestRunDifferential:
    def test_trailing_dots_divergence_has_residue(self):
        records = run_differential([validate_raw("/etc../")])
        assert len(records) == 1
        assert ".." in records[0].residue_found
        assert records[0].canonical_output.text == "/etc.."

    def test_already_canonical_agrees(self):
        assert run_differential([validate_raw("/a/b")]) == []

    def test_absolute_bottom_up_reach_flagged(self):
        records = run_differential([validate_raw("/etc/passwd")])
        assert len(records) == 1
        assert records[0].bottom_up_reach
        assert records[0].residue_found == ()

    def test_htpasswd_component_flagged(self):
        records = run_differential([validate_raw("/srv/www/.htpasswd")])
        assert len(records) == 1
        assert records[0].bottom_up_reach

    def test_relative_root_anchoring_not_counted_as_divergence(self):
        # "./a" -> baseline "a", canonicalizer "/a"; representational only.
        assert run_differential([validate_raw("./a")]) == []

    def test_output_order_matches_input_order(self):
        corpus = [validate_raw(t) for t in ["/etc../", "/a/b", "/etc/passwd"]]
        records = run_differential(corpus)
        assert [r.input.text for r in records] == ["/etc../", "/etc/passwd"]

    def test_canonical_outputs_never_carry_residue(self):
        corpus = [validate_raw(t) for t in GOLDEN]
        for record in run_differential(corpus):
            out = record.canonical_output.text
            for bad in ("//", "/./", "/../"):
                assert bad not in out
            assert out == "/" or not out.endswith("/")


class TestLoadCorpus:
    def test_comments_blanks_and_order(self):
        corpus = load_corpus("# flaws\n/etc../\n\n./a\n")
        assert [r.text for r in corpus] == ["/etc../", "./a"]

    def test_canonicalize_never_emits_residue_on_corpus(self):
        corpus = load_corpus("/etc../\n/etc/passwd\n//a//b\n../x\n")
        for raw in corpus:
            out = canonicalize(raw).text
            for bad in ("//", "/./", "/../"):
                assert bad not in out
