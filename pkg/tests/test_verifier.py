import pytest

from pathguard import (
    BudgetExceeded,
    CanonicalPath,
    EnumerationSpec,
    enumerate_all,
    preimages_of,
    total_count,
    verify_no_residue,
)


class TestEnumerationSpec:
    def test_defaults(self):
        spec = EnumerationSpec()
        assert spec.alphabet == "/.abc"
        assert spec.max_len == 8

    def test_alphabet_must_contain_separator_and_dot(self):
        with pytest.raises(ValueError):
            EnumerationSpec(alphabet="ab")
        with pytest.raises(ValueError):
            EnumerationSpec(alphabet="/ab")

    def test_no_nul_no_duplicates_no_negative_len(self):
        with pytest.raises(ValueError):
            EnumerationSpec(alphabet="/.\x00")
        with pytest.raises(ValueError):
            EnumerationSpec(alphabet="/.aa")
        with pytest.raises(ValueError):
            EnumerationSpec(max_len=-1)


class TestEnumerateAll:
    def test_single_letter_alphabet(self):
        # Degenerate alphabet for the counting contract only.
        visited = []
        spec = EnumerationSpec(alphabet="/.", max_len=2)
        count = enumerate_all(spec, visited.append)
        assert count == 7
        assert visited == ["", "/", ".", "//", "/.", "./", ".."]

    def test_shortlex_order_and_uniqueness(self):
        visited = []
        spec = EnumerationSpec(alphabet="/.a", max_len=3)
        enumerate_all(spec, visited.append)
        assert len(visited) == len(set(visited)) == total_count(spec)
        lengths = [len(s) for s in visited]
        assert lengths == sorted(lengths)

    def test_closed_form_default_spec(self):
        # Sum of 5^k for k in 0..8 == (5^9 - 1) / 4.
        assert total_count(EnumerationSpec()) == 488281

    def test_budget_exceeded(self):
        spec = EnumerationSpec(alphabet="/.abc", max_len=12)
        with pytest.raises(BudgetExceeded):
            enumerate_all(spec, lambda s: None)


class TestVerifyNoResidue:
    def test_small_sweep_is_clean(self):
        spec = EnumerationSpec(alphabet="/.a", max_len=4)
        assert verify_no_residue(spec) == []

    def test_zero_length_sweep(self):
        assert verify_no_residue(EnumerationSpec(max_len=0)) == []


class TestPreimagesOf:
    def test_tiny_brute_force(self):
        spec = EnumerationSpec(alphabet="/.a", max_len=2)
        hits = preimages_of(spec, CanonicalPath("/a"))
        assert sorted(hits) == ["/a", "a", "a/"]

    def test_root_includes_empty_input(self):
        spec = EnumerationSpec(alphabet="/.a", max_len=2)
        assert "" in preimages_of(spec, CanonicalPath("/"))

    def test_disjoint_for_distinct_targets(self):
        spec = EnumerationSpec(alphabet="/.ab", max_len=4)
        a = set(preimages_of(spec, CanonicalPath("/a")))
        b = set(preimages_of(spec, CanonicalPath("/b")))
        assert not (a & b)

    def test_closed_under_equivalence_mutations_within_budget(self):
        spec = EnumerationSpec(alphabet="/.ab", max_len=6)
        hits = set(preimages_of(spec, CanonicalPath("/a/b")))
        for hit in hits:
            # Duplicate each "/" in turn.
            for i, ch in enumerate(hit):
                if ch == "/" and len(hit) + 1 <= spec.max_len:
                    assert hit[:i] + "/" + hit[i:] in hits
            # Insert "./" after each "/".
            for i, ch in enumerate(hit):
                if ch == "/" and len(hit) + 2 <= spec.max_len:
                    assert hit[: i + 1] + "./" + hit[i + 1 :] in hits
