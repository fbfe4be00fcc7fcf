import itertools

import pytest

from gcmb.catalog import (
    BuiltinInstance,
    CatalogEntry,
    builtin_instances,
    bundled_matroids,
    direct_sum,
    entry_to_indicator,
    filter_blocks,
    format_entry,
    load_bundled_catalog,
    parse_catalog,
    parse_indicator_file,
    subset_colex_rank,
    subset_colex_unrank,
    tight_example,
)
from gcmb.errors import ParseError, UsageError
from gcmb.lab import label_image
from gcmb.matroids import find_blocks, make_uniform, verify_axioms
from gcmb.solver import label_sum


class TestCatalogFormat:
    def test_empty_file(self):
        assert list(parse_catalog("")) == []
        assert list(parse_catalog("# only a comment\n\n")) == []

    def test_roundtrip(self):
        u = make_uniform(4, 2)
        entry = CatalogEntry("u24", 4, 2, tuple(u.bases()))
        text = format_entry(entry)
        (back,) = parse_catalog(text)
        assert back == entry

    def test_corrupted_base_size(self):
        text = "bad 4 2 0,1;2,3,1\n"
        with pytest.raises(ParseError, match="'bad'"):
            list(parse_catalog(text))

    def test_exchange_violation_reported(self):
        text = "broken 4 2 0,1;2,3\n"
        with pytest.raises(ParseError, match="exchange"):
            list(parse_catalog(text))

    def test_lenient_skips_and_reports(self):
        text = "broken 4 2 0,1;2,3\nu23 3 2 0,1;0,2;1,2\n"
        problems = []
        entries = list(parse_catalog(text, lenient=True, problems=problems))
        assert [e.id for e in entries] == ["u23"]
        assert len(problems) == 1 and problems[0][0] == 1

    def test_rank_mismatch_detected(self):
        text = "odd 4 3 0,1,2;0,1,3;0,2,3;1,2,3\n"  # claims r=3 but that's U_{3,4}
        (entry,) = parse_catalog(text)  # fine: rank really is 3
        bad = "odd 4 2 0,1;0,2;0,3;1,2;1,3;2,3\n".replace(" 2 ", " 3 ", 1)
        with pytest.raises(ParseError):
            list(parse_catalog(bad))


class TestBundledCatalogs:
    def test_rank3_loads_with_wheel(self):
        entries = load_bundled_catalog("rank3_size6.cat")
        by_id = {e.id: e for e in entries}
        assert "mk4" in by_id
        assert len(by_id["mk4"].bases) == 16  # Cayley: 4^2 spanning trees
        for e in entries:
            assert e.n == 6 and e.r == 3
            verify_axioms(e.matroid())

    def test_rank4_blocks(self):
        entries = load_bundled_catalog("rank4_size8_blocks.cat")
        assert len(entries) >= 20
        for e in entries:
            assert e.n == 8 and e.r == 4
        # spot-check blockness on a sample (full check is the generator's job)
        for e in entries[:5]:
            assert find_blocks(e.matroid()) is not None

    def test_rank4_indicator_matches_cat(self):
        from_cat = load_bundled_catalog("rank4_size8_blocks.cat")
        text = __import__("gcmb.catalog", fromlist=["bundled_path"]).bundled_path(
            "rank4_size8_blocks.rlx"
        ).read_text(encoding="utf-8")
        from_rlx = list(parse_indicator_file(text))
        assert [e.id for e in from_rlx] == [e.id for e in from_cat]
        assert [e.bases for e in from_rlx] == [e.bases for e in from_cat]


class TestFilterBlocks:
    def test_wrong_shape_filtered(self):
        u23 = CatalogEntry("u23", 3, 2, tuple(make_uniform(3, 2).bases()))
        assert list(filter_blocks([u23])) == []

    def test_wheel_kept(self):
        entries = load_bundled_catalog("rank3_size6.cat")
        kept = {e.id for e in filter_blocks(entries)}
        assert "mk4" in kept

    def test_shared_element_filtered(self):
        # n = 2r but every base contains element 0: no disjoint pair
        entries = load_bundled_catalog("rank3_size6.cat")
        by_id = {e.id: e for e in entries}
        assert "c0u25" in by_id
        assert all(0 in b for b in by_id["c0u25"].bases)
        kept = {e.id for e in filter_blocks(entries)}
        assert "c0u25" not in kept


class TestColexEncoding:
    def test_rank_unrank_roundtrip(self):
        for n, r in [(4, 2), (6, 3), (8, 4)]:
            for pos, subset in enumerate(
                sorted(itertools.combinations(range(n), r), key=subset_colex_rank)
            ):
                assert subset_colex_rank(subset) == pos
                assert subset_colex_unrank(pos, r) == subset

    def test_indicator_roundtrip(self):
        u = make_uniform(6, 3)
        entry = CatalogEntry("u36", 6, 3, tuple(u.bases()))
        indicator = entry_to_indicator(entry)
        assert indicator == "1" * 20  # every triple is a base
        text = f"n 6\nr 3\nu36 {indicator}\n"
        (back,) = parse_indicator_file(text)
        assert back.bases == entry.bases

    def test_indicator_errors(self):
        with pytest.raises(ParseError, match="header"):
            list(parse_indicator_file("x 101010\n"))
        with pytest.raises(ParseError, match="0/1"):
            list(parse_indicator_file("n 4\nr 2\nx 10102\n"))


class TestBuiltins:
    def test_tight4(self):
        inst = tight_example(4)
        assert inst.matroid.n == 6 and inst.matroid.full_rank == 3
        assert [str(g) for g in inst.labeling.labels] == ["1", "1", "1", "0", "0", "0"]

    def test_tight2(self):
        inst = tight_example(2)
        assert inst.matroid.n == 2 and inst.matroid.full_rank == 1

    def test_k4(self):
        inst = builtin_instances()["k4"]
        assert inst.matroid.n == 6 and inst.matroid.full_rank == 3

    def test_unique_zero_base_small(self):
        for m in range(2, 7):
            inst = tight_example(m)
            img = label_image(inst.matroid, inst.labeling)
            zero = inst.group.identity()
            assert img.multiplicity[zero] == 1
            zero_bases = [
                b
                for b in inst.matroid.bases()
                if label_sum(inst.labeling, b) == zero
            ]
            assert zero_bases == [tuple(range(m - 1, 2 * (m - 1)))]

    def test_bundled_matroids_shapes(self):
        for name, m in bundled_matroids():
            assert m.n <= 8 and m.full_rank <= 4, name
        names = [name for name, _ in bundled_matroids()]
        assert "k4" in names and "u48" in names

    def test_direct_sum(self):
        s = direct_sum([make_uniform(2, 1), make_uniform(2, 1)])
        assert s.full_rank == 2 and s.n == 4
        assert len(s.bases()) == 4

    def test_bad_tight(self):
        with pytest.raises(UsageError):
            tight_example(1)
