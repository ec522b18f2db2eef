import json

import pytest

from quadsemi.model import (
    Alphabet,
    IdealMode,
    Presentation,
    Relation,
    ViolationKind,
    canonical_json,
    delta,
    from_json_dict,
    is_pure,
    lower_pairs,
    monomial_str,
    pair_key,
    pair_str,
    presentation,
    presentation_hash,
    qhs_cardinality_bounds,
    rtl_key,
    rtl_lex_cmp,
    strip_top,
    to_json_dict,
    validate_qhs,
)


class TestOrder:
    def test_last_position_dominates(self):
        assert rtl_lex_cmp((2, 1), (1, 2)) == -1
        assert rtl_lex_cmp((1, 2), (2, 1)) == 1
        assert rtl_lex_cmp((1, 2), (1, 2)) == 0

    def test_degree_two_chain(self):
        words = [(2, 2), (1, 2), (1, 1), (2, 1)]
        words.sort(key=rtl_key)
        assert words == [(1, 1), (2, 1), (1, 2), (2, 2)]

    def test_earlier_positions_break_ties(self):
        assert rtl_lex_cmp((1, 3, 2), (2, 2, 2)) == 1
        assert rtl_lex_cmp((1, 2, 2), (2, 2, 2)) == -1

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError):
            rtl_lex_cmp((1,), (1, 2))

    def test_pair_key_agrees_with_word_key(self):
        pairs = [(a, b) for a in range(1, 4) for b in range(1, 4)]
        assert sorted(pairs, key=pair_key) == sorted(pairs, key=rtl_key)


class TestRelation:
    def test_equal_orients_larger_side_left(self):
        rel = Relation.equal((1, 1), (2, 2))
        assert rel.left == (2, 2)
        assert rel.right == (1, 1)
        assert rel == Relation.equal((2, 2), (1, 1))

    def test_zero_shape(self):
        rel = Relation.zero(2, 1)
        assert rel.is_zero
        assert rel.support == frozenset({(2, 1)})
        assert str(rel) == "x2*x1 = 0"

    def test_str_binomial(self):
        assert str(Relation.equal((2, 2), (1, 1))) == "x2*x2 = x1*x1"

    def test_identical_sides_rejected(self):
        with pytest.raises(ValueError):
            Relation.equal((1, 2), (1, 2))

    def test_bad_pair_rejected(self):
        with pytest.raises(ValueError):
            Relation.zero(0, 1)
        with pytest.raises(ValueError):
            Relation((1, 2, 3))  # type: ignore[arg-type]

    def test_support_and_max_letter(self):
        rel = Relation.equal((5, 2), (2, 1))
        assert rel.support == frozenset({(5, 2), (2, 1)})
        assert rel.max_letter() == 5


class TestPresentation:
    def test_relations_sorted_and_frozen(self, m3):
        keys = [r.sort_key() for r in m3.relations]
        assert keys == sorted(keys)

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            presentation(2, [Relation.zero(2, 1), Relation.zero(2, 1)])

    def test_canonicalised_duplicates_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            presentation(
                2,
                [Relation.equal((2, 2), (1, 1)), Relation.equal((1, 1), (2, 2))],
            )

    def test_letters_beyond_alphabet_rejected(self):
        with pytest.raises(ValueError, match="beyond"):
            presentation(2, [Relation.zero(3, 1)])

    def test_alphabet_positive(self):
        with pytest.raises(ValueError):
            Alphabet(0)

    def test_equal_content_compares_equal(self, m2):
        again = presentation(2, [Relation.zero(2, 1), Relation.equal((1, 1), (2, 2))])
        assert again == m2
        assert hash(again) == hash(m2)

    def test_support_union(self, m2):
        assert m2.support_union == frozenset({(2, 2), (1, 1), (2, 1)})

    def test_zero_and_binomial_split(self, m4):
        assert len(m4.zero_relations()) == 2
        assert len(m4.binomial_relations()) == 4
        assert set(m4.zero_relations()) | set(m4.binomial_relations()) == set(m4.relations)


class TestValidate:
    def test_bases_are_valid(self, m1, m2, m3, m4):
        for p in (m1, m2, m3, m4):
            report = validate_qhs(p)
            assert report.valid, report.violations
            assert p.is_qhs

    def test_missing_top_flagged(self, m4):
        rels = [r for r in m4.relations if r != Relation.zero(4, 1)]
        report = validate_qhs(presentation(4, rels))
        kinds = {v.kind for v in report.violations}
        assert not report.valid
        assert ViolationKind.MISSING_TOP_MONOMIAL in kinds
        assert ViolationKind.COVERAGE_GAP in kinds

    def test_overlapping_supports_flagged(self):
        p = presentation(
            2,
            [Relation.zero(1, 1), Relation.equal((2, 2), (1, 1)), Relation.zero(2, 1)],
        )
        report = validate_qhs(p)
        kinds = {v.kind for v in report.violations}
        assert ViolationKind.DISJOINTNESS_VIOLATED in kinds
        flagged = [v for v in report.violations if v.kind is ViolationKind.DISJOINTNESS_VIOLATED]
        assert flagged[0].pair == (1, 1)

    def test_ascending_zero_flagged(self):
        p = presentation(2, [Relation.zero(1, 2), Relation.zero(1, 1),
                             Relation.zero(2, 2), Relation.zero(2, 1)])
        report = validate_qhs(p)
        assert ViolationKind.BAD_RELATION_SHAPE in {v.kind for v in report.violations}

    def test_bad_binomial_shape_flagged(self):
        # x3x2 = x2x2 fails both shapes: needs b > c or d < b, has b = c = d = 2
        p = presentation(
            3,
            [
                Relation.equal((3, 2), (2, 2)),
                Relation.zero(1, 1),
                Relation.zero(2, 1),
                Relation.zero(3, 3),
                Relation.zero(3, 1),
            ],
        )
        report = validate_qhs(p)
        assert ViolationKind.BAD_RELATION_SHAPE in {v.kind for v in report.violations}

    def test_empty_presentation_reports_every_gap(self):
        report = validate_qhs(presentation(2, []))
        gaps = [v for v in report.violations if v.kind is ViolationKind.COVERAGE_GAP]
        assert {v.pair for v in gaps} == lower_pairs(2)

    def test_lower_pairs_count(self):
        for n in range(1, 8):
            assert len(lower_pairs(n)) == n * (n + 1) // 2


class TestStripTop:
    def test_strip_m2(self, m2):
        reduced = strip_top(m2)
        assert reduced.relations == (Relation.equal((2, 2), (1, 1)),)

    def test_strip_m1_empty(self, m1):
        assert strip_top(m1).relations == ()

    def test_strip_requires_top(self):
        with pytest.raises(ValueError):
            strip_top(presentation(2, [Relation.zero(1, 1)]))


class TestDelta:
    def test_spot_values(self):
        assert delta(1) == 1
        assert delta(2) == 2
        assert delta(3) == 4
        assert delta(4) == 6
        assert delta(5) == 8
        assert delta(6) == 11
        assert delta(7) == 15
        assert delta(8) == 19
        assert delta(9) == 23

    def test_matches_closed_form(self):
        for n in range(1, 500):
            assert delta(n) == (n * n + n) // 4 + 1

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            delta(0)
        with pytest.raises(ValueError):
            delta(-3)

    def test_cardinality_bounds(self):
        assert qhs_cardinality_bounds(1) == (1, 1)
        assert qhs_cardinality_bounds(3) == (4, 6)
        assert qhs_cardinality_bounds(4) == (6, 10)


class TestPurity:
    def test_m4_all_pure(self, m4):
        assert all(is_pure(c, m4) for c in m4.alphabet.letters())

    def test_chained_relation_breaks_purity(self):
        p = presentation(
            3,
            [
                Relation.equal((3, 2), (2, 1)),
                Relation.zero(1, 1),
                Relation.zero(2, 2),
                Relation.zero(3, 3),
                Relation.zero(3, 1),
            ],
        )
        assert not is_pure(1, p)
        assert is_pure(2, p)
        assert is_pure(3, p)

    def test_tower_top_letter_pure(self, tower5):
        assert is_pure(5, tower5)
        assert not is_pure(1, tower5)

    def test_rejects_non_qhs(self):
        with pytest.raises(ValueError):
            is_pure(1, presentation(2, []))

    def test_rejects_letter_out_of_range(self, m2):
        with pytest.raises(ValueError):
            is_pure(3, m2)


class TestSerialisation:
    def test_json_round_trip(self, m4, tower5):
        for p in (m4, tower5):
            assert from_json_dict(to_json_dict(p)) == p

    def test_canonical_json_is_sorted_and_compact(self, m2):
        text = canonical_json(m2)
        assert json.loads(text) == to_json_dict(m2)
        assert " " not in text

    def test_hash_is_stable_and_content_keyed(self, m2):
        again = presentation(2, [Relation.equal((1, 1), (2, 2)), Relation.zero(2, 1)])
        assert presentation_hash(m2) == presentation_hash(again)
        assert len(presentation_hash(m2)) == 16

    def test_from_json_rejects_malformed(self):
        with pytest.raises(ValueError):
            from_json_dict([])  # type: ignore[arg-type]
        with pytest.raises(ValueError):
            from_json_dict({"relations": []})
        with pytest.raises(ValueError):
            from_json_dict({"n": 2, "relations": [{"weird": [1, 1]}]})
        with pytest.raises(ValueError):
            from_json_dict({"n": 2, "relations": [{"zero": [1]}]})

    def test_rendering_helpers(self):
        assert pair_str((5, 2)) == "x5*x2"
        assert monomial_str((1, 2, 3)) == "x1*x2*x3"

    def test_ideal_mode_values(self):
        assert IdealMode.FULL.value == "full"
        assert IdealMode.WITHOUT_TOP.value == "without_top"

    def test_presentation_str_mentions_relations(self, m2):
        text = str(Presentation(Alphabet(2), m2.relations))
        assert "x2*x1 = 0" in text
