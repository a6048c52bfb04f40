"""Integrity of the bundled published counts."""

from decimal import Decimal

import pytest

from lexdyn import reference
from lexdyn.lexstats import round_ratio


def test_tables_load():
    tables = reference.all_tables()
    assert len(tables) == 5
    sizes = {name: len(t.rows) for name, t in tables.items()}
    assert sizes == {
        "sh5_source_fragments.csv": 10,
        "cc_source_fragments.csv": 11,
        "sh5_source_cumulative.csv": 10,
        "sh5_translation_fragments.csv": 10,
        "cc_translation_cumulative.csv": 11,
    }
    for t in tables.values():
        assert t.whole is not None


def test_whole_rows_agree_across_files():
    whole = reference.whole_texts()
    tables = [(key, reference.fragment_table(*key)) for key in reference.FRAGMENT_TABLES]
    tables += [(key, reference.cumulative_table(*key)) for key in reference.CUMULATIVE_TABLES]
    for key, table in tables:
        expected = whole[key]["summary"]
        assert (table.whole.type_count, table.whole.token_count) == (
            expected.type_count,
            expected.token_count,
        )


def test_whole_text_printed_values():
    for rec in reference.whole_texts().values():
        s = rec["summary"]
        assert round_ratio(s.type_count, s.token_count) == Decimal(rec["ttr_printed"])
        if s.hapax_count is not None:
            assert round_ratio(s.hapax_count * 100, s.type_count, 0) == rec["hapax_percent_printed"]


def test_fragment_sums():
    # per-chapter token counts do not sum exactly to the whole-text totals
    sh5 = reference.fragment_table("slaughterhouse_five", "source")
    assert sum(r.token_count for r in sh5.rows) == 50726
    cc = reference.fragment_table("cats_cradle", "source")
    assert sum(r.token_count for r in cc.rows) == 54353


def test_known_running_total_inconsistency():
    sh5 = reference.fragment_table("slaughterhouse_five", "source")
    cum = reference.cumulative_table("slaughterhouse_five", "source")
    assert sh5.rows[0].token_count + sh5.rows[1].token_count == 12822
    assert cum.rows[1].token_count == 12925


def test_heaps_fits():
    fits = reference.heaps_fits()
    assert len(fits) == 4
    assert all(f.b < 1 for f in fits.values())
