"""
Type/token ratio on published novel counts
==========================================

The package ships per-chapter and running type/token counts for two English
novels and their Russian translations. This script recomputes the TTR
columns, fits Heaps' law to the running counts and compares the chapters
of a source text with the chapters of its translation.
"""

from lexdyn import compare_tables, heaps_fit, length_ratio
from lexdyn import reference

##############################################################################
# Per-chapter ratios. Shorter chapters have higher TTR: new word types
# arrive more slowly than new tokens.

table = reference.fragment_table("slaughterhouse_five", "source")
print("chapter  types  tokens  ttr")
for label, row in zip(table.labels, table.rows):
    print(f"{label:>7} {row.type_count:6d} {row.token_count:7d}  {row.ttr_display(',')}")
print(f"  whole {table.whole.type_count:6d} {table.whole.token_count:7d}  "
      f"{table.whole.ttr_display(',')}")

##############################################################################
# Running counts follow a power law, types = a * tokens**b with b < 1.

for text, role in reference.CUMULATIVE_TABLES:
    fit = heaps_fit(reference.cumulative_curve(text, role))
    print(f"{text:20s} {role:12s} a={fit.a:.2f} b={fit.b:.3f} r2={fit.r2:.4f}")

##############################################################################
# Chapter k of the source against chapter k of the translation. The
# translated TTR sits about 0.2 higher but moves in step with the source.

src = reference.fragment_table("slaughterhouse_five", "source")
tgt = reference.fragment_table("slaughterhouse_five", "translation")
report = compare_tables(src.rows, tgt.rows, src.whole, tgt.whole)
print(f"per-chapter TTR correlation: {report.ttr_correlation:.4f}")
print(f"mean TTR offset: "
      f"{sum(t.ttr - s.ttr for s, t in zip(src.rows, tgt.rows)) / len(src.rows):.3f}")
print(f"caveat: {report.caveat}")

##############################################################################
# The translations are shorter than their sources.

whole = reference.whole_texts()
for text in reference.TEXTS:
    r = length_ratio(whole[text, "source"]["summary"], whole[text, "translation"]["summary"])
    print(f"{text}: translation has {r:.1%} of the source tokens")
