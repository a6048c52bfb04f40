"""
From raw text to a chapter table
================================

Tokenize a plain-text file, split it into chapters by a heading pattern,
and build the per-chapter table and the running growth curve. The same
steps are available on the command line::

    lexdyn analyze book.txt --chunk-pattern '^CHAPTER'
    lexdyn curve book.txt --chunk-pattern '^CHAPTER' --format json
"""

from lexdyn import (
    chunk_by_delimiter,
    cumulative_curve,
    fragment_table,
    make_document,
    summary,
    tokenize,
    normalize,
)

text = """CHAPTER 1
Listen: Billy Pilgrim has come unstuck in time.
Billy has gone to sleep a senile widower and awakened on his wedding day.
CHAPTER 2
It's self-evident, he said. So it goes.
So it goes, said Billy, again and again.
CHAPTER 3
Everything was beautiful, and nothing hurt.
"""

print(tokenize(normalize("It's SELF-EVIDENT -- 1944.")))

doc = make_document(text, id="sample")
chapters = chunk_by_delimiter(doc, r"^CHAPTER \d+$")

for frag, row in zip(chapters, fragment_table(chapters)):
    print(frag.index, row.type_count, row.token_count, row.ttr_display())

whole = summary(doc.tokens)
print("whole", whole.type_count, whole.token_count, whole.ttr_display(),
      f"hapax {whole.hapax_share:.0%}")

##############################################################################
# Running counts use the union of types seen so far, so they grow more
# slowly than the sum of the per-chapter counts.

for p in cumulative_curve(chapters):
    print(p.cum_tokens, p.cum_types, round(p.ttr, 3))
