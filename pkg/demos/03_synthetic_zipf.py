"""
Checking the estimators on a synthetic Zipf corpus
==================================================

Draw 50 000 tokens from a Zipf distribution over 10 000 types, write
them to disk, read them back through the tokenizer, and check that the
rank-frequency fit recovers the exponent and that vocabulary growth is
sub-linear.
"""

import tempfile
from pathlib import Path

from lexdyn import ZipfSpec, frequency_table, growth_curve, heaps_fit, zipf_fit, zipf_text
from lexdyn.ingest import read_document
from lexdyn.synthgen import harmonic, write_corpus

spec = ZipfSpec(vocab_size=10_000, exponent=1.1, n_tokens=50_000, seed=42)
tokens = zipf_text(spec)
print(tokens[:12])

with tempfile.TemporaryDirectory() as tmp:
    path = write_corpus(tokens, Path(tmp) / "zipf.txt")
    doc = read_document(path)
assert doc.tokens == tokens

##############################################################################
# The most frequent type should take about 1/H of the tokens.

table = frequency_table(doc.tokens)
print("rank-1 share", table.ranked[0][2] / len(tokens), "expected", 1 / harmonic(10_000, 1.1))

zipf = zipf_fit(table)
print(f"Zipf exponent {zipf.b:.3f} (generator used {-spec.exponent})")

##############################################################################
# Heaps' law on the growth curve sampled every 1000 tokens.

curve = growth_curve(doc.tokens, 1000)
fit = heaps_fit(curve)
print(f"Heaps: types = {fit.a:.2f} * tokens^{fit.b:.3f}, r2 = {fit.r2:.4f}")
for p in curve.points[::10]:
    print(p.cum_tokens, p.cum_types, round(p.ttr, 3))
