"""
Dispersion of Heaps coefficients across two cohorts
===================================================

Given one Heaps fit per text, compare how spread out the coefficients are
among source texts and among their translations. A spread ratio below one
means the translations sit closer together than their sources.
"""

from lexdyn import PowerFit, levelling_out, predict
from lexdyn import reference

fits = reference.heaps_fits()
sources = [fits[t, "source"] for t in reference.TEXTS]
targets = [fits[t, "translation"] for t in reference.TEXTS]

for (text, role), fit in sorted(fits.items()):
    print(f"{text:20s} {role:12s} types = {fit.a:.2f} * tokens^{fit.b:.2f}")

report = levelling_out(sources, targets)
for key, value in report.to_dict().items():
    print(f"{key:24s} {value}")

##############################################################################
# How well does a published fit reproduce its own total? The fit for the
# translated Cat's Cradle predicts about 12340 types at 44946 tokens;
# the counted total is 12070.

print(round(predict(fits["cats_cradle", "translation"], 44946)))

##############################################################################
# With three or more texts per cohort the report adds standard deviations.

more = levelling_out(sources + [PowerFit(3.5, 0.69)], targets + [PowerFit(2.5, 0.8)])
print(more.sd_source_b, more.sd_target_b)
