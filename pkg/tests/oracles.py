"""Deliberately naive reference implementations used as test oracles.

Nothing here imports lexdyn; each function takes the slow, obvious route.
"""

import math


def naive_counts(tokens):
    types = []
    counts = []
    for tok in tokens:
        for i, t in enumerate(types):
            if t == tok:
                counts[i] += 1
                break
        else:
            types.append(tok)
            counts.append(1)
    return dict(zip(types, counts))


def naive_prefix_curve(tokens, step):
    ends = list(range(step, len(tokens) + 1, step))
    if not ends or ends[-1] != len(tokens):
        ends.append(len(tokens))
    return [(k, len(set(tokens[:k]))) for k in ends]


def ols_loglog(points):
    """Textbook least squares of ln y on ln x, in plain floats."""
    lx = [math.log(x) for x, _ in points]
    ly = [math.log(y) for _, y in points]
    n = len(lx)
    mx = math.fsum(lx) / n
    my = math.fsum(ly) / n
    sxy = math.fsum((a - mx) * (b - my) for a, b in zip(lx, ly))
    sxx = math.fsum((a - mx) ** 2 for a in lx)
    syy = math.fsum((b - my) ** 2 for b in ly)
    slope = sxy / sxx
    a = math.exp(my - slope * mx)
    return a, slope, sxy * sxy / (sxx * syy)


def naive_pearson(xs, ys):
    n = len(xs)
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    num = math.fsum((x - mx) * (y - my) for x, y in zip(xs, ys))
    den = math.sqrt(math.fsum((x - mx) ** 2 for x in xs) * math.fsum((y - my) ** 2 for y in ys))
    return num / den
