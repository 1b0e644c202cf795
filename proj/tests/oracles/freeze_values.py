"""Writes frozen_values.inc: mpmath reference values at 50 digits for
arguments that are exact doubles. Rerun with `python3 freeze_values.py`."""
import mpmath as mp

mp.mp.dps = 50


def f(x):
    return mp.mpf(float(x))


hyp = [
    (1.0, 1.0, 2.0, 0.5),
    (1.5, 1.5, 1.0, 0.25),
    (0.5, 0.5, 1.0, 0.95),
    (1.0, 1.0, 1.0, 0.999),
    (1.25, 1.25, 1.0, 1 - 2.0**-40),
    (2.5, 2.5, 2.0, 1 - 2.0**-30),
    (0.75, 0.75, 0.5, 0.9999),
    (1.5, 1.5, 2.0, 1 - 1e-12),
    (0.3, 0.7, 2.5, 0.99),
    (0.3, 0.7, 1.0, 0.97),      # c - a - b = 0
    (0.3, 0.7, 2.0, 0.97),      # c - a - b = 1
    (0.3, 0.70001, 2.0, 0.97),  # near-integer
    (-1.5, 2.25, 3.5, 0.85),
    (2.0, 3.0, 1.5, 0.8),
    (3.0, 3.0, 4.0, 1 - 2.0**-20),
    (0.5, 1.5, 4.0, 0.75),
]
lg = [1e-6, 1e-3, 0.5, 1.5, 2.5, 7.25, 33.3, 1e3, 12345.678, 1e6]
dg = [1e-3, 0.25, 1.0, 2.5, 10.0, 123.456, -0.5, -2.75]

with open("frozen_values.inc", "w") as out:
    out.write("// Generated by freeze_values.py (mpmath, 50 digits). Do not edit.\n")
    out.write("inline const FrozenHyp kFrozenHyp2f1[] = {\n")
    for a, b, c, z in hyp:
        v = mp.hyp2f1(f(a), f(b), f(c), f(z))
        out.write(f"    {{{float(a)!r}, {float(b)!r}, {float(c)!r}, {float(z)!r}, {mp.nstr(v, 20)}}},\n")
    out.write("};\n")
    out.write("inline const FrozenScalar kFrozenLogGamma[] = {\n")
    for x in lg:
        out.write(f"    {{{float(x)!r}, {mp.nstr(mp.loggamma(f(x)), 20)}}},\n")
    out.write("};\n")
    out.write("inline const FrozenScalar kFrozenDigamma[] = {\n")
    for x in dg:
        out.write(f"    {{{float(x)!r}, {mp.nstr(mp.digamma(f(x)), 20)}}},\n")
    out.write("};\n")
