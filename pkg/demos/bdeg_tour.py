"""bdeg on a handful of small ideals, compared with deg and reg."""
from degreelab.degree import bdeg, bound_for_report
from degreelab.io import parse_ideal


examples = [
    ("m^2 in 3 vars", 3, "x,y,z", "x^2, x*y, x*z, y^2, y*z, z^2"),
    ("complete intersection", 2, "x,y", "x^2, y^2"),
    ("embedded point", 2, "x,y", "x^3, x^2*y"),
    ("plane cubic", 3, "x,y,z", "x^3 + y^3 + z^3"),
    ("two skew lines", 4, "a,b,c,d", "a*c, a*d, b*c, b*d"),
]

print("%-24s %5s %4s %4s %4s %6s" % ("", "bdeg", "deg", "reg", "dim", "bound"))
for name, n, names, gens in examples:
    rep = bdeg(parse_ideal("ring n=%d char=32003 vars=%s\ngens: %s\n" % (n, names, gens)))
    print("%-24s %5d %4d %4d %4d %6s" % (name, rep.bdeg, rep.deg, rep.reg, rep.dim, bound_for_report(rep)))

# Cohen-Macaulay rows have bdeg == deg; the embedded point adds one
