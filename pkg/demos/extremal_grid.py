"""The Macaulay-representation bound on bdeg and the ideals that reach it."""
from degreelab.degree import e_shift, extremal_ideal, homog_bound, macaulay_rep, report_for_borel
from degreelab.monomial_ideal import binom

rep = macaulay_rep(5, 2)
print("5 =", " + ".join("C(%d,%d)" % t for t in rep.terms), "  shifted:", e_shift(rep, 1))

for n in range(1, 4):
    for c in range(1, n + 1):
        for r in range(1, 4):
            for e in range(1, min(binom(c + r, r), 6) + 1):
                if c == n and e != binom(n + r, r):
                    continue  # artinian: only m^(r+1) has the right shape
                j = extremal_ideal(n, c, r, e)
                b = report_for_borel(j).bdeg
                bound = homog_bound(n, e, r, n - c, 0)
                print("n=%d c=%d r=%d e=%d  bdeg=%d bound=%d %s" % (n, c, r, e, b, bound, "" if b == bound else "!!"))
