"""Run the small corpus and tabulate which checks fail, if any."""
from collections import Counter

from degreelab.corpus import run_corpus

rep = run_corpus(7, "small", jobs=4)
print("%d/%d items pass" % (rep["passed"], rep["items"]))

fails = Counter(c for f in rep["failed"] for c in f["failed_checks"])
for check, count in fails.items():
    print("  %s failed on %d items" % (check, count))

# the failures are all regular rings: one linear form cut from k[x,y,z]
for f in rep["failed"]:
    item = rep["results"][f["index"]]
    print("  item", f["index"], item["gens"], "red", item["red"], "bdeg", item["bdeg"], "dim", item["dim"])
