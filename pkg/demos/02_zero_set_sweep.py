"""Zero sets of the approximants to 1/(1-z): data behind the scatter plot.

Sweeps n = 0..50 at alpha = 0 and writes one CSV row per root.  Two
structural facts are visible in the data: every zero stays outside the
closed unit disk, and p_n has exactly one real negative zero when n is
odd and none when n is even.  The CSV can be fed straight to any plotting
tool (columns: n, root_index, re, im, modulus).
"""

import collections
import sys

from optapprox.cli import main

OUT = sys.argv[1] if len(sys.argv) > 1 else "zero_set_sweep.csv"

code = main(["zeros", "--f", '{"family":"one_minus_z_pow","params":{"N":1}}',
             "--alpha", "0", "--n-range", "0..50", "--format", "csv",
             "--output", OUT])
assert code == 0

import csv

rows = list(csv.DictReader(open(OUT)))
print(f"wrote {len(rows)} roots (= 1 + 2 + ... + 50) to {OUT}")
print(f"minimum modulus over all roots: "
      f"{min(float(r['modulus']) for r in rows):.6f}  (> 1)")

real_negative = collections.Counter(
    int(r["n"]) for r in rows
    if abs(float(r["im"])) < 1e-9 and float(r["re"]) < 0)
odd = sorted(n for n in real_negative if n % 2 == 1)
print(f"real negative roots occur exactly at odd n: "
      f"{odd[:5]} ... {odd[-3:]} (one each: "
      f"{all(real_negative[n] == 1 for n in odd)})")
