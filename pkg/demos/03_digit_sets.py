"""Digit sets D(p): which base-p digits support the mod p^2 congruence.

D(p) collects the digits d with A(d) = A(p-1-d) mod p^2.  It always
contains 0, p-1, and the central digit (p-1)/2; the interesting primes are
the ones where it is larger.
"""

from apery import digit_set, scan_digit_sets

print("digit sets for the first few primes:")
for p in (2, 3, 5, 7, 11, 13):
    ds = digit_set(p)
    print(f"  {ds.format_row()}   (size {len(ds)})")

print("\nall primes up to 167 with at least 4 digits in D(p):")
for ds in scan_digit_sets(167, 4):
    print(f"  {ds.format_row()}")

print("\nhow rare are large digit sets? sizes for p <= 300:")
sizes = {}
for ds in scan_digit_sets(300, 1):
    sizes.setdefault(len(ds), []).append(ds.p)
for size in sorted(sizes):
    primes = sizes[size]
    shown = ", ".join(map(str, primes[:10])) + (", ..." if len(primes) > 10 else "")
    print(f"  |D(p)| = {size}: {len(primes)} primes ({shown})")
