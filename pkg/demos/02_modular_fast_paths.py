"""Digit-by-digit modular evaluation.

A(n) mod p is the product of A(d) over the base-p digits d of n, and mod
p^2 each digit contributes A(d) + p*q*A'(d) where q is the remaining
quotient.  Both run in O(log n) once the digit tables are built, so huge
indices cost almost nothing.
"""

import math
import time

from apery import apery_fast, apery_mod_p, apery_mod_p2, mod_p2_tables, mod_p_table


def digit_count(x):
    # exact, without a full decimal conversion
    est = int(x.bit_length() * math.log10(2))
    return est + (x >= 10**est)


p = 13
table = mod_p_table(p)
tables = mod_p2_tables(p)

print(f"digit tables for p = {p}:")
print("  A(d) mod p:  ", table)
print("  A(d) mod p^2:", tables[0])

n = 2500
exact = apery_fast(n)
print(f"\nA({n}) has {digit_count(exact)} digits")
print(f"  exact reduction mod {p}:   {exact % p}")
print(f"  digit product mod {p}:     {apery_mod_p(n, p, table).value}")
print(f"  exact reduction mod {p}^2: {exact % p**2}")
print(f"  digit route mod {p}^2:     {apery_mod_p2(n, p, tables).value}")

big = 10**40 + 7  # far beyond anything exact evaluation could touch
t0 = time.time()
r1 = apery_mod_p(big, p, table)
r2 = apery_mod_p2(big, p, tables)
print(f"\nA(10^40 + 7) mod {p} = {r1.value}, mod {p}^2 = {r2.value}"
      f"  ({1000 * (time.time() - t0):.2f} ms)")
