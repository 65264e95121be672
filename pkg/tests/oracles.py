"""Independent brute-force oracles used by the test suite.

These deliberately avoid the package's optimized code paths: subsets come
from a raw binary counter and every coloring is tried exhaustively.
"""


def sum_free_table(n: int) -> list[bool]:
    """sum_free[mask] for every subset mask of [1, n] (bit v holds value v)."""
    table = [False] * (1 << (n + 1))
    table[0] = True
    for mask in range(2, 1 << (n + 1), 2):
        top = mask.bit_length() - 1
        rest = mask ^ (1 << top)
        if not table[rest]:
            continue
        ok = True
        m = rest
        while m:
            b = m & -m
            m ^= b
            x = b.bit_length() - 1
            other = top - x
            if other >= 1 and (rest >> other) & 1:
                ok = False
                break
        table[mask] = ok
    return table


def two_wise_count_oracle(n: int) -> int:
    """Count subsets of [1, n] splittable into two sum-free parts by trying
    every submask as the first part."""
    table = sum_free_table(n)
    total = 0
    for r in range(1 << n):
        mask = r << 1
        if mask == 0:
            total += 1
            continue
        low = mask & -mask
        rest = mask ^ low
        # the part holding the smallest element ranges over submasks of rest
        sub = rest
        found = False
        while True:
            p0 = sub | low
            if table[p0] and table[mask ^ p0]:
                found = True
                break
            if sub == 0:
                break
            sub = (sub - 1) & rest
        total += found
    return total
