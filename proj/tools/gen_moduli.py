#!/usr/bin/env python3
"""Regenerate the default-modulus table in src/gf2n.cpp.

Prints, for each degree n, the lexicographically smallest irreducible
polynomial over F_2 as a hex bitmask (bit i = coefficient of x^i).
"""

import sys


def mulmod(a: int, b: int, mod: int, deg: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> deg & 1:
            a ^= mod
    return r


def frobenius(p: int, deg: int, times: int) -> int:
    """x^(2^times) mod p, by repeated squaring of x."""
    t = 2
    for _ in range(times):
        t = mulmod(t, t, p, deg)
    return t


def gcd(a: int, b: int) -> int:
    while b:
        if a.bit_length() < b.bit_length():
            a, b = b, a
        while a and a.bit_length() >= b.bit_length():
            a ^= b << (a.bit_length() - b.bit_length())
        a, b = b, a
    return a


def irreducible(p: int) -> bool:
    """Ben-Or test: x^(2^deg) = x mod p, and no factor of degree <= deg/2."""
    deg = p.bit_length() - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if frobenius(p, deg, deg) != 2:
        return False
    return all(gcd(p, frobenius(p, deg, d) ^ 2) == 1 for d in range(1, deg // 2 + 1))


def smallest(deg: int) -> int:
    for p in range(1 << deg | 1, 1 << (deg + 1), 2):
        if irreducible(p):
            return p
    raise AssertionError(f"no irreducible of degree {deg}")


def main() -> None:
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 16
    for n in range(1, top + 1):
        print(f"n={n:2d}  {smallest(n):#x}")


if __name__ == "__main__":
    main()
