#!/usr/bin/env python3
"""Regenerates search_n36_s2.csv from first principles.

Characters are rebuilt from the canonical generators (smallest primitive
root for odd p, 3 for 4, (-1, 5) for 2^a with a >= 3) with discrete logs
found by exhaustive search, conductors by scanning every divisor, and sums
evaluated directly in complex floating point.
"""
import cmath
import itertools
import math
import sys


def factor(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            out.append((p, a))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def mult_order(g, m):
    k, x = 1, g % m
    while x != 1:
        x = x * g % m
        k += 1
    return k


def generators(p, a):
    q = p ** a
    if p == 2:
        if a == 1:
            return []
        if a == 2:
            return [(3, 2)]
        return [(q - 1, 2), (5, 2 ** (a - 2))]
    phi = q - q // p
    g = next(g for g in range(2, q) if math.gcd(g, p) == 1 and mult_order(g, q) == phi)
    return [(g, phi)]


def dlog(k, q, gens):
    for exps in itertools.product(*(range(o) for _, o in gens)):
        x = 1
        for (g, _), e in zip(gens, exps):
            x = x * pow(g, e, q) % q
        if x == k % q:
            return exps
    raise ValueError


def characters(n):
    comps = [(p, a, p ** a, generators(p, a)) for p, a in factor(n)]
    radices = [o for *_, gens in comps for _, o in gens]
    for digits in itertools.product(*(range(r) for r in radices)):
        it = iter(digits)
        yield [(p, a, q, gens, [next(it) for _ in gens]) for p, a, q, gens in comps]


def value(chi, k, n):
    if math.gcd(k, n) != 1:
        return 0
    turn = 0.0
    for _, _, q, gens, idx in chi:
        for (g, o), i, e in zip(gens, idx, dlog(k, q, gens)):
            turn += i * e / o
    return cmath.exp(2j * math.pi * turn)


def label(chi, n):
    return f"{n}:" + ";".join(f"{p}^{a}=[{','.join(map(str, idx))}]" for p, a, _, _, idx in chi)


def gen_gcd(a, b, s):
    g = math.gcd(a, b)
    return max(l ** s for l in range(1, g + 1) if g % (l ** s) == 0)


def conductor(chi, n):
    for d in range(1, n + 1):
        if n % d:
            continue
        if all(abs(value(chi, k, n) - 1) < 1e-9 for k in range(1, n + 1, d) if math.gcd(k, n) == 1):
            return d


def klee(n, s):
    return sum(1 for m in range(1, n + 1) if gen_gcd(m, n, s) == 1)


def tau(n, s):
    return sum(1 for d in range(1, n + 1) if n % d == 0 and round(d ** (1 / s)) ** s == d)


def main(n_max=36, s=2):
    w = sys.stdout.write
    w("n,chi,lhs,rhs\n")
    for n in range(1, n_max + 1):
        for chi in characters(n):
            z = sum(gen_gcd(k - 1, n, s) * value(chi, k, n)
                    for k in range(1, n + 1) if gen_gcd(k, n, s) == 1)
            lhs = round(z.real)
            assert abs(z - lhs) < 1e-6
            rhs = klee(n, s) * tau(n // conductor(chi, n), s)
            if lhs != rhs:
                w(f'{n},"{label(chi, n)}",{lhs},{rhs}\n')


if __name__ == "__main__":
    main()
