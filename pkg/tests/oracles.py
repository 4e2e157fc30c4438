"""Slow, obviously-correct reference computations used only by the tests."""

from itertools import permutations
from math import gcd


def brute_phi(n):
    return sum(1 for t in range(1, n + 1) if gcd(t, n) == 1)


def brute_double_factorial(n):
    out = 1
    for a in range(1, n + 1):
        if a % 2 == n % 2:
            out *= a
    return out


def brute_shift_rotation_fixed_total(n):
    """Strings with x_i = x_{i+m} + k (mod n), summed over every (m, k)."""
    total = 0
    for x in permutations(range(n)):
        for m in range(n):
            for k in range(n):
                if all(x[i] == (x[(i + m) % n] + k) % n for i in range(n)):
                    total += 1
    return total


def brute_orbit_count(n, cyclic, reflect):
    """Orbits found by flood-filling the generator moves over all strings."""
    moves = [lambda y: y[::-1], lambda y: tuple((a + 1) % n for a in y)]
    if cyclic:
        moves.append(lambda y: y[1:] + y[:1])
    if reflect:
        moves.append(lambda y: tuple((-a) % n for a in y))
    seen = set()
    orbits = 0
    for x in permutations(range(n)):
        if x in seen:
            continue
        orbits += 1
        stack = [x]
        seen.add(x)
        while stack:
            y = stack.pop()
            for f in moves:
                z = f(y)
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
    return orbits
