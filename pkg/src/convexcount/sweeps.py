"""Grid sweeps over the finite identities.

Each ``sweep_*`` returns ``None`` when every case holds, otherwise a short
description of the first counterexample.
"""
from __future__ import annotations

import itertools
import random

from . import counting, lattice
from .exactnum import chu_vandermonde_sides


def path_pair_tuples(max_coord: int, ordered_ends: bool = True):
    """Coordinate tuples in ``[0, max_coord]^8`` where the determinant applies."""
    r = range(max_coord + 1)
    for a, b, c, d in itertools.product(r, repeat=4):
        if c <= a or d <= b:
            continue
        for a2, b2, c2, d2 in itertools.product(r, repeat=4):
            if lattice.determinant_applies(a, b, c, d, a2, b2, c2, d2, ordered_ends):
                yield a, b, c, d, a2, b2, c2, d2


def sweep_path_pairs(max_coord: int = 5, ordered_ends: bool = True) -> str | None:
    for t in path_pair_tuples(max_coord, ordered_ends):
        brute = lattice.count_path_pairs_bruteforce(*t)
        if ordered_ends:
            det = lattice.count_path_pairs_lgv(*t)
        else:
            det = lattice.lgv_determinant(*t)
        if det != brute:
            return f"path pair {t}: determinant {det} != brute force {brute}"
    return None


def chu_vandermonde_samples(count: int = 200, seed: int = 0, max_n: int = 20):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(0, max_n)
        yield n, rng.randint(-5, 20), rng.randint(n + 1, 40)


def sweep_chu_vandermonde(count: int = 200, seed: int = 0) -> str | None:
    for n, a, c in chu_vandermonde_samples(count, seed):
        lhs, rhs = chu_vandermonde_sides(n, a, c)
        if lhs != rhs:
            return f"chu-vandermonde n={n} a={a} c={c}: {lhs} != {rhs}"
    return None


def sweep_telescoping(max_mn: int = 12) -> str | None:
    for m in range(1, max_mn + 1):
        for n in range(1, max_mn + 1):
            for a in range(1, m + 1):
                if not counting.check_s1_telescoping(m, n, a):
                    return f"S1 telescoping m={m} n={n} a={a}"
                if not counting.check_s2_telescoping(m, n, a):
                    return f"S2 telescoping m={m} n={n} a={a}"
            if not counting.check_s1_sum(m, n):
                return f"S1 telescoped sum m={m} n={n}"
            if not counting.check_s2_sum(m, n):
                return f"S2 telescoped sum m={m} n={n}"
    return None


def sweep_decomposition(max_mn: int = 10) -> str | None:
    for m in range(1, max_mn + 1):
        for n in range(1, max_mn + 1):
            bd = counting.breakdown(m, n, check=False)
            if not bd.ok:
                return f"decomposition m={m} n={n}: {', '.join(bd.failures())}"
            bad = counting.reduction_failures(m, n)
            if bad:
                return f"inner sums m={m} n={n}: {bad[0]}"
    return None
