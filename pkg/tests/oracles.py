"""Independent oracles for the test suite.

Everything here recomputes expected values from first principles with
deliberately different algorithms than the package: box scans instead of
reflection orbits, exhaustive function enumeration instead of dynamic
programming, direct path counting instead of linear recursions.  Test
modules freeze values produced by these oracles and compare the package
against them.
"""

from __future__ import annotations

from itertools import product


def euler_matrix_oracle(n: int, arrows) -> list[list[int]]:
    """Euler form matrix rebuilt directly from the arrow list."""
    mat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for s, t in arrows:
        mat[s - 1][t - 1] -= 1
    return mat


def tits_oracle(n: int, arrows, x) -> int:
    mat = euler_matrix_oracle(n, arrows)
    return sum(x[i] * mat[i][j] * x[j] for i in range(n) for j in range(n))


def roots_by_box_scan(n: int, arrows, box: int) -> set[tuple[int, ...]]:
    """All nonzero vectors in [0, box]^n with Tits form 1.

    For a Dynkin quiver with box at least the largest root entry this is
    exactly the set of positive real roots (positive definiteness makes
    every q=1 lattice vector a root).
    """
    return {
        x
        for x in product(range(box + 1), repeat=n)
        if any(x) and tits_oracle(n, arrows, x) == 1
    }


def reflect_oracle(n: int, arrows, i: int, x) -> tuple[int, ...]:
    """Simple reflection at vertex i (1-based), from raw arrow counts."""
    pairing = 2 * x[i - 1]
    for s, t in arrows:
        if s == i and t != i:
            pairing -= x[t - 1]
        elif t == i and s != i:
            pairing -= x[s - 1]
    out = list(x)
    out[i - 1] -= pairing
    return tuple(out)


def path_count_oracle(n: int, arrows, src: int, dst: int) -> int:
    """Number of directed paths src -> dst, by memoized DFS."""
    seen: dict[int, int] = {}

    def go(v: int) -> int:
        if v == dst:
            return 1
        if v in seen:
            return seen[v]
        total = sum(go(t) for s, t in arrows if s == v)
        seen[v] = total
        return total

    return go(src)


def projectives_oracle(n: int, arrows) -> list[tuple[int, ...]]:
    """Dimension vector of each indecomposable projective: paths from i."""
    return [
        tuple(path_count_oracle(n, arrows, i, j) for j in range(1, n + 1))
        for i in range(1, n + 1)
    ]


def monotone_maps_bruteforce(p_leq, l_leq) -> int:
    """Count order-preserving maps by scanning every function."""
    np_, nl = len(p_leq), len(l_leq)
    count = 0
    for f in product(range(nl), repeat=np_):
        if all(
            l_leq[f[i]][f[j]]
            for i in range(np_)
            for j in range(np_)
            if p_leq[i][j]
        ):
            count += 1
    return count


def random_poset_matrix(rng, n: int) -> list[list[bool]]:
    """Random poset on 0..n-1 as a reflexive-transitive leq matrix.

    Seeds a random relation only from lower to higher index (hence acyclic)
    and takes the reflexive-transitive closure.
    """
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                leq[i][j] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                for j in range(n):
                    if leq[k][j]:
                        leq[i][j] = True
    return leq
