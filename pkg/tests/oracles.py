"""Independent brute-force reference implementations.

Everything here recomputes results straight from the definitions with
plain nested loops, deliberately sharing no code path with the package
modules it checks.  Graphs come in as (n, list-of-edge-pairs) so the
oracles do not depend on the package's edge bookkeeping either.
"""
from collections import Counter
from fractions import Fraction
from itertools import permutations


def descent_distribution(n):
    c = Counter(
        sum(p[i] > p[i + 1] for i in range(n - 1))
        for p in permutations(range(1, n + 1))
    )
    return tuple(c.get(m, 0) for m in range(max(c) + 1))


def excedance_distribution(n):
    c = Counter(
        sum(v > i for i, v in enumerate(p, start=1))
        for p in permutations(range(1, n + 1))
    )
    return tuple(c.get(m, 0) for m in range(max(c) + 1))


def brute_outdegree(n, x_edges, y_edges, p):
    """Outdegree of p in DFS(X, Y) straight from the four-condition rule,
    counting (X-edge copy, Y-edge copy) pairs."""
    return sum(
        1
        for (a, b) in x_edges
        if a != b
        for (u, v) in y_edges
        if (p[a - 1], p[b - 1]) == (u, v)
    )


def brute_odp(n, x_edges, y_edges):
    """ODP coefficient tuple via full enumeration of S_n."""
    c = Counter(
        brute_outdegree(n, x_edges, y_edges, p) for p in permutations(range(1, n + 1))
    )
    return tuple(c.get(m, 0) for m in range(max(c) + 1))


def brute_edge_slice(n, x_edges, y_edges, a, b):
    """Multiplicity-weighted edge slice via full enumeration."""
    c = Counter()
    for p in permutations(range(1, n + 1)):
        weight = sum(1 for (u, v) in y_edges if (p[a - 1], p[b - 1]) == (u, v))
        if weight:
            c[brute_outdegree(n, x_edges, y_edges, p)] += weight
    if not c:
        return ()
    return tuple(c.get(m, 0) for m in range(max(c) + 1))


def brute_assign_slice(n, x_edges, y_edges, i, j):
    c = Counter(
        brute_outdegree(n, x_edges, y_edges, p)
        for p in permutations(range(1, n + 1))
        if p[i - 1] == j
    )
    if not c:
        return ()
    return tuple(c.get(m, 0) for m in range(max(c) + 1))


def naive_series_prefix(coeffs, k, truncation):
    """Prefix of P(x) / (1-x)^k by k truncated convolutions with the
    all-ones geometric series (no binomial formula)."""
    series = list(coeffs[: truncation + 1]) + [0] * (truncation + 1 - len(coeffs))
    for _ in range(k):
        acc = 0
        out = []
        for m in range(truncation + 1):
            acc += series[m]
            out.append(acc)
        series = out
    return tuple(Fraction(c) for c in series)


def proper_coloring_count(n, undirected_edges, k):
    """Number of proper k-colorings, by backtracking on back-edges."""
    back = [[] for _ in range(n)]
    for u, v in undirected_edges:
        if u == v:
            return 0
        lo, hi = min(u, v), max(u, v)
        back[hi - 1].append(lo - 1)

    def rec(i, colors):
        if i == n:
            return 1
        total = 0
        for c in range(k):
            if all(colors[j] != c for j in back[i]):
                colors.append(c)
                total += rec(i + 1, colors)
                colors.pop()
        return total

    return rec(0, [])


def pair_merged_coloring_count(n, undirected_edges, k, a, b):
    """Colorings where a and b share a color and every edge except
    {a, b} is properly colored."""
    total = 0
    from itertools import product

    for assignment in product(range(k), repeat=n):
        if assignment[a - 1] != assignment[b - 1]:
            continue
        if all(
            assignment[u - 1] != assignment[v - 1]
            for u, v in undirected_edges
            if {u, v} != {a, b}
        ):
            total += 1
    return total


def g_descent_distribution(n, adjacency, cyclic=False):
    """Distribution of G-(cyclic-)descents; adjacency is a set of
    frozensets of value pairs."""
    upto = n if cyclic else n - 1
    c = Counter()
    for p in permutations(range(1, n + 1)):
        d = sum(
            p[i] > p[(i + 1) % n] and frozenset((p[i], p[(i + 1) % n])) in adjacency
            for i in range(upto)
        )
        c[d] += 1
    return tuple(c.get(m, 0) for m in range(max(c) + 1))
