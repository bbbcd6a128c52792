"""Slow, obviously-correct reference implementations used as test oracles.

Nothing here shares code with the package: cycles come from vertex
permutations, colorings from full 2^n enumeration.
"""

import itertools


def adjacency_sets(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def naive_k_cycles(n, edges, k):
    """Set of k-cycles, each as a frozenset of its edges."""
    adj = adjacency_sets(n, edges)
    found = set()
    for subset in itertools.combinations(range(n), k):
        first = subset[0]
        for rest in itertools.permutations(subset[1:]):
            seq = (first,) + rest
            if all(seq[(i + 1) % k] in adj[seq[i]] for i in range(k)):
                found.add(frozenset(frozenset((seq[i], seq[(i + 1) % k])) for i in range(k)))
    return found


def cycle_vertex_sets(cycles):
    return [frozenset(v for e in c for v in e) for c in cycles]


def naive_valid_colorings(n, edges, k):
    """Every coloring (tuple of bools, True = red) with no monochromatic k-cycle."""
    vsets = cycle_vertex_sets(naive_k_cycles(n, edges, k))
    out = []
    for col in itertools.product((True, False), repeat=n):
        if all(len({col[v] for v in vs}) == 2 for vs in vsets):
            out.append(col)
    return out


def naive_nae_models(num_vars, clauses):
    """All NAE models of integer clauses, as tuples of bools for x1..xn."""
    out = []
    for bits in itertools.product((False, True), repeat=num_vars):
        ok = True
        for clause in clauses:
            vals = {bits[abs(l) - 1] == (l > 0) for l in clause}
            if len(vals) != 2:
                ok = False
                break
        if ok:
            out.append(bits)
    return out


def is_complete(n, edges):
    return len(set(map(frozenset, edges))) == n * (n - 1) // 2
