"""Slow reference implementations kept independent of the package internals.

Only unit weights, p = h = 1 and vertex values are supported. Plain sets,
no memoisation, no pruning to reachable vertices.
"""


def spread(adj, burnt, protected):
    new = {w for v in burnt for w in adj[v]} - burnt - protected
    return burnt | new, bool(new)


def threatened(adj, burnt, protected):
    return bool({w for v in burnt for w in adj[v]} - burnt - protected)


def finish(adj, burnt, protected):
    while threatened(adj, burnt, protected):
        burnt, _ = spread(adj, burnt, protected)
    return burnt


def best_value(adj, values, s, k):
    """Max saved value with at most k rounds of one protection (skips allowed)."""
    n = len(adj)

    def rec(burnt, protected, left):
        if not threatened(adj, burnt, protected) or left == 0:
            final = finish(adj, burnt, protected)
            return sum(values[v] for v in range(n) if v not in final)
        options = [None] + [v for v in range(n) if v not in burnt and v not in protected]
        best = -1
        for v in options:
            prot = protected | {v} if v is not None else protected
            b2, _ = spread(adj, burnt, prot)
            best = max(best, rec(b2, prot, left - 1))
        return best

    return rec({s}, frozenset(), k)


def burnt_counts(adj, s):
    """Every final burnt count reachable by some strategy with at least one protection."""
    n = len(adj)
    out = set()

    def rec(burnt, protected):
        if not threatened(adj, burnt, protected):
            if protected or n == 1:
                out.add(len(burnt))
            return
        for v in [None] + [v for v in range(n) if v not in burnt and v not in protected]:
            prot = protected | {v} if v is not None else protected
            b2, _ = spread(adj, burnt, prot)
            rec(b2, prot)

    rec({s}, frozenset())
    return out


def adjacency(g):
    return [set(g.adj[v]) for v in range(g.n)]
