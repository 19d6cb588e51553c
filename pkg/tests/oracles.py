"""Brute-force reference implementations used to freeze expected values.

These work on explicit ``frozenset`` families rather than the engine's
bit tricks so that agreement between the two is meaningful.
"""

from itertools import combinations


def subsets(n):
    return range(1 << n)


def brute_topologies(n):
    """All families of subsets of an n-set that are topologies."""
    full = (1 << n) - 1
    middle = [a for a in subsets(n) if a not in (0, full)]
    out = []
    for code in range(1 << len(middle)):
        fam = {0, full} | {middle[i] for i in range(len(middle)) if code >> i & 1}
        if all(u | v in fam and u & v in fam for u, v in combinations(fam, 2)):
            out.append(tuple(sorted(fam)))
    return sorted(out)


def brute_closure(opens, n, a):
    full = (1 << n) - 1
    result = full
    for u in opens:
        closed = full & ~u
        if a & ~closed == 0:
            result &= closed
    return result


def brute_interior(opens, a):
    result = 0
    for u in opens:
        if u & ~a == 0:
            result |= u
    return result


def brute_gamma_open(opens, table, n):
    """Sets A with A = int_gamma(A), straight from the definition."""
    out = []
    for a in subsets(n):
        inner = {
            x for x in range(n)
            if a >> x & 1 and any(u >> x & 1 and table[u] & ~a == 0 for u in opens)
        }
        if sum(1 << x for x in inner) == a:
            out.append(a)
    return out


def separable(opens, table, left, right):
    """Some open U satisfying ``left`` and V satisfying ``right`` with disjoint values."""
    return any(
        table[u] & table[v] == 0
        for u in opens if left(u)
        for v in opens if right(v)
    )
