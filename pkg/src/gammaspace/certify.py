"""Re-check verdicts against the raw definitions.

Nothing here reuses the scanning code of the predicates: every check is a
direct loop over the open sets and table entries of the space, so that a
certificate or witness is confirmed by a second, independent route.
"""

from __future__ import annotations

from .finset import complement
from .operations import Space
from .verdict import Verdict


def _opens(s: Space):
    return list(s.gamma.entries.items())


def _has(a: int, x: int) -> bool:
    return bool(a >> x & 1)


def _sub(a: int, b: int) -> bool:
    return a | b == b


def raw_gamma_interior(s: Space, a: int) -> int:
    out = 0
    for x in range(s.n):
        if _has(a, x) and any(_has(u, x) and _sub(gu, a) for u, gu in _opens(s)):
            out |= 1 << x
    return out


def raw_gamma_closure(s: Space, a: int) -> int:
    out = 0
    for x in range(s.n):
        if all(gu & a for u, gu in _opens(s) if _has(u, x)):
            out |= 1 << x
    return out


def raw_gamma_opens(s: Space) -> set[int]:
    return {a for a in range(1 << s.n) if raw_gamma_interior(s, a) == a}


def raw_closed(s: Space, mode: str) -> set[int]:
    source = [u for u, _ in _opens(s)] if mode == "tau" else raw_gamma_opens(s)
    return {complement(u, s.n) for u in source}


def _regular_ok(s, x, u, v, w, strict):
    g = s.gamma.entries
    if not (_has(u, x) and _has(v, x) and _has(w, x)):
        return False
    meet = g[u] & g[v]
    return g[w] == meet if strict else _sub(g[w], meet)


def _separated(s, left_ok, right_ok):
    """Is there a pair of opens with disjoint values meeting both constraints?"""
    ops = _opens(s)
    return any(
        gu & gv == 0
        for u, gu in ops
        if left_ok(u, gu)
        for v, gv in ops
        if right_ok(v, gv)
    )


def recheck(s: Space, prop: str, verdict: Verdict, mode: str = "tau") -> bool:
    """True iff the verdict's certificate (or witness) is sound for ``prop``."""
    mode = getattr(mode, "value", mode)
    g = s.gamma.entries
    cert, wit = verdict.certificate, verdict.witness
    ops = _opens(s)

    if prop in ("regular-op", "strictly-regular-op"):
        strict = prop == "strictly-regular-op"
        if verdict.holds:
            needed = {
                (x, u, v)
                for x in range(s.n)
                for u, _ in ops
                for v, _ in ops
                if u <= v and _has(u, x) and _has(v, x)
            }
            return set(cert) == needed and all(
                _regular_ok(s, x, u, v, w, strict) for (x, u, v), w in cert.items()
            )
        x, u, v = wit["x"], wit["U"], wit["V"]
        return (
            _has(u, x) and _has(v, x)
            and not any(_regular_ok(s, x, u, v, w, strict) for w, _ in ops)
        )

    if prop == "open-op":
        family = raw_gamma_opens(s)
        if verdict.holds:
            return all(gu in family for _, gu in ops)
        return g[wit["V"]] not in family

    if prop == "gamma-t2":
        if verdict.holds:
            pairs = {(x, y) for x in range(s.n) for y in range(x + 1, s.n)}
            return set(cert) == pairs and all(
                _has(u, x) and _has(v, y) and g[u] & g[v] == 0
                for (x, y), (u, v) in cert.items()
            )
        x, y = wit["x"], wit["y"]
        return x != y and not _separated(
            s, lambda u, gu: _has(u, x), lambda v, gv: _has(v, y)
        )

    if prop == "gamma-t1":
        if verdict.holds:
            pairs = {(x, y) for x in range(s.n) for y in range(s.n) if x != y}
            return set(cert) == pairs and all(
                _has(u, x) and not _has(g[u], y) for (x, y), u in cert.items()
            )
        x, y = wit["x"], wit["y"]
        return x != y and all(_has(gu, y) for u, gu in ops if _has(u, x))

    if prop == "gs-regular":
        closed = raw_closed(s, mode)
        if verdict.holds:
            needed = {(a, x) for a in closed for x in range(s.n) if not _has(a, x)}
            return set(cert) == needed and all(
                _has(u, x) and _sub(a, v) and g[u] & g[v] == 0
                for (a, x), (u, v) in cert.items()
            )
        a, x = wit["A"], wit["x"]
        return a in closed and not _has(a, x) and not _separated(
            s, lambda u, gu: _has(u, x), lambda v, gv: _sub(a, v)
        )

    if prop == "gs-normal":
        closed = raw_closed(s, mode)
        if verdict.holds:
            needed = {(a, b) for a in closed for b in closed if a <= b and a & b == 0}
            return set(cert) == needed and all(
                _sub(a, u) and _sub(b, v) and g[u] & g[v] == 0
                for (a, b), (u, v) in cert.items()
            )
        a, b = wit["A"], wit["B"]
        return a in closed and b in closed and a & b == 0 and not _separated(
            s, lambda u, gu: _sub(a, u), lambda v, gv: _sub(b, v)
        )

    if prop == "shrinking":
        closed = raw_closed(s, mode)

        def shrinks(a, u, v):
            inner = raw_gamma_closure(s, g[v])
            return _sub(a, v) and _sub(v, inner) and _sub(inner, g[u])

        if verdict.holds:
            needed = {(a, u) for a in closed for u, _ in ops if _sub(a, u)}
            return set(cert) == needed and all(
                shrinks(a, u, v) for (a, u), v in cert.items()
            )
        a, u = wit["A"], wit["U"]
        return a in closed and _sub(a, u) and not any(shrinks(a, u, v) for v, _ in ops)

    raise ValueError(f"no re-check defined for {prop!r}")


def recheck_gamma_closed(s: Space, a: int, convention: str, verdict: Verdict) -> bool:
    convention = getattr(convention, "value", convention)
    rest = complement(a, s.n)
    if convention == "complement":
        truth = raw_gamma_interior(s, rest) == rest
    else:
        truth = _sub(raw_gamma_closure(s, a), a)
    if verdict.holds != truth:
        return False
    if verdict.holds:
        return True
    # witness: a point violating the chosen formulation
    x = verdict.witness["x"]
    if convention == "complement":
        return _has(rest, x) and not _has(raw_gamma_interior(s, rest), x)
    return not _has(a, x) and _has(raw_gamma_closure(s, a), x)
