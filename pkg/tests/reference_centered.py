"""Direct O(mn) transcription of the centered reconstruction, for cross-checking.

Each front is a dict ``row -> left end`` and every predicate recomputes the
column sums from scratch, so nothing here shares state or shortcuts with
``hvtomo.centered``.
"""
import numpy as np


def _colsums(t, rows, n):
    s = np.zeros(n + 2, dtype=np.int64)
    for i, ti in t.items():
        s[ti:ti + rows[i]] += 1
    return s


def _window(t, rows, cols, n):
    s = _colsums(t, rows, n)
    unsat = [j for j in range(1, n + 1) if s[j] < cols[j]]
    if not unsat:
        return None, None, s
    return unsat[0], unsat[-1], s


def _vc_ok(t, rows, k):
    for i in t:
        if i == k:
            continue
        d = 1 if i < k else -1
        if not (t[i + d] <= t[i] <= t[i + d] + rows[i + d] - rows[i]):
            return False
    return True


def _is_partial(t, rows, cols, m, n, k):
    p, q = min(t), max(t)
    if any(not 1 <= t[i] <= n - rows[i] + 1 for i in t):
        return False
    if not _vc_ok(t, rows, k):
        return False
    a, b, s = _window(t, rows, cols, n)
    if (p, q) == (1, m):
        return a is None
    if a is None:
        return False
    if not (min(t[p], t[q]) <= a <= b < max(t[p] + rows[p], t[q] + rows[q])):
        return False
    return all(s[j] == cols[j] for j in range(1, n + 1) if not a <= j <= b)


def _balanced(t, rows, cols, n):
    p, q = min(t), max(t)
    a, b, _ = _window(t, rows, cols, n)
    if a is None:
        return False
    return max(t[p], t[q]) <= a and b < min(t[p] + rows[p], t[q] + rows[q])


def _valid(t, rows, cols, n):
    a, b, s = _window(t, rows, cols, n)
    if a is None:
        return True
    return all(s[j] <= cols[j] for j in range(a + 1, b))


def _ext(t, side, rows, cols, m, n, k):
    if _balanced(t, rows, cols, n) and not _valid(t, rows, cols, n):
        return []
    a, b, _ = _window(t, rows, cols, n)
    if a is None:
        return []
    p, q = min(t), max(t)
    row = p - 1 if side == "above" else q + 1
    out = []
    for start in dict.fromkeys((a, b - rows[row] + 1)):
        cand = dict(t)
        cand[row] = start
        if _is_partial(cand, rows, cols, m, n, k):
            out.append(cand)
    return out


def naive_centered(r, c):
    """Return ``(t_vector or None, trace)``; trace holds ``(p, q, fronts)`` per step."""
    m, n = len(r), len(c)
    rows = [0] + list(r)
    cols = [0] + list(c) + [0]
    if sum(r) != sum(c):
        return None, []
    k = next(i for i in range(1, m + 1) if rows[i] == n)
    fronts = [{k: 1}]
    p = q = k

    def snapshot():
        out = []
        for t in fronts:
            a, b, _ = _window(t, rows, cols, n)
            bal = _balanced(t, rows, cols, n)
            out.append((t[p], t[q], a, b, bal, bal and _valid(t, rows, cols, n)))
        return (p, q, out)

    trace = [snapshot()]
    if (p, q) == (1, m) and _window(fronts[0], rows, cols, n)[0] is not None:
        fronts = []
    while (p, q) != (1, m) and fronts:
        side = "above" if q == m or (p > 1 and rows[p - 1] >= rows[q + 1]) else "below"
        good = [t for t in fronts if _balanced(t, rows, cols, n) and _valid(t, rows, cols, n)]
        if good:
            fronts = _ext(good[0], side, rows, cols, m, n, k)
        else:
            fronts = [y for t in fronts for y in _ext(t, side, rows, cols, m, n, k)]
        if side == "above":
            p -= 1
        else:
            q += 1
        trace.append(snapshot())
    for t in fronts:
        if min(t) == 1 and max(t) == m and _window(t, rows, cols, n)[0] is None:
            return [t[i] for i in range(1, m + 1)], trace
    return None, trace
