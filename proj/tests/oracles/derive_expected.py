"""Independent reference computations for frozen test values.

Plain Python, no shared code with the C++ library: Pascal's triangle for
binomials, a split-minimum recurrence for K, and breadth-first search over
explicit state tuples for exact distances.
"""
from collections import deque
from functools import lru_cache


def pascal(n_max):
    rows = [[1]]
    for a in range(1, n_max + 1):
        prev = rows[-1]
        rows.append([1] + [prev[i - 1] + prev[i] for i in range(1, a)] + [1])
    return rows


@lru_cache(maxsize=None)
def k_rec(n, p):
    if n == 0:
        return 0
    if p == 3:
        return 2 ** n - 1
    if n == 1:
        return 1
    return min(2 * k_rec(k, p) + k_rec(n - k, p - 1) for k in range(1, n))


def smallest_split(n, p):
    best = min(2 * k_rec(k, p) + k_rec(n - k, p - 1) for k in range(1, n))
    return next(k for k in range(1, n) if 2 * k_rec(k, p) + k_rec(n - k, p - 1) == best)


def neighbors(state, p):
    tops = {}
    for d in range(len(state) - 1, -1, -1):
        tops[state[d]] = d
    for src in range(1, p + 1):
        if src not in tops:
            continue
        d = tops[src]
        for dst in range(1, p + 1):
            if dst != src and (dst not in tops or tops[dst] > d):
                s = list(state)
                s[d] = dst
                yield tuple(s), d + 1


def bfs(start, goal, p, allow_largest=True):
    n = len(start)
    dist = {start: 0}
    q = deque([start])
    while q:
        u = q.popleft()
        if goal(u):
            return dist[u]
        for v, d in neighbors(u, p):
            if not allow_largest and d == n:
                continue
            if v not in dist:
                dist[v] = dist[u] + 1
                q.append(v)


def m_number(n, p):
    goal = tuple([2] * n)
    return bfs(tuple([1] * n), lambda s: s == goal, p)


def demolish(n, p):
    def target(s):
        others = s[:-1]
        if any(x == s[-1] for x in others):
            return False
        return any(peg != s[-1] and peg not in others for peg in range(1, p + 1))
    return bfs(tuple([1] * n), target, p, allow_largest=False)


def classical(n, a, b, c, out):
    if n == 0:
        return
    classical(n - 1, a, c, b, out)
    out.append((n, a, b))
    classical(n - 1, c, b, a, out)


def construct(n, p, a, b, pegs, offset, out):
    if n == 0:
        return
    if n == 1:
        out.append((offset + 1, a, b))
        return
    mid = min(x for x in pegs if x not in (a, b))
    if p == 3:
        moves = []
        classical(n, a, b, mid, moves)
        out.extend((d + offset, x, y) for d, x, y in moves)
        return
    k = smallest_split(n, p)
    construct(k, p, a, mid, pegs, offset, out)
    construct(n - k, p - 1, a, b, [x for x in pegs if x != mid], offset + k, out)
    construct(k, p, mid, b, pegs, offset, out)


def base_of(n, moves):
    state = [1] * n
    for d, _, to in moves:
        if d == n:
            break
        state[d - 1] = to
    k = 0
    for d in range(n - 1, 0, -1):
        if state[d - 1] != state[n - 2]:
            k = d
            break
    return n - k - 1, state


if __name__ == "__main__":
    print("C(30,15) =", pascal(30)[30][15])
    print("K(n,4) n=1..10:", [k_rec(n, 4) for n in range(1, 11)])
    print("K(n,5) n=1..8:", [k_rec(n, 5) for n in range(1, 9)])
    print("smallest split (4,4):", smallest_split(4, 4))
    print("M(n,4) n=1..6:", [m_number(n, 4) for n in range(1, 7)])
    print("M(n,5) n=1..5:", [m_number(n, 5) for n in range(1, 6)])
    print("M(n,3) n=1..6:", [m_number(n, 3) for n in range(1, 7)])
    for p in (3, 4, 5):
        print(f"D(n,{p}) n=1..6:", [demolish(n, p) for n in range(1, 7)])
    cl = []
    classical(3, 1, 2, 3, cl)
    print("classical(3) 1->2:", cl)
    print("  disk-1 moves:", sum(1 for d, _, _ in cl if d == 1))
    print("  base:", base_of(3, cl))
    fs = []
    construct(6, 4, 1, 2, [1, 2, 3, 4], 0, fs)
    print("constructed (6,4) 1->2 length", len(fs), "base", base_of(6, fs))
    fs = []
    construct(4, 4, 1, 2, [1, 2, 3, 4], 0, fs)
    print("constructed (4,4) 1->2:", fs)
