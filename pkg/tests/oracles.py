"""Brute-force reference implementations used as test oracles.

Nothing here imports the package: tableaux are tuples of row tuples and every
routine follows the defining description as directly as possible.
"""

from collections import deque
from itertools import permutations


def all_partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


def is_standard(rows):
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if j and row[j - 1] >= v:
                return False
            if i and rows[i - 1][j] >= v:
                return False
    return True


def syt_by_permutations(shape):
    """Every filling by 1..n that is increasing; only usable for n <= 8."""
    n = sum(shape)
    out = []
    for perm in permutations(range(1, n + 1)):
        rows, k = [], 0
        for r in shape:
            rows.append(tuple(perm[k:k + r]))
            k += r
        if is_standard(rows):
            out.append(tuple(rows))
    return out


def syt_by_removal(shape):
    """SYT built by choosing the box of n among the outer corners, recursively."""
    shape = tuple(shape)
    n = sum(shape)
    if n == 0:
        return [()]
    out = []
    for i, r in enumerate(shape):
        if i + 1 < len(shape) and shape[i + 1] == r:
            continue
        smaller = list(shape)
        smaller[i] -= 1
        smaller = tuple(x for x in smaller if x)
        for t in syt_by_removal(smaller):
            rows = [list(row) for row in t] + [[]] * (len(shape) - len(t))
            rows[i] = rows[i] + [n]
            out.append(tuple(tuple(row) for row in rows))
    return out


def shape_of(t):
    return tuple(len(r) for r in t)


def position(t, v):
    for i, row in enumerate(t):
        if v in row:
            return i, row.index(v)
    raise ValueError(v)


def transpose_shape(shape):
    return tuple(sum(1 for r in shape if r > j) for j in range(shape[0])) if shape else ()


def transpose_tab(t):
    sh = shape_of(t)
    return tuple(tuple(t[i][j] for i in range(len(sh)) if sh[i] > j) for j in range(sh[0]))


def bk(t, i):
    """Swap i and i+1 if the result is standard."""
    swap = {i: i + 1, i + 1: i}
    u = tuple(tuple(swap.get(v, v) for v in row) for row in t)
    return u if is_standard(u) else t


def evacuation(t):
    """Remove the corner box, slide the hole out, record negated values."""
    n = sum(map(len, t))
    grid = [list(r) for r in t]
    out = [[None] * len(r) for r in t]
    for _ in range(n):
        m = grid[0][0]
        i, j = 0, 0
        while True:
            right = grid[i][j + 1] if j + 1 < len(grid[i]) else None
            down = grid[i + 1][j] if i + 1 < len(grid) and j < len(grid[i + 1]) else None
            if right is None and down is None:
                break
            if down is None or (right is not None and right < down):
                grid[i][j] = right
                j += 1
            else:
                grid[i][j] = down
                i += 1
        del grid[i][j]
        out[i][j] = n + 1 - m
        while grid and not grid[-1]:
            grid.pop()
    return tuple(tuple(r) for r in out)


def prefix_evacuation(t, k):
    """Evacuate the subtableau holding 1..k, leave the rest in place."""
    sub = tuple(tuple(v for v in row if v <= k) for row in t)
    sub = tuple(r for r in sub if r)
    ev = evacuation(sub) if sub else ()
    out = []
    for i, row in enumerate(t):
        out.append(tuple(ev[i][j] if v <= k else v for j, v in enumerate(row)))
    return tuple(out)


def hook_count(shape):
    from math import factorial
    n = sum(shape)
    conj = transpose_shape(shape)
    prod = 1
    for i, r in enumerate(shape):
        for j in range(r):
            prod *= (r - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // prod


def orbits_bfs(spaces, n):
    """Orbits of the diagonal t_2..t_{n-1} action on a product of SYT sets.

    Returns a list of orbits (each a set of tuples), sorted by their smallest
    member in the order of ``spaces``.
    """
    from itertools import product
    order = {x: k for k, x in enumerate(product(*spaces))}
    seen = set()
    orbits = []
    for start in order:
        if start in seen:
            continue
        orb = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for i in range(2, n):
                y = tuple(bk(t, i) for t in x)
                if y not in orb:
                    orb.add(y)
                    queue.append(y)
        seen |= orb
        orbits.append(orb)
    return orbits


def perm_sign(images):
    seen = [False] * len(images)
    sign = 1
    for s in range(len(images)):
        if seen[s]:
            continue
        length = 0
        k = s
        while not seen[k]:
            seen[k] = True
            k = images[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _slide_in(cells, hole):
    """Forward slide of a skew filling (dict) into the inner hole; returns vacated cell."""
    r, c = hole
    while True:
        right, down = cells.get((r, c + 1)), cells.get((r + 1, c))
        if right is None and down is None:
            return (r, c)
        if down is None or (right is not None and right < down):
            cells[(r, c)] = cells.pop((r, c + 1))
            c += 1
        else:
            cells[(r, c)] = cells.pop((r + 1, c))
            r += 1


def _slide_out(cells, hole):
    """Reverse slide into the outer hole; returns the inner cell that is freed."""
    r, c = hole
    while True:
        left, up = cells.get((r, c - 1)), cells.get((r - 1, c))
        if left is None and up is None:
            return (r, c)
        if up is None or (left is not None and left > up):
            cells[(r, c)] = cells.pop((r, c - 1))
            c -= 1
        else:
            cells[(r, c)] = cells.pop((r - 1, c))
            r -= 1


def skew_reversal(t, i, j):
    """Schutzenberger involution of the skew subtableau holding i..j:
    rectify by jeu de taquin, evacuate, and undo the slides."""
    cells = {(r, c): v for r, row in enumerate(t) for c, v in enumerate(row) if i <= v <= j}
    inner = {(r, c) for r, row in enumerate(t) for c, v in enumerate(row) if v < i}
    vacated = []
    while inner:
        # an inner corner: no inner cell to its right or below
        hole = max(inner)
        while (hole[0], hole[1] + 1) in inner or (hole[0] + 1, hole[1]) in inner:
            hole = (hole[0], hole[1] + 1) if (hole[0], hole[1] + 1) in inner else (hole[0] + 1, hole[1])
        inner.remove(hole)
        vacated.append(_slide_in(cells, hole))
    nrows = 1 + max(r for r, _ in cells)
    straight = tuple(tuple(cells[(r, c)] - i + 1 for c in range(sum(1 for (a, _) in cells if a == r)))
                     for r in range(nrows))
    ev = evacuation(straight)
    cells = {(r, c): v + i - 1 for r, row in enumerate(ev) for c, v in enumerate(row)}
    for hole in reversed(vacated):
        _slide_out(cells, hole)
    return tuple(tuple(cells.get((r, c), v) for c, v in enumerate(row)) for r, row in enumerate(t))
