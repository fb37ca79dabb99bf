"""Pure-Python automata kernels.

Letters are integer indices ``0..k-1``.  Dense transition tables store the
target of state ``s`` on letter ``a`` at ``delta[s * k + a]``, or ``-1``
when undefined.  The compiled module ``_kernels`` exposes the same
signatures.
"""

from collections import deque

INCLUSION = 0
INTERSECTION = 1


def refine_partition(n, k, delta, final):
    """Moore refinement.  Returns a class id per state.

    Class ids are assigned in order of first appearance, so the result is
    deterministic for a given input.
    """
    rows = [delta[s * k:(s + 1) * k] for s in range(n)]
    # a trailing -1 makes cls[-1] map undefined targets to -1
    cls = [1 if final[s] else 0 for s in range(n)] + [-1]
    count = len(set(cls)) - 1
    while True:
        table = {}
        new = []
        get = cls.__getitem__
        for s in range(n):
            key = (cls[s], *map(get, rows[s]))
            c = table.get(key)
            if c is None:
                c = table[key] = len(table)
            new.append(c)
        new.append(-1)
        cls = new
        if len(table) == count:
            return cls[:n]
        count = len(table)


def product_search(mode, k, delta_a, final_a, init_a, delta_b, final_b, init_b):
    """Search the product of two partial DFAs for a witness pair.

    INCLUSION: a reachable pair where ``a`` accepts and ``b`` does not (a
    missing ``b`` transition leads to a rejecting sink).  INTERSECTION: a
    reachable pair where both accept.  Returns True when a witness exists.
    """
    nb1 = len(final_b) + 1
    start = init_a * nb1 + init_b + 1
    seen = {start}
    queue = deque([start])
    while queue:
        code = queue.popleft()
        p, q = divmod(code, nb1)
        q -= 1
        if final_a[p]:
            if mode == INCLUSION:
                if q < 0 or not final_b[q]:
                    return True
            elif q >= 0 and final_b[q]:
                return True
        pa = p * k
        qb = q * k
        for a in range(k):
            p2 = delta_a[pa + a]
            if p2 < 0:
                continue
            q2 = delta_b[qb + a] if q >= 0 else -1
            if q2 < 0 and mode == INTERSECTION:
                continue
            nxt = p2 * nb1 + q2 + 1
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def _closures(n, eps):
    out = []
    for q in range(n):
        mask = 1 << q
        stack = [q]
        while stack:
            x = stack.pop()
            for y in eps[x]:
                if not mask >> y & 1:
                    mask |= 1 << y
                    stack.append(y)
        out.append(mask)
    return out


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def det_min(n, k, initial, final, edges):
    """Minimal trimmed DFA of an NFA, numbered in breadth-first letter order.

    ``edges`` is a flat sequence of ``src, letter, dst`` triples, letter
    ``-1`` meaning ε.  Returns ``(m, finals, trans)`` where ``trans`` is a
    flat list of ``src, letter, dst`` triples sorted by source then letter;
    ``m == 0`` means the language is empty.
    """
    eps = [[] for _ in range(n)]
    plain = []
    for e in range(0, len(edges), 3):
        s, a, d = edges[e], edges[e + 1], edges[e + 2]
        if a < 0:
            eps[s].append(d)
        else:
            plain.append((s, a, d))
    clos = _closures(n, eps)
    moves = [dict() for _ in range(n)]
    for s, a, d in plain:
        moves[s][a] = moves[s].get(a, 0) | clos[d]
    fmask = 0
    for q in range(n):
        if final[q]:
            fmask |= 1 << q
    # subset construction
    start = clos[initial]
    index = {start: 0}
    order = [start]
    delta = []
    i = 0
    while i < len(order):
        row = {}
        for q in _bits(order[i]):
            for a, tgt in moves[q].items():
                row[a] = row.get(a, 0) | tgt
        i += 1
        line = [-1] * k
        for a, tgt in row.items():
            j = index.get(tgt)
            if j is None:
                j = len(order)
                index[tgt] = j
                order.append(tgt)
            line[a] = j
        delta.append(line)
    m = len(order)
    fin = [1 if mask & fmask else 0 for mask in order]
    # trim states that cannot reach a final state
    rev = [[] for _ in range(m)]
    for q in range(m):
        for d in delta[q]:
            if d >= 0:
                rev[d].append(q)
    live = [False] * m
    stack = [q for q in range(m) if fin[q]]
    for q in stack:
        live[q] = True
    while stack:
        for y in rev[stack.pop()]:
            if not live[y]:
                live[y] = True
                stack.append(y)
    if not live[0]:
        return 0, [], []
    keep = [q for q in range(m) if live[q]]
    local = {q: i for i, q in enumerate(keep)}
    table = [-1] * (len(keep) * k)
    kfin = [fin[q] for q in keep]
    for i, q in enumerate(keep):
        for a, d in enumerate(delta[q]):
            if d >= 0 and live[d]:
                table[i * k + a] = local[d]
    cls = refine_partition(len(keep), k, table, kfin)
    rep = {}
    for i, c in enumerate(cls):
        rep.setdefault(c, i)
    # breadth-first renumbering
    number = {cls[0]: 0}
    queue = [cls[0]]
    finals = []
    trans = []
    j = 0
    while j < len(queue):
        r = rep[queue[j]]
        if kfin[r]:
            finals.append(j)
        for a in range(k):
            t = table[r * k + a]
            if t < 0:
                continue
            num = number.get(cls[t])
            if num is None:
                num = len(queue)
                number[cls[t]] = num
                queue.append(cls[t])
            trans.extend((j, a, num))
        j += 1
    return len(queue), finals, trans
