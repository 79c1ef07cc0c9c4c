# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_pykernel.py``."""

DEF ACCEPT = 1
DEF REJECT = 0
DEF INCONCLUSIVE = 2


def erase_pass(codes, long e):
    cdef Py_ssize_t i, n = len(codes)
    cdef long c
    cdef list kept = []
    cdef list pairs = []
    for i in range(n):
        c = codes[i]
        if c == e:
            if not kept:
                return kept, pairs, i
            pairs.append((i, kept.pop()))
        else:
            kept.append(i)
    return kept, pairs, -1


def search(dict delta, finals, long q0, long z0, tuple word, Py_ssize_t max_depth,
           Py_ssize_t max_visited, rng=None, bint want_path=False):
    cdef Py_ssize_t n = len(word)
    cdef Py_ssize_t pos
    cdef long q, p, top
    cdef bytes stack, rest, push
    cdef tuple conf, nxt, moves
    cdef list succ
    cdef bint truncated = False
    start = (q0, 0, bytes((z0,)))
    cdef set visited = {start}
    cdef dict parent = {start: None} if want_path else None
    cdef list todo = [start]
    while todo:
        conf = todo.pop()
        q = conf[0]
        pos = conf[1]
        stack = conf[2]
        if pos == n and q in finals:
            path = None
            if want_path:
                path = []
                while conf is not None:
                    path.append(conf)
                    conf = parent[conf]
                path.reverse()
            return ACCEPT, path
        if len(stack) == 0:
            continue
        top = stack[0]
        rest = stack[1:]
        succ = []
        moves = delta.get((q, -1, top))
        if moves is not None:
            for p, push in moves:
                succ.append((p, pos, push + rest))
        if pos < n:
            moves = delta.get((q, word[pos], top))
            if moves is not None:
                for p, push in moves:
                    succ.append((p, pos + 1, push + rest))
        if rng is not None:
            rng.shuffle(succ)
        for nxt in succ:
            if nxt in visited:
                continue
            if len(<bytes>nxt[2]) > max_depth:
                truncated = True
                continue
            if len(visited) >= max_visited:
                return INCONCLUSIVE, None
            visited.add(nxt)
            if want_path:
                parent[nxt] = conf
            todo.append(nxt)
    return (INCONCLUSIVE if truncated else REJECT), None
