"""Pure-Python kernels. ``_ckernel.pyx`` mirrors these line for line."""

ACCEPT = 1
REJECT = 0
INCONCLUSIVE = 2


def erase_pass(codes, e):
    """One left-to-right backspace pass of eraser ``e`` over integer codes.

    ``codes[i]`` is the eraser index at position i, or -1 for any other
    symbol.  Returns ``(kept, pairs, undefined_at)`` with 0-based positions;
    ``pairs`` lists ``(eraser_pos, erased_pos)`` in evaluation order and
    ``undefined_at`` is -1 when the pass is defined.
    """
    kept = []
    pairs = []
    for i, c in enumerate(codes):
        if c == e:
            if not kept:
                return kept, pairs, i
            pairs.append((i, kept.pop()))
        else:
            kept.append(i)
    return kept, pairs, -1


def search(delta, finals, q0, z0, word, max_depth, max_visited, rng=None, want_path=False):
    """Depth-first search of the configuration graph.

    ``delta`` maps ``(state, input_or_-1, top)`` to a tuple of
    ``(state, push)`` where ``push`` is a bytes string, top first.
    Configurations are ``(state, pos, stack)`` with ``stack`` bytes, top
    first.  Returns ``(status, path)``.
    """
    n = len(word)
    start = (q0, 0, bytes((z0,)))
    visited = {start}
    parent = {start: None} if want_path else None
    todo = [start]
    truncated = False
    get = delta.get
    while todo:
        conf = todo.pop()
        q, pos, stack = conf
        if pos == n and q in finals:
            path = None
            if want_path:
                path = []
                while conf is not None:
                    path.append(conf)
                    conf = parent[conf]
                path.reverse()
            return ACCEPT, path
        if not stack:
            continue
        top = stack[0]
        rest = stack[1:]
        succ = []
        moves = get((q, -1, top))
        if moves:
            for p, push in moves:
                succ.append((p, pos, push + rest))
        if pos < n:
            moves = get((q, word[pos], top))
            if moves:
                for p, push in moves:
                    succ.append((p, pos + 1, push + rest))
        if rng is not None:
            rng.shuffle(succ)
        for nxt in succ:
            if nxt in visited:
                continue
            if len(nxt[2]) > max_depth:
                truncated = True
                continue
            if len(visited) >= max_visited:
                return INCONCLUSIVE, None
            visited.add(nxt)
            if want_path:
                parent[nxt] = conf
            todo.append(nxt)
    return (INCONCLUSIVE if truncated else REJECT), None
