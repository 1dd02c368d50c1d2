"""Pure-Python BFS expansion kernel.

States are byte strings: position i holds the token (person or color class)
occupying cell i. A move swaps the occupants of one location-graph edge when
the token adjacency matrix allows it; equal tokens are skipped because the
swap would not change the state.

The compiled kernel in _core.pyx implements exactly the same contract; the
two must stay move-for-move identical so search results never depend on
which one was importable.
"""

KERNEL_NAME = "pure"


def expand_level(frontier, visited, eu, ev, adj, ntok):
    """Expand one BFS level recording parent pointers.

    visited maps state -> (parent_state, edge_index) with roots mapped to
    None. Returns the next frontier in deterministic discovery order.
    """
    nxt = []
    m = len(eu)
    for s in frontier:
        buf = bytearray(s)
        for k in range(m):
            u = eu[k]
            v = ev[k]
            a = buf[u]
            b = buf[v]
            if a == b or not adj[a * ntok + b]:
                continue
            buf[u] = b
            buf[v] = a
            child = bytes(buf)
            buf[u] = a
            buf[v] = b
            if child not in visited:
                visited[child] = (s, k)
                nxt.append(child)
    return nxt


def expand_level_set(frontier, visited, eu, ev, adj, ntok):
    """Same sweep as expand_level but visited is a plain set (no parents)."""
    nxt = []
    m = len(eu)
    for s in frontier:
        buf = bytearray(s)
        for k in range(m):
            u = eu[k]
            v = ev[k]
            a = buf[u]
            b = buf[v]
            if a == b or not adj[a * ntok + b]:
                continue
            buf[u] = b
            buf[v] = a
            child = bytes(buf)
            buf[u] = a
            buf[v] = b
            if child not in visited:
                visited.add(child)
                nxt.append(child)
    return nxt


def expand_level_obj(frontier, visited, eu, ev, adj, ntok):
    """expand_level for wide states stored as int tuples (no 256-cell cap)."""
    nxt = []
    m = len(eu)
    for s in frontier:
        buf = list(s)
        for k in range(m):
            u = eu[k]
            v = ev[k]
            a = buf[u]
            b = buf[v]
            if a == b or not adj[a * ntok + b]:
                continue
            buf[u] = b
            buf[v] = a
            child = tuple(buf)
            buf[u] = a
            buf[v] = b
            if child not in visited:
                visited[child] = (s, k)
                nxt.append(child)
    return nxt


def expand_level_set_obj(frontier, visited, eu, ev, adj, ntok):
    """expand_level_set for wide states stored as int tuples."""
    nxt = []
    m = len(eu)
    for s in frontier:
        buf = list(s)
        for k in range(m):
            u = eu[k]
            v = ev[k]
            a = buf[u]
            b = buf[v]
            if a == b or not adj[a * ntok + b]:
                continue
            buf[u] = b
            buf[v] = a
            child = tuple(buf)
            buf[u] = a
            buf[v] = b
            if child not in visited:
                visited.add(child)
                nxt.append(child)
    return nxt
