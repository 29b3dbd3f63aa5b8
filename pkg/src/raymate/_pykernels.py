"""Pure-Python kernels; same contracts as the compiled ``_ckernels`` module.

Symbols are small ints, ``STAR`` marks an exact hit of a partition point.
"""

STAR = -1


def itinerary_codes(nums, r, d, ref_num, ref_den):
    """Itineraries of the angles ``a / (d**r - 1)`` for ``a`` in ``nums``.

    The partition points are ``(ref + j) / d`` with ``ref = ref_num / ref_den``;
    the arc ending at ``(ref + j) / d`` carries label ``j``.
    """
    m = d**r - 1
    den = m * ref_den
    shift = ref_num * m
    out = []
    for a in nums:
        row = []
        x = a
        for _ in range(r):
            num = d * x * ref_den - shift
            if num % den == 0:
                row.append(STAR)
            else:
                row.append((num // den + 1) % d)
            x = (x * d) % m
        out.append(row)
    return out


def star_matches(codes_lo, codes_hi, rows):
    """Pairs ``(i, j)``, ``i`` in ``rows``, wildcard-compatible under both codings."""
    n = len(codes_lo)
    out = []
    for i in rows:
        li, hi_ = codes_lo[i], codes_hi[i]
        for j in range(n):
            if j == i:
                continue
            lj, hj = codes_lo[j], codes_hi[j]
            ok = True
            for a, b in zip(li, lj):
                if a != b and a != STAR and b != STAR:
                    ok = False
                    break
            if ok:
                for a, b in zip(hi_, hj):
                    if a != b and a != STAR and b != STAR:
                        ok = False
                        break
            if ok:
                out.append((i, j))
    return out


def components(n_nodes, us, vs):
    """Connected components of a multigraph.

    Returns ``(labels, node_counts, edge_counts)`` with labels numbered in
    order of first appearance.
    """
    parent = list(range(n_nodes))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in zip(us, vs):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    relabel = {}
    labels = []
    for x in range(n_nodes):
        labels.append(relabel.setdefault(find(x), len(relabel)))
    node_counts = [0] * len(relabel)
    edge_counts = [0] * len(relabel)
    for lab in labels:
        node_counts[lab] += 1
    for u in us:
        edge_counts[labels[u]] += 1
    return labels, node_counts, edge_counts
