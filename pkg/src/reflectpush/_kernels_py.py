"""Pure-Python versions of the exhaustive oracle loops.

``nested_stack_maxima`` walks every chain ``p_0 >= p_1 >= ... >= p_{L-1}``
of 2D profiles (one per layer of a 3D box) and records, for every total
size, the maximum weight and how many chains attain it. Profiles are given
by index: ``sizes[j]`` is the cell count of profile ``j``,
``layer_weights[k * P + j]`` its weight on layer ``k``, and
``child_idx[child_ptr[i]:child_ptr[i + 1]]`` the profiles contained in ``i``
(including ``i``).

``edge_subset_pair_maxima`` walks all edge subsets of ``K_n`` in Gray-code
order and records the maximum number of adjacent edge pairs per edge count.
"""

BACKEND = "python"


def nested_stack_maxima(sizes, layer_weights, child_ptr, child_idx, layers, max_size):
    n_prof = len(sizes)
    best = [None] * (max_size + 1)
    count = [0] * (max_size + 1)

    def walk(depth, parent, w, s):
        if depth == 0:
            candidates = range(n_prof)
        else:
            candidates = child_idx[child_ptr[parent]:child_ptr[parent + 1]]
        row = depth * n_prof
        last = depth == layers - 1
        for j in candidates:
            w2 = w + layer_weights[row + j]
            s2 = s + sizes[j]
            if last:
                b = best[s2]
                if b is None or w2 > b:
                    best[s2] = w2
                    count[s2] = 1
                elif w2 == b:
                    count[s2] += 1
            else:
                walk(depth + 1, j, w2, s2)

    walk(0, -1, 0, 0)
    return best, count


def edge_subset_pair_maxima(n):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    n_edges = len(edges)
    deg = [0] * n
    best = [-1] * (n_edges + 1)
    count = [0] * (n_edges + 1)
    best[0], count[0] = 0, 1
    mask = pairs = m = 0
    for i in range(1, 1 << n_edges):
        bit = (i & -i).bit_length() - 1
        u, v = edges[bit]
        if mask >> bit & 1:
            deg[u] -= 1
            deg[v] -= 1
            pairs -= deg[u] + deg[v]
            m -= 1
        else:
            pairs += deg[u] + deg[v]
            deg[u] += 1
            deg[v] += 1
            m += 1
        mask ^= 1 << bit
        if pairs > best[m]:
            best[m], count[m] = pairs, 1
        elif pairs == best[m]:
            count[m] += 1
    return best, count
