"""Pure-Python search kernels (fallback for the compiled ``_ckernels``).

Both modules expose the same two functions with identical results and
identical enumeration order.

Subspace sets are bitmasks: bit ``c`` is set when the vector with code ``c``
(base-p digits, least significant first) lies in the subspace.
"""
from itertools import product


def closed_tuples(members, arrows):
    """All tuples of per-vertex subspaces closed under every arrow.

    members : list over vertices of lists of member masks
    arrows  : list of (src, tgt, image_masks) where image_masks[s] is the mask
              of the image of subspace s (at src) under the arrow map

    Tuples are produced in lexicographic order of subspace indices.
    """
    n = len(members)
    if n == 0:
        return [()]
    checks = [[] for _ in range(n)]
    for src, tgt, images in arrows:
        checks[max(src, tgt)].append((src, tgt, images))
    out = []
    choice = [0] * n

    def dfs(v):
        for s, mask in enumerate(members[v]):
            choice[v] = s
            ok = True
            for src, tgt, images in checks[v]:
                img = images[choice[src]]
                if img & ~members[tgt][choice[tgt]]:
                    ok = False
                    break
            if not ok:
                continue
            if v + 1 == n:
                out.append(tuple(choice))
            else:
                dfs(v + 1)

    dfs(0)
    return out


def _rank_mod_p(rows, p):
    a = [list(r) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        for i in range(r + 1, nrows):
            f = a[i][c] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


def full_rank_search(p, basis, blocks, count=False):
    """Search F_p-combinations of ``basis`` whose blocks all have full row rank.

    basis  : list of flat coefficient vectors (ints mod p), all the same length
    blocks : list of (offset, rows, cols); block entries are row-major
    count  : if False return the first qualifying coefficient tuple (or None);
             if True return how many combinations qualify.

    Combinations are visited in ``itertools.product(range(p), repeat=k)`` order.
    """
    k = len(basis)
    length = len(basis[0]) if basis else sum(r * c for _, r, c in blocks)
    hits = 0
    for coeffs in product(range(p), repeat=k):
        vec = [0] * length
        for c, b in zip(coeffs, basis):
            if c:
                for j, x in enumerate(b):
                    if x:
                        vec[j] = (vec[j] + c * x) % p
        ok = True
        for off, rows, cols in blocks:
            if rows == 0:
                continue
            if cols < rows:
                ok = False
                break
            mat = [vec[off + r * cols: off + (r + 1) * cols] for r in range(rows)]
            if _rank_mod_p(mat, p) != rows:
                ok = False
                break
        if ok:
            if not count:
                return coeffs
            hits += 1
    return hits if count else None
