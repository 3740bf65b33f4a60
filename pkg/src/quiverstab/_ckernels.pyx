# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contract and order as ``_pykernels``."""
import numpy as np

from libc.stdint cimport int64_t, uint64_t


def _masks_to_words(masks, int nwords):
    out = np.zeros((len(masks), nwords), dtype=np.uint64)
    cdef Py_ssize_t i, w
    full = (1 << 64) - 1
    for i, m in enumerate(masks):
        for w in range(nwords):
            out[i, w] = (m >> (64 * w)) & full
    return out


def _prepare(members, arrows):
    n = len(members)
    biggest = 1
    for ms in members:
        for m in ms:
            biggest = max(biggest, m.bit_length())
    for _, _, images in arrows:
        for m in images:
            biggest = max(biggest, m.bit_length())
    nwords = (biggest + 63) // 64
    counts = np.array([len(ms) for ms in members], dtype=np.int64)
    moff = np.zeros(n, dtype=np.int64)
    flat = []
    for v in range(n):
        moff[v] = len(flat)
        flat.extend(members[v])
    mem = _masks_to_words(flat, nwords) if flat else np.zeros((1, nwords), dtype=np.uint64)
    na = len(arrows)
    src = np.zeros(max(na, 1), dtype=np.int64)
    tgt = np.zeros(max(na, 1), dtype=np.int64)
    ioff = np.zeros(max(na, 1), dtype=np.int64)
    iflat = []
    # arrows grouped by the vertex at which both endpoints become assigned
    order = sorted(range(na), key=lambda k: max(arrows[k][0], arrows[k][1]))
    coff = np.zeros(n + 1, dtype=np.int64)
    for pos, k in enumerate(order):
        s, t, images = arrows[k]
        src[pos] = s
        tgt[pos] = t
        ioff[pos] = len(iflat)
        iflat.extend(images)
        coff[max(s, t) + 1] += 1
    for v in range(n):
        coff[v + 1] += coff[v]
    img = _masks_to_words(iflat, nwords) if iflat else np.zeros((1, nwords), dtype=np.uint64)
    return nwords, counts, moff, mem, src, tgt, ioff, coff, img


def closed_tuples(members, arrows):
    if len(members) == 0:
        return [()]
    nwords, counts, moff, mem, src, tgt, ioff, coff, img = _prepare(members, arrows)
    choice_np = np.full(len(members), -1, dtype=np.int64)
    return _dfs(len(members), nwords, counts, moff, mem, src, tgt, ioff, coff, img, choice_np)


cdef list _dfs(Py_ssize_t n, int nwords, int64_t[:] counts, int64_t[:] moff,
               uint64_t[:, :] mem, int64_t[:] src, int64_t[:] tgt, int64_t[:] ioff,
               int64_t[:] coff, uint64_t[:, :] img, choice_np):
    cdef int64_t[:] choice = choice_np
    cdef Py_ssize_t v = 0, a, w
    cdef bint ok
    cdef list out = []
    while v >= 0:
        choice[v] += 1
        if choice[v] >= counts[v]:
            choice[v] = -1
            v -= 1
            continue
        ok = True
        for a in range(coff[v], coff[v + 1]):
            for w in range(nwords):
                if img[ioff[a] + choice[src[a]], w] & ~mem[moff[tgt[a]] + choice[tgt[a]], w]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        if v + 1 == n:
            out.append(tuple(choice_np.tolist()))
        else:
            v += 1
    return out


cdef int _rank_mod_p(int64_t* a, int rows, int cols, int64_t p) nogil:
    cdef int r = 0, c, i, j, piv
    cdef int64_t inv, f, t, base, e, x
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i * cols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                t = a[r * cols + j]
                a[r * cols + j] = a[piv * cols + j]
                a[piv * cols + j] = t
        # modular inverse by exponentiation (p prime)
        inv = 1
        base = a[r * cols + c]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for i in range(r + 1, rows):
            f = a[i * cols + c] * inv % p
            if f != 0:
                for j in range(c, cols):
                    x = (a[i * cols + j] - f * a[r * cols + j]) % p
                    if x < 0:
                        x += p
                    a[i * cols + j] = x
        r += 1
    return r


def full_rank_search(p, basis, blocks, count=False):
    cdef Py_ssize_t k = len(basis)
    cdef Py_ssize_t length
    if k:
        length = len(basis[0])
    else:
        length = sum(r * c for _, r, c in blocks)
    basis_np = np.array(basis, dtype=np.int64).reshape(k, length) if k else np.zeros((0, max(length, 1)), dtype=np.int64)
    blocks_np = np.array(blocks, dtype=np.int64).reshape(len(blocks), 3) if blocks else np.zeros((0, 3), dtype=np.int64)
    cdef int64_t[:, :] B = basis_np
    cdef int64_t[:, :] blk = blocks_np
    cdef Py_ssize_t nb = blocks_np.shape[0]
    cdef int64_t pp = p
    coeff_np = np.zeros(max(k, 1), dtype=np.int64)
    vec_np = np.zeros(max(length, 1), dtype=np.int64)
    maxblk = max([r * c for _, r, c in blocks] + [1])
    work_np = np.zeros(maxblk, dtype=np.int64)
    cdef int64_t[:] coeff = coeff_np
    cdef int64_t[:] vec = vec_np
    cdef int64_t[:] work = work_np
    cdef Py_ssize_t i, j, b, q
    cdef int64_t off, rows, cols, hits = 0
    cdef bint ok, done = False
    while not done:
        for j in range(length):
            vec[j] = 0
        for i in range(k):
            if coeff[i]:
                for j in range(length):
                    vec[j] = (vec[j] + coeff[i] * B[i, j]) % pp
        ok = True
        for b in range(nb):
            off = blk[b, 0]
            rows = blk[b, 1]
            cols = blk[b, 2]
            if rows == 0:
                continue
            if cols < rows:
                ok = False
                break
            for q in range(rows * cols):
                work[q] = vec[off + q]
            if _rank_mod_p(&work[0], <int>rows, <int>cols, pp) != rows:
                ok = False
                break
        if ok:
            if not count:
                return tuple(int(x) for x in coeff_np[:k])
            hits += 1
        # odometer, last coefficient fastest (itertools.product order)
        i = k - 1
        while i >= 0:
            coeff[i] += 1
            if coeff[i] < pp:
                break
            coeff[i] = 0
            i -= 1
        if i < 0:
            done = True
    return hits if count else None
