# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled automata kernels.  Same contract as ``_kernels_py``.

Inputs are copied into C buffers up front, so any integer sequence works.
"""

from libc.stdlib cimport malloc, calloc, realloc, free
from libc.string cimport memcmp, memcpy, memset
from libc.stdint cimport uint64_t
from cpython.exc cimport PyErr_NoMemory

INCLUSION = 0
INTERSECTION = 1


cdef int *_copy_ints(obj, Py_ssize_t size) except NULL:
    cdef int *buf = <int *>malloc((size if size > 0 else 1) * sizeof(int))
    cdef Py_ssize_t i
    if buf == NULL:
        PyErr_NoMemory()
        return NULL
    for i in range(size):
        buf[i] = obj[i]
    return buf


cdef void *_alloc(Py_ssize_t nbytes) except NULL:
    cdef void *p = malloc(nbytes if nbytes > 0 else 1)
    if p == NULL:
        PyErr_NoMemory()
    return p


cdef inline uint64_t _hash_ints(const int *row, int w) noexcept nogil:
    cdef uint64_t h = 1469598103934665603ULL
    cdef int i
    for i in range(w):
        h = (h ^ <unsigned int>row[i]) * 1099511628211ULL
    return h


cdef inline uint64_t _hash_words(const uint64_t *row, int w) noexcept nogil:
    cdef uint64_t h = 1469598103934665603ULL
    cdef int i
    for i in range(w):
        h = (h ^ row[i]) * 1099511628211ULL
        h ^= h >> 29
    return h


cdef int _refine(int n, int k, const int *d, const int *f, int *cls) except -1:
    """Moore refinement into ``cls``; ids in order of first appearance."""
    cdef int w = k + 1
    cdef int cap = 1
    cdef int s, a, t, count, classes, h
    cdef bint has0 = False, has1 = False
    cdef int *sig = NULL
    cdef int *slot = NULL
    while cap < 2 * n:
        cap <<= 1
    try:
        sig = <int *>_alloc(<Py_ssize_t>n * w * sizeof(int))
        # first state of each class, -1 when free
        slot = <int *>_alloc(cap * sizeof(int))
        for s in range(n):
            cls[s] = 1 if f[s] else 0
            if f[s]:
                has1 = True
            else:
                has0 = True
        count = (1 if has0 else 0) + (1 if has1 else 0)
        while True:
            for s in range(n):
                sig[s * w] = cls[s]
                for a in range(k):
                    t = d[s * k + a]
                    sig[s * w + a + 1] = cls[t] if t >= 0 else -1
            memset(slot, 0xff, cap * sizeof(int))
            classes = 0
            for s in range(n):
                h = <int>(_hash_ints(&sig[s * w], w) & <uint64_t>(cap - 1))
                while slot[h] >= 0 and memcmp(&sig[slot[h] * w], &sig[s * w], w * sizeof(int)) != 0:
                    h = (h + 1) & (cap - 1)
                if slot[h] < 0:
                    slot[h] = s
                    cls[s] = classes
                    classes += 1
                else:
                    cls[s] = cls[slot[h]]
            if classes == count:
                return 0
            count = classes
    finally:
        free(sig)
        free(slot)


def refine_partition(int n, int k, delta, final):
    cdef int *d = _copy_ints(delta, <Py_ssize_t>n * k)
    cdef int *f = NULL
    cdef int *cls = NULL
    cdef int s
    try:
        f = _copy_ints(final, n)
        cls = <int *>_alloc(n * sizeof(int))
        _refine(n, k, d, f, cls)
        return [cls[s] for s in range(n)]
    finally:
        free(d)
        free(f)
        free(cls)


cdef class _Subsets:
    """Growable store of W-word bitsets with a hash index."""

    cdef int w, count, cap, slots
    cdef uint64_t *sets
    cdef int *slot

    def __cinit__(self, int w):
        self.w = w
        self.count = 0
        self.cap = 16
        self.slots = 32
        self.sets = <uint64_t *>malloc(self.cap * w * sizeof(uint64_t))
        self.slot = <int *>malloc(self.slots * sizeof(int))
        if self.sets == NULL or self.slot == NULL:
            raise MemoryError()
        memset(self.slot, 0xff, self.slots * sizeof(int))

    def __dealloc__(self):
        free(self.sets)
        free(self.slot)

    cdef int _place(self, int i) noexcept:
        cdef int h = <int>(_hash_words(&self.sets[<Py_ssize_t>i * self.w], self.w) & <uint64_t>(self.slots - 1))
        while self.slot[h] >= 0:
            h = (h + 1) & (self.slots - 1)
        self.slot[h] = i
        return h

    cdef int find_or_add(self, const uint64_t *bits) except -2:
        """Index of ``bits``, adding it when new."""
        cdef int w = self.w
        cdef int h = <int>(_hash_words(bits, w) & <uint64_t>(self.slots - 1))
        cdef int j, i
        cdef void *p
        while self.slot[h] >= 0:
            j = self.slot[h]
            if memcmp(&self.sets[<Py_ssize_t>j * w], bits, w * sizeof(uint64_t)) == 0:
                return j
            h = (h + 1) & (self.slots - 1)
        if self.count == self.cap:
            p = realloc(self.sets, <Py_ssize_t>self.cap * 2 * w * sizeof(uint64_t))
            if p == NULL:
                raise MemoryError()
            self.sets = <uint64_t *>p
            self.cap *= 2
        j = self.count
        memcpy(&self.sets[<Py_ssize_t>j * w], bits, w * sizeof(uint64_t))
        self.count += 1
        if 2 * self.count > self.slots:
            p = realloc(self.slot, self.slots * 2 * sizeof(int))
            if p == NULL:
                raise MemoryError()
            self.slot = <int *>p
            self.slots *= 2
            memset(self.slot, 0xff, self.slots * sizeof(int))
            for i in range(self.count):
                self._place(i)
        else:
            self.slot[h] = j
        return j


def det_min(int n, int k, int initial, final, edges):
    cdef Py_ssize_t ne = len(edges) // 3
    cdef int w = (n + 63) // 64 if n > 0 else 1
    cdef int *e = _copy_ints(edges, ne * 3)
    cdef int *f = NULL
    cdef int *est = NULL      # ε adjacency, CSR
    cdef int *eadj = NULL
    cdef int *pst = NULL      # letter adjacency, CSR
    cdef int *psym = NULL
    cdef int *pdst = NULL
    cdef int *fill = NULL
    cdef uint64_t *clos = NULL
    cdef uint64_t *fmask = NULL
    cdef uint64_t *cur = NULL
    cdef uint64_t *row = NULL
    cdef int *touched = NULL
    cdef char *marked = NULL
    cdef int *delta = NULL
    cdef int *stack = NULL
    cdef int *rst = NULL
    cdef int *radj = NULL
    cdef char *live = NULL
    cdef int *local = NULL
    cdef int *table = NULL
    cdef int *kfin = NULL
    cdef int *cls = NULL
    cdef int *rep = NULL
    cdef int *number = NULL
    cdef int *queue = NULL
    cdef int *fin = NULL
    cdef _Subsets subsets = _Subsets(w)
    cdef int dcap = 16
    cdef int i, j, q, a, d, x, y, t, c, top, ntouched, m, kk, num, head, tail, word
    cdef uint64_t bits, low
    cdef bint any_final
    cdef void *p
    try:
        f = _copy_ints(final, n)
        # adjacency lists
        est = <int *>calloc(n + 1, sizeof(int))
        pst = <int *>calloc(n + 1, sizeof(int))
        fill = <int *>_alloc((n + 1) * sizeof(int))
        eadj = <int *>_alloc(ne * sizeof(int))
        psym = <int *>_alloc(ne * sizeof(int))
        pdst = <int *>_alloc(ne * sizeof(int))
        if est == NULL or pst == NULL:
            raise MemoryError()
        for i in range(ne):
            if e[3 * i + 1] < 0:
                est[e[3 * i] + 1] += 1
            else:
                pst[e[3 * i] + 1] += 1
        for q in range(n):
            est[q + 1] += est[q]
            pst[q + 1] += pst[q]
        memcpy(fill, est, (n + 1) * sizeof(int))
        for i in range(ne):
            if e[3 * i + 1] < 0:
                eadj[fill[e[3 * i]]] = e[3 * i + 2]
                fill[e[3 * i]] += 1
        memcpy(fill, pst, (n + 1) * sizeof(int))
        for i in range(ne):
            if e[3 * i + 1] >= 0:
                psym[fill[e[3 * i]]] = e[3 * i + 1]
                pdst[fill[e[3 * i]]] = e[3 * i + 2]
                fill[e[3 * i]] += 1
        # ε-closures
        clos = <uint64_t *>calloc(<Py_ssize_t>n * w + 1, sizeof(uint64_t))
        stack = <int *>_alloc((n + 1) * sizeof(int))
        if clos == NULL:
            raise MemoryError()
        for q in range(n):
            clos[<Py_ssize_t>q * w + q // 64] |= (<uint64_t>1) << (q % 64)
            top = 0
            stack[top] = q
            top += 1
            while top > 0:
                top -= 1
                x = stack[top]
                for i in range(est[x], est[x + 1]):
                    y = eadj[i]
                    if not (clos[<Py_ssize_t>q * w + y // 64] >> (y % 64)) & 1:
                        clos[<Py_ssize_t>q * w + y // 64] |= (<uint64_t>1) << (y % 64)
                        stack[top] = y
                        top += 1
        fmask = <uint64_t *>calloc(w, sizeof(uint64_t))
        cur = <uint64_t *>_alloc(w * sizeof(uint64_t))
        row = <uint64_t *>_alloc(<Py_ssize_t>(k if k > 0 else 1) * w * sizeof(uint64_t))
        touched = <int *>_alloc((k if k > 0 else 1) * sizeof(int))
        marked = <char *>calloc(k if k > 0 else 1, 1)
        delta = <int *>_alloc(<Py_ssize_t>dcap * (k if k > 0 else 1) * sizeof(int))
        if fmask == NULL or marked == NULL:
            raise MemoryError()
        for q in range(n):
            if f[q]:
                fmask[q // 64] |= (<uint64_t>1) << (q % 64)
        # subset construction
        subsets.find_or_add(&clos[<Py_ssize_t>initial * w])
        i = 0
        while i < subsets.count:
            memcpy(cur, &subsets.sets[<Py_ssize_t>i * w], w * sizeof(uint64_t))
            ntouched = 0
            for word in range(w):
                bits = cur[word]
                while bits:
                    low = bits & (~bits + 1)
                    q = word * 64
                    while not (low >> (q - word * 64)) & 1:
                        q += 1
                    bits ^= low
                    for j in range(pst[q], pst[q + 1]):
                        a = psym[j]
                        if not marked[a]:
                            marked[a] = 1
                            touched[ntouched] = a
                            ntouched += 1
                            memset(&row[<Py_ssize_t>a * w], 0, w * sizeof(uint64_t))
                        d = pdst[j]
                        for x in range(w):
                            row[<Py_ssize_t>a * w + x] |= clos[<Py_ssize_t>d * w + x]
            if i == dcap:
                p = realloc(delta, <Py_ssize_t>dcap * 2 * k * sizeof(int))
                if p == NULL:
                    raise MemoryError()
                delta = <int *>p
                dcap *= 2
            for a in range(k):
                delta[<Py_ssize_t>i * k + a] = -1
            for j in range(ntouched):
                a = touched[j]
                marked[a] = 0
                delta[<Py_ssize_t>i * k + a] = subsets.find_or_add(&row[<Py_ssize_t>a * w])
            i += 1
        m = subsets.count
        fin = <int *>_alloc(m * sizeof(int))
        for i in range(m):
            any_final = False
            for x in range(w):
                if subsets.sets[<Py_ssize_t>i * w + x] & fmask[x]:
                    any_final = True
                    break
            fin[i] = 1 if any_final else 0
        # trim: keep states that reach a final state
        rst = <int *>calloc(m + 1, sizeof(int))
        radj = <int *>_alloc(<Py_ssize_t>m * (k if k > 0 else 1) * sizeof(int))
        live = <char *>calloc(m, 1)
        free(fill)
        fill = <int *>_alloc((m + 1) * sizeof(int))
        free(stack)
        stack = <int *>_alloc((m + 1) * sizeof(int))
        if rst == NULL or live == NULL:
            raise MemoryError()
        for i in range(m):
            for a in range(k):
                t = delta[<Py_ssize_t>i * k + a]
                if t >= 0:
                    rst[t + 1] += 1
        for i in range(m):
            rst[i + 1] += rst[i]
        memcpy(fill, rst, (m + 1) * sizeof(int))
        for i in range(m):
            for a in range(k):
                t = delta[<Py_ssize_t>i * k + a]
                if t >= 0:
                    radj[fill[t]] = i
                    fill[t] += 1
        top = 0
        for i in range(m):
            if fin[i]:
                live[i] = 1
                stack[top] = i
                top += 1
        while top > 0:
            top -= 1
            x = stack[top]
            for j in range(rst[x], rst[x + 1]):
                y = radj[j]
                if not live[y]:
                    live[y] = 1
                    stack[top] = y
                    top += 1
        if not live[0]:
            return 0, [], []
        local = <int *>_alloc(m * sizeof(int))
        kk = 0
        for i in range(m):
            if live[i]:
                local[i] = kk
                kk += 1
            else:
                local[i] = -1
        table = <int *>_alloc(<Py_ssize_t>kk * (k if k > 0 else 1) * sizeof(int))
        kfin = <int *>_alloc(kk * sizeof(int))
        for i in range(m):
            if not live[i]:
                continue
            j = local[i]
            kfin[j] = fin[i]
            for a in range(k):
                t = delta[<Py_ssize_t>i * k + a]
                table[<Py_ssize_t>j * k + a] = local[t] if t >= 0 and live[t] else -1
        cls = <int *>_alloc(kk * sizeof(int))
        _refine(kk, k, table, kfin, cls)
        rep = <int *>_alloc(kk * sizeof(int))
        number = <int *>_alloc(kk * sizeof(int))
        queue = <int *>_alloc(kk * sizeof(int))
        for i in range(kk):
            rep[i] = -1
            number[i] = -1
        for i in range(kk):
            if rep[cls[i]] < 0:
                rep[cls[i]] = i
        # breadth-first renumbering
        finals = []
        trans = []
        number[cls[0]] = 0
        queue[0] = cls[0]
        head, tail = 0, 1
        while head < tail:
            c = queue[head]
            x = rep[c]
            if kfin[x]:
                finals.append(head)
            for a in range(k):
                t = table[<Py_ssize_t>x * k + a]
                if t < 0:
                    continue
                num = number[cls[t]]
                if num < 0:
                    num = tail
                    number[cls[t]] = num
                    queue[tail] = cls[t]
                    tail += 1
                trans.extend((head, a, num))
            head += 1
        return tail, finals, trans
    finally:
        free(e); free(f); free(est); free(eadj); free(pst); free(psym); free(pdst)
        free(fill); free(clos); free(fmask); free(cur); free(row); free(touched)
        free(marked); free(delta); free(stack); free(rst); free(radj); free(live)
        free(local); free(table); free(kfin); free(cls); free(rep); free(number)
        free(queue); free(fin)


def product_search(int mode, int k, delta_a, final_a, int init_a,
                   delta_b, final_b, int init_b):
    cdef Py_ssize_t na = len(final_a)
    cdef Py_ssize_t nb = len(final_b)
    cdef long long nb1 = nb + 1
    cdef int *da = _copy_ints(delta_a, na * k)
    cdef int *fa = NULL
    cdef int *db = NULL
    cdef int *fb = NULL
    cdef char *seen = NULL
    cdef long long *queue = NULL
    cdef long long head = 0, tail = 0
    cdef long long code, nxt
    cdef int p, q, a, p2, q2
    try:
        fa = _copy_ints(final_a, na)
        db = _copy_ints(delta_b, nb * k)
        fb = _copy_ints(final_b, nb)
        seen = <char *>calloc(na * nb1, 1)
        queue = <long long *>malloc(na * nb1 * sizeof(long long))
        if seen == NULL or queue == NULL:
            raise MemoryError()
        code = init_a * nb1 + init_b + 1
        seen[code] = 1
        queue[tail] = code
        tail += 1
        while head < tail:
            code = queue[head]
            head += 1
            p = <int>(code // nb1)
            q = <int>(code % nb1) - 1
            if fa[p]:
                if mode == 0:
                    if q < 0 or not fb[q]:
                        return True
                elif q >= 0 and fb[q]:
                    return True
            for a in range(k):
                p2 = da[p * k + a]
                if p2 < 0:
                    continue
                q2 = db[q * k + a] if q >= 0 else -1
                if q2 < 0 and mode == 1:
                    continue
                nxt = p2 * nb1 + q2 + 1
                if not seen[nxt]:
                    seen[nxt] = 1
                    queue[tail] = nxt
                    tail += 1
        return False
    finally:
        free(da)
        free(fa)
        free(db)
        free(fb)
        free(seen)
        free(queue)
