# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled weighted edit-distance kernel.

Semantics must stay in lockstep with ``_editdist_py.py`` (the pure-Python
fallback); ``tests/test_editdist.py`` asserts parity when this module is
importable.
"""

from libc.stdlib cimport free, malloc

INF = float("inf")

cdef double C_INF = float("inf")


cdef struct CheapPair:
    int a
    int b
    double cost


cdef class _Table:
    cdef CheapPair* pairs
    cdef int n

    def __cinit__(self, cheap):
        self.n = len(cheap)
        self.pairs = <CheapPair*> malloc(self.n * sizeof(CheapPair))
        if self.pairs == NULL and self.n > 0:
            raise MemoryError()
        cdef int i = 0
        for (ca, cb), cost in cheap.items():
            self.pairs[i].a = ord(ca)
            self.pairs[i].b = ord(cb)
            self.pairs[i].cost = cost
            i += 1

    def __dealloc__(self):
        if self.pairs != NULL:
            free(self.pairs)

    cdef inline double sub(self, int ca, int cb, double default):
        cdef int i
        for i in range(self.n):
            if self.pairs[i].a == ca and self.pairs[i].b == cb:
                return self.pairs[i].cost
        return default


cdef double _osa(int* a, int la, int* b, int lb, _Table table,
                 double sub_cost, double indel_cost, double trans_cost,
                 double cutoff, double* work):
    # work must hold 3 * (lb + 1) doubles
    cdef double* prev2 = work
    cdef double* prev = work + (lb + 1)
    cdef double* cur = work + 2 * (lb + 1)
    cdef double* tmp
    cdef int i, j, ca, cb
    cdef double cost, alt, best

    if la == lb:
        for i in range(la):
            if a[i] != b[i]:
                break
        else:
            return 0.0
    if (la - lb if la > lb else lb - la) * indel_cost > cutoff:
        return C_INF

    for j in range(lb + 1):
        prev[j] = j * indel_cost
    for i in range(1, la + 1):
        ca = a[i - 1]
        cur[0] = i * indel_cost
        best = cur[0]
        for j in range(1, lb + 1):
            cb = b[j - 1]
            if ca == cb:
                cost = prev[j - 1]
            else:
                cost = prev[j - 1] + table.sub(ca, cb, sub_cost)
            alt = prev[j] + indel_cost
            if alt < cost:
                cost = alt
            alt = cur[j - 1] + indel_cost
            if alt < cost:
                cost = alt
            if i > 1 and j > 1 and ca != cb and ca == b[j - 2] and a[i - 2] == cb:
                alt = prev2[j - 2] + trans_cost
                if alt < cost:
                    cost = alt
            cur[j] = cost
            if cost < best:
                best = cost
        if best > cutoff:
            return C_INF
        tmp = prev2
        prev2 = prev
        prev = cur
        cur = tmp
    cost = prev[lb]
    return cost if cost <= cutoff else C_INF


cdef int* _encode(str s, int* buf):
    cdef int i
    for i in range(len(s)):
        buf[i] = ord(s[i])
    return buf


def osa_distance(str a, str b, cheap, double sub_cost, double indel_cost,
                 double trans_cost, double cutoff):
    """Weighted OSA distance between two strings, or INF if > cutoff."""
    cdef int la = len(a)
    cdef int lb = len(b)
    cdef _Table table = _Table(cheap)
    cdef int* ba = <int*> malloc((la + lb + 2) * sizeof(int))
    cdef double* work = <double*> malloc(3 * (lb + 1) * sizeof(double))
    if ba == NULL or work == NULL:
        if ba != NULL:
            free(ba)
        if work != NULL:
            free(work)
        raise MemoryError()
    try:
        _encode(a, ba)
        _encode(b, ba + la)
        return _osa(ba, la, ba + la, lb, table, sub_cost, indel_cost,
                    trans_cost, cutoff, work)
    finally:
        free(ba)
        free(work)


def scan(str query, forms, cheap, double sub_cost, double indel_cost,
         double trans_cost, double cutoff):
    """Distances from ``query`` to every form, as (index, distance) pairs.

    Only forms within ``cutoff`` are returned, in input order.
    """
    cdef int lq = len(query)
    cdef _Table table = _Table(cheap)
    cdef int max_lb = lq
    cdef int idx, lf
    for form in forms:
        lf = len(<str> form)
        if lf > max_lb:
            max_lb = lf
    cdef int* bq = <int*> malloc(lq * sizeof(int))
    cdef int* bf = <int*> malloc((max_lb if max_lb > 0 else 1) * sizeof(int))
    cdef double* work = <double*> malloc(3 * (max_lb + 1) * sizeof(double))
    if bq == NULL or bf == NULL or work == NULL:
        if bq != NULL:
            free(bq)
        if bf != NULL:
            free(bf)
        if work != NULL:
            free(work)
        raise MemoryError()
    out = []
    cdef double d
    try:
        _encode(query, bq)
        for idx, form in enumerate(forms):
            lf = len(<str> form)
            _encode(<str> form, bf)
            d = _osa(bq, lq, bf, lf, table, sub_cost, indel_cost,
                     trans_cost, cutoff, work)
            if d <= cutoff:
                out.append((idx, d))
    finally:
        free(bq)
        free(bf)
        free(work)
    return out
