# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_fallback`` for the reference semantics.

Packed classes must fit in 62 bits, i.e. genus <= 31.
"""

from libc.stdlib cimport malloc, free


cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil


cdef inline unsigned long long _even_mask(int genus) nogil:
    cdef unsigned long long m = 0
    cdef int i
    for i in range(genus):
        m |= (<unsigned long long>1) << (2 * i)
    return m


cdef inline unsigned long long _mul(unsigned long long x, unsigned long long y,
                                    unsigned long long e) nogil:
    cdef unsigned long long ax = x >> 2
    cdef unsigned long long ay = y >> 2
    cdef long long t = <long long>(x & 3) + <long long>(y & 3)
    t += popcount(ax & e & (ay >> 1)) - popcount((ax >> 1) & e & ay)
    cdef unsigned long long c = ax ^ ay
    cdef unsigned long long carry = ax & ay
    cdef unsigned long long swapped = ((carry & e) << 1) | ((carry >> 1) & e)
    t += 2 * (popcount(c & swapped) & 1)
    return (<unsigned long long>(t & 3)) | (c << 2)


def _check_genus(int genus):
    if genus < 0 or genus > 31:
        raise OverflowError(f"genus {genus} does not fit the compiled kernel")


def e_mul_packed(x, y, int genus):
    _check_genus(genus)
    return _mul(x, y, _even_mask(genus))


def associativity_failure(xs, ys, zs, int genus):
    """Index of the first triple with ``(xy)z != x(yz)``, or -1."""
    _check_genus(genus)
    cdef unsigned long long e = _even_mask(genus)
    cdef Py_ssize_t n = min(len(xs), len(ys), len(zs))
    cdef Py_ssize_t i
    cdef unsigned long long x, y, z
    for i in range(n):
        x = xs[i]
        y = ys[i]
        z = zs[i]
        if _mul(_mul(x, y, e), z, e) != _mul(x, _mul(y, z, e), e):
            return i
    return -1


def exhaustive_associativity(int genus):
    """Number of non-associative triples in the whole group."""
    _check_genus(genus)
    if genus > 3:
        raise ValueError("exhaustive associativity is limited to genus <= 3")
    cdef unsigned long long e = _even_mask(genus)
    cdef unsigned long long order = (<unsigned long long>4) << (2 * genus)
    cdef unsigned long long x, y, z, xy
    cdef long long bad = 0
    with nogil:
        for x in range(order):
            for y in range(order):
                xy = _mul(x, y, e)
                for z in range(order):
                    if _mul(xy, z, e) != _mul(x, _mul(y, z, e), e):
                        bad += 1
    return bad


def form_census(int genus):
    """Brute-force census of all quadratic forms of the given genus."""
    _check_genus(genus)
    if genus > 12:
        raise ValueError("form census is limited to genus <= 12")
    cdef long long n = (<long long>1) << (2 * genus)
    cdef unsigned long long e = _even_mask(genus)
    cdef unsigned char *quad = <unsigned char *>malloc(n)
    cdef long long *sums = <long long *>malloc(n * sizeof(long long))
    cdef long long *c0 = <long long *>malloc(n * sizeof(long long))
    cdef long long *c1 = <long long *>malloc(n * sizeof(long long))
    cdef long long *target
    cdef long long v, a, s
    if quad == NULL or sums == NULL or c0 == NULL or c1 == NULL:
        free(quad); free(sums); free(c0); free(c1)
        raise MemoryError()
    try:
        with nogil:
            for a in range(n):
                quad[a] = popcount(<unsigned long long>a & e & (<unsigned long long>a >> 1)) & 1
                c0[a] = 0
                c1[a] = 0
            for v in range(n):
                s = 0
                for a in range(n):
                    s += (popcount(<unsigned long long>(a & v)) + quad[a]) & 1
                s = n - 2 * s
                sums[v] = s
                target = c0 if s > 0 else c1
                for a in range(n):
                    target[a] += (popcount(<unsigned long long>(a & v)) + quad[a]) & 1
        return ([sums[a] for a in range(n)], [c0[a] for a in range(n)], [c1[a] for a in range(n)])
    finally:
        free(quad); free(sums); free(c0); free(c1)
