# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: SSYT counting and exact-sign sample classification.

The sample classifier decides the sign of sum_i a_i * K_i exactly for doubles
a_i and small integers K_i using floating-point expansion arithmetic
(error-free two-sum / two-product, grow-expansion with zero elimination).
The sign of a nonoverlapping expansion is the sign of its largest nonzero
component, so no rounding can flip a classification.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef enum:
    MAX_EXPANSION = 1024
    MAX_ROWS = 64
    MAX_STEPS = 128


cdef inline void _two_sum(double a, double b, double* x, double* y) noexcept nogil:
    cdef double s = a + b
    cdef double bv = s - a
    cdef double av = s - bv
    x[0] = s
    y[0] = (a - av) + (b - bv)


cdef inline void _split(double a, double* hi, double* lo) noexcept nogil:
    cdef double c = 134217729.0 * a
    cdef double abig = c - a
    hi[0] = c - abig
    lo[0] = a - hi[0]


cdef inline void _two_product(double a, double b, double* x, double* y) noexcept nogil:
    cdef double p = a * b
    cdef double ahi, alo, bhi, blo, err1, err2, err3
    _split(a, &ahi, &alo)
    _split(b, &bhi, &blo)
    err1 = p - ahi * bhi
    err2 = err1 - alo * bhi
    err3 = err2 - ahi * blo
    x[0] = p
    y[0] = alo * blo - err3


cdef inline int _grow(double* e, int elen, double b) noexcept nogil:
    # Grow-Expansion with zero elimination; e is nonoverlapping, increasing magnitude
    cdef double q = b
    cdef double qn, h
    cdef int i, m = 0
    for i in range(elen):
        _two_sum(q, e[i], &qn, &h)
        q = qn
        if h != 0.0:
            e[m] = h
            m += 1
    if q != 0.0:
        e[m] = q
        m += 1
    return m


cdef int _row_positive(const double* a, const double* kinv, int p, double* buf) noexcept nogil:
    cdef int i, j, m
    cdef double c, hi, lo
    for j in range(p):
        m = 0
        for i in range(p):
            c = kinv[i * p + j]
            if c == 0.0:
                continue
            _two_product(a[i], c, &hi, &lo)
            if lo != 0.0:
                m = _grow(buf, m, lo)
            m = _grow(buf, m, hi)
        if m > 0 and buf[m - 1] < 0.0:
            return 0
    return 1


def classify_samples(samples, kinv):
    """Exact Schur-positivity test for each row of float monomial coefficients."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] a = np.ascontiguousarray(samples, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] k
    kint = np.asarray(kinv, dtype=np.int64)
    if np.any(np.abs(kint) >= (1 << 53)):
        raise OverflowError("coefficient matrix entries exceed the exact double range")
    k = np.ascontiguousarray(kint, dtype=np.float64)
    cdef Py_ssize_t n = a.shape[0]
    cdef int p = a.shape[1]
    if k.shape[0] != p or k.shape[1] != p:
        raise ValueError("coefficient matrix does not match sample width")
    if 2 * p + 1 > MAX_EXPANSION:
        raise ValueError("too many partitions for the compiled classifier")
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] out = np.empty(n, dtype=np.uint8)
    cdef double buf[MAX_EXPANSION]
    cdef Py_ssize_t r
    cdef const double* ap = <const double*> a.data
    cdef const double* kp = <const double*> k.data
    cdef unsigned char* op = <unsigned char*> out.data
    with nogil:
        for r in range(n):
            op[r] = _row_positive(ap + r * p, kp, p, buf)
    return out.view(bool)


cdef long long _count_chains(int step, int nsteps, int nrows, const int* shape,
                             const int* content, int* inner) noexcept nogil:
    if step == nsteps:
        return 1
    cdef int need = content[step]
    if need == 0:
        return _count_chains(step + 1, nsteps, nrows, shape, content, inner)
    cdef int saved[MAX_ROWS]
    cdef int r
    for r in range(nrows):
        saved[r] = inner[r]
    cdef long long total = _place(0, need, step, nsteps, nrows, shape, content, inner, saved)
    for r in range(nrows):
        inner[r] = saved[r]
    return total


cdef long long _place(int r, int left, int step, int nsteps, int nrows, const int* shape,
                      const int* content, int* inner, const int* before) noexcept nogil:
    # before: partition at the start of this step; inner rows < r already updated
    if r == nrows:
        if left != 0:
            return 0
        return _count_chains(step + 1, nsteps, nrows, shape, content, inner)
    cdef int cap = shape[r]
    if r > 0 and before[r - 1] < cap:
        cap = before[r - 1]
    cdef int room = cap - before[r]
    if room > left:
        room = left
    cdef long long total = 0
    cdef int add
    for add in range(room, -1, -1):
        inner[r] = before[r] + add
        total += _place(r + 1, left - add, step, nsteps, nrows, shape, content, inner, before)
    inner[r] = before[r]
    return total


def count_ssyt_content(shape, content):
    """Number of SSYT of ``shape`` with the given content (horizontal-strip chains)."""
    shape = tuple(int(x) for x in shape)
    content = tuple(int(x) for x in content)
    if sum(shape) != sum(content) or any(c < 0 for c in content):
        return 0
    cdef int nrows = len(shape)
    cdef int nsteps = len(content)
    if nrows > MAX_ROWS or nsteps > MAX_STEPS:
        raise ValueError("shape or content too long for the compiled counter")
    if nrows == 0:
        return 1
    cdef int cshape[MAX_ROWS]
    cdef int ccontent[MAX_STEPS]
    cdef int inner[MAX_ROWS]
    cdef int i
    for i in range(nrows):
        cshape[i] = shape[i]
        inner[i] = 0
    for i in range(nsteps):
        ccontent[i] = content[i]
    cdef long long total
    with nogil:
        total = _count_chains(0, nsteps, nrows, cshape, ccontent, inner)
    return total
