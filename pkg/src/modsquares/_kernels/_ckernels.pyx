# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the hot loops of the package.

Mirrors `_pykernels` function by function.  The RNG (SplitMix64 plus
rejection-sampled index draws) reproduces the pure-Python stream bit
for bit, so simulation output is identical across backends.
"""

from libc.stdlib cimport calloc, free, malloc

ctypedef unsigned long long u64

cdef extern from *:
    """
    #include <stdint.h>

    static inline uint64_t msq_mulmod(uint64_t a, uint64_t b, uint64_t m) {
        return (uint64_t)(((unsigned __int128)a * (unsigned __int128)b) % m);
    }

    /* SplitMix64; constants and mixing as in the pure-Python twin. */
    static inline uint64_t msq_next(uint64_t *state) {
        uint64_t z = (*state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /* Uniform draw from [0, n); same acceptance region as the Python
       randbelow: reject outputs below 2**64 mod n. */
    static inline uint64_t msq_below(uint64_t *state, uint64_t n) {
        uint64_t threshold = (0 - n) % n;
        uint64_t u = msq_next(state);
        while (u < threshold) {
            u = msq_next(state);
        }
        return u % n;
    }
    """
    u64 msq_mulmod(u64 a, u64 b, u64 m) nogil
    u64 msq_next(u64 *state) nogil
    u64 msq_below(u64 *state, u64 n) nogil

BACKEND_NAME = "compiled"


cdef u64 _powmod(u64 base, u64 exp, u64 m) nogil:
    cdef u64 result = 1 % m
    cdef u64 b = base % m
    while exp:
        if exp & 1:
            result = msq_mulmod(result, b, m)
        b = msq_mulmod(b, b, m)
        exp >>= 1
    return result


cdef u64 _merge_count(long long *a, long long *tmp, Py_ssize_t n) nogil:
    """Bottom-up merge sort on a[0:n], accumulating split inversions."""
    cdef Py_ssize_t width = 1
    cdef Py_ssize_t lo, mid, hi, i, j, k
    cdef u64 inv = 0
    while width < n:
        lo = 0
        while lo + width < n:
            mid = lo + width
            hi = lo + 2 * width
            if hi > n:
                hi = n
            i = lo
            j = mid
            k = lo
            while i < mid and j < hi:
                if a[i] <= a[j]:
                    tmp[k] = a[i]
                    i += 1
                else:
                    tmp[k] = a[j]
                    j += 1
                    inv += <u64> (mid - i)
                k += 1
            while i < mid:
                tmp[k] = a[i]
                i += 1
                k += 1
            while j < hi:
                tmp[k] = a[j]
                j += 1
                k += 1
            for k in range(lo, hi):
                a[k] = tmp[k]
            lo += 2 * width
        width *= 2
    return inv


def count_inversions(values):
    """Exact inversion count, O(n log n); values must fit in int64."""
    cdef Py_ssize_t n = len(values)
    if n < 2:
        return 0
    cdef long long *a = <long long *> malloc(n * sizeof(long long))
    cdef long long *tmp = <long long *> malloc(n * sizeof(long long))
    if a == NULL or tmp == NULL:
        free(a)
        free(tmp)
        raise MemoryError()
    cdef Py_ssize_t i
    cdef u64 inv
    try:
        for i in range(n):
            a[i] = values[i]
        with nogil:
            inv = _merge_count(a, tmp, n)
        return inv
    finally:
        free(a)
        free(tmp)


def legendre_symbols(p):
    """Symbols (a/p) for a = 1..p-1 as a list of +-1 ints."""
    cdef u64 up = p
    cdef Py_ssize_t sp = p
    cdef char *mark = <char *> calloc(sp, 1)
    if mark == NULL:
        raise MemoryError()
    cdef u64 x
    cdef u64 half = (up - 1) // 2
    cdef Py_ssize_t i
    try:
        with nogil:
            for x in range(1, half + 1):
                mark[<Py_ssize_t> msq_mulmod(x, x, up)] = 1
        out = []
        for i in range(1, sp):
            out.append(1 if mark[i] else -1)
        return out
    finally:
        free(mark)


def primitive_root_scan(p, exponents):
    """All g in [2, p-1] passing the order test for every cofactor exponent."""
    cdef u64 up = p
    cdef Py_ssize_t k = len(exponents)
    cdef u64 *exps = <u64 *> malloc(k * sizeof(u64)) if k > 0 else NULL
    if k > 0 and exps == NULL:
        raise MemoryError()
    cdef Py_ssize_t idx
    cdef u64 g
    cdef bint ok
    roots = []
    try:
        for idx in range(k):
            exps[idx] = exponents[idx]
        for g in range(2, up):
            ok = True
            for idx in range(k):
                if _powmod(g, exps[idx], up) == 1:
                    ok = False
                    break
            if ok:
                roots.append(g)
        return roots
    finally:
        free(exps)


def multiplier_orbit(a, m, cap):
    """States 1, a, a^2, ... mod m until the walk returns to 1."""
    cdef u64 ua = a
    cdef u64 um = m
    cdef u64 x = 1
    cdef Py_ssize_t count = 1
    cdef Py_ssize_t limit = cap
    states = [1]
    while True:
        x = msq_mulmod(ua, x, um)
        if x == 1:
            return states
        states.append(x)
        count += 1
        if count > limit:
            raise RuntimeError(
                f"orbit of {a} mod {m} did not return to 1 within {cap} steps"
            )


def simulate_inversion_counts(tail_len, iterations, seed):
    """Inversion counts of `iterations` random fixed cycles (tail shuffles)."""
    cdef Py_ssize_t t = tail_len
    cdef Py_ssize_t iters = iterations
    cdef u64 state = seed
    cdef Py_ssize_t buf = t if t > 1 else 1
    cdef long long *a = <long long *> malloc(buf * sizeof(long long))
    cdef long long *tmp = <long long *> malloc(buf * sizeof(long long))
    if a == NULL or tmp == NULL:
        free(a)
        free(tmp)
        raise MemoryError()
    cdef Py_ssize_t it, i, j
    cdef long long swap
    cdef u64 inv
    out = []
    try:
        for it in range(iters):
            with nogil:
                for i in range(t):
                    a[i] = i
                for i in range(t - 1, 0, -1):
                    j = <Py_ssize_t> msq_below(&state, <u64> (i + 1))
                    swap = a[i]
                    a[i] = a[j]
                    a[j] = swap
                inv = _merge_count(a, tmp, t)
            out.append(inv)
        return out
    finally:
        free(a)
        free(tmp)


def simulate_run_counts(half, iterations, seed):
    """Run counts of `iterations` uniform shuffles of `half` +1s and -1s."""
    cdef Py_ssize_t h = half
    cdef Py_ssize_t n = 2 * h
    cdef Py_ssize_t iters = iterations
    cdef u64 state = seed
    cdef signed char *arr = <signed char *> malloc(n if n > 0 else 1)
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t it, i, j, runs
    cdef signed char swap, prev
    out = []
    try:
        for it in range(iters):
            with nogil:
                for i in range(h):
                    arr[i] = 1
                for i in range(h, n):
                    arr[i] = -1
                for i in range(n - 1, 0, -1):
                    j = <Py_ssize_t> msq_below(&state, <u64> (i + 1))
                    swap = arr[i]
                    arr[i] = arr[j]
                    arr[j] = swap
                runs = 1
                prev = arr[0]
                for i in range(1, n):
                    if arr[i] != prev:
                        runs += 1
                        prev = arr[i]
            out.append(runs)
        return out
    finally:
        free(arr)


def splitmix_outputs(seed, count):
    """Raw generator outputs, exposed for backend-parity checks."""
    cdef u64 state = seed
    cdef Py_ssize_t k = count
    cdef Py_ssize_t i
    out = []
    for i in range(k):
        out.append(msq_next(&state))
    return out
