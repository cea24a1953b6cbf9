# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exhaustive cycle-minimum kernel.

Same contract as contextant._kernel_py.min_cycle_sum: sign vectors encoded
as bitmasks (set bit = -1), admissible iff no two cyclically adjacent bits
set, correlation sum q - 2 * popcount(mask XOR rot1(mask)).
"""

BACKEND = "cython"


cdef inline int _popcount(unsigned int x) noexcept nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def min_cycle_sum(int q):
    """Minimum correlation sum over admissible masks and the lowest mask
    attaining it.  Exhaustive over all 2^q masks."""
    if q < 1 or q > 24:
        raise ValueError(f"q = {q} outside the enumeration guard [1, 24]")
    cdef unsigned int full = (1u << q) - 1u
    cdef unsigned long long total = 1ull << q
    cdef unsigned long long m
    cdef unsigned int mm, rot
    cdef int s, best_sum = q + 1
    cdef unsigned int best_mask = 0
    with nogil:
        for m in range(total):
            mm = <unsigned int> m
            rot = ((mm << 1) | (mm >> (q - 1))) & full
            if mm & rot:
                continue
            s = q - 2 * _popcount(mm ^ rot)
            if s < best_sum:
                best_sum = s
                best_mask = mm
    return best_sum, int(best_mask)
