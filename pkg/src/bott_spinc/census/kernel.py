"""
Census Kernel

Bit-level spin and spin^c classification of orientable Bott matrices,
compiled with numba. Row i (0-based) is an even mask on columns i+1..n-1
indexed by its free bits: index k gives k << (i + 1) with the parity bit at
column n-1. Rows n-2 and n-1 are always zero.

Set NUMBA_DISABLE_JIT=1 to run every function as plain Python.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def popcount(value):
    count = 0
    while value:
        value &= value - 1
        count += 1
    return count


@njit(cache=True)
def row_choices(n, i):
    """Number of even masks available to row i"""
    if i >= n - 1:
        return 1
    return 1 << (n - 2 - i)


@njit(cache=True)
def even_row(n, i, k):
    mask = k << (i + 1)
    if popcount(k) & 1:
        mask |= 1 << (n - 1)
    return mask


@njit(cache=True)
def fill_columns(rows, columns, n):
    for j in range(n):
        columns[j] = 0
    for i in range(n):
        bits = rows[i]
        j = 0
        while bits:
            if bits & 1:
                columns[j] |= 1 << i
            bits >>= 1
            j += 1


@njit(cache=True)
def is_spin(rows, n):
    """
    w_2 = 0: for every k < l the coefficient of x_k x_l,
    <A_(k), A_(l)> + C(|A_(l)|, 2) a_kl, vanishes
    """
    for m in range(1, n):
        half = (popcount(rows[m]) >> 1) & 1
        for k in range(m):
            coefficient = popcount(rows[k] & rows[m]) & 1
            if half and (rows[k] >> m) & 1:
                coefficient ^= 1
            if coefficient:
                return False
    return True


@njit(cache=True)
def is_spinc(rows, columns, n):
    """Every middle column of A' is 0 or the matching column of A"""
    for j in range(2, n - 2):
        target = columns[j]
        derived = 0
        for i in range(j):
            if columns[i] != target and popcount(rows[i] & rows[j]) & 1:
                derived |= 1 << i
        if derived != 0 and derived != target:
            return False
    return True


@njit(cache=True)
def classify_rows(rows, columns, n):
    """(spin^c, spin) for one orientable matrix; columns is scratch space"""
    fill_columns(rows, columns, n)
    spin = is_spin(rows, n)
    spinc = is_spinc(rows, columns, n)
    return spinc, spin


@njit(cache=True)
def decode_tail(n, t, rows):
    """Fill rows 2..n-3 from the flat counter t"""
    shift = 0
    for i in range(2, n - 2):
        width = n - 2 - i
        k = (t >> shift) & ((1 << width) - 1)
        rows[i] = even_row(n, i, k)
        shift += width


@njit(cache=True)
def count_chunk(n, head0, head1):
    """
    Classify every matrix whose first two rows have indices head0 and head1.

    Returns:
        (visited, spin^c count, spin count)
    """
    rows = np.zeros(n, dtype=np.int64)
    columns = np.zeros(n, dtype=np.int64)
    rows[0] = even_row(n, 0, head0)
    rows[1] = even_row(n, 1, head1)

    tail_bits = (n - 4) * (n - 3) // 2
    visited = 0
    spinc_count = 0
    spin_count = 0
    for t in range(1 << tail_bits):
        decode_tail(n, t, rows)
        spinc, spin = classify_rows(rows, columns, n)
        visited += 1
        if spinc:
            spinc_count += 1
        if spin:
            spin_count += 1
    return visited, spinc_count, spin_count
