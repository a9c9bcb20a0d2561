# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled traversal kernel; same entry points as ``_pykernel``."""
from array import array

from libc.stdint cimport uint64_t


cdef class _Walker:
    cdef int zeros
    cdef int last
    cdef Py_ssize_t emitted
    cdef object visit
    cdef object make_event
    cdef object shift_edge
    cdef object subtract_edge

    cdef void shift(self, uint64_t p, Py_ssize_t parent, uint64_t v, int i, int j) except *:
        cdef Py_ssize_t index
        while i < self.zeros:
            p <<= 1
            i += 1
            index = self.emitted
            self.emitted += 1
            self.visit(self.make_event(index, p, parent, self.shift_edge, None, i, j))
            v = (v << 1) | 1
            if j < self.last:
                self.subtract(p, index, v, i, j)
            parent = index

    cdef void subtract(self, uint64_t p, Py_ssize_t parent, uint64_t v, int i, int j) except *:
        cdef Py_ssize_t index
        while j < self.last:
            p -= v
            j += 1
            index = self.emitted
            self.emitted += 1
            self.visit(self.make_event(index, p, parent, self.subtract_edge, v, i, j))
            v <<= 1
            if i < self.zeros:
                self.shift(p, index, v, i, j)
            parent = index


cdef inline uint64_t _low_ones(int ones):
    if ones >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << ones) - 1


def walk(int zeros, int ones, visit, make_event, edges):
    root_edge, shift_edge, subtract_edge = edges
    cdef uint64_t p0 = _low_ones(ones)
    visit(make_event(0, p0, None, root_edge, None, 0, 0))
    if zeros == 0 or ones == 0:
        return 1
    cdef _Walker w = _Walker()
    w.zeros = zeros
    w.last = ones - 1
    w.emitted = 1
    w.visit = visit
    w.make_event = make_event
    w.shift_edge = shift_edge
    w.subtract_edge = subtract_edge
    w.shift(p0, 0, 0, 0, 0)
    return w.emitted


cdef uint64_t _count_shift(int i, int j, int zeros, int last) noexcept nogil:
    cdef uint64_t n = 0
    while i < zeros:
        i += 1
        n += 1
        if j < last:
            n += _count_subtract(i, j, zeros, last)
    return n


cdef uint64_t _count_subtract(int i, int j, int zeros, int last) noexcept nogil:
    cdef uint64_t n = 0
    while j < last:
        j += 1
        n += 1
        if i < zeros:
            n += _count_shift(i, j, zeros, last)
    return n


def count(int zeros, int ones):
    if zeros == 0 or ones == 0:
        return 1
    cdef uint64_t n
    with nogil:
        n = 1 + _count_shift(0, 0, zeros, ones - 1)
    return n


cdef struct _Sink:
    uint64_t *out
    Py_ssize_t size
    Py_ssize_t pos
    int zeros
    int last


cdef int _collect_shift(_Sink *s, uint64_t p, uint64_t v, int i, int j) noexcept nogil:
    while i < s.zeros:
        p <<= 1
        i += 1
        if s.pos >= s.size:
            return -1
        s.out[s.pos] = p
        s.pos += 1
        v = (v << 1) | 1
        if j < s.last:
            if _collect_subtract(s, p, v, i, j) < 0:
                return -1
    return 0


cdef int _collect_subtract(_Sink *s, uint64_t p, uint64_t v, int i, int j) noexcept nogil:
    while j < s.last:
        p -= v
        j += 1
        if s.pos >= s.size:
            return -1
        s.out[s.pos] = p
        s.pos += 1
        v <<= 1
        if i < s.zeros:
            if _collect_shift(s, p, v, i, j) < 0:
                return -1
    return 0


def collect(int zeros, int ones):
    cdef uint64_t p0 = _low_ones(ones)
    if zeros == 0 or ones == 0:
        return array("Q", [p0])
    size = count(zeros, ones)
    out = array("Q", bytes(8 * size))
    cdef uint64_t[::1] buf = out
    cdef _Sink s
    s.out = &buf[0]
    s.size = size
    s.pos = 1
    s.zeros = zeros
    s.last = ones - 1
    s.out[0] = p0
    cdef int rc
    with nogil:
        rc = _collect_shift(&s, p0, 0, 0, 0)
    if rc < 0 or s.pos != size:
        raise RuntimeError("traversal emitted an unexpected number of values")
    return out
