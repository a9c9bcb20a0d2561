"""Pure-Python traversal kernel.

Mirrors ``_ckernel.pyx`` function for function; used when the compiled
extension is not importable. All three entry points follow the same
pre-order as the shift/subtract recursion, so the emitted sequences are
identical across kernels.
"""
from array import array


def walk(zeros, ones, visit, make_event, edges):
    """Drive the full traversal, calling ``visit(make_event(...))`` per node.

    ``make_event`` receives ``(index, value, parent_index, edge,
    subtrahend_used, shift_count, subtract_count)``. ``edges`` is the
    ``(root, shift, subtract)`` triple of edge tags handed through verbatim.
    Returns the number of events emitted.
    """
    root_edge, shift_edge, subtract_edge = edges
    visit(make_event(0, (1 << ones) - 1, None, root_edge, None, 0, 0))
    if zeros == 0 or ones == 0:
        return 1

    last = ones - 1
    emitted = 1

    def shift(p, parent, v, i, j):
        nonlocal emitted
        while i < zeros:
            p <<= 1
            i += 1
            index = emitted
            emitted += 1
            visit(make_event(index, p, parent, shift_edge, None, i, j))
            v = (v << 1) | 1
            if j < last:
                subtract(p, index, v, i, j)
            parent = index

    def subtract(p, parent, v, i, j):
        nonlocal emitted
        while j < last:
            p -= v
            j += 1
            index = emitted
            emitted += 1
            visit(make_event(index, p, parent, subtract_edge, v, i, j))
            v <<= 1
            if i < zeros:
                shift(p, index, v, i, j)
            parent = index

    shift((1 << ones) - 1, 0, 0, 0, 0)
    return emitted


def count(zeros, ones):
    """Run the traversal without materialising anything; return the node count."""
    if zeros == 0 or ones == 0:
        return 1
    last = ones - 1

    def shift(i, j):
        n = 0
        while i < zeros:
            i += 1
            n += 1
            if j < last:
                n += subtract(i, j)
        return n

    def subtract(i, j):
        n = 0
        while j < last:
            j += 1
            n += 1
            if i < zeros:
                n += shift(i, j)
        return n

    return 1 + shift(0, 0)


def collect(zeros, ones):
    """Return every emitted value, in emission order, as an ``array('Q')``."""
    p0 = (1 << ones) - 1
    out = [p0]
    if zeros == 0 or ones == 0:
        return array("Q", out)
    append = out.append
    last = ones - 1

    def shift(p, v, i, j):
        while i < zeros:
            p <<= 1
            i += 1
            append(p)
            v = (v << 1) | 1
            if j < last:
                subtract(p, v, i, j)

    def subtract(p, v, i, j):
        while j < last:
            p -= v
            j += 1
            append(p)
            v <<= 1
            if i < zeros:
                shift(p, v, i, j)

    shift(p0, 0, 0, 0)
    return array("Q", out)
