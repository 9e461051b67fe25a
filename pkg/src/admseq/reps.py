"""Quiver representations over the rationals and reflection functors.

A representation stores one matrix per arrow instance, shaped
dims(target) x dims(source), with Fraction entries.  The positive
reflection functor replaces the space at a sink by the kernel of the
assembled incoming map; the negative functor replaces the space at a
source by the cokernel of the assembled outgoing map.  Kernel and
cokernel bases come from deterministic echelon forms, so results are
bit-reproducible.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import linalg
from .errors import (
    AdmseqError,
    NotReducedError,
    NotSinkError,
    NotSourceError,
    UndecidedError,
)
from .sequences import AdmissibleSeq, seq_from_multiplicities
from . import sequences as seqmod
from . import weyl as weylmod


def _freeze(matrix):
    return tuple(tuple(Fraction(x) for x in row) for row in matrix)


class Representation:
    """Spaces and maps over a fixed quiver; immutable."""

    __slots__ = ("quiver", "dims", "maps")

    def __init__(self, quiver, dims, maps):
        dims = tuple(int(d) for d in dims)
        if len(dims) != quiver.n or any(d < 0 for d in dims):
            raise AdmseqError("dimension vector does not fit the quiver")
        maps = tuple(_freeze(m) for m in maps)
        if len(maps) != len(quiver.arrows):
            raise AdmseqError("one matrix per arrow instance is required")
        for (s, e), m in zip(quiver.arrows, maps):
            rows, cols = dims[e - 1], dims[s - 1]
            if len(m) != rows or any(len(r) != cols for r in m):
                raise AdmseqError(
                    f"matrix for arrow {s}->{e} must be {rows} x {cols}"
                )
        self.quiver = quiver
        self.dims = dims
        self.maps = maps

    def dim(self, x):
        return self.dims[x - 1]

    def support(self):
        return frozenset(x for x in self.quiver.vertices() if self.dim(x) > 0)

    def is_zero(self):
        return all(d == 0 for d in self.dims)

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and self.quiver == other.quiver
            and self.dims == other.dims
            and self.maps == other.maps
        )

    def __repr__(self):
        return f"Representation(dims={self.dims})"


def zero_rep(quiver):
    return Representation(quiver, (0,) * quiver.n, [()] * len(quiver.arrows))


def simple(quiver, x):
    """The simple representation concentrated at x."""
    dims = tuple(int(v == x) for v in quiver.vertices())
    maps = []
    for s, e in quiver.arrows:
        maps.append(tuple(() for _ in range(dims[e - 1])))
    return Representation(quiver, dims, maps)


def projective_dims(quiver):
    """Dimension vectors of the indecomposable projectives: the x-th
    counts paths from x to each vertex.  Unitriangular in a topological
    order, so the vectors are pairwise distinct."""
    out = []
    for x in quiver.vertices():
        counts = {v: 0 for v in quiver.vertices()}
        counts[x] = 1
        for u in quiver.topological_order():
            for s, e in quiver.arrows:
                if s == u:
                    counts[e] += counts[u]
        out.append(tuple(counts[v] for v in quiver.vertices()))
    return out


def reflect_plus(rep, x):
    """Positive reflection functor at a sink x.

    The space at x becomes the kernel of the map assembled from all
    arrows into x; the new maps out of x are the block components of the
    kernel inclusion.
    """
    q = rep.quiver
    if not q.is_sink(x):
        raise NotSinkError(f"{x} is not a sink")
    incoming = [i for i, (s, e) in enumerate(q.arrows) if e == x]
    block_dims = [rep.dims[q.arrows[i][0] - 1] for i in incoming]
    total = sum(block_dims)
    dx = rep.dim(x)
    # h : direct sum of sources -> V(x), blocks side by side
    h = [[Fraction(0)] * total for _ in range(dx)]
    offset = 0
    for i, bd in zip(incoming, block_dims):
        m = rep.maps[i]
        for r in range(dx):
            for c in range(bd):
                h[r][offset + c] = m[r][c]
        offset += bd
    kernel = linalg.nullspace(h, dx, total)  # total x k
    k = len(kernel[0]) if total else 0
    new_quiver = q.reflect(x)
    new_dims = list(rep.dims)
    new_dims[x - 1] = k
    new_maps = []
    offsets = {}
    offset = 0
    for i, bd in zip(incoming, block_dims):
        offsets[i] = offset
        offset += bd
    for i, (s, e) in enumerate(q.arrows):
        if i in offsets:
            # reversed arrow x -> old source; rows of the kernel basis
            y = q.arrows[i][0]
            off, bd = offsets[i], rep.dims[y - 1]
            new_maps.append([kernel[off + r][:k] for r in range(bd)])
        else:
            new_maps.append(rep.maps[i])
    return Representation(new_quiver, new_dims, new_maps)


def reflect_minus(rep, x):
    """Negative reflection functor at a source x.

    The space at x becomes the cokernel of the map assembled from all
    arrows out of x; the new maps into x are inclusion followed by the
    quotient projection.
    """
    q = rep.quiver
    if not q.is_source(x):
        raise NotSourceError(f"{x} is not a source")
    outgoing = [i for i, (s, e) in enumerate(q.arrows) if s == x]
    block_dims = [rep.dims[q.arrows[i][1] - 1] for i in outgoing]
    total = sum(block_dims)
    dx = rep.dim(x)
    # h' : V(x) -> direct sum of targets, blocks stacked
    h = [[Fraction(0)] * dx for _ in range(total)]
    offset = 0
    for i, bd in zip(outgoing, block_dims):
        m = rep.maps[i]
        for r in range(bd):
            for c in range(dx):
                h[offset + r][c] = m[r][c]
        offset += bd
    proj = linalg.cokernel_projection(h, total, dx)  # (total - rank) x total
    k = len(proj)
    new_quiver = q.reflect(x)
    new_dims = list(rep.dims)
    new_dims[x - 1] = k
    new_maps = []
    offsets = {}
    offset = 0
    for i, bd in zip(outgoing, block_dims):
        offsets[i] = offset
        offset += bd
    for i, (s, e) in enumerate(q.arrows):
        if i in offsets:
            # reversed arrow old target -> x; columns of the projection
            y = q.arrows[i][1]
            off, bd = offsets[i], rep.dims[y - 1]
            new_maps.append(
                [[proj[r][off + c] for c in range(bd)] for r in range(k)]
            )
        else:
            new_maps.append(rep.maps[i])
    return Representation(new_quiver, new_dims, new_maps)


def apply_sequence(rep, seq):
    """Left-to-right fold of the positive reflection functor."""
    if seq.quiver != rep.quiver:
        raise AdmseqError("sequence and representation live on different quivers")
    out = rep
    for x in seq.letters:
        out = reflect_plus(out, x)
    return out


def canonical_complete_sequence(quiver):
    """Complete admissible sequence taking the smallest-id current sink
    at every step."""
    letters = []
    running = quiver
    remaining = set(quiver.vertices())
    while remaining:
        x = min(v for v in remaining if running.is_sink(v))
        letters.append(x)
        remaining.remove(x)
        running = running.reflect(x)
    return AdmissibleSeq(quiver, letters)


def coxeter_plus(rep):
    """The positive Coxeter functor: apply_sequence along the canonical
    complete sequence.  Lands back on the same quiver."""
    return apply_sequence(rep, canonical_complete_sequence(rep.quiver))


def build_module(seq):
    """The indecomposable representation M(S) of a sequence with reduced
    word: start from the simple at the last letter on the fully
    reflected orientation and fold negative reflection functors back.
    """
    if len(seq) == 0:
        raise AdmseqError("sequence must be nonempty")
    if not weylmod.is_reduced(weylmod.word_of(seq)):
        raise NotReducedError("word of the sequence is not reduced")
    letters = seq.letters
    running = seq.quiver
    quivers = [running]  # quivers[i] carries sigma_{x_i} ... sigma_{x_1} Lambda
    for x in letters[:-1]:
        running = running.reflect(x)
        quivers.append(running)
    m = simple(quivers[-1], letters[-1])
    for x in reversed(letters[:-1]):
        m = reflect_minus(m, x)
    assert m.quiver == seq.quiver
    return m


class Preprojective:
    """Least power of the Coxeter functor that kills the module."""

    __slots__ = ("m",)

    def __init__(self, m):
        self.m = m

    def __eq__(self, other):
        return isinstance(other, Preprojective) and self.m == other.m

    def __repr__(self):
        return f"Preprojective({self.m})"


class Undecided:
    def __eq__(self, other):
        return isinstance(other, Undecided)

    def __repr__(self):
        return "Undecided()"


def is_preprojective(rep, max_iter=64):
    """Iterate the Coxeter functor up to max_iter times; report the
    least annihilating power or Undecided."""
    cur = rep
    for m in range(max_iter + 1):
        if cur.is_zero():
            return Preprojective(m)
        cur = coxeter_plus(cur)
    return Undecided()


def shortest_annihilator_indec(rep, max_iter=64):
    """Shortest annihilating sequence of an indecomposable preprojective
    representation.

    Iterates the Coxeter functor until zero; the last nonzero image is a
    projective, identified by its dimension vector, and the answer is
    the principal sequence at that vertex.
    """
    if rep.is_zero():
        return AdmissibleSeq(rep.quiver, ())
    trail = [rep]
    cur = rep
    for _ in range(max_iter):
        cur = coxeter_plus(cur)
        if cur.is_zero():
            break
        trail.append(cur)
    else:
        raise UndecidedError(f"not annihilated within {max_iter} Coxeter steps")
    nu = len(trail) - 1
    last = trail[-1]
    projectives = projective_dims(rep.quiver)
    matches = [
        x for x, pd in zip(rep.quiver.vertices(), projectives) if pd == last.dims
    ]
    if len(matches) != 1:
        raise AdmseqError(
            "last nonzero Coxeter image is not a projective; "
            "the module is not indecomposable preprojective"
        )
    return seqmod.principal(rep.quiver, nu + 1, matches[0])


def shortest_annihilator_bruteforce(rep, annihilator):
    """Shortest annihilating sequence by exhaustive search below a known
    annihilator.

    Enumerates every valid multiplicity vector dominated by the given
    annihilating sequence, keeps those that annihilate, and returns the
    unique minimum; a non-unique minimum would contradict uniqueness of
    the shortest sequence and raises.
    """
    from itertools import product

    if not apply_sequence(rep, annihilator).is_zero():
        raise AdmseqError("given sequence does not annihilate the module")
    if rep.is_zero():
        return AdmissibleSeq(rep.quiver, ())
    bound = annihilator.multiplicities()
    killing = []
    for vec in product(*(range(b + 1) for b in bound)):
        try:
            s = seq_from_multiplicities(rep.quiver, vec)
        except AdmseqError:
            continue
        if apply_sequence(rep, s).is_zero():
            killing.append((vec, s))
    minima = [
        (vec, s)
        for vec, s in killing
        if all(all(a <= b for a, b in zip(vec, other)) for other, _ in killing)
    ]
    if len(minima) != 1:
        raise AdmseqError("shortest annihilating sequence is not unique")
    return minima[0][1]


def join_annihilators(seqs):
    """Lattice join of annihilating sequences: the shortest annihilator
    of a direct sum, given the summand answers."""
    if not seqs:
        raise AdmseqError("need at least one sequence")
    out = seqs[0]
    for s in seqs[1:]:
        out = seqmod.join(out, s)
    return out


def direct_sum(reps):
    """Blockwise direct sum of representations on the same quiver."""
    if not reps:
        raise AdmseqError("need at least one representation")
    q = reps[0].quiver
    if any(r.quiver != q for r in reps):
        raise AdmseqError("representations live on different quivers")
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(q.n))
    maps = []
    for i, (s, e) in enumerate(q.arrows):
        rows, cols = dims[e - 1], dims[s - 1]
        block = [[Fraction(0)] * cols for _ in range(rows)]
        ro = co = 0
        for r in reps:
            br, bc = r.dims[e - 1], r.dims[s - 1]
            for a in range(br):
                for b in range(bc):
                    block[ro + a][co + b] = r.maps[i][a][b]
            ro += br
            co += bc
        maps.append(block)
    return Representation(q, dims, maps)


def _fraction_to_str(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rep_to_dict(rep):
    from .graphs import quiver_to_dict

    return {
        "quiver": quiver_to_dict(rep.quiver),
        "dims": list(rep.dims),
        "maps": [
            {
                "arrow": i,
                "matrix": [[_fraction_to_str(x) for x in row] for row in m],
            }
            for i, m in enumerate(rep.maps)
        ],
    }


def rep_from_dict(data):
    from .graphs import quiver_from_dict

    q = quiver_from_dict(data["quiver"])
    dims = data["dims"]
    maps = [tuple(() for _ in range(dims[e - 1])) for s, e in q.arrows]
    for entry in data.get("maps", []):
        maps[entry["arrow"]] = [
            [Fraction(str(x)) for x in row] for row in entry["matrix"]
        ]
    return Representation(q, dims, maps)


def load_rep(path):
    with open(path) as fh:
        return rep_from_dict(json.load(fh))
