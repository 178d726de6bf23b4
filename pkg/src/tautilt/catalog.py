"""The indecomposable catalog of a representation-directed algebra.

The catalog is the closure of the indecomposable projectives under the
inverse AR translate, deduplicated up to isomorphism.  It is complete
exactly for the representation-directed algebras this package targets; the
iteration cap turns anything else into a clean error instead of a loop.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra
from .linalg import QMatrix
from .errors import CapExceededError, InvariantViolation, PreconditionError
from .modules import (Representation, direct_sum, end_reduced_dim, hom_dim, iso,
                      min_presentation, projective, simple, split_indecomposables, tau,
                      tau_inverse, zero_rep)

ModuleRef = tuple[int, ...]
"""A finite multiset of catalog indices, stored sorted."""


def default_catalog_cap(algebra: Algebra) -> int:
    return max(10 * algebra.n_vertices ** 2, 1)


class Catalog:
    """Ordered list of all indecomposables with pairwise tau-Hom tables."""

    def __init__(self, algebra: Algebra, entries: Sequence[Representation], jobs: int = 1):
        self.algebra = algebra
        self.entries = tuple(entries)
        self.size = len(self.entries)
        self.tau_reps = [tau(e) for e in self.entries]
        self.tau_index: list[int | None] = []
        for t in self.tau_reps:
            if t.total_dim == 0:
                self.tau_index.append(None)
            else:
                idx = self.find_index(t)
                if idx is None:
                    raise InvariantViolation("tau of a catalog entry escaped the catalog")
                self.tau_index.append(idx)
        self.hom_tau_zero = self._build_tau_table(jobs)
        self.projective_index = {v: self._required_index(projective(algebra, v))
                                 for v in algebra.quiver.vertices}
        self.simple_index = {v: self._required_index(simple(algebra, v))
                             for v in algebra.quiver.vertices}
        self._g_cache: dict[int, tuple[int, ...]] = {}

    def _required_index(self, rep: Representation) -> int:
        idx = self.find_index(rep)
        if idx is None:
            raise InvariantViolation("standard module missing from catalog")
        return idx

    def _build_tau_table(self, jobs: int) -> list[list[bool]]:
        def row(i: int) -> list[bool]:
            out = []
            for j in range(self.size):
                t = self.tau_reps[j]
                out.append(True if t.total_dim == 0 else hom_dim(self.entries[i], t) == 0)
            return out

        if jobs > 1 and self.size > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                return list(pool.map(row, range(self.size)))
        return [row(i) for i in range(self.size)]

    def find_index(self, rep: Representation) -> int | None:
        for i, e in enumerate(self.entries):
            if e.dims == rep.dims and iso(e, rep):
                return i
        return None

    def compatible(self, i: int, j: int) -> bool:
        return self.hom_tau_zero[i][j] and self.hom_tau_zero[j][i]

    def self_rigid(self, i: int) -> bool:
        return self.hom_tau_zero[i][i]

    def dims_of_ref(self, ref: ModuleRef) -> tuple[int, ...]:
        dims = [0] * self.algebra.n_vertices
        for i in ref:
            for k, d in enumerate(self.entries[i].dims):
                dims[k] += d
        return tuple(dims)

    def support_of_ref(self, ref: ModuleRef) -> frozenset[str]:
        dims = self.dims_of_ref(ref)
        return frozenset(v for v, d in zip(self.algebra.quiver.vertices, dims) if d)

    def rep_of_ref(self, ref: ModuleRef) -> Representation:
        if not ref:
            return zero_rep(self.algebra)
        rep, _ = direct_sum(self.algebra, [self.entries[i] for i in ref])
        return rep

    def g_of_entry(self, i: int) -> tuple[int, ...]:
        """[P0] - [P1] of the minimal presentation, over the vertex basis."""
        cached = self._g_cache.get(i)
        if cached is not None:
            return cached
        pres = min_presentation(self.entries[i])
        pos = self.algebra.quiver.vertex_pos
        g = [0] * self.algebra.n_vertices
        for v in pres.p0_vertices:
            g[pos[v]] += 1
        for v in pres.p1_vertices:
            g[pos[v]] -= 1
        out = tuple(g)
        self._g_cache[i] = out
        return out

    def decompose(self, rep: Representation) -> ModuleRef:
        """Split into indecomposables and resolve each piece to a catalog index."""
        if rep.algebra != self.algebra:
            raise PreconditionError("representation over a different algebra")
        pieces = split_indecomposables(rep)
        out = []
        for p in pieces:
            if end_reduced_dim(p) != 1:
                raise InvariantViolation("summand with non-local endomorphism ring")
            idx = self.find_index(p)
            if idx is None:
                raise InvariantViolation("summand matches no catalog entry")
            out.append(idx)
        ref = tuple(sorted(out))
        if self.dims_of_ref(ref) != rep.dims:
            raise InvariantViolation("decomposition does not preserve dimension vectors")
        return ref

    def dump_lines(self) -> list[str]:
        return [f"{i}: dims {list(e.dims)}" for i, e in enumerate(self.entries)]


def build_catalog(algebra: Algebra, cap: int = 0, jobs: int = 1) -> Catalog:
    """Close the projectives under the inverse AR translate, deduplicating by iso."""
    if cap <= 0:
        cap = default_catalog_cap(algebra)
    entries: list[Representation] = []

    def add(rep: Representation) -> bool:
        for e in entries:
            if e.dims == rep.dims and iso(e, rep):
                return False
        if end_reduced_dim(rep) != 1:
            raise InvariantViolation("non-local endomorphism ring in catalog closure; "
                                     "the base field assumption fails for this algebra")
        entries.append(rep)
        return True

    for v in algebra.quiver.vertices:
        add(projective(algebra, v))
    pending = 0
    iterations = 0
    while pending < len(entries):
        rep = entries[pending]
        pending += 1
        iterations += 1
        if iterations > cap:
            raise CapExceededError(f"not representation-directed at this cap ({cap})")
        t = tau_inverse(rep)
        if t.total_dim:
            add(t)
    order = sorted(range(len(entries)),
                   key=lambda i: (entries[i].total_dim, entries[i].dims, i))
    return Catalog(algebra, [entries[i] for i in order], jobs=jobs)


# ---------------------------------------------------------------------------
# representation serialization

def rep_to_dict(rep: Representation) -> dict:
    q = rep.algebra.quiver
    return {
        "dims": {v: rep.dims[i] for i, v in enumerate(q.vertices)},
        "matrices": {a.name: [[str(rep.map_of(a.name).entry(i, j))
                               for j in range(rep.map_of(a.name).cols)]
                              for i in range(rep.map_of(a.name).rows)]
                     for a in q.arrows},
    }


def rep_from_dict(algebra: Algebra, doc: dict) -> Representation:
    q = algebra.quiver
    dims = [int(doc["dims"][v]) for v in q.vertices]
    maps = []
    for a in q.arrows:
        rows = doc["matrices"][a.name]
        maps.append(QMatrix.from_rows([[Fraction(e) for e in row] for row in rows],
                                      cols=dims[q.vertex_pos[a.source]]))
    return Representation(algebra, dims, maps)


def serialize_rep(rep: Representation) -> str:
    return json.dumps(rep_to_dict(rep), indent=2, sort_keys=True) + "\n"
