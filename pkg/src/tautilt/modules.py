"""Representations of a monomial bound quiver algebra and their functors.

A representation assigns a rational vector space to every vertex and a
matrix of shape dims[target] x dims[source] to every arrow; a path acts by
composing its arrow matrices in order, so a forbidden path must act as the
zero matrix.  The AR translate is computed as the kernel of the Nakayama
functor applied to a minimal projective presentation, and its inverse by
dualizing into the opposite algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, Path, opposite_algebra
from .errors import InvariantViolation, PreconditionError
from .linalg import (QMatrix, Q, det, grid_points, hstack, invert, kernel_basis,
                     rank, row_space_basis, rref, solve, vstack)


class Representation:
    """Immutable quiver representation; relation matrices are checked at build."""

    __slots__ = ("algebra", "dims", "arrow_maps", "total_dim")

    def __init__(self, algebra: Algebra, dims: Sequence[int],
                 arrow_maps: Sequence[QMatrix], check: bool = True):
        dims = tuple(int(d) for d in dims)
        arrow_maps = tuple(arrow_maps)
        q = algebra.quiver
        if len(dims) != len(q.vertices) or any(d < 0 for d in dims):
            raise ValueError("bad dimension vector")
        if len(arrow_maps) != len(q.arrows):
            raise ValueError("one matrix per arrow required")
        for a, m in zip(q.arrows, arrow_maps):
            want = (dims[q.vertex_pos[a.target]], dims[q.vertex_pos[a.source]])
            if (m.rows, m.cols) != want:
                raise ValueError(f"arrow {a.name!r}: matrix is {m.rows}x{m.cols}, expected {want}")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "arrow_maps", arrow_maps)
        object.__setattr__(self, "total_dim", sum(dims))
        if check:
            _check_relations(self)

    def __setattr__(self, name, value):
        raise AttributeError("Representation is immutable")

    def dim_at(self, v: str) -> int:
        return self.dims[self.algebra.quiver.vertex_pos[v]]

    def map_of(self, arrow_name: str) -> QMatrix:
        return self.arrow_maps[self.algebra.quiver.arrow_pos[arrow_name]]

    def __repr__(self) -> str:
        return f"Representation(dims={self.dims})"


def _check_relations(rep: Representation) -> None:
    for rel in rep.algebra.relations:
        m = path_matrix(rep, Path(rep.algebra.quiver.arrow_by_name[rel[0]].source, rel,
                                  rep.algebra.quiver.arrow_by_name[rel[-1]].target))
        if not m.is_zero():
            raise InvariantViolation(f"relation {rel!r} not satisfied")


def path_matrix(rep: Representation, path: Path) -> QMatrix:
    """Action of a path: the composite M_{a_k} ... M_{a_1}."""
    q = rep.algebra.quiver
    m = QMatrix.identity(rep.dims[q.vertex_pos[path.source]])
    for name in path.arrows:
        m = rep.map_of(name) * m
    return m


class Morphism:
    """A vertex-indexed family of blocks intertwining the arrow actions."""

    __slots__ = ("source", "target", "blocks")

    def __init__(self, source: Representation, target: Representation,
                 blocks: Sequence[QMatrix], check: bool = True):
        blocks = tuple(blocks)
        q = source.algebra.quiver
        if source.algebra != target.algebra:
            raise PreconditionError("morphism endpoints live over different algebras")
        if len(blocks) != len(q.vertices):
            raise ValueError("one block per vertex required")
        for i, b in enumerate(blocks):
            if (b.rows, b.cols) != (target.dims[i], source.dims[i]):
                raise ValueError(f"block {i}: shape {(b.rows, b.cols)}")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "blocks", blocks)
        if check:
            for a in q.arrows:
                s, t = q.vertex_pos[a.source], q.vertex_pos[a.target]
                if target.map_of(a.name) * blocks[s] != blocks[t] * source.map_of(a.name):
                    raise InvariantViolation(f"blocks do not intertwine arrow {a.name!r}")

    def __setattr__(self, name, value):
        raise AttributeError("Morphism is immutable")

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def flat(self) -> tuple[Fraction, ...]:
        return tuple(e for b in self.blocks for e in b.entries)

    def __repr__(self) -> str:
        return f"Morphism({self.source.dims} -> {self.target.dims})"


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    if inner.target.dims != outer.source.dims:
        raise ValueError("morphisms not composable")
    return Morphism(inner.source, outer.target,
                    [o * i for o, i in zip(outer.blocks, inner.blocks)], check=False)


def identity_morphism(rep: Representation) -> Morphism:
    return Morphism(rep, rep, [QMatrix.identity(d) for d in rep.dims], check=False)


def morphism_add(f: Morphism, g: Morphism) -> Morphism:
    return Morphism(f.source, f.target, [a + b for a, b in zip(f.blocks, g.blocks)], check=False)


def morphism_scale(f: Morphism, c) -> Morphism:
    return Morphism(f.source, f.target, [b.scale(c) for b in f.blocks], check=False)


# ---------------------------------------------------------------------------
# standard modules

def zero_rep(algebra: Algebra) -> Representation:
    q = algebra.quiver
    return Representation(algebra, [0] * len(q.vertices),
                          [QMatrix.zeros(0, 0) for _ in q.arrows], check=False)


def simple(algebra: Algebra, v: str) -> Representation:
    q = algebra.quiver
    if v not in q.vertex_pos:
        raise PreconditionError(f"unknown vertex {v!r}")
    dims = [1 if w == v else 0 for w in q.vertices]
    maps = [QMatrix.zeros(dims[q.vertex_pos[a.target]], dims[q.vertex_pos[a.source]])
            for a in q.arrows]
    return Representation(algebra, dims, maps)


def projective(algebra: Algebra, v: str) -> Representation:
    """Fiber at w is spanned by the basis paths v -> w; arrows append on the right."""
    q = algebra.quiver
    if v not in q.vertex_pos:
        raise PreconditionError(f"unknown vertex {v!r}")
    dims = [len(algebra.paths_between(v, w)) for w in q.vertices]
    maps = []
    for a in q.arrows:
        src_paths = algebra.paths_between(v, a.source)
        tgt_rows = dims[q.vertex_pos[a.target]]
        m = [[Q(0)] * len(src_paths) for _ in range(tgt_rows)]
        for c, p in enumerate(src_paths):
            pos = algebra.path_position(v, a.target, p.arrows + (a.name,))
            if pos is not None:
                m[pos][c] = Q(1)
        maps.append(QMatrix.from_rows(m, cols=len(src_paths)))
    return Representation(algebra, dims, maps)


def injective(algebra: Algebra, v: str) -> Representation:
    """Fiber at w is spanned by the basis paths w -> v; arrows strip on the left."""
    q = algebra.quiver
    if v not in q.vertex_pos:
        raise PreconditionError(f"unknown vertex {v!r}")
    dims = [len(algebra.paths_between(w, v)) for w in q.vertices]
    maps = []
    for a in q.arrows:
        src_paths = algebra.paths_between(a.source, v)
        tgt_paths = algebra.paths_between(a.target, v)
        m = [[Q(0)] * len(src_paths) for _ in range(len(tgt_paths))]
        for c, p in enumerate(src_paths):
            if p.arrows[:1] == (a.name,):
                pos = algebra.path_position(a.target, v, p.arrows[1:])
                if pos is not None:
                    m[pos][c] = Q(1)
        maps.append(QMatrix.from_rows(m, cols=len(src_paths)))
    return Representation(algebra, dims, maps)


def direct_sum(algebra: Algebra, reps: Sequence[Representation]) -> tuple[Representation, list[list[int]]]:
    """Block sum; also returns offsets[s][vertex_pos] of each summand's fiber."""
    q = algebra.quiver
    dims = [0] * len(q.vertices)
    offsets: list[list[int]] = []
    for r in reps:
        offsets.append(list(dims))
        dims = [d + rd for d, rd in zip(dims, r.dims)]
    maps = []
    for ai, a in enumerate(q.arrows):
        s, t = q.vertex_pos[a.source], q.vertex_pos[a.target]
        rows = [[Q(0)] * dims[s] for _ in range(dims[t])]
        for k, r in enumerate(reps):
            blk = r.arrow_maps[ai]
            ro, co = offsets[k][t], offsets[k][s]
            for i in range(blk.rows):
                rows[ro + i][co:co + blk.cols] = list(blk.row(i))
        maps.append(QMatrix.from_rows(rows, cols=dims[s]))
    return Representation(algebra, dims, maps, check=False), offsets


# ---------------------------------------------------------------------------
# hom spaces

def hom_basis(x: Representation, y: Representation) -> list[Morphism]:
    """Echelonized basis of the intertwiner space Hom(x, y)."""
    if x.algebra != y.algebra:
        raise PreconditionError("hom between representations over different algebras")
    q = x.algebra.quiver
    nv = len(q.vertices)
    offs = [0] * nv
    total = 0
    for i in range(nv):
        offs[i] = total
        total += y.dims[i] * x.dims[i]
    if total == 0:
        return []
    rows: list[list[Fraction]] = []
    for ai, a in enumerate(q.arrows):
        s, t = q.vertex_pos[a.source], q.vertex_pos[a.target]
        X, Y = x.arrow_maps[ai], y.arrow_maps[ai]
        for i in range(y.dims[t]):
            for j in range(x.dims[s]):
                row = [Q(0)] * total
                # (Y f_s - f_t X)[i, j] = 0
                for c in range(y.dims[s]):
                    if Y.entry(i, c) != 0:
                        row[offs[s] + c * x.dims[s] + j] += Y.entry(i, c)
                for r in range(x.dims[t]):
                    if X.entry(r, j) != 0:
                        row[offs[t] + i * x.dims[t] + r] -= X.entry(r, j)
                if any(e != 0 for e in row):
                    rows.append(row)
    if rows:
        basis = kernel_basis(QMatrix.from_rows(rows, cols=total))
    else:
        basis = QMatrix.identity(total)
    out = []
    for k in range(basis.cols):
        vec = basis.col(k)
        blocks = []
        for i in range(nv):
            seg = vec[offs[i]: offs[i] + y.dims[i] * x.dims[i]]
            blocks.append(QMatrix(y.dims[i], x.dims[i], seg))
        out.append(Morphism(x, y, blocks))
    return out


def hom_dim(x: Representation, y: Representation) -> int:
    return len(hom_basis(x, y))


# ---------------------------------------------------------------------------
# subobjects and quotients

def sub_representation(rep: Representation, spans: Sequence[Sequence[Sequence[Fraction | int]]]
                       ) -> tuple[Representation, Morphism]:
    """Subrepresentation generated by per-vertex spanning vectors.

    Spans are closed under the arrow action; returns the subobject with a
    canonical echelon basis and its inclusion.
    """
    q = rep.algebra.quiver
    nv = len(q.vertices)
    bases: list[QMatrix] = []
    for i in range(nv):
        vecs = [list(v) for v in spans[i]]
        m = QMatrix.from_rows(vecs, cols=rep.dims[i]) if vecs else QMatrix.zeros(0, rep.dims[i])
        bases.append(row_space_basis(m))
    changed = True
    while changed:
        changed = False
        for ai, a in enumerate(q.arrows):
            s, t = q.vertex_pos[a.source], q.vertex_pos[a.target]
            if bases[s].rows == 0:
                continue
            imaged = bases[s] * rep.arrow_maps[ai].transpose()
            stacked = row_space_basis(vstack([bases[t], imaged]))
            if stacked.rows != bases[t].rows:
                bases[t] = stacked
                changed = True
    dims = [b.rows for b in bases]
    incl_blocks = [b.transpose() for b in bases]
    maps = []
    for ai, a in enumerate(q.arrows):
        s, t = q.vertex_pos[a.source], q.vertex_pos[a.target]
        cols = []
        for k in range(dims[s]):
            img = rep.arrow_maps[ai].apply(incl_blocks[s].col(k))
            coords = solve(incl_blocks[t], img)
            if coords is None:
                raise InvariantViolation("span not closed under arrow action")
            cols.append(coords)
        maps.append(QMatrix(dims[t], dims[s],
                            [cols[j][i] for i in range(dims[t]) for j in range(dims[s])]))
    sub = Representation(rep.algebra, dims, maps)
    return sub, Morphism(sub, rep, incl_blocks)


def kernel_of(f: Morphism) -> tuple[Representation, Morphism]:
    spans = []
    for i, b in enumerate(f.blocks):
        k = kernel_basis(b)
        spans.append([k.col(j) for j in range(k.cols)])
    return sub_representation(f.source, spans)


def image_of(f: Morphism) -> tuple[Representation, Morphism]:
    spans = []
    for b in f.blocks:
        spans.append([b.col(j) for j in range(b.cols)])
    return sub_representation(f.target, spans)


def quotient_by(rep: Representation, inclusion: Morphism) -> tuple[Representation, Morphism]:
    """Quotient of rep by the image of an injective inclusion, with the projection."""
    q = rep.algebra.quiver
    nv = len(q.vertices)
    projections = []
    sections = []
    dims = []
    for i in range(nv):
        C = inclusion.blocks[i]
        d, k = C.rows, C.cols
        aug = hstack([C, QMatrix.identity(d)])
        _, pivots = rref(aug)
        comp = [p - k for p in pivots if p >= k]
        dims.append(len(comp))
        E = QMatrix(d, len(comp),
                    [1 if r == comp[j] else 0 for r in range(d) for j in range(len(comp))])
        T = hstack([C, E])
        Tinv = invert(T) if d else QMatrix.zeros(0, 0)
        proj = QMatrix.from_rows([list(Tinv.row(r)) for r in range(k, d)], cols=d)
        projections.append(proj)
        sections.append(E)
    maps = []
    for ai, a in enumerate(q.arrows):
        s, t = q.vertex_pos[a.source], q.vertex_pos[a.target]
        maps.append(projections[t] * rep.arrow_maps[ai] * sections[s])
    quot = Representation(rep.algebra, dims, maps)
    return quot, Morphism(rep, quot, projections)


# ---------------------------------------------------------------------------
# structural functors

def radical(rep: Representation) -> tuple[Representation, Morphism]:
    """The arrow-ideal submodule: at each vertex, the sum of incoming images."""
    q = rep.algebra.quiver
    spans: list[list] = [[] for _ in q.vertices]
    for ai, a in enumerate(q.arrows):
        t = q.vertex_pos[a.target]
        m = rep.arrow_maps[ai]
        spans[t].extend(m.col(j) for j in range(m.cols))
    return sub_representation(rep, spans)


def top(rep: Representation) -> tuple[Representation, Morphism]:
    rad, incl = radical(rep)
    return quotient_by(rep, incl)


def socle(rep: Representation) -> tuple[Representation, Morphism]:
    """Largest semisimple submodule: vectors killed by every outgoing arrow."""
    q = rep.algebra.quiver
    spans = []
    for i, v in enumerate(q.vertices):
        outgoing = [rep.map_of(a.name) for a in q.arrows_from[v]]
        if not outgoing:
            spans.append([tuple(1 if r == j else 0 for r in range(rep.dims[i]))
                          for j in range(rep.dims[i])])
            continue
        k = kernel_basis(vstack(outgoing))
        spans.append([k.col(j) for j in range(k.cols)])
    return sub_representation(rep, spans)


def _top_generators(rep: Representation) -> list[tuple[str, int]]:
    """Standard-basis lifts of a basis of top(rep): pairs (vertex, coordinate)."""
    q = rep.algebra.quiver
    rad, incl = radical(rep)
    gens = []
    for i, v in enumerate(q.vertices):
        C = incl.blocks[i]
        aug = hstack([C, QMatrix.identity(rep.dims[i])])
        _, pivots = rref(aug)
        for p in pivots:
            if p >= C.cols:
                gens.append((v, p - C.cols))
    return gens


def projective_cover(rep: Representation) -> tuple[Representation, Morphism, tuple[str, ...], list[list[int]]]:
    """Minimal projective cover P -> rep.

    Returns (P, cover, summand vertices, fiber offsets of the summands).
    """
    if rep.total_dim == 0:
        raise PreconditionError("the zero module has no projective cover")
    algebra = rep.algebra
    q = algebra.quiver
    gens = _top_generators(rep)
    verts = tuple(v for v, _ in gens)
    summands = [projective(algebra, v) for v in verts]
    P, offsets = direct_sum(algebra, summands)
    blocks = []
    for i, w in enumerate(q.vertices):
        cols: list[tuple[Fraction, ...]] = []
        for (v, coord) in gens:
            for p in algebra.paths_between(v, w):
                m = path_matrix(rep, p)
                cols.append(m.col(coord))
        blocks.append(QMatrix(rep.dims[i], len(cols),
                              [cols[j][r] for r in range(rep.dims[i]) for j in range(len(cols))])
                      if cols else QMatrix.zeros(rep.dims[i], 0))
    cover = Morphism(P, rep, blocks)
    for i in range(len(q.vertices)):
        if rank(cover.blocks[i]) != rep.dims[i]:
            raise InvariantViolation("projective cover is not surjective")
    return P, cover, verts, offsets


def syzygy(rep: Representation) -> tuple[Representation, Morphism, Representation, Morphism]:
    """Kernel of the projective cover: (omega, inclusion into P, P, cover)."""
    P, cover, _, _ = projective_cover(rep)
    omega, incl = kernel_of(cover)
    return omega, incl, P, cover


@dataclass(frozen=True)
class MinPresentation:
    """Minimal presentation P1 -> P0 -> M -> 0 with path-combination entries.

    entries[i][j] expresses the component P(u_j) -> P(v_i) as a rational
    combination of basis paths v_i -> u_j.
    """
    p0_vertices: tuple[str, ...]
    p1_vertices: tuple[str, ...]
    p0: Representation
    p1: Representation
    map: Morphism
    entries: tuple[tuple[dict, ...], ...]


def min_presentation(rep: Representation) -> MinPresentation:
    if rep.total_dim == 0:
        raise PreconditionError("the zero module has no presentation")
    algebra = rep.algebra
    q = algebra.quiver
    P0, cover, verts0, offs0 = projective_cover(rep)
    omega, incl = kernel_of(cover)
    if omega.total_dim == 0:
        p1 = zero_rep(algebra)
        d1 = Morphism(p1, P0, [QMatrix.zeros(d, 0) for d in P0.dims], check=False)
        return MinPresentation(verts0, (), P0, p1, d1, ())
    P1, cover1, verts1, offs1 = projective_cover(omega)
    d1 = compose(incl, cover1)
    entries = []
    for i, v in enumerate(verts0):
        row = []
        for j, u in enumerate(verts1):
            upos = q.vertex_pos[u]
            gen_col = offs1[j][upos] + 0  # e_u is the first basis path u -> u
            blk = d1.blocks[upos]
            paths = algebra.paths_between(v, u)
            combo = {}
            for k, p in enumerate(paths):
                c = blk.entry(offs0[i][upos] + k, gen_col)
                if c != 0:
                    combo[p] = c
            row.append(combo)
        entries.append(tuple(row))
    return MinPresentation(verts0, verts1, P0, P1, d1, tuple(entries))


def injective_sum(algebra: Algebra, verts: Sequence[str]) -> tuple[Representation, list[list[int]]]:
    reps = [injective(algebra, v) for v in verts]
    return direct_sum(algebra, reps)


def nakayama_of_presentation(pres: MinPresentation, algebra: Algebra) -> Morphism:
    """Transport a map between projectives to the corresponding injectives.

    A path p: v -> u acting as P(u) -> P(v) by left-appending becomes the
    map I(u) -> I(v) that strips p off the tail of a basis path when it ends
    with p and kills it otherwise.
    """
    q = algebra.quiver
    I1, offs1 = injective_sum(algebra, pres.p1_vertices)
    I0, offs0 = injective_sum(algebra, pres.p0_vertices)
    blocks = []
    for widx, w in enumerate(q.vertices):
        rows = [[Q(0)] * I1.dims[widx] for _ in range(I0.dims[widx])]
        for i, v in enumerate(pres.p0_vertices):
            for j, u in enumerate(pres.p1_vertices):
                combo = pres.entries[i][j]
                if not combo:
                    continue
                v_paths = algebra.paths_between(w, v)
                for p, c in combo.items():
                    for sidx, s in enumerate(v_paths):
                        tail = s.arrows + p.arrows
                        tpos = algebra.path_position(w, u, tail)
                        if tpos is not None:
                            rows[offs0[i][widx] + sidx][offs1[j][widx] + tpos] += c
        blocks.append(QMatrix.from_rows(rows, cols=I1.dims[widx]))
    return Morphism(I1, I0, blocks)


def tau(rep: Representation) -> Representation:
    """Auslander-Reiten translate; zero on projectives."""
    if rep.total_dim == 0:
        return zero_rep(rep.algebra)
    pres = min_presentation(rep)
    if not pres.p1_vertices:
        return zero_rep(rep.algebra)
    nu = nakayama_of_presentation(pres, rep.algebra)
    ker, _ = kernel_of(nu)
    return ker


def dual_representation(rep: Representation) -> Representation:
    """The vector-space dual, a representation of the opposite algebra."""
    aop = opposite_algebra(rep.algebra)
    maps = [rep.map_of(a.name).transpose() for a in aop.quiver.arrows]
    return Representation(aop, rep.dims, maps)


def _with_algebra(rep: Representation, algebra: Algebra) -> Representation:
    maps = [rep.map_of(a.name) for a in algebra.quiver.arrows]
    return Representation(algebra, rep.dims, maps)


def tau_inverse(rep: Representation) -> Representation:
    """Inverse AR translate; zero on injectives.  Computed dually over the opposite."""
    if rep.total_dim == 0:
        return zero_rep(rep.algebra)
    t = tau(dual_representation(rep))
    return _with_algebra(dual_representation(t), rep.algebra)


def extend_by_zero(rep: Representation, target: Algebra) -> Representation:
    """View a module over a vertex- and arrow-subalgebra as one over `target`.

    Fibers over vertices the source algebra does not have are zero, so every
    relation involving new arrows holds trivially.
    """
    src = rep.algebra.quiver
    tq = target.quiver
    if not set(src.vertices) <= set(tq.vertices):
        raise PreconditionError("target algebra does not contain the source vertices")
    dims = [rep.dims[src.vertex_pos[v]] if v in src.vertex_pos else 0 for v in tq.vertices]
    maps = []
    for a in tq.arrows:
        if a.name in src.arrow_by_name:
            old = src.arrow_by_name[a.name]
            if (old.source, old.target) != (a.source, a.target):
                raise PreconditionError(f"arrow {a.name!r} changed endpoints")
            maps.append(rep.map_of(a.name))
        else:
            maps.append(QMatrix.zeros(dims[tq.vertex_pos[a.target]],
                                      dims[tq.vertex_pos[a.source]]))
    return Representation(target, dims, maps)


# ---------------------------------------------------------------------------
# homological invariants

def ext1(m: Representation, n: Representation) -> int:
    """dim Ext^1(m, n) via 0 -> omega -> P0 -> m -> 0."""
    if m.algebra != n.algebra:
        raise PreconditionError("ext between representations over different algebras")
    if m.total_dim == 0 or n.total_dim == 0:
        return 0
    omega, incl, P0, _ = syzygy(m)
    if omega.total_dim == 0:
        return 0
    target_basis = hom_basis(omega, n)
    if not target_basis:
        return 0
    restricted = [compose(phi, incl).flat() for phi in hom_basis(P0, n)]
    if not restricted:
        return len(target_basis)
    mat = QMatrix.from_rows(restricted, cols=len(restricted[0]))
    return len(target_basis) - rank(mat)


def pd_at_most_one(rep: Representation) -> bool:
    """True iff the first syzygy is projective (or the module is zero)."""
    if rep.total_dim == 0:
        return True
    omega, _, _, _ = syzygy(rep)
    if omega.total_dim == 0:
        return True
    omega2, _, _, _ = syzygy(omega)
    return omega2.total_dim == 0


# ---------------------------------------------------------------------------
# isomorphism and indecomposability

def iso(x: Representation, y: Representation) -> bool:
    """Exact isomorphism test by scanning the determinant of a generic hom.

    The determinant of sum(c_i f_i) over a hom basis (f_i) is a polynomial
    of degree at most the total dimension in each c_i, so it vanishes
    identically iff it vanishes on the full integer grid of that size.
    """
    if x.algebra != y.algebra:
        raise PreconditionError("iso between representations over different algebras")
    if x.dims != y.dims:
        return False
    if x.total_dim == 0:
        return True
    fs = hom_basis(x, y)
    if not fs:
        return False
    bound = x.total_dim
    nz = [i for i, d in enumerate(x.dims) if d > 0]
    for coeffs in grid_points(len(fs), bound):
        ok = True
        for i in nz:
            m = fs[0].blocks[i].scale(coeffs[0])
            for k in range(1, len(fs)):
                if coeffs[k]:
                    m = m + fs[k].blocks[i].scale(coeffs[k])
            if det(m) == 0:
                ok = False
                break
        if ok:
            return True
    return False


def end_reduced_dim(rep: Representation) -> int:
    """dim End/rad End, via the radical of the trace form (characteristic zero)."""
    if rep.total_dim == 0:
        return 0
    E = hom_basis(rep, rep)
    gram = []
    for f in E:
        row = []
        for g in E:
            tr = Q(0)
            for bf, bg in zip(f.blocks, g.blocks):
                prod = bf * bg
                tr += sum((prod.entry(i, i) for i in range(prod.rows)), Q(0))
            row.append(tr)
        gram.append(row)
    return rank(QMatrix.from_rows(gram, cols=len(E)))


def is_indecomposable(rep: Representation) -> bool:
    return rep.total_dim > 0 and end_reduced_dim(rep) == 1


def _total_matrix(f: Morphism) -> QMatrix:
    """Block-diagonal matrix of an endomorphism acting on the sum of all fibers."""
    n = f.source.total_dim
    rows = [[Q(0)] * n for _ in range(n)]
    off = 0
    for b in f.blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                rows[off + i][off + j] = b.entry(i, j)
        off += b.rows
    return QMatrix.from_rows(rows, cols=n)


def _minimal_polynomial(m: QMatrix) -> list[Fraction]:
    """Monic minimal polynomial coefficients, lowest degree first."""
    n = m.rows
    flats = [QMatrix.identity(n).entries]
    power = QMatrix.identity(n)
    while True:
        power = power * m
        cols = QMatrix(n * n, len(flats),
                       [flats[j][i] for i in range(n * n) for j in range(len(flats))])
        sol = solve(cols, power.entries)
        if sol is not None:
            return [-c for c in sol] + [Q(1)]
        flats.append(power.entries)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """All rational roots of a polynomial with rational coefficients."""
    from math import lcm
    denom = lcm(*[c.denominator for c in coeffs]) if coeffs else 1
    ints = [int(c * denom) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return []
    roots = set()
    if ints[0] == 0:
        roots.add(Q(0))
        while ints and ints[0] == 0:
            ints.pop(0)
    if len(ints) <= 1:
        return sorted(roots)
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for cand in (Q(p, q), Q(-p, q)):
                val = Q(0)
                for c in reversed(ints):
                    val = val * cand + c
                if val == 0:
                    roots.add(cand)
    return sorted(roots)


def split_indecomposables(rep: Representation) -> list[Representation]:
    """Iterated Fitting decomposition into indecomposable summands.

    Shifted powers (f - r)^N for rational eigenvalues r of endomorphism
    candidates split the module until every piece has local endomorphism
    ring, which is asserted through the trace form.
    """
    if rep.total_dim == 0:
        return []
    E = hom_basis(rep, rep)
    gram_rank = end_reduced_dim(rep)
    if gram_rank == 1:
        return [rep]
    candidates: list[Morphism] = list(E)
    for i in range(len(E)):
        for j in range(len(E)):
            if i != j:
                candidates.append(compose(E[i], E[j]))
    for i in range(len(E)):
        for j in range(i + 1, len(E)):
            candidates.append(morphism_add(E[i], E[j]))
    N = rep.total_dim
    for f in candidates:
        mu = _minimal_polynomial(_total_matrix(f))
        for r in _rational_roots(mu):
            if _is_pure_power(mu, r):
                # the whole module is one generalized eigenspace
                continue
            g = morphism_add(f, morphism_scale(identity_morphism(rep), -r))
            power = g
            for _ in range(N - 1):
                power = compose(power, g)
            ker, _ = kernel_of(power)
            if 0 < ker.total_dim < rep.total_dim:
                img, _ = image_of(power)
                return split_indecomposables(ker) + split_indecomposables(img)
    raise InvariantViolation(
        "endomorphism ring is not local but no Fitting splitting was found")


def _is_pure_power(mu: list[Fraction], r: Fraction) -> bool:
    """True iff mu(t) == (t - r)^deg, by repeated synthetic division."""
    poly = list(mu)
    while len(poly) > 1:
        coeffs = list(reversed(poly))
        quot = []
        acc = Q(0)
        for c in coeffs:
            acc = acc * r + c
            quot.append(acc)
        if quot[-1] != 0:
            return False
        poly = list(reversed(quot[:-1]))
    return True
