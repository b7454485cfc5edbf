"""Exact convex-hull combinatorics for small full-dimensional point sets."""

from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd
from typing import Sequence

from .exact_arith import ResourceError, affine_rank, det
from .lp import convex_combination
from .pointset import PointSet
from .structures import BoolMatrix, Graph

FACET_DIM_CAP = 8
LATTICE_VERTEX_CAP = 24
SKELETON_VERTEX_CAP = 128


class NotFullDimensionalError(ValueError):
    def __init__(self, affine_rank, dim):
        super().__init__(f"point set has affine rank {affine_rank}, expected {dim}")
        self.affine_rank = affine_rank


class NotExtremeError(ValueError):
    def __init__(self, witness):
        super().__init__(f"point {witness} is not a vertex of the convex hull")
        self.witness = witness


@dataclass(frozen=True)
class Facet:
    """Facet ``normal . x <= offset``; tight exactly on ``vertex_set``."""

    normal: tuple
    offset: int
    vertex_set: tuple

    @property
    def mask(self):
        return sum(1 << i for i in self.vertex_set)


@dataclass(frozen=True)
class IncidenceStructure:
    point_set: PointSet
    facets: tuple

    @property
    def n_vertices(self):
        return len(self.point_set)

    @property
    def incidence(self):
        """Vertex-by-facet 0/1 rows, 1 where the vertex lies on the facet."""
        return [
            [int(i in f.vertex_set) for f in self.facets] for i in range(self.n_vertices)
        ]

    def facet_masks(self):
        return [f.mask for f in self.facets]


@dataclass(frozen=True)
class FaceLattice:
    """Proper nonempty faces as (sorted vertex tuple, dimension) pairs."""

    faces: tuple

    def vertex_sets(self):
        return {frozenset(v) for v, _ in self.faces}

    def f_vector(self):
        counts = {}
        for _, k in self.faces:
            counts[k] = counts.get(k, 0) + 1
        return [counts[k] for k in sorted(counts)]


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _cross(vectors: Sequence[Sequence[int]]) -> list:
    """Generalised cross product of k vectors in Z^(k+1): orthogonal to all of them."""
    k1 = len(vectors) + 1
    out = []
    for col in range(k1):
        minor = [[row[j] for j in range(k1) if j != col] for row in vectors]
        out.append((-1) ** col * det(minor))
    return out


def _primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return [x // g for x in v] if g > 1 else list(v)


def extreme_points(x_set: PointSet) -> PointSet:
    """Keep the points that are not convex combinations of the others (exact LP)."""
    pts = x_set.points
    keep = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        if convex_combination(p, others) is None:
            keep.append(p)
    return PointSet(x_set.dim, tuple(keep))


def _check_full_dim(pts, d, cap):
    if d > cap:
        raise ResourceError(f"facet enumeration capped at dimension {cap}, got {d}")
    r = affine_rank(pts)
    if r != d:
        raise NotFullDimensionalError(r, d)


def _structure(x_set, raw):
    """Build a canonically sorted IncidenceStructure and verify every point is a vertex."""
    facets = sorted(
        (Facet(tuple(a), b, tuple(sorted(vs))) for a, b, vs in raw),
        key=lambda f: (f.vertex_set, f.normal),
    )
    masks = [f.mask for f in facets]
    for i, p in enumerate(x_set.points):
        meet = -1
        for m in masks:
            if m >> i & 1:
                meet &= m
        if meet != 1 << i:
            raise NotExtremeError(p)
    return IncidenceStructure(x_set, tuple(facets))


def facets_bruteforce(x_set: PointSet, cap: int = FACET_DIM_CAP) -> IncidenceStructure:
    """Facets by testing the hyperplane through every affinely independent d-subset."""
    pts = x_set.points
    d = x_set.dim
    _check_full_dim(pts, d, cap)
    found = {}
    for sub in combinations(range(len(pts)), d):
        base = pts[sub[0]]
        diffs = [[a - b for a, b in zip(pts[j], base)] for j in sub[1:]]
        normal = _cross(diffs) if d > 1 else [1]
        if not any(normal):
            continue
        off = _dot(normal, base)
        side = [_dot(normal, p) - off for p in pts]
        if all(s <= 0 for s in side):
            pass
        elif all(s >= 0 for s in side):
            normal, off = [-x for x in normal], -off
        else:
            continue
        prim = _primitive(normal + [off])
        key = tuple(prim)
        if key not in found:
            found[key] = [i for i, s in enumerate(side) if s == 0]
    raw = [(k[:-1], k[-1], vs) for k, vs in found.items()]
    return _structure(x_set, raw)


def _facets_double_description(pts, d):
    # Facets are the extreme rays r = (a, b) of {r : a.x_i - b <= 0 for all i}.
    H = [tuple(p) + (-1,) for p in pts]
    init = []
    for i in range(len(pts)):
        if affine_rank([pts[j] for j in init + [i]]) == len(init):
            init.append(i)
            if len(init) == d + 1:
                break
    rays = []
    for j in init:
        r = _cross([H[i] for i in init if i != j])
        if _dot(H[j], r) > 0:
            r = [-x for x in r]
        zmask = sum(1 << i for i in init if i != j)
        rays.append((_primitive(r), zmask))

    need = d - 1
    chosen = set(init)
    for idx in range(len(pts)):
        if idx in chosen:
            continue
        h = H[idx]
        bit = 1 << idx
        pos, neg, nxt = [], [], []
        for r, z in rays:
            v = _dot(h, r)
            if v > 0:
                pos.append((r, z, v))
            elif v < 0:
                neg.append((r, z, v))
                nxt.append((r, z))
            else:
                nxt.append((r, z | bit))
        all_z = [z for _, z in rays]
        for rp, zp, vp in pos:
            for rn, zn, vn in neg:
                z = zp & zn
                if z.bit_count() < need:
                    continue
                if any((z & w) == z for w in all_z if w != zp and w != zn):
                    continue
                r = [vp * a - vn * b for a, b in zip(rn, rp)]
                nxt.append((_primitive(r), z | bit))
        rays = nxt
    out = []
    for r, z in rays:
        out.append((r[:-1], r[-1], [i for i in range(len(pts)) if z >> i & 1]))
    return out


def facets(x_set: PointSet, cap: int = FACET_DIM_CAP) -> IncidenceStructure:
    """Exact facet list of conv X by the double description method.

    Input must be full-dimensional and consist of vertices only; a
    ``NotFullDimensionalError`` carries the actual affine rank and a
    ``NotExtremeError`` names a non-vertex point.
    """
    pts = x_set.points
    _check_full_dim(pts, x_set.dim, cap)
    return _structure(x_set, _facets_double_description(pts, x_set.dim))


def nonincidence_matrix(inc: IncidenceStructure) -> BoolMatrix:
    return BoolMatrix.from_rows([[1 - v for v in row] for row in inc.incidence])


def is_simplicial(inc: IncidenceStructure) -> bool:
    d = inc.point_set.dim
    return all(len(f.vertex_set) == d for f in inc.facets)


def _check_cap(inc, cap):
    if inc.n_vertices > cap:
        raise ResourceError(f"{inc.n_vertices} vertices exceeds cap {cap}")


def face_lattice(inc: IncidenceStructure, cap: int = LATTICE_VERTEX_CAP) -> FaceLattice:
    """All proper nonempty faces: closure of the facets under intersection."""
    _check_cap(inc, cap)
    facet_masks = inc.facet_masks()
    faces = set(facet_masks)
    frontier = list(faces)
    while frontier:
        new = []
        for f in frontier:
            for g in facet_masks:
                m = f & g
                if m and m not in faces:
                    faces.add(m)
                    new.append(m)
        frontier = new
    faces.update(1 << i for i in range(inc.n_vertices))
    pts = inc.point_set.points
    out = []
    for m in faces:
        vs = tuple(i for i in range(inc.n_vertices) if m >> i & 1)
        out.append((vs, affine_rank([pts[i] for i in vs])))
    out.sort(key=lambda fv: (fv[1], fv[0]))
    return FaceLattice(tuple(out))


def skeleton_graph(inc: IncidenceStructure, cap: int = SKELETON_VERTEX_CAP) -> Graph:
    """Vertex-edge graph: u, v adjacent iff the smallest face containing both is {u, v}.

    The smallest face containing a vertex pair is the intersection of the facets
    through both, so this needs no full face lattice.
    """
    _check_cap(inc, cap)
    n = inc.n_vertices
    masks = inc.facet_masks()
    d = inc.point_set.dim
    edges = []
    for u, v in combinations(range(n), 2):
        pair = (1 << u) | (1 << v)
        meet, count = -1, 0
        for m in masks:
            if m & pair == pair:
                meet &= m
                count += 1
        if count >= d - 1 and meet == pair:
            edges.append((u, v))
    return Graph(n, frozenset(edges))


def neighborliness(inc: IncidenceStructure, cap: int = LATTICE_VERTEX_CAP) -> int:
    """Largest k such that every k-subset of vertices spans a proper face."""
    lat = face_lattice(inc, cap)
    n = inc.n_vertices
    by_size = {}
    for vs, _ in lat.faces:
        by_size[len(vs)] = by_size.get(len(vs), 0) + 1
    k = 0
    while k + 1 < n and by_size.get(k + 1, 0) == comb(n, k + 1):
        k += 1
    return k
