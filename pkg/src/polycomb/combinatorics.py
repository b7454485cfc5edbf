"""Clique numbers, rectangle coverings and direct-type decision trees."""

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .exact_arith import ResourceError
from .structures import BoolMatrix, Graph

CLIQUE_VERTEX_CAP = 64
RC_CELL_CAP = 40
FOOLING_CELL_CAP = 64
CLIQUE_ENUM_CAP = 2**20


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- cliques ---------------------------------------------------------------

def _greedy_colour_order(cand, adj):
    """Greedy colouring of ``cand``; returns vertices with their colour bounds."""
    order, bounds = [], []
    colour = 0
    uncoloured = cand
    while uncoloured:
        colour += 1
        avail = uncoloured
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~adj[v] & ~(1 << v)
            uncoloured &= ~(1 << v)
            order.append(v)
            bounds.append(colour)
    return order, bounds


def _max_clique_masks(n, adj):
    best = [0]
    best_size = [0]

    def expand(clique, size, cand):
        order, bounds = _greedy_colour_order(cand, adj)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if size + bound <= best_size[0]:
                return
            new_clique = clique | (1 << v)
            new_cand = cand & adj[v]
            if new_cand:
                expand(new_clique, size + 1, new_cand)
            elif size + 1 > best_size[0]:
                best_size[0] = size + 1
                best[0] = new_clique
            cand &= ~(1 << v)

    if n:
        expand(0, 0, (1 << n) - 1)
    return best_size[0], best[0]


def clique_number(g: Graph, cap: int = CLIQUE_VERTEX_CAP) -> int:
    """Maximum clique size by branch and bound with a greedy-colouring bound."""
    if g.n > cap:
        raise ResourceError(f"{g.n} vertices exceeds clique cap {cap}")
    return _max_clique_masks(g.n, g.adjacency_masks())[0]


def maximal_cliques(g: Graph) -> list:
    """All maximal cliques (Bron-Kerbosch with pivoting), as sorted tuples."""
    adj = g.adjacency_masks()
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(tuple(_bits(r)))
            return
        pivot = max(_bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in list(_bits(p & ~adj[pivot])):
            bk(r | (1 << v), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        bk(0, (1 << g.n) - 1, 0)
    return sorted(out)


def all_cliques(g: Graph, min_size: int = 1, cap: int = CLIQUE_ENUM_CAP) -> Optional[list]:
    """Every clique with at least ``min_size`` vertices, or None past ``cap`` cliques."""
    adj = g.adjacency_masks()
    out = []
    count = [0]

    def grow(clique, size, cand):
        if size >= min_size:
            out.append(clique)
        count[0] += 1
        if count[0] > cap:
            return False
        for v in _bits(cand):
            if not grow(clique | (1 << v), size + 1, cand & adj[v] & ~((2 << v) - 1)):
                return False
        return True

    for v in range(g.n):
        if not grow(1 << v, 1, adj[v] & ~((2 << v) - 1)):
            return None
    return sorted(tuple(_bits(c)) for c in out)


# -- rectangle covering ----------------------------------------------------

@dataclass(frozen=True)
class Rectangle:
    rows: tuple
    cols: tuple


def maximal_rectangles(m: BoolMatrix) -> list:
    """All maximal 1-rectangles.

    Column sets of maximal rectangles are exactly the nonempty intersections of
    row supports; the row set is then every row containing that column set.
    """
    supports = m.row_masks()
    family = set()
    for s in supports:
        if not s:
            continue
        family |= {s & f for f in family if s & f}
        family.add(s)
    rects = []
    for cols in family:
        rows = tuple(i for i, s in enumerate(supports) if s & cols == cols)
        rects.append(Rectangle(rows, tuple(_bits(cols))))
    rects.sort(key=lambda r: (r.rows, r.cols))
    return rects


class _CoverInstance:
    def __init__(self, m):
        self.cells = m.ones()
        index = {c: k for k, c in enumerate(self.cells)}
        self.rects = maximal_rectangles(m)
        self.rect_masks = [
            sum(1 << index[(i, j)] for i in r.rows for j in r.cols) for r in self.rects
        ]
        self.covering = [[] for _ in self.cells]
        for ri, mask in enumerate(self.rect_masks):
            for k in _bits(mask):
                self.covering[k].append(ri)
        self.incompat = []
        for (i, j) in self.cells:
            mask = 0
            for k, (a, b) in enumerate(self.cells):
                if not m[i, b] or not m[a, j]:
                    mask |= 1 << k
            self.incompat.append(mask)
        self.full = (1 << len(self.cells)) - 1

    def greedy_fooling(self, uncovered):
        """A fooling set inside ``uncovered`` picked greedily (a lower bound)."""
        size = 0
        avail = uncovered
        order = sorted(_bits(uncovered), key=lambda k: len(self.covering[k]))
        for k in order:
            if avail >> k & 1:
                size += 1
                avail &= self.incompat[k]
        return size

    def greedy_cover(self):
        uncovered, chosen = self.full, []
        while uncovered:
            ri = max(range(len(self.rect_masks)),
                     key=lambda r: ((self.rect_masks[r] & uncovered).bit_count(), -r))
            chosen.append(ri)
            uncovered &= ~self.rect_masks[ri]
        return chosen


def _check_cells(m, cap):
    n_ones = sum(sum(r) for r in m.bits)
    if n_ones > cap:
        raise ResourceError(f"{n_ones} one-cells exceeds cap {cap}")


def rc_greedy(m: BoolMatrix) -> int:
    """Size of the cover built by repeatedly taking the maximal rectangle covering most new cells."""
    return len(_CoverInstance(m).greedy_cover())


def rc_exact(m: BoolMatrix, cap: int = RC_CELL_CAP) -> int:
    """Exact rectangle covering number by branch and bound over maximal rectangles."""
    _check_cells(m, cap)
    inst = _CoverInstance(m)
    if not inst.cells:
        return 0
    best = [len(inst.greedy_cover())]

    def search(uncovered, used):
        if not uncovered:
            best[0] = min(best[0], used)
            return
        if used + inst.greedy_fooling(uncovered) >= best[0]:
            return
        k = min(_bits(uncovered), key=lambda c: len(inst.covering[c]))
        options = sorted(inst.covering[k],
                         key=lambda r: (-(inst.rect_masks[r] & uncovered).bit_count(), r))
        for r in options:
            search(uncovered & ~inst.rect_masks[r], used + 1)

    search(inst.full, 0)
    return best[0]


def fooling_set_bound(m: BoolMatrix, cap: int = FOOLING_CELL_CAP) -> int:
    """Largest set of pairwise rectangle-incompatible 1-cells (maximum clique)."""
    _check_cells(m, cap)
    inst = _CoverInstance(m)
    n = len(inst.cells)
    adj = [inst.incompat[k] & ~(1 << k) for k in range(n)]
    return _max_clique_masks(n, adj)[0]


# -- linear decision trees -------------------------------------------------

class MalformedTreeError(ValueError):
    pass


@dataclass(frozen=True)
class Branch:
    a: tuple
    b: int
    pos: int
    neg: int


@dataclass
class LinearDecisionTree:
    """Binary tree branching on ``a . c + b > 0`` with point-index labels at leaves."""

    nodes: dict = field(default_factory=dict)
    leaves: dict = field(default_factory=dict)
    root: int = 0

    def __post_init__(self):
        self.nodes = {
            int(k): Branch(tuple(int(x) for x in v.a), int(v.b), int(v.pos), int(v.neg))
            for k, v in self.nodes.items()
        }
        self.leaves = {int(k): int(v) for k, v in self.leaves.items()}
        overlap = self.nodes.keys() & self.leaves.keys()
        if overlap:
            raise MalformedTreeError(f"ids used for both node and leaf: {sorted(overlap)}")
        self._check_acyclic()

    def _check_acyclic(self):
        seen = set()
        stack = [self.root]
        if not self.nodes and not self.leaves:
            raise MalformedTreeError("empty tree")
        while stack:
            k = stack.pop()
            if k in seen:
                raise MalformedTreeError(f"id {k} reached twice (cycle or shared subtree)")
            seen.add(k)
            if k in self.nodes:
                stack.extend((self.nodes[k].pos, self.nodes[k].neg))
            elif k not in self.leaves:
                raise MalformedTreeError(f"missing child {k}")
        stray = (self.nodes.keys() | self.leaves.keys()) - seen
        if stray:
            raise MalformedTreeError(f"ids unreachable from the root: {sorted(stray)}")

    def depth(self, k=None) -> int:
        k = self.root if k is None else k
        if k in self.leaves:
            return 0
        node = self.nodes[k]
        return 1 + max(self.depth(node.pos), self.depth(node.neg))

    def labels(self, k=None) -> frozenset:
        k = self.root if k is None else k
        if k in self.leaves:
            return frozenset((self.leaves[k],))
        node = self.nodes[k]
        return self.labels(node.pos) | self.labels(node.neg)


def ldt_evaluate(t: LinearDecisionTree, c: Sequence[int]) -> int:
    k = t.root
    while k not in t.leaves:
        node = t.nodes[k]
        if len(node.a) != len(c):
            raise ValueError(f"test at node {k} has length {len(node.a)}, input has {len(c)}")
        value = sum(x * y for x, y in zip(node.a, c)) + node.b
        k = node.pos if value > 0 else node.neg
    return t.leaves[k]


@dataclass(frozen=True)
class DirectTypeResult:
    ok: bool
    witness: Optional[tuple] = None  # (node id, clique as sorted tuple)
    complete: bool = True

    def __bool__(self):
        return self.ok


def is_direct_type(t: LinearDecisionTree, x_set, skeleton: Graph,
                   clique_cap: int = CLIQUE_ENUM_CAP) -> DirectTypeResult:
    """Check |X_f & Y| - 1 <= max(|X_f+ & Y|, |X_f- & Y|) for every node f and clique Y.

    Every clique of the skeleton is checked. Past ``clique_cap`` cliques only
    the maximal ones are, and the result is flagged incomplete.
    """
    n_points = len(x_set)
    for k, label in t.leaves.items():
        if not 0 <= label < n_points:
            raise ValueError(f"leaf {k} label {label} outside [0, {n_points})")
    if skeleton.n != n_points:
        raise ValueError(f"skeleton has {skeleton.n} vertices, point set has {n_points}")
    # cliques with <= 2 vertices satisfy the inequality automatically
    cliques = all_cliques(skeleton, min_size=3, cap=clique_cap)
    complete = cliques is not None
    if not complete:
        cliques = [c for c in maximal_cliques(skeleton) if len(c) >= 3]
    clique_masks = [(c, sum(1 << v for v in c)) for c in cliques]

    label_masks = {}

    def labels(k):
        if k not in label_masks:
            if k in t.leaves:
                label_masks[k] = 1 << t.leaves[k]
            else:
                node = t.nodes[k]
                label_masks[k] = labels(node.pos) | labels(node.neg)
        return label_masks[k]

    for k in sorted(t.nodes):
        node = t.nodes[k]
        xf, xp, xn = labels(k), labels(node.pos), labels(node.neg)
        for c, y in clique_masks:
            lhs = (xf & y).bit_count() - 1
            if lhs > max((xp & y).bit_count(), (xn & y).bit_count()):
                return DirectTypeResult(False, (k, c), complete)
    return DirectTypeResult(True, None, complete)
