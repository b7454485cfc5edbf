from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            i, j = sorted(int(v) for v in e)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if i < 0 or j >= self.n:
                raise ValueError(f"edge ({i}, {j}) outside [0, {self.n})")
            norm.add((i, j))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def complete(cls, n):
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def cycle(cls, n):
        return cls(n, frozenset((i, (i + 1) % n) for i in range(n)))

    def has_edge(self, i, j):
        return (min(i, j), max(i, j)) in self.edges

    def adjacency_masks(self):
        """Neighbourhood of each vertex as an int bitmask."""
        masks = [0] * self.n
        for i, j in self.edges:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return masks

    def is_connected(self):
        if self.n == 0:
            return True
        adj = self.adjacency_masks()
        seen, frontier = 1, 1
        while frontier:
            nxt = 0
            v = frontier
            while v:
                low = v & -v
                nxt |= adj[low.bit_length() - 1]
                v ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1


@dataclass(frozen=True)
class BoolMatrix:
    """Dense 0/1 matrix stored as a tuple of row tuples."""

    rows: int
    cols: int
    bits: tuple = ()

    def __post_init__(self):
        data = tuple(tuple(int(v) for v in row) for row in self.bits)
        if len(data) != self.rows or any(len(r) != self.cols for r in data):
            raise ValueError(f"bits do not form a {self.rows}x{self.cols} matrix")
        if any(v not in (0, 1) for r in data for v in r):
            raise ValueError("entries must be 0 or 1")
        object.__setattr__(self, "bits", data)

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, tuple(map(tuple, rows)))

    @classmethod
    def identity(cls, n):
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.bits[i][j]

    def ones(self):
        """1-cells in row-major order."""
        return [(i, j) for i in range(self.rows) for j in range(self.cols) if self.bits[i][j]]

    def row_masks(self):
        return [sum(1 << j for j, v in enumerate(r) if v) for r in self.bits]
