"""JSON wire formats. Every integer that can be large travels as a decimal string."""

import json

from .combinatorics import Branch, LinearDecisionTree
from .hull import FaceLattice, IncidenceStructure
from .optimize import OptimizationResult
from .pointset import PointSet
from .structures import BoolMatrix, Graph


def _dec(v):
    return [str(x) for x in v]


def pointset_to_json(x: PointSet) -> dict:
    return {"dim": x.dim, "points": [_dec(p) for p in x.points]}


def pointset_from_json(obj: dict) -> PointSet:
    return PointSet(int(obj["dim"]), tuple(tuple(int(v) for v in p) for p in obj["points"]))


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def graph_from_json(obj: dict) -> Graph:
    return Graph(int(obj["n"]), frozenset(tuple(e) for e in obj["edges"]))


def boolmatrix_to_json(m: BoolMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "data": ["".join(map(str, r)) for r in m.bits]}


def boolmatrix_from_json(obj: dict) -> BoolMatrix:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    data = tuple(tuple(int(ch) for ch in s) for s in obj["data"])
    return BoolMatrix(rows, cols, data)


def incidence_to_json(inc: IncidenceStructure) -> dict:
    return {
        "dim": inc.point_set.dim,
        "vertices": [_dec(p) for p in inc.point_set.points],
        "facets": [
            {"normal": _dec(f.normal), "offset": str(f.offset), "vertices": list(f.vertex_set)}
            for f in inc.facets
        ],
        "incidence": ["".join(map(str, row)) for row in inc.incidence],
    }


def lattice_to_json(lat: FaceLattice) -> dict:
    return {"faces": [{"vertices": list(v), "dim": k} for v, k in lat.faces]}


def tree_to_json(t: LinearDecisionTree) -> dict:
    return {
        "nodes": [
            {"id": k, "a": _dec(n.a), "b": str(n.b), "pos": n.pos, "neg": n.neg}
            for k, n in sorted(t.nodes.items())
        ],
        "leaves": [{"id": k, "label": v} for k, v in sorted(t.leaves.items())],
        "root": t.root,
    }


def tree_from_json(obj: dict) -> LinearDecisionTree:
    nodes = {
        int(n["id"]): Branch(tuple(int(x) for x in n["a"]), int(n["b"]), int(n["pos"]), int(n["neg"]))
        for n in obj["nodes"]
    }
    leaves = {int(lf["id"]): int(lf["label"]) for lf in obj["leaves"]}
    return LinearDecisionTree(nodes, leaves, int(obj["root"]))


def result_to_json(r: OptimizationResult) -> dict:
    out = {"value": str(r.value), "argmax": list(r.argmax), "evaluations": r.evaluations}
    if r.witness_t is not None:
        out["t"] = str(r.witness_t)
    if r.segments:
        out["segments"] = [[s.lo, s.hi, s.sign] for s in r.segments]
    return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)
