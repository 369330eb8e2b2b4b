"""Plane graphs given by rotation systems, and face tracing.

Rotation lists are read counterclockwise. Face tracing uses the
next-edge-after-reversal rule: the dart following (u, v) is (v, w) where w
comes right after u in the rotation at v.
"""
from dataclasses import dataclass

from .graph import GraphError, ParseError


@dataclass(frozen=True)
class Face:
    index: int
    darts: tuple  # ((u, v), ...) closed boundary walk

    @property
    def length(self):
        return len(self.darts)

    @property
    def walk(self):
        return tuple(u for u, _ in self.darts)

    @property
    def vertices(self):
        return tuple(sorted(set(self.walk)))


class PlaneGraph:
    """Connected simple graph plus a rotation system.

    Construction traces the faces and checks Euler's identity; a rotation
    that fails it is rejected.
    """

    def __init__(self, graph, rotation):
        if not graph.simple:
            raise GraphError("embeddings are supported for simple graphs only")
        if not graph.is_connected():
            raise GraphError("plane graph must be connected")
        rot = {}
        for v in graph.vertices:
            if v not in rotation:
                raise GraphError(f"vertex {v} missing from rotation")
            r = tuple(rotation[v])
            if sorted(r) != list(graph.neighbors(v)) or len(r) != graph.degree(v):
                raise GraphError(f"rotation at {v} does not list its neighbors exactly once")
            rot[v] = r
        extra = set(rotation) - set(graph.vertices)
        if extra:
            raise GraphError(f"rotation mentions unknown vertices {sorted(extra)}")
        self.graph = graph
        self.rotation = rot
        self._pos = {v: {u: i for i, u in enumerate(r)} for v, r in rot.items()}
        self.faces = self._trace()
        self._dart_face = {d: f.index for f in self.faces for d in f.darts}
        euler = graph.n - graph.m + len(self.faces)
        if euler != 2:
            raise GraphError(f"rotation is not planar: V - E + F = {euler}, expected 2")

    def next_dart(self, u, v):
        r = self.rotation[v]
        return v, r[(self._pos[v][u] + 1) % len(r)]

    def _trace(self):
        g = self.graph
        if g.m == 0:
            return [Face(0, ())]
        darts = sorted([(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges])
        seen = set()
        faces = []
        for d in darts:
            if d in seen:
                continue
            walk = []
            cur = d
            while cur not in seen:
                seen.add(cur)
                walk.append(cur)
                cur = self.next_dart(*cur)
            faces.append(Face(len(faces), tuple(walk)))
        return faces

    def face_of_dart(self, u, v):
        return self.faces[self._dart_face[(u, v)]]

    def edge_faces(self, u, v):
        """The faces on the two sides of edge uv (possibly the same face)."""
        return self.face_of_dart(u, v), self.face_of_dart(v, u)

    def faces_at(self, v):
        """Faces incident to v, one entry per corner (in rotation order)."""
        return [self.face_of_dart(v, u) for u in self.rotation[v]]

    def face_lengths(self):
        return [f.length for f in self.faces]

    def face_census(self):
        out = {}
        for f in self.faces:
            out[f.length] = out.get(f.length, 0) + 1
        return dict(sorted(out.items()))

    def check_normal(self):
        """Raise unless min degree >= 3 and every face has length >= 3."""
        for v in self.graph.vertices:
            if self.graph.degree(v) < 3:
                raise GraphError(f"not a normal plane map: vertex {v} has degree {self.graph.degree(v)}")
        for f in self.faces:
            if f.length < 3:
                raise GraphError(f"not a normal plane map: face {f.index} has length {f.length}")

    def __repr__(self):
        return f"PlaneGraph(n={self.graph.n}, m={self.graph.m}, f={len(self.faces)})"


def faces(pg):
    return list(pg.faces)


def parse_embedding(text, graph):
    """Parse `rot v: n1 n2 ...` lines into a PlaneGraph over `graph`."""
    rotation = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.startswith("rot ") or ":" not in line:
            raise ParseError(f"malformed rotation record {raw.strip()!r}", lineno)
        head, tail = line[4:].split(":", 1)
        try:
            v = int(head)
            ns = [int(x) for x in tail.split()]
        except ValueError:
            raise ParseError(f"non-integer id in {raw.strip()!r}", lineno) from None
        if v in rotation:
            raise ParseError(f"vertex {v} listed twice", lineno)
        rotation[v] = ns
    return PlaneGraph(graph, rotation)


def serialize_embedding(pg):
    return "".join(f"rot {v}: {' '.join(map(str, pg.rotation[v]))}\n" for v in pg.graph.vertices)


def rotation_from_coordinates(graph, coords):
    """Counterclockwise rotation by angular sort around each vertex."""
    import math
    rot = {}
    for v in graph.vertices:
        x0, y0 = coords[v]
        rot[v] = sorted(graph.neighbors(v),
                        key=lambda u: math.atan2(coords[u][1] - y0, coords[u][0] - x0))
    return PlaneGraph(graph, rot)
