"""Graph data model with boundary vertices, doubling, and generators.

Vertices are dense 0-based indices.  A BoundaryGraph is a simple undirected
graph together with a designated boundary vertex set; everything else in the
package is built on top of it.  Doubling appends a mirrored copy of the
interior after the original vertices, in ascending interior order, so the
mirror map and all block matrices are deterministic.
"""

from dataclasses import dataclass, field

from .errors import (
    DuplicateEdgeError,
    InvalidSpecError,
    InvalidVertexError,
    ParseError,
    SelfLoopError,
)


@dataclass(frozen=True)
class BoundaryGraph:
    """Simple undirected graph with a designated boundary vertex set.

    Edges are stored canonically as (min, max) pairs in a frozenset.
    Interior vertices are all vertices not in `boundary`.
    """

    n: int
    edges: frozenset
    boundary: frozenset

    def interior(self):
        """Interior vertices in ascending order."""
        return [v for v in range(self.n) if v not in self.boundary]

    def neighbors(self, v):
        """Sorted neighbor list of vertex v."""
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def degree(self, v):
        return sum(1 for a, b in self.edges if a == v or b == v)

    def adjacency(self):
        """Dense 0/1 adjacency matrix as a list of lists of ints."""
        a = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            a[u][v] = 1
            a[v][u] = 1
        return a


@dataclass(frozen=True)
class DoubledGraph:
    """A doubled graph together with the interior-to-copy mirror map."""

    graph: BoundaryGraph
    mirror: dict = field(compare=False)

    def reflection(self):
        """The permutation fixing the boundary and swapping v with mirror[v]."""
        perm = list(range(self.graph.n))
        for v, u in self.mirror.items():
            perm[v] = u
            perm[u] = v
        return perm


def new_boundary_graph(n, edges, boundary):
    """Build a BoundaryGraph, validating and canonicalizing the edge list."""
    if n < 0:
        raise InvalidSpecError("vertex count must be nonnegative, got %d" % n)
    canon = set()
    for u, v in edges:
        if u == v:
            raise SelfLoopError("self-loop at vertex %d" % u)
        if not (0 <= u < n) or not (0 <= v < n):
            raise InvalidVertexError("edge (%d, %d) out of range for n=%d" % (u, v, n))
        e = (u, v) if u < v else (v, u)
        if e in canon:
            raise DuplicateEdgeError("duplicate edge (%d, %d)" % e)
        canon.add(e)
    bset = set(boundary)
    for v in bset:
        if not (0 <= v < n):
            raise InvalidVertexError("boundary vertex %d out of range for n=%d" % (v, n))
    return BoundaryGraph(n=n, edges=frozenset(canon), boundary=frozenset(bset))


def double(g):
    """Double a graph: copy the interior and glue the copy to the boundary.

    Interior vertex v (in ascending interior order) gets copy index
    g.n + rank(v).  With an empty interior the doubled graph is g itself.
    """
    interior = g.interior()
    f = {v: g.n + i for i, v in enumerate(interior)}
    edges = set(g.edges)
    for u, v in g.edges:
        ui, vi = u in f, v in f
        if ui and vi:
            a, b = f[u], f[v]
            edges.add((a, b) if a < b else (b, a))
        elif ui:
            edges.add((v, f[u]))  # v is boundary, copy index always larger
        elif vi:
            edges.add((u, f[v]))
    g2 = BoundaryGraph(n=g.n + len(interior), edges=frozenset(edges), boundary=g.boundary)
    return DoubledGraph(graph=g2, mirror=f)


def induced_subgraph(g, subset):
    """Induced subgraph on `subset`, relabeled 0..k-1 in ascending order.

    Returns (subgraph, relabel) where relabel maps original index -> new index.
    """
    for v in subset:
        if not (0 <= v < g.n):
            raise InvalidVertexError("vertex %d out of range" % v)
    keep = sorted(set(subset))
    relabel = {v: i for i, v in enumerate(keep)}
    edges = [
        (relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel
    ]
    boundary = [relabel[v] for v in g.boundary if v in relabel]
    return new_boundary_graph(len(keep), edges, boundary), relabel


def is_connected(g):
    if g.n <= 1:
        return True
    adj = {v: [] for v in range(g.n)}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def components(g):
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    adj = {v: [] for v in range(g.n)}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


# ---------------------------------------------------------------------------
# Generators.  Vertex numbering conventions:
#   path(n):  0 - 1 - ... - n-1
#   cycle(n): 0 - 1 - ... - n-1 - 0
#   grid(rows, cols): row-major, vertex = r*cols + c
#   barbell(k, b): first clique 0..k-1, bridge k..k+b-1, second clique
#                  k+b..2k+b-1; junctions are k-1 and k+b.
# ---------------------------------------------------------------------------

def path_graph(n, boundary="none"):
    if n < 1:
        raise InvalidSpecError("path needs n >= 1")
    edges = [(i, i + 1) for i in range(n - 1)]
    return new_boundary_graph(n, edges, _resolve_boundary(boundary, _path_rules(n)))


def cycle_graph(n, boundary="none"):
    if n < 3:
        raise InvalidSpecError("cycle needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return new_boundary_graph(n, edges, _resolve_boundary(boundary, {"none": []}))


def grid_graph(rows, cols, boundary="none"):
    if rows < 1 or cols < 1:
        raise InvalidSpecError("grid needs rows, cols >= 1")
    n = rows * cols
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    rules = {
        "none": [],
        "cols": [r * cols + c for r in range(rows) for c in (set([0, cols - 1]))],
        "rows": [r * cols + c for r in (set([0, rows - 1])) for c in range(cols)],
    }
    return new_boundary_graph(n, edges, _resolve_boundary(boundary, rules))


def barbell_graph(clique_size, bridge_len, boundary="none"):
    """Two cliques of `clique_size` joined by a path of `bridge_len` vertices."""
    k, b = clique_size, bridge_len
    if k < 3:
        raise InvalidSpecError("barbell needs clique_size >= 3")
    if b < 0:
        raise InvalidSpecError("bridge length must be nonnegative")
    n = 2 * k + b
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            edges.append((i, j))
            edges.append((k + b + i, k + b + j))
    chain = [k - 1] + [k + i for i in range(b)] + [k + b]
    for u, v in zip(chain, chain[1:]):
        edges.append((u, v))
    # "bridge": the bridge vertices; leaves the junction vertices interior
    rules = {"none": [], "bridge": [k + i for i in range(b)]}
    return new_boundary_graph(n, edges, _resolve_boundary(boundary, rules))


def _path_rules(n):
    return {"none": [], "endpoints": sorted(set([0, n - 1]))}


def _resolve_boundary(boundary, rules):
    if isinstance(boundary, str):
        if boundary not in rules:
            raise InvalidSpecError(
                "boundary rule %r not valid here (choose from %s or give a list)"
                % (boundary, ", ".join(sorted(rules)))
            )
        return rules[boundary]
    return list(boundary)


def generate(kind, *args, boundary="none"):
    """Dispatch to a named generator: path, cycle, grid, barbell."""
    makers = {
        "path": path_graph,
        "cycle": cycle_graph,
        "grid": grid_graph,
        "barbell": barbell_graph,
    }
    if kind not in makers:
        raise InvalidSpecError("unknown graph kind %r" % kind)
    return makers[kind](*args, boundary=boundary)


# ---------------------------------------------------------------------------
# Text format: '# comment', 'n <count>', 'b <i1> <i2> ...', 'e <u> <v>'.
# 'n' must precede 'b'/'e'; blank lines ignored.
# ---------------------------------------------------------------------------

def parse_graph(text):
    n = None
    edges = []
    boundary = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        try:
            if tag == "n":
                if n is not None:
                    raise ParseError("duplicate 'n' line", line_no)
                if len(parts) != 2:
                    raise ParseError("'n' takes exactly one count", line_no)
                n = int(parts[1])
            elif tag == "b":
                if n is None:
                    raise ParseError("'b' before 'n'", line_no)
                boundary.extend(int(p) for p in parts[1:])
            elif tag == "e":
                if n is None:
                    raise ParseError("'e' before 'n'", line_no)
                if len(parts) != 3:
                    raise ParseError("'e' takes exactly two endpoints", line_no)
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise ParseError("unknown line tag %r" % tag, line_no)
        except ValueError:
            raise ParseError("expected integers in %r" % line, line_no)
    if n is None:
        raise ParseError("missing 'n' line")
    try:
        return new_boundary_graph(n, edges, boundary)
    except (SelfLoopError, DuplicateEdgeError, InvalidVertexError) as exc:
        raise ParseError(str(exc))


def serialize_graph(g, comments=()):
    lines = ["# reflap graph"]
    lines.extend("# %s" % c for c in comments)
    lines.append("n %d" % g.n)
    if g.boundary:
        lines.append("b " + " ".join(str(v) for v in sorted(g.boundary)))
    for u, v in sorted(g.edges):
        lines.append("e %d %d" % (u, v))
    return "\n".join(lines) + "\n"
