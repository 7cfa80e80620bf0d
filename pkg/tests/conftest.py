import random

from reflap import new_boundary_graph


def random_connected_graph(rng, n_max=10, boundary_size=None):
    """Random connected graph: spanning tree plus extra edges, random boundary."""
    n = rng.randint(2, n_max)
    verts = list(range(n))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        u, v = verts[rng.randrange(i)], verts[i]
        edges.add((min(u, v), max(u, v)))
    for _ in range(rng.randint(0, n)):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    k = boundary_size if boundary_size is not None else rng.randint(0, n)
    boundary = rng.sample(range(n), k)
    return new_boundary_graph(n, sorted(edges), boundary)


def seeded(seed):
    return random.Random(seed)
