"""Built-in example graphs and matroids used by ``verify`` and the tests."""

from __future__ import annotations

from .matroid import Graph, RegularMatroid, direct_sum, incidence_matroid


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n + 1, [(i, i + 1) for i in range(n)])


def banana_graph(n: int) -> Graph:
    """Two vertices joined by n parallel edges."""
    return Graph.from_edges(2, [(0, 1)] * n)


def diamond_graph() -> Graph:
    # e1, e2 and e5 bound one triangle, e3, e4 and e5 the other
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 2)])


def complete_graph(n: int) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph.from_edges(n, edges)


def c2_graph() -> Graph:
    return Graph(2, ((0, 1), (0, 1)), ("e", "f"))


def figure1_graph() -> Graph:
    """A loop plus three parallel edges; lengths (2, 2, 1, 3) give an 8-edge graph."""
    return Graph(2, ((0, 0), (0, 1), (0, 1), (0, 1)), ("l", "a", "b", "c"))


def coloops(k: int) -> RegularMatroid:
    return RegularMatroid(
        tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k)),
        tuple(f"u{i + 1}" for i in range(k)),
    )


def _relabel(m: RegularMatroid, prefix: str) -> RegularMatroid:
    return m.relabel([f"{prefix}{g}" for g in m.ground])


def corpus() -> dict[str, RegularMatroid]:
    """Named matroids shipped with the package."""
    d = incidence_matroid(diamond_graph())
    c2 = incidence_matroid(c2_graph())
    return {
        "C2": c2,
        "C3": incidence_matroid(cycle_graph(3)),
        "path3": incidence_matroid(path_graph(3)),
        "diamond": d,
        "K4": incidence_matroid(complete_graph(4)),
        "banana3": incidence_matroid(banana_graph(3)),
        "banana10": incidence_matroid(banana_graph(10)),
        "diamond+C2": direct_sum(_relabel(d, "d"), _relabel(c2, "c")),
        "U11x3": coloops(3),
    }


def corpus_graphs() -> dict[str, Graph]:
    return {
        "C2": c2_graph(),
        "C3": cycle_graph(3),
        "path3": path_graph(3),
        "diamond": diamond_graph(),
        "K4": complete_graph(4),
        "banana3": banana_graph(3),
        "banana10": banana_graph(10),
        "figure1": figure1_graph(),
    }


IRREDUCIBLE = ("C2", "C3", "diamond", "K4", "banana3", "banana10")
