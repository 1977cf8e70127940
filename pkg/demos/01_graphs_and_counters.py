"""Tour of the graph types and the three per-subset edge counters.

Builds a few small graphs, picks vertex subsets, and shows how the
induced / covered / cut counts relate to each other.
"""

from isoprofile import (
    VertexSet,
    cycle,
    degree_summary,
    hypercube,
    parse_graph6,
    star,
    subset_metrics,
    to_graph6,
)


def show(graph, label, members):
    subset = VertexSet.from_vertices(graph.n, members)
    metrics = subset_metrics(graph, subset)
    print(f"  {label:<24} S={sorted(subset)}")
    print(f"    induced={metrics.induced} covered={metrics.covered} cut={metrics.cut}")
    print(f"    check: covered == induced + cut -> {metrics.covered} == {metrics.induced + metrics.cut}")


def main():
    c4 = cycle(4)
    print(f"4-cycle: {c4}, degree summary {degree_summary(c4)}")
    show(c4, "adjacent pair", [0, 1])
    show(c4, "opposite pair", [0, 2])

    s4 = star(4)
    print(f"\nstar on 4 vertices: {s4}, graph6 {to_graph6(s4)!r}")
    show(s4, "the center alone", [0])
    show(s4, "one leaf alone", [1])

    q3 = hypercube(3)
    print(f"\n3-cube: {q3}")
    show(q3, "one facet (a 2-subcube)", [0, 1, 2, 3])
    print("  the facet cut (4 edges) is the smallest 4-vs-4 cut in the cube")

    decoded = parse_graph6("D?{")
    print(f"\ngraph6 'D?{{' decodes to {decoded} with edges {decoded.edges()}")


if __name__ == "__main__":
    main()
