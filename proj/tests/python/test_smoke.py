"""Smoke test for the sepmc extension module; run directly with python."""

import sepmc


def main():
    g = sepmc.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4 and g.m == 3
    assert g.adjacent(0, 1) and not g.adjacent(0, 2)
    assert g.neighbors(1) == [0, 2]
    assert "Graph(n=4" in repr(g)
    assert g == sepmc.parse_edge_list(sepmc.to_edge_list(g))
    assert g == sepmc.parse_graph6(sepmc.to_graph6(g))

    prism = sepmc.generate("prism:3")
    assert prism.n == 6 and prism.m == 9
    seps = sepmc.minimal_separators(prism)
    assert len(seps) == 6
    assert seps == sepmc.minimal_separators(prism, algo="brute")
    assert seps == sepmc.minimal_separators(prism, algo="p6free")
    assert seps == sepmc.minimal_separators(prism, algo="p6free", k=3)

    assert sepmc.is_minimal_separator(g, [1])
    assert not sepmc.is_minimal_separator(g, [1, 2])
    assert sepmc.full_components(g, [1]) == [[0], [2, 3]]

    assert sepmc.is_pmc(g, [0, 1])
    assert not sepmc.is_pmc(g, [0, 1, 2])
    pmcs = sepmc.potential_maximal_cliques(g)
    assert pmcs == [[0, 1], [1, 2], [2, 3]]
    assert pmcs == sepmc.potential_maximal_cliques(g, algo="brute")

    assert sepmc.clique_number(prism) == 3
    assert sepmc.is_pt_free(prism, 5)
    path6 = sepmc.generate("path:6")
    assert not sepmc.is_pt_free(path6, 6)
    assert sepmc.find_induced_path(path6, 6) == [0, 1, 2, 3, 4, 5]
    assert sepmc.find_induced_path(prism, 5) is None

    assert sepmc.is_module(g, [0, 1, 2, 3])
    assert not sepmc.is_module(g, [0, 2])
    assert len(sepmc.strong_modules(g)) <= 2 * g.n - 1
    parts = sepmc.maximal_proper_strong_modules(g)
    assert sorted(v for part in parts for v in part) == [0, 1, 2, 3]
    assert [0, 1, 2, 3] in sepmc.connected_modules(g, 2)

    report = sepmc.verify_bounds(sepmc.generate("edgeless:5"))
    assert report["n"] == 5 and report["a"] == 0 and report["b"] == 5
    assert report["is_p6_free"]
    assert all(check["pass"] for check in report["checks"])
    assert any(check["name"] == "BT_B" for check in report["checks"])

    weight, members = sepmc.mwis(g, [1, 1, 1, 1])
    assert weight == 2 and len(members) == 2
    assert sepmc.mwis(g, [1, 1, 1, 1], algo="brute")[0] == 2
    weight, members = sepmc.mwis(sepmc.generate("complete:4"), [5, 1, 1, 1])
    assert weight == 5 and members == [0]

    try:
        sepmc.minimal_separators(g, algo="magic")
    except ValueError:
        pass
    else:
        raise AssertionError("bad algo name must raise")

    print("ok")


if __name__ == "__main__":
    main()
