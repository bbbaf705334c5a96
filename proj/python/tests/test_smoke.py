import pytest

import ordram


def test_formulas():
    assert ordram.exact_loose_path(3, 2, [2, 2]) == 7
    assert ordram.exact_loose_path(2, 1, [3, 4, 2]) == 25
    assert ordram.corollary_i2(3, 1, [2, 2]) == 9
    assert ordram.main_relation(4, 2, [2, 2]) == 10
    assert ordram.tower(3, 2) == 65536
    assert ordram.size_Q(4, [2, 2]) == 8
    assert ordram.exact_nested_matching(2, [2, 2]) == 6
    assert ordram.bound_nestable_matching(3, 3, 2) == 59049
    assert ordram.bound_clique_path(2, 2, 2) == 32


def test_big_values_are_python_ints():
    v = ordram.tower(4, 2)
    assert isinstance(v, int)
    assert v == 2 ** 65536


def test_report():
    r = ordram.loose_path_report(3, 2, [2, 2])
    assert r["exact"] == 7
    b = ordram.tower_bounds(2, 2, 3, 2)
    assert b["primary"]["upper"] == 16


def test_hypergraphs():
    p = ordram.path(3, 1, 2)
    assert (p.n, p.k) == (5, 3)
    assert p.edges == [[1, 2, 3], [3, 4, 5]]
    assert ordram.parse_target("path:3,1,2").same_edges(p)
    g = ordram.G(2, 3)
    assert g.n == 9
    assert ordram.contains(ordram.complete(6, 3), p) is not None
    assert ordram.contains(p, ordram.complete(4, 3)) is None
    q = ordram.Hypergraph.from_text(p.to_text())
    assert q.same_edges(p)


def test_construct_and_verify():
    c = ordram.construct_path_avoider(3, 2, [2, 2])
    assert c.n == 6
    targets = [ordram.path(3, 2, 2), ordram.path(3, 2, 2)]
    assert ordram.verify_avoids(c, targets)["ok"]
    cert = ordram.certificate(c, 3, 2, [2, 2])
    assert cert["ok"]
    assert ordram.Coloring.from_text(c.to_text()) == c

    ones = ordram.Coloring(5, 2, 2)
    for e in [[a, b] for a in range(1, 6) for b in range(a + 1, 6)]:
        ones.set_color(e, 1)
    bad = ordram.verify_avoids(ones, [ordram.path(2, 1, 2)] * 2)
    assert not bad["ok"]
    assert bad["color"] == 1


def test_matching_avoider():
    c = ordram.construct_matching_avoider(2, [1, 1], [2, 2])
    assert c.n == 5
    m = ordram.nested_matching(2, 1, 2)
    assert ordram.verify_avoids(c, [m, m])["ok"]


def test_search():
    r = ordram.ordered_ramsey([ordram.path(2, 1, 2)] * 2)
    assert r["value"] == 5
    assert r["witness"].n == 4
    assert r["per_n"][-1]["outcome"] == "exhausted"
    t = ordram.exists_avoider(10, 2, [ordram.path(2, 1, 3)] * 2, max_nodes=2000)
    assert t["outcome"] == "timeout"
    assert t["witness"] is None


def test_matchings():
    assert ordram.classify_pair([1, 3], [2, 4]) == "interlace"
    assert ordram.classify_pair([1, 4], [2, 3]) == "nest"
    assert not ordram.is_k_nestable(ordram.non_nestable_example(4))
    s, embedding = ordram.embed_into_G(ordram.nested_matching(3, 1, 2))
    assert s == 3
    assert len(embedding) == 6
    assert ordram.embed_into_G(ordram.non_nestable_example(4)) is None


def test_errors():
    with pytest.raises(ValueError):
        ordram.exact_loose_path(3, 0, [2, 2])
    with pytest.raises(ValueError):
        ordram.parse_target("cycle:3")
    with pytest.raises(ordram.BudgetExceeded):
        ordram.tower(6, 2)
