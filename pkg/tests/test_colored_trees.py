import pytest

from duoidal_kit.colored_trees import (
    LEAF,
    AlternatingForest,
    BinaryForest,
    ContractionMap,
    check_contraction_operad_map,
    parse_term,
)


@pytest.fixture()
def pools():
    bp = BinaryForest()
    ap = AlternatingForest()
    return bp, ap, ContractionMap(bp, ap)


def test_contract_base_cases(pools):
    bp, ap, cm = pools
    assert cm.contract(LEAF) == LEAF
    single = bp.node("w", (LEAF, LEAF))
    assert ap.render(cm.contract(single)) == "w(l,l)"
    stacked = bp.node("w", (bp.node("w", (LEAF, LEAF)), LEAF))
    assert ap.render(cm.contract(stacked)) == "w(l,l,l)"
    mixed = parse_term(bp, "w(b(l,l),l)")
    assert ap.render(cm.contract(mixed)) == "w(b(l,l),l)"


def test_contract_collapses_unary_vertices(pools):
    bp, ap, cm = pools
    # white binary over white nullary: the multiplication against the unit
    t = bp.node("w", (bp.node("w", ()), LEAF))
    assert cm.contract(t) == LEAF
    t2 = bp.node("w", (bp.node("w", ()), bp.node("b", (LEAF, LEAF))))
    assert ap.render(cm.contract(t2)) == "b(l,l)"


def test_contract_idempotent_on_alternating_image(pools):
    bp, ap, cm = pools
    for level in bp.by_vertices(4):
        for t in level:
            image = cm.contract(t)
            # re-reading the normal form through the smart constructor fixes it
            rebuilt = _rebuild(ap, image)
            assert rebuilt == image


def _rebuild(ap, t):
    if t == LEAF:
        return LEAF
    return ap.node(ap.color[t], tuple(_rebuild(ap, c) for c in ap.kids[t]))


def test_graft_unit_laws(pools):
    bp, ap, _ = pools
    t = parse_term(bp, "w(b(l,l),l)")
    for i in range(1, bp.leaves[t] + 1):
        assert bp.graft(t, LEAF, i) == t
    s = bp.node("b", (LEAF, LEAF))
    assert bp.graft(LEAF, s, 1) == s
    with pytest.raises(ValueError):
        bp.graft(t, s, 5)


def test_bgraft_associativity(pools):
    bp, _, _ = pools
    t = parse_term(bp, "w(l,l)")
    s = parse_term(bp, "b(l,l)")
    r = parse_term(bp, "w(l,l)")
    # grafting at disjoint leaves commutes
    lhs = bp.graft(bp.graft(t, s, 1), r, 3)
    rhs0 = bp.graft(t, r, 2)
    rhs = bp.graft(rhs0, s, 1)
    assert lhs == rhs


def test_atree_graft_merges_or_grafts_by_color(pools):
    _, ap, _ = pools
    white = ap.node("w", (LEAF, LEAF))
    black = ap.node("b", (LEAF, LEAF))
    assert ap.render(ap.graft(white, white, 1)) == "w(l,l,l)"
    assert ap.render(ap.graft(white, black, 1)) == "w(b(l,l),l)"
    assert ap.render(ap.graft(black, white, 2)) == "b(l,w(l,l))"


def test_enumeration_counts(pools):
    bp, ap, _ = pools
    assert [bp.render(t) for t in bp.enumerate_exact(2, 1)] == ["w(l,l)", "b(l,l)"]
    assert [len(level) for level in bp.by_vertices(4)] == [1, 4, 16, 96, 640]
    assert [ap.render(t) for t in ap.enumerate_exact(1, 1)] == ["l"]
    assert sorted(ap.render(t) for t in ap.enumerate_exact(0, 1)) == ["b()", "w()"]
    # no duplicates
    trees = ap.enumerate_exact(3, 3)
    assert len(trees) == len(set(trees))


def test_zero_leaf_enumeration_excludes_the_leaf(pools):
    bp, ap, _ = pools
    zero = bp.enumerate_exact(0, 2)
    assert LEAF not in zero
    assert all(bp.leaves[t] == 0 for t in zero)


def test_parse_rejects_malformed(pools):
    bp, _, _ = pools
    for bad in ("w(l", "x(l,l)", "w(l,l))", "w"):
        with pytest.raises(ValueError):
            parse_term(bp, bad)


def test_fiber_classes_cover_small_targets(pools):
    bp, ap, cm = pools
    all_b = [t for level in bp.by_vertices(3) for t in level]
    classes = cm.fiber_classes(all_b)
    for n_leaves in range(0, 3):
        for target in ap.enumerate_exact(n_leaves, 2):
            assert target in classes


def test_operad_map_exhaustive_small():
    checked, failures = check_contraction_operad_map(5)
    assert failures == []
    assert checked == 47337
