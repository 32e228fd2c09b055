import itertools

import pytest

from duoidal_kit.duoidal import Duoid, check_duoid_axioms, iterated_mu_v, v_as_duoid
from duoidal_kit.finset import CartMap, CartesianFinSet, atom_letter
from duoidal_kit.instances import additive_instance, bool_lattice_instance
from duoidal_kit.monoids import cyclic
from duoidal_kit.trees import (
    OneTree,
    TreeError,
    TwoTreeMap,
    U2,
    Z2U0,
    ZU1,
    enumerate_one_maps,
    enumerate_two_tree_maps,
    enumerate_two_trees,
    one_map_fibers,
    suspension,
    two_tree,
)
from duoidal_kit.two_operads import (
    algebra_to_duoid,
    ass2,
    check_algebra_map,
    check_two_operad,
    duoid_to_algebra,
    end2,
    is_one_terminal,
    is_pruned,
    suspension_interchange,
    tensor_power,
    truncate,
)

D = CartesianFinSet()
X = (atom_letter("x", ["p", "q"]),)


def test_tensor_powers():
    assert tensor_power(D, X, U2) == X
    assert tensor_power(D, X, two_tree(2, 1, [1, 1])) == X + X
    assert tensor_power(D, X, two_tree(2, 2, [1, 2])) == X + X
    assert tensor_power(D, X, ZU1) == D.v
    assert tensor_power(D, X, Z2U0) == D.e
    assert tensor_power(D, X, OneTree(3)) == D.box0_many([D.v] * 3)


def test_suspension_interchange_single_step():
    # (2->2, id) onto the 2-suspension: exactly the binary interchange
    T = two_tree(2, 2, [1, 2])
    sigma = TwoTreeMap(T, suspension(2), (1, 1), (1, 2))
    got = suspension_interchange(D, X, sigma)
    want = D.interchange(X, D.e, D.e, X)
    # over the cartesian instance both are the identity on X box0 X
    assert D.maps_equal(got, D.identity(X + X))
    lattice = bool_lattice_instance()
    got_l = suspension_interchange(lattice, "1", sigma)
    assert lattice.maps_equal(got_l, lattice.interchange("1", lattice.v, lattice.v, "1"))


def test_suspension_interchange_requires_suspension_target():
    T = two_tree(2, 2, [1, 2])
    sigma = TwoTreeMap(T, T, (1, 2), (1, 2))
    with pytest.raises(TreeError):
        suspension_interchange(D, X, sigma)


def test_degenerate_fibers_insert_units():
    # T = (0 -> 1) onto the 1-suspension: the single fiber has no leaves
    sigma = TwoTreeMap(ZU1, suspension(1), (1,), ())
    got = suspension_interchange(bool_lattice_instance(), "1", sigma)
    lattice = bool_lattice_instance()
    assert got in lattice.base.arrow_names()


def test_ass2_passes_and_truncates():
    A = ass2()
    rep = check_two_operad(A, max_leaves=2, tuple_cap=8)
    assert rep.all_passed, rep.render()
    assert is_pruned(A)
    tr1 = truncate(A, 1)
    assert tr1.component(OneTree(2)) == ["*"]
    with pytest.raises(ValueError):
        tr1.component(U2)


def test_end2_over_lattice_una_terminal_but_pruned_condition():
    lattice = bool_lattice_instance()
    A = end2(lattice, "1", bound=3)
    rep = check_two_operad(A, max_leaves=2, tuple_cap=8)
    assert rep.all_passed, rep.render()
    assert is_one_terminal(A)


def test_end2_z2_additive_small():
    inst = additive_instance(cyclic(2))
    A = end2(inst, "*", bound=2)
    rep = check_two_operad(A, max_leaves=2, tuple_cap=64)
    assert rep.all_passed, rep.render()
    assert not is_one_terminal(A)


def test_truncation_is_the_endomorphism_operad_of_v():
    lattice = bool_lattice_instance()
    A = end2(lattice, "1", bound=3)
    tr1 = truncate(A, 1)
    for n in range(4):
        assert sorted(tr1.component(OneTree(n))) == sorted(
            lattice.hom(lattice.box0_many([lattice.v] * n), lattice.v)
        )
    for a in range(3):
        for b in range(3):
            for f in enumerate_one_maps(OneTree(a), OneTree(b)):
                fibs = one_map_fibers(f)
                for elems in itertools.product(*[tr1.component(t) for t in fibs]):
                    for outer in tr1.component(f.codomain):
                        got = tr1.m(f, list(elems), outer)
                        want = lattice.compose(lattice.box0_map_many(list(elems)), outer)
                        assert lattice.maps_equal(got, want)


def test_corrupted_unit_fails_identity_axiom():
    from duoidal_kit.two_operads import TwoOperad

    inst = additive_instance(cyclic(2))
    base = end2(inst, "*", bound=2)
    bad = TwoOperad(
        "end2_bad_unit",
        base.component_fn,
        lambda level: "a1" if level == 2 else base.unit_fn(level),
        base.m_fn,
        equal_fn=inst.maps_equal,
    )
    rep = check_two_operad(bad, max_leaves=2, tuple_cap=4)
    rows = {i.name: i.passed for i in rep.items}
    assert not (rows["(**) identities act trivially"] and rows["(***) units absorb"])


def test_duoid_algebra_round_trip_small():
    lattice = bool_lattice_instance()
    d = v_as_duoid(lattice)
    ev = duoid_to_algebra(lattice, d, bound=3)
    rep = check_algebra_map(lattice, d, ev, max_leaves=2)
    assert rep.all_passed, rep.render()
    d2 = algebra_to_duoid(lattice, ev, d.carrier)
    for attr in ("mult0", "unit0", "mult1", "unit1"):
        assert lattice.maps_equal(getattr(d2, attr), getattr(d, attr))


def _monoid_structures(elems):
    out = []
    for vals in itertools.product(elems, repeat=len(elems) ** 2):
        table = dict(zip(itertools.product(elems, repeat=2), vals))
        unit = next(
            (u for u in elems if all(table[(u, a)] == a and table[(a, u)] == a for a in elems)),
            None,
        )
        if unit is None:
            continue
        if all(
            table[(table[(a, b)], c)] == table[(a, table[(b, c)])]
            for a in elems
            for b in elems
            for c in elems
        ):
            out.append((table, unit))
    return out


@pytest.mark.parametrize("size", [2, 3])
def test_eckmann_hilton_enumeration(size):
    elems = list(range(size))
    carrier = (atom_letter(f"c{size}", elems),)
    sq = carrier + carrier
    monoids = _monoid_structures(elems)
    duoid_count = expected = 0
    for t0, u0 in monoids:
        m0 = CartMap(sq, carrier, table={(a, b): (t0[(a, b)],) for a in elems for b in elems})
        e0 = CartMap((), carrier, table={(): (u0,)})
        for t1, u1 in monoids:
            m1 = CartMap(sq, carrier, table={(a, b): (t1[(a, b)],) for a in elems for b in elems})
            e1 = CartMap((), carrier, table={(): (u1,)})
            is_duoid = check_duoid_axioms(D, Duoid(carrier, m0, e0, m1, e1)).all_passed
            should = t0 == t1 and all(t0[(a, b)] == t0[(b, a)] for a in elems for b in elems)
            assert is_duoid == should
            duoid_count += is_duoid
            expected += should
    assert duoid_count == expected > 0


def test_duoid_round_trip_for_every_commutative_monoid_on_two_points():
    elems = [0, 1]
    carrier = (atom_letter("c2", elems),)
    sq = carrier + carrier
    for t, u in _monoid_structures(elems):
        if any(t[(a, b)] != t[(b, a)] for a in elems for b in elems):
            continue
        mult = CartMap(sq, carrier, table={(a, b): (t[(a, b)],) for a in elems for b in elems})
        unit = CartMap((), carrier, table={(): (u,)})
        d = Duoid(carrier, mult, unit, mult, unit)
        ev = duoid_to_algebra(D, d, bound=3)
        d2 = algebra_to_duoid(D, ev, carrier)
        for attr in ("mult0", "unit0", "mult1", "unit1"):
            assert D.maps_equal(getattr(d2, attr), getattr(d, attr))
        # symmetric instance: every 4-leaf tree shape evaluates the same way
        ev4 = duoid_to_algebra(D, d, bound=4)
        shapes = [
            two_tree(4, 2, [1, 1, 2, 2]),
            two_tree(4, 1, [1, 1, 1, 1]),
            two_tree(4, 4, [1, 2, 3, 4]),
        ]
        for t_other in shapes[1:]:
            assert D.maps_equal(ev4[shapes[0]], ev4[t_other])
