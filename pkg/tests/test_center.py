import pytest

from duoidal_kit.center import (
    InternalConsistencyError,
    center_of_monoid,
    constant_weights,
    duoid_on_center,
    equalizer_center,
    homotopy_center,
    lax_center_weights,
    mult0_variants,
    ordinal_weights,
    totalize,
)
from duoidal_kit.duoidal import check_duoid_axioms
from duoidal_kit.finset import CartesianFinSet, atom_letter
from duoidal_kit.kcat import CartesianSelfEnriched, k_monoid_from_monoid
from duoidal_kit.monoids import cyclic, full_transformation2, left_zero_plus_unit, monoid_corpus
from duoidal_kit.operads import (
    cosimplicial_from_multiplicative,
    multiplicative_from_k_monoid,
)

D = CartesianFinSet()
K = CartesianSelfEnriched(D)


def monoid_value(level0_element):
    return level0_element[0][0][1][0]


def center_values(cen):
    return sorted((monoid_value(z) for z in cen.fibers[None]), key=repr)


def test_center_matches_brute_force_everywhere():
    for m in monoid_corpus():
        cen, tot = center_of_monoid(k_monoid_from_monoid(m, K), N=1)
        assert center_values(cen) == sorted(m.center(), key=repr), m.name


def test_center_of_transformation_monoid_is_trivial():
    cen, _ = center_of_monoid(k_monoid_from_monoid(full_transformation2(), K))
    assert center_values(cen) == ["id"]


def test_center_of_unit_monoid_is_the_unit_hom():
    # the unit object is a monoid; its center is the full endomorphism hom
    from duoidal_kit.kcat import KMonoid, und_id

    unit_monoid = KMonoid(K, (), und_id(K, ()), und_id(K, ()), und_id(K, ()), name="eta")
    cen = equalizer_center(multiplicative_from_k_monoid(unit_monoid, bound=3))
    assert len(cen.fibers[None]) == 1


def test_totalize_constant_weights_is_the_equalizer_and_stabilizes():
    for m in (cyclic(4), full_transformation2()):
        M = k_monoid_from_monoid(m, K)
        A = multiplicative_from_k_monoid(M, bound=4)
        X = cosimplicial_from_multiplicative(A, 2)
        tot = totalize(D, X, constant_weights(), N=2)
        assert tot.stabilized and tot.stabilized_from == 1
        cen = equalizer_center(A)
        assert sorted((f[0][0] for f in tot.families[None]), key=repr) == sorted(
            cen.fibers[None], key=repr
        )


def test_totalize_constant_on_a_constant_object_gives_level_zero():
    # constant cosimplicial object: every level the same, all maps identities
    from duoidal_kit.operads import CosimplicialObject

    X0 = (atom_letter("c", ["x", "y", "z"]),)
    ident = D.identity(X0)
    X = CosimplicialObject(
        D,
        {n: X0 for n in range(4)},
        {(n, i): ident for n in range(3) for i in range(n + 2)},
        {(n, i): ident for n in range(3) for i in range(n + 1)},
        2,
    )
    tot = totalize(D, X, constant_weights(), N=2)
    assert len(tot.families[None]) == 3 and tot.stabilized


def test_restrictions_injective_once_stabilized():
    M = k_monoid_from_monoid(cyclic(3), K)
    A = multiplicative_from_k_monoid(M, bound=4)
    X = cosimplicial_from_multiplicative(A, 3)
    tot = totalize(D, X, constant_weights(), N=3)
    assert tot.stabilized
    for k in range(tot.stabilized_from, 3):
        later = tot.by_level[None][k + 1]
        prefixes = [fam[: k + 1] for fam in later]
        assert len(set(prefixes)) == len(later)


def test_duoid_on_center_passes_and_is_coface_independent():
    for m in (cyclic(3), full_transformation2(), left_zero_plus_unit(2, "lz3")):
        M = k_monoid_from_monoid(m, K)
        A = multiplicative_from_k_monoid(M, bound=4)
        duoid, cen = duoid_on_center(A, name=f"Z({m.name})")
        assert check_duoid_axioms(D, duoid).all_passed
        variants = mult0_variants(A, cen)
        base = variants[(0, 0)]
        assert all(D.maps_equal(base, v) for v in variants.values())


def test_duoid_on_center_collapses_to_the_multiplication_when_commutative():
    m = cyclic(3)
    M = k_monoid_from_monoid(m, K)
    A = multiplicative_from_k_monoid(M, bound=4)
    duoid, cen = duoid_on_center(A)
    # both multiplications restrict the monoid multiplication to Z(M) = M
    for z1 in cen.fibers[None]:
        for z2 in cen.fibers[None]:
            a, b = monoid_value(z1), monoid_value(z2)
            out0 = D.apply(duoid.mult0, (z1, z2))
            out1 = D.apply(duoid.mult1, (z1, z2))
            assert monoid_value(out0[0]) == m.mult(a, b)
            assert monoid_value(out1[0]) == m.mult(a, b)


def test_lax_and_colax_weights():
    lax = lax_center_weights("lax")
    colax = lax_center_weights("colax")
    assert len(lax.level(0)) == 1  # singleton-based weight at the bottom
    with pytest.raises(ValueError):
        lax_center_weights("sideways")

    def families(m, weights):
        M = k_monoid_from_monoid(m, K)
        A = multiplicative_from_k_monoid(M, bound=4)
        X = cosimplicial_from_multiplicative(A, 2)
        return totalize(D, X, weights, N=2)

    # noncommutative: the two orientations produce different family sets
    noncomm = left_zero_plus_unit(2, "lz3")
    t_lax = families(noncomm, lax)
    t_colax = families(noncomm, colax)
    assert set(t_lax.families[None]) != set(t_colax.families[None])
    # commutative: both agree with each other and with the classical center
    comm = cyclic(3)
    t_lax = families(comm, lax)
    t_colax = families(comm, colax)
    assert set(t_lax.families[None]) == set(t_colax.families[None])
    proj = sorted((monoid_value(f[0][0]) for f in t_lax.families[None]), key=repr)
    assert proj == sorted(comm.center(), key=repr)


def test_ordinal_weights_give_unconstrained_families():
    m = full_transformation2()
    M = k_monoid_from_monoid(m, K)
    A = multiplicative_from_k_monoid(M, bound=4)
    X = cosimplicial_from_multiplicative(A, 2)
    tot = totalize(D, X, ordinal_weights(), N=2)
    assert len(tot.families[None]) == len(m.elements)


def test_homotopy_center_is_a_documented_stub():
    with pytest.raises(NotImplementedError):
        homotopy_center()


def test_totalize_rejects_level_zero():
    M = k_monoid_from_monoid(cyclic(2), K)
    A = multiplicative_from_k_monoid(M, bound=3)
    X = cosimplicial_from_multiplicative(A, 2)
    with pytest.raises(ValueError):
        totalize(D, X, constant_weights(), N=0)
