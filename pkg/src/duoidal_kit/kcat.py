"""Monoidal categories enriched in a duoidal instance, and their monoids.

A D-monoidal category K has hom-objects in a duoidal instance D, a strictly
associative tensor on objects, composition/unit structure maps in D, lax
tensoring of homs along box1, and the extra unitary map v -> K(eta, eta).
The underlying category has hom-sets D(e, K(X, Y)).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .duoidal import chain
from .finset import (
    CartMap,
    DEFAULT_CAP,
    FnElt,
    SizeError,
    apply_fn_elt,
    fn_letter,
    graph_of,
    word_elements,
    word_size,
)
from .monoids import Monoid
from .report import CheckReport


def fn_elt_of(dom_word, call, cap=DEFAULT_CAP):
    """A function element: a graph when the domain is enumerable, else lazy."""
    n = word_size(dom_word)
    if n is not None and n <= cap:
        return graph_of((x, call(x)) for x in word_elements(dom_word, cap))
    return FnElt(call)


def compose_fn_elts(f_el, g_el):
    """Elementwise composition f then g of function elements."""
    if isinstance(f_el, tuple):
        return graph_of((x, apply_fn_elt(g_el, y)) for x, y in f_el)
    return FnElt(lambda x: apply_fn_elt(g_el, f_el.call(x)))


class CartesianSelfEnriched:
    """Finite sets enriched in themselves: hom-objects are function sets."""

    def __init__(self, D):
        self.D = D
        self.name = "finset_self_enriched"

    def objects(self):
        return None

    @property
    def eta(self):
        return ()

    def odot(self, x, y):
        return tuple(x) + tuple(y)

    def odot_many(self, xs):
        out = ()
        for x in xs:
            out += tuple(x)
        return out

    def odot_power(self, x, n):
        return self.odot_many([x] * n)

    def hom_obj(self, x, y):
        return (fn_letter(tuple(x), tuple(y)),)

    def comp_map(self, x, y, z):
        dom = self.hom_obj(x, y) + self.hom_obj(y, z)

        def act(t):
            f_el, g_el = t
            return (compose_fn_elts(f_el, g_el),)

        return CartMap(dom, self.hom_obj(x, z), fn=act)

    def unit_map(self, x):
        target = self.hom_obj(x, x)
        ident = fn_elt_of(tuple(x), lambda t: t)
        return CartMap((), target, table={(): (ident,)})

    def odot_hom_map(self, x, y, z, w):
        dom = self.hom_obj(x, y) + self.hom_obj(z, w)
        cut = len(x)

        def act(t):
            f_el, g_el = t

            def prod(arg, f_el=f_el, g_el=g_el):
                return apply_fn_elt(f_el, arg[:cut]) + apply_fn_elt(g_el, arg[cut:])

            return (fn_elt_of(tuple(x) + tuple(z), prod),)

        return CartMap(dom, self.hom_obj(self.odot(x, z), self.odot(y, w)), fn=act)

    def v_action_map(self):
        return self.unit_map(())


def odot_hom_many(K, pairs):
    """Iterated lax tensoring: box1_i K(A_i, B_i) -> K(odot A_i, odot B_i).

    Needs at least one factor; callers handle the empty case themselves.
    """
    pairs = list(pairs)
    if not pairs:
        raise ValueError("odot_hom_many needs at least one hom factor")
    if len(pairs) == 1:
        a, b = pairs[0]
        return K.D.identity(K.hom_obj(a, b))
    (a, b), rest = pairs[0], pairs[1:]
    rest_map = odot_hom_many(K, rest)
    rest_a = K.odot_many([p[0] for p in rest])
    rest_b = K.odot_many([p[1] for p in rest])
    step = K.D.box1_map(K.D.identity(K.hom_obj(a, b)), rest_map)
    return chain(K.D, step, K.odot_hom_map(a, b, rest_a, rest_b))


# ---------------------------------------------------------------------------
# the underlying category


def und_hom(K, x, y, cap=DEFAULT_CAP):
    """The underlying hom-set D(e, K(x, y)) as a list of D-maps."""
    return K.D.hom(K.D.e, K.hom_obj(x, y))


def und_id(K, x):
    return K.unit_map(x)


def und_compose(K, phi, psi, x, y, z):
    """Composition in the underlying category (phi: x->y then psi: y->z)."""
    D = K.D
    return chain(D, D.box0_map(phi, psi), K.comp_map(x, y, z))


def und_odot(K, phi, psi, x, y, z, w):
    """The tensor of underlying maps, via the comonoid structure of e."""
    D = K.D
    return chain(D, D.delta_e(), D.box1_map(phi, psi), K.odot_hom_map(x, y, z, w))


def und_equal(K, phi, psi):
    return K.D.maps_equal(phi, psi)


# ---------------------------------------------------------------------------
# monoids in K


@dataclass
class KMonoid:
    K: object
    carrier: object
    nu_bar: object  # e -> K(eta, M)
    mu_bar: object  # e -> K(M odot M, M)
    u: object  # v -> K(M, M)
    name: str = "monoid"


def k_monoid_from_monoid(m: Monoid, K, letter=None) -> KMonoid:
    """The one-carrier monoid in cartesian FinSet induced by a plain monoid."""
    from .finset import atom_letter, virtual_letter

    if letter is None:
        if m.elements is None:
            letter = virtual_letter(m.name)
        else:
            letter = atom_letter(m.name, m.elements)
    carrier = (letter,)
    squared = carrier + carrier
    nu_el = graph_of([((), (m.unit,))])
    nu_bar = CartMap((), K.hom_obj((), carrier), table={(): (nu_el,)})
    mu_el = fn_elt_of(squared, lambda t: (m.mult(t[0], t[1]),))
    mu_bar = CartMap((), K.hom_obj(squared, carrier), table={(): (mu_el,)})
    u_el = fn_elt_of(carrier, lambda t: t)
    u = CartMap((), K.hom_obj(carrier, carrier), table={(): (u_el,)})
    return KMonoid(K, carrier, nu_bar, mu_bar, u, name=m.name)


def check_k_monoid(M: KMonoid) -> CheckReport:
    K = M.K
    D = K.D
    rep = CheckReport(f"monoid in K: {M.name}")
    x = M.carrier
    eta = K.eta
    x2 = K.odot(x, x)
    x3 = K.odot_many([x, x, x])
    idx = und_id(K, x)

    # (*) associativity and units in the underlying category
    left = und_compose(K, und_odot(K, M.mu_bar, idx, x2, x, x, x), M.mu_bar, x3, x2, x)
    right = und_compose(K, und_odot(K, idx, M.mu_bar, x, x, x2, x), M.mu_bar, x3, x2, x)
    rep.add("(*) multiplication associative in Und K", und_equal(K, left, right))
    left = und_compose(K, und_odot(K, M.nu_bar, idx, eta, x, x, x), M.mu_bar, x, x2, x)
    right = und_compose(K, und_odot(K, idx, M.nu_bar, x, x, eta, x), M.mu_bar, x, x2, x)
    rep.add(
        "(*) unit laws in Und K",
        und_equal(K, left, idx) and und_equal(K, right, idx),
    )

    # (**) u is a monoid morphism v -> K(M, M)
    lhs = chain(D, D.box0_map(M.u, M.u), K.comp_map(x, x, x))
    rhs = chain(D, D.mu_v(), M.u)
    rep.add("(**) u preserves multiplication", D.maps_equal(lhs, rhs))
    rep.add("(**) u preserves the unit", D.maps_equal(chain(D, D.iota(), M.u), K.unit_map(x)))

    # (***) compatibility of u with the multiplication
    lhs = chain(D, D.box0_map(M.mu_bar, M.u), K.comp_map(x2, x, x))
    rhs = chain(
        D,
        D.box1_map(M.u, M.u),
        D.box0_map(K.odot_hom_map(x, x, x, x), M.mu_bar),
        K.comp_map(x2, x2, x),
    )
    rep.add("(***) compatibility square", D.maps_equal(lhs, rhs))
    return rep


# ---------------------------------------------------------------------------
# K-enriched categories


@dataclass
class KCategory:
    K: object
    objects: tuple
    hom: dict  # (x, y) -> K-object
    units: dict = field(default_factory=dict)  # x -> e -> K(eta, hom[x,x])
    comps: dict = field(default_factory=dict)  # (x, y, z) -> e -> K(hom[x,y] odot hom[y,z], hom[x,z])
    u: dict = field(default_factory=dict)  # (x, y) -> v -> K(hom[x,y], hom[x,y])
    name: str = "kcat"


def check_k_category(C: KCategory) -> CheckReport:
    K = C.K
    D = K.D
    rep = CheckReport(f"K-category axioms: {C.name}")
    assoc_witness = ""
    for x in C.objects:
        for y in C.objects:
            for z in C.objects:
                for w in C.objects:
                    hxy, hyz, hzw = C.hom[(x, y)], C.hom[(y, z)], C.hom[(z, w)]
                    lhs = und_compose(
                        K,
                        und_odot(K, C.comps[(x, y, z)], und_id(K, hzw), K.odot(hxy, hyz), C.hom[(x, z)], hzw, hzw),
                        C.comps[(x, z, w)],
                        K.odot_many([hxy, hyz, hzw]),
                        K.odot(C.hom[(x, z)], hzw),
                        C.hom[(x, w)],
                    )
                    rhs = und_compose(
                        K,
                        und_odot(K, und_id(K, hxy), C.comps[(y, z, w)], hxy, hxy, K.odot(hyz, hzw), C.hom[(y, w)]),
                        C.comps[(x, y, w)],
                        K.odot_many([hxy, hyz, hzw]),
                        K.odot(hxy, C.hom[(y, w)]),
                        C.hom[(x, w)],
                    )
                    if not und_equal(K, lhs, rhs):
                        assoc_witness = repr((x, y, z, w))
    rep.add("composition associative", not assoc_witness, scope=f"{len(C.objects)}^4 tuples", witness=assoc_witness)
    ok_units = True
    witness = ""
    for x in C.objects:
        for y in C.objects:
            hxy = C.hom[(x, y)]
            left = und_compose(
                K,
                und_odot(K, C.units[x], und_id(K, hxy), K.eta, C.hom[(x, x)], hxy, hxy),
                C.comps[(x, x, y)],
                hxy,
                K.odot(C.hom[(x, x)], hxy),
                hxy,
            )
            right = und_compose(
                K,
                und_odot(K, und_id(K, hxy), C.units[y], hxy, hxy, K.eta, C.hom[(y, y)]),
                C.comps[(x, y, y)],
                hxy,
                K.odot(hxy, C.hom[(y, y)]),
                hxy,
            )
            if not (und_equal(K, left, und_id(K, hxy)) and und_equal(K, right, und_id(K, hxy))):
                ok_units = False
                witness = repr((x, y))
    rep.add("unit laws", ok_units, witness=witness)
    ok_u = True
    witness = ""
    for x in C.objects:
        for y in C.objects:
            hxy = C.hom[(x, y)]
            um = C.u[(x, y)]
            lhs = chain(D, D.box0_map(um, um), K.comp_map(hxy, hxy, hxy))
            if not D.maps_equal(lhs, chain(D, D.mu_v(), um)):
                ok_u = False
                witness = repr((x, y))
            if not D.maps_equal(chain(D, D.iota(), um), K.unit_map(hxy)):
                ok_u = False
                witness = repr((x, y))
    rep.add("u components are monoid morphisms", ok_u, witness=witness)
    ok_compat = True
    witness = ""
    for x in C.objects:
        for y in C.objects:
            for z in C.objects:
                hxy, hyz, hxz = C.hom[(x, y)], C.hom[(y, z)], C.hom[(x, z)]
                lhs = chain(D, D.box0_map(C.comps[(x, y, z)], C.u[(x, z)]), K.comp_map(K.odot(hxy, hyz), hxz, hxz))
                rhs = chain(
                    D,
                    D.box1_map(C.u[(x, y)], C.u[(y, z)]),
                    D.box0_map(K.odot_hom_map(hxy, hxy, hyz, hyz), C.comps[(x, y, z)]),
                    K.comp_map(K.odot(hxy, hyz), K.odot(hxy, hyz), hxz),
                )
                if not D.maps_equal(lhs, rhs):
                    ok_compat = False
                    witness = repr((x, y, z))
    rep.add("(***) compatibility per triple", ok_compat, witness=witness)
    return rep


def sigma(M: KMonoid) -> KCategory:
    """A monoid as a one-object K-category."""
    star = "*"
    return KCategory(
        M.K,
        (star,),
        {(star, star): M.carrier},
        units={star: M.nu_bar},
        comps={(star, star, star): M.mu_bar},
        u={(star, star): M.u},
        name=f"sigma({M.name})",
    )


def monoid_from_one_object(C: KCategory) -> KMonoid:
    if len(C.objects) != 1:
        raise ValueError("expected a K-category with exactly one object")
    x = C.objects[0]
    return KMonoid(C.K, C.hom[(x, x)], C.units[x], C.comps[(x, x, x)], C.u[(x, x)], name=C.name)


def underlying_hom(K, x, y, cap=DEFAULT_CAP):
    """The hom-set of the underlying category: D(e, K(x, y))."""
    return und_hom(K, x, y, cap)
