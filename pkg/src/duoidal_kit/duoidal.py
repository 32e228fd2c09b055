"""Strict duoidal categories: shared combinators, axiom checkers, duoids.

Every instance exposes the same duck interface: objects are opaque hashable
values, `box0`/`box1` are strictly associative and strictly unital on
objects, and the structure maps `interchange`, `delta_e`, `mu_v`, `iota`
are ordinary morphisms of the instance.  Composition is diagrammatic
throughout: ``compose(f, g)`` means "f then g".
"""

from __future__ import annotations

from dataclasses import dataclass

from .finset import SizeError
from .report import CheckReport


def chain(D, *maps):
    out = maps[0]
    for f in maps[1:]:
        out = D.compose(out, f)
    return out


def iterated_mu_v(D, m: int):
    """The canonical map v^{box0 m} -> v; m = 0 gives e -> v."""
    if m == 0:
        return D.iota()
    if m == 1:
        return D.identity(D.v)
    rest = D.box0_many([D.v] * (m - 2)) if m > 2 else None
    if m == 2:
        return D.mu_v()
    step = D.box0_map(D.mu_v(), D.identity(rest))
    return chain(D, step, iterated_mu_v(D, m - 1))


def iterated_delta_e(D, k: int):
    """The canonical map e -> e^{box1 k}; k = 0 gives e -> v."""
    if k == 0:
        return D.iota()
    if k == 1:
        return D.identity(D.e)
    if k == 2:
        return D.delta_e()
    return chain(D, D.delta_e(), D.box1_map(D.identity(D.e), iterated_delta_e(D, k - 1)))


def iterated_interchange(D, xs, ys):
    """The canonical map (box1 xs) box0 (box1 ys) -> box1 (x_i box0 y_i).

    Both lists must have the same length n; n = 0 degenerates to mu_v and
    n = 1 to the identity.  Built from the binary interchange, so any
    bracketing of the iteration agrees by the coherence hexagons.
    """
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys):
        raise ValueError("iterated interchange needs equally many factors")
    n = len(xs)
    if n == 0:
        return D.mu_v()
    if n == 1:
        return D.identity(D.box0(xs[0], ys[0]))
    x_rest = D.box1_many(xs[1:])
    y_rest = D.box1_many(ys[1:])
    first = D.interchange(xs[0], x_rest, ys[0], y_rest)
    rest = iterated_interchange(D, xs[1:], ys[1:])
    return chain(D, first, D.box1_map(D.identity(D.box0(xs[0], ys[0])), rest))


def matrix_interchange(D, grid):
    """Canonical map box0_j (box1_i Z[i][j]) -> box1_i (box0_j Z[i][j]).

    `grid` is a list of rows; all rows must have equal length.  Degenerate
    shapes use the unit comparisons: no rows gives iterated mu_v over the
    columns, no columns gives iterated delta_e over the rows.
    """
    k = len(grid)
    m = len(grid[0]) if k else 0
    if k == 0:
        return iterated_mu_v(D, m)
    if any(len(row) != m for row in grid):
        raise ValueError("ragged interchange grid")
    if m == 0:
        return iterated_delta_e(D, k)
    if m == 1:
        return D.identity(D.box1_many([row[0] for row in grid]))
    col0 = D.box1_many([row[0] for row in grid])
    rest_rows = [[row[j] for j in range(1, m)] for row in grid]
    rest = matrix_interchange(D, rest_rows)
    rest_objs = [D.box0_many(row) for row in rest_rows]
    step = D.box0_map(D.identity(col0), rest)
    shuffle = iterated_interchange(D, [row[0] for row in grid], rest_objs)
    return chain(D, step, shuffle)


# ---------------------------------------------------------------------------
# axiom checking


def _hom_sample(D, x, y, limit):
    try:
        maps = D.hom(x, y)
    except SizeError:
        return []
    return list(maps)[:limit]


def check_duoidal_axioms(D, objects=None, hom_limit=3, tuple_limit=None) -> CheckReport:
    """Check the duoidal coherence diagrams over an object sample.

    Finite instances (``D.objects()`` not None) are checked exhaustively;
    virtual instances are checked pointwise on the supplied sample, with the
    quantifier scope recorded on every report row.
    """
    listed = D.objects()
    if listed is not None:
        sample = list(listed)
        scope = f"all {len(sample)} objects"
    else:
        if objects is None:
            raise ValueError("virtual instance: an object sample is required")
        sample = list(objects)
        scope = f"pointwise on {len(sample)} sample objects"
    rep = CheckReport(f"duoidal axioms: {getattr(D, 'name', type(D).__name__)} ({scope})")
    eq = D.maps_equal

    def find_witness(gen):
        for tup, ok in gen:
            if not ok:
                return tup
        return None

    def pairs():
        for a in sample:
            for b in sample:
                yield a, b

    def quads():
        for a, b in pairs():
            for c, d in pairs():
                yield a, b, c, d

    # strictness of the tensors on objects
    w = find_witness(
        (
            ((a, b, c), D.box0(D.box0(a, b), c) == D.box0(a, D.box0(b, c))
             and D.box1(D.box1(a, b), c) == D.box1(a, D.box1(b, c)))
            for a in sample for b in sample for c in sample
        )
    )
    rep.add("strict associativity of box0/box1 on objects", w is None, scope, repr(w))
    w = find_witness(
        (
            ((a,), D.box0(D.e, a) == a == D.box0(a, D.e) and D.box1(D.v, a) == a == D.box1(a, D.v))
            for a in sample
        )
    )
    rep.add("strict unitality of box0/box1 on objects", w is None, scope, repr(w))

    # functoriality of the tensors: composition squares over sampled homs
    def functorial(box_map):
        for a, b in pairs():
            for f in _hom_sample(D, a, b, hom_limit):
                for f2 in _hom_sample(D, b, a, hom_limit):
                    for c, d in pairs():
                        for g in _hom_sample(D, c, d, hom_limit):
                            for g2 in _hom_sample(D, d, c, hom_limit):
                                lhs = box_map(D.compose(f, f2), D.compose(g, g2))
                                rhs = D.compose(box_map(f, g), box_map(f2, g2))
                                if not eq(lhs, rhs):
                                    return (a, b, c, d)
        return None

    w = functorial(D.box0_map)
    rep.add("box0 functorial on morphisms", w is None, f"{scope}; homs capped at {hom_limit}", repr(w))
    w = functorial(D.box1_map)
    rep.add("box1 functorial on morphisms", w is None, f"{scope}; homs capped at {hom_limit}", repr(w))

    # associativity hexagon 1: three box0-factors of box1-pairs
    def hex1():
        count = 0
        for a, b, c, d in quads():
            for e2 in sample:
                for f2 in sample:
                    count += 1
                    if tuple_limit and count > tuple_limit:
                        return None
                    ef = D.box1(e2, f2)
                    left = chain(
                        D,
                        D.box0_map(D.interchange(a, b, c, d), D.identity(ef)),
                        D.interchange(D.box0(a, c), D.box0(b, d), e2, f2),
                    )
                    right = chain(
                        D,
                        D.box0_map(D.identity(D.box1(a, b)), D.interchange(c, d, e2, f2)),
                        D.interchange(a, b, D.box0(c, e2), D.box0(d, f2)),
                    )
                    if not eq(left, right):
                        return (a, b, c, d, e2, f2)
        return None

    w = hex1()
    rep.add("associativity hexagon for box0", w is None, scope, repr(w))

    # associativity hexagon 2: box0 of two box1-triples
    def hex2():
        count = 0
        for a, b, c, d in quads():
            for e2 in sample:
                for f2 in sample:
                    count += 1
                    if tuple_limit and count > tuple_limit:
                        return None
                    left = chain(
                        D,
                        D.interchange(D.box1(a, b), c, D.box1(d, e2), f2),
                        D.box1_map(D.interchange(a, b, d, e2), D.identity(D.box0(c, f2))),
                    )
                    right = chain(
                        D,
                        D.interchange(a, D.box1(b, c), d, D.box1(e2, f2)),
                        D.box1_map(D.identity(D.box0(a, d)), D.interchange(b, c, e2, f2)),
                    )
                    if not eq(left, right):
                        return (a, b, c, d, e2, f2)
        return None

    w = hex2()
    rep.add("associativity hexagon for box1", w is None, scope, repr(w))

    # the four unit squares
    e, v = D.e, D.v

    def unit_squares():
        for a, b in pairs():
            ab1 = D.box1(a, b)
            lhs = chain(D, D.box0_map(D.delta_e(), D.identity(ab1)), D.interchange(e, e, a, b))
            if not eq(lhs, D.identity(ab1)):
                return ("left e-square", a, b)
            lhs = chain(D, D.box0_map(D.identity(ab1), D.delta_e()), D.interchange(a, b, e, e))
            if not eq(lhs, D.identity(ab1)):
                return ("right e-square", a, b)
            ab0 = D.box0(a, b)
            lhs = chain(D, D.interchange(v, a, v, b), D.box1_map(D.mu_v(), D.identity(ab0)))
            if not eq(lhs, D.identity(ab0)):
                return ("left v-square", a, b)
            lhs = chain(D, D.interchange(a, v, b, v), D.box1_map(D.identity(ab0), D.mu_v()))
            if not eq(lhs, D.identity(ab0)):
                return ("right v-square", a, b)
        return None

    w = unit_squares()
    rep.add("unitality squares (4)", w is None, scope, repr(w))

    # v is a box0-monoid with unit iota
    ok = eq(
        chain(D, D.box0_map(D.mu_v(), D.identity(v)), D.mu_v()),
        chain(D, D.box0_map(D.identity(v), D.mu_v()), D.mu_v()),
    ) and eq(chain(D, D.box0_map(D.iota(), D.identity(v)), D.mu_v()), D.identity(v)) and eq(
        chain(D, D.box0_map(D.identity(v), D.iota()), D.mu_v()), D.identity(v)
    )
    rep.add("v is a monoid in (D, box0, e)", ok, scope)

    # e is a box1-comonoid with counit iota
    ok = eq(
        chain(D, D.delta_e(), D.box1_map(D.delta_e(), D.identity(e))),
        chain(D, D.delta_e(), D.box1_map(D.identity(e), D.delta_e())),
    ) and eq(chain(D, D.delta_e(), D.box1_map(D.iota(), D.identity(e))), D.identity(e)) and eq(
        chain(D, D.delta_e(), D.box1_map(D.identity(e), D.iota())), D.identity(e)
    )
    rep.add("e is a comonoid in (D, box1, v)", ok, scope)

    # naturality of the interchange in all four arguments
    def naturality():
        for a, b in pairs():
            for c, d in pairs():
                fs = _hom_sample(D, a, b, hom_limit)
                gs = _hom_sample(D, c, d, hom_limit)
                for f in fs:
                    for g in gs:
                        for h in fs:
                            for k in gs:
                                lhs = chain(
                                    D,
                                    D.box0_map(D.box1_map(f, g), D.box1_map(h, k)),
                                    D.interchange(b, d, D.cod(h), D.cod(k)),
                                )
                                rhs = chain(
                                    D,
                                    D.interchange(a, c, D.dom(h), D.dom(k)),
                                    D.box1_map(D.box0_map(f, h), D.box0_map(g, k)),
                                )
                                if not eq(lhs, rhs):
                                    return (a, b, c, d)
        return None

    w = naturality()
    rep.add("interchange natural in all arguments", w is None, f"{scope}; homs capped at {hom_limit}", repr(w))
    return rep


def derived_unit_comparison(D):
    """The map e -> v induced by the interchange at (e, v, v, e).

    Under strictness the unit isomorphisms are identities, so this is the
    interchange component itself; it must coincide with iota.
    """
    return D.interchange(D.e, D.v, D.v, D.e)


# ---------------------------------------------------------------------------
# duoids


@dataclass
class Duoid:
    carrier: object
    mult0: object  # X box0 X -> X
    unit0: object  # e -> X
    mult1: object  # X box1 X -> X
    unit1: object  # v -> X
    name: str = "duoid"


def check_duoid_axioms(D, d: Duoid) -> CheckReport:
    rep = CheckReport(f"duoid axioms: {d.name}")
    eq = D.maps_equal
    x = d.carrier
    idx = D.identity(x)

    ok = eq(chain(D, D.box0_map(d.mult0, idx), d.mult0), chain(D, D.box0_map(idx, d.mult0), d.mult0))
    rep.add("mult0 associative", ok)
    ok = eq(chain(D, D.box0_map(d.unit0, idx), d.mult0), idx) and eq(
        chain(D, D.box0_map(idx, d.unit0), d.mult0), idx
    )
    rep.add("mult0 unital", ok)
    ok = eq(chain(D, D.box1_map(d.mult1, idx), d.mult1), chain(D, D.box1_map(idx, d.mult1), d.mult1))
    rep.add("mult1 associative", ok)
    ok = eq(chain(D, D.box1_map(d.unit1, idx), d.mult1), idx) and eq(
        chain(D, D.box1_map(idx, d.unit1), d.mult1), idx
    )
    rep.add("mult1 unital", ok)

    # (*) unit1 is a morphism of box0-monoids (v, mu_v, iota) -> (X, mult0, unit0)
    ok = eq(chain(D, D.box0_map(d.unit1, d.unit1), d.mult0), chain(D, D.mu_v(), d.unit1))
    rep.add("(*) unit1 preserves multiplication", ok)
    ok = eq(chain(D, D.iota(), d.unit1), d.unit0)
    rep.add("(*) unit1 preserves the unit", ok)

    # (**) middle interchange compatibility
    lhs = chain(D, D.box0_map(d.mult1, d.mult1), d.mult0)
    rhs = chain(D, D.interchange(x, x, x, x), D.box1_map(d.mult0, d.mult0), d.mult1)
    rep.add("(**) interchange square", eq(lhs, rhs))
    return rep


def v_as_duoid(D) -> Duoid:
    """The second unit with its canonical duoid structure."""
    return Duoid(D.v, D.mu_v(), D.iota(), D.identity(D.v), D.identity(D.v), name="v")


class InterchangeOverride:
    """Delegating wrapper that patches selected interchange components.

    Used for negative tests: `patch(a, b, c, d)` returns a replacement map or
    None to keep the base component.
    """

    def __init__(self, base, patch, name="patched"):
        self._base = base
        self._patch = patch
        self.name = name

    def interchange(self, a, b, c, d):
        out = self._patch(a, b, c, d)
        if out is not None:
            return out
        return self._base.interchange(a, b, c, d)

    def __getattr__(self, attr):
        return getattr(self._base, attr)
