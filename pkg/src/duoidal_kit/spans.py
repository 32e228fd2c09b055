"""Globe-indexed families of finite sets over a finite base category.

An object assigns a finite set to each globe (parallel pair of arrows) of
the base, with finite support.  The horizontal tensor sums over
factorizations of the globe's two arrows, the vertical tensor over
composable parallel pairs; the interchange includes the matching-middles
configurations into the general ones.

Strictness is achieved formally: objects are atoms or flattened tensor
nodes, with unit atoms dropped during canonicalization, and the fibers of a
tensor node are chain-tagged tuples.  All morphisms are stored as per-globe
dictionaries over the (finite) support.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fincat import FiniteCategory
from .finset import SizeError
from .report import skey, sorted_elements


@dataclass(frozen=True)
class Globe:
    a: str
    b: str
    f: str
    g: str

    def sort_key(self):
        return (self.a, self.b, self.f, self.g)

    def render(self):
        return f"({self.a},{self.b},{self.f},{self.g})"


def identity_globe(cat: FiniteCategory, a: str) -> Globe:
    ident = cat.identities[a]
    return Globe(a, a, ident, ident)


def arrow_globe(cat: FiniteCategory, f: str) -> Globe:
    return Globe(cat.src(f), cat.tgt(f), f, f)


def all_globes(cat: FiniteCategory):
    return tuple(Globe(*t) for t in cat.parallel_pairs())


def hcompose(cat: FiniteCategory, g1: Globe, g2: Globe) -> Globe:
    if g1.b != g2.a:
        raise ValueError("globes not horizontally composable")
    return Globe(g1.a, g2.b, cat.compose(g1.f, g2.f), cat.compose(g1.g, g2.g))


def vcompose(g1: Globe, g2: Globe) -> Globe:
    if (g1.a, g1.b) != (g2.a, g2.b) or g1.g != g2.f:
        raise ValueError("globes not vertically composable")
    return Globe(g1.a, g1.b, g1.f, g2.g)


@dataclass(frozen=True)
class SpanAtom:
    name: str
    fibers: tuple  # sorted tuple of (Globe, tuple-of-elements)

    def sort_key(self):
        return (self.name,)

    def fiber_dict(self):
        return dict(self.fibers)


def span_atom(name, fibers) -> SpanAtom:
    cleaned = []
    for g, elems in fibers.items() if isinstance(fibers, dict) else fibers:
        elems = tuple(sorted_elements(elems))
        if elems:
            cleaned.append((g, elems))
    cleaned.sort(key=lambda p: p[0].sort_key())
    return SpanAtom(name, tuple(cleaned))


class LazySpanAtom:
    """An atom whose fibers are computed per globe on demand.

    Identity is the structural `key`; used for hom objects whose full fiber
    enumeration would be wasteful or enormous.
    """

    __slots__ = ("name", "key", "_fiber_fn", "_cache")

    def __init__(self, name, key, fiber_fn):
        self.name = name
        self.key = key
        self._fiber_fn = fiber_fn
        self._cache = {}

    def __eq__(self, other):
        return isinstance(other, LazySpanAtom) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"LazySpanAtom({self.name})"

    def sort_key(self):
        return (self.name, skey(self.key))

    def fiber(self, globe):
        if globe not in self._cache:
            self._cache[globe] = tuple(self._fiber_fn(globe))
        return self._cache[globe]


@dataclass(frozen=True)
class SpanNode:
    kind: str  # "p0" or "p1"
    children: tuple

    def sort_key(self):
        return (self.kind, tuple(c.sort_key() for c in self.children))


class SpanMor:
    """A morphism of globe-indexed families, evaluated lazily.

    Either a per-globe table or a callable (globe, element) -> element; the
    table is materialized on demand (equality always materializes).
    """

    __slots__ = ("dom", "cod", "_mapping", "_fn", "_memo")

    def __init__(self, dom, cod, mapping=None, fn=None):
        self.dom = dom
        self.cod = cod
        self._mapping = mapping
        self._fn = fn
        self._memo = {} if mapping is None else None

    def apply(self, globe, elt):
        if self._mapping is not None:
            return self._mapping[globe][elt]
        key = (globe, elt)
        out = self._memo.get(key)
        if out is None:
            out = self._memo[key] = self._fn(globe, elt)
        return out

    def __repr__(self):
        state = "table" if self._mapping is not None else "lazy"
        return f"SpanMor({state})"


class SpanDuoidal:
    """The duoidal instance of globe-indexed families over a finite base."""

    def __init__(self, cat: FiniteCategory):
        self.cat = cat
        self.name = f"spans({cat.name})"
        self._i0 = span_atom("I0", {identity_globe(cat, a): ((),) for a in cat.objects})
        self._i1 = span_atom("I1", {arrow_globe(cat, f): ((),) for f in cat.arrows})
        self._fiber_cache = {}

    # -- objects ---------------------------------------------------------
    @property
    def e(self):
        return self._i0

    @property
    def v(self):
        return self._i1

    def objects(self):
        return None

    def atom(self, name, fibers):
        atom = span_atom(name, fibers)
        for g, _ in atom.fibers:
            if (g.a, g.b, g.f, g.g) not in self.cat.parallel_pairs():
                raise ValueError(f"atom {name}: globe {g.render()} not in the base")
        return atom

    def box0_factors(self, x):
        if x == self._i0:
            return []
        if isinstance(x, SpanNode) and x.kind == "p0":
            return list(x.children)
        return [x]

    def box1_factors(self, x):
        if x == self._i1:
            return []
        if isinstance(x, SpanNode) and x.kind == "p1":
            return list(x.children)
        return [x]

    def box0_many(self, xs):
        flat = []
        for x in xs:
            flat.extend(self.box0_factors(x))
        if not flat:
            return self._i0
        if len(flat) == 1:
            return flat[0]
        return SpanNode("p0", tuple(flat))

    def box1_many(self, xs):
        flat = []
        for x in xs:
            flat.extend(self.box1_factors(x))
        if not flat:
            return self._i1
        if len(flat) == 1:
            return flat[0]
        return SpanNode("p1", tuple(flat))

    def box0(self, x, y):
        return self.box0_many([x, y])

    def box1(self, x, y):
        return self.box1_many([x, y])

    # -- fibers ----------------------------------------------------------
    def _binary_splits0(self, globe):
        """Pairs (G1, G2) horizontally composing to the globe."""
        out = []
        for f1, f2 in self.cat.factorizations(globe.f):
            mid = self.cat.tgt(f1)
            for g1, g2 in self.cat.factorizations(globe.g):
                if self.cat.tgt(g1) == mid:
                    out.append((Globe(globe.a, mid, f1, g1), Globe(mid, globe.b, f2, g2)))
        return out

    def chains0(self, globe, k):
        """All k-chains of globes horizontally composing to the globe."""
        if k == 0:
            return [()] if globe == identity_globe(self.cat, globe.a) and globe.a == globe.b else []
        if k == 1:
            return [(globe,)]
        out = []
        for g1, g2 in self._binary_splits0(globe):
            for rest in self.chains0(g2, k - 1):
                out.append((g1,) + rest)
        return out

    def chains1(self, globe, k):
        """All k-chains of globes vertically composing to the globe."""
        if k == 0:
            return [()] if globe.f == globe.g else []
        if k == 1:
            return [(globe,)]
        out = []
        for mid in self.cat.hom(globe.a, globe.b):
            g1 = Globe(globe.a, globe.b, globe.f, mid)
            for rest in self.chains1(Globe(globe.a, globe.b, mid, globe.g), k - 1):
                out.append((g1,) + rest)
        return out

    def fiber(self, obj, globe):
        """The fiber of an object over one globe (computed on demand)."""
        key = (obj, globe)
        cached = self._fiber_cache.get(key)
        if cached is not None:
            return cached
        if isinstance(obj, SpanAtom):
            out = obj.fiber_dict().get(globe, ())
        elif isinstance(obj, LazySpanAtom):
            out = obj.fiber(globe)
        else:
            chains = self.chains0(globe, len(obj.children)) if obj.kind == "p0" else self.chains1(
                globe, len(obj.children)
            )
            elems = []
            for chain in chains:
                child_fibers = [self.fiber(c, g) for c, g in zip(obj.children, chain)]
                if any(not f for f in child_fibers):
                    continue
                for comps in itertools.product(*child_fibers):
                    elems.append((chain, comps))
            out = tuple(elems)
        self._fiber_cache[key] = out
        return out

    def fibers_of(self, obj) -> dict:
        return {g: self.fiber(obj, g) for g in all_globes(self.cat) if self.fiber(obj, g)}

    def support(self, obj):
        return tuple(g for g in all_globes(self.cat) if self.fiber(obj, g))

    # -- splitting and joining tensor elements ----------------------------
    def _arity0(self, x):
        return len(self.box0_factors(x))

    def _arity1(self, x):
        return len(self.box1_factors(x))

    def split0(self, factors, globe, elt):
        """Decompose an element of box0_many(factors) per original factor."""
        arities = [self._arity0(x) for x in factors]
        total = sum(arities)
        if total == 0:
            chain, comps = (), ()
        elif total == 1:
            chain, comps = (globe,), (elt,)
        else:
            chain, comps = elt
        parts = []
        pos = 0
        cur_obj = globe.a
        for x, k in zip(factors, arities):
            if k == 0:
                parts.append((identity_globe(self.cat, cur_obj), ()))
                continue
            sub_chain = chain[pos : pos + k]
            sub_comps = comps[pos : pos + k]
            pos += k
            g = sub_chain[0]
            for nxt in sub_chain[1:]:
                g = hcompose(self.cat, g, nxt)
            cur_obj = g.b
            parts.append((g, sub_comps[0] if k == 1 else (sub_chain, sub_comps)))
        return parts

    def split1(self, factors, globe, elt):
        arities = [self._arity1(x) for x in factors]
        total = sum(arities)
        if total == 0:
            chain, comps = (), ()
        elif total == 1:
            chain, comps = (globe,), (elt,)
        else:
            chain, comps = elt
        parts = []
        pos = 0
        cur_arrow = globe.f
        for x, k in zip(factors, arities):
            if k == 0:
                parts.append((arrow_globe(self.cat, cur_arrow), ()))
                continue
            sub_chain = chain[pos : pos + k]
            sub_comps = comps[pos : pos + k]
            pos += k
            g = sub_chain[0]
            for nxt in sub_chain[1:]:
                g = vcompose(g, nxt)
            cur_arrow = g.g
            parts.append((g, sub_comps[0] if k == 1 else (sub_chain, sub_comps)))
        return parts

    def join0(self, factors, parts):
        """Reassemble per-factor (globe, element) pairs; inverse of split0."""
        flat_chain = []
        flat_comps = []
        composite = None
        for x, (g, elt) in zip(factors, parts):
            k = self._arity0(x)
            composite = g if composite is None else hcompose(self.cat, composite, g)
            if k == 0:
                continue
            if k == 1:
                flat_chain.append(g)
                flat_comps.append(elt)
            else:
                sub_chain, sub_comps = elt
                flat_chain.extend(sub_chain)
                flat_comps.extend(sub_comps)
        if not flat_chain:
            return composite, ()
        if len(flat_chain) == 1:
            return composite, flat_comps[0]
        return composite, (tuple(flat_chain), tuple(flat_comps))

    def join1(self, factors, parts):
        flat_chain = []
        flat_comps = []
        composite = None
        for x, (g, elt) in zip(factors, parts):
            k = self._arity1(x)
            composite = g if composite is None else vcompose(composite, g)
            if k == 0:
                continue
            if k == 1:
                flat_chain.append(g)
                flat_comps.append(elt)
            else:
                sub_chain, sub_comps = elt
                flat_chain.extend(sub_chain)
                flat_comps.extend(sub_comps)
        if not flat_chain:
            return composite, ()
        if len(flat_chain) == 1:
            return composite, flat_comps[0]
        return composite, (tuple(flat_chain), tuple(flat_comps))

    # -- morphisms ---------------------------------------------------------
    def mor(self, dom, cod, mapping) -> SpanMor:
        """A validated, fully tabulated morphism."""
        out = {}
        fibers = self.fibers_of(dom)
        cods = self.fibers_of(cod)
        for g, elems in fibers.items():
            table = mapping.get(g, {})
            row = {}
            for x in elems:
                if x not in table:
                    raise ValueError(f"morphism not total at {g.render()}: missing {x!r}")
                y = table[x]
                if y not in cods.get(g, ()):
                    raise ValueError(f"morphism leaves the codomain fiber at {g.render()}")
                row[x] = y
            if row:
                out[g] = row
        return SpanMor(dom, cod, mapping=out)

    def mor_from_fn(self, dom, cod, fn) -> SpanMor:
        return SpanMor(dom, cod, fn=fn)

    def materialize(self, f: SpanMor) -> dict:
        if f._mapping is None:
            mapping = {}
            for g in self.support(f.dom):
                cod_fiber = set(self.fiber(f.cod, g))
                row = {}
                for x in self.fiber(f.dom, g):
                    y = f._fn(g, x)
                    if y not in cod_fiber:
                        raise ValueError(f"morphism leaves the codomain fiber at {g.render()}")
                    row[x] = y
                if row:
                    mapping[g] = row
            f._mapping = mapping
        return f._mapping

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def identity(self, x):
        return self.mor_from_fn(x, x, lambda g, el: el)

    def compose(self, f, g):
        """f then g."""
        if f.cod != g.dom:
            raise ValueError("compose: middle objects differ")
        return self.mor_from_fn(f.dom, g.cod, lambda gl, el: g.apply(gl, f.apply(gl, el)))

    def maps_equal(self, f, g, cap=None):
        if f.dom != g.dom or f.cod != g.cod:
            return False
        return self.materialize(f) == self.materialize(g)

    def apply_at(self, f, key, elt):
        return f.apply(key, elt)

    def fiber_keys(self, obj):
        return self.support(obj)

    def fiber_elements(self, obj, key):
        return self.fiber(obj, key)

    def hom(self, x, y, cap=100_000):
        """All morphisms x -> y, enumerated per fiber."""
        xf = self.fibers_of(x)
        yf = self.fibers_of(y)
        total = 1
        for g, elems in xf.items():
            choices = len(yf.get(g, ()))
            total *= choices ** len(elems)
            if total > cap:
                raise SizeError("span hom set exceeds cap")
        if total == 0:
            return []
        globes = sorted(xf, key=lambda g: g.sort_key())
        per_globe = []
        for g in globes:
            targets = yf.get(g, ())
            rows = [dict(zip(xf[g], combo)) for combo in itertools.product(targets, repeat=len(xf[g]))]
            per_globe.append(rows)
        out = []
        for combo in itertools.product(*per_globe):
            out.append(SpanMor(x, y, {g: row for g, row in zip(globes, combo) if row}))
        return out

    # -- tensor on morphisms ------------------------------------------------
    def box0_map_many(self, fs):
        fs = list(fs)
        if not fs:
            return self.identity(self._i0)
        doms = [f.dom for f in fs]
        cods = [f.cod for f in fs]
        dom = self.box0_many(doms)
        cod = self.box0_many(cods)

        def act(globe, elt):
            parts = self.split0(doms, globe, elt)
            outs = []
            for f, (g, el) in zip(fs, parts):
                outs.append((g, f.apply(g, el)))
            out_globe, out_elt = self.join0(cods, outs)
            if out_globe != globe:
                raise AssertionError("box0 tensor moved a globe")
            return out_elt

        return self.mor_from_fn(dom, cod, act)

    def box1_map_many(self, fs):
        fs = list(fs)
        if not fs:
            return self.identity(self._i1)
        doms = [f.dom for f in fs]
        cods = [f.cod for f in fs]
        dom = self.box1_many(doms)
        cod = self.box1_many(cods)

        def act(globe, elt):
            parts = self.split1(doms, globe, elt)
            outs = []
            for f, (g, el) in zip(fs, parts):
                outs.append((g, f.apply(g, el)))
            out_globe, out_elt = self.join1(cods, outs)
            if out_globe != globe:
                raise AssertionError("box1 tensor moved a globe")
            return out_elt

        return self.mor_from_fn(dom, cod, act)

    def box0_map(self, f, g):
        return self.box0_map_many([f, g])

    def box1_map(self, f, g):
        return self.box1_map_many([f, g])

    # -- duoidal structure ----------------------------------------------
    def interchange(self, a, b, c, d):
        ab = self.box1_many([a, b])
        cd = self.box1_many([c, d])
        dom = self.box0_many([ab, cd])
        ac = self.box0_many([a, c])
        bd = self.box0_many([b, d])
        cod = self.box1_many([ac, bd])

        def act(globe, elt):
            (g1, e_ab), (g2, e_cd) = self.split0([ab, cd], globe, elt)
            (g1u, ea), (g1d, eb) = self.split1([a, b], g1, e_ab)
            (g2u, ec), (g2d, ed) = self.split1([c, d], g2, e_cd)
            gu, e_ac = self.join0([a, c], [(g1u, ea), (g2u, ec)])
            gd, e_bd = self.join0([b, d], [(g1d, eb), (g2d, ed)])
            out_globe, out = self.join1([ac, bd], [(gu, e_ac), (gd, e_bd)])
            if out_globe != globe:
                raise AssertionError("interchange moved a globe")
            return out

        return self.mor_from_fn(dom, cod, act)

    def delta_e(self):
        target = self.box1_many([self._i0, self._i0])

        def act(globe, elt):
            return ((globe, globe), ((), ()))

        return self.mor_from_fn(self._i0, target, act)

    def mu_v(self):
        dom = self.box0_many([self._i1, self._i1])
        return self.mor_from_fn(dom, self._i1, lambda g, el: ())

    def iota(self):
        return self.mor_from_fn(self._i0, self._i1, lambda g, el: ())

    # -- extra structure used by the center machinery --------------------
    def subobject_from_fibers(self, x, fibers, name):
        sub = span_atom(name, {g: elems for g, elems in fibers.items() if elems})
        incl = self.mor_from_fn(sub, x, lambda g, el: el)
        return sub, incl

    def corestrict_map(self, f, sub, fibers):
        allowed = {g: set(elems) for g, elems in fibers.items()}
        mapping = {}
        for g, elems in self.fibers_of(f.dom).items():
            row = {}
            for x in elems:
                y = f.apply(g, x)
                if y not in allowed.get(g, set()):
                    raise KeyError(f"image at {g.render()} not in the subobject")
                row[x] = y
            mapping[g] = row
        return self.mor(f.dom, sub, mapping)

    def cotensor(self, y, s, name=None):
        """Fiberwise function sets (Y_G)^s, with functions stored as graphs.

        Cotensoring by the empty set gives the singleton over every globe of
        the base, not just over the support of y.
        """
        s = tuple(sorted_elements(s))
        if not s:
            return self.atom(name or "cotensor", {g: ((),) for g in all_globes(self.cat)})
        fibers = {}
        for g, elems in self.fibers_of(y).items():
            fibers[g] = tuple(
                tuple(zip(s, choice)) for choice in itertools.product(elems, repeat=len(s))
            )
        return self.atom(name or "cotensor", fibers)

    def coproduct(self, parts, name=None):
        """Tagged disjoint union of atoms, with the injection morphisms."""
        fibers = {}
        for i, p in enumerate(parts):
            for g, elems in self.fibers_of(p).items():
                fibers.setdefault(g, [])
                fibers[g].extend((i, el) for el in elems)
        out = self.atom(name or "coproduct", {g: tuple(v) for g, v in fibers.items()})
        injections = [
            self.mor_from_fn(p, out, lambda g, el, i=i: (i, el)) for i, p in enumerate(parts)
        ]
        return out, injections
