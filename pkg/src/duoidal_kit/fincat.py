"""Finite categories as tables, and table-backed strict duoidal instances."""

from __future__ import annotations

from dataclasses import dataclass

from .report import CheckReport


class ValidationError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    src: str
    tgt: str

    def sort_key(self):
        return (self.name, self.src, self.tgt)


class FiniteCategory:
    """A finite category: objects, named arrows, a total composition table.

    Composition is diagrammatic: ``compose(f, g)`` is "f then g" and is
    defined when f.tgt == g.src.  Associativity and identity laws are checked
    exhaustively on construction.
    """

    def __init__(self, name, objects, arrows, compose_table, identities):
        self.name = name
        self.objects = tuple(objects)
        self.arrows = {a.name: a for a in arrows}
        self._compose = dict(compose_table)
        self.identities = dict(identities)
        self._validate()
        self._factorizations = self._compute_factorizations()

    def _validate(self):
        objs = set(self.objects)
        for a in self.arrows.values():
            if a.src not in objs or a.tgt not in objs:
                raise ValidationError(f"{self.name}: arrow {a.name} has unknown endpoint")
        for x in self.objects:
            ident = self.identities.get(x)
            if ident not in self.arrows or self.arrows[ident].src != x or self.arrows[ident].tgt != x:
                raise ValidationError(f"{self.name}: bad identity for {x}")
        for f in self.arrows.values():
            for g in self.arrows.values():
                if f.tgt == g.src:
                    h = self._compose.get((f.name, g.name))
                    if h is None:
                        raise ValidationError(f"{self.name}: composition missing at ({f.name}, {g.name})")
                    ha = self.arrows[h]
                    if ha.src != f.src or ha.tgt != g.tgt:
                        raise ValidationError(f"{self.name}: ill-typed composite at ({f.name}, {g.name})")
        for f in self.arrows.values():
            if self.compose(self.identities[f.src], f.name) != f.name:
                raise ValidationError(f"{self.name}: left identity fails at {f.name}")
            if self.compose(f.name, self.identities[f.tgt]) != f.name:
                raise ValidationError(f"{self.name}: right identity fails at {f.name}")
        for f in self.arrows.values():
            for g in self.arrows.values():
                for h in self.arrows.values():
                    if f.tgt == g.src and g.tgt == h.src:
                        if self.compose(self.compose(f.name, g.name), h.name) != self.compose(
                            f.name, self.compose(g.name, h.name)
                        ):
                            raise ValidationError(
                                f"{self.name}: associativity fails at ({f.name}, {g.name}, {h.name})"
                            )

    def _compute_factorizations(self):
        """All pairs (f1, f2) with f = f1 then f2, per arrow f."""
        out = {name: [] for name in self.arrows}
        for f1 in self.arrows.values():
            for f2 in self.arrows.values():
                if f1.tgt == f2.src:
                    out[self._compose[(f1.name, f2.name)]].append((f1.name, f2.name))
        return {k: tuple(sorted(v)) for k, v in out.items()}

    def compose(self, f: str, g: str) -> str:
        """f then g."""
        return self._compose[(f, g)]

    def factorizations(self, f: str):
        return self._factorizations[f]

    def hom(self, x, y):
        return tuple(sorted(a.name for a in self.arrows.values() if a.src == x and a.tgt == y))

    def src(self, f: str) -> str:
        return self.arrows[f].src

    def tgt(self, f: str) -> str:
        return self.arrows[f].tgt

    def arrow_names(self):
        return tuple(sorted(self.arrows))

    def parallel_pairs(self):
        """All globes (A, B, f, g): ordered pairs of parallel arrows."""
        out = []
        for f in self.arrows.values():
            for g in self.arrows.values():
                if f.src == g.src and f.tgt == g.tgt:
                    out.append((f.src, f.tgt, f.name, g.name))
        return tuple(sorted(out))


def finite_category(name, objects, arrow_specs, compose_pairs=None) -> FiniteCategory:
    """Build a finite category, adding identities and closing the table.

    `arrow_specs` lists non-identity arrows as (name, src, tgt);
    `compose_pairs` maps (f, g) to the composite's name for composable
    non-identity pairs.
    """
    arrows = [Arrow(f"id_{x}", x, x) for x in objects]
    arrows += [Arrow(n, s, t) for n, s, t in arrow_specs]
    identities = {x: f"id_{x}" for x in objects}
    table = {}
    by_name = {a.name: a for a in arrows}
    for f in arrows:
        for g in arrows:
            if f.tgt != g.src:
                continue
            if f.name == identities[f.src] and f.src == f.tgt:
                table[(f.name, g.name)] = g.name
            elif g.name == identities[g.src] and g.src == g.tgt:
                table[(f.name, g.name)] = f.name
            else:
                key = (f.name, g.name)
                if compose_pairs is None or key not in compose_pairs:
                    raise ValidationError(f"{name}: composite of {key} unspecified")
                table[key] = compose_pairs[key]
    del by_name
    return FiniteCategory(name, objects, arrows, table, identities)


# ---------------------------------------------------------------------------
# table-backed duoidal instances


class TableDuoidal:
    """A strict duoidal category given entirely by finite tables.

    Objects and morphisms are names; all structure is table lookup.  The
    constructor validates the tables (totality, functoriality, strictness)
    and raises ValidationError on malformed input, before any coherence
    checking runs.
    """

    def __init__(
        self,
        name,
        base: FiniteCategory,
        box0_obj,
        box1_obj,
        e,
        v,
        box0_arr,
        box1_arr,
        interchange_table,
        delta_e,
        mu_v,
        iota,
    ):
        self.name = name
        self.base = base
        self._box0_obj = dict(box0_obj)
        self._box1_obj = dict(box1_obj)
        self._e = e
        self._v = v
        self._box0_arr = dict(box0_arr)
        self._box1_arr = dict(box1_arr)
        self._zeta = dict(interchange_table)
        self._delta_e = delta_e
        self._mu_v = mu_v
        self._iota = iota
        self._validate()

    def _validate(self):
        objs = self.base.objects
        arrs = self.base.arrows
        for table, unit, label in ((self._box0_obj, self._e, "box0"), (self._box1_obj, self._v, "box1")):
            if unit not in objs:
                raise ValidationError(f"{self.name}: unit of {label} is not an object")
            for x in objs:
                for y in objs:
                    if (x, y) not in table or table[(x, y)] not in objs:
                        raise ValidationError(f"{self.name}: {label} object table not total at ({x}, {y})")
                if table[(unit, x)] != x or table[(x, unit)] != x:
                    raise ValidationError(f"{self.name}: {label} not strictly unital at {x}")
            for x in objs:
                for y in objs:
                    for z in objs:
                        if table[(table[(x, y)], z)] != table[(x, table[(y, z)])]:
                            raise ValidationError(f"{self.name}: {label} not strictly associative")
        for table, otable, label in (
            (self._box0_arr, self._box0_obj, "box0"),
            (self._box1_arr, self._box1_obj, "box1"),
        ):
            for f in arrs.values():
                for g in arrs.values():
                    h = table.get((f.name, g.name))
                    if h is None or h not in arrs:
                        raise ValidationError(f"{self.name}: {label} arrow table not total")
                    ha = arrs[h]
                    if ha.src != otable[(f.src, g.src)] or ha.tgt != otable[(f.tgt, g.tgt)]:
                        raise ValidationError(f"{self.name}: {label} arrow table ill-typed at ({f.name}, {g.name})")
        for tup, zname in self._zeta.items():
            a, b, c, d = tup
            za = arrs.get(zname)
            if za is None:
                raise ValidationError(f"{self.name}: interchange entry {tup} is not an arrow")
            src = self._box0_obj[(self._box1_obj[(a, b)], self._box1_obj[(c, d)])]
            tgt = self._box1_obj[(self._box0_obj[(a, c)], self._box0_obj[(b, d)])]
            if za.src != src or za.tgt != tgt:
                raise ValidationError(f"{self.name}: interchange ill-typed at {tup}")
        for x in objs:
            for y in objs:
                for z in objs:
                    for w in objs:
                        if (x, y, z, w) not in self._zeta:
                            raise ValidationError(f"{self.name}: interchange table not total")
        for aname, src, tgt, label in (
            (self._delta_e, self._e, self._box1_obj[(self._e, self._e)], "delta_e"),
            (self._mu_v, self._box0_obj[(self._v, self._v)], self._v, "mu_v"),
            (self._iota, self._e, self._v, "iota"),
        ):
            arr = arrs.get(aname)
            if arr is None or arr.src != src or arr.tgt != tgt:
                raise ValidationError(f"{self.name}: {label} ill-typed")

    # duoidal interface -------------------------------------------------
    @property
    def e(self):
        return self._e

    @property
    def v(self):
        return self._v

    def objects(self):
        return self.base.objects

    def hom(self, x, y):
        return self.base.hom(x, y)

    def dom(self, f):
        return self.base.src(f)

    def cod(self, f):
        return self.base.tgt(f)

    def identity(self, x):
        return self.base.identities[x]

    def compose(self, f, g):
        return self.base.compose(f, g)

    def maps_equal(self, f, g, cap=None):
        return f == g

    def box0(self, x, y):
        return self._box0_obj[(x, y)]

    def box1(self, x, y):
        return self._box1_obj[(x, y)]

    def box0_many(self, xs):
        out = self._e
        for x in xs:
            out = self._box0_obj[(out, x)]
        return out

    def box1_many(self, xs):
        out = self._v
        for x in xs:
            out = self._box1_obj[(out, x)]
        return out

    def box0_map(self, f, g):
        return self._box0_arr[(f, g)]

    def box1_map(self, f, g):
        return self._box1_arr[(f, g)]

    def box0_map_many(self, fs):
        out = self.identity(self._e)
        for f in fs:
            out = self._box0_arr[(out, f)]
        return out

    def box1_map_many(self, fs):
        out = self.identity(self._v)
        for f in fs:
            out = self._box1_arr[(out, f)]
        return out

    def interchange(self, a, b, c, d):
        return self._zeta[(a, b, c, d)]

    def delta_e(self):
        return self._delta_e

    def mu_v(self):
        return self._mu_v

    def iota(self):
        return self._iota


class CatFunctor:
    """A functor between finite categories, given by object and arrow tables."""

    def __init__(self, name, src: FiniteCategory, tgt: FiniteCategory, obj_map, arr_map):
        self.name = name
        self.src = src
        self.tgt = tgt
        self.obj_map = dict(obj_map)
        self.arr_map = dict(arr_map)
        for x in src.objects:
            if self.obj_map.get(x) not in tgt.objects:
                raise ValidationError(f"functor {name}: no image for object {x}")
        for f in src.arrows.values():
            img = self.arr_map.get(f.name)
            if img not in tgt.arrows:
                raise ValidationError(f"functor {name}: no image for arrow {f.name}")
            fa = tgt.arrows[img]
            if fa.src != self.obj_map[f.src] or fa.tgt != self.obj_map[f.tgt]:
                raise ValidationError(f"functor {name}: ill-typed image of {f.name}")
        for x in src.objects:
            if self.arr_map[src.identities[x]] != tgt.identities[self.obj_map[x]]:
                raise ValidationError(f"functor {name}: identities not preserved at {x}")
        for f in src.arrows.values():
            for g in src.arrows.values():
                if f.tgt == g.src:
                    lhs = self.arr_map[src.compose(f.name, g.name)]
                    rhs = tgt.compose(self.arr_map[f.name], self.arr_map[g.name])
                    if lhs != rhs:
                        raise ValidationError(f"functor {name}: composition not preserved at ({f.name}, {g.name})")

    def on_obj(self, x):
        return self.obj_map[x]

    def on_arr(self, f):
        return self.arr_map[f]


def identity_functor(c: FiniteCategory) -> CatFunctor:
    return CatFunctor(f"id[{c.name}]", c, c, {x: x for x in c.objects}, {a: a for a in c.arrows})


def compose_functors(F: CatFunctor, G: CatFunctor) -> CatFunctor:
    """F then G."""
    return CatFunctor(
        f"{F.name};{G.name}",
        F.src,
        G.tgt,
        {x: G.on_obj(F.on_obj(x)) for x in F.src.objects},
        {a: G.on_arr(F.on_arr(a)) for a in F.src.arrows},
    )


def natural_transformations(F: CatFunctor, G: CatFunctor):
    """Brute-force set of natural transformations F -> G."""
    if F.src is not G.src or F.tgt is not G.tgt:
        raise ValidationError("natural transformations need a parallel functor pair")
    src, tgt = F.src, F.tgt
    objs = src.objects
    import itertools as _it

    choices = [tgt.hom(F.on_obj(x), G.on_obj(x)) for x in objs]
    out = []
    for combo in _it.product(*choices):
        alpha = dict(zip(objs, combo))
        if all(
            tgt.compose(F.on_arr(f.name), alpha[f.tgt]) == tgt.compose(alpha[f.src], G.on_arr(f.name))
            for f in src.arrows.values()
        ):
            out.append(tuple(sorted(alpha.items())))
    return tuple(sorted(out))


def gate_check(D, objects=None) -> CheckReport:
    """Load-time gate: run the duoidal axiom checker and fail hard on error."""
    from .duoidal import check_duoidal_axioms

    rep = check_duoidal_axioms(D, objects=objects)
    if not rep.all_passed:
        raise ValidationError(f"instance {getattr(D, 'name', '?')} failed its axiom gate:\n{rep.render()}")
    return rep
