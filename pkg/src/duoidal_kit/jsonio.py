"""JSON interchange for the corpus: one schema family with a kind tag.

Every document carries `kind` and `schema_version`; loaders validate the
payload through the same constructors the library uses internally, so a
malformed file fails before any checking starts.  `dumps` is canonical
(sorted keys, fixed separators), which makes load/save round trips
byte-exact on canonical files.
"""

from __future__ import annotations

import json

from .fincat import Arrow, CatFunctor, FiniteCategory, TableDuoidal, ValidationError
from .monoids import Monoid
from .spans import Globe, SpanDuoidal
from .tamarkin import CatValuedFunctor, ObjectFunctor, cat_valued_functor, object_functor

SCHEMA_VERSION = 1


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def _expect(doc, kind):
    if doc.get("kind") != kind:
        raise ValidationError(f"expected kind {kind!r}, found {doc.get('kind')!r}")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValidationError(f"unsupported schema_version {doc.get('schema_version')!r}")


# -- monoids -----------------------------------------------------------------


def monoid_to_doc(m: Monoid) -> dict:
    return {
        "kind": "monoid",
        "schema_version": SCHEMA_VERSION,
        "name": m.name,
        "elements": [str(x) for x in m.elements],
        "unit": str(m.unit),
        "table": {str(a): {str(b): str(m.mult(a, b)) for b in m.elements} for a in m.elements},
    }


def monoid_from_doc(doc) -> Monoid:
    _expect(doc, "monoid")
    elements = tuple(doc["elements"])
    table = {(a, b): doc["table"][a][b] for a in elements for b in elements}
    return Monoid(doc["name"], elements, doc["unit"], table)


# -- finite categories --------------------------------------------------------


def category_to_doc(c: FiniteCategory) -> dict:
    return {
        "kind": "category",
        "schema_version": SCHEMA_VERSION,
        "name": c.name,
        "objects": list(c.objects),
        "arrows": [
            {"name": a.name, "src": a.src, "tgt": a.tgt}
            for a in sorted(c.arrows.values(), key=lambda a: a.name)
        ],
        "identities": dict(sorted(c.identities.items())),
        "compose": {f"{f} {g}": c.compose(f, g) for f in sorted(c.arrows) for g in sorted(c.arrows) if c.tgt(f) == c.src(g)},
    }


def category_from_doc(doc) -> FiniteCategory:
    _expect(doc, "category")
    arrows = [Arrow(a["name"], a["src"], a["tgt"]) for a in doc["arrows"]]
    compose = {tuple(k.split(" ")): v for k, v in doc["compose"].items()}
    return FiniteCategory(doc["name"], doc["objects"], arrows, compose, doc["identities"])


# -- object functors -----------------------------------------------------------


def object_functor_to_doc(O: ObjectFunctor) -> dict:
    return {
        "kind": "object_functor",
        "schema_version": SCHEMA_VERSION,
        "category": category_to_doc(O.cat),
        "sets": {a: list(v) for a, v in O.sets},
        "maps": {f: {str(x): str(y) for x, y in table} for f, table in O.maps},
    }


def object_functor_from_doc(doc) -> ObjectFunctor:
    _expect(doc, "object_functor")
    cat = category_from_doc(doc["category"])
    return object_functor(cat, doc["sets"], doc["maps"])


# -- category-valued functors ---------------------------------------------------


def cat_valued_functor_to_doc(F: CatValuedFunctor) -> dict:
    return {
        "kind": "cat_valued_functor",
        "schema_version": SCHEMA_VERSION,
        "name": F.name,
        "base": category_to_doc(F.base),
        "values": {a: category_to_doc(c) for a, c in F.values},
        "functors": {
            f: {"objects": dict(sorted(fun.obj_map.items())), "arrows": dict(sorted(fun.arr_map.items()))}
            for f, fun in F.functors
        },
    }


def cat_valued_functor_from_doc(doc) -> CatValuedFunctor:
    _expect(doc, "cat_valued_functor")
    base = category_from_doc(doc["base"])
    values = {a: category_from_doc(c) for a, c in doc["values"].items()}
    functors = {}
    for f, data in doc["functors"].items():
        arrow = base.arrows[f]
        functors[f] = CatFunctor(f, values[arrow.src], values[arrow.tgt], data["objects"], data["arrows"])
    return cat_valued_functor(base, values, functors, name=doc.get("name", "F"))


# -- span objects ----------------------------------------------------------------


def span_object_to_doc(D: SpanDuoidal, atom) -> dict:
    return {
        "kind": "span_object",
        "schema_version": SCHEMA_VERSION,
        "name": atom.name,
        "category": category_to_doc(D.cat),
        "fibers": [
            {"globe": [g.a, g.b, g.f, g.g], "elements": [str(e) for e in elems]}
            for g, elems in atom.fibers
        ],
    }


def span_object_from_doc(doc):
    _expect(doc, "span_object")
    cat = category_from_doc(doc["category"])
    D = SpanDuoidal(cat)
    fibers = {Globe(*f["globe"]): tuple(f["elements"]) for f in doc["fibers"]}
    return D, D.atom(doc["name"], fibers)


# -- table duoidal instances -------------------------------------------------------


def table_duoidal_to_doc(D: TableDuoidal) -> dict:
    objs = D.base.objects
    arrs = sorted(D.base.arrows)
    return {
        "kind": "duoidal_table",
        "schema_version": SCHEMA_VERSION,
        "name": D.name,
        "base": category_to_doc(D.base),
        "e": D.e,
        "v": D.v,
        "box0_objects": {f"{x} {y}": D.box0(x, y) for x in objs for y in objs},
        "box1_objects": {f"{x} {y}": D.box1(x, y) for x in objs for y in objs},
        "box0_arrows": {f"{f} {g}": D.box0_map(f, g) for f in arrs for g in arrs},
        "box1_arrows": {f"{f} {g}": D.box1_map(f, g) for f in arrs for g in arrs},
        "interchange": {f"{a} {b} {c} {d}": D.interchange(a, b, c, d) for a in objs for b in objs for c in objs for d in objs},
        "delta_e": D.delta_e(),
        "mu_v": D.mu_v(),
        "iota": D.iota(),
    }


def table_duoidal_from_doc(doc) -> TableDuoidal:
    _expect(doc, "duoidal_table")
    base = category_from_doc(doc["base"])

    def unpair(table):
        return {tuple(k.split(" ")): v for k, v in table.items()}

    return TableDuoidal(
        doc["name"],
        base,
        unpair(doc["box0_objects"]),
        unpair(doc["box1_objects"]),
        doc["e"],
        doc["v"],
        unpair(doc["box0_arrows"]),
        unpair(doc["box1_arrows"]),
        unpair(doc["interchange"]),
        doc["delta_e"],
        doc["mu_v"],
        doc["iota"],
    )


# -- table operads over table instances ----------------------------------------------


def table_operad_to_doc(name, instance_name, components, gammas, unit, v_action) -> dict:
    return {
        "kind": "one_operad",
        "schema_version": SCHEMA_VERSION,
        "name": name,
        "instance": instance_name,
        "components": {str(n): obj for n, obj in components.items()},
        "gamma": {f"{n};{','.join(str(k) for k in ks)}": arrow for (n, ks), arrow in gammas.items()},
        "unit": unit,
        "v_action": v_action,
    }


def table_operad_from_doc(doc, D):
    """A table-backed operad over a table duoidal instance."""
    from .operads import OneOperad

    _expect(doc, "one_operad")
    components = {int(n): obj for n, obj in doc["components"].items()}
    gammas = {}
    for key, arrow in doc["gamma"].items():
        head, _, tail = key.partition(";")
        ks = tuple(int(k) for k in tail.split(",")) if tail else ()
        gammas[(int(head), ks)] = arrow
    bound = max(components)

    def component(n):
        return components[n]

    def gamma(n, ks):
        if (n, ks) not in gammas:
            raise ValidationError(f"operad table missing the shape ({n}; {ks})")
        return gammas[(n, ks)]

    return OneOperad(D, doc["name"], component, gamma, doc["unit"], has_zero=(0, ()) in gammas, bound=bound)


# -- duoids over table instances -------------------------------------------------------


def duoid_from_doc(doc, D):
    from .duoidal import Duoid

    _expect(doc, "duoid")
    return Duoid(
        doc["carrier"], doc["mult0"], doc["unit0"], doc["mult1"], doc["unit1"], name=doc.get("name", "duoid")
    )


def duoid_to_doc(d, name=None) -> dict:
    return {
        "kind": "duoid",
        "schema_version": SCHEMA_VERSION,
        "name": name or d.name,
        "carrier": d.carrier,
        "mult0": d.mult0,
        "unit0": d.unit0,
        "mult1": d.mult1,
        "unit1": d.unit1,
    }


LOADERS = {
    "monoid": monoid_from_doc,
    "category": category_from_doc,
    "object_functor": object_functor_from_doc,
    "cat_valued_functor": cat_valued_functor_from_doc,
    "span_object": span_object_from_doc,
    "duoidal_table": table_duoidal_from_doc,
}


def load_document(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    kind = doc.get("kind")
    if kind not in LOADERS and kind not in ("one_operad", "duoid"):
        raise ValidationError(f"{path}: unknown kind {kind!r}")
    return doc
