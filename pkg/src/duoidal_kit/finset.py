"""A strict cartesian duoidal instance over finite sets.

Objects are words (tuples) of letters; a letter carries a finite set of
elements, and the elements of a word are flat tuples with one slot per
letter.  Both tensors are word concatenation, so associativity and unitality
hold on the nose with the empty word as both units.  Function-set letters
resolve their elements lazily, which keeps endomorphism components such as
Set(M^n, M) representable without ever enumerating them; maps out of such
objects stay callable until someone actually asks for a table.
"""

from __future__ import annotations

import itertools

from .report import skey

DEFAULT_CAP = 250_000


class SizeError(RuntimeError):
    """Raised when an enumeration would exceed its size guard."""


class Letter:
    __slots__ = ("key", "_elems", "dom_word", "cod_word", "name")

    def __init__(self, key, elems=None, dom_word=None, cod_word=None, name=""):
        self.key = key
        self._elems = elems
        self.dom_word = dom_word
        self.cod_word = cod_word
        self.name = name

    def __eq__(self, other):
        return isinstance(other, Letter) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Letter({self.name or self.key[0]})"

    def sort_key(self):
        return skey(self.key)

    def size(self):
        if self._elems is not None:
            return len(self._elems)
        if self.key[0] == "fn":
            d = word_size(self.dom_word)
            c = word_size(self.cod_word)
            if d is None or c is None:
                return None
            return c**d
        return None

    def elements(self, cap=DEFAULT_CAP):
        if self._elems is not None:
            return self._elems
        if self.key[0] == "fn":
            n = self.size()
            if n is None or n > cap:
                raise SizeError(f"letter {self!r} has {n if n is not None else 'unbounded'} elements (cap {cap})")
            ins = word_elements(self.dom_word, cap)
            outs = word_elements(self.cod_word, cap)
            elems = tuple(
                graph_of(zip(ins, choice))
                for choice in itertools.product(outs, repeat=len(ins))
            )
            self._elems = elems
            return elems
        raise SizeError(f"letter {self!r} has no enumerable element set")


def atom_letter(name, elems) -> Letter:
    elems = tuple(sorted(elems, key=skey))
    return Letter(("atom", name, elems), elems=elems, name=name)


def virtual_letter(name) -> Letter:
    """A letter with a known identity but no enumerable element set."""
    return Letter(("virtual", name), name=name)


def fn_letter(dom_word, cod_word) -> Letter:
    return Letter(
        ("fn", word_key(dom_word), word_key(cod_word)),
        dom_word=dom_word,
        cod_word=cod_word,
        name="fnset",
    )


def word_key(word):
    return tuple(letter.key for letter in word)


def word_size(word):
    total = 1
    for letter in word:
        n = letter.size()
        if n is None:
            return None
        total *= n
    return total


def word_elements(word, cap=DEFAULT_CAP):
    n = word_size(word)
    if n is None or n > cap:
        raise SizeError(f"word of size {n if n is not None else 'unbounded'} exceeds cap {cap}")
    return tuple(itertools.product(*(letter.elements(cap) for letter in word)))


def graph_of(pairs):
    """Canonical hashable graph of a function element."""
    return tuple(sorted(pairs, key=lambda p: skey(p[0])))


class FnElt:
    """A function element evaluated lazily; used over non-enumerable letters."""

    __slots__ = ("call", "label")

    def __init__(self, call, label="fn"):
        self.call = call
        self.label = label

    def __repr__(self):
        return f"FnElt({self.label})"


_graph_lookup_cache: dict = {}


def apply_fn_elt(el, arg):
    if isinstance(el, FnElt):
        return el.call(arg)
    lookup = _graph_lookup_cache.get(el)
    if lookup is None:
        lookup = dict(el)
        _graph_lookup_cache[el] = lookup
    return lookup[arg]


class CartMap:
    """A map of words, evaluated lazily with an optional materialized table."""

    __slots__ = ("dom", "cod", "_fn", "_table")

    def __init__(self, dom, cod, fn=None, table=None):
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        self._fn = fn
        self._table = table

    def apply(self, x):
        if self._table is not None:
            return self._table[x]
        return self._fn(x)

    def materialize(self, cap=DEFAULT_CAP):
        if self._table is None:
            self._table = {x: self._fn(x) for x in word_elements(self.dom, cap)}
        return self._table

    def __repr__(self):
        return f"CartMap({len(self.dom)} letters -> {len(self.cod)} letters)"


def _splits(words):
    """Cumulative slot boundaries for a list of factor words."""
    out, k = [], 0
    for w in words:
        out.append((k, k + len(w)))
        k += len(w)
    return out


class CartesianFinSet:
    """The cartesian duoidal instance: both tensors are the product."""

    def __init__(self, name="cartesian"):
        self.name = name

    # -- objects -------------------------------------------------------
    @property
    def e(self):
        return ()

    @property
    def v(self):
        return ()

    def objects(self):
        return None  # virtual: unboundedly many words

    def elements(self, x, cap=DEFAULT_CAP):
        return word_elements(x, cap)

    def make_subobject(self, x, elts, name):
        letter = atom_letter(name, tuple(elts))
        sub = (letter,)
        incl = CartMap(sub, x, fn=lambda t: t[0])
        return sub, incl

    # -- morphisms -----------------------------------------------------
    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def identity(self, x):
        return CartMap(x, x, fn=lambda t: t)

    def compose(self, f, g):
        """f then g (diagrammatic order)."""
        if f.cod != g.dom:
            raise ValueError("compose: middle objects differ")
        return CartMap(f.dom, g.cod, fn=lambda t: g.apply(f.apply(t)))

    def apply(self, f, elt):
        return f.apply(elt)

    def hom(self, x, y, cap=DEFAULT_CAP):
        ins = word_elements(x, cap)
        outs = word_elements(y, cap)
        if len(outs) ** len(ins) > cap:
            raise SizeError("hom set exceeds cap")
        maps = []
        for choice in itertools.product(outs, repeat=len(ins)):
            maps.append(CartMap(x, y, table=dict(zip(ins, choice))))
        return maps

    def maps_equal(self, f, g, cap=DEFAULT_CAP):
        if f.dom != g.dom or f.cod != g.cod:
            return False
        for t in word_elements(f.dom, cap):
            if f.apply(t) != g.apply(t):
                return False
        return True

    # -- tensors -------------------------------------------------------
    def box0(self, x, y):
        return tuple(x) + tuple(y)

    def box1(self, x, y):
        return tuple(x) + tuple(y)

    def box0_many(self, xs):
        out = ()
        for x in xs:
            out += tuple(x)
        return out

    box1_many = box0_many

    def _tensor_map_many(self, fs):
        fs = list(fs)
        dom = self.box0_many(f.dom for f in fs)
        cod = self.box0_many(f.cod for f in fs)
        bounds = _splits([f.dom for f in fs])

        def act(t, fs=fs, bounds=bounds):
            out = ()
            for f, (a, b) in zip(fs, bounds):
                out += f.apply(t[a:b])
            return out

        return CartMap(dom, cod, fn=act)

    def box0_map_many(self, fs):
        return self._tensor_map_many(fs)

    box1_map_many = box0_map_many

    def box0_map(self, f, g):
        return self._tensor_map_many([f, g])

    box1_map = box0_map

    # -- duoidal structure ----------------------------------------------
    def interchange(self, a, b, c, d):
        la, lb, lc, ld = len(a), len(b), len(c), len(d)
        dom = tuple(a) + tuple(b) + tuple(c) + tuple(d)
        cod = tuple(a) + tuple(c) + tuple(b) + tuple(d)

        def act(t):
            ea = t[:la]
            eb = t[la : la + lb]
            ec = t[la + lb : la + lb + lc]
            ed = t[la + lb + lc :]
            return ea + ec + eb + ed

        return CartMap(dom, cod, fn=act)

    def delta_e(self):
        return self.identity(())

    def mu_v(self):
        return self.identity(())

    def iota(self):
        return self.identity(())

    # -- fiberwise protocol (single trivial fiber) ----------------------
    def fiber_keys(self, obj):
        return (None,)

    def fiber_elements(self, obj, key, cap=DEFAULT_CAP):
        return word_elements(obj, cap)

    def apply_at(self, f, key, elt):
        return f.apply(elt)

    def subobject_from_fibers(self, x, fibers, name):
        return self.make_subobject(x, fibers[None], name)

    def corestrict_map(self, f, sub, fibers, cap=DEFAULT_CAP):
        """Factor f through a subobject, checking the image pointwise."""
        allowed = set(fibers[None])
        table = {}
        for x in word_elements(f.dom, cap):
            y = f.apply(x)
            if y not in allowed:
                raise KeyError(f"image {y!r} is not in the subobject")
            table[x] = (y,)
        return CartMap(f.dom, sub, table=table)
