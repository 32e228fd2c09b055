"""Level trees of height <= 2 and their morphisms.

A 1-tree is a finite ordinal (n) = {1,...,n}.  A 2-tree is a monotone map
t: (n) -> (m) of ordinals; elements of (n) are its height-2 leaves and the
elements of (m) with empty preimage are its height-1 leaves.  Morphisms of
2-trees are commuting squares (sigma2, sigma1) with sigma1 monotone and
sigma2 monotone on each t-fiber.  Ordinals are 1-based throughout; the empty
ordinal is n = 0.

The linear order on the leaves of a 2-tree (n -> m) is: for j = 1..m, the
height-2 leaves of t^{-1}(j) in increasing order, then the height-1 leaf j
itself when t^{-1}(j) is empty.  This realizes the clockwise reading of the
planar tree for this encoding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


class TreeError(ValueError):
    pass


@dataclass(frozen=True)
class ZeroTree:
    """The unique tree of height 0."""

    def render(self) -> str:
        return "U0"


U0 = ZeroTree()


@dataclass(frozen=True)
class OneTree:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise TreeError("ordinal size must be >= 0")

    def render(self) -> str:
        return f"({self.n})"


U1 = OneTree(1)


@dataclass(frozen=True)
class OneTreeMap:
    domain: OneTree
    codomain: OneTree
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.domain.n:
            raise TreeError("image list must have one entry per domain element")
        for k in self.images:
            if not 1 <= k <= self.codomain.n:
                raise TreeError(f"image {k} outside 1..{self.codomain.n}")
        if any(a > b for a, b in zip(self.images, self.images[1:])):
            raise TreeError("ordinal map must be weakly monotone")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def preimage(self, j: int) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.domain.n + 1) if self.images[i - 1] == j)

    def render(self) -> str:
        return f"({self.domain.n}->{self.codomain.n}; {list(self.images)})"


def one_identity(t: OneTree) -> OneTreeMap:
    return OneTreeMap(t, t, tuple(range(1, t.n + 1)))


def compose_one_maps(f: OneTreeMap, g: OneTreeMap) -> OneTreeMap:
    """f then g (diagrammatic order)."""
    if f.codomain != g.domain:
        raise TreeError("composition domain mismatch")
    return OneTreeMap(f.domain, g.codomain, tuple(g(f(i)) for i in range(1, f.domain.n + 1)))


@lru_cache(maxsize=None)
def one_map_fibers(f: OneTreeMap) -> list[OneTree]:
    """Fibers of an ordinal map, one per codomain element."""
    return [OneTree(len(f.preimage(j))) for j in range(1, f.codomain.n + 1)]


@lru_cache(maxsize=None)
def enumerate_one_maps(a: OneTree, b: OneTree) -> list[OneTreeMap]:
    if a.n == 0:
        return [OneTreeMap(a, b, ())]
    if b.n == 0:
        return []
    out = []
    for imgs in itertools.combinations_with_replacement(range(1, b.n + 1), a.n):
        out.append(OneTreeMap(a, b, imgs))
    return out


@dataclass(frozen=True)
class TwoTree:
    """A 2-tree, encoded as its structure map t: (n) -> (m)."""

    t: OneTreeMap

    @property
    def n(self) -> int:
        return self.t.domain.n

    @property
    def m(self) -> int:
        return self.t.codomain.n

    @property
    def leaves2(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @property
    def leaves1(self) -> tuple[int, ...]:
        return tuple(j for j in range(1, self.m + 1) if not self.t.preimage(j))

    def leaf_order(self) -> list[tuple[str, int]]:
        """All leaves in the clockwise linear order, tagged 'h2' or 'h1'."""
        out: list[tuple[str, int]] = []
        for j in range(1, self.m + 1):
            pre = self.t.preimage(j)
            if pre:
                out.extend(("h2", i) for i in pre)
            else:
                out.append(("h1", j))
        return out

    @property
    def n_leaves(self) -> int:
        return self.n + len(self.leaves1)

    def is_pruned(self) -> bool:
        return not self.leaves1

    def render(self) -> str:
        return f"({self.n}->{self.m}; t={list(self.t.images)})"


def two_tree(n: int, m: int, images) -> TwoTree:
    return TwoTree(OneTreeMap(OneTree(n), OneTree(m), tuple(images)))


U2 = two_tree(1, 1, [1])
ZU1 = two_tree(0, 1, [])
Z2U0 = two_tree(0, 0, [])


@dataclass(frozen=True)
class TwoTreeMap:
    source: TwoTree
    target: TwoTree
    sigma1: tuple[int, ...]
    sigma2: tuple[int, ...]

    def __post_init__(self):
        T, S = self.source, self.target
        if len(self.sigma1) != T.m or len(self.sigma2) != T.n:
            raise TreeError("component length mismatch")
        for k in self.sigma1:
            if not 1 <= k <= S.m:
                raise TreeError("sigma1 out of range")
        for k in self.sigma2:
            if not 1 <= k <= S.n:
                raise TreeError("sigma2 out of range")
        if any(a > b for a, b in zip(self.sigma1, self.sigma1[1:])):
            raise TreeError("sigma1 must be order preserving")
        for i in range(1, T.n + 1):
            if S.t(self.sigma2[i - 1]) != self.sigma1[T.t(i) - 1]:
                raise TreeError("square does not commute")
        for j in range(1, T.m + 1):
            pre = T.t.preimage(j)
            vals = [self.sigma2[i - 1] for i in pre]
            if any(a > b for a, b in zip(vals, vals[1:])):
                raise TreeError("sigma2 must be order preserving on each fiber")

    def s1(self, j: int) -> int:
        return self.sigma1[j - 1]

    def s2(self, i: int) -> int:
        return self.sigma2[i - 1]

    def s1_preimage(self, j: int) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.source.m + 1) if self.sigma1[i - 1] == j)

    def s2_preimage(self, i: int) -> tuple[int, ...]:
        return tuple(k for k in range(1, self.source.n + 1) if self.sigma2[k - 1] == i)

    def render(self) -> str:
        return (
            f"{self.source.render()} => {self.target.render()} "
            f"[s1={list(self.sigma1)}, s2={list(self.sigma2)}]"
        )


def _unchecked_two_map(source, target, sigma1, sigma2) -> TwoTreeMap:
    """Internal constructor skipping invariant validation (for restrictions
    that are valid by construction; the property tests cross-check them)."""
    out = object.__new__(TwoTreeMap)
    object.__setattr__(out, "source", source)
    object.__setattr__(out, "target", target)
    object.__setattr__(out, "sigma1", sigma1)
    object.__setattr__(out, "sigma2", sigma2)
    return out


def two_identity(T: TwoTree) -> TwoTreeMap:
    return _unchecked_two_map(T, T, tuple(range(1, T.m + 1)), tuple(range(1, T.n + 1)))


def terminal_map(T: TwoTree) -> TwoTreeMap:
    """The unique map T -> U2."""
    return TwoTreeMap(T, U2, (1,) * T.m, (1,) * T.n)


def compose_tree_maps(sigma: TwoTreeMap, omega: TwoTreeMap) -> TwoTreeMap:
    """sigma then omega (diagrammatic order)."""
    if sigma.target != omega.source:
        raise TreeError("composition domain mismatch")
    return TwoTreeMap(
        sigma.source,
        omega.target,
        tuple(omega.s1(sigma.s1(j)) for j in range(1, sigma.source.m + 1)),
        tuple(omega.s2(sigma.s2(i)) for i in range(1, sigma.source.n + 1)),
    )


@dataclass(frozen=True)
class Fiber:
    """A fiber of a 2-tree map, positioned in the target's leaf order.

    `height` is the height of the target leaf; the fiber over a height-2 leaf
    is a 2-tree, the fiber over a height-1 leaf is a 1-tree.
    """

    height: int
    tree: object  # TwoTree (height 2) or OneTree (height 1)
    position: int
    leaf: int


def _reindex(values: tuple[int, ...]) -> dict[int, int]:
    return {v: k + 1 for k, v in enumerate(values)}


@lru_cache(maxsize=None)
def fibers(sigma: TwoTreeMap) -> list[Fiber]:
    """Fibers of a 2-tree map, one per leaf of the target, in leaf order."""
    S = sigma.target
    out: list[Fiber] = []
    for pos, (kind, leaf) in enumerate(S.leaf_order()):
        if kind == "h2":
            dom = sigma.s2_preimage(leaf)
            cod = sigma.s1_preimage(S.t(leaf))
            codex = _reindex(cod)
            imgs = tuple(codex[sigma.source.t(i)] for i in dom)
            out.append(Fiber(2, two_tree(len(dom), len(cod), imgs), pos, leaf))
        else:
            out.append(Fiber(1, OneTree(len(sigma.s1_preimage(leaf))), pos, leaf))
    return out


@lru_cache(maxsize=None)
def composite_restrictions(sigma: TwoTreeMap, omega: TwoTreeMap):
    """Per-leaf restrictions of sigma along the fibers of omega.

    For T --sigma--> S --omega--> R, returns one entry per leaf of R, in leaf
    order: (fiber of omega*sigma, fiber of omega, restricted map), where the
    restricted map is a TwoTreeMap between the height-2 fibers or a OneTreeMap
    between the height-1 fibers.
    """
    if sigma.target != omega.source:
        raise TreeError("composition domain mismatch")
    comp = compose_tree_maps(sigma, omega)
    fib_comp = fibers(comp)
    fib_omega = fibers(omega)
    out = []
    for fc, fo in zip(fib_comp, fib_omega):
        leaf = fo.leaf
        if fo.height == 2:
            t_dom = comp.s2_preimage(leaf)
            t_mid = comp.s1_preimage(comp.target.t(leaf))
            s_dom = omega.s2_preimage(leaf)
            s_mid = omega.s1_preimage(omega.target.t(leaf))
            mid_ix = _reindex(s_mid)
            dom_ix = _reindex(s_dom)
            s1 = tuple(mid_ix[sigma.s1(j)] for j in t_mid)
            s2 = tuple(dom_ix[sigma.s2(i)] for i in t_dom)
            restr = _unchecked_two_map(fc.tree, fo.tree, s1, s2)
        else:
            t_mid = comp.s1_preimage(leaf)
            s_mid = omega.s1_preimage(leaf)
            mid_ix = _reindex(s_mid)
            restr = OneTreeMap(fc.tree, fo.tree, tuple(mid_ix[sigma.s1(j)] for j in t_mid))
        out.append((fc, fo, restr))
    return out


def ordinal_sum(T: TwoTree, S: TwoTree) -> TwoTree:
    """Glue two 2-trees at the root (fiberwise ordinal sum)."""
    imgs = T.t.images + tuple(k + T.m for k in S.t.images)
    return two_tree(T.n + S.n, T.m + S.m, imgs)


def ordinal_sum_many(trees) -> TwoTree:
    out = Z2U0
    for t in trees:
        out = ordinal_sum(out, t)
    return out


@lru_cache(maxsize=None)
def prune(T: TwoTree) -> tuple[TwoTree, TwoTreeMap]:
    """Maximal pruned subtree and its inclusion into T.

    The inclusion's fibers are U2 over the height-2 leaves of T and the empty
    1-tree over its height-1 leaves (the fiber over a height-1 leaf is an
    ordinal by definition, so the leafless 2-tree never appears here).
    """
    image = sorted({T.t(i) for i in range(1, T.n + 1)})
    ix = _reindex(tuple(image))
    pruned = two_tree(T.n, len(image), tuple(ix[T.t(i)] for i in range(1, T.n + 1)))
    incl = TwoTreeMap(pruned, T, tuple(image), tuple(range(1, T.n + 1)))
    return pruned, incl


def suspension(k: int) -> TwoTree:
    return two_tree(k, 1, [1] * k)


def is_suspension(T: TwoTree) -> bool:
    return T.m == 1


@lru_cache(maxsize=None)
def suspension_decompose(S: TwoTree) -> list[TwoTree]:
    """Split a 2-tree into the suspensions over its codomain elements."""
    if S == Z2U0:
        raise TreeError("the leafless tree has no suspension decomposition")
    return [suspension(len(S.t.preimage(j))) for j in range(1, S.m + 1)]


@lru_cache(maxsize=None)
def block_decompose(sigma: TwoTreeMap):
    """Split sigma: T -> S into blocks over the suspension summands of S.

    Returns one (Q_i, P_i, sigma_i) per codomain element of S, where
    P_i is the i-th suspension summand, T = Q_1 + ... + Q_l and
    sigma = sigma_1 + ... + sigma_l.
    """
    S, T = sigma.target, sigma.source
    if S == Z2U0:
        raise TreeError("no block decomposition over the leafless tree")
    out = []
    for i in range(1, S.m + 1):
        P = suspension(len(S.t.preimage(i)))
        mid = sigma.s1_preimage(i)
        dom = tuple(k for k in range(1, T.n + 1) if sigma.s1(T.t(k)) == i)
        mid_ix = _reindex(mid)
        dom_ix = _reindex(dom)
        Q = two_tree(len(dom), len(mid), tuple(mid_ix[T.t(k)] for k in dom))
        s_dom_ix = _reindex(S.t.preimage(i))
        s1 = tuple(1 for _ in mid)
        s2 = tuple(s_dom_ix[sigma.s2(k)] for k in dom)
        out.append((Q, P, TwoTreeMap(Q, P, s1, s2)))
    return out


@lru_cache(maxsize=None)
def enumerate_two_trees(max_leaves: int) -> list[TwoTree]:
    """All 2-trees with at most `max_leaves` leaves, deterministically ordered."""
    out = []
    for m in range(0, max_leaves + 1):
        for n in range(0, max_leaves + 1):
            for imgs in itertools.combinations_with_replacement(range(1, m + 1), n):
                T = two_tree(n, m, imgs)
                if T.n_leaves <= max_leaves:
                    out.append(T)
    return out


@lru_cache(maxsize=None)
def enumerate_two_tree_maps(T: TwoTree, S: TwoTree) -> list[TwoTreeMap]:
    """All 2-tree maps T -> S by fiberwise search (no duplicates)."""
    sigma1s = enumerate_one_maps(T.t.codomain, S.t.codomain)
    out = []
    for s1 in sigma1s:
        per_fiber: list[list[tuple[int, ...]]] = []
        ok = True
        for j in range(1, T.m + 1):
            pre = T.t.preimage(j)
            allowed = S.t.preimage(s1(j))
            if pre and not allowed:
                ok = False
                break
            choices = [
                tuple(allowed[k - 1] for k in pick.images)
                for pick in enumerate_one_maps(OneTree(len(pre)), OneTree(len(allowed)))
            ]
            per_fiber.append(choices)
        if not ok:
            continue
        for combo in itertools.product(*per_fiber):
            sigma2 = [0] * T.n
            for j in range(1, T.m + 1):
                for i, v in zip(T.t.preimage(j), combo[j - 1]):
                    sigma2[i - 1] = v
            out.append(TwoTreeMap(T, S, s1.images, tuple(sigma2)))
    return out
