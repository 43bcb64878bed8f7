"""Exact evaluation of terms in the multiset model.

Every object is carried by the free semimodule on its basis (see
:mod:`difflin.basis`); ``!X`` is spanned by finite multisets of basis elements
of ``X``.  A morphism ``X -> Y`` is a matrix indexed by basis elements.  The
model used here is the transpose of the symmetric-algebra monad, which makes
every coefficient a natural number (up to the sign of the antipode), so the
same tables work over any commutative semiring:

=========  ==========================================================
generator  nonzero entries ``(in -> out : coefficient)``
=========  ==========================================================
eps        ``[x] -> x : 1``
weak       ``[] -> * : 1``
eta        ``x -> [x] : 1``
u          ``* -> [] : 1``
copy       ``m -> (m1, m2) : 1`` for every split ``m1 + m2 = m``
nabla      ``(m1, m2) -> m1 + m2 : prod_x C(m1(x) + m2(x), m1(x))``
delta      ``m -> M : 1`` for every multiset of multisets ``M`` with union ``m``
m{A,B}     ``(m, n) -> p : 1`` for every multiset of pairs ``p`` projecting to ``(m, n)``
mI         ``* -> [*, ..., *] : 1`` for every length
d          ``(m, x) -> m + [x] : m(x) + 1``
S          ``m -> m : (-1)^|m|``
=========  ==========================================================

``bang(f)`` at ``(m, n)`` is the permanent of the item matrix ``f(m_i, n_j)``
divided by ``prod_x m(x)!``: each assignment of inputs to the positions of
``n`` is counted once, so the multiplicities stay natural numbers.  Matrices are evaluated column by column: the *pull* of an output
basis element is the finite map ``input -> coefficient`` of its column.  Every
generator has finite columns, so single entries are always computed exactly;
only ``delta`` and ``mI`` have infinite rows, which matters for full-vector
requests (:func:`Model.eval_vector`).
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass
from itertools import permutations, product
from math import comb
from typing import Any

from .basis import (
    EMPTY, UNIT, BasisElem, MSet, Tup, basis_enum, finite_basis, format_elem, join,
    matches, split,
)
from .errors import SemiringError, TypeCheckError, UnboundedError
from .objects import Bang, ObjExpr, has_bang
from .semiring import RATIONAL, Semiring
from .terms import (
    BangBox, Comp, Gen, Id, Lin, MorTerm, Neg, Sum, Sym, Ten, ZeroMor, infer_type,
    pretty_print,
)


class _Unbounded:
    """Marker for a support set the analysis cannot bound."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Unbounded"

    def __reduce__(self):
        return (_Unbounded, ())


UNBOUNDED = _Unbounded()

Support = "frozenset[BasisElem] | _Unbounded"


# -- combinatorial helpers ----------------------------------------------------


def sub_multisets(m: MSet) -> Iterable[tuple[MSet, MSet, int]]:
    """Yield ``(m1, m2, multinomial)`` for every split ``m = m1 + m2``."""
    counts = sorted(m.counts().items(), key=lambda kv: kv[0].key)
    ranges = [range(c + 1) for _, c in counts]
    for pick in product(*ranges):
        left: list[BasisElem] = []
        right: list[BasisElem] = []
        coeff = 1
        for (x, c), k in zip(counts, pick):
            left.extend([x] * k)
            right.extend([x] * (c - k))
            coeff *= comb(c, k)
        yield MSet(left), MSet(right), coeff


def multiset_partitions(m: MSet, max_empty: int = 0) -> Iterable[MSet]:
    """Multisets of nonempty multisets whose union is ``m``, each padded with
    0..max_empty empty blocks."""
    items = list(m.items)
    seen: set[MSet] = set()
    for blocks in _set_partitions(items):
        M = MSet(MSet(b) for b in blocks)
        if M not in seen:
            seen.add(M)
    for M in sorted(seen, key=lambda e: e.order_key):
        for k in range(max_empty + 1):
            yield M + MSet([EMPTY] * k) if k else M


def _set_partitions(items: list) -> Iterable[list[list]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first], *part]
        for i in range(len(part)):
            yield [*part[:i], [first, *part[i]], *part[i + 1:]]


def pairings(m: MSet, n: MSet, a: ObjExpr, b: ObjExpr) -> set[MSet]:
    """All multisets of elements of ``a * b`` whose projections are ``m`` and ``n``."""
    if len(m) != len(n):
        return set()
    out = set()
    for perm in set(permutations(m.items)):
        out.add(MSet(join([x, y], [a, b]) for x, y in zip(perm, n.items)))
    return out


# -- generator tables -----------------------------------------------------------

# A column function maps (params, output element) to a list of
# (input element, integer coefficient).  A row function maps (params, input
# element) to the set of outputs with a nonzero entry, or UNBOUNDED.


def _col_eps(params, o, dims):
    return [(MSet([o]), 1)]


def _col_weak(params, o, dims):
    return [(EMPTY, 1)]


def _col_eta(params, o, dims):
    return [(o.items[0], 1)] if len(o) == 1 else []


def _col_u(params, o, dims):
    return [(UNIT, 1)] if len(o) == 0 else []


def _col_copy(params, o, dims):
    m1, m2 = o.items
    return [(m1 + m2, 1)]


def _col_nabla(params, o, dims):
    return [(Tup((m1, m2)), c) for m1, m2, c in sub_multisets(o)]


def _col_delta(params, o, dims):
    total: list[BasisElem] = []
    for block in o.items:
        total.extend(block.items)
    return [(MSet(total), 1)]


def _col_m(params, o, dims):
    a, b = params
    lefts, rights = [], []
    for item in o.items:
        x, y = split(item, [a, b])
        lefts.append(x)
        rights.append(y)
    return [(Tup((MSet(lefts), MSet(rights))), 1)]


def _col_mI(params, o, dims):
    return [(UNIT, 1)]


def _col_d(params, o, dims):
    (a,) = params
    out = []
    for x, c in sorted(o.counts().items(), key=lambda kv: kv[0].key):
        rest = list(o.items)
        rest.remove(x)
        out.append((join([MSet(rest), x], [Bang(a), a]), c))
    return out


def _col_S(params, o, dims):
    return [(o, -1 if len(o) % 2 else 1)]


def _row_eps(params, i):
    return frozenset([i.items[0]]) if len(i) == 1 else frozenset()


def _row_weak(params, i):
    return frozenset([UNIT]) if len(i) == 0 else frozenset()


def _row_eta(params, i):
    return frozenset([MSet([i])])


def _row_u(params, i):
    return frozenset([EMPTY])


def _row_copy(params, i):
    return frozenset(Tup((m1, m2)) for m1, m2, _ in sub_multisets(i))


def _row_nabla(params, i):
    m1, m2 = i.items
    return frozenset([m1 + m2])


def _row_unbounded(params, i):
    return UNBOUNDED


def _row_m(params, i):
    a, b = params
    m, n = i.items
    return frozenset(pairings(m, n, a, b))


def _row_d(params, i):
    (a,) = params
    m, x = split(i, [Bang(a), a])
    return frozenset([m + MSet([x])])


def _row_S(params, i):
    return frozenset([i])


@dataclass(frozen=True)
class GenSpec:
    """Column and row functions of one generator."""

    column: Callable[[tuple, BasisElem], list]
    row: Callable[[tuple, BasisElem], Any]
    needs_negatives: bool = False


GENERATORS: dict[str, GenSpec] = {
    "eps": GenSpec(_col_eps, _row_eps),
    "weak": GenSpec(_col_weak, _row_weak),
    "eta": GenSpec(_col_eta, _row_eta),
    "u": GenSpec(_col_u, _row_u),
    "copy": GenSpec(_col_copy, _row_copy),
    "nabla": GenSpec(_col_nabla, _row_nabla),
    "delta": GenSpec(_col_delta, _row_unbounded),
    "m": GenSpec(_col_m, _row_m),
    "mI": GenSpec(_col_mI, _row_unbounded),
    "d": GenSpec(_col_d, _row_d),
    "S": GenSpec(_col_S, _row_S, needs_negatives=True),
}


# -- mutations ----------------------------------------------------------------


def _col_eta_scaled(params, o, dims):
    return [(x, 2 * c) for x, c in _col_eta(params, o, dims)]


def _col_nabla_plain(params, o, dims):
    return [(x, 1) for x, _ in _col_nabla(params, o, dims)]


def _col_S_identity(params, o, dims):
    return [(o, 1)]


def _col_d_forget(params, o, dims):
    # d(m, x) := m for every point x
    (a,) = params
    if has_bang(a):
        raise UnboundedError("the swap_d mutation needs a !-free point object")
    return [(join([o, x], [Bang(a), a]), 1) for x in finite_basis(a, dims)]


def _row_d_forget(params, i):
    (a,) = params
    m, _ = split(i, [Bang(a), a])
    return frozenset([m])


@dataclass(frozen=True)
class Mutation:
    """A named alternative generator table used to probe the law suite."""

    name: str
    kind: str
    spec: GenSpec
    description: str


MUTATIONS: dict[str, Mutation] = {
    m.name: m for m in [
        Mutation("scale_eta_by_2", "eta", GenSpec(_col_eta_scaled, _row_eta),
                 "eta with every coefficient doubled"),
        Mutation("nabla_without_binomial", "nabla", GenSpec(_col_nabla_plain, _row_nabla),
                 "nabla without its binomial coefficients"),
        Mutation("drop_S", "S", GenSpec(_col_S_identity, _row_S),
                 "antipode replaced by the identity"),
        Mutation("swap_d", "d", GenSpec(_col_d_forget, _row_d_forget),
                 "deriving map (m, x) -> m that forgets the point"),
    ]
}


# -- the model ------------------------------------------------------------------


@dataclass
class Verdict:
    """Outcome of an entrywise comparison."""

    passed: bool
    entries_checked: int = 0
    counterexample: tuple | None = None  # (in, out, lhs, rhs)

    def __bool__(self):
        return self.passed


@dataclass
class VectorResult:
    values: dict
    approximate: bool = False


class Model:
    """Coefficient semiring, base dimensions and (possibly mutated) generator tables."""

    def __init__(self, ring: Semiring = RATIONAL, dims: Mapping[str, int] | None = None,
                 mutation: str | None = None):
        self.ring = ring
        self.dims = dict(dims or {"A": 1})
        self.mutation = mutation
        self.specs = dict(GENERATORS)
        if mutation is not None:
            mut = MUTATIONS[mutation]
            self.specs[mut.kind] = mut.spec
        self._compiled: dict[MorTerm, _Node] = {}

    # coefficient conversion
    def coeff(self, n: int):
        ring = self.ring
        if n >= 0:
            return ring.nat(n)
        return ring.neg(ring.nat(-n))

    def gen_column(self, kind: str, params: tuple, o: BasisElem) -> dict:
        spec = self.specs[kind]
        out: dict = {}
        ring = self.ring
        for x, c in spec.column(params, o, self.dims):
            v = self.coeff(c)
            if x in out:
                v = ring.add(out[x], v)
            out[x] = v
        return {x: v for x, v in out.items() if not ring.is_zero(v)}

    def gen_row(self, kind: str, params: tuple, i: BasisElem):
        return self.specs[kind].row(params, i)

    def gen_entry(self, kind: str, params: tuple, i: BasisElem, o: BasisElem):
        return self.gen_column(kind, params, o).get(i, self.ring.zero)

    # compilation
    def compile(self, t: MorTerm) -> "_Node":
        node = self._compiled.get(t)
        if node is None:
            node = _compile(self, t)
            self._compiled[t] = node
        return node

    def pull(self, t: MorTerm, o: BasisElem) -> dict:
        """Column of ``t`` at output ``o``: finite map input -> nonzero coefficient."""
        return self.compile(t).pull(o)

    def eval_entry(self, t: MorTerm, i: BasisElem, o: BasisElem):
        dom, cod = infer_type(t)
        if not matches(i, dom, self.dims):
            raise TypeCheckError(f"{format_elem(i)} is not a basis element of {dom}")
        if not matches(o, cod, self.dims):
            raise TypeCheckError(f"{format_elem(o)} is not a basis element of {cod}")
        return self.pull(t, o).get(i, self.ring.zero)

    def support(self, t: MorTerm, i: BasisElem):
        """Outputs that can carry a nonzero coefficient for input ``i``, or UNBOUNDED."""
        dom, cod = infer_type(t)
        if not has_bang(cod):
            return frozenset(finite_basis(cod, self.dims))
        return self.compile(t).row(i)

    def eval_vector(self, t: MorTerm, i: BasisElem, fallback_cap: int | None = None) -> VectorResult:
        """Row of ``t`` at input ``i``.  When the row cannot be bounded, outputs are
        restricted to structural size ``fallback_cap`` and the result is flagged
        approximate."""
        dom, cod = infer_type(t)
        if not matches(i, dom, self.dims):
            raise TypeCheckError(f"{format_elem(i)} is not a basis element of {dom}")
        cands = self.support(t, i)
        approximate = False
        if cands is UNBOUNDED:
            if fallback_cap is None:
                raise UnboundedError(
                    "unbounded interior: the output support of this row is infinite; "
                    "pass a fallback cap")
            cands = [o for o in basis_enum(cod, self.dims, fallback_cap) if o.weight == i.weight]
            approximate = True
        values = {}
        for o in sorted(cands, key=lambda e: e.order_key):
            v = self.pull(t, o).get(i)
            if v is not None and not self.ring.is_zero(v):
                values[o] = v
        return VectorResult(values, approximate)

    def equal_upto(self, t1: MorTerm, t2: MorTerm, size_cap: int) -> Verdict:
        """Compare all entries ``(in, out)`` with both structural sizes at most ``size_cap``.

        The first disagreement in canonical order (output first, then input) is
        reported as ``(in, out, lhs, rhs)``.
        """
        ty1, ty2 = infer_type(t1), infer_type(t2)
        if ty1 != ty2:
            raise TypeCheckError(f"cannot compare {ty1[0]} -> {ty1[1]} with {ty2[0]} -> {ty2[1]}")
        dom, cod = ty1
        ring = self.ring
        n1, n2 = self.compile(t1), self.compile(t2)
        checked = 0
        n_in = len(basis_enum(dom, self.dims, size_cap))
        for o in basis_enum(cod, self.dims, size_cap):
            c1, c2 = n1.pull(o), n2.pull(o)
            checked += n_in
            bad = [i for i in set(c1) | set(c2)
                   if i.size <= size_cap
                   and c1.get(i, ring.zero) != c2.get(i, ring.zero)]
            if bad:
                i = min(bad, key=lambda e: e.order_key)
                return Verdict(False, checked, (i, o, c1.get(i, ring.zero), c2.get(i, ring.zero)))
        return Verdict(True, checked)

    def matrix(self, t: MorTerm, size_cap: int) -> dict:
        """All nonzero entries ``(in, out) -> coefficient`` with sizes at most ``size_cap``."""
        dom, cod = infer_type(t)
        node = self.compile(t)
        out = {}
        for o in basis_enum(cod, self.dims, size_cap):
            for i, v in node.pull(o).items():
                if i.size <= size_cap:
                    out[(i, o)] = v
        return out


# -- compiled evaluation nodes ------------------------------------------------------


class _Node:
    __slots__ = ("model", "cache", "dom", "cod")

    def __init__(self, model: Model, dom: ObjExpr, cod: ObjExpr):
        self.model = model
        self.cache: dict = {}
        self.dom = dom
        self.cod = cod

    def pull(self, o: BasisElem) -> dict:
        r = self.cache.get(o)
        if r is None:
            r = self._pull(o)
            self.cache[o] = r
        return r

    def _pull(self, o):
        raise NotImplementedError

    def row(self, i: BasisElem):
        raise NotImplementedError


def _add_into(acc: dict, key, value, ring: Semiring):
    if key in acc:
        acc[key] = ring.add(acc[key], value)
    else:
        acc[key] = value


def _nonzero(d: dict, ring: Semiring) -> dict:
    return {k: v for k, v in d.items() if not ring.is_zero(v)}


class _IdNode(_Node):
    __slots__ = ()

    def _pull(self, o):
        return {o: self.model.ring.one}

    def row(self, i):
        return frozenset([i])


class _GenNode(_Node):
    __slots__ = ("kind", "params")

    def __init__(self, model, dom, cod, kind, params):
        super().__init__(model, dom, cod)
        self.kind = kind
        self.params = params

    def _pull(self, o):
        return self.model.gen_column(self.kind, self.params, o)

    def row(self, i):
        return self.model.gen_row(self.kind, self.params, i)


class _SymNode(_Node):
    __slots__ = ("left", "right")

    def __init__(self, model, dom, cod, left, right):
        super().__init__(model, dom, cod)
        self.left = left
        self.right = right

    def _pull(self, o):
        r, l = split(o, [self.right, self.left])
        return {join([l, r], [self.left, self.right]): self.model.ring.one}

    def row(self, i):
        l, r = split(i, [self.left, self.right])
        return frozenset([join([r, l], [self.right, self.left])])


class _CompNode(_Node):
    __slots__ = ("parts",)

    def __init__(self, model, dom, cod, parts):
        super().__init__(model, dom, cod)
        self.parts = parts

    def _pull(self, o):
        ring = self.model.ring
        current = {o: ring.one}
        for part in reversed(self.parts):
            nxt: dict = {}
            for x, cx in current.items():
                for y, cy in part.pull(x).items():
                    _add_into(nxt, y, ring.mul(cy, cx), ring)
            current = _nonzero(nxt, ring)
            if not current:
                break
        return current

    def row(self, i):
        current = frozenset([i])
        for part in self.parts:
            nxt = set()
            for x in current:
                r = part.row(x)
                if r is UNBOUNDED:
                    return _bounded_by_type(part.cod, self.model, UNBOUNDED)
                nxt |= r
            current = frozenset(nxt)
        return current


class _TenNode(_Node):
    __slots__ = ("parts",)

    def __init__(self, model, dom, cod, parts):
        super().__init__(model, dom, cod)
        self.parts = parts

    def _pull(self, o):
        ring = self.model.ring
        outs = split(o, [p.cod for p in self.parts])
        cols = []
        for part, x in zip(self.parts, outs):
            c = part.pull(x)
            if not c:
                return {}
            cols.append(list(c.items()))
        doms = [p.dom for p in self.parts]
        result: dict = {}
        for combo in product(*cols):
            v = ring.one
            for _, c in combo:
                v = ring.mul(v, c)
            _add_into(result, join([x for x, _ in combo], doms), v, ring)
        return _nonzero(result, ring)

    def row(self, i):
        ins = split(i, [p.dom for p in self.parts])
        rows = []
        for part, x in zip(self.parts, ins):
            r = part.row(x)
            if r is UNBOUNDED:
                r = _bounded_by_type(part.cod, self.model, UNBOUNDED)
                if r is UNBOUNDED:
                    return UNBOUNDED
            rows.append(r)
        cods = [p.cod for p in self.parts]
        return frozenset(join(list(combo), cods) for combo in product(*rows))


class _BangNode(_Node):
    __slots__ = ("inner",)

    def __init__(self, model, dom, cod, inner):
        super().__init__(model, dom, cod)
        self.inner = inner

    def _pull(self, o):
        ring = self.model.ring
        cols = []
        for b in o.items:
            c = self.inner.pull(b)
            if not c:
                return {}
            cols.append(list(c.items()))
        result: dict = {}
        for combo in product(*cols):
            v = ring.one
            for _, c in combo:
                v = ring.mul(v, c)
            _add_into(result, MSet(x for x, _ in combo), v, ring)
        return _nonzero(result, ring)

    def row(self, i):
        rows = []
        for a in i.items:
            r = self.inner.row(a)
            if r is UNBOUNDED:
                return UNBOUNDED
            rows.append(r)
        return frozenset(MSet(combo) for combo in product(*rows))


class _SumNode(_Node):
    __slots__ = ("parts",)

    def __init__(self, model, dom, cod, parts):
        super().__init__(model, dom, cod)
        self.parts = parts

    def _pull(self, o):
        ring = self.model.ring
        result: dict = {}
        for part in self.parts:
            for x, c in part.pull(o).items():
                _add_into(result, x, c, ring)
        return _nonzero(result, ring)

    def row(self, i):
        out = set()
        for part in self.parts:
            r = part.row(i)
            if r is UNBOUNDED:
                return _bounded_by_type(self.cod, self.model, UNBOUNDED)
            out |= r
        return frozenset(out)


class _NegNode(_Node):
    __slots__ = ("inner",)

    def __init__(self, model, dom, cod, inner):
        super().__init__(model, dom, cod)
        self.inner = inner

    def _pull(self, o):
        ring = self.model.ring
        return {x: ring.neg(c) for x, c in self.inner.pull(o).items()}

    def row(self, i):
        return self.inner.row(i)


class _ZeroNode(_Node):
    __slots__ = ()

    def _pull(self, o):
        return {}

    def row(self, i):
        return frozenset()


class _LinNode(_Node):
    __slots__ = ("columns", "rows")

    def __init__(self, model, dom, cod, lin: Lin):
        super().__init__(model, dom, cod)
        ring = model.ring
        self.columns: dict = {}
        self.rows: dict = {}
        for i, o, c in lin.entries:
            v = ring.from_literal(c)
            col = self.columns.setdefault(o, {})
            _add_into(col, i, v, ring)
            self.rows.setdefault(i, set()).add(o)
        for o in list(self.columns):
            self.columns[o] = _nonzero(self.columns[o], ring)

    def _pull(self, o):
        return self.columns.get(o, {})

    def row(self, i):
        return frozenset(self.rows.get(i, ()))


def _bounded_by_type(obj: ObjExpr, model: Model, fallback):
    if not has_bang(obj):
        return frozenset(finite_basis(obj, model.dims))
    return fallback


def _compile(model: Model, t: MorTerm) -> _Node:
    dom, cod = infer_type(t)
    if isinstance(t, Id):
        return _IdNode(model, dom, cod)
    if isinstance(t, Gen):
        spec = model.specs[t.kind]
        if spec.needs_negatives and not model.ring.has_negatives and model.mutation != "drop_S":
            raise SemiringError(
                f"the antipode S needs negatives, which semiring {model.ring.name} lacks")
        return _GenNode(model, dom, cod, t.kind, t.params)
    if isinstance(t, Sym):
        return _SymNode(model, dom, cod, t.left, t.right)
    if isinstance(t, Comp):
        return _CompNode(model, dom, cod, [model.compile(p) for p in t.parts])
    if isinstance(t, Ten):
        return _TenNode(model, dom, cod, [model.compile(p) for p in t.parts])
    if isinstance(t, BangBox):
        return _BangNode(model, dom, cod, model.compile(t.inner))
    if isinstance(t, Sum):
        return _SumNode(model, dom, cod, [model.compile(p) for p in t.parts])
    if isinstance(t, Neg):
        if not model.ring.has_negatives:
            raise SemiringError(f"negation needs negatives, which semiring {model.ring.name} lacks")
        return _NegNode(model, dom, cod, model.compile(t.inner))
    if isinstance(t, ZeroMor):
        return _ZeroNode(model, dom, cod)
    if isinstance(t, Lin):
        if t.placeholder:
            raise TypeCheckError(f"morphism metavariable {t.name} was not instantiated")
        for i, o, _ in t.entries:
            if not matches(i, dom, model.dims) or not matches(o, cod, model.dims):
                raise TypeCheckError(
                    f"lin {t.name}: entry {format_elem(i)} -> {format_elem(o)} "
                    f"does not fit {dom} -> {cod}")
        return _LinNode(model, dom, cod, t)
    raise TypeCheckError(f"cannot evaluate {pretty_print(t)}")


# -- convenience ------------------------------------------------------------------


def gen_entry(kind: str, params: tuple, i: BasisElem, o: BasisElem,
              ring: Semiring = RATIONAL, dims: Mapping[str, int] | None = None):
    """Coefficient of generator ``kind`` at entry ``(i, o)``."""
    model = Model(ring, dims)
    spec = model.specs[kind]
    if spec.needs_negatives and not ring.has_negatives:
        raise SemiringError(f"the antipode S needs negatives, which semiring {ring.name} lacks")
    return model.gen_entry(kind, params, i, o)


def eval_entry(t: MorTerm, i: BasisElem, o: BasisElem, ring: Semiring = RATIONAL,
               dims: Mapping[str, int] | None = None):
    return Model(ring, dims).eval_entry(t, i, o)


def equal_upto(t1: MorTerm, t2: MorTerm, size_cap: int, ring: Semiring = RATIONAL,
               dims: Mapping[str, int] | None = None) -> Verdict:
    return Model(ring, dims).equal_upto(t1, t2, size_cap)


__all__ = [
    "GENERATORS", "MUTATIONS", "Model", "UNBOUNDED", "Verdict", "VectorResult",
    "equal_upto", "eval_entry", "gen_entry", "multiset_partitions", "pairings",
    "sub_multisets",
]
