"""Basis elements of the free semimodules that carry objects in the model.

A base object ``A`` of dimension ``n`` has atoms ``A_1 .. A_n``; the unit has
a single element; a tensor has tuples; ``!X`` has finite multisets of basis
elements of ``X``.  Elements are immutable and hashable, with a fixed total
order (``order_key``: structural size first, then a lexicographic key).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping, Sequence
from functools import lru_cache
from itertools import product

from ._lexer import TokenStream
from .errors import ParseError, UnknownNameError
from .objects import Bang, Base, ObjExpr, Tensor, Unit, factors


class BasisElem:
    __slots__ = ("key", "size", "weight", "_hash")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, BasisElem):
            return NotImplemented
        return self._hash == other._hash and self.key == other.key

    def __hash__(self):
        return self._hash

    @property
    def order_key(self):
        return (self.size, self.key)

    def __lt__(self, other: "BasisElem") -> bool:
        return self.order_key < other.order_key

    def _finish(self, key, size, weight):
        self.key = key
        self.size = size
        self.weight = weight
        self._hash = hash(key)


def _key(e: BasisElem):
    return e.key


class Atom(BasisElem):
    __slots__ = ("base", "index")

    def __init__(self, base: str, index: int):
        self.base = base
        self.index = index
        self._finish((0, base, index), 1, 1)

    def __repr__(self):
        return f"Atom({self.base!r}, {self.index})"


class UnitElem(BasisElem):
    __slots__ = ()

    def __init__(self):
        self._finish((1,), 1, 0)

    def __repr__(self):
        return "UNIT"


UNIT = UnitElem()


class Tup(BasisElem):
    __slots__ = ("items",)

    def __init__(self, items: Iterable[BasisElem]):
        self.items = tuple(items)
        self._finish(
            (2, tuple(e.key for e in self.items)),
            1 + sum(e.size for e in self.items),
            sum(e.weight for e in self.items),
        )

    def __repr__(self):
        return f"Tup({list(self.items)!r})"


class MSet(BasisElem):
    """Finite multiset, stored as a tuple sorted by element key."""

    __slots__ = ("items",)

    def __init__(self, items: Iterable[BasisElem] = ()):
        self.items = tuple(sorted(items, key=_key))
        self._finish(
            (3, tuple(e.key for e in self.items)),
            1 + sum(e.size for e in self.items),
            sum(e.weight for e in self.items),
        )

    def __len__(self):
        return len(self.items)

    def counts(self) -> Counter:
        return Counter(self.items)

    def __add__(self, other: "MSet") -> "MSet":
        return MSet(self.items + other.items)

    def __repr__(self):
        return f"MSet({list(self.items)!r})"


EMPTY = MSet()


def mset(*items: BasisElem) -> MSet:
    return MSet(items)


# -- splitting and joining along tensor factors ------------------------------


def flat_parts(elem: BasisElem, nfactors: int) -> tuple[BasisElem, ...]:
    if nfactors == 0:
        return ()
    if nfactors == 1:
        return (elem,)
    return elem.items


def from_parts(parts: Sequence[BasisElem]) -> BasisElem:
    if not parts:
        return UNIT
    if len(parts) == 1:
        return parts[0]
    return Tup(parts)


def split(elem: BasisElem, objs: Sequence[ObjExpr]) -> tuple[BasisElem, ...]:
    """Split an element of ``tensor(*objs)`` into one element per object."""
    counts = [len(factors(o)) for o in objs]
    return split_counts(elem, counts)


def split_counts(elem: BasisElem, counts: Sequence[int]) -> tuple[BasisElem, ...]:
    parts = flat_parts(elem, sum(counts))
    out = []
    pos = 0
    for c in counts:
        out.append(from_parts(parts[pos:pos + c]))
        pos += c
    return tuple(out)


def join(elems: Sequence[BasisElem], objs: Sequence[ObjExpr]) -> BasisElem:
    return join_counts(elems, [len(factors(o)) for o in objs])


def join_counts(elems: Sequence[BasisElem], counts: Sequence[int]) -> BasisElem:
    parts: list[BasisElem] = []
    for e, c in zip(elems, counts):
        parts.extend(flat_parts(e, c))
    return from_parts(parts)


# -- shape checking -----------------------------------------------------------


def matches(elem: BasisElem, obj: ObjExpr, dims: Mapping[str, int] | None = None) -> bool:
    """True when ``elem`` is a basis element of ``obj``."""
    if isinstance(obj, Base):
        if not isinstance(elem, Atom) or elem.base != obj.name:
            return False
        return dims is None or 1 <= elem.index <= dims.get(obj.name, 0)
    if isinstance(obj, Unit):
        return isinstance(elem, UnitElem)
    if isinstance(obj, Tensor):
        return (isinstance(elem, Tup) and len(elem.items) == len(obj.factors)
                and all(matches(e, f, dims) for e, f in zip(elem.items, obj.factors)))
    if isinstance(obj, Bang):
        return isinstance(elem, MSet) and all(matches(e, obj.inner, dims) for e in elem.items)
    return False


# -- enumeration ------------------------------------------------------------


def basis_enum(obj: ObjExpr, dims: Mapping[str, int], size_cap: int) -> list[BasisElem]:
    """All basis elements of ``obj`` with structural size at most ``size_cap``,
    in canonical order."""
    return list(_enum_sorted(obj, _dims_key(dims), size_cap))


def _dims_key(dims: Mapping[str, int]) -> tuple[tuple[str, int], ...]:
    return tuple(sorted(dims.items()))


@lru_cache(maxsize=None)
def _enum_sorted(obj: ObjExpr, dims: tuple, cap: int) -> tuple[BasisElem, ...]:
    return tuple(sorted(_enum(obj, dims, cap), key=lambda e: e.order_key))


@lru_cache(maxsize=None)
def _enum(obj: ObjExpr, dims: tuple, cap: int) -> tuple[BasisElem, ...]:
    if cap < 1:
        return ()
    if isinstance(obj, Base):
        dim = dict(dims).get(obj.name)
        if dim is None:
            raise UnknownNameError(f"no dimension declared for base object {obj.name!r}")
        return tuple(Atom(obj.name, i) for i in range(1, dim + 1))
    if isinstance(obj, Unit):
        return (UNIT,)
    if isinstance(obj, Tensor):
        return tuple(Tup(parts) for parts in _tuples(obj.factors, dims, cap - 1))
    inner = sorted(_enum(obj.inner, dims, cap - 1), key=_key)
    return tuple(MSet(items) for items in _multisets(inner, 0, cap - 1))


def _tuples(objs: Sequence[ObjExpr], dims: tuple, budget: int) -> Iterator[tuple]:
    if not objs:
        yield ()
        return
    # every remaining factor needs at least size 1
    head_budget = budget - (len(objs) - 1)
    for e in _enum(objs[0], dims, head_budget):
        for rest in _tuples(objs[1:], dims, budget - e.size):
            yield (e, *rest)


def _multisets(pool: Sequence[BasisElem], start: int, budget: int) -> Iterator[tuple]:
    yield ()
    for i in range(start, len(pool)):
        e = pool[i]
        if e.size <= budget:
            for rest in _multisets(pool, i, budget - e.size):
                yield (e, *rest)


def finite_basis(obj: ObjExpr, dims: Mapping[str, int]) -> list[BasisElem]:
    """The whole (finite) basis of a ``!``-free object."""
    if isinstance(obj, Base):
        return [Atom(obj.name, i) for i in range(1, dims[obj.name] + 1)]
    if isinstance(obj, Unit):
        return [UNIT]
    if isinstance(obj, Tensor):
        return [Tup(p) for p in product(*(finite_basis(f, dims) for f in obj.factors))]
    raise ValueError(f"{obj} has an infinite basis")


# -- literal syntax -----------------------------------------------------------


def atom_name(base: str, index: int, dims: Mapping[str, int] | None) -> str:
    stem = base.lower()
    if dims is not None and dims.get(base, 1) == 1 and index == 1:
        return stem
    return f"{stem}{index}"


def format_elem(elem: BasisElem, dims: Mapping[str, int] | None = None) -> str:
    """Literal syntax: ``a`` or ``a2`` for atoms, ``*`` for the unit element,
    ``(x,y)`` for tuples and ``[x,y]`` for multisets."""
    if isinstance(elem, Atom):
        return atom_name(elem.base, elem.index, dims)
    if isinstance(elem, UnitElem):
        return "*"
    if isinstance(elem, Tup):
        return "(" + ",".join(format_elem(e, dims) for e in elem.items) + ")"
    return "[" + ",".join(format_elem(e, dims) for e in elem.items) + "]"


def parse_elem(src: str, obj: ObjExpr, dims: Mapping[str, int]) -> BasisElem:
    ts = TokenStream(src)
    elem = parse_elem_from(ts, obj, dims)
    ts.expect_eof()
    return elem


def parse_elem_from(ts: TokenStream, obj: ObjExpr, dims: Mapping[str, int]) -> BasisElem:
    if isinstance(obj, Unit):
        ts.expect("*")
        return UNIT
    if isinstance(obj, Base):
        tok = ts.peek
        if tok.kind != "ident":
            ts.error(f"expected an atom of {obj}")
        index = _atom_index(tok.text, obj.name, dims)
        if index is None:
            ts.error(f"{tok.text!r} is not a basis atom of {obj}")
        ts.next()
        return Atom(obj.name, index)
    if isinstance(obj, Tensor):
        ts.expect("(")
        items = []
        for k, f in enumerate(obj.factors):
            if k:
                ts.expect(",")
            items.append(parse_elem_from(ts, f, dims))
        ts.expect(")")
        return Tup(items)
    ts.expect("[")
    items = []
    if not ts.at("]"):
        items.append(parse_elem_from(ts, obj.inner, dims))
        while ts.accept(","):
            items.append(parse_elem_from(ts, obj.inner, dims))
    ts.expect("]")
    return MSet(items)


def _atom_index(text: str, base: str, dims: Mapping[str, int]) -> int | None:
    stem = base.lower()
    dim = dims.get(base)
    if dim is None:
        raise UnknownNameError(f"no dimension declared for base object {base!r}")
    if text == stem:
        return 1 if dim == 1 else None
    if text.startswith(stem) and text[len(stem):].isdigit():
        index = int(text[len(stem):])
        if 1 <= index <= dim:
            return index
    return None


__all__ = [
    "Atom", "BasisElem", "EMPTY", "MSet", "ParseError", "Tup", "UNIT", "UnitElem",
    "basis_enum", "finite_basis", "format_elem", "join", "matches", "mset",
    "parse_elem", "split",
]
