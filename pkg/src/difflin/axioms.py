"""Catalog of the equations of differential linear categories, plus the
constructions that derive one piece of structure from another.

Each :class:`AxiomEntry` is a schema: its terms mention object metavariables
``X``, ``Y``, ``Z`` (placeholder base objects) and morphism metavariables
``f``, ``g`` (placeholder linear maps ``X -> Y``).  The verifier instantiates
them; see :func:`instantiate`.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .basis import finite_basis
from .errors import SemiringError
from .objects import I, Bang, Base, ObjExpr, tensor
from .semiring import Semiring
from .terms import (
    BangBox, Gen, Id, Lin, MorTerm, Neg, ZeroMor, comp, infer_type, parse_term,
    placeholders, plus, substitute, ten, uses_negatives,
)

X, Y, Z = Base("X"), Base("Y"), Base("Z")
OBJECT_VARS = ("X", "Y", "Z")
F = Lin("f", X, Y, placeholder=True)
G = Lin("g", X, Y, placeholder=True)
_SCHEMA_LINS = {"f": F, "g": G}


@dataclass(frozen=True)
class AxiomEntry:
    id: str
    tier: str
    lhs: MorTerm
    rhs: MorTerm
    anchor: str
    object_vars: tuple[str, ...] = ()
    morphism_vars: tuple[str, ...] = ()
    requires_negatives: bool = False
    note: str = ""

    @property
    def sum_free(self) -> bool:
        from .terms import is_sum_free
        return is_sum_free(self.lhs) and is_sum_free(self.rhs)

    def to_json(self) -> dict:
        from .terms import pretty_print
        return {
            "id": self.id, "tier": self.tier, "anchor": self.anchor,
            "requires_negatives": self.requires_negatives,
            "lhs": pretty_print(self.lhs), "rhs": pretty_print(self.rhs),
        }


# -- constructions --------------------------------------------------------------------


def _typed(t: MorTerm) -> tuple[ObjExpr, ObjExpr]:
    return infer_type(t)


def build_sum(f: MorTerm, g: MorTerm) -> MorTerm:
    """Sum of two maps ``A -> B`` through the bialgebra structure:
    ``eta ; copy ; bang(f) * bang(g) ; nabla ; eps``."""
    a, b = _typed(f)
    if _typed(g) != (a, b):
        from .errors import TypeCheckError
        raise TypeCheckError("build_sum needs two maps of the same type")
    return comp(Gen("eta", (a,)), Gen("copy", (a,)), ten(BangBox(f), BangBox(g)),
                Gen("nabla", (b,)), Gen("eps", (b,)))


def build_zero(a: ObjExpr, b: ObjExpr) -> MorTerm:
    """Zero map ``A -> B``: ``eta ; weak ; u ; eps``."""
    return comp(Gen("eta", (a,)), Gen("weak", (a,)), Gen("u", (b,)), Gen("eps", (b,)))


def build_neg(f: MorTerm, ring: Semiring | None = None) -> MorTerm:
    """Negative of ``f``: ``eta ; S ; bang(f) ; eps``."""
    if ring is not None and not ring.has_negatives:
        raise SemiringError(f"negation needs negatives, which semiring {ring.name} lacks")
    a, b = _typed(f)
    return comp(Gen("eta", (a,)), Gen("S", (a,)), BangBox(f), Gen("eps", (b,)))


def build_phi(a: ObjExpr) -> MorTerm:
    """``eps * weak + weak * eps : !A * !A -> A``."""
    return plus(ten(Gen("eps", (a,)), Gen("weak", (a,))),
                ten(Gen("weak", (a,)), Gen("eps", (a,))))


def build_nabla_from_m(a: ObjExpr) -> MorTerm:
    """Multiplication of ``!A`` rebuilt from the monoidal structure."""
    ba = Bang(a)
    return comp(ten(Gen("delta", (a,)), Gen("delta", (a,))), Gen("m", (ba, ba)),
                BangBox(build_phi(a)))


def build_u_from_m(a: ObjExpr) -> MorTerm:
    """Unit of ``!A`` rebuilt from the monoidal unit: ``mI ; bang(0)``."""
    return comp(Gen("mI", ()), BangBox(ZeroMor(I, a)))


def build_m_from_nabla(a: ObjExpr, b: ObjExpr) -> MorTerm:
    """Monoidal structure ``!A * !B -> !(A * B)`` rebuilt from the bialgebra structure."""
    ba, bb = Bang(a), Bang(b)
    pair = tensor(ba, bb)
    return comp(
        ten(Gen("delta", (a,)), Gen("delta", (b,))),
        ten(BangBox(ten(Id(ba), Gen("u", (b,)))), BangBox(ten(Gen("u", (a,)), Id(bb)))),
        Gen("nabla", (pair,)),
        Gen("delta", (pair,)),
        BangBox(Gen("copy", (pair,))),
        BangBox(ten(BangBox(ten(Gen("eps", (a,)), Gen("weak", (b,)))),
                    BangBox(ten(Gen("weak", (a,)), Gen("eps", (b,)))))),
        BangBox(ten(Gen("eps", (a,)), Gen("eps", (b,)))),
    )


def build_mI_from_nabla() -> MorTerm:
    """``u ; delta ; bang(weak) : I -> !I``."""
    return comp(Gen("u", (I,)), Gen("delta", (I,)), BangBox(Gen("weak", (I,))))


def build_d_from_eta(a: ObjExpr) -> MorTerm:
    """``id * eta ; nabla : !A * A -> !A``."""
    return comp(ten(Id(Bang(a)), Gen("eta", (a,))), Gen("nabla", (a,)))


def build_eta_from_d(a: ObjExpr) -> MorTerm:
    """``u * id ; d : A -> !A``."""
    return comp(ten(Gen("u", (a,)), Id(a)), Gen("d", (a,)))


def minus_one(a: ObjExpr, dims: Mapping[str, int] | None = None) -> MorTerm:
    """The map ``-1 : A -> A``, as an explicit diagonal matrix when ``dims`` is given."""
    if dims is None:
        return Neg(Id(a))
    entries = tuple((x, x, Fraction(-1)) for x in finite_basis(a, dims))
    return Lin("minus_one", a, a, entries)


def build_antipode(a: ObjExpr, ring: Semiring | None = None,
                   dims: Mapping[str, int] | None = None) -> MorTerm:
    """``bang(-1) : !A -> !A``."""
    if ring is not None and not ring.has_negatives:
        raise SemiringError(f"the antipode needs negatives, which semiring {ring.name} lacks")
    return BangBox(minus_one(a, dims))


# -- the catalog -----------------------------------------------------------------------

TIER_COUNTS: dict[str, int] = {
    "comonad": 3, "coalgebra-modality": 6, "sm-functor": 4, "monoidal-coalgebra": 10,
    "pre-codereliction": 3, "precoder-lemma": 3, "bialgebra": 8, "monoidal-bialgebra": 6,
    "pre-additive": 2, "convolution": 2, "additive-thm": 2, "hopf": 2, "hopf-lemma": 6,
    "monoidal-hopf": 3, "hopf-neg-lemma": 4, "deriving": 5, "monoidal-deriving": 3,
    "codereliction": 3, "deriving-neg": 2, "phi-lemma": 2,
}
TIERS: tuple[str, ...] = tuple(TIER_COUNTS)
TOTAL_EQUATIONS = sum(TIER_COUNTS.values())

# tiers whose equations need additive inverses in the coefficient semiring
NEGATIVE_TIERS = frozenset({"hopf", "hopf-lemma", "monoidal-hopf", "hopf-neg-lemma", "deriving-neg"})

# (tier, id, anchor, lhs, rhs); sides are text or already-built terms
_SCHEMAS: list[tuple] = [
    # comonad
    ("comonad", "comonad.counit-outer", "diag:comonad",
     "delta{X} ; eps{!X}", "id{!X}"),
    ("comonad", "comonad.counit-inner", "diag:comonad",
     "delta{X} ; bang(eps{X})", "id{!X}"),
    ("comonad", "comonad.coassoc", "diag:comonad",
     "delta{X} ; delta{!X}", "delta{X} ; bang(delta{X})"),
    # coalgebra modality
    ("coalgebra-modality", "comonoid.coassoc", "diag:comonoid",
     "copy{X} ; copy{X} * id{!X}", "copy{X} ; id{!X} * copy{X}"),
    ("coalgebra-modality", "comonoid.counit-left", "diag:comonoid",
     "copy{X} ; weak{X} * id{!X}", "id{!X}"),
    ("coalgebra-modality", "comonoid.counit-right", "diag:comonoid",
     "copy{X} ; id{!X} * weak{X}", "id{!X}"),
    ("coalgebra-modality", "comonoid.cocomm", "diag:comonoid",
     "copy{X} ; sigma{!X,!X}", "copy{X}"),
    ("coalgebra-modality", "delta-comonoid.copy", "diag:deltacomonoid",
     "delta{X} ; copy{!X}", "copy{X} ; delta{X} * delta{X}"),
    ("coalgebra-modality", "delta-comonoid.weak", "diag:deltacomonoid",
     "delta{X} ; weak{!X}", "weak{X}"),
    # symmetric monoidal functor
    ("sm-functor", "smendo.assoc", "diag:smendo",
     "m{X,Y} * id{!Z} ; m{X * Y, Z}", "id{!X} * m{Y,Z} ; m{X, Y * Z}"),
    ("sm-functor", "smendo.unit-left", "diag:smendo",
     "mI * id{!X} ; m{I,X}", "id{!X}"),
    ("sm-functor", "smendo.unit-right", "diag:smendo",
     "id{!X} * mI ; m{X,I}", "id{!X}"),
    ("sm-functor", "smendo.sym", "diag:smendo",
     "sigma{!X,!Y} ; m{Y,X}", "m{X,Y} ; bang(sigma{X,Y})"),
    # monoidal coalgebra modality
    ("monoidal-coalgebra", "moncomonad.delta-m", "diag:monoidalcomonad",
     "m{X,Y} ; delta{X * Y}", "delta{X} * delta{Y} ; m{!X,!Y} ; bang(m{X,Y})"),
    ("monoidal-coalgebra", "moncomonad.delta-mI", "diag:monoidalcomonad",
     "mI ; delta{I}", "mI ; bang(mI)"),
    ("monoidal-coalgebra", "moncomonad.eps-m", "diag:monoidalcomonad",
     "m{X,Y} ; eps{X * Y}", "eps{X} * eps{Y}"),
    ("monoidal-coalgebra", "moncomonad.eps-mI", "diag:monoidalcomonad",
     "mI ; eps{I}", "id{I}"),
    ("monoidal-coalgebra", "moncomonoid.copy-m", "diag:monoidalcomonoid",
     "m{X,Y} ; copy{X * Y}",
     "copy{X} * copy{Y} ; id{!X} * sigma{!X,!Y} * id{!Y} ; m{X,Y} * m{X,Y}"),
    ("monoidal-coalgebra", "moncomonoid.copy-mI", "diag:monoidalcomonoid",
     "mI ; copy{I}", "mI * mI"),
    ("monoidal-coalgebra", "moncomonoid.weak-m", "diag:monoidalcomonoid",
     "m{X,Y} ; weak{X * Y}", "weak{X} * weak{Y}"),
    ("monoidal-coalgebra", "moncomonoid.weak-mI", "diag:monoidalcomonoid",
     "mI ; weak{I}", "id{I}"),
    ("monoidal-coalgebra", "coalg-comonoid.copy", "diag:!coalgcomonoid",
     "copy{X} ; delta{X} * delta{X} ; m{!X,!X}", "delta{X} ; bang(copy{X})"),
    ("monoidal-coalgebra", "coalg-comonoid.weak", "diag:!coalgcomonoid",
     "weak{X} ; mI", "delta{X} ; bang(weak{X})"),
    # pre-codereliction
    ("pre-codereliction", "cd.3", "diag:precoder [cd.3]",
     "eta{X} ; eps{X}", "id{X}"),
    ("pre-codereliction", "cd.m.l", "diag:precoder [cd.m.l]",
     "id{!X} * eta{Y} ; m{X,Y}", "eps{X} * id{Y} ; eta{X * Y}"),
    ("pre-codereliction", "cd.m.r", "diag:precoder [cd.m.r]",
     "eta{X} * id{!Y} ; m{X,Y}", "id{X} * eps{Y} ; eta{X * Y}"),
    # lemma on the pre-codereliction
    ("precoder-lemma", "precoder-lemma.left-unit", "string:eta-lemma",
     "eta{I} * id{!X} ; m{I,X}", "eps{X} ; eta{X}"),
    ("precoder-lemma", "precoder-lemma.right-unit", "string:eta-lemma",
     "id{!X} * eta{I} ; m{X,I}", "eps{X} ; eta{X}"),
    ("precoder-lemma", "precoder-lemma.pair", "string:eta-lemma",
     "eta{X} * eta{Y} ; m{X,Y}", "eta{X * Y}"),
    # bialgebra modality
    ("bialgebra", "monoid.assoc", "diag:monoid",
     "nabla{X} * id{!X} ; nabla{X}", "id{!X} * nabla{X} ; nabla{X}"),
    ("bialgebra", "monoid.unit-left", "diag:monoid",
     "u{X} * id{!X} ; nabla{X}", "id{!X}"),
    ("bialgebra", "monoid.unit-right", "diag:monoid",
     "id{!X} * u{X} ; nabla{X}", "id{!X}"),
    ("bialgebra", "monoid.comm", "diag:monoid",
     "sigma{!X,!X} ; nabla{X}", "nabla{X}"),
    ("bialgebra", "bimonoid.nabla-copy", "diag:bimonoid",
     "nabla{X} ; copy{X}",
     "copy{X} * copy{X} ; id{!X} * sigma{!X,!X} * id{!X} ; nabla{X} * nabla{X}"),
    ("bialgebra", "bimonoid.u-copy", "diag:bimonoid",
     "u{X} ; copy{X}", "u{X} * u{X}"),
    ("bialgebra", "bimonoid.nabla-weak", "diag:bimonoid",
     "nabla{X} ; weak{X}", "weak{X} * weak{X}"),
    ("bialgebra", "bimonoid.u-weak", "diag:bimonoid",
     "u{X} ; weak{X}", "id{I}"),
    # monoidal bialgebra modality
    ("monoidal-bialgebra", "nablamon.right", "diag:nablamonspecial",
     "id{!X} * nabla{Y} ; m{X,Y}",
     "copy{X} * id{!Y} * id{!Y} ; id{!X} * sigma{!X,!Y} * id{!Y} ; m{X,Y} * m{X,Y} ; "
     "nabla{X * Y}"),
    ("monoidal-bialgebra", "nablamon.left", "diag:nablamonspecial",
     "nabla{X} * id{!Y} ; m{X,Y}",
     "id{!X} * id{!X} * copy{Y} ; id{!X} * sigma{!X,!Y} * id{!Y} ; m{X,Y} * m{X,Y} ; "
     "nabla{X * Y}"),
    ("monoidal-bialgebra", "nablamon.u-right", "diag:nablamonspecial",
     "id{!X} * u{Y} ; m{X,Y}", "weak{X} ; u{X * Y}"),
    ("monoidal-bialgebra", "nablamon.u-left", "diag:nablamonspecial",
     "u{X} * id{!Y} ; m{X,Y}", "weak{Y} ; u{X * Y}"),
    ("monoidal-bialgebra", "coalg-monoid.nabla", "diag:!coalgmonoid",
     "nabla{X} ; delta{X}", "delta{X} * delta{X} ; m{!X,!X} ; bang(nabla{X})"),
    ("monoidal-bialgebra", "coalg-monoid.u", "diag:!coalgmonoid",
     "u{X} ; delta{X}", "mI ; bang(u{X})"),
    # pre-additive bialgebra modality
    ("pre-additive", "ep-monoid.nabla", "diag:ep-monoid",
     "nabla{X} ; eps{X}", "eps{X} * weak{X} + weak{X} * eps{X}"),
    ("pre-additive", "ep-monoid.u", "diag:ep-monoid",
     "u{X} ; eps{X}", "0 : I -> X"),
    # convolution (additive) bialgebra modality
    ("convolution", "add-bialg.sum", "diag:add-bialg",
     "bang(lin f + lin g)", "copy{X} ; bang(lin f) * bang(lin g) ; nabla{Y}"),
    ("convolution", "add-bialg.zero", "diag:add-bialg",
     "bang(0 : X -> Y)", "weak{X} ; u{Y}"),
    # interior identities of the additive theorem
    ("additive-thm", "additive.sum", "string:!+0",
     BangBox(build_sum(F, G)), "copy{X} ; bang(lin f) * bang(lin g) ; nabla{Y}"),
    ("additive-thm", "additive.zero", "string:!+0",
     BangBox(build_zero(X, Y)), "weak{X} ; u{Y}"),
    # Hopf coalgebra modality
    ("hopf", "hopf.right", "diag:Hopf",
     "copy{X} ; id{!X} * S{X} ; nabla{X}", "weak{X} ; u{X}"),
    ("hopf", "hopf.left", "diag:Hopf",
     "copy{X} ; S{X} * id{!X} ; nabla{X}", "weak{X} ; u{X}"),
    # lemmas on the antipode
    ("hopf-lemma", "S.involution", "diag:S-iso",
     "S{X} ; S{X}", "id{!X}"),
    ("hopf-lemma", "S.copy", "diag:S-comonoid",
     "S{X} ; copy{X}", "copy{X} ; S{X} * S{X}"),
    ("hopf-lemma", "S.weak", "diag:S-comonoid",
     "S{X} ; weak{X}", "weak{X}"),
    ("hopf-lemma", "S.nabla", "diag:S-monoid",
     "nabla{X} ; S{X}", "S{X} * S{X} ; nabla{X}"),
    ("hopf-lemma", "S.u", "diag:S-monoid",
     "u{X} ; S{X}", "u{X}"),
    ("hopf-lemma", "S.natural", "lemma:Hopf-1",
     "S{X} ; bang(lin f)", "bang(lin f) ; S{Y}"),
    # monoidal Hopf
    ("monoidal-hopf", "S.delta", "diag:S-!coalg",
     "S{X} ; delta{X}", "delta{X} ; bang(S{X})"),
    ("monoidal-hopf", "hopf-monoidal.right", "diag:Hopf-monoidal",
     "id{!X} * S{Y} ; m{X,Y}", "m{X,Y} ; S{X * Y}"),
    ("monoidal-hopf", "hopf-monoidal.left", "diag:Hopf-monoidal",
     "S{X} * id{!Y} ; m{X,Y}", "m{X,Y} ; S{X * Y}"),
    # negatives through the antipode
    ("hopf-neg-lemma", "neg.S-before", "diag:-f",
     "bang(-lin f)", "S{X} ; bang(lin f)"),
    ("hopf-neg-lemma", "neg.S-after", "diag:-f",
     "bang(-lin f)", "bang(lin f) ; S{Y}"),
    ("hopf-neg-lemma", "neg.difference", "diag:add-bialg",
     "bang(lin f + -lin g)", "copy{X} ; bang(lin f) * bang(lin g) ; id{!Y} * S{Y} ; nabla{Y}"),
    ("hopf-neg-lemma", "S.eps", "diag:S-epsilon",
     "S{X} ; eps{X}", "-eps{X}"),
    # deriving transformation
    ("deriving", "D.1", "diag:deriving [D.1]",
     "d{X} ; weak{X}", "0 : !X * X -> I"),
    ("deriving", "D.2", "diag:deriving [D.2]",
     "d{X} ; copy{X}",
     "copy{X} * id{X} ; (id{!X} * d{X} + (id{!X} * sigma{!X,X} ; d{X} * id{!X}))"),
    ("deriving", "D.3", "diag:deriving [D.3]",
     "d{X} ; eps{X}", "weak{X} * id{X}"),
    ("deriving", "D.4", "diag:deriving [D.4]",
     "d{X} ; delta{X}", "copy{X} * id{X} ; delta{X} * d{X} ; d{!X}"),
    ("deriving", "D.5", "diag:deriving [D.5]",
     "d{X} * id{X} ; d{X}", "id{!X} * sigma{X,X} ; d{X} * id{X} ; d{X}"),
    # monoidal deriving rules
    ("monoidal-deriving", "diff-mon.right", "diag:diff-mon",
     "id{!X} * d{Y} ; m{X,Y}",
     "copy{X} * id{!Y} * id{Y} ; id{!X} * eps{X} * id{!Y} * id{Y} ; "
     "id{!X} * sigma{X,!Y} * id{Y} ; m{X,Y} * id{X} * id{Y} ; d{X * Y}"),
    ("monoidal-deriving", "diff-mon.left", "diag:diff-mon",
     "d{X} * id{!Y} ; m{X,Y}",
     "id{!X} * id{X} * copy{Y} ; id{!X} * id{X} * id{!Y} * eps{Y} ; "
     "id{!X} * sigma{X,!Y} * id{Y} ; m{X,Y} * id{X} * id{Y} ; d{X * Y}"),
    ("monoidal-deriving", "diff-mon.nabla", "diag:diff-mon",
     "id{!X} * d{X} ; nabla{X}", "nabla{X} * id{X} ; d{X}"),
    # codereliction
    ("codereliction", "cd.1", "diag:coder [cd.1]",
     "eta{X} ; weak{X}", "0 : X -> I"),
    ("codereliction", "cd.2", "diag:coder [cd.2]",
     "eta{X} ; copy{X}", "eta{X} * u{X} + u{X} * eta{X}"),
    ("codereliction", "cd.4", "diag:coder [cd.4]",
     "eta{X} ; delta{X}", "u{X} * eta{X} ; delta{X} * eta{!X} ; nabla{!X}"),
    # deriving transformation and negatives
    ("deriving-neg", "der-neg.d", "diag:S-der",
     "d{X} ; S{X}", "S{X} * id{X} ; -d{X}"),
    ("deriving-neg", "der-neg.eta", "diag:S-der",
     "eta{X} ; S{X}", "-eta{X}"),
    # the phi lemma
    ("phi-lemma", "phi.unit-left", "string:phi-lemma",
     comp(ten(Gen("u", (X,)), Id(Bang(X))), build_phi(X)), "eps{X}"),
    ("phi-lemma", "phi.unit-right", "string:phi-lemma",
     comp(ten(Id(Bang(X)), Gen("u", (X,))), build_phi(X)), "eps{X}"),
]


def _side(s) -> MorTerm:
    if isinstance(s, str):
        return parse_term(s, _SCHEMA_LINS)
    return s


def _object_vars(t: MorTerm) -> set[str]:
    from .terms import annotate
    from .objects import base_names
    names: set[str] = set()
    for _, dom, cod in annotate(t):
        names |= base_names(dom) | base_names(cod)
    return names


def _build_catalog() -> tuple[AxiomEntry, ...]:
    entries = []
    for tier, aid, anchor, lhs_src, rhs_src in _SCHEMAS:
        lhs, rhs = _side(lhs_src), _side(rhs_src)
        if infer_type(lhs) != infer_type(rhs):
            raise AssertionError(f"schema {aid}: sides have different types")
        ovars = tuple(sorted((_object_vars(lhs) | _object_vars(rhs)) & set(OBJECT_VARS)))
        mvars = tuple(sorted(placeholders(lhs) | placeholders(rhs)))
        entries.append(AxiomEntry(
            id=aid, tier=tier, lhs=lhs, rhs=rhs, anchor=anchor,
            object_vars=ovars, morphism_vars=mvars,
            requires_negatives=uses_negatives(lhs) or uses_negatives(rhs),
        ))
    return tuple(entries)


CATALOG: tuple[AxiomEntry, ...] = _build_catalog()


def all_axioms(tiers: Iterable[str] | None = None) -> list[AxiomEntry]:
    """Catalog entries, optionally restricted to the given tiers (catalog order)."""
    if tiers is None:
        return list(CATALOG)
    wanted = set(tiers)
    unknown = wanted - set(TIERS)
    if unknown:
        raise KeyError(f"unknown tier(s): {', '.join(sorted(unknown))}")
    return [e for e in CATALOG if e.tier in wanted]


def get_axiom(aid: str) -> AxiomEntry:
    for e in CATALOG:
        if e.id == aid:
            return e
    raise KeyError(aid)


# -- instantiation ---------------------------------------------------------------------


def random_lin(name: str, dom: ObjExpr, cod: ObjExpr, dims: Mapping[str, int],
               rng: random.Random, values: Sequence[int] = (0, 1, 2)) -> Lin:
    """A linear map between !-free objects with entries drawn from ``values``."""
    entries = []
    for i in finite_basis(dom, dims):
        for o in finite_basis(cod, dims):
            c = rng.choice(values)
            if c:
                entries.append((i, o, Fraction(c)))
    return Lin(name, dom, cod, tuple(entries))


@dataclass(frozen=True)
class Instance:
    entry: AxiomEntry
    index: int
    lhs: MorTerm
    rhs: MorTerm
    objects: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)

    def summary(self) -> str:
        parts = [f"{k}={v}" for k, v in sorted(self.objects.items())]
        parts += [f"{k}={v}" for k, v in sorted(self.morphisms.items())]
        return ", ".join(parts) if parts else "(no metavariables)"


def instantiate(entry: AxiomEntry, dims: Mapping[str, int], seed: int, index: int,
                boolean: bool = False) -> Instance:
    """Instance ``index`` of a schema.

    Object metavariables cycle through the base objects (index 0), through them in
    reverse (index 1) or are drawn at random from the bases and ``I`` (index 2 and
    later).  Morphism metavariable ``f`` is the identity at index 0 (forcing
    ``Y = X``), zero at index 1 and random otherwise; ``g`` is always random.
    Random maps have entries in {0, 1, 2}, or {0, 1} over the Boolean semiring.
    """
    rng = random.Random(f"{seed}:{entry.id}:{index}")
    bases = sorted(dims)
    objs: dict[str, ObjExpr] = {}
    for k, v in enumerate(OBJECT_VARS):
        if index == 0:
            objs[v] = Base(bases[k % len(bases)])
        elif index == 1:
            rev = bases[::-1]
            objs[v] = Base(rev[k % len(rev)])
        else:
            choice = rng.choice(bases + ["I"])
            objs[v] = I if choice == "I" else Base(choice)
    values = (0, 1) if boolean else (0, 1, 2)
    mors: dict[str, MorTerm] = {}
    shown: dict[str, str] = {}
    if entry.morphism_vars:
        if index == 0:
            objs["Y"] = objs["X"]
        a, b = objs["X"], objs["Y"]
        for name in entry.morphism_vars:
            if name == "f" and index == 0:
                mors[name] = Id(a)
                shown[name] = "id"
            elif name == "f" and index == 1:
                mors[name] = ZeroMor(a, b)
                shown[name] = "zero"
            else:
                lin = random_lin(name, a, b, dims, rng, values)
                mors[name] = lin
                shown[name] = "{" + ", ".join(
                    f"{_fmt(i, dims)}->{_fmt(o, dims)}: {c}" for i, o, c in lin.entries) + "}"
    used = {k: v for k, v in objs.items() if k in entry.object_vars or
            (entry.morphism_vars and k in ("X", "Y"))}
    lhs = substitute(entry.lhs, objs, mors)
    rhs = substitute(entry.rhs, objs, mors)
    return Instance(entry, index, lhs, rhs, {k: str(v) for k, v in used.items()}, shown)


def _fmt(e, dims):
    from .basis import format_elem
    return format_elem(e, dims)


__all__ = [
    "AxiomEntry", "CATALOG", "Instance", "NEGATIVE_TIERS", "TIERS", "TIER_COUNTS",
    "TOTAL_EQUATIONS", "all_axioms", "build_antipode", "build_d_from_eta", "build_eta_from_d",
    "build_m_from_nabla", "build_mI_from_nabla", "build_nabla_from_m", "build_neg",
    "build_phi", "build_sum", "build_u_from_m", "build_zero", "get_axiom", "instantiate",
    "minus_one", "random_lin",
]
