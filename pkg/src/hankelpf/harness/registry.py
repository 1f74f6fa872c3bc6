"""Registry of every identity the harness can check.

Each entry names a statement by what it computes, points at its checker,
and carries two parameter grids: a smoke grid (one smallest instance)
and a full grid (the complete desk-scale coverage).
"""

import itertools
from dataclasses import dataclass

from ..errors import UnknownIdentity, UnknownTag
from . import (checks_bridges, checks_integrals, checks_narayana,
               checks_qpoly, checks_structural)

STATUSES = ("theorem", "corollary", "conjecture", "reported-discrepancy")

# statuses whose checks gate the process exit code
GATING_STATUSES = ("theorem", "corollary")


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    title: str
    status: str
    strategy: str
    domain: str
    check: object
    smoke: tuple
    full: tuple
    tags: tuple = ()

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r} for {self.id}")
        if not self.smoke or not self.full:
            raise ValueError(f"{self.id} needs nonempty parameter grids")


def _grid(**axes):
    """Cartesian product of keyword ranges as a tuple of param dicts."""
    names = list(axes)
    out = []
    for combo in itertools.product(*(axes[n] for n in names)):
        out.append(dict(zip(names, combo)))
    return tuple(out)


_MSF_SHAPES = ((2, 2, 1, 1), (2, 2, 2, 1), (2, 2, 1, 2), (4, 2, 1, 1),
               (2, 4, 1, 2))

_TILDEN_FULL_FIXED = (
    {"l": 2, "n": 1}, {"l": 2, "n": 2}, {"l": 2, "n": 3}, {"l": 2, "n": 4},
    {"l": 4, "n": 1}, {"l": 4, "n": 2},
)


def _tilden_grid(case, smoke_extra=None, full_extra=None):
    smoke = ({"case": case, "l": 2, "n": 2, **(smoke_extra or {})},)
    full = tuple({"case": case, **inst, **(full_extra or {}).get(
        (inst["l"], inst["n"]), (full_extra or {}).get(inst["l"], {}))}
        for inst in _TILDEN_FULL_FIXED)
    return smoke, full


def _tilden_free_r(case, r2, r4):
    """Grids for the cases with a free shift parameter r."""
    smoke = ({"case": case, "l": 2, "n": 2, "r": r2[0]},)
    full = []
    for inst in _TILDEN_FULL_FIXED:
        rs = r2 if inst["l"] == 2 else r4
        for r in (rs if inst["n"] <= 3 else rs[:1]):
            full.append({"case": case, **inst, "r": r})
    return smoke, tuple(full)


_SPECS = []


def _register(**kw):
    _SPECS.append(IdentitySpec(**kw))


# ----------------------------------------------------------- structural layer

_register(
    id="laplace-expansion",
    title="subset expansion of the hyperdeterminant along leading axes",
    status="theorem", strategy="random-rational-points(entries, count)",
    domain="tensor order m in {2,4}, dimension n <= 3",
    check=checks_structural.check_laplace,
    smoke=({"count": 3, "orders": (2, 4), "dim": 3},),
    full=({"count": 50, "orders": (2, 4), "dim": 3},),
    tags=("structural",))

_register(
    id="hyper-minor",
    title="minors of a tensor assembled from positional index lists",
    status="theorem", strategy="random-rational-points(entries, count)",
    domain="tensor order m in {2,4}, dimension <= 4",
    check=checks_structural.check_hyper_minor,
    smoke=({"count": 3, "orders": (2, 4)},),
    full=({"count": 50, "orders": (2, 4)},),
    tags=("structural",))

_register(
    id="subpf-indicator",
    title="sub-Pfaffians of aligned-pair arrays reduce to 0/1 indicators",
    status="theorem", strategy="random-rational-points(entries, count)",
    domain="pair counts <= 3, exhaustive subsets",
    check=checks_structural.check_subpf_indicator,
    smoke=({"count": 3, "pairs": 2},),
    full=({"count": 50, "pairs": 3},),
    tags=("structural",))

_register(
    id="msf-general",
    title="minor summation: subset sum of weighted minors equals a "
          "kernel hyperpfaffian",
    status="theorem", strategy="random-rational-points(entries, count)",
    domain="block shapes (l,m,r,n) with l,m in {2,4}, sizes <= 6",
    check=checks_structural.check_msf_general,
    smoke=({"count": 2, "shapes": _MSF_SHAPES[:2], "max_n": 5},),
    full=({"count": 50, "shapes": _MSF_SHAPES, "max_n": 6},),
    tags=("structural",))

_register(
    id="msf-det",
    title="matrix case of the minor summation: kernel entries are "
          "weighted 2x2 minors",
    status="theorem", strategy="random-rational-points(entries, count)",
    domain="rectangular matrices with <= 6 columns",
    check=checks_structural.check_msf_det,
    smoke=({"count": 3},),
    full=({"count": 50},),
    tags=("structural",))

_register(
    id="pf-hf",
    title="diagonal weight arrays split by slot parity into signed and "
          "unsigned subset sums",
    status="theorem", strategy="random-rational-points(entries, count)",
    domain="slot counts 1..3, sizes <= 6",
    check=checks_structural.check_pf_hf,
    smoke=({"count": 3, "slot_counts": (1, 2)},),
    full=({"count": 50, "slot_counts": (1, 2, 3)},),
    tags=("structural",))

_register(
    id="matsumoto",
    title="flattening a block array into long blocks preserves the "
          "hyperpfaffian",
    status="theorem", strategy="random-rational-points(entries, count)",
    domain="shapes (l,m,size) in {(2,2,4),(2,2,2),(2,3,4)}",
    check=checks_structural.check_matsumoto,
    smoke=({"count": 2},),
    full=({"count": 50},),
    tags=("structural",))

_register(
    id="engine-exterior",
    title="enumeration engine against the exterior-algebra evaluation "
          "of the hyperdeterminant",
    status="theorem", strategy="random-rational-points(entries, count)",
    domain="tensor order m in {2,4}, dimension <= 4",
    check=checks_structural.check_engine_exterior,
    smoke=({"count": 5, "orders": (2, 4)},),
    full=({"count": 50, "orders": (2, 4)},),
    tags=("structural",))

_register(
    id="pf-definition",
    title="fast Pfaffian against the literal signed block-permutation sum",
    status="theorem", strategy="random-rational-points(entries, count)",
    domain="sizes <= 8",
    check=checks_structural.check_pf_definition,
    smoke=({"count": 3, "max_pairs": 2},),
    full=({"count": 50, "max_pairs": 3},),
    tags=("structural",))

# --------------------------------------------------------------- bridge layer

_register(
    id="debruijn-discrete",
    title="ordered integral of determinant products equals the kernel "
          "hyperpfaffian over a finite measure",
    status="theorem", strategy="discrete-measure",
    domain="families r in {1,2}, columns l in {2,4}, n <= 4",
    check=checks_bridges.check_debruijn_discrete,
    smoke=({"classical": True, "n": 2},),
    full=({"classical": True, "n": 2}, {"classical": True, "n": 3},
          {"r": 1, "l": 2, "n": 2, "count": 3},
          {"r": 1, "l": 2, "n": 3, "count": 2},
          {"r": 1, "l": 4, "n": 2, "count": 2},
          {"r": 2, "l": 2, "n": 2, "count": 2},
          {"r": 2, "l": 2, "n": 4, "count": 1}),
    tags=("bridge",))

_register(
    id="debruijn-even-r",
    title="even family counts: the signed kernel sum matches the ordered "
          "integral where the printed unsigned form does not",
    status="reported-discrepancy", strategy="discrete-measure",
    domain="two families, two columns, n = 2",
    check=checks_bridges.check_debruijn_even_r,
    smoke=({},),
    full=({},),
    tags=("bridge", "conjecture"))

_register(
    id="q-hankel",
    title="q-difference-weighted moment hyperpfaffian equals the scaled "
          "cube integral of the cancelled pair product",
    status="theorem", strategy="discrete-measure",
    domain="l in {2,4}, n <= 3, u in 0..2",
    check=checks_bridges.check_q_hankel,
    smoke=({"l": 2, "n": 2, "u": 0},),
    full=_grid(l=(2, 4), n=(1, 2, 3), u=(0, 1, 2)),
    tags=("bridge",))

_register(
    id="hankel-classical",
    title="index-gap-weighted moment hyperpfaffian equals the cube "
          "integral of an even Vandermonde power",
    status="theorem", strategy="discrete-measure",
    domain="l in {2,4}, n <= 3, u in 0..2",
    check=checks_bridges.check_hankel_classical,
    smoke=({"l": 2, "n": 2, "u": 0, "atoms": ((2, 1), (3, 1))},),
    full=_grid(l=(2, 4), n=(1, 2, 3), u=(0, 1, 2))
    + ({"l": 2, "n": 2, "u": 0, "atoms": ((2, 1), (3, 1))},),
    tags=("bridge",))

_register(
    id="delta-relations",
    title="rewrites among the four pair-interaction products",
    status="theorem", strategy="random-rational-points(points, count)",
    domain="n <= 3, k <= 2",
    check=checks_bridges.check_delta_relations,
    smoke=({"sizes": (2,), "ks": (1,)},),
    full=({"sizes": (2, 3), "ks": (1, 2)},),
    tags=("bridge",))

_register(
    id="delta-integral",
    title="cube integrals of the squared and doubled pair products agree",
    status="theorem", strategy="discrete-measure",
    domain="n <= 3, k <= 2",
    check=checks_bridges.check_delta_integral,
    smoke=({"n": 2, "k": 1, "atoms": 3},),
    full=({"n": 2, "k": 1, "atoms": 4}, {"n": 2, "k": 2, "atoms": 4},
          {"n": 3, "k": 1, "atoms": 4}),
    tags=("bridge",))

_register(
    id="pf-delta2",
    title="q-difference-weighted moment Pfaffian equals the normalized "
          "cube integral of the doubled pair product",
    status="theorem", strategy="discrete-measure",
    domain="n <= 3, r in 0..2",
    check=checks_bridges.check_pf_delta2,
    smoke=({"n": 2, "r": 0},),
    full=_grid(n=(1, 2, 3), r=(0, 1, 2)),
    tags=("bridge",))

# ------------------------------------------------------------- integral layer

_register(
    id="selberg",
    title="closed beta-type n-fold integral against brute-force "
          "polynomial integration",
    status="theorem", strategy="exact-rational",
    domain="integer (alpha,beta,gamma) in [1,2]^3, n <= 3",
    check=checks_integrals.check_selberg,
    smoke=({"n": 2, "alpha": 1, "beta": 1, "gamma": 1},),
    full=_grid(n=(1, 2, 3), alpha=(1, 2), beta=(1, 2), gamma=(1, 2)),
    tags=("integral",))

_register(
    id="aomoto",
    title="closed form of the k-marked beta-type integral against "
          "brute force",
    status="theorem", strategy="exact-rational",
    domain="integer (alpha,beta,gamma) in [1,2]^3, k <= n <= 3",
    check=checks_integrals.check_aomoto,
    smoke=({"n": 2, "k": 1, "alpha": 1, "beta": 1, "gamma": 1},),
    full=tuple(p for p in _grid(n=(1, 2, 3), k=(1, 2, 3), alpha=(1, 2),
                                beta=(1, 2), gamma=(1, 2))
               if p["k"] <= p["n"]),
    tags=("integral",))

_register(
    id="selberg-phi",
    title="binomial-product form of the half-integer beta-type integral",
    status="theorem", strategy="exact-rational",
    domain="r,s <= 2, m <= 2, n <= 2",
    check=checks_integrals.check_selberg_phi,
    smoke=({"n": 1, "r": 0, "s": 0, "m": 1},),
    full=_grid(n=(1, 2), r=(0, 1, 2), s=(0, 1, 2), m=(1, 2)),
    tags=("integral",))

_register(
    id="ahk",
    title="q-analogue of the integer-parameter beta-type integral with "
          "doubled interaction",
    status="theorem", strategy="random-rational-points(q, trials)",
    domain="x,y in 1..3, k <= 2, n <= 3",
    check=checks_integrals.check_ahk,
    smoke=({"n": 2, "k": 1, "x": 1, "y": 1},),
    full=_grid(n=(1, 2, 3), k=(1, 2), x=(1, 2, 3), y=(1, 2, 3)),
    tags=("integral",))

_register(
    id="little-qjacobi-pf",
    title="shifted Pfaffian of q-difference-weighted little q-Jacobi "
          "moments in closed form",
    status="theorem", strategy="random-rational-points(a,b,q, trials)",
    domain="n <= 3, r in 0..3",
    check=checks_integrals.check_little_qjacobi,
    smoke=({"n": 1, "r": 0},),
    full=_grid(n=(1, 2, 3), r=(0, 1, 2, 3)),
    tags=("integral",))

# ------------------------------------------------------------ q-polynomial layer

for _variant, _vtitle in (
        ("u-rm1", "first-kind entries at shift -1"),
        ("u-r0", "first-kind entries at shift 0"),
        ("v-rm1", "second-kind entries at shift -1"),
        ("v-r0", "second-kind entries at shift 0")):
    _register(
        id=f"asc-{_variant}",
        title=f"Pfaffian of q-difference-weighted Rogers-Szego type "
              f"polynomials, {_vtitle}",
        status="theorem", strategy="exact-symbolic-in-a",
        domain="n <= 3, q sampled rational",
        check=checks_qpoly.check_asc,
        smoke=({"variant": _variant, "n": 1},),
        full=tuple({"variant": _variant, "n": n} for n in (1, 2, 3)),
        tags=("q",))

_register(
    id="ftilde-rec",
    title="closed form of the moment polynomials against their "
          "three-term recurrence",
    status="theorem", strategy="random-rational-points(t, trials)",
    domain="degrees 0..8",
    check=checks_qpoly.check_ftilde_rec,
    smoke=({"max_i": 4},),
    full=({"max_i": 8},),
    tags=("q",))

_register(
    id="rs-moment-u",
    title="discrete weight moments on [a,1] against the Rogers-Szego "
          "polynomial, floating point",
    status="theorem", strategy="numeric(1e-6)",
    domain="a=-1/2, q=1/2, moments m <= 4",
    check=checks_qpoly.check_rs_moment_u,
    smoke=({"max_m": 2},),
    full=({"max_m": 4},),
    tags=("q", "numeric"))

_register(
    id="bf-u-integral",
    title="n-fold interaction integral of the [a,1] weight in closed "
          "form, floating point",
    status="theorem", strategy="numeric(1e-6)",
    domain="a=-1/2, q=1/2, n <= 2, k <= 2",
    check=checks_qpoly.check_bf_u_integral,
    smoke=({"n": 2, "k": 1},),
    full=_grid(n=(1, 2), k=(1, 2)),
    tags=("q", "numeric"))

for _gx in range(1, 6):
    _register(
        id=f"gx-{_gx}",
        title=f"conjectured Pfaffian evaluation for ternary-tree "
              f"sequence {_gx}",
        status="conjecture", strategy="exact-rational",
        domain="n <= 5",
        check=checks_qpoly.check_gx,
        smoke=({"index": _gx, "max_n": 2},),
        full=({"index": _gx, "max_n": 5},),
        tags=("q", "conjecture"))

_register(
    id="gx-defs",
    title="ternary-tree sequences against their hypergeometric "
          "quotient series",
    status="theorem", strategy="exact-rational",
    domain="series order 8",
    check=checks_qpoly.check_gx_defs,
    smoke=({"order": 6},),
    full=({"order": 8},),
    tags=("q",))

# ------------------------------------------------------- block-moment theorem

_TILDEN_META = {
    "a1": ("first family at weight one, free shift",
           "exact-rational"),
    "a2": ("first family with symbolic weight at the pinned shift",
           "exact-symbolic-in-a"),
    "a3": ("first family at a squared weight, one shift higher",
           "substitution a=s^2"),
    "b1": ("second family at weight one, free shift",
           "exact-rational"),
    "b2": ("second family with symbolic weight at the pinned shift",
           "exact-symbolic-in-a"),
    "b3": ("second family at a squared weight, one shift higher",
           "substitution a=s^2"),
    "d1": ("third family at weight one, free shift",
           "exact-rational"),
    "d2": ("third family at a cube root of unity, one shift higher",
           "quad-ext(omega)"),
}

for _case, (_subtitle, _strategy) in _TILDEN_META.items():
    if _case in ("a1", "d1"):
        _smoke, _full = _tilden_free_r(_case, (1, 3), (-2, -4))
    elif _case == "b1":
        _smoke, _full = _tilden_free_r(_case, (0, 3), (-2, -5))
    else:
        _smoke, _full = _tilden_grid(_case)
    _tags = ("narayana",)
    if _case == "d2":
        _tags = ("narayana", "tilden-d-omega")
    _register(
        id=f"tilden-{_case}",
        title=f"block-moment hyperpfaffian in closed form: {_subtitle}",
        status="theorem", strategy=_strategy,
        domain="l in {2,4}, n <= 4 (l=2) or n <= 2 (l=4)",
        check=checks_narayana.check_tilden,
        smoke=_smoke, full=_full, tags=_tags)

# ------------------------------------------------------- classical corollaries

for _seq, _fn in (("motzkin", checks_narayana.check_motzkin_pf),
                  ("delannoy", checks_narayana.check_delannoy_pf),
                  ("schroeder", checks_narayana.check_schroeder_pf)):
    _register(
        id=f"{_seq}-pf",
        title=f"Hankel-type Pfaffian of gap-weighted {_seq} numbers in "
              f"product form",
        status="corollary", strategy="exact-rational",
        domain="n <= 5",
        check=_fn,
        smoke=({"n": 2},),
        full=tuple({"n": n} for n in (1, 2, 3, 4, 5)),
        tags=("narayana",))

for _seq, _fn, _strategy in (
        ("motzkin", checks_narayana.check_motzkin_shift, "exact-rational"),
        ("delannoy", checks_narayana.check_delannoy_shift,
         "quad-ext(sqrt2)"),
        ("schroeder", checks_narayana.check_schroeder_shift,
         "quad-ext(sqrt2)")):
    _register(
        id=f"{_seq}-shift",
        title=f"shifted {_seq} Pfaffian against the absolute-value "
              f"display, sign recorded",
        status="corollary", strategy=_strategy,
        domain="n <= 4",
        check=_fn,
        smoke=({"n": 2},),
        full=tuple({"n": n} for n in (1, 2, 3, 4)),
        tags=("narayana",))

_register(
    id="catalan-r",
    title="r-shifted Catalan Pfaffian display (size read as 2n)",
    status="reported-discrepancy", strategy="exact-rational",
    domain="n <= 3, r in 0..3",
    check=checks_narayana.check_catalan_r,
    smoke=({"n": 2, "r": 1},),
    full=_grid(n=(1, 2, 3), r=(0, 1, 2, 3)),
    tags=("narayana", "conjecture"))

_register(
    id="cbc-r",
    title="r-shifted central-binomial Pfaffian display against the "
          "theorem-derived value",
    status="reported-discrepancy", strategy="exact-rational",
    domain="n <= 3, r in 0..3",
    check=checks_narayana.check_cbc_r,
    smoke=({"n": 1, "r": 1},),
    full=_grid(n=(1, 2, 3), r=(0, 1, 2, 3)),
    tags=("narayana", "conjecture"))

_register(
    id="typeD-r",
    title="r-shifted third-family Pfaffian display against the signed "
          "theorem-derived value",
    status="reported-discrepancy", strategy="exact-rational",
    domain="n <= 3, r in 0..3",
    check=checks_narayana.check_typed_r,
    smoke=({"n": 1, "r": 2},),
    full=_grid(n=(1, 2, 3), r=(0, 1, 2, 3)),
    tags=("narayana", "conjecture"))

for _x in ("a", "b", "d"):
    _register(
        id=f"gf-narayana-{_x}",
        title=f"algebraic generating function of the type-{_x.upper()} "
              f"polynomials against direct values",
        status="corollary", strategy="exact-rational",
        domain="series order 12",
        check=checks_narayana.check_gf_narayana,
        smoke=({"type": _x.upper(), "order": 8, "a": 1},),
        full=({"type": _x.upper(), "order": 12, "a": 1},
              {"type": _x.upper(), "order": 12, "a": "random"}),
        tags=("gf",))

_SPECIAL_META = (
    ("cat", "first family at weight one gives the ballot numbers",
     "exact-rational"),
    ("sch", "first family at weight two gives the bracketing numbers",
     "exact-rational"),
    ("cbc", "second family at weight one gives the central binomials",
     "exact-rational"),
    ("del", "second family at weight two gives the king-walk numbers",
     "exact-rational"),
    ("dcount", "third family at weight one in closed product form",
     "exact-rational"),
    ("motzkin", "cube-root route to the unit-step path numbers",
     "quad-ext(omega)"),
    ("ctc", "cube-root route to the central trinomials",
     "quad-ext(omega)"),
    ("motd", "cube-root route to the third-family path numbers",
     "quad-ext(omega)"),
)

for _which, _subtitle, _strategy in _SPECIAL_META:
    _register(
        id=f"special-{_which}",
        title=f"sequence specialization: {_subtitle}",
        status="corollary", strategy=_strategy,
        domain="n <= 10",
        check=checks_narayana.check_special,
        smoke=({"which": _which, "max_n": 5},),
        full=({"which": _which, "max_n": 10},),
        tags=("gf",))


REGISTRY = tuple(_SPECS)
_BY_ID = {spec.id: spec for spec in REGISTRY}
if len(_BY_ID) != len(REGISTRY):
    raise RuntimeError("duplicate identity ids in registry")


def all_identities():
    return REGISTRY


def get_identity(identity: str) -> IdentitySpec:
    try:
        return _BY_ID[identity]
    except KeyError:
        raise UnknownIdentity(f"no registered identity {identity!r}") \
            from None


def filter_identities(tag=None):
    """Specs whose id, status, or tag set matches the filter."""
    if tag is None:
        return REGISTRY
    hits = tuple(spec for spec in REGISTRY
                 if spec.id == tag or spec.status == tag or tag in spec.tags)
    if not hits:
        raise UnknownTag(f"filter {tag!r} matches no identity, status, "
                         "or tag")
    return hits
