"""Claim registry and table cross-checks.

Four independent verification surfaces:

* ``run_registry`` evaluates a data-driven list of exact inequality
  claims (the replacement chains and sandwich bounds the table
  derivations rest on) with integer arithmetic only;
* ``verify_primitive_maxima`` recomputes every stored small-degree
  bound as the maximum over the component and quasicomponent routes,
  with the single degree-9 characteristic-5 exception where a central
  product of two degree-3 groups wins;
* ``golden_tables`` compares search output against the printed bound
  tables, with an explicit ledger of rows whose printed values conflict
  with exact evaluation (those report ``discrepancy``, never ``pass``);
* ``weisfeiler`` tabulates f(n, ell) against the smooth comparison
  bound n^4 (n+2)! (degree < 64) / (n+2)! (degree >= 64).

Statuses: ``pass`` and ``fail`` mean what they say; ``discrepancy``
marks an acknowledged printed-value conflict and never breaks a build.
Claims are data, so extending the registry is an edit to a list, not
code.  Expected golden values are frozen literals, deliberately not
read back from the catalog, so a corrupted catalog shows up as ``fail``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .catalog import Catalog, default_catalog, primitive_cap, require_characteristic
from .errors import DomainError
from .exactnum import alpha_exponent, factorial, sci_string
from .pair_search import BoundResult, best_pair, bound_value

# ---------------------------------------------------------------------------
# expression mini-language for registry claims

_REL = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
    "==": lambda a, b: a == b,
}


def _eval(expr, ell: int | None, catalog: Catalog) -> int:
    """Evaluate a claim expression to an exact integer.

    Grammar: int | ('fact', k) | ('pow', e, k) | ('mul', e...) |
    ('cap', r) | ('prodrange', a, b).  ('cap', r) needs a characteristic.
    """
    if isinstance(expr, int):
        return expr
    op = expr[0]
    if op == "fact":
        return factorial(expr[1])
    if op == "pow":
        return _eval(expr[1], ell, catalog) ** expr[2]
    if op == "mul":
        out = 1
        for term in expr[1:]:
            out *= _eval(term, ell, catalog)
        return out
    if op == "cap":
        if ell is None:
            raise DomainError("cap expression used in a characteristic-free claim")
        return primitive_cap(expr[1], ell, catalog)
    if op == "prodrange":
        out = 1
        for k in range(expr[1], expr[2] + 1):
            out *= k
        return out
    raise DomainError(f"unknown expression {expr!r}")


def _render(expr) -> str:
    if isinstance(expr, int):
        return str(expr)
    op = expr[0]
    if op == "fact":
        return f"{expr[1]}!"
    if op == "pow":
        return f"{_render(expr[1])}^{expr[2]}"
    if op == "mul":
        return "*".join(_render(t) for t in expr[1:])
    if op == "cap":
        return f"N({expr[1]})"
    if op == "prodrange":
        return f"{expr[1]}*...*{expr[2]}"
    raise DomainError(f"unknown expression {expr!r}")


@dataclass(frozen=True)
class InequalityClaim:
    """A chain of exact relations, e.g. parts = (a, '<', b, '<', c).

    ``chars`` lists the characteristics the claim is evaluated at; the
    empty tuple means the claim is characteristic-free.  ``anchor`` is
    the claim restated as a formula, carried into reports.
    """

    id: str
    parts: tuple
    chars: tuple[int, ...] = ()
    note: str = ""

    @property
    def anchor(self) -> str:
        return " ".join(
            _render(p) if not isinstance(p, str) else p for p in self.parts
        )

    def holds_at(self, ell: int | None, catalog: Catalog) -> bool:
        values = [
            _eval(part, ell, catalog)
            for part in self.parts
            if not isinstance(part, str)
        ]
        relations = [part for part in self.parts if isinstance(part, str)]
        return all(
            _REL[rel](values[i], values[i + 1]) for i, rel in enumerate(relations)
        )

    def endpoint_sci(self, catalog: Catalog) -> tuple[str, str]:
        ell = self.chars[0] if self.chars else None
        exprs = [part for part in self.parts if not isinstance(part, str)]
        return (
            str(sci_string(_eval(exprs[0], ell, catalog))),
            str(sci_string(_eval(exprs[-1], ell, catalog))),
        )


@dataclass(frozen=True)
class ReportItem:
    id: str
    status: str  # "pass" | "fail" | "discrepancy"
    lhs_sci: str = ""
    rhs_sci: str = ""
    note: str = ""


@dataclass(frozen=True)
class Report:
    title: str
    items: tuple[ReportItem, ...]

    def passed(self) -> bool:
        return all(item.status != "fail" for item in self.items)

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "discrepancy": 0}
        for item in self.items:
            out[item.status] += 1
        return out

    def failures(self) -> list[ReportItem]:
        return [item for item in self.items if item.status == "fail"]

    def by_id(self, item_id: str) -> ReportItem:
        for item in self.items:
            if item.id == item_id:
                return item
        raise KeyError(item_id)

    def to_json(self) -> str:
        return json.dumps(
            {
                "title": self.title,
                "counts": self.counts(),
                "items": [
                    {
                        "id": i.id,
                        "status": i.status,
                        "lhs_sci": i.lhs_sci,
                        "rhs_sci": i.rhs_sci,
                        "note": i.note,
                    }
                    for i in self.items
                ],
            },
            indent=2,
        )

    def to_text(self) -> str:
        lines = [f"{self.title}: {self.counts()}"]
        for item in self.items:
            note = f"  # {item.note}" if item.note else ""
            sides = f"  {item.lhs_sci} | {item.rhs_sci}" if item.lhs_sci else ""
            lines.append(f"  [{item.status:11s}] {item.id}{sides}{note}")
        return "\n".join(lines)


def merge_reports(title: str, reports: list[Report]) -> Report:
    items: list[ReportItem] = []
    for report in reports:
        items.extend(report.items)
    return Report(title, tuple(items))


# ---------------------------------------------------------------------------
# the claim registry

_REPS = (2, 3, 5, 7, 11, 13, 73)  # representative characteristics for "all ell" claims
_AMBIGUOUS_NOTE = (
    "printed left factor '(4)!' is ambiguous between 4! and 14!; "
    "both readings are evaluated and neither is asserted as ground truth"
)


def _cap(r):
    return ("cap", r)


def _capwr(r, t):
    # cap(r)^t * t!, the value of a t-fold wreath block
    return ("mul", ("pow", _cap(r), t), ("fact", t))


def registry_claims() -> tuple[InequalityClaim, ...]:
    c = InequalityClaim
    claims = [
        # squaring / merging at the tensor layer
        c("tensor.square-generic-base", (("mul", 2, ("fact", 5)), "<", ("fact", 10))),
        c(
            "tensor.square-exception-3-5",
            (("mul", 2, ("pow", _cap(3), 2)), ">", ("fact", 10)),
            (5,),
            "the one failing base case of the squaring step",
        ),
        c("tensor.merge-two-2s", (("mul", 2, ("pow", _cap(2), 2)), "<", _cap(4)), _REPS),
        c("tensor.merge-three-2s", (("mul", 6, ("pow", _cap(2), 3)), "<", _cap(8)), _REPS),
        c(
            "tensor.merge-two-3s-char5",
            (("mul", 2, ("pow", _cap(3), 2)), "==", _cap(9)),
            (5,),
            "equality: the central-product tie in degree 9",
        ),
        c("tensor.alt7-square", (("pow", 2520, 2), "==", 6350400)),
        c(
            "tensor.alt7-pair-beats-symplectic",
            (("mul", 2, ("pow", 2520, 2)), ">", 4199040),
            (5,),
        ),
        c("tensor.pair-2-3", (("mul", _cap(2), _cap(3)), "<", _cap(6)), _REPS),
        c("tensor.pair-2-4", (("mul", _cap(2), _cap(4)), "<", _cap(8)), _REPS),
        c("tensor.pair-2-5", (("mul", _cap(2), _cap(5)), "<", _cap(10)), _REPS),
        c("tensor.pair-2-6", (("mul", _cap(2), _cap(6)), "<", _cap(12)), _REPS),
        c("tensor.pair-3-4", (("mul", _cap(3), _cap(4)), "<", _cap(12)), _REPS),
        c(
            "tensor.pair-large-power",
            (("pow", 16, 12), "==", ("pow", 2, 48), ">", ("mul", ("pow", 2, 8), ("pow", 10, 12))),
        ),
        c(
            "tensor.pair-large-cap",
            (("mul", ("pow", 2, 8), ("pow", 10, 12)), ">", _cap(12)),
            (3,),
            "largest small-degree cap stays under 2^8*10^12",
        ),
        c(
            "tensor.pair-13-14",
            (("mul", ("fact", 15), ("fact", 16)), "<", ("fact", 183)),
        ),
        c(
            "tensor.induction-step-sample",
            (
                _capwr(2, 5),
                "<",
                ("pow", _capwr(2, 4), 2),
                "<",
                ("pow", ("fact", 17), 2),
                "<",
                ("fact", 33),
            ),
            (7,),
        ),
        # symmetric-constituent replacements
        c(
            "sym.wreath-merge-base",
            (("mul", ("pow", ("fact", 10), 2), 2), "<", ("fact", 17)),
        ),
        c("sym.sum-merge-base", (("mul", ("fact", 10), ("fact", 10)), "<", ("fact", 17))),
        c(
            "sym.small-loses-to-wreath",
            (("fact", 54), "<", _capwr(2, 26)),
            (3, 7, 11, 13),
            "a 52-dimensional symmetric block is beaten by degree-2 wreaths",
        ),
        c(
            "sym.wins-at-53-char11",
            (("fact", 55), ">", _capwr(2, 26)),
            (11,),
            "the transition is sharp at characteristic 11",
        ),
        c("sym.trivial-merge", (("fact", 2), "<", _cap(2)), (3,)),
        c(
            "sym.trivial-pair-absorbed",
            (("mul", ("fact", 12), 2), "<", ("fact", 14)),
        ),
        # characteristic 2 replacement chain
        c("char2.drop-13", (_cap(13), "<", _cap(12)), (2,)),
        c("char2.split-12", (_cap(12), "<", _capwr(6, 2)), (2,)),
        c("char2.drop-11", (_cap(11), "<=", _cap(10)), (2,)),
        c("char2.split-10", (_cap(10), "<", ("mul", _cap(6), _cap(4))), (2,)),
        c("char2.split-9", (_cap(9), "<", ("mul", _cap(6), _cap(3))), (2,)),
        c("char2.symcap-deg3", (_capwr(3, 6), "<", ("fact", 20)), (2,)),
        c("char2.symcap-deg4", (_capwr(4, 4), "<", ("fact", 18)), (2,)),
        c("char2.symcap-deg5", (_capwr(5, 2), "<", ("fact", 12)), (2,)),
        c("char2.symcap-deg6", (_capwr(6, 6), "<", ("fact", 38)), (2,)),
        c("char2.p3-mult-2", (_capwr(3, 2), "<", _cap(6)), (2,)),
        c("char2.p3-mult-3", (_capwr(3, 3), "<", ("mul", _cap(6), _cap(3))), (2,)),
        c("char2.p3-mult-4", (_capwr(3, 4), "<", _capwr(6, 2)), (2,)),
        c(
            "char2.p3-mult-5",
            (_capwr(3, 5), "<", ("mul", _capwr(6, 2), _cap(3))),
            (2,),
        ),
        c(
            "char2.p4-mult-2",
            (_capwr(4, 2), "<", ("mul", _cap(6), 2)),
            (2,),
            "a degree-6 block plus a doubled trivial block wins",
        ),
        c("char2.p4-mult-3", (_capwr(4, 3), "<", _capwr(6, 2)), (2,)),
        c(
            "char2.merge-3-4-5",
            (("mul", _cap(3), _cap(4), _cap(5)), "<", _capwr(6, 2)),
            (2,),
        ),
        c("char2.merge-3-4", (("mul", _cap(3), _cap(4)), "<", _cap(6)), (2,)),
        c("char2.merge-3-5", (("mul", _cap(3), _cap(5)), "<", ("mul", _cap(6), 2)), (2,)),
        c(
            "char2.merge-4-5",
            (("mul", _cap(4), _cap(5)), "<", ("mul", _cap(6), _cap(3))),
            (2,),
        ),
        c("char2.absorb-3", (_cap(3), "<", _cap(4)), (2,)),
        c("char2.absorb-4", (_cap(4), "<", _cap(5)), (2,)),
        c("char2.absorb-5", (_cap(5), "<", _cap(6)), (2,)),
        c(
            "char2.sym-absorbs-6",
            (("mul", ("fact", 16), _cap(6)), "<", ("fact", 22)),
            (2,),
        ),
        c(
            "char2.wreath-beats-34",
            (("mul", _capwr(6, 5), _cap(3)), ">", ("fact", 34)),
            (2,),
            "the 33-dimensional wreath sum exceeds 34!",
        ),
        # characteristic 3 replacement chain
        c("char3.drop-12", (_cap(12), "<", _capwr(4, 3)), (3,)),
        c("char3.drop-11", (_cap(11), "<=", _cap(10)), (3,)),
        c(
            "char3.split-10",
            (_cap(10), "<", ("mul", _capwr(4, 2), _cap(2))),
            (3,),
        ),
        c("char3.split-8", (_cap(8), "<", _capwr(4, 2)), (3,)),
        c("char3.split-7", (_cap(7), "<", ("mul", _cap(4), _cap(3))), (3,)),
        c("char3.split-6", (_cap(6), "<", ("mul", _cap(4), _cap(2))), (3,)),
        c("char3.drop-5", (_cap(5), "<", _cap(4)), (3,)),
        c(
            "char3.wreath-beats-69",
            (_capwr(2, 34), ">", ("fact", 69)),
            (3,),
            "the 68-dimensional degree-2 wreath exceeds 69!",
        ),
        c("char3.sym-replaces-wreath-35", (_capwr(2, 35), "<", ("fact", 72)), (3,)),
        c("char3.p4-repl-cap", (_capwr(2, 16), ">", _capwr(4, 8)), (3,)),
        c(
            "char3.mult4-reading-a",
            (("mul", ("pow", _cap(2), 14), ("fact", 4)), "<", _capwr(4, 7)),
            (3,),
            _AMBIGUOUS_NOTE,
        ),
        c(
            "char3.mult4-reading-b",
            (("mul", ("pow", _cap(2), 14), ("fact", 14)), "<", _capwr(4, 7)),
            (3,),
            _AMBIGUOUS_NOTE,
        ),
        c("char3.p3-wreath-to-p2", (_capwr(3, 2), "<", _capwr(2, 3)), (3,)),
        c(
            "char3.p2p3-shift",
            (("mul", _capwr(2, 2), _cap(3)), "<", _capwr(2, 3)),
            (3,),
        ),
        c("char3.p2p3-merge", (("mul", _cap(2), _cap(3)), "<", _cap(4)), (3,)),
        # characteristic 5 replacement chain
        c("char5.split-12", (_cap(12), "<", _capwr(6, 2)), (5,)),
        c(
            "char5.drop-11",
            (_cap(11), "<", ("mul", _cap(6), _cap(4))),
            (5,),
            "composed through the degree-10 step; the single step alone loses 12! to 11!",
        ),
        c("char5.split-10", (_cap(10), "<", ("mul", _cap(6), _cap(4))), (5,)),
        c("char5.split-8", (_cap(8), "<", _capwr(4, 2)), (5,)),
        c("char5.split-6", (_cap(6), "<", _capwr(3, 2)), (5,)),
        c(
            "char5.sandwich-19",
            (("fact", 59), "<", _capwr(3, 19), "<", ("fact", 60)),
            (5,),
            "transition where a symmetric block stops losing to degree-3 wreaths",
        ),
        c(
            "char5.sandwich-23",
            (("fact", 70), "<", _capwr(3, 23), "<", ("fact", 71)),
            (5,),
            "reverse transition at the stabilization window",
        ),
        c("char5.p2-wreath-to-p3", (_capwr(2, 2), "<", _cap(3)), (5,)),
        c("char5.p2-wreath-large", (_capwr(2, 13), "<", ("fact", 27)), (5,)),
        c("char5.p2-p1-merge", (_cap(2), "<", _cap(3)), (5,)),
        c("char5.p4-wreath-cap", (_capwr(4, 6), "<", _capwr(3, 8)), (5,)),
        c("char5.p4-five-trivial", (_capwr(4, 5), "<", _capwr(3, 7)), (5,)),
        c("char5.cube-exchange", (("pow", 60, 3), ">", ("mul", 5, 25920))),
        c(
            "char5.tail-exchange",
            (("prodrange", 61, 68), ">", ("mul", ("pow", 2520, 3), 23, 22, 21)),
            (),
            "removes three degree-3 blocks against a symmetric block at once",
        ),
    ]
    return tuple(claims)


def run_registry(catalog: Catalog | None = None) -> Report:
    """Evaluate every registered claim exactly; failures are report rows."""
    cat = catalog if catalog is not None else default_catalog()
    items = []
    seen: set[str] = set()
    for claim in registry_claims():
        if claim.id in seen:
            raise DomainError(f"duplicate claim id {claim.id}")
        seen.add(claim.id)
        if claim.chars:
            ok = all(claim.holds_at(ell, cat) for ell in claim.chars)
        else:
            ok = claim.holds_at(None, cat)
        lhs, rhs = claim.endpoint_sci(cat)
        note = claim.anchor + (f" [{claim.note}]" if claim.note else "")
        items.append(ReportItem(claim.id, "pass" if ok else "fail", lhs, rhs, note))
    return Report("registry", tuple(items))


# ---------------------------------------------------------------------------
# stored table vs component/quasicomponent maxima

_PROBE_PRIMES = (2, 3, 5, 7, 11, 13, 73)


def verify_primitive_maxima(catalog: Catalog | None = None) -> Report:
    """Each stored small-degree bound equals the best component/quasicomponent.

    The one permitted exception is degree 9 at characteristic 5, where
    the stored bound is twice the square of the degree-3 cap (a central
    product of two degree-3 groups interchanged by an involution).
    """
    cat = catalog if catalog is not None else default_catalog()
    items = []
    for row in cat.constituent_rows:
        if row.force:
            continue
        if row.cond.kind == "in":
            probes = sorted(row.cond.primes)
        else:
            probes = [p for p in _PROBE_PRIMES if row.cond.matches(p)]
        bad: list[int] = []
        notes: list[str] = []
        for ell in probes:
            if (row.degree, ell) == (9, 5):
                computed = 2 * primitive_cap(3, 5, cat) ** 2
                notes.append("degree-9/char-5 exception: 2*N(3)^2")
            else:
                candidates = [
                    comp.bound_at(ell) for comp in cat.components_at(row.degree, ell)
                ] + [q.bound for q in cat.quasicomponents_at(row.degree, ell)]
                computed = max(candidates, default=0)
            if computed != row.index:
                bad.append(ell)
                notes.append(f"ell={ell}: table {row.index} vs computed {computed}")
        items.append(
            ReportItem(
                id=f"max.d{row.degree}.{row.cond}",
                status="fail" if bad else "pass",
                lhs_sci=str(sci_string(row.index)),
                rhs_sci="",
                note=f"{row.label}; probes {probes}" + ("; " + "; ".join(notes) if notes else ""),
            )
        )
    return Report("primitive-maxima", tuple(items))


# ---------------------------------------------------------------------------
# known printed-value conflicts


@dataclass(frozen=True)
class Discrepancy:
    id: str
    ell: int | None
    n: int | None
    printed: str
    computed: str
    note: str


_DISCREPANCIES = (
    Discrepancy(
        "o8plus-order",
        None,
        None,
        "component index 174184400; table bound 348368800",
        "orthogonal-group order formula gives 174182400; bound 348364800",
        "printed digits conflict with the order implied by the group label; "
        "corrected mode substitutes the formula value",
    ),
    Discrepancy(
        "alt10-order",
        None,
        None,
        "component index 1818400 for the doubled 10-point alternating group",
        "10!/2 = 1814400",
        "printed digits conflict with the alternating-group order; "
        "corrected mode substitutes the formula value",
    ),
    Discrepancy(
        "char3-n57",
        3,
        57,
        "P55+P2 labeled 'S56 x 2.A5' (56!*60 as printed; 57!*60 with the "
        "minimal-degree label S57 forced at subdegree 55)",
        "P2^(28)+P1 with value 60^28*28! ~ 1.87e79, beating 57!*60 ~ 2.43e78",
        "verified by exhaustive enumeration over all saturated pairs",
    ),
    Discrepancy(
        "char3-n58",
        3,
        58,
        "P58 (S60) with value 60! ~ 8.32e81",
        "P2^(29) with value 60^29*29! ~ 3.26e82",
        "verified by exhaustive enumeration over all saturated pairs",
    ),
    Discrepancy(
        "char3-n65",
        3,
        65,
        "P65 (S66) acting in degree 65",
        "P64~S66+P1, same value 66!: subdegree 65 is unavailable since 66 = 65+1 "
        "is divisible by 3",
        "value agrees; only the printed achiever shape is off",
    ),
    Discrepancy(
        "char3-mult4-exponent",
        3,
        None,
        "the bound '60^14*(4)! < 40320^7*7!' with an ambiguous left factor",
        "both readings (4! and 14!) hold; see registry rows char3.mult4-reading-*",
        "neither reading is asserted as ground truth",
    ),
)


def discrepancies() -> tuple[Discrepancy, ...]:
    """Static ledger of printed-value conflicts, each with both values."""
    return _DISCREPANCIES


# (ell, n) -> (discrepancy id, recorded computed value, recorded computed shape)
KNOWN_TABLE_DISCREPANCIES: dict[tuple[int, int], tuple[str, int, str]] = {
    (3, 57): ("char3-n57", 60**28 * factorial(28), "P2^(28)+P1"),
    (3, 58): ("char3-n58", 60**29 * factorial(29), "P2^(29)"),
    (3, 65): ("char3-n65", factorial(66), "P64~S66+P1"),
}


# ---------------------------------------------------------------------------
# golden tables

# Frozen per-characteristic block indexes for expected values.  These are
# literals on purpose: expectations must not be read back from the catalog.
_IDX_LARGE = {1: 1, 2: 60, 3: 360, 4: 25920, 6: 6531840}
_IDX_CHAR2 = {1: 1, 3: 216, 4: 2520, 5: 3000, 6: 6531840}
_IDX_CHAR3 = {1: 1, 2: 60, 3: 168, 4: 40320}
_IDX_CHAR5 = {1: 1, 2: 24, 3: 2520, 4: 25920}

_SMALL_TABLE_LARGE = {
    7: "P4+P3",
    8: "P4^(2)",
    9: "P6+P3",
    10: "P6+P4",
    11: "P4^(2)+P3",
    12: "P4^(3)",
    13: "P4^(3)+P1",
    14: "P2^(7)",
    15: "P4^(3)+P3",
    16: "P4^(4)",
    17: "P4^(4)+P1",
    18: "P2^(9)",
    19: "P4^(4)+P3",
}

_LARGE_CHARS = (7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73)
_CHAR2_EXCEPTIONS = frozenset({26, 28, 29, 32})
_CHAR3_P4_EXCLUSIONS = frozenset({22, 26, 27})


def _shape_value(shape: str, idx: dict[int, int]) -> int:
    """Value of an expected shape string under frozen block indexes."""
    total = 1
    for token in shape.split("+"):
        head, _, rest = token.partition("^")
        if "~S" in head:
            m_text, _, points = head[1:].partition("~S")
            index = factorial(int(points))
        else:
            m_text = head[1:]
            index = idx[int(m_text)]
        t = int(rest.strip("()")) if rest else 1
        total *= index**t * factorial(t)
    return total


def _expected_large(n: int, ell: int) -> tuple[int, str]:
    """Expected (value, shape) for characteristic >= 7, degrees 20..70."""
    r = n // 2
    if (53 <= n <= 60 and n % 2 == 1 and (n + 2) % ell == 0) or (
        61 <= n <= 70 and (n + 2) % ell == 0
    ):
        return factorial(n + 2), f"P{n}~S{n + 2}"
    if n >= 63 and n % 2 == 1:
        if (n + 1) % ell == 0:
            return factorial(n + 1), f"P{n - 1}~S{n + 1}+P1"
        return factorial(n + 1), f"P{n}~S{n + 1}"
    shape = f"P2^({r})" + ("+P1" if n % 2 else "")
    return 60**r * factorial(r), shape


def _expected_char2(n: int) -> tuple[int, str]:
    if n in _CHAR2_EXCEPTIONS:
        if n % 2 == 0:
            return factorial(n + 2), f"P{n}~S{n + 2}"
        return factorial(n + 1), f"P{n - 1}~S{n + 1}+P1"
    r, d = divmod(n, 6)
    head = f"P6^({r})" if r > 1 else ("P6" if r == 1 else "")
    tail = {0: "", 1: "+P1", 2: "+P1^(2)", 3: "+P3", 4: "+P4", 5: "+P5"}[d]
    shape = (head + tail).lstrip("+") or "P1"
    value = 6531840**r * factorial(r) * (2 if d == 2 else _IDX_CHAR2[d] if d else 1)
    return value, shape


def _expected_char3(n: int) -> tuple[int, str]:
    if n <= 4:
        return _IDX_CHAR3[n], (f"P{n}" if n > 1 else "P1")
    if 5 <= n <= 29 and n not in _CHAR3_P4_EXCLUSIONS:
        r, d = divmod(n, 4)
        shape = (f"P4^({r})" if r > 1 else "P4") + {0: "", 1: "+P1", 2: "+P2", 3: "+P3"}[d]
        return 40320**r * factorial(r) * _IDX_CHAR3.get(d, 1), shape
    if n in (55, 61, 64, 67):
        return factorial(n + 2), f"P{n}~S{n + 2}"
    if n in (57, 58, 65):  # printed rows; engine output is on the discrepancy ledger
        printed = {
            57: (factorial(57) * 60, "P55~S57+P2"),
            58: (factorial(60), f"P58~S60"),
            65: (factorial(66), f"P65~S66"),
        }
        return printed[n]
    if n == 63:
        return factorial(64), "P63~S64"
    r = n // 2
    return 60**r * factorial(r), f"P2^({r})" + ("+P1" if n % 2 else "")


def _expected_char5(n: int) -> tuple[int, str]:
    if n <= 4:
        return _IDX_CHAR5[n], (f"P{n}" if n > 1 else "P1")
    if n == 5:
        return 2520 * 24, "P3+P2"
    if n == 8:
        return 25920**2 * 2, "P4^(2)"
    if n == 11:
        return 25920**2 * 2 * 2520, "P4^(2)+P3"
    if n in (65, 67):
        return factorial(n + 1), f"P{n}~S{n + 1}"
    if n in (58, 68):
        return factorial(n + 2), f"P{n}~S{n + 2}"
    r, d = divmod(n, 3)
    if d == 0:
        return 2520**r * factorial(r), (f"P3^({r})" if r > 1 else "P3")
    if d == 1:
        if 7 <= n <= 31:
            head = f"P3^({r - 1})" if r - 1 > 1 else "P3"
            return 2520 ** (r - 1) * factorial(r - 1) * 25920, f"P4+{head}"
        return 2520**r * factorial(r), f"P3^({r})+P1"
    return 2520**r * factorial(r) * 24, (f"P3^({r})+P2" if r > 1 else "P3+P2")


def _golden_item(
    item_id: str,
    result: BoundResult,
    expected_value: int,
    expected_shape: str,
) -> ReportItem:
    key = (result.ell, result.n)
    lhs = str(result.value_sci)
    rhs = str(sci_string(expected_value))
    if key in KNOWN_TABLE_DISCREPANCIES:
        disc_id, recorded_value, recorded_shape = KNOWN_TABLE_DISCREPANCIES[key]
        ok = result.value == recorded_value and recorded_shape in result.shapes()
        return ReportItem(
            item_id,
            "discrepancy" if ok else "fail",
            lhs,
            rhs,
            f"printed {expected_shape} = {rhs}; computed {recorded_shape} = "
            f"{sci_string(recorded_value)}; see ledger entry {disc_id}"
            + ("" if ok else " (engine no longer reproduces the recorded value!)"),
        )
    ok = result.value == expected_value and expected_shape in result.shapes()
    note = "" if ok else f"expected {expected_shape}, got {result.shapes()}"
    return ReportItem(item_id, "pass" if ok else "fail", lhs, rhs, note)


def golden_tables(catalog: Catalog | None = None) -> Report:
    """Compare search output against the printed bound tables.

    Covers the imprimitive table for characteristics >= 7 (degrees 7..19
    and the 20..70 case analysis over every prime up to 73) and the full
    characteristic 2, 3, 5 tables.  Rows on the known-discrepancy ledger
    must reproduce the recorded computed values and report
    ``discrepancy``; every other row must match the printed data.
    """
    cat = catalog if catalog is not None else default_catalog()
    items: list[ReportItem] = []
    for ell in (7, 11, 13):
        for n, shape in _SMALL_TABLE_LARGE.items():
            items.append(
                _golden_item(
                    f"small.l{ell}.n{n}",
                    best_pair(n, ell, cat),
                    _shape_value(shape, _IDX_LARGE),
                    shape,
                )
            )
    for ell in _LARGE_CHARS:
        for n in range(20, 71):
            value, shape = _expected_large(n, ell)
            items.append(
                _golden_item(f"large.l{ell}.n{n}", best_pair(n, ell, cat), value, shape)
            )
    for n in range(1, 34):
        value, shape = _expected_char2(n)
        items.append(_golden_item(f"char2.n{n}", best_pair(n, 2, cat), value, shape))
    for n in range(1, 69):
        value, shape = _expected_char3(n)
        items.append(_golden_item(f"char3.n{n}", best_pair(n, 3, cat), value, shape))
    for n in range(1, 70):
        value, shape = _expected_char5(n)
        items.append(_golden_item(f"char5.n{n}", best_pair(n, 5, cat), value, shape))
    return Report("golden-tables", tuple(items))


# ---------------------------------------------------------------------------
# comparison against the smooth bound


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    ell: int
    value: int
    smooth_bound: int
    alpha: float | None
    dominated: bool


DEFAULT_COMPARISON_CHARS = (2, 3, 5, 7, 11, 13, 17, 19)


def weisfeiler(
    n_to: int = 70,
    chars: tuple[int, ...] = DEFAULT_COMPARISON_CHARS,
    catalog: Catalog | None = None,
) -> list[ComparisonRow]:
    """f(n, ell) against n^4 (n+2)! for n < 64 and (n+2)! for n >= 64.

    alpha solves f = n^alpha * (n+2)!; it is None at n = 1 where the
    base of the exponent degenerates.
    """
    cat = catalog if catalog is not None else default_catalog()
    rows = []
    for ell in chars:
        require_characteristic(ell)
        for n in range(1, n_to + 1):
            value = bound_value(n, ell, cat)
            smooth = n**4 * factorial(n + 2) if n < 64 else factorial(n + 2)
            alpha = alpha_exponent(value, n) if n >= 2 else None
            rows.append(ComparisonRow(n, ell, value, smooth, alpha, smooth >= value))
    return rows


def worst_alpha(rows: list[ComparisonRow]) -> ComparisonRow:
    candidates = [row for row in rows if row.alpha is not None]
    if not candidates:
        raise DomainError("no rows with a defined alpha")
    return max(candidates, key=lambda row: row.alpha)
