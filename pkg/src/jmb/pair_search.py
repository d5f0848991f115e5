"""Layer-2 optimizer: maximization over saturated pairs.

A saturated pair for degree n splits the space into blocks: a block is
a primitive constituent of subdegree m repeated t times (the wreath
construction), block subdegrees are pairwise distinct, and the
subdegree-weighted multiplicities sum to n.  The pair's index value is
prod(index_i ** t_i * t_i!), and f(n, ell) is the maximum over all
saturated pairs built from the catalog's constituents.

The search is an exact dynamic program over (largest subdegree
considered, remaining dimension) with an inner multiplicity loop;
maximizers are recovered by backtracking over all optimal transitions.
No structural shortcut from the replacement analysis is ever enforced
as a constraint, so those statements can be checked on the output.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .catalog import Catalog, ConstituentEntry, default_catalog, require_characteristic
from .errors import DomainError, ThresholdNotFoundError
from .exactnum import SciApprox, factorial, sci_string

MAX_DEGREE = 200
TIE_CAP = 16
_TIE_ENUM_LIMIT = 64  # hard stop for maximizer enumeration; counts stay exact


@dataclass(frozen=True)
class Block:
    entry: ConstituentEntry
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 1:
            raise DomainError(f"multiplicity must be >= 1, got {self.multiplicity}")

    def value(self) -> int:
        return self.entry.index ** self.multiplicity * factorial(self.multiplicity)

    def shape(self) -> str:
        text = f"P{self.entry.degree}"
        if self.entry.kind == "symmetric":
            text += f"~{self.entry.label}"
        if self.multiplicity > 1:
            text += f"^({self.multiplicity})"
        return text


@dataclass(frozen=True)
class SaturatedPair:
    """Blocks sorted by descending subdegree; subdegrees pairwise distinct."""

    blocks: tuple[Block, ...]
    n: int
    ell: int

    def __post_init__(self):
        degrees = [b.entry.degree for b in self.blocks]
        if len(set(degrees)) != len(degrees):
            raise DomainError(f"repeated subdegree in {degrees}")
        if degrees != sorted(degrees, reverse=True):
            raise DomainError(f"blocks not in canonical order: {degrees}")
        total = sum(b.entry.degree * b.multiplicity for b in self.blocks)
        if total != self.n:
            raise DomainError(f"blocks cover {total} dimensions, pair claims {self.n}")

    def value(self) -> int:
        out = 1
        for block in self.blocks:
            out *= block.value()
        return out

    def shape(self) -> str:
        if not self.blocks:
            return "0"
        return "+".join(block.shape() for block in self.blocks)

    def expression(self) -> str:
        """Human-readable product expression, e.g. '6531840^5 * 5! * 216'."""
        parts: list[str] = []
        for block in self.blocks:
            t = block.multiplicity
            if t == 1:
                parts.append(str(block.entry.index))
            else:
                parts.append(f"{block.entry.index}^{t} * {t}!")
        return " * ".join(parts) if parts else "1"


def pair_value(pair: SaturatedPair) -> int:
    return pair.value()


@dataclass(frozen=True)
class BoundResult:
    n: int
    ell: int
    value: int
    value_sci: SciApprox
    argmax: tuple[SaturatedPair, ...]
    tie_count: int
    flags: tuple[str, ...] = ()

    def shapes(self) -> list[str]:
        return [pair.shape() for pair in self.argmax]


def generic_bound(n: int, ell: int) -> int:
    """(n+2)! when ell divides n+2, else (n+1)!."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    require_characteristic(ell)
    return factorial(n + 2) if (n + 2) % ell == 0 else factorial(n + 1)


class _Solver:
    """Per-(catalog, characteristic) dynamic program over all degrees <= MAX_DEGREE."""

    def __init__(self, catalog: Catalog, ell: int, n_max: int = MAX_DEGREE):
        self.catalog = catalog
        self.ell = ell
        self.n_max = n_max
        self.entries: list[ConstituentEntry | None] = [None]
        for m in range(1, n_max + 1):
            found = catalog.constituents(ell, m)
            self.entries.append(found[0] if found else None)
        none_row: list[int | None] = [None] * (n_max + 1)
        self.best: list[list[int | None]] = [list(none_row) for _ in range(n_max + 1)]
        self.count: list[list[int]] = [[0] * (n_max + 1) for _ in range(n_max + 1)]
        self.best[0][0] = 1
        self.count[0][0] = 1
        for m in range(1, n_max + 1):
            entry = self.entries[m]
            prev_best = self.best[m - 1]
            prev_count = self.count[m - 1]
            row_best = self.best[m]
            row_count = self.count[m]
            for rem in range(n_max + 1):
                best = prev_best[rem]
                cnt = prev_count[rem]
                if entry is not None:
                    idx = entry.index
                    block = 1
                    for t in range(1, rem // m + 1):
                        block *= idx * t  # block == idx**t * t!
                        below = prev_best[rem - t * m]
                        if below is None:
                            continue
                        cand = block * below
                        if best is None or cand > best:
                            best = cand
                            cnt = prev_count[rem - t * m]
                        elif cand == best:
                            cnt += prev_count[rem - t * m]
                row_best[rem] = best
                row_count[rem] = cnt

    def value(self, n: int) -> int:
        result = self.best[self.n_max][n]
        assert result is not None  # trivial blocks make every degree reachable
        return result

    def _collect(self, m: int, rem: int, target: int, out: list, stack: list) -> None:
        if len(out) >= _TIE_ENUM_LIMIT:
            return
        if m == 0:
            out.append(list(stack))
            return
        entry = self.entries[m]
        if self.best[m - 1][rem] == target:
            self._collect(m - 1, rem, target, out, stack)
        if entry is None:
            return
        idx = entry.index
        block = 1
        for t in range(1, rem // m + 1):
            block *= idx * t
            below = self.best[m - 1][rem - t * m]
            if below is not None and block * below == target:
                stack.append(Block(entry, t))
                self._collect(m - 1, rem - t * m, below, out, stack)
                stack.pop()

    def result(self, n: int) -> BoundResult:
        value = self.value(n)
        tie_count = self.count[self.n_max][n]
        raw: list[list[Block]] = []
        self._collect(self.n_max, n, value, raw, [])
        pairs = sorted(
            (
                SaturatedPair(tuple(sorted(blocks, key=lambda b: -b.entry.degree)), n, self.ell)
                for blocks in raw
            ),
            key=lambda p: tuple((-b.entry.degree, -b.multiplicity) for b in p.blocks),
        )
        return BoundResult(
            n=n,
            ell=self.ell,
            value=value,
            value_sci=sci_string(value),
            argmax=tuple(pairs[:TIE_CAP]),
            tie_count=tie_count,
        )


_SOLVERS: dict[tuple[Catalog, int], _Solver] = {}


def _solver(catalog: Catalog | None, ell: int) -> _Solver:
    require_characteristic(ell)
    cat = catalog if catalog is not None else default_catalog()
    key = (cat, ell)
    if key not in _SOLVERS:
        _SOLVERS[key] = _Solver(cat, ell)
    return _SOLVERS[key]


def best_pair(n: int, ell: int, catalog: Catalog | None = None) -> BoundResult:
    """f(n, ell) with every maximizing saturated pair (up to the tie cap)."""
    if not 1 <= n <= MAX_DEGREE:
        raise DomainError(f"degree must lie in 1..{MAX_DEGREE}, got {n}")
    return _solver(catalog, ell).result(n)


def bound_value(n: int, ell: int, catalog: Catalog | None = None) -> int:
    """f(n, ell) alone, skipping maximizer recovery."""
    if not 1 <= n <= MAX_DEGREE:
        raise DomainError(f"degree must lie in 1..{MAX_DEGREE}, got {n}")
    return _solver(catalog, ell).value(n)


def bound_table(
    ell: int, n_from: int, n_to: int, catalog: Catalog | None = None
) -> list[BoundResult]:
    if not 1 <= n_from <= n_to <= MAX_DEGREE:
        raise DomainError(f"bad range {n_from}..{n_to}")
    solver = _solver(catalog, ell)
    return [solver.result(n) for n in range(n_from, n_to + 1)]


def threshold(
    ell: int, window_end: int = 150, catalog: Catalog | None = None
) -> int:
    """Least n0 with f(n, ell) generic on the whole window [n0, window_end]."""
    if not 1 <= window_end <= MAX_DEGREE:
        raise DomainError(f"window end must lie in 1..{MAX_DEGREE}, got {window_end}")
    solver = _solver(catalog, ell)
    last_failing = 0
    for n in range(1, window_end + 1):
        if solver.value(n) != generic_bound(n, ell):
            last_failing = n
    if last_failing == window_end:
        raise ThresholdNotFoundError(
            f"no stabilization degree for ell={ell} within window {window_end}"
        )
    return last_failing + 1


_SHAPE_BLOCK = re.compile(r"^P(\d+)(?:~S(\d+))?(?:\^\((\d+)\))?$")


def parse_shape(text: str, ell: int, catalog: Catalog | None = None) -> SaturatedPair:
    """Parse a shape string like 'P6^(5)+P3' back into a saturated pair."""
    cat = catalog if catalog is not None else default_catalog()
    require_characteristic(ell)
    blocks: list[Block] = []
    for token in text.split("+"):
        match = _SHAPE_BLOCK.match(token.strip())
        if not match:
            raise DomainError(f"bad shape block {token!r}")
        m = int(match.group(1))
        t = int(match.group(3)) if match.group(3) else 1
        found = cat.constituents(ell, m)
        if not found:
            raise DomainError(f"no constituent of degree {m} at ell={ell}")
        entry = found[0]
        if match.group(2) and entry.label != f"S{match.group(2)}":
            raise DomainError(
                f"shape annotates {token!r} but the catalog entry is {entry.label}"
            )
        blocks.append(Block(entry, t))
    blocks.sort(key=lambda b: -b.entry.degree)
    n = sum(b.entry.degree * b.multiplicity for b in blocks)
    return SaturatedPair(tuple(blocks), n, ell)
