"""Layer-1 optimizer: maximization over tensor decompositions.

A tensor configuration splits a degree-n action into factors of
pairwise distinct subdegrees r_j, each occurring with multiplicity l_j,
subject to prod(r_j ** l_j) dividing n.  Its value is the product of
per-degree primitive caps raised to the multiplicities, times the
factorials of the multiplicities; the maximum over all configurations
is the primitive bound for degree n.

All functions are pure reads of an immutable catalog.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import Catalog, default_catalog, primitive_cap, require_characteristic
from .errors import DomainError
from .exactnum import factorial

MAX_DEGREE = 200


@dataclass(frozen=True)
class TensorConfig:
    """Factors (subdegree, multiplicity), distinct subdegrees, product | n."""

    factors: tuple[tuple[int, int], ...]  # sorted by descending subdegree
    n: int

    def __post_init__(self):
        degrees = [r for r, _ in self.factors]
        if any(r < 2 for r in degrees) or any(l < 1 for _, l in self.factors):
            raise DomainError(f"bad tensor factors {self.factors}")
        if len(set(degrees)) != len(degrees):
            raise DomainError(f"repeated subdegree in {self.factors}")
        if self.n % self.product() != 0:
            raise DomainError(f"product of {self.factors} does not divide {self.n}")
        if list(degrees) != sorted(degrees, reverse=True):
            raise DomainError(f"factors not in canonical order: {self.factors}")

    def product(self) -> int:
        out = 1
        for r, l in self.factors:
            out *= r**l
        return out

    def shape(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{r}^{l}" if l > 1 else str(r) for r, l in self.factors)


@dataclass(frozen=True)
class PrimitiveBound:
    """Maximum configuration value with its maximizers."""

    n: int
    ell: int
    value: int
    argmax: tuple[TensorConfig, ...]
    flags: tuple[str, ...] = field(default=())


def enumerate_tensor_configs(n: int, max_degree: int = MAX_DEGREE) -> list[TensorConfig]:
    """All tensor configurations for degree n, the empty one included."""
    if not 1 <= n <= max_degree:
        raise DomainError(f"degree must lie in 1..{max_degree}, got {n}")

    def extend(budget: int, min_r: int) -> list[tuple[tuple[int, int], ...]]:
        out: list[tuple[tuple[int, int], ...]] = [()]
        for r in range(min_r, budget + 1):
            if budget % r != 0:
                continue
            size = r
            l = 1
            while budget % size == 0:
                for rest in extend(budget // size, r + 1):
                    out.append(((r, l),) + rest)
                size *= r
                l += 1
        return out

    configs = [
        TensorConfig(tuple(sorted(factors, reverse=True)), n)
        for factors in extend(n, 2)
    ]
    return sorted(configs, key=lambda c: c.factors)


def tensor_value(config: TensorConfig, ell: int, catalog: Catalog | None = None) -> int:
    """prod over factors of cap(r, ell)**l * l!."""
    require_characteristic(ell)
    value = 1
    for r, l in config.factors:
        value *= primitive_cap(r, ell, catalog) ** l * factorial(l)
    return value


def primitive_bound(
    n: int, ell: int, catalog: Catalog | None = None
) -> PrimitiveBound:
    """Maximum tensor-configuration value for degree n, with all maximizers.

    When ell divides n+1 and the maximum is the generic (n+1)! cap, the
    value is a valid bound but is not known to be attained by a
    primitive group; the result carries an ``attainability=unknown``
    flag in that case.
    """
    if not 2 <= n <= MAX_DEGREE:
        raise DomainError(f"degree must lie in 2..{MAX_DEGREE}, got {n}")
    require_characteristic(ell)
    cat = catalog if catalog is not None else default_catalog()
    best = 0
    argmax: list[TensorConfig] = []
    for config in enumerate_tensor_configs(n):
        value = tensor_value(config, ell, cat)
        if value > best:
            best = value
            argmax = [config]
        elif value == best:
            argmax.append(config)
    flags: tuple[str, ...] = ()
    if (n + 1) % ell == 0 and best == factorial(n + 1):
        flags = ("attainability=unknown",)
    return PrimitiveBound(n, ell, best, tuple(argmax), flags)
