"""Ambient space descriptions for the three supported models.

qs0        the base-point component bookkeeping model of QS^0 (translations [k])
qsn        QS^n for n >= 1, polynomial on classes Q^I x_n with excess(I) > n
suspension QX for X an iterated suspension with named cells; `level` counts how
           many suspensions have been applied to the user-supplied complex, so
           a cell recorded at dimension d sits in ambient dimension d + level.

Cell Steenrod data is recorded once on the unsuspended complex; the lower
Steenrod action commutes with suspension, so it transports to every level.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoSuccessor
from .seqcore import BaseClass, cell_class, sphere_class, unit_loop_class

MODEL_QS0 = "qs0"
MODEL_QSN = "qsn"
MODEL_SUSPENSION = "suspension"

#: model tag used by space description files for a doubly suspended complex
FILE_MODEL_SIGMA2 = "sigma2"


@dataclass(frozen=True, order=True)
class SqEntry:
    """One row of a cell-level lower Steenrod action table: Sq^r_* source = sum(targets)."""

    r: int
    source: str
    targets: tuple[str, ...]


@dataclass(frozen=True, order=True)
class SpaceDesc:
    model: str
    n: int = 0
    x_cells: tuple[tuple[str, int], ...] = ()
    x_actions: tuple[SqEntry, ...] = ()
    level: int = 0

    def __post_init__(self) -> None:
        if self.model == MODEL_QS0:
            if self.n or self.x_cells or self.x_actions or self.level:
                raise ValueError("qs0 takes no extra data")
        elif self.model == MODEL_QSN:
            if self.n < 1:
                raise ValueError("qsn needs n >= 1")
            if self.x_cells or self.x_actions or self.level:
                raise ValueError("qsn takes no cell data")
        elif self.model == MODEL_SUSPENSION:
            if self.level < 1:
                raise ValueError("suspension model needs level >= 1")
            self._check_cells()
        else:
            raise ValueError(f"unknown space model {self.model!r}")

    def _check_cells(self) -> None:
        if not self.x_cells:
            raise ValueError("suspension model needs at least one cell")
        names = [name for name, _ in self.x_cells]
        if len(set(names)) != len(names):
            raise ValueError("cell names must be unique")
        dims = dict(self.x_cells)
        for name, d in self.x_cells:
            if d < 1:
                raise ValueError(f"cell {name!r} needs dimension >= 1")
        for entry in self.x_actions:
            if entry.r < 1:
                raise ValueError("action rows need r >= 1")
            if entry.source not in dims:
                raise ValueError(f"action row names unknown cell {entry.source!r}")
            for t in entry.targets:
                if t not in dims:
                    raise ValueError(f"action row names unknown cell {t!r}")
                if dims[t] != dims[entry.source] - entry.r:
                    raise ValueError(
                        f"Sq^{entry.r} must drop dimension by exactly {entry.r}: "
                        f"{entry.source!r} -> {t!r}"
                    )

    # -- base class inventory ------------------------------------------------

    @property
    def label(self) -> str:
        if self.model == MODEL_QS0:
            return "qs0"
        if self.model == MODEL_QSN:
            return f"qs{self.n}"
        return f"q_susp{self.level}[" + ",".join(n for n, _ in self.x_cells) + "]"

    def base_classes(self) -> tuple[BaseClass, ...]:
        if self.model == MODEL_QS0:
            return (unit_loop_class(),)
        if self.model == MODEL_QSN:
            return (sphere_class(self.n),)
        return tuple(
            cell_class(name, d + self.level)
            for name, d in sorted(self.x_cells, key=lambda c: (c[1], c[0]))
        )

    def has_charge(self) -> bool:
        return self.model == MODEL_QS0

    def base_sq_action(self, r: int, base: BaseClass) -> tuple[BaseClass, ...]:
        """Lower Steenrod action on a base class (r >= 1)."""
        if self.model != MODEL_SUSPENSION or base.kind != "cell":
            return ()
        for entry in self.x_actions:
            if entry.r == r and entry.source == base.name:
                dims = dict(self.x_cells)
                return tuple(cell_class(t, dims[t] + self.level) for t in entry.targets)
        return ()

    # -- the suspension tower ------------------------------------------------

    def successor(self) -> SpaceDesc:
        if self.model == MODEL_QS0:
            return SpaceDesc(MODEL_QSN, n=1)
        if self.model == MODEL_QSN:
            return SpaceDesc(MODEL_QSN, n=self.n + 1)
        return SpaceDesc(
            MODEL_SUSPENSION,
            x_cells=self.x_cells,
            x_actions=self.x_actions,
            level=self.level + 1,
        )

    def predecessor(self) -> SpaceDesc:
        if self.model == MODEL_QSN:
            if self.n == 1:
                return SpaceDesc(MODEL_QS0)
            return SpaceDesc(MODEL_QSN, n=self.n - 1)
        if self.model == MODEL_SUSPENSION and self.level >= 2:
            return SpaceDesc(
                MODEL_SUSPENSION,
                x_cells=self.x_cells,
                x_actions=self.x_actions,
                level=self.level - 1,
            )
        raise NoSuccessor(f"{self.label} has no desuspension in this tower")

    def suspended_base(self, base: BaseClass) -> BaseClass:
        """Image of a base class of this space in the successor space."""
        if self.model == MODEL_QS0:
            return sphere_class(1)
        if self.model == MODEL_QSN:
            return sphere_class(self.n + 1)
        return cell_class(base.name, base.dimension + 1)

    def desuspended_base(self, base: BaseClass) -> BaseClass:
        pred = self.predecessor()
        if pred.model == MODEL_QS0:
            return unit_loop_class()
        if pred.model == MODEL_QSN:
            return sphere_class(pred.n)
        return cell_class(base.name, base.dimension - 1)


def qs0_space() -> SpaceDesc:
    return SpaceDesc(MODEL_QS0)


def qsn_space(n: int) -> SpaceDesc:
    return SpaceDesc(MODEL_QSN, n=n)


def suspension_space(
    cells: dict[str, int] | tuple[tuple[str, int], ...],
    actions: tuple[SqEntry, ...] = (),
    level: int = 2,
) -> SpaceDesc:
    pairs = tuple(sorted(cells.items())) if isinstance(cells, dict) else tuple(sorted(cells))
    return SpaceDesc(MODEL_SUSPENSION, x_cells=pairs, x_actions=tuple(actions), level=level)


def two_cell_space() -> SpaceDesc:
    """Double suspension of a two-cell complex (cells in dims 1 and 2, no action)."""
    return suspension_space({"a": 1, "b": 2}, (), level=2)


# ---------------------------------------------------------------------------
# Space description files (UTF-8 JSON).

_TOP_KEYS = {"model", "n", "cells", "sq_action"}


def space_from_dict(data: dict) -> SpaceDesc:
    """Build a SpaceDesc from a parsed description file; unknown fields are rejected."""
    if not isinstance(data, dict):
        raise ValueError("space description must be a JSON object")
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise ValueError(f"unknown space description fields: {sorted(unknown)}")
    model = data.get("model")
    if model == MODEL_QS0:
        _forbid(data, ("n", "cells", "sq_action"))
        return qs0_space()
    if model == MODEL_QSN:
        _forbid(data, ("cells", "sq_action"))
        n = data.get("n")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError("qsn description needs integer n >= 1")
        return qsn_space(n)
    if model == FILE_MODEL_SIGMA2:
        _forbid(data, ("n",))
        cells_raw = data.get("cells")
        if not isinstance(cells_raw, list) or not cells_raw:
            raise ValueError("sigma2 description needs a nonempty cells list")
        cells: list[tuple[str, int]] = []
        for cell in cells_raw:
            if not isinstance(cell, dict) or set(cell) != {"name", "dim"}:
                raise ValueError("each cell must be an object with exactly name and dim")
            name, dim = cell["name"], cell["dim"]
            if not isinstance(name, str) or not name:
                raise ValueError("cell name must be a nonempty string")
            if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
                raise ValueError("cell dim must be an integer >= 1")
            cells.append((name, dim))
        actions: list[SqEntry] = []
        for row in data.get("sq_action", []) or []:
            if not isinstance(row, dict) or set(row) != {"r", "from", "to"}:
                raise ValueError("each sq_action row must have exactly r, from, to")
            r, src, targets = row["r"], row["from"], row["to"]
            if not isinstance(r, int) or isinstance(r, bool) or r < 1:
                raise ValueError("sq_action r must be an integer >= 1")
            if not isinstance(src, str) or not isinstance(targets, list):
                raise ValueError("sq_action needs string 'from' and list 'to'")
            if not all(isinstance(t, str) for t in targets):
                raise ValueError("sq_action targets must be strings")
            actions.append(SqEntry(r, src, tuple(targets)))
        return suspension_space(tuple(cells), tuple(actions), level=2)
    raise ValueError(f"unknown space model {model!r}")


def _forbid(data: dict, keys: tuple[str, ...]) -> None:
    present = [k for k in keys if k in data]
    if present:
        raise ValueError(f"fields {present} not allowed for model {data.get('model')!r}")


def space_to_dict(space: SpaceDesc) -> dict:
    if space.model == MODEL_QS0:
        return {"model": MODEL_QS0}
    if space.model == MODEL_QSN:
        return {"model": MODEL_QSN, "n": space.n}
    return {
        "model": FILE_MODEL_SIGMA2,
        "cells": [{"name": n, "dim": d} for n, d in space.x_cells],
        "sq_action": [
            {"r": e.r, "from": e.source, "to": list(e.targets)} for e in space.x_actions
        ],
    }
