"""Relation partitions of a finite point set."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class UnexpectedValueError(ValueError):
    """A pair of distinct points takes a value outside the expected list."""

    def __init__(self, x: int, y: int, value):
        super().__init__(f"pair ({x}, {y}) has unexpected value {value!r}")
        self.pair = (x, y)
        self.value = value


@dataclass(frozen=True, eq=False)
class RelationPartition:
    """``class_of[x, y]`` in ``0..d``; class 0 is exactly the diagonal.

    ``labels[i - 1]`` records the pair value defining class ``i`` when known.
    """

    class_of: np.ndarray
    labels: tuple = field(default=())

    def __post_init__(self):
        c = np.asarray(self.class_of)
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise ValueError("class matrix must be square")
        if c.shape[0] == 0:
            raise ValueError("empty scheme: no points")
        if c.size and (c.min() < 0 or c.max() > 255):
            raise ValueError("class indices must lie in 0..255")
        c = np.ascontiguousarray(c, dtype=np.uint8)
        if not (c == c.T).all():
            raise ValueError("relation partition must be symmetric")
        n = c.shape[0]
        if (np.diag(c) != 0).any():
            raise ValueError("diagonal pairs must be in class 0")
        off = c[~np.eye(n, dtype=bool)]
        if (off == 0).any():
            raise ValueError("class 0 must be exactly the diagonal")
        d = int(c.max()) if n > 1 else 0
        present = np.zeros(d + 1, dtype=bool)
        present[np.unique(c)] = True
        if not present.all():
            raise ValueError(f"empty classes: {np.flatnonzero(~present).tolist()}")
        c.setflags(write=False)
        object.__setattr__(self, "class_of", c)
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def n(self) -> int:
        return self.class_of.shape[0]

    @property
    def d(self) -> int:
        return int(self.class_of.max()) if self.n > 1 else 0

    def valencies(self) -> list[int]:
        counts = np.bincount(self.class_of[0], minlength=self.d + 1)
        return [int(k) for k in counts]

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "classes": self.class_of.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> RelationPartition:
        c = np.array(obj["classes"], dtype=np.int64).reshape(obj["n"], obj["n"])
        rp = cls(c)
        if "d" in obj and rp.d != obj["d"]:
            raise ValueError(f"declared d={obj['d']} but the classes use d={rp.d}")
        return rp


def relations_from_matrix(values: np.ndarray, expected_values) -> RelationPartition:
    """Classes from a precomputed symmetric matrix of pair values.

    Class ``i >= 1`` collects the off-diagonal pairs whose value equals
    ``expected_values[i - 1]``.
    """
    values = np.asarray(values)
    n = values.shape[0]
    expected = list(expected_values)
    if len(set(expected)) != len(expected):
        raise ValueError("expected values must be distinct")
    classes = np.zeros((n, n), dtype=np.int64)
    assigned = np.eye(n, dtype=bool)
    for i, v in enumerate(expected, start=1):
        hit = (values == v) & ~assigned
        classes[hit] = i
        assigned |= hit
    if not assigned.all():
        x, y = np.argwhere(~assigned)[0]
        raise UnexpectedValueError(int(x), int(y), values[x, y].item())
    return RelationPartition(classes, tuple(expected))


def relations_from_values(points, pair_value_fn, expected_values) -> RelationPartition:
    """Classes from a symmetric pair function evaluated on every unordered pair."""
    n = len(points)
    expected = list(expected_values)
    if len(set(expected)) != len(expected):
        raise ValueError("expected values must be distinct")
    index = {v: i for i, v in enumerate(expected, start=1)}
    classes = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(x + 1, n):
            v = pair_value_fn(points[x], points[y])
            k = index.get(v)
            if k is None:
                raise UnexpectedValueError(x, y, v)
            classes[x, y] = classes[y, x] = k
    return RelationPartition(classes, tuple(expected))
