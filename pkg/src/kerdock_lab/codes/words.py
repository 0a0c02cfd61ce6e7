"""Fixed-length words over Z4 and F2, stored as ``uint8`` numpy arrays.

A code is a :class:`Code`: an alphabet tag plus an explicit ``(size, length)``
word array, optionally with the generator rows it was built from.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

import numpy as np

_LEE = np.array([0, 1, 2, 1], dtype=np.int64)
# Gray map: 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10.
_GRAY = np.array([[0, 0], [0, 1], [1, 1], [1, 0]], dtype=np.uint8)


def lee_weight(w) -> np.ndarray | int:
    """Lee weight along the last axis."""
    w = np.asarray(w, dtype=np.int64) % 4
    out = _LEE[w].sum(axis=-1)
    return int(out) if np.ndim(out) == 0 else out


def lee_distance(a, b) -> int:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    return lee_weight((a.astype(np.int64) - b) % 4)


def hamming_weight(w) -> np.ndarray | int:
    out = (np.asarray(w) != 0).sum(axis=-1)
    return int(out) if np.ndim(out) == 0 else out


def hamming_distance(a, b) -> int:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    return int((a != b).sum())


def gray_map(w) -> np.ndarray:
    """Digitwise Gray map; doubles the last axis."""
    w = np.asarray(w, dtype=np.int64) % 4
    bits = _GRAY[w]
    return bits.reshape(*w.shape[:-1], 2 * w.shape[-1])


def z4_row_reduce(gens) -> tuple[np.ndarray, np.ndarray]:
    """Standard form of a Z4 generator matrix.

    Returns ``(order4_rows, order2_rows)``: the code is the direct sum of the
    cyclic groups they generate, so its size is ``4**len(a) * 2**len(b)``.
    """
    g = np.array(gens, dtype=np.int64) % 4
    if g.ndim != 2:
        raise ValueError("generators must be a matrix")
    rows, cols = g.shape
    four = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if g[i, c] % 2), None)
        if p is None:
            continue
        g[[r, p]] = g[[p, r]]
        g[r] = (g[r] * g[r, c]) % 4  # units are self-inverse in Z4
        for i in range(rows):
            if i != r and g[i, c]:
                g[i] = (g[i] - g[i, c] * g[r]) % 4
        four.append(g[r].copy())
        r += 1
    rest = g[r:] // 2 % 2  # remaining rows are all even
    two = []
    rr = 0
    for c in range(cols):
        p = next((i for i in range(rr, len(rest)) if rest[i, c]), None)
        if p is None:
            continue
        rest[[rr, p]] = rest[[p, rr]]
        for i in range(len(rest)):
            if i != rr and rest[i, c]:
                rest[i] ^= rest[rr]
        two.append(2 * rest[rr])
        rr += 1
    return np.array(four, dtype=np.int64).reshape(-1, cols), np.array(two, dtype=np.int64).reshape(-1, cols)


def span_words(gens, modulus: int) -> np.ndarray:
    """All distinct combinations of ``gens`` over Z_modulus, sorted lexicographically."""
    g = np.asarray(gens, dtype=np.int64)
    if modulus == 4:
        four, two = z4_row_reduce(g)
        basis = np.vstack([four, two])
        ranges = [range(4)] * len(four) + [range(2)] * len(two)
    else:
        basis = binary_basis(g)
        ranges = [range(2)] * len(basis)
    if len(basis) == 0:
        return np.zeros((1, g.shape[1]), dtype=np.uint8)
    coeffs = np.array(list(product(*ranges)), dtype=np.int64)
    words = (coeffs @ basis) % modulus
    return np.unique(words.astype(np.uint8), axis=0)


def binary_basis(gens) -> np.ndarray:
    g = np.array(gens, dtype=np.int64) % 2
    rows, cols = g.shape
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if g[i, c]), None)
        if p is None:
            continue
        g[[r, p]] = g[[p, r]]
        for i in range(rows):
            if i != r and g[i, c]:
                g[i] ^= g[r]
        r += 1
    return g[:r]


@dataclass(frozen=True, eq=False)
class Code:
    """An explicit code over ``"Z4"`` or ``"F2"``."""

    alphabet: str
    words: np.ndarray
    generators: np.ndarray | None = field(default=None)

    def __post_init__(self):
        if self.alphabet not in ("Z4", "F2"):
            raise ValueError(f"unknown alphabet {self.alphabet!r}")
        w = np.asarray(self.words, dtype=np.uint8)
        if w.ndim != 2:
            raise ValueError("words must be a 2-d array")
        if w.size and w.max() >= self.modulus:
            raise ValueError("word digit outside alphabet")
        w.setflags(write=False)
        object.__setattr__(self, "words", w)

    @classmethod
    def from_generators(cls, alphabet: str, gens) -> Code:
        gens = np.asarray(gens, dtype=np.uint8)
        return cls(alphabet, span_words(gens, 4 if alphabet == "Z4" else 2), gens)

    @property
    def modulus(self) -> int:
        return 4 if self.alphabet == "Z4" else 2

    @property
    def length(self) -> int:
        return self.words.shape[1]

    @property
    def size(self) -> int:
        return self.words.shape[0]

    def __len__(self) -> int:
        return self.size

    def __contains__(self, word) -> bool:
        return self.index_of(word) is not None

    def index_of(self, word) -> int | None:
        word = np.asarray(word, dtype=np.uint8)
        hits = np.flatnonzero((self.words == word).all(axis=1))
        return int(hits[0]) if hits.size else None

    def word_set(self) -> set[tuple[int, ...]]:
        return {tuple(int(x) for x in w) for w in self.words}

    def cardinality(self) -> int:
        """Size from the generator standard form (falls back to the word count)."""
        if self.generators is None:
            return self.size
        if self.alphabet == "Z4":
            four, two = z4_row_reduce(self.generators)
            return 4 ** len(four) * 2 ** len(two)
        return 2 ** len(binary_basis(self.generators))

    def weight_distribution(self) -> dict[int, int]:
        weights = lee_weight(self.words) if self.alphabet == "Z4" else hamming_weight(self.words)
        return dict(sorted(Counter(int(w) for w in np.atleast_1d(weights)).items()))

    def is_closed_under_addition(self, samples: int | None = None, seed: int = 0) -> bool:
        words = self.word_set()
        w = self.words.astype(np.int64)
        if samples is None:
            pairs = ((i, j) for i in range(self.size) for j in range(i, self.size))
        else:
            rng = np.random.default_rng(seed)
            pairs = zip(rng.integers(0, self.size, samples), rng.integers(0, self.size, samples))
        return all(tuple(int(x) for x in (w[i] + w[j]) % self.modulus) in words for i, j in pairs)

    # -- coordinate operations -------------------------------------------

    def _check_position(self, position: int) -> None:
        if not 0 <= position < self.length:
            raise IndexError(f"position {position} out of range for length {self.length}")

    def puncture(self, position: int) -> Code:
        self._check_position(position)
        words = np.unique(np.delete(self.words, position, axis=1), axis=0)
        gens = None if self.generators is None else np.delete(self.generators, position, axis=1)
        return Code(self.alphabet, words, gens)

    def shorten(self, position: int) -> Code:
        self._check_position(position)
        keep = self.words[:, position] == 0
        return Code(self.alphabet, np.delete(self.words[keep], position, axis=1))

    def double_shorten(self, pos1: int, pos2: int) -> Code:
        self._check_position(pos1)
        self._check_position(pos2)
        if pos1 == pos2:
            raise ValueError("double shortening needs two distinct positions")
        keep = (self.words[:, pos1] == 0) & (self.words[:, pos2] == 0)
        return Code(self.alphabet, np.delete(self.words[keep], [pos1, pos2], axis=1))

    # -- serialization ---------------------------------------------------

    def to_json(self, explicit: bool = True) -> dict:
        """``{"alphabet", "length", "words": ["0123..", ...]}`` (or ``"generators"``)."""
        out = {"alphabet": self.alphabet, "length": self.length}
        if explicit or self.generators is None:
            out["words"] = ["".join(str(int(x)) for x in w) for w in self.words]
        else:
            out["generators"] = ["".join(str(int(x)) for x in g) for g in self.generators]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> Code:
        alphabet = obj["alphabet"]
        n = int(obj["length"])

        def rows(key):
            vals = obj[key]
            arr = np.array([[int(ch) for ch in w] if isinstance(w, str) else list(w) for w in vals], dtype=np.int64)
            arr = arr.reshape(-1, n)
            if arr.size and (arr.min() < 0 or arr.max() >= (4 if alphabet == "Z4" else 2)):
                raise ValueError("digit outside alphabet")
            return arr.astype(np.uint8)

        if "words" in obj:
            return cls(alphabet, np.unique(rows("words"), axis=0))
        if "generators" in obj:
            return cls.from_generators(alphabet, rows("generators"))
        raise ValueError("code JSON needs 'words' or 'generators'")

    def gray_image(self) -> Code:
        if self.alphabet != "Z4":
            raise ValueError("Gray map applies to Z4 codes")
        return Code("F2", gray_map(self.words))
