"""Corruption of readouts: multiset deletions, insertions, skews.

Random draws use SplitMix64 (Steele et al.'s mix of the Weyl sequence,
constants 0x9E3779B97F4A7C15 / 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB)
so that a seed reproduces the same corruption on every platform and
Python version.  Explicit targets pin down worked
examples exactly; seeded specs resolve lazily against the readout they corrupt.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .core import Composition, Readout
from .errors import InvalidErrorSpecError, InvalidSkewError

MODELS = ("asym_delete", "sym_pair_delete", "insert", "skew")

_MASK = (1 << 64) - 1


class SplitMix64:
    """Minimal deterministic 64-bit generator; documented fixed algorithm."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Unbiased draw from [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def choice(self, seq: Sequence):
        return seq[self.below(len(seq))]


@dataclass(frozen=True)
class ErrorSpec:
    """One corruption event: either explicit targets or a seeded draw.

    Target shapes by model:
      asym_delete      (k, ...) class indices
      sym_pair_delete  ((i, n-i+1), ...) index pairs
      insert           ((k, Composition), ...) added entries
      skew             ((k, old Composition, new Composition), ...)
    """

    model: str
    targets: tuple | None = None
    count: int | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.model not in MODELS:
            raise InvalidErrorSpecError(f"unknown model {self.model!r}")
        explicit = self.targets is not None
        seeded = self.count is not None or self.seed is not None
        if explicit == seeded:
            raise InvalidErrorSpecError(
                "exactly one of explicit targets or count+seed is required")
        if seeded and (self.count is None or self.seed is None):
            raise InvalidErrorSpecError("seeded specs need both count and seed")
        if seeded and self.count < 1:
            raise InvalidErrorSpecError("count must be >= 1")
        if explicit:
            self._check_target_shape()

    def _check_target_shape(self):
        """Validate everything that does not depend on the readout length."""
        if self.model == "asym_delete":
            classes = [int(k) for k in self.targets]
            if len(set(classes)) != len(classes):
                raise InvalidErrorSpecError("duplicate deletion targets")
            if any(k < 1 for k in classes):
                raise InvalidErrorSpecError("class indices start at 1")
        elif self.model == "sym_pair_delete":
            seen = set()
            for item in self.targets:
                i, j = int(item[0]), int(item[1])
                if i == j or i < 1 or j < 1:
                    raise InvalidErrorSpecError(f"invalid pair ({i}, {j})")
                key = (min(i, j), max(i, j))
                if key in seen:
                    raise InvalidErrorSpecError(f"duplicate pair {key}")
                seen.add(key)
        elif self.model == "insert":
            for item in self.targets:
                k = int(item[0])
                comp = Composition(*item[1]).validate()
                if comp.length != k:
                    raise InvalidErrorSpecError(
                        f"inserted entry {comp} does not fit class {k}")
        else:
            seen = set()
            for item in self.targets:
                k = int(item[0])
                old = Composition(*item[1]).validate()
                new = Composition(*item[2]).validate()
                if old.length != k:
                    raise InvalidErrorSpecError(
                        f"entry {old} does not fit class {k}")
                if new.length != old.length:
                    raise InvalidSkewError("skew must preserve fragment length")
                if new.w >= old.w:
                    raise InvalidSkewError(
                        "skew must strictly lower the weight (mass under-read)")
                if k in seen:
                    raise InvalidErrorSpecError(f"class {k} skewed twice")
                seen.add(k)

    def is_seeded(self) -> bool:
        return self.targets is None


def _sym_partner(k: int, n: int) -> int:
    return n - k + 1


def _validate_asym_targets(targets, n) -> tuple[int, ...]:
    classes = tuple(int(k) for k in targets)
    seen = set(classes)
    if len(seen) != len(classes):
        raise InvalidErrorSpecError("duplicate deletion targets")
    for k in classes:
        if not 1 <= k <= n:
            raise InvalidErrorSpecError(f"class {k} outside [1, {n}]")
        p = _sym_partner(k, n)
        if p != k and p in seen:
            raise InvalidErrorSpecError(
                f"classes {k} and {p} are mutually symmetric")
    return classes


def _validate_pair_targets(targets, n) -> tuple[tuple[int, int], ...]:
    pairs = []
    seen = set()
    for item in targets:
        i, j = int(item[0]), int(item[1])
        if i > j:
            i, j = j, i
        if not (1 <= i <= n and j == _sym_partner(i, n) and i != j):
            raise InvalidErrorSpecError(f"({i}, {j}) is not a symmetric pair")
        if i in seen:
            raise InvalidErrorSpecError(f"duplicate pair ({i}, {j})")
        seen.add(i)
        pairs.append((i, j))
    return tuple(pairs)


def _validate_insert_targets(targets, n):
    out = []
    for item in targets:
        k = int(item[0])
        comp = Composition(*item[1]).validate()
        if not 1 <= k <= n or comp.length != k:
            raise InvalidErrorSpecError(
                f"inserted entry {comp} does not fit class {k}")
        out.append((k, comp))
    return tuple(out)


def _validate_skew_targets(targets, n):
    out = []
    seen = set()
    for item in targets:
        k = int(item[0])
        old = Composition(*item[1]).validate()
        new = Composition(*item[2]).validate()
        if not 1 <= k <= n or old.length != k:
            raise InvalidErrorSpecError(f"entry {old} does not fit class {k}")
        if new.length != old.length:
            raise InvalidSkewError("skew must preserve fragment length")
        if new.w >= old.w:
            raise InvalidSkewError(
                "skew must strictly lower the weight (mass under-read)")
        if k in seen:
            raise InvalidErrorSpecError(f"class {k} skewed twice")
        seen.add(k)
        out.append((k, old, new))
    return tuple(out)


def random_error(model: str, count: int, seed: int, n: int) -> ErrorSpec:
    """Seeded error spec; validates that n can absorb `count` errors."""
    spec = ErrorSpec(model, count=count, seed=seed)
    capacity = {
        "asym_delete": n // 2,
        "sym_pair_delete": n // 2,
        "skew": n // 2 + n % 2,
        "insert": n,
    }[model]
    if count > capacity:
        raise InvalidErrorSpecError(
            f"{model} supports at most {capacity} errors at n={n}")
    return spec


def _draw_targets(r: Readout, e: ErrorSpec) -> tuple:
    n = r.n
    rng = SplitMix64(e.seed)
    if e.model == "asym_delete":
        # drawing a class burns its partner too; center excluded (it is
        # its own partner, so deleting it is never asymmetric)
        pool = [k for k in range(1, n + 1) if _sym_partner(k, n) != k]
        picked = []
        for _ in range(e.count):
            k = rng.choice(sorted(pool))
            picked.append(k)
            pool.remove(k)
            pool.remove(_sym_partner(k, n))
        return tuple(sorted(picked))
    if e.model == "sym_pair_delete":
        pool = list(range(1, n // 2 + 1))
        picked = []
        for _ in range(e.count):
            i = rng.choice(pool)
            picked.append((i, _sym_partner(i, n)))
            pool.remove(i)
        return tuple(sorted(picked))
    if e.model == "insert":
        out = []
        for _ in range(e.count):
            k = rng.below(n) + 1
            w = rng.below(k + 1)
            out.append((k, Composition(k - w, w)))
        return tuple(out)
    # skew: distinct classes, no two mutually symmetric, resampling
    # classes that offer no weight to shed
    pool = [k for k in range(1, n + 1) if r.present(k)]
    out = []
    for _ in range(e.count):
        while True:
            if not pool:
                raise InvalidErrorSpecError("no skewable class available")
            k = rng.choice(sorted(pool))
            entries = [(c, m) for c, m in sorted(r.classes[k].items())
                       if c.w >= 1]
            if not entries:
                pool.remove(k)
                continue
            break
        pool.remove(k)
        p = _sym_partner(k, n)
        if p in pool:
            pool.remove(p)
        total = sum(m for _, m in entries)
        pick = rng.below(total)
        for comp, m in entries:
            if pick < m:
                old = comp
                break
            pick -= m
        new_w = rng.below(old.w)
        out.append((k, old, Composition(k - new_w, new_w)))
    return tuple(out)


def resolve(r: Readout, e: ErrorSpec) -> ErrorSpec:
    """Explicit-target equivalent of e against readout r (for logging)."""
    if not e.is_seeded():
        return e
    return ErrorSpec(e.model, targets=_draw_targets(r, e))


def apply(r: Readout, e: ErrorSpec) -> Readout:
    """Corrupted copy of r; untargeted classes are untouched."""
    e = resolve(r, e)
    n = r.n
    if e.model == "asym_delete":
        classes = _validate_asym_targets(e.targets, n)
        for k in classes:
            if not r.present(k):
                raise InvalidErrorSpecError(f"class {k} already absent")
        return r.restrict(classes)
    if e.model == "sym_pair_delete":
        pairs = _validate_pair_targets(e.targets, n)
        drop = [k for pair in pairs for k in pair]
        for k in drop:
            if not r.present(k):
                raise InvalidErrorSpecError(f"class {k} already absent")
        return r.restrict(drop)
    if e.model == "insert":
        inserts = _validate_insert_targets(e.targets, n)
        out = r.copy()
        for k, comp in inserts:
            out.classes.setdefault(k, Counter())[comp] += 1
        return out
    skews = _validate_skew_targets(e.targets, n)
    out = r.copy()
    for k, old, new in skews:
        if not r.present(k) or out.classes[k][old] < 1:
            raise InvalidErrorSpecError(f"no entry {old} in class {k}")
        out.classes[k][old] -= 1
        if out.classes[k][old] == 0:
            del out.classes[k][old]
        out.classes[k][new] += 1
    return out
