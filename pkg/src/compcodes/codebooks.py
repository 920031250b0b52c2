"""Codebook families: membership, enumeration, rank/unrank, size bounds.

Families
--------
SR        reconstruction code: fixed endpoints plus a Catalan-Bertrand
          constraint on the bits at anti-symmetric mirror positions.
SCA1      single-substitution code (odd lengths): an SR core with two
          extra bits, even total weight and a mod-3 weight-sum residue.
SDA       t-asymmetric-deletion code: SR shape with at least t anti-
          symmetric positions and a t-dominated prefix constraint.
SDS2      2-symmetric-pair-deletion code: SR plus a mod-7 residue on the
          first-half weight sum.
SDSprime  t-consecutive-symmetric-pair-deletion code: SR plus a residue
          modulo A(t) on the first-half weight sum.

Encoding is enumerative: rank/unrank index the lexicographic member list.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import kernel
from .core import check_bits, signature_of
from .errors import ResourceCapError

FAMILIES = ("SR", "SCA1", "SDA", "SDS2", "SDSprime")

ENUMERATION_CAP = 26


def modulus_A(t: int) -> int:
    """Residue modulus for the consecutive-pair family: ceil(4t^3/3 + 2t/3 - 31/4)."""
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    num = 16 * t ** 3 + 8 * t - 93  # over denominator 12
    return -(-num // 12)


@dataclass(frozen=True)
class CodebookSpec:
    """Family tag plus parameters; the modulus is always derived."""

    family: str
    n: int
    t: int = 1
    a: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.family in ("SR", "SCA1", "SDS2") and self.t != 1:
            raise ValueError(f"{self.family} takes no t parameter (fixed 1)")
        if self.family == "SDA" and self.t < 1:
            raise ValueError("SDA requires t >= 1")
        if self.family == "SDSprime":
            if self.t < 2:
                raise ValueError("SDSprime requires t >= 2")
            if self.n < 2 * self.t + 4:
                raise ValueError("SDSprime requires n >= 2t + 4")
        if self.family in ("SR", "SDA") and self.a != 0:
            raise ValueError(f"{self.family} takes no residue parameter")
        mod = self.modulus
        if mod is not None and not 0 <= self.a < mod:
            raise ValueError(f"residue a={self.a} outside [0, {mod})")

    @property
    def modulus(self) -> int | None:
        if self.family == "SDS2":
            return 7
        if self.family == "SDSprime":
            return modulus_A(self.t)
        if self.family == "SCA1":
            return 3
        return None

    def key(self) -> tuple:
        return (self.family, self.n, self.t, self.a)


def is_catalan_bertrand(x: str) -> bool:
    """True iff every nonempty prefix has strictly more zeros than ones."""
    diff = 0
    for c in x:
        diff += 1 if c == "0" else -1
        if diff < 1:
            return False
    return True


def is_t_dominated(x: str, t: int) -> bool:
    """True iff every prefix of length >= t has at least t more zeros than ones.

    Prefixes shorter than t are unconstrained; the length-t condition
    already forces them to be all zeros.  For t=1 this is exactly the
    strict Catalan-Bertrand condition.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    diff = 0
    for i, c in enumerate(x):
        diff += 1 if c == "0" else -1
        if i + 1 >= t and diff < t:
            return False
    return True


def antisymmetric_index_set(s: str) -> frozenset[int]:
    """First-half positions i in {2..floor(n/2)} with s_i != s_{n+1-i}.

    The existential index set of the SR definition is forced by the
    equal/unequal dichotomy, so it is computed, never guessed.
    """
    n = len(s)
    return frozenset(i for i in range(2, n // 2 + 1) if s[i - 1] != s[n - i])


def _selected_substring(s: str) -> str:
    return "".join(s[i - 1] for i in sorted(antisymmetric_index_set(s)))


def _strip_center(s: str) -> str:
    n = len(s)
    return s[: (n - 1) // 2] + s[(n + 1) // 2:]


def _is_sr(s: str) -> bool:
    n = len(s)
    if n % 2:
        return n >= 3 and _is_sr(_strip_center(s))
    if s[0] != "0" or s[-1] != "1":
        return False
    return is_catalan_bertrand(_selected_substring(s))


def _is_sda(s: str, t: int) -> bool:
    n = len(s)
    if n % 2:
        return n >= 3 and _is_sda(_strip_center(s), t)
    if s[0] != "0" or s[-1] != "1":
        return False
    idx = antisymmetric_index_set(s)
    if len(idx) < t:
        return False
    return is_t_dominated(_selected_substring(s), t)


def weight_sum_mod(s: str, modulus: int) -> int:
    """Sum of the first ceil(n/2) cumulative weights, reduced mod modulus."""
    n = len(s)
    sig = signature_of(s)
    weights = kernel.weights_from_signature(sig, n)
    return sum(weights[: (n + 1) // 2]) % modulus


def _sca1_parts(s: str) -> tuple[str, str, str]:
    """Split a candidate codeword into (inner string, bit 2, bit n-1)."""
    n = len(s)
    return s[0] + s[2: n - 2] + s[-1], s[1], s[-2]


def _is_sca1(s: str, a: int) -> bool:
    n = len(s)
    if n < 4:
        return False
    inner, star1, star2 = _sca1_parts(s)
    if not _is_sr(inner):
        return False
    if star1 > star2:
        return False
    if s.count("1") % 2:
        return False
    return weight_sum_mod(s, 3) == a


def is_member(spec: CodebookSpec, s: str) -> bool:
    """Evaluate the family membership predicate."""
    check_bits(s)
    if len(s) != spec.n:
        raise ValueError(f"string length {len(s)} != spec n {spec.n}")
    if spec.family == "SR":
        return _is_sr(s)
    if spec.family == "SDA":
        return _is_sda(s, spec.t)
    if spec.family == "SDS2":
        return _is_sr(s) and weight_sum_mod(s, 7) == spec.a
    if spec.family == "SDSprime":
        return _is_sr(s) and weight_sum_mod(s, spec.modulus) == spec.a
    return _is_sca1(s, spec.a)


def catalan_bertrand_strings(length: int) -> list[str]:
    """All Catalan-Bertrand strings of the given length, lexicographic."""
    out: list[str] = []

    def rec(prefix: list[str], diff: int):
        if len(prefix) == length:
            out.append("".join(prefix))
            return
        prefix.append("0")
        rec(prefix, diff + 1)
        prefix.pop()
        if diff >= 2:
            prefix.append("1")
            rec(prefix, diff - 1)
            prefix.pop()

    rec([], 0)
    return out


def _dominated_strings(length: int, t: int) -> list[str]:
    """Strings whose length->=t prefixes hold at least t more zeros than ones."""
    if length < t:
        return []
    return ["0" * (t - 1) + tail for tail in catalan_bertrand_strings(length - t + 1)]


def _mirror_family_even(n: int, min_idx: int, selected_strings) -> list[str]:
    """Members of an SR-shaped even-length family.

    Bits at anti-symmetric positions come from ``selected_strings(size)``;
    bits at mirror-equal positions are free.
    """
    half = n // 2
    positions = list(range(2, half + 1))
    members = []
    for mask in range(1 << len(positions)):
        idx = [p for b, p in enumerate(positions) if mask >> b & 1]
        if len(idx) < min_idx:
            continue
        free = [p for p in positions if p not in idx]
        for sel in selected_strings(len(idx)):
            for fmask in range(1 << len(free)):
                bits = [""] * n
                bits[0], bits[n - 1] = "0", "1"
                for b, p in zip(sel, idx):
                    bits[p - 1] = b
                    bits[n - p] = "1" if b == "0" else "0"
                for b, p in enumerate(free):
                    v = "1" if fmask >> b & 1 else "0"
                    bits[p - 1] = v
                    bits[n - p] = v
                members.append("".join(bits))
    return members


def _insert_centers(members: list[str]) -> list[str]:
    out = []
    for s in members:
        h = len(s) // 2
        out.append(s[:h] + "0" + s[h:])
        out.append(s[:h] + "1" + s[h:])
    return out


@lru_cache(maxsize=None)
def _members(key: tuple) -> tuple[str, ...]:
    family, n, t, a = key
    if family == "SR":
        if n % 2:
            raw = _insert_centers(list(_members(("SR", n - 1, 1, 0))))
        else:
            raw = _mirror_family_even(n, 0, catalan_bertrand_strings)
    elif family == "SDA":
        if n % 2:
            raw = _insert_centers(list(_members(("SDA", n - 1, t, 0))))
        else:
            raw = _mirror_family_even(n, t, lambda sz: _dominated_strings(sz, t))
    elif family == "SDS2":
        raw = [s for s in _members(("SR", n, 1, 0)) if weight_sum_mod(s, 7) == a]
    elif family == "SDSprime":
        mod = modulus_A(t)
        raw = [s for s in _members(("SR", n, 1, 0)) if weight_sum_mod(s, mod) == a]
    else:  # SCA1
        raw = []
        for inner in _members(("SR", n - 2, 1, 0)):
            for star1, star2 in (("0", "0"), ("0", "1"), ("1", "1")):
                cand = inner[0] + star1 + inner[1: n - 3] + star2 + inner[-1]
                if cand.count("1") % 2 == 0 and weight_sum_mod(cand, 3) == a:
                    raw.append(cand)
    return tuple(sorted(raw))


def _check_cap(spec: CodebookSpec):
    if spec.n > ENUMERATION_CAP:
        raise ResourceCapError(
            f"enumeration capped at n <= {ENUMERATION_CAP}, got n={spec.n}")


def enumerate_codebook(spec: CodebookSpec) -> tuple[str, ...]:
    """All members in lexicographic order."""
    _check_cap(spec)
    return _members(spec.key())


def size(spec: CodebookSpec) -> int:
    return len(enumerate_codebook(spec))


def rank(spec: CodebookSpec, s: str) -> int:
    """Index of s in the lexicographic member list."""
    members = enumerate_codebook(spec)
    pos = bisect_left(members, s)
    if pos == len(members) or members[pos] != s:
        raise ValueError(f"{s} is not a member of {spec}")
    return pos


def unrank(spec: CodebookSpec, index: int) -> str:
    """Member at the given lexicographic index."""
    members = enumerate_codebook(spec)
    if not 0 <= index < len(members):
        raise ValueError(f"index {index} outside [0, {len(members)})")
    return members[index]


def redundancy_bound(spec: CodebookSpec) -> float:
    """Published upper bound on n - log2(codebook size) for the family."""
    n, t = spec.n, spec.t
    if spec.family == "SR":
        return 0.5 * math.log2(n) + 5
    if spec.family == "SCA1":
        return 0.5 * math.log2(n - 2) + 8
    if spec.family == "SDA":
        return 0.5 * math.log2(n - 2 * t) + 2 * t + 3
    if spec.family == "SDS2":
        return 0.5 * math.log2(n - 2) + 8
    return 0.5 * math.log2(n - 2) + math.log2(modulus_A(t)) + 5


def size_lower_bound(spec: CodebookSpec) -> float:
    """Binomial-sum lower bound on the SDA codebook size (even n)."""
    if spec.family != "SDA":
        raise ValueError("size lower bound is defined for the SDA family only")
    n, t = spec.n, spec.t
    if n % 2:
        raise ValueError("the counting bound is stated for even n")
    half = n // 2
    total = Fraction(0)
    for i in range(t, half):
        total += (Fraction(2) ** (half - 2 - i)
                  * math.comb(half - 1, i)
                  * math.comb(i - t + 1, (i - t + 1) // 2))
    return float(total)


def measured_redundancy(spec: CodebookSpec) -> float:
    """n - log2(enumerated size); infinite for an empty codebook."""
    count = size(spec)
    if count == 0:
        return math.inf
    return spec.n - math.log2(count)
