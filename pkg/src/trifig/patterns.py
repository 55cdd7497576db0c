"""Pairing patterns: equal-angle constraint schemes around an interior vertex.

A pattern for a fan of n triangles is a circular sequence of n ordered letter
pairs in which each letter occurs exactly once as a first element and once as
a second element.  Reading pair i as (entering angle, exiting angle) of fan
triangle i, equal letters dictate equal angle sizes, which forces the two rim
multisets to agree and so certifies realizability by the pairing route.

Two patterns are equivalent when one maps to the other by relabeling letters,
rotating the circular sequence, or reversing the fan direction (which reverses
the sequence and swaps the roles within each pair).  This relation reproduces
the published censuses: 4 classes for n=3 and 10 for n=4.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

_LETTERS = "ABCDEFGH"
MAX_FAN = 8


@dataclass(frozen=True)
class PairingPattern:
    pairs: tuple[tuple[int, int], ...]  # letters as 0-based ints

    @classmethod
    def parse(cls, text: str) -> "PairingPattern":
        """Parse e.g. 'AB BC CA' (whitespace-separated two-letter pairs)."""
        chunks = text.split()
        pairs = []
        for chunk in chunks:
            if len(chunk) != 2 or not all(ch in _LETTERS for ch in chunk.upper()):
                raise ValueError(f"bad pair {chunk!r}")
            pairs.append((_LETTERS.index(chunk[0].upper()),
                          _LETTERS.index(chunk[1].upper())))
        p = cls(tuple(pairs))
        p.validate()
        return p

    def validate(self) -> None:
        n = len(self.pairs)
        firsts = sorted(a for a, _ in self.pairs)
        seconds = sorted(b for _, b in self.pairs)
        letters = sorted(set(firsts))
        if firsts != letters * 1 or len(firsts) != n or firsts != seconds or \
                len(set(firsts)) != n:
            raise ValueError(
                "each letter must occur exactly once as a first element "
                "and once as a second element")

    def signature(self) -> str:
        """'s' where a pair's two letters agree, 'd' otherwise."""
        return "".join("s" if a == b else "d" for a, b in self.pairs)

    def __str__(self) -> str:
        return " ".join(_LETTERS[a] + _LETTERS[b] for a, b in self.pairs)


def _relabel_canonical(pairs):
    """Rename letters in first-occurrence order (reading f1 s1 f2 s2 ...)."""
    mapping: dict[int, int] = {}
    for a, b in pairs:
        for x in (a, b):
            if x not in mapping:
                mapping[x] = len(mapping)
    return tuple((mapping[a], mapping[b]) for a, b in pairs)


def _orbit_forms(pairs):
    """All rotation x reversal images, each relabel-canonicalized."""
    n = len(pairs)
    forms = []
    seq = list(pairs)
    rev = [(b, a) for a, b in reversed(seq)]  # reversed walk swaps enter/exit roles
    for base in (seq, rev):
        for r in range(n):
            rotated = tuple(base[(i + r) % n] for i in range(n))
            forms.append(_relabel_canonical(rotated))
    return forms


def canonical_form(pattern: PairingPattern) -> PairingPattern:
    """Lexicographic minimum over the rotation/reversal/relabeling orbit."""
    pattern.validate()
    return PairingPattern(min(_orbit_forms(pattern.pairs)))


@dataclass(frozen=True)
class PatternClass:
    canonical: PairingPattern
    signature: str
    members: int  # raw patterns (over an n-letter alphabet) in the class

    def __str__(self) -> str:
        return f"{self.canonical}  [{self.signature}]  members={self.members}"


def classify_pattern(pattern: PairingPattern) -> PatternClass:
    canon = canonical_form(pattern)
    orbit = set(_orbit_forms(pattern.pairs))
    n = len(pattern.pairs)
    nfact = 1
    for k in range(2, n + 1):
        nfact *= k
    return PatternClass(canon, canon.signature(), members=len(orbit) * nfact)


def enumerate_patterns(n: int) -> list[PatternClass]:
    """All pattern classes for a fan of n triangles.

    Raw patterns over an n-letter alphabet come in relabeling orbits of size
    n!, one per permutation p with pairs (i, p(i)); rotation and reversal then
    glue those orbits into classes.  Classes are sorted by signature (more
    'same' pairs first) and then by canonical form.
    """
    if not (2 <= n <= MAX_FAN):
        raise ValueError(f"n must be between 2 and {MAX_FAN}")
    seen: dict[tuple, set] = {}
    for perm in itertools.permutations(range(n)):
        pairs = tuple((i, perm[i]) for i in range(n))
        canon = min(_orbit_forms(pairs))
        seen.setdefault(canon, set()).add(_relabel_canonical(pairs))
    nfact = 1
    for k in range(2, n + 1):
        nfact *= k
    classes = [
        PatternClass(PairingPattern(canon), PairingPattern(canon).signature(),
                     members=len(orbit) * nfact)
        for canon, orbit in seen.items()
    ]
    classes.sort(key=lambda c: (c.signature.count("d"), c.signature, str(c.canonical)))
    return classes


def pattern_to_constraints(pattern: PairingPattern):
    """Equal-angle constraints the pattern imposes on a fan of n triangles.

    Returns one constraint per letter: ((i, 'enter'), (j, 'exit')) meaning the
    entering rim angle of fan triangle i equals the exiting rim angle of fan
    triangle j.
    """
    pattern.validate()
    constraints = []
    letters = sorted({a for a, _ in pattern.pairs})
    for letter in letters:
        i = next(k for k, (a, _) in enumerate(pattern.pairs) if a == letter)
        j = next(k for k, (_, b) in enumerate(pattern.pairs) if b == letter)
        constraints.append(((i, "enter"), (j, "exit")))
    return constraints
