"""Fusing-string generators of the pure virtual singular braid subgroup.

For an ordered pair of distinct strands (i, j) there are two generators:

    m[i,j]  the strand-i-over-strand-j regular fusing string
    g[i,j]  its singular companion

with inverses written M[i,j] and G[i,j].  Uppercase is only an exponent
marker; m[i,j] and m[j,i] are different generators.

In terms of crossings, with a = min(i,j), b = max(i,j):

    m[a,b] = (v_{b-1} .. v_{a+1})  s_a v_a  (v_{a+1} .. v_{b-1})
    m[b,a] = (v_{b-1} .. v_{a+1})  v_a s_a  (v_{a+1} .. v_{b-1})

and likewise with t_a for g.  These expansions are freely reduced, and
inverting a generator reverses and inverts its expansion letterwise; the
certificate machinery relies on both facts.

A fusing word is a sequence of such generators; it always lies in the
pure subgroup (every expansion has trivial strand permutation).
"""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass

from .errors import BraidSyntaxError, IndexRangeError
from .perms import Permutation
from .words import BraidWord, GeneratorLetter, Kind, encode_letter

__all__ = [
    "Family",
    "FusingLetter",
    "FusingWord",
    "parse_fusing_word",
    "format_fusing_word",
    "mu",
    "gamma",
    "expand_letter",
    "expand_fusing",
    "expand_fusing_raw",
    "act_permutation",
    "fusing_free_reduce",
    "invert_fusing",
    "PureDecomposition",
    "to_pure_times_coset",
    "FusingAlphabet",
]


class Family(enum.Enum):
    MU = "m"
    GAMMA = "g"


@dataclass(frozen=True)
class FusingLetter:
    """One fusing generator with an exponent."""

    family: Family
    i: int
    j: int
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.i == self.j or self.i < 1 or self.j < 1:
            raise IndexRangeError(
                f"fusing indices must be distinct positive strands, "
                f"got ({self.i},{self.j})")
        if self.exponent not in (1, -1):
            raise IndexRangeError(f"exponent must be +1 or -1, got {self.exponent}")

    @property
    def level(self) -> int:
        return max(self.i, self.j) - 1

    @property
    def ascending(self) -> bool:
        return self.i < self.j

    def inverse(self) -> "FusingLetter":
        return FusingLetter(self.family, self.i, self.j, -self.exponent)

    def __str__(self) -> str:
        ch = self.family.value
        if self.exponent < 0:
            ch = ch.upper()
        return f"{ch}[{self.i},{self.j}]"


def mu(i: int, j: int, exponent: int = 1) -> FusingLetter:
    return FusingLetter(Family.MU, i, j, exponent)


def gamma(i: int, j: int, exponent: int = 1) -> FusingLetter:
    return FusingLetter(Family.GAMMA, i, j, exponent)


@dataclass(frozen=True)
class FusingWord:
    """An immutable word in the fusing generators on a fixed strand count."""

    strands: int
    letters: tuple[FusingLetter, ...] = ()

    def __post_init__(self) -> None:
        for letter in self.letters:
            if max(letter.i, letter.j) > self.strands:
                raise IndexRangeError(
                    f"letter {letter} needs {max(letter.i, letter.j)} strands, "
                    f"word has {self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return format_fusing_word(self)


_FUSING_TOKEN_RE = re.compile(r"([mMgG])\[(\d+),(\d+)\]\Z")


def parse_fusing_word(text: str, strands: int) -> FusingWord:
    """Parse whitespace-separated fusing tokens; empty is the identity."""
    letters = []
    for pos, token in enumerate(text.split()):
        m = _FUSING_TOKEN_RE.match(token)
        if m is None:
            raise BraidSyntaxError(
                f"bad token {token!r} at position {pos}: expected "
                "m[i,j], M[i,j], g[i,j] or G[i,j]")
        ch, si, sj = m.groups()
        family = Family(ch.lower())
        exponent = -1 if ch.isupper() else 1
        i, j = int(si), int(sj)
        if max(i, j) > strands:
            raise IndexRangeError(
                f"token {token!r} at position {pos}: strand {max(i, j)} out "
                f"of range for {strands} strands")
        letters.append(FusingLetter(family, i, j, exponent))
    return FusingWord(strands, tuple(letters))


def format_fusing_word(word: FusingWord) -> str:
    return " ".join(str(letter) for letter in word)


def expand_letter(letter: FusingLetter, strands: int) -> BraidWord:
    """The crossing word of one fusing generator (already freely reduced)."""
    a, b = min(letter.i, letter.j), max(letter.i, letter.j)
    if b > strands:
        raise IndexRangeError(f"{letter} does not fit on {strands} strands")
    core_kind = Kind.SIGMA if letter.family is Family.MU else Kind.TAU
    crossing = GeneratorLetter(core_kind, a, letter.exponent)
    va = GeneratorLetter(Kind.V, a)
    if letter.ascending == (letter.exponent > 0):
        core = [crossing, va]
    else:
        core = [va, crossing]
    wings = [GeneratorLetter(Kind.V, k) for k in range(b - 1, a, -1)]
    letters = wings + core + wings[::-1]
    return BraidWord(strands, bytes(encode_letter(l) for l in letters))


def expand_fusing_raw(word: FusingWord) -> BraidWord:
    """Concatenation of the letter expansions, with no reduction across
    letter boundaries."""
    codes = b"".join(expand_letter(l, word.strands).codes for l in word.letters)
    return BraidWord(word.strands, codes)


def expand_fusing(word: FusingWord) -> BraidWord:
    """The freely reduced crossing word of a fusing word."""
    from .words import free_reduce

    return free_reduce(expand_fusing_raw(word))


def act_permutation(perm: Permutation, word: FusingWord | FusingLetter):
    """Relabel strand indices by a permutation.

    This is the conjugation action of the strand permutations: if c is
    the coset-representative word of perm, then c^-1 expand(g) c equals
    expand(act_permutation(perm, g)) in the group.
    """
    if isinstance(word, FusingLetter):
        return FusingLetter(word.family, perm(word.i), perm(word.j),
                            word.exponent)
    if perm.size != word.strands:
        raise IndexRangeError(
            f"permutation of size {perm.size} cannot act on {word.strands} "
            "strands")
    return FusingWord(word.strands,
                      tuple(act_permutation(perm, l) for l in word.letters))


def fusing_free_reduce(word: FusingWord) -> FusingWord:
    """Cancel adjacent inverse pairs of fusing generators."""
    stack: list[FusingLetter] = []
    for letter in word.letters:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return FusingWord(word.strands, tuple(stack))


def invert_fusing(word: FusingWord) -> FusingWord:
    return FusingWord(word.strands,
                      tuple(l.inverse() for l in reversed(word.letters)))


@dataclass(frozen=True)
class PureDecomposition:
    """A crossing word split as (pure fusing word) * (coset representative).

    The product expand(pure) * coset.braid_word is equivalent to the
    original word, and pure is freely reduced.
    """

    pure: FusingWord
    coset: "SchreierWord"

    def __iter__(self):
        # Allow tuple unpacking: pure, coset = to_pure_times_coset(w)
        return iter((self.pure, self.coset))


def to_pure_times_coset(word: BraidWord) -> PureDecomposition:
    """Split a crossing word as (pure fusing word) * (coset representative).

    Same sweep as _sweep_raw, but the pure part comes back freely
    reduced, which is the form everything downstream wants.
    """
    raw, coset = _sweep_raw(word)
    return PureDecomposition(fusing_free_reduce(raw), coset)


def _sweep_raw(word: BraidWord) -> "tuple[FusingWord, SchreierWord]":
    """Left-to-right sweep behind to_pure_times_coset, without reduction.

    Crossings absorb a virtual crossing to become fusing strings
    (s_i = m[i,i+1] v_i and inverses/singulars likewise); each fusing
    string is then pushed left through the accumulated block of virtual
    crossings, which relabels its strand pair by the inverse of the
    block's permutation.  The leftover block of virtual crossings equals
    its canonical representative in the group, which is what gets
    returned.  The unreduced output has one fusing letter per crossing,
    a property the certificate layer depends on.
    """
    from .perms import permutation_of, schreier_representative

    n = word.strands
    pure: list[FusingLetter] = []
    # q = inverse of the accumulated v-block's permutation, as the image
    # list q(1..n).  Appending v_i to the block post-composes the block's
    # permutation with (i i+1), so q gains a pre-composition: swap the
    # ENTRIES at positions i, i+1.
    q = list(range(1, n + 1))

    def absorb_v(i: int) -> None:
        q[i - 1], q[i] = q[i], q[i - 1]

    for letter in word:
        i = letter.index
        if letter.kind is Kind.V:
            absorb_v(i)
            continue
        family = Family.MU if letter.kind is Kind.SIGMA else Family.GAMMA
        if letter.exponent < 0:
            # s_i^-1 = v_i M[i,i+1]: the virtual crossing joins the block
            # first, so the letter is relabeled by the extended block.
            absorb_v(i)
            pure.append(FusingLetter(family, q[i - 1], q[i], -1))
        else:
            pure.append(FusingLetter(family, q[i - 1], q[i], 1))
            absorb_v(i)
    coset = schreier_representative(permutation_of(word), n)
    return FusingWord(n, tuple(pure)), coset


class FusingAlphabet:
    """Byte codes for the fusing generators on a fixed strand count.

    The search and chain machinery runs on bytes at the fusing level too;
    4 n (n-1) codes fit in a byte for every supported n.
    """

    def __init__(self, strands: int):
        if strands > 8:
            raise IndexRangeError(
                f"fusing byte alphabet supports n <= 8, got {strands}")
        self.strands = strands
        letters: list[FusingLetter] = []
        for fam in (Family.MU, Family.GAMMA):
            for i in range(1, strands + 1):
                for j in range(1, strands + 1):
                    if i == j:
                        continue
                    for e in (1, -1):
                        letters.append(FusingLetter(fam, i, j, e))
        self.letters: tuple[FusingLetter, ...] = tuple(letters)
        self.code_of: dict[FusingLetter, int] = {
            l: c for c, l in enumerate(letters)}
        inv = list(range(256))
        for l, c in self.code_of.items():
            inv[c] = self.code_of[l.inverse()]
        self.inverse_table = bytes(inv)

    def encode(self, word: FusingWord) -> bytes:
        return bytes(self.code_of[l] for l in word.letters)

    def decode(self, codes: bytes) -> FusingWord:
        return FusingWord(self.strands,
                          tuple(self.letters[c] for c in codes))


@functools.lru_cache(maxsize=None)
def fusing_alphabet(strands: int) -> FusingAlphabet:
    return FusingAlphabet(strands)


# Imported late to avoid a cycle at module load; used in the signature of
# to_pure_times_coset only.
from .perms import SchreierWord  # noqa: E402
