"""Bracketed words over a generator list.

A word is either a 1-based letter index (a leaf) or a pair
``(left, right)`` of words; distinct bracketings are distinct words.
Two enumeration regimes are provided: the full one (every bracket shape
times every letter assignment) and the restricted one (words grown one
left- or right-multiplication by a single letter at a time).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import IndexOutOfRange, ParseError, ResourceLimit

Word = object  # int leaf or (Word, Word) pair

DEFAULT_WORD_CAP = 2_000_000


@dataclass(frozen=True)
class GeneratorSet:
    """An ordered list of algebra elements used as letters."""

    elements: tuple
    labels: tuple | None = None

    def __len__(self):
        return len(self.elements)

    @property
    def has_duplicates(self) -> bool:
        return len(set(self.elements)) < len(self.elements)


def generator_set(elements, labels=None) -> GeneratorSet:
    return GeneratorSet(tuple(elements), tuple(labels) if labels else None)


def word_length(w: Word) -> int:
    if isinstance(w, int):
        return 1
    return word_length(w[0]) + word_length(w[1])


def word_letters(w: Word) -> list:
    """Letter indices in left-to-right leaf order."""
    if isinstance(w, int):
        return [w]
    return word_letters(w[0]) + word_letters(w[1])


def evaluate(algebra, gens, w: Word):
    """Product of the generator elements respecting the bracketing of w."""
    elements = gens.elements if isinstance(gens, GeneratorSet) else tuple(gens)
    n = len(elements)

    def rec(t):
        if isinstance(t, int):
            if not 1 <= t <= n:
                raise IndexOutOfRange(f"letter {t} with {n} generators")
            return elements[t - 1]
        return algebra.multiply(rec(t[0]), rec(t[1]))

    return rec(w)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n == 0:
        return 1
    return catalan(n - 1) * 2 * (2 * n - 1) // (n + 1)


def _shapes(m: int):
    """All bracket shapes with m leaves; leaves are None placeholders.

    Ordered by the size of the left factor, recursively, which fixes the
    enumeration order of everything built on top.
    """
    if m == 1:
        yield None
        return
    for i in range(1, m):
        for left in _shapes(i):
            for right in _shapes(m - i):
                yield (left, right)


def _fill(shape, letters, pos=0):
    if shape is None:
        return letters[pos], pos + 1
    left, pos = _fill(shape[0], letters, pos)
    right, pos = _fill(shape[1], letters, pos)
    return (left, right), pos


def count_full(s_size: int, m: int) -> int:
    return catalan(m - 1) * s_size**m


def enumerate_full(s_size: int, m: int, cap: int | None = DEFAULT_WORD_CAP):
    """Every word of length exactly m: Catalan(m-1) shapes x s_size^m letters."""
    if m < 1:
        raise ValueError("word length must be >= 1")
    if cap is not None and count_full(s_size, m) > cap:
        raise ResourceLimit(f"{count_full(s_size, m)} words of length {m} exceed cap {cap}")
    for shape in _shapes(m):
        for letters in product(range(1, s_size + 1), repeat=m):
            word, _ = _fill(shape, letters, 0)
            yield word


def enumerate_restricted(s_size: int, m: int, cap: int | None = DEFAULT_WORD_CAP):
    """Words built by one single-letter multiplication (left or right) per step.

    Every word is a chain X_1 ... X_{m-1} applied to an innermost letter,
    each X_i a left or right multiplication by one letter.  The raw chain
    count is 2^(m-1) * s_size^m; chains describing the same labelled tree
    are collapsed, and each distinct tree is yielded once in first-seen
    order (letters lexicographic, then L-before-R patterns).
    """
    if m < 1:
        raise ValueError("word length must be >= 1")
    if cap is not None and 2 ** (m - 1) * s_size**m > cap:
        raise ResourceLimit(f"restricted enumeration at length {m} exceeds cap {cap}")
    seen = set()
    for letters in product(range(1, s_size + 1), repeat=m):
        for pattern in product("LR", repeat=m - 1):
            w = letters[-1]
            for i in range(m - 2, -1, -1):
                w = (letters[i], w) if pattern[i] == "L" else (w, letters[i])
            if w not in seen:
                seen.add(w)
                yield w


def is_restricted(w: Word) -> bool:
    """True when some factor is a single letter at every level."""
    if isinstance(w, int):
        return True
    left, right = w
    if isinstance(left, int) and isinstance(right, int):
        return True
    if isinstance(left, int):
        return is_restricted(right)
    if isinstance(right, int):
        return is_restricted(left)
    return False


def format_word(w: Word) -> str:
    if isinstance(w, int):
        return str(w)
    return f"({format_word(w[0])} {format_word(w[1])})"


def parse_word(text: str) -> Word:
    """Parse parenthesized 1-based letter indices, e.g. ``((1 2) 3)``."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def need(tok):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            raise ParseError(f"expected {tok!r} in word {text!r}")
        pos += 1

    def rec():
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError(f"unexpected end of word {text!r}")
        tok = tokens[pos]
        if tok == "(":
            pos += 1
            left = rec()
            right = rec()
            need(")")
            return (left, right)
        if tok.isdigit() and int(tok) >= 1:
            pos += 1
            return int(tok)
        raise ParseError(f"bad token {tok!r} in word {text!r}")

    w = rec()
    if pos != len(tokens):
        raise ParseError(f"trailing tokens in word {text!r}")
    return w
