"""Lyndon words, Shirshov decompositions and closures, and the orders on
words and super words.

Words are tuples of 1-based generator indices; super words are tuples of
Lyndon words.  Python's tuple comparison is exactly the lexicographic order
with the prefix rule, so plain comparisons are used throughout.
"""

from __future__ import annotations

Word = tuple
SuperWord = tuple


def lex_cmp(u, v) -> int:
    """-1 / 0 / +1 for u < v / u = v / u > v in lexicographic order."""
    if u == v:
        return 0
    return -1 if u < v else 1


def is_lyndon(u) -> bool:
    """Nonempty and strictly smaller than each of its proper endings."""
    if not u:
        return False
    return all(u < u[i:] for i in range(1, len(u)))


def lyndon_up_to(theta: int, n: int):
    """All Lyndon words over 1..theta of length <= n, lexicographically ordered
    (Duval's generation algorithm)."""
    if theta < 1 or n < 1:
        raise ValueError("need theta >= 1 and n >= 1")
    out = []
    w = [1]
    while w:
        out.append(tuple(w))
        # extend periodically to full length, then increment the tail
        w = [w[i % len(w)] for i in range(n)]
        while w and w[-1] == theta:
            w.pop()
        if w:
            w[-1] += 1
    return out


def shirshov_decompose(u):
    """Split u = (v, w) at the lexicographically minimal proper ending w."""
    if len(u) < 2:
        raise ValueError("word must have length >= 2")
    best = 1
    for i in range(2, len(u)):
        if u[i:] < u[best:]:
            best = i
    return u[:best], u[best:]


def longest_lyndon_proper_ending_split(u):
    """The alternative characterization for Lyndon u; must agree with
    shirshov_decompose on Lyndon words."""
    if len(u) < 2:
        raise ValueError("word must have length >= 2")
    for i in range(1, len(u)):
        if is_lyndon(u[i:]):
            return u[:i], u[i:]
    raise ValueError("no Lyndon proper ending")


def is_shirshov_closed(members, theta: int) -> bool:
    s = set(members)
    for u in s:
        if not is_lyndon(u):
            raise ValueError(f"not a Lyndon word: {u}")
        if any(x < 1 or x > theta for x in u):
            raise ValueError(f"letter out of range in {u}")
    for i in range(1, theta + 1):
        if (i,) not in s:
            return False
    for u in s:
        if len(u) >= 2:
            v, w = shirshov_decompose(u)
            if v not in s or w not in s:
                return False
    return True


def shirshov_closure(members, theta: int):
    """Least Shirshov-closed superset, sorted lexicographically."""
    s = set()
    stack = [(i,) for i in range(1, theta + 1)] + list(members)
    while stack:
        u = stack.pop()
        if u in s:
            continue
        if not is_lyndon(u):
            raise ValueError(f"not a Lyndon word: {u}")
        s.add(u)
        if len(u) >= 2:
            stack.extend(shirshov_decompose(u))
    return tuple(sorted(s))


def c_set(members):
    """The Lyndon words uv with u < v in L, Sh(uv) = (u|v), uv not in L."""
    s = set(members)
    out = set()
    for u in s:
        for v in s:
            if u < v:
                w = u + v
                if w not in s and shirshov_decompose(w) == (u, v):
                    out.add(w)
    return tuple(sorted(out))


def xlen(U) -> int:
    """Length of a super word, counted in original letters."""
    return sum(len(u) for u in U)


def prec_cmp(U, V) -> int:
    """The well-founded order on super words: shorter first, then reversed
    lexicographic (U comes earlier when it is lexicographically bigger)."""
    lu, lv = xlen(U), xlen(V)
    if lu != lv:
        return -1 if lu < lv else 1
    if U == V:
        return 0
    return -1 if U > V else 1


def prec_le(U, V) -> bool:
    return prec_cmp(U, V) <= 0


def parse_word(text: str):
    """Word literal: a digit string like "112", or comma-separated indices."""
    text = text.strip()
    if not text:
        raise ValueError("empty word literal")
    if "," in text:
        letters = tuple(int(p) for p in text.split(","))
    else:
        if not text.isdigit():
            raise ValueError(f"bad word literal: {text!r}")
        letters = tuple(int(c) for c in text)
    if any(x < 1 for x in letters):
        raise ValueError(f"letters must be >= 1 in {text!r}")
    return letters


def format_word(u) -> str:
    if any(x > 9 for x in u):
        return ",".join(str(x) for x in u)
    return "".join(str(x) for x in u)
