"""Exact arithmetic on +/-1 sequences.

Sequences are plain tuples of +1/-1 ints.  All functions are pure and
return new tuples, so values are hashable and safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

Seq = tuple  # tuple of +1/-1 ints, index 0 = position 1

_CHAR_TO_SIGN = {"+": 1, "-": -1, "−": -1}  # accept U+2212 minus on input


def seq(values: Iterable[int]) -> Seq:
    """Validate and freeze a +/-1 sequence."""
    t = tuple(values)
    if not t:
        raise ValueError("sequence must be non-empty")
    for v in t:
        if v != 1 and v != -1:
            raise ValueError(f"sequence element {v!r} is not +1/-1")
    return t


def from_string(text: str) -> Seq:
    """Parse a '+'/'-' string (leftmost character = position 1)."""
    try:
        return seq(_CHAR_TO_SIGN[ch] for ch in text)
    except KeyError as exc:
        raise ValueError(f"bad sign character {exc.args[0]!r} in {text!r}") from None


def to_string(x: Seq) -> str:
    return "".join("+" if v > 0 else "-" for v in x)


def npaf(x: Seq) -> tuple:
    """Non-periodic autocorrelation at lags 1..len(x)-1 (exact ints).

    Out-of-range terms count as zero; a length-1 sequence has no
    positive lags and yields the empty tuple.
    """
    ln = len(x)
    return tuple(
        sum(x[j] * x[j + i] for j in range(ln - i)) for i in range(1, ln)
    )


def seq_sum(x: Seq) -> int:
    """Sum of the elements, i.e. the value X(1)."""
    return sum(x)


def alt_sum(x: Seq) -> int:
    """Alternating sum x_1 - x_2 + x_3 - ..., i.e. the value X(-1)."""
    return sum(v if i % 2 == 0 else -v for i, v in enumerate(x))


def negate(x: Seq) -> Seq:
    return tuple(-v for v in x)


def reverse(x: Seq) -> Seq:
    return x[::-1]


def alternate(x: Seq) -> Seq:
    """x*_i = (-1)^(i-1) x_i (1-based)."""
    return tuple(v if i % 2 == 0 else -v for i, v in enumerate(x))


def alpha(a: Seq) -> Seq:
    """The partner sequence B of A: b_i = (-1)^(i-1) a_i for i <= n and
    b_{n+1} = -a_{n+1}, where len(a) = n+1.  An involution on odd lengths."""
    if len(a) % 2 == 0:
        raise ValueError("alpha requires an odd-length sequence")
    b = list(alternate(a))
    b[-1] = -a[-1]
    return tuple(b)


@dataclass(frozen=True)
class Quadruple:
    """Four +/-1 sequences (A;B;C;D) with len A = len B, len C = len D."""

    a: Seq
    b: Seq
    c: Seq
    d: Seq

    def __post_init__(self):
        object.__setattr__(self, "a", seq(self.a))
        object.__setattr__(self, "b", seq(self.b))
        object.__setattr__(self, "c", seq(self.c))
        object.__setattr__(self, "d", seq(self.d))
        if len(self.a) != len(self.b):
            raise ValueError("A and B must have equal length")
        if len(self.c) != len(self.d):
            raise ValueError("C and D must have equal length")

    @property
    def m(self) -> int:
        return len(self.a)

    @property
    def n(self) -> int:
        return len(self.c)

    def __str__(self):
        return ";".join(to_string(s) for s in (self.a, self.b, self.c, self.d))


def bs_defect(q: Quadruple) -> tuple:
    """Per-lag sums N_A(i)+N_B(i)+N_C(i)+N_D(i) for i = 1..max(m,n)-1.

    All-zero exactly when q is a set of base sequences; nonzero entries
    are useful for search pruning and diagnostics.
    """
    lags = max(q.m, q.n) - 1
    parts = [npaf(s) for s in (q.a, q.b, q.c, q.d)]
    return tuple(
        sum(p[i] for p in parts if i < len(p)) for i in range(lags)
    )


def is_base_sequences(q: Quadruple) -> bool:
    """True iff the four NPAFs sum to zero at every positive lag."""
    return not any(bs_defect(q))


def is_near_normal(q: Quadruple) -> bool:
    """True iff q is in BS(n+1,n) with n even and B = alpha(A)."""
    n = q.n
    if q.m != n + 1 or n % 2 != 0:
        return False
    if q.b != alpha(q.a):
        return False
    return is_base_sequences(q)


def make_near_normal(a: Seq, c: Seq, d: Seq) -> Quadruple:
    """Build (A; alpha(A); C; D) and validate it as near-normal."""
    q = Quadruple(seq(a), alpha(seq(a)), c, d)
    if q.m != q.n + 1 or q.n % 2 != 0:
        raise ValueError(f"need len(A) = len(C)+1 and len(C) even, got {q.m},{q.n}")
    if not is_base_sequences(q):
        raise ValueError(f"not base sequences, defect {bs_defect(q)}")
    return q
