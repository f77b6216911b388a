"""Digit encoding of sequence pairs and quadruples.

A pair (X;Y) of equal length l is cut into "quads", the 2x2 sign
patterns [x_i x_{l+1-i}; y_i y_{l+1-i}] for i = 1..floor(l/2), plus, for
odd l, the central column [x_{m+1}; y_{m+1}].  Quads are labeled 0-8 and
central columns 0-3; a near-normal quadruple is written "ABcode;CDcode".

The encoding is partial: only 9 of the 16 quad patterns carry a label
(the 8 with entry product +1, plus the pattern [++/+-] as label 0), so
raw un-normalized quadruples may not be encodable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .seqcore import (
    Quadruple,
    Seq,
    alpha,
    is_base_sequences,
    seq,
)


class CodecError(ValueError):
    pass


class UnlabeledQuad(CodecError):
    """A 2x2 sign pattern outside the 9 labeled ones."""


class NotNearNormal(CodecError):
    pass


class NotBaseSequences(CodecError):
    pass


# quad label -> (x_i, x_{l+1-i}, y_i, y_{l+1-i})
QUAD_BY_LABEL = {
    0: (1, 1, 1, -1),
    1: (1, 1, 1, 1),
    2: (1, 1, -1, -1),
    3: (-1, 1, -1, 1),
    4: (1, -1, -1, 1),
    5: (-1, 1, 1, -1),
    6: (1, -1, 1, -1),
    7: (-1, -1, 1, 1),
    8: (-1, -1, -1, -1),
}
LABEL_BY_QUAD = {v: k for k, v in QUAD_BY_LABEL.items()}

# central label -> (x_{m+1}, y_{m+1})
CENTRAL_BY_LABEL = {0: (1, 1), 1: (1, -1), 2: (-1, 1), 3: (-1, -1)}
LABEL_BY_CENTRAL = {v: k for k, v in CENTRAL_BY_LABEL.items()}


def quad_labels(x: Seq, y: Seq) -> tuple:
    """Labels of the quads of (X;Y), excluding any central column."""
    ln = len(x)
    if ln != len(y):
        raise CodecError("pair members must have equal length")
    labels = []
    for i in range(ln // 2):
        pat = (x[i], x[ln - 1 - i], y[i], y[ln - 1 - i])
        try:
            labels.append(LABEL_BY_QUAD[pat])
        except KeyError:
            raise UnlabeledQuad(f"quad {i + 1} pattern {pat} has no label") from None
    return tuple(labels)


def encode_pair(x: Seq, y: Seq) -> str:
    """Encode a pair as quad digits plus, for odd length, a central digit."""
    digits = "".join(str(lab) for lab in quad_labels(x, y))
    ln = len(x)
    if ln % 2 == 1:
        mid = ln // 2
        digits += str(LABEL_BY_CENTRAL[(x[mid], y[mid])])
    return digits


def decode_pair(digits: str, length: int) -> tuple:
    """Inverse of encode_pair for a pair of the given length."""
    nquads = length // 2
    want = nquads + (1 if length % 2 else 0)
    if len(digits) != want:
        raise CodecError(
            f"need {want} digits for length {length}, got {len(digits)}"
        )
    x = [0] * length
    y = [0] * length
    for i in range(nquads):
        try:
            lab = int(digits[i])
            x[i], x[length - 1 - i], y[i], y[length - 1 - i] = QUAD_BY_LABEL[lab]
        except (ValueError, KeyError):
            raise CodecError(f"bad quad digit {digits[i]!r}") from None
    if length % 2 == 1:
        try:
            lab = int(digits[-1])
            x[nquads], y[nquads] = CENTRAL_BY_LABEL[lab]
        except (ValueError, KeyError):
            raise CodecError(f"bad central digit {digits[-1]!r}") from None
    return seq(x), seq(y)


@dataclass(frozen=True)
class NnCode:
    """The "ABcode;CDcode" digit form of a near-normal quadruple.

    ab has m quad digits (0-8) plus one central digit (0-3); cd has m
    quad digits (1-8; 0 never occurs in a (C;D) code); n = 2m.
    """

    ab: str
    cd: str

    def __post_init__(self):
        if len(self.ab) != len(self.cd) + 1:
            raise CodecError(
                f"AB code must have exactly one more digit than CD code, "
                f"got {self.ab!r};{self.cd!r}"
            )
        if not self.cd:
            raise CodecError("CD code must be non-empty")
        for ch in self.ab[:-1]:
            if ch not in "012345678":
                raise CodecError(f"bad AB quad digit {ch!r}")
        if self.ab[-1] not in "0123":
            raise CodecError(f"bad AB central digit {self.ab[-1]!r}")
        for ch in self.cd:
            if ch not in "12345678":
                raise CodecError(f"bad CD quad digit {ch!r}")

    @property
    def n(self) -> int:
        return 2 * len(self.cd)


def parse_code(text: str) -> NnCode:
    """Parse '<ab>;<cd>' (optional whitespace after the ';')."""
    if ";" not in text:
        raise CodecError(f"missing ';' in code {text!r}")
    ab, _, cd = text.partition(";")
    return NnCode(ab.strip(), cd.lstrip())


def format_code(code: NnCode) -> str:
    return f"{code.ab};{code.cd}"


def decode_nn(code: NnCode) -> Quadruple:
    """Decode to a validated near-normal quadruple."""
    n = code.n
    a, b = decode_pair(code.ab, n + 1)
    c, d = decode_pair(code.cd, n)
    if b != alpha(a):
        raise NotNearNormal(f"{format_code(code)}: B is not alpha(A)")
    q = Quadruple(a, b, c, d)
    if not is_base_sequences(q):
        raise NotBaseSequences(f"{format_code(code)}: NPAFs do not cancel")
    return q


def encode_nn(q: Quadruple) -> NnCode:
    """Encode a near-normal quadruple (raises if not near-normal)."""
    from .seqcore import is_near_normal

    if not is_near_normal(q):
        raise NotNearNormal("quadruple is not near-normal")
    return NnCode(encode_pair(q.a, q.b), encode_pair(q.c, q.d))
