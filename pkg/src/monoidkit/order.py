"""Divisibility preorders, the natural order on idempotents, and regularity.

`leq_R` / `leq_L` evaluate the closed-form characterizations per kind
(domain/kernel containment for maps, kernel/upper-block containment for
partitions); `leq_oracle` answers the same question by exhaustive multiplier
search over an enumerated monoid and returns the witness it finds.
"""

from __future__ import annotations

from dataclasses import dataclass

from .elements import require_kind


@dataclass(frozen=True)
class OrderVerdict:
    holds: bool
    witness: object | None = None


def _check_pair(kind, a, b):
    require_kind(a, kind)
    require_kind(b, kind)
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")


def leq_R(kind, a, b) -> bool:
    """a is a right multiple of b."""
    _check_pair(kind, a, b)
    if kind == "P":
        return b.ker().subset_of(a.ker()) and b.upper_blocks() <= a.upper_blocks()
    return a.dom() <= b.dom() and b.kerhat().subset_of(a.kerhat())


def leq_L(kind, a, b) -> bool:
    """a is a left multiple of b."""
    _check_pair(kind, a, b)
    if kind == "P":
        return b.coker().subset_of(a.coker()) and b.lower_blocks() <= a.lower_blocks()
    return a.im() <= b.im()


def leq_oracle(S, a, b, side="R") -> OrderVerdict:
    """Search every s in S for b*s == a (side R) or s*b == a (side L)."""
    if side not in ("R", "L"):
        raise ValueError(f"side must be 'R' or 'L', got {side!r}")
    ia = S.index_of(a)
    ib = S.index_of(b)
    for s in range(len(S)):
        prod = S.mul_idx(ib, s) if side == "R" else S.mul_idx(s, ib)
        if prod == ia:
            return OrderVerdict(True, S.elements[s])
    return OrderVerdict(False)


def is_idempotent(x) -> bool:
    return x * x == x


def natural_leq(e, f) -> bool:
    """Natural partial order on idempotents: e <= f iff fe == ef == e."""
    if not is_idempotent(e):
        raise ValueError(f"{e!r} is not idempotent")
    if not is_idempotent(f):
        raise ValueError(f"{f!r} is not idempotent")
    return f * e == e and e * f == e


def generalized_inverses(S, a) -> list:
    """All x in S with a*x*a == a and x*a*x == x; empty iff a is not regular."""
    ia = S.index_of(a)
    out = []
    for x in range(len(S)):
        axa = S.mul_idx(S.mul_idx(ia, x), ia)
        xax = S.mul_idx(S.mul_idx(x, ia), x)
        if axa == ia and xax == x:
            out.append(S.elements[x])
    return out
