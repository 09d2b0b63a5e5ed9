"""The inverse monoid of integer shift maps with finitely many punctures.

An element is the partial bijection x -> x + shift defined on the integers
outside a finite excluded set; the pair (excluded, shift) is a canonical
normal form, multiplied by a closed-form rule that is oracle-checked against
windowed composition in the test suite.  Words over the alphabet
g (shift up), h (shift down), e (puncture at 0) evaluate left to right.

On top of the arithmetic sit the structural checkers: the defining relation
sweep, the idempotent antichain conditions, a decision procedure for the
annihilator relation of the puncture with explicit witnessing sequences, and
a bounded reachability search that certifies which target pairs cannot be
reached from a generating set within given resource bounds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .congruence import YSequence
from .elements import PartialMap


@dataclass(frozen=True)
class NF:
    """Normal form: strictly increasing excluded integers plus a shift."""

    excluded: tuple
    shift: int

    def __post_init__(self):
        ex = self.excluded
        if any(ex[i] >= ex[i + 1] for i in range(len(ex) - 1)):
            raise ValueError(f"excluded set {ex} must be strictly increasing")

    def __mul__(self, other):
        if not isinstance(other, NF):
            return NotImplemented
        return nf_mul(self, other)

    def __repr__(self):
        return "NF({%s}, %+d)" % (",".join(map(str, self.excluded)), self.shift)


NF_IDENTITY = NF((), 0)
SHIFT_UP = NF((), 1)
SHIFT_DOWN = NF((), -1)
PUNCTURE = NF((0,), 0)

ATOMS = {"g": SHIFT_UP, "h": SHIFT_DOWN, "e": PUNCTURE}


def nf_mul(a: NF, b: NF) -> NF:
    """Compose left to right: x is mapped iff x avoids a's punctures and
    x + a.shift avoids b's punctures."""
    excluded = set(a.excluded)
    excluded.update(x - a.shift for x in b.excluded)
    return NF(tuple(sorted(excluded)), a.shift + b.shift)


def nf_power(a: NF, k: int) -> NF:
    if k < 0:
        raise ValueError("negative power")
    out = NF_IDENTITY
    for _ in range(k):
        out = nf_mul(out, a)
    return out


def nf_inverse(a: NF) -> NF:
    return NF(tuple(x + a.shift for x in a.excluded), -a.shift)


def nf_of_word(word: str) -> NF:
    """Evaluate a word over {g, h, e}; the empty word is the identity."""
    out = NF_IDENTITY
    for pos, ch in enumerate(word):
        atom = ATOMS.get(ch)
        if atom is None:
            raise ValueError(f"bad symbol {ch!r} at position {pos} (expected g, h or e)")
        out = nf_mul(out, atom)
    return out


def nf_is_idempotent(a: NF) -> bool:
    return nf_mul(a, a) == a


def nf_natural_leq(a: NF, b: NF) -> bool:
    """Natural order on idempotents, evaluated by the defining products."""
    if not nf_is_idempotent(a):
        raise ValueError(f"{a!r} is not idempotent")
    if not nf_is_idempotent(b):
        raise ValueError(f"{b!r} is not idempotent")
    return nf_mul(b, a) == a and nf_mul(a, b) == a


def nf_window(a: NF, half_width: int) -> PartialMap:
    """Restrict the represented map to the integer window [-N, N].

    Returned as a partial bijection on 1..2N+1 via x -> x + N + 1.  The window
    must be wide enough to contain every puncture and survive the shift.
    """
    needed = (max(abs(x) for x in a.excluded) if a.excluded else 0) + abs(a.shift)
    if half_width < needed:
        raise ValueError(f"window half-width {half_width} < required {needed}")
    n = half_width
    excluded = set(a.excluded)
    images = []
    for x in range(-n, n + 1):
        y = x + a.shift
        if x in excluded or not -n <= y <= n:
            images.append(None)
        else:
            images.append(y + n + 1)
    return PartialMap(images)


PRESENTATION_BASE = (
    ("hg", "gh"),
    ("ghg", "g"),
    ("hgh", "h"),
    ("ghe", "e"),
    ("egh", "e"),
    ("e", "ee"),
)


def presentation_relations(max_k: int):
    """The defining relation word pairs, with exponents up to max_k."""
    rels = list(PRESENTATION_BASE)
    for k in range(1, max_k + 1):
        gk, hk = "g" * k, "h" * k
        rels.append(("e" + gk + "e" + hk, gk + "e" + hk + "e"))
        rels.append(("e" + hk + "e" + gk, hk + "e" + gk + "e"))
    return rels


def check_presentation(max_k: int) -> bool:
    """Every defining relation holds as an exact normal-form equality."""
    return all(
        nf_of_word(lhs) == nf_of_word(rhs)
        for lhs, rhs in presentation_relations(max_k)
    )


def check_nc(max_n: int) -> bool:
    """The four antichain conditions on conjugated punctures, up to max_n.

    up(k) = g^k e h^k and dn(k) = h^k e g^k are idempotents; the conditions
    say the puncture commutes with them, they form an antichain between the
    two families and within each family, and e·up(n) sits below no up(k) with
    0 < k < n and below no dn(k) at all.
    """
    e = PUNCTURE
    up = [None] + [nf_of_word("g" * k + "e" + "h" * k) for k in range(1, max_n + 1)]
    dn = [None] + [nf_of_word("h" * k + "e" + "g" * k) for k in range(1, max_n + 1)]
    if nf_of_word("hge") != e or nf_of_word("ehg") != e:
        return False
    for n in range(1, max_n + 1):
        if nf_mul(e, up[n]) != nf_mul(up[n], e):
            return False
        if nf_mul(e, dn[n]) != nf_mul(dn[n], e):
            return False
    for m in range(1, max_n + 1):
        for n in range(1, max_n + 1):
            if nf_natural_leq(up[m], dn[n]) or nf_natural_leq(dn[n], up[m]):
                return False
            if m != n:
                if nf_natural_leq(up[m], up[n]) or nf_natural_leq(dn[m], dn[n]):
                    return False
    for n in range(1, max_n + 1):
        eup = nf_mul(e, up[n])
        for k in range(1, n):
            if nf_natural_leq(eup, up[k]):
                return False
        for k in range(1, n + 1):
            if nf_natural_leq(eup, dn[k]):
                return False
    return True


@dataclass(frozen=True)
class AnnihilatorVerdict:
    member: bool
    n: int | None = None
    side: str | None = None


def in_annihilator(u: NF, v: NF) -> AnnihilatorVerdict:
    """Decide whether g^n·e·u == e·v or h^n·e·u == e·v for some n >= 0.

    The shift difference of e·v and e·u pins down the only possible exponent
    and side, so a single equality check settles membership.
    """
    eu = nf_mul(PUNCTURE, u)
    ev = nf_mul(PUNCTURE, v)
    diff = ev.shift - eu.shift
    if diff == 0:
        return AnnihilatorVerdict(eu == ev, 0 if eu == ev else None, None)
    if diff > 0:
        ok = nf_mul(nf_power(SHIFT_UP, diff), eu) == ev
        return AnnihilatorVerdict(ok, diff if ok else None, "g" if ok else None)
    ok = nf_mul(nf_power(SHIFT_DOWN, -diff), eu) == ev
    return AnnihilatorVerdict(ok, -diff if ok else None, "h" if ok else None)


def annihilator_witness(u: NF, v: NF) -> YSequence:
    """An explicit validated sequence from v to u over the annihilator pairs.

    For exponent n > 0 this is the three-step chain through (1,e) and the
    side's pair (g^n e, h^n e g^n) or (h^n e, g^n e h^n), with multipliers
    v, e·u, u; exponent 0 degenerates to one or two steps.
    """
    verdict = in_annihilator(u, v)
    if not verdict.member:
        raise ValueError("pair is not in the annihilator relation")
    e, one = PUNCTURE, NF_IDENTITY
    eu = nf_mul(e, u)
    ev = nf_mul(e, v)
    if verdict.n == 0:
        if v == eu:
            steps = ((e, one, u),)
        elif u == ev:
            steps = ((one, e, v),)
        else:
            steps = ((one, e, v), (e, one, u))
    else:
        n = verdict.n
        if verdict.side == "g":
            left = nf_mul(nf_power(SHIFT_UP, n), e)
            right = nf_mul(nf_mul(nf_power(SHIFT_DOWN, n), e), nf_power(SHIFT_UP, n))
        else:
            left = nf_mul(nf_power(SHIFT_DOWN, n), e)
            right = nf_mul(nf_mul(nf_power(SHIFT_UP, n), e), nf_power(SHIFT_DOWN, n))
        steps = ((one, e, v), (left, right, eu), (e, one, u))
    seq = YSequence(v, u, steps)
    if not seq.validate(nf_mul):
        raise AssertionError(f"constructed witness fails to validate for ({u!r}, {v!r})")
    return seq


def y_n(n: int):
    """The 2n+1 generating pairs (1,e), (g^k e, h^k e g^k), (h^k e, g^k e h^k)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    pairs = [(NF_IDENTITY, PUNCTURE)]
    for k in range(1, n + 1):
        gk = nf_power(SHIFT_UP, k)
        hk = nf_power(SHIFT_DOWN, k)
        pairs.append((nf_mul(gk, PUNCTURE), nf_mul(nf_mul(hk, PUNCTURE), gk)))
        pairs.append((nf_mul(hk, PUNCTURE), nf_mul(nf_mul(gk, PUNCTURE), hk)))
    return pairs


def divide_left(c: NF, u: NF):
    """All t with c*t == u, in a deterministic order.

    From the product rule, solutions exist iff c's punctures are among u's;
    the free choice is which of c's punctures to re-include, so there are at
    most 2**len(c.excluded) solutions.
    """
    set_c = set(c.excluded)
    set_u = set(u.excluded)
    if not set_c <= set_u:
        return []
    base = set_u - set_c
    shift_t = u.shift - c.shift
    out = []
    for r in range(len(c.excluded) + 1):
        for extra in itertools.combinations(c.excluded, r):
            ex_t = tuple(sorted(x + c.shift for x in base | set(extra)))
            t = NF(ex_t, shift_t)
            assert nf_mul(c, t) == u
            out.append(t)
    return out


@dataclass(frozen=True)
class ChainReport:
    """Outcome of a bounded reachability search.

    reached=False is a certificate only for the stated bounds; it never
    proves unreachability outright.  `pruned` counts successor states that
    were discarded for exceeding the bounds: when it is 0 and the target was
    not reached, the frontier died out on its own, i.e. the whole reachable
    state set was enumerated.
    """

    n: int
    y_index: int
    reached: bool
    explored: int
    depth: int | None
    pruned: int
    max_excluded: int
    max_magnitude: int
    max_length: int


def chain_search(
    n: int,
    y_index: int | None = None,
    max_excluded: int | None = None,
    max_magnitude: int | None = None,
    max_length: int = 8,
) -> ChainReport:
    """Bounded BFS for a sequence from g^n·e to h^n·e·g^n over Y_{y_index}.

    A step from state w picks a directed pair (c, d) and any t with c*t == w,
    moving to d*t.  States whose puncture count or coordinate magnitudes
    exceed the bounds are pruned, as are sequences longer than max_length.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if y_index is None:
        if n < 2:
            raise ValueError("default search needs n >= 2 (it uses Y_{n-1})")
        y_index = n - 1
    if max_excluded is None:
        max_excluded = n + 2
    if max_magnitude is None:
        max_magnitude = 3 * n
    start = nf_of_word("g" * n + "e")
    target = nf_of_word("h" * n + "e" + "g" * n)
    directed = []
    for c, d in y_n(y_index):
        directed.append((c, d))
        directed.append((d, c))

    def within_bounds(w):
        if len(w.excluded) > max_excluded:
            return False
        coords = w.excluded + (w.shift,)
        return all(abs(x) <= max_magnitude for x in coords)

    visited = {start}
    frontier = [start]
    explored = 1
    pruned = 0
    for depth in range(1, max_length + 1):
        nxt = []
        for w in frontier:
            for c, d in directed:
                for t in divide_left(c, w):
                    successor = nf_mul(d, t)
                    if successor == target:
                        return ChainReport(
                            n, y_index, True, explored, depth, pruned,
                            max_excluded, max_magnitude, max_length,
                        )
                    if successor in visited:
                        continue
                    if not within_bounds(successor):
                        pruned += 1
                        continue
                    visited.add(successor)
                    nxt.append(successor)
                    explored += 1
        frontier = nxt
        if not frontier:
            break
    return ChainReport(
        n, y_index, False, explored, None, pruned,
        max_excluded, max_magnitude, max_length,
    )
