"""Coideal constructions at finite presentation.

The two generating schemes are the peak-set preimage (a block sequence
belongs when the set of positions where its terms attain k belongs to a
given family on the integers) and the two-sided closure of a finite list of
sequences (membership via a common condensation).  The diagonalization
builder reproduces the greedy construction used to show the closure
coideals are semiselective: pick one span element per step, each starting
past the previous one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .core import (
    BlockSeq,
    FinkElement,
    FinkError,
    Window,
    WindowExhausted,
    decompose,
    initial_segments,
    leq,
    span_enumerate,
)


def mu(A: BlockSeq) -> set[int]:
    """Positions where some term of A attains k (terms only, not span sums)."""
    return {pos for x in A for pos in x.peaks()}


def span_peaks(A: BlockSeq, w: Window) -> set[int]:
    """Positions where some span element attains k.

    Separate derived query: tetris images never create new peaks, so this
    agrees with mu on valid sequences, but the two readings are kept apart.
    """
    return {pos for x in span_enumerate(A, w) for pos in x.peaks()}


def common_condensation(
    A: BlockSeq, B: BlockSeq, L: int, w: Window
) -> Optional[BlockSeq]:
    """A length-L block sequence inside both spans, or None.

    Candidates are the span elements of B that decompose over A; the greedy
    chain keeps every earliest-ending eligible candidate, which maximizes
    chain length, so None really means the window admits no such sequence.
    """
    if A.k != B.k:
        raise FinkError(f"level mismatch: {A.k} vs {B.k}")
    if L < 1:
        raise FinkError(f"target length must be >= 1, got {L}")
    shared = [x for x in span_enumerate(B, w) if decompose(x, A) is not None]
    shared.sort(key=lambda x: (x.max_supp, x.min_supp, x.values))
    picks: list[FinkElement] = []
    end = -1
    for x in shared:
        if x.min_supp > end:
            picks.append(x)
            end = x.max_supp
            if len(picks) == L:
                return BlockSeq(A.k, tuple(picks))
    return None


@dataclass(frozen=True)
class CoidealPresentation:
    """A finitely presented coideal of block sequences over a window.

    kind "all" is the trivial coideal; "top_of" closes a finite base family
    upward and downward at once (membership = a common condensation with
    some base sequence exists); "mu_over" tests the peak set against a
    predicate on sets of integers.
    """

    kind: str
    window: Window
    base: tuple[BlockSeq, ...] = ()
    peak_pred: Optional[Callable[[set[int]], bool]] = None

    def contains(self, A: BlockSeq, L: int = 1) -> bool:
        if self.kind == "all":
            return True
        if self.kind == "top_of":
            return any(
                common_condensation(base, A, L, self.window) is not None
                for base in self.base
            )
        if self.kind == "mu_over":
            return self.peak_pred(mu(A))
        raise FinkError(f"unknown coideal kind {self.kind!r}")


@dataclass(frozen=True)
class RefineResult:
    side: Optional[str]  # "left" | "right" | None when exhausted
    witness: Optional[BlockSeq]


def partition_refine(A: BlockSeq, mask, L: int, w: Window) -> RefineResult:
    """Split A by the mask and find a length-L condensation of one side.

    A subsequence is itself a condensation, so the longer side truncated
    always works when it has at least L terms; otherwise a span-level search
    over each side is attempted before reporting exhaustion.
    """
    mask = list(mask)
    if len(mask) != len(A):
        raise FinkError(f"mask length {len(mask)} differs from sequence length {len(A)}")
    left = BlockSeq(A.k, tuple(x for x, bit in zip(A, mask) if not bit))
    right = BlockSeq(A.k, tuple(x for x, bit in zip(A, mask) if bit))
    for side, part in (("left", left), ("right", right)):
        if len(part) >= L:
            return RefineResult(side, part.prefix(L))
    for side, part in (("left", left), ("right", right)):
        if len(part) == 0:
            continue
        found = initial_segments(part, L, w)
        if found:
            return RefineResult(side, found[0])
    return RefineResult(None, None)


@dataclass(frozen=True)
class DiagonalizationReport:
    ok: bool
    violator: Optional[FinkElement]  # a span element b whose tail leaves the chain


def _validate_chain(chain) -> None:
    if not chain:
        raise FinkError("empty chain")
    for i in range(len(chain) - 1):
        if not leq(chain[i + 1], chain[i]):
            raise FinkError(f"chain not decreasing at index {i + 1}")


def _chain_at(chain, n: int) -> BlockSeq:
    # indices past the last entry default to the nearest earlier one
    return chain[min(n, len(chain) - 1)]


def diagonalizes_check(
    B: BlockSeq, chain: list[BlockSeq], w: Window
) -> DiagonalizationReport:
    """Does B diagonalize the decreasing chain?

    For every span element b with n = max(supp(b)), every term of B past
    position n must decompose over the chain entry at n.
    """
    _validate_chain(chain)
    for b in span_enumerate(B, w):
        n = b.max_supp
        An = _chain_at(chain, n)
        for x in B:
            if x.min_supp > n and decompose(x, An) is None:
                return DiagonalizationReport(False, b)
    return DiagonalizationReport(True, None)


def diagonal_build(chain: list[BlockSeq], w: Window) -> BlockSeq:
    """Greedy diagonal: one span element per step, each past the previous.

    Step n picks the first eligible element, in span order, of the span of
    the chain entry at max(n, end of the previous pick); on a constant chain
    that reproduces the chain's own terms.  Clamping the index keeps every
    later pick inside the spans the checker will ask about, so built
    diagonals always pass diagonalizes_check.  Raises WindowExhausted (with
    the partial result attached) when no pick exists before the window's
    length cap.
    """
    _validate_chain(chain)
    k = chain[0].k
    picks: list[FinkElement] = []
    end = -1
    for step in range(w.len_max):
        An = _chain_at(chain, max(step, end))
        pick = None
        for x in span_enumerate(An, w):
            if x.min_supp > end and x.min_supp >= step:
                pick = x
                break
        if pick is None:
            err = WindowExhausted(f"no eligible pick at step {step}")
            err.partial = BlockSeq(k, tuple(picks))
            err.step = step
            raise err
        picks.append(pick)
        end = pick.max_supp
    return BlockSeq(k, tuple(picks))


def dense_open_violation(
    pred: Callable[[BlockSeq], bool], ambient: BlockSeq, w: Window
) -> Optional[str]:
    """Validator for dense-open predicates on windowed sequences.

    Returns None when, over sequences drawn from the ambient span, the
    predicate is closed downward under condensation and some member sits
    below every nonempty sequence; otherwise a description of the first
    violation.  A window-level check only: the genuine notion quantifies
    over infinite sequences.
    """
    seqs: list[BlockSeq] = []
    for L in range(1, w.len_max + 1):
        seqs.extend(initial_segments(ambient, L, w))
    for s in seqs:
        if not pred(s):
            continue
        for L in range(1, len(s) + 1):
            for below in initial_segments(s, L, w):
                if not pred(below):
                    return f"not downward closed: {below} below member {s}"
    for s in seqs:
        if not any(
            pred(b) for L in range(1, w.len_max + 1) for b in initial_segments(s, L, w)
        ):
            return f"not dense: nothing below {s}"
    return None
