"""Walk through the core algebra: elements, tetris, spans, condensations.

An element of FIN_k is a finitely supported map into {0..k} that attains k
somewhere; the tetris operation T subtracts 1 everywhere (clipped at 0); the
span [A] of a block sequence A collects every sum of tetris images taken
along increasing indices with at least one undecremented term.

Run:  python demos/01_block_algebra.py
"""

from finkit import (
    Window,
    block_sum,
    decompose,
    format_element,
    generators,
    initial_segments,
    leq,
    neighborhood,
    parse_element,
    parse_seq,
    recompose,
    span_enumerate,
    tetris,
)

k = 2
p = parse_element("0:2,1:1", k)
print(f"p = {p}  (value 2 at position 0, value 1 at position 1)")
print(f"T(p)   = {tetris(p, 1)}   <- position 1 vanished, level dropped to 1")
print(f"T^2(p) = {tetris(p, 2)}   <- everything annihilated: the zero marker")
print()

a = parse_element("0:2", k)
b = parse_element("3:1,4:2", k)
print(f"{a} + {b} = {block_sum([a, b])}  (disjoint supports add pointwise)")
print()

A = parse_seq("0:2;1:2", k)
w = Window(k, 2, 2)
print(f"The span of A = {A} has (k+1)^2 - k^2 = 5 elements:")
for x in span_enumerate(A, w):
    print(f"  {format_element(x)}")
print()

# Every span element decomposes uniquely over the generators.
A2 = parse_seq("0:2,1:1;3:2", k)
x = parse_element("0:1,3:2", k)
d = decompose(x, A2)
print(f"{x} over {A2}:")
print(f"  decomposition {d.parts}  (generator index, tetris exponent)")
print(f"  recomposing gives {recompose(d, A2)} — the same element, exactly")
print(f"  {parse_element('1:2', k)} is not in the span: {decompose(parse_element('1:2', k), A2)}")
print()

# The condensation order: A <= B when every term of A lies in [B].
B = parse_seq("0:2;1:2", k)
C = parse_seq("0:1,1:2", k)
print(f"{C} <= {B}: {leq(C, B)}  (its single term is T(b0) + b1)")
print()

# Windowed neighborhoods: all length-n extensions of a stem through a span.
w1 = Window(1, 4, 4)
stem = parse_seq("0:1", 1)
amb = generators(1, 4)
exts = neighborhood(stem, amb, 2, w1)
print(f"Extensions of {stem} to length 2 through [{amb}]:")
for s in exts:
    print(f"  {s}")
print()
print(f"Length-2 sequences over the span (no stem): {len(initial_segments(amb, 2, w1))} of them")
