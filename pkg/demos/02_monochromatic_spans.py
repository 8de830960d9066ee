"""Finite-window monochromatic searches.

The infinite theorem says: color FIN_k with finitely many colors and some
infinite block sequence has a monochromatic span.  In a finite window we can
search for witnesses, and we can ask the sharper question of whether a
window is already big enough that EVERY coloring has one.  A miss is always
reported as window exhaustion, never as a refutation.

Run:  python demos/02_monochromatic_spans.py
"""

from finkit import (
    ColoringSpec,
    Window,
    generators,
    gowers_search,
    ramsey2_search,
    span_enumerate,
    verify_finite_gowers,
)

w = Window(1, 4, 4)
A = generators(1, 4)

print("Color nonempty subsets of [0,4) by parity of their size.")
f = ColoringSpec(1, 2, "size_mod")
rep = gowers_search(f, A, 2, w)
print(f"  witness: {rep.witness}  color {rep.color}  ({rep.nodes_explored} nodes)")
print("  its span:", ", ".join(str(x) for x in span_enumerate(rep.witness, w)),
      "- sizes 2, 2, 4, all even")
print()

print("Color by parity of the minimum instead.")
rep = gowers_search(ColoringSpec(1, 2, "min_mod"), A, 2, w)
print(f"  witness: {rep.witness}  color {rep.color}")
print()

print("Too small a window simply runs out:")
rep = gowers_search(ColoringSpec(1, 2, "min_mod"), generators(1, 2), 2, Window(1, 2, 2))
print(f"  found={rep.found} after {rep.nodes_explored} nodes (not a refutation)")
print()

print("Does EVERY 2-coloring of [0,N) admit a length-2 witness?")
for N in (1, 2, 3, 4):
    rep = verify_finite_gowers(1, 2, 2, N)
    if rep.holds:
        print(f"  N={N}: yes ({rep.colorings_checked} colorings checked)")
    else:
        print(f"  N={N}: no — coloring #{rep.colorings_checked - 1} has no witness")
print("  So no window up to N=4 suffices; compactness needs more room.")
print()

print("Length-n sequence colorings work the same way (here n=2):")
f2 = ColoringSpec(2, 2, "size_mod")  # parity of the union support
rep = ramsey2_search(f2, generators(1, 6), 2, Window(1, 6, 6))
print(f"  witness: {rep.witness}  color {rep.color}")
