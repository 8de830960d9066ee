"""Canonical equivalence relations and staircase systems.

For k=1 every equivalence relation on nonempty finite sets, restricted to a
suitable span, collapses to one of five: min, max, (min,max), equality, or
everything-related.  The classifier searches a window for the span and the
matching relation; for k >= 2 the candidate list implemented here is the
min/max family and the output carries a caveat, because the complete list
(whose size t_k has a closed form) is much longer.

Run:  python demos/04_canonical_relations.py
"""

from finkit import (
    EquivRelSpec,
    Window,
    canonicalize_search,
    generators,
    level_stats,
    parse_element,
    parse_relation,
    sos_check,
    t_count,
    window_elements,
)

print("t_k, the number of canonical relations, in exact integers:")
for k in (1, 2, 3, 4):
    print(f"  t_{k} = {t_count(k)}")
print()

a = parse_element("0:1,1:2,3:1", 2)
st = level_stats(a)
print(f"Level statistics of {a}:  {st.formatted()}")
print(f"  (zero-sentinel style: {st.formatted(zero_sentinel=True)})")
print()

print("A staircase system rises through every level and falls back:")
for text in ("0:1,1:2,2:1", "0:1,1:2", "0:2"):
    res = sos_check(parse_element(text, 2))
    verdict = "staircase" if res.ok else f"not a staircase ({res.violated})"
    print(f"  {text:12} -> {verdict}")
least = next(x for x in window_elements(Window(2, 3, 3)) if sos_check(x).ok)
print(f"  least staircase in a 3-position window: {least}")
print()

w = Window(1, 8, 8)
A = generators(1, 8)
print("Each of the five canonical relations classifies as itself:")
for text in ("min_level:1", "max_level:1", "minmax_level:1", "equality", "full"):
    res = canonicalize_search(parse_relation(text, 1), A, 3, w)
    print(f"  {text:15} -> {res.relation:10} witness {res.witness}")
print()

res = canonicalize_search(EquivRelSpec("size_parity"), A, 3, w)
print(f"Size parity classifies to {res.relation} on {res.witness}:")
print("  all span elements there have even size, so the relation is total")
print()

w2 = Window(2, 6, 6)
res = canonicalize_search(EquivRelSpec("full"), generators(2, 6), 2, w2)
print(f"At k=2 the witness must be a staircase sequence: {res.witness}")
print(f"  caveat: {res.caveat}")
