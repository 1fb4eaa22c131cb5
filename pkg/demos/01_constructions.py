"""Constructions and the text encoding.

The two graph families everything else revolves around: the balanced
complete multipartite digraph with every cross pair doubled, and the
blow-up of a transitive tournament.
"""

from ttlab import (
    Weight,
    blowup,
    encode,
    make_dtr,
    turan_edges,
    turan_part_sizes,
    weighted_size,
)

print("Bidirected Turan digraphs")
print("=========================")
for n, r in [(4, 2), (6, 3), (7, 3)]:
    g = make_dtr(n, r)
    sizes = turan_part_sizes(n, r)
    print(f"  n={n} r={r}: parts {sizes}, {g.f2} digons, encoded {encode(g)!r}")
    value = weighted_size(g, Weight.rational(2))
    print(f"           weight-2 size {value.exact} = 2 * t_r(n) = {2 * turan_edges(n, r)}")

print()
print("Blow-ups of transitive tournaments")
print("==================================")
for k, t in [(2, 1), (3, 1), (2, 2), (3, 2)]:
    h = blowup(k, t)
    print(f"  k={k} t={t}: {h.n} vertices, {h.f1} arcs, encoded {encode(h)!r}")

print()
print("The weight scale")
print("================")
two = Weight.rational(2)
log3 = Weight.log2_3()
print("  weight 2 counts arcs: a digon equals two single arcs ->",
      two.compare((2, 0), (0, 1)) == 0)
print("  weight log2(3) counts extension choices: two digons (3^2=9) beat")
print("  three single arcs (2^3=8) ->", log3.compare((0, 2), (3, 0)) > 0)
