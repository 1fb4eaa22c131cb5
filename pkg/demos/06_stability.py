"""Edit distance to the extremal construction.

Near-extremal free graphs are expected to sit close to the construction
in edit distance.  The probe below damages the construction one arc at a
time and watches the distance climb by exactly one per edit, then shows
how far a genuinely different graph sits.
"""

import random

from ttlab import Digraph, blowup, edit_distance_to_dtr, encode, make_dtr

g = make_dtr(6, 2)
print(f"start from {encode(g)} (distance "
      f"{edit_distance_to_dtr(g, 2).distance})")

rng = random.Random(4)
damaged = g
removed = 0
digons = [(i, j) for (i, j) in damaged.arcs() if i < j and damaged.has_arc(j, i)]
rng.shuffle(digons)
for i, j in digons[:5]:
    damaged = damaged.with_pair(i, j, 1)  # keep only the forward arc
    removed += 1
    d = edit_distance_to_dtr(damaged, 2)
    print(f"  removed {removed} arc(s): distance {d.distance}")

print()
for name, h, r in [
    ("empty graph on 4 vertices", Digraph.empty(4), 2),
    ("two-level blow-up, two per level", blowup(2, 2), 2),
    ("construction with three parts", make_dtr(6, 3), 2),
]:
    d = edit_distance_to_dtr(h, r)
    print(f"{name}: distance {d.distance} to the 2-part construction, "
          f"best partition {d.partition.assign}")
