"""Finding blow-ups inside digraphs.

A digraph "contains" a pattern when some injective map preserves every
arc; extra arcs in the host never hurt.  The check below walks the two
sides of the sharp threshold: the r-part construction holds every
r-level blow-up but no (r+1)-level one.
"""

from ttlab import BlowupSpec, blowup, contains, count_copies, is_free, make_dtr

host = make_dtr(6, 3)
print("host: three parts of two vertices, all cross pairs doubled")
print()

for k in (2, 3, 4):
    spec = BlowupSpec(k, 2)
    emb = contains(host, blowup(k, 2))
    status = "contains" if emb is not None else "avoids  "
    witness = f" via {emb.mapping}" if emb else ""
    print(f"  {status} {spec}{witness}")
    assert is_free(host, spec) == (emb is None)

print()
print("copy counting (embeddings modulo pattern symmetry):")
for k, t in [(2, 1), (3, 1), (2, 2), (3, 2)]:
    copies = count_copies(host, blowup(k, t))
    print(f"  {BlowupSpec(k, t)}: {copies} copies")
