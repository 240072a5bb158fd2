"""TF-isomorphism census: graphs sharing a canonical double cover with a base graph."""

from __future__ import annotations

from twofold import Graph, census, verify_identities
from twofold.io import graph6_encode

if __name__ == "__main__":
    g = Graph.petersen()
    cen = census(g, allow_loops=True)
    print(f"Petersen: {cen.class_count} classes of looped mates, |Ant| = {len(cen.tfs.ant)}")
    for c in cen.classes:
        print(f"  class of size {c.size}: inst={c.inst} |Aut|={c.aut_order} rep={list(c.rep_psi)}")
    rep = verify_identities(g)
    print("identities:", rep.as_dict())
    c5 = Graph.cycle(5)
    for c in census(c5).classes:
        print("C5 mate:", graph6_encode(c.witness) if c.witness is not None else "-")
