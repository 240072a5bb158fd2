"""The involution gamma on Aut^pi and the map alpha(p) = p^-1 gamma(p)."""

from __future__ import annotations

from twofold import aut_pi, graph6_decode

if __name__ == "__main__":
    g = graph6_decode("D`{")
    tfs = aut_pi(g)
    print(f"|Aut^pi| = {tfs.aut_pi.order()}, |Aut| = {len(tfs.aut)}, inst = {tfs.inst}")
    for p in tfs.elements[:8]:
        q = tfs.gamma[p]
        print(f"pi={list(p)}  gamma(pi)={list(q)}  fixed={p == q}")
    print("Im(alpha):", sorted(list(a) for a in tfs.im_alpha))
    print("gamma is an involution:", all(tfs.gamma[tfs.gamma[p]] == p for p in tfs.elements))
