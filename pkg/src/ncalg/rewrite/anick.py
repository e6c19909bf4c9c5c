"""Anick chains of a monomial algebra, built as paths in the graph of tails."""


def anick_chains(sysm, n_max):
    """Chains V[1..n_max] (V[1] = obstructions) and the alternating polynomial.

    A new chain extends a chain with tail t by s when t*s contains exactly one
    obstruction, occurring as a suffix that starts inside t.
    """
    if any(r.tail for r in sysm.rules):
        raise ValueError("anick_chains needs a monomial rewriting system")
    obs = [r.lead for r in sysm.rules]
    chains = {1: sorted(((o, o[1:]) for o in obs), key=lambda c: sysm.key(c[0]))}
    for n in range(2, n_max + 1):
        seen = {}
        for word, tail in chains[n - 1]:
            for o in obs:
                for k in range(1, min(len(tail), len(o) - 1) + 1):
                    if tail[len(tail) - k:] != o[:k]:
                        continue
                    s = o[k:]
                    ts = tail + s
                    if _count_occurrences(ts, obs) == 1:
                        seen.setdefault(word + s, s)
        chains[n] = sorted(seen.items(), key=lambda c: sysm.key(c[0]))
        if not chains[n]:
            break
    V = {n: [w for w, _ in cs] for n, cs in chains.items()}
    poly = {0: 1}
    for g in range(sysm.pres.ngens):
        d = sysm.pres.degrees[g][0]
        poly[d] = poly.get(d, 0) - 1
    for n, ws in V.items():
        for w in ws:
            d = sysm.degree(w)
            poly[d] = poly.get(d, 0) + (-1) ** (n + 1)
    poly = {d: c for d, c in sorted(poly.items()) if c}
    return V, poly


def _count_occurrences(w, obs):
    n = 0
    for o in obs:
        L = len(o)
        for i in range(len(w) - L + 1):
            if w[i:i + L] == o:
                n += 1
    return n
