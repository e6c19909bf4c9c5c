"""Degree-bounded completion of homogeneous relations under deg-lex order."""
import heapq

from ..freealg import NCPoly


class DegreeBoundError(ValueError):
    pass


class Rule:
    __slots__ = ("lead", "tail", "degree", "provenance")

    def __init__(self, lead, tail, degree, provenance):
        self.lead = lead
        self.tail = tail  # lead -> sum tail[w] * w
        self.degree = degree
        self.provenance = provenance

    def as_poly(self, field):
        t = {w: -c for w, c in self.tail.items()}
        t[self.lead] = field.one
        return NCPoly(t, field)


class ReductionSystem:
    """Rules lead -> tail, complete up to first-component degree `bound`."""

    def __init__(self, pres, bound, precedence=None):
        self.pres = pres
        self.field = pres.field
        self.bound = bound
        rank = list(range(pres.ngens)) if precedence is None else [precedence.index(i) for i in range(pres.ngens)]
        self._rank = rank
        self.rules = []
        self.leads = {}
        self._lead_lengths = []
        self._nf_cache = {}
        self._std = None
        self._deg1 = [d[0] for d in pres.degrees]

    # --- order -------------------------------------------------------------
    def key(self, w):
        d = 0
        for g in w:
            d += self._deg1[g]
        return (d, len(w), tuple(self._rank[g] for g in w))

    def degree(self, w):
        d = 0
        for g in w:
            d += self._deg1[g]
        return d

    def multidegree(self, w):
        return self.pres.word_degree(w)

    def leading_word(self, terms):
        return max(terms, key=self.key)

    # --- rules -------------------------------------------------------------
    def _add_rule(self, rule):
        self.rules.append(rule)
        self.leads[rule.lead] = rule
        n = len(rule.lead)
        if n not in self._lead_lengths:
            self._lead_lengths.append(n)
            self._lead_lengths.sort()
        self._std = None

    def find_lead(self, w):
        """Leftmost occurrence (pos, rule) of a rule lead in w, or None."""
        leads = self.leads
        lens = self._lead_lengths
        n = len(w)
        for i in range(n):
            for L in lens:
                if i + L > n:
                    break
                r = leads.get(w[i:i + L])
                if r is not None:
                    return i, r
        return None

    def is_standard(self, w):
        return self.find_lead(w) is None

    def _reduce_terms(self, terms):
        """Normal form of a dict of terms, processing words from the largest down."""
        key = self.key
        cache = self._nf_cache
        out = {}
        acc = dict(terms)
        heap = [(_neg(key(w)), w) for w in acc]
        heapq.heapify(heap)
        while heap:
            _, w = heapq.heappop(heap)
            c = acc.pop(w, None)
            if c is None or not c:
                continue
            hit = cache.get(w)
            if hit is not None:
                for u, e in hit.items():
                    nv = out.get(u, 0) + c * e
                    if nv:
                        out[u] = nv
                    else:
                        out.pop(u, None)
                continue
            f = self.find_lead(w)
            if f is None:
                nv = out.get(w, 0) + c
                if nv:
                    out[w] = nv
                else:
                    out.pop(w, None)
                continue
            i, rule = f
            pre, post = w[:i], w[i + len(rule.lead):]
            for t, a in rule.tail.items():
                u = pre + t + post
                old = acc.get(u)
                if old is None:
                    acc[u] = c * a
                    heapq.heappush(heap, (_neg(key(u)), u))
                else:
                    acc[u] = old + c * a
        return out

    def nf_word(self, w):
        hit = self._nf_cache.get(w)
        if hit is None:
            if self.degree(w) > self.bound:
                raise DegreeBoundError("degree %d exceeds the completion bound %d" % (self.degree(w), self.bound))
            hit = self._reduce_terms({w: self.field.one})
            self._nf_cache[w] = hit
        return hit

    def nf_terms(self, terms):
        for w in terms:
            if self.degree(w) > self.bound:
                raise DegreeBoundError("degree %d exceeds the completion bound %d" % (self.degree(w), self.bound))
        out = {}
        for w, c in terms.items():
            for u, e in self.nf_word(w).items():
                nv = out.get(u, 0) + c * e
                if nv:
                    out[u] = nv
                else:
                    out.pop(u, None)
        return out

    def normal_form(self, poly):
        return NCPoly(self.nf_terms(poly.terms), self.field)

    def mul_terms(self, a, b):
        """Normal form of the product of two term dicts."""
        out = {}
        for u, x in a.items():
            for v, y in b.items():
                for w, e in self.nf_word(u + v).items():
                    nv = out.get(w, 0) + x * y * e
                    if nv:
                        out[w] = nv
                    else:
                        out.pop(w, None)
        return out

    # --- standard monomials ------------------------------------------------
    def _standard_table(self):
        if self._std is None:
            gens = range(self.pres.ngens)
            table = [[()]]
            for d in range(1, self.bound + 1):
                cur = []
                for g in gens:
                    e = self._deg1[g]
                    if e > d:
                        continue
                    for w in table[d - e]:
                        u = w + (g,)
                        if not self._has_suffix_lead(u):
                            cur.append(u)
                cur.sort(key=self.key)
                table.append(cur)
            self._std = table
        return self._std

    def _has_suffix_lead(self, u):
        n = len(u)
        for L in self._lead_lengths:
            if L > n:
                break
            if u[n - L:] in self.leads:
                return True
        return False

    def standard_monomials(self, degree):
        """Standard words of a given first-component degree, or of a full multidegree tuple."""
        if isinstance(degree, tuple):
            d = degree[0]
            if d > self.bound:
                raise DegreeBoundError("degree %d exceeds the completion bound %d" % (d, self.bound))
            return [w for w in self._standard_table()[d] if self.multidegree(w) == degree]
        if degree > self.bound:
            raise DegreeBoundError("degree %d exceeds the completion bound %d" % (degree, self.bound))
        if degree < 0:
            return []
        return list(self._standard_table()[degree])

    def hilbert_coeffs(self, n=None):
        n = self.bound if n is None else n
        if n > self.bound:
            raise DegreeBoundError("degree %d exceeds the completion bound %d" % (n, self.bound))
        t = self._standard_table()
        return [len(t[d]) for d in range(n + 1)]

    def format_rule(self, rule):
        names = self.pres.names
        lhs = NCPoly.word(rule.lead, self.field).format(names)
        rhs = NCPoly(rule.tail, self.field).format(names, key=self.key)
        return "%s = %s" % (lhs, rhs)


def _neg(k):
    d, n, w = k
    return (-d, -n, tuple(-x for x in w))


def overlaps(l1, l2):
    """Proper overlaps: k such that a length-k suffix of l1 is a prefix of l2."""
    out = []
    for k in range(1, min(len(l1), len(l2))):
        if l1[len(l1) - k:] == l2[:k]:
            out.append(k)
    return out


def complete(pres, bound, precedence=None):
    """Bergman/Buchberger completion of a homogeneous presentation up to degree `bound`.

    Works degree by degree: in degree d the candidates are the input relations
    of degree d followed by the overlap ambiguities of degree d, in discovery
    order.  Each candidate is reduced; survivors form an echelon system whose
    tails are finally reduced against each other.
    """
    sysm = ReductionSystem(pres, bound, precedence)
    F = pres.field
    by_deg = {}
    for idx, r in enumerate(pres.relations):
        by_deg.setdefault(sysm.degree(next(iter(r.terms))), []).append((dict(r.terms), ("relation", idx)))
    pending = {}
    for d in range(1, bound + 1):
        cands = list(by_deg.get(d, []))
        for word, i, j, k in pending.pop(d, []):
            r1, r2 = sysm.rules[i], sysm.rules[j]
            a = {word[:0] + t + word[len(r1.lead):]: c for t, c in r1.tail.items()}
            pre = word[:len(word) - len(r2.lead)]
            b = {pre + t: c for t, c in r2.tail.items()}
            diff = dict(a)
            for w, c in b.items():
                nv = diff.get(w, 0) - c
                if nv:
                    diff[w] = nv
                else:
                    diff.pop(w, None)
            cands.append((diff, ("overlap", word, i, j)))
        layer = {}
        order = []
        for terms, prov in cands:
            rem = _reduce_same_degree(sysm.nf_terms(terms), layer, sysm.key)
            if not rem:
                continue
            lead = sysm.leading_word(rem)
            inv = F.one / rem[lead]
            tail = {w: -c * inv for w, c in rem.items() if w != lead}
            layer[lead] = tail
            order.append((lead, prov))
        for lead, _ in order:
            layer[lead] = _reduce_same_degree(layer[lead], {l: t for l, t in layer.items() if l != lead}, sysm.key)
        sysm._nf_cache = {w: v for w, v in sysm._nf_cache.items() if sysm.degree(w) < d}
        for lead, prov in order:
            rule = Rule(lead, layer[lead], d, prov)
            sysm._add_rule(rule)
            idx = len(sysm.rules) - 1
            for jdx, other in enumerate(sysm.rules):
                pairs = [(rule, idx, other, jdx)]
                if jdx != idx:
                    pairs.append((other, jdx, rule, idx))
                for ra, ia, rb, ib in pairs:
                    for k in overlaps(ra.lead, rb.lead):
                        word = ra.lead + rb.lead[k:]
                        wd = sysm.degree(word)
                        if wd <= bound:
                            pending.setdefault(wd, []).append((word, ia, ib, k))
    return sysm


def _reduce_same_degree(terms, layer, key):
    """Reduce terms by rules whose leads are whole words of the same degree."""
    terms = dict(terms)
    while True:
        hits = [w for w in terms if w in layer]
        if not hits:
            return terms
        w = max(hits, key=key)
        c = terms.pop(w)
        for u, a in layer[w].items():
            nv = terms.get(u, 0) + c * a
            if nv:
                terms[u] = nv
            else:
                terms.pop(u, None)


def overlap_ambiguities(sysm, bound=None):
    """All overlap words (word, i, j) of the rule leads up to a degree bound."""
    bound = sysm.bound if bound is None else bound
    out = []
    for i, r1 in enumerate(sysm.rules):
        for j, r2 in enumerate(sysm.rules):
            for k in overlaps(r1.lead, r2.lead):
                word = r1.lead + r2.lead[k:]
                if sysm.degree(word) <= bound:
                    out.append((word, i, j))
    out.sort(key=lambda t: (sysm.key(t[0]), t[1], t[2]))
    return out


def resolve_ambiguity(sysm, word, i, j):
    """Reduce an overlap both ways; returns the difference of the two normal forms."""
    r1, r2 = sysm.rules[i], sysm.rules[j]
    a = {t + word[len(r1.lead):]: c for t, c in r1.tail.items()}
    pre = word[:len(word) - len(r2.lead)]
    b = {pre + t: c for t, c in r2.tail.items()}
    na, nb = sysm.nf_terms(a), sysm.nf_terms(b)
    diff = dict(na)
    for w, c in nb.items():
        nv = diff.get(w, 0) - c
        if nv:
            diff[w] = nv
        else:
            diff.pop(w, None)
    return diff
