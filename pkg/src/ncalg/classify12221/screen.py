"""Necessary conditions for AS regularity of type 12221: series, Betti numbers, Frobenius Ext."""
from ..ainf.frobenius import check_frobenius
from ..ainf.merkulov import merkulov_model
from ..barext import betti_numbers
from ..freealg import NCPoly
from ..rewrite import complete
from ..rewrite.normal import is_normal


# generator degrees of the minimal resolution of k, by homological degree
BETTI = {0: [0], 1: [1, 1], 2: [3, 4], 3: [6, 6], 4: [7]}


def series_coeffs(n):
    """Coefficients of 1/((1-t)^2 (1-t^2) (1-t^3)) through t^n."""
    c = [1] + [0] * n
    for d in (1, 1, 2, 3):
        for k in range(d, n + 1):
            c[k] += c[k - d]
    return c


def _times(c, d):
    # multiply a series by (1 - t^d)
    return [c[k] - (c[k - d] if k >= d else 0) for k in range(len(c))]


class ScreenReport:
    def __init__(self):
        self.passed = []
        self.failure = None
        self.details = []

    @property
    def ok(self):
        return self.failure is None

    def summary(self):
        if self.ok:
            return "PASS: " + ", ".join(self.passed)
        return "FAIL: " + self.failure


def _series_mismatch(got, want, label="H"):
    bad = [k for k in range(len(want)) if got[k] != want[k]]
    return ["%s[%d]=%d expected %d" % (label, k, got[k], want[k]) for k in bad]


def normal_square(pres, sysm):
    """A generator square z_i^2 that is normal in the algebra, or None."""
    F = pres.field
    for i in range(pres.ngens):
        h = NCPoly({(i, i): F.one}, F)
        if is_normal(h, sysm).normal:
            return h
    return None


def regularity_screen(pres, N=10, quotient="auto", s_max=4, adams=7):
    """Screen a presentation: series through t^N, Betti pattern, Frobenius Ext algebra.

    quotient="auto" first tests the series of A/(z_i^2) for a normal square
    z_i^2, which must be (1-t^2) times the regular series; this catches some
    failures below degree 7.  Pass quotient=None to skip that route.
    """
    rep = ScreenReport()
    want = series_coeffs(N)
    bound = max(N, adams + 1)
    sysm = complete(pres, bound)
    if quotient == "auto":
        h = normal_square(pres, complete(pres, 3))
        if h is not None:
            name = h.format(pres.names)
            Bq = complete(pres.with_relations(list(pres.relations) + [h]), N)
            got = Bq.hilbert_coeffs(N)
            bad = _series_mismatch(got, _times(want, 2), "H(A/(%s))" % name)
            rep.details.append("quotient by normal %s: %s" % (name, " ".join(map(str, got))))
            if bad:
                rep.failure = bad[0]
                rep.details += bad
                return rep
    got = sysm.hilbert_coeffs(N)
    rep.details.append("series: " + " ".join(map(str, got)))
    bad = _series_mismatch(got, want)
    if bad:
        rep.failure = bad[0]
        rep.details += bad
        return rep
    rep.passed.append("series")
    table = betti_numbers(sysm, s_max + 1, adams, method="resolution")
    degs = {}
    for (s, n), v in table.by_degree().items():
        degs.setdefault(s, []).extend([n] * v)
    degs = {s: sorted(v) for s, v in degs.items()}
    rep.details.append("betti: " + "; ".join("%d:%s" % (s, ",".join(map(str, v))) for s, v in sorted(degs.items())))
    if degs != BETTI:
        s = min(x for x in set(degs) | set(BETTI) if degs.get(x) != BETTI.get(x))
        rep.failure = "betti degrees in homological degree %d are %s expected %s" % (
            s, degs.get(s, []), BETTI.get(s, []))
        return rep
    rep.passed.append("betti")
    E, _ = merkulov_model(sysm, s_max, adams, k_max=2)
    if not check_frobenius(E):
        rep.failure = "Ext algebra is not Frobenius"
        return rep
    rep.passed.append("frobenius")
    return rep
