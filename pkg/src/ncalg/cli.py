"""Command-line entry point: ncalg SUBCOMMAND ...

Exit status 0 on success, 1 on a mathematical failure (failed screen,
nonzero residual, mismatch), 2 on usage or parse errors.
"""
import argparse
import re
import sys

from .freealg import NCPoly, ParseError, Presentation, format_word, load_presentation, parse_field, parse_scalar
from .freealg.field import FieldError

FORMAT_VERSION = 1


class UsageError(Exception):
    pass


class Report:
    """Collects output; structured mode prints stable key=value lines."""

    def __init__(self, fmt, command):
        self.fmt = fmt
        self.items = []
        self.human = []
        self.command = command

    def kv(self, key, value, human=None):
        self.items.append((key, value))
        self.human.append(human if human is not None else "%s: %s" % (key, value))

    def text(self, line):
        self.human.append(line)

    def emit(self, status, stream=sys.stdout):
        if self.fmt == "structured":
            print("version=%d" % FORMAT_VERSION, file=stream)
            print("command=%s" % self.command, file=stream)
            for k, v in self.items:
                print("%s=%s" % (k, v), file=stream)
            print("status=%s" % status, file=stream)
        else:
            for line in self.human:
                print(line, file=stream)


def _load(path):
    try:
        return load_presentation(path)
    except OSError as e:
        raise UsageError("cannot read %s: %s" % (path, e.strerror))


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError("cannot read %s: %s" % (path, e.strerror))


def _params(items):
    out = {}
    for it in items or []:
        k, sep, v = it.partition("=")
        if not sep or not k:
            raise UsageError("parameters are given as name=value, got %r" % it)
        out[k.strip()] = v.strip()
    return out


def _lift(pres, F):
    """The same presentation over a field containing its own."""
    if pres.field == F:
        return pres
    if not pres.field.is_rational:
        raise UsageError("cannot combine fields %s and %s" % (pres.field.modulus_text(), F.modulus_text()))
    lift = lambda p: NCPoly({w: F(c) for w, c in p.terms.items()}, F)
    return Presentation(F, pres.names, pres.degrees, [lift(r) for r in pres.relations],
                        {k: F(v) for k, v in pres.params.items()})


def _fmt_series(coeffs):
    return ",".join(str(c) for c in coeffs)


# --- subcommands ------------------------------------------------------------

def cmd_complete(a, rep):
    from .rewrite import complete, overlap_ambiguities, resolve_ambiguity
    pres = _load(a.file)
    sysm = complete(pres, a.max_deg)
    for k, r in enumerate(sysm.rules):
        rep.kv("rule.%d" % k, "%d: %s" % (r.degree, sysm.format_rule(r)),
               "r%d (degree %d, %s): %s" % (k, r.degree, r.provenance[0], sysm.format_rule(r)))
    ok = True
    for k, (w, i, j) in enumerate(overlap_ambiguities(sysm)):
        diff = resolve_ambiguity(sysm, w, i, j)
        ok = ok and not diff
        word = format_word(w, pres.names)
        rep.kv("ambiguity.%d" % k, "%s r%d r%d %s" % (word, i, j, "resolvable" if not diff else "unresolved"),
               "overlap %s of r%d, r%d: %s" % (word, i, j, "resolvable" if not diff else "NOT resolvable"))
    rep.kv("resolvable", "all" if ok else "no")
    return 0 if ok else 1


def cmd_hilbert(a, rep):
    from .rewrite import complete
    pres = _load(a.file)
    sysm = complete(pres, a.max_deg)
    rep.kv("hilbert", _fmt_series(sysm.hilbert_coeffs(a.max_deg)))
    return 0


def cmd_nf(a, rep):
    from .rewrite import complete
    pres = _load(a.file)
    p = pres.parse_poly(a.poly)
    deg = max((pres.word_degree(w)[0] for w in p.terms), default=0)
    sysm = complete(pres, max(deg, 1))
    nf = sysm.normal_form(p)
    rep.kv("nf", nf.format(pres.names, key=sysm.key))
    return 0


def cmd_normal(a, rep):
    from .rewrite import complete
    from .rewrite.normal import is_normal, search_normal
    pres = _load(a.file)
    F = pres.field
    if (a.element is None) == (a.search is None):
        raise UsageError("give exactly one of --element or --search")
    if a.element is not None:
        h = pres.parse_poly(a.element)
        deg = max((pres.word_degree(w)[0] for w in h.terms), default=0)
        sysm = complete(pres, deg + 1)
        r = is_normal(h, sysm)
        rep.kv("normal", "yes" if r.normal else "no")
        for i in sorted(r.left):
            if r.left[i] is not None:
                rep.kv("left.%s" % pres.names[i], F.fmt(r.left[i]),
                       "%s*h = %s * h*%s" % (pres.names[i], F.fmt(r.left[i]), pres.names[i]))
        for i in sorted(r.right):
            if r.right[i] is not None:
                rep.kv("right.%s" % pres.names[i], F.fmt(r.right[i]),
                       "h*%s = %s * %s*h" % (pres.names[i], F.fmt(r.right[i]), pres.names[i]))
        return 0 if r.normal else 1
    md = tuple(int(x) for x in a.search.strip("() ").split(","))
    sysm = complete(pres, md[0] + 1)
    if len(md) == len(pres.degrees[0]):
        mds = [md]
    elif len(md) == 1:
        from .barext import word_multidegrees
        mds = [m for m in word_multidegrees(pres, md[0]) if m[0] == md[0]]
    else:
        raise UsageError("multidegree %s has the wrong length" % (md,))
    sols = []
    for m in mds:
        sols += search_normal(sysm, m, a.max_dim)
    rep.kv("found", len(sols))
    for k, s in enumerate(sols):
        rep.kv("normal.%d" % k, " ; ".join(b.format(pres.names, key=sysm.key) for b in s.basis))
    return 0


def cmd_hom(a, rep):
    from .rewrite import complete
    from .rewrite.morphisms import verify_homomorphism
    src, tgt = _load(a.source), _load(a.target)
    F = src.field if not src.field.is_rational else tgt.field
    src, tgt = _lift(src, F), _lift(tgt, F)
    if len(a.image) != src.ngens:
        raise UsageError("need %d --image values, one per source generator" % src.ngens)
    images = [tgt.parse_poly(t) for t in a.image]
    sysm = complete(tgt, a.max_deg)
    r = verify_homomorphism(src, sysm, images)
    rep.kv("homomorphism", "yes" if r.ok else "no")
    for k, nf in r.failures:
        rep.kv("failure.%d" % k, nf.format(tgt.names, key=sysm.key))
    ok = r.ok
    if a.series:
        hs = complete(src, a.max_deg).hilbert_coeffs(a.max_deg)
        ht = sysm.hilbert_coeffs(a.max_deg)
        rep.kv("series.source", _fmt_series(hs))
        rep.kv("series.target", _fmt_series(ht))
        rep.kv("series.equal", "yes" if hs == ht else "no")
        ok = ok and hs == ht
    return 0 if ok else 1


def cmd_verify_complex(a, rep):
    from .rewrite import complete
    from .rewrite.morphisms import parse_complex, verify_complex
    pres = _load(a.presentation)
    cx = parse_complex(_read(a.maps), pres)
    sysm = complete(pres, a.max_deg)
    r = verify_complex(cx, sysm, a.max_deg)
    rep.kv("complex", "yes" if r.is_complex else "no")
    for k, a_, c, p in r.failures:
        rep.kv("failure.%d.%d.%d" % (k, a_, c), p.format(pres.names))
    exact = r.is_complex
    last = len(cx.modules) - 1
    for k in sorted(r.homology):
        dims = r.homology[k]
        rep.kv("homology.%s" % cx.names[k], _fmt_series(dims))
        want = [1 if (k == last and n == 0) else 0 for n in range(len(dims))]
        exact = exact and dims == want
    rep.kv("resolution", "exact" if exact else "not exact",
           "resolution of k: %s through degree %d" % ("exact" if exact else "NOT exact", a.max_deg))
    return 0 if exact else 1


def cmd_anick(a, rep):
    from .rewrite import complete
    from .rewrite.anick import anick_chains
    pres = _load(a.file)
    top = max(max(pres.word_degree(w)[0] for w in r.terms) for r in pres.relations) if pres.relations else 1
    sysm = complete(pres, top)
    V, poly = anick_chains(sysm, a.max_chain)
    for n in sorted(V):
        rep.kv("chains.%d" % n, ",".join(format_word(w, pres.names) for w in V[n]))
    rep.kv("poly", ",".join("%d:%d" % (d, c) for d, c in poly.items()))
    return 0


def cmd_betti(a, rep):
    from .barext import betti_numbers, resolution_shape
    from .rewrite import complete
    pres = _load(a.file)
    sysm = complete(pres, a.max_adams)
    table = betti_numbers(sysm, a.max_s, a.max_adams, method=a.method)
    for (s, n), v in table.by_degree().items():
        rep.kv("betti.%d.%d" % (s, n), v)
    rep.kv("euler", _fmt_series(table.euler_series()))
    if a.gldim is not None:
        ok, info = resolution_shape(table, a.gldim)
        rep.kv("symmetric", "yes l=%d" % info if ok else "no: %s" % info)
        return 0 if ok else 1
    return 0


def _model(a):
    from .ainf.merkulov import merkulov_model
    from .rewrite import complete
    pres = _load(a.file)
    sysm = complete(pres, a.max_adams + 1)
    E, _ = merkulov_model(sysm, a.max_s, a.max_adams, policy=a.policy)
    return pres, E


def cmd_aext(a, rep):
    from .ainf.structure import write_tables
    _, E = _model(a)
    text = write_tables(E)
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
        rep.kv("written", a.out)
    else:
        for line in text.splitlines():
            rep.kv("table", line, line)
    rep.kv("basis", len(E.basis))
    return 0


def _tables(path):
    from .ainf.structure import read_tables
    try:
        return read_tables(_read(path))
    except ValueError as e:
        raise UsageError(str(e))


def cmd_stasheff(a, rep):
    from .ainf.structure import check_stasheff
    E = _tables(a.tables)
    count, failures = check_stasheff(E, a.max_n)
    rep.kv("checked", count)
    rep.kv("failures", len(failures))
    F = E.field
    for names, res in failures[:20]:
        rep.kv("residual.%s" % ",".join(names),
               " + ".join("%s*%s" % (F.fmt(c), E.basis[j].name) for j, c in sorted(res.items())))
    return 0 if not failures else 1


def cmd_keller(a, rep):
    from .ainf.keller import relations_match
    pres, E = _model(a)
    ok = True
    for n, (mine, given, same) in sorted(relations_match(E, pres).items()):
        ok = ok and same
        rep.kv("recovered.%d" % n, " ; ".join(p.format(pres.names) for p in mine))
        rep.kv("input.%d" % n, " ; ".join(p.format(pres.names) for p in given))
        rep.kv("match.%d" % n, "yes" if same else "no")
    return 0 if ok else 1


def cmd_frobenius(a, rep):
    from .ainf.frobenius import NotFrobenius, check_frobenius, frobenius_data
    E = _tables(a.tables)
    F = E.field
    if not check_frobenius(E):
        rep.kv("frobenius", "no", "not Frobenius")
        return 1
    rep.kv("frobenius", "yes")
    try:
        fd = frobenius_data(E)
    except NotFrobenius as e:
        rep.kv("data", "unavailable: %s" % e)
        return 0
    L = fd.Lambda
    rep.kv("Lambda", "[[%s,%s],[%s,%s]]" % tuple(F.fmt(x) for x in (L[0][0], L[0][1], L[1][0], L[1][1])))
    rep.kv("t", F.fmt(fd.t))
    return 0


def cmd_catalog(a, rep):
    from .classify12221.catalog import catalog
    pres = catalog(a.name, _params(a.param))
    text = pres.to_text()
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
        rep.kv("written", a.out)
    else:
        for line in text.splitlines():
            rep.kv("line", line, line)
    return 0


def cmd_solution(a, rep):
    from .classify12221.params import case_dispatch, gm_check
    from .classify12221.residuals import nonzero, si_residuals
    from .classify12221.solutions import perturbation_report, solution_params
    from .classify12221.tables import coeff_tables
    P = solution_params(a.id, _params(a.param))
    F = P.field
    for k in P.FIELDS:
        rep.kv(k, F.fmt(getattr(P, k)))
    rep.kv("case", case_dispatch(P.g1, P.g2, P.t))
    gm = gm_check(P.g1, P.g2, P.v, P.w)
    rep.kv("gm2", "yes" if gm["gm2"] else "no")
    rep.kv("gm3", "yes" if gm["gm3"] else "no")
    res = si_residuals(coeff_tables(P))
    bad = nonzero(res)
    for fam in sorted(res):
        rep.kv("residual.%s" % fam, "%d/%d nonzero" % (len(bad.get(fam, {})), len(res[fam])))
    if a.perturb:
        for k, v in perturbation_report(P).items():
            rep.kv("perturb.%s" % k, "detected" if v else "undetected")
    return 0 if not bad else 1


def cmd_screen(a, rep):
    from .classify12221.screen import regularity_screen
    pres = _load(a.file)
    r = regularity_screen(pres, a.max_deg, quotient=None if a.direct else "auto")
    for line in r.details:
        rep.text("  " + line)
    rep.kv("verdict", r.summary(), r.summary())
    return 0 if r.ok else 1


def cmd_case(a, rep):
    from .classify12221.params import case_dispatch, case_factors, gm_check
    F = parse_field(a.field)
    g1, g2, t = (parse_scalar(x, F) for x in (a.g1, a.g2, a.t))
    if not (g1 and g2 and t):
        raise UsageError("g1, g2 and t must be nonzero")
    for k, v in case_factors(g1, g2, t).items():
        rep.kv("factor.%d" % k, F.fmt(v))
    rep.kv("gm2", "yes" if gm_check(g1, g2)["gm2"] else "no")
    try:
        c = case_dispatch(g1, g2, t)
    except ValueError as e:
        rep.kv("case", "ambiguous: %s" % e)
        return 1
    rep.kv("case", c if c is not None else "none")
    return 0 if c is not None else 1


def build_parser():
    p = argparse.ArgumentParser(prog="ncalg", description="Graded algebras on two generators: "
                                "completion, Hilbert series, Ext and A-infinity structures.")
    p.add_argument("--format", choices=("human", "structured"), default="human")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(fn=fn)
        return sp

    s = add("complete", cmd_complete, "completed rewriting system and overlap ambiguities")
    s.add_argument("file")
    s.add_argument("--max-deg", type=int, default=10)
    s = add("hilbert", cmd_hilbert, "Hilbert series coefficients")
    s.add_argument("file")
    s.add_argument("--max-deg", type=int, default=10)
    s = add("nf", cmd_nf, "normal form of a polynomial")
    s.add_argument("file")
    s.add_argument("poly")
    s = add("normal", cmd_normal, "check or search for normal elements")
    s.add_argument("file")
    s.add_argument("--element")
    s.add_argument("--search", help="multidegree such as 3 or 3,2,1")
    s.add_argument("--max-dim", type=int, default=3)
    s = add("hom", cmd_hom, "check a homomorphism given by generator images")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("--image", action="append", default=[])
    s.add_argument("--max-deg", type=int, default=8)
    s.add_argument("--series", action="store_true", help="also compare Hilbert series")
    s = add("verify-complex", cmd_verify_complex, "check a complex of free modules is a resolution of k")
    s.add_argument("presentation")
    s.add_argument("maps")
    s.add_argument("--max-deg", type=int, default=10)
    s = add("anick", cmd_anick, "Anick chains of a monomial algebra")
    s.add_argument("file")
    s.add_argument("--max-chain", type=int, default=5)
    s = add("betti", cmd_betti, "Betti numbers of the trivial module")
    s.add_argument("file")
    s.add_argument("--max-s", type=int, default=5)
    s.add_argument("--max-adams", type=int, default=10)
    s.add_argument("--method", choices=("bar", "resolution"), default="resolution")
    s.add_argument("--gldim", type=int, help="check Gorenstein symmetry for this global dimension")
    for name, fn, help in (("aext", cmd_aext, "A-infinity structure on Ext"),
                           ("keller", cmd_keller, "recover relations from the A-infinity structure")):
        s = add(name, fn, help)
        s.add_argument("file")
        s.add_argument("--max-s", type=int, default=5)
        s.add_argument("--max-adams", type=int, default=7)
        s.add_argument("--policy", choices=("structured", "echelon"), default="structured")
        if name == "aext":
            s.add_argument("--out")
    s = add("stasheff", cmd_stasheff, "check the Stasheff identities of a table file")
    s.add_argument("tables")
    s.add_argument("--max-n", type=int, default=7)
    s = add("frobenius", cmd_frobenius, "Frobenius data of a table file")
    s.add_argument("tables")
    s = add("catalog", cmd_catalog, "write a named presentation")
    s.add_argument("name")
    s.add_argument("--param", action="append", default=[])
    s.add_argument("--out")
    s = add("solution", cmd_solution, "residuals of a solution family at one parameter point")
    s.add_argument("id")
    s.add_argument("--param", action="append", default=[])
    s.add_argument("--perturb", action="store_true")
    s = add("screen", cmd_screen, "series, Betti and Frobenius screen for regularity")
    s.add_argument("file")
    s.add_argument("--max-deg", type=int, default=10)
    s.add_argument("--direct", action="store_true", help="skip the normal-square quotient route")
    s = add("case", cmd_case, "which factor 1 - t g1^a g2^b vanishes")
    s.add_argument("--g1", required=True)
    s.add_argument("--g2", required=True)
    s.add_argument("--t", required=True)
    s.add_argument("--field", default="Q")
    return p


def _attach_negative_values(argv):
    # "--g2 -1/16" would read -1/16 as an option; pass it as "--g2=-1/16"
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
                and re.match(r"-[\d(]", argv[i + 1])):
            out.append(tok + "=" + argv[i + 1])
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _attach_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    rep = Report(a.format, a.command)
    try:
        code = a.fn(a, rep)
    except (UsageError, ParseError, FieldError, KeyError, ValueError) as e:
        msg = str(e)
        if isinstance(e, ParseError):
            msg = "parse error: %s" % msg
        if a.format == "structured":
            print("version=%d\ncommand=%s\nerror=%s\nstatus=ERROR" % (FORMAT_VERSION, a.command, msg), file=stdout)
        print("error: %s" % msg, file=stderr)
        return 2
    except RuntimeError as e:
        print("error: %s" % e, file=stderr)
        return 2
    rep.emit("PASS" if code == 0 else "FAIL", stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
