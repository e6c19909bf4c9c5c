"""Acceptance criteria 1-8, one PASS/FAIL line each, exact equality throughout."""
import time

import pytest

from ncalg.ainf import check_frobenius, check_stasheff, frobenius_data, merkulov_model, relations_match, write_tables
from ncalg.barext import BarComplex, betti_numbers, resolution_shape, word_multidegrees
from ncalg.classify12221 import (MAPS, SAMPLES, SOLUTIONS, catalog, ore_maps, ore_presentation, perturbation_report,
                                 residual_report, solution_params)
from ncalg.cli import run
from ncalg.freealg import format_word
from ncalg.rewrite import complete, overlap_ambiguities, resolve_ambiguity
from ncalg.rewrite.morphisms import parse_complex, verify_complex, verify_homomorphism
from ncalg.rewrite.normal import is_normal, search_normal

from conftest import FIXTURES

HS = [1, 2, 4, 7, 11, 16, 23, 31, 41, 53, 67]
REGULARS = {"A2": ("A", {"p": 2}), "B1": ("B", {"p": 1}), "C1": ("C", {"p": 1}), "D32": ("D", {"v": 3, "p": 2})}


class Criterion:
    def __init__(self, number, capsys, budget):
        self.number = number
        self.capsys = capsys
        self.budget = budget
        self.failed = []

    def check(self, label, ok):
        if not ok:
            self.failed.append(label)

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is not None:
            self.failed.append("%s: %s" % (exc_type.__name__, exc))
        if elapsed > self.budget:
            self.failed.append("took %.1fs, budget %ds" % (elapsed, self.budget))
        status = "PASS" if not self.failed else "FAIL (%s)" % "; ".join(self.failed)
        with self.capsys.disabled():
            print("\ncriterion %d: %s [%.1fs]" % (self.number, status, elapsed))
        assert not self.failed
        return False


def hilbert_cli(capsys, name):
    code = run(["--format", "structured", "hilbert", str(FIXTURES / name), "--max-deg", "10"])
    out = capsys.readouterr().out
    return code, dict(line.split("=", 1) for line in out.splitlines())


def test_criterion_1_hilbert_series(capsys):
    with Criterion(1, capsys, 30 * 5) as c:
        for name in ("A2", "B2", "C2", "D32", "O"):
            t0 = time.perf_counter()
            code, out = hilbert_cli(capsys, name + ".ncp")
            c.check(name + " exit", code == 0)
            c.check(name + " series", out.get("hilbert") == ",".join(map(str, HS)))
            c.check(name + " runtime", time.perf_counter() - t0 < 30)


def test_criterion_2_non_regular_series(capsys):
    with Criterion(2, capsys, 4 * 60) as c:
        X = complete(catalog("X", {"p": 2, "h": 3}), 5).hilbert_coeffs(5)
        c.check("X(2,3) t^5", X[5] == 17)
        Y = catalog("Y", {"h": 2, "f": 5})
        Yq = complete(Y.with_relations(list(Y.relations) + [Y.parse_poly("z2^2")]), 5).hilbert_coeffs(5)
        c.check("Y(2,5)/(z2^2) t^5", Yq[5] == 10)
        Z = complete(catalog("Z", {"p": 2, "h": 3}), 7).hilbert_coeffs(7)
        c.check("Z(2,3) t^7", Z[7] == 32)
        Zm = complete(catalog("Z", {"p": 2, "h": -2}), 7).hilbert_coeffs(7)
        c.check("Z(2,-2) t^5..t^7", Zm[5:] == [17, 26, 39])


def test_criterion_3_completion(capsys):
    with Criterion(3, capsys, 120) as c:
        A = complete(catalog("A", {"p": 2}), 10)
        c.check("A(2) r5", A.format_rule(A.rules[2])
                == "z2*z1*z2*z1^2 = -1/2*z2*z1^2*z2*z1 + 1/8*z1*z2*z1^2*z2 + 1/16*z1^2*z2*z1*z2")
        amb = overlap_ambiguities(A)
        c.check("A(2) ambiguities", [format_word(w, A.pres.names) for w, _, _ in amb]
                == ["z2^2*z1^3", "z2*z1*z2*z1^3", "z2^2*z1*z2*z1^2"])
        c.check("A(2) resolvable", all(not resolve_ambiguity(A, *a) for a in amb))
        C = complete(catalog("C", {"p": 1}), 10)
        j = C.field.gen
        r5 = C.rules[2]
        c.check("C(1) r5", (r5.lead, r5.tail) == ((1, 0, 1, 0, 0), {
            (0, 0, 0, 1, 1): j ** 2, (0, 0, 1, 0, 1): C.field(-1), (0, 1, 0, 1, 0): C.field(1)}))
        amb = overlap_ambiguities(C)
        c.check("C(1) ambiguities", len(amb) == 3 and all(not resolve_ambiguity(C, *a) for a in amb))
        c.check("rule count", len(A.rules) == len(C.rules) == 3)


def test_criterion_4_betti_tables(capsys):
    with Criterion(4, capsys, 300) as c:
        S = complete(catalog("A", {"p": 2}), 10)
        res = betti_numbers(S, 5, 10, method="resolution")
        c.check("pattern", res.by_degree() == {(0, 0): 1, (1, 1): 2, (2, 3): 1, (2, 4): 1, (3, 6): 2, (4, 7): 1})
        c.check("symmetry l=7", resolution_shape(res, 4) == (True, 7))
        bar = betti_numbers(S, 5, 8, method="bar")
        c.check("bar = resolution to t^8", bar.entries == betti_numbers(S, 5, 8, method="resolution").entries)
        B = BarComplex(S)
        for n in range(3, 9):
            for md in word_multidegrees(S.pres, n):
                for s in range(3, n + 1):
                    c.check("d^2 at %s,%s" % (s, md), B.check_d_squared(s, md))
        e, h = res.euler_series(), S.hilbert_coeffs(10)
        prod = [sum(e[i] * h[k - i] for i in range(k + 1)) for k in range(11)]
        c.check("Euler duality to t^10", prod == [1] + [0] * 10)


def test_criterion_5_merkulov_keller(capsys):
    with Criterion(5, capsys, 600) as c:
        for name, (key, params) in REGULARS.items():
            S = complete(catalog(key, params), 8)
            E, _ = merkulov_model(S, 4, 7, "structured")
            E2, _ = merkulov_model(S, 4, 7, "echelon")
            match = relations_match(E, S.pres)
            c.check(name + " keller", sorted(match) == [3, 4] and all(ok for _, _, ok in match.values()))
            checked, failures = check_stasheff(E, 7)
            c.check(name + " stasheff", checked > 0 and failures == [])
            c.check(name + " m5=m6=0", not E.tables.get(5) and not E.tables.get(6))
            c.check(name + " policies", write_tables(E) == write_tables(E2))


def test_criterion_6_frobenius(capsys):
    with Criterion(6, capsys, 120) as c:
        models = {}
        for name, (key, params) in REGULARS.items():
            E, _ = merkulov_model(complete(catalog(key, params), 8), 4, 7)
            models[name] = E
            c.check(name + " frobenius", check_frobenius(E))
        fd = frobenius_data(models["A2"])
        F = models["A2"].field
        c.check("Lambda diagonal", fd.Lambda[0][1] == 0 and fd.Lambda[1][0] == 0)
        c.check("eigenvalues", fd.eigenvalues == (F(-8), F(-1) / 16))
        c.check("t", fd.t == F(1) / 32)
        P = solution_params("1.2a", {"p": 2})
        c.check("solution 1.2a", (P.g1, P.g2, P.t) == (fd.eigenvalues + (fd.t,)))
        c.check("t = -g1 g2^2", fd.t == -P.g1 * P.g2 ** 2)


def test_criterion_7_solution_residuals(capsys):
    with Criterion(7, capsys, 300) as c:
        for sid in ("1.1", "1.2a", "1.2b", "1.3a", "2.1", "2.2", "2.3"):
            c.check(sid + " samples", len(SAMPLES[sid]) >= 3)
            for values in SAMPLES[sid]:
                P, bad = residual_report(sid, values)
                c.check("%s %s residuals" % (sid, values), bad == {})
                pert = perturbation_report(P)
                c.check("%s %s perturbations" % (sid, values), len(pert) == 8 and all(pert.values()))


def test_criterion_8_structural_checks(capsys):
    with Criterion(8, capsys, 300) as c:
        A = catalog("A", {"p": 2})
        SA = complete(A, 6)
        c.check("h normal in A(2)", is_normal(A.parse_poly("z1^2*z2 + 4*z2*z1^2"), SA).normal)
        B = catalog("B", {"p": 2})
        SB = complete(B, 6)
        c.check("z2^2 normal in B(2)", is_normal(B.parse_poly("z2^2"), SB).normal)
        c.check("z1^4 normal in B(2)", is_normal(B.parse_poly("z1^4"), SB).normal)
        Cc = catalog("C", {"p": 2})
        SC = complete(Cc, 6)
        c.check("z1^3 normal in C(2)", is_normal(Cc.parse_poly("z1^3"), SC).normal)
        c.check("z2^3 normal in C(2)", is_normal(Cc.parse_poly("z2^3"), SC).normal)
        found = [s for md in word_multidegrees(B, 3) for s in search_normal(SB, md)]
        c.check("no degree-3 normal element in B(2)", found == [])
        for key in ("B1", "C1"):
            name, params, text = MAPS[key]
            P = catalog(name, params)
            r = verify_complex(parse_complex(text, P), complete(P, 10), 10)
            c.check(key + " complex", r.is_complex)
            c.check(key + " exact", r.homology[4] == [1] + [0] * 10
                    and all(not any(r.homology[k]) for k in range(4)))
        D = catalog("D", {"v": 3, "p": 2})
        ore = ore_presentation({"v": 3, "p": 2})
        to_ore, to_d, D_ext = ore_maps(ore, D)
        So, Sd = complete(ore, 8), complete(D_ext, 8)
        c.check("D -> Ore", verify_homomorphism(D_ext, So, to_ore).ok)
        c.check("Ore -> D", verify_homomorphism(ore, Sd, to_d).ok)
        c.check("equal series", So.hilbert_coeffs(8) == Sd.hilbert_coeffs(8) == HS[:9])
