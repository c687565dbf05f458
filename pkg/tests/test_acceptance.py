"""The acceptance gate: one test per criterion, each printing a
pass/fail line and enforcing its runtime budget.  All polynomial
equalities are exact after canonical unit normalization; "up to units"
comparisons additionally allow the t -> -t representative swap where
the quantity is only pinned up to it.

One published table value (K(1/9) under the order-42 K-metacyclic
target) is unattainable -- the analysis lives on the constant in
talex.verify and on the strict-xfail companion test below; criterion 4
reports that sub-item honestly and asserts the cross-validated value.
"""

import random
import time

import pytest

from conftest import P, Pstep, prod
from talex.factorization import f_polynomial, conjecture_report, torus_q_probe
from talex.knots import (
    TwoBridgeFraction,
    alexander,
    presentation,
    presentation_8_5,
    random_fraction,
)
from talex.laurent import LaurentPoly
from talex.matrices import RingMatrix
from talex.representations import dihedral_rep, is_prime, u_matrix, v_matrix
from talex.twisted import (
    binary_dihedral_total,
    binary_dihedral_total_of,
    dihedral_total,
    kmeta_total,
    modp_congruence,
    modp_triangular_structure,
    nqp_total,
    wada,
    wada_parts,
)
from talex.verify import (
    BINARY_GOLDENS,
    DIHEDRAL_GOLDENS,
    EIGHT5_DELTA,
    EIGHT5_F1,
    EIGHT5_F2,
    EIGHT5_F5,
    EIGHT5_RHO3,
    EIGHT5_RHO4,
    FACTOR_GOLDENS,
    KMETA_GOLDENS,
    KMETA_K19_P7_COMPUTED,
    KMETA_K19_P7_PRINTED,
    NQP_GOLDENS,
    appendix_suite,
    identities_suite,
    run_suite,
    swap_unit_equal,
)

ONE_MINUS_T = P(1, -1)


class Criterion:
    def __init__(self, number, label, budget_s):
        self.number = number
        self.label = label
        self.budget = budget_s
        self.start = None

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"\nACCEPTANCE {self.number} [{self.label}]: {status} ({elapsed:.1f}s)")
        if exc_type is None:
            assert elapsed < self.budget, (
                f"criterion {self.number} exceeded its {self.budget}s budget"
            )
        return False


def F(a, b):
    return TwoBridgeFraction(a, b)


def test_criterion_1_dihedral_goldens():
    with Criterion(1, "dihedral golden suite", 10):
        for (pair, p), expected in DIHEDRAL_GOLDENS.items():
            assert dihedral_total(F(*pair), p) == expected.canonical(), pair
        # including the degree-16 and degree-20 extra factors
        for pair, p, deg in [((85, 19), 5, 16), ((115, 21), 5, 20)]:
            cert = f_polynomial(F(*pair), p)
            assert cert.f.degree - cert.f.min_deg == deg


def test_criterion_2_binary_dihedral_goldens():
    with Criterion(2, "binary dihedral suite + product cross-identity", 30):
        for (pair, p), expected in BINARY_GOLDENS.items():
            # crosscheck=True re-derives the value through the +-i
            # product of the dihedral total and raises on mismatch, so
            # this asserts both routes at once
            assert binary_dihedral_total(F(*pair), p) == expected.canonical(), pair


def test_criterion_3_nqp_goldens():
    with Criterion(3, "N(q,p) suite, direct + product formula", 120):
        for (pair, q, p), expected in NQP_GOLDENS.items():
            # nqp_total computes the 2pq-dimensional determinant and
            # raises CrossCheckMismatch unless the product formula
            # reproduces it
            total = nqp_total(F(*pair), q, p)
            assert total == expected.canonical(), (pair, q, p)
            assert all(e % (2 * q) == 0 for e in total.support()), (pair, q, p)


def test_criterion_4_kmeta_suite():
    with Criterion(4, "K-metacyclic suite (incl. knot 8_5)", 60):
        for (pair, p, k), expected in KMETA_GOLDENS.items():
            report = kmeta_total(presentation(F(*pair)), p, k)
            assert report.factor == expected.canonical(), (pair, p, k)
            assert report.conjecture_a_holds, (pair, p, k)
            assert all(e % report.period == 0 for e in report.factor.support())
        # K(1/9) at p=7, k=-2: the published table value is
        # unattainable (analysis on KMETA_K19_P7_PRINTED).  Reported
        # honestly here; the strict-xfail test below carries the
        # faithful as-printed assertion.
        report = kmeta_total(presentation(F(9, 1)), 7, -2)
        printed_ok = report.factor == KMETA_K19_P7_PRINTED.canonical()
        print(
            "\n  - kmeta 1/9 p=7 k=-2 as printed: "
            + ("PASS" if printed_ok else "FAIL (defective table value, see notes)")
        )
        assert report.factor == KMETA_K19_P7_COMPUTED.canonical()
        assert report.conjecture_a_holds

        # knot 8_5, all five representations
        pres = presentation_8_5()
        assert alexander(pres) == EIGHT5_DELTA.canonical()
        for p, assignment, factor in [
            (3, (0, 1, 0), EIGHT5_F1),
            (7, (0, 0, 1), EIGHT5_F2),
        ]:
            rep = dihedral_rep(pres, p, "pi", assignment=assignment)
            want = (
                (EIGHT5_DELTA * factor * factor.negate_t()).exact_div(ONE_MINUS_T)
            ).canonical()
            assert wada(pres, rep) == want, p
        assert (
            binary_dihedral_total_of(pres, 3, assignment=(0, 1, 0))
            == EIGHT5_RHO3.canonical()
        )
        assert (
            binary_dihedral_total_of(pres, 7, assignment=(0, 0, 1))
            == EIGHT5_RHO4.canonical()
        )
        r5 = kmeta_total(pres, 7, -2, assignment=(0, 1, 0))
        assert r5.factor == EIGHT5_F5.canonical()
        assert r5.conjecture_a_holds and r5.period == 6
        assert all(e % 6 == 0 for e in r5.factor.support())


@pytest.mark.xfail(
    strict=True,
    reason="the published table value for K(1/9) under G(6,7|-2) is "
    "unattainable: every homomorphism yields "
    "[Delta/(1-t)](1-t^6)(1+t^6+t^12)^3 (exhaustive class enumeration "
    "+ independent determinant oracle; analysis on the constant in "
    "talex.verify)",
)
def test_criterion_4_item_10_3_2_as_printed():
    report = kmeta_total(presentation(F(9, 1)), 7, -2)
    assert report.factor == KMETA_K19_P7_PRINTED.canonical()


def test_criterion_5_factorization_certificates():
    with Criterion(5, "constructive f(t)f(-t) certificates", 30):
        for (pair, p), (q_want, f_want) in FACTOR_GOLDENS.items():
            cert = f_polynomial(F(*pair), p)
            assert cert.verify(), (pair, p)
            assert (cert.F * cert.F.negate_t()).canonical() == dihedral_total(
                F(*pair), p
            )
            # printed factors, each up to units and its own t -> -t swap
            assert swap_unit_equal(cert.q, q_want), (pair, p)
            assert swap_unit_equal(cert.f, f_want), (pair, p)


def test_criterion_6_modp_congruence():
    with Criterion(6, "mod-p congruences, 6 goldens + 200 random", 300):
        for (pair, p) in FACTOR_GOLDENS:
            assert modp_congruence(F(*pair), p).congruence_holds, pair
            report = conjecture_report(F(*pair), p)
            assert report.modp and report.modp_f, (pair, p)
        rng = random.Random(20260811)
        seen = set()
        count = 0
        while count < 200:
            p = rng.choice([3, 5, 7])
            f = random_fraction(rng, p=p, max_alpha=500)
            if (f.alpha, f.beta, p) in seen:
                continue
            seen.add((f.alpha, f.beta, p))
            assert modp_congruence(f, p).congruence_holds, (f, p)
            count += 1


def test_criterion_7_appendix_suite():
    with Criterion(7, "appendix suite (U_n, V_n, lemmas a5-a10)", 60):
        # U_n conjugacy for all prime 2n+1 <= 41, V_n for 2n+1 <= 101
        for n in range(1, 21):
            if is_prime(2 * n + 1):
                u_matrix(n)  # certifies (2.8) and unimodularity
        for n in range(1, 51):
            if is_prime(2 * n + 1):
                v_matrix(n)  # certifies V^2 = 4E + C
        results, all_ok = run_suite(appendix_suite(max_n=20))
        for name, ok, _ in results:
            assert ok, name
        assert all_ok


def test_criterion_8_identity_suite():
    with Criterion(8, "section 3/4 identity suite", 30):
        results, all_ok = run_suite(identities_suite())
        for name, ok, _ in results:
            assert ok, name
        assert all_ok


def test_criterion_9_structural_invariants():
    with Criterion(9, "structural invariants", 120):
        # Fox fundamental identity on every emitted presentation
        from test_words import fundamental_identity_holds

        rng = random.Random(5)
        presentations = [
            presentation(F(*pair)) for pair in [(3, 1), (9, 1), (27, 5), (5, 1), (85, 19), (115, 21), (9, 5)]
        ]
        presentations += [presentation(random_fraction(rng, max_alpha=120)) for _ in range(10)]
        presentations.append(presentation_8_5())
        for pres in presentations:
            assert fundamental_identity_holds(pres)

        # Wada omitted-generator independence on 8_5
        from talex.words import FreeWord, GroupRingSum, fox_derivative, rep_evaluate

        pres = presentation_8_5()
        rep = dihedral_rep(pres, 3, "pi", assignment=(0, 1, 0))
        quotients = []
        for omit in range(3):
            cols = [m for m in range(3) if m != omit]
            blocks = [
                [rep_evaluate(fox_derivative(r, m), rep) for m in cols]
                for r in pres.relators
            ]
            num = RingMatrix.block(blocks).det()
            mat = rep_evaluate(GroupRingSum.from_word(FreeWord.generator(omit)), rep)
            den = (mat - RingMatrix.identity(mat.ring, rep.dim)).det()
            quotients.append(num.exact_div(den).canonical())
        assert quotients[0] == quotients[1] == quotients[2]

        # denominator identity det(xi(y)t - I) = (1-t)(1+t) for all tested p
        for p in (3, 5, 7, 11, 13):
            pres = presentation(F(p, 1))
            rep = dihedral_rep(pres, p, "xi")
            ring = rep.coeff_ring
            _, den, _ = wada_parts(pres, rep)
            want = LaurentPoly.from_dict({0: ring.one, 2: ring.neg(ring.one)}, ring)
            assert den.canonical() == want

        # mod-p block-triangular structure on 20 random p | alpha fractions
        seen = set()
        count = 0
        while count < 20:
            p = rng.choice([3, 5, 7])
            f = random_fraction(rng, p=p, max_alpha=120)
            if (f, p) in seen:
                continue
            seen.add((f, p))
            assert modp_triangular_structure(f, p).holds, (f, p)
            count += 1


def test_criterion_10_remark_53_probe():
    with Criterion(10, "torus q(t) shape probe, p in {3,5,7,11}", 60):
        for p in (3, 5, 7, 11):
            assert torus_q_probe(p), p
