"""
Executable reproductions and bundled verification suites.

Every suite returns a :class:`ScenarioReport`; the JSON form is
deterministic apart from ``duration_ms``.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import product
from math import comb, gcd

from .amalgam import (
    CyclicFactor,
    FreeProduct,
    build_presentation,
    brute_force_cover_supports,
    index_of,
    kernel_basis_checks,
    fat_symmetric_smoke,
    lemma35_checks,
    minimal_cover_patterns,
    minimal_cover_supports,
    pair_symbols,
)
from .braid import (
    GeometricBraid,
    braid_equal,
    cable,
    degeneracy_formula,
    embed_generator,
    embed_word,
    face_formula,
    full_twist,
    geometric_double_strand,
    geometric_remove_strand,
    is_brunnian,
    is_trivial,
    pure_braid_relations,
    pure_generators,
    random_pure_word,
    face_map,
    degeneracy_map,
)
from .nilpotent import Class2Group
from .nilpotent.smith import Lattice
from .simplicial import (
    alpha_bar_k,
    alpha_k,
    ap_spec,
    check_simplicial_identities,
    check_simplicial_map,
    delta_bar_spec,
    f_tilde_spec,
    f_tilde_to_milnor,
    g_script_spec,
    injectivity_spot_check,
    milnor_spec,
    moore_membership,
    phi_alpha,
    phi_alpha_geometric,
    sphere_cells,
    theta,
    theta_image,
    y_cables,
)
from .words import Word, commutator, in_normal_closure_free_quotient, letter

__all__ = [
    "ScenarioReport",
    "SUITES",
    "DEFAULT_SEED",
    "verify_free_product_model",
    "compute_pi3_moore",
    "pi3_moore_group",
    "run_suite",
]

DEFAULT_SEED = 7


@dataclass
class ScenarioReport:
    suite: str
    params: dict
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    duration_ms: int = 0

    def add(self, name: str, ok: bool, witness=None):
        entry = {"name": name, "status": "pass" if ok else "fail"}
        if witness is not None:
            entry["witness"] = witness
        self.checks.append(entry)
        return ok

    @property
    def passed(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c["status"] != "pass"]

    def to_dict(self, with_duration: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "params": self.params,
            "passed": self.passed,
            "checks": self.checks,
        }
        if self.notes:
            out["notes"] = self.notes
        if with_duration:
            out["duration_ms"] = self.duration_ms
        return out

    def to_json(self, with_duration: bool = True) -> str:
        return json.dumps(self.to_dict(with_duration), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"suite {self.suite} params={json.dumps(self.params, sort_keys=True)}"]
        for c in self.checks:
            line = f"  {c['status'].upper():4} {c['name']}"
            if "witness" in c and c["status"] != "pass":
                line += f"  witness={json.dumps(c['witness'], sort_keys=True)}"
            lines.append(line)
        for n in self.notes:
            lines.append(f"  note: {n}")
        lines.append(f"{'PASS' if self.passed else 'FAIL'} ({len(self.checks) - len(self.failures())}/{len(self.checks)} checks)")
        return "\n".join(lines) + "\n"


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.duration_ms = int((time.perf_counter() - t0) * 1000)
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# ---------------------------------------------------------------------------
# the cyclic free product model


def _g_prime(m: int):
    """``(Z/m * Z/m)^3`` as three free products, one per index pair."""
    blocks = {}
    for i, j in ((1, 2), (1, 3), (2, 3)):
        blocks[(i, j)] = FreeProduct({
            "A": CyclicFactor(letter("A", i, j), m),
            "A'": CyclicFactor(letter("A'", i, j), m),
        })
    return blocks


def _phi(blocks, w: Word) -> dict:
    """Image of a word over ``A``, ``A'`` in ``G'``; other letters must be absent."""
    out = {p: () for p in blocks}
    for g, e in w.letters:
        fp = blocks[g.indices]
        out[g.indices] = fp.mul(out[g.indices], fp.from_word(Word.gen(g, e)))
    return out


def _is_one(img: dict) -> bool:
    return all(v == () for v in img.values())


def _block_elements(m: int, i: int, j: int, max_syllables: int) -> list:
    """All normal forms in ``Z/m * Z/m`` with at most ``max_syllables`` syllables."""
    out = [()]
    tags = ("A", "A'")
    for s in range(1, max_syllables + 1):
        for first in (0, 1):
            for powers in product(range(1, m), repeat=s):
                out.append(tuple((tags[(first + t) % 2], powers[t]) for t in range(s)))
    return out


@_timed
def verify_free_product_model(m: int = 2, depth: int = 2, center_length: int = 4) -> ScenarioReport:
    """The decidable steps of the exceptional case ``n = k = 3``, ``alpha = A[1,2]^m``."""
    if m < 2:
        raise ValueError("m >= 2 required")
    rep = ScenarioReport("example39", {"m": m, "depth": depth, "center_length": center_length})
    rep.notes.append("centrality inside G itself is not checked (no word problem for G); only the decidable derivation steps are")
    alpha = Word.gen(letter("A", 1, 2), m)

    # (i) amalgamation relators
    doc = build_presentation("sphere", 3, k=3, alpha=alpha, depth=depth)
    amal = [(lhs, rhs) for fam, lhs, rhs in doc.relators if fam == "amalgamation y_j"]
    a = {p: Word.gen(letter("A", *p)) for p in ((1, 2), (1, 3), (2, 3))}
    expected = {(a[(1, 3)] * a[(2, 3)]) ** m, (a[(1, 2)] * a[(1, 3)]) ** m}
    got = {lhs for lhs, _ in amal}
    theta_pow = {w ** m for w in theta_image(2)}
    rep.add("cable relators are the phi_alpha images (unordered)", got == expected == theta_pow,
            {"got": sorted(map(str, got)), "expected": sorted(map(str, expected))})
    primes_ok = all(rhs == lhs.map_letters(lambda g: g._replace(name="A'")) for lhs, rhs in amal)
    rep.add("cable right sides are the primed copies", primes_ok)

    # (ii) the quotient map phi to G'
    blocks = _g_prime(m)
    bad = [str(lhs) for lhs, _ in amal if not _is_one(_phi(blocks, lhs)) or not _is_one(_phi(blocks, _))]
    rep.add("phi(x_1) = phi(x_2) = 1", not bad, {"survivors": bad} if bad else None)
    bad = [str(r) for fam, lhs, rhs in doc.relators if fam.startswith("pure braid") for r in [lhs * ~rhs] if not _is_one(_phi(blocks, r))]
    rep.add("phi kills the pure braid relators of both copies", not bad, {"survivors": bad[:3]} if bad else None)
    bad = [str(s.word) for s in doc.schema_relators if not _is_one(_phi(blocks, s.word))]
    rep.add(f"phi kills all {len(doc.schema_relators)} schema relators of depth <= {depth}", not bad,
            {"survivors": bad[:3]} if bad else None)
    hgens = [Word.gen(letter(nm, *p), m) for nm in ("A", "A'") for p in ((1, 2), (1, 3), (2, 3))]
    bad = [str(h) for h in hgens if not _is_one(_phi(blocks, h))]
    rep.add("phi kills the six H-generators", not bad, {"survivors": bad} if bad else None)

    # (iii) the section psi: generator classes of G' go to the same letters
    bad = []
    for p, fp in blocks.items():
        for nm in ("A", "A'"):
            g = letter(nm, *p)
            target = {q: () for q in blocks}
            target[p] = fp.from_word(Word.gen(g))
            if _phi(blocks, Word.gen(g)) != target:
                bad.append(str(g))
    rep.add("phi-bar o psi = id on the six generators of G'", not bad, {"failed": bad} if bad else None)

    # (iv) no nontrivial central element of small syllable length
    per_block = {p: _block_elements(m, *p, center_length) for p in blocks}
    gens = [(p, fp.from_word(Word.gen(letter(nm, *p)))) for p, fp in blocks.items() for nm in ("A", "A'")]
    central = None
    examined = 0
    keys = list(blocks)
    for combo in product(*(per_block[p] for p in keys)):
        if sum(len(x) for x in combo) > center_length or all(x == () for x in combo):
            continue
        examined += 1
        el = dict(zip(keys, combo))
        if all(blocks[p].mul(el[p], g) == blocks[p].mul(g, el[p]) for p, g in gens):
            central = {str(p): blocks[p].show(el[p]) for p in keys}
            break
    rep.add(f"Z(G') has no nontrivial element of syllable length <= {center_length} ({examined} examined)",
            central is None, central)

    # (v) rank of abelianized H
    hletters = [letter(nm, *p) for nm in ("A", "A'") for p in ((1, 2), (1, 3), (2, 3))]
    rows = []
    for lhs, rhs in amal:
        r = lhs * ~rhs
        rows.append([r.exponent_sum(g) // m for g in hletters])
    tors, rank = Lattice(rows, 6).quotient_invariants()
    rep.add("abelianized H has rank 4", rank == 4 and not tors, {"torsion": tors, "rank": rank, "relations": rows})
    return rep


# ---------------------------------------------------------------------------
# pi_3 of the mod-q Moore space


def pi3_moore_group(q: int, five_generators: bool = False) -> Class2Group:
    """The class-2 group whose ``Z_1 cap Z_2 cap Z_3`` is ``pi_3 M(Z/q, 2)``."""
    a, x1, x2 = letter("a", 1, 2), letter("x", 1), letter("x", 2)
    A, X1, X2 = Word.gen(a), Word.gen(x1), Word.gen(x2)
    if not five_generators:
        rels = [
            commutator(A, X2),
            commutator(A, X1 ** q),
            commutator(X1 ** q, X2 ** q),
            commutator(X1, A * X2 ** q),
            commutator(X1 * ~X2, ~A * X1 ** q),
        ]
        return Class2Group([a, x1, x2], rels, name=f"G(q={q})")
    a13, a23 = letter("a", 1, 3), letter("a", 2, 3)
    B, C = Word.gen(a13), Word.gen(a23)
    rels = [
        X1 ** q * ~(A * B),
        X2 ** q * ~(B * C),
        commutator(A, B), commutator(A, C), commutator(B, C),
        commutator(X1, C), commutator(X1 * ~X2, B), commutator(X2, A),
    ]
    return Class2Group([a, a13, a23, x1, x2], rels, name=f"G5(q={q})")


def _pi3_data(G: Class2Group) -> dict:
    x1x2 = G.commutator(G.element("x[1]"), G.element("x[2]"))
    z1 = G.normal_closure(["a[1,2]", "x[1]"], "Z1")
    z2 = G.normal_closure(["a[1,2]", "x[1] x[2]^-1"], "Z2")
    z3 = G.normal_closure(["x[2]"], "Z3")
    inter = G.intersect(z1, z2, z3)
    tors, free = inter.invariants()
    return {"group": G, "x1x2": x1x2, "order": G.order_of(x1x2), "intersection": inter,
            "torsion": tors, "free_rank": free}


@_timed
def compute_pi3_moore(q: int = 2, cross_check: bool = True) -> ScenarioReport:
    if q < 2:
        raise ValueError("q >= 2 required")
    expected = gcd(2 * q, q * q)
    rep = ScenarioReport("pi3-moore", {"q": q, "cross_check": cross_check})
    d = _pi3_data(pi3_moore_group(q))
    G = d["group"]
    rep.add("order([x_1, x_2]) = gcd(2q, q^2)", d["order"] == expected, {"order": d["order"], "expected": expected})
    rep.add("Z_1 cap Z_2 cap Z_3 is cyclic of order gcd(2q, q^2)",
            d["free_rank"] == 0 and d["torsion"] == ([expected] if expected > 1 else []),
            {"invariant_factors": d["torsion"], "free_rank": d["free_rank"]})
    rep.add("[x_1, x_2] lies in the intersection", d["intersection"].contains(d["x1x2"]))
    aq = G.element(f"a[1,2]^{q}")
    rep.add("a_12^q is central", all(G.is_identity(G.commutator(aq, G.gen(g))) for g in G.generators))
    if cross_check:
        d5 = _pi3_data(pi3_moore_group(q, five_generators=True))
        rep.add("five-generator presentation agrees",
                (d5["order"], d5["torsion"], d5["free_rank"]) == (d["order"], d["torsion"], d["free_rank"]),
                {"order": d5["order"], "invariant_factors": d5["torsion"]})
    return rep


# ---------------------------------------------------------------------------
# suites


def _suite_simplicial(p: dict) -> ScenarioReport:
    rep = ScenarioReport("simplicial-identities", p)
    n_max = p["n_max"]
    specs = [g_script_spec(("a", "b")), ap_spec(), f_tilde_spec()]
    specs += [milnor_spec(k) for k in (1, 2, 3)]
    specs.append(delta_bar_spec(3, ("a", "b")))
    for spec in specs:
        r = check_simplicial_identities(spec, n_max)
        fam = {k: v["failed"] for k, v in r["families"].items()}
        rep.add(f"{spec.name}: simplicial identities up to dim {n_max} ({r['checked']} instances)", r["passed"],
                {"failed_per_family": fam, "first": r["counterexample"]})
    r = check_simplicial_map(f_tilde_spec(), milnor_spec(1), f_tilde_to_milnor, n_max)
    rep.add("z_i -> x_{i-1}^-1 x_i commutes with faces and degeneracies", r["passed"], r["counterexample"])
    return rep


def _suite_braid_formula(p: dict) -> ScenarioReport:
    rep = ScenarioReport("braid-formula-vs-geometry", p)
    rng = random.Random(p["seed"])
    bad = []
    checked = 0
    for n in range(2, p["n_max"] + 1):
        for g in pure_generators(n):
            b = embed_generator(g, n)
            for t in range(n):
                checked += 2
                if n > 2 and not braid_equal(embed_word(face_formula(t, g), n - 1), geometric_remove_strand(b, t + 1)):
                    bad.append({"op": f"d{t}", "generator": str(g), "n": n})
                if not braid_equal(embed_word(degeneracy_formula(t, g), n + 1), geometric_double_strand(b, t + 1)):
                    bad.append({"op": f"s{t}", "generator": str(g), "n": n})
    rep.add(f"face/degeneracy formulas match strand removal/doubling on generators, n <= {p['n_max']} ({checked})",
            not bad, bad[:3] or None)
    bad = []
    for n in range(3, min(p["n_max"], 5) + 1):
        for _ in range(p["samples"]):
            w = random_pure_word(n, 6, rng)
            b = embed_word(w, n)
            for t in range(n):
                if not braid_equal(embed_word(face_map(t, n)(w), n - 1), geometric_remove_strand(b, t + 1)):
                    bad.append({"op": f"d{t}", "word": str(w)})
                if not braid_equal(embed_word(degeneracy_map(t, n)(w), n + 1), geometric_double_strand(b, t + 1)):
                    bad.append({"op": f"s{t}", "word": str(w)})
    rep.add(f"formulas match geometry on {p['samples']} seeded random pure words per n", not bad, bad[:3] or None)
    bad = []
    for n in range(3, p["n_max"] + 1):
        for r in pure_braid_relations(n):
            if not is_trivial(embed_word(r, n)):
                bad.append({"n": n, "relator": str(r)})
    rep.add("pure braid relators are trivial braids", not bad, bad[:3] or None)
    return rep


def _suite_brunnian(p: dict) -> ScenarioReport:
    rep = ScenarioReport("brunnian", p)
    for k in range(4, p["k_max"] + 1):
        b = embed_word(theta(alpha_k(k)), k - 1)
        rep.add(f"alpha_{k} is Brunnian", is_brunnian(b), {"crossings": len(b)})
        rep.add(f"alpha_{k} is a nontrivial braid", not is_trivial(b))
    for n in range(3, 6):
        d = full_twist(n)
        ok = all(braid_equal(d * embed_generator(g, n), embed_generator(g, n) * d) for g in pure_generators(n))
        ok = ok and all(braid_equal(d * GeometricBraid(n, [i]), GeometricBraid(n, [i]) * d) for i in range(1, n))
        rep.add(f"full twist on {n} strands is central", ok)
        ok = all(braid_equal(geometric_remove_strand(d, s), full_twist(n - 1)) for s in range(1, n + 1)) if n > 2 else True
        rep.add(f"removing any strand of the {n}-strand full twist gives the {n - 1}-strand one", ok)
    return rep


def _suite_moore_cycles(p: dict) -> ScenarioReport:
    rep = ScenarioReport("moore-cycles", p)
    f1 = milnor_spec(1)
    for k in range(4, p["k_max"] + 1):
        st = moore_membership(f1, alpha_k(k), k - 2)
        rep.add(f"alpha_{k} is a Moore cycle of F[S^1]", st == "cycle", {"status": st})
        ab = alpha_bar_k(k)
        st = moore_membership(f1, ab, k - 1)
        rep.add(f"alpha-bar_{k} is a Moore chain with d_0 = alpha_{k}", st in ("chain", "cycle") and f1.d(0, ab, k - 1) == alpha_k(k),
                {"status": st})
    bad = [(k, n) for k in range(1, 5) for n in range(k, 11) if len(sphere_cells(k, n)) != comb(n, k)]
    rep.add("|cells of S^k in dim n| = C(n, k) for k <= 4, n <= 10", not bad, bad or None)
    bad = []
    for k in (4, 5):
        a = theta(alpha_k(k))
        for n in range(k - 1, 8):
            ys = y_cables(k, n)
            if len(ys) != comb(n - 1, k - 2) or ys != [phi_alpha(a, k - 2, c) for c in sphere_cells(k - 2, n - 1)]:
                bad.append({"k": k, "n": n, "count": len(ys)})
    rep.add("|y_j| = C(n-1, k-2) for k = 4, 5 and n <= 7, each the image of a sphere cell", not bad, bad or None)
    bad = []
    for k, n_top in ((4, 6), (5, 4)):
        a = embed_word(theta(alpha_k(k)), k - 1)
        for n in range(k - 1, n_top + 1):
            geo = phi_alpha_geometric(a, n - 1)
            form = [embed_word(y, n) for y in y_cables(k, n)]
            if len(geo) != len(form) or not all(braid_equal(u, v) for u, v in zip(form, geo)):
                bad.append({"k": k, "n": n})
    rep.add("cable formula agrees with geometric cabling (k=4, n<=6; k=5, n<=4)", not bad, bad or None)
    r = injectivity_spot_check(4, 5, 4)
    rep.add(f"no reduced word of length <= 4 in the y_j (k=4, n=5) is trivial ({r['words']} words)", r["passed"], r["witness"])
    return rep


def _suite_lemma35(p: dict) -> ScenarioReport:
    rep = ScenarioReport("lemma35", p)
    spec = g_script_spec(("a", "b"))
    ok = all(moore_membership(spec, Word.gen(letter("x", 1, 2, tag=t)), 1) == "cycle" for t in ("a", "b"))
    rep.add("n=1: every generator of G_1 is a Moore cycle", ok)
    xa = lambda i, j, t: Word.gen(letter("x", i, j, tag=t))
    w = commutator(commutator(xa(1, 2, "a"), xa(1, 3, "b")), xa(2, 3, "a"))
    st = moore_membership(spec, w, 2)
    rep.add("n=2: [[x12(a), x13(b)], x23(a)] is a Moore cycle", st == "cycle", {"status": st})
    wp = w.map_letters(lambda g: g.shifted(1))
    rep.add("its index shift is a Moore chain with d_0 hitting it",
            spec.d(0, wp, 3) == w and moore_membership(spec, wp, 3) in ("chain", "cycle"))
    n_top = min(p["n_max"], 4)
    if n_top < p["n_max"]:
        rep.notes.append(f"n_max clamped to {n_top} (desk-scale bound of the enumeration)")
    for n in range(1, n_top + 1):
        r = lemma35_checks(n, ("a", "b"), p["weight"], p["conjugator_depth"], p["samples"], p["seed"])
        rep.add(f"n={n}: {r['chains']} chain and {r['cycles']} cycle generators, {r['shifts']} shifts", r["passed"],
                r["failures"][:3] or None)
    for n in range(2, n_top + 1):
        r = kernel_basis_checks(n)
        rep.add(f"n={n}: {r['checked']} kernel-basis commutators follow the face table", r["passed"], r["failures"] or None)
    return rep


def _suite_lemma36(p: dict) -> ScenarioReport:
    rep = ScenarioReport("lemma36", p)
    for N in range(2, p["N_max"] + 1):
        syms = pair_symbols(N)
        sup = {frozenset(s.label for s in x) for x in minimal_cover_supports(range(1, N + 1), syms)}
        bf = brute_force_cover_supports(range(1, N + 1), syms, min(N, p["length"]))
        rep.add(f"N={N}: {len(sup)} minimal supports match brute force", sup == bf,
                {"only_ours": sorted(map(sorted, sup - bf)), "only_brute": sorted(map(sorted, bf - sup))})
    syms = pair_symbols(4)
    sup = minimal_cover_supports(range(1, 5), syms)
    matchings = [s for s in sup if len(s) == 2]
    stars = [s for s in sup if len(s) == 3 and len(frozenset.intersection(*(x.index for x in s))) == 1]
    rep.add("N=4: 3 perfect matchings plus 4 stars", len(matchings) == 3 and len(stars) == 4 and len(sup) == 7,
            {"supports": [[str(x) for x in s] for s in sup]})
    pats = minimal_cover_patterns(range(1, 5), syms)
    ok = all(set().union(*(index_of(tuple_tree) for tuple_tree in [_left_tree([s.generators[0] for s in pat])])) == {1, 2, 3, 4}
             for pat in pats)
    rep.add(f"N=4: all {len(pats)} ordered patterns have full Index cover", ok)
    return rep


def _left_tree(entries):
    tree = entries[0]
    for e in entries[1:]:
        tree = (tree, e)
    return tree


def _suite_lemma34(p: dict) -> ScenarioReport:
    rep = ScenarioReport("lemma34-smoke", p)
    for c, q, letters, closures in ((2, 3, 3, 2), (2, 3, 3, 3), (2, 2, 3, 3), (3, 2, 2, 2)):
        r = fat_symmetric_smoke(c, q, letters, closures)
        rep.add(f"class {c}, exponent {q}, {letters} letters, {closures} closures: fat = symmetric (order {r['order']})",
                r["equal"] and r["symmetric_in_fat"] and r["right_comb_in_symmetric"], r)
    return rep


def _suite_presentations(p: dict) -> ScenarioReport:
    rep = ScenarioReport("presentations", p)
    depth = p["depth"]
    cases = [
        ("sphere_S2", dict(n=2)),
        ("sphere_S2", dict(n=3)),
        ("sphere", dict(n=4, k=4)),
        ("sphere", dict(n=3, k=3, alpha=2)),
        ("moore2", dict(n=3, q=2)),
        ("moore_k", dict(n=4, k=4, q=2)),
    ]
    for target, kw in cases:
        d = build_presentation(target, depth=depth if target != "moore_k" else 0, **kw)
        label = f"{target} {json.dumps(kw, sort_keys=True)}"
        rep.add(f"{label}: schema relators die under abelianization ({len(d.schema_relators)})", d.audit_abelianization())
        n = kw["n"]
        bad = []
        for fam, lhs, rhs in d.relators:
            r = lhs * ~rhs
            if fam.startswith("pure braid"):
                nm = fam.split()[-1]
                plain = r.map_letters(lambda g: g._replace(name="A"))
                if nm and not is_trivial(embed_word(plain, n)):
                    bad.append(str(r))
            elif fam == "amalgamation y_j":
                if rhs.map_letters(lambda g: g._replace(name="A")) != lhs:
                    bad.append(str(r))
            elif fam == "x_j^q = cable":
                j = rhs.letters[0][0].indices[0]
                geo = cable(embed_generator(letter("A", 1, 2), 2), (j, n - j))
                if not braid_equal(embed_word(lhs, n), geo):
                    bad.append(str(r))
        rep.add(f"{label}: exact relators hold under their oracles ({len(d.relators)})", not bad, bad[:3] or None)
        universe = set(range(1, n + 2)) if target == "sphere_S2" else set(range(1, n + 1))
        ok = all(set().union(*(set(_index_of_symbol(d, lab)) for lab in s.pattern)) == universe for s in d.schema_relators)
        rep.add(f"{label}: every schema relator has full Index cover", ok)
    d = build_presentation("sphere", 4, k=4, depth=0)
    rep.add("sphere(n=4, k=4) identifies C(3,2) = 3 cable pairs", d.families().get("amalgamation y_j") == 3)
    d = build_presentation("moore2", 3, q=2, depth=0)
    rep.add("moore2(n=3) carries x_j^q relators for j = 1, 2", d.families().get("x_j^q = cable") == 2)
    try:
        build_presentation("sphere", 3, k=3)
        rep.add("sphere with k=3 and no alpha is rejected", False)
    except ValueError:
        rep.add("sphere with k=3 and no alpha is rejected", True)
    return rep


def _index_of_symbol(doc, label):
    for s in doc.schemas:
        if label in s["closures"]:
            return s["closures"][label]["index"]
    raise KeyError(label)


def _suite_example39(p: dict) -> ScenarioReport:
    rep = ScenarioReport("example39", p)
    for m in p["m_values"]:
        r = verify_free_product_model(m, p["depth"])
        for c in r.checks:
            rep.checks.append(dict(c, name=f"m={m}: {c['name']}"))
        for n in r.notes:
            if n not in rep.notes:
                rep.notes.append(n)
    return rep


def _suite_pi3(p: dict) -> ScenarioReport:
    rep = ScenarioReport("pi3-moore", p)
    for q in p["q_values"]:
        r = compute_pi3_moore(q)
        for c in r.checks:
            rep.checks.append(dict(c, name=f"q={q}: {c['name']}"))
    return rep


def _suite_s2(p: dict) -> ScenarioReport:
    rep = ScenarioReport("s2-membership", p)
    x1, x2 = letter("x", 1), letter("x", 2)
    X1, X2 = Word.gen(x1), Word.gen(x2)
    c = commutator(X1, X2)
    closures = {"R1": [X1], "R2": [X2], "R3": [X1 * X2]}
    res = {k: in_normal_closure_free_quotient(c, v, [x1, x2]) for k, v in closures.items()}
    rep.add("[x_1, x_2] lies in R_1, R_2 and R_3 of F_2", all(res.values()), res)
    res = {k: in_normal_closure_free_quotient(X1, v, [x1, x2]) for k, v in closures.items()}
    rep.add("x_1 itself is not in R_1 cap R_2 cap R_3", not all(res.values()), res)
    # rank one: R_1 = R_2 = F_1, the symmetric commutator is [F_1, F_1] = 1
    doc = build_presentation("sphere_S2", 1, depth=p["depth"])
    trivial = all(r.is_identity() for r in doc.all_relators()) and not doc.schema_relators
    G = Class2Group([letter("x", 1)], doc.all_relators())
    tors, free = G.abelianization_invariants()
    ctors, cfree = G.center().invariants()
    rep.add("F_1/[R_1, R_2]_S = Z with centre Z", trivial and (tors, free) == ([], 1) and (ctors, cfree) == ([], 1),
            {"abelianization": [tors, free], "center": [ctors, cfree]})
    return rep


SUITES = {
    "simplicial-identities": (_suite_simplicial, {"n_max": 5}),
    "braid-formula-vs-geometry": (_suite_braid_formula, {"n_max": 6, "samples": 5, "seed": DEFAULT_SEED}),
    "brunnian": (_suite_brunnian, {"k_max": 6}),
    "moore-cycles": (_suite_moore_cycles, {"k_max": 6}),
    "lemma35": (_suite_lemma35, {"n_max": 3, "weight": 4, "conjugator_depth": 1, "samples": 1, "seed": DEFAULT_SEED}),
    "lemma36": (_suite_lemma36, {"N_max": 5, "length": 5}),
    "lemma34-smoke": (_suite_lemma34, {}),
    "presentations": (_suite_presentations, {"depth": 1}),
    "example39": (_suite_example39, {"m_values": [2, 3], "depth": 2}),
    "pi3-moore": (_suite_pi3, {"q_values": [2, 3, 4, 5]}),
    "s2-membership": (_suite_s2, {"depth": 1}),
}


def run_suite(name: str, seed: int = DEFAULT_SEED, **bounds) -> ScenarioReport:
    """Run one suite (or ``"all"``) with default bounds overridden by ``bounds``."""
    t0 = time.perf_counter()
    if name == "all":
        rep = ScenarioReport("all", {"seed": seed, **bounds})
        for sub in sorted(SUITES):
            r = run_suite(sub, seed, **bounds)
            for c in r.checks:
                rep.checks.append(dict(c, name=f"{sub}: {c['name']}"))
            for n in r.notes:
                rep.notes.append(f"{sub}: {n}")
    else:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        fn, defaults = SUITES[name]
        params = dict(defaults)
        if "seed" in params:
            params["seed"] = seed
        for k, v in bounds.items():
            if k in params and v is not None:
                params[k] = v
        rep = fn(params)
    rep.duration_ms = int((time.perf_counter() - t0) * 1000)
    return rep
