"""Named property suites shared by the command line and the test suite.

Each suite runs a batch of structural identities (exhaustively on small
sizes, seeded-randomly beyond) and reports one ``(name, ok, detail)`` row
per check.  Randomness always flows from one seed, so runs reproduce.
"""

from __future__ import annotations

import itertools
import random

from .anticyclic import (
    SignedShrub,
    act,
    all_ctrees,
    b0,
    b0_inverse,
    ctree_act,
    forest_act,
    orbit,
    orbit_invariant,
    ram_count_preserved,
    signed_shrubs,
)
from .core import Shrub, enumerate_shrubs_bruteforce, label_key, trivial_shrub
from .errors import ShrubError
from .mould import (
    FactoredFraction,
    LinearForm,
    MouldElement,
    embed_zinb,
    equals,
    fraction_of_shrub,
    kappa,
    mould_compose,
    shrub_fraction_factors,
    zinb_extract,
)
from .operad import (
    compose,
    decompose,
    disjoint_union,
    enumerate_shrubs_by_generators,
    evaluate,
    graft,
    graft_generator,
    pair_generator,
)
from .reconstruction import reconstruct
from .series_parallel import count_series_parallel
from .zinbiel import ZinbElement, compatible_orders, gamma, zinb_compose


def random_shrub(labels, rng) -> Shrub:
    """A random shrub on ``labels`` via a random generator word."""
    labels = sorted(labels, key=label_key)
    if len(labels) == 1:
        return trivial_shrub(labels[0])
    items = list(labels)
    rng.shuffle(items)
    k = rng.randint(1, len(items) - 1)
    left = random_shrub(items[:k], rng)
    right = random_shrub(items[k:], rng)
    op = rng.randrange(3)
    if op == 0:
        return disjoint_union(left, right)
    if op == 1:
        return graft(left, right)
    return graft(right, left)


def _shifted(P: Shrub, offset: int) -> Shrub:
    return P.relabel({v: v + offset for v in P.labels})


def _all_upto(n_max):
    for n in range(1, n_max + 1):
        yield from enumerate_shrubs_bruteforce(n)


# -- core ---------------------------------------------------------------


def check_common_cover(max_n):
    """Connected nontrivial: some height-1 vertex covers every root."""
    for P in _all_upto(max_n):
        if len(P) < 2 or not P.is_connected():
            continue
        roots = P.roots()
        if not any(P.covers(v) == roots for v in P.level(1)):
            return False, f"no all-covering vertex in {P!r}"
    return True, f"all connected shrubs n<={max_n}"


def check_disconnection(max_n):
    """Dropping the edges from the all-covering vertices to the roots
    separates them from every root."""
    for P in _all_upto(max_n):
        if len(P) < 2 or not P.is_connected():
            continue
        roots = P.roots()
        S = {v for v in P.level(1) if P.covers(v) == roots}
        edges = [e for e in P.edges if not (set(e) & S and set(e) & roots)]
        reach = {v: {v} for v in P.labels}
        changed = True
        while changed:
            changed = False
            for a, b in edges:
                union = reach[a] | reach[b]
                if union != reach[a] or union != reach[b]:
                    for v in union:
                        reach[v] = union
                    changed = True
        for v in S:
            if reach[v] & roots:
                return False, f"{v!r} still reaches a root in {P!r}"
    return True, f"all connected shrubs n<={max_n}"


def check_root_pairs(max_n):
    """Connected: every two roots have a common cover."""
    for P in _all_upto(max_n):
        if not P.is_connected():
            continue
        for a, b in itertools.combinations(sorted(P.roots(), key=label_key), 2):
            if not (P.covered_by(a) & P.covered_by(b)):
                return False, f"roots {a!r},{b!r} share no cover in {P!r}"
    return True, f"all connected shrubs n<={max_n}"


def check_leaf_or_pair(max_n):
    for P in _all_upto(max_n):
        if len(P) >= 2 and not P.leaves() and not P.correlated_pairs():
            return False, f"{P!r} has neither a leaf nor a correlated pair"
    return True, f"all shrubs n<={max_n}"


def check_surgery_validity(max_n):
    """Truncation, leaf deletion and correlated merges stay valid."""
    for P in _all_upto(max_n):
        for h0 in range(P.max_height() + 2):
            Shrub(*_unpack(P.truncate_at_or_above(h0)))
        for leaf in sorted(P.leaves(), key=label_key):
            Shrub(*_unpack(P.delete_leaf(leaf)))
        for a, b in P.correlated_pairs():
            Shrub(*_unpack(P.merge_correlated(a, b, "merged")))
    return True, f"all shrubs n<={max_n}"


def _unpack(P: Shrub):
    return P.labels, P.height_map, P.edges


def check_upper_ideal_complement(max_n, seed):
    rng = random.Random(seed)
    for P in _all_upto(max_n):
        verts = sorted(P.labels, key=label_key)
        seeds = [set()] + [set(rng.sample(verts, rng.randint(1, len(verts)))) for _ in range(3)]
        for S in seeds:
            ideal = P.upper_ideal(S)
            if not S <= ideal:
                return False, f"ideal misses its seed in {P!r}"
            rest = set(P.labels) - ideal
            if rest:
                hm = P.height_map
                Shrub(rest, {v: hm[v] for v in rest}, [e for e in P.edges if e[0] in rest and e[1] in rest])
    return True, f"all shrubs n<={max_n}, random seeds"


def check_enumeration_agreement(max_n):
    for n in range(1, max_n + 1):
        brute = enumerate_shrubs_bruteforce(n)
        gen = enumerate_shrubs_by_generators(n)
        if brute != gen:
            return False, f"enumerators disagree at n={n}: {len(brute)} vs {len(gen)}"
    return True, f"both enumerators agree for n<={max_n}"


# -- operad -------------------------------------------------------------


def check_parallel_associativity(seed, trials=1000):
    ok, detail = _operad_axioms_exhaustive()
    if not ok:
        return ok, detail
    rng = random.Random(seed)
    for _ in range(trials):
        sizes = _random_triple_sizes(rng, total=8, first_min=2)
        P = random_shrub(range(1, sizes[0] + 1), rng)
        Pp = random_shrub(range(101, 101 + sizes[1]), rng)
        Ppp = random_shrub(range(201, 201 + sizes[2]), rng)
        i, j = rng.sample(sorted(P.labels), 2)
        left = compose(compose(P, i, Pp), j, Ppp)
        right = compose(compose(P, j, Ppp), i, Pp)
        if left != right:
            return False, f"parallel associativity fails: {P!r} at {i},{j}"
        ii = rng.choice(sorted(Pp.labels))
        seq_left = compose(compose(P, i, Pp), ii, Ppp)
        seq_right = compose(P, i, compose(Pp, ii, Ppp))
        if seq_left != seq_right:
            return False, f"sequential associativity fails: {P!r} at {i},{ii}"
    return True, f"exhaustive (<=3,<=2,<=2) plus {trials} random triples"


def _random_triple_sizes(rng, total, first_min):
    a = rng.randint(first_min, total - 2)
    b = rng.randint(1, total - a - 1)
    c = rng.randint(1, total - a - b)
    return a, b, c


def _operad_axioms_exhaustive():
    smalls = {k: enumerate_shrubs_bruteforce(k) for k in (1, 2)}
    outers = [P for n in (2, 3) for P in enumerate_shrubs_bruteforce(n)]
    for P in outers:
        for i, j in itertools.permutations(sorted(P.labels), 2):
            for np_ in (1, 2):
                for nq in (1, 2):
                    for Pp in smalls[np_]:
                        Pp = _shifted(Pp, 100)
                        for Ppp in smalls[nq]:
                            Ppp = _shifted(Ppp, 200)
                            left = compose(compose(P, i, Pp), j, Ppp)
                            right = compose(compose(P, j, Ppp), i, Pp)
                            if left != right:
                                return False, f"parallel associativity fails at {P!r}"
                            for ii in Pp.labels:
                                a = compose(compose(P, i, Pp), ii, Ppp)
                                b = compose(P, i, compose(Pp, ii, Ppp))
                                if a != b:
                                    return False, f"sequential associativity fails at {P!r}"
    return True, "exhaustive"


def check_units(max_n):
    for P in _all_upto(max_n):
        for i in P.labels:
            unit = trivial_shrub(i)
            if compose(P, i, unit) != P:
                return False, f"right unit fails at {P!r}, {i}"
        star = trivial_shrub("*")
        got = compose(star, "*", P)
        if got != P:
            return False, f"left unit fails at {P!r}"
    return True, f"all shrubs n<={max_n}"


def check_equivariance(max_n, seed):
    rng = random.Random(seed)
    for P in _all_upto(min(max_n, 3)):
        for Q0 in _all_upto(2):
            Q = _shifted(Q0, 100)
            for i in P.labels:
                perm = sorted(P.labels)
                rng.shuffle(perm)
                relab = dict(zip(sorted(P.labels), perm))
                lhs = compose(P, i, Q).relabel({**relab, **{v: v for v in Q.labels}})
                rhs = compose(P.relabel(relab), relab[i], Q)
                if lhs != rhs:
                    return False, f"equivariance fails at {P!r}, {i}"
    return True, "exhaustive small, random relabelings"


def check_presentation_relations():
    nap1 = compose(graft_generator("*", 1), "*", graft_generator(3, 2))
    nap2 = compose(graft_generator("*", 2), "*", graft_generator(3, 1))
    nap3 = compose(graft_generator(3, "*"), "*", pair_generator(1, 2))
    if not nap1 == nap2 == nap3:
        return False, "graft relation fails"
    comm1 = compose(pair_generator("*", 1), "*", pair_generator(2, 3))
    comm2 = compose(pair_generator("*", 2), "*", pair_generator(3, 1))
    if comm1 != comm2:
        return False, "pair relation fails"
    return True, "both degree-3 relations hold"


def check_word_roundtrip(max_n):
    for P in _all_upto(max_n):
        if evaluate(decompose(P)) != P:
            return False, f"word roundtrip fails at {P!r}"
    return True, f"all shrubs n<={max_n}"


# -- zinbiel ------------------------------------------------------------


def check_gamma_morphism(max_n, seed):
    for np_ in range(1, 4):
        for P in enumerate_shrubs_bruteforce(np_):
            gP = gamma(P)
            for nq in range(1, 4):
                for Q0 in enumerate_shrubs_bruteforce(nq):
                    Q = _shifted(Q0, 100)
                    gQ = gamma(Q)
                    for i in P.labels:
                        if gamma(compose(P, i, Q)) != zinb_compose(gP, i, gQ):
                            return False, f"morphism fails at {P!r} o_{i} {Q!r}"
    rng = random.Random(seed)
    for _ in range(50):
        a = rng.randint(1, 4)
        b = rng.randint(1, min(4, 7 - a))
        P = random_shrub(range(1, a + 1), rng)
        Q = random_shrub(range(101, 101 + b), rng)
        i = rng.choice(sorted(P.labels))
        if gamma(compose(P, i, Q)) != zinb_compose(gamma(P), i, gamma(Q)):
            return False, f"morphism fails at random {P!r} o_{i} {Q!r}"
    return True, "exhaustive |P|,|Q|<=3 plus 50 random pairs"


def check_gamma_injective(max_n):
    for n in range(1, max_n + 1):
        S = enumerate_shrubs_bruteforce(n)
        if len({gamma(P) for P in S}) != len(S):
            return False, f"gamma images collide at n={n}"
    return True, f"pairwise distinct for n<={max_n}"


def check_gamma_coefficients(max_n):
    for P in _all_upto(max_n):
        for _, c in gamma(P).terms():
            if c != 1:
                return False, f"coefficient {c} in gamma({P!r})"
    return True, f"all coefficients are 1 for n<={max_n}"


def check_forest_orders_are_linear_extensions(max_n):
    """On forests, compatible orders = linear extensions of the forest order."""
    for P in _all_upto(max_n):
        if not P.is_forest():
            continue
        below = {v: P.covers(v) for v in P.labels}
        orders = set(compatible_orders(P))
        exts = set()
        for perm in itertools.permutations(sorted(P.labels, key=label_key)):
            pos = {v: k for k, v in enumerate(perm)}
            if all(all(pos[w] < pos[v] for w in below[v]) for v in perm):
                exts.add(perm)
        if orders != exts:
            return False, f"orders differ from linear extensions on {P!r}"
    return True, f"all forests n<={max_n}"


# -- mould --------------------------------------------------------------


def check_kappa_formula(max_n):
    for P in _all_upto(max_n):
        if kappa(P) != fraction_of_shrub(P):
            return False, f"kappa differs from the closed formula at {P!r}"
    return True, f"all shrubs n<={max_n}"


def check_fraction_squarefree(max_n):
    for P in _all_upto(max_n):
        num, den = shrub_fraction_factors(P)
        if len(set(num)) != len(num) or len(set(den)) != len(den):
            return False, f"repeated factor for {P!r}"
        if set(num) & set(den):
            return False, f"unreduced fraction for {P!r}"
    return True, f"reduced and squarefree for n<={max_n}"


def check_connected_full_sum(max_n):
    for P in _all_upto(max_n):
        if P.is_connected():
            full = LinearForm.sum_of(P.labels)
            if full not in fraction_of_shrub(P).den:
                return False, f"full-sum factor missing for {P!r}"
    return True, f"all connected shrubs n<={max_n}"


def check_numerator_degree(max_n):
    for P in _all_upto(max_n):
        if len(fraction_of_shrub(P).num) != len(P.ram_classes()):
            return False, f"numerator degree != ram classes at {P!r}"
    return True, f"n<={max_n}"


def check_embedding_intertwines():
    for ni in (1, 2, 3):
        for pi in itertools.permutations(range(1, ni + 1)):
            for nj in (1, 2):
                for sigma in itertools.permutations(range(101, 101 + nj)):
                    zx = ZinbElement.from_order(pi)
                    zy = ZinbElement.from_order(sigma)
                    for i in pi:
                        lhs = embed_zinb(zinb_compose(zx, i, zy))
                        rhs = mould_compose(embed_zinb(zx), i, embed_zinb(zy))
                        if not equals(lhs, rhs):
                            return False, f"embedding fails at {pi} o_{i} {sigma}"
    return True, "exhaustive over basis orders |I|<=3, |J|<=2"


def check_kappa_products(max_n):
    """Product rules: disjoint union multiplies; grafting adds the root-sum
    ratio."""
    for nq in range(1, max_n):
        for nr in range(1, max_n - nq + 1):
            for Q in enumerate_shrubs_bruteforce(nq):
                for R0 in enumerate_shrubs_bruteforce(nr):
                    R = _shifted(R0, 100)
                    kq, kr = kappa(Q), kappa(R)
                    if kappa(disjoint_union(Q, R)) != kq * kr:
                        return False, f"union rule fails at {Q!r}, {R!r}"
                    ratio = FactoredFraction(
                        num=[LinearForm.sum_of(Q.labels)],
                        den=[LinearForm.sum_of(set(Q.labels) | set(R.labels))],
                    )
                    if kappa(graft(Q, R)) != kq * kr * ratio:
                        return False, f"graft rule fails at {Q!r}, {R!r}"
    return True, f"all pairs |Q|+|R|<={max_n}"


def check_extraction_inverts_gamma(max_n):
    for P in _all_upto(max_n):
        if zinb_extract(MouldElement.from_fraction(kappa(P))) != gamma(P):
            return False, f"extraction disagrees with gamma at {P!r}"
    return True, f"all shrubs n<={max_n}"


# -- reconstruction ------------------------------------------------------


def check_reconstruction_roundtrip(max_n):
    for P in _all_upto(max_n):
        if reconstruct(kappa(P)) != P:
            return False, f"roundtrip fails at {P!r}"
    return True, f"all shrubs n<={max_n}"


def check_kappa_injective(max_n):
    for n in range(1, max_n + 1):
        S = enumerate_shrubs_bruteforce(n)
        if len({kappa(P) for P in S}) != len(S):
            return False, f"kappa images collide at n={n}"
    return True, f"pairwise distinct fractions for n<={max_n}"


def check_reconstruction_bruteforce(max_n):
    """Reconstruction agrees with scanning every shrub on the label set."""
    for n in range(1, max_n + 1):
        table = {kappa(P): P for P in enumerate_shrubs_bruteforce(n)}
        for f, P in table.items():
            if reconstruct(f) != P:
                return False, f"brute-force oracle disagrees at {P!r}"
    return True, f"n<={max_n}"


def check_random_roundtrip_larger(seed, sizes=(6, 7), trials=12):
    rng = random.Random(seed)
    for n in sizes:
        for _ in range(trials):
            P = random_shrub(range(1, n + 1), rng)
            if reconstruct(kappa(P), cap=n) != P:
                return False, f"roundtrip fails at random {P!r}"
    return True, f"{trials} random shrubs at sizes {sizes}"


# -- anticyclic ----------------------------------------------------------


def _transpositions_with_zero(n):
    for i in range(1, n + 1):
        sigma = list(range(n + 1))
        sigma[0], sigma[i] = sigma[i], sigma[0]
        yield tuple(sigma)


def check_action_closure(max_n):
    for n in range(1, max_n + 1):
        for x in signed_shrubs(n):
            for sigma in _transpositions_with_zero(n):
                try:
                    act(sigma, x)
                except ShrubError as exc:
                    return False, f"closure fails at {x!r} under {sigma}: {exc}"
    return True, f"all signed shrubs n<={max_n}, all 0-transpositions"


def check_action_group_laws(max_n, seed, trials=500):
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(1, max_n)
        P = random_shrub(range(1, n + 1), rng)
        x = SignedShrub(rng.choice((1, -1)), P)
        identity = tuple(range(n + 1))
        if act(identity, x) != x:
            return False, f"identity law fails at {x!r}"
        sigma = list(range(n + 1))
        tau = list(range(n + 1))
        rng.shuffle(sigma)
        rng.shuffle(tau)
        combo = tuple(sigma[tau[k]] for k in range(n + 1))
        if act(combo, x) != act(tuple(sigma), act(tuple(tau), x)):
            return False, f"composition law fails at {x!r}, {sigma}, {tau}"
    return True, f"{trials} seeded permutation pairs"


def check_action_extends_relabeling(max_n, seed):
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        for _ in range(20):
            P = random_shrub(range(1, n + 1), rng)
            x = SignedShrub(1, P)
            inner = list(range(1, n + 1))
            rng.shuffle(inner)
            sigma = tuple([0] + inner)
            got = act(sigma, x)
            want = SignedShrub(1, P.relabel({k: sigma[k] for k in range(1, n + 1)}))
            if got != want:
                return False, f"zero-fixing action is not relabeling at {x!r}"
    return True, "random zero-fixing permutations"


def check_orbit_invariants(max_n):
    for n in range(1, max_n + 1):
        remaining = set(signed_shrubs(n))
        while remaining:
            x = remaining.pop()
            orb = orbit(x, cap=max_n)
            rams = {ram_count_preserved(y) for y in orb}
            invs = {orbit_invariant(y) for y in orb}
            if len(rams) != 1:
                return False, f"ram count varies on the orbit of {x!r}"
            if len(invs) != 1:
                return False, f"multiset invariant varies on the orbit of {x!r}"
            remaining -= set(orb)
    return True, f"constant on every orbit, n<={max_n}"


def check_forest_action_agreement(max_n):
    for n in range(1, max_n + 1):
        for P in enumerate_shrubs_bruteforce(n):
            if not P.is_forest():
                continue
            for s in (1, -1):
                F = SignedShrub(s, P)
                for sigma in _transpositions_with_zero(n):
                    if forest_act(sigma, F) != act(sigma, F):
                        return False, f"models disagree at {F!r} under {sigma}"
    return True, f"all signed forests n<={max_n}, all 0-transpositions"


def check_b0_bijection(max_n, seed):
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        forests = [P for P in enumerate_shrubs_bruteforce(n) if P.is_forest()]
        seen = set()
        for P in forests:
            for s in (1, -1):
                F = SignedShrub(s, P)
                T = b0(F)
                if b0_inverse(T) != F:
                    return False, f"b0 roundtrip fails at {F!r}"
                seen.add(T)
        trees = all_ctrees(n)
        if len(trees) != 2 * (n + 1) ** (n - 1):
            return False, f"|C({n + 1})| != 2(n+1)^(n-1)"
        if seen != set(trees):
            return False, f"b0 is not onto at n={n}"
        for _ in range(10):
            P = rng.choice(forests)
            F = SignedShrub(rng.choice((1, -1)), P)
            inner = list(range(1, n + 1))
            rng.shuffle(inner)
            sigma = tuple([0] + inner)
            if b0(forest_act(sigma, F)) != ctree_act(sigma, b0(F)):
                return False, f"b0 equivariance fails at {F!r}"
    return True, f"bijection, cardinality and equivariance for n<={max_n}"


# -- series-parallel -----------------------------------------------------


def check_series_parallel_counts(max_n):
    for n in range(1, max_n + 1):
        sp = count_series_parallel(n)
        sh = len(enumerate_shrubs_bruteforce(n))
        if sp != sh:
            return False, f"counts differ at n={n}: {sp} posets vs {sh} shrubs"
    return True, f"labeled counts agree for n<={max_n}"


def check_iso_count_fig(max_n):
    stats = []
    for n in range(1, max_n + 1):
        conn = [P for P in enumerate_shrubs_bruteforce(n) if P.is_connected()]
        stats.append(len({P.canonical_form()[0] for P in conn}))
    expected5 = 30
    if max_n >= 5 and stats[4] != expected5:
        return False, f"connected iso classes at n=5: {stats[4]} != {expected5}"
    return True, f"connected iso classes: {stats}"


# -- suite registry -------------------------------------------------------


def run_suite(name: str, max_n: int = 5, seed: int = 0):
    """Run one named suite; returns a list of (check, ok, detail)."""
    small = min(max_n, 5)
    suites = {
        "core": [
            ("common-cover", lambda: check_common_cover(small)),
            ("disconnection", lambda: check_disconnection(small)),
            ("root-pairs", lambda: check_root_pairs(small)),
            ("leaf-or-pair", lambda: check_leaf_or_pair(small)),
            ("surgery-validity", lambda: check_surgery_validity(small)),
            ("upper-ideal-complement", lambda: check_upper_ideal_complement(small, seed)),
            ("iso-counts", lambda: check_iso_count_fig(small)),
        ],
        "operad": [
            ("enumeration-agreement", lambda: check_enumeration_agreement(small)),
            ("associativity", lambda: check_parallel_associativity(seed)),
            ("units", lambda: check_units(min(small, 4))),
            ("equivariance", lambda: check_equivariance(small, seed)),
            ("relations", check_presentation_relations),
            ("word-roundtrip", lambda: check_word_roundtrip(small)),
        ],
        "zinbiel": [
            ("morphism", lambda: check_gamma_morphism(small, seed)),
            ("injective", lambda: check_gamma_injective(small)),
            ("unit-coefficients", lambda: check_gamma_coefficients(min(small, 4))),
            ("forest-linear-extensions", lambda: check_forest_orders_are_linear_extensions(min(small, 4))),
        ],
        "mould": [
            ("closed-formula", lambda: check_kappa_formula(small)),
            ("squarefree", lambda: check_fraction_squarefree(small)),
            ("full-sum-factor", lambda: check_connected_full_sum(small)),
            ("numerator-degree", lambda: check_numerator_degree(small)),
            ("embedding", check_embedding_intertwines),
            ("product-rules", lambda: check_kappa_products(min(small + 1, 6))),
            ("extraction", lambda: check_extraction_inverts_gamma(min(small, 4))),
        ],
        "reconstruction": [
            ("roundtrip", lambda: check_reconstruction_roundtrip(small)),
            ("injective", lambda: check_kappa_injective(small)),
            ("bruteforce-oracle", lambda: check_reconstruction_bruteforce(min(small, 4))),
            ("larger-random", lambda: check_random_roundtrip_larger(seed)),
        ],
        "anticyclic": [
            ("closure", lambda: check_action_closure(min(small, 4))),
            ("group-laws", lambda: check_action_group_laws(small, seed, trials=200)),
            ("relabeling", lambda: check_action_extends_relabeling(min(small, 4), seed)),
            ("orbit-invariants", lambda: check_orbit_invariants(min(small, 4))),
            ("forest-agreement", lambda: check_forest_action_agreement(min(small, 4))),
            ("tree-model", lambda: check_b0_bijection(small, seed)),
        ],
        "series-parallel": [
            ("labeled-counts", lambda: check_series_parallel_counts(small)),
        ],
    }
    if name == "all":
        rows = []
        for key in suites:
            rows.extend(run_suite(key, max_n=max_n, seed=seed))
        return rows
    if name not in suites:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(suites)} or 'all'")
    rows = []
    for check_name, fn in suites[name]:
        ok, detail = fn()
        rows.append((f"{name}/{check_name}", ok, detail))
    return rows
