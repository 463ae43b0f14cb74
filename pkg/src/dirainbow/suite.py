"""Acceptance suite: thirteen numbered criteria, each with a time limit.

Shared by ``dirainbow check`` and the acceptance test. Every criterion either
returns a one-line detail string or raises ``Falsified`` naming the instance
and the failed claim.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from . import cactus, families, tournaments
from .coloring import ParamKind
from .digraph import Digraph, biorient, build, distances, is_bioriented_complete, is_strongly_connected
from .solver import SolveBudget, exact, exact_undirected, lower_bound
from .verify import check_connected

K = ParamKind


class Falsified(AssertionError):
    pass


def claim(condition: bool, message: str) -> None:
    if not condition:
        raise Falsified(message)


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    max_n: int | None = None  # caps instance sizes of the random suites
    max_elements: int | None = None  # overrides the per-criterion element caps

    def cap_n(self, default: int) -> int:
        return default if self.max_n is None else min(default, self.max_n)

    def budget(self, default: int | None = None) -> SolveBudget:
        return SolveBudget(max_elements=self.max_elements if self.max_elements is not None else default)


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    limit: float  # seconds
    run: Callable[[SuiteConfig], str]


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    elapsed: float
    limit: float
    detail: str

    def line(self) -> str:
        status = "pass" if self.passed else "fail"
        return f"criterion {self.number} {status} {self.elapsed:.2f}s {self.title} :: {self.detail}"


def arcs_text(D: Digraph) -> str:
    return f"n={D.n} arcs={D.sorted_arcs()}"


# ---------------------------------------------------------------- criteria


def directed_cycles(cfg: SuiteConfig) -> str:
    values = []
    for n, want in zip(range(3, 7), (3, 6, 10, 12)):
        D = families.make(families.FamilySpec("dicycle", {"n": n}))
        trc = exact(D, K.TRC, cfg.budget()).value
        strc = exact(D, K.STRC, cfg.budget()).value
        claim(trc == want and strc == want, f"dicycle n={n}: trc={trc} strc={strc}, expected {want}")
        values.append(trc)
    return f"trc=strc={values} for n=3..6"


def bioriented_paths_cycles(cfg: SuiteConfig) -> str:
    paths = [exact(families.bio_path(n), K.TRC, cfg.budget()).value for n in (2, 3, 4)]
    claim(paths == [1, 3, 5], f"bio_path n=2..4 trc={paths}, expected [1, 3, 5]")
    cycles = [exact(families.bio_cycle(n), K.TRC, cfg.budget()).value for n in (3, 4, 5)]
    claim(cycles == [1, 3, 3], f"bio_cycle n=3..5 trc={cycles}, expected [1, 3, 3]")
    return f"paths {paths}, cycles {cycles}"


def wheels_multipartite(cfg: SuiteConfig) -> str:
    for n in range(4, 9):
        D = families.bio_wheel(n)
        c = families.coloring_for(families.FamilySpec("bio_wheel", {"n": n}))
        claim(c.color_count == 3, f"wheel n={n}: {c.color_count} colors")
        report = check_connected(D, c, K.STRC)
        claim(report.ok, f"wheel n={n}: STRC fails at {report.failing_pair}")
    profiles = list(families.multipartite_profiles(8))
    for parts in profiles:
        D = families.bio_multipartite(parts)
        c = families.multipartite_coloring(parts)
        claim(c.color_count == 3, f"multipartite {parts}: {c.color_count} colors")
        report = check_connected(D, c, K.STRC)
        claim(report.ok, f"multipartite {parts}: STRC fails at {report.failing_pair}")
    w4 = exact(families.bio_wheel(4), K.TRC, cfg.budget(30)).value
    claim(w4 == 3, f"exact trc of wheel n=4 is {w4}")
    return f"wheels 4..8 and {len(profiles)} multipartite profiles verify with 3 colors; exact trc(W4)=3"


def tournament_values(cfg: SuiteConfig) -> str:
    out = []
    for name, D, want in (("T4", tournaments.tournament_T4(), 5), ("T53", tournaments.tournament_T53(), 3)):
        r = exact(D, K.TRC, cfg.budget())
        claim(r.value == want, f"{name}: trc={r.value}, expected {want}")
        claim(r.searched_below, f"{name}: no certificate below {r.value}")
        out.append(f"{name}={r.value} ({r.stats.nodes} nodes)")
    return ", ".join(out)


def tnk_certification(cfg: SuiteConfig) -> str:
    count = 0
    for k in (5, 7, 9):
        N = (k + 3) // 2
        # N+3 and N+4 insert the 4- and 5-vertex tournaments
        for n in range(N, N + 5):
            D, c = tournaments.tournament_Tnk(n, k)
            tag = f"T(n={n}, k={k})"
            claim(c.color_count == k, f"{tag}: {c.color_count} colors")
            report = check_connected(D, c, K.STRC)
            claim(report.ok, f"{tag}: STRC fails at {report.failing_pair}")
            claim(lower_bound(D, K.TRC) == k, f"{tag}: lower bound {lower_bound(D, K.TRC)}")
            count += 1
    return f"{count} tournaments certified trc=strc=k"


def tournament_properties(cfg: SuiteConfig) -> str:
    rng = random.Random(cfg.seed)
    top = max(5, cfg.cap_n(10))
    by_diam: dict[int, int] = {}
    for i in range(200):
        n = rng.randint(5, top)
        T = tournaments.random_strong_tournament(n, rng)
        tag = f"tournament #{i} {arcs_text(T)}"
        c = tournaments.tournament_trc_coloring(T)
        report = check_connected(T, c, K.STRC)
        claim(report.ok, f"{tag}: 2n-3 scheme fails STRC at {report.failing_pair}")
        claim(c.color_count <= 2 * n - 3, f"{tag}: 2n-3 scheme uses {c.color_count} colors")
        d = int(distances(T).diameter)
        c = tournaments.tournament_diam_coloring(T)
        report = check_connected(T, c, K.TRC)
        claim(report.ok, f"{tag}: diameter scheme fails TRC at {report.failing_pair}")
        cap = 5 if d == 2 else 2 * d + 7
        claim(c.color_count <= cap, f"{tag}: diameter scheme uses {c.color_count} > {cap} colors")
        by_diam[d] = by_diam.get(d, 0) + 1
    return f"200 tournaments ok, diameters {dict(sorted(by_diam.items()))}"


def petersen_suite(cfg: SuiteConfig) -> str:
    P = families.petersen()
    claim(families.unique_length_two_paths(P), "Petersen: some pair at distance 2 has two length-2 paths")
    c = families.petersen_coloring()
    claim(c.color_count == 4, f"Petersen witness uses {c.color_count} colors")
    report = check_connected(P, c, K.STRC)
    claim(report.ok, f"Petersen 4-color witness fails STRC at {report.failing_pair}")
    found, nodes = families.three_color_distance_two_search(P, 3)
    claim(found is None, "Petersen admits a 3-color total coloring with rainbow length-2 geodesics")
    for n in (11, 12, 13):
        D = families.petersen_expanded(n)
        claim(distances(D).diameter == 2, f"expanded Petersen n={n}: diameter {distances(D).diameter}")
        report = check_connected(D, families.petersen_expanded_coloring(n), K.STRC)
        claim(report.ok, f"expanded Petersen n={n}: STRC fails at {report.failing_pair}")
    return f"4-color witness ok, 3 colors exhausted in {nodes} nodes, expanded n=11..13 ok"


def canonical(n: int, arcs) -> tuple:
    return min(tuple(sorted((p[x], p[y]) for x, y in arcs)) for p in itertools.permutations(range(n)))


def strong_digraphs(n: int) -> Iterator[Digraph]:
    """Strongly connected digraphs on n vertices, one per isomorphism class."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for states in itertools.product(range(4), repeat=len(pairs)):
        arcs = []
        for (x, y), s in zip(pairs, states):
            if s & 1:
                arcs.append((x, y))
            if s & 2:
                arcs.append((y, x))
        D = build(n, arcs)
        if not is_strongly_connected(D):
            continue
        key = canonical(n, arcs)
        if key in seen:
            continue
        seen.add(key)
        yield D


def small_value_equivalences(cfg: SuiteConfig) -> str:
    count = 0
    values: dict[int, int] = {}
    for D in strong_digraphs(4):
        tag = arcs_text(D)
        trc = exact(D, K.TRC, cfg.budget()).value
        strc = exact(D, K.STRC, cfg.budget()).value
        rc = exact(D, K.RC, cfg.budget()).value
        complete = is_bioriented_complete(D)
        claim((trc == 1) == complete == (strc == 1), f"{tag}: trc={trc} strc={strc} complete={complete}")
        if not complete:
            claim(trc >= 3, f"{tag}: trc={trc} < 3 on a non-complete digraph")
        claim((trc == 3) == (strc == 3), f"{tag}: trc={trc} strc={strc}")
        claim((trc == 4) == (strc == 4), f"{tag}: trc={trc} strc={strc}")
        if rc == 2:
            claim(trc == 3, f"{tag}: rc=2 but trc={trc}")
        if trc in (3, 4):
            claim(distances(D).diameter == 2, f"{tag}: trc={trc} but diameter {distances(D).diameter}")
        values[trc] = values.get(trc, 0) + 1
        count += 1
    return f"{count} digraphs up to isomorphism, trc distribution {dict(sorted(values.items()))}"


def random_strong_arcs(n: int, p: float, rng: random.Random) -> set[tuple[int, int]]:
    """A random Hamiltonian cycle plus each other arc with probability p."""
    order = list(range(n))
    rng.shuffle(order)
    arcs = {(order[i], order[(i + 1) % n]) for i in range(n)}
    for x in range(n):
        for y in range(n):
            if x != y and rng.random() < p:
                arcs.add((x, y))
    return arcs


def monotonicity(cfg: SuiteConfig) -> str:
    rng = random.Random(cfg.seed)
    top = max(3, cfg.cap_n(5))
    budget = cfg.budget(25)
    for i in range(100):
        n = rng.randint(3, top)
        h_arcs = random_strong_arcs(n, 0.15, rng)
        d_arcs = h_arcs | {(x, y) for x in range(n) for y in range(n) if x != y and rng.random() < 0.3}
        H, D = build(n, sorted(h_arcs)), build(n, sorted(d_arcs))
        tag = f"pair #{i} D: {arcs_text(D)} H: {H.sorted_arcs()}"
        v = {kind: exact(D, kind, budget).value for kind in K}
        h = exact(H, K.TRC, budget).value
        claim(v[K.TRC] <= h, f"{tag}: trc(D)={v[K.TRC]} > trc(H)={h}")
        claim(v[K.TRC] >= max(v[K.RC], v[K.RVC]), f"{tag}: trc={v[K.TRC]} rc={v[K.RC]} rvc={v[K.RVC]}")
        claim(v[K.STRC] >= max(v[K.SRC], v[K.SRVC]), f"{tag}: strc={v[K.STRC]} src={v[K.SRC]} srvc={v[K.SRVC]}")
    return "100 pairs ok"


def random_connected_graph(n: int, p: float, rng: random.Random) -> list[tuple[int, int]]:
    """A random spanning tree plus each other edge with probability p."""
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return sorted(edges)


def biorientation(cfg: SuiteConfig) -> str:
    rng = random.Random(cfg.seed)
    top = max(2, cfg.cap_n(5))
    budget = cfg.budget(25)
    for i in range(50):
        n = rng.randint(2, top)
        edges = random_connected_graph(n, 0.3, rng)
        D = biorient(n, edges)
        tag = f"graph #{i} n={n} edges={edges}"
        for kind in (K.TRC, K.STRC):
            g = exact_undirected(n, edges, kind, budget).value
            d = exact(D, kind, budget).value
            claim(d <= g, f"{tag}: {kind.value} of biorientation {d} > {g}")
        g = exact_undirected(n, edges, K.RVC, budget).value
        d = exact(D, K.RVC, budget).value
        claim(d == g, f"{tag}: rvc of biorientation {d} != {g}")
    return "50 graphs ok"


def directed_cycles_of(D: Digraph) -> list[tuple[int, ...]]:
    """Every directed cycle, each listed once from its smallest vertex."""
    found = []

    def walk(start: int, path: list[int]) -> None:
        for y in D.out_neighbors(path[-1]):
            if y == start:
                found.append(tuple(path))
            elif y > start and y not in path:
                path.append(y)
                walk(start, path)
                path.pop()

    for s in range(D.n):
        walk(s, [s])
    return found


def cactus_oracle(D: Digraph) -> bool:
    if any(D.has_arc(y, x) for x, y in D.arcs) or not is_strongly_connected(D):
        return False
    count = {a: 0 for a in D.arcs}
    for cyc in directed_cycles_of(D):
        for i in range(len(cyc)):
            count[(cyc[i], cyc[(i + 1) % len(cyc)])] += 1
    return all(c == 1 for c in count.values())


CACTUS_ELEMENTS = 18


def cactus_suite(cfg: SuiteConfig) -> str:
    rng = random.Random(cfg.seed)
    top = max(3, cfg.cap_n(8))
    budget = cfg.budget(CACTUS_ELEMENTS)
    trc_checked = rejected = 0
    for i in range(300):
        n = rng.randint(3, top)
        q = rng.randint(1, (n - 1) // 2)
        D = cactus.random_cactus(n, q, rng)
        tag = f"cactus #{i} {arcs_text(D)}"
        claim(cactus_oracle(D), f"{tag}: oracle rejects a generated cactus")
        # a random extra arc must be judged the same way by both
        x, y = rng.sample(range(n), 2)
        if not D.has_arc(x, y):
            E = build(n, list(D.arcs) + [(x, y)])
            claim(cactus.is_cactus(E) == cactus_oracle(E), f"{tag} plus arc {(x, y)}: recognition disagrees")
            rejected += not cactus_oracle(E)
        Q = cactus.decompose(D)
        claim(Q.q == q == D.m - D.n + 1, f"{tag}: q={Q.q}, expected {q}")
        prof = cactus.profile(Q)
        rc, src = exact(D, K.RC, budget).value, exact(D, K.SRC, budget).value
        rvc, srvc = exact(D, K.RVC, budget).value, exact(D, K.SRVC, budget).value
        claim(rc == src, f"{tag}: rc={rc} src={src}")
        claim(rvc == srvc, f"{tag}: rvc={rvc} srvc={srvc}")
        claim(cactus.lower_bounds(Q, K.RVC) <= rvc, f"{tag}: rvc lower bound exceeds {rvc}")
        trc = None
        if D.n + D.m <= budget.element_cap(K.TRC):
            trc = exact(D, K.TRC, budget).value
            trc_checked += 1
            claim(cactus.lower_bounds(Q, K.TRC) <= trc, f"{tag}: trc lower bound exceeds {trc}")
            if D.n + D.m <= 12:
                strc = exact(D, K.STRC, budget).value
                claim(trc == strc, f"{tag}: trc={trc} strc={strc}")
        if q == 1:
            claim(rvc == families.formula("rvc_dicycle", n), f"{tag}: cycle rvc={rvc}")
            if trc is not None:
                claim(trc == families.formula("trc_dicycle", n), f"{tag}: cycle trc={trc}")
            continue
        far = prof.min_cut_distance >= 3
        claim(n - 2 * q + 2 <= rvc <= n - 2, f"{tag}: rvc={rvc} outside [{n - 2 * q + 2}, {n - 2}]")
        claim((rvc == n - 2 * q + 2) == far, f"{tag}: rvc={rvc} but min cut distance {prof.min_cut_distance}")
        claim((rvc == n - 2) == prof.is_special_path, f"{tag}: rvc={rvc} special={prof.is_special_path}")
        if trc is not None:
            claim(2 * n - 3 * q + 3 <= trc <= 2 * n - 3, f"{tag}: trc={trc} outside [{2 * n - 3 * q + 3}, {2 * n - 3}]")
            claim(trc != 2 * n - 4, f"{tag}: trc = 2n-4 = {trc}")
            claim((trc == 2 * n - 3 * q + 3) == far, f"{tag}: trc={trc} but min cut distance {prof.min_cut_distance}")
            claim((trc == 2 * n - 3) == prof.is_special_path, f"{tag}: trc={trc} special={prof.is_special_path}")
    return f"300 cacti ok ({trc_checked} with exact trc), {rejected} perturbed non-cacti rejected"


def qnql_suite(cfg: SuiteConfig) -> str:
    count = 0
    for q in range(2, 5):
        for n in range(2 * q + 1, 13):
            for variant in ("base", "odd", "mod2"):
                for l in range(1, q):
                    if not cactus.qnql_valid(n, q, l, variant):
                        continue
                    inst = cactus.build_Qnql(n, q, l, variant)
                    tag = f"Q(n={n}, q={q}, l={l}, {variant})"
                    if inst.rvc is not None:
                        want = n - 2 * q + inst.rvc_k
                        claim(inst.rvc.color_count == want, f"{tag}: rvc scheme {inst.rvc.color_count} != {want}")
                        report = check_connected(inst.digraph, inst.rvc, K.RVC)
                        claim(report.ok, f"{tag}: rvc scheme fails at {report.failing_pair}")
                    want = 2 * n - 3 * q + inst.trc_k
                    claim(inst.trc.color_count == want, f"{tag}: trc scheme {inst.trc.color_count} != {want}")
                    report = check_connected(inst.digraph, inst.trc, K.TRC)
                    claim(report.ok, f"{tag}: trc scheme fails at {report.failing_pair}")
                    count += 1
    return f"{count} instances verify"


def separations(cfg: SuiteConfig) -> str:
    for s in range(4, 9):
        D = families.fs(s)
        claim(distances(D).diameter == 3, f"F_{s}: diameter {distances(D).diameter}")
        c = families.fs_coloring(s)
        claim(c.color_count == 3, f"F_{s}: {c.color_count} colors")
        report = check_connected(D, c, K.SRC)
        claim(report.ok, f"F_{s}: SRC fails at {report.failing_pair}")
    H = families.hs(13)
    c = families.hs_coloring(13)
    claim(c.color_count == 13, f"H_13: {c.color_count} colors")
    report = check_connected(H, c, K.STRC)
    claim(report.ok, f"H_13: STRC fails at {report.failing_pair}")
    claim(families.hs_premises_hold(13), "H_13: unique-geodesic premises fail")
    fan = families.triangle_fan(2)
    got = {kind.value: exact(fan, kind, cfg.budget()).value for kind in (K.TRC, K.STRC, K.RVC, K.SRVC)}
    claim(got == {"TRC": 7, "STRC": 7, "RVC": 3, "SRVC": 3}, f"triangle fan t=2: {got}")
    return f"F_4..F_8 and H_13 verify; fan t=2 {got}"


CRITERIA = (
    Criterion(1, "directed cycles", 30, directed_cycles),
    Criterion(2, "bioriented paths and cycles", 60, bioriented_paths_cycles),
    Criterion(3, "wheels and multipartite", 30, wheels_multipartite),
    Criterion(4, "tournament values", 60, tournament_values),
    Criterion(5, "T(n,k) certification", 30, tnk_certification),
    Criterion(6, "tournament colorings", 180, tournament_properties),
    Criterion(7, "Petersen", 120, petersen_suite),
    Criterion(8, "small-value equivalences", 300, small_value_equivalences),
    Criterion(9, "monotonicity and max-inequalities", 300, monotonicity),
    Criterion(10, "biorientation inequality", 300, biorientation),
    Criterion(11, "cactus suite", 600, cactus_suite),
    Criterion(12, "Q(n,q,l) constructions", 120, qnql_suite),
    Criterion(13, "separation constructions", 180, separations),
)


def run_criterion(criterion: Criterion, cfg: SuiteConfig) -> CriterionResult:
    start = time.perf_counter()
    try:
        detail = criterion.run(cfg)
        passed = True
    except Exception as exc:  # a crash is reported as a failure of that criterion
        detail = f"{type(exc).__name__}: {exc}"
        passed = False
    elapsed = time.perf_counter() - start
    if passed and elapsed >= criterion.limit:
        passed = False
        detail = f"over time limit {criterion.limit:.0f}s; {detail}"
    return CriterionResult(criterion.number, criterion.title, passed, elapsed, criterion.limit, detail)


def run_suite(cfg: SuiteConfig, only: set[int] | None = None) -> Iterator[CriterionResult]:
    for criterion in CRITERIA:
        if only is None or criterion.number in only:
            yield run_criterion(criterion, cfg)
