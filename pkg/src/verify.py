"""
Named verification suites.

Each suite expands into independent checks that run on a thread pool; the
results come back sorted by check id so reports do not depend on the
number of workers.
"""

import json
import logging
import os
import random
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple

from .config import get_golden_dir, get_threads
from .geometry import Point, on_segment
from .invariants import (
    boundary_colors,
    coinv,
    count_colorings,
    count_colorings_backtracking,
    count_colorings_exhaustive,
    enumerate_colorings,
    is_proper,
    monomial,
    separation_coloring,
)
from .plane_partitions import (
    Box3,
    PlanePartition,
    SymmetryClass,
    empty,
    enumerate_box,
    enumerate_class,
    macmahon_count,
)
from .projection import matching_validate, project_plane_partition, project_word
from .symmetry_words import (
    ClassWordSpec,
    catalan,
    census,
    count_words_formula,
    full_box_word,
    generate_words,
    tspp_window_condition,
    validate_word,
)
from .tableaux import (
    format_word,
    is_yamanouchi,
    parse_word,
    random_yamanouchi_word,
    tableau_to_word,
    word_to_tableau,
)
from .trips import TripError, boundary_word, separation_labels, side_of, trip_permutation
from .web_builder import (
    BOUNDARY,
    HourglassWeb,
    WebError,
    benzene_class_states,
    restrict_to_fundamental_domain,
    web_from_dimers,
    web_from_plane_partition,
)

logger = logging.getLogger(__name__)
logger.setLevel(logging.WARNING)

OPPOSITE_SIDE = {"NE": "SW", "E": "W", "SE": "NW", "SW": "NE", "W": "E", "NW": "SE"}
TRIP1_SIDES = {"NE": "SE", "E": "NW", "SE": "W", "W": "NE", "NW": "SW", "SW": "E"}

Check = Tuple[str, Callable[[], Tuple[bool, str]]]


@dataclass(frozen=True)
class CheckResult:
    id: str
    ok: bool
    detail: str
    internal: bool = False

    def to_json(self) -> Dict:
        return {"id": self.id, "ok": self.ok, "detail": self.detail}


def _boxes(max_size: int, start: int = 1):
    return [Box3(a, b, c) for a, b, c in product(range(start, max_size + 1), repeat=3)]


def _macmahon(max_size: int = 3, **_) -> List[Check]:
    def check(box: Box3):
        n, formula = len(enumerate_box(box)), macmahon_count(box)
        return n == formula, f"enumerated {n}, formula {formula}"
    return [(f"macmahon/{b.a},{b.b},{b.c}", lambda b=b: check(b)) for b in _boxes(max_size, 0)]


def _benzene(box: Optional[Box3] = None, **_) -> List[Check]:
    boxes = [box] if box else [Box3(1, 1, 1), Box3(2, 2, 2)]

    def size(b: Box3):
        n = len(benzene_class_states(web_from_plane_partition(empty(b))))
        return n == macmahon_count(b), f"class size {n}, partitions {macmahon_count(b)}"

    def word(b: Box3):
        states = benzene_class_states(web_from_plane_partition(empty(b)))
        words = {format_word(boundary_word(web_from_dimers(b, s))) for s in states}
        return len(words) == 1, f"{len(words)} distinct words: {sorted(words)[:3]}"

    checks = []
    for b in boxes:
        tag = f"{b.a},{b.b},{b.c}"
        checks.append((f"benzene/size/{tag}", lambda b=b: size(b)))
        checks.append((f"benzene/word/{tag}", lambda b=b: word(b)))
    return checks


def _class_specs(max_size: int) -> List[ClassWordSpec]:
    specs = [ClassWordSpec(SymmetryClass.SPP, a=a, c=c) for a in range(1, max_size + 1)
             for c in range(1, max_size + 1)]
    specs += [ClassWordSpec(SymmetryClass.CSPP, a=a) for a in range(1, max_size + 1)]
    specs += [ClassWordSpec(SymmetryClass.TSPP, a=a) for a in range(1, max_size + 1)]
    specs += [ClassWordSpec(SymmetryClass.TSSCPP, d=d) for d in range(1, max_size + 1)]
    return specs


def _words(max_size: int = 3, **_) -> List[Check]:
    def check(spec: ClassWordSpec):
        words, _ = census(spec.cls, spec.box())
        generated = generate_words(spec)
        if set(words) != generated:
            return False, f"census has {len(set(words))} words, generator {len(generated)}"
        bad = [format_word(w) for w in words if not validate_word(spec, w) or not is_yamanouchi(w)]
        if bad:
            return False, f"rejected census word {bad[0]}"
        return True, f"{len(generated)} words"

    def full(a: int, c: int):
        box = Box3(a, a, c)
        got = boundary_word(web_from_plane_partition(empty(box)))
        want = full_box_word(a, c)
        return got == want, format_word(got)

    checks = [(f"words/{s.describe()}", lambda s=s: check(s)) for s in _class_specs(max_size)]
    checks += [(f"words/full/{a},{a},{c}", lambda a=a, c=c: full(a, c))
               for a in range(1, max_size + 1) for c in range(1, max_size + 1)]
    return checks


def _counts(max_size: int = 3, **_) -> List[Check]:
    def check(spec: ClassWordSpec):
        _, distinct = census(spec.cls, spec.box())
        formula = count_words_formula(spec)
        if spec.cls is SymmetryClass.TSPP and spec.a >= 3:
            return True, f"census {distinct}, formula {formula} (informational)"
        return distinct == formula, f"census {distinct}, formula {formula}"

    def window(a: int):
        words, _ = census(SymmetryClass.TSPP, Box3(a, a, a))
        distinct = set(words)
        accepted = sum(1 for w in distinct if tspp_window_condition(a, w))
        if accepted != len(distinct):
            logger.warning(f"TSPP window condition rejects {len(distinct) - accepted} census words at a={a}")
        return accepted == len(distinct), f"window condition accepts {accepted} of {len(distinct)} census words"

    checks = [(f"counts/{s.describe()}", lambda s=s: check(s)) for s in _class_specs(max_size)]
    checks += [(f"counts/tspp-window/a={a}", lambda a=a: window(a)) for a in range(1, max_size + 1)]
    return checks


def _load_golden(name: str):
    with open(os.path.join(get_golden_dir(), name), "r", encoding="utf-8") as f:
        return json.load(f)


def _projection(d: int = 3, **_) -> List[Check]:
    spec = ClassWordSpec(SymmetryClass.TSSCPP, d=d)

    def matchings():
        found = set()
        for p in enumerate_class(SymmetryClass.TSSCPP, spec.box()):
            _, _, m = project_plane_partition(p, SymmetryClass.TSSCPP)
            if not matching_validate(m):
                return False, f"invalid matching for {p.heights}"
            found.add(m.edge_set())
        if len(found) != catalan(d):
            return False, f"{len(found)} distinct matchings, expected {catalan(d)}"
        if d == 3:
            golden = {frozenset((e["ends"][0], e["ends"][1], e["mark"]) for e in g["edges"])
                      for g in _load_golden("tsscpp6_matchings.json")["matchings"]}
            if found != golden:
                return False, "matchings differ from the golden set"
        return True, f"{len(found)} matchings"

    def injective(cls: SymmetryClass, s: ClassWordSpec):
        words = generate_words(s)
        reduced = {project_word(s, w).word for w in words}
        if not all(is_yamanouchi(r) for r in reduced):
            return False, "projected word is not Yamanouchi"
        return len(reduced) == len(words), f"{len(words)} words, {len(reduced)} images"

    def tspp_example():
        golden = _load_golden("tspp_projection.json")
        reduced = project_word(ClassWordSpec(SymmetryClass.TSPP, a=4), parse_word(golden["word"]))
        return format_word(reduced.word) == golden["projected"], format_word(reduced.word)

    checks = [(f"projection/matchings/d={d}", matchings), ("projection/tspp-example", tspp_example)]
    for s in (spec, ClassWordSpec(SymmetryClass.SPP, a=2, c=2), ClassWordSpec(SymmetryClass.TSPP, a=3)):
        checks.append((f"projection/injective/{s.describe()}", lambda s=s: injective(s.cls, s)))
    return checks


def _trip_laws(web: HourglassWeb) -> Tuple[bool, str]:
    t1, t2, t3 = (trip_permutation(web, a) for a in (1, 2, 3))
    n = web.n
    if any(t1[t3[i] - 1] != i + 1 for i in range(n)):
        return False, "trip1 is not the inverse of trip3"
    if any(t2[t2[i] - 1] != i + 1 for i in range(n)):
        return False, "trip2 is not an involution"
    return True, f"n={n}"


def _trip_sides(web: HourglassWeb) -> Tuple[bool, str]:
    t1, t2 = trip_permutation(web, 1), trip_permutation(web, 2)
    # trip 1 can only carry whole sides onto whole sides when they have equal length
    cube = web.box.a == web.box.b == web.box.c
    for i, v in enumerate(web.boundary):
        side = side_of(web, v)
        if side_of(web, web.boundary[t2[i] - 1]) != OPPOSITE_SIDE[side]:
            return False, f"trip2 from b{i + 1} on {side} misses the opposite side"
        if cube and side_of(web, web.boundary[t1[i] - 1]) != TRIP1_SIDES[side]:
            return False, f"trip1 from b{i + 1} on {side} ends off its route"
    return True, "routes hold"


def _trips(max_size: int = 3, sides_max: int = 2, **_) -> List[Check]:
    """Trip laws on every box up to max_size; side routes up to sides_max."""
    checks: List[Check] = []
    for box in _boxes(max_size):
        tag = f"{box.a},{box.b},{box.c}"
        for k, p in enumerate(enumerate_box(box)):
            checks.append((f"trips/full/{tag}/{k:03d}", lambda p=p: _trip_laws(web_from_plane_partition(p))))
        if max(box.as_tuple()) <= sides_max:
            checks.append((f"trips/sides/{tag}", lambda box=box: _trip_sides(web_from_plane_partition(empty(box)))))
        for cls in (SymmetryClass.SPP, SymmetryClass.CSPP, SymmetryClass.TSPP, SymmetryClass.TSSCPP):
            try:
                members = enumerate_class(cls, box)
            except ValueError:
                continue
            for k, p in enumerate(members):
                checks.append((f"trips/{cls.value}/{tag}/{k:03d}",
                               lambda p=p, cls=cls: _trip_laws(restrict_to_fundamental_domain(p, cls))))
    return checks


def restriction_mismatches(full: HourglassWeb, restricted: HourglassWeb) -> List[str]:
    """Edges of the restricted web whose labels differ from the full web's."""
    full_labels = separation_labels(full)
    part_labels = separation_labels(restricted)
    by_ends = {}
    for e in full.edges:
        by_ends[(full.vertices[e.black].position, full.vertices[e.white].position)] = e
    pairs = {}
    for i in restricted.split_pairs:
        a, b = restricted.boundary[i], restricted.boundary[i + 1]
        pairs[a], pairs[b] = b, a

    def full_edge_through(u: int, point) -> Optional[int]:
        pos = restricted.vertices[u].position
        for e in full.edges:
            ends = (full.vertices[e.black].position, full.vertices[e.white].position)
            if pos in ends and on_segment(point, *ends):
                return e.id
        return None

    problems = []
    for e in restricted.edges:
        bpos, wpos = restricted.vertices[e.black].position, restricted.vertices[e.white].position
        match = by_ends.get((bpos, wpos))
        if match is not None:
            if full_labels[match.id] != part_labels[e.id]:
                problems.append(f"edge {e.id}: {part_labels[e.id]} vs {full_labels[match.id]}")
            continue
        cut = e.black if restricted.vertices[e.black].kind == BOUNDARY else e.white
        inner = e.other(cut)
        if cut in pairs:
            other = pairs[cut]
            mid = (restricted.vertices[cut].position + restricted.vertices[other].position).divide(2)
            fid = full_edge_through(inner, mid)
            other_edge = restricted.rotation[other][0][0]
            got = frozenset([part_labels[e.id], part_labels[other_edge]])
        else:
            fid = full_edge_through(inner, restricted.vertices[cut].position)
            got = part_labels[e.id]
        if fid is None:
            problems.append(f"edge {e.id}: no full-web edge crosses the cut there")
        elif full_labels[fid] != got:
            problems.append(f"edge {e.id}: {got} vs {full_labels[fid]}")
    return problems


def _restriction(max_size: int = 4, **_) -> List[Check]:
    def check(p, cls):
        problems = restriction_mismatches(web_from_plane_partition(p), restrict_to_fundamental_domain(p, cls))
        return not problems, problems[0] if problems else "labels agree"

    checks: List[Check] = []
    for cls in (SymmetryClass.SPP, SymmetryClass.CSPP, SymmetryClass.TSPP, SymmetryClass.TSSCPP):
        sizes = range(2, max(max_size, 2) + 1, 2) if cls is SymmetryClass.TSSCPP else range(1, max_size + 1)
        for a in sizes:
            box = Box3(a, a, a)
            for k, p in enumerate(enumerate_class(cls, box)):
                checks.append((f"restriction/{cls.value}/{box.a}/{k:03d}", lambda p=p, cls=cls: check(p, cls)))
    return checks


def _tableaux(count: int = 100, seed: int = 2023, **_) -> List[Check]:
    def single_box():
        golden = _load_golden("tableau_single_box.json")
        t = word_to_tableau(parse_word(golden["word"]))
        ok = [list(s) for s in t.shapes] == golden["shapes"] and t.to_json()["filling"] == golden["filling"]
        return ok, "single-box tableau" if ok else f"got {t.to_json()}"

    def round_trips():
        rng = random.Random(seed)
        for _ in range(count):
            w = random_yamanouchi_word(rng, 4, rng.randint(0, 12))
            if tableau_to_word(word_to_tableau(w)) != w:
                return False, f"round trip failed on {format_word(w)}"
        return True, f"{count} words"

    return [("tableaux/single-box", single_box), ("tableaux/round-trip", round_trips)]


def _invariants(max_size: int = 2, **_) -> List[Check]:
    def coinv_example():
        v = coinv((1, 2, 3, 1, 2, 3))
        return v == 12, f"coinv {v}"

    def oracle(box: Box3):
        webs = enumerate_box(box)
        if len(webs) > 10:
            webs = [webs[0], webs[-1]]
        for p in webs:
            web = web_from_plane_partition(p)
            a, b = count_colorings(web), count_colorings_backtracking(web)
            if a != b:
                return False, f"{p.heights}: dp {a}, backtracking {b}"
        return True, f"{len(webs)} webs"

    def exhaustive():
        counts = {count_colorings_exhaustive(web_from_plane_partition(p)) for p in enumerate_box(Box3(1, 1, 1))}
        return counts == {240}, f"exhaustive {sorted(counts)}"

    def example_coloring():
        golden = _load_golden("single_box.json")
        web = web_from_plane_partition(PlanePartition(Box3(1, 1, 1), tuple(map(tuple, golden["heights"]))))
        example = golden["example_coloring"]
        found = [k for k in enumerate_colorings(web) if list(boundary_colors(web, k)) == example["boundary"]]
        if len(found) != 1:
            return False, f"{len(found)} colorings with boundary {example['boundary']}"
        (k,) = found
        for name, (black, white) in golden["edges"].items():
            u, v = web.vertex_at(Point(*black)), web.vertex_at(Point(*white))
            colors = sorted(k[web.embedding[u.id][v.id]["edge"]])
            if colors != example["internal"][name]:
                return False, f"edge {name} colored {colors}"
        sign = monomial(web, k).sign
        return sign == example["sign"], f"sign {sign}"

    def separation_is_coloring():
        for box in (Box3(1, 1, 1), Box3(2, 1, 1), Box3(2, 2, 1)):
            for p in enumerate_box(box):
                web = web_from_plane_partition(p)
                if not is_proper(web, separation_coloring(web)):
                    return False, f"{p.heights}: separation labels are not a proper coloring"
        return True, "proper"

    checks = [("invariants/coinv", coinv_example), ("invariants/separation-coloring", separation_is_coloring),
              ("invariants/exhaustive", exhaustive), ("invariants/example-coloring", example_coloring)]
    for box in _boxes(max_size):
        checks.append((f"invariants/oracle/{box.a},{box.b},{box.c}", lambda box=box: oracle(box)))
    return checks


SUITES: Dict[str, Callable[..., List[Check]]] = {
    "macmahon": _macmahon,
    "benzene": _benzene,
    "words": _words,
    "counts": _counts,
    "projection": _projection,
    "trips": _trips,
    "restriction": _restriction,
    "tableaux": _tableaux,
    "invariants": _invariants,
}


def _run(check_id: str, fn: Callable[[], Tuple[bool, str]]) -> CheckResult:
    try:
        ok, detail = fn()
        return CheckResult(check_id, bool(ok), detail)
    except (WebError, TripError) as e:
        logger.error(f"{check_id}: {e}")
        return CheckResult(check_id, False, f"error: {e}", internal=getattr(e, "internal", False))
    except (ValueError, OSError) as e:
        return CheckResult(check_id, False, f"error: {e}")
    except Exception as e:
        logger.error(f"{check_id}: unexpected {type(e).__name__}: {e}")
        return CheckResult(check_id, False, f"internal error: {e}", internal=True)


def build_checks(name: str, **options) -> List[Check]:
    if name not in SUITES:
        raise ValueError(f"Unknown suite '{name}'. Choose one of: {', '.join(SUITES)}")
    return SUITES[name](**{k: v for k, v in options.items() if v is not None})


def run_checks(checks: List[Check], threads: Optional[int] = None,
               on_done: Optional[Callable[[], None]] = None) -> List[CheckResult]:
    """Run checks on a thread pool and return the results sorted by id.

    Args:
        checks: (id, callable) pairs from build_checks
        threads: Worker count; defaults to HOURGLASS_THREADS
        on_done: Called once per finished check (progress reporting)

    Returns:
        List of CheckResult sorted by id
    """
    workers = threads or get_threads()
    results = []
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(_run, cid, fn): cid for cid, fn in checks}
        for future in as_completed(futures):
            results.append(future.result())
            if on_done:
                on_done()
    return sorted(results, key=lambda r: r.id)


def run_suite(name: str, threads: Optional[int] = None, **options) -> List[CheckResult]:
    results = run_checks(build_checks(name, **options), threads)
    logger.info(f"Suite {name}: {sum(r.ok for r in results)}/{len(results)} checks passed")
    return results
