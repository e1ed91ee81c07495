import argparse
import json
import logging
import os
import sys
from typing import List, Optional

from tqdm import tqdm

# Add the parent directory to Python path to import src modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.config import get_log_level, get_threads
from src.invariants import count_colorings, invariant_at_q1
from src.plane_partitions import (
    Box3,
    PlanePartition,
    SymmetryClass,
    enumerate_class,
    macmahon_count,
)
from src.projection import ProjectionError, matching_to_json, project_plane_partition, project_word, sl2_growth
from src.render import render_matching_svg, render_web_svg
from src.symmetry_words import (
    ClassWordSpec,
    census,
    count_words_formula,
    generate_words,
    tspp_window_condition,
    validate_word,
)
from src.tableaux import format_word, is_yamanouchi, parse_word, shape_token, word_to_tableau
from src.trips import TripError, boundary_word, side_routes, trip_permutation
from src.verify import SUITES, build_checks, run_checks
from src.web_builder import (
    HourglassWeb,
    WebError,
    benzene_class_states,
    restrict_to_fundamental_domain,
    web_from_json,
    web_from_plane_partition,
    web_to_json,
)

LIBRARY_LOGGERS = ["src.plane_partitions", "src.web_builder", "src.trips", "src.tableaux",
                   "src.symmetry_words", "src.projection", "src.invariants", "src.verify"]

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _emit(data, fmt: str = "json") -> None:
    if fmt == "json" or not isinstance(data, str):
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(data)


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"Cannot read JSON from {path}: {e}")


def _load_web(path: str) -> HourglassWeb:
    """A web file, or a plane-partition file with an optional 'class' to restrict to."""
    data = _read_json(path)
    if "matched" in data:
        return web_from_json(data)
    p = PlanePartition.from_json(data)
    if data.get("class"):
        return restrict_to_fundamental_domain(p, SymmetryClass.from_name(data["class"]))
    return web_from_plane_partition(p)


def _class_spec(args) -> ClassWordSpec:
    cls = SymmetryClass.from_name(args.cls)
    return ClassWordSpec(cls, a=args.a or 0, c=args.c or 0, d=args.d or 0)


def cmd_pp(args) -> int:
    box = Box3.parse(args.box)
    cls = SymmetryClass.from_name(args.cls) if args.cls else SymmetryClass.PLAIN
    if args.action == "count" and args.formula:
        if cls is not SymmetryClass.PLAIN:
            raise UsageError("--formula is only available for plain plane partitions")
        _emit(macmahon_count(box))
        return EXIT_OK
    total = macmahon_count(box) if cls is SymmetryClass.PLAIN else None
    with tqdm(total=total, desc=f"enumerate {cls.value}", unit="pp", disable=None, file=sys.stderr) as pbar:
        members = enumerate_class(cls, box, on_found=lambda: pbar.update(1))
    if args.action == "count" or args.count_only:
        _emit(len(members))
    else:
        _emit([p.to_json() for p in members])
    return EXIT_OK


def cmd_web(args) -> int:
    if args.action == "build":
        path = args.pp or args.file
        if not path:
            raise UsageError("web build needs a plane-partition file (--pp FILE)")
        data = _read_json(path)
        p = PlanePartition.from_json(data)
        cls = args.cls or data.get("class")
        web = restrict_to_fundamental_domain(p, SymmetryClass.from_name(cls)) if cls else web_from_plane_partition(p)
        out = web_to_json(web)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as f:
                json.dump(out, f, indent=2)
            print(f"Web saved to {args.out}")
        else:
            _emit(out)
        return EXIT_OK

    if not args.file:
        raise UsageError(f"web {args.action} needs a web or plane-partition JSON file")
    web = _load_web(args.file)
    if args.action == "word":
        word = boundary_word(web)
        _emit(word.to_json() if args.format == "json" else format_word(word), args.format)
    elif args.action == "trips":
        routes = side_routes(web, args.index)
        _emit({"index": args.index, "permutation": list(trip_permutation(web, args.index)),
               "routes": [{"from": a, "to": b, "count": n} for (a, b), n in sorted(routes.items())]})
    elif args.action == "benzene-class":
        with tqdm(desc="benzene class", unit="state", disable=None, file=sys.stderr) as pbar:
            states = benzene_class_states(web, args.threads or get_threads(), on_state=lambda: pbar.update(1))
        if args.count:
            _emit(len(states))
        else:
            _emit([sorted([int(w.x), int(w.y), int(b.x), int(b.y)] for w, b in s) for s in states])
    elif args.action == "render":
        if not args.svg:
            raise UsageError("web render needs --svg OUT")
        result = render_web_svg(web, args.svg)
        if "error" in result:
            print(result["error"], file=sys.stderr)
            return EXIT_FAILED
        _emit(result)
    return EXIT_OK


def cmd_word(args) -> int:
    word = parse_word(args.tokens, args.rank)
    if args.action == "yamanouchi":
        ok = is_yamanouchi(word)
        _emit({"word": format_word(word), "yamanouchi": ok})
        return EXIT_OK if ok else EXIT_FAILED
    tableau = word_to_tableau(word)
    if args.format == "tokens":
        _emit(" -> ".join(shape_token(s) for s in tableau.shapes), "tokens")
    else:
        _emit(tableau.to_json())
    return EXIT_OK


def cmd_words(args) -> int:
    spec = _class_spec(args)
    if args.action == "generate":
        words = sorted(format_word(w) for w in generate_words(spec))
        _emit("\n".join(words) if args.format == "tokens" else words, args.format)
    elif args.action == "validate":
        if not args.tokens:
            raise UsageError("words validate needs a word")
        word = parse_word(args.tokens)
        ok = validate_word(spec, word)
        result = {"word": format_word(word), "class": spec.describe(), "valid": ok}
        if spec.cls is SymmetryClass.TSPP:
            result["window_condition"] = tspp_window_condition(spec.a, word)
        _emit(result)
        return EXIT_OK if ok else EXIT_FAILED
    else:
        result = {"class": spec.describe(), "formula": count_words_formula(spec)}
        if args.census:
            box = Box3.parse(args.box) if args.box else spec.box()
            with tqdm(desc=f"census {spec.describe()}", unit="web", disable=None, file=sys.stderr) as pbar:
                words, distinct = census(spec.cls, box, args.threads or get_threads(), on_done=lambda: pbar.update(1))
            result.update({"webs": len(words), "census": distinct})
        _emit(result if args.census else result["formula"])
    return EXIT_OK


def cmd_project(args) -> int:
    cls = SymmetryClass.from_name(args.cls)
    p = PlanePartition.from_json(_read_json(args.pp))
    word, reduced, matching = project_plane_partition(p, cls)
    result = {"word": format_word(word), "projected": format_word(reduced.word), "rank": reduced.word.rank}
    if matching is not None:
        result["matching"] = matching_to_json(matching)
        if args.render_svg:
            rendered = render_matching_svg(matching, args.render_svg)
            if "error" in rendered:
                print(rendered["error"], file=sys.stderr)
                return EXIT_FAILED
    _emit(result)
    return EXIT_OK


def cmd_project_word(args) -> int:
    spec = _class_spec(args)
    reduced = project_word(spec, parse_word(args.tokens))
    result = {"projected": format_word(reduced.word), "rank": reduced.word.rank}
    if reduced.word.rank == 2:
        result["matching"] = matching_to_json(sl2_growth(reduced.word))
    _emit(result if args.format == "json" else result["projected"], args.format)
    return EXIT_OK


def cmd_invariant(args) -> int:
    web = _load_web(args.file)
    if args.count_only:
        _emit(count_colorings(web))
    else:
        _emit([m.to_json() for m in invariant_at_q1(web)])
    return EXIT_OK


def cmd_verify(args) -> int:
    options = {"max_size": args.max, "d": args.d, "box": Box3.parse(args.box) if args.box else None}
    checks = build_checks(args.suite, **options)
    threads = args.threads or get_threads()
    with tqdm(total=len(checks), desc=f"verify {args.suite}", disable=None, file=sys.stderr) as pbar:
        results = run_checks(checks, threads, on_done=lambda: pbar.update(1))
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.id}: {r.detail}")
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if any(r.internal for r in failed):
        return EXIT_INTERNAL
    if failed:
        print(f"First failing check: {failed[0].id}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def _class_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--class", dest="cls", type=str, required=True, help="spp, cspp, tspp or tsscpp")
    parser.add_argument("--a", type=int, default=None, help="Box side a")
    parser.add_argument("--c", type=int, default=None, help="Box height c (SPP)")
    parser.add_argument("--d", type=int, default=None, help="Half side d (TSSCPP)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Hourglass webs of symmetric plane partitions")
    parser.add_argument("--verbose", action="store_true", help="Show library progress logs")
    sub = parser.add_subparsers(dest="command", required=True)

    pp = sub.add_parser("pp", help="Enumerate or count plane partitions")
    pp.add_argument("action", choices=["enumerate", "count"])
    pp.add_argument("--box", type=str, required=True, help="Box as A,B,C")
    pp.add_argument("--class", dest="cls", type=str, default=None, help="Symmetry class filter")
    pp.add_argument("--count-only", "--count_only", dest="count_only", action="store_true")
    pp.add_argument("--formula", action="store_true", help="Use the product formula")
    pp.set_defaults(handler=cmd_pp)

    web = sub.add_parser("web", help="Build webs and read words, trips and benzene classes")
    web.add_argument("action", choices=["build", "word", "trips", "benzene-class", "render"])
    web.add_argument("file", nargs="?", default=None, help="Web or plane-partition JSON file")
    web.add_argument("--pp", type=str, default=None, help="Plane-partition JSON file (build)")
    web.add_argument("--domain", "--class", dest="cls", type=str, default=None,
                     help="Restrict to this class's fundamental domain")
    web.add_argument("--out", type=str, default=None, help="Where to save the web JSON")
    web.add_argument("--index", type=int, default=1, choices=[1, 2, 3], help="Trip index")
    web.add_argument("--count", action="store_true", help="Only count the benzene class")
    web.add_argument("--svg", type=str, default=None, help="SVG output path (render)")
    web.add_argument("--format", choices=["tokens", "json"], default="tokens")
    web.add_argument("--threads", type=int, default=None, help="Worker count (default HOURGLASS_THREADS)")
    web.set_defaults(handler=cmd_web)

    word = sub.add_parser("word", help="Single-word tools")
    word.add_argument("action", choices=["tableau", "yamanouchi"])
    word.add_argument("tokens", type=str)
    word.add_argument("--rank", type=int, default=4)
    word.add_argument("--format", choices=["tokens", "json"], default="json")
    word.set_defaults(handler=cmd_word)

    words = sub.add_parser("words", help="Boundary words of a symmetry class")
    words.add_argument("action", choices=["generate", "validate", "count"])
    words.add_argument("tokens", nargs="?", default=None)
    _class_flags(words)
    words.add_argument("--census", action="store_true", help="Also count words read from actual webs")
    words.add_argument("--box", type=str, default=None, help="Census box as A,B,C")
    words.add_argument("--format", choices=["tokens", "json"], default="tokens")
    words.add_argument("--threads", type=int, default=None, help="Worker count (default HOURGLASS_THREADS)")
    words.set_defaults(handler=cmd_words)

    project = sub.add_parser("project", help="Project a symmetric plane partition")
    project.add_argument("--class", dest="cls", type=str, required=True)
    project.add_argument("--pp", type=str, required=True, help="Plane-partition JSON file")
    project.add_argument("--render-svg", "--render_svg", dest="render_svg", type=str, default=None)
    project.set_defaults(handler=cmd_project)

    project_w = sub.add_parser("project-word", help="Project a class word")
    project_w.add_argument("tokens", type=str)
    _class_flags(project_w)
    project_w.add_argument("--format", choices=["tokens", "json"], default="json")
    project_w.set_defaults(handler=cmd_project_word)

    invariant = sub.add_parser("invariant", help="Invariant expansion at q = 1")
    invariant.add_argument("file", type=str)
    invariant.add_argument("--count-only", "--count_only", dest="count_only", action="store_true")
    invariant.set_defaults(handler=cmd_invariant)

    verify = sub.add_parser("verify", help="Run a verification suite")
    verify.add_argument("--suite", choices=sorted(SUITES), required=True)
    verify.add_argument("--max", type=int, default=None, help="Largest box side to check")
    verify.add_argument("--box", type=str, default=None, help="Box as A,B,C (benzene)")
    verify.add_argument("--d", type=int, default=None, help="TSSCPP half side (projection)")
    verify.add_argument("--threads", type=int, default=None, help="Worker count (default HOURGLASS_THREADS)")
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        if args.verbose:
            logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
            for name in LIBRARY_LOGGERS:
                logging.getLogger(name).setLevel(logging.INFO)
        else:
            # Keep library loggers quiet unless asked
            for name in LIBRARY_LOGGERS:
                logging.getLogger(name).setLevel(max(logging.ERROR, get_log_level()))
        return args.handler(args)
    except (WebError, TripError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INTERNAL if e.internal else EXIT_USAGE
    except ProjectionError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
