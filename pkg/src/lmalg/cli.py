"""Command-line front end.

Documents are single JSON objects tagged by ``kind``; they are validated
against a JSON schema and then against the invariants of the library type
they describe.  Every command prints one report, or with
``--format document`` just the produced document, so commands chain
through pipes.

Exit codes: 0 pass, 1 a law was found violated, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import jsonschema

from .boolalg import FiniteBooleanAlgebra, default_atoms
from .construct import IdealSequenceObject, build_J, build_T, lambda_functor, sigma_functor
from .errors import LMAlgError
from .lm import (
    SYSTEM_ALIASES,
    SYSTEM_SIGNATURE,
    LMAlgebra,
    as_j,
    as_phi,
    boolean_center,
    canonical,
    check_axioms,
    check_derived_props,
    moisil_represent,
    native_system,
)
from .mvn import MVAlgebra, check_l_proper, check_mv_axioms, check_mvn_axioms, check_somv_condition, mv_chain
from .report import AxiomReport
from .stone import FiniteSpaceWithOpens, check_stone_roundtrip, theta_a, theta_t
from .suites import GROUPS, SuiteConfig, run_suites

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


# ---------------------------------------------------------------------------
# errors


class DocumentError(LMAlgError):
    """Base class for unreadable input documents."""


class DocumentSyntaxError(DocumentError):
    def __init__(self, msg: str, line: int, column: int):
        super().__init__(f"{msg} at line {line}, column {column}")
        self.line, self.column = line, column


class DocumentSchemaError(DocumentError):
    def __init__(self, msg: str, path: Sequence[Any] = ()):
        where = "/".join(str(p) for p in path)
        super().__init__(f"{msg} (at /{where})" if where else msg)
        self.path = list(path)


class DocumentInvariantError(DocumentError):
    pass


class UsageError(LMAlgError):
    pass


# ---------------------------------------------------------------------------
# schemas

_INT = {"type": "integer", "minimum": 0}
_LABELS = {"type": "array", "items": {"type": "string"}}
_MATRIX = {"type": "array", "items": {"type": "array", "items": _INT}}
_VECTOR = {"type": "array", "items": _INT}


def _obj(kind: str, props: dict, optional: Sequence[str] = ()) -> dict:
    props = {"kind": {"const": kind}, **props}
    return {
        "type": "object",
        "properties": props,
        "required": [k for k in props if k not in optional],
        "additionalProperties": False,
    }


SCHEMAS = {
    "bool": _obj("bool", {"atoms": _LABELS}),
    "lm": _obj(
        "lm",
        {
            "signature": {"enum": ["phi", "j"]},
            "n": {"type": "integer", "minimum": 1},
            "size": {"type": "integer", "minimum": 1},
            "zero": _INT,
            "one": _INT,
            "join": _MATRIX,
            "meet": _MATRIX,
            "star": _VECTOR,
            "unary": _MATRIX,
            "names": _LABELS,
        },
        optional=("names",),
    ),
    "boolideals": _obj(
        "boolideals",
        {"n": {"type": "integer", "minimum": 1}, "atoms": _LABELS, "generators": _VECTOR},
    ),
    "space": _obj(
        "space",
        {"n": {"type": "integer", "minimum": 1}, "points": _LABELS, "opens": _MATRIX},
    ),
    "mv": _obj(
        "mv",
        {
            "size": {"type": "integer", "minimum": 1},
            "zero": _INT,
            "oplus": _MATRIX,
            "star": _VECTOR,
            "names": _LABELS,
        },
        optional=("names",),
    ),
}
KINDS = tuple(SCHEMAS)


# ---------------------------------------------------------------------------
# documents


@dataclass(frozen=True)
class Document:
    kind: str
    value: Any


def _lm_payload(L: LMAlgebra) -> dict:
    d = {
        "kind": "lm",
        "signature": L.signature,
        "n": L.n,
        "size": L.size,
        "zero": L.zero,
        "one": L.one,
        "join": L.join.tolist(),
        "meet": L.meet.tolist(),
        "star": L.star.tolist(),
        "unary": L.unary.tolist(),
    }
    if L.names is not None:
        d["names"] = list(L.names)
    return d


def to_payload(value: Any) -> dict:
    if isinstance(value, FiniteBooleanAlgebra):
        return {"kind": "bool", "atoms": list(value.atom_names)}
    if isinstance(value, LMAlgebra):
        return _lm_payload(value)
    if isinstance(value, IdealSequenceObject):
        return {
            "kind": "boolideals",
            "n": value.n,
            "atoms": list(value.base.atom_names),
            "generators": list(value.generators),
        }
    if isinstance(value, FiniteSpaceWithOpens):
        return {
            "kind": "space",
            "n": value.n,
            "points": list(value.point_names),
            "opens": [value.points_of(o) for o in value.opens],
        }
    if isinstance(value, MVAlgebra):
        d = {
            "kind": "mv",
            "size": value.size,
            "zero": value.zero,
            "oplus": value.oplus.tolist(),
            "star": value.star.tolist(),
        }
        if value.names is not None:
            d["names"] = list(value.names)
        return d
    raise TypeError(f"no document kind for {type(value).__name__}")


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def serialize_document(doc: Document | Any) -> str:
    value = doc.value if isinstance(doc, Document) else doc
    return canonical_json(to_payload(value))


def _from_payload(d: dict) -> Any:
    kind = d["kind"]
    if kind == "bool":
        return FiniteBooleanAlgebra(tuple(d["atoms"]))
    if kind == "lm":
        m = d["size"]
        if len(d["star"]) != m:
            raise DocumentInvariantError(f"size is {m} but star has {len(d['star'])} entries")
        return LMAlgebra(
            d["n"], d["signature"], d["join"], d["meet"], d["star"], d["unary"], d["zero"], d["one"],
            tuple(d["names"]) if "names" in d else None,
        )
    if kind == "boolideals":
        return IdealSequenceObject(FiniteBooleanAlgebra(tuple(d["atoms"])), d["n"], tuple(d["generators"]))
    if kind == "space":
        k = len(d["points"])
        opens = []
        for o in d["opens"]:
            if any(p >= k for p in o):
                raise DocumentInvariantError(f"open set {o} names a point outside 0..{k - 1}")
            opens.append(sum(1 << p for p in set(o)))
        return FiniteSpaceWithOpens(tuple(d["points"]), d["n"], tuple(opens))
    if kind == "mv":
        return MVAlgebra(d["size"], d["oplus"], d["star"], d["zero"], tuple(d["names"]) if "names" in d else None)
    raise DocumentSchemaError(f"unknown kind {kind!r}")


def parse_document(text: str) -> Document:
    """Parse and validate one document; raises a :class:`DocumentError` subclass."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(e.msg, e.lineno, e.colno) from None
    if not isinstance(data, dict):
        raise DocumentSchemaError("a document must be a JSON object")
    kind = data.get("kind")
    if kind not in SCHEMAS:
        raise DocumentSchemaError(f"kind must be one of {list(KINDS)}, got {kind!r}", ["kind"])
    try:
        jsonschema.validate(data, SCHEMAS[kind])
    except jsonschema.ValidationError as e:
        raise DocumentSchemaError(e.message, list(e.absolute_path)) from None
    try:
        value = _from_payload(data)
    except DocumentError:
        raise
    except (LMAlgError, ValueError) as e:
        raise DocumentInvariantError(str(e)) from None
    return Document(kind, value)


def random_document(rng) -> Any:
    """A seeded small instance of a random document kind (for round-trip tests)."""
    from .construct import symmetric_sequences
    from .lm import phi_to_j
    from .stone import spaces

    kind = rng.choice(KINDS)
    k = rng.randint(1, 3)
    B = FiniteBooleanAlgebra(default_atoms(k))
    n = rng.randint(1, 4)
    if kind == "bool":
        return B
    if kind == "lm":
        maker = rng.choice(("canonical", "t", "j", "sigma", "convert"))
        if maker == "canonical":
            return canonical(rng.randint(1, 6))
        if maker == "t":
            return build_T(B, n).algebra
        if maker == "j":
            return build_J(B, n).algebra
        if maker == "sigma":
            return sigma_functor(rng.choice(symmetric_sequences(B, n))).algebra
        return phi_to_j(canonical(rng.randint(1, 6)))
    if kind == "boolideals":
        return rng.choice(symmetric_sequences(B, n))
    if kind == "space":
        return rng.choice([X for X in spaces(k, n) if X.point_count == k])
    return mv_chain(rng.randint(1, 6))


# ---------------------------------------------------------------------------
# reports

_INDEX_VARS = {"i", "j", "k", "l", "caught", "size"}


@dataclass
class Report:
    command: list[str]
    verdict: str = "pass"
    violations: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    document: dict | None = None
    info: dict = field(default_factory=dict)
    error: dict | None = None
    format: str = "json"

    @property
    def exit_code(self) -> int:
        return {"pass": EXIT_PASS, "fail": EXIT_FAIL}.get(self.verdict, EXIT_ERROR)

    def absorb(self, rep: AxiomReport, render: Callable[[int], str] | None = None, prefix: str = "") -> None:
        """Copy failures of ``rep`` into violations and add its counters to the stats."""
        for f in rep.failures:
            witness = dict(zip(f.variables, f.witness)) if f.variables else list(f.witness or ())
            parts = []
            for var, val in zip(f.variables, f.witness or ()):
                shown = render(val) if render and var not in _INDEX_VARS else str(val)
                parts.append(f"{var}={shown}")
            v = {"law": prefix + f.law, "witness": witness, "rendering": ", ".join(parts)}
            if f.note:
                v["note"] = f.note
            self.violations.append(v)
        self.stats["laws_checked"] = self.stats.get("laws_checked", 0) + rep.laws_checked
        self.stats["laws"] = self.stats.get("laws", 0) + len(rep.results)
        info = [r for r in rep.results if r.informational]
        if info:
            self.info.setdefault("informational", []).extend(
                {"law": prefix + r.law, "passed": r.passed} for r in info
            )
        if self.violations and self.verdict == "pass":
            self.verdict = "fail"

    def to_dict(self) -> dict:
        d = {
            "command": self.command,
            "verdict": self.verdict,
            "violations": self.violations,
            "stats": self.stats,
        }
        if self.document is not None:
            d["document"] = self.document
        if self.info:
            d["info"] = self.info
        if self.error is not None:
            d["error"] = self.error
        return d


def emit_report(r: Report, format: str = "json") -> str:
    if format == "document" and r.document is not None and r.verdict == "pass":
        return canonical_json(r.document)
    if format in ("json", "document"):
        return canonical_json(r.to_dict())
    lines = [f"command: {' '.join(r.command)}", f"verdict: {r.verdict}"]
    if r.error:
        lines.append(f"error: {r.error['class']}: {r.error['message']}")
    for v in r.violations:
        line = f"  violation {v['law']}"
        if v["rendering"]:
            line += f": {v['rendering']}"
        if v.get("note"):
            line += f"  [{v['note']}]"
        lines.append(line)
    for k in sorted(r.stats):
        lines.append(f"  {k}: {r.stats[k]}")
    for item in r.info.get("informational", []):
        lines.append(f"  info {item['law']}: {'holds' if item['passed'] else 'fails'}")
    if r.document is not None:
        lines.append("document: " + canonical_json(r.document).rstrip())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _atoms(args) -> FiniteBooleanAlgebra:
    if args.atom_names:
        return FiniteBooleanAlgebra(tuple(a for a in args.atom_names.split(",") if a))
    return FiniteBooleanAlgebra(default_atoms(args.atoms))


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "document"), default="json")
    doc = argparse.ArgumentParser(add_help=False)
    doc.add_argument("file", nargs="?", default="-", help="input document (default: standard input)")

    p = _Parser(prog="lmalg", description="Finite LM algebras, Boolean ideal sequences and their duals.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    g = sub.add_parser("gen", parents=[common], help="generate a document")
    g.add_argument("what", choices=("canonical", "t", "j", "sigma", "mvchain"))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--atoms", type=int, default=1)
    g.add_argument("--atom-names", default="")
    g.add_argument("--generators", type=_int_list, default=None, help="I_1..I_{n-1} generators for sigma")

    c = sub.add_parser("check", parents=[common, doc], help="check an axiom system")
    c.add_argument("--system", required=True,
                   choices=("L", "Lalt", "J", "derived", "mv", "mvn", "proper", "somv"))
    c.add_argument("--n", type=int, default=None, help="index for --system mvn (default: size - 1)")

    v = sub.add_parser("convert", parents=[common, doc], help="switch between phi and J signatures")
    v.add_argument("--to", required=True, choices=("phi", "j"))

    sub.add_parser("center", parents=[common, doc], help="Boolean center of an LM algebra")
    sub.add_parser("lambda", parents=[common, doc], help="LM algebra to Boolean ideal sequence")
    sub.add_parser("sigma", parents=[common, doc], help="Boolean ideal sequence to LM algebra")
    d = sub.add_parser("dualize", parents=[common, doc], help="ideal sequence <-> space with opens")
    d.add_argument("--roundtrip", action="store_true")
    sub.add_parser("represent", parents=[common, doc], help="embed into a power of the canonical chain")

    w = sub.add_parser("verify", parents=[common], help="run bounded verification suites")
    w.add_argument("--suite", choices=tuple(GROUPS), default="all")
    w.add_argument("--max-atoms", type=int, default=2)
    w.add_argument("--max-n", type=int, default=4)
    w.add_argument("--seed", type=int, default=0)
    w.add_argument("--mutants", type=int, default=100)
    return p


def _read(path: str, stdin) -> Document:
    if path == "-":
        text = stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return parse_document(text)


def _expect(doc: Document, *kinds: str) -> Any:
    if doc.kind not in kinds:
        raise UsageError(f"this command needs a {' or '.join(kinds)} document, got {doc.kind}")
    return doc.value


def _require_native(r: Report, L: LMAlgebra) -> bool:
    rep = check_axioms(L, native_system(L))
    r.absorb(rep, L.render, f"{rep.system}.")
    return rep.passed


# ---------------------------------------------------------------------------
# commands


def _cmd_gen(args, r: Report, stdin) -> None:
    n = args.n
    if args.what == "canonical":
        value = canonical(n)
    elif args.what == "t":
        value = build_T(_atoms(args), n).algebra
    elif args.what == "j":
        value = build_J(_atoms(args), n).algebra
    elif args.what == "sigma":
        B = _atoms(args)
        gens = args.generators if args.generators is not None else [0] * (n - 1)
        value = sigma_functor(IdealSequenceObject(B, n, tuple(gens))).algebra
    else:
        value = mv_chain(n)
    r.document = to_payload(value)
    r.stats["size"] = value.size


def _cmd_check(args, r: Report, stdin) -> None:
    doc = _read(args.file, stdin)
    system = args.system
    if system in ("L", "Lalt", "J"):
        L = _expect(doc, "lm")
        full = SYSTEM_ALIASES[system]
        if L.signature != SYSTEM_SIGNATURE[full]:
            raise UsageError(f"system {system} needs signature {SYSTEM_SIGNATURE[full]}, document has {L.signature}")
        r.absorb(check_axioms(L, full), L.render)
        r.stats["size"] = L.size
    elif system == "derived":
        L = _expect(doc, "lm")
        r.absorb(check_derived_props(L), L.render)
        r.stats["size"] = L.size
    elif system in ("mv", "mvn"):
        A = _expect(doc, "mv")
        rep = check_mv_axioms(A) if system == "mv" else check_mvn_axioms(A, args.n or A.size - 1)
        r.absorb(rep, A.render)
        r.stats["size"] = A.size
    elif system == "proper":
        x = _expect(doc, "boolideals", "lm")
        if isinstance(x, LMAlgebra) and not _require_native(r, x):
            return
        rep = check_l_proper(x)
        r.absorb(rep)
        r.info["status"] = rep.info["status"]
    else:
        x = _expect(doc, "boolideals", "space")
        rep = check_somv_condition(x)
        r.absorb(rep)
        r.info["status"] = rep.info["status"]


def _cmd_convert(args, r: Report, stdin) -> None:
    L = _expect(_read(args.file, stdin), "lm")
    if not _require_native(r, L):
        return
    out = as_j(L) if args.to == "j" else as_phi(L)
    r.document = to_payload(out)
    r.stats["size"] = L.size


def _cmd_center(args, r: Report, stdin) -> None:
    L = _expect(_read(args.file, stdin), "lm")
    if not _require_native(r, L):
        return
    C = boolean_center(L)
    r.document = to_payload(C.algebra)
    r.info["elements"] = [int(e) for e in C.from_code]
    r.stats["size"] = L.size


def _cmd_lambda(args, r: Report, stdin) -> None:
    L = _expect(_read(args.file, stdin), "lm")
    if not _require_native(r, L):
        return
    r.document = to_payload(lambda_functor(as_j(L)))
    r.stats["size"] = L.size


def _cmd_sigma(args, r: Report, stdin) -> None:
    obj = _expect(_read(args.file, stdin), "boolideals")
    S = sigma_functor(obj)
    r.document = to_payload(S.algebra)
    r.stats["size"] = S.size


def _cmd_dualize(args, r: Report, stdin) -> None:
    x = _expect(_read(args.file, stdin), "boolideals", "space")
    y = theta_a(x) if isinstance(x, IdealSequenceObject) else theta_t(x)
    r.document = to_payload(y)
    if args.roundtrip:
        back = theta_t(y) if isinstance(y, FiniteSpaceWithOpens) else theta_a(y)
        rep = check_stone_roundtrip(x)
        rep.check("roundtrip_document", serialize_document(back) == serialize_document(x))
        r.absorb(rep)
        r.stats["points"] = x.base.atom_count if isinstance(x, IdealSequenceObject) else x.point_count


def _cmd_represent(args, r: Report, stdin) -> None:
    L = _expect(_read(args.file, stdin), "lm")
    if not _require_native(r, L):
        return
    rep_ = moisil_represent(as_phi(L))
    r.absorb(rep_.report, L.render)
    r.info["components"] = len(rep_.components)
    r.info["isomorphism"] = rep_.is_isomorphism
    r.info["vectors"] = rep_.vectors.tolist()
    r.stats["size"] = L.size


def _cmd_verify(args, r: Report, stdin) -> None:
    if args.max_atoms < 1 or args.max_n < 1:
        raise UsageError("--max-atoms and --max-n must be at least 1")
    cfg = SuiteConfig.bounded(args.max_atoms, args.max_n, args.seed, args.mutants)
    rep, timings = run_suites(GROUPS[args.suite], cfg)
    r.absorb(rep)
    r.stats["instances"] = len(rep.results)
    r.stats["suite_seconds"] = {k: round(v, 3) for k, v in timings.items()}


COMMANDS = {
    "gen": _cmd_gen,
    "check": _cmd_check,
    "convert": _cmd_convert,
    "center": _cmd_center,
    "lambda": _cmd_lambda,
    "sigma": _cmd_sigma,
    "dualize": _cmd_dualize,
    "represent": _cmd_represent,
    "verify": _cmd_verify,
}


def run_command(argv: Sequence[str], stdin=None) -> tuple[Report, int]:
    """Dispatch one command line; never raises for bad input."""
    argv = list(argv)
    stdin = sys.stdin if stdin is None else stdin
    r = Report(command=argv)
    if "--format" in argv:
        i = argv.index("--format")
        if i + 1 < len(argv) and argv[i + 1] in ("json", "text", "document"):
            r.format = argv[i + 1]
    t0 = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        r.format = args.format
        COMMANDS[args.command](args, r, stdin)
    except LMAlgError as e:
        r.verdict = "error"
        r.error = {"class": type(e).__name__, "message": str(e)}
        if isinstance(e, DocumentSyntaxError):
            r.error.update(line=e.line, column=e.column)
    except SystemExit as e:
        # --help exits through argparse
        r.verdict = "pass" if e.code in (0, None) else "error"
        if r.verdict == "error":
            r.error = {"class": "UsageError", "message": str(e)}
    r.stats["wall_time_s"] = round(time.perf_counter() - t0, 4)
    return r, r.exit_code


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv):
        try:
            build_parser().parse_args(argv)
        except (SystemExit, UsageError):
            pass
        return EXIT_PASS
    r, code = run_command(argv)
    sys.stdout.write(emit_report(r, r.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
