"""Command-line interface.

Subcommands:

    normalize   raw signature lines -> normalized DSL lines
    compile     normalized lines -> canonical logic formulas
    ingest      normalize input and extend a KB corpus file
    query       run a wildcard query against a KB
    equiv       run an EquivIn query against a KB plus an equivalence file
    facts       dump the KB's ground facts

A KB is a plain text file of normalized signatures, one per line; it is
re-ingested on every load (skolemization is deterministic).  An
equivalence file holds one link per line: two tab-separated keys, each
`lang|namespace|class|name|arity`.

Exit codes: 0 success, 1 parse/normalize error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import dsl, kb, logic, normalizer
from .model import FunctionKey, ModelError
from .normalizer import Dialect


class _LineError(Exception):
    def __init__(self, path, lineno, message):
        super().__init__("%s:%d: %s" % (path, lineno, message))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siglogic",
        description="Signature DSL, logic compiler, and knowledge-base queries",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument(
            "inputs", nargs="*", metavar="FILE",
            help="input files (default: stdin)",
        )
        p.add_argument(
            "--dialect", choices=[d.value for d in Dialect],
            help="dialect of all input lines; omit for tab-separated "
                 "`dialect<TAB>lang<TAB>raw` corpus lines",
        )
        p.add_argument("--lang", help="language tag (required with --dialect)")

    p = sub.add_parser("normalize", help="normalize raw signatures")
    add_input(p)

    p = sub.add_parser("compile", help="compile normalized signatures to logic")
    p.add_argument("inputs", nargs="*", metavar="FILE")

    p = sub.add_parser("ingest", help="normalize input and extend a KB file")
    add_input(p)
    p.add_argument("--kb", required=True, help="KB corpus file to create/extend")

    p = sub.add_parser("query", help="answer a wildcard query")
    p.add_argument("query", help="query in normalized DSL syntax")
    p.add_argument("--kb", required=True)
    p.add_argument("--porcelain", action="store_true",
                   help="one tab-separated line per result")

    p = sub.add_parser("equiv", help="answer an EquivIn query")
    p.add_argument("query", help="EquivIn query in normalized DSL syntax")
    p.add_argument("--kb", required=True)
    p.add_argument("--eq", required=True, help="equivalence-link file")
    p.add_argument("--porcelain", action="store_true")

    p = sub.add_parser("facts", help="dump a KB's ground facts")
    p.add_argument("--kb", required=True)
    return parser


def _iter_lines(paths, stdin):
    if not paths:
        for i, line in enumerate(stdin, start=1):
            yield "<stdin>", i, line.rstrip("\n")
        return
    for path in paths:
        with open(path, encoding="utf-8") as fh:
            for i, line in enumerate(fh, start=1):
                yield path, i, line.rstrip("\n")


def _normalize_line(path, lineno, line, dialect, lang):
    """One corpus line to a ground Signature (None for blank lines)."""
    if not line.strip():
        return None
    if dialect is not None:
        raw, dia, tag = line, Dialect(dialect), lang
    elif "\t" in line:
        fields = line.split("\t")
        if len(fields) != 3:
            raise _LineError(
                path, lineno, "expected `dialect<TAB>lang<TAB>raw`"
            )
        dia_name, tag, raw = fields
        try:
            dia = Dialect(dia_name)
        except ValueError:
            raise _LineError(path, lineno, "unknown dialect %r" % dia_name)
    else:
        raw, dia, tag = line, Dialect.NORMALIZED, None
    if dia is not Dialect.NORMALIZED and not tag:
        raise _LineError(
            path, lineno, "--lang is required for the %s dialect" % dia.value
        )
    try:
        return normalizer.normalize(raw, dia, tag or "unknown")
    except (normalizer.DialectParseError,
            normalizer.NotGroundAfterNormalize,
            ModelError, ValueError) as e:
        raise _LineError(path, lineno, str(e))


def _load_kb(path) -> kb.FactStore:
    store = kb.FactStore()
    with open(path, encoding="utf-8") as fh:
        for i, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            sig = _normalize_line(path, i, line, Dialect.NORMALIZED.value, None)
            kb.ingest_signature(store, sig)
    return store


def _parse_key(text, path, lineno) -> FunctionKey:
    fields = text.split("|")
    if len(fields) != 5:
        raise _LineError(path, lineno, "expected `lang|ns|class|name|arity`")
    try:
        return FunctionKey(
            fields[0].lower(), fields[1], fields[2], fields[3], int(fields[4])
        )
    except (ModelError, ValueError) as e:
        raise _LineError(path, lineno, str(e))


def _load_eq(path) -> kb.EquivStore:
    eqs = kb.EquivStore()
    with open(path, encoding="utf-8") as fh:
        for i, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            halves = line.split("\t")
            if len(halves) != 2:
                raise _LineError(path, i, "expected two tab-separated keys")
            eqs.add_eq(
                _parse_key(halves[0], path, i), _parse_key(halves[1], path, i)
            )
    return eqs


def _parse_query(text):
    try:
        return dsl.parse_signature(text)
    except dsl.ParseError as e:
        raise _LineError("<query>", 1, str(e))


def _print_results(store, results, porcelain, out):
    ordered = sorted(
        results, key=lambda b: (str(b.key), b.items)
    )
    if not ordered:
        print("0 results", file=out)
        return
    for i, binding in enumerate(ordered):
        sig = kb.reconstruct_signature(store, binding.key)
        line = dsl.print_signature(sig)
        if porcelain:
            fields = [line] + ["%s=%s" % kv for kv in binding.items]
            print("\t".join(fields), file=out)
        else:
            if i:
                print("", file=out)
            print(line, file=out)
            for label, value in binding.items:
                print("%s=%s" % (label, value), file=out)


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0

    try:
        if args.command == "normalize":
            for path, lineno, line in _iter_lines(args.inputs, stdin):
                sig = _normalize_line(path, lineno, line, args.dialect, args.lang)
                if sig is not None:
                    print(dsl.print_signature(sig), file=out)

        elif args.command == "compile":
            for path, lineno, line in _iter_lines(args.inputs, stdin):
                if not line.strip():
                    continue
                try:
                    sig = dsl.parse_signature(line)
                    formula = logic.compile_signature(sig)
                except (dsl.ParseError, logic.LogicError) as e:
                    raise _LineError(path, lineno, str(e))
                print(logic.print_formula(formula), file=out)

        elif args.command == "ingest":
            lines = []
            for path, lineno, line in _iter_lines(args.inputs, stdin):
                sig = _normalize_line(path, lineno, line, args.dialect, args.lang)
                if sig is not None:
                    lines.append(dsl.print_signature(sig))
            try:
                store = _load_kb(args.kb)
            except FileNotFoundError:
                store = kb.FactStore()
            new_facts = 0
            new_sigs = []
            for line in lines:
                sig = dsl.parse_signature(line)
                added = kb.ingest_signature(store, sig)
                if added:
                    new_sigs.append(line)
                new_facts += added
            with open(args.kb, "a", encoding="utf-8") as fh:
                for line in new_sigs:
                    fh.write(line + "\n")
            print(
                "ingested %d signatures, %d new facts" % (len(lines), new_facts),
                file=out,
            )

        elif args.command == "query":
            store = _load_kb(args.kb)
            query = _parse_query(args.query)
            try:
                results = kb.answer(store, query)
            except logic.UnsupportedHead as e:
                raise _LineError("<query>", 1, str(e))
            _print_results(store, results, args.porcelain, out)

        elif args.command == "equiv":
            store = _load_kb(args.kb)
            eqs = _load_eq(args.eq)
            query = _parse_query(args.query)
            try:
                results = kb.answer_equiv(store, eqs, query)
            except kb.SourceNotFound as e:
                raise _LineError("<query>", 1, str(e))
            except logic.NotEquivHead as e:
                raise _LineError("<query>", 1, str(e))
            _print_results(store, results, args.porcelain, out)

        elif args.command == "facts":
            store = _load_kb(args.kb)
            for line in kb.dump_facts(store):
                print(line, file=out)

    except _LineError as e:
        print(str(e), file=err)
        return 1
    except FileNotFoundError as e:
        print(str(e), file=err)
        return 1
    return 0


def main():  # console entry point
    raise SystemExit(run())


if __name__ == "__main__":
    main()
