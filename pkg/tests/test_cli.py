import io

import pytest

from siglogic.cli import run

from conftest import (
    ALL_FIXTURE_SIGS,
    JAVA_MAX,
    JAVA_MAX_RAW,
    PHP_MAX,
    PHP_MAX_RAW,
    WILDCARD_QUERY,
)


def _run(argv, stdin_text=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin_text), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def kb_path(tmp_path):
    path = tmp_path / "kb.txt"
    path.write_text("".join(s + "\n" for s in ALL_FIXTURE_SIGS), encoding="utf-8")
    return str(path)


@pytest.fixture
def eq_path(tmp_path):
    path = tmp_path / "links.txt"
    path.write_text(
        "java|java.math|BigInteger|shiftLeft|1\thaskell|Data.Bits|builtin|shiftL|2\n"
        "haskell|Data.Bits|builtin|shiftL|2\tclojure|clojure.core|builtin|bit-shift-left|2\n",
        encoding="utf-8",
    )
    return str(path)


def test_normalize_with_dialect_flag():
    code, out, err = _run(
        ["normalize", "--dialect", "java", "--lang", "java"],
        JAVA_MAX_RAW + "\n",
    )
    assert code == 0, err
    assert out == JAVA_MAX + "\n"


def test_normalize_php_row():
    code, out, _ = _run(
        ["normalize", "--dialect", "php", "--lang", "php"], PHP_MAX_RAW + "\n"
    )
    assert code == 0
    assert out == PHP_MAX + "\n"


def test_normalize_tab_corpus():
    corpus = (
        "java\tjava\t%s\n" % JAVA_MAX_RAW
        + "php\tphp\t%s\n" % PHP_MAX_RAW
        + JAVA_MAX + "\n"  # already-normalized lines pass through
    )
    code, out, _ = _run(["normalize"], corpus)
    assert code == 0
    assert out.splitlines() == [JAVA_MAX, PHP_MAX, JAVA_MAX]


def test_normalize_error_reports_line_number(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text(JAVA_MAX + "\n" + "not a signature\n", encoding="utf-8")
    code, out, err = _run(["normalize", str(bad)])
    assert code == 1
    assert "%s:2:" % bad in err


def test_compile_command():
    code, out, _ = _run(["compile"], JAVA_MAX + "\n")
    assert code == 0
    assert out.startswith("lam x1 . lam x2 . ex v . ex f . ex n . ex c . fun(f,max)")
    assert out.count("\n") == 1


def test_compile_parse_error_exit_code():
    code, _, err = _run(["compile"], "garbage ::\n")
    assert code == 1
    assert "<stdin>:1:" in err


def test_ingest_creates_and_extends_kb(tmp_path):
    kb_file = tmp_path / "kb.txt"
    code, out, _ = _run(
        ["ingest", "--kb", str(kb_file), "--dialect", "java", "--lang", "java"],
        JAVA_MAX_RAW + "\n",
    )
    assert code == 0
    assert "14 new facts" in out
    assert kb_file.read_text(encoding="utf-8") == JAVA_MAX + "\n"
    # re-ingesting is a no-op
    code, out, _ = _run(
        ["ingest", "--kb", str(kb_file), "--dialect", "java", "--lang", "java"],
        JAVA_MAX_RAW + "\n",
    )
    assert "0 new facts" in out
    assert kb_file.read_text(encoding="utf-8") == JAVA_MAX + "\n"


def test_query_result_block(kb_path):
    code, out, _ = _run(["query", WILDCARD_QUERY, "--kb", kb_path])
    assert code == 0
    assert out == (
        "java lang Math::max(long:a,long:b) -> long\n"
        "C=Math\nN=lang\nf=max\np=b\n"
    )


def test_query_no_results(kb_path):
    code, out, _ = _run(
        ["query", "ruby N? C?::f?(?) -> r?", "--kb", kb_path]
    )
    assert code == 0
    assert out == "0 results\n"


def test_query_porcelain(kb_path):
    code, out, _ = _run(
        ["query", WILDCARD_QUERY, "--kb", kb_path, "--porcelain"]
    )
    assert code == 0
    assert out == (
        "java lang Math::max(long:a,long:b) -> long\tC=Math\tN=lang\tf=max\tp=b\n"
    )


def test_equiv_command(kb_path, eq_path):
    code, out, _ = _run(
        [
            "equiv",
            "java java.math BigInteger::EquivIn(shiftLeft,haskell)(?) -> s?",
            "--kb", kb_path, "--eq", eq_path,
        ]
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "haskell Data.Bits builtin::shiftL(UNK:a,Int:UNK) -> UNK"
    assert "f'=shiftL" in lines
    assert "N=Data.Bits" in lines
    assert "C=builtin" in lines


def test_equiv_source_not_found_is_an_error(kb_path, eq_path):
    code, _, err = _run(
        [
            "equiv",
            "java java.math BigInteger::EquivIn(nothing,haskell)(?) -> s?",
            "--kb", kb_path, "--eq", eq_path,
        ]
    )
    assert code == 1
    assert "nothing" in err


def test_facts_matches_in_memory_dump(kb_path):
    from siglogic import FactStore, dump_facts, ingest_signature, parse_signature

    store = FactStore()
    for text in ALL_FIXTURE_SIGS:
        ingest_signature(store, parse_signature(text))
    code, out, _ = _run(["facts", "--kb", kb_path])
    assert code == 0
    assert out.splitlines() == dump_facts(store)


def test_output_deterministic(kb_path):
    runs = {
        _run(["query", "java N? C?::f?(?) -> r?", "--kb", kb_path])[1]
        for _ in range(3)
    }
    assert len(runs) == 1


def test_usage_error_exit_code():
    code, _, _ = _run(["query"])  # missing args
    assert code == 2


def test_missing_kb_file_is_reported(tmp_path):
    code, _, err = _run(
        ["query", WILDCARD_QUERY, "--kb", str(tmp_path / "nope.txt")]
    )
    assert code == 1
    assert "nope.txt" in err
