import pytest
from hypothesis import given, settings

from siglogic.dsl import (
    MixedWildcardParams,
    ParseError,
    parse_signature,
    print_signature,
)
from siglogic.model import (
    UNK,
    Const,
    EquivIn,
    Param,
    Plain,
    Signature,
    Wildcard,
)

from strategies import signatures


def test_parse_concrete_signature():
    sig = parse_signature("java lang Math::max(long:a,long:b) -> long")
    assert sig == Signature(
        lang=Const("java"),
        namespace=Const("lang"),
        class_name=Const("Math"),
        head=Plain(Const("max")),
        params=(
            Param(Const("long"), Const("a"), 1),
            Param(Const("long"), Const("b"), 2),
        ),
        ret=Const("long"),
    )


def test_parse_wildcard_query():
    sig = parse_signature("java N? C?::f?(long:a,long:p?) -> long")
    assert sig.namespace == Wildcard("N")
    assert sig.class_name == Wildcard("C")
    assert sig.head == Plain(Wildcard("f"))
    assert sig.params == (
        Param(Const("long"), Const("a"), 1),
        Param(Const("long"), Wildcard("p"), 2),
    )
    assert sig.ret == Const("long")


def test_parse_equiv_head_with_list_wildcard():
    sig = parse_signature(
        "java java.math BigInteger::EquivIn(shiftLeft,haskell)(?) -> r?"
    )
    assert sig.head == EquivIn("shiftLeft", "haskell")
    assert sig.params_wildcard
    assert sig.params == ()
    assert sig.ret == Wildcard("r")


def test_parse_unk_slots():
    sig = parse_signature("python decimal Context::max(UNK:a,UNK:b) -> UNK")
    assert sig.params[0].type_slot == UNK
    assert sig.ret == UNK


def test_parse_vararg():
    sig = parse_signature(
        "php core builtin::max(mixed:value1,mixed:value2,...) -> mixed"
    )
    assert sig.vararg
    assert len(sig.params) == 2


def test_parse_zero_params():
    sig = parse_signature("java lang Math::now() -> long")
    assert sig.params == ()
    assert not sig.params_wildcard


def test_whitespace_between_tokens_is_insignificant():
    loose = "java  lang   Math :: max ( long : a , long : b )  ->  long"
    tight = "java lang Math::max(long:a,long:b) -> long"
    assert parse_signature(loose) == parse_signature(tight)


def test_print_canonical_form():
    text = "java lang Math::max(long:a,long:b) -> long"
    assert print_signature(parse_signature(text)) == text


def test_print_zero_params():
    text = "java lang Math::now() -> long"
    assert print_signature(parse_signature(text)) == text


def test_print_equiv_and_list_wildcard():
    text = "java java.math BigInteger::EquivIn(shiftLeft,haskell)(?) -> r?"
    assert print_signature(parse_signature(text)) == text


def test_mixed_wildcard_params_rejected():
    with pytest.raises(MixedWildcardParams):
        parse_signature("java lang Math::max(?,long:b) -> long")
    with pytest.raises(MixedWildcardParams):
        parse_signature("java lang Math::max(long:a,?) -> long")


def test_parse_error_reports_offset():
    with pytest.raises(ParseError) as e:
        parse_signature("java lang")
    assert e.value.byte_offset == len("java lang")
    assert "end of input" in e.value.found

    with pytest.raises(ParseError) as e:
        parse_signature("java lang Math::max(long:a,long:b) => long")
    assert e.value.byte_offset == len("java lang Math::max(long:a,long:b) ")


def test_parse_error_on_trailing_garbage():
    with pytest.raises(ParseError):
        parse_signature("java lang Math::max() -> long extra")


def test_function_named_equivin_wildcard_is_plain():
    sig = parse_signature("java lang Math::EquivIn?(?) -> r?")
    assert sig.head == Plain(Wildcard("EquivIn"))


@settings(max_examples=300, deadline=None)
@given(signatures())
def test_parse_print_round_trip(sig):
    assert parse_signature(print_signature(sig)) == sig


@settings(max_examples=300, deadline=None)
@given(signatures())
def test_print_parse_is_identity_on_canonical_text(sig):
    text = print_signature(sig)
    assert print_signature(parse_signature(text)) == text
