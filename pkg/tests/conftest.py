import pytest

from siglogic import EquivStore, FactStore, ingest_signature, parse_signature
from siglogic.model import FunctionKey

# The max function as documented in three language ecosystems,
# raw and normalized.
JAVA_MAX_RAW = "lang Math long max(long a,long b)"
PY_MAX_RAW = "decimal Context max(a b)"
PHP_MAX_RAW = "mixed max(mixed $value1, mixed $value2, ..)"

JAVA_MAX = "java lang Math::max(long:a,long:b) -> long"
PY_MAX = "python decimal Context::max(UNK:a,UNK:b) -> UNK"
PHP_MAX = "php core builtin::max(mixed:value1,mixed:value2,...) -> mixed"

# "Find some java function taking two longs, the first named a" as a
# wildcard query.
WILDCARD_QUERY = "java N? C?::f?(long:a,long:p?) -> long"

# Bit-shift-left across three standard libraries; used for the
# cross-language equivalence tests.
SHIFT_HASKELL = "haskell Data.Bits builtin::shiftL(UNK:a,Int:UNK) -> UNK"
SHIFT_JAVA = "java java.math BigInteger::shiftLeft(int:n) -> BigInteger"
SHIFT_CLOJURE = "clojure clojure.core builtin::bit-shift-left(UNK:x,UNK:n) -> UNK"

KEY_SHIFT_HASKELL = FunctionKey("haskell", "Data.Bits", "builtin", "shiftL", 2)
KEY_SHIFT_JAVA = FunctionKey("java", "java.math", "BigInteger", "shiftLeft", 1)
KEY_SHIFT_CLOJURE = FunctionKey(
    "clojure", "clojure.core", "builtin", "bit-shift-left", 2
)

ALL_FIXTURE_SIGS = [
    JAVA_MAX, PY_MAX, PHP_MAX, SHIFT_HASKELL, SHIFT_JAVA, SHIFT_CLOJURE,
]


@pytest.fixture
def max_store():
    store = FactStore()
    for text in (JAVA_MAX, PY_MAX, PHP_MAX):
        ingest_signature(store, parse_signature(text))
    return store


@pytest.fixture
def full_store():
    store = FactStore()
    for text in ALL_FIXTURE_SIGS:
        ingest_signature(store, parse_signature(text))
    return store


@pytest.fixture
def shift_eqs():
    eqs = EquivStore()
    eqs.add_eq(KEY_SHIFT_JAVA, KEY_SHIFT_HASKELL)
    eqs.add_eq(KEY_SHIFT_HASKELL, KEY_SHIFT_CLOJURE)
    return eqs
