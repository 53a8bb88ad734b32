"""Ground-fact knowledge base and conjunctive query answering.

Ingesting a ground signature skolemizes its compiled formula: each bound
variable is replaced by a deterministic witness constant derived from the
function's identity.  Namespace witnesses are shared across functions of
the same (lang, namespace); class witnesses across (lang, namespace,
class).  Queries are signatures with wildcards; answering is backtracking
unification of the query's compiled atoms against the stored facts.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field, replace

from .logic import (
    App,
    Atom,
    ConstTok,
    Formula,
    LogicError,
    NotEquivHead,
    Term,
    UnsupportedHead,
    Var,
    binder_names,
    compile_signature,
    expand_equiv,
    print_atom,
)
from .model import (
    UNK,
    Const,
    EquivIn,
    FunctionKey,
    NotGround,
    Param,
    Plain,
    Signature,
    Unk,
    Wildcard,
    function_key,
    is_ground,
    slot_token,
    wildcard_labels,
)


class SourceNotFound(LookupError):
    """An EquivIn query's base pattern matched no ingested function."""


class KeyConflict(ValueError):
    """A differing signature is already stored under the same FunctionKey.

    Keys are the store's identity: witnesses are derived from them, so two
    bodies under one key would merge their facts and make answers depend
    on which body is asked about.
    """


@dataclass(frozen=True)
class SkolemConst:
    kind: str  # function | return | param | namespace | class
    id: str

    def __str__(self):
        return self.id


def _key_id(key: FunctionKey) -> str:
    return "%s.%s.%s.%s.%d" % (
        key.lang, key.namespace, key.class_name, key.name, key.arity,
    )


def fn_skolem(key: FunctionKey) -> SkolemConst:
    return SkolemConst("function", "fn:" + _key_id(key))


def ret_skolem(key: FunctionKey) -> SkolemConst:
    return SkolemConst("return", "ret:" + _key_id(key))


def param_skolem(key: FunctionKey, position: int) -> SkolemConst:
    return SkolemConst("param", "par:%s.%d" % (_key_id(key), position))


def ns_skolem(lang: str, namespace: str) -> SkolemConst:
    return SkolemConst("namespace", "ns:%s.%s" % (lang, namespace))


def cls_skolem(lang: str, namespace: str, class_name: str) -> SkolemConst:
    return SkolemConst("class", "cls:%s.%s.%s" % (lang, namespace, class_name))


@dataclass(frozen=True)
class Binding:
    """One query answer: wildcard assignments plus the matched function."""

    key: FunctionKey
    items: tuple = field(default=())  # sorted (label, token) pairs

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(sorted(self.items)))

    @property
    def mapping(self) -> dict:
        return dict(self.items)

    def __getitem__(self, label: str) -> str:
        return self.mapping[label]


class FactStore:
    """Ground atoms indexed by predicate and by (predicate, first arg)."""

    def __init__(self):
        self._facts = set()
        self._by_pred = defaultdict(set)
        self._by_pred_first = defaultdict(set)
        self._keys = set()
        self._key_by_skolem = {}

    def __len__(self):
        return len(self._facts)

    @property
    def keys(self):
        return frozenset(self._keys)

    def facts(self, pred: str, first: Term = None):
        if first is not None:
            return self._by_pred_first.get((pred, first), frozenset())
        return self._by_pred.get(pred, frozenset())

    def _add(self, atom: Atom) -> bool:
        if atom in self._facts:
            return False
        self._facts.add(atom)
        self._by_pred[atom.pred].add(atom)
        self._by_pred_first[(atom.pred, atom.args[0])].add(atom)
        return True


def ingest_signature(store: FactStore, sig: Signature) -> int:
    """Skolemize compile(sig) into the store; returns newly added facts."""
    if not is_ground(sig):
        raise NotGround("only ground signatures can be ingested")
    key = function_key(sig)
    formula = compile_signature(sig)
    lambdas, ent = binder_names(sig)
    witness = {
        ent["v"]: ret_skolem(key),
        ent["f"]: fn_skolem(key),
        ent["n"]: ns_skolem(key.lang, key.namespace),
        ent["c"]: cls_skolem(key.lang, key.namespace, key.class_name),
    }
    for j, x in enumerate(lambdas, start=1):
        witness[x] = param_skolem(key, j)

    def ground(term):
        if isinstance(term, Var):
            return witness[term.name]
        if isinstance(term, App):
            return App(ground(term.fn), tuple(ground(a) for a in term.args))
        return term

    ground_atoms = [
        Atom(atom.pred, tuple(ground(t) for t in atom.args))
        for atom in formula.atoms
    ]
    if key in store._keys:
        if all(a in store._facts for a in ground_atoms):
            return 0
        raise KeyConflict("differing signature already stored for %s" % (key,))
    added = 0
    for atom in ground_atoms:
        if store._add(atom):
            added += 1
    store._keys.add(key)
    store._key_by_skolem[fn_skolem(key)] = key
    return added


def reconstruct_signature(store: FactStore, key: FunctionKey) -> Signature:
    """Rebuild the ingested signature of `key` from its facts.

    Vararg-ness is not recorded in the fact schema, so the rebuilt
    signature never carries the vararg flag; matching never consults it
    on the stored side.
    """
    if key not in store._keys:
        raise KeyError(key)

    def tok_slot(token: str):
        return UNK if token == "UNK" else Const(token)

    ret_tok = _second_token(store, "type", ret_skolem(key))
    params = []
    for j in range(1, key.arity + 1):
        sk = param_skolem(key, j)
        params.append(
            Param(
                tok_slot(_second_token(store, "type", sk)),
                tok_slot(_second_token(store, "var", sk)),
                j,
            )
        )
    return Signature(
        lang=tok_slot(key.lang),
        namespace=tok_slot(key.namespace),
        class_name=tok_slot(key.class_name),
        head=Plain(Const(key.name)),
        params=tuple(params),
        ret=tok_slot(ret_tok),
    )


def _second_token(store: FactStore, pred: str, first: Term) -> str:
    for fact in store.facts(pred, first):
        if isinstance(fact.args[1], ConstTok):
            return fact.args[1].token
    raise KeyError((pred, first))


class EquivStore:
    """Union-find over FunctionKeys; holds cross-language `eq` knowledge."""

    def __init__(self):
        self._parent = {}

    def _find(self, key: FunctionKey) -> FunctionKey:
        self._parent.setdefault(key, key)
        root = key
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[key] != root:  # path compression
            self._parent[key], key = root, self._parent[key]
        return root

    def add_eq(self, a: FunctionKey, b: FunctionKey):
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            self._parent[rb] = ra

    def equivalent(self, a: FunctionKey, b: FunctionKey) -> bool:
        return a == b or self._find(a) == self._find(b)

    def class_of(self, key: FunctionKey) -> frozenset:
        root = self._find(key)
        return frozenset(
            k for k in self._parent if self._find(k) == root
        ) | {key}


def add_eq(store: EquivStore, a: FunctionKey, b: FunctionKey):
    store.add_eq(a, b)


def _unify(query: Term, fact: Term, binds: dict, formula: Formula):
    """Extend binds so query matches fact, or return None.

    App-vs-App respects the query's arity mode: exact by default, prefix
    for vararg queries, name-only when the parameter list is the `?`
    wildcard.
    """
    if isinstance(query, Var):
        bound = binds.get(query.name)
        if bound is None:
            binds = dict(binds)
            binds[query.name] = fact
            return binds
        return binds if bound == fact else None
    if isinstance(query, App):
        if not isinstance(fact, App):
            return None
        binds = _unify(query.fn, fact.fn, binds, formula)
        if binds is None:
            return None
        if formula.arity_unconstrained:
            return binds
        if formula.min_arity:
            if len(fact.args) < len(query.args):
                return None
        elif len(fact.args) != len(query.args):
            return None
        for q, f in zip(query.args, fact.args):
            binds = _unify(q, f, binds, formula)
            if binds is None:
                return None
        return binds
    return binds if query == fact else None


def answer(store: FactStore, query: Signature) -> set:
    """All bindings of the query's wildcards against the stored facts."""
    if isinstance(query.head, EquivIn):
        raise UnsupportedHead("EquivIn queries go through answer_equiv")
    formula = compile_signature(query)
    _, ent = binder_names(query)
    labels = wildcard_labels(query)
    atoms = formula.atoms
    results = set()

    def solve(i, binds):
        if i == len(atoms):
            fn = binds.get(ent["f"])
            key = store._key_by_skolem.get(fn)
            if key is None:
                return
            results.add(
                Binding(
                    key,
                    tuple(
                        (lbl, _ground_token(binds[lbl])) for lbl in labels
                    ),
                )
            )
            return
        atom = atoms[i]
        if atom.pred == "eq":
            # the value entity is the matched function's own return witness;
            # without this the join is loose for zero-arity functions
            fn = binds.get(ent["f"])
            key = store._key_by_skolem.get(fn)
            if key is None:
                return
            candidates = store.facts("eq", ret_skolem(key))
        else:
            first = atom.args[0]
            if isinstance(first, Var):
                first = binds.get(first.name)
            candidates = (
                store.facts(atom.pred, first)
                if first is not None and not isinstance(first, App)
                else store.facts(atom.pred)
            )
        for fact in candidates:
            nb = binds
            for q, f in zip(atom.args, fact.args):
                nb = _unify(q, f, nb, formula)
                if nb is None:
                    break
            if nb is not None:
                solve(i + 1, nb)

    solve(0, {})
    return results


def _ground_token(term: Term) -> str:
    if isinstance(term, ConstTok):
        return term.token
    raise LogicError("wildcard bound to a non-constant term: %r" % (term,))


def brute_force_answer(store: FactStore, query: Signature) -> set:
    """Oracle for answer(): slot-by-slot comparison per stored function."""
    if isinstance(query.head, EquivIn):
        raise UnsupportedHead("EquivIn queries go through answer_equiv")
    results = set()
    for key in store.keys:
        sig = reconstruct_signature(store, key)
        binds = _match_signature(query, sig)
        if binds is not None:
            results.add(Binding(key, tuple(binds.items())))
    return results


def _match_slot(qslot, token: str, binds: dict):
    if isinstance(qslot, Const):
        return binds if qslot.token == token else None
    if isinstance(qslot, Unk):
        return binds if token == "UNK" else None
    bound = binds.get(qslot.label)
    if bound is None:
        binds = dict(binds)
        binds[qslot.label] = token
        return binds
    return binds if bound == token else None


def _match_signature(query: Signature, sig: Signature):
    binds = {}
    pairs = [
        (query.lang, slot_token(sig.lang)),
        (query.namespace, slot_token(sig.namespace)),
        (query.class_name, slot_token(sig.class_name)),
        (query.head.name_slot, slot_token(sig.head.name_slot)),
        (query.ret, slot_token(sig.ret)),
    ]
    if not query.params_wildcard:
        if query.vararg:
            if len(sig.params) < len(query.params):
                return None
        elif len(sig.params) != len(query.params):
            return None
        for qp, sp in zip(query.params, sig.params):
            pairs.append((qp.type_slot, slot_token(sp.type_slot)))
            pairs.append((qp.name_slot, slot_token(sp.name_slot)))
    for qslot, token in pairs:
        binds = _match_slot(qslot, token, binds)
        if binds is None:
            return None
    return binds


def answer_equiv(facts: FactStore, eqs: EquivStore, query: Signature) -> set:
    """Resolve an EquivIn query jointly over facts and the equivalence store."""
    if not isinstance(query.head, EquivIn):
        raise NotEquivHead("answer_equiv requires an EquivIn head")
    _base, target_pattern, _link = expand_equiv(query)
    base_sig = replace(query, head=Plain(Const(query.head.base_name)))
    sources = answer(facts, base_sig)
    if not sources:
        raise SourceNotFound(
            "no ingested function matches %r" % (query.head.base_name,)
        )
    target_lang = query.head.target_lang.lower()
    results = set()
    for source in sources:
        for member in eqs.class_of(source.key):
            if member.lang.lower() != target_lang:
                continue
            if member not in facts.keys:
                continue
            member_sig = reconstruct_signature(facts, member)
            mapping = dict(source.items)
            mapping["f'"] = member.name
            mapping["N"] = member.namespace
            mapping["C"] = member.class_name
            mapping["r"] = _ret_token(member_sig)
            results.add(Binding(member, tuple(mapping.items())))
    return results


def _ret_token(sig: Signature) -> str:
    return slot_token(sig.ret)


def dump_facts(store: FactStore):
    """All facts as canonical text atoms, sorted; deterministic."""
    return sorted(print_atom(a) for a in store._facts)
