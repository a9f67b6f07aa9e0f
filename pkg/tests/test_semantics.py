import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetalogic.formula import Assert, atoms, parse
from zetalogic.semantics import (
    MAX_ATOMS,
    VALUE_ORDER,
    SemanticError,
    TruthValue,
    builtin_logics,
    classify_laws,
    entailment_witness,
    entails,
    evaluate,
    get_logic,
    is_tautology,
    tautology_witness,
    truth_table,
)

from oracles import CLASSICAL, GOLDEN_TABLES
from strategies import formulas

T, X, F = TruthValue.T, TruthValue.X, TruthValue.F
LOGICS = {lg.name: lg for lg in builtin_logics()}
THREE_VALUED = [lg for lg in builtin_logics() if X in lg.values]


def valuations(names, logic):
    vals = [v for v in VALUE_ORDER if v in logic.values]
    for combo in itertools.product(vals, repeat=len(names)):
        yield dict(zip(names, combo))


def names_of(f):
    return [a.name for a in atoms(f)]



# -- builtin systems ---------------------------------------------------------


def test_builtin_names_and_designation():
    assert list(LOGICS) == ["Classical2", "FregeGap", "KleeneK3", "PriestLP", "Lukasiewicz3", "BochvarInternal"]
    assert LOGICS["Classical2"].values == (T, F)
    assert LOGICS["PriestLP"].designated == {T, X}
    for name in ("Classical2", "FregeGap", "KleeneK3", "Lukasiewicz3", "BochvarInternal"):
        assert LOGICS[name].designated == {T}
    assert LOGICS["FregeGap"].gap_semantics
    assert not LOGICS["KleeneK3"].gap_semantics


@pytest.mark.parametrize("logic_name", sorted(GOLDEN_TABLES))
def test_tables_match_transcription(logic_name):
    logic = LOGICS[logic_name]
    for op, golden in GOLDEN_TABLES[logic_name].items():
        table = logic.tables[op]
        if op in ("not", "assert"):
            assert [logic.show(table[v]) for v in VALUE_ORDER] == golden, op
        else:
            got = [[logic.show(table[(a, b)]) for b in VALUE_ORDER] for a in VALUE_ORDER]
            assert got == golden, op


@pytest.mark.parametrize(
    "logic, text, valuation, expected",
    [
        ("k3", "p & q", {"p": "X", "q": "F"}, F),
        ("l3", "p -> q", {"p": "X", "q": "X"}, T),
        ("bochvar", "p | q", {"p": "T", "q": "X"}, X),
        ("frege", "p | q", {"p": "T", "q": "X"}, X),
        ("bochvar", "T:p", {"p": "X"}, F),
        ("k3", "p -> q", {"p": "X", "q": "X"}, X),
        ("k3", "p | q", {"p": "T", "q": "X"}, T),
        ("lp", "p & !p", {"p": "X"}, X),
        ("classical", "p & q", {"p": "T", "q": "F"}, F),
        ("classical", "T:p", {"p": "F"}, F),
        ("bochvar", "T:p | T:q", {"p": "T", "q": "X"}, T),
    ],
)
def test_evaluate_examples(logic, text, valuation, expected):
    assert evaluate(text, valuation, get_logic(logic)) is expected


def test_frege_gap_reads_as_no_value():
    frege = LOGICS["FregeGap"]
    assert frege.show(X) == "X"
    assert frege.describe(X) == "no truth value"
    assert LOGICS["PriestLP"].describe(X) == "both (glut)"
    assert frege.describe(T) == "true"


def test_classical_rejects_third_value():
    with pytest.raises(SemanticError):
        evaluate("p", {"p": "X"}, LOGICS["Classical2"])


def test_missing_atom_and_bad_value():
    with pytest.raises(SemanticError, match="no value"):
        evaluate("p & q", {"p": "T"}, LOGICS["KleeneK3"])
    with pytest.raises(SemanticError, match="unknown truth value"):
        evaluate("p", {"p": "maybe"}, LOGICS["KleeneK3"])


def test_unknown_logic_lists_builtins():
    with pytest.raises(SemanticError) as info:
        get_logic("dialetheic")
    for name in LOGICS:
        assert name in str(info.value)


def test_aliases():
    assert get_logic("K3") is not None and get_logic("K3").name == "KleeneK3"
    assert get_logic("Priest").name == "PriestLP"
    assert get_logic("lukasiewicz").name == "Lukasiewicz3"


def test_atom_cap():
    f = " & ".join(f"a{i}" for i in range(MAX_ATOMS + 1))
    with pytest.raises(SemanticError, match="exceeds"):
        truth_table(f, LOGICS["Classical2"])
    with pytest.raises(SemanticError):
        is_tautology(f, LOGICS["KleeneK3"])


def test_invalid_logic_system_rejected():
    base = LOGICS["KleeneK3"]
    from zetalogic.semantics import LogicSystem

    with pytest.raises(ValueError):
        LogicSystem("bad", base.values, frozenset({X}), base.tables)
    partial = dict(base.tables)
    partial["and"] = {k: v for k, v in base.tables["and"].items() if k != (X, X)}
    with pytest.raises(ValueError, match="not total"):
        LogicSystem("bad", base.values, frozenset({T}), partial)


# -- truth tables and reports -------------------------------------------------


def test_truth_table_order_and_schema():
    table = truth_table("p -> q", LOGICS["KleeneK3"])
    d = table.to_dict()
    assert d["formula"] == "p -> q" and d["logic"] == "KleeneK3"
    assert [(r["assignment"]["p"], r["assignment"]["q"]) for r in d["rows"]] == [
        (a, b) for a in "TXF" for b in "TXF"
    ]
    assert [r["value"] for r in d["rows"]] == list("TXFTXXTTT")
    assert d["designated_ok"] is False
    assert json.loads(table.to_json()) == d
    text = table.to_text().splitlines()
    assert text[0].startswith("# KleeneK3")
    assert text[1].split() == ["p", "q", "p", "->", "q"]
    assert len(text) == 3 + 9


def test_truth_table_classical_is_two_valued():
    rows = truth_table("p | q", LOGICS["Classical2"]).rows
    assert len(rows) == 4
    assert all(X not in vals for vals, _ in rows)


def test_tautology_witness_examples():
    assert tautology_witness("p | !p", LOGICS["KleeneK3"]) == {"p": X}
    assert tautology_witness("p | !p", LOGICS["PriestLP"]) is None
    assert is_tautology("p -> p", LOGICS["Lukasiewicz3"])
    assert not is_tautology("p -> p", LOGICS["KleeneK3"])


def test_entailment_examples():
    lp, k3 = LOGICS["PriestLP"], LOGICS["KleeneK3"]
    assert entailment_witness(["p", "!p"], "q", lp) == {"p": X, "q": F}
    assert entails(["p", "!p"], "q", k3)
    assert entails(["p", "p -> q"], "q", k3)
    assert not entails(["p", "p -> q"], "q", lp)  # modus ponens fails in LP
    assert entails([], "p | !p", lp)


# -- laws ---------------------------------------------------------------------


def test_law_matrix():
    c = classify_laws(LOGICS["Classical2"])
    assert all(r.holds for r in c.results)
    k3 = classify_laws(LOGICS["KleeneK3"])
    assert not k3["LEM"].holds and k3["LEM"].witness == {"p": X}
    assert not k3["LNC"].holds and k3["LNC"].witness == {"p": X}
    assert k3["ECQ"].holds
    lp = classify_laws(LOGICS["PriestLP"])
    assert lp["LNC"].holds and lp["LEM"].holds
    assert not lp["ECQ"].holds and lp["ECQ"].witness == {"p": X, "q": F}
    l3 = classify_laws(LOGICS["Lukasiewicz3"])
    assert evaluate("p -> p", {"p": X}, LOGICS["Lukasiewicz3"]) is T
    assert l3["ECQ"].holds


def test_law_report_serialization():
    report = classify_laws(LOGICS["PriestLP"])
    d = report.to_dict()
    assert d["designated"] == ["T", "X"]
    ecq = next(item for item in d["laws"] if item["law"] == "ECQ")
    assert ecq == {"law": "ECQ", "statement": "p, !p |= q", "status": "fails", "witness": {"p": "X", "q": "F"}}
    assert "ECQ: fails (witness p=X, q=F)" in report.to_text()
    with pytest.raises(KeyError):
        report["Nope"]


def test_laws_against_direct_table_lookup():
    """Recompute each logic's law statuses straight from the transcribed tables."""
    order = ["T", "X", "F"]
    for name in ("KleeneK3", "PriestLP", "FregeGap", "Lukasiewicz3"):
        g = GOLDEN_TABLES[name]
        neg = dict(zip(order, g["not"]))

        def bin_(op, a, b):
            return g[op][order.index(a)][order.index(b)]

        designated = {"T", "X"} if name == "PriestLP" else {"T"}
        lem = all(bin_("or", a, neg[a]) in designated for a in order)
        lnc = all(neg[bin_("and", a, neg[a])] in designated for a in order)
        ecq = all(
            b in designated for a in order for b in order if a in designated and neg[a] in designated
        )
        report = classify_laws(LOGICS[name])
        assert (report["LEM"].holds, report["LNC"].holds, report["ECQ"].holds) == (lem, lnc, ecq), name


# -- invariants ---------------------------------------------------------------


@given(formulas(names=("p", "q", "r")))
def test_three_valued_logics_restrict_to_classical(f):
    classical = LOGICS["Classical2"]
    for v in valuations(names_of(f), classical):
        expected = evaluate(f, v, classical)
        for logic in THREE_VALUED:
            assert evaluate(f, v, logic) is expected, logic.name


def _classical_eval(f, v):
    from zetalogic.formula import And, Atom, Iff, Implies, Not, Or

    if isinstance(f, Atom):
        return v[f.name]
    if isinstance(f, Not):
        return CLASSICAL["not"][_classical_eval(f.arg, v)]
    if isinstance(f, Assert):
        return _classical_eval(f.arg, v)
    op = {And: "and", Or: "or", Implies: "implies", Iff: "iff"}[type(f)]
    return CLASSICAL[op](_classical_eval(f.left, v), _classical_eval(f.right, v))


@given(formulas(names=("p", "q", "r")))
def test_classical_matches_boolean_semantics(f):
    classical = LOGICS["Classical2"]
    for v in valuations(names_of(f), classical):
        b = {k: val is T for k, val in v.items()}
        assert (evaluate(f, v, classical) is T) == _classical_eval(f, b)


@given(formulas(names=("p", "q", "r"), assert_ok=False))
def test_bochvar_and_frege_infection(f):
    for name in ("BochvarInternal", "FregeGap"):
        logic = LOGICS[name]
        for v in valuations(names_of(f), logic):
            if X in v.values():
                assert evaluate(f, v, logic) is X


@given(formulas(names=("p", "q", "r")))
def test_k3_and_lp_share_values(f):
    k3, lp = LOGICS["KleeneK3"], LOGICS["PriestLP"]
    for v in valuations(names_of(f), k3):
        assert evaluate(f, v, k3) is evaluate(f, v, lp)
    if is_tautology(f, k3):
        assert is_tautology(f, lp)


@given(formulas(names=("p", "q"), max_leaves=6), formulas(names=("p", "q"), max_leaves=6))
def test_de_morgan_duality_in_every_logic(a, b):
    from zetalogic.formula import And, Not, Or

    for logic in builtin_logics():
        for v in valuations(sorted(set(names_of(a)) | set(names_of(b))), logic):
            assert evaluate(Not(And(a, b)), v, logic) is evaluate(Or(Not(a), Not(b)), v, logic)
            assert evaluate(Not(Or(a, b)), v, logic) is evaluate(And(Not(a), Not(b)), v, logic)


def _refinements(v):
    """Valuations replacing any X by T or F."""
    keys = [k for k, val in v.items() if val is X]
    for combo in itertools.product((T, F), repeat=len(keys)):
        w = dict(v)
        w.update(zip(keys, combo))
        yield w


@given(formulas(names=("p", "q", "r"), assert_ok=False, iff_ok=False))
def test_kleene_monotone_in_information(f):
    k3 = LOGICS["KleeneK3"]
    for v in valuations(names_of(f), k3):
        val = evaluate(f, v, k3)
        if val is not X:
            for w in _refinements(v):
                assert evaluate(f, w, k3) is val


@given(formulas(names=("p", "q"), max_leaves=6), formulas(names=("p", "q", "r"), max_leaves=6), st.sampled_from(list(LOGICS)))
def test_entailment_reflexive_and_monotone(a, b, name):
    logic = LOGICS[name]
    assert entails([a], a, logic)
    if entails([a], b, logic):
        assert entails([a, parse("r | q")], b, logic)


def test_printed_kleene_biconditional_is_not_monotone():
    # T <-> X is F, yet refining X to T gives T
    k3 = LOGICS["KleeneK3"]
    assert evaluate("p <-> q", {"p": "T", "q": "X"}, k3) is F
    assert evaluate("p <-> q", {"p": "T", "q": "T"}, k3) is T
