"""Three-valued truth-functional logics: tables, evaluation, consequence.

All logics share one carrier ``{T, X, F}``.  What ``X`` *means* (gap, glut,
unknown, meaningless) is a per-logic gloss; what it *does* is fixed by the
connective tables and by which values are designated.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .formula import (
    And,
    Assert,
    Atom,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    atoms,
    parse,
    render,
)

__all__ = [
    "TruthValue",
    "LogicSystem",
    "SemanticError",
    "builtin_logics",
    "get_logic",
    "LOGIC_ALIASES",
    "evaluate",
    "truth_table",
    "TruthTable",
    "is_tautology",
    "tautology_witness",
    "entails",
    "entailment_witness",
    "classify_laws",
    "LawResult",
    "LawReport",
    "MAX_ATOMS",
]

MAX_ATOMS = 12


class TruthValue(enum.Enum):
    T = "T"
    X = "X"
    F = "F"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text: str) -> "TruthValue":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise SemanticError(f"unknown truth value {text!r}; use T, X or F") from None


T, X, F = TruthValue.T, TruthValue.X, TruthValue.F

# Fixed row/column order for every table and truth-table enumeration.
VALUE_ORDER = (T, X, F)


class SemanticError(ValueError):
    """Missing atom, value outside a logic's carrier, atom-count guard, unknown logic."""


@dataclass(frozen=True)
class LogicSystem:
    name: str
    values: tuple
    designated: frozenset
    tables: Mapping[str, Mapping]
    gap_semantics: bool = False
    gloss: str = ""

    def __post_init__(self):
        if not self.designated or not self.designated <= set(self.values):
            raise ValueError("designated values must be a nonempty subset of values")
        if T not in self.designated:
            raise ValueError("T must be designated")
        for op in ("not", "assert"):
            if set(self.tables[op]) != set(self.values):
                raise ValueError(f"{op} table is not total")
        for op in ("and", "or", "implies", "iff"):
            keys = set(self.tables[op])
            if keys != set(itertools.product(self.values, repeat=2)):
                raise ValueError(f"{op} table is not total")
        for op, table in self.tables.items():
            if not set(table.values()) <= set(self.values):
                raise ValueError(f"{op} table leaves the value set")

    def is_designated(self, v: TruthValue) -> bool:
        return v in self.designated

    def show(self, v: TruthValue) -> str:
        return v.value

    def describe(self, v: TruthValue) -> str:
        """Long reading of a value; in gap logics X is the absence of a value."""
        if v is X:
            return "no truth value" if self.gap_semantics else self.gloss.partition("= ")[2]
        return "true" if v is T else "false"

    def __repr__(self):
        return f"LogicSystem({self.name!r})"


def _binary(rows: str) -> dict:
    """Build a binary table from three rows written in T X F order.

    ``rows`` is e.g. ``"TXF XXF FFF"``: row = left operand, column = right.
    """
    out = {}
    for a, row in zip(VALUE_ORDER, rows.split()):
        for b, ch in zip(VALUE_ORDER, row):
            out[(a, b)] = TruthValue(ch)
    return out


def _unary(col: str) -> dict:
    return {a: TruthValue(ch) for a, ch in zip(VALUE_ORDER, col)}


def _restrict(table: dict, values) -> dict:
    if table and isinstance(next(iter(table)), tuple):
        return {k: v for k, v in table.items() if k[0] in values and k[1] in values}
    return {k: v for k, v in table.items() if k in values}


# Frege (gaps): any gap infects the compound; classical otherwise.
_FREGE = {
    "not": _unary("FXT"),
    "assert": _unary("TXF"),
    "and": _binary("TXF XXX FXF"),
    "or": _binary("TXT XXX TXF"),
    "implies": _binary("TXF XXX TXT"),
    "iff": _binary("TXF XXX FXT"),
}

# Kleene strong tables, including the printed biconditional (X <-> X = T).
_KLEENE = {
    "not": _unary("FXT"),
    "assert": _unary("TFF"),
    "and": _binary("TXF XXF FFF"),
    "or": _binary("TTT TXX TXF"),
    "implies": _binary("TXF TXX TTT"),
    "iff": _binary("TFF FTF FFT"),
}

# Bochvar internal: meaningless parts make the whole meaningless.
_BOCHVAR = {
    "not": _unary("FXT"),
    "assert": _unary("TFF"),
    "and": _binary("TXF XXX FXF"),
    "or": _binary("TXT XXX TXF"),
    "implies": _binary("TXF XXX TXT"),
    "iff": _binary("TXF XXX FXT"),
}

_LUKASIEWICZ_IMPLIES = _binary("TXF TTX TTT")


def _lukasiewicz_tables() -> dict:
    tables = dict(_KLEENE)
    imp = _LUKASIEWICZ_IMPLIES
    tables["implies"] = imp
    tables["iff"] = {
        (a, b): _KLEENE["and"][(imp[(a, b)], imp[(b, a)])] for a in VALUE_ORDER for b in VALUE_ORDER
    }
    return tables


_CLASSICAL = {
    "not": {T: F, F: T},
    "assert": {T: T, F: F},
    "and": _restrict(_KLEENE["and"], (T, F)),
    "or": _restrict(_KLEENE["or"], (T, F)),
    "implies": _restrict(_KLEENE["implies"], (T, F)),
    "iff": _restrict(_KLEENE["iff"], (T, F)),
}


def builtin_logics() -> list[LogicSystem]:
    """The six built-in systems, in a fixed order."""
    return [
        LogicSystem("Classical2", (T, F), frozenset({T}), _CLASSICAL, gloss="two-valued"),
        LogicSystem(
            "FregeGap", VALUE_ORDER, frozenset({T}), _FREGE, gap_semantics=True,
            gloss="X = no truth value (gap)",
        ),
        LogicSystem("KleeneK3", VALUE_ORDER, frozenset({T}), _KLEENE, gloss="X = unknown"),
        LogicSystem("PriestLP", VALUE_ORDER, frozenset({T, X}), _KLEENE, gloss="X = both (glut)"),
        LogicSystem(
            "Lukasiewicz3", VALUE_ORDER, frozenset({T}), _lukasiewicz_tables(),
            gloss="X = possible / undetermined",
        ),
        LogicSystem("BochvarInternal", VALUE_ORDER, frozenset({T}), _BOCHVAR, gloss="X = meaningless"),
    ]


LOGIC_ALIASES = {
    "classical": "Classical2",
    "classical2": "Classical2",
    "frege": "FregeGap",
    "fregegap": "FregeGap",
    "k3": "KleeneK3",
    "kleene": "KleeneK3",
    "kleenek3": "KleeneK3",
    "lp": "PriestLP",
    "priest": "PriestLP",
    "priestlp": "PriestLP",
    "l3": "Lukasiewicz3",
    "lukasiewicz": "Lukasiewicz3",
    "lukasiewicz3": "Lukasiewicz3",
    "bochvar": "BochvarInternal",
    "bochvarinternal": "BochvarInternal",
}


def get_logic(name: str) -> LogicSystem:
    """Look up a builtin logic by canonical name or short alias (case-insensitive)."""
    canonical = LOGIC_ALIASES.get(name.lower())
    for logic in builtin_logics():
        if logic.name == canonical:
            return logic
    names = ", ".join(lg.name for lg in builtin_logics())
    raise SemanticError(f"unknown logic {name!r}; builtin logics: {names}")


# ---------------------------------------------------------------------------
# Evaluation


def _as_formula(f) -> Formula:
    return parse(f) if isinstance(f, str) else f


def _normalize_valuation(v: Mapping) -> dict[str, TruthValue]:
    out = {}
    for key, val in v.items():
        name = key.name if isinstance(key, Atom) else key
        if not isinstance(val, TruthValue):
            val = TruthValue.parse(str(val))
        out[name] = val
    return out


_BINARY_OPS = {And: "and", Or: "or", Implies: "implies", Iff: "iff"}


def evaluate(f: Formula | str, valuation: Mapping, logic: LogicSystem) -> TruthValue:
    """Evaluate ``f`` bottom-up by table lookup.

    ``valuation`` maps atoms (or atom names) to truth values and must cover
    every atom in ``f``.
    """
    f = _as_formula(f)
    v = _normalize_valuation(valuation)
    for name, val in v.items():
        if val not in logic.values:
            raise SemanticError(f"value {val} for atom {name!r} is outside {logic.name}")
    return _eval(f, v, logic)


def _eval(f: Formula, v: dict, logic: LogicSystem) -> TruthValue:
    cls = type(f)
    if cls is Atom:
        try:
            return v[f.name]
        except KeyError:
            raise SemanticError(f"no value assigned to atom {f.name!r}") from None
    if cls is Not:
        return logic.tables["not"][_eval(f.arg, v, logic)]
    if cls is Assert:
        return logic.tables["assert"][_eval(f.arg, v, logic)]
    op = _BINARY_OPS[cls]
    return logic.tables[op][(_eval(f.left, v, logic), _eval(f.right, v, logic))]


def _valuations(names: Sequence[str], logic: LogicSystem):
    if len(names) > MAX_ATOMS:
        raise SemanticError(f"{len(names)} atoms exceeds the limit of {MAX_ATOMS}")
    order = [val for val in VALUE_ORDER if val in logic.values]
    for combo in itertools.product(order, repeat=len(names)):
        yield dict(zip(names, combo))


def _joint_atoms(formulas: Iterable[Formula]) -> list[str]:
    names: dict[str, None] = {}
    for f in formulas:
        for a in atoms(f):
            names.setdefault(a.name, None)
    return list(names)


@dataclass(frozen=True)
class TruthTable:
    formula: Formula
    logic: LogicSystem
    atom_names: tuple
    rows: tuple  # of (tuple of values, result value)

    @property
    def designated_ok(self) -> bool:
        return all(self.logic.is_designated(r) for _, r in self.rows)

    def to_dict(self) -> dict:
        return {
            "formula": render(self.formula),
            "logic": self.logic.name,
            "atoms": list(self.atom_names),
            "rows": [
                {
                    "assignment": {a: self.logic.show(val) for a, val in zip(self.atom_names, vals)},
                    "value": self.logic.show(res),
                    "designated": self.logic.is_designated(res),
                }
                for vals, res in self.rows
            ],
            "designated_ok": self.designated_ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    def to_text(self) -> str:
        head = list(self.atom_names) + [render(self.formula)]
        body = [
            [self.logic.show(v) for v in vals] + [self.logic.show(res) + ("*" if self.logic.is_designated(res) else "")]
            for vals, res in self.rows
        ]
        widths = [max(len(r[i]) for r in [head] + body) for i in range(len(head))]
        fmt = lambda row: "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
        lines = [f"# {self.logic.name}: {self.logic.gloss}; * = designated", fmt(head)]
        lines.append("  ".join("-" * w for w in widths))
        lines.extend(fmt(r) for r in body)
        return "\n".join(lines)


def truth_table(f: Formula | str, logic: LogicSystem) -> TruthTable:
    """All valuations of ``f``'s atoms, values ordered T < X < F, first atom slowest."""
    f = _as_formula(f)
    names = [a.name for a in atoms(f)]
    rows = tuple(
        (tuple(v[n] for n in names), _eval(f, v, logic)) for v in _valuations(names, logic)
    )
    return TruthTable(f, logic, tuple(names), rows)


def tautology_witness(f: Formula | str, logic: LogicSystem) -> dict | None:
    """First valuation (in table order) giving an undesignated value, or None."""
    f = _as_formula(f)
    for v in _valuations([a.name for a in atoms(f)], logic):
        if not logic.is_designated(_eval(f, v, logic)):
            return v
    return None


def is_tautology(f: Formula | str, logic: LogicSystem) -> bool:
    return tautology_witness(f, logic) is None


def entailment_witness(premises: Sequence, conclusion, logic: LogicSystem) -> dict | None:
    """First valuation designating every premise but not the conclusion, or None."""
    prem = [_as_formula(p) for p in premises]
    concl = _as_formula(conclusion)
    names = _joint_atoms(prem + [concl])
    for v in _valuations(names, logic):
        if all(logic.is_designated(_eval(p, v, logic)) for p in prem) and not logic.is_designated(
            _eval(concl, v, logic)
        ):
            return v
    return None


def entails(premises: Sequence, conclusion, logic: LogicSystem) -> bool:
    """Designated-value consequence: every valuation designating all premises designates the conclusion."""
    return entailment_witness(premises, conclusion, logic) is None


# ---------------------------------------------------------------------------
# Law report

_LAWS = [
    ("LOI", "p <-> p", None),
    ("LEM", "p | !p", None),
    ("LNC", "!(p & !p)", None),
    ("DoubleNegation", "!!p <-> p", None),
    ("ECQ", "q", ("p", "!p")),
    ("DeMorganAnd", "!(p & q) <-> !p | !q", None),
    ("DeMorganOr", "!(p | q) <-> !p & !q", None),
]


@dataclass(frozen=True)
class LawResult:
    name: str
    statement: str
    holds: bool
    witness: dict | None = None

    def witness_text(self, logic: LogicSystem) -> str:
        if not self.witness:
            return ""
        return ", ".join(f"{k}={logic.show(v)}" for k, v in self.witness.items())


@dataclass(frozen=True)
class LawReport:
    logic: LogicSystem
    results: tuple = field(default_factory=tuple)

    def __getitem__(self, name: str) -> LawResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "logic": self.logic.name,
            "designated": [v.value for v in VALUE_ORDER if v in self.logic.designated],
            "laws": [
                {
                    "law": r.name,
                    "statement": r.statement,
                    "status": "holds" if r.holds else "fails",
                    "witness": None if r.witness is None
                    else {k: self.logic.show(v) for k, v in r.witness.items()},
                }
                for r in self.results
            ],
        }

    def to_text(self) -> str:
        lines = [f"# {self.logic.name}: {self.logic.gloss}"]
        cells = []
        for r in self.results:
            status = "holds" if r.holds else f"fails (witness {r.witness_text(self.logic)})"
            cells.append((f"{r.name}: {status}", r.statement))
        width = max(len(c) for c, _ in cells)
        lines.extend(f"{c.ljust(width)}  [{stmt}]" for c, stmt in cells)
        return "\n".join(lines)


def classify_laws(logic: LogicSystem) -> LawReport:
    """Check the classical laws (LOI, LEM, LNC, DN, ECQ, De Morgan) in ``logic``."""
    results = []
    for name, text, premises in _LAWS:
        if premises is None:
            witness = tautology_witness(text, logic)
            statement = text
        else:
            witness = entailment_witness(premises, text, logic)
            statement = f"{', '.join(premises)} |= {text}"
        results.append(LawResult(name, statement, witness is None, witness))
    return LawReport(logic, tuple(results))
