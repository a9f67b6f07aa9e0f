"""Categorical A/E/I/O propositions over finite models, and the two case studies.

Truth is always the modern (Boolean) reading: universal forms are vacuously
true on an empty subject.  The traditional square's relations (contraries,
subcontraries, subalternation) are then *checked* rather than assumed.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Mapping

from .semantics import LawReport, classify_laws, get_logic
from .zeta.series import Status, dirichlet_status, em_status

__all__ = [
    "FiniteModel",
    "CategoricalProposition",
    "ModelError",
    "eval_categorical",
    "square_report",
    "SquareVerdict",
    "parse_model",
    "load_model",
    "PnpResult",
    "case_study_pnp",
    "CaseStatus",
    "CaseVerdict",
    "case_study_rh",
    "RH_LOGICS",
    "zeta_state",
    "PNP_MODEL",
]

FORMS = ("A", "E", "I", "O")


class ModelError(ValueError):
    """Malformed model text, or a predicate missing from the model."""


@dataclass(frozen=True)
class FiniteModel:
    domain: tuple
    predicates: Mapping[str, frozenset]

    def __post_init__(self):
        if len(set(self.domain)) != len(self.domain):
            raise ModelError("domain element names must be unique")
        dom = set(self.domain)
        fixed = {}
        for name, ext in self.predicates.items():
            ext = frozenset(ext)
            extra = ext - dom
            if extra:
                raise ModelError(f"predicate {name!r} mentions elements outside the domain: {sorted(extra)}")
            fixed[name] = ext
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "predicates", fixed)

    def extension(self, name: str) -> frozenset:
        try:
            return self.predicates[name]
        except KeyError:
            raise ModelError(f"unknown predicate {name!r}; model has {sorted(self.predicates)}") from None

    def with_complement(self, name: str, new_name: str | None = None) -> "FiniteModel":
        """Add the complement of ``name`` relative to the domain (default name ``not_<name>``)."""
        ext = self.extension(name)
        preds = dict(self.predicates)
        preds[new_name or f"not_{name}"] = frozenset(self.domain) - ext
        return FiniteModel(self.domain, preds)

    def to_text(self) -> str:
        lines = [f"domain: {','.join(self.domain)}"]
        for name, ext in self.predicates.items():
            lines.append(f"{name}: {','.join(e for e in self.domain if e in ext)}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CategoricalProposition:
    form: str
    subject: str
    predicate: str

    def __post_init__(self):
        if self.form not in FORMS:
            raise ValueError(f"form must be one of {FORMS}")

    def __str__(self):
        s, p = self.subject, self.predicate
        return {
            "A": f"All {s} are {p}",
            "E": f"No {s} are {p}",
            "I": f"Some {s} are {p}",
            "O": f"Some {s} are not {p}",
        }[self.form]


def eval_categorical(prop: CategoricalProposition, model: FiniteModel) -> bool:
    subj = model.extension(prop.subject)
    pred = model.extension(prop.predicate)
    if prop.form == "A":
        return subj <= pred
    if prop.form == "E":
        return not (subj & pred)
    if prop.form == "I":
        return bool(subj & pred)
    return bool(subj - pred)


# ---------------------------------------------------------------------------
# Square report


@dataclass(frozen=True)
class SquareVerdict:
    subject: str
    predicate: str
    truth: Mapping[str, bool]
    vacuous_subject: bool
    relations: Mapping[str, str]
    paradox_flag: bool

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "predicate": self.predicate,
            "truth": dict(self.truth),
            "vacuous_subject": self.vacuous_subject,
            "relations": dict(self.relations),
            "paradox_flag": self.paradox_flag,
        }

    def to_text(self) -> str:
        lines = [f"square for subject={self.subject} predicate={self.predicate}"]
        for form in FORMS:
            prop = CategoricalProposition(form, self.subject, self.predicate)
            lines.append(f"  {form}  {str(prop):<40} {str(self.truth[form]).lower()}")
        lines.append(f"  vacuous_subject = {str(self.vacuous_subject).lower()}")
        for rel, status in self.relations.items():
            lines.append(f"  {rel:<15} {status}")
        lines.append(f"  paradox_flag = {str(self.paradox_flag).lower()}")
        return "\n".join(lines)


def square_report(subject: str, predicate: str, model: FiniteModel) -> SquareVerdict:
    """All four forms plus a check of each traditional relation."""
    truth = {f: eval_categorical(CategoricalProposition(f, subject, predicate), model) for f in FORMS}
    a, e, i, o = (truth[f] for f in FORMS)
    vacuous = not model.extension(subject)

    def status(ok: bool) -> str:
        return "holds" if ok else "fails"

    relations = {
        "contradictories": status(a != o and e != i),
        "contraries": status(not (a and e)),
        "subcontraries": status(i or o),
        "subalternation": status((not a or i) and (not e or o)),
    }
    return SquareVerdict(subject, predicate, truth, vacuous, relations, vacuous and a and e)


# ---------------------------------------------------------------------------
# Model files


def parse_model(text: str) -> FiniteModel:
    """Read ``domain: a,b,c`` plus one ``predicate: x,y`` line per predicate.

    Blank lines and ``#`` comments are ignored; an empty right-hand side is an
    empty extension.
    """
    domain = None
    preds: dict[str, frozenset] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, rest = line.partition(":")
        name = name.strip()
        if not sep or not name:
            raise ModelError(f"line {lineno}: expected 'name: e1,e2,...'")
        items = [x.strip() for x in rest.split(",") if x.strip()]
        if name == "domain":
            if domain is not None:
                raise ModelError(f"line {lineno}: domain given twice")
            domain = items
        else:
            if name in preds:
                raise ModelError(f"line {lineno}: predicate {name!r} given twice")
            preds[name] = frozenset(items)
    if domain is None:
        raise ModelError("model has no 'domain:' line")
    return FiniteModel(tuple(domain), preds)


def load_model(path) -> FiniteModel:
    with open(path, encoding="utf-8") as fh:
        return parse_model(fh.read())


# ---------------------------------------------------------------------------
# P vs NP

PNP_MODEL = FiniteModel(
    ("CVP", "TSP"),
    {
        "P": frozenset({"CVP"}),
        "NP": frozenset({"CVP", "TSP"}),
        "not_P": frozenset({"TSP"}),
        "not_NP": frozenset(),
    },
)

# proposition index -> (subject, predicate); O_3 "Some not-P is NP" is the O form
# of "not-P / not-NP" and O_4 "Some not-NP is P" the O form of "not-NP / not-P".
_PNP_SQUARES = {
    1: ("P", "NP"),
    2: ("NP", "P"),
    3: ("not_P", "not_NP"),
    4: ("not_NP", "not_P"),
}


@dataclass(frozen=True)
class PnpResult:
    verdicts: tuple  # (proposition id, bool)
    squares: Mapping[int, SquareVerdict]
    paradoxes: tuple  # proposition-id pairs flagged as paradox
    conclusion: str

    def verdict(self, pid: str) -> bool:
        return dict(self.verdicts)[pid]

    def to_dict(self) -> dict:
        return {
            "model": {"domain": list(PNP_MODEL.domain),
                      "predicates": {k: sorted(v) for k, v in PNP_MODEL.predicates.items()}},
            "verdicts": {pid: v for pid, v in self.verdicts},
            "paradoxes": [list(p) for p in self.paradoxes],
            "squares": {str(k): sq.to_dict() for k, sq in self.squares.items()},
            "conclusion": self.conclusion,
        }

    def to_text(self) -> str:
        lines = ["P vs NP on the built-in model (domain CVP, TSP; P = {CVP}; NP = {CVP, TSP})"]
        for k, sq in self.squares.items():
            cells = "  ".join(f"{f}{k}={str(sq.truth[f]).lower()}" for f in FORMS)
            lines.append(f"  square {k} ({sq.subject} / {sq.predicate}): {cells}")
        for a, b in self.paradoxes:
            lines.append(f"  paradox: {a} and {b} are both true (vacuous subject)")
        lines.append(self.conclusion)
        return "\n".join(lines)


def case_study_pnp() -> PnpResult:
    """Evaluate the four squares A1..O4 on the built-in two-problem model.

    Equality needs both A1 and A2, or both A3 and A4, to be exclusively true;
    A2 is false and A3 is false while A4 pairs with E4 as a paradox.
    """
    squares = {k: square_report(subj, pred, PNP_MODEL) for k, (subj, pred) in _PNP_SQUARES.items()}
    verdicts = tuple((f"{f}{k}", sq.truth[f]) for k, sq in squares.items() for f in FORMS)
    paradoxes = tuple((f"A{k}", f"E{k}") for k, sq in squares.items() if sq.paradox_flag)
    paradox_ids = {x for pair in paradoxes for x in pair}

    def exclusively_true(pid: str) -> bool:
        return dict(verdicts)[pid] and pid not in paradox_ids

    equal = (exclusively_true("A1") and exclusively_true("A2")) or (
        exclusively_true("A3") and exclusively_true("A4")
    )
    conclusion = "P = NP under the paper's premises" if equal else "P != NP under the paper's premises"
    return PnpResult(verdicts, squares, paradoxes, conclusion)


# ---------------------------------------------------------------------------
# Riemann hypothesis


class CaseStatus(str, enum.Enum):
    TRUE = "true"
    FALSE = "false"
    PARADOX = "paradox"
    THIRD_VALUE = "third-value"
    NO_VALUE = "no-value"
    TRIVIALLY_TRUE_BY_ECQ = "trivially-true-by-ECQ"

    def __str__(self):
        return self.value


RH_LOGICS = ("classical", "intuitionistic", "lp", "bochvar")

# zeros / on-line predicates; the model has no zeros when continuation is rejected
_NO_ZEROS = FiniteModel(("s0",), {"zero": frozenset(), "on_line": frozenset(), "off_line": frozenset({"s0"})})


@dataclass(frozen=True)
class CaseVerdict:
    ac_true: bool
    logic: str
    status: CaseStatus
    justification: str
    reading: str = "conditional"
    square: SquareVerdict | None = None
    laws: LawReport | None = None
    extra: Mapping[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "analytic_continuation": self.ac_true,
            "logic": self.logic,
            "reading": self.reading,
            "status": self.status.value,
            "justification": self.justification,
            "square": None if self.square is None else self.square.to_dict(),
            "laws": None if self.laws is None else self.laws.to_dict(),
            "extra": dict(self.extra),
        }

    def to_text(self) -> str:
        lines = [
            f"RH under {self.logic} logic, analytic continuation "
            f"{'accepted' if self.ac_true else 'rejected'} ({self.reading} reading)",
            f"verdict: {self.status.value}",
            f"because: {self.justification}",
        ]
        if self.square is not None:
            lines.append(self.square.to_text())
        if self.extra:
            lines.extend(f"  {k} = {str(v).lower()}" for k, v in self.extra.items())
        if self.laws is not None:
            lines.append(self.laws.to_text())
        return "\n".join(lines)


_RH_LAW_LOGIC = {"classical": "classical", "lp": "lp", "bochvar": "bochvar"}


def case_study_rh(ac_of_zeta_true: bool, logic_name: str, reading: str = "conditional") -> CaseVerdict:
    """One cell of the RH truth table, with the evidence that produces it.

    ``reading="conjunction"`` restates RH as "zeta has zeros and all zeros
    are on the line" (and its rival with "not all"); both are then false
    when there are no zeros, instead of both true.
    """
    logic = logic_name.lower()
    if logic not in RH_LOGICS:
        raise ValueError(f"unknown logic {logic_name!r}; choose from {', '.join(RH_LOGICS)}")
    if reading not in ("conditional", "conjunction"):
        raise ValueError("reading must be 'conditional' or 'conjunction'")
    laws = classify_laws(get_logic(_RH_LAW_LOGIC[logic])) if logic in _RH_LAW_LOGIC else None

    if ac_of_zeta_true:
        # zeta is both convergent and divergent on Re(s) <= 1: an LNC violation
        if logic in ("classical", "intuitionistic"):
            return CaseVerdict(
                True, logic, CaseStatus.TRIVIALLY_TRUE_BY_ECQ,
                "zeta(s) is a paradox on Re(s) <= 1; with LNC and ECQ every proposition follows",
                reading, laws=laws,
            )
        return CaseVerdict(
            True, logic, CaseStatus.THIRD_VALUE,
            "the paradox of zeta(s) receives the third truth value; ECQ is not triggered",
            reading, laws=laws,
        )

    square = square_report("zero", "on_line", _NO_ZEROS)
    extra: dict[str, bool] = {}
    if reading == "conjunction":
        has_zeros = bool(_NO_ZEROS.extension("zero"))
        extra = {"RH_conjunction": has_zeros and square.truth["A"],
                 "antiRH_conjunction": has_zeros and not square.truth["A"]}
    if logic == "classical":
        if reading == "conditional":
            why = "no zeros: RH (A) and anti-RH (E) are both vacuously true, violating LNC and triggering ECQ"
        else:
            why = "no zeros: RH and its negation restated as conjunctions are both false, violating LEM"
        return CaseVerdict(False, logic, CaseStatus.PARADOX, why, reading, square, laws, extra)
    if logic == "intuitionistic":
        return CaseVerdict(
            False, logic, CaseStatus.FALSE,
            "no zeros can be constructed, so the universal claim about them is false",
            reading, square, None, extra,
        )
    return CaseVerdict(
        False, logic, CaseStatus.THIRD_VALUE,
        "no zeros: RH and anti-RH are both vacuously true; the paradox takes the third value",
        reading, square, laws, extra,
    )


# ---------------------------------------------------------------------------
# State table of zeta on Re(s) <= 1


def zeta_state(ac_true: bool, lnc_true: bool, probe: complex = complex(0.5, 14.0)) -> dict:
    """State of zeta at a probe point of ``Re(s) <= 1``.

    The Dirichlet series diverges there; when the continuation is accepted the
    Euler-Maclaurin route converges at the same point, so zeta is both.
    """
    if probe.real > 1:
        raise ValueError("probe must lie in Re(s) <= 1")
    dirichlet = dirichlet_status(probe)
    continued = em_status(probe, 10) if ac_true else None
    divergent = dirichlet is not Status.CONVERGED
    convergent = continued is Status.CONVERGED
    if divergent and convergent:
        state = "Divergent & Convergent (Paradox)"
        note = ("violates LNC; in logics with ECQ this triggers ECQ" if lnc_true
                else "some many-valued logics assign the paradox a third truth value")
    else:
        state = "Divergent"
        note = "defined by the Dirichlet series alone: no zeros and no poles"
    return {
        "analytic_continuation": ac_true,
        "lnc": lnc_true,
        "probe": [probe.real, probe.imag],
        "dirichlet_status": dirichlet.value,
        "continued_status": None if continued is None else continued.value,
        "state": state,
        "note": note,
    }


def rh_truth_table(reading: str = "conditional") -> dict:
    """All six cells keyed by (zeta state, logic class)."""
    return {
        ("paradox", "classical"): case_study_rh(True, "classical", reading).status,
        ("paradox", "intuitionistic"): case_study_rh(True, "intuitionistic", reading).status,
        ("paradox", "3vl"): case_study_rh(True, "lp", reading).status,
        ("dirichlet", "classical"): case_study_rh(False, "classical", reading).status,
        ("dirichlet", "intuitionistic"): case_study_rh(False, "intuitionistic", reading).status,
        ("dirichlet", "3vl"): case_study_rh(False, "lp", reading).status,
    }


def dumps(obj) -> str:
    return json.dumps(obj.to_dict() if hasattr(obj, "to_dict") else obj, ensure_ascii=False)
