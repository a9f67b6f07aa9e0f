"""
Three truth values, six logics
==============================

Same carrier {T, X, F} everywhere; the tables and the designated set decide
which classical laws survive.
"""

from zetalogic import builtin_logics, classify_laws, get_logic, parse, render, truth_table
from zetalogic.semantics import entailment_witness, tautology_witness

# formulas are plain text; the printer uses as few brackets as the grammar allows
f = parse("p -> q -> r")
print(render(f), "|", render(f, unicode=True))

# excluded middle: fine classically, fails in K3 when p has the middle value
k3 = get_logic("k3")
print(truth_table("p | !p", k3).to_text())
print("witness:", tautology_witness("p | !p", k3))

# LP reads X as "both" and designates it, so p | !p is valid again
lp = get_logic("lp")
print("LP tautology?", tautology_witness("p | !p", lp) is None)

# ... but explosion goes: from p and !p nothing in particular follows
print("LP countermodel to ECQ:", entailment_witness(["p", "!p"], "q", lp))

# Lukasiewicz differs from Kleene only in the conditional: X -> X is T
print(truth_table("p -> q", get_logic("l3")).to_text())

# Bochvar's middle value is infectious; assertion T: turns it into F
bochvar = get_logic("bochvar")
print(truth_table("p | T:q", bochvar).to_text())

# the whole law matrix in one loop
for logic in builtin_logics():
    print()
    print(classify_laws(logic).to_text())
