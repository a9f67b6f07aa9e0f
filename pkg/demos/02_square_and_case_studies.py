"""
Empty subjects and the square of opposition
===========================================

Universal claims are vacuously true on an empty subject, which breaks every
relation of the traditional square except contradiction.
"""

from zetalogic.square import (
    RH_LOGICS,
    FiniteModel,
    case_study_pnp,
    case_study_rh,
    parse_model,
    square_report,
    zeta_state,
)

# a nonempty subject: all four traditional relations hold
horses = FiniteModel(("a", "b", "c"), {"horse": {"a", "b"}, "brown": {"a"}})
print(square_report("horse", "brown", horses).to_text())

# an empty subject, written in the line format the CLI reads
unicorns = parse_model("""
domain: a, b
unicorn:
horned: a
""")
print(square_report("unicorn", "horned", unicorns).to_text())

# two problems, P inside NP, nothing outside NP
print()
print(case_study_pnp().to_text())

# state of zeta on Re(s) <= 1 under each combination of assumptions
print()
for ac in (True, False):
    for lnc in (True, False):
        row = zeta_state(ac, lnc)
        print(f"continuation={ac!s:<5} LNC={lnc!s:<5} -> {row['state']}")

# the verdict grid for the hypothesis itself
print()
print(f"{'':<22}" + "".join(f"{name:<24}" for name in RH_LOGICS))
for ac in (True, False):
    cells = [case_study_rh(ac, name).status.value for name in RH_LOGICS]
    label = "continuation accepted" if ac else "continuation rejected"
    print(f"{label:<22}" + "".join(f"{c:<24}" for c in cells))

# the conjunction reading turns "both vacuously true" into "both false"
print()
print(case_study_rh(False, "classical", reading="conjunction").to_text().splitlines()[2])
