"""Hypothesis strategies shared across test modules."""

from hypothesis import strategies as st

from zetalogic.formula import And, Assert, Atom, Iff, Implies, Not, Or

ATOM_NAMES = ("p", "q", "r", "s1", "long_name")

atoms_st = st.sampled_from(ATOM_NAMES).map(Atom)


def formulas(names=ATOM_NAMES, max_leaves: int = 12, assert_ok: bool = True, iff_ok: bool = True):
    leaf = st.sampled_from(names).map(Atom)

    def extend(children):
        unary = [st.builds(Not, children)]
        if assert_ok:
            unary.append(st.builds(Assert, children))
        ops = (And, Or, Implies, Iff) if iff_ok else (And, Or, Implies)
        binary = [st.builds(op, children, children) for op in ops]
        return st.one_of(*unary, *binary)

    return st.recursive(leaf, extend, max_leaves=max_leaves)
