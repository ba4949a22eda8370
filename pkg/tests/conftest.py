from fractions import Fraction

from hypothesis import strategies as st

from modulislope.picard import Space, basis, make_class

small_ints = st.integers(min_value=-50, max_value=50)
rationals = st.builds(
    Fraction, st.integers(min_value=-200, max_value=200), st.integers(min_value=1, max_value=40)
)
positive_rationals = st.builds(
    Fraction, st.integers(min_value=1, max_value=200), st.integers(min_value=1, max_value=40)
)


@st.composite
def classes(draw, space=Space.UNPOINTED, genus=None, min_genus=2, max_genus=12):
    g = genus if genus is not None else draw(st.integers(min_genus, max_genus))
    names = basis(space, g)
    coeffs = {name: draw(rationals) for name in names}
    return make_class(space, g, coeffs)


@st.composite
def effective_looking(draw, genus=None, min_genus=2, max_genus=12):
    """Full class on Mg with a >= 0 and every b_i > 0."""
    g = genus if genus is not None else draw(st.integers(min_genus, max_genus))
    coeffs = {"lambda": draw(positive_rationals)}
    for i in range(g // 2 + 1):
        coeffs[f"delta{i}"] = -draw(positive_rationals)
    return make_class(Space.UNPOINTED, g, coeffs)
