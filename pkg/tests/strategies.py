from hypothesis import strategies as st

from braidbelts import BraidWord, Generator, TwistVector

doubled_entries = st.integers(min_value=-40, max_value=40)
twists = st.tuples(doubled_entries, doubled_entries, doubled_entries).map(TwistVector)
generators = st.builds(Generator, st.integers(1, 3), st.booleans())
words = st.lists(generators, max_size=12).map(lambda gs: BraidWord(tuple(gs)))
