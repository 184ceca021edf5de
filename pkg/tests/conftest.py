import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def by_names(pot):
    """Potential -> {exponent: {sorted tuple of label names with repetition: coefficient}}."""
    out = {}
    for (m, c), a in pot.terms.items():
        names = tuple(sorted(lab for lab, e in zip(pot.labels, c) for _ in range(e)))
        out.setdefault(m, {})[names] = a
    return out


def sorted_names(d):
    return {m: {tuple(sorted(k)): v for k, v in cs.items()} for m, cs in d.items()}
