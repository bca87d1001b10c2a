import sys
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))


def cover_pairs_by_scan(elements, le):
    """Quadratic-scan cover oracle: b covers a iff a < b with nothing between.

    Deliberately independent of the constructive cover generation; only
    usable on small posets.
    """
    pairs = []
    strictly_less = {
        (a, b) for a in elements for b in elements if a != b and le(a, b)
    }
    for a, b in strictly_less:
        if not any(
            (a, c) in strictly_less and (c, b) in strictly_less for c in elements
        ):
            pairs.append((a, b))
    return sorted(pairs)
