"""Published additive Chow-Witt bases for Gr(2,4) and Gr(3,6), both twists.

Transcribed once by hand from the literature table; the GW column lists
even tableaux and the Z column lists integral γ-images.  Each Z entry is a
dict shape -> coefficient.  Do not regenerate these from the library.
"""

from typing import Dict, List, Tuple

Shape = Tuple[int, ...]
Entry = Dict[Shape, int]


def _s(*shape) -> Shape:
    return tuple(shape)


REFERENCE: Dict[Tuple[int, int, bool], dict] = {
    (2, 4, False): {
        "gw": [_s(), _s(2, 2)],
        "z": [
            {_s(1): 2},
            {_s(2): 2},
            {_s(2, 1): 1},
            {_s(2): 1, _s(1, 1): 1},
        ],
    },
    (3, 6, False): {
        "gw": [_s(), _s(2, 2), _s(3, 1, 1), _s(3, 3, 3)],
        "z": [
            {_s(1): 2},
            {_s(2): 1, _s(1, 1): 1},
            {_s(2): 2},
            {_s(2, 1): 1},
            {_s(3): 2},
            {_s(3, 1): 1},
            {_s(1, 1, 1): 2},
            {_s(2, 1, 1): 1},
            {_s(3, 2): 2},
            {_s(3, 3): 1},
            {_s(2, 2, 1): 2},
            {_s(2, 2, 2): 1},
            {_s(3, 2, 1): 2},
            {_s(3, 3, 1): 2},
            {_s(3, 3, 1): 1, _s(3, 2, 2): 1},
            {_s(3, 3, 2): 1},
        ],
    },
    (2, 4, True): {
        "gw": [_s(2), _s(1, 1)],
        "z": [
            {_s(): 2},
            {_s(1): 1},
            {_s(2, 1): 2},
            {_s(2, 2): 1},
        ],
    },
    (3, 6, True): {
        "gw": [],
        "z": [
            {_s(): 2},
            {_s(1): 1},
            {_s(2): 2},
            {_s(3): 1},
            {_s(1, 1): 2},
            {_s(1, 1, 1): 1},
            {_s(2, 1): 2},
            {_s(3, 1): 2},
            {_s(2, 2): 2},
            {_s(3, 2): 2},
            {_s(3, 1): 1, _s(2, 2): 1, _s(2, 1, 1): 1},
            {_s(3, 2): 1, _s(3, 1, 1): 1},
            {_s(3, 2): 1, _s(2, 2, 1): 1},
            {_s(3, 2, 1): 1},
            {_s(3, 3): 2},
            {_s(3, 3, 1): 1},
            {_s(2, 2, 2): 2},
            {_s(3, 2, 2): 1},
            {_s(3, 3, 2): 2},
            {_s(3, 3, 3): 1},
        ],
    },
}
