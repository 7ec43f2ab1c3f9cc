"""
Published extremal data: constants, witness factors and coefficient tables.

Values are typeset to 7 decimals; witness factors are used as solver
starts and as reference points, never as results.
"""

import numpy as np


PUBLISHED_CONSTANTS = {
    2: 53.1390720,
    3: 36.9199911,
    4: 34.8992259,
    5: 34.8992259,
    6: 34.8992259,
    7: 34.6494874,
    8: 34.5399155,
}

V2_ALPHA = 0.7415574
V3_ALPHA = 0.4384345

# degree 4 witness, reused (zero padded) in degrees 5 and 6
FACTOR_V4 = (0.2114174, 0.5028451, 0.6363167, 0.5028451, 0.2114174)
COEFFS_V4 = (1.0, 1.7051159, 1.0438202, 0.4252409, 0.0893946)
CHI_V4 = 3.2635716

# the degree 7 factor is off the unit sphere by about 1%; start vector only
FACTOR_V7 = (0.1685903, 0.4506317, 0.6267577, 0.5454191, 0.2756348, 0.0361770, -0.0282171, 0.1055656)
COEFFS_V7 = (1.0, 1.7185098, 1.0731034, 0.4527292, 0.1016950, 0.0, 0.0, 0.0035595)

FACTOR_V8 = (
    0.1246536, 0.3805581, 0.5968565, 0.5888198, 0.3562317,
    0.0912429, -0.0315349, -0.0146819, 0.0159473,
)
COEFFS_V8 = (1.0, 1.7312576, 1.1034980, 0.4821616, 0.1146858, 0.0, 0.0, 0.0084774, 0.0039758)

# degree 5 starts by a-range, [lo, hi) -> factor
RANGE_STARTS_V5 = (
    (1.6456, 1.68, (0.2813599288, 0.5616322755, 0.6297662332, 0.4344555262, 0.1227731004, -0.0705778044)),
    (1.68, 1.72, (-0.0201966983, 0.1955685973, 0.4848202185, 0.6297457947, 0.5212134113, 0.2409501665)),
    (1.72, 1.76, (-0.1711276227, -0.4436859255, -0.6124330758, -0.5502991243, -0.3040722037, -0.0591661108)),
    (1.76, 1.81, (-0.1579917997, -0.3946171069, -0.5650843883, -0.5650843821, -0.3946170930, -0.1579917886)),
)


def resize(vector, size: int) -> np.ndarray:
    """Zero-pad or truncate a vector to the given length."""
    out = np.zeros(size)
    v = np.asarray(vector, dtype=float)[:size]
    out[: v.size] = v
    return out


def normalized(vector) -> np.ndarray:
    v = np.asarray(vector, dtype=float)
    return v / np.linalg.norm(v)


def published_starts(n: int, a: float) -> list[np.ndarray]:
    """Deterministic start vectors of length n + 1 for a reduced problem at a."""
    size = n + 1
    starts = []
    for lo, hi, factor in RANGE_STARTS_V5:
        if lo <= a < hi:
            starts.append(resize(factor, size))
    starts.append(resize(FACTOR_V4, size))
    if n == 7:
        starts.append(normalized(FACTOR_V7))
    elif n == 8:
        starts.append(normalized(FACTOR_V8))
    return [normalized(s) for s in starts if np.linalg.norm(s) > 0]
