"""Small numerical helpers shared by the cross-checks."""

import numpy as np


def scaled_rel_err(x, y, envelope) -> float:
    """Max of ``|x - y| / max(|y|, envelope)`` over all entries.

    ``envelope`` is the natural magnitude of each entry (e.g. ``r**k``). Using it
    as a floor keeps entries that sit near a sine zero from reporting huge
    relative errors that are pure cancellation.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    denom = np.maximum(np.abs(y), np.broadcast_to(np.asarray(envelope, dtype=float), y.shape))
    if x.size == 0:
        return 0.0
    return float(np.max(np.abs(x - y) / denom))
