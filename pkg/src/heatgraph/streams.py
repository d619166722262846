"""Deterministic random-number streams.

All randomness in the package flows through PCG64 generators keyed by
``numpy.random.SeedSequence`` tuples.  The algorithm identity is pinned
here on purpose: a dataset or bootstrap produced from a given seed must
be reproducible bit for bit across platforms and worker counts, so no
call site may construct a generator any other way.

Stream layout:

* ``derive_rng(seed, i)``        pair ``i`` of a sampled dataset
* ``derive_rng(seed, b)``        bootstrap replicate ``b``
* ``derive_seed(master, role, rep)``  integer subseed handed to a
  dataset or bootstrap inside an experiment repetition, so the two
  kinds of stream can never collide.
"""

from __future__ import annotations

import numpy as np


def derive_rng(*key: int) -> np.random.Generator:
    """Return a PCG64 generator for the given integer key tuple."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(key)))


def derive_seed(*key: int) -> int:
    """Collapse a key tuple to a single integer subseed."""
    return int(np.random.SeedSequence(key).generate_state(1, dtype=np.uint64)[0])
