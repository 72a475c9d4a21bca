"""The synthetic data sets and their on-disk bundle format."""
import tempfile
from collections import Counter
from pathlib import Path

import numpy as np

from latentode import data as D

spirals = D.gen_spirals(500, seed=1)
print("spirals", spirals.samples.shape, dict(Counter(spirals.labels.tolist())))

springs = D.split(D.subsample(D.gen_springs([1, 2, 3], 600, seed=0), 200), seed=0)
print("springs", springs.samples.shape, "held-out tail", springs.tail.shape)
print("split sizes", dict(Counter(springs.split.tolist())))
for kind in (1, 2, 3):
    amp = np.abs(springs.samples[springs.labels == str(kind), -1, 1]).mean()
    print(f"  Spring({kind}) mean |x| at the last observed step: {amp:.3f}")

solar = D.gen_synthetic_solar(68, seed=0)
print("synthetic solar", solar.samples.shape, "range",
      solar.samples[..., 1].min(), solar.samples[..., 1].max())

with tempfile.TemporaryDirectory() as tmp:
    D.save_bundle(springs, Path(tmp) / "springs")
    back = D.load_bundle(Path(tmp) / "springs")
    print("bundle round trip exact:", np.array_equal(back.samples, springs.samples))
